// Session state machine for the explorer.
//
// The server is the single source of truth for move legality: columns are
// interactive exactly when the analysis lists a legal move there, and every
// mutation round-trips through /move (undo and redo included).  Responses
// carry a sequence number; anything stale is dropped.

import {
  Analysis,
  Client,
  Move,
  PathResponse,
  Problem,
  ServiceError,
  sameProblem,
} from "./api.js";

export interface HistoryEntry {
  move: Move;
  before: Problem;
}

export interface Overlay {
  goal: string;
  moves: Move[];
  step: number; // moves applied so far
  end: Problem;
}

export type Listener = () => void;

export class Session {
  analysis: Analysis | null = null;
  undoStack: HistoryEntry[] = [];
  redoStack: HistoryEntry[] = [];
  pendingColumn: number | null = null;
  overlay: Overlay | null = null;
  message: string | null = null;
  busy = false;

  private seq = 0;
  private listeners: Listener[] = [];

  constructor(private client: Client) {}

  onChange(fn: Listener): void {
    this.listeners.push(fn);
  }

  private notify(): void {
    for (const fn of this.listeners) fn();
  }

  private nextSeq(): number {
    return ++this.seq;
  }

  private isCurrent(seq: number): boolean {
    return seq === this.seq;
  }

  get problem(): Problem | null {
    return this.analysis?.problem ?? null;
  }

  /** Columns with exactly one descending argument, per the server. */
  interactiveColumns(): Set<number> {
    return new Set((this.analysis?.legal_moves ?? []).map((m) => m.col));
  }

  /** The argument holding the descent at an interactive column. */
  sourceAt(col: number): number | null {
    const m = (this.analysis?.legal_moves ?? []).find((m) => m.col === col);
    return m ? m.from : null;
  }

  async load(problem: Problem | { u: string; v: string; w: string }): Promise<void> {
    const seq = this.nextSeq();
    this.busy = true;
    this.message = null;
    this.notify();
    try {
      const analysis = await this.client.analyze(problem);
      if (!this.isCurrent(seq)) return;
      this.analysis = analysis;
      this.undoStack = [];
      this.redoStack = [];
      this.pendingColumn = null;
      this.overlay = null;
      if (!analysis.vertex) {
        this.message = "lengths do not sum to n(n-1)/2: not a problem vertex";
      }
    } catch (e) {
      if (!this.isCurrent(seq)) return;
      this.message = e instanceof Error ? e.message : String(e);
    } finally {
      if (this.isCurrent(seq)) {
        this.busy = false;
        this.notify();
      }
    }
  }

  /** Pick a column; locked columns explain themselves without a request. */
  selectColumn(col: number): void {
    if (!this.analysis) return;
    if (!this.interactiveColumns().has(col)) {
      const descending = this.analysis.descents.filter((d) =>
        d.includes(col),
      ).length;
      this.message =
        descending === 0
          ? `column ${col} has no descent to move`
          : `column ${col} is locked: ${descending} rows descend there`;
      this.pendingColumn = null;
      this.notify();
      return;
    }
    this.pendingColumn = this.pendingColumn === col ? null : col;
    this.message = null;
    this.notify();
  }

  async moveTo(target: number): Promise<void> {
    if (!this.analysis || this.pendingColumn === null) return;
    const col = this.pendingColumn;
    const src = this.sourceAt(col);
    if (src === null || src === target) return;
    await this.applyMove({ col, from: src, to: target }, "user");
  }

  private async applyMove(
    move: Move,
    origin: "user" | "undo" | "redo" | "overlay",
  ): Promise<void> {
    if (!this.analysis) return;
    const before = this.analysis.problem;
    const seq = this.nextSeq();
    this.busy = true;
    this.notify();
    try {
      const res = await this.client.move(before, move);
      if (!this.isCurrent(seq)) return;
      this.analysis = res.analysis;
      this.pendingColumn = null;
      this.message = null;
      if (origin === "undo") {
        this.redoStack.push({ move: reverse(move), before: res.problem });
      } else {
        if (origin === "user" || origin === "overlay") this.redoStack = [];
        this.undoStack.push({ move, before });
      }
      if (origin !== "overlay") this.overlay = null;
    } catch (e) {
      if (!this.isCurrent(seq)) return;
      if (e instanceof ServiceError && e.status === 422) {
        this.message = `illegal move: ${e.message}`;
      } else {
        this.message = e instanceof Error ? e.message : String(e);
      }
    } finally {
      if (this.isCurrent(seq)) {
        this.busy = false;
        this.notify();
      }
    }
  }

  async undo(): Promise<void> {
    const entry = this.undoStack.pop();
    if (!entry) return;
    await this.applyMove(reverse(entry.move), "undo");
  }

  async redo(): Promise<void> {
    const entry = this.redoStack.pop();
    if (!entry) return;
    await this.applyMove(entry.move, "redo");
  }

  async autoSolve(goal: "easy" | "trivial"): Promise<void> {
    if (!this.analysis) return;
    const problem = this.analysis.problem;
    const seq = this.nextSeq();
    this.busy = true;
    this.notify();
    let res: PathResponse;
    try {
      res = await this.client.path(problem, goal);
    } catch (e) {
      if (this.isCurrent(seq)) {
        this.message = e instanceof Error ? e.message : String(e);
        this.busy = false;
        this.notify();
      }
      return;
    }
    if (!this.isCurrent(seq)) return;
    this.busy = false;
    if (!res.found) {
      this.overlay = null;
      this.message =
        this.analysis.legal_moves.length === 0
          ? "no moves available: this problem is a fixed point"
          : `no path to the ${goal} goal from here`;
      this.notify();
      return;
    }
    this.overlay = {
      goal,
      moves: res.path!.moves,
      step: 0,
      end: res.end!,
    };
    this.message = null;
    this.notify();
  }

  /** Apply the next move of the solved path; true while steps remain. */
  async stepOverlay(): Promise<boolean> {
    if (!this.overlay || this.overlay.step >= this.overlay.moves.length) {
      return false;
    }
    const overlay = this.overlay;
    const move = overlay.moves[overlay.step];
    await this.applyMove(move, "overlay");
    if (this.overlay === null) return false; // an error cleared it
    overlay.step += 1;
    if (overlay.step >= overlay.moves.length) {
      if (this.problem && sameProblem(this.problem, overlay.end)) {
        this.message = `reached the ${overlay.goal} goal`;
      }
      this.notify();
      return false;
    }
    this.notify();
    return true;
  }

  async runOverlay(): Promise<void> {
    while (await this.stepOverlay()) {
      // each step re-renders; no delay here, the UI animates via CSS
    }
  }
}

export function reverse(m: Move): Move {
  return { col: m.col, from: m.to, to: m.from };
}
