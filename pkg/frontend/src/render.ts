// Pure HTML-string renderers; main.ts owns the DOM wiring.

import { Analysis, Move, formatPerm } from "./api.js";
import { Overlay } from "./state.js";

const ROW_NAMES = ["u", "v", "w"];

function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

/**
 * One argument row: digits with a descent bar after each descending place.
 * Bars line up with the column controls underneath.
 */
export function renderRow(word: number[], descents: number[], label: string): string {
  const cells: string[] = [];
  for (let i = 0; i < word.length; i++) {
    cells.push(`<span class="digit">${word[i]}</span>`);
    if (i < word.length - 1) {
      const isDescent = descents.includes(i + 1);
      cells.push(
        `<span class="gap${isDescent ? " descent" : ""}" data-col="${i + 1}">` +
          `${isDescent ? "|" : ""}</span>`,
      );
    }
  }
  return `<div class="row"><span class="rowlabel">${label}</span>${cells.join("")}</div>`;
}

export function renderColumns(
  n: number,
  interactive: Set<number>,
  pending: number | null,
): string {
  const buttons: string[] = [];
  for (let col = 1; col <= n - 1; col++) {
    const cls = interactive.has(col)
      ? col === pending
        ? "colbtn active"
        : "colbtn"
      : "colbtn locked";
    const title = interactive.has(col)
      ? `cycle the descent in column ${col}`
      : `column ${col} is locked (needs exactly one descending row)`;
    buttons.push(
      `<button class="${cls}" data-col="${col}" title="${title}">${col}</button>`,
    );
  }
  return `<div class="columns">${buttons.join("")}</div>`;
}

export function renderTargets(pending: number, source: number): string {
  const options = [1, 2, 3]
    .filter((a) => a !== source)
    .map(
      (a) =>
        `<button class="target" data-target="${a}">move to row ${ROW_NAMES[a - 1]}</button>`,
    );
  return `<div class="targets">column ${pending}, from row ${
    ROW_NAMES[source - 1]
  }: ${options.join(" ")}</div>`;
}

export function renderBanner(a: Analysis): string {
  if (!a.vertex) {
    return `<div class="banner warn">not a problem vertex</div>`;
  }
  if (a.dc_trivial) {
    return (
      `<div class="banner zero">value 0 — column ${a.witness_column} ` +
      `ascends in all three rows</div>`
    );
  }
  if (a.bruhat_possible === false) {
    return `<div class="banner zero">value 0 — forced by the order comparison</div>`;
  }
  return "";
}

export function renderOverlay(overlay: Overlay | null): string {
  if (!overlay) return "";
  const done = overlay.step >= overlay.moves.length;
  const steps = overlay.moves
    .map((m: Move, i: number) => {
      const cls = i < overlay.step ? "done" : i === overlay.step ? "next" : "";
      return `<li class="${cls}">col ${m.col}: row ${ROW_NAMES[m.from - 1]} → row ${
        ROW_NAMES[m.to - 1]
      }</li>`;
    })
    .join("");
  return (
    `<div class="overlay"><p>${done ? "solved" : "solving"} (${overlay.step}/` +
    `${overlay.moves.length}) toward (${formatPerm(overlay.end.u)}, ` +
    `${formatPerm(overlay.end.v)}, ${formatPerm(overlay.end.w)})</p>` +
    `<ol>${steps}</ol></div>`
  );
}

export function renderSession(a: Analysis | null, opts: {
  interactive: Set<number>;
  pending: number | null;
  source: number | null;
  overlay: Overlay | null;
  message: string | null;
  canUndo: boolean;
  canRedo: boolean;
}): string {
  if (!a) {
    return `<p class="hint">enter three permutations to begin</p>`;
  }
  const rows = [a.problem.u, a.problem.v, a.problem.w]
    .map((word, idx) => renderRow(word, a.descents[idx], ROW_NAMES[idx]))
    .join("");
  const parts = [
    renderBanner(a),
    `<div class="board">${rows}${renderColumns(a.n, opts.interactive, opts.pending)}</div>`,
  ];
  if (opts.pending !== null && opts.source !== null) {
    parts.push(renderTargets(opts.pending, opts.source));
  }
  parts.push(
    `<div class="controls">` +
      `<button id="undo"${opts.canUndo ? "" : " disabled"}>undo</button>` +
      `<button id="redo"${opts.canRedo ? "" : " disabled"}>redo</button>` +
      `<button id="solve-easy">solve to (id, id, w₀)</button>` +
      `<button id="solve-trivial">solve to value 0</button>` +
      `</div>`,
  );
  parts.push(renderOverlay(opts.overlay));
  if (opts.message) {
    parts.push(`<div class="message">${esc(opts.message)}</div>`);
  }
  return parts.join("");
}
