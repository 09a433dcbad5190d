import { Client, parsePermText } from "./api.js";
import { renderSession } from "./render.js";
import { Session } from "./state.js";

const client = new Client("");
const session = new Session(client);

const app = document.getElementById("app")!;
const form = document.getElementById("loader") as HTMLFormElement;

function render(): void {
  app.innerHTML = renderSession(session.analysis, {
    interactive: session.interactiveColumns(),
    pending: session.pendingColumn,
    source:
      session.pendingColumn !== null
        ? session.sourceAt(session.pendingColumn)
        : null,
    overlay: session.overlay,
    message: session.message,
    canUndo: session.undoStack.length > 0,
    canRedo: session.redoStack.length > 0,
  });
}

session.onChange(render);

app.addEventListener("click", (ev) => {
  const el = ev.target as HTMLElement;
  if (el.matches(".colbtn")) {
    session.selectColumn(Number(el.dataset.col));
  } else if (el.matches(".target")) {
    void session.moveTo(Number(el.dataset.target));
  } else if (el.id === "undo") {
    void session.undo();
  } else if (el.id === "redo") {
    void session.redo();
  } else if (el.id === "solve-easy") {
    void session.autoSolve("easy").then(() => session.runOverlay());
  } else if (el.id === "solve-trivial") {
    void session.autoSolve("trivial").then(() => session.runOverlay());
  }
});

form.addEventListener("submit", (ev) => {
  ev.preventDefault();
  const read = (name: string) =>
    (form.elements.namedItem(name) as HTMLInputElement).value;
  try {
    void session.load({
      u: parsePermText(read("u")),
      v: parsePermText(read("v")),
      w: parsePermText(read("w")),
    });
  } catch (e) {
    session.message = e instanceof Error ? e.message : String(e);
    render();
  }
});

render();
