// Page wiring: textarea -> session; SVG clicks -> assert/what-if;
// badge, accepted list, undo, verify.

import { SessionApi } from "./api.js";
import { Point } from "./layout.js";
import { drawGraph } from "./render.js";
import { endChoices, SessionStore, ViewEdge } from "./state.js";

const DEFAULT_GRAPH = `nodes: A B C D
A o-o B
A o-o C
B o-o C
C o-o D
A o-o D
`;

// ?api=http://host:port points the client at a server on another origin
const apiBase =
  new URLSearchParams(location.search).get("api") ??
  (window as { API_BASE?: string }).API_BASE ??
  "";
const store = new SessionStore(new SessionApi(apiBase));

const $ = <T extends HTMLElement>(id: string): T =>
  document.getElementById(id) as T;

const svg = $("canvas") as unknown as SVGSVGElement;
const menu = $("menu");

function closeMenu(): void {
  menu.style.display = "none";
  menu.replaceChildren();
}

function openMenu(edge: ViewEdge, end: "x" | "y", at: Point): void {
  closeMenu();
  const committed = edge.admissible === null;
  const title = document.createElement("div");
  title.className = "menu-title";
  title.textContent = `${edge.x}–${edge.y}, ${end === "x" ? edge.x : edge.y} end`;
  menu.appendChild(title);
  for (const choice of endChoices(edge, end)) {
    const button = document.createElement("button");
    button.textContent = choice.label;
    button.disabled = !choice.ok || store.busy;
    if (!choice.ok) {
      // committed edges carry no admissibility entry; fetch the
      // server's refusal wording through a what-if preview
      button.title = choice.reason ?? "not admissible here";
      if (committed) {
        button.disabled = true;
        void store.whatIf(choice.piece).then(() => {
          button.title = store.preview?.reason ?? button.title;
        });
      }
    } else {
      button.addEventListener("click", () => {
        closeMenu();
        void store.assert(choice.piece);
      });
    }
    menu.appendChild(button);
    if (choice.ok && previewMode()) {
      button.addEventListener("mouseenter", () => {
        void store.whatIf(choice.piece);
      });
    }
  }
  menu.style.left = `${at.x + 12}px`;
  menu.style.top = `${at.y + 12}px`;
  menu.style.display = "block";
}

function previewMode(): boolean {
  return ($("preview-mode") as HTMLInputElement).checked;
}

function renderAll(): void {
  const view = store.view;
  if (view !== null) {
    drawGraph(svg, view, openMenu);
  }
  const badge = $("mec-badge");
  if (store.mec === null) {
    badge.style.display = "none";
  } else {
    badge.style.display = "inline-block";
    badge.textContent = `class size ${store.mec}`;
  }
  const accepted = $("accepted");
  accepted.replaceChildren();
  for (const piece of store.state?.accepted ?? []) {
    const item = document.createElement("li");
    item.textContent = piece;
    accepted.appendChild(item);
  }
  ($("undo") as HTMLButtonElement).disabled =
    store.busy || !(store.state?.canUndo ?? false);
  ($("verify") as HTMLButtonElement).disabled = store.busy || !store.state;
  ($("load") as HTMLButtonElement).disabled = store.busy;
  const verdict = $("verdict");
  verdict.textContent =
    store.verdict === null ? "" : store.verdict ? "complete: TRUE" : "complete: FALSE";
  const preview = $("preview");
  if (store.preview === null) {
    preview.textContent = "";
    preview.className = "";
  } else if (store.preview.reason !== null) {
    preview.textContent = `what-if ${store.preview.piece}: inadmissible — ${store.preview.reason}`;
    preview.className = "bad";
  } else {
    const fires = (store.preview.state?.trace ?? [])
      .map((t) => t.rule)
      .join(", ");
    preview.textContent = `what-if ${store.preview.piece}: would fire ${fires || "nothing new"}`;
    preview.className = "good";
  }
  $("status").textContent = store.lastError ?? (store.busy ? "…" : "");
}

store.subscribe(renderAll);

($("graph-text") as HTMLTextAreaElement).value = DEFAULT_GRAPH;
$("load").addEventListener("click", () => {
  closeMenu();
  void store
    .load(($("graph-text") as HTMLTextAreaElement).value)
    .catch(() => undefined);
});
$("undo").addEventListener("click", () => {
  closeMenu();
  void store.undo();
});
$("verify").addEventListener("click", () => {
  void store.verify();
});
document.body.addEventListener("click", (ev) => {
  if (!(ev.target instanceof Element) || !menu.contains(ev.target)) {
    closeMenu();
  }
});

renderAll();
