// Browser bootstrap: wires the pure renderer and the state machine to the
// DOM. Served statically next to dist/; expects the qgrass service URL in
// the ?service= query parameter (default http://127.0.0.1:8642).

import { ApiError, QgrassClient } from "./api.js";
import { lambdaRuleText, renderSeedSVG } from "./render.js";
import { ExplorerState } from "./state.js";
import { labelText } from "./types.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

const params = new URLSearchParams(window.location.search);
const serviceUrl = params.get("service") ?? "http://127.0.0.1:8642";
const client = new QgrassClient(serviceUrl);
const state = new ExplorerState(client);

const graph = el<HTMLDivElement>("graph");
const historyPanel = el<HTMLUListElement>("history");
const lambdaPanel = el<HTMLDivElement>("lambda");
const expansionPanel = el<HTMLPreElement>("expansion");
const undoButton = el<HTMLButtonElement>("undo");
const previewPanel = el<HTMLDivElement>("preview");
const toast = el<HTMLDivElement>("toast");

function showToast(message: string): void {
  toast.textContent = message;
  toast.classList.add("visible");
  window.setTimeout(() => toast.classList.remove("visible"), 2500);
}

async function redraw(): Promise<void> {
  const view = state.view();
  graph.innerHTML = renderSeedSVG(view);
  undoButton.disabled = !state.canUndo || state.pending;

  historyPanel.innerHTML = view.info.seed.history
    .map((pos, i) => `<li>step ${i + 1}: position ${pos}</li>`)
    .join("");

  lambdaPanel.textContent = lambdaRuleText(view) ?? "select two vertices";

  if (view.selected.length === 1 && state.sessionId) {
    const pos = view.selected[0]!;
    const terms = await client.variable(state.sessionId, pos);
    expansionPanel.textContent = terms
      .map((t) => `${t.coeff} · X^[${t.exponents.join(", ")}]`)
      .join("\n");
  } else {
    expansionPanel.textContent = "";
  }

  if (state.preview) {
    const seed = state.preview.response.seed;
    const pos = state.preview.position;
    previewPanel.innerHTML =
      `<p>preview of position ${pos}: ` +
      `${labelText(seed.positions[pos - 1]?.label ?? null)}</p>` +
      `<button id="commit">commit</button>`;
    el<HTMLButtonElement>("commit").onclick = async () => {
      await state.commitPreview();
      previewPanel.innerHTML = "";
      await redraw();
    };
  }

  for (const vertex of graph.querySelectorAll<SVGGElement>("g.vertex")) {
    const position = Number(vertex.dataset.position);
    vertex.addEventListener("click", async (event) => {
      if (state.pending) return;
      try {
        if ((event as MouseEvent).shiftKey && state.isMutable(position)) {
          await state.previewMutation(position);
        } else {
          await state.clickVertex(position);
        }
      } catch (error) {
        if (error instanceof ApiError && error.status === 422) {
          showToast("frozen vertices cannot be mutated");
        } else {
          showToast(String(error));
        }
      }
      await redraw();
    });
  }
}

undoButton.addEventListener("click", async () => {
  try {
    await state.undo();
  } catch (error) {
    showToast(String(error));
  }
  await redraw();
});

el<HTMLFormElement>("new-session").addEventListener("submit", async (event) => {
  event.preventDefault();
  const m = Number(el<HTMLInputElement>("param-m").value);
  const n = Number(el<HTMLInputElement>("param-n").value);
  try {
    await state.start(m, n);
    await redraw();
  } catch (error) {
    showToast(String(error));
  }
});

state
  .start(2, 4)
  .then(redraw)
  .catch((error) => showToast(`service unreachable: ${error}`));
