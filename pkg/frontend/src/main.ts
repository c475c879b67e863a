/** DOM wiring for the single-page client. */

import { FetchTransport, SessionClient } from "./client.js";
import { comcutSuggestions } from "./comcutPanel.js";
import { paletteFromHints } from "./palette.js";
import { renderQuiver, type Emphasis } from "./render.js";
import { SessionViewModel } from "./session.js";
import type { QuiverJson } from "./types.js";

const client = new SessionClient(new FetchTransport(""));
const vm = new SessionViewModel(client);

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function renderState(): void {
  const status = el<HTMLSpanElement>("status");
  status.textContent = vm.status;
  status.className = vm.status;
  el<HTMLDivElement>("error").textContent = vm.lastError ?? "";
  const contextBox = el<HTMLDivElement>("context");
  const premisesBox = el<HTMLUListElement>("premises");
  const goalBox = el<HTMLDivElement>("goal");
  const paletteBox = el<HTMLDivElement>("palette");
  const historyBox = el<HTMLOListElement>("history");
  contextBox.innerHTML = "";
  premisesBox.innerHTML = "";
  goalBox.textContent = "";
  paletteBox.innerHTML = "";
  historyBox.innerHTML = "";
  if (!vm.state) return;

  const highlight = vm.selectionHighlight();
  vm.state.context.forEach((payload, index) => {
    const card = document.createElement("div");
    card.className = "quiver-card";
    const title = document.createElement("div");
    title.textContent = `$${index}`;
    card.appendChild(title);
    const emphasis: Emphasis = {};
    if (highlight && highlight.variable === index) {
      emphasis.vertices = new Set(highlight.vertices);
      emphasis.arcs = new Map(highlight.arcs.map((a) => [a, "#d08000"]));
    }
    const holder = document.createElement("div");
    holder.innerHTML = renderQuiver(payload.quiver, emphasis);
    card.appendChild(holder);
    contextBox.appendChild(card);
  });

  vm.state.premises.forEach((premise, index) => {
    const item = document.createElement("li");
    item.textContent = `P${index}: ${premise}`;
    item.onmouseenter = () => {
      vm.selectAtom(premise);
      renderState();
    };
    premisesBox.appendChild(item);
  });
  goalBox.textContent = vm.state.goal;
  goalBox.onmouseenter = () => {
    vm.selectAtom(vm.state ? vm.state.goal : null);
    renderState();
  };

  for (const item of paletteFromHints(vm.state.hints)) {
    const button = document.createElement("button");
    button.textContent = item.label;
    button.onclick = async () => {
      if (item.immediate) {
        await vm.submitTactic(item.template);
      } else {
        vm.tacticBuffer = item.template;
        el<HTMLTextAreaElement>("tactic-input").value = item.template;
      }
      renderState();
    };
    paletteBox.appendChild(button);
  }

  vm.history.forEach((entry) => {
    const item = document.createElement("li");
    item.textContent = entry.tactic;
    historyBox.appendChild(item);
  });
}

async function boot(): Promise<void> {
  el<HTMLButtonElement>("create").onclick = async () => {
    await vm.create(el<HTMLTextAreaElement>("formula-input").value);
    renderState();
  };
  el<HTMLButtonElement>("submit").onclick = async () => {
    await vm.submitTactic(el<HTMLTextAreaElement>("tactic-input").value);
    renderState();
  };
  el<HTMLButtonElement>("undo").onclick = async () => {
    await vm.undo();
    renderState();
  };
  el<HTMLButtonElement>("export").onclick = async () => {
    const script = await vm.exportScript();
    if (script !== null) el<HTMLPreElement>("script-output").textContent = script;
    renderState();
  };
  el<HTMLButtonElement>("suggest").onclick = async () => {
    const raw = el<HTMLTextAreaElement>("comcut-input").value;
    const box = el<HTMLDivElement>("suggestions");
    box.innerHTML = "";
    try {
      const quiver = JSON.parse(raw) as QuiverJson;
      for (const s of await comcutSuggestions(client, quiver)) {
        const card = document.createElement("div");
        card.className = "suggestion";
        const caption = document.createElement("div");
        caption.textContent = s.text;
        card.appendChild(caption);
        const holder = document.createElement("div");
        holder.innerHTML = s.svg;
        card.appendChild(holder);
        box.appendChild(card);
      }
    } catch (e) {
      el<HTMLDivElement>("error").textContent = String(e);
    }
  };
  renderState();
}

boot();
