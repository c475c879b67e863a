/** SVG rendering of quivers: one labelled node per vertex, one labelled
 * curve per arc, with optional per-vertex/per-arc emphasis. */

import { layoutQuiver } from "./layout.js";
import type { QuiverJson } from "./types.js";

export interface Emphasis {
  vertices?: Set<number>;
  /** arc index -> stroke color */
  arcs?: Map<number, string>;
}

const NODE_RADIUS = 14;

function escapeXml(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function renderQuiver(q: QuiverJson, emphasis: Emphasis = {}): string {
  const layout = layoutQuiver(q);
  const pos = new Map(layout.nodes.map((n) => [n.id, n]));
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${layout.width} ${layout.height}" ` +
      `data-vertices="${q.n}" data-arcs="${q.arcs.length}">`
  );
  parts.push(
    `<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" ` +
      `markerWidth="7" markerHeight="7" orient="auto-start-reverse">` +
      `<path d="M 0 0 L 10 5 L 0 10 z" fill="context-stroke"/></marker></defs>`
  );
  for (const e of layout.edges) {
    const a = pos.get(e.src)!;
    const b = pos.get(e.tgt)!;
    const dx = b.x - a.x;
    const dy = b.y - a.y;
    const len = Math.hypot(dx, dy) || 1;
    // trim endpoints to the node circles, bow parallel arcs apart
    const ux = dx / len;
    const uy = dy / len;
    const sx = a.x + ux * NODE_RADIUS;
    const sy = a.y + uy * NODE_RADIUS;
    const tx = b.x - ux * NODE_RADIUS;
    const ty = b.y - uy * NODE_RADIUS;
    const normX = -uy;
    const normY = ux;
    const bow = e.bend * 26;
    const mx = (sx + tx) / 2 + normX * bow;
    const my = (sy + ty) / 2 + normY * bow;
    const color = emphasis.arcs?.get(e.index) ?? "#444";
    const width = emphasis.arcs?.has(e.index) ? 2.5 : 1.5;
    parts.push(
      `<path class="arc" data-arc="${e.index}" d="M ${sx} ${sy} Q ${mx} ${my} ${tx} ${ty}" ` +
        `fill="none" stroke="${color}" stroke-width="${width}" marker-end="url(#arrow)"/>`
    );
    parts.push(
      `<text class="arc-label" data-arc="${e.index}" x="${mx}" y="${my - 4}" ` +
        `text-anchor="middle" font-size="11" fill="${color}">${e.index}</text>`
    );
  }
  for (const n of layout.nodes) {
    const hot = emphasis.vertices?.has(n.id) ?? false;
    parts.push(
      `<circle class="vertex" data-vertex="${n.id}" cx="${n.x}" cy="${n.y}" r="${NODE_RADIUS}" ` +
        `fill="${hot ? "#ffe4b3" : "#f2f2f2"}" stroke="${hot ? "#d08000" : "#555"}"/>`
    );
    parts.push(
      `<text class="vertex-label" data-vertex="${n.id}" x="${n.x}" y="${n.y + 4}" ` +
        `text-anchor="middle" font-size="12">${n.id}</text>`
    );
  }
  parts.push("</svg>");
  return parts.join("\n");
}

/** Overlay for one suggested bipath: left path blue, right path red. */
export function renderBipathOverlay(
  q: QuiverJson,
  left: number[],
  right: number[]
): string {
  const arcs = new Map<number, string>();
  for (const i of left) arcs.set(i, "#1f5fbf");
  for (const i of right) arcs.set(i, "#bf1f1f");
  return renderQuiver(q, { arcs });
}

export function describeBipath(u: number, v: number, left: number[], right: number[]): string {
  const show = (p: number[]) => (p.length ? p.join(",") : "empty");
  return `path(${u}→${v} via arcs ${show(left)}) = path(${u}→${v} via arcs ${show(right)})`;
}

export function svgTextLabels(svg: string, klass: string): string[] {
  const out: string[] = [];
  const re = new RegExp(`<text class="${klass}"[^>]*>([^<]*)</text>`, "g");
  let m: RegExpExecArray | null;
  while ((m = re.exec(svg)) !== null) {
    out.push(escapeXml(m[1]));
  }
  return out;
}
