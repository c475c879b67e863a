/** Deterministic layered layout for acyclic quivers.
 *
 * Each vertex is ranked by its longest incoming path (sources at rank 0);
 * within a rank, vertices keep ascending label order.  Parallel arcs get
 * distinct curvature offsets so multi-edges stay visible.  The same quiver
 * always yields the same coordinates, so renders diff cleanly.
 */

import type { QuiverJson } from "./types.js";

export interface NodeLayout {
  id: number;
  rank: number;
  row: number;
  x: number;
  y: number;
}

export interface EdgeLayout {
  index: number;
  src: number;
  tgt: number;
  /** offset among parallel arcs sharing endpoints, centered on zero */
  bend: number;
}

export interface QuiverLayout {
  nodes: NodeLayout[];
  edges: EdgeLayout[];
  width: number;
  height: number;
}

export const RANK_SPACING = 120;
export const ROW_SPACING = 70;
export const MARGIN = 40;

export function layerRanks(q: QuiverJson): number[] {
  const ranks = new Array<number>(q.n).fill(0);
  // longest-path layering; iterate |V| times (acyclic input converges sooner)
  for (let pass = 0; pass < q.n; pass++) {
    let changed = false;
    for (const [s, t] of q.arcs) {
      if (ranks[t] < ranks[s] + 1) {
        ranks[t] = ranks[s] + 1;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return ranks;
}

export function layoutQuiver(q: QuiverJson): QuiverLayout {
  const ranks = layerRanks(q);
  const byRank = new Map<number, number[]>();
  for (let v = 0; v < q.n; v++) {
    const bucket = byRank.get(ranks[v]) ?? [];
    bucket.push(v);
    byRank.set(ranks[v], bucket);
  }
  const nodes: NodeLayout[] = [];
  for (const [rank, vertices] of [...byRank.entries()].sort((a, b) => a[0] - b[0])) {
    vertices.sort((a, b) => a - b);
    vertices.forEach((v, row) => {
      nodes.push({
        id: v,
        rank,
        row,
        x: MARGIN + rank * RANK_SPACING,
        y: MARGIN + row * ROW_SPACING,
      });
    });
  }
  nodes.sort((a, b) => a.id - b.id);

  const parallelCount = new Map<string, number>();
  for (const [s, t] of q.arcs) {
    const key = `${s}->${t}`;
    parallelCount.set(key, (parallelCount.get(key) ?? 0) + 1);
  }
  const seen = new Map<string, number>();
  const edges: EdgeLayout[] = q.arcs.map(([s, t], index) => {
    const key = `${s}->${t}`;
    const position = seen.get(key) ?? 0;
    seen.set(key, position + 1);
    const total = parallelCount.get(key)!;
    const bend = total === 1 ? 0 : position - (total - 1) / 2;
    return { index, src: s, tgt: t, bend };
  });

  const maxRank = Math.max(0, ...ranks);
  const maxRow = Math.max(0, ...[...byRank.values()].map((b) => b.length - 1));
  return {
    nodes,
    edges,
    width: 2 * MARGIN + maxRank * RANK_SPACING,
    height: 2 * MARGIN + maxRow * ROW_SPACING,
  };
}
