import { describe, expect, it } from "vitest";

import { layerRanks, layoutQuiver } from "../src/layout.js";
import type { QuiverJson } from "../src/types.js";

const mapQ: QuiverJson = { n: 2, arcs: [[0, 1]] };
const monoQ: QuiverJson = { n: 3, arcs: [[0, 1], [0, 1], [0, 2], [1, 2]] };
const fiveQ: QuiverJson = {
  n: 10,
  arcs: [
    [0, 1], [0, 5], [1, 2], [1, 6], [2, 3], [2, 7], [3, 4], [3, 8], [4, 9],
    [5, 6], [6, 7], [7, 8], [8, 9],
  ],
};

describe("layerRanks", () => {
  it("ranks sources at zero and respects arcs", () => {
    for (const q of [mapQ, monoQ, fiveQ]) {
      const ranks = layerRanks(q);
      expect(Math.min(...ranks)).toBe(0);
      for (const [s, t] of q.arcs) {
        expect(ranks[s]).toBeLessThan(ranks[t]);
      }
    }
  });

  it("uses longest-path layering", () => {
    expect(layerRanks(monoQ)).toEqual([0, 1, 2]);
  });
});

describe("layoutQuiver", () => {
  it("is deterministic", () => {
    const a = layoutQuiver(fiveQ);
    const b = layoutQuiver(fiveQ);
    expect(a).toEqual(b);
  });

  it("positions one node per vertex and one edge per arc", () => {
    const layout = layoutQuiver(monoQ);
    expect(layout.nodes.map((n) => n.id)).toEqual([0, 1, 2]);
    expect(layout.edges.map((e) => e.index)).toEqual([0, 1, 2, 3]);
  });

  it("separates parallel arcs", () => {
    const layout = layoutQuiver(monoQ);
    const parallel = layout.edges.filter((e) => e.src === 0 && e.tgt === 1);
    expect(parallel).toHaveLength(2);
    expect(new Set(parallel.map((e) => e.bend)).size).toBe(2);
  });

  it("keeps ascending label order within a rank", () => {
    const layout = layoutQuiver(fiveQ);
    const byRank = new Map<number, number[]>();
    for (const n of layout.nodes) {
      const bucket = byRank.get(n.rank) ?? [];
      bucket.push(n.id);
      byRank.set(n.rank, bucket);
    }
    for (const [, ids] of byRank) {
      expect(ids).toEqual([...ids].sort((a, b) => a - b));
    }
  });
});
