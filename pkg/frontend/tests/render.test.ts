import { describe, expect, it } from "vitest";

import { describeBipath, renderBipathOverlay, renderQuiver, svgTextLabels } from "../src/render.js";
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

describe("rendering fidelity", () => {
  // vertex and arc labels must be the integers of the canonical
  // lexicographic convention, exactly once each
  for (const [name, q] of [["mapQ", mapQ], ["monoQ", monoQ], ["fiveQ", fiveQ]] as const) {
    it(`labels ${name} canonically`, () => {
      const svg = renderQuiver(q);
      const vertexLabels = svgTextLabels(svg, "vertex-label");
      const arcLabels = svgTextLabels(svg, "arc-label");
      expect(vertexLabels.map(Number).sort((a, b) => a - b)).toEqual(
        Array.from({ length: q.n }, (_, i) => i)
      );
      expect(arcLabels.map(Number).sort((a, b) => a - b)).toEqual(
        Array.from({ length: q.arcs.length }, (_, i) => i)
      );
    });
  }

  it("attaches each arc label to the arc with that index", () => {
    const svg = renderQuiver(monoQ);
    for (let i = 0; i < monoQ.arcs.length; i++) {
      const m = new RegExp(`<text class="arc-label" data-arc="${i}"[^>]*>(\\d+)</text>`).exec(svg);
      expect(m, `label for arc ${i}`).not.toBeNull();
      expect(m![1]).toBe(String(i));
    }
  });

  it("declares vertex and arc counts on the root element", () => {
    const svg = renderQuiver(fiveQ);
    expect(svg).toContain('data-vertices="10"');
    expect(svg).toContain('data-arcs="13"');
  });

  it("emphasizes requested vertices and arcs", () => {
    const svg = renderQuiver(monoQ, {
      vertices: new Set([0, 1]),
      arcs: new Map([[0, "#d08000"]]),
    });
    expect(svg).toContain('data-arc="0" d=');
    expect(svg).toContain('stroke="#d08000"');
    expect(svg).toContain('fill="#ffe4b3"');
  });
});

describe("bipath overlays", () => {
  it("colors the two sides differently", () => {
    const svg = renderBipathOverlay(monoQ, [0, 3], [2]);
    expect(svg).toContain('stroke="#1f5fbf"');
    expect(svg).toContain('stroke="#bf1f1f"');
  });

  it("describes suggestions in path notation", () => {
    expect(describeBipath(3, 0, [2], [3, 0])).toBe(
      "path(3→0 via arcs 2) = path(3→0 via arcs 3,0)"
    );
    expect(describeBipath(1, 1, [], [0])).toContain("empty");
  });
});
