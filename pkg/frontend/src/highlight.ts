/** Extract the selection a commutativity/equality atom names, for visual
 * emphasis.  This is display-only parsing of the service's formula text; the
 * service keeps terms normalized to at most one restriction around a
 * variable, so a chain never occurs here.
 */

import type { QuiverJson } from "./types.js";

export interface AtomSelection {
  /** de Bruijn index of the context diagram the atom restricts */
  variable: number;
  vertices: number[];
  arcs: number[];
}

const EXPLICIT = /restr\(\[([\d,\s]*)\];\[([\d,\s]*)\],\s*\$(\d+)\)/;
const ARCS_ONLY = /restrA\(\[([\d,\s]*)\],\s*\$(\d+)\)/;
const BARE = /\$(\d+)/;

function parseInts(text: string): number[] {
  return text
    .split(",")
    .map((s) => s.trim())
    .filter((s) => s.length > 0)
    .map((s) => parseInt(s, 10));
}

/** Selection of the first term appearing in an atom's text, resolved against
 * the context quivers (index 0 = innermost binder). */
export function atomSelection(atomText: string, context: QuiverJson[]): AtomSelection | null {
  const explicit = EXPLICIT.exec(atomText);
  if (explicit) {
    return {
      variable: parseInt(explicit[3], 10),
      vertices: parseInts(explicit[1]),
      arcs: parseInts(explicit[2]),
    };
  }
  const arcsOnly = ARCS_ONLY.exec(atomText);
  if (arcsOnly) {
    const variable = parseInt(arcsOnly[2], 10);
    const arcs = parseInts(arcsOnly[1]);
    const host = context[variable];
    if (!host) return null;
    const vertices = new Set<number>();
    for (const i of arcs) {
      const arc = host.arcs[i];
      if (!arc) return null;
      vertices.add(arc[0]);
      vertices.add(arc[1]);
    }
    return { variable, vertices: [...vertices].sort((a, b) => a - b), arcs };
  }
  const bare = BARE.exec(atomText);
  if (bare) {
    const variable = parseInt(bare[1], 10);
    const host = context[variable];
    if (!host) return null;
    return {
      variable,
      vertices: Array.from({ length: host.n }, (_, i) => i),
      arcs: host.arcs.map((_, i) => i),
    };
  }
  return null;
}
