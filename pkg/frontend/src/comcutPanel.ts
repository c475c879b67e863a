/** Synthesis panel: ask the service for a sufficient bipath list and render
 * each suggestion as a pair of colored paths over the quiver. */

import { SessionClient } from "./client.js";
import { describeBipath, renderBipathOverlay } from "./render.js";
import type { QuiverJson } from "./types.js";

export interface ComcutSuggestion {
  text: string;
  svg: string;
  left: number[];
  right: number[];
}

export async function comcutSuggestions(
  client: SessionClient,
  quiver: QuiverJson
): Promise<ComcutSuggestion[]> {
  const { bipaths } = await client.toolComcut(quiver);
  return bipaths.map((b) => ({
    text: describeBipath(b.u, b.v, b.left, b.right),
    svg: renderBipathOverlay(quiver, b.left, b.right),
    left: b.left,
    right: b.right,
  }));
}
