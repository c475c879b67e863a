/** Tactic palette: turn the service's applicability hints into buttons.
 * Hints with placeholders become input templates rather than one-click
 * submissions. */

export interface PaletteItem {
  label: string;
  /** text inserted into the tactic buffer */
  template: string;
  /** templates with placeholders need editing before submission */
  immediate: boolean;
}

export function paletteFromHints(hints: string[]): PaletteItem[] {
  return hints.map((hint) => {
    const immediate = !hint.includes("<") && !hint.includes("...");
    return { label: hint, template: hint, immediate };
  });
}
