import { Viewer } from "./render";
import type { ViewerPayload } from "./types";
import { validatePayload } from "./validate";

export const DATA_ISLAND_ID = "bomgraph-data";

function banner(host: HTMLElement, message: string): void {
  const box = host.ownerDocument.createElement("div");
  box.className = "bd-banner";
  box.setAttribute("role", "alert");
  box.textContent = `bomdiff viewer: ${message}`;
  host.appendChild(box);
}

/**
 * Read the inline data island, validate it, and mount the viewer. Any
 * failure produces a visible error banner instead of a blank page.
 */
export function bootstrap(doc: Document): Viewer | null {
  const host = doc.createElement("div");
  host.id = "bomdiff-app";
  doc.body.appendChild(host);

  const island = doc.getElementById(DATA_ISLAND_ID);
  if (!island || !island.textContent) {
    banner(host, `data island #${DATA_ISLAND_ID} is missing`);
    return null;
  }
  let data: unknown;
  try {
    data = JSON.parse(island.textContent);
  } catch (error) {
    banner(host, `data island is not valid JSON (${String(error)})`);
    return null;
  }
  const errors = validatePayload(data);
  if (errors.length > 0) {
    banner(host, `payload failed validation: ${errors.join("; ")}`);
    return null;
  }
  try {
    return new Viewer(host, data as ViewerPayload);
  } catch (error) {
    banner(host, `rendering failed (${String(error)})`);
    return null;
  }
}
