import { fileURLToPath } from "node:url";
import { dirname, join } from "node:path";

/** Golden sweep CSVs committed at the repository root. */
export function goldenPath(name: string): string {
  return join(dirname(fileURLToPath(import.meta.url)), "..", "..", "data", name);
}
