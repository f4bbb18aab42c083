import type { ViewerPayload } from "./types";

const ORIGINS = new Set(["BOTH", "ONLY_A", "ONLY_B"]);

function isRecord(value: unknown): value is Record<string, unknown> {
  return typeof value === "object" && value !== null && !Array.isArray(value);
}

function isStringMap(value: unknown): boolean {
  return isRecord(value) && Object.values(value).every((v) => typeof v === "string");
}

function checkVariant(value: unknown, name: string, errors: string[]): void {
  if (!isRecord(value)) {
    errors.push(`variants.${name} must be an object`);
    return;
  }
  const nodes = value["nodes"];
  const edges = value["edges"];
  if (!Array.isArray(nodes)) {
    errors.push(`variants.${name}.nodes must be an array`);
  } else {
    const ids = new Set<string>();
    for (const node of nodes) {
      if (!isRecord(node) || typeof node["id"] !== "string" || !ORIGINS.has(node["origin"] as string)) {
        errors.push(`variants.${name} has a malformed node entry`);
        break;
      }
      for (const side of ["attrs_a", "attrs_b"]) {
        const attrs = node[side];
        if (attrs !== null && attrs !== undefined && !isStringMap(attrs)) {
          errors.push(`variants.${name} node ${node["id"]} has a non string-map ${side}`);
        }
      }
      ids.add(node["id"] as string);
    }
    if (Array.isArray(edges)) {
      for (const edge of edges) {
        if (!isRecord(edge) || typeof edge["source"] !== "string" || typeof edge["target"] !== "string") {
          errors.push(`variants.${name} has a malformed edge entry`);
          break;
        }
        if (!ids.has(edge["source"] as string) || !ids.has(edge["target"] as string)) {
          errors.push(`variants.${name} edge ${edge["source"]}->${edge["target"]} references a missing node`);
          break;
        }
      }
    }
  }
  if (!Array.isArray(edges)) {
    errors.push(`variants.${name}.edges must be an array`);
  }
}

/** Structural validation of the data island. Unknown fields are ignored. */
export function validatePayload(data: unknown): string[] {
  const errors: string[] = [];
  if (!isRecord(data)) {
    return ["payload must be a JSON object"];
  }
  const counts = data["counts"];
  if (!isRecord(counts) || !isRecord(counts["nodes"]) || !isRecord(counts["edges"])) {
    errors.push("counts.nodes and counts.edges are required");
  }
  if (!Array.isArray(data["suggestions"])) {
    errors.push("suggestions must be an array");
  } else {
    for (const entry of data["suggestions"]) {
      if (!isRecord(entry) || typeof entry["a"] !== "string" || typeof entry["b"] !== "string"
          || typeof entry["score"] !== "number") {
        errors.push("suggestions entries need string a/b and numeric score");
        break;
      }
    }
  }
  if (!isRecord(data["colors"])) {
    errors.push("colors must be an object");
  }
  const variants = data["variants"];
  if (!isRecord(variants)) {
    errors.push("variants must be an object with expanded and collapsed graphs");
  } else {
    checkVariant(variants["expanded"], "expanded", errors);
    checkVariant(variants["collapsed"], "collapsed", errors);
  }
  const initial = data["initial_variant"];
  if (initial !== undefined && initial !== "expanded" && initial !== "collapsed") {
    errors.push("initial_variant must be 'expanded' or 'collapsed'");
  }
  return errors;
}

export function asPayload(data: unknown): ViewerPayload {
  const errors = validatePayload(data);
  if (errors.length > 0) {
    throw new Error(errors.join("; "));
  }
  return data as ViewerPayload;
}
