export type OriginClass = "BOTH" | "ONLY_A" | "ONLY_B";

export interface PayloadNode {
  id: string;
  origin: OriginClass;
  attrs_a: Record<string, string> | null;
  attrs_b: Record<string, string> | null;
  members?: string[];
  member_count?: number;
}

export interface PayloadEdge {
  source: string;
  target: string;
  origin: OriginClass;
}

export interface Suggestion {
  a: string;
  b: string;
  score: number;
  shared_anchor_count: number;
}

export interface GraphVariant {
  nodes: PayloadNode[];
  edges: PayloadEdge[];
}

export type VariantName = "expanded" | "collapsed";

export interface ViewerPayload {
  schema: string;
  tool: { name: string; version: string };
  provenance: { graph_a: string; graph_b: string; config: Record<string, unknown> };
  counts: {
    nodes: Record<OriginClass, number>;
    edges: Record<OriginClass, number>;
  };
  unmapped_a: string[];
  unmapped_b: string[];
  suggestions: Suggestion[];
  supernodes: { id: string; members: string[]; member_count: number }[];
  colors: Record<string, string>;
  initial_variant: VariantName;
  variants: Record<VariantName, GraphVariant>;
}

export const FALLBACK_COLORS: Record<string, string> = {
  BOTH: "#4878d0",
  ONLY_A: "#ee6fa8",
  ONLY_B: "#e8c22e",
  SUGGESTED: "#2f9e44",
  HOVER: "#00bcd4",
};
