// Wire types of the qgrass HTTP service.  The UI never recomputes any of
// these values; it only reads them off the payloads.

export interface PositionPayload {
  label: number[] | null;
  frozen: boolean;
}

export interface SeedPayload {
  m: number;
  n: number;
  positions: PositionPayload[];
  B: number[][];
  L: number[][];
  /** 1-based positions mutated so far, oldest first. */
  history: number[];
}

export interface SessionCreated {
  id: string;
  seed: SeedPayload;
}

export interface SessionInfo {
  seed: SeedPayload;
  /** 1-based [from, to] arrow pairs, with multiplicity. */
  arrows: [number, number][];
  /** 1-based indices of the mutable positions. */
  mutablePositions: number[];
}

export interface MutateResponse {
  seed: SeedPayload;
  geometricExchange: boolean;
  /** Present exactly when the mutation was a geometric exchange. */
  newLabel?: number[];
}

export interface VariableTerm {
  exponents: number[];
  /** exact scalar in the form u^k·(poly)/(poly), u = q^(1/2) */
  coeff: string;
}

export function labelText(label: number[] | null): string {
  return label === null ? "?" : `{${label.join(",")}}`;
}
