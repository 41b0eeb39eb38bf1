import { describe, expect, it } from "vitest";

import { QgrassClient } from "../src/api.js";
import { ExplorerState } from "../src/state.js";
import type { SeedPayload } from "../src/types.js";

// An in-memory stand-in for the service, good enough for the state
// machine: one mutable position toggling {1,3} <-> {2,4} with history.
function fakeSeed(history: number[]): SeedPayload {
  const flipped = history.length % 2 === 1;
  return {
    m: 2,
    n: 4,
    positions: [
      { label: flipped ? [2, 4] : [1, 3], frozen: false },
      { label: [1, 2], frozen: true },
      { label: [2, 3], frozen: true },
      { label: [3, 4], frozen: true },
      { label: [1, 4], frozen: true },
    ],
    B: [[0], [flipped ? -1 : 1], [flipped ? 1 : -1], [flipped ? -1 : 1], [flipped ? 1 : -1]],
    L: [
      [0, flipped ? -1 : -1, 1, 1, 1],
      [1, 0, 1, 2, 1],
      [-1, -1, 0, 1, 0],
      [-1, -2, -1, 0, -1],
      [-1, -1, 0, 1, 0],
    ],
    history: [...history],
  };
}

function fakeClient(log: string[]): QgrassClient {
  let history: number[] = [];
  const undoStack: number[][] = [];
  const fetchImpl = async (input: string, init?: RequestInit) => {
    const url = new URL(input, "http://fake");
    const method = init?.method ?? "GET";
    log.push(`${method} ${url.pathname}${url.search}`);
    const respond = (status: number, body: unknown) =>
      new Response(JSON.stringify(body), { status });
    if (method === "POST" && url.pathname === "/sessions") {
      history = [];
      return respond(201, { id: "fake", seed: fakeSeed(history) });
    }
    if (method === "GET" && url.pathname === "/sessions/fake") {
      return respond(200, {
        seed: fakeSeed(history),
        arrows: [
          [1, 2],
          [1, 4],
          [3, 1],
          [5, 1],
        ],
        mutablePositions: [1],
      });
    }
    if (method === "POST" && url.pathname === "/sessions/fake/mutate") {
      const { position } = JSON.parse(String(init?.body)) as { position: number };
      if (position !== 1) {
        return respond(422, { error: "frozen" });
      }
      undoStack.push([...history]);
      history = [...history, position];
      const seed = fakeSeed(history);
      return respond(200, {
        seed,
        geometricExchange: true,
        newLabel: seed.positions[0]!.label,
      });
    }
    if (method === "POST" && url.pathname === "/sessions/fake/undo") {
      const previous = undoStack.pop();
      if (!previous) {
        return respond(409, { error: "undo stack is empty" });
      }
      history = previous;
      return respond(200, { seed: fakeSeed(history) });
    }
    if (url.pathname === "/sessions/fake/quasicommutation") {
      const a = Number(url.searchParams.get("a"));
      const b = Number(url.searchParams.get("b"));
      return respond(200, { lambda: fakeSeed(history).L[a - 1]![b - 1]! });
    }
    return respond(404, { error: "no route" });
  };
  return new QgrassClient("http://fake", fetchImpl);
}

async function started(log: string[] = []): Promise<ExplorerState> {
  const state = new ExplorerState(fakeClient(log));
  await state.start(2, 4);
  return state;
}

describe("ExplorerState", () => {
  it("starts with no undo and the rectangle labels", async () => {
    const state = await started();
    expect(state.canUndo).toBe(false);
    expect(state.view().info.seed.positions[0]!.label).toEqual([1, 3]);
  });

  it("click-mutates and records the badge", async () => {
    const state = await started();
    await state.clickVertex(1);
    expect(state.badge).toEqual({ position: 1, from: [1, 3], to: [2, 4] });
    expect(state.view().info.seed.positions[0]!.label).toEqual([2, 4]);
    expect(state.canUndo).toBe(true);
  });

  it("clicking a frozen vertex selects instead of mutating", async () => {
    const log: string[] = [];
    const state = await started(log);
    await state.clickVertex(3);
    expect(state.selected).toEqual([3]);
    expect(log.filter((line) => line.includes("/mutate"))).toHaveLength(0);
  });

  it("undo restores the previous payload and clears the badge", async () => {
    const state = await started();
    await state.clickVertex(1);
    await state.undo();
    expect(state.badge).toBeNull();
    expect(state.view().info.seed.positions[0]!.label).toEqual([1, 3]);
    expect(state.canUndo).toBe(false);
  });

  it("undo is refused when the history is empty", async () => {
    const state = await started();
    await expect(state.undo()).rejects.toThrow("undo is disabled");
  });

  it("preview does not change the session until committed", async () => {
    const state = await started();
    const preview = await state.previewMutation(1);
    expect(preview.response.newLabel).toEqual([2, 4]);
    // session is untouched: refetching shows the original seed
    await state.clickVertex(3); // selection only, forces no mutation
    expect(state.view().info.seed.history).toEqual([]);
    // committing now performs the real mutation
    await state.commitPreview();
    expect(state.view().info.seed.history).toEqual([1]);
    expect(state.view().info.seed.positions[0]!.label).toEqual([2, 4]);
  });

  it("rejects overlapping requests", async () => {
    const state = await started();
    const first = state.clickVertex(1);
    await expect(state.clickVertex(1)).rejects.toThrow("already in flight");
    await first;
  });

  it("lambda panel values come from the payload", async () => {
    const state = await started();
    const lambda = await state.lambdaOf(2, 4);
    expect(lambda).toBe(2);
  });
});
