// Scripted end-to-end session against the real qgrass service on Gr(2,4):
// create, click-mutate (badge {1,3} -> {2,4}), inspect the Laurent
// expansion, undo, and confirm every displayed lambda equals the service's
// L entry.  Runs headlessly through the same client the browser UI uses.

import { spawn, type ChildProcess } from "node:child_process";
import path from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { QgrassClient } from "../src/api.js";
import { lambdaRuleText, renderSeedSVG } from "../src/render.js";
import { ExplorerState } from "../src/state.js";

const REPO_ROOT = path.resolve(__dirname, "..", "..");

let service: ChildProcess;
let baseUrl: string;

beforeAll(async () => {
  service = spawn("python3", ["-u", "-m", "qgrass", "serve", "--port", "0"], {
    cwd: REPO_ROOT,
    env: { ...process.env, PYTHONPATH: path.join(REPO_ROOT, "src") },
    stdio: ["ignore", "pipe", "inherit"],
  });
  baseUrl = await new Promise<string>((resolve, reject) => {
    const timer = setTimeout(() => reject(new Error("service did not start")), 15000);
    service.stdout!.on("data", (chunk: Buffer) => {
      const match = chunk.toString().match(/listening on (http:\/\/[\d.]+:\d+)/);
      if (match) {
        clearTimeout(timer);
        resolve(match[1]!);
      }
    });
    service.on("exit", (code) => reject(new Error(`service exited early: ${code}`)));
  });
}, 20000);

afterAll(() => {
  service?.kill();
});

describe("scripted Gr(2,4) session", () => {
  it("create, mutate, badge, expansion, undo, lambda agreement", async () => {
    const client = new QgrassClient(baseUrl);
    const state = new ExplorerState(client);

    await state.start(2, 4);
    const before = state.view();
    expect(before.info.seed.positions.map((p) => p.label)).toEqual([
      [1, 3],
      [1, 2],
      [2, 3],
      [3, 4],
      [1, 4],
    ]);
    expect(before.info.mutablePositions).toEqual([1]);
    expect(state.canUndo).toBe(false);

    // click the single mutable vertex: geometric exchange with badge
    await state.clickVertex(1);
    expect(state.badge).toEqual({ position: 1, from: [1, 3], to: [2, 4] });
    const svg = renderSeedSVG(state.view());
    expect(svg).toContain("{1,3} → {2,4} at position 1");
    expect(svg).toContain("{2,4}");

    // the mutated variable is the two-term quantum Laurent expansion
    const terms = await client.variable(state.sessionId!, 1);
    expect(terms).toEqual([
      { exponents: [-1, 0, 1, 0, 1], coeff: "u^0·(1)/(1)" },
      { exponents: [-1, 1, 0, 1, 0], coeff: "u^0·(1)/(1)" },
    ]);

    // undo restores the rectangle seed exactly
    await state.undo();
    expect(state.view().info.seed.positions[0]!.label).toEqual([1, 3]);
    expect(state.view().info.seed.history).toEqual([]);
    expect(state.canUndo).toBe(false);

    // every displayed lambda equals the service's L entry
    const seed = state.view().info.seed;
    for (let a = 1; a <= 5; a++) {
      for (let b = 1; b <= 5; b++) {
        const lambda = await state.lambdaOf(a, b);
        expect(lambda).toBe(seed.L[a - 1]![b - 1]!);
        state.selected = [a, b];
        if (a !== b) {
          expect(lambdaRuleText(state.view())).toBe(
            `X${a}·X${b} = q^${lambda} X${b}·X${a}`,
          );
        }
      }
    }
  }, 30000);

  it("mutating the same position twice restores the seed (deep equality)", async () => {
    const client = new QgrassClient(baseUrl);
    const created = await client.createSession(2, 4);
    const once = await client.mutate(created.id, 1);
    expect(once.geometricExchange).toBe(true);
    const twice = await client.mutate(created.id, 1);
    expect(twice.seed.positions).toEqual(created.seed.positions);
    expect(twice.seed.B).toEqual(created.seed.B);
    expect(twice.seed.L).toEqual(created.seed.L);
  });

  it("frozen positions surface as 422 for the toast", async () => {
    const client = new QgrassClient(baseUrl);
    const created = await client.createSession(2, 4);
    await expect(client.mutate(created.id, 2)).rejects.toMatchObject({
      status: 422,
    });
  });

  it("clicking around Gr(2,5) revisits exactly five label sets", async () => {
    const state = new ExplorerState(new QgrassClient(baseUrl));
    await state.start(2, 5);
    const labelSets = new Set<string>();
    const record = () => {
      const labels = state
        .view()
        .info.seed.positions.filter((p) => !p.frozen)
        .map((p) => JSON.stringify(p.label));
      labelSets.add([...labels].sort().join("|"));
    };
    record();
    // alternating the two mutable positions walks the pentagon
    for (let step = 0; step < 10; step++) {
      await state.clickVertex(1 + (step % 2));
      record();
    }
    expect(labelSets.size).toBe(5);
    // ...and ten alternating clicks return to the rectangle seed
    expect(state.view().info.seed.positions.map((p) => p.label)).toEqual([
      [1, 3],
      [1, 4],
      [1, 2],
      [2, 3],
      [3, 4],
      [4, 5],
      [1, 5],
    ]);
  }, 30000);
});
