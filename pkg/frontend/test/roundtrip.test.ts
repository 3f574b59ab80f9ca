/**
 * Scripted end-to-end review session against the real service: accept
 * all 63 fixture candidates through the keyboard controller, confirm
 * zero pending, then check that classifying the UI-written log equals
 * the primary pipeline's records.
 */
import { spawn, spawnSync } from "node:child_process";
import { mkdtempSync, readFileSync } from "node:fs";
import { createServer } from "node:net";
import { tmpdir } from "node:os";
import { dirname, join, resolve } from "node:path";
import { fileURLToPath } from "node:url";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { ReviewController } from "../src/controller.js";

const ROOT = resolve(dirname(fileURLToPath(import.meta.url)), "..", "..");
const FIXTURES = join(ROOT, "fixtures");
const PYTHON = process.env.PYTHON ?? "python3";

let proc: ReturnType<typeof spawn> | null = null;
let base = "";
let work = "";
let uiLog = "";

function freePort(): Promise<number> {
  return new Promise((resolvePort, reject) => {
    const server = createServer();
    server.listen(0, "127.0.0.1", () => {
      const address = server.address();
      if (address && typeof address === "object") {
        const port = address.port;
        server.close(() => resolvePort(port));
      } else {
        reject(new Error("no port"));
      }
    });
  });
}

async function waitReady(url: string, timeoutMs = 30000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  for (;;) {
    try {
      await fetch(`${url}/api/plan`);
      return;
    } catch {
      if (Date.now() > deadline) throw new Error("service did not come up");
      await new Promise((r) => setTimeout(r, 150));
    }
  }
}

function runCli(args: string[]): void {
  const result = spawnSync(PYTHON, ["-m", "neologia.cli", ...args], {
    cwd: ROOT,
    encoding: "utf-8",
  });
  if (result.status !== 0) {
    throw new Error(`cli ${args[0]} failed: ${result.stderr}`);
  }
}

beforeAll(async () => {
  work = mkdtempSync(join(tmpdir(), "review-ui-"));
  uiLog = join(work, "ui-decisions.jsonl");
  const port = await freePort();
  base = `http://127.0.0.1:${port}`;
  proc = spawn(
    PYTHON,
    [
      "-m", "neologia.cli", "serve",
      "--plan", join(FIXTURES, "plan17_review.json"),
      "--log", uiLog,
      "--lexicon", join(FIXTURES, "oed-mini.jsonl"),
      "--corpus", join(FIXTURES, "ceec17.jsonl"),
      "--bind", `127.0.0.1:${port}`,
    ],
    { cwd: ROOT, stdio: "ignore" },
  );
  await waitReady(base);
}, 60000);

afterAll(() => {
  proc?.kill("SIGKILL");
});

describe("full review session over the live service", () => {
  it("accepts all 63 candidates by keyboard and matches the pipeline", async () => {
    const api = new ApiClient(base);
    const controller = new ReviewController(api, "ui");
    await controller.load();
    expect(controller.queue.items).toHaveLength(63);
    expect(controller.progress?.totals.pending).toBe(63);

    let guard = 0;
    while (!controller.done && guard < 100) {
      await controller.handleKey("1");
      expect(controller.notice?.kind).not.toBe("error");
      guard += 1;
    }
    expect(guard).toBe(63);

    const progress = await api.progress();
    expect(progress.totals.pending).toBe(0);
    expect(progress.totals.accepted).toBe(63);

    // classify from the UI-written log and from the pre-recorded log
    const uiRecords = join(work, "ui-records.jsonl");
    runCli([
      "classify",
      "--plan", join(FIXTURES, "plan17_review.json"),
      "--log", uiLog,
      "--lexicon", join(FIXTURES, "oed-mini.jsonl"),
      "--corpus", join(FIXTURES, "ceec17.jsonl"),
      "--window", "40",
      "--out", uiRecords,
    ]);
    const index = join(work, "index17");
    const plan = join(work, "plan-all.json");
    const pipelineRecords = join(work, "pipeline-records.jsonl");
    runCli(["ingest", join(FIXTURES, "ceec17.jsonl"), "--period", "1640:1660", "--out", index]);
    runCli([
      "sample", "--corpus", index, "--period", "1640:1660",
      "--target-words", "2000000", "--seed", "42", "--out", plan,
    ]);
    runCli([
      "classify", "--plan", plan,
      "--log", join(FIXTURES, "decisions17.jsonl"),
      "--lexicon", join(FIXTURES, "oed-mini.jsonl"),
      "--corpus", index, "--window", "40", "--out", pipelineRecords,
    ]);

    const parse = (path: string) =>
      readFileSync(path, "utf-8")
        .trim()
        .split("\n")
        .map((line) => JSON.parse(line) as Record<string, unknown>);
    const fromUi = parse(uiRecords);
    const fromPipeline = parse(pipelineRecords);
    expect(fromUi).toHaveLength(53);
    expect(fromUi).toEqual(fromPipeline);
  }, 120000);
});
