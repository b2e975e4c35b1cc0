#!/usr/bin/env node
/** Interactive terminal front end for the puzzle8 engine. */

import { parseArgs } from "node:util";

import { App, type Screen } from "./app.js";
import { ProcessConnection, defaultEngineCommand } from "./engineClient.js";

function usage(): void {
  console.log("usage: puzzle8-tui [--seed N] [--no-color]");
  console.log("  arrows move the blank tile; q or Esc quits");
}

async function main(): Promise<void> {
  const { values } = parseArgs({
    options: {
      seed: { type: "string" },
      "no-color": { type: "boolean", default: false },
      help: { type: "boolean", default: false },
    },
  });
  if (values.help) {
    usage();
    return;
  }
  const seed = values.seed !== undefined ? Number.parseInt(values.seed, 10) : (Date.now() & 0x7fffffff);
  if (Number.isNaN(seed)) {
    usage();
    process.exitCode = 64;
    return;
  }

  const connection = new ProcessConnection(defaultEngineCommand(seed));
  const screen: Screen = {
    get columns() {
      return process.stdout.columns ?? 80;
    },
    get rows() {
      return process.stdout.rows ?? 24;
    },
    draw(lines: string[]) {
      process.stdout.write("\x1b[2J\x1b[H" + lines.join("\n") + "\n");
    },
  };
  const app = new App(connection, screen, {
    color: !values["no-color"] && Boolean(process.stdout.isTTY),
  });

  const rawMode = process.stdin.isTTY;
  if (rawMode) {
    process.stdin.setRawMode(true);
  }
  process.stdin.resume();
  process.stdin.setEncoding("utf8");
  process.stdin.on("data", (chunk: string) => app.handleKey(chunk));

  await app.run();

  if (rawMode) {
    process.stdin.setRawMode(false);
  }
  process.stdin.pause();
  connection.kill();
  process.stdout.write("\x1b[0m\n");
}

main().catch((error) => {
  console.error(error);
  process.exit(1);
});
