/**
 * Child-process transport to the engine's interactive protocol
 * (`puzzle8 play --interactive`): JSON events on stdout, letters on stdin.
 */

import { spawn, type ChildProcessByStdio } from "node:child_process";
import type { Readable, Writable } from "node:stream";

import { LineSplitter, parseEvent, type Command, type EngineEvent } from "./protocol.js";
import type { Connection } from "./app.js";

export interface EngineCommand {
  command: string;
  args: string[];
}

export function defaultEngineCommand(seed: number): EngineCommand {
  const python = process.env.PUZZLE8_PYTHON ?? "python3";
  return { command: python, args: ["-m", "puzzle8", "play", "--interactive", "--seed", String(seed)] };
}

export class ProcessConnection implements Connection {
  private readonly child: ChildProcessByStdio<Writable, Readable, null>;
  private readonly eventHandlers: Array<(event: EngineEvent) => void> = [];
  private readonly closeHandlers: Array<() => void> = [];

  constructor(engine: EngineCommand) {
    this.child = spawn(engine.command, engine.args, { stdio: ["pipe", "pipe", "inherit"] });
    const splitter = new LineSplitter();
    this.child.stdout.setEncoding("utf8");
    this.child.stdout.on("data", (chunk: string) => {
      for (const line of splitter.push(chunk)) {
        const event = parseEvent(line);
        if (event !== null) {
          for (const handler of this.eventHandlers) {
            handler(event);
          }
        }
      }
    });
    this.child.on("close", () => {
      for (const handler of this.closeHandlers) {
        handler();
      }
    });
  }

  send(command: Command): void {
    if (this.child.stdin.writable) {
      this.child.stdin.write(command + "\n");
    }
  }

  onEvent(handler: (event: EngineEvent) => void): void {
    this.eventHandlers.push(handler);
  }

  onClose(handler: () => void): void {
    this.closeHandlers.push(handler);
  }

  kill(): void {
    this.child.kill();
  }
}
