/**
 * The UI loop: consume engine events, repaint, forward key intents.
 *
 * The app owns no game state beyond the last snapshot and notification it
 * received; every intent goes to the engine, never applied locally. It
 * repaints on each event and on a steady poll tick, and finishes as soon as
 * the engine stream ends.
 */

import { mapKey } from "./keys.js";
import { renderFrame } from "./renderer.js";
import type { Command, EngineEvent, NotificationEvent, SnapshotEvent } from "./protocol.js";

export interface Connection {
  send(command: Command): void;
  onEvent(handler: (event: EngineEvent) => void): void;
  onClose(handler: () => void): void;
}

export interface Screen {
  readonly columns: number;
  readonly rows: number;
  draw(lines: string[]): void;
}

export interface AppOptions {
  color: boolean;
  pollMs?: number;
}

export class App {
  private snapshot: SnapshotEvent | null = null;
  private notification: NotificationEvent | null = null;
  private finished: (() => void) | null = null;
  private timer: NodeJS.Timeout | null = null;

  constructor(
    private readonly connection: Connection,
    private readonly screen: Screen,
    private readonly options: AppOptions,
  ) {}

  /** Runs until the engine stream ends or the connection closes. */
  run(): Promise<void> {
    return new Promise((resolve) => {
      this.finished = resolve;
      this.connection.onEvent((event) => this.handleEvent(event));
      this.connection.onClose(() => this.finish());
      this.timer = setInterval(() => this.render(), this.options.pollMs ?? 100);
      this.render();
    });
  }

  handleKey(input: string): void {
    const command = mapKey(input);
    if (command !== null) {
      this.connection.send(command);
    }
  }

  private handleEvent(event: EngineEvent): void {
    if (event.event === "snapshot") {
      this.snapshot = event;
    } else if (event.event === "notification") {
      this.notification = event;
    } else {
      this.finish();
      return;
    }
    this.render();
  }

  private render(): void {
    if (this.snapshot === null) {
      this.screen.draw(["waiting for engine..."]);
      return;
    }
    this.screen.draw(
      renderFrame(this.snapshot, this.notification, {
        columns: this.screen.columns,
        rows: this.screen.rows,
        color: this.options.color,
      }),
    );
  }

  private finish(): void {
    if (this.timer !== null) {
      clearInterval(this.timer);
      this.timer = null;
    }
    if (this.finished !== null) {
      const resolve = this.finished;
      this.finished = null;
      resolve();
    }
  }
}
