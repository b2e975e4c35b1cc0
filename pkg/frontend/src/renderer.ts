/**
 * Pure frame construction: snapshot + latest notification in, lines out.
 * Rendering twice from the same inputs yields the same frame, so the screen
 * can be repainted on every event or poll tick without extra state.
 */

import { boardCells, type NotificationEvent, type SnapshotEvent } from "./protocol.js";

export interface RenderOptions {
  columns: number;
  rows: number;
  color: boolean;
}

export const MIN_COLUMNS = 24;
export const MIN_ROWS = 12;

const RESET = "\x1b[0m";
const GREEN = "\x1b[32m";
const YELLOW = "\x1b[33m";

function colorFor(severity: NotificationEvent["severity"]): string | null {
  if (severity === "Success") {
    return GREEN;
  }
  if (severity === "Warning") {
    return YELLOW;
  }
  return null;
}

function gridLines(board: string): string[] {
  const cells = boardCells(board);
  const width = Math.round(Math.sqrt(cells.length));
  const bar = "─".repeat(3);
  const top = `┌${Array(width).fill(bar).join("┬")}┐`;
  const mid = `├${Array(width).fill(bar).join("┼")}┤`;
  const bottom = `└${Array(width).fill(bar).join("┴")}┘`;

  const lines = [top];
  for (let row = 0; row < width; row++) {
    const tiles = cells
      .slice(row * width, (row + 1) * width)
      .map((value) => (value === 0 ? "   " : ` ${value} `));
    lines.push(`│${tiles.join("│")}│`);
    lines.push(row < width - 1 ? mid : bottom);
  }
  return lines;
}

export function renderFrame(
  snapshot: SnapshotEvent,
  notification: NotificationEvent | null,
  options: RenderOptions,
): string[] {
  if (options.columns < MIN_COLUMNS || options.rows < MIN_ROWS) {
    return [`terminal too small: need at least ${MIN_COLUMNS}x${MIN_ROWS}`];
  }

  const header = snapshot.seed === undefined ? "8-puzzle" : `8-puzzle  seed ${snapshot.seed}`;
  const remaining = snapshot.phase === "Solving" ? "?" : String(snapshot.optimalRemaining);
  const status = `score ${snapshot.score.toFixed(2)}  left ${remaining}`;

  const lines = [header, ...gridLines(snapshot.board), status];
  if (notification !== null) {
    const color = options.color ? colorFor(notification.severity) : null;
    lines.push(color === null ? notification.text : `${color}${notification.text}${RESET}`);
  }
  return lines;
}
