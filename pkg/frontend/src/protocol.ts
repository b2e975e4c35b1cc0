/**
 * Wire protocol spoken by `puzzle8 play --interactive`: one JSON object per
 * line on stdout, one move letter (or Q) per line on stdin.
 */

export type Phase = "Solving" | "Ready" | "Complete" | "Quit";
export type Severity = "Info" | "Success" | "Warning";

export interface SnapshotEvent {
  event: "snapshot";
  board: string; // comma-separated row-major cells, 0 is the blank
  phase: Phase;
  score: number;
  totalMoves: number;
  optimalRemaining: number;
  seed?: number;
}

export interface NotificationEvent {
  event: "notification";
  kind: string;
  text: string;
  severity: Severity;
}

export interface EndEvent {
  event: "end";
}

export type EngineEvent = SnapshotEvent | NotificationEvent | EndEvent;

export type MoveCommand = "U" | "D" | "L" | "R";
export type Command = MoveCommand | "Q";

/** Parse one protocol line; returns null for anything unrecognizable. */
export function parseEvent(line: string): EngineEvent | null {
  const trimmed = line.trim();
  if (trimmed === "") {
    return null;
  }
  let value: unknown;
  try {
    value = JSON.parse(trimmed);
  } catch {
    return null;
  }
  if (typeof value !== "object" || value === null) {
    return null;
  }
  const event = (value as { event?: unknown }).event;
  if (event === "snapshot" || event === "notification" || event === "end") {
    return value as EngineEvent;
  }
  return null;
}

/** Splits a byte stream into complete lines, buffering partial tails. */
export class LineSplitter {
  private tail = "";

  push(chunk: string): string[] {
    const pieces = (this.tail + chunk).split("\n");
    this.tail = pieces.pop() ?? "";
    return pieces;
  }
}

/** Cells of a board string, row-major. Throws on malformed input. */
export function boardCells(board: string): number[] {
  const cells = board.split(",").map((token) => Number.parseInt(token, 10));
  if (cells.some((value) => Number.isNaN(value))) {
    throw new Error(`malformed board: ${board}`);
  }
  return cells;
}
