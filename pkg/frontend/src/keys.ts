/**
 * Raw keyboard input to game intents. Arrow keys move the blank in the
 * pressed direction; q, Esc, and Ctrl-C quit; everything else is ignored.
 */

import type { Command } from "./protocol.js";

const ARROWS: Record<string, Command> = {
  A: "U", // ESC [ A
  B: "D",
  C: "R",
  D: "L",
};

export function mapKey(input: string): Command | null {
  if (input === "q" || input === "Q" || input === "\x1b" || input === "\x03") {
    return "Q";
  }
  if (input.startsWith("\x1b[") && input.length === 3) {
    return ARROWS[input[2]] ?? null;
  }
  return null;
}
