"""Typed notification stream between the game engine and a UI.

The stream is the only channel crossing task boundaries in this package:
the engine and its background solver produce messages, a single UI loop
consumes them. Each message carries a kind plus a display severity so the
consumer never needs shared state to pick a color.
"""

from __future__ import annotations

import threading
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .board import PuzzleError


class NotificationKind(Enum):
    READY_TO_PLAY = "ReadyToPlay"
    SOLVING = "Solving"
    CORRECT_MOVE = "CorrectMove"
    WRONG_MOVE = "WrongMove"
    ILLEGAL_MOVE = "IllegalMove"
    ALREADY_SOLVED = "AlreadySolved"
    GAME_COMPLETE = "GameComplete"
    WAIT_FOR_SOLVER = "WaitForSolver"
    QUIT = "Quit"


class Severity(Enum):
    INFO = "Info"
    SUCCESS = "Success"
    WARNING = "Warning"


# Fixed kind -> severity mapping; positive events render green, busy states
# yellow, everything else in the default color.
SEVERITY_FOR_KIND = {
    NotificationKind.READY_TO_PLAY: Severity.SUCCESS,
    NotificationKind.CORRECT_MOVE: Severity.SUCCESS,
    NotificationKind.GAME_COMPLETE: Severity.SUCCESS,
    NotificationKind.SOLVING: Severity.WARNING,
    NotificationKind.WAIT_FOR_SOLVER: Severity.WARNING,
    NotificationKind.WRONG_MOVE: Severity.INFO,
    NotificationKind.ILLEGAL_MOVE: Severity.INFO,
    NotificationKind.ALREADY_SOLVED: Severity.INFO,
    NotificationKind.QUIT: Severity.INFO,
}

# Display texts are configuration, not contract; tests assert kinds.
DEFAULT_TEXTS = {
    NotificationKind.READY_TO_PLAY: "Ready to play",
    NotificationKind.SOLVING: "Solving the board...",
    NotificationKind.CORRECT_MOVE: "Correct move",
    NotificationKind.WRONG_MOVE: "Wrong move, re-solving",
    NotificationKind.ILLEGAL_MOVE: "Can't move that way",
    NotificationKind.ALREADY_SOLVED: "Puzzle already solved",
    NotificationKind.GAME_COMPLETE: "You win!",
    NotificationKind.WAIT_FOR_SOLVER: "Wait: solver is busy",
    NotificationKind.QUIT: "Goodbye",
}


@dataclass(frozen=True)
class Notification:
    kind: NotificationKind
    text: str
    severity: Severity

    @classmethod
    def of(cls, kind: NotificationKind, text: str | None = None) -> "Notification":
        """Build a notification with the fixed severity and default text."""
        return cls(kind, DEFAULT_TEXTS[kind] if text is None else text, SEVERITY_FOR_KIND[kind])


class StreamClosedError(PuzzleError):
    """Send attempted on a closed stream; producers treat this as shutdown."""


class StreamOverflowError(PuzzleError):
    """More in-flight messages than the stream allows; a stalled consumer."""


class NotificationStream:
    """Bounded FIFO conduit, multiple producers and exactly one consumer.

    Sends after close are rejected; messages already queued are still
    delivered, then the consumer observes end-of-stream. Overflow past the
    capacity is treated as a logic error rather than silently buffering,
    since normal gameplay keeps only a handful of messages in flight.
    """

    def __init__(self, capacity: int = 64):
        self._items: deque[Notification] = deque()
        self._capacity = capacity
        self._closed = False
        self._cond = threading.Condition()

    @property
    def closed(self) -> bool:
        with self._cond:
            return self._closed

    def pending(self) -> int:
        """Number of sent messages not yet received."""
        with self._cond:
            return len(self._items)

    def send(self, notification: Notification) -> None:
        with self._cond:
            if self._closed:
                raise StreamClosedError("notification stream is closed")
            if len(self._items) >= self._capacity:
                raise StreamOverflowError(f"more than {self._capacity} undelivered notifications")
            self._items.append(notification)
            self._cond.notify()

    def close(self) -> None:
        """Close the stream; idempotent. Queued messages remain receivable."""
        with self._cond:
            self._closed = True
            self._cond.notify_all()

    def receive(self) -> Notification | None:
        """Next message in send order, or None once closed and drained."""
        with self._cond:
            while not self._items and not self._closed:
                self._cond.wait()
            if self._items:
                return self._items.popleft()
            return None


def receive_loop(stream: NotificationStream, handler: Callable[[Notification], None]) -> None:
    """Consume the stream until end-of-stream, calling handler per message."""
    while (notification := stream.receive()) is not None:
        handler(notification)
