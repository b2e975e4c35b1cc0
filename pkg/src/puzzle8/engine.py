"""Game session orchestration: boards, solver bot, scoring, notifications.

A session owns all mutable game state and serializes every transition
behind one lock, so player input, quit requests, and background solver
results can arrive from different threads. The solver never touches the
session directly: it hands its result back tagged with the board it
solved, and results for a board the session has already left are dropped.

The UI side stays a pure view. It consumes the notification stream and
pulls immutable snapshots for rendering; it never mutates the session.

Solver runs are pluggable through a scheduler callable so tests and the
scripted CLI can use a synchronous or manually stepped solver instead of
real threads.
"""

from __future__ import annotations

import threading
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

from .board import Board, IllegalMoveError, Move, apply_move, goal_board
from .generator import generate_solvable
from .notification import Notification, NotificationKind, NotificationStream, receive_loop
from .score import ScoreState
from .solver import SolveResult, solve

# Receives a board to solve and a callback taking (solved board, result).
SolveScheduler = Callable[[Board, Callable[[Board, SolveResult], None]], None]


def threaded_scheduler(board: Board, deliver: Callable[[Board, SolveResult], None]) -> None:
    """Default scheduler: solve on a background thread."""
    threading.Thread(target=lambda: deliver(board, solve(board)), daemon=True).start()


def synchronous_scheduler(board: Board, deliver: Callable[[Board, SolveResult], None]) -> None:
    """Solve inline before returning; makes scripted games deterministic."""
    deliver(board, solve(board))


class Phase(Enum):
    SOLVING = "Solving"
    READY = "Ready"
    COMPLETE = "Complete"
    QUIT = "Quit"


@dataclass(frozen=True)
class Snapshot:
    """Immutable view of a session for rendering."""

    board: Board
    phase: Phase
    score: ScoreState
    optimal_remaining: int


class GameSession:
    """Live game: current board, score, solver status, notification stream.

    On creation the session generates a solvable start board, announces it
    is solving, and hands the board to the background solver; play opens up
    once the solver's path is installed. A move is correct exactly when it
    lands on the head of that path. Any other legal move triggers a fresh
    background solve for the new position, during which further input is
    rejected with a wait message.

    With ``permissive_scoring`` enabled, an off-path move is scored only
    after the re-solve finishes: it counts as correct when it still reduced
    the true remaining distance by one (several optimal moves can exist).
    """

    def __init__(
        self,
        seed: int = 0,
        *,
        width: int = 3,
        scheduler: SolveScheduler | None = None,
        start_board: Board | None = None,
        permissive_scoring: bool = False,
        stream_capacity: int = 64,
    ):
        self.seed = seed
        self.width = width
        self.notifier = NotificationStream(stream_capacity)
        self._scheduler: SolveScheduler = scheduler if scheduler is not None else threaded_scheduler
        self._permissive = permissive_scoring
        self._lock = threading.RLock()
        self._goal = goal_board(width)
        self._board = start_board if start_board is not None else generate_solvable(width, seed)
        self._score = ScoreState()
        self._solver_path: deque[Board] = deque()
        self._optimal_remaining = 0
        self._pending_baseline: int | None = None

        if self._board == self._goal:
            # Only reachable with an injected board; generated starts never
            # equal the goal.
            self._phase = Phase.COMPLETE
            self._notify(NotificationKind.ALREADY_SOLVED)
            self.notifier.close()
            return
        self._phase = Phase.SOLVING
        self._notify(NotificationKind.SOLVING)
        self._scheduler(self._board, self._deliver_solve_result)

    def snapshot(self) -> Snapshot:
        with self._lock:
            return Snapshot(self._board, self._phase, self._score, self._optimal_remaining)

    def on_player_move(self, move: Move) -> None:
        """Apply one player input; every phase accepts the call safely."""
        with self._lock:
            if self._phase in (Phase.COMPLETE, Phase.QUIT):
                return
            if self._phase is Phase.SOLVING:
                self._notify(NotificationKind.WAIT_FOR_SOLVER)
                return
            try:
                moved = apply_move(self._board, move)
            except IllegalMoveError:
                self._notify(NotificationKind.ILLEGAL_MOVE)
                return

            if moved == self._solver_path[0]:
                self._board = moved
                self._solver_path.popleft()
                self._optimal_remaining -= 1
                self._score = self._score.record_move(True)
                self._notify(NotificationKind.CORRECT_MOVE)
                if moved == self._goal:
                    self._phase = Phase.COMPLETE
                    self._notify(NotificationKind.GAME_COMPLETE)
                    self.notifier.close()
                return

            # Off the solver's path: the new position needs a fresh solve.
            self._board = moved
            self._phase = Phase.SOLVING
            if self._permissive:
                self._pending_baseline = self._optimal_remaining
                self._notify(NotificationKind.SOLVING)
            else:
                self._score = self._score.record_move(False)
                self._notify(NotificationKind.WRONG_MOVE)
            self._scheduler(self._board, self._deliver_solve_result)

    def on_quit(self) -> None:
        """Terminate the session; idempotent, safe in any phase."""
        with self._lock:
            if self._phase is Phase.QUIT:
                return
            already_closed = self.notifier.closed
            self._phase = Phase.QUIT
            if not already_closed:
                self._notify(NotificationKind.QUIT)
                self.notifier.close()

    def _deliver_solve_result(self, solved_board: Board, result: SolveResult) -> None:
        with self._lock:
            # Stale guard: the session may have quit, or the result may be
            # for a board the game already moved away from.
            if self._phase is not Phase.SOLVING or solved_board != self._board:
                return
            if self._pending_baseline is not None:
                correct = len(result.path) == self._pending_baseline - 1
                self._score = self._score.record_move(correct)
                self._notify(NotificationKind.CORRECT_MOVE if correct else NotificationKind.WRONG_MOVE)
                self._pending_baseline = None
            self._solver_path = deque(result.path)
            self._optimal_remaining = len(result.path)
            self._phase = Phase.READY
            self._notify(NotificationKind.READY_TO_PLAY)

    def _notify(self, kind: NotificationKind) -> None:
        self.notifier.send(Notification.of(kind))


@dataclass(frozen=True)
class ScriptedGameResult:
    """Outcome of a headless scripted game."""

    notifications: tuple[Notification, ...]
    snapshot: Snapshot


def run_scripted_game(
    moves: Sequence[Move],
    seed: int = 0,
    *,
    permissive_scoring: bool = False,
    start_board: Board | None = None,
) -> ScriptedGameResult:
    """Play a whole game without a UI, with an inline (blocking) solver.

    Feeds the move script, then quits. The returned notification sequence is
    deterministic for a fixed seed and script.
    """
    session = GameSession(
        seed,
        scheduler=synchronous_scheduler,
        permissive_scoring=permissive_scoring,
        start_board=start_board,
    )
    received: list[Notification] = []
    consumer = threading.Thread(target=receive_loop, args=(session.notifier, received.append))
    consumer.start()
    for move in moves:
        session.on_player_move(move)
    if session.snapshot().phase is not Phase.COMPLETE:
        session.on_quit()
    consumer.join()
    return ScriptedGameResult(tuple(received), session.snapshot())
