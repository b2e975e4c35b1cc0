"""Game scoring: accumulated correct-move score divided by total moves."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ScoreState:
    """Running score of a game in progress.

    ``acs`` accumulates +1 per correct move and -1 per incorrect move, so it
    stays within [-total_moves, total_moves] and shares total_moves' parity.
    A fresh game starts at (0, 0).
    """

    acs: int = 0
    total_moves: int = 0

    def record_move(self, correct: bool) -> "ScoreState":
        """State after one more move; +1 for correct, -1 for incorrect."""
        return ScoreState(self.acs + (1 if correct else -1), self.total_moves + 1)

    @property
    def current_score(self) -> float:
        """acs / total moves, in [-1, 1]; defined as 0 before the first move."""
        if self.total_moves == 0:
            return 0.0
        return self.acs / self.total_moves
