"""Random solvable starting boards, seeded for reproducible games."""

from __future__ import annotations

import random

from .board import Board, InvalidDimensionError, goal_board
from .scanner import is_legal


def generate_solvable(width: int, seed: int) -> Board:
    """Draw a uniformly random solvable board that is not already solved.

    Shuffles a fresh permutation and rescans until the scanner accepts it,
    so every game start exercises the solvability check. Deterministic for a
    fixed (width, seed) pair.
    """
    if width < 2:
        raise InvalidDimensionError(f"board width must be at least 2, got {width}")
    return draw_solvable(random.Random(seed), width)


def draw_solvable(rng: random.Random, width: int) -> Board:
    """One solvable non-goal board from an existing PRNG stream."""
    goal = goal_board(width)
    values = list(range(width * width))
    while True:
        rng.shuffle(values)
        board = Board(width, tuple(values))
        if board != goal and is_legal(board)[0]:
            return board
