"""Sliding-puzzle board: representation, move legality, and text serialization.

A board is an n x n grid of tile values where 0 marks the blank cell.
Moves are named after the direction the BLANK travels (not the tile being
pushed); ``Move.UP`` means the blank swaps with the tile above it.
"""

from __future__ import annotations

import math
from enum import Enum
from functools import lru_cache
from typing import Iterable


class PuzzleError(Exception):
    """Base class for all errors raised by this package."""


class InvalidDimensionError(PuzzleError):
    """Board width is too small to form a playable grid."""


class IllegalMoveError(PuzzleError):
    """The blank cannot travel in the requested direction."""

    def __init__(self, move: "Move", blank_index: int):
        super().__init__(f"blank at index {blank_index} cannot move {move.name}")
        self.move = move
        self.blank_index = blank_index


class BoardParseError(PuzzleError):
    """Board text does not describe a valid permutation grid."""


class Move(Enum):
    """Direction the blank tile travels. Serialized as a single letter."""

    UP = "U"
    DOWN = "D"
    LEFT = "L"
    RIGHT = "R"

    @property
    def letter(self) -> str:
        return self.value

    @property
    def opposite(self) -> "Move":
        return _OPPOSITE[self]

    @classmethod
    def from_letter(cls, letter: str) -> "Move":
        try:
            return cls(letter.strip().upper())
        except ValueError:
            raise PuzzleError(f"unknown move letter {letter!r} (expected U, D, L or R)") from None


_OPPOSITE = {
    Move.UP: Move.DOWN,
    Move.DOWN: Move.UP,
    Move.LEFT: Move.RIGHT,
    Move.RIGHT: Move.LEFT,
}


class Board:
    """Immutable n x n tile arrangement; usable as a dictionary key.

    ``cells`` is a row-major tuple holding a permutation of 0..n*n-1, with 0
    as the blank. Equality and hashing consider (width, cells) only; the
    blank position is cached for O(1) neighbor generation.

    The constructor trusts its arguments (hot path). Use ``Board.from_cells``
    or ``parse_board`` for unchecked input.
    """

    __slots__ = ("width", "cells", "blank_index", "_hash")

    def __init__(self, width: int, cells: tuple[int, ...], blank_index: int | None = None):
        self.width = width
        self.cells = cells
        self.blank_index = cells.index(0) if blank_index is None else blank_index
        self._hash = hash((width, cells))

    @classmethod
    def from_cells(cls, cells: Iterable[int], width: int | None = None) -> "Board":
        """Build a board from a cell sequence, validating every invariant."""
        values = tuple(cells)
        if width is None:
            side = math.isqrt(len(values))
            if side * side != len(values):
                raise BoardParseError(f"{len(values)} cells do not form a square grid")
            width = side
        if width < 2:
            raise InvalidDimensionError(f"board width must be at least 2, got {width}")
        if len(values) != width * width:
            raise BoardParseError(f"expected {width * width} cells for width {width}, got {len(values)}")
        seen = set()
        for v in values:
            if not 0 <= v < len(values):
                raise BoardParseError(f"tile value {v} out of range 0..{len(values) - 1}")
            if v in seen:
                raise BoardParseError(f"duplicate tile value {v}")
            seen.add(v)
        return cls(width, values)

    def _swapped(self, other_index: int) -> "Board":
        # Successor with the blank moved to other_index; trusted internal path.
        cells = list(self.cells)
        cells[self.blank_index] = cells[other_index]
        cells[other_index] = 0
        return Board(self.width, tuple(cells), other_index)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Board):
            return NotImplemented
        return self.width == other.width and self.cells == other.cells

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Board({render_board_text(self)})"


def goal_board(width: int) -> Board:
    """The solved arrangement: 1..n*n-1 in order with the blank last."""
    if width < 2:
        raise InvalidDimensionError(f"board width must be at least 2, got {width}")
    n = width * width
    return Board(width, tuple(range(1, n)) + (0,), n - 1)


@lru_cache(maxsize=None)
def _neighbor_table(width: int) -> tuple[tuple[tuple[Move, int], ...], ...]:
    # For each blank index, the (move, target index) pairs that stay on the
    # grid, in fixed U, D, L, R order so searches are deterministic.
    table = []
    for idx in range(width * width):
        row, col = divmod(idx, width)
        entries = []
        if row > 0:
            entries.append((Move.UP, idx - width))
        if row < width - 1:
            entries.append((Move.DOWN, idx + width))
        if col > 0:
            entries.append((Move.LEFT, idx - 1))
        if col < width - 1:
            entries.append((Move.RIGHT, idx + 1))
        table.append(tuple(entries))
    return tuple(table)


def legal_moves(board: Board) -> set[Move]:
    """Directions the blank can travel without leaving the grid (2 to 4)."""
    return {move for move, _ in _neighbor_table(board.width)[board.blank_index]}


def apply_move(board: Board, move: Move) -> Board:
    """Return a new board with the blank moved one cell in ``move`` direction.

    The input board is never modified. Raises IllegalMoveError when the blank
    would leave the grid.
    """
    for m, target in _neighbor_table(board.width)[board.blank_index]:
        if m is move:
            return board._swapped(target)
    raise IllegalMoveError(move, board.blank_index)


def neighbors(board: Board) -> list[tuple[Move, Board]]:
    """All (move, successor) pairs, in deterministic U, D, L, R order."""
    return [(move, board._swapped(target)) for move, target in _neighbor_table(board.width)[board.blank_index]]


def render_board_text(board: Board) -> str:
    """Canonical text form: comma-separated row-major values, no whitespace."""
    return ",".join(map(str, board.cells))


def parse_board(text: str) -> Board:
    """Parse the comma-separated text form back into a board.

    Round-trips with render_board_text. Raises BoardParseError naming the
    offending token or violated property.
    """
    tokens = text.split(",")
    values = []
    for token in tokens:
        try:
            values.append(int(token))
        except ValueError:
            raise BoardParseError(f"not an integer tile value: {token.strip()!r}") from None
    if len(values) < 4:
        raise BoardParseError(f"need at least 4 cells, got {len(values)}")
    return Board.from_cells(values)


def parse_moves(text: str) -> list[Move]:
    """Parse 'U,L,D' or 'ULD' style move scripts."""
    cleaned = text.replace(",", " ").split()
    letters = [c for chunk in cleaned for c in chunk]
    return [Move.from_letter(c) for c in letters]
