"""Solvability scanning via inversion parity.

Exactly half of all permutations of a board can reach the solved
arrangement; the other half are stuck in the second parity class. An odd
width board is solvable iff its inversion count is even. On even widths the
blank's row also matters (the classic fifteen-puzzle criterion): inversions
plus the blank's row counted from the bottom (1-based) must be odd.
"""

from __future__ import annotations

from .board import Board


def count_inversions(board: Board) -> int:
    """Number of tile pairs appearing in the wrong relative order.

    A pair (i, j) with i < j counts when cells[i] > cells[j]; pairs involving
    the blank never count. Plain O(n^2) pair scan; value 1 is skipped as the
    outer element since nothing is smaller than it.
    """
    cells = board.cells
    n = len(cells)
    inversions = 0
    for i in range(n - 1):
        left = cells[i]
        if left != 0 and left != 1:
            for j in range(i + 1, n):
                right = cells[j]
                if right != 0 and left > right:
                    inversions += 1
    return inversions


def is_legal(board: Board) -> tuple[bool, int]:
    """Decide solvability; returns (solvable, blank index or -1).

    The second value is the blank's cell index when the board is solvable
    and -1 otherwise.
    """
    inversions = count_inversions(board)
    if board.width % 2 == 1:
        solvable = inversions % 2 == 0
    else:
        row_from_bottom = board.width - board.blank_index // board.width
        solvable = (inversions + row_from_bottom) % 2 == 1
    if solvable:
        return True, board.blank_index
    return False, -1
