import random
from itertools import permutations

from puzzle8 import (
    Board,
    apply_move,
    bfs_distance_oracle,
    count_inversions,
    goal_board,
    is_legal,
    legal_moves,
    parse_board,
)


def test_inversions_sorted_sequence():
    assert count_inversions(goal_board(3)) == 0


def test_inversions_single_swap():
    assert count_inversions(parse_board("2,1,3,4,5,6,7,8,0")) == 1


def test_inversions_reversed_board():
    # All C(8,2) pairs of the reversed non-blank sequence are inverted.
    assert count_inversions(parse_board("0,8,7,6,5,4,3,2,1")) == 28


def test_inversions_brute_force_agreement():
    def brute(cells):
        vals = [v for v in cells if v != 0]
        return sum(vals[i] > vals[j] for i in range(len(vals)) for j in range(i + 1, len(vals)))

    rng = random.Random(11)
    for _ in range(300):
        cells = list(range(9))
        rng.shuffle(cells)
        assert count_inversions(Board(3, tuple(cells))) == brute(cells)


def test_is_legal_goal():
    assert is_legal(goal_board(3)) == (True, 8)


def test_is_legal_single_swap_unsolvable():
    assert is_legal(parse_board("2,1,3,4,5,6,7,8,0")) == (False, -1)


def test_is_legal_adjacent_swap_unsolvable():
    assert is_legal(parse_board("1,2,3,4,5,6,8,7,0")) == (False, -1)


def test_blank_index_reported_only_when_solvable():
    rng = random.Random(5)
    for _ in range(500):
        cells = list(range(9))
        rng.shuffle(cells)
        b = Board(3, tuple(cells))
        solvable, blank = is_legal(b)
        assert blank == (b.blank_index if solvable else -1)


def test_moves_never_change_solvability():
    rng = random.Random(99)
    for _ in range(100):
        cells = list(range(9))
        rng.shuffle(cells)
        b = Board(3, tuple(cells))
        verdict = is_legal(b)[0]
        for _ in range(30):
            m = rng.choice(sorted(legal_moves(b), key=lambda mv: mv.letter))
            b = apply_move(b, m)
            assert is_legal(b)[0] == verdict


def test_2x2_exhaustive_against_reachability():
    reachable = bfs_distance_oracle(2)
    verdicts = [is_legal(Board(2, cells))[0] for cells in permutations(range(4))]
    assert sum(verdicts) == 12  # half of 4!
    for cells in permutations(range(4)):
        b = Board(2, cells)
        assert is_legal(b)[0] == (b in reachable)
