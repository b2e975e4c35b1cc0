import random

import pytest

from puzzle8 import (
    Board,
    BoardParseError,
    IllegalMoveError,
    InvalidDimensionError,
    Move,
    apply_move,
    goal_board,
    legal_moves,
    neighbors,
    parse_board,
    parse_moves,
    render_board_text,
)


def test_goal_board_3x3():
    g = goal_board(3)
    assert g.cells == (1, 2, 3, 4, 5, 6, 7, 8, 0)
    assert g.blank_index == 8
    assert g.width == 3


def test_goal_board_2x2():
    g = goal_board(2)
    assert g.cells == (1, 2, 3, 0)
    assert g.blank_index == 3


def test_goal_board_rejects_degenerate_width():
    with pytest.raises(InvalidDimensionError):
        goal_board(1)


def test_legal_moves_corner():
    assert legal_moves(goal_board(3)) == {Move.UP, Move.LEFT}


def test_legal_moves_center():
    b = parse_board("1,2,3,4,0,5,6,7,8")
    assert legal_moves(b) == {Move.UP, Move.DOWN, Move.LEFT, Move.RIGHT}


def test_legal_moves_edge():
    b = parse_board("1,0,2,3,4,5,6,7,8")
    assert legal_moves(b) == {Move.DOWN, Move.LEFT, Move.RIGHT}


def test_legal_moves_count_every_blank_position():
    for blank in range(9):
        cells = [v for v in range(1, 9)]
        cells.insert(blank, 0)
        assert len(legal_moves(Board(3, tuple(cells)))) in (2, 3, 4)


def test_apply_move_right_reaches_goal():
    b = parse_board("1,2,3,4,5,6,7,0,8")
    assert apply_move(b, Move.RIGHT) == goal_board(3)


def test_apply_move_up_from_goal():
    b = apply_move(goal_board(3), Move.UP)
    assert b.cells == (1, 2, 3, 4, 5, 0, 7, 8, 6)


def test_apply_move_off_grid_raises():
    with pytest.raises(IllegalMoveError) as exc:
        apply_move(goal_board(3), Move.DOWN)
    assert exc.value.move is Move.DOWN


def test_apply_move_leaves_input_untouched():
    b = parse_board("1,2,3,4,5,6,7,0,8")
    before = b.cells
    apply_move(b, Move.RIGHT)
    assert b.cells == before
    assert b.blank_index == 7


def test_move_then_opposite_restores_board():
    rng = random.Random(42)
    for _ in range(200):
        cells = list(range(9))
        rng.shuffle(cells)
        b = Board(3, tuple(cells))
        for m in legal_moves(b):
            assert apply_move(apply_move(b, m), m.opposite) == b


def test_apply_move_preserves_invariants():
    rng = random.Random(7)
    b = goal_board(3)
    for _ in range(500):
        m = rng.choice(sorted(legal_moves(b), key=lambda mv: mv.letter))
        b = apply_move(b, m)
        assert sorted(b.cells) == list(range(9))
        assert b.cells[b.blank_index] == 0


def test_equal_boards_hash_equal_and_key_maps():
    a = parse_board("1,2,3,4,5,6,7,8,0")
    b = goal_board(3)
    assert a == b and hash(a) == hash(b)
    assert {a: "x"}[b] == "x"


def test_boards_of_different_width_not_equal():
    assert parse_board("1,2,3,0") != goal_board(3)


def test_parse_goal_string():
    assert parse_board("1,2,3,4,5,6,7,8,0") == goal_board(3)


def test_parse_smallest_square():
    b = parse_board("1,2,3,0")
    assert b.width == 2 and b.blank_index == 3


def test_parse_duplicate_value():
    with pytest.raises(BoardParseError, match="duplicate tile value 8"):
        parse_board("1,2,3,4,5,6,7,8,8")


def test_parse_non_integer_token():
    with pytest.raises(BoardParseError, match="'x'"):
        parse_board("1,2,3,4,5,6,7,8,x")


def test_parse_non_square_length():
    with pytest.raises(BoardParseError, match="square"):
        parse_board("1,2,3,4,5,0")


def test_parse_too_short():
    with pytest.raises(BoardParseError):
        parse_board("1,0")


def test_parse_out_of_range_value():
    with pytest.raises(BoardParseError, match="out of range"):
        parse_board("1,2,3,4,5,6,7,8,9")


def test_render_has_no_whitespace():
    assert render_board_text(goal_board(3)) == "1,2,3,4,5,6,7,8,0"


def test_parse_render_round_trip_random_permutations():
    rng = random.Random(123)
    for n in (9, 16):
        for _ in range(100):
            cells = list(range(n))
            rng.shuffle(cells)
            b = Board.from_cells(cells)
            assert parse_board(render_board_text(b)) == b


def test_neighbors_matches_legal_moves():
    b = parse_board("1,2,3,4,0,5,6,7,8")
    produced = dict(neighbors(b))
    assert set(produced) == legal_moves(b)
    for m, child in produced.items():
        assert child == apply_move(b, m)


def test_move_letters():
    assert [m.letter for m in (Move.UP, Move.DOWN, Move.LEFT, Move.RIGHT)] == ["U", "D", "L", "R"]
    assert Move.from_letter("u") is Move.UP


def test_parse_moves_both_styles():
    assert parse_moves("U,L,D") == [Move.UP, Move.LEFT, Move.DOWN]
    assert parse_moves("RRU") == [Move.RIGHT, Move.RIGHT, Move.UP]
