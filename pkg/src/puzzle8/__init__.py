"""8-puzzle engine: scanner, optimal A* solver, scoring, and game session."""

from .board import (
    Board,
    BoardParseError,
    IllegalMoveError,
    InvalidDimensionError,
    Move,
    PuzzleError,
    apply_move,
    goal_board,
    legal_moves,
    neighbors,
    parse_board,
    parse_moves,
    render_board_text,
)
from .engine import (
    GameSession,
    Phase,
    Snapshot,
    run_scripted_game,
    synchronous_scheduler,
    threaded_scheduler,
)
from .generator import generate_solvable
from .notification import (
    Notification,
    NotificationKind,
    NotificationStream,
    Severity,
    StreamClosedError,
    StreamOverflowError,
    receive_loop,
)
from .scanner import count_inversions, is_legal
from .score import ScoreState
from .solver import (
    CloseList,
    OpenList,
    SearchNode,
    SolveResult,
    UnsolvableBoardError,
    bfs_distance_oracle,
    misplaced_tiles,
    solve,
)

__version__ = "0.1.0"
