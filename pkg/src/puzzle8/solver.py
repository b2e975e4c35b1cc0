"""A* search over the sliding-puzzle state space.

The solver keeps an explicit open list (frontier) and close list (already
traversed boards). The open list couples three views that must stay in
agreement: a board -> node table holding the live search node per board, a
board -> bool membership table, and a minimum priority queue ordered by
node priority. Priorities are f = g + h with the misplaced-tiles heuristic,
so returned paths are optimal.

Instead of a decrease-key primitive, improving a board's cost pushes a
fresh queue entry and leaves the old one behind; stale entries are
recognized and skipped when popped.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass

from .board import Board, Move, PuzzleError, _neighbor_table, goal_board
from .scanner import is_legal


class UnsolvableBoardError(PuzzleError):
    """The start board is in the unreachable parity class."""


def misplaced_tiles(board: Board) -> int:
    """Count tiles sitting outside their home cell; the blank is not a tile.

    Admissible: every misplaced tile needs at least one move, so the count
    never exceeds the true remaining distance. Counting the blank would
    break that bound (a board one move from the goal would score 2).
    """
    count = 0
    n = len(board.cells)
    for index, value in enumerate(board.cells):
        if value != 0 and value != (index + 1) % n:
            count += 1
    return count


class SearchNode:
    """One frontier entry: a board with its path cost and priority."""

    __slots__ = ("board", "g_cost", "h_cost", "priority")

    def __init__(self, board: Board, g_cost: int, h_cost: int):
        self.board = board
        self.g_cost = g_cost
        self.h_cost = h_cost
        self.priority = g_cost + h_cost

    def __repr__(self) -> str:
        return f"SearchNode({self.board!r}, g={self.g_cost}, h={self.h_cost})"


class OpenList:
    """Frontier of nodes to traverse, cheapest priority first.

    Ties on priority prefer the larger g cost (deeper node), then insertion
    order, which keeps searches deterministic. ``add`` both inserts new
    boards and re-keys known ones; the superseded queue entry stays behind
    as garbage and is skipped on pop because it no longer matches the node
    table.
    """

    def __init__(self) -> None:
        self.node_table: dict[Board, SearchNode] = {}
        self.membership: dict[Board, bool] = {}
        self.queue: list[tuple[int, int, int, SearchNode]] = []
        self._insert_seq = 0

    def __len__(self) -> int:
        return len(self.node_table)

    def contains(self, board: Board) -> bool:
        # Absent boards read as False, mirroring a map of booleans.
        return self.membership.get(board, False)

    def get(self, board: Board) -> SearchNode | None:
        return self.node_table.get(board)

    def add(self, node: SearchNode) -> None:
        """Insert a node, or replace the live node for an already open board."""
        self.node_table[node.board] = node
        self.membership[node.board] = True
        self._insert_seq += 1
        heapq.heappush(self.queue, (node.priority, -node.g_cost, self._insert_seq, node))

    def pop(self) -> SearchNode | None:
        """Remove and return the cheapest live node, or None when empty."""
        queue = self.queue
        node_table = self.node_table
        while queue:
            node = heapq.heappop(queue)[3]
            board = node.board
            if node_table.get(board) is node:
                del node_table[board]
                del self.membership[board]
                return node
            # Stale entry: its board was popped earlier or re-keyed since.
        return None


class CloseList:
    """Boards already traversed; never expanded twice."""

    def __init__(self) -> None:
        self.membership: dict[Board, bool] = {}

    def __len__(self) -> int:
        return len(self.membership)

    def add(self, board: Board) -> None:
        self.membership[board] = True

    def contains(self, board: Board) -> bool:
        return self.membership.get(board, False)


@dataclass(frozen=True)
class SolveResult:
    """Optimal solution plus search statistics.

    ``path`` runs from the board to move to next up to the goal at the tail;
    the start board itself is not included. ``moves`` is the equivalent
    blank-travel sequence, same length as ``path``.
    """

    path: tuple[Board, ...]
    moves: tuple[Move, ...]
    nodes_expanded: int
    peak_open_size: int


def solve(start: Board) -> SolveResult:
    """Find a minimum-length move sequence from ``start`` to the goal.

    Expands the cheapest open node until the node about to enter the close
    list is the goal, recording each child's parent on the way; the path is
    then rebuilt by walking that child -> parent relation backwards from the
    goal. Raises UnsolvableBoardError for boards in the wrong parity class.
    """
    if not is_legal(start)[0]:
        raise UnsolvableBoardError(f"board {start!r} cannot reach the goal")
    goal = goal_board(start.width)

    open_list = OpenList()
    close_list = CloseList()
    # Child board -> parent board; many children share one parent.
    relation: dict[Board, Board] = {}

    open_list.add(SearchNode(start, 0, misplaced_tiles(start)))
    nodes_expanded = 0
    peak_open_size = 1
    neighbor_table = _neighbor_table(start.width)
    n = len(start.cells)

    while True:
        node = open_list.pop()
        if node is None:
            raise PuzzleError("open list exhausted before reaching the goal")
        board = node.board
        if board == goal:
            break
        close_list.add(board)
        nodes_expanded += 1

        child_g = node.g_cost + 1
        blank = board.blank_index
        for _, target in neighbor_table[blank]:
            child = board._swapped(target)
            if close_list.contains(child):
                continue
            existing = open_list.get(child)
            if existing is None:
                # h changes only for the one tile that slid into the blank.
                value = board.cells[target]
                h = node.h_cost - (value != (target + 1) % n) + (value != (blank + 1) % n)
                open_list.add(SearchNode(child, child_g, h))
                relation[child] = board
            elif child_g < existing.g_cost:
                open_list.add(SearchNode(child, child_g, existing.h_cost))
                relation[child] = board
        if len(open_list) > peak_open_size:
            peak_open_size = len(open_list)

    path = _build_path(relation, start, goal)
    moves = _moves_along(start, path)
    return SolveResult(path=path, moves=moves, nodes_expanded=nodes_expanded, peak_open_size=peak_open_size)


def _build_path(relation: dict[Board, Board], start: Board, goal: Board) -> tuple[Board, ...]:
    # Walk child -> parent from the goal, pushing intermediates to the front,
    # then put the goal itself at the tail.
    if goal == start:
        return ()
    path: deque[Board] = deque()
    state = goal
    while relation[state] != start:
        state = relation[state]
        path.appendleft(state)
    path.append(goal)
    return tuple(path)


def _moves_along(start: Board, path: tuple[Board, ...]) -> tuple[Move, ...]:
    moves = []
    previous = start
    for board in path:
        delta = board.blank_index - previous.blank_index
        if delta == -previous.width:
            moves.append(Move.UP)
        elif delta == previous.width:
            moves.append(Move.DOWN)
        elif delta == -1:
            moves.append(Move.LEFT)
        elif delta == 1:
            moves.append(Move.RIGHT)
        else:
            raise PuzzleError(f"boards {previous!r} and {board!r} are not one move apart")
        previous = board
    return tuple(moves)


def bfs_distance_oracle(width: int = 3) -> dict[Board, int]:
    """Exact optimal distance for every solvable board, by exhaustive BFS.

    Walks outward from the goal over reversible moves, so the result maps
    exactly the reachable (solvable) half of all permutations to its true
    distance. Kept to small widths; the 4x4 space does not fit in memory.
    """
    if width > 3:
        raise PuzzleError(f"exhaustive oracle supports width <= 3, got {width}")
    goal = goal_board(width)
    distance: dict[Board, int] = {goal: 0}
    frontier: deque[Board] = deque((goal,))
    neighbor_table = _neighbor_table(width)
    while frontier:
        board = frontier.popleft()
        child_distance = distance[board] + 1
        for _, target in neighbor_table[board.blank_index]:
            child = board._swapped(target)
            if child not in distance:
                distance[child] = child_distance
                frontier.append(child)
    return distance
