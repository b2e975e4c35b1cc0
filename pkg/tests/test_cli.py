import io
import json
import queue
import subprocess
import sys
import threading

from puzzle8 import generate_solvable, parse_board, render_board_text, solve
from puzzle8.cli import run


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_check_solvable_board():
    code, out, _ = invoke("check", "--board", "1,2,3,4,5,6,7,8,0")
    assert code == 0
    assert out == "solvable blank=8\n"


def test_check_unsolvable_board():
    code, out, _ = invoke("check", "--board", "2,1,3,4,5,6,7,8,0")
    assert code == 1
    assert out == "unsolvable\n"


def test_check_malformed_board():
    code, _, err = invoke("check", "--board", "1,2,3,4,5,6,7,8,nope")
    assert code == 64
    assert "nope" in err


def test_unknown_flag_is_usage_error():
    code, _, err = invoke("check", "--bogus", "x")
    assert code == 64
    assert "usage" in err


def test_missing_subcommand_is_usage_error():
    code, _, _ = invoke()
    assert code == 64


def test_solve_prints_moves_and_count():
    code, out, _ = invoke("solve", "--board", "1,2,3,4,5,6,0,7,8")
    assert code == 0
    assert out == "RR\nmoves=2\n"


def test_solve_goal_board():
    code, out, _ = invoke("solve", "--board", "1,2,3,4,5,6,7,8,0")
    assert code == 0
    assert out == "\nmoves=0\n"


def test_solve_unsolvable_exits_2():
    code, _, err = invoke("solve", "--board", "2,1,3,4,5,6,7,8,0")
    assert code == 2
    assert "unsolvable" in err


def test_solve_large_board_refused():
    cells = ",".join(str(v) for v in list(range(1, 16)) + [0])
    code, _, err = invoke("solve", "--board", cells)
    assert code == 64
    assert "3x3" in err


def test_generate_is_seed_stable():
    first = invoke("generate", "--seed", "5", "--count", "3")
    second = invoke("generate", "--seed", "5", "--count", "3")
    assert first == second
    lines = first[1].splitlines()
    assert len(lines) == 3
    for line in lines:
        board = parse_board(line)
        assert board.width == 3


def test_generate_unseeded_still_valid():
    code, out, _ = invoke("generate")
    assert code == 0
    parse_board(out.strip())


def test_bench_text_output(oracle):
    code, out, _ = invoke("bench", "--seed", "0", "--count", "2")
    assert code == 0
    assert invoke("bench", "--seed", "0", "--count", "2") == (code, out, "")
    lines = out.splitlines()
    assert len(lines) == 3
    for line in lines[:2]:
        fields = dict(part.split("=") for part in line.split())
        assert oracle[parse_board(fields["board"])] == int(fields["optimal"])
        assert int(fields["expanded"]) > 0
        assert int(fields["peak_open"]) > 0
    assert lines[2].startswith("mean optimal=")


def test_bench_csv_schema(oracle):
    code, out, _ = invoke("bench", "--seed", "0", "--count", "2", "--csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "board,optimal,expanded,peak_open"
    assert len(lines) == 3
    # The quoted board field itself contains commas; split from the right.
    for line in lines[1:]:
        board_part, optimal, expanded, peak = line.rsplit(",", 3)
        board = parse_board(board_part.strip('"'))
        assert oracle[board] == int(optimal)
        assert int(expanded) > 0 and int(peak) > 0


def test_bench_parallel_jobs_matches_sequential():
    sequential = invoke("bench", "--seed", "0", "--count", "3", "--csv")
    parallel = invoke("bench", "--seed", "0", "--count", "3", "--csv", "--jobs", "2")
    assert parallel == sequential


def test_verify_sample_mode():
    code, out, _ = invoke("verify", "--sample", "20", "--seed", "1")
    assert code == 0
    assert out.splitlines()[-1] == "states=181440 maxDepth=31 mismatches=0"


def test_play_scripted_perfect_game():
    board = generate_solvable(3, 3)
    letters = ",".join(m.letter for m in solve(board).moves)
    code, out, _ = invoke("play", "--seed", "3", "--script", letters)
    assert code == 0
    lines = out.splitlines()
    moves = len(solve(board).moves)
    assert lines[0] == "Solving"
    assert lines[1] == "ReadyToPlay"
    assert lines[2 : 2 + moves] == ["CorrectMove"] * moves
    assert lines[2 + moves] == "GameComplete"
    assert lines[-1] == f"score=1.00 moves={moves} phase=Complete"


def test_play_empty_script_quits():
    code, out, _ = invoke("play", "--seed", "3")
    assert code == 0
    assert out.splitlines() == ["Solving", "ReadyToPlay", "Quit", "score=0.00 moves=0 phase=Quit"]


class _LineReader:
    def __init__(self, stream):
        self.lines = queue.Queue()
        self._thread = threading.Thread(target=self._pump, args=(stream,), daemon=True)
        self._thread.start()

    def _pump(self, stream):
        for line in stream:
            self.lines.put(line)
        self.lines.put(None)

    def next_event(self, timeout=30):
        line = self.lines.get(timeout=timeout)
        return None if line is None else json.loads(line)

    def wait_for(self, predicate, timeout=30):
        while True:
            event = self.next_event(timeout)
            assert event is not None, "protocol stream ended early"
            if predicate(event):
                return event


def test_play_interactive_protocol():
    board = generate_solvable(3, 3)
    solution = solve(board).moves
    proc = subprocess.Popen(
        [sys.executable, "-m", "puzzle8", "play", "--interactive", "--seed", "3"],
        stdin=subprocess.PIPE,
        stdout=subprocess.PIPE,
        text=True,
    )
    try:
        reader = _LineReader(proc.stdout)
        first = reader.next_event()
        assert first["event"] == "snapshot"
        assert parse_board(first["board"]) == board

        reader.wait_for(lambda e: e["event"] == "notification" and e["kind"] == "ReadyToPlay")
        for move in solution:
            proc.stdin.write(move.letter + "\n")
            proc.stdin.flush()
        complete = reader.wait_for(lambda e: e["event"] == "notification" and e["kind"] == "GameComplete")
        assert complete["severity"] == "Success"
        final = reader.wait_for(lambda e: e["event"] == "snapshot" and e["phase"] == "Complete")
        assert final["score"] == 1.0
        assert final["optimalRemaining"] == 0
        proc.stdin.close()
        reader.wait_for(lambda e: e["event"] == "end")
        assert proc.wait(timeout=30) == 0
    finally:
        proc.kill()
