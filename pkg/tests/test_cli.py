import json
import subprocess
import sys

import pytest

from actsched import cli
from actsched.core import UNREACHABLE

HEX = [[1, 0], [0.5, 0.8660254037844386], [-0.5, 0.8660254037844386],
       [-1, 0], [-0.5, -0.8660254037844386], [0.5, -0.8660254037844386]]


@pytest.fixture
def write(tmp_path):
    def _write(doc, name="inst.json"):
        path = tmp_path / name
        path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        return str(path)
    return _write


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


WINDOW = {"problem": "window", "n_moments": 3, "utilities": [5, -1, 4], "k_activities": 2,
          "lower_bounds": [1, 1], "upper_bounds": [1, 1]}


def test_solve_window(capsys, write):
    code, doc, _ = run(capsys, "solve", write(WINDOW))
    assert code == cli.EXIT_OK
    assert doc["objective"] == 9
    assert doc["payload"] == {"intervals": [[1, 1], [3, 3]]}
    assert doc["problem"] == "window" and doc["solver"] == "window:deque"


def test_solve_lexmin_without_activities(capsys, write):
    path = write({"problem": "lex-min", "utilities": [9, 8, 7], "k_activities": 0, "activity_length": 1})
    code, doc, _ = run(capsys, "solve", path, "--engine", "simple")
    assert code == 0 and doc["payload"]["saved_utilities"] == [9, 8, 7]


def test_missing_key_is_parse_error(capsys, write):
    doc = {k: v for k, v in WINDOW.items() if k != "utilities"}
    code, out, err = run(capsys, "solve", write(doc))
    assert code == cli.EXIT_PARSE and out is None
    assert "'utilities'" in err


def test_unknown_key_and_bad_json(capsys, write):
    code, _, err = run(capsys, "solve", write({**WINDOW, "colour": 1}))
    assert code == cli.EXIT_PARSE and "colour" in err
    code, _, _ = run(capsys, "solve", write("{not json"))
    assert code == cli.EXIT_PARSE
    code, _, _ = run(capsys, "solve", write({"problem": "knapsack"}))
    assert code == cli.EXIT_PARSE


def test_validation_error_status(capsys, write):
    code, _, err = run(capsys, "solve", write({**WINDOW, "lower_bounds": [2, 1]}))
    assert code == cli.EXIT_INVALID and "exceeds" in err
    code, _, _ = run(capsys, "solve", write(WINDOW), "--engine", "no-upper")
    assert code == cli.EXIT_INVALID


def test_infeasible_is_success(capsys, write):
    square = {"problem": "polygon", "vertices": [[0, 0], [1, 0], [1, 1], [0, 1]],
              "k_parts": 2, "chord_budget": 1, "objective_kind": "area"}
    code, doc, _ = run(capsys, "solve", write(square))
    assert code == 0 and doc["objective"] == "infeasible" and doc["payload"]["parts"] == []


def test_oracle_hexagon_and_grid(capsys, write):
    hexagon = {"problem": "polygon", "vertices": HEX, "k_parts": 2, "chord_budget": 1,
               "objective_kind": "area"}
    code, doc, _ = run(capsys, "oracle", write(hexagon))
    assert code == 0 and doc["solver"] == "oracle"
    assert abs(doc["objective"] - 0.8660254037844386) < 1e-9
    grid = {"problem": "submatrix", "heights": [[3]], "utilities": [[7]], "k_distinct": 1}
    code, doc, _ = run(capsys, "oracle", write(grid))
    assert doc["objective"] == 7 and doc["payload"]["rectangle"] == [1, 1, 1, 1]


def test_oracle_limit_status(capsys, write):
    big = {"problem": "window", "utilities": list(range(20)), "lower_bounds": [1], "upper_bounds": [2]}
    code, _, err = run(capsys, "oracle", write(big))
    assert code == cli.EXIT_INVALID and "limit" in err


def test_exact_rational_objective(capsys, write):
    tri = {"problem": "polygon", "vertices": [[0, 0], [1, 0], ["0", "1/3"]], "k_parts": 1, "chord_budget": 0}
    code, doc, _ = run(capsys, "solve", write(tri))
    assert code == 0
    assert doc["objective_exact"] == "1/6"
    assert abs(doc["objective"] - 1 / 6) < 1e-15


def test_check_file_agrees(capsys, write):
    code, doc, _ = run(capsys, "check", write(WINDOW))
    assert code == 0 and doc["status"] == "agree"
    assert doc["solver_objective"] == doc["oracle_objective"] == 9


@pytest.mark.parametrize("problem", ["window", "anchored", "max-count", "lex-min", "polygon", "submatrix"])
def test_check_random_batch(capsys, problem):
    code, doc, _ = run(capsys, "check", "--random", problem, "--count", "60", "--seed", "5")
    assert code == 0
    assert doc["agreements"] == 60 and doc["mismatches"] == 0


@pytest.mark.parametrize("problem, engine", [("window", "simple"), ("anchored", "no-upper"),
                                             ("anchored", "exact-length"), ("lex-min", "simple")])
def test_check_random_variant_engines(capsys, problem, engine):
    code, doc, _ = run(capsys, "check", "--random", problem, "--count", "100", "--engine", engine)
    assert code == 0 and doc["agreements"] == 100


def test_corrupted_solver_is_caught(capsys, monkeypatch, write):
    entry = cli.PROBLEM_TABLE["window"]

    def broken(inst):
        sol = entry.engines["deque"](inst)
        if sol.objective is not UNREACHABLE and sol.intervals:
            sol.objective += 1
        return sol

    monkeypatch.setitem(entry.engines, "broken", broken)
    code, doc, err = run(capsys, "check", write(WINDOW), "--engine", "broken")
    assert code == cli.EXIT_MISMATCH and doc["status"] == "mismatch"
    code, doc, err = run(capsys, "check", "--random", "window", "--count", "50", "--engine", "broken")
    assert code == cli.EXIT_MISMATCH and doc["mismatches"] > 0
    assert "solver" in err and "oracle" in err


def test_output_deterministic_apart_from_elapsed(capsys, write):
    path = write({"problem": "max-count", "activities": [[2, 2], [2, 3], [3, 3]]})
    first = run(capsys, "solve", path)[1]
    second = run(capsys, "solve", path)[1]
    first.pop("elapsed_seconds")
    second.pop("elapsed_seconds")
    assert first == second
    assert first["payload"]["placements"] == [{"activity": 0, "interval": [0, 2]},
                                              {"activity": 1, "interval": [2, 4]}]


def test_round_trip_through_checker(capsys, write):
    from actsched.checkers import check_window
    from actsched.window import WindowInstance, WindowSolution
    code, doc, _ = run(capsys, "solve", write(WINDOW))
    inst = WindowInstance(WINDOW["utilities"], WINDOW["lower_bounds"], WINDOW["upper_bounds"])
    rebuilt = WindowSolution(doc["objective"], [tuple(iv) for iv in doc["payload"]["intervals"]])
    assert check_window(inst, rebuilt) == doc["objective"]


def test_module_entry_point(write):
    proc = subprocess.run([sys.executable, "-m", "actsched", "solve", write(WINDOW)],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["objective"] == 9
