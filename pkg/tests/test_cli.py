import json

from symchar import charoracle
from symchar.cli import main
from symchar.ratpoly import RatPoly


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_poly_pinned_outputs(capsys):
    code, out, _ = run(capsys, "poly", "--k", "6", "--basis", "R")
    assert code == 0
    assert out == "R7 + 35*R5 + 35*R3*R2 + 84*R3\n"
    code, out, _ = run(capsys, "poly", "--k", "2", "--basis", "S")
    assert code == 0
    assert out == "S3\n"


def test_poly_routes_agree(capsys):
    for basis in ("R", "S"):
        outputs = set()
        for route in ("count", "convert", "stanley"):
            code, out, _ = run(capsys, "poly", "--k", "4", "--basis", basis,
                               "--route", route)
            assert code == 0
            outputs.add(out)
        assert len(outputs) == 1


def test_poly_bound_error(capsys):
    code, out, err = run(capsys, "poly", "--k", "9", "--basis", "R")
    assert code == 1
    assert not out
    assert "between 1 and 8" in err
    code, _, _ = run(capsys, "poly", "--k", "0")
    assert code == 1


def test_poly_json_round_trips(capsys):
    code, out, _ = run(capsys, "poly", "--k", "5", "--json")
    assert code == 0
    poly = RatPoly.from_json(out)
    assert str(poly) == "R6 + 15*R4 + 5*R2^2 + 8*R2"


def test_character_outputs(capsys):
    code, out, _ = run(capsys, "character", "--lambda", "2,1", "--k", "3")
    assert (code, out) == (0, "-3\n")
    code, out, _ = run(capsys, "character", "--lambda", "2,1", "--k", "5")
    assert (code, out) == (0, "0\n")
    code, out, _ = run(capsys, "character", "--lambda", "4,3,1", "--k", "1")
    assert (code, out) == (0, "8\n")


def test_character_malformed_partition(capsys):
    code, _, err = run(capsys, "character", "--lambda", "3,4", "--k", "1")
    assert code == 1
    assert "error" in err


def test_character_json(capsys):
    code, out, _ = run(capsys, "character", "--lambda", "2,1", "--k", "3", "--json")
    assert code == 0
    assert json.loads(out) == {"lambda": [2, 1], "k": 3, "value": "-3"}


def test_cumulants_table(capsys):
    code, out, _ = run(capsys, "cumulants", "--lambda", "2,1", "--max-k", "4")
    assert code == 0
    assert out.splitlines() == ["k\tS_k\tR_k", "2\t3\t3", "3\t0\t0", "4\t15/2\t-6"]


def test_cumulants_single_box(capsys):
    code, out, _ = run(capsys, "cumulants", "--lambda", "1", "--max-k", "3")
    assert code == 0
    assert out.splitlines()[1:] == ["2\t1\t1", "3\t0\t0"]


def test_cumulants_empty_diagram(capsys):
    code, out, _ = run(capsys, "cumulants", "--lambda", "", "--max-k", "4")
    assert code == 0
    for line in out.splitlines()[1:]:
        assert line.split("\t")[1:] == ["0", "0"]


def test_cumulants_multirect_matches_partition(capsys):
    code, out_pq, _ = run(capsys, "cumulants", "--p", "1,2", "--q", "3,1",
                          "--max-k", "4")
    assert code == 0
    code, out_lam, _ = run(capsys, "cumulants", "--lambda", "3,1,1", "--max-k", "4")
    assert code == 0
    assert out_pq == out_lam


def test_cumulants_rational_multirect(capsys):
    code, out, _ = run(capsys, "cumulants", "--p", "1/2", "--q", "3/2",
                       "--max-k", "3", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["S"]["2"] == "3/4"
    assert doc["routes_agree"] is True


def test_cumulants_usage_errors(capsys):
    code, _, err = run(capsys, "cumulants", "--lambda", "2,1", "--p", "1",
                       "--q", "1")
    assert code == 1
    code, _, err = run(capsys, "cumulants")
    assert code == 1
    code, _, err = run(capsys, "cumulants", "--p", "1")
    assert code == 1


def test_unknown_and_missing_arguments(capsys):
    assert run(capsys, "nonsense")[0] == 1
    assert run(capsys, "poly")[0] == 1


def test_verify_empty_report(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "0")
    assert code == 0
    assert out == ""


def test_verify_small_bounds_pass(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "3", "--max-k", "3")
    assert code == 0
    lines = out.splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].endswith("checks passed")


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "3", "--max-k", "3", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["checks"]
    assert all(entry["status"] == "pass" for entry in doc["checks"])
    assert all(set(entry) == {"check", "status"} for entry in doc["checks"])


def test_outputs_deterministic_across_processes():
    # canonical ordering must not depend on per-process string hashing
    import subprocess
    import sys

    cmd = [sys.executable, "-m", "symchar.cli", "poly", "--k", "5", "--json"]
    runs = {subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
            for _ in range(2)}
    assert len(runs) == 1
    cmd = [sys.executable, "-m", "symchar.cli", "verify", "--max-n", "2",
           "--max-k", "2", "--json"]
    runs = {subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
            for _ in range(2)}
    assert len(runs) == 1


def test_outputs_are_deterministic(capsys):
    first = run(capsys, "poly", "--k", "6")
    second = run(capsys, "poly", "--k", "6")
    assert first == second
    first = run(capsys, "verify", "--max-n", "3", "--max-k", "3")
    second = run(capsys, "verify", "--max-n", "3", "--max-k", "3")
    assert first == second


def test_injected_fault_breaks_verification(capsys, monkeypatch):
    # flipping the sign of one border-strip removal must fail the suite
    original = charoracle._strip_removals

    def flipped(rows, length):
        removals = original(rows, length)
        if rows == (2, 1) and length == 3:
            return [(smaller, height + 1) for smaller, height in removals]
        return removals

    monkeypatch.setattr(charoracle, "_strip_removals", flipped)
    charoracle.clear_caches()
    try:
        code, out, _ = run(capsys, "verify", "--max-n", "4", "--max-k", "4")
    finally:
        monkeypatch.undo()
        charoracle.clear_caches()
    assert code == 2
    assert "FAIL" in out
