"""End-to-end command line behavior: arguments, formats, exit codes."""

import json
import shutil
import subprocess
import sys

import pytest

from oracles import trial_prime
from shnirel.cli import entry, parse_gaussian, parse_range
from shnirel.zcore import GaussianInt


def run(capsys, *argv):
    code = entry(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err.strip()


class TestParsers:
    def test_gaussian_forms(self):
        assert parse_gaussian("19,16") == GaussianInt(19, 16)
        assert parse_gaussian("8") == GaussianInt(8, 0)
        assert parse_gaussian("-3,-4") == GaussianInt(-3, -4)

    def test_range_forms(self):
        assert parse_range("1..50") == (1, 50)
        assert parse_range("-5..5") == (-5, 5)
        with pytest.raises(ValueError):
            parse_range("1-50")


class TestSieve:
    def test_summary_count(self, capsys):
        code, out, err = run(capsys, "sieve", "--limit", "100")
        assert code == 0
        assert err == "primes: 25 up to 100"

    def test_residue_filter_and_listing(self, capsys):
        code, out, err = run(
            capsys, "sieve", "--limit", "100", "--mod4", "3", "--list", "--format", "csv"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n"
        got = [int(p) for p in lines[1:]]
        assert got == [p for p in range(2, 101) if trial_prime(p) and p % 4 == 3]

    def test_cache_file_via_flag(self, capsys, tmp_path):
        cache = tmp_path / "primes.bin"
        code, _, _ = run(capsys, "sieve", "--limit", "500", "--cache", str(cache))
        assert code == 0
        assert cache.exists()

    def test_cache_file_via_environment(self, capsys, tmp_path, monkeypatch):
        cache = tmp_path / "env.bin"
        monkeypatch.setenv("SHNIREL_CACHE", str(cache))
        code, _, _ = run(capsys, "sieve", "--limit", "300")
        assert code == 0
        assert cache.exists()


class TestDecompose:
    def test_strict_triple(self, capsys):
        code, out, err = run(
            capsys, "decompose", "--z", "19,16", "--primes", "kpi", "--strict-norm"
        )
        assert code == 0
        assert out.splitlines()[0] == "19+16i = (17+12i) + (1+2i) + (1+2i)"
        assert err == "terms: 3"

    def test_prime_target_is_flagged(self, capsys):
        code, _, err = run(capsys, "decompose", "--z", "5,4", "--primes", "kpi")
        assert code == 0
        assert err == "terms: 1 (single: the target itself is prime)"

    def test_no_single_forces_longer_split(self, capsys):
        code, _, err = run(
            capsys, "decompose", "--z", "5,4", "--primes", "kpi", "--no-single"
        )
        assert code == 0
        assert err == "terms: 3"

    def test_unrepresentable_exits_one(self, capsys):
        code, _, err = run(
            capsys, "decompose", "--z", "2", "--primes", "kpi", "--strict-norm"
        )
        assert code == 1
        assert "no decomposition" in err

    def test_chain_route_in_json(self, capsys):
        code, out, err = run(
            capsys, "decompose", "--z", "19,17", "--primes", "kpi", "--chain",
            "--format", "json",
        )
        assert code == 0
        data = json.loads(out)
        assert data["route"] == "shift-3i"
        assert [t["summand"] for t in data["terms"]] == ["19+14i", "3i"]
        assert err == "terms: 2, route: shift-3i"

    def test_chain_gate_exits_two(self, capsys):
        code, _, err = run(capsys, "decompose", "--z", "3", "--chain")
        assert code == 2
        assert "positive real and imaginary" in err

    def test_bad_region_choice(self, capsys):
        with pytest.raises(SystemExit) as exc:
            entry(["decompose", "--z", "8", "--primes", "octant"])
        assert exc.value.code == 2
        capsys.readouterr()

    def test_unparsable_target(self, capsys):
        code, _, _ = run(capsys, "decompose", "--z", "x,y")
        assert code == 2


class TestSolvers:
    def test_thm1_csv(self, capsys):
        code, out, err = run(
            capsys, "solve-thm1", "--a", "11", "--b", "3", "--format", "csv"
        )
        assert code == 0
        assert out == "target,x1,x2\n5,5,0\n3,3,0\n3,3,0\n3,0,3\n"
        assert err == "columns: 4, case 1"

    def test_thm1_bad_parity(self, capsys):
        code, _, _ = run(capsys, "solve-thm1", "--a", "8", "--b", "5")
        assert code == 2

    def test_thm2_json(self, capsys):
        code, out, err = run(
            capsys, "solve-thm2", "--a", "9", "--b", "5", "--format", "json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["kind"] == "thm2"
        assert data["columns"] == [
            {"target": 11, "x1": 9, "x2": 2},
            {"target": 3, "x1": 0, "x2": 3},
        ]
        assert err == "columns: 2"

    def test_thm2_exhausted_exits_one(self, capsys):
        code, _, _ = run(capsys, "solve-thm2", "--a", "1", "--b", "1")
        assert code == 1

    def test_conj1_csv(self, capsys):
        code, out, _ = run(
            capsys, "solve-conj1", "--a", "7", "--b", "4", "--kmax", "3",
            "--format", "csv",
        )
        assert code == 0
        assert out == "target,x1,x2\n17,4,1\n5,2,1\n5,1,2\n"

    def test_conj1_markdown_table(self, capsys):
        code, out, _ = run(capsys, "solve-conj1", "--a", "6", "--b", "3")
        assert code == 0
        assert out.splitlines()[0] == "kind conj1: a=6, b=3, k=3"


class TestScan:
    def test_exceptions_exit_one(self, capsys):
        code, out, err = run(
            capsys, "scan", "--targets", "a", "--re", "1..6", "--im", "1..6",
            "--primes", "kpi", "--format", "csv",
        )
        assert code == 1
        assert err == "targets: 36, exceptions: 6"
        lines = out.splitlines()
        assert lines[0] == "z,norm,k,witness"
        assert lines[1] == "1+i,2,,EMPTY"

    def test_clean_scan_exits_zero(self, capsys):
        code, _, err = run(
            capsys, "scan", "--targets", "a", "--re", "1..8", "--im", "1..8",
            "--primes", "kpi", "--min-max-component", "7",
        )
        assert code == 0
        assert err == "targets: 28, exceptions: 0"

    def test_jobs_are_byte_identical(self, capsys, tmp_path):
        outs = []
        for jobs, name in ((1, "serial"), (2, "forked")):
            for fmt in ("csv", "json"):
                path = tmp_path / f"{name}.{fmt}"
                code, _, _ = run(
                    capsys, "scan", "--targets", "a", "--re", "1..10",
                    "--im", "1..10", "--primes", "kpi", "--jobs", str(jobs),
                    "--format", fmt, "--out", str(path),
                )
                assert code in (0, 1)
            outs.append(
                (
                    (tmp_path / f"{name}.csv").read_bytes(),
                    (tmp_path / f"{name}.json").read_bytes(),
                )
            )
        assert outs[0] == outs[1]

    def test_box_cap_exits_two(self, capsys):
        code, _, err = run(
            capsys, "scan", "--targets", "a", "--re", "0..500", "--im", "1..5",
            "--primes", "kpi",
        )
        assert code == 2
        assert "capped at 500" in err

    def test_malformed_range_exits_two(self, capsys):
        code, _, _ = run(
            capsys, "scan", "--targets", "a", "--re", "1-6", "--im", "1..6",
            "--primes", "kpi",
        )
        assert code == 2


class TestObstruction:
    def test_holds(self, capsys):
        code, out, err = run(
            capsys, "obstruction", "--bound", "20", "--max-terms", "3",
            "--format", "csv",
        )
        assert code == 0
        assert out == "k,count,min_gap\n1,102,1\n2,187,2\n3,165,3\n"
        assert err == "bound 20: inequality holds"

    def test_tiny_bound_exits_two(self, capsys):
        code, _, _ = run(capsys, "obstruction", "--bound", "1")
        assert code == 2


class TestHypotheses:
    def test_all_four_summary(self, capsys):
        code, _, err = run(capsys, "hypotheses", "--upper", "200")
        # the residue classes always carry their small exceptions
        assert code == 1
        assert err == (
            "hypothesis 1: c0 candidate 6; hypothesis 2: c0 candidate 9; "
            "hypothesis 3: c0 candidate 12; hypothesis 4: c0 candidate 15"
        )

    def test_single_index_csv(self, capsys):
        code, out, _ = run(
            capsys, "hypotheses", "--index", "1", "--upper", "20", "--format", "csv"
        )
        assert code == 1
        lines = out.splitlines()
        assert lines[0] == "n,residue,k,witness"
        assert lines[1] == "2,2,2,EMPTY"
        assert lines[2] == "6,2,2,3+3"

    def test_json_payload(self, capsys):
        code, out, _ = run(
            capsys, "hypotheses", "--index", "3", "--upper", "40", "--format", "json"
        )
        data = json.loads(out)
        assert len(data) == 1
        assert data[0]["exceptions"] == [4, 8]

    def test_index_out_of_range(self, capsys):
        with pytest.raises(SystemExit) as exc:
            entry(["hypotheses", "--index", "7", "--upper", "100"])
        assert exc.value.code == 2
        capsys.readouterr()


class TestThm130:
    def test_chain_csv(self, capsys):
        code, out, err = run(capsys, "thm130", "--n", "30", "--format", "csv")
        assert code == 0
        assert out == "n,m,witness\n30,6,11+7+3+3+3+3\n"
        assert err == "30: 6 primes of the form 4t+3"

    def test_below_threshold_exits_two(self, capsys):
        code, _, _ = run(capsys, "thm130", "--n", "17")
        assert code == 2
        code, _, _ = run(capsys, "thm130", "--n", "25", "--c0", "20")
        assert code == 2


class TestTables:
    def test_validate_default(self, capsys):
        code, out, err = run(capsys, "tables")
        assert code == 0
        assert out == "102 rows, 0 failures\n"
        assert err == "rows: 102 passed, 0 failed, 2 annotated typos"

    def test_validate_json(self, capsys):
        code, out, _ = run(capsys, "tables", "--validate", "--format", "json")
        assert code == 0
        assert json.loads(out) == {"total": 102, "ok": True, "failures": []}

    def test_regenerate(self, capsys):
        code, out, err = run(capsys, "tables", "--regenerate")
        assert code == 0
        assert out == "102 rows, 102 regenerated, 6 match the stored witnesses\n"
        assert err == "rows: 102, regenerated: 102, failures: 0"

    def test_modes_are_exclusive(self, capsys):
        with pytest.raises(SystemExit) as exc:
            entry(["tables", "--validate", "--regenerate"])
        assert exc.value.code == 2
        capsys.readouterr()


class TestOutputPlumbing:
    def test_out_file_replaces_stdout(self, capsys, tmp_path):
        path = tmp_path / "dec.json"
        code, out, _ = run(
            capsys, "decompose", "--z", "8", "--strict-norm", "--max-terms", "2",
            "--format", "json", "--out", str(path),
        )
        assert code == 0
        assert out == ""
        data = json.loads(path.read_text())
        assert [t["summand"] for t in data["terms"]] == ["6+i", "2-i"]

    def test_unknown_command(self, capsys):
        with pytest.raises(SystemExit) as exc:
            entry(["frobnicate"])
        assert exc.value.code == 2
        capsys.readouterr()

    def test_console_script_smoke(self):
        if shutil.which("shnirel"):
            argv = ["shnirel"]
        else:
            argv = [sys.executable, "-m", "shnirel.cli"]
        proc = subprocess.run(
            argv + ["thm130", "--n", "30", "--format", "csv"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout == "n,m,witness\n30,6,11+7+3+3+3+3\n"
        assert proc.stderr.strip() == "30: 6 primes of the form 4t+3"
