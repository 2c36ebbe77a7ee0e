import json
import subprocess
import sys

import pytest

from trimedian.cli import main
from trimedian.literals import parse_triangle

FIG1_OP = "S[p=4/5,q=(2+4i)/3]"
FIG1_BASE = "(0,1,(7+8i)/10)"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestApply:
    def test_figure1_exact(self, capsys):
        code, out, _ = run(capsys, "apply", FIG1_OP, FIG1_BASE)
        assert code == 0
        assert out == "(93/3050 + 542/1525*i, 201/305 - 46/305*i, 1541/1525 + 908/1525*i)\n"

    def test_identity_echo(self, capsys):
        _, out, _ = run(capsys, "apply", "S[eta=1,eta'=1]", "(0,1,i)")
        assert out == "(0, 1, i)\n"

    def test_approx_and_json(self, capsys):
        code, out, _ = run(capsys, "apply", FIG1_OP, FIG1_BASE, "--approx", "--format", "json")
        assert code == 0
        data = json.loads(out)
        expected = parse_triangle("(93/3050 + 542/1525 i, 201/305 - 46/305 i, 1541/1525 + 908/1525 i)")
        for (re, im), v in zip(data["triangle"], expected):
            assert complex(re, im) == pytest.approx(complex(v), abs=1e-12)

    def test_ceva_operator(self, capsys):
        code, out, _ = run(capsys, "apply", "C[s=2]", "(0,1,i)")
        assert code == 0 and out.startswith("(")

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "out.txt"
        assert main(["apply", FIG1_OP, FIG1_BASE, "--out", str(target)]) == 0
        assert target.read_text().startswith("(93/3050")


class TestErrors:
    @pytest.mark.parametrize(
        "argv,needle",
        [
            (["apply", "S[p=1,q=1]", "(0,1,i)"], "p*q = 1"),
            (["apply", "S[p=1", "(0,1,i)"], "position 1"),
            (["apply", FIG1_OP, "(0,1)"], "error"),
            (["median", "00/00", FIG1_OP], "y != z"),
            (["convert", "C[s=2]"], "binary Ceva"),
            (["figure", "fig99"], "unknown figure"),
            (["orbit", "custom"], "custom family needs"),
        ],
    )
    def test_bad_input_exit_code_2(self, capsys, argv, needle):
        code, _, err = run(capsys, *argv)
        assert code == 2
        assert err.startswith("error: ") and needle in err

    @pytest.mark.parametrize("seed", ["-1", str(2**64)])
    def test_seed_range(self, capsys, seed):
        with pytest.raises(SystemExit) as info:
            main(["verify", "fixedpoints", "--seed", seed])
        assert info.value.code == 2

    def test_unknown_command(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["frobnicate"])
        assert info.value.code == 2


class TestMedianAndConvert:
    def test_median_matches_oracle(self, capsys):
        code, out, _ = run(capsys, "median", "02/01", FIG1_OP, FIG1_BASE)
        assert code == 0
        assert "oracle_agrees: True" in out
        assert "triangle: (989/4575 - 1138/4575*i, 92/75 + 26/75*i, 2353/9150 + 3212/4575*i)" in out

    def test_convert_views(self, capsys):
        _, out, _ = run(capsys, "convert", "S[p=4/5,q=2/3]", "--format", "json")
        views = json.loads(out)
        assert views["abg"] == ["4/7", "2/7", "1/7"]
        assert views["pq"] == ["4/5", "2/3"]

    def test_convert_without_pq(self, capsys):
        _, out, _ = run(capsys, "convert", "S[eta=w^2,eta'=w]")
        assert "a, b, g:   0, 1, 0" in out
        assert "p, q:      none" in out

    def test_shape(self, capsys):
        _, out, _ = run(capsys, "shape", "(1,w,w^2)")
        assert out == "psi:   0\npsi^3: 0\n"
        _, out, _ = run(capsys, "shape", "(1,w^2,w)", "--format", "json")
        assert json.loads(out) == {"psi": "inf", "psi_cubed": "inf"}


class TestOrbit:
    def test_csv(self, capsys):
        code, out, _ = run(capsys, "orbit", "steiner", "--samples", "6")
        lines = out.splitlines()
        assert code == 0 and lines[0] == "t,vertex,re,im" and len(lines) == 1 + 18
        assert lines[1] == "0,0,0,0" and lines[2] == "0,1,1,0" and lines[3] == "0,2,0.7,0.5"

    def test_json_report(self, capsys):
        _, out, _ = run(capsys, "orbit", "figure8", "--format", "json", "--samples", "300")
        data = json.loads(out)
        assert data["tracing_class"] == "Descending"
        assert data["tracing_residual"] <= 1e-10
        assert data["min_vertex_distance"] > 1.0
        assert len(data["samples"]) == 300

    def test_custom_family(self, capsys):
        _, out, _ = run(
            capsys, "orbit", "custom", "--eta=-1:1", "--eta-prime=1:1", "--base", "(0,1,0.7+0.5i)", "--format", "json"
        )
        assert json.loads(out)["tracing_class"] == "Ascending"

    def test_median_custom(self, capsys):
        _, out, _ = run(
            capsys, "orbit", "custom", "--eta", "1:-2; -2:1; 0:w", "--eta-prime", "-1:2; 2:1; 0:w^2",
            "--base", "(0,4,3+i)", "--label", "01/01", "--format", "json",
        )
        data = json.loads(out)
        assert data["kind"] == "Median(01/01)" and data["tracing_class"] == "Descending"

    def test_shape_trace(self, capsys):
        _, out, _ = run(capsys, "orbit", "steiner", "--samples", "3", "--shape-trace")
        assert out.splitlines()[0] == "t,re,im" and len(out.splitlines()) == 4

    def test_svg_is_deterministic(self, capsys):
        _, first, _ = run(capsys, "orbit", "smn", "--m", "7", "--n", "2", "--format", "svg")
        _, second, _ = run(capsys, "orbit", "smn", "--m", "7", "--n", "2", "--format", "svg")
        assert first == second and first.startswith("<svg")


class TestVerify:
    def test_fixedpoints(self, capsys):
        code, out, _ = run(capsys, "verify", "fixedpoints")
        report = json.loads(out)
        assert code == 0 and report["passed"]
        assert len(report["suites"]["fixedpoints"]["report"]["rows"]) == 18

    def test_identities_seed_1(self, capsys):
        code, out, _ = run(capsys, "verify", "identities", "--seed", "1", "--count", "100")
        assert code == 0 and json.loads(out)["passed"]

    def test_tracing(self, capsys):
        code, out, _ = run(capsys, "verify", "tracing")
        report = json.loads(out)["suites"]["tracing"]["report"]
        assert code == 0 and report["failures"] == []

    def test_seed_is_reproducible(self, capsys):
        _, a, _ = run(capsys, "verify", "bclift", "--seed", "18446744073709551615", "--count", "5")
        _, b, _ = run(capsys, "verify", "bclift", "--seed", "18446744073709551615", "--count", "5")
        assert a == b and json.loads(a)["passed"]

    def test_failure_exit_code(self, capsys, monkeypatch):
        import trimedian.cli as cli

        monkeypatch.setattr(cli, "fixed_point_suite", lambda: {"passed": False})
        code, out, _ = run(capsys, "verify", "fixedpoints")
        assert code == 1 and not json.loads(out)["passed"]


class TestFigure:
    def test_writes_files(self, capsys, tmp_path):
        code, out, _ = run(capsys, "figure", "fig4", "--out", str(tmp_path))
        assert code == 0
        names = sorted(p.name for p in tmp_path.iterdir())
        assert names == sorted(f"fig4_{c}.{ext}" for c in "abcdef" for ext in ("csv", "svg"))
        assert len(out.splitlines()) == 12


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "trimedian.cli", "apply", FIG1_OP, FIG1_BASE], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("(93/3050 + 542/1525*i")
