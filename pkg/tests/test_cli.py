"""End-to-end command line tests driven through ezbasis.cli.run."""

from __future__ import annotations

import json

import pytest

import ezbasis.cli as cli
from ezbasis.coeffs import CoeffMatrix, build_matrix_A, split_A1_A2
from ezbasis.trilinalg import invert_forward
from golden_values import BASIS_LATEX_M5


def run_cli(capsys, *args):
    code = cli.run(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestMatrix:
    def test_json_round_trip(self, capsys):
        code, out, _ = run_cli(capsys, "matrix", "--n", "12", "--format", "json")
        assert code == 0
        parsed = CoeffMatrix.from_json_dict(json.loads(out))
        assert parsed == build_matrix_A(12)

    def test_latex_last_row(self, capsys):
        code, out, _ = run_cli(capsys, "matrix", "--n", "12", "--format", "latex")
        assert code == 0
        assert " 1 & -11 & 44 & -77 & 55 & -11 \\\\" in out

    def test_csv(self, capsys):
        code, out, _ = run_cli(capsys, "matrix", "--n", "12", "--format", "csv")
        assert code == 0
        lines = out.rstrip("\n").split("\n")
        assert lines[0] == "c,d,value"
        assert lines[1] == "1,1,1"
        assert len(lines) == 1 + 12 * 6
        assert "12,6,-11" in lines

    def test_text_default(self, capsys):
        code, out, _ = run_cli(capsys, "matrix", "--n", "4")
        assert code == 0
        rows = out.rstrip("\n").split("\n")
        assert len(rows) == 4

    def test_bad_n(self, capsys):
        code, _, err = run_cli(capsys, "matrix", "--n", "1")
        assert code == 2
        assert "ezbasis:" in err


class TestInvert:
    def test_a1_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "invert", "--n", "12", "--which", "a1", "--format", "json"
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["entries"][5] == ["227/4", "-140", "115", "-75/2", "25/4", "-1/2"]

    def test_a2_matches_library(self, capsys):
        code, out, _ = run_cli(
            capsys, "invert", "--n", "10", "--which", "a2", "--format", "json"
        )
        assert code == 0
        _, a2 = split_A1_A2(build_matrix_A(10))
        assert CoeffMatrix.from_json_dict(json.loads(out)) == invert_forward(a2)

    def test_oracle_passes(self, capsys):
        code, out, _ = run_cli(capsys, "invert", "--n", "20", "--oracle")
        assert code == 0
        assert out

    def test_oracle_disagreement_is_failure(self, capsys, monkeypatch):
        def wrong(matrix):
            return CoeffMatrix.identity(matrix.rows)

        monkeypatch.setattr(cli.trilinalg, "invert_cofactor", wrong)
        code, _, err = run_cli(capsys, "invert", "--n", "8", "--oracle")
        assert code == 1
        assert "verification failure" in err


class TestBasis:
    def test_latex_m5_golden(self, capsys):
        code, out, _ = run_cli(capsys, "basis", "--m", "5", "--format", "latex")
        assert code == 0
        assert "".join(out.split()) == "".join(BASIS_LATEX_M5.split())

    def test_json_m1(self, capsys):
        code, out, _ = run_cli(capsys, "basis", "--m", "1", "--format", "json")
        assert code == 0
        assert json.loads(out) == {
            "target": "zeta(-3,s+3)",
            "coeffs": {"0": "-1/4", "2": "3/2"},
        }

    def test_csv_m2(self, capsys):
        code, out, _ = run_cli(capsys, "basis", "--m", "2", "--format", "csv")
        assert code == 0
        lines = out.rstrip("\n").split("\n")
        assert lines[0] == "target,basis_index,coeff"
        # the label itself contains a comma, so csv quotes it
        assert lines[1] == '"zeta(-5,s+5)",0,1/2'
        assert lines[3] == '"zeta(-5,s+5)",4,5/2'

    def test_text_m0(self, capsys):
        code, out, _ = run_cli(capsys, "basis", "--m", "0")
        assert code == 0
        assert out.rstrip("\n") == "zeta(-1,s+1) = 1/2 zeta(0,s)"

    def test_negative_m(self, capsys):
        code, _, err = run_cli(capsys, "basis", "--m", "-3")
        assert code == 2


class TestRelations:
    def test_text_first_line(self, capsys):
        code, out, _ = run_cli(capsys, "relations", "--n", "4")
        assert code == 0
        lines = out.rstrip("\n").split("\n")
        assert lines[0] == "r1: 1/2 zeta(0,s) - zeta(-1,s+1) = 0"

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "relations", "--n", "4", "--format", "json")
        assert code == 0
        obj = json.loads(out)
        assert obj["n"] == 4
        assert obj["functions"] == [
            "zeta(0,s)", "zeta(-1,s+1)", "zeta(-2,s+2)", "zeta(-3,s+3)",
        ]
        assert obj["relations"][0] == ["1/2", "-1", "0", "0"]
        assert obj["relations"][1] == ["1/4", "-1/3", "-1/2", "1/3"]

    def test_csv(self, capsys):
        code, out, _ = run_cli(capsys, "relations", "--n", "4", "--format", "csv")
        assert code == 0
        lines = out.rstrip("\n").split("\n")
        assert lines[0] == "relation,function,coeff"
        assert lines[1] == '1,"zeta(0,s)",1/2'
        assert len(lines) == 1 + 2 * 4

    def test_latex(self, capsys):
        code, out, _ = run_cli(capsys, "relations", "--n", "4", "--format", "latex")
        assert code == 0
        lines = out.rstrip("\n").split("\n")
        assert lines[0].endswith("= 0 \\\\")
        assert "\\zeta(0,s)/2 - \\zeta(-1,s+1)" in lines[0]


class TestPoles:
    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "poles", "--n", "3", "--format", "json")
        assert code == 0
        assert json.loads(out) == {
            "n": 3,
            "poles": [
                {"s": 2, "residue": "1/4"},
                {"s": 1, "residue": "-1/2"},
                {"s": 0, "residue": "1/4"},
            ],
        }

    def test_csv(self, capsys):
        code, out, _ = run_cli(capsys, "poles", "--n", "2", "--format", "csv")
        assert code == 0
        assert out.rstrip("\n").split("\n") == [
            "s,residue", "2,1/3", "1,-1/2", "0,1/6",
        ]

    def test_latex(self, capsys):
        code, out, _ = run_cli(capsys, "poles", "--n", "3", "--format", "latex")
        assert code == 0
        assert " \\text{at} & s=2, & \\text{residue} & 1/4, \\\\" in out

    def test_text(self, capsys):
        code, out, _ = run_cli(capsys, "poles", "--n", "0")
        assert code == 0
        assert out.splitlines()[0] == "poles of zeta(0,s):"


class TestExpand:
    def test_text(self, capsys):
        code, out, _ = run_cli(capsys, "expand", "--c", "3")
        assert code == 0
        assert out.rstrip("\n") == (
            "zeta(-3,s+3) = 1/4 zeta(s-1) - 1/2 zeta(s) + 1/4 zeta(s+1)"
        )

    def test_latex(self, capsys):
        code, out, _ = run_cli(capsys, "expand", "--c", "3", "--format", "latex")
        assert code == 0
        assert out.rstrip("\n") == (
            "\\zeta(-3,s+3) = \\zeta(s-1)/4 - \\zeta(s)/2 + \\zeta(s+1)/4"
        )

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "expand", "--c", "2", "--format", "json")
        assert code == 0
        assert json.loads(out) == {"c": 2, "q": ["1/3", "-1/2", "1/6"]}

    def test_csv(self, capsys):
        code, out, _ = run_cli(capsys, "expand", "--c", "2", "--format", "csv")
        assert code == 0
        assert out.rstrip("\n").split("\n") == [
            "j,coeff", "0,1/3", "1,-1/2", "2,1/6",
        ]


class TestVerify:
    def test_exact_pass(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--n", "12", "--mode", "exact")
        assert code == 0
        lines = out.rstrip("\n").split("\n")
        assert lines[0] == "power-sum identity: PASS (e = 1..11)"
        assert lines[1] == "relation collapse: PASS (6 relations, 6 representations)"
        assert lines[-1] == "result: PASS"

    def test_numeric_pass(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--n", "6", "--mode", "numeric",
            "--s", "5", "--cutoff", "2000", "--tol", "1e-5",
        )
        assert code == 0
        assert out.rstrip("\n").endswith("result: PASS")
        assert "tornheim row c=0" in out

    def test_numeric_complex_s_with_i(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--n", "4", "--mode", "numeric",
            "--s", "4+3i", "--cutoff", "2000", "--tol", "1e-4",
        )
        assert code == 0
        assert out.rstrip("\n").endswith("result: PASS")

    def test_all_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--n", "6", "--mode", "all", "--format", "json",
            "--cutoff", "2000", "--tol", "1e-5",
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["mode"] == "all"
        assert obj["passed"] is True
        assert obj["exact"]["power_sum"]["failures"] == []
        assert obj["numeric"]["passed"] is True

    def test_numeric_failure_exit_code(self, capsys, monkeypatch):
        real = cli.numeval.numeric_verify

        def doctored(N, s, cutoff, tol):
            report = real(N, s, cutoff, tol)
            bad = cli.numeval.NumericCheck(name="planted", residual=1.0, bound=2.0)
            return cli.numeval.NumericReport(
                n=report.n, s=report.s, cutoff=report.cutoff,
                tol=report.tol, checks=report.checks + (bad,),
            )

        monkeypatch.setattr(cli.numeval, "numeric_verify", doctored)
        code, out, _ = run_cli(
            capsys, "verify", "--n", "4", "--mode", "numeric",
            "--cutoff", "1000", "--tol", "1e-4",
        )
        assert code == 1
        assert out.rstrip("\n").endswith("result: FAIL")

    def test_tol_below_bound_rejected(self, capsys):
        code, _, err = run_cli(
            capsys, "verify", "--n", "6", "--mode", "numeric",
            "--cutoff", "1000", "--tol", "1e-30",
        )
        assert code == 2
        assert "bound" in err

    def test_latex_not_supported(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--n", "4", "--format", "latex")
        assert code == 2
        assert "verify supports" in err


class TestPlumbing:
    def test_unknown_command(self, capsys):
        assert run_cli(capsys, "frobnicate")[0] == 2

    def test_missing_required_arg(self, capsys):
        assert run_cli(capsys, "matrix")[0] == 2

    def test_no_args(self, capsys):
        assert run_cli(capsys)[0] == 2

    def test_bad_format_value(self, capsys):
        assert run_cli(capsys, "matrix", "--n", "4", "--format", "yaml")[0] == 2

    def test_help_exits_zero(self, capsys):
        assert run_cli(capsys, "--help")[0] == 0

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "out.json"
        code, out, _ = run_cli(
            capsys, "matrix", "--n", "6", "--format", "json",
            "--output", str(target),
        )
        assert code == 0
        assert out == ""
        text = target.read_text()
        assert text.endswith("\n")
        assert CoeffMatrix.from_json_dict(json.loads(text)) == build_matrix_A(6)

    def test_deterministic_output(self, capsys):
        first = run_cli(capsys, "relations", "--n", "8", "--format", "json")
        second = run_cli(capsys, "relations", "--n", "8", "--format", "json")
        assert first == second

    def test_thread_env_rejected_zero(self, capsys, monkeypatch):
        monkeypatch.setenv("EZBASIS_THREADS", "0")
        code, _, err = run_cli(capsys, "matrix", "--n", "4")
        assert code == 2
        assert "EZBASIS_THREADS" in err

    def test_thread_env_rejected_garbage(self, capsys, monkeypatch):
        monkeypatch.setenv("EZBASIS_THREADS", "abc")
        assert run_cli(capsys, "matrix", "--n", "4")[0] == 2

    def test_thread_env_accepted(self, capsys, monkeypatch):
        monkeypatch.setenv("EZBASIS_THREADS", "4")
        assert run_cli(capsys, "matrix", "--n", "4")[0] == 0

    def test_main_raises_system_exit(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.argv", ["ezbasis", "poles", "--n", "2"])
        with pytest.raises(SystemExit) as exc:
            cli.main()
        assert exc.value.code == 0
        capsys.readouterr()
