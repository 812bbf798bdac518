import json

import pytest

from g2theta import theta, make_period_matrix
from g2theta.cli import cli, format_complex, parse_complex

MODULI = ["--tau1", "0+1i", "--tau2", "0+2i", "--tau12", "0+0.5i"]


def run(capsys, *argv):
    code = cli(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestLiterals:
    @pytest.mark.parametrize(
        "text,value", [("0+0i", 0j), ("-0.25+1.5i", -0.25 + 1.5j), ("1.-2i", 1 - 2j), (".5-.5i", 0.5 - 0.5j)]
    )
    def test_parse(self, text, value):
        assert parse_complex(text) == value

    @pytest.mark.parametrize("bad", ["1", "1+i", "1 + 2i", "1+2j", "i", "+-1+2i"])
    def test_reject(self, bad):
        with pytest.raises(Exception):
            parse_complex(bad)

    def test_format_round_trip(self):
        z = 0.1 + 1 / 3j
        assert parse_complex(format_complex(z)) == z

    def test_format_snaps_small(self):
        assert format_complex(1e-15 - 1e-16j, 1e-12) == "0+0i"


class TestEval:
    def test_odd_at_origin(self, capsys):
        code, out, _ = run(capsys, "eval", "--char", "1010", "--u", "0+0i", "--v", "0+0i", *MODULI)
        assert code == 0 and out.strip() == "0+0i"

    def test_value(self, capsys):
        code, out, _ = run(capsys, "eval", "--char", "0000", "--u", "0.1+0.2i", "--v", "0+0i", *MODULI)
        om = make_period_matrix(1j, 2j, 0.5j)
        assert code == 0
        assert parse_complex(out.strip()) == theta("0000", 0.1 + 0.2j, 0, om)

    def test_bad_characteristic(self, capsys):
        code, _, err = run(capsys, "eval", "--char", "2011", "--u", "0+0i", "--v", "0+0i", *MODULI)
        assert code == 2 and "characteristic digit out of range" in err

    def test_bad_literal(self, capsys):
        code, _, err = run(capsys, "eval", "--char", "0000", "--u", "0", "--v", "0+0i", *MODULI)
        assert code == 2 and "malformed complex literal" in err

    def test_bad_moduli(self, capsys):
        code, _, err = run(capsys, "eval", "--char", "0000", "--u", "0+0i", "--v", "0+0i",
                           "--tau1", "0+1i", "--tau2", "0+1i", "--tau12", "0+1.2i")
        assert code == 2 and "positive definite" in err

    def test_f_eval(self, capsys):
        code, out, _ = run(capsys, "f-eval", "--char", "0011", "--u", "0.3+0.1i", "--v", "0-0.2i", *MODULI)
        assert code == 0 and out.strip() == "1+0i"

    def test_f_eval_pole(self, capsys):
        code, _, err = run(capsys, "f-eval", "--char", "0000", "--u", "0+0.5i", "--v", "0+0.25i", *MODULI)
        assert code == 2 and "theta[0011]" in err


def test_zeros(capsys):
    code, out, _ = run(capsys, "zeros", *MODULI)
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 6
    om = make_period_matrix(1j, 2j, 0.5j)
    for line in lines:
        a, b = (parse_complex(t) for t in line.split())
        assert abs(theta("0000", a, b, om)) < 1e-10


class TestVerify:
    def test_pass(self, capsys, tmp_path):
        path = tmp_path / "r.json"
        code, out, _ = run(capsys, "verify", "--family", "kossak", "--trials", "3", "--seed", "7",
                           "--tol", "1e-7", "--json", str(path))
        assert code == 0 and "verdict: pass" in out
        assert json.loads(path.read_text())["verdict"] == "pass"

    def test_fail_exit_code(self, capsys):
        code, out, _ = run(capsys, "verify", "--family", "riemann", "--trials", "2", "--tol", "1e-30")
        assert code == 1 and "verdict: fail" in out

    @pytest.mark.parametrize("args", [["--trials", "0"], ["--family", "bogus"], ["--tol", "0"]])
    def test_invalid(self, capsys, args):
        code, _, _ = run(capsys, "verify", *args)
        assert code == 2

    def test_family_list(self, capsys):
        code, out, _ = run(capsys, "verify", "--family", "riemann,master", "--trials", "2")
        assert code == 0 and "riemann" in out and "master" in out


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog", "theta-add-1")
    assert code == 0 and out.startswith("[theta-add-1]  eq 2-8")


def test_catalog_unknown(capsys):
    code, _, _ = run(capsys, "catalog", "nope")
    assert code == 2


def test_no_command(capsys):
    assert cli([]) == 2


def test_help(capsys):
    assert cli(["--help"]) == 0
