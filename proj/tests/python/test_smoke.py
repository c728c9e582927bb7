"""Smoke tests for the _liesym python module, plus a sympy cross-check."""

from fractions import Fraction

import pytest

import _liesym as ls


def test_canonicalization():
    assert ls.canonicalize("2/4 * u_xx") == "1/2*u_xx"
    assert ls.canonicalize("u*exp(-x) + 0*t") == "u*exp(-x)"
    assert ls.canonicalize("x + u - x") == "u"
    assert ls.canonicalize("u_tx") == "u_xt"


def test_differentiate():
    assert ls.differentiate("u*exp(-x)", "x") == "-u*exp(-x)"
    assert ls.differentiate("f(x,u)*u", "u") == "u*D[f,u](x,u) + f(x,u)"


def test_total_derivative():
    assert ls.total_derivative("u", "x") == "u_x"
    assert ls.total_derivative("f(x,u)", "x") == "u_x*D[f,u](x,u) + D[f,x](x,u)"


def test_symmetry_residual():
    # the principal direction is always a symmetry
    assert ls.symmetry_residual("0", "1", "0") == "0"
    # x-translation forces f_x = g_x = 0
    r = ls.symmetry_residual("1", "0", "0")
    assert "D[f,x](x,u)" in r and "D[g,x](x,u)" in r
    # the corrected scaling row verifies
    assert ls.symmetry_residual("0", "t", "u", "u^-2*Phi(x)", "u^-1*Psi(x)") == "0"


def test_determining_system():
    sys = ls.determining_system("1", "0", "0")
    assert sys == {
        "u_x^2": "-D[f,x](x,u)",
        "u_xx": "-D[g,x](x,u)",
    }


def test_tables():
    comm = ls.commutator_table()
    assert comm[1][3] == "Y2"
    assert comm[3][1] == "-Y2"
    assert comm[2][3] == "Y3"
    assert sum(1 for row in comm for cell in row if cell != "0") == 4

    adj = ls.adjoint_table()
    assert adj[3][1] == "exp(s)*Y2"
    assert adj[1][3] == "-s*Y2 + Y4"
    assert adj[0] == ["Y1", "Y2", "Y3", "Y4", "Y5"]


def test_normalize():
    rep = ls.normalize(["0", "0", "0", "0", "1"])
    assert rep["representative"] == 5
    assert rep["steps"] == []

    rep = ls.normalize(["4", "0", "0", "1", "0"])
    assert rep["representative"] == 8
    assert rep["steps"][0]["type"] == "scaling"
    assert rep["steps"][0]["parameter"] == "1/4"

    stuck = ls.normalize(["0", "3", "0", "0", "1"])
    assert stuck["representative"] == 0
    assert any("impossible" in d for d in stuck["discrepancies"])


def test_classify():
    table = ls.classify()
    assert len(table["rows"]) == 6
    assert table["verifications_performed"] == 16
    assert table["verifications_passed"] == 7
    assert table["rows"][0]["operators"] == ["d_x", "d_x + d_t", "d_x - d_t"]
    assert table["rows"][3]["operators"] == []  # nothing verifies in row 4
    assert any("row 4 f" in d for d in table["deltas"])


def test_run_cli_exit_codes():
    rc, out, _ = ls.run_cli(["commutators"])
    assert rc == 0 and "PASS: 25/25" in out
    rc, out, _ = ls.run_cli(["classify"])
    assert rc == 1
    rc, _, err = ls.run_cli(["determine"])
    assert rc == 64


def test_evaluate_matches_sympy():
    sympy = pytest.importorskip("sympy")
    x, u, ux, uxx = sympy.symbols("x u u_x u_xx")
    # residual of x-translation against concrete coefficients, at a rational
    # point, cross-checked in exact arithmetic
    f = sympy.Rational(3, 2) * x**2 * u
    g = 5 * x * u
    expected = -sympy.diff(f, x) * ux**2 - sympy.diff(g, x) * uxx
    point = {x: sympy.Rational(2, 3), u: sympy.Rational(-1, 2),
             ux: sympy.Rational(5, 7), uxx: sympy.Rational(1, 3)}

    got = ls.evaluate(
        ls.symmetry_residual("1", "0", "0", "3/2*x^2*u", "5*x*u"),
        {"x": "2/3", "u": "-1/2", "u_x": "5/7", "u_xx": "1/3"},
    )
    assert Fraction(got) == Fraction(str(expected.subs(point)))
