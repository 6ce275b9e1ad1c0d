"""Polynomial grammar, CLI dispatch, exit codes, and output formats."""

from __future__ import annotations

import json

import pytest

from conftest import random_poly, ring_f2, ring_f3

from fptlab import ParseError, PolyRing, UnknownVariable, parse_polynomial
from fptlab.cli import main


# -- parsing ---------------------------------------------------------------------


def test_parse_curve():
    f = parse_polynomial("x^2*y^2 + x^5 + y^5", 2)
    assert f == ring_f2().from_terms({(2, 2): 1, (5, 0): 1, (0, 5): 1})


def test_parse_subtraction_and_inference_order():
    f = parse_polynomial("y^2 - x^3", 7)
    # variables are inferred in first-appearance order: y before x
    assert f.ring.variables == ("y", "x")
    assert f == f.ring.from_terms({(2, 0): 1, (0, 3): 6})
    assert f.render() == "y^2 + 6*x^3"


def test_parse_power_of_parenthesized_sum():
    f = parse_polynomial("(x+y)^2", 2)
    assert f == f.ring.from_terms({(2, 0): 1, (0, 2): 1})


def test_parse_juxtaposition_and_coefficients():
    f = parse_polynomial("2x y + 3", 5)
    assert f == f.ring.from_terms({(1, 1): 2, (0, 0): 3})


def test_parse_reduces_coefficients_mod_p():
    f = parse_polynomial("7x + 14", 7)
    assert f.is_zero()


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as err:
        parse_polynomial("x^", 5)
    assert err.value.position == 2
    with pytest.raises(ParseError) as err:
        parse_polynomial("x + ", 5)
    assert err.value.position == 4
    with pytest.raises(ParseError) as err:
        parse_polynomial("2^3", 5)  # integers take no exponent in the grammar
    assert err.value.position == 1
    with pytest.raises(ParseError):
        parse_polynomial("x $ y", 5)
    with pytest.raises(ParseError):
        parse_polynomial("(x", 5)


def test_parse_declared_variables():
    f = parse_polynomial("x", 3, variables=("x", "y"))
    assert f.ring.variables == ("x", "y")
    with pytest.raises(UnknownVariable):
        parse_polynomial("x + z", 3, variables=("x", "y"))


def test_parse_render_round_trip(rng):
    for ring in (ring_f2(), ring_f3(), PolyRing(7, ("a", "b", "c"))):
        for _ in range(20):
            f = random_poly(ring, rng)
            assert parse_polynomial(f.render(), ring.p, ring.variables) == f
    zero = ring_f3().zero()
    assert parse_polynomial(zero.render(), 3, ("x", "y")) == zero


# -- subcommands -----------------------------------------------------------------


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_nu_csv(capsys):
    code, out, _ = run_cli(capsys, "nu", "-f", "x", "-p", "3", "-e", "2")
    assert code == 0
    assert out == "e,nu\n1,2\n2,8\n"


def test_fpt_json_with_certificate(capsys):
    code, out, _ = run_cli(capsys, "fpt", "-f", "y^2-x^3", "-p", "7", "-e", "2",
                           "--certify", "5", "7")
    assert code == 0
    payload = json.loads(out)
    assert payload["certified_fpt"] == "5/6"
    assert payload["interval"] == {"lower": "40/49", "upper": "41/49", "width": "1/49"}
    assert payload["nu"] == [5, 40]
    assert payload["certificate"]["witness"] == ["y", "x"]
    assert payload["certificate"]["method"] == "compatible-chain"


def test_fpt_refutation_exits_5(capsys):
    code, out, _ = run_cli(capsys, "fpt", "-f", "x^2*y", "-p", "3", "-e", "1",
                           "--certify", "2", "3")
    assert code == 5
    payload = json.loads(out)
    assert payload["certified_fpt"] is None
    assert "refutation" in payload


def test_tau_json(capsys):
    code, out, _ = run_cli(capsys, "tau", "-f", "x^2*y^2 + x^5 + y^5", "-p", "2",
                           "-t", "1/2")
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "t": "1/2",
        "generators": ["x^2", "x*y", "y^2"],
        "length": 3,
        "radical": False,
        "stabilized_at": 1,
    }


def test_tau_not_stabilized_exits_4(capsys):
    code, _, err = run_cli(capsys, "tau", "-f", "x^2*y^2 + x^5 + y^5", "-p", "2",
                           "-t", "1/2", "--smax", "2")
    assert code == 4
    assert "s_max" in err


def test_fsig_csv(capsys):
    code, out, _ = run_cli(capsys, "fsig", "-f", "x", "-p", "3", "--vars", "x,y",
                           "--grid", "1/3,2/3", "-e", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "t_num,t_den,e,length,s_num,s_den,s_float"
    assert lines[1] == "1,3,1,6,2,3,0.6666666667"
    assert lines[2] == "2,3,1,3,1,3,0.3333333333"


def test_deriv_csv(capsys):
    code, out, _ = run_cli(capsys, "deriv", "-f", "x^2*y", "-p", "3",
                           "--alpha", "1/2", "-e", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == ("e,exponent,lambda,ratio_num,ratio_den,ratio_float,"
                        "slope_num,slope_den,slope_float")
    assert lines[1] == "1,1,2,2,3,0.6666666667,-4,3,-1.333333333"
    assert lines[2] == "2,4,5,5,9,0.5555555556,-10,9,-1.111111111"


def test_deriv_without_slope_columns(capsys):
    # over F_2 the parameter 1/2 has no a/(q-1) representation
    code, out, _ = run_cli(capsys, "deriv", "-f", "x^2*y^2 + x^5 + y^5", "-p", "2",
                           "--alpha", "1/2", "-e", "3")
    assert code == 0
    for line in out.splitlines()[1:]:
        assert line.endswith(",,,")


def test_verify_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "verify", "equal-threshold-curve", "-n", "2",
                           "-e", "8")
    assert code == 0
    payload = json.loads(out)
    assert all(c["status"] == "PASS" for c in payload["checks"])

    code, out, _ = run_cli(capsys, "verify", "cusp", "-p", "7")
    assert code == 0
    assert json.loads(out)["certified_fpt"] == "5/6"

    code, out, _ = run_cli(capsys, "verify", "deformed-fermat", "-p", "19",
                           "-d", "5", "-n", "3")
    assert code == 0

    code, out, _ = run_cli(capsys, "verify", "double-line", "-p", "3", "-e", "4")
    assert code == 0


def test_verify_constraint_violation_exits_3(capsys):
    code, _, err = run_cli(capsys, "verify", "cusp", "-p", "3")
    assert code == 3
    assert "p >= 5" in err


def test_parse_error_exits_2(capsys):
    code, _, err = run_cli(capsys, "nu", "-f", "x^", "-p", "3", "-e", "1")
    assert code == 2
    assert "position" in err


def test_identical_invocations_are_byte_identical(capsys):
    args = ("fsig", "-f", "x^2*y^2 + x^5 + y^5", "-p", "2",
            "--grid", "1/4,3/8", "-e", "3")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second
