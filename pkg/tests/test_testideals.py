"""Test ideals: the Frobenius-root chain against the compatible chain."""

from __future__ import annotations

from fractions import Fraction

import pytest

from conftest import ring_f2, ring_f3, ring_f7

from fptlab import (
    Ideal,
    InvalidParameter,
    NotSharplyFPure,
    NotStabilized,
    PolyRing,
    bracket_power,
    ideal_equal,
    maximal_ideal,
    normal_form,
)
# aliased so pytest does not collect the library functions as tests
from fptlab import test_ideal_agreement as tau_agreement
from fptlab import test_ideal_compatible_chain as tau_compatible_chain
from fptlab import test_ideal_root_chain as tau_root_chain


def curve_f2():
    return ring_f2().from_terms({(2, 2): 1, (5, 0): 1, (0, 5): 1})


def cusp_f7():
    return ring_f7().from_terms({(0, 2): 1, (3, 0): 6})


def test_root_chain_on_curve():
    f = curve_f2()
    ring = f.ring
    report = tau_root_chain(f, Fraction(1, 2))
    expected = Ideal(ring, [ring.monomial((2, 0)), ring.monomial((1, 1)),
                            ring.monomial((0, 2))])
    assert ideal_equal(report.tau, expected)
    assert report.stabilized_at <= 2
    assert report.length == 3
    assert report.is_radical is False
    assert not report.equals_max_ideal
    payload = report.to_json_dict()
    assert payload == {
        "t": "1/2",
        "generators": ["x^2", "x*y", "y^2"],
        "length": 3,
        "radical": False,
        "stabilized_at": 1,
    }


def test_root_chain_smooth_coordinate():
    for p in (2, 5):
        ring = PolyRing(p, ("x", "y"))
        x = ring.monomial((1, 0))
        report = tau_root_chain(x, 1)
        assert ideal_equal(report.tau, Ideal(ring, [x]))


def test_root_chain_cusp():
    f = cusp_f7()
    report = tau_root_chain(f, Fraction(5, 6))
    assert ideal_equal(report.tau, maximal_ideal(f.ring))
    assert report.equals_max_ideal
    assert report.is_radical is True
    assert report.length == 1


def test_root_chain_below_threshold_gives_unit_ideal():
    # t strictly below the threshold: tau is the whole ring
    report = tau_root_chain(cusp_f7(), Fraction(1, 2))
    assert report.tau.is_unit_ideal()
    assert report.length == 0


def test_root_chain_parameter_validation():
    f = curve_f2()
    with pytest.raises(InvalidParameter):
        tau_root_chain(f, 0)
    with pytest.raises(InvalidParameter):
        tau_root_chain(f, Fraction(3, 2))
    with pytest.raises(InvalidParameter):
        tau_root_chain(f, Fraction(1, 2), s_max=1)


def test_root_chain_needs_room_to_confirm():
    # stabilization must be double-confirmed, so s_max=2 cannot conclude
    with pytest.raises(NotStabilized):
        tau_root_chain(curve_f2(), Fraction(1, 2), s_max=2)


def test_compatible_chain_examples():
    f = cusp_f7()
    report = tau_compatible_chain(f, 5, 7)
    assert ideal_equal(report.tau, maximal_ideal(f.ring))

    ring = PolyRing(2, ("x",))
    x = ring.monomial((1,))
    report = tau_compatible_chain(x, 1, 2)
    assert ideal_equal(report.tau, Ideal(ring, [x]))

    with pytest.raises(NotSharplyFPure):
        tau_compatible_chain(curve_f2(), 1, 2)


def test_compatible_chain_output_is_compatible():
    f = cusp_f7()
    report = tau_compatible_chain(f, 5, 7)
    f5 = f ** 5
    bracket = bracket_power(report.tau, 7)
    for g in report.tau.generators:
        assert normal_form(f5 * g, bracket).is_zero()


@pytest.mark.parametrize("a,q", [(5, 7)])
def test_agreement_cusp(a, q):
    assert tau_agreement(cusp_f7(), a, q)


def test_agreement_coordinate_across_representations():
    ring = PolyRing(2, ("x",))
    x = ring.monomial((1,))
    assert tau_agreement(x, 1, 2)   # lambda = 1
    assert tau_agreement(x, 1, 4)   # lambda = 1/3
    assert tau_agreement(x, 3, 4)   # lambda = 1


def test_agreement_double_line():
    f = ring_f3().from_terms({(2, 1): 1})
    assert tau_agreement(f, 1, 3)


def test_monotone_in_t_on_curve():
    f = curve_f2()
    taus = [tau_root_chain(f, t).tau
            for t in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), 1)]
    for bigger, smaller in zip(taus, taus[1:]):
        assert bigger.contains_ideal(smaller)


def test_monotone_in_t_on_cusp():
    f = cusp_f7()
    taus = [tau_root_chain(f, t).tau
            for t in (Fraction(1, 2), Fraction(5, 6), 1)]
    for bigger, smaller in zip(taus, taus[1:]):
        assert bigger.contains_ideal(smaller)
    assert taus[0].is_unit_ideal()
    assert ideal_equal(taus[2], Ideal(f.ring, [f]))


def test_tau_at_one_is_principal_for_square_free_instances():
    # smooth coordinate and the cusp: tau(f^1) = <f>
    for f in (ring_f2().monomial((1, 0)), cusp_f7()):
        report = tau_root_chain(f, 1)
        assert ideal_equal(report.tau, Ideal(f.ring, [f]))


def test_tau_contains_f_at_certified_threshold():
    f = cusp_f7()
    report = tau_root_chain(f, Fraction(5, 6))
    assert report.tau.contains(f)
