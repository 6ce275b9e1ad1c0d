"""nu sequences, threshold intervals, and exact certification."""

from __future__ import annotations

from fractions import Fraction

import pytest

from conftest import random_poly, ring_f2, ring_f3, ring_f7

from fptlab import (
    Ideal,
    InvalidParameter,
    NotInMaximalIdeal,
    PolyRing,
    QNotPowerOfP,
    ZeroPolynomial,
    certify_fpt,
    fpt_interval,
    ideal_equal,
    is_sharply_fpure,
    isolated_certificate,
    isolated_criterion,
    maximal_ideal,
    nu_sequence,
    pow_truncated,
)


def curve_f2():
    return ring_f2().from_terms({(2, 2): 1, (5, 0): 1, (0, 5): 1})


def cusp_f7():
    return ring_f7().from_terms({(0, 2): 1, (3, 0): 6})


def nu_by_scan(f, e):
    """Independent oracle: ascend from zero at full depth, no windowing."""
    q = f.ring.p ** e
    a = 0
    while not pow_truncated(f, a + 1, q).is_zero():
        a += 1
    return a


def test_nu_curve():
    f = curve_f2()
    nus = [r.nu for r in nu_sequence(f, 4)]
    assert nus == [nu_by_scan(f, e) for e in (1, 2, 3, 4)]
    assert nus == [0, 1, 3, 7]


def test_nu_cusp():
    f = cusp_f7()
    nus = [r.nu for r in nu_sequence(f, 2)]
    assert nus == [nu_by_scan(f, 1), nu_by_scan(f, 2)]
    assert nus == [5, 40]


@pytest.mark.parametrize("p", [2, 3, 5])
def test_nu_of_coordinate(p):
    ring = PolyRing(p, ("x", "y"))
    x = ring.monomial((1, 0))
    assert [r.nu for r in nu_sequence(x, 2)] == [p - 1, p * p - 1]


def test_nu_preconditions():
    ring = ring_f3()
    with pytest.raises(ZeroPolynomial):
        nu_sequence(ring.zero(), 2)
    with pytest.raises(NotInMaximalIdeal):
        nu_sequence(ring.from_terms({(1, 0): 1, (0, 0): 1}), 2)
    with pytest.raises(InvalidParameter):
        nu_sequence(ring.monomial((1, 0)), 0)


def test_nu_recursion_bounds(rng):
    for ring in (ring_f2(), ring_f3()):
        p = ring.p
        for _ in range(15):
            f = random_poly(ring, rng, in_max_ideal=True, max_exp=4)
            nus = [r.nu for r in nu_sequence(f, 4)]
            for prev, nxt in zip(nus, nus[1:]):
                assert p * prev <= nxt <= p * prev + p - 1


def test_interval_examples():
    f = curve_f2()
    box = fpt_interval(f, 4)
    assert (box.lower, box.upper) == (Fraction(7, 16), Fraction(8, 16))
    assert box.contains(Fraction(1, 2))

    cusp = cusp_f7()
    box = fpt_interval(cusp, 2)
    assert (box.lower, box.upper) == (Fraction(40, 49), Fraction(41, 49))
    assert box.contains(Fraction(5, 6))

    x = ring_f3().monomial((1, 0))
    box = fpt_interval(x, 1)
    assert (box.lower, box.upper) == (Fraction(2, 3), Fraction(1, 1))
    assert box.contains(1)  # fpt of a smooth coordinate is exactly 1
    assert box.width == Fraction(1, 3)


def test_intervals_are_nested(rng):
    for ring in (ring_f2(), ring_f3()):
        for _ in range(10):
            f = random_poly(ring, rng, in_max_ideal=True, max_exp=4)
            previous = None
            for e in range(1, 5):
                box = fpt_interval(f, e)
                if previous is not None:
                    assert box.lower >= previous.lower
                    assert box.upper <= previous.upper
                previous = box


def test_sharp_fpurity_examples():
    assert is_sharply_fpure(cusp_f7(), 5, 7)
    assert not is_sharply_fpure(curve_f2(), 1, 2)
    x = ring_f2().monomial((1, 0))
    assert is_sharply_fpure(x, 1, 2)


def test_certify_cusp():
    f = cusp_f7()
    cert = certify_fpt(f, 5, 7)
    assert cert.certified
    assert cert.value == Fraction(5, 6)
    assert ideal_equal(cert.witness, maximal_ideal(f.ring))
    assert cert.method == "compatible-chain"
    payload = cert.to_json_dict()
    assert payload["witness"] == ["x", "y"]
    assert payload["value"] == "5/6"


def test_certify_coordinate():
    ring = PolyRing(2, ("x",))
    x = ring.monomial((1,))
    cert = certify_fpt(x, 1, 2)
    assert cert.certified and cert.value == 1
    assert ideal_equal(cert.witness, Ideal(ring, [x]))


def test_certify_rejects_bad_inputs():
    f = curve_f2()
    with pytest.raises(QNotPowerOfP):
        certify_fpt(f, 1, 3)
    with pytest.raises(InvalidParameter):
        certify_fpt(f, 0, 2)
    with pytest.raises(InvalidParameter):
        certify_fpt(ring_f2().monomial((1, 0)), 3, 2)  # lambda = 3 > 1


def test_certify_refutations():
    # f in m^[q] at the candidate exponent: threshold is smaller
    low = certify_fpt(curve_f2(), 1, 2)
    assert not low.certified and "m^[2]" in low.reason
    # chain reaches the unit ideal: threshold is larger
    x2y = ring_f3().from_terms({(2, 1): 1})
    high = certify_fpt(x2y, 1, 3)
    assert high.certified  # 1/2 is the true threshold here
    too_low = certify_fpt(x2y, 1, 9)  # candidate 1/8 < 1/2
    assert not too_low.certified
    assert "unit ideal" in too_low.reason


def test_isolated_criterion_examples():
    ok, unit = isolated_criterion(cusp_f7(), 5, 7)
    assert ok and unit == 3

    # the quartic diagonal deformation at p=3 in four variables
    ring = PolyRing(3, ("x1", "x2", "x3", "x4"))
    terms = {(4, 0, 0, 0): 1, (0, 4, 0, 0): 1, (0, 0, 4, 0): 1, (0, 0, 0, 4): 1,
             (2, 2, 2, 2): 1}
    f = ring.from_terms(terms)
    ok, unit = isolated_criterion(f, 1, 3)
    assert ok and unit == 1

    ok, unit = isolated_criterion(ring_f3().from_terms({(2, 1): 1}), 1, 3)
    assert not ok and unit is None


def test_isolated_implies_chain_certificate():
    f = cusp_f7()
    iso = isolated_certificate(f, 5, 7)
    chain = certify_fpt(f, 5, 7)
    assert iso.certified and chain.certified
    assert iso.value == chain.value
    assert ideal_equal(iso.witness, maximal_ideal(f.ring))
    # the chain witness is contained in the isolated witness b = m
    assert iso.witness.contains_ideal(chain.witness)


def test_certified_value_lies_in_every_interval():
    f = cusp_f7()
    cert = certify_fpt(f, 5, 7)
    for e in (1, 2):
        assert fpt_interval(f, e).contains(cert.value)
