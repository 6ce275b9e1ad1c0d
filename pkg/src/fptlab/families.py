"""Named regression families with end-to-end verifiers.

Each constructor validates its constraints, builds the polynomial, and
attaches the expected threshold data; each verifier runs the relevant
exact checks and returns a PASS/FAIL report.  The reference log
canonical thresholds are supplied constants (they come from blow-up
computations outside this library's scope); everything on the
prime-characteristic side is computed and certified exactly.

Families:

* deformed Fermat: x_1^d + ... + x_n^d + (x_1...x_n)^(d-2), whose
  threshold at p = -1 mod d differs from the lct while p stays coprime
  to the threshold's denominator;
* equal-threshold curve: x^2 y^2 + x^N + y^N over F_2 (N = 2n+1),
  where both thresholds equal 1/2 yet the test ideal is not radical;
* the cusp y^2 - x^3, with exact certification when p = 1 mod 6 and
  interval bracketing when p = 5 mod 6;
* the double line x^2 y, the non-square-free case whose signature has
  left slope -1 at the threshold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ConstraintViolation
from .fsignature import left_derivative_table, splitting_height_estimate
from .ideals import Ideal, ideal_equal, monomial_is_radical, quotient_length
from .polyring import PolyRing, SparsePoly
from .primefield import is_prime
from .testideals import test_ideal_root_chain
from .thresholds import (
    certify_fpt,
    fpt_interval,
    is_sharply_fpure,
    isolated_certificate,
    nu_sequence,
)


@dataclass
class FamilyInstance:
    f: SparsePoly
    expected_fpt: Fraction | None
    reference_lct: Fraction | None
    provenance: str
    constraints_checked: list = field(default_factory=list)


@dataclass
class CheckResult:
    name: str
    status: str  # "PASS" or "FAIL"
    detail: str = ""


@dataclass
class VerifyReport:
    family: str
    parameters: dict
    instance: FamilyInstance
    checks: list
    certified_fpt: Fraction | None

    @property
    def all_pass(self) -> bool:
        return all(c.status == "PASS" for c in self.checks)

    def to_json_dict(self) -> dict:
        inst = self.instance
        return {
            "instance": {
                "family": self.family,
                "parameters": self.parameters,
                "f": inst.f.render(),
                "p": inst.f.ring.p,
                "expected_fpt": None if inst.expected_fpt is None else str(inst.expected_fpt),
                "constraints": [
                    {"name": name, "ok": ok} for name, ok in inst.constraints_checked
                ],
            },
            "checks": [
                {"name": c.name, "status": c.status, "detail": c.detail}
                for c in self.checks
            ],
            "certified_fpt": None if self.certified_fpt is None else str(self.certified_fpt),
            "reference_lct": None if inst.reference_lct is None else str(inst.reference_lct),
        }


def _enforce(constraints) -> list:
    for name, ok in constraints:
        if not ok:
            raise ConstraintViolation(name)
    return list(constraints)


def _check(checks: list, name: str, ok: bool, detail: str = "") -> bool:
    checks.append(CheckResult(name, "PASS" if ok else "FAIL", detail))
    return ok


# ---------------------------------------------------------------------------
# Deformed Fermat hypersurfaces
# ---------------------------------------------------------------------------


def deformed_fermat_instance(p: int, d: int, n: int) -> FamilyInstance:
    """f = x_1^d + ... + x_n^d + (x_1 ... x_n)^(d-2) over F_p."""
    constraints = _enforce([
        ("p is an odd prime", is_prime(p) and p % 2 == 1),
        ("d >= n >= 4, or d > n = 3", (d >= n >= 4) or (d > n == 3)),
        ("p does not divide d*(n*(d-2) - d)", d * (n * (d - 2) - d) % p != 0),
    ])
    ring = PolyRing(p, tuple(f"x{i}" for i in range(1, n + 1)))
    terms = {}
    for i in range(n):
        e = [0] * n
        e[i] = d
        terms[tuple(e)] = 1
    terms[(d - 2,) * n] = 1
    f = ring.from_terms(terms)
    expected = None
    if (p + 1) % d == 0:
        expected = Fraction(n * (p - d + 1) + d, d * (p - 1))
    return FamilyInstance(
        f=f,
        expected_fpt=expected,
        reference_lct=Fraction(n, d),
        provenance=f"deformed-fermat(p={p}, d={d}, n={n})",
        constraints_checked=constraints,
    )


def verify_deformed_fermat(p: int, d: int, n: int, e_max: int = 1) -> VerifyReport:
    """Certify fpt = (n(p-d+1)+d)/(d(p-1)) and its headline properties."""
    inst = deformed_fermat_instance(p, d, n)
    _enforce([("p = -1 mod d", (p + 1) % d == 0)])
    f = inst.f
    expected = inst.expected_fpt
    lct = inst.reference_lct
    a = (p - d + 1) // d
    a_cert = n * a + 1
    checks: list = []

    ok_euler = _euler_identity_holds(f, d, n)
    _check(checks, "euler-identity", ok_euler,
           "the partial-derivative identity isolating each x_i^d holds exactly")

    iso = isolated_certificate(f, a_cert, p)
    _check(checks, "isolated-criterion",
           iso.certified and iso.value == expected,
           f"f^{a_cert} = {iso.unit} * (x_1...x_{n})^{p - 1} mod m^[{p}]"
           if iso.certified else "congruence failed")

    chain_cert = certify_fpt(f, a_cert, p)
    _check(checks, "compatible-chain-agrees",
           chain_cert.certified and chain_cert.value == expected,
           f"witness {chain_cert.witness.render()}" if chain_cert.certified else chain_cert.reason)

    intervals_ok = all(fpt_interval(f, e).contains(expected) for e in range(1, e_max + 1))
    _check(checks, "nu-interval", intervals_ok,
           f"expected threshold inside every depth <= {e_max} interval")

    _check(checks, "fpt-below-lct", expected <= lct, f"{expected} <= {lct}")
    _check(checks, "fpt-differs-from-lct", expected != lct, f"{expected} != {lct}")
    _check(checks, "denominator-coprime-to-p",
           math.gcd(p, expected.denominator) == 1,
           f"gcd({p}, {expected.denominator}) = 1")

    certified = expected if (iso.certified and chain_cert.certified) else None
    return VerifyReport("deformed-fermat", {"p": p, "d": d, "n": n},
                        inst, checks, certified)


def _euler_identity_holds(f: SparsePoly, d: int, n: int) -> bool:
    ring = f.ring
    for i in range(n):
        xi = ring.variable(i)
        lhs = (xi ** d).scale(d * (n * (d - 2) - d))
        rhs = f.scale(d * (d - 2))
        rhs = rhs + (xi * f.partial_derivative(i)).scale(n * (d - 2) - 2 * d + 2)
        for j in range(n):
            if j != i:
                rhs = rhs - (ring.variable(j) * f.partial_derivative(j)).scale(d - 2)
        if lhs != rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# The equal-threshold curve over F_2
# ---------------------------------------------------------------------------


def equal_threshold_curve_instance(n: int) -> FamilyInstance:
    """f = x^2 y^2 + x^N + y^N over F_2, N = 2n+1."""
    constraints = _enforce([("n >= 2", n >= 2)])
    N = 2 * n + 1
    ring = PolyRing(2, ("x", "y"))
    f = ring.from_terms({(2, 2): 1, (N, 0): 1, (0, N): 1})
    return FamilyInstance(
        f=f,
        expected_fpt=Fraction(1, 2),
        reference_lct=Fraction(1, 2),
        provenance=f"equal-threshold-curve(n={n}, N={N})",
        constraints_checked=constraints,
    )


def verify_equal_threshold_curve(n: int, e_max: int = 8, s_max: int = 8) -> VerifyReport:
    """Both thresholds are 1/2, yet the test ideal fails to be radical."""
    inst = equal_threshold_curve_instance(n)
    f = inst.f
    ring = f.ring
    checks: list = []

    nus = [rec.nu for rec in nu_sequence(f, e_max)]
    expected_nus = [2 ** (e - 1) - 1 for e in range(1, e_max + 1)]
    _check(checks, "nu-values", nus == expected_nus, f"nu = {nus}")

    interval = fpt_interval(f, e_max)
    _check(checks, "fpt-interval", interval.contains(Fraction(1, 2)),
           f"({interval.lower}, {interval.upper}] contains 1/2")

    report = test_ideal_root_chain(f, Fraction(1, 2), s_max)
    target = Ideal(ring, [ring.monomial((n, 0)), ring.monomial((1, 1)),
                          ring.monomial((0, n))])
    _check(checks, "test-ideal", ideal_equal(report.tau, target),
           f"tau = {report.tau.render()}, stabilized at {report.stabilized_at}")
    _check(checks, "tau-length", report.length == 2 * n - 1,
           f"length {report.length} = 2n-1")
    _check(checks, "tau-not-radical", report.is_radical is False,
           "the test ideal is not radical although fpt = lct")

    table = left_derivative_table(f, Fraction(1, 2), e_max)
    start = min(4, e_max)
    tail = [row.ratio for row in table.rows[start - 1:]]
    _check(checks, "slope-decay",
           all(a >= b for a, b in zip(tail, tail[1:])),
           f"normalized lengths from e={start}: {[str(v) for v in tail]}")

    _check(checks, "thresholds-coincide", inst.expected_fpt == inst.reference_lct,
           "fpt = lct = 1/2")

    return VerifyReport("equal-threshold-curve", {"n": n, "e_max": e_max},
                        inst, checks, None)


# ---------------------------------------------------------------------------
# The cusp
# ---------------------------------------------------------------------------


def cusp_instance(p: int) -> FamilyInstance:
    """f = y^2 - x^3 over F_p, p >= 5."""
    constraints = _enforce([
        ("p is prime", is_prime(p)),
        ("p >= 5", p >= 5),
    ])
    ring = PolyRing(p, ("x", "y"))
    f = ring.from_terms({(0, 2): 1, (3, 0): p - 1})
    if p % 6 == 1:
        expected = Fraction(5, 6)
    else:
        expected = Fraction(5, 6) - Fraction(1, 6 * p)
    return FamilyInstance(
        f=f,
        expected_fpt=expected,
        reference_lct=Fraction(5, 6),
        provenance=f"cusp(p={p})",
        constraints_checked=constraints,
    )


def verify_cusp(p: int, e_max: int = 3) -> VerifyReport:
    """Certify fpt = 5/6 when p = 1 mod 6; bracket 5/6 - 1/(6p) otherwise."""
    inst = cusp_instance(p)
    f = inst.f
    expected = inst.expected_fpt
    checks: list = []
    certified = None

    if p % 6 == 1:
        a = 5 * (p - 1) // 6
        iso = isolated_certificate(f, a, p)
        _check(checks, "isolated-criterion", iso.certified and iso.value == expected,
               f"unit u = {iso.unit}" if iso.certified else "congruence failed")
        chain_cert = certify_fpt(f, a, p)
        _check(checks, "certificate",
               chain_cert.certified and chain_cert.value == expected,
               f"witness {chain_cert.witness.render()}"
               if chain_cert.certified else chain_cert.reason)
        intervals_ok = all(fpt_interval(f, e).contains(expected)
                           for e in range(1, e_max + 1))
        _check(checks, "nu-interval", intervals_ok,
               f"5/6 inside every depth <= {e_max} interval")
        height = splitting_height_estimate(f, a, p, e_max=min(e_max, 3))
        _check(checks, "splitting-height-at-least-2",
               height.height is not None and height.height >= 2,
               f"estimated height {height.height}")
        _check(checks, "thresholds-coincide", expected == inst.reference_lct,
               "fpt = lct = 5/6")
        if iso.certified and chain_cert.certified:
            certified = expected
    else:
        nus = [rec.nu for rec in nu_sequence(f, e_max)]
        expected_nus = [int(expected * p ** e) - 1 for e in range(1, e_max + 1)]
        _check(checks, "nu-values", nus == expected_nus, f"nu = {nus}")
        interval = fpt_interval(f, e_max)
        _check(checks, "fpt-interval", interval.contains(expected),
               f"({interval.lower}, {interval.upper}] contains {expected}")
        impure = all(
            not is_sharply_fpure(f, math.ceil(expected * (p ** e - 1)), p ** e)
            for e in range(1, e_max + 1)
        )
        _check(checks, "not-sharply-fpure-at-fpt", impure,
               "p divides the threshold denominator, so no depth is sharply F-pure")
        _check(checks, "fpt-below-lct", expected < inst.reference_lct,
               f"{expected} < 5/6")

    return VerifyReport("cusp", {"p": p, "e_max": e_max}, inst, checks, certified)


# ---------------------------------------------------------------------------
# The double line
# ---------------------------------------------------------------------------


def double_line_instance(p: int) -> FamilyInstance:
    """f = x^2 y over F_p, p odd: the non-square-free benchmark."""
    constraints = _enforce([
        ("p is an odd prime", is_prime(p) and p % 2 == 1),
    ])
    ring = PolyRing(p, ("x", "y"))
    f = ring.from_terms({(2, 1): 1})
    return FamilyInstance(
        f=f,
        expected_fpt=Fraction(1, 2),
        reference_lct=Fraction(1, 2),
        provenance=f"double-line(p={p})",
        constraints_checked=constraints,
    )


def verify_double_line(p: int, e_max: int = 5) -> VerifyReport:
    """fpt = 1/2 certified; the signature's left slope tends to -1."""
    inst = double_line_instance(p)
    f = inst.f
    expected = inst.expected_fpt
    a = (p - 1) // 2
    checks: list = []

    intervals_ok = all(fpt_interval(f, e).contains(expected)
                       for e in range(1, e_max + 1))
    _check(checks, "fpt-interval", intervals_ok,
           f"1/2 inside every depth <= {e_max} interval")

    cert = certify_fpt(f, a, p)
    _check(checks, "certificate", cert.certified and cert.value == expected,
           f"witness {cert.witness.render()}" if cert.certified else cert.reason)

    table = left_derivative_table(f, expected, e_max)
    slopes = [row.left_slope for row in table.rows]
    approach = (
        all(s < -1 for s in slopes)
        and all(a < b for a, b in zip(slopes, slopes[1:]))
        and abs(slopes[-1] + 1) <= Fraction(1, p ** e_max)
    )
    _check(checks, "slope-approaches-minus-one", approach,
           f"slopes {[str(s) for s in slopes]}")

    height = splitting_height_estimate(f, a, p, e_max=min(e_max, 3))
    _check(checks, "splitting-height", height.height == 1,
           f"estimated height {height.height}")

    certified = expected if cert.certified else None
    return VerifyReport("double-line", {"p": p, "e_max": e_max}, inst, checks, certified)
