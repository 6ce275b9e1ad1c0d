"""The nu function, F-pure-threshold intervals, and exact certification.

For f in m, ``nu_e = max{a >= 0 : f^a not in m^[p^e]}`` brackets the
F-pure threshold: fpt(f) lies in (nu_e/p^e, (nu_e+1)/p^e], and the
intervals nest as e grows.  When fpt(f) = a/(q-1) with q a power of p,
the value can be certified exactly: fpt(f) = a/(q-1) iff some proper
ideal b satisfies f^a in (b^[q] : b) \\ m^[q], and the minimal candidate
is the stabilization of the chain J_0 = <f>,
J_{i+1} = J_i + (f^a J_i)^[1/q].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    InvalidParameter,
    NotInMaximalIdeal,
    ZeroPolynomial,
)
from .ideals import Ideal, bracket_exponent, frobenius_root, ideal_equal, \
    ideal_sum, minimalize_generators, prune_generators
from .polyring import SparsePoly, mul_truncated, pow_truncated

METHOD_CHAIN = "compatible-chain"
METHOD_ISOLATED = "isolated-criterion"


@dataclass(frozen=True)
class NuRecord:
    e: int
    nu: int


@dataclass(frozen=True)
class FptInterval:
    """fpt(f) lies in (lower, upper]; the width is p^-e."""

    lower: Fraction
    upper: Fraction
    e: int

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    def contains(self, t) -> bool:
        t = Fraction(t)
        return self.lower < t <= self.upper


@dataclass
class FptCertificate:
    """Outcome of an exact certification attempt at lambda = a/(q-1).

    When ``certified`` is true, the witness ideal b is proper, contains
    f, and satisfies f^a in (b^[q] : b) with f^a outside m^[q]; those
    conditions prove fpt(f) = value.  Otherwise ``reason`` explains the
    refutation (the candidate value is not the threshold).
    """

    certified: bool
    value: Fraction
    a: int
    q: int
    witness: Ideal | None
    method: str
    reason: str = ""
    unit: int | None = None  # unit u when the isolated criterion produced it

    def to_json_dict(self) -> dict:
        if not self.certified:
            return {
                "value": str(self.value),
                "a": self.a,
                "q": self.q,
                "certified": False,
                "reason": self.reason,
            }
        return {
            "value": str(self.value),
            "a": self.a,
            "q": self.q,
            "witness": self.witness.generator_strings(),
            "method": self.method,
        }


def nu_sequence(f: SparsePoly, e_max: int) -> list[NuRecord]:
    """nu_e for e = 1..e_max by the nested window search.

    nu_1 comes from an ascending scan; each later nu_{e+1} is found
    inside [p*nu_e, p*nu_e + p - 1] because Frobenius is injective on
    bracket powers.
    """
    if f.is_zero():
        raise ZeroPolynomial("nu is undefined for the zero polynomial")
    if f.constant_term() != 0:
        raise NotInMaximalIdeal("f has a nonzero constant term; nu would be infinite")
    if e_max < 1:
        raise InvalidParameter("e_max must be at least 1")
    p = f.ring.p
    records = []
    nu_prev = None
    for e in range(1, e_max + 1):
        q = p ** e
        if nu_prev is None:
            power = f.ring.one()
            nu = 0
            while True:
                nxt = mul_truncated(power, f, q)
                if nxt.is_zero():
                    break
                power = nxt
                nu += 1
        else:
            base = p * nu_prev
            power = pow_truncated(f, base, q)
            assert not power.is_zero(), "window invariant violated"
            nu = base
            for _ in range(p - 1):
                nxt = mul_truncated(power, f, q)
                if nxt.is_zero():
                    break
                power = nxt
                nu += 1
        records.append(NuRecord(e, nu))
        nu_prev = nu
    return records


def fpt_interval(f: SparsePoly, e: int) -> FptInterval:
    """The bracketing interval (nu_e/p^e, (nu_e+1)/p^e] at depth e."""
    nu = nu_sequence(f, e)[-1].nu
    q = f.ring.p ** e
    return FptInterval(Fraction(nu, q), Fraction(nu + 1, q), e)


def is_sharply_fpure(f: SparsePoly, a: int, q: int) -> bool:
    """Sharp F-purity of (R, f^{a/(q-1)}): true iff f^a is outside m^[q]."""
    bracket_exponent(f.ring, q)
    if a < 0:
        raise InvalidParameter("exponent a must be nonnegative")
    return not pow_truncated(f, a, q).is_zero()


def compatible_chain(f: SparsePoly, a: int, q: int) -> tuple[Ideal, int]:
    """Stabilization of J_0 = <f>, J_{i+1} = J_i + (f^a J_i)^[1/q].

    The limit is the smallest ideal containing f with f^a J inside
    J^[q]; Noetherian ascent guarantees termination.  Returns the limit
    and the number of growth steps taken.
    """
    bracket_exponent(f.ring, q)
    ring = f.ring
    fa = f ** a
    chain = prune_generators(Ideal(ring, [f]))
    steps = 0
    while True:
        scaled = Ideal(ring, [fa * g for g in chain.generators])
        grown = prune_generators(ideal_sum(chain, frobenius_root(scaled, q)))
        if ideal_equal(grown, chain):
            return minimalize_generators(chain), steps
        chain = grown
        steps += 1


def certify_fpt(f: SparsePoly, a: int, q: int) -> FptCertificate:
    """Attempt to certify fpt(f) = a/(q-1) exactly.

    The certificate holds iff the compatible chain stabilizes at a
    proper ideal and f^a is outside m^[q]; failing either condition
    refutes the candidate value.
    """
    bracket_exponent(f.ring, q)
    if a < 1:
        raise InvalidParameter("certification needs a >= 1")
    if f.is_zero():
        raise ZeroPolynomial("cannot certify the zero polynomial")
    value = Fraction(a, q - 1)
    if value > 1:
        raise InvalidParameter(f"lambda = {value} > 1 is not certifiable")
    sharply = is_sharply_fpure(f, a, q)
    witness, _ = compatible_chain(f, a, q)
    proper = not witness.is_unit_ideal()
    if sharply and proper:
        return FptCertificate(True, value, a, q, witness, METHOD_CHAIN)
    if not sharply:
        reason = f"f^{a} lies in m^[{q}], so fpt(f) < {value}"
    else:
        reason = f"the compatible chain reaches the unit ideal, so fpt(f) > {value}"
    return FptCertificate(False, value, a, q, witness if proper else None,
                          METHOD_CHAIN, reason=reason)


def isolated_criterion(f: SparsePoly, a: int, q: int) -> tuple[bool, int | None]:
    """Congruence test f^a = u * (x_1...x_n)^{q-1} mod m^[q].

    Sound as an fpt certificate only under the isolated-singularity
    hypothesis (the radical of the test ideal is m); this routine checks
    just the congruence and reports the unit u on success.
    """
    bracket_exponent(f.ring, q)
    if a < 0:
        raise InvalidParameter("exponent a must be nonnegative")
    reduced = pow_truncated(f, a, q)
    target = (q - 1,) * f.ring.n
    if len(reduced.terms) == 1 and target in reduced.terms:
        return True, reduced.terms[target]
    return False, None


def isolated_certificate(f: SparsePoly, a: int, q: int) -> FptCertificate:
    """Certificate via the isolated criterion, with witness b = m."""
    from .ideals import maximal_ideal

    ok, unit = isolated_criterion(f, a, q)
    value = Fraction(a, q - 1)
    if not ok:
        return FptCertificate(False, value, a, q, None, METHOD_ISOLATED,
                              reason="f^a is not congruent to a unit multiple of "
                                     "(x_1...x_n)^(q-1) mod m^[q]")
    return FptCertificate(True, value, a, q, maximal_ideal(f.ring),
                          METHOD_ISOLATED, unit=unit)
