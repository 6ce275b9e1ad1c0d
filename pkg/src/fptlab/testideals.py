"""Test ideals tau(R, f^t) at rational parameters in (0, 1].

Two independent algorithms are provided and cross-checked:

* the Frobenius-root chain I_s = <f^(ceil(t p^s))>^[1/p^s], an
  ascending chain whose stable value is tau(R, f^t) for any rational
  t in (0, 1];
* the compatible-ideal chain seeded at <f>, valid when t = a/(q-1)
  and (R, f^t) is sharply F-pure, where tau is the minimal ideal b
  containing f with f^a in (b^[q] : b).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidParameter, NotSharplyFPure, NotStabilized, ZeroPolynomial
from .ideals import (
    Ideal,
    INFINITE,
    bracket_power,
    frobenius_root,
    ideal_equal,
    maximal_ideal,
    minimalize_generators,
    monomial_is_radical,
    normal_form,
    quotient_length,
)
from .polyring import SparsePoly
from .thresholds import compatible_chain, is_sharply_fpure


@dataclass
class TauReport:
    """A computed test ideal together with its headline invariants.

    ``is_radical`` is None (undecided) unless tau is a monomial ideal;
    general radical computation is out of scope.
    """

    t: Fraction
    tau: Ideal
    stabilized_at: int
    length: int | float
    is_radical: bool | None
    equals_max_ideal: bool

    def to_json_dict(self) -> dict:
        return {
            "t": str(self.t),
            "generators": self.tau.generator_strings(),
            "length": "infinite" if self.length == INFINITE else self.length,
            "radical": "unknown" if self.is_radical is None else self.is_radical,
            "stabilized_at": self.stabilized_at,
        }


def _finalize(t: Fraction, tau: Ideal, stabilized_at: int) -> TauReport:
    tau = minimalize_generators(tau)
    monomial = all(g.is_monomial() for g in tau.generators)
    return TauReport(
        t=t,
        tau=tau,
        stabilized_at=stabilized_at,
        length=quotient_length(tau),
        is_radical=monomial_is_radical(tau) if monomial else None,
        equals_max_ideal=ideal_equal(tau, maximal_ideal(tau.ring)),
    )


def test_ideal_root_chain(f: SparsePoly, t, s_max: int = 8) -> TauReport:
    """tau(R, f^t) from the ascending Frobenius-root chain.

    Stabilization must be confirmed by two consecutive equalities
    I_s = I_{s+1} = I_{s+2} within s_max steps; otherwise NotStabilized
    is raised rather than returning an unconfirmed chain value.
    """
    t = Fraction(t)
    if not (0 < t <= 1):
        raise InvalidParameter(f"t must lie in (0, 1], got {t}")
    if s_max < 2:
        raise InvalidParameter("s_max must be at least 2")
    if f.is_zero():
        raise ZeroPolynomial("test ideal of the zero polynomial")
    p = f.ring.p
    levels: list[Ideal] = []
    for s in range(1, s_max + 1):
        exponent = math.ceil(t * p ** s)
        levels.append(frobenius_root(Ideal(f.ring, [f ** exponent]), p ** s))
        if len(levels) >= 3:
            a, b, c = levels[-3], levels[-2], levels[-1]
            if ideal_equal(a, b) and ideal_equal(b, c):
                return _finalize(t, a, s - 2)
    raise NotStabilized(s_max)


def test_ideal_compatible_chain(f: SparsePoly, a: int, q: int) -> TauReport:
    """tau(R, f^{a/(q-1)}) as the minimal compatible ideal containing f.

    Only valid in the sharply F-pure regime (f^a outside m^[q]) with
    lambda = a/(q-1) <= 1; the result is checked post hoc to satisfy
    f^a * tau inside tau^[q].
    """
    if a < 1:
        raise InvalidParameter("exponent a must be positive")
    lam = Fraction(a, q - 1)
    if lam > 1:
        raise InvalidParameter(f"lambda = {lam} > 1 is outside the compatible-chain regime")
    if not is_sharply_fpure(f, a, q):
        raise NotSharplyFPure(
            f"f^{a} lies in m^[{q}]; the minimal-ideal characterization does not apply"
        )
    tau, steps = compatible_chain(f, a, q)
    fa = f ** a
    bracket = bracket_power(tau, q)
    for g in tau.generators:
        if not normal_form(fa * g, bracket).is_zero():  # pragma: no cover
            raise AssertionError("chain output is not uniformly compatible")
    return _finalize(lam, tau, steps)


def test_ideal_agreement(f: SparsePoly, a: int, q: int) -> bool:
    """Cross-validate the two algorithms at t = a/(q-1)."""
    lam = Fraction(a, q - 1)
    via_roots = test_ideal_root_chain(f, lam)
    via_chain = test_ideal_compatible_chain(f, a, q)
    return ideal_equal(via_roots.tau, via_chain.tau)
