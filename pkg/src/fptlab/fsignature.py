"""F-signature samples, left-derivative tables, and splitting estimates.

The central quantity is the colength

    lambda_e(t) = lambda(R/(m^[p^e] : f^(ceil(t (p^e - 1)))))

whose normalization lambda_e/p^(e n) converges to the F-signature
s(R, f^t).  Near the threshold the same colengths, normalized by
p^(e (n - k)), estimate left derivatives of increasing order k; the
smallest k whose sequence stays bounded away from zero estimates the
height of the splitting prime.  All values returned are exact
rationals at finite depth; no routine ever asserts a limit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidParameter, MatrixTooLarge, NonProperIdeal
from .ideals import (
    Ideal,
    bracket_power,
    colon_principal,
    length_colon_bracket,
    maximal_ideal,
    quotient_dimension,
    quotient_length,
)
from .polyring import SparsePoly, bracket_exponent


@dataclass(frozen=True)
class FsigSample:
    t: Fraction
    e: int
    length: int          # lambda_e(t)
    value: Fraction      # lambda_e(t) / p^(e n)


@dataclass(frozen=True)
class DerivativeRow:
    e: int
    exponent: int        # power of f inside the colon
    bracket: int         # the bracket power q^e
    length: int
    ratio: Fraction      # length / base^(e (n-1))
    left_slope: Fraction | None  # -ratio/alpha, when alpha = a/(q-1)


@dataclass
class DerivativeTable:
    alpha: Fraction
    base: int            # q when alpha = a/(q-1) with q = p^k, else p
    has_slope: bool      # whether alpha admits the a/(q-1) form
    rows: list[DerivativeRow]


@dataclass
class HeightEstimate:
    """Heuristic splitting-prime height; tables let callers judge."""

    height: int | None
    tables: dict  # normalization order -> list[(e, Fraction)]


def geom_sum(q: int, e: int) -> int:
    """1 + q + ... + q^(e-1) = (q^e - 1)/(q - 1)."""
    return (q ** e - 1) // (q - 1)


def colength(f: SparsePoly, a: int, q: int) -> int:
    """lambda(R/(m^[q] : f^a)), rank method with a Groebner fallback.

    The rank method refuses boxes above the dense guard; beyond it the
    colon ideal is computed by elimination and its standard monomials
    counted.
    """
    try:
        return length_colon_bracket(f, a, q)
    except MatrixTooLarge:
        ring = f.ring
        bracket = bracket_power(maximal_ideal(ring), q)
        length = quotient_length(colon_principal(bracket, f ** a))
        assert length != float("inf")
        return int(length)


def splitting_number(f: SparsePoly, t, e: int) -> int:
    """The free-splitting count lambda_e(t); zero once the pair loses
    sharp F-purity at this depth."""
    t = Fraction(t)
    if t < 0:
        raise InvalidParameter("t must be nonnegative")
    if e < 1:
        raise InvalidParameter("e must be at least 1")
    p = f.ring.p
    a = math.ceil(t * (p ** e - 1))
    return colength(f, a, p ** e)


def fsignature_at(f: SparsePoly, a: int, q: int) -> Fraction:
    """Exact F-signature s(R, f^{a/q}) = lambda(R/(m^[q]:f^a)) / q^n.

    Independent of the representation a/q: scaling both by p gives the
    same rational.
    """
    bracket_exponent(f.ring, q)
    if a < 0:
        raise InvalidParameter("exponent a must be nonnegative")
    return Fraction(colength(f, a, q), q ** f.ring.n)


def signature_samples(f: SparsePoly, grid, e: int) -> list[FsigSample]:
    """One exact sample per grid value, in input order."""
    if e < 1:
        raise InvalidParameter("e must be at least 1")
    p = f.ring.p
    samples = []
    for t in grid:
        t = Fraction(t)
        if not (0 <= t <= 1):
            raise InvalidParameter(f"grid values must lie in [0, 1], got {t}")
        length = splitting_number(f, t, e)
        samples.append(FsigSample(t, e, length, Fraction(length, p ** (e * f.ring.n))))
    return samples


def _q_minus_one_form(alpha: Fraction, p: int):
    """Write alpha = a/(q-1) with q the least power of p working, if any."""
    den = alpha.denominator
    if den % p == 0 and den > 1:
        return None
    q = p
    for _ in range(den):
        if (q - 1) % den == 0:
            a = alpha.numerator * ((q - 1) // den)
            return a, q
        q *= p
    return None  # unreachable: ord_den(p) <= den once gcd(den, p) = 1


def left_derivative_table(f: SparsePoly, alpha, e_max: int) -> DerivativeTable:
    """Colengths just below t = alpha, normalized for the left derivative.

    Row e uses the exponent ceil(alpha * base^e) - 1; when alpha has the
    form a/(q-1) this equals a*(q^e-1)/(q-1) and the extra column
    -ratio/alpha estimates the left derivative of the F-signature
    at alpha.  Depth is limited by the dense guard: p = 2 reaches much
    larger e than p = 7 at equal cost.
    """
    alpha = Fraction(alpha)
    if not (0 < alpha <= 1):
        raise InvalidParameter(f"alpha must lie in (0, 1], got {alpha}")
    if e_max < 1:
        raise InvalidParameter("e_max must be at least 1")
    ring = f.ring
    p = ring.p
    form = _q_minus_one_form(alpha, p)
    if form is not None:
        a, base = form
    else:
        base = p
    rows = []
    for e in range(1, e_max + 1):
        bracket = base ** e
        if form is not None:
            exponent = a * geom_sum(base, e)
        else:
            exponent = math.ceil(alpha * bracket) - 1
        length = colength(f, exponent, bracket)
        ratio = Fraction(length, base ** (e * (ring.n - 1)))
        slope = -ratio / alpha if form is not None else None
        rows.append(DerivativeRow(e, exponent, bracket, length, ratio, slope))
    return DerivativeTable(alpha, base, form is not None, rows)


def normalized_length_seq(f: SparsePoly, a: int, q: int, n_norm: int,
                          e_max: int) -> list[tuple[int, Fraction]]:
    """The sequence lambda(R/(m^[q^e] : f^(a delta_e))) / q^(e (n - n_norm)).

    Its limit, when it exists, is proportional to the approximate left
    derivative of order n_norm of the F-signature at a/(q-1).
    """
    bracket_exponent(f.ring, q)
    alpha = Fraction(a, q - 1)
    if not (0 < alpha <= 1):
        raise InvalidParameter(f"a/(q-1) must lie in (0, 1], got {alpha}")
    n = f.ring.n
    if not (1 <= n_norm <= n):
        raise InvalidParameter(f"normalization order must lie in [1, {n}]")
    if e_max < 1:
        raise InvalidParameter("e_max must be at least 1")
    out = []
    for e in range(1, e_max + 1):
        length = colength(f, a * geom_sum(q, e), q ** e)
        out.append((e, Fraction(length, q ** (e * (n - n_norm)))))
    return out


def splitting_height_estimate(f: SparsePoly, a: int, q: int, e_max: int = 3,
                              ratio_tol: Fraction = Fraction(1, 4)) -> HeightEstimate:
    """Smallest normalization order whose sequence looks bounded away
    from zero (last value >= ratio_tol, successive ratios >= 1 - tol).

    Heuristic and explicitly non-rigorous; the full tables are returned
    so callers can judge.  Requires a/(q-1) < 1 strictly.
    """
    alpha = Fraction(a, q - 1)
    if alpha >= 1:
        raise InvalidParameter("the height estimate needs a/(q-1) < 1")
    ratio_tol = Fraction(ratio_tol)
    n = f.ring.n
    tables = {k: normalized_length_seq(f, a, q, k, e_max) for k in range(1, n + 1)}
    height = None
    for k in range(1, n + 1):
        values = [v for _, v in tables[k]]
        if any(v == 0 for v in values):
            continue
        if values[-1] < ratio_tol:
            continue
        if all(nxt / cur >= 1 - ratio_tol for cur, nxt in zip(values, values[1:])):
            height = k
            break
    return HeightEstimate(height, tables)


def splitting_ratio_estimate(f: SparsePoly, a: int, q: int, height: int,
                             e_max: int = 3) -> Fraction:
    """Finite-level estimate of the F-splitting ratio at a/(q-1):
    the deepest available colength normalized by q^(e (n - height))."""
    alpha = Fraction(a, q - 1)
    if alpha >= 1:
        raise InvalidParameter("the ratio estimate needs a/(q-1) < 1")
    n = f.ring.n
    if not (1 <= height <= n):
        raise InvalidParameter(f"height must lie in [1, {n}]")
    length = colength(f, a * geom_sum(q, e_max), q ** e_max)
    return Fraction(length, q ** (e_max * (n - height)))


def hilbert_kunz_length(ideal: Ideal, e: int) -> int:
    """lambda(R/(I + m^[p^e])) for a proper ideal I."""
    if e < 1:
        raise InvalidParameter("e must be at least 1")
    if ideal.is_unit_ideal():
        raise NonProperIdeal("Hilbert-Kunz lengths need a proper ideal")
    ring = ideal.ring
    q = ring.p ** e
    bracket = bracket_power(maximal_ideal(ring), q)
    total = Ideal(ring, ideal.generators + bracket.generators)
    length = quotient_length(total)
    assert length != float("inf")  # I + m^[q] is m-primary
    return int(length)


def hilbert_kunz_sequence(ideal: Ideal, e_max: int) -> list[tuple[int, Fraction]]:
    """(e, lambda(R/(I + m^[p^e])) / p^(e dim(R/I))) for e = 1..e_max."""
    dim = quotient_dimension(ideal)
    if dim < 0:
        raise NonProperIdeal("Hilbert-Kunz lengths need a proper ideal")
    p = ideal.ring.p
    out = []
    for e in range(1, e_max + 1):
        out.append((e, Fraction(hilbert_kunz_length(ideal, e), p ** (e * dim))))
    return out
