"""Exact arithmetic in F_p and in the rationals.

Coefficients never leave the prime field, so moduli are restricted to
machine-word primes; everything that can grow (exponents, rational
numerators) uses Python's arbitrary-precision integers.  Rationals are
stdlib Fractions, which already keep lowest terms and a positive
denominator.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import RingMismatch, ZeroDenominator, ZeroInverse

#: Exact rational type used throughout: lowest terms, denominator > 0.
BigRational = Fraction

MAX_MODULUS = 2 ** 31

# Witnesses 2, 3, 5, 7 make Miller-Rabin deterministic below 3_215_031_751,
# which covers every admissible modulus (< 2^31).
_MR_WITNESSES = (2, 3, 5, 7)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for word-sized n."""
    if n < 2:
        return False
    for w in _MR_WITNESSES:
        if n % w == 0:
            return n == w
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class FpScalar:
    """An element of F_p, stored as its least nonnegative residue.

    Arithmetic between scalars with different moduli raises RingMismatch.
    """

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other) -> "FpScalar":
        if isinstance(other, FpScalar):
            if other.p != self.p:
                raise RingMismatch(f"moduli differ: {self.p} vs {other.p}")
            return other
        if isinstance(other, int):
            return FpScalar(other, self.p)
        return NotImplemented  # pragma: no cover

    def __add__(self, other):
        other = self._coerce(other)
        return FpScalar(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return FpScalar(self.value - other.value, self.p)

    def __rsub__(self, other):
        return FpScalar(other, self.p) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return FpScalar(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpScalar(-self.value, self.p)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return fp_inverse(self) ** (-exponent)
        return FpScalar(pow(self.value, exponent, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FpScalar):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"FpScalar({self.value}, p={self.p})"

    def is_zero(self) -> bool:
        return self.value == 0


def fp_inverse(a: FpScalar) -> FpScalar:
    """Multiplicative inverse in F_p (Fermat); raises ZeroInverse on 0."""
    if a.value == 0:
        raise ZeroInverse(f"0 has no inverse mod {a.p}")
    return FpScalar(pow(a.value, a.p - 2, a.p), a.p)


def rat_reduce(numerator: int, denominator: int) -> BigRational:
    """Lowest-terms rational n/d with the sign on the numerator."""
    if denominator == 0:
        raise ZeroDenominator("denominator must be nonzero")
    return Fraction(numerator, denominator)
