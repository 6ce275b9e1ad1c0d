"""Sparse multivariate polynomials over F_p with Frobenius-aware operations.

A polynomial is a finitely supported map from exponent vectors to
nonzero residues mod p.  Exponent entries are arbitrary-precision:
bracket powers m^[q] with q = p^e outgrow any fixed width long before
the coefficients do.  The operations that matter downstream all work
modulo a bracket power ``m^[q] = <x_1^q, ..., x_n^q>``:

* truncation to the canonical representative mod m^[q],
* powering with truncation after every multiply (m^[q] is an ideal,
  so intermediate truncation is harmless),
* the base-q digit decomposition f = sum_b g_b^q * x^b over the free
  basis {x^b : b in [0,q)^n} of the ring over its q-th powers.
"""

from __future__ import annotations

import math

from .errors import ExpansionTooLarge, QNotPowerOfP, RingMismatch
from .primefield import MAX_MODULUS, is_prime

#: An exponent vector: one nonnegative int per ring variable.
Monomial = tuple

#: Index-set guard for the multinomial expansion oracle.
MAX_EXPANSION_INDEX_SET = 10 ** 7


class PolyRing:
    """F_p[x_1, ..., x_n] for a fixed prime p and ordered variable names."""

    __slots__ = ("p", "variables", "n")

    def __init__(self, p: int, variables):
        if not (2 <= p < MAX_MODULUS) or not is_prime(p):
            raise ValueError(f"characteristic must be a prime in [2, 2^31), got {p}")
        variables = tuple(variables)
        if len(variables) < 1:
            raise ValueError("a polynomial ring needs at least one variable")
        if len(set(variables)) != len(variables):
            raise ValueError(f"variable names must be unique: {variables}")
        self.p = p
        self.variables = variables
        self.n = len(variables)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.p == other.p
            and self.variables == other.variables
        )

    def __hash__(self):
        return hash((self.p, self.variables))

    def __repr__(self):
        return f"PolyRing(p={self.p}, variables={self.variables})"

    # -- element constructors ------------------------------------------------

    def zero(self) -> "SparsePoly":
        return SparsePoly(self, {})

    def one(self) -> "SparsePoly":
        return self.constant(1)

    def constant(self, c: int) -> "SparsePoly":
        c %= self.p
        if c == 0:
            return SparsePoly(self, {})
        return SparsePoly(self, {(0,) * self.n: c})

    def variable(self, index: int) -> "SparsePoly":
        exps = [0] * self.n
        exps[index] = 1
        return SparsePoly(self, {tuple(exps): 1})

    def gens(self) -> list["SparsePoly"]:
        return [self.variable(i) for i in range(self.n)]

    def monomial(self, exponents, coeff: int = 1) -> "SparsePoly":
        exponents = tuple(exponents)
        if len(exponents) != self.n or any(e < 0 for e in exponents):
            raise ValueError(f"bad exponent vector {exponents} for {self!r}")
        coeff %= self.p
        if coeff == 0:
            return SparsePoly(self, {})
        return SparsePoly(self, {exponents: coeff})

    def from_terms(self, terms) -> "SparsePoly":
        """Build a polynomial from {exponent tuple: int}, reducing mod p."""
        out = {}
        for exps, c in dict(terms).items():
            exps = tuple(exps)
            if len(exps) != self.n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for {self!r}")
            c %= self.p
            if c:
                out[exps] = c
        return SparsePoly(self, out)


def _same_ring(f: "SparsePoly", g: "SparsePoly") -> PolyRing:
    if f.ring != g.ring:
        raise RingMismatch(f"{f.ring!r} vs {g.ring!r}")
    return f.ring


def _mul_terms(a: dict, b: dict, p: int, q=None) -> dict:
    """Term-map product; monomials with any exponent >= q are dropped."""
    if len(a) > len(b):
        a, b = b, a
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            if q is not None and any(x >= q for x in e):
                continue
            v = (out.get(e, 0) + c1 * c2) % p
            if v:
                out[e] = v
            elif e in out:
                del out[e]
    return out


class SparsePoly:
    """Immutable sparse polynomial tagged with its ambient ring.

    ``terms`` maps exponent tuples to nonzero residues in [1, p); the
    zero polynomial has an empty map.  Callers must never mutate it.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- predicates and accessors --------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.ring.n, 0)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0,) * self.ring.n in self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def sorted_terms(self) -> list:
        """Terms in descending lexicographic order of exponent vectors."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def sort_key(self):
        """Canonical total order on polynomials (used for stable output)."""
        return self.sorted_terms()

    # -- arithmetic ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, tuple(self.sorted_terms())))

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        ring = _same_ring(self, other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = (out.get(e, 0) + c) % ring.p
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        return SparsePoly(ring, out)

    def __neg__(self) -> "SparsePoly":
        p = self.ring.p
        return SparsePoly(self.ring, {e: p - c for e, c in self.terms.items()})

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def __mul__(self, other) -> "SparsePoly":
        if isinstance(other, int):
            return self.scale(other)
        ring = _same_ring(self, other)
        return SparsePoly(ring, _mul_terms(self.terms, other.terms, ring.p))

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: int) -> "SparsePoly":
        c %= self.ring.p
        if c == 0:
            return self.ring.zero()
        if c == 1:
            return self
        p = self.ring.p
        return SparsePoly(self.ring, {e: c * v % p for e, v in self.terms.items()})

    def __pow__(self, a: int) -> "SparsePoly":
        """Exact power by repeated squaring (no truncation)."""
        if a < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one()
        base = self
        while a:
            if a & 1:
                result = result * base
            a >>= 1
            if a:
                base = base * base
        return result

    def frobenius_power(self, q: int) -> "SparsePoly":
        """f^q for q = p^e, computed termwise: (sum c x^E)^q = sum c x^(qE)."""
        bracket_exponent(self.ring, q)
        return SparsePoly(
            self.ring, {tuple(q * x for x in e): c for e, c in self.terms.items()}
        )

    def partial_derivative(self, index: int) -> "SparsePoly":
        p = self.ring.p
        out = {}
        for e, c in self.terms.items():
            k = e[index]
            v = (k % p) * c % p
            if k == 0 or v == 0:
                continue
            e2 = e[:index] + (k - 1,) + e[index + 1:]
            out[e2] = v
        return SparsePoly(self.ring, out)

    # -- rendering ---------------------------------------------------------------

    def render(self) -> str:
        """Canonical text form: descending lex terms, '^' powers, '*' separators."""
        if not self.terms:
            return "0"
        names = self.ring.variables
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            if c != 1 or not any(e):
                factors.append(str(c))
            for name, k in zip(names, e):
                if k == 0:
                    continue
                factors.append(name if k == 1 else f"{name}^{k}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"SparsePoly({self.render()!r}, p={self.ring.p})"


# -- bracket-power machinery -------------------------------------------------


def bracket_exponent(ring: PolyRing, q: int) -> int:
    """Return e >= 1 with q = p^e, or raise QNotPowerOfP."""
    p = ring.p
    if q < p:
        raise QNotPowerOfP(f"{q} is not a positive power of {p}")
    e = 0
    m = q
    while m % p == 0:
        m //= p
        e += 1
    if m != 1:
        raise QNotPowerOfP(f"{q} is not a positive power of {p}")
    return e


def truncate_mod_bracket(f: SparsePoly, q: int) -> SparsePoly:
    """Canonical representative of f mod m^[q]: drop terms with an exponent >= q."""
    bracket_exponent(f.ring, q)
    kept = {e: c for e, c in f.terms.items() if all(x < q for x in e)}
    if len(kept) == len(f.terms):
        return f
    return SparsePoly(f.ring, kept)


def mul_truncated(f: SparsePoly, g: SparsePoly, q: int) -> SparsePoly:
    """f*g mod m^[q]; valid on already-truncated inputs since m^[q] is an ideal."""
    ring = _same_ring(f, g)
    bracket_exponent(ring, q)
    return SparsePoly(ring, _mul_terms(f.terms, g.terms, ring.p, q))


def pow_truncated(f: SparsePoly, a: int, q: int) -> SparsePoly:
    """f^a mod m^[q] by square-and-multiply, truncating after every product.

    The result is nonzero exactly when f^a is outside m^[q].  In
    characteristic 2 the squaring step is the Frobenius, so it is done
    termwise.
    """
    bracket_exponent(f.ring, q)
    if a < 0:
        raise ValueError("negative power of a polynomial")
    ring = f.ring
    p = ring.p
    result = ring.one().terms
    base = {e: c for e, c in f.terms.items() if all(x < q for x in e)}
    while a:
        if a & 1:
            result = _mul_terms(result, base, p, q)
            if not result:
                return ring.zero()
        a >>= 1
        if a:
            if p == 2:
                sq = {}
                for e, c in base.items():
                    e2 = tuple(2 * x for x in e)
                    if all(x < q for x in e2):
                        sq[e2] = c
                base = sq
            else:
                base = _mul_terms(base, base, p, q)
            if not base:
                # a != 0 means at least one more multiply by base, hence zero
                return ring.zero()
    return SparsePoly(ring, result)


def frobenius_decompose(f: SparsePoly, q: int) -> dict:
    """The unique decomposition f = sum_b g_b^q * x^b with b in [0,q)^n.

    Returns {b: g_b} omitting zero components.  Coefficient q-th roots
    are the coefficients themselves: c^q = c in F_p.
    """
    bracket_exponent(f.ring, q)
    buckets: dict = {}
    for e, c in f.terms.items():
        b = tuple(x % q for x in e)
        quot = tuple(x // q for x in e)
        buckets.setdefault(b, {})[quot] = c
    return {b: SparsePoly(f.ring, terms) for b, terms in sorted(buckets.items())}


def multinomial_expand_power(f: SparsePoly, a: int) -> SparsePoly:
    """Exact f^a straight from the multinomial theorem (oracle-grade, slow).

    Enumerates every index tuple (s_1, ..., s_r) with sum a over the r
    terms of f; refuses index sets larger than MAX_EXPANSION_INDEX_SET.
    """
    if a < 0:
        raise ValueError("negative power of a polynomial")
    ring = f.ring
    if a == 0:
        return ring.one()
    items = f.sorted_terms()
    r = len(items)
    if r == 0:
        return ring.zero()
    count = math.comb(a + r - 1, r - 1)
    if count > MAX_EXPANSION_INDEX_SET:
        raise ExpansionTooLarge(
            f"{count} multinomial indices exceed the {MAX_EXPANSION_INDEX_SET} guard"
        )
    p = ring.p
    out: dict = {}

    def descend(i: int, remaining: int, exps: tuple, coeff: int):
        exp_i, c_i = items[i]
        if i == r - 1:
            c = coeff * pow(c_i, remaining, p) % p
            if c:
                e = tuple(x + remaining * y for x, y in zip(exps, exp_i))
                v = (out.get(e, 0) + c) % p
                if v:
                    out[e] = v
                elif e in out:
                    del out[e]
            return
        for s in range(remaining + 1):
            c = coeff * (math.comb(remaining, s) % p) * pow(c_i, s, p) % p
            if c == 0:
                continue
            e = tuple(x + s * y for x, y in zip(exps, exp_i)) if s else exps
            descend(i + 1, remaining - s, e, c)

    descend(0, a, (0,) * ring.n, 1)
    return SparsePoly(ring, out)
