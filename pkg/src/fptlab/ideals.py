"""Ideal arithmetic: bracket powers, Frobenius roots, Groebner bases,
colon ideals, and quotient lengths.

Two independent length algorithms are kept permanently:

* ``quotient_length`` counts standard monomials below a reduced
  Groebner basis;
* ``length_colon_bracket`` computes lambda(R/(m^[q] : f^a)) as the rank
  of the multiplication-by-f^a matrix on R/m^[q] (bit-packed rows when
  p = 2).

Each is the other's oracle in the test suite.
"""

from __future__ import annotations

import heapq
from itertools import combinations, product

from .config import max_dense_cells
from .errors import (
    InvalidParameter,
    MatrixTooLarge,
    NotMonomialIdeal,
    RingMismatch,
    ZeroDivisorArg,
)
from .linalg import RowSpace
from .polyring import (
    PolyRing,
    SparsePoly,
    bracket_exponent,
    frobenius_decompose,
    pow_truncated,
)

#: Returned by quotient_length when R/I has infinite k-dimension.
INFINITE = float("inf")


# ---------------------------------------------------------------------------
# Monomial orders
# ---------------------------------------------------------------------------


class MonomialOrder:
    """A total order on exponent vectors refining divisibility.

    ``kind`` is "lex" or "grevlex"; an optional permutation reorders the
    variables before comparison.  Orders are compared through key(),
    which returns a tuple ordered compatibly with the monomial order.
    """

    def __init__(self, kind: str = "grevlex", permutation=None):
        if kind not in ("lex", "grevlex"):
            raise ValueError(f"unknown monomial order kind {kind!r}")
        self.kind = kind
        self.permutation = tuple(permutation) if permutation is not None else None

    def key(self, exponents):
        e = exponents
        if self.permutation is not None:
            e = tuple(exponents[i] for i in self.permutation)
        if self.kind == "lex":
            return e
        # grevlex: higher total degree first, ties by the last nonzero
        # entry of the difference being negative.
        return (sum(e), tuple(-x for x in reversed(e)))

    def cache_key(self):
        return (type(self).__name__, self.kind, self.permutation)

    def __repr__(self):
        if self.permutation is None:
            return f"MonomialOrder({self.kind!r})"
        return f"MonomialOrder({self.kind!r}, permutation={self.permutation})"


class _EliminationOrder(MonomialOrder):
    """Block order that eliminates the last variable (grevlex inside)."""

    def __init__(self):
        super().__init__("grevlex")

    def key(self, exponents):
        rest = exponents[:-1]
        return (exponents[-1], sum(rest), tuple(-x for x in reversed(rest)))


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


# ---------------------------------------------------------------------------
# Division and Buchberger on raw term maps
# ---------------------------------------------------------------------------


def _leading(terms: dict, order: MonomialOrder):
    lm = max(terms, key=order.key)
    return lm, terms[lm]


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _normal_form_terms(terms: dict, basis: list, order: MonomialOrder, p: int) -> dict:
    """Remainder of division by ``basis`` ([(terms, lm, lc)] entries)."""
    work = dict(terms)
    remainder: dict = {}
    while work:
        lm = max(work, key=order.key)
        c = work[lm]
        for gterms, glm, glc in basis:
            if _divides(glm, lm):
                shift = tuple(x - y for x, y in zip(lm, glm))
                factor = c * pow(glc, p - 2, p) % p
                for ge, gc in gterms.items():
                    e = tuple(x + y for x, y in zip(shift, ge))
                    v = (work.get(e, 0) - factor * gc) % p
                    if v:
                        work[e] = v
                    elif e in work:
                        del work[e]
                break
        else:
            remainder[lm] = c
            del work[lm]
    return remainder


def _monic(terms: dict, order: MonomialOrder, p: int) -> dict:
    _, lc = _leading(terms, order)
    if lc == 1:
        return terms
    inv = pow(lc, p - 2, p)
    return {e: c * inv % p for e, c in terms.items()}


def _buchberger(generators: list, order: MonomialOrder, p: int) -> list:
    """Reduced Groebner basis of the given term maps.

    Classic Buchberger loop with normal pair selection (a heap keyed by
    lcm degree) and the product and chain criteria, followed by
    inter-reduction.  Termination is guaranteed by Dickson's lemma.
    """
    basis = []
    for terms in generators:
        if terms:
            basis.append(_monic(dict(terms), order, p))
    if not basis:
        return []

    lms = [_leading(t, order)[0] for t in basis]

    def lcm(a, b):
        return tuple(max(x, y) for x, y in zip(a, b))

    heap: list = []
    pending = set()

    def push_pair(i, j):
        big = lcm(lms[i], lms[j])
        heapq.heappush(heap, (sum(big), order.key(big), i, j))
        pending.add((i, j))

    for j in range(len(basis)):
        for i in range(j):
            push_pair(i, j)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        li, lj = lms[i], lms[j]
        big = lcm(li, lj)
        # product criterion: coprime leading monomials reduce to zero
        if all(x == 0 or y == 0 for x, y in zip(li, lj)):
            continue
        # chain criterion: some third basis element divides the lcm and
        # both associated pairs were already handled
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not _divides(lms[k], big):
                continue
            pik = (min(i, k), max(i, k))
            pjk = (min(j, k), max(j, k))
            if pik not in pending and pjk not in pending:
                skip = True
                break
        if skip:
            continue
        # S-polynomial (both inputs monic)
        s: dict = {}
        for src, lead, sign in ((basis[i], li, 1), (basis[j], lj, -1)):
            shift = tuple(x - y for x, y in zip(big, lead))
            for e, c in src.items():
                e2 = tuple(x + y for x, y in zip(shift, e))
                v = (s.get(e2, 0) + sign * c) % p
                if v:
                    s[e2] = v
                elif e2 in s:
                    del s[e2]
        if not s:
            continue
        triples = [(b, lm, 1) for b, lm in zip(basis, lms)]
        residue = _normal_form_terms(s, triples, order, p)
        if residue:
            residue = _monic(residue, order, p)
            new_index = len(basis)
            basis.append(residue)
            lms.append(_leading(residue, order)[0])
            for k in range(new_index):
                push_pair(k, new_index)

    # minimal basis: drop elements whose leading monomial is divisible by
    # another's (ascending scan is safe: divisibility implies key <=)
    enriched = sorted(zip(lms, basis), key=lambda lb: order.key(lb[0]))
    kept: list = []
    for lm, terms in enriched:
        if any(_divides(klm, lm) for klm, _ in kept):
            continue
        kept.append((lm, terms))
    # reduced basis: reduce every tail against the others
    reduced = []
    for idx, (lm, terms) in enumerate(kept):
        others = [(t, l, 1) for k, (l, t) in enumerate(kept) if k != idx]
        reduced.append((lm, _normal_form_terms(terms, others, order, p)))
    reduced.sort(key=lambda lb: order.key(lb[0]), reverse=True)
    return [terms for _, terms in reduced]


# ---------------------------------------------------------------------------
# The Ideal type
# ---------------------------------------------------------------------------


class Ideal:
    """A finitely generated ideal with a lazily cached reduced GB.

    Generators are stored as given (zeroes dropped); the cache is
    initialize-once per monomial order, so concurrent readers see either
    no basis or a complete one.
    """

    __slots__ = ("ring", "generators", "_gb_cache")

    def __init__(self, ring: PolyRing, generators):
        gens = []
        for g in generators:
            if not isinstance(g, SparsePoly):
                raise TypeError(f"ideal generators must be polynomials, got {g!r}")
            if g.ring != ring:
                raise RingMismatch(f"generator ring {g.ring!r} differs from {ring!r}")
            if not g.is_zero():
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb_cache: dict = {}

    def __repr__(self):
        return f"Ideal({self.render()}, p={self.ring.p})"

    def render(self) -> str:
        """Canonical text form: generators in canonical order, angle brackets."""
        if not self.generators:
            return "<0>"
        gens = sorted(self.generators, key=lambda g: g.sort_key(), reverse=True)
        return "<" + ", ".join(g.render() for g in gens) + ">"

    def generator_strings(self) -> list:
        if not self.generators:
            return ["0"]
        gens = sorted(self.generators, key=lambda g: g.sort_key(), reverse=True)
        return [g.render() for g in gens]

    def is_zero_ideal(self) -> bool:
        return not self.generators

    def groebner_basis(self, order: MonomialOrder = GREVLEX) -> tuple:
        key = order.cache_key()
        cached = self._gb_cache.get(key)
        if cached is None:
            raw = _buchberger([g.terms for g in self.generators], order, self.ring.p)
            cached = tuple(SparsePoly(self.ring, t) for t in raw)
            self._gb_cache[key] = cached
        return cached

    def leading_monomials(self, order: MonomialOrder = GREVLEX) -> list:
        return [max(g.terms, key=order.key) for g in self.groebner_basis(order)]

    def is_unit_ideal(self) -> bool:
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].is_constant() and not gb[0].is_zero()

    def contains(self, f: SparsePoly) -> bool:
        return normal_form(f, self).is_zero()

    def contains_ideal(self, other: "Ideal") -> bool:
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")
        return all(self.contains(g) for g in other.generators)


def maximal_ideal(ring: PolyRing) -> Ideal:
    """m = <x_1, ..., x_n>."""
    return Ideal(ring, ring.gens())


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring!r} vs {b.ring!r}")
    return Ideal(a.ring, a.generators + b.generators)


def _dedupe_monic(ideal: Ideal) -> list:
    """Monic generators with duplicates and monomial multiples dropped."""
    ring = ideal.ring
    p = ring.p
    gens = []
    seen = set()
    for g in ideal.generators:
        monic = SparsePoly(ring, _monic(g.terms, GREVLEX, p))
        key = tuple(monic.sorted_terms())
        if key not in seen:
            seen.add(key)
            gens.append(monic)
    monomials = [next(iter(g.terms)) for g in gens if g.is_monomial()]
    kept = []
    for g in gens:
        if g.is_monomial():
            e = next(iter(g.terms))
            if any(other != e and _divides(other, e) for other in monomials):
                continue
        kept.append(g)
    kept.sort(key=lambda g: g.sort_key())
    return kept


def prune_generators(ideal: Ideal) -> Ideal:
    """Cheap cleanup (dedupe + monomial divisibility); no Groebner work."""
    gens = _dedupe_monic(ideal)
    gens.sort(key=lambda g: g.sort_key(), reverse=True)
    return Ideal(ideal.ring, gens)


def minimalize_generators(ideal: Ideal) -> Ideal:
    """Equivalent ideal with monic, duplicate-free, irredundant generators.

    Single forward pass: dropping a redundant generator never makes
    another one irredundant, since each drop preserves the ideal.
    """
    ring = ideal.ring
    gens = _dedupe_monic(ideal)
    kept: list = []
    for i, g in enumerate(gens):
        others = kept + gens[i + 1:]
        if others and Ideal(ring, others).contains(g):
            continue
        kept.append(g)
    kept.sort(key=lambda g: g.sort_key(), reverse=True)
    return Ideal(ring, kept)


# ---------------------------------------------------------------------------
# Spec operations
# ---------------------------------------------------------------------------


def groebner(ideal: Ideal, order: MonomialOrder = GREVLEX) -> Ideal:
    """Return the ideal with its reduced Groebner basis computed and cached."""
    ideal.groebner_basis(order)
    return ideal


def normal_form(f: SparsePoly, ideal: Ideal, order: MonomialOrder = GREVLEX) -> SparsePoly:
    """Unique remainder of f modulo the reduced GB; zero iff f is a member."""
    if f.ring != ideal.ring:
        raise RingMismatch(f"{f.ring!r} vs {ideal.ring!r}")
    gb = ideal.groebner_basis(order)
    basis = [(g.terms, max(g.terms, key=order.key), 1) for g in gb]
    return SparsePoly(f.ring, _normal_form_terms(f.terms, basis, order, f.ring.p))


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    """Mutual membership of all generators."""
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring!r} vs {b.ring!r}")
    return a.contains_ideal(b) and b.contains_ideal(a)


def bracket_power(ideal: Ideal, q: int) -> Ideal:
    """I^[q], generated by the q-th powers of the generators."""
    bracket_exponent(ideal.ring, q)
    return Ideal(ideal.ring, [g.frobenius_power(q) for g in ideal.generators])


def frobenius_root(ideal: Ideal, q: int) -> Ideal:
    """I^[1/q]: the smallest J with I contained in J^[q].

    Each generator g decomposes uniquely as sum_b g_b^q x^b over the
    free basis {x^b}; the components g_b over all generators generate
    the root.
    """
    bracket_exponent(ideal.ring, q)
    components = []
    for g in ideal.generators:
        components.extend(frobenius_decompose(g, q).values())
    return prune_generators(Ideal(ideal.ring, components))


def colon_principal(ideal: Ideal, g: SparsePoly) -> Ideal:
    """(I : g) = {h : h*g in I}, via one auxiliary elimination variable.

    Uses (I : g) = (I intersect <g>) * g^{-1}; the intersection comes
    from a Groebner basis of t*I + (1-t)*<g> in a block order that
    eliminates t.
    """
    ring = ideal.ring
    if g.ring != ring:
        raise RingMismatch(f"{g.ring!r} vs {ring!r}")
    if g.is_zero():
        raise ZeroDivisorArg("colon by the zero polynomial")
    if ideal.is_zero_ideal():
        return Ideal(ring, [])
    if g.is_constant():
        return Ideal(ring, ideal.generators)

    aux = "_t"
    while aux in ring.variables:
        aux += "_"
    ext = PolyRing(ring.p, ring.variables + (aux,))
    p = ring.p

    def lift(poly: SparsePoly, aux_exp: int) -> dict:
        return {e + (aux_exp,): c for e, c in poly.terms.items()}

    lifted = [lift(gi, 1) for gi in ideal.generators]
    # (1 - t) * g  =  g - t*g
    low = lift(g, 0)
    for e, c in lift(g, 1).items():
        low[e] = (low.get(e, 0) - c) % p
        if not low[e]:
            del low[e]
    lifted.append(low)

    gb = _buchberger(lifted, _EliminationOrder(), p)
    intersection = []
    for terms in gb:
        if all(e[-1] == 0 for e in terms):
            intersection.append(SparsePoly(ring, {e[:-1]: c for e, c in terms.items()}))
    quotients = [_exact_divide(h, g) for h in intersection]
    return minimalize_generators(Ideal(ring, quotients))


def _exact_divide(h: SparsePoly, g: SparsePoly) -> SparsePoly:
    """h / g when g divides h exactly (true for members of I intersect <g>)."""
    ring = h.ring
    p = ring.p
    glm, glc = _leading(g.terms, GREVLEX)
    inv = pow(glc, p - 2, p)
    work = dict(h.terms)
    quotient: dict = {}
    while work:
        lm = max(work, key=GREVLEX.key)
        shift = tuple(x - y for x, y in zip(lm, glm))
        if any(s < 0 for s in shift):
            raise ArithmeticError("exact division failed; dividend not a multiple")
        qc = work[lm] * inv % p
        quotient[shift] = qc
        for e, c in g.terms.items():
            e2 = tuple(x + y for x, y in zip(shift, e))
            v = (work.get(e2, 0) - qc * c) % p
            if v:
                work[e2] = v
            elif e2 in work:
                del work[e2]
    return SparsePoly(ring, quotient)


def quotient_length(ideal: Ideal):
    """k-dimension of R/I: the number of standard monomials, or INFINITE."""
    ring = ideal.ring
    gb = ideal.groebner_basis(GREVLEX)
    if not gb:
        return INFINITE
    lms = [max(g.terms, key=GREVLEX.key) for g in gb]
    if any(not any(lm) for lm in lms):
        return 0  # unit ideal
    bounds = []
    for i in range(ring.n):
        pure = [lm[i] for lm in lms if all(x == 0 for j, x in enumerate(lm) if j != i)]
        if not pure:
            return INFINITE
        bounds.append(min(pure))
    count = 0
    for mono in product(*(range(b) for b in bounds)):
        if not any(_divides(lm, mono) for lm in lms):
            count += 1
    return count


def quotient_dimension(ideal: Ideal) -> int:
    """Krull dimension of R/I, from GB leading-monomial supports.

    The dimension is the largest size of a variable subset S such that
    no leading monomial lives in k[S].  Returns -1 for the unit ideal
    (the zero ring).
    """
    ring = ideal.ring
    gb = ideal.groebner_basis(GREVLEX)
    if not gb:
        return ring.n
    supports = [frozenset(i for i, x in enumerate(lm) if x)
                for lm in (max(g.terms, key=GREVLEX.key) for g in gb)]
    if frozenset() in supports:
        return -1  # unit ideal: R/I is the zero ring
    for size in range(ring.n, -1, -1):
        for subset in combinations(range(ring.n), size):
            chosen = set(subset)
            if not any(s <= chosen for s in supports):
                return size
    return -1  # unreachable for proper ideals


def length_colon_bracket(f: SparsePoly, a: int, q: int) -> int:
    """lambda(R/(m^[q] : f^a)) by the rank method.

    R/(m^[q]:f^a) is isomorphic to f^a * (R/m^[q]), so the length equals
    the F_p-rank of the rows {x^b * f^a mod m^[q] : b in [0,q)^n}.  Only
    f^a mod m^[q] matters, so the truncated power is used throughout.
    """
    ring = f.ring
    bracket_exponent(ring, q)
    if a < 0:
        raise InvalidParameter("exponent a must be nonnegative")
    if a == 0:
        return q ** ring.n  # colon by 1 is m^[q] itself
    if f.is_zero():
        return 0  # (m^[q] : 0) = R
    cells = q ** ring.n
    if cells > max_dense_cells():
        raise MatrixTooLarge(
            f"q^n = {cells} exceeds the dense guard {max_dense_cells()}"
        )
    tf = pow_truncated(f, a, q)
    if tf.is_zero():
        return 0
    terms = list(tf.terms.items())
    mins = [min(e[i] for e, _ in terms) for i in range(ring.n)]
    # rows can only be nonzero for shifts b with b_i < q - min_i
    ranges = [range(q - m) for m in mins]
    space = RowSpace(ring.p)
    seen = set()
    for b in product(*ranges):
        row = {}
        for e, c in terms:
            shifted = tuple(x + y for x, y in zip(e, b))
            if all(x < q for x in shifted):
                col = 0
                for x in shifted:
                    col = col * q + x
                row[col] = c
        if not row:
            continue
        fingerprint = tuple(sorted(row.items()))
        if fingerprint in seen:
            continue
        seen.add(fingerprint)
        space.add(row)
    return space.rank


def monomial_is_radical(ideal: Ideal) -> bool:
    """For monomial ideals only: radical iff the minimal generators are
    square-free.  Raises NotMonomialIdeal otherwise."""
    for g in ideal.generators:
        if not g.is_monomial():
            raise NotMonomialIdeal(f"generator {g.render()} is not a monomial")
    exponents = [next(iter(g.terms)) for g in ideal.generators]
    minimal = [
        e for e in exponents
        if not any(other != e and _divides(other, e) for other in exponents)
    ]
    return all(all(x <= 1 for x in e) for e in minimal)
