"""Dense brute-force oracles for the test suite.

Polynomials become flat coefficient arrays over the exponent box
[0, q)^n and the only operations are schoolbook ones, so these routines
are slow but hard to get wrong.  They exist to arbitrate the sparse
fast paths and are exercised only by tests.
"""

from __future__ import annotations

from .config import max_dense_cells
from .errors import MatrixTooLarge
from .linalg import RowSpace
from .polyring import SparsePoly, bracket_exponent

from itertools import product


def _check_box(ring, q: int) -> int:
    cells = q ** ring.n
    if cells > max_dense_cells():
        raise MatrixTooLarge(f"q^n = {cells} exceeds the dense guard {max_dense_cells()}")
    return cells


def _encode(f: SparsePoly, q: int) -> dict:
    """Truncate f mod m^[q] and index terms by flat offset in [0, q^n)."""
    out = {}
    for e, c in f.terms.items():
        if all(x < q for x in e):
            idx = 0
            for x in e:
                idx = idx * q + x
            out[idx] = c
    return out


def _decode(ring, arr: dict, q: int) -> SparsePoly:
    terms = {}
    for idx, c in arr.items():
        exps = []
        for _ in range(ring.n):
            exps.append(idx % q)
            idx //= q
        terms[tuple(reversed(exps))] = c
    return SparsePoly(ring, terms)


def dense_truncated_power(f: SparsePoly, a: int, q: int) -> SparsePoly:
    """f^a mod m^[q] by naive repeated multiplication on dense indices."""
    ring = f.ring
    bracket_exponent(ring, q)
    _check_box(ring, q)
    p = ring.p
    n = ring.n

    def unpack(idx):
        exps = []
        for _ in range(n):
            exps.append(idx % q)
            idx //= q
        return tuple(reversed(exps))

    base = _encode(f, q)
    acc = {0: 1}
    for _ in range(a):
        nxt: dict = {}
        for i1, c1 in acc.items():
            e1 = unpack(i1)
            for i2, c2 in base.items():
                e2 = unpack(i2)
                e = tuple(x + y for x, y in zip(e1, e2))
                if any(x >= q for x in e):
                    continue
                idx = 0
                for x in e:
                    idx = idx * q + x
                v = (nxt.get(idx, 0) + c1 * c2) % p
                if v:
                    nxt[idx] = v
                elif idx in nxt:
                    del nxt[idx]
        acc = nxt
        if not acc:
            break
    return _decode(ring, acc, q)


def dense_membership(f: SparsePoly, generators, q: int) -> bool:
    """Linear-algebra membership of f in an m-primary ideal containing m^[q].

    Valid when the ideal I = <generators> contains m^[q]; then f lies in
    I exactly when f mod m^[q] lies in the span of the shifted
    generators {x^b * g mod m^[q]}.
    """
    ring = f.ring
    bracket_exponent(ring, q)
    _check_box(ring, q)
    space = RowSpace(ring.p)
    for g in generators:
        for b in product(range(q), repeat=ring.n):
            row = {}
            for e, c in g.terms.items():
                shifted = tuple(x + y for x, y in zip(e, b))
                if all(x < q for x in shifted):
                    idx = 0
                    for x in shifted:
                        idx = idx * q + x
                    row[idx] = c
            if row:
                space.add(row)
    return space.contains(_encode(f, q))
