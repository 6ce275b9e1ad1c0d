"""Row-space computations over F_p.

Rows are sparse {column: residue} maps.  Over F_2 the eliminator packs
rows into Python ints and works with XORs; over odd p it keeps sparse
dicts and pivots on the largest column index.  Both paths are exact and
deterministic.
"""

from __future__ import annotations


class RowSpace:
    """Incremental row-echelon structure over F_p."""

    def __init__(self, p: int):
        self.p = p
        self._pivots: dict = {}  # pivot column -> monic row

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def add(self, row: dict) -> bool:
        """Insert a row; returns True if it enlarged the space."""
        if self.p == 2:
            packed = 0
            for col, c in row.items():
                if c & 1:
                    packed |= 1 << col
            return self._add_gf2(packed)
        return self._add_fp(dict(row))

    def contains(self, row: dict) -> bool:
        """Membership in the current row span (does not insert)."""
        if self.p == 2:
            packed = 0
            for col, c in row.items():
                if c & 1:
                    packed |= 1 << col
            return self._reduce_gf2(packed) == 0
        return not self._reduce_fp(dict(row))

    # -- GF(2): int bitsets ---------------------------------------------------

    def _reduce_gf2(self, packed: int) -> int:
        pivots = self._pivots
        while packed:
            lead = packed.bit_length() - 1
            piv = pivots.get(lead)
            if piv is None:
                return packed
            packed ^= piv
        return 0

    def _add_gf2(self, packed: int) -> bool:
        residue = self._reduce_gf2(packed)
        if residue == 0:
            return False
        self._pivots[residue.bit_length() - 1] = residue
        return True

    # -- odd p: sparse dict rows ------------------------------------------------

    def _reduce_fp(self, row: dict) -> dict:
        p = self.p
        pivots = self._pivots
        while row:
            lead = max(row)
            piv = pivots.get(lead)
            if piv is None:
                return row
            factor = row[lead]
            for col, c in piv.items():
                v = (row.get(col, 0) - factor * c) % p
                if v:
                    row[col] = v
                elif col in row:
                    del row[col]
        return row

    def _add_fp(self, row: dict) -> bool:
        residue = self._reduce_fp(row)
        if not residue:
            return False
        lead = max(residue)
        inv = pow(residue[lead], self.p - 2, self.p)
        self._pivots[lead] = {col: c * inv % self.p for col, c in residue.items()}
        return True


def rank_of_rows(rows, p: int) -> int:
    """Rank over F_p of an iterable of sparse {column: residue} rows."""
    space = RowSpace(p)
    for row in rows:
        space.add(row)
    return space.rank


def in_row_span(rows, target: dict, p: int) -> bool:
    """True iff target lies in the F_p span of the given rows."""
    space = RowSpace(p)
    for row in rows:
        space.add(row)
    return space.contains(target)
