"""Fraction-free elimination on sparse integer matrices.

Rows are eliminated with integer row operations ``r <- p*r - a*pivot`` and
then divided by their content, which keeps entries small on the very
sparse +-1/+-2 matrices built by this package.  Pivots are taken column by
column, smallest column index first.  Within a column the sparsest
remaining row is used (ties broken by row index), which limits fill-in
and keeps ranks and kernel bases deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .sparse import SparseIntMatrix


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = gcd(*row.values())
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def echelon(m: SparseIntMatrix, reduced: bool = False) -> list[tuple[int, dict[int, int]]]:
    """Return pivot rows as (pivot column, row) in pivot order.

    With ``reduced`` every pivot column is cleared from all other pivot rows
    as well (fraction-free Gauss-Jordan).
    """
    rows = {i: _primitive(r) for i, r in enumerate(m.row_dicts()) if r}
    col_rows: dict[int, set[int]] = {}
    for i, r in rows.items():
        for c in r:
            col_rows.setdefault(c, set()).add(i)
    pivots: list[tuple[int, int]] = []
    pivot_rows: set[int] = set()
    for c in range(m.cols):
        holders = col_rows.get(c)
        if not holders:
            continue
        candidates = [i for i in holders if i not in pivot_rows]
        if not candidates:
            continue
        p_i = min(candidates, key=lambda i: (len(rows[i]), i))
        prow = rows[p_i]
        p = prow[c]
        targets = holders if reduced else candidates
        for j in sorted(targets):
            if j == p_i:
                continue
            row = rows[j]
            b = row[c]
            g = gcd(p, b)
            mp, mb = p // g, b // g
            new = {k: mp * v for k, v in row.items()}
            for k, v in prow.items():
                s = new.get(k, 0) - mb * v
                if s:
                    new[k] = s
                else:
                    new.pop(k, None)
            new = _primitive(new) if new else new
            for k in row:
                if k not in new:
                    col_rows[k].discard(j)
            for k in new:
                if k not in row:
                    col_rows.setdefault(k, set()).add(j)
            if new:
                rows[j] = new
            else:
                del rows[j]
        pivots.append((c, p_i))
        pivot_rows.add(p_i)
    return [(c, rows[i]) for c, i in pivots]


def rank(m: SparseIntMatrix) -> int:
    if m.nnz == 0:
        return 0
    return len(echelon(m))


@dataclass(frozen=True)
class KernelBasis:
    """Integral primitive vectors spanning the kernel of a matrix."""

    block: object
    vectors: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.vectors)


def kernel_basis(m: SparseIntMatrix, block=None) -> KernelBasis:
    piv = echelon(m, reduced=True)
    pivot_cols = {c for c, _ in piv}
    free = [c for c in range(m.cols) if c not in pivot_cols]
    by_free: dict[int, list[tuple[int, int, int]]] = {f: [] for f in free}
    for c, row in piv:
        p = row[c]
        for k, v in row.items():
            if k != c:
                by_free[k].append((c, p, v))
    vectors = []
    for f in free:
        terms = by_free[f]
        scale = lcm(*(p for _, p, _ in terms)) if terms else 1
        scale = abs(scale)
        vec = [0] * m.cols
        vec[f] = scale
        for c, p, v in terms:
            vec[c] = -v * scale // p
        g = gcd(*vec)
        vectors.append(tuple(x // g for x in vec))
    return KernelBasis(block, tuple(vectors))


def nullity(m: SparseIntMatrix) -> int:
    return m.cols - rank(m)
