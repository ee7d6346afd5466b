"""Young diagram combinatorics.

Partitions are tuples of positive integers in weakly decreasing order,
stored without trailing zeros.  Everything here is pure and cheap; the
rest of the package indexes Schur functors, irreducible representations
and Casimir eigenvalues by these objects.
"""

from __future__ import annotations

import enum
import json
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """A Young diagram, e.g. ``Partition((3, 1))``.

    Trailing zeros are stripped on construction so that equality is
    canonical.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for p in parts:
            if p <= 0:
                raise ValueError(f"partition parts must be positive: {parts}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({tuple(self)!r})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-indexed part, zero past the end."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def cells(self) -> Iterator[tuple[int, int]]:
        """Cells (i, j), 1-indexed, row by row."""
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield i, j

    def padded(self, r: int) -> tuple[int, ...]:
        if len(self) > r:
            raise ValueError(f"{self} has more than {r} parts")
        return tuple(self) + (0,) * (r - len(self))

    def to_json(self) -> list[int]:
        return list(self)

    @classmethod
    def from_json(cls, data) -> "Partition":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data)


def as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(lam)


def conjugate(lam) -> Partition:
    lam = as_partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def rank(lam) -> int:
    """Diagonal length sup{i | lam_i >= i}."""
    lam = as_partition(lam)
    return max((i for i in range(1, len(lam) + 1) if lam[i - 1] >= i), default=0)


def partitions_of(n: int, max_length: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if max_length is None:
        max_length = n

    def rec(remaining, largest, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for p in range(min(remaining, largest), 0, -1):
            if p * slots < remaining:
                break
            for rest in rec(remaining - p, p, slots - 1):
                yield (p,) + rest

    for parts in rec(n, max_part, max_length):
        yield Partition(parts)


class Dominance(enum.Enum):
    EQUAL = "equal"
    GREATER = "greater"
    LESS = "less"
    INCOMPARABLE = "incomparable"
    DIFFERENT_SIZE = "different-size"


def dominance_compare(lam, mu) -> Dominance:
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.size != mu.size:
        return Dominance.DIFFERENT_SIZE
    if lam == mu:
        return Dominance.EQUAL
    n = max(len(lam), len(mu))
    ge = le = True
    s = t = 0
    for i in range(1, n + 1):
        s += lam.part(i)
        t += mu.part(i)
        if s < t:
            ge = False
        if s > t:
            le = False
    if ge:
        return Dominance.GREATER
    if le:
        return Dominance.LESS
    return Dominance.INCOMPARABLE


def dominates(lam, mu) -> bool:
    """lam >= mu in dominance order (equal sizes required)."""
    return dominance_compare(lam, mu) in (Dominance.EQUAL, Dominance.GREATER)


def n_statistic(lam) -> int:
    lam = as_partition(lam)
    by_rows = sum((i - 1) * p for i, p in enumerate(lam, start=1))
    by_cols = sum(comb(c, 2) for c in conjugate(lam))
    if by_rows != by_cols:
        raise ArithmeticError(f"n({lam}) disagrees: {by_rows} != {by_cols}")
    return by_rows


def casimir_eigenvalue(lam, r: int) -> int:
    """Eigenvalue of the GL(V) Casimir E_i^j E_j^i on Schur^lam(V), dim V = r.

    Evaluated both from the highest weight and from the n-statistics; the two
    must agree.
    """
    lam = as_partition(lam)
    if r < 1:
        raise ValueError("rank must be positive")
    if len(lam) > r:
        raise ValueError(f"{lam} is not a GL({r}) highest weight")
    from_weight = sum(p * (p + r - 2 * i + 1) for i, p in enumerate(lam, start=1))
    from_n = r * lam.size + 2 * n_statistic(conjugate(lam)) - 2 * n_statistic(lam)
    if from_weight != from_n:
        raise ArithmeticError(f"Casimir formulas disagree on {lam}: {from_weight} != {from_n}")
    return from_weight


def casimir_eigenvalue_columns(lam, r: int) -> int:
    """The same eigenvalue summed over columns: sum lam*_i (r - lam*_i + 2i - 1)."""
    lamc = conjugate(lam)
    return sum(c * (r - c + 2 * i - 1) for i, c in enumerate(lamc, start=1))


def _check_strict(seq: Sequence[int], name: str):
    for x in seq:
        if x < 0:
            raise ValueError(f"{name} entries must be nonnegative: {list(seq)}")
    for a, b in zip(seq, seq[1:]):
        if a <= b:
            raise ValueError(f"{name} must be strictly decreasing: {list(seq)}")


def from_frobenius(alpha: Sequence[int], beta: Sequence[int]) -> Partition:
    alpha, beta = list(alpha), list(beta)
    if len(alpha) != len(beta):
        raise ValueError("Frobenius coordinates need equal length")
    _check_strict(alpha, "alpha")
    _check_strict(beta, "beta")
    d = len(alpha)
    parts = [alpha[i - 1] + i for i in range(1, d + 1)]
    i = d + 1
    while True:
        p = sum(1 for j in range(1, d + 1) if beta[j - 1] + j >= i)
        if p == 0:
            break
        parts.append(p)
        i += 1
    return Partition(parts)


def to_frobenius(lam) -> tuple[tuple[int, ...], tuple[int, ...]]:
    lam = as_partition(lam)
    lamc = conjugate(lam)
    d = rank(lam)
    alpha = tuple(lam[i - 1] - i for i in range(1, d + 1))
    beta = tuple(lamc[i - 1] - i for i in range(1, d + 1))
    return alpha, beta


def frobenius_to_json(alpha, beta) -> dict:
    return {"alpha": list(alpha), "beta": list(beta)}


def is_self_conjugate(lam) -> bool:
    lam = as_partition(lam)
    return lam == conjugate(lam)


def enumerate_O(k: int) -> set[Partition]:
    """Self-conjugate diagrams with 2k = |lam| + rank(lam)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = set()
    for n in range(k, 2 * k + 1):
        for lam in partitions_of(n):
            if n + rank(lam) == 2 * k and is_self_conjugate(lam):
                out.add(lam)
    return out


def _strict_sequences(total: int, length: int, upper: int) -> Iterator[tuple[int, ...]]:
    """Strictly decreasing nonnegative sequences with given sum, all < upper."""
    if length == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, upper - 1), -1, -1):
        for rest in _strict_sequences(total - first, length - 1, first):
            yield (first,) + rest


def enumerate_P(ell: int) -> set[Partition]:
    """Diagrams (a_1+1, ..., a_d+1 | a_1, ..., a_d) with sum(a) + d = ell."""
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    out = set()
    for d in range(0, ell + 1):
        for alpha in _strict_sequences(ell - d, d, ell + 1):
            out.add(from_frobenius([a + 1 for a in alpha], alpha))
    return out


def add(lam, mu) -> Partition:
    lam, mu = as_partition(lam), as_partition(mu)
    n = max(len(lam), len(mu))
    return Partition(lam.part(i) + mu.part(i) for i in range(1, n + 1))


def inner(lam, mu) -> int:
    lam, mu = as_partition(lam), as_partition(mu)
    return sum(a * b for a, b in zip(lam, mu))


def hook_lengths(lam) -> dict[tuple[int, int], int]:
    lam = as_partition(lam)
    lamc = conjugate(lam)
    return {(i, j): lam[i - 1] - j + lamc[j - 1] - i + 1 for i, j in lam.cells()}


@lru_cache(maxsize=None)
def _sn_dimension(lam: Partition) -> int:
    return factorial(lam.size) // prod(hook_lengths(lam).values())


def sn_dimension(lam) -> int:
    """Dimension of the Specht module (hook length formula)."""
    return _sn_dimension(as_partition(lam))


def gl_hook_content_dimension(lam, r: int) -> int:
    """dim Schur^lam(V) for dim V = r (hook content formula)."""
    lam = as_partition(lam)
    if len(lam) > r:
        return 0
    hooks = hook_lengths(lam)
    num = prod(r + j - i for i, j in lam.cells())
    return num // prod(hooks.values())
