"""Exact sparse matrices over Python integers."""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping


class SparseIntMatrix:
    """rows x cols matrix stored as {(row, col): value} with no stored zeros."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, entries: Mapping[tuple[int, int], int] | None = None):
        self.rows = rows
        self.cols = cols
        data = {}
        if entries:
            for (i, j), v in entries.items():
                if not (0 <= i < rows and 0 <= j < cols):
                    raise IndexError(f"entry {(i, j)} outside {rows}x{cols}")
                if v:
                    data[i, j] = int(v)
        self._data = data

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols)

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def from_dense(cls, rows: Iterable[Iterable[int]]):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r) if v})

    @classmethod
    def from_columns(cls, rows: int, columns: list[Mapping[int, int]]):
        m = cls(rows, len(columns))
        data = m._data
        for j, col in enumerate(columns):
            for i, v in col.items():
                if v:
                    data[i, j] = v
        return m

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def nnz(self):
        return len(self._data)

    def entries(self):
        return self._data.items()

    def __getitem__(self, key):
        return self._data.get(key, 0)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self._data.items():
            out[i][j] = v
        return out

    def row_dicts(self) -> list[dict[int, int]]:
        out = [dict() for _ in range(self.rows)]
        for (i, j), v in self._data.items():
            out[i][j] = v
        return out

    def transpose(self) -> "SparseIntMatrix":
        m = SparseIntMatrix(self.cols, self.rows)
        m._data = {(j, i): v for (i, j), v in self._data.items()}
        return m

    @property
    def T(self):
        return self.transpose()

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check_same_shape(other)
        data = dict(self._data)
        for k, v in other._data.items():
            s = data.get(k, 0) + v
            if s:
                data[k] = s
            else:
                data.pop(k, None)
        m = SparseIntMatrix(self.rows, self.cols)
        m._data = data
        return m

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int) -> "SparseIntMatrix":
        m = SparseIntMatrix(self.rows, self.cols)
        if c:
            m._data = {k: c * v for k, v in self._data.items()}
        return m

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        right = defaultdict(list)
        for (k, j), v in other._data.items():
            right[k].append((j, v))
        acc = defaultdict(int)
        for (i, k), a in self._data.items():
            for j, b in right.get(k, ()):
                acc[i, j] += a * b
        m = SparseIntMatrix(self.rows, other.cols)
        m._data = {k: v for k, v in acc.items() if v}
        return m

    def exact_div(self, d: int) -> "SparseIntMatrix":
        """Divide every entry by d, insisting the division is exact."""
        data = {}
        for k, v in self._data.items():
            q, rem = divmod(v, d)
            if rem:
                raise ArithmeticError(f"entry {v} at {k} not divisible by {d}")
            data[k] = q
        m = SparseIntMatrix(self.rows, self.cols)
        m._data = data
        return m

    def __eq__(self, other):
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self._data.items())))

    def is_zero(self) -> bool:
        return not self._data

    def first_difference(self, other) -> tuple[int, int, int, int] | None:
        """A witness (row, col, self value, other value) where the two differ."""
        self._check_same_shape(other)
        for k in sorted(set(self._data) | set(other._data)):
            a, b = self._data.get(k, 0), other._data.get(k, 0)
            if a != b:
                return (k[0], k[1], a, b)
        return None

    def __repr__(self):
        return f"SparseIntMatrix({self.rows}x{self.cols}, nnz={self.nnz})"

    def to_triplets(self) -> str:
        lines = [f"{self.rows} {self.cols} {self.nnz}"]
        for (i, j) in sorted(self._data):
            lines.append(f"{i} {j} {self._data[i, j]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_triplets(cls, text: str) -> "SparseIntMatrix":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        rows, cols, nnz = map(int, lines[0].split())
        entries = {}
        for ln in lines[1:]:
            i, j, v = ln.split()
            entries[int(i), int(j)] = int(v)
        if len(entries) != nnz:
            raise ValueError(f"triplet header says {nnz} entries, found {len(entries)}")
        return cls(rows, cols, entries)
