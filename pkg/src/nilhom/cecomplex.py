"""Chevalley-Eilenberg complexes of L_H(V) and Lie_2(V).

The chain space of L_H(V) = (H (x) V) + S^2(V) is one exterior algebra on
the generators

    x(i, a) = e_a (x) E_i      ordered by (i, a),
    y(i, j) = E_i E_j, i <= j  ordered by (i, j), after all x(i, a).

A monomial is the sorted tuple of its generator indices.  Every generator
is odd, so exterior multiplication and contraction carry Koszul signs.
Operators are written as sums of words in the elementary operators
eps / iota and evaluated monomial by monomial into SparseIntMatrix blocks,
one per joint (GL weight, Sp weight) block of a bidegree (k, l).
"""

from __future__ import annotations

import hashlib
import itertools
import os
from bisect import bisect_left
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, lcm
from pathlib import Path
from typing import Callable, Iterator, Mapping

from .sparse import SparseIntMatrix

CACHE_ENV = "NILHOM_CACHE_DIR"


# --------------------------------------------------------------------------
# symplectic basis


@dataclass(frozen=True)
class SymplecticBasis:
    """e_1..e_2g with <e_{2s-1}, e_{2s}> = 1; indices here are 0-based."""

    g: int
    eta: tuple[tuple[int, ...], ...]
    eta_inv: tuple[tuple[int, ...], ...]

    @classmethod
    @lru_cache(maxsize=None)
    def standard(cls, g: int) -> "SymplecticBasis":
        if g < 1:
            raise ValueError("g must be positive")
        n = 2 * g
        eta = [[0] * n for _ in range(n)]
        for s in range(g):
            eta[2 * s][2 * s + 1] = 1
            eta[2 * s + 1][2 * s] = -1
        inv = _integer_inverse(eta)
        return cls(g, tuple(map(tuple, eta)), tuple(map(tuple, inv)))

    def sp_weight(self, a: int) -> tuple[int, ...]:
        w = [0] * self.g
        w[a // 2] = 1 if a % 2 == 0 else -1
        return tuple(w)


def _integer_inverse(mat: list[list[int]]) -> list[list[int]]:
    n = len(mat)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for c in range(n):
        p = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    inv = [row[n:] for row in aug]
    if any(x.denominator != 1 for row in inv for x in row):
        raise ArithmeticError("symplectic form is not unimodular")
    return [[int(x) for x in row] for row in inv]


# --------------------------------------------------------------------------
# generators


@dataclass(frozen=True)
class Generators:
    """Generator table for the exterior algebra of L_H(V)."""

    g: int
    r: int

    @property
    def n_x(self) -> int:
        return 2 * self.g * self.r

    @property
    def n_y(self) -> int:
        return self.r * (self.r + 1) // 2

    @property
    def count(self) -> int:
        return self.n_x + self.n_y

    def x(self, i: int, a: int) -> int:
        """Index of e_a (x) E_i (0-based i, a)."""
        return i * 2 * self.g + a

    def y(self, i: int, j: int) -> int:
        """Index of E_i E_j (0-based, order irrelevant)."""
        if i > j:
            i, j = j, i
        r = self.r
        return self.n_x + i * r - i * (i - 1) // 2 + (j - i)

    @property
    def labels(self) -> tuple:
        return _labels(self.g, self.r)

    @property
    def gl_weights(self) -> tuple[tuple[int, ...], ...]:
        return _gl_weights(self.g, self.r)

    @property
    def sp_weights(self) -> tuple[tuple[int, ...], ...]:
        return _sp_weights(self.g, self.r)

    def is_x(self, idx: int) -> bool:
        return idx < self.n_x

    def describe(self, mono: tuple[int, ...]) -> str:
        parts = []
        for idx in mono:
            lab = self.labels[idx]
            if lab[0] == "x":
                parts.append(f"e{lab[2] + 1}⊗E{lab[1] + 1}")
            else:
                parts.append(f"E{lab[1] + 1}{lab[2] + 1}")
        return "∧".join(parts) if parts else "1"


@lru_cache(maxsize=None)
def _labels(g, r):
    out = [("x", i, a) for i in range(r) for a in range(2 * g)]
    out += [("y", i, j) for i in range(r) for j in range(i, r)]
    return tuple(out)


@lru_cache(maxsize=None)
def _gl_weights(g, r):
    out = []
    for lab in _labels(g, r):
        w = [0] * r
        w[lab[1]] += 1
        if lab[0] == "y":
            w[lab[2]] += 1
        out.append(tuple(w))
    return tuple(out)


@lru_cache(maxsize=None)
def _sp_weights(g, r):
    sb = SymplecticBasis.standard(g)
    zero = (0,) * g
    return tuple(sb.sp_weight(lab[2]) if lab[0] == "x" else zero for lab in _labels(g, r))


# --------------------------------------------------------------------------
# elementary operators on monomials


def wedge(x: int, mono: tuple[int, ...]):
    """x ^ mono as (sign, monomial) or None."""
    pos = bisect_left(mono, x)
    if pos < len(mono) and mono[pos] == x:
        return None
    return (-1 if pos & 1 else 1), mono[:pos] + (x,) + mono[pos:]


def contract(x: int, mono: tuple[int, ...]):
    """Dual contraction by generator x: iota_x(x ^ m) = m."""
    pos = bisect_left(mono, x)
    if pos == len(mono) or mono[pos] != x:
        return None
    return (-1 if pos & 1 else 1), mono[:pos] + mono[pos + 1:]


# An operator expression is {word: Fraction}; a word is a tuple of
# ("e" | "i", generator) read left to right as an operator product.
Word = tuple
Expr = dict


def expr_sum(*exprs: Expr) -> Expr:
    out: dict = defaultdict(Fraction)
    for e in exprs:
        for w, c in e.items():
            out[w] += c
    return {w: c for w, c in out.items() if c}


def expr_scale(e: Expr, c) -> Expr:
    c = Fraction(c)
    return {w: c * v for w, v in e.items() if c * v}


def expr_mul(*exprs: Expr) -> Expr:
    out: Expr = {(): Fraction(1)}
    for e in exprs:
        nxt: dict = defaultdict(Fraction)
        for w1, c1 in out.items():
            for w2, c2 in e.items():
                nxt[w1 + w2] += c1 * c2
        out = {w: c for w, c in nxt.items() if c}
    return out


def apply_word(word: Word, mono: tuple[int, ...]):
    sign = 1
    for kind, x in reversed(word):
        res = wedge(x, mono) if kind == "e" else contract(x, mono)
        if res is None:
            return None
        s, mono = res
        sign *= s
    return sign, mono


class CompiledExpr:
    """An expression with integer coefficients over a common denominator,
    indexed by the first generator each word contracts so that most words
    are skipped on a given monomial."""

    def __init__(self, expr: Expr):
        den = lcm(*(c.denominator for c in expr.values())) if expr else 1
        self.den = den
        self.by_first: dict = defaultdict(list)
        self.free: list = []
        for w, c in expr.items():
            num = int(c * den)
            first = w[-1] if w else None
            if first is not None and first[0] == "i":
                self.by_first[first[1]].append((w, num))
            else:
                self.free.append((w, num))

    def apply(self, mono: tuple[int, ...]) -> dict[tuple[int, ...], int]:
        """Apply to a basis monomial; result scaled by ``den``."""
        out: dict = defaultdict(int)
        for w, c in self.free:
            res = apply_word(w, mono)
            if res:
                out[res[1]] += c * res[0]
        for x in mono:
            for w, c in self.by_first.get(x, ()):
                res = apply_word(w, mono)
                if res:
                    out[res[1]] += c * res[0]
        return {m: v for m, v in out.items() if v}


# --------------------------------------------------------------------------
# the operator calculus of L_H(V)


def eps_x(gens: Generators, i, a) -> Expr:
    return {(("e", gens.x(i, a)),): Fraction(1)}


def iota_x(gens: Generators, i, a) -> Expr:
    return {(("i", gens.x(i, a)),): Fraction(1)}


def eps_y(gens: Generators, i, j) -> Expr:
    return {(("e", gens.y(i, j)),): Fraction(1)}


def iota_y(gens: Generators, i, j) -> Expr:
    # [iota^{ij}, eps_{kl}] = d^i_k d^j_l + d^i_l d^j_k
    return {(("i", gens.y(i, j)),): Fraction(2 if i == j else 1)}


@lru_cache(maxsize=None)
def operator_expr(name: str, g: int, r: int, idx: tuple = ()) -> Expr:
    """Operator expressions, written exactly as sums over repeated indices."""
    gens = Generators(g, r)
    sb = SymplecticBasis.standard(g)
    eta, eta_inv = sb.eta, sb.eta_inv
    R, A = range(r), range(2 * g)

    if name == "boundary":
        terms = []
        for i, j, a, b in itertools.product(R, R, A, A):
            if eta_inv[a][b]:
                terms.append(expr_scale(
                    expr_mul(eps_y(gens, i, j), iota_x(gens, i, a), iota_x(gens, j, b)),
                    Fraction(eta_inv[a][b], 2)))
        return expr_sum(*terms)
    if name == "coboundary":
        terms = []
        for i, j, a, b in itertools.product(R, R, A, A):
            if eta[a][b]:
                terms.append(expr_scale(
                    expr_mul(eps_x(gens, i, a), eps_x(gens, j, b), iota_y(gens, i, j)),
                    Fraction(-eta[a][b], 2)))
        return expr_sum(*terms)
    if name == "E":
        i, j = idx
        terms = [expr_mul(eps_x(gens, i, a), iota_x(gens, j, a)) for a in A]
        terms += [expr_mul(eps_y(gens, i, k), iota_y(gens, j, k)) for k in R]
        return expr_sum(*terms)
    if name == "euler_D":
        return expr_sum(*(operator_expr("E", g, r, (i, i)) for i in R))
    if name == "casimir_gl":
        return expr_sum(*(
            expr_mul(operator_expr("E", g, r, (i, j)), operator_expr("E", g, r, (j, i)))
            for i in R for j in R))
    if name == "e_sp":
        # e^a_b = eps^a_i iota^i_b
        a, b = idx
        return expr_sum(*(expr_mul(eps_x(gens, i, a), iota_x(gens, i, b)) for i in R))
    if name == "e_low":
        # e_{ab} = eta_{ac} e^c_b
        a, b = idx
        return expr_sum(*(expr_scale(operator_expr("e_sp", g, r, (c, b)), eta[a][c]) for c in A if eta[a][c]))
    if name == "casimir_sp":
        terms = []
        for a, b, c, d in itertools.product(A, A, A, A):
            coeff = eta_inv[a][c] * eta_inv[b][d]
            if coeff:
                e_ab = operator_expr("e_low", g, r, (a, b))
                terms.append(expr_scale(expr_mul(e_ab, operator_expr("e_low", g, r, (c, d))), -coeff))
                terms.append(expr_scale(expr_mul(e_ab, operator_expr("e_low", g, r, (d, c))), -coeff))
        return expr_sum(*terms)
    if name == "laplacian1_rhs":
        t1 = [expr_mul(eps_y(gens, i, j), eps_x(gens, k, a), iota_x(gens, i, a), iota_y(gens, j, k))
              for i, j, k, a in itertools.product(R, R, R, A)]
        t2 = []
        for a, b, c, d in itertools.product(A, A, A, A):
            coeff = eta[a][b] * eta_inv[c][d]
            if coeff:
                for i, j in itertools.product(R, R):
                    t2.append(expr_scale(
                        expr_mul(eps_x(gens, i, a), eps_x(gens, j, b), iota_x(gens, i, c), iota_x(gens, j, d)),
                        Fraction(-coeff, 2)))
        t3 = [expr_scale(expr_mul(eps_y(gens, i, j), iota_y(gens, i, j)), -g) for i, j in itertools.product(R, R)]
        return expr_sum(*t1, *t2, *t3)
    if name == "laplacian2_rhs":
        t1 = [expr_mul(eps_x(gens, i, a), eps_x(gens, j, b), iota_x(gens, i, b), iota_x(gens, j, a))
              for i, j, a, b in itertools.product(R, R, A, A)]
        t2 = [expr_scale(expr_mul(eps_y(gens, i, j), eps_x(gens, k, a), iota_x(gens, i, a), iota_y(gens, j, k)), 2)
              for i, j, k, a in itertools.product(R, R, R, A)]
        t3 = [expr_scale(expr_mul(eps_x(gens, i, a), iota_x(gens, i, a)), r) for i, a in itertools.product(R, A)]
        t4 = [expr_scale(expr_mul(eps_y(gens, i, j), iota_y(gens, i, j)), r + 1) for i, j in itertools.product(R, R)]
        return expr_sum(*t1, *t2, *t3, *t4)
    if name == "laplacian3_rhs":
        t1 = [expr_scale(expr_mul(eps_x(gens, i, a), eps_x(gens, j, b), iota_x(gens, i, b), iota_x(gens, j, a)), -1)
              for i, j, a, b in itertools.product(R, R, A, A)]
        t2 = []
        for a, b, c, d in itertools.product(A, A, A, A):
            coeff = eta[a][b] * eta_inv[c][d]
            if coeff:
                for i, j in itertools.product(R, R):
                    t2.append(expr_scale(
                        expr_mul(eps_x(gens, i, a), eps_x(gens, j, b), iota_x(gens, i, c), iota_x(gens, j, d)),
                        -coeff))
        t3 = [expr_scale(expr_mul(eps_x(gens, i, a), iota_x(gens, i, a)), 2 * g + 1) for i, a in itertools.product(R, A)]
        return expr_sum(*t1, *t2, *t3)
    raise ValueError(f"unknown operator {name!r}")


@lru_cache(maxsize=None)
def compiled(name: str, g: int, r: int, idx: tuple = ()) -> CompiledExpr:
    return CompiledExpr(operator_expr(name, g, r, idx))


# --------------------------------------------------------------------------
# bases and blocks


BlockKey = tuple  # (k, l, gl_weight, sp_weight)


@dataclass(frozen=True)
class ChainBlock:
    """Monomial basis of one (GL weight, Sp weight) block of K_{k,l}."""

    g: int
    r: int
    k: int
    ell: int
    gl_weight: tuple[int, ...]
    sp_weight: tuple[int, ...]
    basis: tuple[tuple[int, ...], ...]

    @property
    def key(self) -> BlockKey:
        return (self.k, self.ell, self.gl_weight, self.sp_weight)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self) -> dict[tuple[int, ...], int]:
        return _basis_index(self.basis)

    def hv_part(self, mono):
        n_x = Generators(self.g, self.r).n_x
        return tuple(x for x in mono if x < n_x)

    def sym_part(self, mono):
        n_x = Generators(self.g, self.r).n_x
        return tuple(x for x in mono if x >= n_x)


@lru_cache(maxsize=4096)
def _basis_index(basis):
    return {m: i for i, m in enumerate(basis)}


def monomial_weight(gens: Generators, mono) -> tuple[tuple[int, ...], tuple[int, ...]]:
    glw, spw = gens.gl_weights, gens.sp_weights
    w = [0] * gens.r
    s = [0] * gens.g
    for x in mono:
        for t, v in enumerate(glw[x]):
            w[t] += v
        for t, v in enumerate(spw[x]):
            s[t] += v
    return tuple(w), tuple(s)


def _subsets_with_gl_weight(indices, weights, count, target, exact=True) -> Iterator[tuple[int, ...]]:
    """count-element subsets of ``indices`` (sorted) whose weights sum to
    target (or stay below it when ``exact`` is false)."""
    n = len(indices)
    target = list(target)

    def rec(start, left, acc):
        if left == 0:
            if not exact or not any(target):
                yield tuple(acc)
            return
        for p in range(start, n - left + 1):
            w = weights[p]
            if any(wt > t for wt, t in zip(w, target)):
                continue
            for t, v in enumerate(w):
                target[t] -= v
            acc.append(indices[p])
            yield from rec(p + 1, left - 1, acc)
            acc.pop()
            for t, v in enumerate(w):
                target[t] += v

    yield from rec(0, count, [])


@lru_cache(maxsize=None)
def block_basis(g: int, r: int, k: int, ell: int, gl_weight: tuple, sp_weight: tuple) -> ChainBlock:
    """The block of K_{k,l} with the given joint weight, built directly."""
    gens = Generators(g, r)
    gl_weight, sp_weight = tuple(gl_weight), tuple(sp_weight)
    if len(gl_weight) != r or len(sp_weight) != g:
        raise ValueError("weight length does not match (r, g)")
    basis = []
    if k >= 0 and ell >= 0 and sum(gl_weight) == k + 2 * ell and min(gl_weight, default=0) >= 0:
        xs = list(range(gens.n_x))
        ys = list(range(gens.n_x, gens.count))
        glw, spw = gens.gl_weights, gens.sp_weights
        x_weights = [glw[x] for x in xs]
        y_weights = [glw[y] for y in ys]
        for ypart in _subsets_with_gl_weight(ys, y_weights, ell, gl_weight, exact=False):
            rest = list(gl_weight)
            for y in ypart:
                for t, v in enumerate(glw[y]):
                    rest[t] -= v
            for xpart in _subsets_with_gl_weight(xs, x_weights, k, rest):
                s = [0] * g
                for x in xpart:
                    for t, v in enumerate(spw[x]):
                        s[t] += v
                if tuple(s) == sp_weight:
                    basis.append(xpart + ypart)
    basis.sort()
    return ChainBlock(g, r, k, ell, gl_weight, sp_weight, tuple(basis))


def bidegree_monomials(g: int, r: int, k: int, ell: int) -> list[tuple[int, ...]]:
    gens = Generators(g, r)
    if k < 0 or ell < 0:
        return []
    out = []
    for xpart in itertools.combinations(range(gens.n_x), k):
        for ypart in itertools.combinations(range(gens.n_x, gens.count), ell):
            out.append(xpart + ypart)
    return out


def chain_basis(g: int, r: int, k: int, ell: int) -> list[ChainBlock]:
    """All weight blocks of K_{k,l}, sorted by (GL weight, Sp weight) descending."""
    if g < 1 or r < 1:
        raise ValueError("g and r must be positive")
    gens = Generators(g, r)
    groups: dict = defaultdict(list)
    for mono in bidegree_monomials(g, r, k, ell):
        groups[monomial_weight(gens, mono)].append(mono)
    blocks = []
    for (w, s) in sorted(groups, reverse=True):
        blocks.append(ChainBlock(g, r, k, ell, w, s, tuple(sorted(groups[w, s]))))
    return blocks


def bidegree_dimension(g: int, r: int, k: int, ell: int) -> int:
    if k < 0 or ell < 0:
        return 0
    return comb(2 * g * r, k) * comb(r * (r + 1) // 2, ell)


# --------------------------------------------------------------------------
# operator matrices


# (bidegree shift, weight shift rule) for each named operator
_BIDEGREE_SHIFT = {
    "boundary": (-2, 1),
    "coboundary": (2, -1),
}


def _target_key(name, g, r, key: BlockKey, idx=()) -> BlockKey:
    k, ell, w, s = key
    dk, dl = _BIDEGREE_SHIFT.get(name, (0, 0))
    if name == "E":
        i, j = idx
        w = list(w)
        w[i] += 1
        w[j] -= 1
        w = tuple(w)
    elif name == "e_sp":
        a, b = idx
        sb = SymplecticBasis.standard(g)
        s = tuple(x + p - q for x, p, q in zip(s, sb.sp_weight(a), sb.sp_weight(b)))
    return (k + dk, ell + dl, w, s)


OPERATOR_NAMES = (
    "boundary", "coboundary", "laplacian", "euler_D", "casimir_gl", "casimir_sp", "E", "e_sp",
    "laplacian1_rhs", "laplacian2_rhs", "laplacian3_rhs",
)


def _check_indices(name, g, r, idx):
    if name == "E":
        if len(idx) != 2 or not all(0 <= t < r for t in idx):
            raise IndexError(f"E needs two GL indices in [0, {r})")
    elif name == "e_sp":
        if len(idx) != 2 or not all(0 <= t < 2 * g for t in idx):
            raise IndexError(f"e_sp needs two Sp indices in [0, {2 * g})")
    elif idx:
        raise IndexError(f"{name} takes no indices")


def matrix_between(expr: CompiledExpr, src: tuple, tgt: tuple, strict: bool = True) -> SparseIntMatrix:
    """Matrix of an expression from basis ``src`` to basis ``tgt``."""
    tindex = _basis_index(tgt)
    entries = {}
    for col, mono in enumerate(src):
        for out, v in expr.apply(mono).items():
            row = tindex.get(out)
            if row is None:
                if strict:
                    raise ArithmeticError(f"operator leaves the target block at monomial {out}")
                continue
            entries[row, col] = v
    m = SparseIntMatrix(len(tgt), len(src), entries)
    return m.exact_div(expr.den) if expr.den != 1 else m


def _disk_cache_path(name, g, r, key, idx) -> Path | None:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    tag = repr((name, g, r, key, idx)).encode()
    return Path(root) / f"{name}-{hashlib.sha256(tag).hexdigest()[:24]}.txt"


@lru_cache(maxsize=8192)
def operator_block(name: str, g: int, r: int, key: BlockKey, idx: tuple = ()) -> SparseIntMatrix:
    """Matrix of a named operator on one weight block.

    Rows index the target block ``_target_key(name, g, r, key, idx)``.
    """
    if name not in OPERATOR_NAMES:
        raise ValueError(f"unknown operator {name!r}")
    _check_indices(name, g, r, idx)
    path = _disk_cache_path(name, g, r, key, idx)
    if path is not None and path.exists():
        return SparseIntMatrix.from_triplets(path.read_text())
    if name == "laplacian":
        m = laplacian_block(g, r, key)
    else:
        src = block_basis(g, r, *key)
        tkey = _target_key(name, g, r, key, idx)
        tgt = block_basis(g, r, *tkey) if tkey[0] >= 0 and tkey[1] >= 0 and min(tkey[2]) >= 0 else \
            ChainBlock(g, r, *tkey, ())
        m = matrix_between(compiled(name, g, r, idx), src.basis, tgt.basis)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(m.to_triplets())
    return m


def boundary_block(g, r, key) -> SparseIntMatrix:
    return operator_block("boundary", g, r, key)


def coboundary_block(g, r, key) -> SparseIntMatrix:
    return operator_block("coboundary", g, r, key)


def laplacian_block(g: int, r: int, key: BlockKey) -> SparseIntMatrix:
    """Delta = d* d + d d* on one block (graded commutator of two odd maps)."""
    k, ell, w, s = key
    n = block_basis(g, r, *key).dim
    lap = SparseIntMatrix(n, n)
    if k >= 2:
        down = (k - 2, ell + 1, w, s)
        lap = lap + coboundary_block(g, r, down) @ boundary_block(g, r, key)
    if ell >= 1:
        up = (k + 2, ell - 1, w, s)
        lap = lap + boundary_block(g, r, up) @ coboundary_block(g, r, key)
    return lap


def operator(name: str, g: int, r: int, k: int, ell: int, idx: tuple = ()) -> dict[BlockKey, tuple[BlockKey, SparseIntMatrix]]:
    """All blocks of a named operator on K_{k,l}: source key -> (target key, matrix)."""
    if g < 1 or r < 1 or k < 0 or ell < 0:
        raise ValueError("need g, r >= 1 and k, l >= 0")
    out = {}
    for blk in chain_basis(g, r, k, ell):
        out[blk.key] = (_target_key(name, g, r, blk.key, idx) if name != "laplacian" else blk.key,
                        operator_block(name, g, r, blk.key, idx))
    return out


def boundary(g, r, k, ell):
    return operator("boundary", g, r, k, ell)


def coboundary(g, r, k, ell):
    return operator("coboundary", g, r, k, ell)


def full_operator(name: str, g: int, r: int, k: int, ell: int, idx: tuple = ()) -> SparseIntMatrix:
    """Operator on the whole bidegree K_{k,l}, in the bidegree_monomials order.

    Used for the identity checks; the target bidegree is inferred from the
    operator.
    """
    dk, dl = _BIDEGREE_SHIFT.get(name, (0, 0))
    src = tuple(bidegree_monomials(g, r, k, ell))
    tgt = tuple(bidegree_monomials(g, r, k + dk, ell + dl))
    return matrix_between(compiled(name, g, r, idx), src, tgt)


def full_elementary(kind: str, gen: int, g: int, r: int, k: int, ell: int) -> SparseIntMatrix:
    """eps or iota of a single generator on K_{k,l} (iota_y carries no factor 2 here)."""
    gens = Generators(g, r)
    is_x = gens.is_x(gen)
    step = 1 if kind == "e" else -1
    tk, tl = (k + step, ell) if is_x else (k, ell + step)
    src = tuple(bidegree_monomials(g, r, k, ell))
    tgt = tuple(bidegree_monomials(g, r, tk, tl))
    return matrix_between(CompiledExpr({((kind, gen),): Fraction(1)}), src, tgt)


# --------------------------------------------------------------------------
# generic Chevalley-Eilenberg engine (independent of the operator calculus)


Bracket = Callable[[int, int], Mapping[int, int]]


def ce_boundary_on(mono: tuple[int, ...], bracket: Bracket) -> dict[tuple[int, ...], int]:
    """d(a_1 ^ ... ^ a_k) = sum_{i<j} (-1)^{i-j+1} [a_i, a_j] ^ a_1 ^ ..^a_i^..^a_j^.. ^ a_k."""
    out: dict = defaultdict(int)
    n = len(mono)
    for p in range(n):
        for q in range(p + 1, n):
            br = bracket(mono[p], mono[q])
            if not br:
                continue
            sign = -1 if (p - q + 1) % 2 else 1
            rest = mono[:p] + mono[p + 1:q] + mono[q + 1:]
            for z, c in br.items():
                res = wedge(z, rest)
                if res is None:
                    continue
                s, m = res
                out[m] += sign * s * c
    return {m: v for m, v in out.items() if v}


def ce_boundary_matrix(src, tgt, bracket: Bracket) -> SparseIntMatrix:
    tindex = _basis_index(tuple(tgt))
    entries = {}
    for col, mono in enumerate(src):
        for out, v in ce_boundary_on(mono, bracket).items():
            entries[tindex[out], col] = v
    return SparseIntMatrix(len(tgt), len(src), entries)


def lh_bracket(g: int, r: int) -> Bracket:
    """Structure constants [e_a (x) E_i, e_b (x) E_j] = eta_ab E_ij."""
    gens = Generators(g, r)
    eta = SymplecticBasis.standard(g).eta
    labels = gens.labels

    def bracket(u, v):
        lu, lv = labels[u], labels[v]
        if lu[0] != "x" or lv[0] != "x":
            return {}
        c = eta[lu[2]][lv[2]]
        return {gens.y(lu[1], lv[1]): c} if c else {}

    return bracket


def lh_ce_boundary_block(g, r, key) -> SparseIntMatrix:
    """Boundary of a block of L_H(V) computed by the generic engine."""
    k, ell, w, s = key
    src = block_basis(g, r, *key).basis
    tgt = block_basis(g, r, k - 2, ell + 1, w, s).basis if k >= 2 else ()
    return ce_boundary_matrix(src, tgt, lh_bracket(g, r))


# Lie_2(V) = V + Lambda^2 V: generators E_i (i < r) then E_i ^ E_j (i < j)


@dataclass(frozen=True)
class Lie2Generators:
    r: int

    @property
    def count(self) -> int:
        return self.r + self.r * (self.r - 1) // 2

    def pair(self, i: int, j: int) -> int:
        assert i < j
        r = self.r
        return r + i * (2 * r - i - 1) // 2 + (j - i - 1)

    @property
    def weights(self):
        return _lie2_weights(self.r)

    def bracket(self, u: int, v: int) -> dict[int, int]:
        r = self.r
        if u >= r or v >= r or u == v:
            return {}
        if u < v:
            return {self.pair(u, v): 1}
        return {self.pair(v, u): -1}


@lru_cache(maxsize=None)
def _lie2_weights(r):
    out = []
    for i in range(r):
        w = [0] * r
        w[i] = 1
        out.append(tuple(w))
    for i in range(r):
        for j in range(i + 1, r):
            w = [0] * r
            w[i] = w[j] = 1
            out.append(tuple(w))
    return tuple(out)


@lru_cache(maxsize=None)
def lie2_block_basis(r: int, k: int, gl_weight: tuple) -> tuple[tuple[int, ...], ...]:
    gens = Lie2Generators(r)
    if k < 0 or min(gl_weight, default=0) < 0:
        return ()
    idx = list(range(gens.count))
    return tuple(sorted(_subsets_with_gl_weight(idx, list(gens.weights), k, tuple(gl_weight))))


def lie2_boundary_block(r: int, k: int, gl_weight: tuple) -> SparseIntMatrix:
    """Boundary K_k -> K_{k-1} of Lie_2(V) on one GL weight block."""
    gens = Lie2Generators(r)
    src = lie2_block_basis(r, k, tuple(gl_weight))
    tgt = lie2_block_basis(r, k - 1, tuple(gl_weight)) if k >= 1 else ()
    return ce_boundary_matrix(src, tgt, gens.bracket)


def lie2_boundary(r: int, k: int) -> SparseIntMatrix:
    """Boundary Lambda^k Lie_2(V) -> Lambda^{k-1} Lie_2(V) in the lexicographic monomial basis."""
    if r < 1 or k < 1:
        raise ValueError("need r >= 1 and k >= 1")
    gens = Lie2Generators(r)
    src = list(itertools.combinations(range(gens.count), k))
    tgt = list(itertools.combinations(range(gens.count), k - 1))
    return ce_boundary_matrix(src, tgt, gens.bracket)
