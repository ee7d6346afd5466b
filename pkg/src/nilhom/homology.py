"""Homology of L_H(V) and Lie_2(V) by two independent routes.

For each joint weight block of a bidegree (k, l) the homology dimension is
computed as

* the nullity of the block Laplacian (harmonic route), and
* dim ker d_out - rank d_in (kernel / image route),

and the two must agree.  Only dominant weights are computed; the full
character is recovered from the Weyl symmetry of GL(V) x Sp(H).
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from . import cecomplex as ce
from .exact import rank
from .partitions import Partition, enumerate_O, partitions_of
from .weightchar import (
    DecompositionReport,
    WeightCharacter,
    decompose_gl,
    decompose_gl_by_sp_weight,
    decompose_sp_gl,
)


class KostantMismatch(RuntimeError):
    """Harmonic and kernel/image homology disagree on a block."""

    def __init__(self, message, block=None):
        super().__init__(message)
        self.block = block


class SiggMismatch(AssertionError):
    pass


# --------------------------------------------------------------------------
# blocks


def dominant_sp_weights(g: int, k: int) -> list[tuple[int, ...]]:
    """Dominant Sp(2g) weights reachable in Lambda^k(H (x) V)."""
    out = []

    def rec(prefix, budget, upper):
        if len(prefix) == g:
            total = sum(prefix)
            if total <= k and (k - total) % 2 == 0:
                out.append(tuple(prefix))
            return
        for v in range(min(budget, upper), -1, -1):
            rec(prefix + [v], budget - v, v)

    rec([], k, k)
    return sorted(out, reverse=True)


def dominant_blocks(g: int, r: int, k: int, ell: int) -> list[ce.BlockKey]:
    """Keys of nonempty blocks of K_{k,l} with dominant joint weight."""
    if k < 0 or ell < 0:
        return []
    keys = []
    for lam in partitions_of(k + 2 * ell, max_length=r):
        w = lam.padded(r)
        for s in dominant_sp_weights(g, k):
            key = (k, ell, w, s)
            if ce.block_basis(g, r, *key).dim:
                keys.append(key)
    return keys


@lru_cache(maxsize=None)
def _block_rank(name: str, g: int, r: int, key: ce.BlockKey) -> int:
    return rank(ce.operator_block(name, g, r, key))


def harmonic_block_dim(g: int, r: int, key: ce.BlockKey) -> int:
    n = ce.block_basis(g, r, *key).dim
    return n - _block_rank("laplacian", g, r, key) if n else 0


def kerim_block_dim(g: int, r: int, key: ce.BlockKey) -> int:
    k, ell, w, s = key
    n = ce.block_basis(g, r, *key).dim
    if not n:
        return 0
    out_rank = _block_rank("boundary", g, r, key) if k >= 2 else 0
    in_rank = 0
    if ell >= 1:
        src = (k + 2, ell - 1, w, s)
        if ce.block_basis(g, r, *src).dim:
            in_rank = _block_rank("boundary", g, r, src)
    h = n - out_rank - in_rank
    if h < 0:
        raise KostantMismatch(f"negative homology {h} on block {key}", key)
    return h


def _both_dims(args):
    g, r, key = args
    return key, harmonic_block_dim(g, r, key), kerim_block_dim(g, r, key)


@dataclass
class CrossCheckLog:
    """Blocks on which the harmonic and kernel/image routes were compared."""

    blocks: dict = field(default_factory=dict)

    def record(self, g, r, key, harmonic, kerim):
        self.blocks[(g, r, key)] = (harmonic, kerim)

    @property
    def mismatches(self):
        return {b: v for b, v in self.blocks.items() if v[0] != v[1]}


CROSS_CHECKS = CrossCheckLog()


def _workers(parallelism: int) -> int:
    if parallelism == 0:
        return os.cpu_count() or 1
    return max(1, parallelism)


def block_dims(g: int, r: int, keys: Iterable[ce.BlockKey], parallelism: int = 1) -> dict[ce.BlockKey, tuple[int, int]]:
    """(harmonic, kernel/image) dimension for each block; raises on disagreement."""
    keys = list(keys)
    jobs = [(g, r, key) for key in keys]
    if _workers(parallelism) > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=_workers(parallelism)) as pool:
            results = list(pool.map(_both_dims, jobs))
    else:
        results = [_both_dims(j) for j in jobs]
    out = {}
    for key, harm, kerim in sorted(results):
        CROSS_CHECKS.record(g, r, key, harm, kerim)
        if harm != kerim:
            raise KostantMismatch(
                f"Kostant cross-check failed on block {key} (g={g}, r={r}): harmonic {harm} != ker/im {kerim}",
                key)
        out[key] = (harm, kerim)
    return out


def harmonic_character(g: int, r: int, k: int, ell: int, parallelism: int = 1, dominant_only: bool = True) -> WeightCharacter:
    """Kernel dimension of the Laplacian on each weight block of K_{k,l}."""
    return _character(g, r, k, ell, 0, parallelism, dominant_only)


def homology_character_kerim(g: int, r: int, k: int, ell: int, parallelism: int = 1, dominant_only: bool = True) -> WeightCharacter:
    """dim ker d - rank d on each weight block of K_{k,l}."""
    return _character(g, r, k, ell, 1, parallelism, dominant_only)


def _character(g, r, k, ell, which, parallelism, dominant_only):
    if g < 1 or r < 1:
        raise ValueError("g and r must be positive")
    if dominant_only:
        keys = dominant_blocks(g, r, k, ell)
    else:
        keys = [b.key for b in ce.chain_basis(g, r, k, ell)] if k >= 0 and ell >= 0 else []
    dims = block_dims(g, r, keys, parallelism)
    mults = {(key[2], key[3]): v[which] for key, v in dims.items() if v[which]}
    if dominant_only:
        return WeightCharacter.from_dominant(r, g, mults)
    return WeightCharacter(r, g, mults)


def chain_character(g: int, r: int, k: int, ell: int) -> WeightCharacter:
    """Character of K_{k,l} itself, from monomial counts on dominant blocks."""
    mults = {}
    for lam in partitions_of(k + 2 * ell, max_length=r) if k >= 0 and ell >= 0 else ():
        w = lam.padded(r)
        for s in dominant_sp_weights(g, k):
            d = ce.block_basis(g, r, k, ell, w, s).dim
            if d:
                mults[w, s] = d
    return WeightCharacter.from_dominant(r, g, mults)


# --------------------------------------------------------------------------
# results


@dataclass
class HomologyResult:
    g: int
    r: int
    k: int
    character: WeightCharacter
    report: DecompositionReport
    dims_by_bidegree: dict[int, int]
    ell: int | None = None

    @property
    def dimension(self) -> int:
        return self.character.dimension

    def to_json(self) -> dict:
        out = {
            "g": self.g,
            "r": self.r,
            "k": self.k,
            "dims_by_bidegree": {str(l): d for l, d in sorted(self.dims_by_bidegree.items())},
            "decomposition": self.report.to_json(),
        }
        if self.ell is not None:
            out["ell"] = self.ell
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _decompose(chi: WeightCharacter, g: int) -> DecompositionReport:
    return decompose_sp_gl(chi) if g == 1 else decompose_gl_by_sp_weight(chi)


def _audit(result: HomologyResult):
    total = result.report.total_dimension(result.r, result.g)
    if total != result.character.dimension:
        raise KostantMismatch(
            f"dimension audit failed: report {total} != character {result.character.dimension}")
    if sum(result.dims_by_bidegree.values()) != result.character.dimension:
        raise KostantMismatch("bigraded dimensions do not sum to the total")


def bigraded_homology(g: int, r: int, k: int, ell: int, parallelism: int = 1) -> HomologyResult:
    """H_{k,l}: the summand of H_{k+l}(L_H) of polynomial degree k + 2l in V."""
    chi = harmonic_character(g, r, k, ell, parallelism)
    result = HomologyResult(g, r, k + ell, chi, _decompose(chi, g), {ell: chi.dimension}, ell=ell)
    _audit(result)
    return result


def arity_homology(g: int, n: int, ell: int, r: int | None = None, parallelism: int = 1) -> HomologyResult:
    """H_n(L_H)(n + l), computed with dim V = n + l unless r is given."""
    if ell < 0 or n < 0:
        raise ValueError("need n, l >= 0")
    if r is None:
        r = max(1, n + ell)
    if n < ell:
        chi = WeightCharacter(r, g, {})
        return HomologyResult(g, r, n, chi, _decompose(chi, g), {ell: 0}, ell=ell)
    return bigraded_homology(g, r, n - ell, ell, parallelism)


def homology_decomposition(g: int, r: int, k: int, parallelism: int = 1) -> HomologyResult:
    """H_k(L_H(V)) summed over all bidegrees (k - l, l)."""
    if g < 1 or r < 1 or k < 0:
        raise ValueError("need g, r >= 1 and k >= 0")
    total = WeightCharacter(r, g, {})
    dims = {}
    for ell in range(0, k + 1):
        chi = harmonic_character(g, r, k - ell, ell, parallelism)
        dims[ell] = chi.dimension
        total = total + chi
    result = HomologyResult(g, r, k, total, _decompose(total, g), dims)
    _audit(result)
    return result


def max_homological_degree(g: int, r: int) -> int:
    return 2 * g * r + r * (r + 1) // 2


def total_homology_dims(g: int, r: int, parallelism: int = 1) -> dict:
    """Dimensions of the whole homology, by homological degree and by V-degree."""
    by_degree: dict[int, int] = {}
    by_arity: dict[int, int] = {}
    gens = ce.Generators(g, r)
    for k in range(0, gens.n_x + 1):
        for ell in range(0, gens.n_y + 1):
            chi = harmonic_character(g, r, k, ell, parallelism)
            d = chi.dimension
            by_degree[k + ell] = by_degree.get(k + ell, 0) + d
            by_arity[k + 2 * ell] = by_arity.get(k + 2 * ell, 0) + d
    return {"by_degree": by_degree, "by_arity": by_arity}


def euler_characteristic_by_block(g: int, r: int) -> bool:
    """sum (-1)^deg dim K = sum (-1)^deg dim H on every dominant weight block."""
    gens = ce.Generators(g, r)
    chain: dict = {}
    homol: dict = {}
    for k in range(0, gens.n_x + 1):
        for ell in range(0, gens.n_y + 1):
            sign = -1 if (k + ell) % 2 else 1
            for key in dominant_blocks(g, r, k, ell):
                wk = (key[2], key[3])
                chain[wk] = chain.get(wk, 0) + sign * ce.block_basis(g, r, *key).dim
            for (wk, v) in harmonic_character(g, r, k, ell).dominant_part().items():
                homol[wk] = homol.get(wk, 0) + sign * v
    keys = set(chain) | set(homol)
    return all(chain.get(w, 0) == homol.get(w, 0) for w in keys)


# --------------------------------------------------------------------------
# Lie_2(V)


@lru_cache(maxsize=None)
def _lie2_rank(r, k, w):
    if k < 1:
        return 0
    return rank(ce.lie2_boundary_block(r, k, w))


def lie2_homology_character(r: int, k: int) -> WeightCharacter:
    mults = {}
    for n in range(k, 2 * k + 1):
        for lam in partitions_of(n, max_length=r):
            w = lam.padded(r)
            dim = len(ce.lie2_block_basis(r, k, w))
            if not dim:
                continue
            h = dim - _lie2_rank(r, k, w) - _lie2_rank(r, k + 1, w)
            if h < 0:
                raise KostantMismatch(f"negative Lie_2 homology at {w}")
            if h:
                mults[w, ()] = h
    return WeightCharacter.from_dominant(r, 0, mults)


def sigg_homology(r: int, k: int) -> DecompositionReport:
    """H_k(Lie_2(V)) decomposed into Schur functors, checked against O_k."""
    if r < 1 or k < 0:
        raise ValueError("need r >= 1 and k >= 0")
    report = decompose_gl(lie2_homology_character(r, k))
    expected = {(None, lam, 1) for lam in enumerate_O(k) if len(lam) <= r}
    if report.as_set() != expected:
        raise SiggMismatch(f"H_{k}(Lie_2) at r={r}: computed {report}, expected {sorted(expected)}")
    return report
