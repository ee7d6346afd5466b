"""Characters as weight-multiplicity maps and their decomposition.

A character records, for each joint torus weight (GL(V) exponents, Sp(H)
exponents), the dimension of the corresponding weight space.  Genuine
characters are decomposed into irreducibles by greedy peeling from the
greatest weight; Kostka unitriangularity makes the greedy step exact.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .partitions import (
    Partition,
    as_partition,
    dominates,
    enumerate_P,
    gl_hook_content_dimension,
    partitions_of,
)

GLWeight = tuple  # r nonnegative exponents
SpWeight = tuple  # g integer exponents


class VirtualCharacterError(ValueError):
    """Peeling met a negative multiplicity: the input is not a genuine character."""


def compositions(n: int, r: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of n into r parts, in lexicographically decreasing order."""
    if r == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, r - 1):
            yield (first,) + rest


def distinct_permutations(w: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All distinct rearrangements of w."""
    counts = Counter(w)
    values = sorted(counts, reverse=True)
    n = len(w)

    def rec(prefix):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in values:
            if counts[v]:
                counts[v] -= 1
                prefix.append(v)
                yield from rec(prefix)
                prefix.pop()
                counts[v] += 1

    yield from rec([])


def signed_permutations(s: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """The orbit of s under the Weyl group of Sp(2g) (signed permutations)."""
    seen = set()
    for perm in distinct_permutations(tuple(abs(x) for x in s)):
        nz = [i for i, x in enumerate(perm) if x]
        for signs in itertools.product((1, -1), repeat=len(nz)):
            v = list(perm)
            for i, sg in zip(nz, signs):
                v[i] *= sg
            v = tuple(v)
            if v not in seen:
                seen.add(v)
                yield v


def is_dominant_gl(w) -> bool:
    return all(a >= b for a, b in zip(w, w[1:]))


def is_dominant_sp(s) -> bool:
    return all(a >= b for a, b in zip(s, s[1:])) and (not s or s[-1] >= 0)


def dominant_sp(s) -> tuple[int, ...]:
    return tuple(sorted((abs(x) for x in s), reverse=True))


@dataclass(frozen=True)
class WeightCharacter:
    """Finite map (GL weight, Sp weight) -> multiplicity.

    ``rank_sp`` may be 0, in which case every Sp weight is the empty tuple.
    """

    rank_gl: int
    rank_sp: int
    mults: Mapping[tuple[GLWeight, SpWeight], int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (w, s), m in self.mults.items():
            w, s = tuple(w), tuple(s)
            if len(w) != self.rank_gl or len(s) != self.rank_sp:
                raise ValueError(f"weight {(w, s)} does not match ranks ({self.rank_gl}, {self.rank_sp})")
            if m:
                clean[w, s] = clean.get((w, s), 0) + m
        object.__setattr__(self, "mults", {k: v for k, v in clean.items() if v})

    def __getitem__(self, key) -> int:
        w, s = key
        return self.mults.get((tuple(w), tuple(s)), 0)

    def __iter__(self):
        return iter(self.mults.items())

    def __len__(self):
        return len(self.mults)

    def __eq__(self, other):
        if not isinstance(other, WeightCharacter):
            return NotImplemented
        return (self.rank_gl, self.rank_sp, self.mults) == (other.rank_gl, other.rank_sp, other.mults)

    def __hash__(self):
        return hash((self.rank_gl, self.rank_sp, frozenset(self.mults.items())))

    def _check_compatible(self, other):
        if (self.rank_gl, self.rank_sp) != (other.rank_gl, other.rank_sp):
            raise ValueError("characters of different ranks")

    def __add__(self, other):
        self._check_compatible(other)
        m = dict(self.mults)
        for k, v in other.mults.items():
            m[k] = m.get(k, 0) + v
        return WeightCharacter(self.rank_gl, self.rank_sp, m)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c: int) -> "WeightCharacter":
        return WeightCharacter(self.rank_gl, self.rank_sp, {k: c * v for k, v in self.mults.items()})

    @property
    def dimension(self) -> int:
        return sum(self.mults.values())

    @property
    def is_virtual(self) -> bool:
        return any(v < 0 for v in self.mults.values())

    def gl_part(self) -> "WeightCharacter":
        """Forget the Sp weights."""
        m = defaultdict(int)
        for (w, _), v in self.mults.items():
            m[w, ()] += v
        return WeightCharacter(self.rank_gl, 0, m)

    def at_sp_weight(self, s) -> "WeightCharacter":
        s = tuple(s)
        return WeightCharacter(
            self.rank_gl, 0, {(w, ()): v for (w, t), v in self.mults.items() if t == s}
        )

    def sp_weights(self) -> set[tuple[int, ...]]:
        return {s for (_, s) in self.mults}

    def degrees(self) -> set[int]:
        return {sum(w) for (w, _) in self.mults}

    def restrict_degree(self, n: int) -> "WeightCharacter":
        return WeightCharacter(
            self.rank_gl, self.rank_sp, {k: v for k, v in self.mults.items() if sum(k[0]) == n}
        )

    def is_gl_symmetric(self) -> bool:
        for (w, s), v in self.mults.items():
            if self.mults.get((tuple(sorted(w, reverse=True)), s), 0) != v:
                return False
        return True

    def is_sp_symmetric(self) -> bool:
        for (w, s), v in self.mults.items():
            if self.mults.get((w, dominant_sp(s)), 0) != v:
                return False
        return True

    def dominant_part(self) -> dict[tuple[GLWeight, SpWeight], int]:
        return {
            (w, s): v for (w, s), v in self.mults.items() if is_dominant_gl(w) and is_dominant_sp(s)
        }

    @classmethod
    def from_dominant(cls, rank_gl: int, rank_sp: int, dominant: Mapping) -> "WeightCharacter":
        """Extend multiplicities given on dominant weights to all Weyl-conjugates."""
        m = {}
        for (w, s), v in dominant.items():
            if not v:
                continue
            for ww in distinct_permutations(tuple(w)):
                for ss in signed_permutations(tuple(s)):
                    m[ww, ss] = v
        return cls(rank_gl, rank_sp, m)


@lru_cache(maxsize=None)
def _kostka(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    # SSYT count; the cells holding the largest letter form a horizontal strip
    if not content:
        return 1 if not shape else 0
    *rest, last = content
    if sum(shape) != sum(content):
        return 0
    total = 0
    # remove a horizontal strip of size `last` from shape
    n = len(shape)

    def strips(i, remaining, acc):
        if i == n:
            if remaining == 0:
                yield tuple(p for p in acc if p)
            return
        lower = shape[i + 1] if i + 1 < n else 0
        for take in range(min(remaining, shape[i] - lower), -1, -1):
            acc.append(shape[i] - take)
            yield from strips(i + 1, remaining - take, acc)
            acc.pop()

    for inner_shape in strips(0, last, []):
        total += _kostka(inner_shape, tuple(rest))
    return total


def kostka(lam, mu) -> int:
    """Number of SSYT of shape lam and content mu (content order is irrelevant)."""
    lam = as_partition(lam)
    content = tuple(sorted((c for c in mu if c), reverse=True))
    return _kostka(tuple(lam), content)


def schur_character(lam, r: int) -> WeightCharacter:
    lam = as_partition(lam)
    if len(lam) > r:
        return WeightCharacter(r, 0, {})
    m = {}
    for mu in compositions(lam.size, r):
        k = kostka(lam, mu)
        if k:
            m[mu, ()] = k
    return WeightCharacter(r, 0, m)


def sl2_character(m: int) -> WeightCharacter:
    """Character of H_m, the m-th symmetric power of the 2-dimensional H."""
    return WeightCharacter(0, 1, {((), (m - 2 * t,)): 1 for t in range(m + 1)})


def tensor(a: WeightCharacter, b: WeightCharacter) -> WeightCharacter:
    """Character of an outer tensor product (GL from one factor, Sp from the other)
    or of an ordinary tensor product when ranks agree."""
    if a.rank_gl == b.rank_gl and a.rank_sp == b.rank_sp:
        m = defaultdict(int)
        for (w1, s1), v1 in a.mults.items():
            for (w2, s2), v2 in b.mults.items():
                m[tuple(x + y for x, y in zip(w1, w2)), tuple(x + y for x, y in zip(s1, s2))] += v1 * v2
        return WeightCharacter(a.rank_gl, a.rank_sp, m)
    if a.rank_sp == 0 and b.rank_gl == 0:
        a, b = b, a
    if a.rank_gl == 0 and b.rank_sp == 0:
        m = {}
        for (_, s), v1 in a.mults.items():
            for (w, _), v2 in b.mults.items():
                m[w, s] = v1 * v2
        return WeightCharacter(b.rank_gl, a.rank_sp, m)
    raise ValueError("incompatible characters for tensor product")


@dataclass(frozen=True)
class DecompositionEntry:
    sp: object  # int for g=1 irreducibles, tuple for Sp weights, None for GL only
    gl: Partition
    mult: int

    def to_json(self) -> dict:
        sp = list(self.sp) if isinstance(self.sp, tuple) else self.sp
        return {"sp": sp, "gl": list(self.gl), "mult": self.mult}


def _sort_key(e: DecompositionEntry):
    sp = e.sp
    if sp is None:
        sp_key = ()
    elif isinstance(sp, tuple):
        sp_key = sp
    else:
        sp_key = (sp,)
    return (sp_key, tuple(e.gl))


@dataclass(frozen=True)
class DecompositionReport:
    """A list of (Sp label, GL partition, multiplicity) triples.

    ``kind`` is ``"gl"`` (no Sp label), ``"sp_gl"`` (label m means the
    irreducible H_m of Sp(H) for g = 1) or ``"sp_weight"`` (label is a
    dominant Sp torus weight; used for g >= 2).
    """

    entries: tuple[DecompositionEntry, ...]
    kind: str = "gl"

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(sorted(self.entries, key=_sort_key, reverse=True)))

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def as_set(self) -> set:
        return {(e.sp, e.gl, e.mult) for e in self.entries}

    def gl_multiset(self) -> dict[Partition, int]:
        out = defaultdict(int)
        for e in self.entries:
            out[e.gl] += e.mult
        return dict(out)

    def total_dimension(self, r: int, g: int = 1) -> int:
        total = 0
        for e in self.entries:
            gl_dim = gl_hook_content_dimension(e.gl, r)
            if self.kind == "sp_gl":
                sp_dim = e.sp + 1
            elif self.kind == "sp_weight":
                sp_dim = sum(1 for _ in signed_permutations(e.sp))
            else:
                sp_dim = 1
            total += e.mult * sp_dim * gl_dim
        return total

    def to_json(self) -> list[dict]:
        return [e.to_json() for e in self.entries]

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data, kind: str | None = None) -> "DecompositionReport":
        if isinstance(data, str):
            data = json.loads(data)
        entries = []
        for d in data:
            sp = d["sp"]
            if isinstance(sp, list):
                sp = tuple(sp)
            entries.append(DecompositionEntry(sp, Partition(d["gl"]), int(d["mult"])))
        if kind is None:
            sps = [e.sp for e in entries]
            if any(isinstance(s, tuple) for s in sps):
                kind = "sp_weight"
            elif any(s is not None for s in sps):
                kind = "sp_gl"
            else:
                kind = "gl"
        return cls(tuple(entries), kind)

    def as_text(self) -> str:
        if not self.entries:
            return "0"
        terms = []
        for e in self.entries:
            gl = "S(" + ",".join(map(str, e.gl)) + ")"
            if self.kind == "sp_gl":
                term = f"H_{e.sp} ⊗ {gl}"
            elif self.kind == "sp_weight":
                term = "[" + ",".join(map(str, e.sp)) + f"] ⊗ {gl}"
            else:
                term = gl
            if e.mult != 1:
                term = f"{e.mult}·{term}"
            terms.append(term)
        return " + ".join(terms)

    def __str__(self):
        return self.as_text()


def _peel_gl(dominant: dict[tuple[int, ...], int], r: int) -> dict[Partition, int]:
    """Greedy highest-weight peeling on the dominant part of a symmetric GL character."""
    dominant = {w: v for w, v in dominant.items() if v}
    found: dict[Partition, int] = {}
    while dominant:
        top = max(dominant)
        mult = dominant[top]
        if mult < 0:
            raise VirtualCharacterError(f"negative multiplicity {mult} at highest weight {top}")
        lam = Partition(top)
        found[lam] = found.get(lam, 0) + mult
        for mu in partitions_of(lam.size, max_length=r):
            if not dominates(lam, mu):
                continue
            k = kostka(lam, mu)
            if k:
                key = mu.padded(r)
                v = dominant.get(key, 0) - mult * k
                if v:
                    dominant[key] = v
                else:
                    dominant.pop(key, None)
    return found


def decompose_gl(chi: WeightCharacter) -> DecompositionReport:
    """Decompose a genuine polynomial GL(V) character (Sp weights are summed out)."""
    gl = chi.gl_part() if chi.rank_sp else chi
    if not gl.is_gl_symmetric():
        raise VirtualCharacterError("character is not symmetric under permutations of the GL weight")
    dominant = {w: v for (w, _), v in gl.mults.items() if is_dominant_gl(w)}
    found = _peel_gl(dominant, chi.rank_gl)
    return DecompositionReport(tuple(DecompositionEntry(None, lam, m) for lam, m in found.items()), "gl")


def decompose_sp_gl(chi: WeightCharacter) -> DecompositionReport:
    """Decompose a Sp(H) x GL(V) character for g = 1 into H_m (x) Schur^lam.

    The multiplicity of H_m in an SL(2)-module is the weight-m multiplicity
    minus the weight-(m+2) multiplicity; applied GL-weight by GL-weight this
    gives a GL character per m, which is then peeled.
    """
    if chi.rank_sp != 1:
        raise ValueError("joint decomposition is only implemented for g = 1")
    if not chi.is_sp_symmetric():
        raise VirtualCharacterError("character is not symmetric under Sp weight negation")
    if not chi.is_gl_symmetric():
        raise VirtualCharacterError("character is not symmetric under permutations of the GL weight")
    entries = []
    top = max((s[0] for s in chi.sp_weights()), default=-1)
    for m in range(top, -1, -1):
        dom = defaultdict(int)
        for (w, s), v in chi.mults.items():
            if not is_dominant_gl(w):
                continue
            if s[0] == m:
                dom[w] += v
            elif s[0] == m + 2:
                dom[w] -= v
        for lam, mult in _peel_gl(dict(dom), chi.rank_gl).items():
            entries.append(DecompositionEntry(m, lam, mult))
    return DecompositionReport(tuple(entries), "sp_gl")


def decompose_gl_by_sp_weight(chi: WeightCharacter) -> DecompositionReport:
    """GL decomposition of each dominant Sp weight space (any g)."""
    entries = []
    for s in sorted(chi.sp_weights(), reverse=True):
        if not is_dominant_sp(s):
            continue
        rep = decompose_gl(chi.at_sp_weight(s))
        for e in rep:
            entries.append(DecompositionEntry(s, e.gl, e.mult))
    return DecompositionReport(tuple(entries), "sp_weight")


def character_of_report(report: DecompositionReport, r: int) -> WeightCharacter:
    """Rebuild a character from a decomposition (g = 1 or GL only)."""
    if report.kind == "sp_gl":
        total = WeightCharacter(r, 1, {})
        for e in report:
            total = total + tensor(sl2_character(e.sp), schur_character(e.gl, r)).scale(e.mult)
        return total
    if report.kind == "gl":
        total = WeightCharacter(r, 0, {})
        for e in report:
            total = total + schur_character(e.gl, r).scale(e.mult)
        return total
    raise ValueError("cannot rebuild a character from Sp-weight refined reports")


def sym2_monomials(r: int) -> list[tuple[int, ...]]:
    out = []
    for i in range(r):
        for j in range(i, r):
            w = [0] * r
            w[i] += 1
            w[j] += 1
            out.append(tuple(w))
    return out


def exterior_power_character(weights: Iterable[tuple[int, ...]], ell: int, r: int) -> WeightCharacter:
    """Character of the ell-th exterior power of a space with the given weight basis."""
    m = defaultdict(int)
    for combo in itertools.combinations(list(weights), ell):
        m[tuple(map(sum, zip(*combo))) if combo else (0,) * r, ()] += 1
    return WeightCharacter(r, 0, m)


def plethysm_ext_sym2(ell: int, r: int) -> DecompositionReport:
    """Decompose the ell-th exterior power of S^2(V), dim V = r, by brute force."""
    if ell < 1:
        raise ValueError("ell must be positive")
    if r < 2 * ell:
        raise ValueError(f"need r >= 2*ell to avoid truncation (r={r}, ell={ell})")
    chi = exterior_power_character(sym2_monomials(r), ell, r)
    report = decompose_gl(chi)
    expected = {(None, lam, 1) for lam in enumerate_P(ell)}
    if report.as_set() != expected:
        raise AssertionError(f"plethysm mismatch at ell={ell}: {report} vs {sorted(expected)}")
    return report


def sp_dimension(lam, g: int) -> int:
    """Weyl dimension formula for the irreducible Sp(2g)-module of highest weight lam."""
    lam = as_partition(lam)
    if g < 1:
        raise ValueError("g must be positive")
    if len(lam) > g:
        raise ValueError(f"{lam} has more than {g} parts")
    rho = [g - i for i in range(g)]
    lr = [p + q for p, q in zip(lam.padded(g), rho)]
    num = Fraction(1)
    for i in range(g):
        num *= Fraction(lr[i], rho[i])
        for j in range(i + 1, g):
            num *= Fraction(lr[i] - lr[j], rho[i] - rho[j])
            num *= Fraction(lr[i] + lr[j], rho[i] + rho[j])
    if num.denominator != 1:
        raise ArithmeticError("non-integral Weyl dimension")
    return int(num)
