"""Named reproduction checks for the homology of L_H and Lie_2.

Each check returns a CheckResult; the CLI ``verify-paper`` command and the
acceptance tests both run these.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import cecomplex as ce
from .exact import nullity
from .homology import (
    CROSS_CHECKS,
    arity_homology,
    chain_character,
    dominant_blocks,
    harmonic_character,
    homology_decomposition,
    sigg_homology,
    total_homology_dims,
    max_homological_degree,
)
from .partitions import (
    Partition,
    add,
    casimir_eigenvalue,
    conjugate,
    enumerate_P,
    partitions_of,
    sn_dimension,
)
from .sparse import SparseIntMatrix
from .weightchar import decompose_gl, kostka, plethysm_ext_sym2, sp_dimension


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        head = f"[{status}] {self.name}"
        if self.details and not self.passed:
            head += ": " + "; ".join(self.details[:5])
        return head


def _ones(n):
    return Partition([1] * n)


def _report_set(report):
    return {(e.sp, tuple(e.gl), e.mult) for e in report}


# --------------------------------------------------------------------------
# operator identities


@dataclass
class IdentityFailure:
    identity: str
    k: int
    ell: int
    witness: tuple  # (row, col, lhs, rhs)
    source: str = ""
    target: str = ""

    def __str__(self):
        row, col, lhs, rhs = self.witness
        return (f"{self.identity} fails on K_({self.k},{self.ell}) at row {row} ({self.target}), "
                f"col {col} ({self.source}): {lhs} != {rhs}")


@dataclass
class IdentityReport:
    g: int
    r: int
    max_total_degree: int
    checked: dict = field(default_factory=dict)  # identity name -> number of bidegrees/pairs checked
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def count(self, name, n=1):
        self.checked[name] = self.checked.get(name, 0) + n


def _bidegrees(g, r, max_total_degree):
    gens = ce.Generators(g, r)
    for k in range(0, gens.n_x + 1):
        for ell in range(0, gens.n_y + 1):
            if k + 2 * ell <= max_total_degree:
                yield k, ell


def _compare(report, name, k, ell, lhs: SparseIntMatrix, rhs: SparseIntMatrix, src, tgt, gens):
    report.count(name)
    if lhs != rhs:
        w = lhs.first_difference(rhs)
        report.failures.append(IdentityFailure(
            name, k, ell, w, gens.describe(src[w[1]]) if src else "", gens.describe(tgt[w[0]]) if tgt else ""))


def _anticommutator_expr(u_expr, v_expr):
    return ce.expr_sum(ce.expr_mul(u_expr, v_expr), ce.expr_mul(v_expr, u_expr))


def verify_operator_identities(g: int, r: int, max_total_degree: int) -> IdentityReport:
    """Check the operator calculus as exact matrix identities on every bidegree
    with k + 2l <= max_total_degree."""
    gens = ce.Generators(g, r)
    report = IdentityReport(g, r, max_total_degree)
    R, A = range(r), range(2 * g)
    bideg = list(_bidegrees(g, r, max_total_degree))

    # (a) graded commutation relations
    x_pairs = []
    for (i, a), (j, b) in itertools.product(itertools.product(R, A), repeat=2):
        expr = _anticommutator_expr(ce.iota_x(gens, i, a), ce.eps_x(gens, j, b))
        x_pairs.append((ce.CompiledExpr(expr), int(i == j and a == b)))
    y_pairs = []
    for i, j, k2, l2 in itertools.product(R, repeat=4):
        expr = _anticommutator_expr(ce.iota_y(gens, i, j), ce.eps_y(gens, k2, l2))
        y_pairs.append((ce.CompiledExpr(expr), int(i == k2 and j == l2) + int(i == l2 and j == k2)))
    mixed = []
    for (i, a), (j, l2) in itertools.product(itertools.product(R, A), itertools.product(R, R)):
        mixed.append((ce.CompiledExpr(_anticommutator_expr(ce.iota_x(gens, i, a), ce.eps_y(gens, j, l2))), 0))
        mixed.append((ce.CompiledExpr(_anticommutator_expr(ce.iota_y(gens, j, l2), ce.eps_x(gens, i, a))), 0))
    for k, ell in bideg:
        basis = tuple(ce.bidegree_monomials(g, r, k, ell))
        n = len(basis)
        ident = SparseIntMatrix.identity(n)
        for label, pairs in (("[iota_x, eps_x]", x_pairs), ("[iota^ij, eps_kl]", y_pairs), ("[iota, eps] mixed", mixed)):
            for cexpr, delta in pairs:
                m = ce.matrix_between(cexpr, basis, basis)
                _compare(report, label, k, ell, m, ident.scale(delta), basis, basis, gens)

    def full(name, k, ell, idx=()):
        return ce.full_operator(name, g, r, k, ell, idx)

    def lap(k, ell):
        n = ce.bidegree_dimension(g, r, k, ell)
        out = SparseIntMatrix(n, n)
        if k >= 2:
            out = out + full("coboundary", k - 2, ell + 1) @ full("boundary", k, ell)
        if ell >= 1:
            out = out + full("boundary", k + 2, ell - 1) @ full("coboundary", k, ell)
        return out

    for k, ell in bideg:
        basis = tuple(ce.bidegree_monomials(g, r, k, ell))
        n = len(basis)
        zero = SparseIntMatrix(n, n)
        # (b) d^2 = 0, (d*)^2 = 0
        if k >= 4:
            dd = full("boundary", k - 2, ell + 1) @ full("boundary", k, ell)
            tgt = tuple(ce.bidegree_monomials(g, r, k - 4, ell + 2))
            _compare(report, "d∘d = 0", k, ell, dd, SparseIntMatrix(*dd.shape), basis, tgt, gens)
        if ell >= 2:
            ss = full("coboundary", k + 2, ell - 1) @ full("coboundary", k, ell)
            tgt = tuple(ce.bidegree_monomials(g, r, k + 4, ell - 2))
            _compare(report, "d*∘d* = 0", k, ell, ss, SparseIntMatrix(*ss.shape), basis, tgt, gens)
        delta = lap(k, ell)
        # (c) Laplacian1
        _compare(report, "Laplacian1", k, ell, delta, full("laplacian1_rhs", k, ell), basis, basis, gens)
        # (d) Laplacian2
        cas_gl = full("casimir_gl", k, ell)
        _compare(report, "Laplacian2", k, ell, cas_gl, full("laplacian2_rhs", k, ell), basis, basis, gens)
        # (e) Laplacian3
        cas_sp = full("casimir_sp", k, ell)
        _compare(report, "Laplacian3", k, ell, cas_sp, full("laplacian3_rhs", k, ell), basis, basis, gens)
        # (f) main formula
        euler = full("euler_D", k, ell)
        _compare(report, "Euler D = (k+2l) id", k, ell, euler, SparseIntMatrix.identity(n).scale(k + 2 * ell),
                 basis, basis, gens)
        rhs = cas_sp + cas_gl - euler.scale(r + 2 * g + 1)
        _compare(report, "2Δ = Δ_Sp + Δ_GL - (r+2g+1)D", k, ell, delta.scale(2), rhs, basis, basis, gens)
        # (g) Laplacian commutes with gl(V)
        for i, j in itertools.product(R, R):
            e_ij = full("E", k, ell, (i, j))
            _compare(report, f"[Δ, E({i + 1},{j + 1})] = 0", k, ell, delta @ e_ij - e_ij @ delta, zero,
                     basis, basis, gens)
        del zero
    return report


def check_theorem_main(pairs=((1, 1), (1, 2), (1, 3), (2, 2)), max_degree: int = 6) -> CheckResult:
    details = []
    ok = True
    for g, r in pairs:
        rep = verify_operator_identities(g, r, max_degree)
        n = sum(rep.checked.values())
        details.append(f"(g={g}, r={r}): {n} identity instances, {len(rep.failures)} failures")
        for f in rep.failures[:3]:
            details.append(str(f))
        ok = ok and rep.passed
    return CheckResult("theorem-main", ok, details)


# --------------------------------------------------------------------------
# homology checks

INTRO_TABLE = {
    0: {(0, (), 1)},
    1: {(1, (1,), 1)},
    2: {(2, (1, 1), 1), (1, (3,), 1)},
    3: {(3, (1, 1, 1), 1), (2, (3, 1), 1), (0, (4,), 1)},
}


def check_intro_table(r: int = 4, parallelism: int = 1) -> CheckResult:
    details = []
    ok = True
    for k, expected in INTRO_TABLE.items():
        got = _report_set(homology_decomposition(1, r, k, parallelism).report)
        exp = {e for e in expected if len(e[1]) <= r}
        if got != exp:
            ok = False
            details.append(f"k={k}: got {sorted(got)}, expected {sorted(exp)}")
    return CheckResult("intro-table", ok, details)


def check_poincare(parallelism: int = 1) -> CheckResult:
    details = []
    dims = total_homology_dims(1, 1, parallelism)
    by_arity = [dims["by_arity"].get(d, 0) for d in range(5)]
    ok = by_arity == [1, 2, 0, 2, 1]
    if not ok:
        details.append(f"L_H(F) homology by V-degree {by_arity} != [1, 2, 0, 2, 1]")
    for r in (1, 2):
        d = total_homology_dims(1, r, parallelism)["by_degree"]
        top = max_homological_degree(1, r)
        seq = [d.get(i, 0) for i in range(top + 1)]
        if seq != seq[::-1]:
            ok = False
            details.append(f"r={r}: degree dims {seq} not palindromic")
    return CheckResult("poincare", ok, details)


def check_diagonal(n_max: int = 5, parallelism: int = 1) -> CheckResult:
    details = []
    ok = True
    for n in range(0, n_max + 1):
        got = _report_set(arity_homology(1, n, 0, parallelism=parallelism).report)
        exp = {(n, tuple(_ones(n)), 1)}
        if got != exp:
            ok = False
            details.append(f"n={n}: got {sorted(got)}")
    return CheckResult("diagonal", ok, details)


def check_sigg(k_max: int = 4, r_max: int = 5, only: tuple | None = None) -> CheckResult:
    details = []
    ok = True
    cases = [only] if only else [(r, k) for r in range(1, r_max + 1) for k in range(0, k_max + 1)]
    for r, k in cases:
        try:
            sigg_homology(r, k)
        except AssertionError as exc:
            ok = False
            details.append(str(exc))
    return CheckResult("sigg", ok, details)


def check_casimir(r_max: int = 3, max_degree: int = 6, g: int = 1) -> CheckResult:
    """Eigenvalues of the GL(V) Casimir on each chain block against c_lambda."""
    details = []
    ok = True
    blocks = 0
    for r in range(1, r_max + 1):
        for k, ell in _bidegrees(g, r, max_degree):
            chi = chain_character(g, r, k, ell)
            per_sp = {s: decompose_gl(chi.at_sp_weight(s)) for s in chi.sp_weights()}
            for blk in ce.chain_basis(g, r, k, ell):
                expected: dict[int, int] = {}
                for e in per_sp[blk.sp_weight]:
                    mult = e.mult * kostka(e.gl, blk.gl_weight)
                    if mult:
                        c = casimir_eigenvalue(e.gl, r)
                        expected[c] = expected.get(c, 0) + mult
                if sum(expected.values()) != blk.dim:
                    ok = False
                    details.append(f"block {blk.key}: predicted multiplicities do not fill the block")
                    continue
                cas = ce.operator_block("casimir_gl", g, r, blk.key)
                for c, mult in expected.items():
                    kern = nullity(cas - SparseIntMatrix.identity(blk.dim).scale(c))
                    if kern != mult:
                        ok = False
                        details.append(f"r={r} block {blk.key}: eigenvalue {c} has multiplicity {kern}, expected {mult}")
                blocks += 1
    details.insert(0, f"{blocks} blocks")
    return CheckResult("casimir", ok, details)


def expected_ell1(n: int) -> set:
    out = {(n - 1, tuple(Partition([3] + [1] * (n - 2))), 1)}
    if n == 3:
        out.add((0, (4,), 1))
    return out


def check_ell1(ns=(2, 3, 4), parallelism: int = 1) -> CheckResult:
    details = []
    ok = True
    for n in ns:
        got = _report_set(arity_homology(1, n, 1, parallelism=parallelism).report)
        exp = expected_ell1(n)
        if got != exp:
            ok = False
            details.append(f"H_{n}(L_H)({n + 1}): got {sorted(got)}, expected {sorted(exp)}")
    return CheckResult("ell1-proposition", ok, details)


def expected_ell2(n: int) -> set:
    out = {(n - 2, tuple(Partition([4, 2] + [1] * (n - 4))), 1)}
    if n == 5:
        out.add((1, (5, 2), 1))
    return out


def check_ell2(ns=(4, 5), parallelism: int = 1) -> CheckResult:
    details = []
    ok = True
    for n in ns:
        got = _report_set(arity_homology(1, n, 2, parallelism=parallelism).report)
        exp = expected_ell2(n)
        if got != exp:
            ok = False
            details.append(f"H_{n}(L_H)({n + 2}): got {sorted(got)}, expected {sorted(exp)}")
    return CheckResult("ell2-formula", ok, details)


def vanishing_window(max_sum: int = 8):
    """(n, l) with l > 0, l <= n < l + 2 and n + 2l <= max_sum."""
    return [(n, ell) for ell in range(1, max_sum + 1) for n in range(ell, ell + 2) if n + 2 * ell <= max_sum]


def check_limit_vanishing(max_sum: int = 8, parallelism: int = 1) -> CheckResult:
    details = []
    ok = True
    for n, ell in vanishing_window(max_sum):
        res = arity_homology(1, n, ell, parallelism=parallelism)
        if res.dimension:
            ok = False
            details.append(f"H_{n}(L_H)({n + ell}) = {res.report} is nonzero")
    details.insert(0, f"window {vanishing_window(max_sum)}")
    return CheckResult("limit-theorem", ok, details)


def expected_stable(n: int, ell: int) -> set:
    out = set()
    for lam in enumerate_P(ell):
        alpha1 = lam[0] - 2  # (a_1 + 1 | a_1) has first part a_1 + 2
        if n >= ell + alpha1 + 1:
            out.add((n - ell, tuple(add(_ones(n - ell), lam)), 1))
    return out


def check_kostant() -> CheckResult:
    """Every block compared so far must agree; runs the homology checks'
    blocks if nothing has been compared yet."""
    if not CROSS_CHECKS.blocks:
        for k in range(4):
            homology_decomposition(1, 4, k)
        total_homology_dims(1, 1)
        for n in range(6):
            arity_homology(1, n, 0)
        for n in (2, 3, 4):
            arity_homology(1, n, 1)
        for n, ell in vanishing_window():
            arity_homology(1, n, ell)
    bad = CROSS_CHECKS.mismatches
    details = [f"{len(CROSS_CHECKS.blocks)} blocks compared"]
    details += [f"block {b}: harmonic {v[0]} != ker/im {v[1]}" for b, v in list(bad.items())[:5]]
    return CheckResult("kostant", not bad, details)


def check_plethysm(ell_max: int = 4) -> CheckResult:
    details = []
    ok = True
    for ell in range(1, ell_max + 1):
        try:
            plethysm_ext_sym2(ell, 2 * ell)
        except AssertionError as exc:
            ok = False
            details.append(str(exc))
    return CheckResult("plethysm", ok, details)


def general_g_expected(n: int, g: int = 2) -> int:
    return sum(sp_dimension(lam, g) * sn_dimension(conjugate(lam)) for lam in partitions_of(n, max_length=g))


def general_g_computed(n: int, g: int = 2, parallelism: int = 1) -> int:
    """Multilinear part of H_n(L_H)(n): weight (1, ..., 1) of H_{n,0} at r = n."""
    r = max(n, 1)
    chi = harmonic_character(g, r, n, 0, parallelism)
    ones = (1,) * n if n else (0,)
    return sum(v for (w, _), v in chi.mults.items() if w == ones)


def check_general_g(n_max: int = 3, g: int = 2, parallelism: int = 1) -> CheckResult:
    details = []
    ok = True
    for n in range(0, n_max + 1):
        got, exp = general_g_computed(n, g, parallelism), general_g_expected(n, g)
        details.append(f"n={n}: {got} vs {exp}")
        if got != exp:
            ok = False
    return CheckResult("general-g", ok, details)


CHECKS = {
    "intro-table": check_intro_table,
    "poincare": check_poincare,
    "diagonal": check_diagonal,
    "sigg": check_sigg,
    "theorem-main": check_theorem_main,
    "casimir": check_casimir,
    "ell1-proposition": check_ell1,
    "ell2-formula": check_ell2,
    "limit-theorem": check_limit_vanishing,
    "kostant": check_kostant,
    "plethysm": check_plethysm,
    "general-g": check_general_g,
}
