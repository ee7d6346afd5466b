import itertools
from math import comb

import pytest

from nilhom import cecomplex as ce
from nilhom.exact import rank
from nilhom.sparse import SparseIntMatrix


def _all_blocks(g, r, max_degree):
    for k in range(0, max_degree + 1):
        for ell in range(0, (max_degree - k) // 2 + 1):
            yield from ce.chain_basis(g, r, k, ell)


def _norm_weights(g, r, block):
    """Squared norms of monomials: E_i E_i has norm 2, everything else 1."""
    gens = ce.Generators(g, r)
    out = []
    for mono in block.basis:
        w = 1
        for idx in mono:
            lab = gens.labels[idx]
            if lab[0] == "y" and lab[1] == lab[2]:
                w *= 2
        out.append(w)
    return out


def _diag(ws):
    return SparseIntMatrix(len(ws), len(ws), {(i, i): w for i, w in enumerate(ws)})


def test_symplectic_form():
    for g in range(1, 4):
        basis = ce.SymplecticBasis.standard(g)
        n = 2 * g
        for a in range(n):
            for b in range(n):
                assert basis.eta[a][b] == -basis.eta[b][a]
                assert sum(basis.eta[a][c] * basis.eta_inv[c][b] for c in range(n)) == (a == b)


def test_chain_basis_examples():
    blocks = ce.chain_basis(1, 1, 2, 0)
    assert len(blocks) == 1 and blocks[0].dim == 1
    total = sum(ce.bidegree_dimension(1, 1, k, ell) for k in range(3) for ell in range(2))
    assert total == 8
    assert ce.bidegree_dimension(1, 2, 1, 1) == 12


@pytest.mark.parametrize("g,r", [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)])
def test_bidegree_dimensions(g, r):
    gens = ce.Generators(g, r)
    for k in range(0, 5):
        for ell in range(0, 4):
            assert ce.bidegree_dimension(g, r, k, ell) == comb(gens.n_x, k) * comb(gens.n_y, ell)
            blocks = ce.chain_basis(g, r, k, ell)
            assert sum(b.dim for b in blocks) == ce.bidegree_dimension(g, r, k, ell)
            for b in blocks:
                for mono in b.basis:
                    assert ce.monomial_weight(gens, mono) == (b.gl_weight, b.sp_weight)


def test_rank_one_boundary():
    gens = ce.Generators(1, 1)
    blk = ce.chain_basis(1, 1, 2, 0)[0]
    assert blk.basis == ((gens.x(0, 0), gens.x(0, 1)),)
    key = blk.key
    assert ce.boundary_block(1, 1, key).to_dense() == [[1]]
    up = (0, 1, key[2], key[3])
    # the coboundary sends E_11 to -2 (e_1 (x) E_1) ^ (e_2 (x) E_1)
    assert ce.coboundary_block(1, 1, up).to_dense() == [[-2]]
    assert ce.laplacian_block(1, 1, key).to_dense() == [[-2]]


def test_low_degree_boundary_vanishes():
    for k in (0, 1):
        for blk in ce.chain_basis(1, 2, k, 1):
            assert ce.boundary_block(1, 2, blk.key).is_zero()
    for blk in ce.chain_basis(1, 2, 2, 0):
        assert ce.coboundary_block(1, 2, blk.key).is_zero()


def test_boundary_rank_example():
    # the target of this block is spanned by E_1 E_2 alone, so the rank is 1
    key = (2, 0, (1, 1), (0,))
    assert ce.block_basis(1, 2, 0, 1, (1, 1), (0,)).dim == 1
    assert rank(ce.boundary_block(1, 2, key)) == rank(ce.lh_ce_boundary_block(1, 2, key)) == 1


@pytest.mark.parametrize("g,r", [(1, 1), (1, 2), (1, 3), (2, 2)])
def test_boundary_matches_generic_ce(g, r):
    for blk in _all_blocks(g, r, 6):
        if blk.k >= 2:
            assert ce.boundary_block(g, r, blk.key) == ce.lh_ce_boundary_block(g, r, blk.key)


@pytest.mark.parametrize("n", range(2, 6))
def test_explicit_multilinear_differential(n):
    # boundary on the multilinear part of K_{n,0} against the pairing formula
    # with x_ij written last; the two agree up to the global sign (-1)^n
    g, r = 1, n
    gens = ce.Generators(g, r)
    eta = ce.SymplecticBasis.standard(g).eta
    for s in ce.chain_basis(g, r, n, 0):
        if s.gl_weight != (1,) * n:
            continue
        src = s
        tgt = ce.block_basis(g, r, n - 2, 1, s.gl_weight, s.sp_weight)
        tindex = tgt.index()
        entries = {}
        for col, mono in enumerate(src.basis):
            for p, q in itertools.combinations(range(n), 2):
                a, b = gens.labels[mono[p]], gens.labels[mono[q]]
                c = eta[a[2]][b[2]]
                if not c:
                    continue
                rest = mono[:p] + mono[p + 1:q] + mono[q + 1:]
                out = rest + (gens.y(a[1], b[1]),)
                sign = 1 if (q - p + 1) % 2 == 0 else -1
                row = tindex[out]
                entries[row, col] = entries.get((row, col), 0) + sign * c
        explicit = SparseIntMatrix(tgt.dim, src.dim, entries)
        assert ce.boundary_block(g, r, s.key) == explicit.scale((-1) ** n)


@pytest.mark.parametrize("g,r", [(1, 1), (1, 2), (2, 1)])
def test_coboundary_is_negative_adjoint(g, r):
    for blk in _all_blocks(g, r, 6):
        if blk.k < 2:
            continue
        k, ell, w, s = blk.key
        low = ce.block_basis(g, r, k - 2, ell + 1, w, s)
        b = ce.boundary_block(g, r, blk.key)
        c = ce.coboundary_block(g, r, low.key)
        lhs = _diag(_norm_weights(g, r, blk)) @ c
        rhs = b.T @ _diag(_norm_weights(g, r, low))
        assert lhs == -rhs


@pytest.mark.parametrize("g,r", [(1, 2), (2, 2)])
def test_boundary_squares_to_zero(g, r):
    for blk in _all_blocks(g, r, 6):
        if blk.k < 4:
            continue
        k, ell, w, s = blk.key
        mid = (k - 2, ell + 1, w, s)
        assert (ce.boundary_block(g, r, mid) @ ce.boundary_block(g, r, blk.key)).is_zero()


def test_euler_and_casimir_gl():
    for blk in _all_blocks(1, 2, 5):
        d = ce.operator_block("euler_D", 1, 2, blk.key)
        assert d == SparseIntMatrix.identity(blk.dim).scale(blk.k + 2 * blk.ell)
    for blk in ce.chain_basis(1, 2, 1, 0):
        assert ce.operator_block("casimir_gl", 1, 2, blk.key) == SparseIntMatrix.identity(blk.dim).scale(2)


def test_operator_validation():
    key = ce.chain_basis(1, 2, 1, 0)[0].key
    with pytest.raises(ValueError):
        ce.operator_block("nonsense", 1, 2, key)
    with pytest.raises(IndexError):
        ce.operator_block("E", 1, 2, key, (0, 2))
    with pytest.raises(IndexError):
        ce.operator_block("laplacian", 1, 2, key, (0, 0))
    with pytest.raises(ValueError):
        ce.operator("laplacian", 1, 2, -1, 0)


def test_E_shifts_gl_weight():
    r = 3
    for blk in ce.chain_basis(1, r, 2, 1):
        tkey, m = ce.operator("E", 1, r, 2, 1, (0, 1))[blk.key]
        expected = list(blk.gl_weight)
        expected[0] += 1
        expected[1] -= 1
        assert tkey[2] == tuple(expected)
        assert m.cols == blk.dim


def test_full_operator_block_diagonal():
    g, r, k, ell = 1, 2, 2, 1
    full = ce.full_operator("casimir_sp", g, r, k, ell)
    monos = ce.bidegree_monomials(g, r, k, ell)
    gens = ce.Generators(g, r)
    for (i, j), _ in full.entries():
        assert ce.monomial_weight(gens, monos[i]) == ce.monomial_weight(gens, monos[j])


def test_lie2_examples():
    gens = ce.Lie2Generators(2)
    m = ce.lie2_boundary(2, 2)
    src = list(itertools.combinations(range(gens.count), 2))
    tgt = list(itertools.combinations(range(gens.count), 1))
    col = src.index((0, 1))
    assert {tgt[i]: v for (i, j), v in m.entries() if j == col} == {(gens.pair(0, 1),): 1}
    for r in (2, 3):
        for k in range(2, 5):
            assert (ce.lie2_boundary(r, k - 1) @ ce.lie2_boundary(r, k)).is_zero()


def test_disk_cache(tmp_path, monkeypatch):
    monkeypatch.setenv(ce.CACHE_ENV, str(tmp_path))
    ce.operator_block.cache_clear()
    key = ce.chain_basis(1, 2, 2, 1)[2].key
    first = ce.operator_block("laplacian", 1, 2, key)
    files = list(tmp_path.iterdir())
    assert files
    ce.operator_block.cache_clear()
    assert ce.operator_block("laplacian", 1, 2, key) == first
    ce.operator_block.cache_clear()


def test_triplet_dump_round_trip():
    for blk in ce.chain_basis(1, 2, 2, 1):
        m = ce.operator_block("laplacian", 1, 2, blk.key)
        assert SparseIntMatrix.from_triplets(m.to_triplets()) == m
