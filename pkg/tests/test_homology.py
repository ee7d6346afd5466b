import json

import pytest

from nilhom import homology as hom
from nilhom.checks import expected_ell1, expected_stable
from nilhom.homology import (
    KostantMismatch,
    arity_homology,
    bigraded_homology,
    euler_characteristic_by_block,
    harmonic_character,
    homology_character_kerim,
    homology_decomposition,
    lie2_homology_character,
    sigg_homology,
    total_homology_dims,
)
from nilhom.partitions import Partition, casimir_eigenvalue, gl_hook_content_dimension
from nilhom.weightchar import DecompositionEntry, DecompositionReport, character_of_report


def _entries(report):
    return {(e.sp, tuple(e.gl), e.mult) for e in report}


@pytest.mark.parametrize("r", [1, 2, 3])
def test_degree_zero(r):
    assert _entries(homology_decomposition(1, r, 0).report) == {(0, (), 1)}


def test_intro_table_row_three():
    res = homology_decomposition(1, 4, 3)
    assert _entries(res.report) == {(3, (1, 1, 1), 1), (2, (3, 1), 1), (0, (4,), 1)}


def test_rank_one_truncation():
    # at dim V = 1 only one-row diagrams survive in degree 2
    res = homology_decomposition(1, 1, 2)
    assert _entries(res.report) == {(1, (3,), 1)}
    assert res.dimension == 2


def test_harmonic_character_examples():
    chi = harmonic_character(1, 2, 2, 0, dominant_only=False)
    expected = character_of_report(DecompositionReport((DecompositionEntry(2, Partition((1, 1)), 1),), "sp_gl"), 2)
    assert chi == expected
    # bidegree (1, 1) at dim V = 1 carries the H[3] summand
    assert harmonic_character(1, 1, 1, 1).dimension == 2
    # the H_0 (x) S(4) summand of H_3 sits in bidegree (2, 1)
    assert (0, (4,), 1) in _entries(bigraded_homology(1, 4, 2, 1).report)


@pytest.mark.parametrize("g,r,k,ell", [(1, 3, 3, 1), (1, 2, 2, 1), (2, 2, 2, 1), (2, 1, 2, 0)])
def test_dominant_expansion_matches_full(g, r, k, ell):
    full = harmonic_character(g, r, k, ell, dominant_only=False)
    assert harmonic_character(g, r, k, ell) == full
    assert homology_character_kerim(g, r, k, ell, dominant_only=False) == full
    assert full.is_gl_symmetric() and full.is_sp_symmetric()


def test_rank_one_totals():
    dims = total_homology_dims(1, 1)
    assert dims["by_arity"] == {0: 1, 1: 2, 2: 0, 3: 2, 4: 1}
    assert dims["by_degree"] == {0: 1, 1: 2, 2: 2, 3: 1}


def test_poincare_duality_r2():
    d = total_homology_dims(1, 2)["by_degree"]
    seq = [d.get(i, 0) for i in range(hom.max_homological_degree(1, 2) + 1)]
    assert seq == [1, 4, 11, 14, 14, 11, 4, 1]


@pytest.mark.parametrize("g,r", [(1, 1), (1, 2), (2, 1)])
def test_euler_characteristic(g, r):
    assert euler_characteristic_by_block(g, r)


@pytest.mark.parametrize("n,ell", [(2, 1), (3, 1), (4, 2)])
def test_schur_weyl_stability(n, ell):
    a = arity_homology(1, n, ell, r=n + ell)
    b = arity_homology(1, n, ell, r=n + ell + 1)
    assert _entries(a.report) == _entries(b.report)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_ell_one(n):
    assert _entries(arity_homology(1, n, 1).report) == expected_ell1(n)


@pytest.mark.parametrize("n,ell", [(4, 1), (5, 1)])
def test_stable_formula(n, ell):
    assert _entries(arity_homology(1, n, ell).report) == expected_stable(n, ell)


def test_ell_two_low_value():
    # computed value; the extra H_0 (x) S(5,1) is forced by the Laplacian
    # identity: on H_0 (x) S(5,1) in bidegree (2,2) the GL Casimir equals
    # (r + 3) times the V-degree 6, so the Laplacian vanishes there
    res = arity_homology(1, 4, 2)
    assert _entries(res.report) == {(2, (4, 2), 1), (0, (5, 1), 1)}
    r = res.r
    assert casimir_eigenvalue((5, 1), r) == (r + 3) * 6
    assert casimir_eigenvalue((4, 2), r) != (r + 3) * 6


@pytest.mark.parametrize("n,ell", [(1, 1), (2, 2), (3, 2), (3, 3)])
def test_vanishing_cases(n, ell):
    assert arity_homology(1, n, ell).dimension == 0


def test_low_window_nonzero_case():
    # H_2(L_H)(3) is the l = 1 value, not zero
    assert _entries(arity_homology(1, 2, 1).report) == {(1, (3,), 1)}


def test_sigg_examples():
    assert {tuple(e.gl) for e in sigg_homology(2, 1)} == {(1,)}
    assert {tuple(e.gl) for e in sigg_homology(3, 2)} == {(2, 1)}
    assert {tuple(e.gl) for e in sigg_homology(4, 3)} == {(3, 1, 1), (2, 2)}
    chi = lie2_homology_character(3, 3)
    assert chi.dimension == gl_hook_content_dimension((3, 1, 1), 3) + gl_hook_content_dimension((2, 2), 3)


def test_general_g_report_kind():
    res = homology_decomposition(2, 2, 2)
    assert res.report.kind == "sp_weight"
    assert res.report.total_dimension(2, 2) == res.dimension


def test_json_round_trip_and_determinism():
    a = homology_decomposition(1, 4, 3)
    b = homology_decomposition(1, 4, 3, parallelism=2)
    assert a.dumps() == b.dumps()
    text = a.dumps()
    assert json.dumps(json.loads(text), sort_keys=True) == text


def test_kostant_mismatch_is_raised(monkeypatch):
    monkeypatch.setattr(hom, "kerim_block_dim", lambda g, r, key: hom.harmonic_block_dim(g, r, key) + 1)
    with pytest.raises(KostantMismatch):
        hom.block_dims(1, 2, hom.dominant_blocks(1, 2, 2, 0))
    hom.CROSS_CHECKS.blocks.clear()


def test_invalid_arguments():
    with pytest.raises(ValueError):
        homology_decomposition(1, 0, 1)
    with pytest.raises(ValueError):
        arity_homology(1, -1, 0)
