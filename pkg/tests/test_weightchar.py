from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings, strategies as st

from nilhom.partitions import Partition, gl_hook_content_dimension, partitions_of
from nilhom.weightchar import (
    DecompositionEntry,
    DecompositionReport,
    VirtualCharacterError,
    WeightCharacter,
    character_of_report,
    decompose_gl,
    decompose_sp_gl,
    exterior_power_character,
    kostka,
    plethysm_ext_sym2,
    schur_character,
    sl2_character,
    sp_dimension,
    sym2_monomials,
    tensor,
)


def test_schur_character_examples():
    assert schur_character((1,), 2).gl_part().mults == {((1, 0), ()): 1, ((0, 1), ()): 1}
    chi = schur_character((2,), 2)
    assert {w for (w, _) in chi.mults} == {(2, 0), (1, 1), (0, 2)}
    chi = schur_character((2, 1), 2)
    assert {w: v for (w, _), v in chi.mults.items()} == {(2, 1): 1, (1, 2): 1}
    assert chi.dimension == 2


@pytest.mark.parametrize("n", range(1, 7))
def test_kostka_unitriangular(n):
    parts = list(partitions_of(n))
    for lam in parts:
        assert kostka(lam, lam) == 1
        for mu in parts:
            if mu != lam and kostka(lam, mu):
                # nonzero only when lambda dominates mu
                sums_l = [sum(lam[:i]) for i in range(1, n + 1)]
                sums_m = [sum(mu[:i]) for i in range(1, n + 1)]
                assert all(a >= b for a, b in zip(sums_l, sums_m))


@pytest.mark.parametrize("n", range(1, 6))
def test_kostka_column_sums(n):
    # sum_lambda f^lambda K_{lambda,(1^n)} = n!: K_{lambda,1^n} is the number of SYT
    from nilhom.partitions import sn_dimension
    for lam in partitions_of(n):
        assert kostka(lam, [1] * n) == sn_dimension(lam)


@pytest.mark.parametrize("r", range(1, 5))
def test_schur_dimension_matches_hook_content(r):
    for n in range(0, 5):
        for lam in partitions_of(n):
            assert schur_character(lam, r).dimension == gl_hook_content_dimension(lam, r)


def test_decompose_examples():
    rep = decompose_gl(schur_character((3, 1), 4))
    assert rep.as_set() == {(0, Partition((3, 1)), 1)} or {(e.gl, e.mult) for e in rep} == {((3, 1), 1)}
    v = schur_character((1,), 2)
    assert {(tuple(e.gl), e.mult) for e in decompose_gl(tensor(v, v))} == {((2,), 1), ((1, 1), 1)}
    ext2 = exterior_power_character(sym2_monomials(3), 2, 3)
    assert {(tuple(e.gl), e.mult) for e in decompose_gl(ext2)} == {((3, 1), 1)}


@st.composite
def gl_reports(draw):
    r = draw(st.integers(min_value=1, max_value=3))
    n = draw(st.integers(min_value=0, max_value=4))
    lams = [lam for lam in partitions_of(n) if lam.length <= r]
    chosen = draw(st.lists(st.sampled_from(lams), min_size=1, max_size=3))
    mults = {}
    for lam in chosen:
        mults[lam] = mults.get(lam, 0) + 1
    return r, mults


@settings(max_examples=40, deadline=None)
@given(gl_reports())
def test_decompose_round_trip(case):
    r, mults = case
    chi = WeightCharacter(r, 0, {})
    for lam, m in mults.items():
        chi = chi + schur_character(lam, r).scale(m)
    got = {tuple(e.gl): e.mult for e in decompose_gl(chi)}
    assert got == {tuple(lam): m for lam, m in mults.items()}


def test_virtual_character_rejected():
    chi = schur_character((1, 1), 2) - schur_character((2,), 2)
    with pytest.raises(VirtualCharacterError):
        decompose_gl(chi)


def test_joint_decomposition_g1():
    # H (x) V at r=1
    chi = tensor(sl2_character(1), schur_character((1,), 1))
    assert {(e.sp, tuple(e.gl), e.mult) for e in decompose_sp_gl(chi)} == {(1, (1,), 1)}
    # H_2 (x) S(1,1) + H_1 (x) S(3), r=3
    report = DecompositionReport((DecompositionEntry(2, Partition((1, 1)), 1), DecompositionEntry(1, Partition((3,)), 1)), "sp_gl")
    chi = character_of_report(report, 3)
    assert chi.dimension == 3 * 3 + 2 * 10
    assert decompose_sp_gl(chi).as_set() == report.as_set()


def test_report_json_round_trip():
    report = DecompositionReport((DecompositionEntry(1, Partition((3,)), 1), DecompositionEntry(2, Partition((1, 1)), 1)), "sp_gl")
    again = DecompositionReport.from_json(report.to_json())
    assert again.as_set() == report.as_set()
    assert again.dumps() == report.dumps()
    assert report.as_text() == "H_2 ⊗ S(1,1) + H_1 ⊗ S(3)"


def test_plethysm_examples():
    assert {(tuple(e.gl), e.mult) for e in plethysm_ext_sym2(1, 2)} == {((2,), 1)}
    assert {(tuple(e.gl), e.mult) for e in plethysm_ext_sym2(2, 4)} == {((3, 1), 1)}
    assert {(tuple(e.gl), e.mult) for e in plethysm_ext_sym2(3, 6)} == {((4, 1, 1), 1), ((3, 3), 1)}
    with pytest.raises(ValueError):
        plethysm_ext_sym2(3, 5)


def test_sym2_exterior_dimension():
    r = 3
    mons = sym2_monomials(r)
    assert len(mons) == 6
    assert exterior_power_character(mons, 2, r).dimension == 15


def test_sp_dimension_examples():
    for k in range(6):
        assert sp_dimension((k,), 1) == k + 1
    for g in range(1, 4):
        assert sp_dimension((), g) == 1
    assert sp_dimension((1, 1), 2) == 5
    # fundamental of Sp(2g) and its symmetric square
    for g in range(1, 4):
        assert sp_dimension((1,), g) == 2 * g
        assert sp_dimension((2,), g) == g * (2 * g + 1)


def test_sp_dimension_exterior_square():
    # Lambda^2 H = trivial + S<1,1>
    for g in range(2, 5):
        assert sp_dimension((1, 1), g) + 1 == (2 * g) * (2 * g - 1) // 2
