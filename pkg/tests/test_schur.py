import math

import pytest
from hypothesis import given, settings, strategies as st

from quotcoh.partitions import (
    add,
    contains,
    dominates,
    enumerate_in_box,
    pad,
    size,
    transpose,
    union,
    weyl_dim,
)
from quotcoh import schur
from quotcoh.schur import (
    cauchy_wedge,
    direct_sum_expand,
    double_bundle_expand,
    lr_coefficient,
    lr_expand_tensor,
    pieri_sym,
    pieri_wedge,
)
from oracles import schur_product


def small_partitions(limit):
    return [lam for s in range(limit + 1)
            for lam in enumerate_in_box(limit, limit, s)]


def test_lr_examples():
    assert lr_coefficient((1,), (1,), (2,)) == 1
    assert lr_coefficient((1,), (1, 1), (2, 1)) == 1
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_coefficient((1,), (1,), (3,)) == 0
    assert lr_coefficient((2,), (1,), (1, 1, 1)) == 0


def test_lr_oracle_agreement():
    # every pair of total size <= 6, both the support and each coefficient
    parts = small_partitions(6)
    for a in parts:
        for b in parts:
            if size(a) + size(b) > 6:
                continue
            assert lr_expand_tensor(a, b) == schur_product(a, b, 6), (a, b)


def test_lr_symmetry_and_transpose_symmetry():
    parts = small_partitions(6)
    for a in parts:
        for b in parts:
            if size(a) + size(b) > 6:
                continue
            ta, tb = transpose(a), transpose(b)
            for g, c in lr_expand_tensor(a, b).items():
                assert lr_coefficient(b, a, g) == c
                assert lr_coefficient(ta, tb, transpose(g)) == c


def test_lr_support_facts():
    # nonzero coefficients force size additivity, containment, and the two
    # dominance comparisons
    parts = small_partitions(6)
    for a in parts:
        for b in parts:
            if size(a) + size(b) > 6:
                continue
            for g, c in lr_expand_tensor(a, b).items():
                assert c > 0
                assert size(g) == size(a) + size(b)
                assert contains(g, a) and contains(g, b)
                assert dominates(add(a, b), g)
                assert dominates(g, union(a, b))


def test_lr_expand_identity_and_dimension():
    assert lr_expand_tensor((), (3, 1)) == {(3, 1): 1}
    got = lr_expand_tensor((1,), (1,))
    assert got == {(2,): 1, (1, 1): 1}
    expansion = lr_expand_tensor((2, 1), (2, 1))
    assert len(expansion) == 7
    assert sum(expansion.values()) == 8
    for d in (4, 5, 7):
        total = sum(c * weyl_dim(pad(g, d), d) for g, c in expansion.items()
                    if len(g) <= d)
        assert total == weyl_dim(pad((2, 1), d), d) ** 2


def test_direct_sum_expand_examples():
    assert set(direct_sum_expand((1,))) == {((1,), (), 1), ((), (1,), 1)}
    assert set(direct_sum_expand((1, 1))) == {
        ((1, 1), (), 1), ((1,), (1,), 1), ((), (1, 1), 1)}
    triples = direct_sum_expand((2, 1))
    pairs = {(a, b): c for a, b, c in triples}
    assert pairs[((2,), (1,))] == 1
    assert pairs[((1, 1), (1,))] == 1
    assert ((1,), (1,)) not in pairs  # sizes cannot match
    # total dimension over a rank-(2+3) split
    total = sum(c * weyl_dim(pad(a, 2), 2) * weyl_dim(pad(b, 3), 3)
                for a, b, c in triples if len(a) <= 2 and len(b) <= 3)
    assert total == weyl_dim(pad((2, 1), 5), 5)


def test_double_bundle_expand_examples():
    assert double_bundle_expand((1,), 1) == {(1,): 2}
    assert double_bundle_expand((1,), 3) == {(1,): 2}
    assert double_bundle_expand((1, 1), 1) == {(2,): 1}
    # Sym^2 of a doubled bundle: three symmetric pieces and one exterior one
    assert double_bundle_expand((2,), 2) == {(2,): 3, (1, 1): 1}
    with pytest.raises(ValueError):
        double_bundle_expand((1, 1, 1), 1)


def test_double_bundle_dimension_identity():
    for n in (1, 2):
        for lam in small_partitions(4):
            if len(lam) > 2 * n:
                continue
            got = double_bundle_expand(lam, n)
            total = sum(c * weyl_dim(pad(g, n), n) for g, c in got.items())
            assert total == weyl_dim(pad(lam, 2 * n), 2 * n), lam


def test_cauchy_wedge_examples():
    assert cauchy_wedge(1, 3, 2) == [((1,), (1,))]
    assert cauchy_wedge(2, 3, 2) == [((1, 1), (2,)), ((2,), (1, 1))]
    assert cauchy_wedge(0, 3, 2) == [((), ())]


def test_cauchy_wedge_dimension_identity():
    for rank_left in range(1, 5):
        for rank_right in range(1, 5):
            for ell in range(0, 9):
                total = sum(
                    weyl_dim(pad(lt, rank_left), rank_left)
                    * weyl_dim(pad(lam, rank_right), rank_right)
                    for lt, lam in cauchy_wedge(ell, rank_left, rank_right))
                assert total == math.comb(rank_left * rank_right, ell)


def test_pieri_wedge_examples():
    assert pieri_wedge((0, 0), 2) == {(1, 1): 1}
    assert pieri_wedge((1, 0), 1) == {(2, 0): 1, (1, 1): 1}
    assert pieri_wedge((1, 0), 1, dualized=True) == {(0, 0): 1, (1, -1): 1}
    with pytest.raises(ValueError):
        pieri_wedge((1, 0), 3)


def test_pieri_sym_examples():
    assert pieri_sym((0,), 3) == {(3,): 1}
    assert pieri_sym((1, 0), 2) == {(3, 0): 1, (2, 1): 1}
    assert pieri_sym((0, 0), 1, dualized=True) == {(0, -1): 1}
    assert pieri_sym((), 0) == {(): 1}
    assert pieri_sym((), 2) == {}


weights_st = st.lists(st.integers(-4, 4), min_size=1, max_size=5).map(
    lambda xs: tuple(sorted(xs, reverse=True)))


@settings(max_examples=60)
@given(weights_st, st.integers(0, 5))
def test_pieri_wedge_dimension(w, k):
    r = len(w)
    if k > r:
        return
    for dualized in (False, True):
        out = pieri_wedge(w, k, dualized)
        total = sum(weyl_dim(v, r) for v in out)
        assert total == weyl_dim(w, r) * math.comb(r, k)


@settings(max_examples=60)
@given(weights_st, st.integers(0, 4))
def test_pieri_sym_dimension(w, k):
    r = len(w)
    for dualized in (False, True):
        out = pieri_sym(w, k, dualized)
        total = sum(weyl_dim(v, r) for v in out)
        assert total == weyl_dim(w, r) * math.comb(r + k - 1, k)


def test_pieri_shift_invariance():
    # tensoring by the determinant commutes with both rules
    w = (2, 0, -1)
    for k in (1, 2):
        base = pieri_wedge(w, k)
        shifted = pieri_wedge(tuple(e + 3 for e in w), k)
        assert {tuple(e + 3 for e in v) for v in base} == set(shifted)
        base = pieri_sym(w, k, dualized=True)
        shifted = pieri_sym(tuple(e + 3 for e in w), k, dualized=True)
        assert {tuple(e + 3 for e in v) for v in base} == set(shifted)


def test_lr_cache_roundtrip(tmp_path):
    lr_coefficient((2, 1), (2, 1), (3, 2, 1))
    path = tmp_path / "lr-cache.json"
    saved = schur.save_lr_cache(path)
    assert saved >= 1
    assert schur.load_lr_cache(path) == saved
    # wrong version or junk is ignored
    path.write_text("not json")
    assert schur.load_lr_cache(path) == 0
