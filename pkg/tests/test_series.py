import math

import pytest

from quotcoh.series import (
    BivariateSeries,
    closed_form,
    compare,
    geometric_q,
    resolution_series,
)


def test_series_arithmetic_roundtrips():
    one_minus_q = BivariateSeries(5, 3, {(0, 0): 1, (1, 0): -1})
    assert one_minus_q * one_minus_q.inverse() == BivariateSeries.one(5, 3)
    assert one_minus_q.inverse() == geometric_q(5, 3)
    base = BivariateSeries(5, 5, {(0, 0): 1, (1, 1): -1})
    assert (base ** 4) * (base ** 4).inverse() == BivariateSeries.one(5, 5)
    assert base ** 0 == BivariateSeries.one(5, 5)
    with pytest.raises(ValueError):
        BivariateSeries(3, 3, {(0, 0): 2}).inverse()


def test_closed_form_coefficients():
    n_chi = 6
    wedge = closed_form("wedge", 2, 3, 5, 5)
    assert wedge.coefficient(0, 0) == 1
    for n in range(6):
        for k in range(6):
            expected = math.comb(n_chi, k) if k <= n else 0
            assert wedge.coefficient(n, k) == expected
    dual = closed_form("dual", 2, 3, 5, 5)
    for n in range(6):
        for k in range(6):
            assert dual.coefficient(n, k) == (1 if k == 0 else 0)
    sym = closed_form("sym", 2, 3, 5, 5)
    for n in range(6):
        for k in range(6):
            expected = math.comb(n_chi + k - 1, k) if k <= n else 0
            assert sym.coefficient(n, k) == expected


def test_resolution_series_values():
    series = resolution_series("wedge", 2, 3, 2)
    assert series.coefficient(0, 0) == 1
    assert series.coefficient(1, 1) == 8
    assert series.coefficient(2, 1) == 8  # binom(N chi(L), 1)
    assert series.coefficient(2, 2) == math.comb(8, 2)
    with pytest.raises(ValueError):
        resolution_series("wedge", 2, 1, 2)  # deg L below n_max


def test_compare_small_grids():
    for kind in ("wedge", "sym", "dual"):
        comparison = compare(kind, 2, 2, 2)
        assert comparison.equal, comparison.mismatches
        assert comparison.window == ((0, 0), (1, 0), (1, 1),
                                     (2, 0), (2, 1), (2, 2))


def test_compare_single_summand():
    comparison = compare("wedge", 1, 2, 2)
    assert comparison.equal


def test_compare_split_bundle():
    # a nontrivial splitting only shifts the section count
    comparison = compare("wedge", 2, 2, 1, splitting=(1, 0))
    assert comparison.equal
