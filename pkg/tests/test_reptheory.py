"""Plethysm decompositions and the master-equation vanishing arguments.

Dimension expectations are frozen from two independent oracles: the
hook content formula and stars-and-bars counting.
"""

import math

import pytest

from e510wb.reptheory import (
    FUNDAMENTAL, WEDGE2, IrrepLabel, WeightMultiplicity,
    contains_fundamental_dual, decompose, decomposition_report,
    hook_content_dim, plethysm_weights, symmetrized_contraction_vanishes,
    tensor_weights, weight_system,
)


def binom(n, k):
    return math.comb(n, k)


def test_hook_content_oracle_basics():
    assert hook_content_dim(FUNDAMENTAL) == 5
    assert hook_content_dim(WEDGE2) == 10
    assert hook_content_dim(IrrepLabel((1, 1, 1, 1))) == 5
    assert hook_content_dim(IrrepLabel((2, 1))) == 40
    assert hook_content_dim(IrrepLabel((1, 1, 1, 1, 1))) == 1


def test_weight_system_small():
    ws = weight_system(FUNDAMENTAL)
    assert ws == {tuple(1 if j == i else 0 for j in range(5)): 1
                  for i in range(5)}
    ws2 = weight_system(WEDGE2)
    assert sum(ws2.values()) == 10
    # adjoint-like (2,1,1,1,1) has a multiplicity-free weight system of
    # size 5 (it is std twisted by det)
    ws3 = weight_system(IrrepLabel((2, 1, 1, 1, 1)))
    assert sum(ws3.values()) == 5
    # a case with an interior multiplicity: (2,1,0,0,0), dim 40, weight
    # (1,1,1,0,0) has multiplicity 2
    ws4 = weight_system(IrrepLabel((2, 1)))
    assert sum(ws4.values()) == 40
    assert ws4[(1, 1, 1, 0, 0)] == 2


def test_weight_systems_weyl_symmetric():
    for label in [(2, 1), (3, 3), (2, 2, 1, 1), (3, 1, 1, 1), (2, 2, 2)]:
        ws = WeightMultiplicity(weight_system(IrrepLabel(label)))
        assert ws.is_weyl_symmetric()
        assert ws.total() == hook_content_dim(IrrepLabel(label))


def test_plethysm_fundamental_trivial():
    ws = plethysm_weights("sym", 1, FUNDAMENTAL)
    assert ws.total() == 5 and all(m == 1 for m in ws.values())
    ws2 = plethysm_weights("wedge", 2, FUNDAMENTAL)
    assert ws2.total() == 10
    assert set(ws2) == {tuple(sorted((1 if k in (i, j) else 0
                                      for k in range(5)), reverse=False))
                        for i in range(5) for j in range(i)} | set(ws2)


def test_sym3_wedge2_dimension_by_stars_and_bars():
    ws = plethysm_weights("sym", 3, WEDGE2)
    assert ws.total() == binom(10 + 3 - 1, 3) == 220


def test_sym3_wedge2_decomposition():
    ws = plethysm_weights("sym", 3, WEDGE2)
    dec = decompose(ws)
    assert dec == [(IrrepLabel((3, 3)), 1), (IrrepLabel((2, 2, 1, 1)), 1)]
    dims = [hook_content_dim(l) for l, _ in dec]
    assert dims == [175, 45] and sum(dims) == 220
    assert contains_fundamental_dual(dec) is False


def test_wedge3_wedge2_decomposition():
    ws = plethysm_weights("wedge", 3, WEDGE2)
    assert ws.total() == binom(10, 3) == 120
    dec = decompose(ws)
    assert dec == [(IrrepLabel((3, 1, 1, 1)), 1), (IrrepLabel((2, 2, 2)), 1)]
    dims = [hook_content_dim(l) for l, _ in dec]
    assert dims == [70, 50] and sum(dims) == 120
    assert contains_fundamental_dual(dec) is False


def test_contains_fundamental_dual_positive():
    # wedge^2 tensor wedge^4 (the vector-field rep class): brute tensor
    # weight count, contains S(2,1,1,1,1) = fundamental class mod det
    t = tensor_weights(weight_system(WEDGE2),
                       weight_system(IrrepLabel((1, 1, 1, 1))))
    dec = decompose(t)
    assert (IrrepLabel((2, 1, 1, 1, 1)), 1) in dec
    assert contains_fundamental_dual(dec) is True
    # trivial rep: false
    assert contains_fundamental_dual([(IrrepLabel(()), 1)]) is False


def test_decompose_recovers_direct_sum():
    ws = WeightMultiplicity()
    for label, m in [((2, 1), 2), ((1, 1, 1), 3)]:
        for w, mult in weight_system(IrrepLabel(label)).items():
            ws.add(w, m * mult)
    dec = decompose(ws)
    assert dec == [(IrrepLabel((2, 1)), 2), (IrrepLabel((1, 1, 1)), 3)]


def test_decompose_rejects_non_character():
    bad = WeightMultiplicity({(1, 0, 0, 0, 0): 1, (0, 1, 0, 0, 0): -1})
    with pytest.raises(ValueError):
        decompose(bad)


def test_symmetrized_contraction_vanishes():
    assert symmetrized_contraction_vanishes() is True


def test_symmetrized_contraction_negative_control():
    assert symmetrized_contraction_vanishes(corrupt=True) is False


def test_decomposition_report_shape():
    dec = decompose(plethysm_weights("sym", 3, WEDGE2))
    rep = decomposition_report(dec)
    assert rep["total_dimension"] == 220
    assert rep["summands"][0] == {"partition": [3, 3, 0, 0, 0],
                                  "multiplicity": 1, "dimension": 175}
