from collections import Counter
from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pvhskit.repchar import (
    Decomposition,
    IrrepLabel,
    NotACharacterError,
    WeightMultiset,
    decompose,
    exterior_power,
    symmetric_power,
    tensor_product,
    weight_system,
    weyl_dimension,
)
from pvhskit.rootsys import Weight, build_root_system, product_system

A1 = build_root_system("A", 1)
A3 = build_root_system("A", 3)
D5 = build_root_system("D", 5)
E6 = build_root_system("E6", 6)
E7 = build_root_system("E7", 7)

# weights e_1 .. e_4 of the standard representation of sl(4), fundamental coordinates
A3_STANDARD = [(1, 0, 0), (-1, 1, 0), (0, -1, 1), (0, 0, -1)]


@pytest.mark.parametrize(
    "rs,label,dim",
    [
        (A1, (5,), 6),
        (E6, (1, 0, 0, 0, 0, 0), 27),
        (E6, (0, 1, 0, 0, 0, 0), 78),
        (E6, (2, 0, 0, 0, 0, 0), 351),
        (E7, (0, 0, 0, 0, 0, 0, 1), 56),
        (E7, (1, 0, 0, 0, 0, 0, 0), 133),
        (D5, (0, 0, 0, 1, 0), 16),
        (build_root_system("B", 3), (0, 0, 1), 8),
        (build_root_system("C", 3), (0, 0, 1), 14),
    ],
)
def test_weyl_dimension(rs, label, dim):
    assert weyl_dimension(rs, label) == dim
    assert weight_system(rs, label).total() == dim


@settings(max_examples=40, deadline=None)
@given(
    st.sampled_from([("A", 2), ("B", 2), ("C", 3), ("D", 4), ("B", 3)]),
    st.data(),
)
def test_freudenthal_mass_matches_weyl_dimension(system, data):
    rs = build_root_system(*system)
    label = tuple(data.draw(st.lists(st.integers(0, 2), min_size=rs.rank, max_size=rs.rank)))
    ws = weight_system(rs, label)
    assert ws.total() == weyl_dimension(rs, label)
    assert ws.is_weyl_invariant()
    assert decompose(ws) == Decomposition.of(IrrepLabel.of(label))


def test_adjoint_zero_weight_multiplicity():
    # the zero weight of the adjoint representation has multiplicity = rank
    assert weight_system(E6, (0, 1, 0, 0, 0, 0))[Weight.of((0,) * 6)] == 6
    assert weight_system(A3, (1, 0, 1))[Weight.of((0, 0, 0))] == 3


@pytest.mark.parametrize("a,b", [(0, 3), (1, 1), (2, 3), (4, 4), (5, 2)])
def test_clebsch_gordan(a, b):
    expected = Decomposition({IrrepLabel.of((a + b - 2 * i,)): 1 for i in range(min(a, b) + 1)})
    assert tensor_product(A1, (a,), (b,)) == expected


def test_symmetric_square_of_a1_standard():
    s2 = symmetric_power(weight_system(A1, (1,)), 2)
    assert s2.entries == {Weight.of((2,)): 1, Weight.of((0,)): 1, Weight.of((-2,)): 1}


def test_exterior_square_of_a3_by_enumeration():
    pairs = Counter(tuple(x + y for x, y in zip(u, v)) for u, v in combinations(A3_STANDARD, 2))
    expected = WeightMultiset.from_dict(A3, {Weight.of(c): m for c, m in pairs.items()})
    computed = exterior_power(weight_system(A3, (1, 0, 0)), 2)
    assert computed == expected
    assert computed == weight_system(A3, (0, 1, 0))
    assert computed.total() == 6


def test_top_exterior_power_is_determinant():
    ws = weight_system(A3, (1, 0, 0))
    top = exterior_power(ws, 4)
    assert top.entries == {Weight.of((0, 0, 0)): 1}
    assert exterior_power(ws, 5).total() == 0


def test_symmetric_cube_by_enumeration():
    # multisets of three standard weights of sl(4)
    triples = Counter(
        tuple(sum(c) for c in zip(*(A3_STANDARD[i] for i in idx)))
        for idx in product(range(4), repeat=3)
        if list(idx) == sorted(idx)
    )
    expected = WeightMultiset.from_dict(A3, {Weight.of(c): m for c, m in triples.items()})
    assert symmetric_power(weight_system(A3, (1, 0, 0)), 3) == expected


@pytest.mark.parametrize("rs,label", [(A3, (1, 0, 1)), (D5, (0, 0, 0, 1, 0)), (build_root_system("C", 2), (1, 1))])
def test_square_splits_into_sym_and_ext(rs, label):
    ws = weight_system(rs, label)
    assert symmetric_power(ws, 2) + exterior_power(ws, 2) == ws * ws


def test_charge_bookkeeping():
    ws = weight_system(E6, (1, 0, 0, 0, 0, 0)).twist(2)
    assert set(symmetric_power(ws, 3).charges.tolist()) == {6}
    assert set((ws * ws).charges.tolist()) == {4}


def test_half_spin_cube():
    ws = weight_system(D5, (0, 0, 0, 1, 0)).twist(2)
    expected = Decomposition.of(IrrepLabel.of((0, 0, 0, 3, 0), 6), IrrepLabel.of((1, 0, 0, 1, 0), 6))
    assert decompose(symmetric_power(ws, 3)) == expected


def test_e6_tensor_product():
    dec = tensor_product(E6, (0, 0, 0, 0, 0, 1), (1, 0, 0, 0, 0, 0))
    assert dec == Decomposition.of(
        IrrepLabel.of((0,) * 6), IrrepLabel.of((0, 1, 0, 0, 0, 0)), IrrepLabel.of((1, 0, 0, 0, 0, 1))
    )
    assert dec.dimension(E6) == 27 * 27


def test_product_system_characters():
    prod = product_system(build_root_system("A", 1), build_root_system("A", 2))
    ws = weight_system(prod, (1, 1, 0))
    assert ws.total() == 6
    assert decompose(ws * ws) == Decomposition(
        {
            IrrepLabel.of((2, 2, 0)): 1,
            IrrepLabel.of((2, 0, 1)): 1,
            IrrepLabel.of((0, 2, 0)): 1,
            IrrepLabel.of((0, 0, 1)): 1,
        }
    )


def test_decompose_rejects_virtual_characters():
    lone = WeightMultiset.from_dict(A1, {Weight.of((2,)): 1})
    with pytest.raises(NotACharacterError):
        decompose(lone)


def test_decomposition_arithmetic():
    a, b = IrrepLabel.of((1,), 2), IrrepLabel.of((3,), 2)
    d = Decomposition.of(a, a, b)
    assert d.multiplicity(a) == 2
    assert (d - Decomposition.of(a)).multiplicity(a) == 1
    assert Decomposition.of(a).issubset(d)
    with pytest.raises(ValueError):
        Decomposition.of(b) - Decomposition.of(a)
    assert str(d) == "2*C(2)xG(1) + C(2)xG(3)"
    assert d.character(A1) == weight_system(A1, (1,)).twist(2).scaled(2) + weight_system(A1, (3,)).twist(2)


def test_irrep_label_validation():
    with pytest.raises(ValueError):
        IrrepLabel.of((1, -1))
