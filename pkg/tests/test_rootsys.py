from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pvhskit.rootsys import (
    RootSystemError,
    Weight,
    build_root_system,
    coroot_pairing,
    product_system,
    simple_reflection,
    special_nodes,
    strongly_orthogonal,
    strongly_orthogonal_cascade,
    to_dominant,
    weyl_orbit,
    root_orbit,
)

POSITIVE_COUNTS = [
    ("A", 1, 1), ("A", 4, 10), ("B", 2, 4), ("B", 4, 16), ("C", 3, 9),
    ("D", 4, 12), ("D", 5, 20), ("E6", 6, 36), ("E7", 7, 63),
]


@pytest.mark.parametrize("family,rank,count", POSITIVE_COUNTS)
def test_positive_root_count(family, rank, count):
    assert len(build_root_system(family, rank).positive_roots) == count


@pytest.mark.parametrize(
    "family,rank,highest",
    [
        ("A", 3, (1, 1, 1)),
        ("B", 3, (1, 2, 2)),
        ("C", 3, (2, 2, 1)),
        ("D", 5, (1, 2, 2, 1, 1)),
        ("E6", 6, (1, 2, 2, 3, 2, 1)),
        ("E7", 7, (2, 2, 3, 4, 3, 2, 1)),
    ],
)
def test_highest_root(family, rank, highest):
    assert build_root_system(family, rank).highest_root == highest


@pytest.mark.parametrize("l", [1, 2, 3, 5])
def test_type_a_roots_are_intervals(l):
    # e_i - e_j for i < j has coefficient 1 on alpha_i .. alpha_{j-1}
    expected = {tuple(int(i <= t < j) for t in range(l)) for i, j in combinations(range(l + 1), 2)}
    assert set(build_root_system("A", l).positive_roots) == expected


def test_cartan_convention_for_b_and_c():
    b = build_root_system("B", 3).cartan
    c = build_root_system("C", 3).cartan
    # cartan[i][j] = 2 (a_i, a_j) / (a_i, a_i)
    assert b[1, 2] == -1 and b[2, 1] == -2
    assert c[1, 2] == -2 and c[2, 1] == -1


def test_root_lengths():
    b = build_root_system("B", 3)
    assert b.symmetrizer == (Fraction(1), Fraction(1), Fraction(1, 2))
    c = build_root_system("C", 3)
    assert c.symmetrizer == (Fraction(1, 2), Fraction(1, 2), Fraction(1))


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 4), ("C", 3), ("D", 4), ("E6", 6)])
def test_fundamental_weights_dual_to_coroots(family, rank):
    rs = build_root_system(family, rank)
    for i in range(rank):
        alpha = tuple(int(t == i) for t in range(rank))
        for j in range(rank):
            omega = tuple(int(t == j) for t in range(rank))
            assert coroot_pairing(rs, omega, alpha) == int(i == j)


def test_coroot_pairing_errors():
    rs = build_root_system("A", 2)
    with pytest.raises(RootSystemError):
        coroot_pairing(rs, (1, 0), (0, 0))
    with pytest.raises(RootSystemError):
        coroot_pairing(rs, (1, 0), (2, 1))


@pytest.mark.parametrize("l", [1, 2, 4, 6])
def test_orbit_of_first_fundamental_type_a(l):
    rs = build_root_system("A", l)
    assert len(weyl_orbit(rs, (1,) + (0,) * (l - 1))) == l + 1


def test_exceptional_minuscule_orbits():
    assert len(weyl_orbit(build_root_system("E6", 6), (1, 0, 0, 0, 0, 0))) == 27
    assert len(weyl_orbit(build_root_system("E7", 7), (0, 0, 0, 0, 0, 0, 1))) == 56


@pytest.mark.parametrize("l", [2, 3, 5])
def test_highest_root_orbit_is_all_roots(l):
    rs = build_root_system("A", l - 1)
    orbit = root_orbit(rs, rs.highest_root)
    assert len(orbit) == l * (l - 1)
    assert orbit == rs.root_set


def test_simple_reflection_basics():
    rs = build_root_system("D", 4)
    omega = {j: Weight.of(tuple(int(t == j - 1) for t in range(4))) for j in range(1, 5)}
    for i in range(1, 5):
        for j in range(1, 5):
            if i != j:
                assert simple_reflection(rs, i, omega[j]) == omega[j]
    # s_1(omega_1) = omega_1 - alpha_1, alpha_1 in weight coordinates = column 1 of the Cartan matrix
    alpha1 = tuple(int(x) for x in rs.cartan[:, 0])
    assert simple_reflection(rs, 1, omega[1]).coords == tuple(a - b for a, b in zip(omega[1].coords, alpha1))
    with pytest.raises(RootSystemError):
        simple_reflection(rs, 5, omega[1])


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from([("A", 3), ("B", 3), ("C", 4), ("D", 5), ("E6", 6)]),
    st.data(),
)
def test_simple_reflection_is_an_involution(system, data):
    rs = build_root_system(*system)
    coords = data.draw(st.lists(st.integers(-6, 6), min_size=rs.rank, max_size=rs.rank))
    i = data.draw(st.integers(1, rs.rank))
    beta = Weight.of(coords, charge=data.draw(st.integers(-3, 3)))
    assert simple_reflection(rs, i, simple_reflection(rs, i, beta)) == beta


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=4, max_size=4))
def test_to_dominant_lands_in_orbit(coords):
    rs = build_root_system("B", 4)
    dom = to_dominant(rs, coords)
    assert min(dom) >= 0
    assert Weight.of(coords) in weyl_orbit(rs, dom)


def test_special_nodes():
    assert special_nodes(build_root_system("E6", 6)) == [1, 6]
    assert special_nodes(build_root_system("E7", 7)) == [7]
    assert special_nodes(build_root_system("C", 4)) == [4]
    assert special_nodes(build_root_system("D", 5)) == [1, 4, 5]


def test_e7_cascade():
    rs = build_root_system("E7", 7)
    cascade = strongly_orthogonal_cascade(rs, 7)
    assert cascade == [(2, 2, 3, 4, 3, 2, 1), (0, 1, 1, 2, 2, 2, 1), (0, 0, 0, 0, 0, 0, 1)]


@pytest.mark.parametrize(
    "family,rank,node,size",
    [("A", 5, 2, 2), ("A", 5, 3, 3), ("C", 4, 4, 4), ("D", 6, 6, 3), ("D", 5, 1, 2), ("B", 4, 1, 2), ("E6", 6, 1, 2)],
)
def test_cascade_size_is_domain_rank(family, rank, node, size):
    rs = build_root_system(family, rank)
    cascade = strongly_orthogonal_cascade(rs, node)
    assert len(cascade) == size
    for a, b in combinations(cascade, 2):
        assert strongly_orthogonal(rs, a, b)
    assert all(r[node - 1] == 1 for r in cascade)


def test_cascade_rejects_non_special_node():
    with pytest.raises(RootSystemError):
        strongly_orthogonal_cascade(build_root_system("E7", 7), 1)


@pytest.mark.parametrize("family,rank", [("E6", 5), ("E7", 6), ("B", 1), ("D", 2), ("F", 4), ("A", 0)])
def test_invalid_systems(family, rank):
    with pytest.raises(RootSystemError):
        build_root_system(family, rank)


def test_product_system():
    a2, a1 = build_root_system("A", 2), build_root_system("A", 1)
    prod = product_system(a2, a1)
    assert prod.rank == 3
    assert len(prod.positive_roots) == 4
    assert prod.highest_root is None
    assert np.array_equal(prod.cartan[:2, :2], a2.cartan)
    assert product_system().rank == 0
