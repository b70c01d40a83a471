from math import comb

import pytest

from pvhskit.pvhs import (
    DomainError,
    catalog,
    generating_check,
    image_J_k,
    kernel_I_k,
    noncompact_roots,
    strata_dimension_typeA,
    sym_tangent,
    sym_tangent_characters,
    sym_tangent_partitions,
    verify_weight_bound,
    weight_bound_details,
)
from pvhskit.repchar import Decomposition, IrrepLabel, weyl_dimension
from pvhskit.rootsys import strongly_orthogonal_cascade
from pvhskit.schur import lr_coefficients, sym_of_ext


@pytest.mark.parametrize(
    "args,dim,rank",
    [
        (("I", 1, 1), 1, 1),
        (("I", 2, 3), 6, 2),
        (("I", 3, 2), 6, 2),
        (("II", 4), 6, 2),
        (("II", 5), 10, 2),
        (("III", 3), 6, 3),
        (("IV", 3), 3, 2),
        (("IV", 4), 4, 2),
        (("IV", 7), 7, 2),
        (("V",), 16, 2),
        (("VI",), 27, 3),
    ],
)
def test_catalog_dimension_and_rank(args, dim, rank):
    spec = catalog(*args)
    assert spec.dimension == dim
    assert spec.rank == rank
    assert len(strongly_orthogonal_cascade(spec.group, spec.special_node)) == rank
    # the tangent space is spanned by the non-compact positive roots
    assert len(noncompact_roots(spec)) == dim


@pytest.mark.parametrize("args", [("VII",), ("I", 0, 2), ("I", 2), ("II", 2), ("III", 1), ("IV", 2), ("V", 1)])
def test_catalog_rejects_bad_parameters(args):
    with pytest.raises(DomainError):
        catalog(*args)


def test_hodge_levels_and_charges():
    spec = catalog("VI")
    assert [lab.charge for lab in spec.hodge.levels] == [-3, -1, 1, 3]
    assert spec.tangent == IrrepLabel.of((1, 0, 0, 0, 0, 0), 2)
    assert weyl_dimension(spec.ambient, spec.hodge.levels[0]) == 1


def test_type_i_square():
    spec = catalog("I", 2, 2)
    labelled = sym_tangent_partitions(spec, 2)
    assert [pt for pt, _ in labelled] == [((2,), (2,)), ((1, 1), (1, 1))]
    assert image_J_k(spec, 2) == Decomposition.of(labelled[1][1])
    assert kernel_I_k(spec, 2) == Decomposition.of(labelled[0][1])


def test_exceptional_fourth_power():
    expected = Decomposition.of(
        *(IrrepLabel.of(c, 8) for c in [(4, 0, 0, 0, 0, 0), (2, 0, 0, 0, 0, 1), (0, 0, 0, 0, 0, 2), (1, 0, 0, 0, 0, 0)])
    )
    assert sym_tangent(catalog("VI"), 4) == expected
    assert image_J_k(catalog("VI"), 4) == Decomposition()


@pytest.mark.parametrize("args", [("I", 2, 3), ("I", 3, 3), ("II", 5), ("III", 3), ("IV", 5), ("V",)])
def test_sym_tangent_routes_agree(args):
    spec = catalog(*args)
    for k in range(0, 4):
        assert sym_tangent(spec, k) == sym_tangent_characters(spec, k)
        assert sym_tangent(spec, k).dimension(spec.ambient) == comb(spec.dimension + k - 1, k)


@pytest.mark.parametrize("args", [("I", 1, 3), ("I", 2, 4), ("II", 6), ("III", 2), ("IV", 6), ("V",), ("VI",)])
def test_nilpotency_and_exactness(args):
    spec = catalog(*args)
    assert kernel_I_k(spec, 1) == Decomposition()
    for k in range(spec.rank + 3):
        j = image_J_k(spec, k)
        assert j + kernel_I_k(spec, k) == sym_tangent(spec, k)
        assert (len(j) == 1) == (k <= spec.rank)


def test_wedge_type_uses_full_columns():
    # the image of S^k(T) in the Hodge pieces of type II is S_(1^{2k}), not S_(k,k)
    spec = catalog("II", 4)
    j2 = image_J_k(spec, 2)
    assert j2.dimension(spec.ambient) == 1
    assert kernel_I_k(spec, 2).dimension(spec.ambient) == 20
    assert [pt for pt, _ in sym_tangent_partitions(spec, 2)] == [((2, 2),), ((1, 1, 1, 1),)]


def test_square_partition_image_breaks_generation():
    # with I_2 = S_(1,1,1,1) the degree-3 part of the ideal on Lambda^2 C^4 is not generated
    s3 = sym_of_ext(3, 4)
    assert s3 == [(3, 3), (2, 2, 1, 1)]
    product = lr_coefficients((1, 1, 1, 1), (1, 1), 4)
    assert (3, 3) not in product


def _dims(spec, dec):
    return sorted(weyl_dimension(spec.ambient, lab) for lab, m in dec for _ in range(m))


def test_low_rank_isomorphisms_match():
    pairs = [(("II", 4), ("IV", 6)), (("III", 2), ("IV", 3)), (("I", 2, 2), ("IV", 4)), (("II", 3), ("I", 1, 3))]
    for a, b in pairs:
        sa, sb = catalog(*a), catalog(*b)
        assert sa.dimension == sb.dimension and sa.rank == sb.rank
        for k in range(1, 5):
            for f in (sym_tangent, image_J_k, kernel_I_k):
                assert _dims(sa, f(sa, k)) == _dims(sb, f(sb, k))


@pytest.mark.parametrize("args", [("I", 2, 3), ("I", 3, 4), ("II", 5), ("II", 6), ("III", 3), ("IV", 5), ("V",), ("VI",)])
def test_generating_check(args):
    spec = catalog(*args)
    for k in range(2, spec.rank + 2):
        rep = generating_check(spec, k)
        assert rep.contained, rep.missing
        assert rep.exact()
        assert set(rep.witnesses) == set(rep.i_k.labels())


@pytest.mark.parametrize("args", [("I", 2, 4), ("I", 3, 3), ("III", 4), ("II", 6)])
def test_classical_witnesses_are_valid(args):
    spec = catalog(*args)
    dims = spec.schur.dims
    for k in range(2, spec.rank + 2):
        rep = generating_check(spec, k)
        lookup = {lab: pt for pt, lab in sym_tangent_partitions(spec, k)}
        for lab, w in rep.witnesses.items():
            lam = lookup[lab][0]
            boxes = k - 2 if spec.schur.kind == "cauchy" else 2 * (k - 2)
            assert sum(w["mu"]) == boxes
            assert lr_coefficients(w["i2"], w["mu"], max(dims)).get(lam, 0) > 0
            assert w["rule"]


def test_generating_check_rejects_small_k():
    with pytest.raises(ValueError):
        generating_check(catalog("V"), 1)


@pytest.mark.parametrize("args", [("I", 1, 1), ("I", 2, 4), ("III", 4), ("II", 6), ("IV", 8), ("V",), ("VI",)])
def test_weight_bound(args):
    spec = catalog(*args)
    assert verify_weight_bound(spec) == 1
    assert all(v == 1 for v in weight_bound_details(spec).values())


def test_weight_bound_checks_alpha7():
    assert set(weight_bound_details(catalog("VI"))) == {"highest", "alpha7", "psi1", "psi2", "psi3"}


def test_weight_bound_guard():
    with pytest.raises(DomainError):
        verify_weight_bound(catalog("I", 8, 8))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_strata_dimensions(n):
    for k in range(1, n):
        assert strata_dimension_typeA(n, k) == (2 * n - k) * k
    assert strata_dimension_typeA(n, 0) == 0
    assert strata_dimension_typeA(n, n) == n * n
    with pytest.raises(ValueError):
        strata_dimension_typeA(n, n + 1)
