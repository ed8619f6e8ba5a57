import pytest

from mot2.bisets import identity_biset, identity_map, tensor
from mot2.errors import StructureError
from mot2.groupoids import from_group
from mot2.groups import catalog_group, conjugacy_classes_of_subgroups
from mot2.permbimod import (
    BimoduleMap,
    PermBimodule,
    P_on_2cell,
    P_on_span,
    coset_gset,
    delta_family,
    double_coset_basis,
    hom_space,
    identity_bimodule_map,
    linearize_1cell,
    linearize_map,
    rank_formula_check,
    tensor_compatibility,
    verify_P_fullness,
    whiskered_matrix,
    yoshida_kernel_check,
)
from mot2 import linalg
from mot2.scalars import Field
from mot2.twocells import TwoCell, adjunction_units, cohomological_2cell, twocell_basis, vcompose, whisker

Q = Field.rationals()
F2 = Field.prime(2)


@pytest.fixture
def S3():
    return catalog_group("S3")


@pytest.fixture
def idS3(S3):
    return identity_biset(from_group(S3))


@pytest.fixture
def C2_in_S3(S3):
    return conjugacy_classes_of_subgroups(S3)[1]


def test_linearized_identity(idS3):
    M = linearize_1cell(idS3, Q)
    assert M.dim == 6
    f = linearize_map(identity_map(idS3), Q)
    assert f.equals(identity_bimodule_map(M))
    assert P_on_2cell(TwoCell.identity(idS3, Q)).equals(identity_bimodule_map(M))


def test_center_of_group_algebra(idS3):
    M = PermBimodule(idS3, Q)
    hs = hom_space(M, M)
    assert hs.dim == 3
    for f in hs.maps():
        f.verify()
        assert hs.coordinates_of(f) is not None


@pytest.mark.parametrize("group,order,dim", [("C2", 1, 2), ("S3", 2, 2), ("S3", 6, 1), ("S3", 1, 6)])
def test_endomorphisms_of_permutation_modules(group, order, dim):
    G = catalog_group(group)
    K = next(H for H in conjugacy_classes_of_subgroups(G) if H.order == order)
    M = PermBimodule(coset_gset(G, K), Q)
    assert hom_space(M, M).dim == dim


def test_non_equivariant_matrix_is_rejected(idS3):
    M = PermBimodule(idS3, Q)
    entries = {0: {0: Q(1)}}
    bad = BimoduleMap(M, M, linalg.sparse_matrix(entries, (6, 6), Q).to_dense())
    with pytest.raises(StructureError):
        bad.verify()


@pytest.mark.parametrize("field", [Q, F2])
def test_rank_formula_for_every_pair(S3, field):
    reps = conjugacy_classes_of_subgroups(S3)
    for K in reps:
        for L in reps:
            r = rank_formula_check(S3, K, L, field)
            assert r["ok"], (K.order, L.order, r)


def test_double_coset_maps_are_equivariant(S3, C2_in_S3):
    maps = double_coset_basis(S3, C2_in_S3, C2_in_S3, Q)
    assert len(maps) == 2
    for f in maps:
        f.verify()


@pytest.mark.parametrize("field", [Q, F2])
def test_P_is_full_on_coset_gsets(S3, field):
    reps = conjugacy_classes_of_subgroups(S3)
    for K in reps:
        for L in reps:
            r = verify_P_fullness(coset_gset(S3, K), coset_gset(S3, L), field)
            assert r["full"], r


def test_P_is_full_on_identity(idS3):
    r = verify_P_fullness(idS3, idS3, Q)
    assert r == {"hom_dim": 3, "twocell_dim": 8, "image_rank": 3, "full": True}


def test_P_respects_vertical_composition(idS3):
    basis = twocell_basis(idS3, idS3, Q)
    for a in basis:
        for b in basis:
            assert P_on_2cell(vcompose(a, b)).equals(P_on_2cell(a) @ P_on_2cell(b))


def test_P_respects_whiskering(C2_in_S3):
    units = adjunction_units(C2_in_S3, Q)
    t = units.eta_r
    left = P_on_2cell(whisker(t, units.restriction, "left"))
    assert left.equals(whiskered_matrix(units.restriction, P_on_2cell(t), "left"))
    right = P_on_2cell(whisker(t, units.induction, "right"))
    assert right.equals(whiskered_matrix(units.induction, P_on_2cell(t), "right"))


def test_P_on_span_matches_P_on_2cell(C2_in_S3):
    units = adjunction_units(C2_in_S3, Q)
    W = units.mu.source
    f = P_on_span(W, units.mu, units.mu, Q)
    g = P_on_2cell(TwoCell.from_span(W, units.mu, units.mu, Q))
    assert f.equals(g)
    # cada elemento de G tiene [G:H] = 3 preimagenes por mu
    M = PermBimodule(units.id_G, Q)
    three = linalg.sparse_matrix({i: {i: Q(3)} for i in range(6)}, (6, 6), Q).to_dense()
    assert f.equals(BimoduleMap(M, M, three))
    assert P_on_2cell(cohomological_2cell(C2_in_S3, Q)).is_zero()


def test_tensor_compatibility(C2_in_S3):
    units = adjunction_units(C2_in_S3, Q)
    r = tensor_compatibility(units.induction, units.restriction, Q)
    assert r["quotient_dim"] == r["tensor_size"] == 18
    assert tensor(units.induction, units.restriction).size == 18


def test_delta_cells_are_killed_by_P():
    C2 = from_group(catalog_group("C2"))
    family = delta_family(C2, C2, Q)
    assert family
    for d in family:
        assert P_on_2cell(d).is_zero()


@pytest.mark.parametrize("name", ["C2", "C3", "S3"])
def test_kernel_of_P_is_the_delta_ideal(name):
    idG = identity_biset(from_group(catalog_group(name)))
    r = yoshida_kernel_check(idG, idG, Q)
    assert r["ideal_in_kernel"] and r["kernel_in_ideal"]
    assert r["kernel_dim"] == r["ideal_dim"]


def test_kernel_dims_for_s3(idS3):
    r = yoshida_kernel_check(idS3, idS3, Q)
    assert r["twocell_dim"] == 8
    assert r["kernel_dim"] == 5
