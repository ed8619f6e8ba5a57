import pytest

from mot2.bisets import (
    EquivariantMap,
    associator,
    build_biset,
    compose_maps,
    disjoint_union_bisets,
    identity_biset,
    identity_map,
    is_isomorphic,
    left_unitor,
    orbit_decomposition,
    pullback,
    restrict,
    right_unitor,
    sub_biset,
    tensor,
    transitive_biset,
)
from mot2.errors import StructureError
from mot2.groupoids import from_group, subgroup_inclusion
from mot2.groups import catalog_group, conjugacy_classes_of_subgroups, diagonal, direct_product


@pytest.fixture
def S3():
    return catalog_group("S3")


@pytest.fixture
def C2_in_S3(S3):
    return conjugacy_classes_of_subgroups(S3)[1]


def _ind_res(H):
    inc = subgroup_inclusion(H)
    idG = identity_biset(inc.target)
    return restrict(idG, right=inc), restrict(idG, left=inc)


def test_identity_biset_is_transitive(S3):
    idG = identity_biset(from_group(S3))
    assert idG.size == 6
    assert len(idG.orbits) == 1
    assert idG.is_left_free() and idG.is_right_free()


def test_identity_is_diagonal_coset_biset(S3):
    G = from_group(S3)
    GG = direct_product(S3, S3)
    X = transitive_biset(G, G, diagonal(GG, S3.whole))
    f = is_isomorphic(X, identity_biset(G))
    assert f is not None and f.is_bijective()


def test_tensor_over_subgroup_has_eighteen_elements(C2_in_S3):
    ind, res = _ind_res(C2_in_S3)
    assert ind.size == 6 and res.size == 6
    GHG = tensor(ind, res)
    assert GHG.size == 18
    pieces = orbit_decomposition(GHG)
    assert len(pieces) == 1
    assert pieces[0].stabilizer.order == 2


def test_restriction_keeps_freeness(C2_in_S3):
    ind, res = _ind_res(C2_in_S3)
    assert ind.is_left_free() and ind.is_right_free()
    assert res.is_left_free() and res.is_right_free()


def test_tensor_needs_matching_middle(C2_in_S3):
    ind, _ = _ind_res(C2_in_S3)
    with pytest.raises(StructureError):
        tensor(ind, ind)


def test_unitors_and_associator_are_isomorphisms(C2_in_S3):
    ind, res = _ind_res(C2_in_S3)
    for f in (left_unitor(ind), right_unitor(ind), left_unitor(res), right_unitor(res)):
        assert f.verify().is_bijective()
    a = associator(ind, res, ind).verify()
    assert a.is_bijective()
    assert a.source.size == a.target.size


def test_build_biset_rejects_leaky_action(S3):
    G = from_group(S3)
    C1 = from_group(catalog_group("C1"))
    with pytest.raises(StructureError):
        build_biset(G, C1, [("p", 0, 0)], lambda g, l: "p" if g == 0 else "q", lambda l, h: l)


def test_sub_biset_and_disjoint_union(S3):
    idG = identity_biset(from_group(S3))
    two = disjoint_union_bisets(idG, idG)
    assert two.size == 12 and len(two.orbits) == 2
    piece, inc = sub_biset(two, two.orbits[1])
    assert inc.verify().mapping == tuple(range(6, 12))
    assert is_isomorphic(piece, idG) is not None
    assert is_isomorphic(two, idG) is None


def test_pullback_of_identity_maps(S3):
    idG = identity_biset(from_group(S3))
    e = identity_map(idG)
    P, pr1, pr2 = pullback(e, e)
    assert P.size == 6
    assert compose_maps(e, pr1).mapping == pr2.mapping


def test_equivariant_map_inverse(S3):
    idG = identity_biset(from_group(S3))
    f = left_unitor(idG)
    g = f.inverse()
    assert compose_maps(f, g).mapping == tuple(range(idG.size))
    with pytest.raises(StructureError):
        EquivariantMap(idG, idG, (0,) * 6).inverse()
