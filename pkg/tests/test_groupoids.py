from itertools import product

import pytest

from mot2.errors import StructureError
from mot2.groupoids import (
    FiniteGroupoid,
    GroupoidFunctor,
    compose_functors,
    disjoint_union,
    from_group,
    group_hom_functor,
    identity_functor,
    iso_comma,
    pairing,
    product_groupoid,
    skeletonize,
    subgroup_inclusion,
    terminal_functor,
)
from mot2.groups import all_subgroups, catalog_group, conjugacy_classes_of_subgroups, double_cosets, homomorphisms


@pytest.fixture
def S3():
    return catalog_group("S3")


def test_group_as_groupoid(S3):
    G = from_group(S3)
    assert G.n_objects == 1 and G.n_morphisms == 6
    assert G.compose(3, 4) == S3.mul(3, 4)
    assert len(G.components) == 1


def test_broken_composition_is_rejected():
    # two morphisms on one object, but 1 o 1 = 1 makes 1 an idempotent non-identity
    comp = {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 1}
    with pytest.raises(StructureError):
        FiniteGroupoid("bad", ["*"], [0, 0], [0, 0], comp, [0], [0, 1])


def test_disjoint_union_and_product(S3):
    C2 = from_group(catalog_group("C2"))
    U = disjoint_union(from_group(S3), C2)
    assert U.n_objects == 2 and U.n_morphisms == 8
    assert U.components == [[0], [1]]
    P = product_groupoid(from_group(S3), C2)
    assert P.n_morphisms == 12


def test_iso_comma_of_subgroup_inclusion(S3):
    C2 = conjugacy_classes_of_subgroups(S3)[1]
    i = subgroup_inclusion(C2)
    sq = iso_comma(i, i).verify()
    assert sq.apex.n_objects == 6
    assert sq.apex.n_morphisms == 24
    assert len(sq.apex.components) == 2


def test_skeleton_is_equivalent(S3):
    C2 = conjugacy_classes_of_subgroups(S3)[1]
    i = subgroup_inclusion(C2)
    apex = iso_comma(i, i).apex
    sk, inc = skeletonize(apex)
    assert sk.n_objects == 2
    assert inc.verify().is_equivalence()


def test_functor_properties(S3):
    C2 = catalog_group("C2")
    phis = homomorphisms(C2, S3)
    inj = next(phi for phi in phis if phi[1] != 0)
    F = group_hom_functor(C2, S3, inj)
    assert F.is_faithful() and not F.is_full()
    trivial = group_hom_functor(C2, S3, (0, 0))
    assert not trivial.is_faithful()
    assert identity_functor(from_group(S3)).is_equivalence()
    assert terminal_functor(from_group(S3)).verify().is_full()
    comp = compose_functors(identity_functor(from_group(S3)), F)
    assert comp.mor_map == F.mor_map
    pr = pairing(F, trivial).verify()
    assert pr.is_faithful()


def test_composition_requires_matching_endpoints(S3):
    C2 = catalog_group("C2")
    F = group_hom_functor(C2, S3, (0, 1))
    with pytest.raises(StructureError):
        compose_functors(F, F)


@pytest.mark.parametrize("name,every_subgroup", [("S3", True), ("D8", False), ("A4", False)])
def test_iso_comma_components_are_double_cosets(name, every_subgroup):
    G = catalog_group(name)
    subs = all_subgroups(G) if every_subgroup else conjugacy_classes_of_subgroups(G)
    for H in subs:
        for K in subs:
            sq = iso_comma(subgroup_inclusion(H), subgroup_inclusion(K))
            assert len(sq.apex.components) == len(double_cosets(G, H, K)), (H.order, K.order)


# ---------------------------------
# Equivalencias contra busqueda exhaustiva
# ---------------------------------
def _functors(A, B):
    for objs in product(B.objects, repeat=A.n_objects):
        choices = [B.hom(objs[A.src[m]], objs[A.tgt[m]]) for m in range(A.n_morphisms)]
        for mors in product(*choices):
            try:
                yield GroupoidFunctor(A, B, objs, mors).verify()
            except StructureError:
                continue


def _isomorphic_functors(F, G):
    A, B = F.source, F.target
    for theta in product(*(B.hom(F.obj(a), G.obj(a)) for a in A.objects)):
        if all(B.compose(G(m), theta[A.src[m]]) == B.compose(theta[A.tgt[m]], F(m))
               for m in range(A.n_morphisms)):
            return True
    return False


def _has_quasi_inverse(F):
    A, B = F.source, F.target
    return any(
        _isomorphic_functors(compose_functors(F, Q), identity_functor(B))
        and _isomorphic_functors(compose_functors(Q, F), identity_functor(A))
        for Q in _functors(B, A)
    )


def _tiny_groupoids():
    C1, C2 = catalog_group("C1"), catalog_group("C2")
    g1, g2 = from_group(C1), from_group(C2)
    # dos objetos conectados, grupos de vertices triviales
    codiscrete = iso_comma(subgroup_inclusion(C2.trivial), identity_functor(g2)).apex
    return [g1, g2, disjoint_union(g1, g1), disjoint_union(g2, g1), codiscrete]


def test_is_equivalence_matches_quasi_inverse_search():
    seen = {True: 0, False: 0}
    tiny = _tiny_groupoids()
    for A in tiny:
        assert A.n_objects <= 4
        for B in tiny:
            for F in _functors(A, B):
                expected = _has_quasi_inverse(F)
                assert F.is_equivalence() == expected
                seen[expected] += 1
    assert seen[True] and seen[False]
