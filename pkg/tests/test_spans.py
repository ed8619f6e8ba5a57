import random

import pytest

from mot2.bisets import identity_biset, is_isomorphic, tensor
from mot2.errors import StructureError
from mot2.groupoids import from_group, group_hom_functor, identity_functor, subgroup_inclusion, terminal_functor
from mot2.groups import catalog_group, conjugacy_classes_of_subgroups, homomorphisms
from mot2.sampling import random_biset, random_span
from mot2.spans import (
    Span,
    compose_spans,
    grothendieck,
    identity_span,
    phi_comparison,
    realize,
    varphi_iso,
)


@pytest.fixture
def S3():
    return catalog_group("S3")


def test_identity_span_realizes_identity_biset(S3):
    G = from_group(S3)
    R = realize(identity_span(G))
    assert is_isomorphic(R, identity_biset(G)) is not None


def test_varphi_on_identity_biset(S3):
    idG = identity_biset(from_group(S3))
    f = varphi_iso(idG)
    assert f.is_bijective()


def test_grothendieck_apex_objects_are_elements(S3):
    idG = identity_biset(from_group(S3))
    gs = grothendieck(idG)
    assert gs.apex.n_objects == idG.size
    assert gs.jointly_faithful


@pytest.mark.parametrize("seed", range(8))
def test_varphi_on_random_bisets(seed):
    S = random_biset(random.Random(seed))
    assert varphi_iso(S).is_bijective()


@pytest.mark.parametrize("seed", range(8))
def test_phi_equivalence_iff_jointly_faithful(seed):
    sp = random_span(random.Random(seed))
    assert phi_comparison(sp).is_equivalence() == sp.jointly_faithful


@pytest.mark.parametrize("seed", range(8))
def test_realization_of_right_faithful_span_is_right_free(seed):
    sp = random_span(random.Random(seed))
    free = realize(sp).is_right_free()
    assert free or not sp.right_faithful
    assert free == sp.u_kills_kernel_of_i


def test_right_free_realization_without_faithful_right_leg():
    # C4 -> C2 mata el cuadrado del generador y u tambien: realize sigue libre
    C4, C2 = catalog_group("C4"), catalog_group("C2")
    to_c2 = next(phi for phi in homomorphisms(C4, C2) if any(phi))
    sp = Span(group_hom_functor(C4, C2, to_c2), group_hom_functor(C4, C2, to_c2))
    assert not sp.right_faithful
    assert sp.u_kills_kernel_of_i
    assert realize(sp).is_right_free()


def test_collapsing_span_is_not_jointly_faithful(S3):
    C2 = catalog_group("C2")
    C1 = catalog_group("C1")
    u = group_hom_functor(C2, C1, (0, 0))
    i = group_hom_functor(C2, C1, (0, 0))
    sp = Span(u, i)
    assert not sp.jointly_faithful
    assert not phi_comparison(sp).is_equivalence()


def test_composite_of_jointly_faithful_spans_can_collapse():
    C2 = from_group(catalog_group("C2"))
    e, t = identity_functor(C2), terminal_functor(C2)
    s1 = Span(t, e)    # 1 <- C2 = C2
    s2 = Span(e, t)    # C2 = C2 -> 1
    assert s1.jointly_faithful and s2.jointly_faithful
    composite = compose_spans(s2, s1)
    assert composite.H.n_objects == composite.G.n_objects == 1
    assert not composite.jointly_faithful
    assert not phi_comparison(composite).is_equivalence()


def test_composition_realizes_tensor(S3):
    H = conjugacy_classes_of_subgroups(S3)[1]
    inc = subgroup_inclusion(H)
    e = identity_functor(inc.source)
    s1 = Span(inc, e)    # S3 <- C2 -> C2
    s2 = Span(e, inc)    # C2 <- C2 -> S3
    composite = realize(compose_spans(s2, s1))
    assert composite.size == 18
    assert is_isomorphic(composite, tensor(realize(s2), realize(s1))) is not None
    full = realize(compose_spans(s2, s1, skeleton=False))
    assert is_isomorphic(full, composite) is not None


def test_composition_needs_matching_feet(S3):
    G = from_group(S3)
    C2 = from_group(catalog_group("C2"))
    with pytest.raises(StructureError):
        compose_spans(identity_span(G), identity_span(C2))
