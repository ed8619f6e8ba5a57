"""
Propiedades sembradas: cada ejemplo de hypothesis es una semilla que fija
los objetos aleatorios de ``mot2.sampling``.
"""

import random

from hypothesis import given, settings, strategies as st

from mot2 import linalg
from mot2.bisets import associator, is_isomorphic, left_unitor, right_unitor, tensor
from mot2.permbimod import P_on_2cell, tensor_compatibility
from mot2.sampling import random_biset, random_group, random_span, random_twocell
from mot2.scalars import Field
from mot2.spans import compose_spans, phi_comparison, realize, varphi_iso
from mot2.twocells import hcompose, vcompose, whisker

SMALL = ("C1", "C2", "C3", "K4", "S3")
TINY = ("C1", "C2", "C3")
seeds = st.integers(min_value=0, max_value=2 ** 31 - 1)
fields = st.sampled_from([Field.rationals(), Field.prime(2), Field.prime(3), Field.prime(5)])


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_varphi_is_an_isomorphism(seed):
    S = random_biset(random.Random(seed))
    f = varphi_iso(S)
    assert f.is_bijective()
    assert is_isomorphic(S, f.target) is not None


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_phi_detects_joint_faithfulness(seed):
    sp = random_span(random.Random(seed))
    assert phi_comparison(sp).is_equivalence() == sp.jointly_faithful
    if sp.right_faithful:
        assert realize(sp).is_right_free()


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_structural_isomorphisms(seed):
    rng = random.Random(seed)
    A, B, C, D = (random_group(rng, SMALL) for _ in range(4))
    X = random_biset(rng, 2, (A, B))
    Y = random_biset(rng, 2, (B, C))
    Z = random_biset(rng, 2, (C, D))
    assert associator(X, Y, Z).verify().is_bijective()
    assert left_unitor(X).verify().is_bijective()
    assert right_unitor(X).verify().is_bijective()
    assert tensor(tensor(X, Y), Z).size == tensor(X, tensor(Y, Z)).size


@settings(max_examples=15, deadline=None)
@given(seeds, fields)
def test_linearization_is_functorial(seed, field):
    rng = random.Random(seed)
    groups = (random_group(rng, SMALL), random_group(rng, SMALL))
    U, V, W = (random_biset(rng, 2, groups) for _ in range(3))
    t1 = random_twocell(U, V, field, rng)
    t2 = random_twocell(V, W, field, rng)
    assert P_on_2cell(vcompose(t2, t1)).equals(P_on_2cell(t2) @ P_on_2cell(t1))


@settings(max_examples=10, deadline=None)
@given(seeds)
def test_realization_preserves_composition(seed):
    rng = random.Random(seed)
    s1 = random_span(rng)
    s2 = random_span(rng, H=s1.G.group)
    composite = realize(compose_spans(s2, s1))
    assert is_isomorphic(composite, tensor(realize(s2), realize(s1))) is not None


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_tensor_of_right_free_bisets_is_right_free(seed):
    rng = random.Random(seed)
    A, B, C = (random_group(rng, SMALL) for _ in range(3))
    X = random_biset(rng, 2, (A, B), right_free=True)
    Y = random_biset(rng, 2, (B, C), right_free=True)
    assert X.is_right_free() and Y.is_right_free()
    assert tensor(X, Y).is_right_free()


@settings(max_examples=10, deadline=None)
@given(seeds, fields)
def test_vertical_composition_is_associative(seed, field):
    rng = random.Random(seed)
    groups = (random_group(rng, SMALL), random_group(rng, SMALL))
    U, V, W, X = (random_biset(rng, 2, groups) for _ in range(4))
    t1 = random_twocell(U, V, field, rng)
    t2 = random_twocell(V, W, field, rng)
    t3 = random_twocell(W, X, field, rng)
    assert vcompose(t3, vcompose(t2, t1)) == vcompose(vcompose(t3, t2), t1)


@settings(max_examples=10, deadline=None)
@given(seeds, fields)
def test_interchange_on_right_free_cells(seed, field):
    rng = random.Random(seed)
    A, B, C = (random_group(rng, TINY) for _ in range(3))
    U1, V1 = (random_biset(rng, 2, (A, B), right_free=True) for _ in range(2))
    U2, V2 = (random_biset(rng, 2, (C, A), right_free=True) for _ in range(2))
    t1 = random_twocell(U1, V1, field, rng)
    t2 = random_twocell(U2, V2, field, rng)
    post_first = vcompose(whisker(t2, V1, "right"), whisker(t1, U2, "left"))
    pre_first = vcompose(whisker(t1, V2, "left"), whisker(t2, U1, "right"))
    assert post_first == pre_first == hcompose(t2, t1)


@settings(max_examples=15, deadline=None)
@given(seeds, fields)
def test_linearization_preserves_tensor_products(seed, field):
    rng = random.Random(seed)
    A, B, C = (random_group(rng, SMALL) for _ in range(3))
    U = random_biset(rng, 2, (A, B))
    V = random_biset(rng, 2, (B, C))
    r = tensor_compatibility(U, V, field)
    assert r["quotient_dim"] == r["tensor_size"]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-4, 4), min_size=4, max_size=4), min_size=1, max_size=5), fields)
def test_rank_nullity(rows, field):
    M = linalg.matrix([[field(x) for x in r] for r in rows], field)
    ns = linalg.nullspace(M)
    assert linalg.rank(M) + len(ns) == 4
    assert linalg.rank(linalg.transpose(M)) == linalg.rank(M)
    for v in ns:
        assert all(field.is_zero(x) for x in linalg.apply(M, v))
    assert len(linalg.sparse_nullspace(M)) == len(ns)
