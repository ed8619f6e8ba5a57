import pytest

from mot2 import linalg
from mot2.bisets import is_isomorphic
from mot2.errors import StructureError
from mot2.groups import catalog_group, conjugacy_classes_of_subgroups, conjugates
from mot2.mackey import (
    classical_yoshida_kernel_check,
    compose_span_homs,
    empty_gset,
    gset_from_action,
    hom_decategorify,
    induction_restriction,
    point_gset,
    projection_map,
    regular_gset,
    restrict_gset,
    span_category_hom,
    verify_mackey_axioms,
    yoshida_functor,
    yoshida_relation,
)
from mot2.permbimod import coset_gset
from mot2.scalars import Field

Q = Field.rationals()
F2 = Field.prime(2)


@pytest.fixture
def S3():
    return catalog_group("S3")


@pytest.fixture
def C2_in_S3(S3):
    return conjugacy_classes_of_subgroups(S3)[1]


def test_basic_gsets(S3, C2_in_S3):
    assert point_gset(S3).size == 1
    assert regular_gset(S3).size == 6
    assert coset_gset(S3, C2_in_S3).size == 3
    assert empty_gset(S3).size == 0


def test_gset_from_action_matches_coset_gset(S3):
    # S3 sobre {0, 1, 2}: estabilizador de 0 es de orden 2
    X = gset_from_action(S3, [0, 1, 2], lambda g, p: S3.elements[g][p], name="pts")
    assert len(X.orbits) == 1
    K = next(H for H in conjugacy_classes_of_subgroups(S3) if H.order == 2)
    assert X.size == coset_gset(S3, K).size


def test_restriction_keeps_element_order(S3, C2_in_S3):
    X = coset_gset(S3, C2_in_S3)
    R = restrict_gset(X, C2_in_S3)
    assert R.size == 3
    assert [lab[2] for lab in R.labels] == list(range(3))
    assert len(R.orbits) == 2


def test_projection_map(S3, C2_in_S3):
    f = projection_map(regular_gset(S3), coset_gset(S3, C2_in_S3))
    assert sorted(len(f.fiber(t)) for t in range(3)) == [2, 2, 2]


def test_span_category_hom_dims(S3):
    assert len(span_category_hom(point_gset(S3), point_gset(S3), Q)) == 4
    assert len(span_category_hom(regular_gset(S3), regular_gset(S3), Q)) == 6


def test_yoshida_functor_on_induction_restriction(S3, C2_in_S3):
    s = induction_restriction(S3, S3.whole, C2_in_S3, Q)
    f = yoshida_functor(s)
    assert f.entry(0, 0) == Q(3)
    assert yoshida_functor(yoshida_relation(S3, S3.whole, C2_in_S3, Q)).is_zero()


def test_span_composition_is_associative(S3):
    X = coset_gset(S3, next(H for H in conjugacy_classes_of_subgroups(S3) if H.order == 3))
    cells = span_category_hom(X, X, Q)
    a, b, c = cells[0], cells[-1], cells[len(cells) // 2]
    assert compose_span_homs(a, compose_span_homs(b, c)) == compose_span_homs(compose_span_homs(a, b), c)


def test_classical_yoshida_on_s3(S3):
    r = classical_yoshida_kernel_check(S3, Q)
    assert r["ok"]
    top = next(p for p in r["pairs"] if p["K"] == 6 and p["L"] == 6)
    assert (top["hom_dim"], top["ideal_dim"], top["quotient_dim"]) == (4, 3, 1)
    assert all(p["quotient_dim"] == p["double_cosets"] == p["yoshida_rank"] for p in r["pairs"])


@pytest.mark.parametrize("name", ["C2", "C3", "C4"])
def test_classical_yoshida_on_cyclic_groups(name):
    assert classical_yoshida_kernel_check(catalog_group(name), Q)["ok"]


def test_point_module_of_c2():
    G = catalog_group("C2")
    T = hom_decategorify(G, point_gset(G), point_gset(G), Q)
    trivial, whole = T.subgroups
    assert T.dim(trivial) == T.dim(whole) == 1
    v = T.vectors(trivial)[0]
    assert T.transfer_vector(trivial, whole, v) == [Q(2) * c for c in v]
    tr = T.transfer(trivial, whole)
    assert linalg.to_rows(tr) == [[Q(2)]]
    assert linalg.to_rows(T.restriction(whole, trivial)) == [[Q(1)]]


def test_decategorified_dims(S3, C2_in_S3):
    X = coset_gset(S3, C2_in_S3)
    T = hom_decategorify(S3, X, X, Q)
    dims = {H.order: T.dim(H) for H in T.subgroups}
    assert dims[6] == 2
    assert dims[1] == 9


def test_restriction_and_conjugation_matrices(S3, C2_in_S3):
    T = hom_decategorify(S3, regular_gset(S3), regular_gset(S3), Q)
    R = T.restriction(S3.whole, C2_in_S3)
    assert R.shape == (T.dim(C2_in_S3), T.dim(S3.whole))
    for g in range(S3.order):
        C = T.conjugation(g, C2_in_S3)
        assert linalg.rank(C) == T.dim(C2_in_S3)


def test_off_space_vector_is_rejected(S3):
    T = hom_decategorify(S3, point_gset(S3), regular_gset(S3), Q)
    bad = [Q(1)] + [Q(0)] * (len(T.coords) - 1)
    with pytest.raises(StructureError):
        T._coordinates(S3.whole, bad)


@pytest.mark.parametrize("field", [Q, F2])
def test_mackey_axioms_on_s3(S3, field):
    reps = conjugacy_classes_of_subgroups(S3)
    for K in reps:
        T = hom_decategorify(S3, coset_gset(S3, K), coset_gset(S3, reps[1]), field)
        r = verify_mackey_axioms(T, additivity_with=point_gset(S3))
        assert r["ok"], r["failures"]
        assert r["checked"]["D"] > 0


def test_mackey_axioms_on_d8():
    G = catalog_group("D8")
    X = regular_gset(G)
    r = verify_mackey_axioms(hom_decategorify(G, X, point_gset(G), Q))
    assert r["ok"], r["failures"]


def test_isomorphic_gsets(S3, C2_in_S3):
    other = next(H for H in conjugates(C2_in_S3) if H != C2_in_S3)
    assert is_isomorphic(coset_gset(S3, C2_in_S3), coset_gset(S3, other)) is not None
