import pytest

from mot2.errors import GroupError, StructureError
from mot2.groups import (
    all_subgroups,
    catalog_group,
    conjugacy_classes,
    conjugacy_classes_of_subgroups,
    conjugate,
    conjugating_element,
    coset_representatives,
    cosets,
    diagonal,
    direct_product,
    double_cosets,
    homomorphisms,
    index,
    is_projection_injective,
    normalizer,
    parse_presentation,
    presentation,
    subgroup,
    subgroup_from_elements,
)


@pytest.fixture
def S3():
    return catalog_group("S3")


def test_identity_is_index_zero(S3):
    assert S3.order == 6
    assert S3.elements[0] == (0, 1, 2)
    assert all(S3.mul(0, g) == g == S3.mul(g, 0) for g in range(6))
    assert all(S3.mul(g, S3.inv(g)) == 0 for g in range(6))


def test_mul_applies_right_factor_first(S3):
    a, b = S3.index[(1, 0, 2)], S3.index[(0, 2, 1)]
    ab = S3.elements[S3.mul(a, b)]
    assert ab == tuple(S3.elements[a][x] for x in S3.elements[b])


@pytest.mark.parametrize("name,order", [("C1", 1), ("C4", 4), ("K4", 4), ("S3", 6), ("D8", 8), ("Q8", 8),
                                        ("A4", 12), ("S4", 24)])
def test_catalog_orders(name, order):
    assert catalog_group(name).order == order


def test_unknown_catalog_name():
    with pytest.raises(GroupError):
        catalog_group("M11")


def test_presentation_roundtrip(S3):
    G = parse_presentation(presentation(S3))
    assert G.elements == S3.elements


@pytest.mark.parametrize("text", ["S3 perm(3): (1 2)", "G = perm(3): (1 4)", "G = perm(3): (1 1)", "G = perm(3): (1 2) x"])
def test_bad_presentations(text):
    with pytest.raises(GroupError):
        parse_presentation(text)


def test_max_order_guard():
    with pytest.raises(GroupError):
        parse_presentation("S4 = perm(4): (1 2), (1 2 3 4)", max_order=10)


def test_subgroups_of_s3(S3):
    subs = all_subgroups(S3)
    assert len(subs) == 6
    assert [H.order for H in subs] == [1, 2, 2, 2, 3, 6]
    classes = conjugacy_classes_of_subgroups(S3)
    assert [H.order for H in classes] == [1, 2, 3, 6]


def test_subgroup_counts_match_lagrange():
    for name in ("C4", "K4", "D8", "A4"):
        G = catalog_group(name)
        assert all(G.order % H.order == 0 for H in all_subgroups(G))
    assert len(all_subgroups(catalog_group("S4"))) == 30


def test_conjugation(S3):
    C2 = conjugacy_classes_of_subgroups(S3)[1]
    others = {conjugate(C2, g) for g in range(6)}
    assert len(others) == 3
    for K in others:
        g = conjugating_element(C2, K)
        assert conjugate(C2, g) == K
    assert normalizer(S3, C2) == C2
    assert normalizer(S3, subgroup(S3, [3])) == S3.whole


def test_cosets_and_double_cosets(S3):
    C2 = conjugacy_classes_of_subgroups(S3)[1]
    assert len(cosets(S3, C2)) == index(S3, C2) == 3
    assert len(cosets(S3, C2, side="right")) == 3
    reps = coset_representatives(S3, C2)
    assert reps[0] == 0
    assert len(double_cosets(S3, C2, C2)) == 2
    assert len(double_cosets(S3, S3.trivial, S3.trivial)) == 6
    with pytest.raises(ValueError):
        cosets(S3, C2, side="middle")


def test_conjugacy_classes(S3):
    assert sorted(len(c) for c in conjugacy_classes(S3)) == [1, 2, 3]


def test_subgroup_from_elements_checks_closure(S3):
    with pytest.raises(StructureError):
        subgroup_from_elements(S3, [0, 1, 2])
    assert subgroup_from_elements(S3, [0, 3, 4]).order == 3


def test_homomorphisms_count():
    C2 = catalog_group("C2")
    S3 = catalog_group("S3")
    # trivial plus one per involution
    assert len(homomorphisms(C2, S3)) == 4
    assert len(homomorphisms(S3, C2)) == 2


def test_direct_product_and_diagonal(S3):
    C2 = catalog_group("C2")
    P = direct_product(S3, C2)
    assert P.order == 12
    a = P.from_pair(3, 1)
    assert P.pair(a) == (3, 1)
    assert P.pair(P.mul(a, a)) == (S3.mul(3, 3), 0)
    GG = direct_product(S3, S3)
    D = diagonal(GG, S3.whole)
    assert D.order == 6
    assert is_projection_injective(D, 0) and is_projection_injective(D, 1)
    assert not is_projection_injective(GG.whole, 0)
    with pytest.raises(GroupError):
        S3.pair(1)
