from itertools import product

import pytest

from mot2 import linalg
from mot2.burnside import (
    BRUTE_FORCE_LIMIT,
    brute_force_idempotents,
    burnside_subring,
    center_group_algebra,
    center_to_group_algebra,
    crossed_burnside,
    crossed_burnside_pairs,
    group_algebra_to_center,
    lift_idempotent,
    minimal_polynomial,
    motivic_decomposition_report,
    primitive_idempotents,
    rho,
    rho_via_units,
)
from mot2.errors import FieldError, StructureError
from mot2.groups import catalog_group
from mot2.scalars import Field

Q = Field.rationals()
F2 = Field.prime(2)
F3 = Field.prime(3)


@pytest.fixture
def S3():
    return catalog_group("S3")


def _all_idempotents(A):
    """Exhaustive search written against the structure constants only."""
    elems = A.field.elements()
    found = 0
    for v in product(elems, repeat=A.dim):
        if A.mul(list(v), list(v)) == list(v):
            found += 1
    return found


def test_crossed_burnside_basis_of_s3(S3):
    pairs = crossed_burnside_pairs(S3)
    assert len(pairs) == 8
    assert sorted(p.subgroup.order for p in pairs) == [1, 1, 1, 2, 2, 3, 3, 6]
    A = crossed_burnside(S3, Q)
    assert A.dim == 8
    assert A.unit == A.basis_vector(next(n for n, x in enumerate(A.labels) if x.subgroup.order == 6))


def test_burnside_subring(S3):
    B, inc = burnside_subring(S3, Q)
    assert B.dim == 4
    assert inc(B.unit) == inc.target.unit


def test_center_of_s3(S3):
    Z = center_group_algebra(S3, Q)
    assert Z.dim == 3
    assert Z.unit == [Q(1), Q(0), Q(0)]
    # clase de las transposiciones: T^3 = 9 T
    assert minimal_polynomial(Z, Z.basis_vector(1)) == [Q(0), Q(-9), Q(0), Q(1)]


def test_center_roundtrip(S3):
    Z = center_group_algebra(S3, Q)
    z = [Q(1), Q(2), Q(3)]
    assert group_algebra_to_center(S3, Z, center_to_group_algebra(Z, z)) == z
    with pytest.raises(StructureError):
        group_algebra_to_center(S3, Z, {1: Q(1)})


@pytest.mark.parametrize("field", [Q, F2, F3])
def test_rho_is_a_surjective_algebra_map(S3, field):
    r = rho(S3, field)
    assert r.matrix.shape == (3, 8)
    assert r.rank == 3
    assert r.to_dict()["shape"] == [3, 8]


@pytest.mark.parametrize("field", [Q, F2])
def test_rho_through_adjunction_units(S3, field):
    A = crossed_burnside(S3, field)
    Z = center_group_algebra(S3, field)
    r = rho(S3, field, A, Z)
    for n, x in enumerate(A.labels):
        coeffs = rho_via_units(x.subgroup, x.element, field)
        assert group_algebra_to_center(S3, Z, coeffs) == r.columns[n]


def test_rho_via_units_needs_centralizing_element(S3):
    C3 = next(x.subgroup for x in crossed_burnside_pairs(S3) if x.subgroup.order == 3)
    transposition = 1
    with pytest.raises(StructureError):
        rho_via_units(C3, transposition, Q)


@pytest.mark.parametrize("field,count", [(F3, 1), (F2, 2), (Q, 3)])
def test_block_counts_of_s3(S3, field, count):
    Z = center_group_algebra(S3, field)
    assert len(primitive_idempotents(Z)) == count


@pytest.mark.parametrize("field", [F2, F3])
def test_primitive_idempotents_against_exhaustive_search(S3, field):
    for A in (center_group_algebra(S3, field), crossed_burnside(S3, field)):
        assert _all_idempotents(A) == 2 ** len(primitive_idempotents(A))


@pytest.mark.parametrize("name", ["C2", "C3", "C4", "K4"])
def test_blocks_of_abelian_groups_over_f2(name):
    G = catalog_group(name)
    Z = center_group_algebra(G, F2)
    found = brute_force_idempotents(Z)
    assert len(found) == 2 ** len(primitive_idempotents(Z))


def test_brute_force_limits(S3):
    Z = center_group_algebra(S3, F2)
    assert brute_force_idempotents(Z, limit=4) is None
    assert len(brute_force_idempotents(Z)) == 4
    with pytest.raises(FieldError):
        brute_force_idempotents(center_group_algebra(S3, Q))


def test_oracle_skips_above_default_limit(S3):
    Z = center_group_algebra(S3, Field.prime(47))
    assert BRUTE_FORCE_LIMIT < 47 ** Z.dim <= 10 ** 6
    assert brute_force_idempotents(Z) is None


@pytest.mark.parametrize("field", [Q, F2])
def test_lifts_of_blocks(S3, field):
    A = crossed_burnside(S3, field)
    Z = center_group_algebra(S3, field)
    r = rho(S3, field, A, Z)
    prims = primitive_idempotents(A)
    for b in primitive_idempotents(Z):
        lift = lift_idempotent(b, r, prims)
        assert A.is_idempotent(lift)
        assert r(lift) == b
    assert lift_idempotent(Z.unit, r, prims) == A.unit
    with pytest.raises(StructureError):
        lift_idempotent(Z.basis_vector(1), r, prims)


@pytest.mark.parametrize("field,blocks", [(Q, 3), (F2, 2), (F3, 1)])
def test_decomposition_report(S3, field, blocks):
    rep = motivic_decomposition_report(S3, field)
    assert rep["ok"]
    assert rep["xburnside_dim"] == 8
    assert rep["center_dim"] == 3
    assert rep["rho_rank"] == 3
    assert rep["burnside_subring_dim"] == 4
    assert len(rep["blocks"]) == blocks
    assert rep["burnside_images_trivial"]
    assert all(row["ok"] for row in rep["block_factorization"])


def test_algebra_serialization(S3):
    A = crossed_burnside(S3, F2)
    d = A.to_dict()
    assert d["dim"] == 8 and d["field"] == "Fp:2"
    assert all(t[3] == "Fp:2:1" for t in d["structure"])
    assert linalg.rank(A.multiplication_matrix(A.unit)) == 8
