"""
Algebra de Burnside cruzada xBur_k(G), centro Z(kG), el morfismo rho_G,
idempotentes primitivos (bloques) y su levantamiento.

Las algebras se guardan por constantes de estructura sobre una base con
etiquetas; los elementos son listas de coordenadas en esa base.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Any, Dict, List, Optional, Sequence, Tuple
import logging
import random

from sympy import factor_list, gcdex

from mot2 import linalg
from mot2.bisets import EquivariantMap
from mot2.errors import FieldError, StructureError
from mot2.groups import (
    FiniteGroup,
    Subgroup,
    all_subgroups,
    centralizer,
    conjugacy_classes,
    conjugacy_classes_of_subgroups,
    conjugate,
    coset_representatives,
    double_cosets,
    intersection,
)
from mot2.permbimod import P_on_2cell, coset_gset, hom_space, linearize_map, PermBimodule
from mot2.scalars import Field, Scalar
from mot2.twocells import adjunction_units

log = logging.getLogger("mot2.burnside")

Vector = List[Scalar]

# limite del oraculo de fuerza bruta (numero de elementos del algebra)
BRUTE_FORCE_LIMIT = 10 ** 5


# ---------------------------------
# Algebras conmutativas
# ---------------------------------
@dataclass(eq=False)
class CommutativeAlgebra:
    name: str
    field: Field
    labels: List[Any]
    # (i, j) -> {k: c_ij^k}
    structure: Dict[Tuple[int, int], Dict[int, Scalar]]
    unit: Vector

    @property
    def dim(self) -> int:
        return len(self.labels)

    def basis_vector(self, i: int) -> Vector:
        F = self.field
        return [F.one if k == i else F.zero for k in range(self.dim)]

    def zero(self) -> Vector:
        return [self.field.zero] * self.dim

    def add(self, a: Sequence[Scalar], b: Sequence[Scalar]) -> Vector:
        return [x + y for x, y in zip(a, b)]

    def sub(self, a: Sequence[Scalar], b: Sequence[Scalar]) -> Vector:
        return [x - y for x, y in zip(a, b)]

    def scale(self, c: Scalar, a: Sequence[Scalar]) -> Vector:
        return [c * x for x in a]

    def mul(self, a: Sequence[Scalar], b: Sequence[Scalar]) -> Vector:
        F = self.field
        out = self.zero()
        nz_a = [(i, x) for i, x in enumerate(a) if not F.is_zero(x)]
        nz_b = [(j, y) for j, y in enumerate(b) if not F.is_zero(y)]
        for i, x in nz_a:
            for j, y in nz_b:
                xy = x * y
                for k, c in self.structure.get((i, j), {}).items():
                    out[k] = out[k] + xy * c
        return out

    def power(self, a: Sequence[Scalar], n: int) -> Vector:
        result, base = list(self.unit), list(a)
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def is_zero(self, a: Sequence[Scalar]) -> bool:
        return all(self.field.is_zero(x) for x in a)

    def is_idempotent(self, a: Sequence[Scalar]) -> bool:
        return self.mul(a, a) == list(a)

    def multiplication_matrix(self, a: Sequence[Scalar]):
        """Matrix of x -> a x (columns are images of the basis)."""
        cols = [self.mul(a, self.basis_vector(j)) for j in range(self.dim)]
        return linalg.from_columns(cols, self.dim, self.field)

    def verify(self) -> "CommutativeAlgebra":
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                if self.structure.get((i, j), {}) != self.structure.get((j, i), {}):
                    raise StructureError(f"{self.name}: not commutative at ({i}, {j})")
        for i in range(n):
            e = self.basis_vector(i)
            if self.mul(self.unit, e) != e:
                raise StructureError(f"{self.name}: unit law fails at {i}")
        products = {(i, j): self.mul(self.basis_vector(i), self.basis_vector(j)) for i in range(n) for j in range(n)}
        for i in range(n):
            for j in range(n):
                for k in range(j, n):
                    lhs = self.mul(products[(i, j)], self.basis_vector(k))
                    rhs = self.mul(self.basis_vector(i), products[(j, k)])
                    if lhs != rhs:
                        raise StructureError(f"{self.name}: not associative at ({i}, {j}, {k})")
        return self

    def format(self, a: Sequence[Scalar]) -> List[str]:
        return [self.field.format(x) for x in a]

    def to_dict(self) -> Dict[str, Any]:
        F = self.field
        triples = [[i, j, k, F.format(c)] for (i, j), row in sorted(self.structure.items())
                   for k, c in sorted(row.items()) if not F.is_zero(c)]
        return {"name": self.name, "field": F.spec, "dim": self.dim, "labels": [repr(l) for l in self.labels],
                "unit": self.format(self.unit), "structure": triples}


@dataclass(eq=False)
class AlgebraHom:
    source: CommutativeAlgebra
    target: CommutativeAlgebra
    # filas: base destino; columnas: base origen
    columns: List[Vector]

    @cached_property
    def matrix(self):
        return linalg.from_columns(self.columns, self.target.dim, self.source.field)

    def __call__(self, a: Sequence[Scalar]) -> Vector:
        F = self.source.field
        out = self.target.zero()
        for j, c in enumerate(a):
            if not F.is_zero(c):
                out = self.target.add(out, self.target.scale(c, self.columns[j]))
        return out

    @cached_property
    def rank(self) -> int:
        return linalg.rank(self.matrix)

    def verify(self) -> "AlgebraHom":
        S, T = self.source, self.target
        if self(S.unit) != T.unit:
            raise StructureError("homomorphism is not unital")
        for i in range(S.dim):
            for j in range(i, S.dim):
                lhs = self(S.mul(S.basis_vector(i), S.basis_vector(j)))
                rhs = T.mul(self.columns[i], self.columns[j])
                if lhs != rhs:
                    raise StructureError(f"homomorphism is not multiplicative at ({i}, {j})")
        return self

    def to_dict(self) -> Dict[str, Any]:
        F = self.source.field
        return {"source": self.source.name, "target": self.target.name, "field": F.spec,
                "shape": [self.target.dim, self.source.dim],
                "matrix": [[F.format(x) for x in row] for row in linalg.to_rows(self.matrix)]}


# ---------------------------------
# xBur_k(G)
# ---------------------------------
@dataclass(frozen=True)
class XBurBasisElement:
    """[H, a]_G with a in C_G(H); canonical within its G-orbit."""

    subgroup: Subgroup
    element: int

    def __repr__(self) -> str:
        G = self.subgroup.parent
        return f"[{self.subgroup.order}:{list(self.subgroup.elements)}, {G.cycles(self.element)}]"


def _pair_orbit(G: FiniteGroup, H: Subgroup, a: int) -> List[Tuple[Subgroup, int]]:
    return [(conjugate(H, g), G.conj(g, a)) for g in range(G.order)]


def _pair_sort_key(pair: Tuple[Subgroup, int]) -> Tuple:
    H, a = pair
    return (H.order, H.key, a)


def canonical_pair(G: FiniteGroup, H: Subgroup, a: int) -> Tuple[Subgroup, int]:
    return min(_pair_orbit(G, H, a), key=_pair_sort_key)


def crossed_burnside_pairs(G: FiniteGroup) -> List[XBurBasisElement]:
    seen = set()
    reps = []
    for H in all_subgroups(G):
        for a in centralizer(G, H).elements:
            if (H, a) in seen:
                continue
            orbit = _pair_orbit(G, H, a)
            seen.update(orbit)
            reps.append(min(orbit, key=_pair_sort_key))
    reps.sort(key=_pair_sort_key)
    return [XBurBasisElement(H, a) for H, a in reps]


def crossed_burnside(G: FiniteGroup, field: Field) -> CommutativeAlgebra:
    """[K, b] [H, a] = sum over g in K\\G/H of [K n gHg^-1, b g a g^-1]."""
    basis = crossed_burnside_pairs(G)
    pos = {(x.subgroup, x.element): n for n, x in enumerate(basis)}
    structure: Dict[Tuple[int, int], Dict[int, Scalar]] = {}
    for i, x in enumerate(basis):
        K, b = x.subgroup, x.element
        for j, y in enumerate(basis):
            H, a = y.subgroup, y.element
            row: Dict[int, Scalar] = {}
            for g in double_cosets(G, K, H):
                L = intersection(K, conjugate(H, g))
                c = G.mul(b, G.conj(g, a))
                k = pos[canonical_pair(G, L, c)]
                row[k] = row.get(k, field.zero) + field.one
            structure[(i, j)] = {k: v for k, v in row.items() if not field.is_zero(v)}
    unit_index = pos[(G.whole, 0)]
    A = CommutativeAlgebra(f"xBur({G.name})", field, basis, structure, [field.zero] * len(basis))
    A.unit = A.basis_vector(unit_index)
    log.info("xBur(%s) over %s: dimension %d", G.name, field.spec, A.dim)
    return A.verify()


def burnside_subring(G: FiniteGroup, field: Field, xbur: Optional[CommutativeAlgebra] = None
                     ) -> Tuple[CommutativeAlgebra, AlgebraHom]:
    """The [H, 1] span, with its inclusion into xBur_k(G)."""
    A = xbur or crossed_burnside(G, field)
    idx = [n for n, x in enumerate(A.labels) if x.element == 0]
    pos = {n: m for m, n in enumerate(idx)}
    structure = {}
    for m1, i in enumerate(idx):
        for m2, j in enumerate(idx):
            row = A.structure.get((i, j), {})
            if any(k not in pos for k in row):
                raise StructureError("Burnside subring is not closed under multiplication")
            structure[(m1, m2)] = {pos[k]: c for k, c in row.items()}
    B = CommutativeAlgebra(f"Bur({G.name})", field, [A.labels[i] for i in idx], structure,
                           [A.unit[i] for i in idx]).verify()
    inclusion = AlgebraHom(B, A, [A.basis_vector(i) for i in idx]).verify()
    return B, inclusion


# ---------------------------------
# Z(kG) y rho_G
# ---------------------------------
def center_group_algebra(G: FiniteGroup, field: Field) -> CommutativeAlgebra:
    """Class sums C_i, with C_i C_j = sum_k #{(x, y) in C_i x C_j : xy = z_k} C_k."""
    classes = conjugacy_classes(G)
    cls_of = {g: n for n, c in enumerate(classes) for g in c}
    structure: Dict[Tuple[int, int], Dict[int, Scalar]] = {}
    for i, ci in enumerate(classes):
        for j, cj in enumerate(classes):
            counts: Dict[int, int] = {}
            for x in ci:
                for y in cj:
                    z = G.mul(x, y)
                    k = cls_of[z]
                    if z == classes[k][0]:
                        counts[k] = counts.get(k, 0) + 1
            structure[(i, j)] = {k: field(v) for k, v in counts.items() if not field.is_zero(field(v))}
    A = CommutativeAlgebra(f"Z({G.name})", field, [tuple(c) for c in classes], structure,
                           [field.one if 0 in c else field.zero for c in classes])
    return A.verify()


def group_algebra_to_center(G: FiniteGroup, Z: CommutativeAlgebra, coeffs: Dict[int, Scalar]) -> Vector:
    """Central element of kG (as {g: coefficient}) in class-sum coordinates."""
    F = Z.field
    out = []
    for cls in Z.labels:
        vals = {coeffs.get(g, F.zero) for g in cls}
        if len(vals) != 1:
            raise StructureError("element is not central")
        out.append(vals.pop())
    return out


def center_to_group_algebra(Z: CommutativeAlgebra, z: Sequence[Scalar]) -> Dict[int, Scalar]:
    return {g: c for cls, c in zip(Z.labels, z) for g in cls}


def rho(G: FiniteGroup, field: Field, xbur: Optional[CommutativeAlgebra] = None,
        center: Optional[CommutativeAlgebra] = None) -> AlgebraHom:
    """[H, a] -> sum over x in G/H of x a x^-1."""
    A = xbur or crossed_burnside(G, field)
    Z = center or center_group_algebra(G, field)
    cols = []
    for x in A.labels:
        coeffs: Dict[int, Scalar] = {}
        for r in coset_representatives(G, x.subgroup):
            g = G.conj(r, x.element)
            coeffs[g] = coeffs.get(g, field.zero) + field.one
        cols.append(group_algebra_to_center(G, Z, coeffs))
    hom = AlgebraHom(A, Z, cols).verify()
    if hom.rank != Z.dim:
        raise StructureError(f"rho_{G.name} is not surjective: rank {hom.rank} < {Z.dim}")
    return hom


def rho_via_units(H: Subgroup, a: int, field: Field) -> Dict[int, Scalar]:
    """
    rho([H, a]) recomputed as eps^l o Ind(gamma_a) o eta^r applied to 1 in kG,
    on the linearized units of i_! -| i^* for H <= G.
    """
    G = H.parent
    if any(G.mul(a, h) != G.mul(h, a) for h in H.elements):
        raise StructureError("a does not centralize H")
    units = adjunction_units(H, field)
    ind, res = units.induction, units.restriction
    GHG = units.mu.source
    q = GHG.provenance.quotient
    # [g1, g2] -> [g1 a, g2]
    twist = EquivariantMap(GHG, GHG, tuple(q[(ind.label_index[(0, 0, G.mul(ind.labels[t][2], a))], s)]
                                           for t, s in GHG.labels)).verify()
    composite = linearize_map(units.mu, field) @ linearize_map(twist, field) @ P_on_2cell(units.eta_r)
    one = units.id_G.label_index[0]
    column = [row[one] for row in composite.rows]
    return {units.id_G.labels[g]: c for g, c in enumerate(column) if not field.is_zero(c)}


# ---------------------------------
# Idempotentes
# ---------------------------------
def minimal_polynomial(A: CommutativeAlgebra, x: Sequence[Scalar], e: Optional[Sequence[Scalar]] = None) -> List[Scalar]:
    """Minimal polynomial of x in the unital algebra eA (unit ``e``), low degree first."""
    F = A.field
    unit = list(e) if e is not None else list(A.unit)
    powers = [unit]
    while True:
        nxt = A.mul(powers[-1], x)
        coords = linalg.coordinates(powers, nxt, F)
        if coords is not None:
            return [-c for c in coords] + [F.one]
        powers.append(nxt)


def evaluate(A: CommutativeAlgebra, coeffs_low: Sequence[Scalar], x: Sequence[Scalar],
             e: Optional[Sequence[Scalar]] = None) -> Vector:
    """Horner evaluation in eA."""
    unit = list(e) if e is not None else list(A.unit)
    out = A.zero()
    for c in reversed(coeffs_low):
        out = A.add(A.mul(out, x), A.scale(c, unit))
    return out


def _split_by(A: CommutativeAlgebra, x: Sequence[Scalar], e: Sequence[Scalar]) -> List[Vector]:
    """Idempotents of eA cut out by the coprime factors of the minimal polynomial of x e."""
    F = A.field
    xe = A.mul(x, e)
    m_coeffs = minimal_polynomial(A, xe, e)
    m = F.poly(list(reversed(m_coeffs)))
    _, factors = factor_list(m)
    if len(factors) <= 1:
        return [list(e)]
    out = []
    for f, k in factors:
        fk = f ** k
        g = m.exquo(fk)
        s, t, h = gcdex(fk, g)
        if h.degree() != 0:
            raise StructureError("factors of the minimal polynomial are not coprime")
        q = (t * g).rem(m)
        out.append(evaluate(A, F.poly_coeffs(q), xe, e))
    return out


def _frobenius_fixed(A: CommutativeAlgebra) -> List[Vector]:
    """Basis of {x : x^p = x}, an F_p-subalgebra isomorphic to F_p^(number of blocks)."""
    F = A.field
    p = F.p
    cols = []
    for j in range(A.dim):
        b = A.basis_vector(j)
        fb = A.power(b, p)
        cols.append(A.sub(fb, b))
    M = linalg.from_columns(cols, A.dim, F)
    return linalg.nullspace(M)


def _refine(A: CommutativeAlgebra, idems: List[Vector], elements: Sequence[Sequence[Scalar]]) -> List[Vector]:
    for x in elements:
        nxt = []
        for e in idems:
            nxt.extend(_split_by(A, x, e))
        idems = nxt
    return idems


def _ideal_dim(A: CommutativeAlgebra, e: Sequence[Scalar]) -> int:
    return linalg.rank(A.multiplication_matrix(e))


def primitive_idempotents(A: CommutativeAlgebra, seed: int = 0, max_tries: int = 64) -> List[Vector]:
    """
    Complete set of orthogonal primitive idempotents.

    Over F_p: split along the Frobenius-fixed subalgebra, where every minimal
    polynomial is a product of distinct linear factors. Over Q: the algebra
    must be semisimple; each eA is split by a primitive element until it is a
    field.
    """
    F = A.field
    if A.dim == 0:
        return []
    if F.is_prime_field:
        fixed = _frobenius_fixed(A)
        idems = _refine(A, [list(A.unit)], fixed)
        if len(idems) != len(fixed):
            raise StructureError(f"cannot split {A.name}: {len(idems)} idempotents for {len(fixed)} blocks")
    else:
        trace_form = [[F.zero for _ in range(A.dim)] for _ in range(A.dim)]
        mats = [A.multiplication_matrix(A.basis_vector(i)) for i in range(A.dim)]
        for i in range(A.dim):
            for j in range(A.dim):
                prod = linalg.to_rows(linalg.matmul(mats[i], mats[j]))
                tr = F.zero
                for k in range(A.dim):
                    tr = tr + prod[k][k]
                trace_form[i][j] = tr
        if linalg.rank(linalg.matrix(trace_form, F)) != A.dim:
            raise StructureError(f"cannot split {A.name}: not semisimple over Q")
        rng = random.Random(seed)
        idems = [list(A.unit)]
        done: List[Vector] = []
        while idems:
            e = idems.pop()
            d = _ideal_dim(A, e)
            for _ in range(max_tries):
                x = [F(rng.randint(-3, 3)) for _ in range(A.dim)]
                xe = A.mul(x, e)
                if len(minimal_polynomial(A, xe, e)) - 1 == d:
                    break
            else:
                raise StructureError(f"cannot split {A.name}: no primitive element found")
            parts = _split_by(A, xe, e)
            if len(parts) == 1:
                done.append(e)
            else:
                idems.extend(parts)
        idems = done
    idems = sorted(idems, key=lambda v: [F.format(c) for c in v])
    _check_complete(A, idems)
    log.info("%s over %s: %d primitive idempotents", A.name, F.spec, len(idems))
    return idems


def _check_complete(A: CommutativeAlgebra, idems: Sequence[Vector]) -> None:
    total = A.zero()
    for n, e in enumerate(idems):
        if not A.is_idempotent(e) or A.is_zero(e):
            raise StructureError(f"{A.name}: element {n} is not a nonzero idempotent")
        for f in idems[n + 1:]:
            if not A.is_zero(A.mul(e, f)):
                raise StructureError(f"{A.name}: idempotents are not orthogonal")
        total = A.add(total, e)
    if total != list(A.unit):
        raise StructureError(f"{A.name}: idempotents do not sum to 1")


def brute_force_idempotents(A: CommutativeAlgebra, limit: int = BRUTE_FORCE_LIMIT) -> Optional[List[Vector]]:
    """All idempotents of a finite algebra, or None above ``limit`` elements."""
    F = A.field
    if not F.is_prime_field:
        raise FieldError("brute force needs a finite field")
    if F.p ** A.dim > limit:
        return None
    elems = F.elements()
    return [list(v) for v in product(elems, repeat=A.dim) if A.is_idempotent(list(v))]


def lift_idempotent(e: Sequence[Scalar], hom: AlgebraHom, source_idempotents: Optional[List[Vector]] = None) -> Vector:
    """
    Idempotent of the source mapping to ``e``: the sum of the primitive
    idempotents whose image lies under ``e``. Primitive idempotents in the
    kernel go with the lift of 1.
    """
    A, Z = hom.source, hom.target
    if not Z.is_idempotent(e):
        raise StructureError("lift_idempotent needs an idempotent")
    prims = source_idempotents if source_idempotents is not None else primitive_idempotents(A)
    is_one = list(e) == list(Z.unit)
    lift = A.zero()
    for E in prims:
        image = hom(E)
        if Z.is_zero(image):
            if is_one:
                lift = A.add(lift, E)
            continue
        if Z.mul(image, e) == image:
            lift = A.add(lift, E)
    if hom(lift) != list(e):
        raise StructureError("idempotent does not lift along the homomorphism")
    return lift


# ---------------------------------
# Informe de descomposicion
# ---------------------------------
def block_action(G: FiniteGroup, Z: CommutativeAlgebra, z: Sequence[Scalar], Y) -> List[List[Scalar]]:
    """Matrix of a central element acting on k[Y] (rows, columns indexed by Y)."""
    F = Z.field
    coeffs = center_to_group_algebra(Z, z)
    mat = [[F.zero] * Y.size for _ in range(Y.size)]
    for g, c in coeffs.items():
        if F.is_zero(c):
            continue
        for y in Y.elements:
            t = Y.act_left(g, y)
            mat[t][y] = mat[t][y] + c
    return mat


def block_factorization(G: FiniteGroup, field: Field, blocks: Sequence[Vector], Z: CommutativeAlgebra) -> List[Dict[str, Any]]:
    """Hom(k[G/K], k[G/L]) = sum of b Hom over the blocks b, orthogonally."""
    reps = conjugacy_classes_of_subgroups(G)
    out = []
    for K in reps:
        for L in reps:
            X, Y = coset_gset(G, K), coset_gset(G, L)
            hs = hom_space(PermBimodule(X, field), PermBimodule(Y, field))
            coords = hs.coords
            pos = {c: n for n, c in enumerate(coords)}
            acts = [block_action(G, Z, b, Y) for b in blocks]

            def act(mat, vec):
                res = [field.zero] * len(coords)
                for (v, u), n in pos.items():
                    acc = field.zero
                    for w in Y.elements:
                        c = mat[v][w]
                        if not field.is_zero(c):
                            acc = acc + c * vec[pos[(w, u)]]
                    res[n] = acc
                return res

            dims = []
            ok = True
            basis = [list(v) for v in hs.vectors]
            for n, M in enumerate(acts):
                piece = [act(M, v) for v in basis]
                dims.append(linalg.span_rank(piece, len(coords), field))
                for v in piece:
                    if not linalg.in_span(basis, v, field):
                        ok = False
                    for m, M2 in enumerate(acts):
                        if m != n and any(not field.is_zero(c) for c in act(M2, v)):
                            ok = False
            for v in basis:
                s = [field.zero] * len(coords)
                for M in acts:
                    s = [a + b for a, b in zip(s, act(M, v))]
                if s != v:
                    ok = False
            ok = ok and sum(dims) == hs.dim
            out.append({"K": K.order, "L": L.order, "hom_dim": hs.dim, "block_dims": dims, "ok": ok})
    return out


def motivic_decomposition_report(G: FiniteGroup, field: Field, seed: int = 0) -> Dict[str, Any]:
    """
    General motives (primitive idempotents of xBur), cohomological motives
    (blocks of Z(kG)), the rho-images regrouped by block, the lifts, the
    Burnside-subring images and the block factorization on permutation modules.
    """
    A = crossed_burnside(G, field)
    Z = center_group_algebra(G, field)
    r = rho(G, field, A, Z)
    xprims = primitive_idempotents(A, seed)
    blocks = primitive_idempotents(Z, seed)

    general = []
    for E in xprims:
        image = r(E)
        under = [n for n, b in enumerate(blocks) if not Z.is_zero(image) and Z.mul(image, b) == b]
        general.append({"idempotent": A.format(E), "rho": Z.format(image), "blocks": under})

    lifts = []
    for n, b in enumerate(blocks):
        lift = lift_idempotent(b, r, xprims)
        lifts.append({"block": n, "idempotent": Z.format(b), "lift": A.format(lift),
                      "lift_is_idempotent": A.is_idempotent(lift)})

    B, inc = burnside_subring(G, field, A)
    bprims = primitive_idempotents(B, seed)
    bur_images = []
    for E in bprims:
        image = r(inc(E))
        bur_images.append(Z.format(image))
    bur_ok = all(Z.is_zero(r(inc(E))) or r(inc(E)) == list(Z.unit) for E in bprims)

    factorization = block_factorization(G, field, blocks, Z)
    ok = bur_ok and all(row["ok"] for row in factorization) and all(l["lift_is_idempotent"] for l in lifts)
    return {
        "group": G.name,
        "field": field.spec,
        "xburnside_dim": A.dim,
        "center_dim": Z.dim,
        "rho_rank": r.rank,
        "general_motives": general,
        "blocks": [Z.format(b) for b in blocks],
        "lifts": lifts,
        "burnside_subring_dim": B.dim,
        "burnside_idempotent_images": bur_images,
        "burnside_images_trivial": bur_ok,
        "block_factorization": factorization,
        "ok": ok,
    }
