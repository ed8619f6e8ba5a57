"""
Bimodulos de permutacion k[U] y la linealizacion P (suma sobre fibras).

Las matrices de un BimoduleMap tienen filas indexadas por la base destino y
columnas por la base origen. Un mapa equivariante solo conecta elementos del
mismo tipo (y, x).
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, List, Sequence, Tuple
import logging

from sympy.polys.matrices import DomainMatrix

from mot2 import linalg
from mot2.bisets import Biset, EquivariantMap, tensor, transitive_biset
from mot2.errors import StructureError
from mot2.groupoids import FiniteGroupoid, from_group, trivial_groupoid
from mot2.groups import (
    FiniteGroup,
    Subgroup,
    all_subgroups,
    conjugacy_classes_of_subgroups,
    direct_product,
    double_cosets,
    is_projection_injective,
)
from mot2.scalars import Field, Scalar
from mot2.twocells import TwoCell, delta, twocell_basis, vcompose

log = logging.getLogger("mot2.permbimod")


@dataclass(frozen=True, eq=False)
class PermBimodule:
    basis: Biset
    field: Field

    @property
    def dim(self) -> int:
        return self.basis.size

    @property
    def left(self) -> FiniteGroupoid:
        return self.basis.left

    @property
    def right(self) -> FiniteGroupoid:
        return self.basis.right


@dataclass(frozen=True, eq=False)
class BimoduleMap:
    source: PermBimodule
    target: PermBimodule
    matrix: DomainMatrix

    @cached_property
    def rows(self) -> List[List[Scalar]]:
        return linalg.to_rows(self.matrix)

    def entry(self, v: int, u: int) -> Scalar:
        return self.rows[v][u]

    def verify(self) -> "BimoduleMap":
        U, V = self.source.basis, self.target.basis
        F = self.source.field
        if self.matrix.shape != (V.size, U.size):
            raise StructureError(f"matrix shape {self.matrix.shape} does not match {V.size}x{U.size}")
        rows = self.rows
        nz = [(v, u, rows[v][u]) for v in range(V.size) for u in range(U.size) if not F.is_zero(rows[v][u])]
        for v, u, c in nz:
            if U.types[u] != V.types[v]:
                raise StructureError(f"map mixes types at ({v}, {u})")
        G, H = U.left, U.right
        for v, u, c in nz:
            y, x = U.types[u]
            for g in G.symmetric_generators:
                if G.src[g] == x and rows[V.act_left(g, v)][U.act_left(g, u)] != c:
                    raise StructureError(f"map is not left equivariant at ({v}, {u})")
            for h in H.symmetric_generators:
                if H.tgt[h] == y and rows[V.act_right(v, h)][U.act_right(u, h)] != c:
                    raise StructureError(f"map is not right equivariant at ({v}, {u})")
        return self

    def __matmul__(self, other: "BimoduleMap") -> "BimoduleMap":
        """self o other."""
        return BimoduleMap(other.source, self.target, linalg.matmul(self.matrix, other.matrix))

    def __add__(self, other: "BimoduleMap") -> "BimoduleMap":
        return BimoduleMap(self.source, self.target, self.matrix + other.matrix)

    def is_zero(self) -> bool:
        return linalg.is_zero(self.matrix)

    def equals(self, other: "BimoduleMap") -> bool:
        return linalg.equal(self.matrix, other.matrix)

    def flatten(self, coords: Sequence[Tuple[int, int]]) -> List[Scalar]:
        rows = self.rows
        return [rows[v][u] for v, u in coords]

    def to_dict(self) -> Dict[str, Any]:
        F = self.source.field
        B = self.target.basis
        return {
            "field": F.spec,
            "shape": list(self.matrix.shape),
            "row_types": [list(B.types[v]) for v in range(B.size)],
            "col_types": [list(self.source.basis.types[u]) for u in range(self.source.basis.size)],
            "entries": [[v, u, F.format(c)] for v, row in enumerate(self.rows) for u, c in enumerate(row) if not F.is_zero(c)],
        }


def linearize_1cell(U: Biset, field: Field) -> PermBimodule:
    return PermBimodule(U, field)


def _from_entries(M: PermBimodule, N: PermBimodule, entries: Dict[int, Dict[int, Scalar]]) -> BimoduleMap:
    F = M.field
    mat = linalg.sparse_matrix(entries, (N.dim, M.dim), F).to_dense()
    return BimoduleMap(M, N, mat)


def linearize_map(alpha: EquivariantMap, field: Field) -> BimoduleMap:
    M, N = PermBimodule(alpha.source, field), PermBimodule(alpha.target, field)
    entries: Dict[int, Dict[int, Scalar]] = {}
    for u, v in enumerate(alpha.mapping):
        entries.setdefault(v, {})[u] = field.one
    return _from_entries(M, N, entries)


def identity_bimodule_map(M: PermBimodule) -> BimoduleMap:
    return BimoduleMap(M, M, linalg.identity(M.dim, M.field))


# ---------------------------------
# P: suma sobre fibras
# ---------------------------------
def P_on_span(W: Biset, beta: EquivariantMap, alpha: EquivariantMap, field: Field, coeff: Scalar = None) -> BimoduleMap:
    """u -> sum over w in beta^-1(u) of alpha(w)."""
    c = field.one if coeff is None else coeff
    entries: Dict[int, Dict[int, Scalar]] = {}
    for w in W.elements:
        row = entries.setdefault(alpha(w), {})
        row[beta(w)] = row.get(beta(w), field.zero) + c
    return _from_entries(PermBimodule(beta.target, field), PermBimodule(alpha.target, field), entries)


def P_on_2cell(t: TwoCell) -> BimoduleMap:
    F = t.field
    M, N = PermBimodule(t.source, F), PermBimodule(t.target, F)
    entries: Dict[int, Dict[int, Scalar]] = {}
    for c, W, beta, alpha in t.spans():
        for w in W.elements:
            row = entries.setdefault(alpha(w), {})
            row[beta(w)] = row.get(beta(w), F.zero) + c
    return _from_entries(M, N, entries)


def whiskered_matrix(X: Biset, f: BimoduleMap, side: str) -> BimoduleMap:
    """id_X (x) f on k[X x U] -> k[X x V] (side='left') or f (x) id_X (side='right')."""
    U, V = f.source.basis, f.target.basis
    F = f.source.field
    if side == "left":
        src, tgt = tensor(X, U), tensor(X, V)
    elif side == "right":
        src, tgt = tensor(U, X), tensor(V, X)
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    q = tgt.provenance.quotient
    rows = f.rows
    entries: Dict[int, Dict[int, Scalar]] = {}
    for col, (a, b) in enumerate(src.labels):
        u = b if side == "left" else a
        for v in range(V.size):
            c = rows[v][u]
            if F.is_zero(c):
                continue
            t = q[(a, v)] if side == "left" else q[(v, b)]
            row = entries.setdefault(t, {})
            row[col] = row.get(col, F.zero) + c
    return _from_entries(PermBimodule(src, F), PermBimodule(tgt, F), entries)


def tensor_compatibility(U: Biset, V: Biset, field: Field) -> Dict[str, int]:
    """
    dim k[U] (x)_H k[V] from the defining relations (u.h) (x) v - u (x) (h.v),
    compared with |U x_H V|.
    """
    H = U.right
    pairs = [(u, v) for y in H.objects for u in U.by_right_obj.get(y, []) for v in V.by_left_obj.get(y, [])]
    pos = {p: n for n, p in enumerate(pairs)}
    rels: Dict[int, Dict[int, Scalar]] = {}
    for u in U.elements:
        y = U.right_obj(u)
        for h in H.symmetric_generators:
            if H.tgt[h] != y:
                continue
            uh = U.act_right(u, h)
            for v in V.by_left_obj.get(H.src[h], []):
                a, b = pos[(uh, v)], pos[(u, V.act_left(h, v))]
                if a != b:
                    r = len(rels)
                    rels[r] = {a: field.one, b: -field.one}
    relation_rank = linalg.rank(linalg.sparse_matrix(rels, (len(rels), len(pairs)), field)) if rels else 0
    return {"pairs": len(pairs), "relation_rank": relation_rank,
            "quotient_dim": len(pairs) - relation_rank, "tensor_size": tensor(U, V).size}


# ---------------------------------
# Espacios Hom
# ---------------------------------
@dataclass(frozen=True, eq=False)
class HomSpace:
    source: PermBimodule
    target: PermBimodule
    coords: Tuple[Tuple[int, int], ...]
    vectors: Tuple[Tuple[Scalar, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def maps(self) -> List[BimoduleMap]:
        out = []
        for vec in self.vectors:
            entries: Dict[int, Dict[int, Scalar]] = {}
            for (v, u), c in zip(self.coords, vec):
                if not self.source.field.is_zero(c):
                    entries.setdefault(v, {})[u] = c
            out.append(_from_entries(self.source, self.target, entries))
        return out

    def coordinates_of(self, f: BimoduleMap) -> List[Scalar]:
        coords = linalg.coordinates([list(v) for v in self.vectors], f.flatten(self.coords), self.source.field)
        if coords is None:
            raise StructureError("map is not in the Hom space")
        return coords


def same_type_coords(U: Biset, V: Biset) -> Tuple[Tuple[int, int], ...]:
    return tuple((v, u) for v in V.elements for u in U.elements if U.types[u] == V.types[v])


def hom_space(M: PermBimodule, N: PermBimodule) -> HomSpace:
    """Equivariant maps M -> N: nullspace of X[g v][g u] - X[v][u] over the generators."""
    U, V = M.basis, N.basis
    F = M.field
    if not (U.left.same_as(V.left) and U.right.same_as(V.right)):
        raise StructureError("hom_space needs bimodules over the same groupoids")
    coords = same_type_coords(U, V)
    pos = {c: n for n, c in enumerate(coords)}
    G, H = U.left, U.right
    eqs: Dict[int, Dict[int, Scalar]] = {}
    for (v, u), n in pos.items():
        y, x = U.types[u]
        moves = [(V.act_left(g, v), U.act_left(g, u)) for g in G.symmetric_generators if G.src[g] == x]
        moves += [(V.act_right(v, h), U.act_right(u, h)) for h in H.symmetric_generators if H.tgt[h] == y]
        for target in moves:
            m = pos[target]
            if m != n:
                eqs[len(eqs)] = {m: F.one, n: -F.one}
    if not coords:
        return HomSpace(M, N, coords, ())
    system = linalg.sparse_matrix(eqs, (len(eqs), len(coords)), F)
    null = linalg.sparse_nullspace(system)
    basis = linalg.row_basis(null, len(coords), F)
    log.info("hom_space %s -> %s: %d unknowns, %d equations, dim %d", U.name, V.name, len(coords), len(eqs), len(basis))
    return HomSpace(M, N, coords, tuple(tuple(b) for b in basis))


# ---------------------------------
# Base de dobles coclases
# ---------------------------------
def coset_gset(G: FiniteGroup, K: Subgroup) -> Biset:
    """G/K as a G,1-biset."""
    GxT = direct_product(G, trivial_groupoid().group)
    M = Subgroup(GxT, tuple(sorted(GxT.from_pair(k, 0) for k in K.elements)))
    return transitive_biset(from_group(G), trivial_groupoid(), M)


def double_coset_basis(G: FiniteGroup, K: Subgroup, L: Subgroup, field: Field) -> List[BimoduleMap]:
    """One map k[G/K] -> k[G/L] per gamma in K\\G/L: [x] -> sum of the distinct [y gamma] with yK = xK."""
    src, tgt = coset_gset(G, K), coset_gset(G, L)
    M, N = PermBimodule(src, field), PermBimodule(tgt, field)
    base_t = tgt.label_index[(0, 0)]
    out = []
    for gamma in double_cosets(G, K, L):
        entries: Dict[int, Dict[int, Scalar]] = {}
        for col, (x, _) in enumerate(src.labels):
            images = {tgt.act_left(G.mul(G.mul(x, k), gamma), base_t) for k in K.elements}
            for t in images:
                entries.setdefault(t, {})[col] = field.one
        out.append(_from_entries(M, N, entries))
    return out


def rank_formula_check(G: FiniteGroup, K: Subgroup, L: Subgroup, field: Field) -> Dict[str, Any]:
    """dim Hom(k[G/K], k[G/L]) against |K\\G/L|, with the double-coset maps as a basis."""
    M, N = PermBimodule(coset_gset(G, K), field), PermBimodule(coset_gset(G, L), field)
    hs = hom_space(M, N)
    dcb = double_coset_basis(G, K, L, field)
    for f in dcb:
        f.verify()
    vecs = [f.flatten(hs.coords) for f in dcb]
    r = linalg.span_rank(vecs, len(hs.coords), field)
    inside = all(linalg.in_span([list(v) for v in hs.vectors], v, field) for v in vecs)
    n = len(double_cosets(G, K, L))
    return {"hom_dim": hs.dim, "double_cosets": n, "basis_rank": r,
            "ok": hs.dim == n and r == n and inside}


# ---------------------------------
# Plenitud de P y nucleo
# ---------------------------------
def verify_P_fullness(U: Biset, V: Biset, field: Field) -> Dict[str, Any]:
    """P-images of the transitive spans U <= W => V against Hom(k[U], k[V])."""
    M, N = PermBimodule(U, field), PermBimodule(V, field)
    hs = hom_space(M, N)
    basis = twocell_basis(U, V, field)
    images = [P_on_2cell(t).flatten(hs.coords) for t in basis]
    r = linalg.span_rank(images, len(hs.coords), field)
    return {"hom_dim": hs.dim, "twocell_dim": len(basis), "image_rank": r, "full": r == hs.dim}


def cell_vector(t: TwoCell, keys: Sequence) -> List[Scalar]:
    pos = {k: n for n, k in enumerate(keys)}
    F = t.field
    vec = [F.zero] * len(keys)
    for k, c in t.terms.items():
        vec[pos[k]] = c
    return vec


def delta_family(G1: FiniteGroupoid, G2: FiniteGroupoid, field: Field) -> List[TwoCell]:
    """delta(G1, G2, M, N) for N up to conjugacy with pr1 injective and every M <= N."""
    GxH = direct_product(G1.group, G2.group)
    subs = all_subgroups(GxH)
    out = []
    for N in conjugacy_classes_of_subgroups(GxH):
        if not is_projection_injective(N, 0):
            continue
        for M in subs:
            if M.is_subgroup_of(N) and M != N:
                out.append(delta(G1, G2, M, N, field))
    return out


def yoshida_kernel_check(U: Biset, V: Biset, field: Field) -> Dict[str, Any]:
    """
    Kernel of P on 2-cells U => V against the span of post o delta o pre.
    Both sides live in the coordinates of the transitive-span basis. A single
    pass over the basis suffices: the span of post o delta o pre is already
    closed under further pre- and post-composition.
    """
    basis = twocell_basis(U, V, field)
    keys = [next(iter(t.terms)) for t in basis]
    coords = same_type_coords(U, V)
    cols = [P_on_2cell(t).flatten(coords) for t in basis]
    # columnas: imagenes de la base; nucleo en coordenadas de la base
    A = linalg.from_columns(cols, len(coords), field) if coords else linalg.zeros(0, len(basis), field)
    kernel = linalg.nullspace(A) if basis else []
    ideal = []
    for d in delta_family(U.left, U.right, field):
        X = d.source
        for pre in twocell_basis(U, X, field):
            dpre = vcompose(d, pre)
            if dpre.is_zero():
                continue
            for post in twocell_basis(X, V, field):
                cell = vcompose(post, dpre)
                if not cell.is_zero():
                    ideal.append(cell_vector(cell, keys))
    n = len(basis)
    ideal_rank = linalg.span_rank(ideal, n, field)
    in_kernel = all(all(field.is_zero(e) for e in linalg.apply(A, v)) for v in ideal)
    contains = all(linalg.in_span(ideal, k, field) for k in kernel) if kernel else True
    return {"twocell_dim": n, "kernel_dim": len(kernel), "ideal_dim": ideal_rank,
            "ideal_in_kernel": in_kernel, "kernel_in_ideal": contains}
