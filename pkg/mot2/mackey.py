"""
Funtores de Mackey ordinarios (caso G-local).

Un G-conjunto es un G,1-biset. Los spans de G-conjuntos son 2-celdas entre
G,1-bisets, asi que la categoria de spans Sp_k(G) reutiliza ``twocells`` y
el funtor de Yoshida es la linealizacion P.

Los valores M(H) = Hom_{kH}(k[X], k[Y]) se guardan como subespacios de las
matrices |Y| x |X|; la restriccion es entonces la inclusion de subespacios.
"""

from dataclasses import dataclass, field as dc_field
from typing import Any, Dict, List, Optional, Sequence, Tuple
import logging

from mot2 import linalg
from mot2.bisets import Biset, EquivariantMap, build_biset, disjoint_union_bisets, restrict
from mot2.errors import StructureError
from mot2.groupoids import from_group, subgroup_inclusion, trivial_groupoid
from mot2.groups import (
    FiniteGroup,
    Subgroup,
    all_subgroups,
    conjugacy_classes_of_subgroups,
    conjugate,
    double_cosets,
    intersection,
)
from mot2.permbimod import (
    BimoduleMap,
    HomSpace,
    P_on_2cell,
    PermBimodule,
    cell_vector,
    coset_gset,
    hom_space,
    same_type_coords,
)
from mot2.scalars import Field, Scalar
from mot2.twocells import TwoCell, twocell_basis, vcompose

log = logging.getLogger("mot2.mackey")

GSet = Biset
SpanHom = TwoCell


# ---------------------------------
# G-conjuntos
# ---------------------------------
def gset_from_action(G: FiniteGroup, points: Sequence, act, name: str = "X") -> GSet:
    """Left G-set on ``points`` with ``act(g, point)``."""
    T = trivial_groupoid()
    return build_biset(from_group(G), T, [(p, 0, 0) for p in points],
                       lambda g, p: act(g, p), lambda p, h: p, name=name)


def point_gset(G: FiniteGroup) -> GSet:
    return coset_gset(G, G.whole)


def regular_gset(G: FiniteGroup) -> GSet:
    return coset_gset(G, G.trivial)


def empty_gset(G: FiniteGroup) -> GSet:
    return Biset(from_group(G), trivial_groupoid(), [], {}, {}, [], name="0")


def restrict_gset(X: GSet, H: Subgroup) -> GSet:
    """Res^G_H X; elements keep their order."""
    return restrict(X, left=subgroup_inclusion(H), name=f"Res_{H.order}({X.name})")


def projection_map(src: GSet, tgt: GSet) -> EquivariantMap:
    """G/L -> G/K for L <= K, xL -> xK."""
    base = tgt.label_index[(0, 0)]
    return EquivariantMap(src, tgt, tuple(tgt.act_left(x, base) for x, _ in src.labels)).verify()


# ---------------------------------
# Categoria de spans y funtor de Yoshida
# ---------------------------------
def span_category_hom(X: GSet, Y: GSet, field: Field) -> List[SpanHom]:
    return twocell_basis(X, Y, field)


def compose_span_homs(s2: SpanHom, s1: SpanHom) -> SpanHom:
    return vcompose(s2, s1)


def yoshida_functor(s: SpanHom) -> BimoduleMap:
    return P_on_2cell(s)


def induction_restriction(G: FiniteGroup, K: Subgroup, L: Subgroup, field: Field) -> SpanHom:
    """I^K_L R^K_L = [G/K <- G/L -> G/K]."""
    XK, XL = coset_gset(G, K), coset_gset(G, L)
    q = projection_map(XL, XK)
    return TwoCell.from_span(XL, q, q, field)


def yoshida_relation(G: FiniteGroup, K: Subgroup, L: Subgroup, field: Field) -> SpanHom:
    """I^K_L R^K_L - [K:L] id on G/K."""
    XK = coset_gset(G, K)
    return induction_restriction(G, K, L, field) - TwoCell.identity(XK, field).scale(K.order // L.order)


def classical_yoshida_kernel_check(G: FiniteGroup, field: Field, max_rounds: int = 4) -> Dict[str, Any]:
    """
    Ideal generated by the relations I R - index inside the span category on
    the objects G/K (K up to conjugacy), closed under pre/post composition
    until the dimensions stop moving. Quotient dimensions are compared with
    |K\\G/L| and with the rank of Yoshida's functor.
    """
    reps = conjugacy_classes_of_subgroups(G)
    objs = [coset_gset(G, K) for K in reps]
    n = len(objs)
    basis = {(i, j): span_category_hom(objs[i], objs[j], field) for i in range(n) for j in range(n)}
    keys = {ij: [next(iter(t.terms)) for t in cells] for ij, cells in basis.items()}

    gens: Dict[int, List[TwoCell]] = {m: [] for m in range(n)}
    subs = all_subgroups(G)
    for m, K in enumerate(reps):
        for L in subs:
            if L.is_subgroup_of(K) and L != K:
                gens[m].append(yoshida_relation(G, K, L, field))

    ideal: Dict[Tuple[int, int], List[List[Scalar]]] = {ij: [] for ij in basis}
    for m in range(n):
        if not gens[m]:
            continue
        for i in range(n):
            right = [vcompose(g, pre) for g in gens[m] for pre in basis[(i, m)]]
            right = [c for c in right if not c.is_zero()]
            for j in range(n):
                for c in right:
                    for post in basis[(m, j)]:
                        cell = vcompose(post, c)
                        if not cell.is_zero():
                            ideal[(i, j)].append(cell_vector(cell, keys[(i, j)]))
    ideal = {ij: linalg.row_basis(v, len(keys[ij]), field) for ij, v in ideal.items()}

    rounds = 1
    while rounds < max_rounds:
        grown = False
        fresh: Dict[Tuple[int, int], List[List[Scalar]]] = {ij: list(v) for ij, v in ideal.items()}
        for (i, j), vecs in ideal.items():
            cells = [TwoCell(objs[i], objs[j], field, {k: c for k, c in zip(keys[(i, j)], v) if not field.is_zero(c)})
                     for v in vecs]
            for k in range(n):
                for c in cells:
                    for post in basis[(j, k)]:
                        fresh[(i, k)].append(cell_vector(vcompose(post, c), keys[(i, k)]))
                    for pre in basis[(k, i)]:
                        fresh[(k, j)].append(cell_vector(vcompose(c, pre), keys[(k, j)]))
        for ij, v in fresh.items():
            b = linalg.row_basis(v, len(keys[ij]), field)
            if len(b) != len(ideal[ij]):
                grown = True
            ideal[ij] = b
        rounds += 1
        if not grown:
            break

    pairs = []
    ok = True
    for i in range(n):
        for j in range(n):
            cells = basis[(i, j)]
            coords = same_type_coords(objs[i], objs[j])
            images = [yoshida_functor(c).flatten(coords) for c in cells]
            y_rank = linalg.span_rank(images, len(coords), field)
            dc = len(double_cosets(G, reps[i], reps[j]))
            quotient = len(cells) - len(ideal[(i, j)])
            # el ideal debe caer en el nucleo de Y
            A = linalg.from_columns(images, len(coords), field)
            in_kernel = all(all(field.is_zero(e) for e in linalg.apply(A, v)) for v in ideal[(i, j)])
            row_ok = quotient == dc and y_rank == dc and in_kernel
            ok = ok and row_ok
            pairs.append({"K": reps[i].order, "L": reps[j].order, "source": i, "target": j,
                          "hom_dim": len(cells), "ideal_dim": len(ideal[(i, j)]), "quotient_dim": quotient,
                          "double_cosets": dc, "yoshida_rank": y_rank, "ideal_in_kernel": in_kernel, "ok": row_ok})
    log.info("classical Yoshida for %s over %s: %d objects, %d closure rounds", G.name, field.spec, n, rounds)
    return {"group": G.name, "field": field.spec, "objects": [K.order for K in reps],
            "rounds": rounds, "pairs": pairs, "ok": ok}


# ---------------------------------
# Decategorificacion Hom
# ---------------------------------
def _left_cosets_in(H: Subgroup, K: Subgroup) -> List[int]:
    """Representatives of H/K (K <= H)."""
    G = H.parent
    covered = set()
    reps = []
    for h in H.elements:
        if h in covered:
            continue
        covered |= {G.mul(h, k) for k in K.elements}
        reps.append(h)
    return reps


def _double_cosets_in(H: Subgroup, L: Subgroup, K: Subgroup) -> List[int]:
    """Representatives of L\\H/K inside H."""
    G = H.parent
    covered = set()
    reps = []
    for h in H.elements:
        if h in covered:
            continue
        covered |= {G.mul(G.mul(l, h), k) for l in L.elements for k in K.elements}
        reps.append(h)
    return reps


@dataclass(eq=False)
class MackeyFunctorTable:
    """
    M(H) for every subgroup H; vectors are flattened |Y| x |X| matrices in the
    order of ``coords``.
    """

    group: FiniteGroup
    field: Field
    X: GSet
    Y: GSet
    coords: Tuple[Tuple[int, int], ...]
    subgroups: List[Subgroup]
    spaces: Dict[Subgroup, HomSpace] = dc_field(default_factory=dict)
    _perm_cache: Dict[int, List[int]] = dc_field(default_factory=dict, repr=False)

    def dim(self, H: Subgroup) -> int:
        return self.spaces[H].dim

    def vectors(self, H: Subgroup) -> List[List[Scalar]]:
        return [list(v) for v in self.spaces[H].vectors]

    def _twist(self, vec: Sequence[Scalar], g: int) -> List[Scalar]:
        """g f g^-1: entry (v, u) becomes f[g^-1 v][g^-1 u]."""
        return [vec[n] for n in self._pullback(g)]

    def _pullback(self, g: int) -> List[int]:
        if g not in self._perm_cache:
            gi = self.group.inv(g)
            pos = {c: n for n, c in enumerate(self.coords)}
            X, Y = self.X, self.Y
            self._perm_cache[g] = [pos[(Y.act_left(gi, v), X.act_left(gi, u))] for v, u in self.coords]
        return self._perm_cache[g]

    def transfer_vector(self, K: Subgroup, H: Subgroup, vec: Sequence[Scalar]) -> List[Scalar]:
        """Relative trace: sum over h in H/K of h f h^-1."""
        F = self.field
        out = [F.zero] * len(self.coords)
        for h in _left_cosets_in(H, K):
            out = [a + b for a, b in zip(out, self._twist(vec, h))]
        return out

    def conjugation_vector(self, g: int, vec: Sequence[Scalar]) -> List[Scalar]:
        return self._twist(vec, g)

    def _coordinates(self, H: Subgroup, vec: Sequence[Scalar]) -> List[Scalar]:
        c = linalg.coordinates(self.vectors(H), list(vec), self.field)
        if c is None:
            raise StructureError(f"vector does not lie in M(H) for |H|={H.order}")
        return c

    def restriction(self, H: Subgroup, K: Subgroup):
        """res^H_K as a dim M(K) x dim M(H) matrix."""
        cols = [self._coordinates(K, v) for v in self.vectors(H)]
        return linalg.from_columns(cols, self.dim(K), self.field)

    def transfer(self, K: Subgroup, H: Subgroup):
        """tr^H_K as a dim M(H) x dim M(K) matrix."""
        cols = [self._coordinates(H, self.transfer_vector(K, H, v)) for v in self.vectors(K)]
        return linalg.from_columns(cols, self.dim(H), self.field)

    def conjugation(self, g: int, H: Subgroup):
        """c_g: M(H) -> M(gHg^-1)."""
        Hg = conjugate(H, g)
        cols = [self._coordinates(Hg, self.conjugation_vector(g, v)) for v in self.vectors(H)]
        return linalg.from_columns(cols, self.dim(Hg), self.field)

    def to_dict(self) -> Dict[str, Any]:
        F = self.field
        subs = self.subgroups
        name = {H: f"H{n}" for n, H in enumerate(subs)}
        pairs = []
        for H in subs:
            for K in subs:
                if K.is_subgroup_of(H) and K != H:
                    pairs.append({
                        "H": name[H], "K": name[K],
                        "restriction": [[F.format(c) for c in row] for row in linalg.to_rows(self.restriction(H, K))],
                        "transfer": [[F.format(c) for c in row] for row in linalg.to_rows(self.transfer(K, H))],
                    })
        return {
            "group": self.group.name,
            "field": F.spec,
            "X": self.X.size,
            "Y": self.Y.size,
            "subgroups": [{"name": name[H], "order": H.order, "elements": list(H.elements), "dim": self.dim(H)}
                          for H in subs],
            "pairs": pairs,
        }


def hom_decategorify(G: FiniteGroup, X: GSet, Y: GSet, field: Field) -> MackeyFunctorTable:
    """H -> Hom_{kH}(Res k[X], Res k[Y]) with restriction and relative-trace transfer."""
    subs = all_subgroups(G)
    coords = tuple((v, u) for v in Y.elements for u in X.elements)
    table = MackeyFunctorTable(G, field, X, Y, coords, subs)
    for H in subs:
        M = PermBimodule(restrict_gset(X, H), field)
        N = PermBimodule(restrict_gset(Y, H), field)
        hs = hom_space(M, N)
        if hs.coords != coords:
            raise StructureError("restricted bases lost their order")
        table.spaces[H] = hs
    log.info("hom_decategorify %s over %s: dims %s", G.name, field.spec, [table.dim(H) for H in subs])
    return table


def _same(a: Sequence[Scalar], b: Sequence[Scalar]) -> bool:
    return list(a) == list(b)


def verify_mackey_axioms(T: MackeyFunctorTable, additivity_with: Optional[GSet] = None) -> Dict[str, Any]:
    """
    Checks on a Hom-decategorified table:

    * (A) functoriality of transfers along L <= K <= H and tr^H_H = id;
    * (B) conjugation: c_g c_g' = c_gg', c_h = id on M(H) for h in H,
      and c_g commutes with transfer (restriction is an inclusion);
    * (C) additivity of dimensions against X + ``additivity_with``;
    * (D) res^H_L tr^H_K = sum over L\\H/K of tr^L_{L n gKg^-1} c_g (as maps out of M(K));
    * cohomological identity tr^H_K res^H_K = [H:K] id.
    """
    G, F = T.group, T.field
    subs = T.subgroups
    failures: List[str] = []
    counts = {"A": 0, "B": 0, "C": 0, "D": 0, "cohomological": 0}

    for H in subs:
        for v in T.vectors(H):
            counts["A"] += 1
            if not _same(T.transfer_vector(H, H, v), v):
                failures.append(f"A: tr^H_H != id for |H|={H.order}")
            for h in H.elements:
                counts["B"] += 1
                if not _same(T.conjugation_vector(h, v), v):
                    failures.append(f"B: c_h acts on M(H) for |H|={H.order}")
                    break
            # cada imagen debe caer en el espacio correcto
            for g in range(G.order):
                if linalg.coordinates(T.vectors(conjugate(H, g)), T.conjugation_vector(g, v), F) is None:
                    failures.append(f"B: c_{g} leaves M(gHg^-1) for |H|={H.order}")

    for K in subs:
        for v in T.vectors(K):
            for g1 in G.generator_indices or (0,):
                for g2 in range(G.order):
                    counts["B"] += 1
                    lhs = T.conjugation_vector(g1, T.conjugation_vector(g2, v))
                    if not _same(lhs, T.conjugation_vector(G.mul(g1, g2), v)):
                        failures.append(f"B: c_g c_g' != c_gg' at |K|={K.order}")
            for H in subs:
                if not K.is_subgroup_of(H):
                    continue
                t = T.transfer_vector(K, H, v)
                if linalg.coordinates(T.vectors(H), t, F) is None:
                    failures.append(f"A: transfer leaves M(H) for {K.order} <= {H.order}")
                for g in range(G.order):
                    counts["B"] += 1
                    lhs = T.conjugation_vector(g, t)
                    rhs = T.transfer_vector(conjugate(K, g), conjugate(H, g), T.conjugation_vector(g, v))
                    if not _same(lhs, rhs):
                        failures.append(f"B: c_g does not commute with tr at {K.order} <= {H.order}")
                        break
                for Hp in subs:
                    if not H.is_subgroup_of(Hp):
                        continue
                    counts["A"] += 1
                    if not _same(T.transfer_vector(H, Hp, t), T.transfer_vector(K, Hp, v)):
                        failures.append(f"A: tr o tr != tr at {K.order} <= {H.order} <= {Hp.order}")

    for H in subs:
        for K in subs:
            if not K.is_subgroup_of(H):
                continue
            idx = H.order // K.order
            for v in T.vectors(H):
                counts["cohomological"] += 1
                if not _same(T.transfer_vector(K, H, v), [F(idx) * c for c in v]):
                    failures.append(f"cohomological: tr res != {idx} at {K.order} <= {H.order}")
            for L in subs:
                if not L.is_subgroup_of(H):
                    continue
                reps = _double_cosets_in(H, L, K)
                for v in T.vectors(K):
                    counts["D"] += 1
                    lhs = T.transfer_vector(K, H, v)
                    rhs = [F.zero] * len(T.coords)
                    for g in reps:
                        Kg = conjugate(K, g)
                        part = T.transfer_vector(intersection(L, Kg), L, T.conjugation_vector(g, v))
                        rhs = [a + b for a, b in zip(rhs, part)]
                    if not _same(lhs, rhs):
                        failures.append(f"D: Mackey formula fails for L={L.order}, K={K.order} in H={H.order}")

    if additivity_with is not None:
        XX = disjoint_union_bisets(T.X, additivity_with)
        T2 = hom_decategorify(G, additivity_with, T.Y, F)
        T12 = hom_decategorify(G, XX, T.Y, F)
        for H in subs:
            counts["C"] += 1
            if T12.dim(H) != T.dim(H) + T2.dim(H):
                failures.append(f"C: dim M(X+X')(H) != dim M(X)(H) + dim M(X')(H) for |H|={H.order}")

    return {"group": G.name, "field": F.spec, "dims": {str(H.order) + ":" + str(n): T.dim(H) for n, H in enumerate(subs)},
            "checked": counts, "failures": sorted(set(failures)), "ok": not failures}
