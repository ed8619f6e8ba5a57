"""
Calculo k-lineal de 2-celdas: combinaciones formales de spans de mapas
equivariantes [U <=beta W =alpha=> V], modulo isomorfismo de spans.

Forma canonica: el medio W se parte en orbitas (aditividad) y cada orbita
transitiva queda determinada por

* la orbita de (beta w, alpha w) en U x V, representada por su par minimo p0;
* la clase del estabilizador Stab(w0) bajo conjugacion por Stab(p0), donde w0
  es un punto sobre p0; se guarda el conjugado minimo.

Una 2-celda es un dict ``{clave: coeficiente}`` sin coeficientes nulos.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Tuple, Union
import logging

from mot2.bisets import (
    Biset,
    EquivariantMap,
    associator,
    compose_maps,
    coset_biset,
    identity_biset,
    identity_map,
    left_unitor,
    pullback,
    restrict,
    right_unitor,
    stabilizer_pairs,
    tensor,
    tensor_maps,
    transitive_biset,
)
from mot2.disjoint_set import DisjointSet
from mot2.errors import FieldError, StructureError
from mot2.groupoids import FiniteGroupoid, from_group, subgroup_inclusion
from mot2.groups import Subgroup, index as group_index, is_projection_injective
from mot2.scalars import Field, Scalar

log = logging.getLogger("mot2.twocells")

Pair = Tuple[int, int]
StabKey = Tuple[Pair, ...]
Key = Tuple[int, int, StabKey]


# ---------------------------------
# Orbitas de U x V y estabilizadores
# ---------------------------------
@lru_cache(maxsize=1024)
def _pair_orbits(U: Biset, V: Biset) -> Dict[Pair, Pair]:
    """Each same-type pair (u, v) mapped to the minimal pair of its orbit."""
    G, H = U.left, U.right
    pairs = [(u, v) for u in U.elements for v in V.by_right_obj.get(U.right_obj(u), [])
             if V.left_obj(v) == U.left_obj(u)]
    ds: DisjointSet[Pair] = DisjointSet(pairs)
    for u, v in pairs:
        y, x = U.types[u]
        for g in G.symmetric_generators:
            if G.src[g] == x:
                ds.union((u, v), (U.act_left(g, u), V.act_left(g, v)))
        for h in H.symmetric_generators:
            if H.tgt[h] == y:
                ds.union((u, v), (U.act_right(u, h), V.act_right(v, h)))
    return {p: cls[0] for cls in ds.classes() for p in cls}


def _conjugate_pairs(G: FiniteGroupoid, H: FiniteGroupoid, S: Iterable[Pair], a: int, b: int) -> StabKey:
    return tuple(sorted((G.compose(G.compose(a, g), G.inv(a)), H.compose(H.compose(b, h), H.inv(b))) for g, h in S))


def _canonical_stab(G: FiniteGroupoid, H: FiniteGroupoid, S: FrozenSet[Pair], T: FrozenSet[Pair]) -> StabKey:
    """Minimal T-conjugate of S, both subgroups of G(x,x) x H(y,y)."""
    return min(_conjugate_pairs(G, H, S, a, b) for a, b in T)


def _pair_stabilizer(U: Biset, V: Biset, u: int, v: int) -> FrozenSet[Pair]:
    return U.stabilizer(u) & V.stabilizer(v)


def _orbit_key(U: Biset, V: Biset, W: Biset, beta: EquivariantMap, alpha: EquivariantMap,
               orbit: Tuple[int, ...]) -> Key:
    canon = _pair_orbits(U, V)
    p0 = canon[(beta(orbit[0]), alpha(orbit[0]))]
    w0 = next(w for w in orbit if (beta(w), alpha(w)) == p0)
    T = _pair_stabilizer(U, V, *p0)
    return (p0[0], p0[1], _canonical_stab(U.left, U.right, W.stabilizer(w0), T))


# ---------------------------------
# 2-celdas
# ---------------------------------
class TwoCell:
    def __init__(self, source: Biset, target: Biset, field: Field, terms: Optional[Dict[Key, Scalar]] = None):
        if not (source.left.same_as(target.left) and source.right.same_as(target.right)):
            raise StructureError("2-cell between bisets over different groupoids")
        self.source = source
        self.target = target
        self.field = field
        self.terms: Dict[Key, Scalar] = {k: c for k, c in (terms or {}).items() if not field.is_zero(c)}

    def __repr__(self) -> str:
        return f"TwoCell({self.source.name} => {self.target.name}, terms={len(self.terms)})"

    # ---------------------------------
    # Construccion
    # ---------------------------------
    @classmethod
    def from_span(cls, W: Biset, beta: EquivariantMap, alpha: EquivariantMap, field: Field,
                  coeff: Union[int, Scalar] = 1) -> "TwoCell":
        U, V = beta.target, alpha.target
        if not (beta.source.same_as(W) and alpha.source.same_as(W)):
            raise StructureError("span legs must start at the middle biset")
        c = field(coeff) if isinstance(coeff, int) else coeff
        terms: Dict[Key, Scalar] = {}
        for orb in W.orbits:
            k = _orbit_key(U, V, W, beta, alpha, orb)
            terms[k] = terms.get(k, field.zero) + c
        return cls(U, V, field, terms)

    @classmethod
    def zero(cls, U: Biset, V: Biset, field: Field) -> "TwoCell":
        return cls(U, V, field, {})

    @classmethod
    def identity(cls, U: Biset, field: Field) -> "TwoCell":
        e = identity_map(U)
        return cls.from_span(U, e, e, field)

    @classmethod
    def from_map(cls, f: EquivariantMap, field: Field) -> "TwoCell":
        """[U <=id U =f=> V]."""
        f.verify()
        return cls.from_span(f.source, identity_map(f.source), f, field)

    @classmethod
    def from_inverse_map(cls, f: EquivariantMap, field: Field) -> "TwoCell":
        """[V <=f U =id=> U] for an isomorphism f: U -> V."""
        f.verify()
        if not f.is_bijective():
            raise StructureError("from_inverse_map needs an isomorphism")
        return cls.from_span(f.source, f, identity_map(f.source), field)

    # ---------------------------------
    # Representantes
    # ---------------------------------
    def span_of(self, key: Key) -> Tuple[Biset, EquivariantMap, EquivariantMap]:
        return representative_span(self.source, self.target, key)

    def spans(self) -> List[Tuple[Scalar, Biset, EquivariantMap, EquivariantMap]]:
        return [(c, *self.span_of(k)) for k, c in sorted(self.terms.items())]

    # ---------------------------------
    # Aritmetica
    # ---------------------------------
    def _check_parallel(self, other: "TwoCell") -> None:
        if not (self.source.same_as(other.source) and self.target.same_as(other.target)):
            raise StructureError("2-cells are not parallel")
        if self.field != other.field:
            raise FieldError("2-cells over different fields")

    def __add__(self, other: "TwoCell") -> "TwoCell":
        self._check_parallel(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, self.field.zero) + c
        return TwoCell(self.source, self.target, self.field, terms)

    def __neg__(self) -> "TwoCell":
        return TwoCell(self.source, self.target, self.field, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "TwoCell") -> "TwoCell":
        return self + (-other)

    def scale(self, c: Union[int, Scalar]) -> "TwoCell":
        c = self.field(c) if isinstance(c, int) else c
        return TwoCell(self.source, self.target, self.field, {k: c * v for k, v in self.terms.items()})

    def __rmul__(self, c: Union[int, Scalar]) -> "TwoCell":
        return self.scale(c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TwoCell):
            return NotImplemented
        return (self.source.same_as(other.source) and self.target.same_as(other.target)
                and self.field == other.field and self.terms == other.terms)

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def to_dict(self) -> Dict[str, Any]:
        out = []
        for c, W, beta, alpha in self.spans():
            out.append({
                "coefficient": self.field.format(c),
                "middle": W.to_dict(),
                "beta": list(beta.mapping),
                "alpha": list(alpha.mapping),
            })
        return {"source": self.source.name, "target": self.target.name, "field": self.field.spec, "terms": out}


def representative_span(U: Biset, V: Biset, key: Key) -> Tuple[Biset, EquivariantMap, EquivariantMap]:
    """Transitive span with canonical key ``key``: W = coset biset at p0, legs [g, h] -> g.u0.h and g.v0.h."""
    u0, v0, stab = key
    y0, x0 = U.types[u0]
    W = coset_biset(U.left, U.right, y0, x0, frozenset(stab), name=f"W[{u0},{v0}]")
    beta = EquivariantMap(W, U, tuple(U.act_right(U.act_left(g, u0), h) for g, h in W.labels))
    alpha = EquivariantMap(W, V, tuple(V.act_right(V.act_left(g, v0), h) for g, h in W.labels))
    return W, beta, alpha


# ---------------------------------
# Composiciones
# ---------------------------------
def vcompose(t2: TwoCell, t1: TwoCell) -> TwoCell:
    """t2 o t1 for t1: U => V and t2: V => X, by pullback over V."""
    if not t1.target.same_as(t2.source):
        raise StructureError(f"vcompose: {t1.target.name} is not {t2.source.name}")
    if t1.field != t2.field:
        raise FieldError("2-cells over different fields")
    out = TwoCell.zero(t1.source, t2.target, t1.field)
    for c1, W1, b1, a1 in t1.spans():
        for c2, W2, b2, a2 in t2.spans():
            P, pr1, pr2 = pullback(a1, b2)
            if P.size == 0:
                continue
            out = out + TwoCell.from_span(P, compose_maps(b1, pr1), compose_maps(a2, pr2), t1.field, c1 * c2)
    return out


def whisker(cell: TwoCell, X: Biset, side: str) -> TwoCell:
    """
    side='left': X x cell (X a K,G-biset); side='right': cell x X (X an H,L-biset).
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    idX = identity_map(X)

    def tmap(f: EquivariantMap) -> EquivariantMap:
        return tensor_maps(idX, f) if side == "left" else tensor_maps(f, idX)

    src = tmap(identity_map(cell.source)).source
    tgt = tmap(identity_map(cell.target)).source
    out = TwoCell.zero(src, tgt, cell.field)
    for c, W, beta, alpha in cell.spans():
        b2, a2 = tmap(beta), tmap(alpha)
        out = out + TwoCell.from_span(b2.source, b2, a2, cell.field, c)
    return out


def hcompose(t2: TwoCell, t1: TwoCell) -> TwoCell:
    """t2 * t1 : U2 x U1 => V2 x V1 for t1: U1 => V1 (G,H) and t2: U2 => V2 (K,G)."""
    return vcompose(whisker(t2, t1.target, "right"), whisker(t1, t2.source, "left"))


def transport(cell: TwoCell, f_src: EquivariantMap, f_tgt: EquivariantMap) -> TwoCell:
    """Conjugate ``cell`` along isomorphisms f_src: source -> U' and f_tgt: target -> V'."""
    F = cell.field
    return vcompose(TwoCell.from_map(f_tgt, F), vcompose(cell, TwoCell.from_inverse_map(f_src, F)))


# ---------------------------------
# Unidades y counidades de i_! -| i^* -| i_!
# ---------------------------------
@dataclass(frozen=True, eq=False)
class AdjunctionUnits:
    subgroup: Subgroup
    field: Field
    G: FiniteGroupoid
    H: FiniteGroupoid
    id_G: Biset
    id_H: Biset
    induction: Biset      # i_! = _G G_H
    restriction: Biset    # i^* = _H G_G
    mu: EquivariantMap    # i_! x i^* -> Id_G
    iota: EquivariantMap  # Id_H -> i^* x i_!
    eta_l: TwoCell
    eps_l: TwoCell
    eta_r: TwoCell
    eps_r: TwoCell

    @property
    def index(self) -> int:
        return group_index(self.subgroup.parent, self.subgroup)


@lru_cache(maxsize=None)
def adjunction_units(H: Subgroup, field: Field) -> AdjunctionUnits:
    inc = subgroup_inclusion(H)
    Gg, Hg = inc.target, inc.source
    id_G, id_H = identity_biset(Gg), identity_biset(Hg)
    ind = restrict(id_G, right=inc, name=f"{Gg.name}_{{{Hg.name}}}")
    res = restrict(id_G, left=inc, name=f"{{{Hg.name}}}{Gg.name}")
    GHG = tensor(ind, res)
    HGH = tensor(res, ind)
    Gr = H.parent
    mu = EquivariantMap(GHG, id_G, tuple(Gr.mul(ind.labels[t][2], res.labels[s][2]) for t, s in GHG.labels)).verify()
    one = ind.label_index[(0, 0, 0)]
    q = HGH.provenance.quotient
    iota = EquivariantMap(id_H, HGH, tuple(q[(res.label_index[(0, 0, inc(h))], one)] for h in range(Hg.n_morphisms))).verify()
    F = field
    eta_l = TwoCell.from_span(id_H, identity_map(id_H), iota, F)
    eps_l = TwoCell.from_span(GHG, identity_map(GHG), mu, F)
    eta_r = TwoCell.from_span(GHG, mu, identity_map(GHG), F)
    eps_r = TwoCell.from_span(id_H, iota, identity_map(id_H), F)
    log.info("adjunction units for |H|=%d in %s over %s", H.order, Gr.name, F.spec)
    return AdjunctionUnits(H, F, Gg, Hg, id_G, id_H, ind, res, mu, iota, eta_l, eps_l, eta_r, eps_r)


def triangle_composites(units: AdjunctionUnits) -> Dict[str, TwoCell]:
    """
    The four triangle composites, each a 2-cell on i_! or i^* that must equal
    the identity; unitors and associators make them strict.
    """
    F = units.field
    ind, res = units.induction, units.restriction
    T = TwoCell

    def chain(*cells: TwoCell) -> TwoCell:
        out = cells[0]
        for c in cells[1:]:
            out = vcompose(c, out)
        return out

    lam = left_unitor
    rho = right_unitor
    out = {}
    # i_! -| i^*
    out["left:induction"] = chain(
        T.from_inverse_map(rho(ind), F),
        whisker(units.eta_l, ind, "left"),
        T.from_inverse_map(associator(ind, res, ind), F),
        whisker(units.eps_l, ind, "right"),
        T.from_map(lam(ind), F),
    )
    out["left:restriction"] = chain(
        T.from_inverse_map(lam(res), F),
        whisker(units.eta_l, res, "right"),
        T.from_map(associator(res, ind, res), F),
        whisker(units.eps_l, res, "left"),
        T.from_map(rho(res), F),
    )
    # i^* -| i_!
    out["right:restriction"] = chain(
        T.from_inverse_map(rho(res), F),
        whisker(units.eta_r, res, "left"),
        T.from_inverse_map(associator(res, ind, res), F),
        whisker(units.eps_r, res, "right"),
        T.from_map(lam(res), F),
    )
    out["right:induction"] = chain(
        T.from_inverse_map(lam(ind), F),
        whisker(units.eta_r, ind, "right"),
        T.from_map(associator(ind, res, ind), F),
        whisker(units.eps_r, ind, "left"),
        T.from_map(rho(ind), F),
    )
    return out


def frobenius_composite(units: AdjunctionUnits) -> TwoCell:
    """eps^r o eta^l on Id_H."""
    return vcompose(units.eps_r, units.eta_l)


# ---------------------------------
# 2-celdas cohomologicas y delta
# ---------------------------------
def cohomological_2cell(H: Subgroup, field: Field) -> TwoCell:
    """[G <=mu G x_H G =mu=> G] - [G:H] id."""
    units = adjunction_units(H, field)
    GHG = units.mu.source
    span = TwoCell.from_span(GHG, units.mu, units.mu, field)
    return span - TwoCell.identity(units.id_G, field).scale(units.index)


def _quotient_map(src: Biset, tgt: Biset) -> EquivariantMap:
    """(G1 x G2)/M -> (G1 x G2)/N for M <= N, [g, h] -> g.n0.h."""
    n0 = tgt.label_index[(0, 0)]
    return EquivariantMap(src, tgt, tuple(tgt.act_right(tgt.act_left(g, n0), h) for g, h in src.labels)).verify()


def delta(G1: FiniteGroupoid, G2: FiniteGroupoid, M: Subgroup, N: Subgroup, field: Field) -> TwoCell:
    """[(G1xG2)/N <= (G1xG2)/M => (G1xG2)/N] - [N:M] id, for M <= N with pr1 injective on N."""
    if not M.is_subgroup_of(N):
        raise StructureError("delta needs M <= N")
    if not is_projection_injective(N, 0):
        raise StructureError("delta needs the first projection injective on N")
    XN = transitive_biset(G1, G2, N)
    XM = transitive_biset(G1, G2, M)
    q = _quotient_map(XM, XN)
    return TwoCell.from_span(XM, q, q, field) - TwoCell.identity(XN, field).scale(N.order // M.order)


def separability_section(H: Subgroup, field: Field) -> TwoCell:
    """sigma = [G:H]^-1 eta^r; needs [G:H] invertible in the field."""
    units = adjunction_units(H, field)
    if not field.is_invertible_integer(units.index):
        raise FieldError(f"[G:H] = {units.index} is not invertible in {field.spec}")
    return units.eta_r.scale(field.inv(field(units.index)))


def section_defect(H: Subgroup, field: Field) -> TwoCell:
    """eps^l o sigma - id; lies in the span of the cohomological 2-cell."""
    units = adjunction_units(H, field)
    sigma = separability_section(H, field)
    return vcompose(units.eps_l, sigma) - TwoCell.identity(units.id_G, field)


# ---------------------------------
# Base de 2-celdas U => V
# ---------------------------------
def _pair_subgroups(G: FiniteGroupoid, H: FiniteGroupoid, T: FrozenSet[Pair]) -> List[FrozenSet[Pair]]:
    def mul(p: Pair, q: Pair) -> Pair:
        return (G.compose(p[0], q[0]), H.compose(p[1], q[1]))

    def closure(gens: List[Pair]) -> FrozenSet[Pair]:
        e = next(p for p in T if G.ident[G.src[p[0]]] == p[0] and H.ident[H.src[p[1]]] == p[1])
        seen = {e}
        frontier = [e]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    c = mul(g, a)
                    if c not in seen:
                        seen.add(c)
                        nxt.append(c)
            frontier = nxt
        return frozenset(seen)

    found: Dict[FrozenSet[Pair], List[Pair]] = {}
    for t in sorted(T):
        c = closure([t])
        found.setdefault(c, [t])
    queue = list(found.items())
    while queue:
        elems, gens = queue.pop()
        for t in sorted(T):
            if t in elems:
                continue
            c = closure(gens + [t])
            if c not in found:
                found[c] = gens + [t]
                queue.append((c, gens + [t]))
    return list(found)


def twocell_basis(U: Biset, V: Biset, field: Field) -> List[TwoCell]:
    """Transitive spans U <= W => V up to isomorphism: orbits of U x V times subgroup classes of Stab(p0)."""
    G, H = U.left, U.right
    canon = _pair_orbits(U, V)
    keys = set()
    for p0 in sorted(set(canon.values())):
        T = _pair_stabilizer(U, V, *p0)
        for S in _pair_subgroups(G, H, T):
            keys.add((p0[0], p0[1], _canonical_stab(G, H, S, T)))
    return [TwoCell(U, V, field, {k: field.one}) for k in sorted(keys)]
