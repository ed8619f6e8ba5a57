"""
Spans de grupoides H <-u- P -i-> G, su realizacion como G,H-biset, la
construccion de Grothendieck y las comparaciones Phi y varphi.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, Tuple
import logging

from mot2.bisets import Biset, EquivariantMap, identity_biset, restrict, tensor
from mot2.errors import StructureError
from mot2.groupoids import (
    FiniteGroupoid,
    GroupoidFunctor,
    compose_functors,
    identity_functor,
    iso_comma,
    pairing,
    skeletonize,
)

log = logging.getLogger("mot2.spans")


@dataclass(frozen=True, eq=False)
class Span:
    """H <-u- P -i-> G."""

    u: GroupoidFunctor
    i: GroupoidFunctor

    def __post_init__(self):
        if not self.u.source.same_as(self.i.source):
            raise StructureError("span legs must share their source")

    @property
    def apex(self) -> FiniteGroupoid:
        return self.u.source

    @property
    def H(self) -> FiniteGroupoid:
        return self.u.target

    @property
    def G(self) -> FiniteGroupoid:
        return self.i.target

    def verify(self) -> "Span":
        self.u.verify()
        self.i.verify()
        return self

    @cached_property
    def right_faithful(self) -> bool:
        return self.i.is_faithful()

    @cached_property
    def u_kills_kernel_of_i(self) -> bool:
        """u sends every endomorphism with i(p) = id to an identity; realize(s) is right-free exactly then."""
        P = self.apex
        for z in P.objects:
            x, y = self.i.obj(z), self.u.obj(z)
            for p in P.vertex_group(z):
                if self.i(p) == self.G.ident[x] and self.u(p) != self.H.ident[y]:
                    return False
        return True

    @cached_property
    def jointly_faithful(self) -> bool:
        P = self.apex
        for hs in P._homs.values():
            images = {(self.u(m), self.i(m)) for m in hs}
            if len(images) != len(hs):
                return False
        return True

    def pairing(self) -> GroupoidFunctor:
        return pairing(self.u, self.i)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "apex": self.apex.to_dict(),
            "u": {"target": self.H.name, "objects": list(self.u.obj_map), "morphisms": list(self.u.mor_map)},
            "i": {"target": self.G.name, "objects": list(self.i.obj_map), "morphisms": list(self.i.mor_map)},
        }


def identity_span(G: FiniteGroupoid) -> Span:
    e = identity_functor(G)
    return Span(e, e)


# ---------------------------------
# Realizacion
# ---------------------------------
def induction_biset(i: GroupoidFunctor) -> Biset:
    """R_!(i) = G(i-, -) as a G,P-biset."""
    return restrict(identity_biset(i.target), right=i, name=f"{i.target.name}(i-,-)")


def restriction_biset(u: GroupoidFunctor) -> Biset:
    """R^*(u) = H(-, u-) as a P,H-biset."""
    return restrict(identity_biset(u.target), left=u, name=f"{u.target.name}(-,u-)")


def realize(s: Span) -> Biset:
    return tensor(induction_biset(s.i), restriction_biset(s.u))


def _realized_base(R: Biset, s: Span, z: int) -> int:
    """Class [id_{iz}, id_{uz}] of R = realize(s)."""
    data = R.provenance
    G, H = s.G, s.H
    x, y = s.i.obj(z), s.u.obj(z)
    t = data.left_factor.label_index[(z, x, G.ident[x])]
    r = data.right_factor.label_index[(y, z, H.ident[y])]
    return data.quotient[(t, r)]


# ---------------------------------
# Grothendieck
# ---------------------------------
def grothendieck(S: Biset) -> Span:
    """
    Groupoid of elements: objects are the elements of S, a morphism
    s -> s' is a pair (h: y -> y', g: x -> x') with g.s = s'.h.
    """
    G, H = S.left, S.right
    src, tgt, labels = [], [], []
    mpos: Dict[Tuple[int, int, int], int] = {}
    for s, (y, x) in enumerate(S.types):
        for h in H.out_morphisms(y):
            h_inv = H.inv(h)
            for g in G.out_morphisms(x):
                t = S.act_right(S.act_left(g, s), h_inv)
                mpos[(s, h, g)] = len(src)
                src.append(s)
                tgt.append(t)
                labels.append((s, h, g))
    comp = {}
    for m1, (s, h1, g1) in enumerate(labels):
        t = tgt[m1]
        y2, x2 = S.types[t]
        for h2 in H.out_morphisms(y2):
            for g2 in G.out_morphisms(x2):
                comp[(mpos[(t, h2, g2)], m1)] = mpos[(s, H.compose(h2, h1), G.compose(g2, g1))]
    ident = [mpos[(s, H.ident[y], G.ident[x])] for s, (y, x) in enumerate(S.types)]
    inv = [mpos[(tgt[m], H.inv(h), G.inv(g))] for m, (_, h, g) in enumerate(labels)]
    apex = FiniteGroupoid(f"int({S.name})", list(S.elements), src, tgt, comp, ident, inv, labels)
    u = GroupoidFunctor(apex, H, tuple(y for y, _ in S.types), tuple(h for _, h, _ in labels))
    i = GroupoidFunctor(apex, G, tuple(x for _, x in S.types), tuple(g for _, _, g in labels))
    return Span(u, i)


def phi_comparison(s: Span) -> GroupoidFunctor:
    """Phi: P -> int(realize(s)), z -> [id, id], p -> (u p, i p)."""
    R = realize(s)
    gs = grothendieck(R)
    lookup = {lab: m for m, lab in enumerate(gs.apex.labels)}
    P = s.apex
    obj_map = tuple(_realized_base(R, s, z) for z in P.objects)
    mor_map = tuple(lookup[(obj_map[P.src[p]], s.u(p), s.i(p))] for p in range(P.n_morphisms))
    return GroupoidFunctor(P, gs.apex, obj_map, mor_map).verify()


def varphi_iso(S: Biset) -> EquivariantMap:
    """phi_S: S -> realize(int S), s -> [id_x, id_y] at (y, x, s)."""
    gs = grothendieck(S)
    R = realize(gs)
    f = EquivariantMap(S, R, tuple(_realized_base(R, gs, s) for s in S.elements)).verify()
    if not f.is_bijective():
        raise StructureError(f"varphi is not bijective for {S.name}")
    return f


# ---------------------------------
# Composicion
# ---------------------------------
def compose_spans(s2: Span, s1: Span, skeleton: bool = True) -> Span:
    """
    s2 o s1 for s1 = (H <- P1 -> G) and s2 = (G <- P2 -> K), through the
    iso-comma of the inner legs. ``skeleton=False`` keeps the full apex.
    """
    if not s1.G.same_as(s2.H):
        raise StructureError("spans are not composable: middle feet differ")
    sq = iso_comma(s1.i, s2.u)
    u = compose_functors(s1.u, sq.p)
    i = compose_functors(s2.i, sq.q)
    if skeleton:
        _, inc = skeletonize(sq.apex)
        u = compose_functors(u, inc)
        i = compose_functors(i, inc)
    return Span(u, i)
