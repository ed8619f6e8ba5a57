"""
Grupoides finitos explicitos, funtores entre ellos y cuadrados de Mackey.

Los morfismos son enteros; ``comp[(g, f)]`` es ``g o f`` para f: a -> b y
g: b -> c. Un grupo es el grupoide de un objeto cuyos morfismos son sus
elementos (mismo indice).
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Any, Dict, Hashable, List, Optional, Sequence, Tuple
import logging
import random

from mot2.disjoint_set import DisjointSet
from mot2.errors import StructureError
from mot2.groups import FiniteGroup, Subgroup, catalog_group, subgroup_as_group

log = logging.getLogger("mot2.groupoids")

ASSOC_FULL_LIMIT = 2000
ASSOC_TRIPLE_BUDGET = 200_000
ASSOC_SAMPLE = 20_000


class FiniteGroupoid:
    """A finite groupoid with an explicit composition table."""

    def __init__(self, name: str, object_labels: Sequence[Hashable], src: Sequence[int], tgt: Sequence[int],
                 comp: Dict[Tuple[int, int], int], ident: Sequence[int], inv: Sequence[int],
                 labels: Optional[Sequence[Hashable]] = None, verify: bool = True):
        self.name = name
        self.object_labels = tuple(object_labels)
        self.src = tuple(src)
        self.tgt = tuple(tgt)
        self.comp = comp
        self.ident = tuple(ident)
        self.inv_table = tuple(inv)
        self.labels = tuple(labels) if labels is not None else tuple(range(len(self.src)))
        homs: Dict[Tuple[int, int], List[int]] = {}
        outs: List[List[int]] = [[] for _ in self.object_labels]
        ins: List[List[int]] = [[] for _ in self.object_labels]
        for m in range(len(self.src)):
            homs.setdefault((self.src[m], self.tgt[m]), []).append(m)
            outs[self.src[m]].append(m)
            ins[self.tgt[m]].append(m)
        self._homs = homs
        self._outs = outs
        self._ins = ins
        if verify:
            self.verify()

    def __repr__(self) -> str:
        return f"FiniteGroupoid({self.name}, objects={self.n_objects}, morphisms={self.n_morphisms})"

    @property
    def n_objects(self) -> int:
        return len(self.object_labels)

    @property
    def n_morphisms(self) -> int:
        return len(self.src)

    @property
    def objects(self) -> range:
        return range(self.n_objects)

    def hom(self, a: int, b: int) -> List[int]:
        return self._homs.get((a, b), [])

    def out_morphisms(self, a: int) -> List[int]:
        return self._outs[a]

    def in_morphisms(self, b: int) -> List[int]:
        return self._ins[b]

    def vertex_group(self, a: int) -> List[int]:
        return self.hom(a, a)

    def compose(self, g: int, f: int) -> int:
        """g o f."""
        try:
            return self.comp[(g, f)]
        except KeyError:
            raise StructureError(f"{self.name}: morphisms {g} o {f} not composable")

    def inv(self, f: int) -> int:
        return self.inv_table[f]

    @cached_property
    def key(self) -> Tuple:
        return (self.object_labels, self.src, self.tgt, tuple(sorted(self.comp.items())))

    def same_as(self, other: "FiniteGroupoid") -> bool:
        return self is other or self.key == other.key

    # ---------------------------------
    # Verificacion
    # ---------------------------------
    def verify(self, seed: int = 0) -> None:
        n = self.n_morphisms
        for a in self.objects:
            e = self.ident[a]
            if self.src[e] != a or self.tgt[e] != a:
                raise StructureError(f"{self.name}: identity of object {a} is not an endomorphism")
        for f in range(n):
            a, b = self.src[f], self.tgt[f]
            if self.comp.get((f, self.ident[a])) != f or self.comp.get((self.ident[b], f)) != f:
                raise StructureError(f"{self.name}: identity law fails at morphism {f}")
            g = self.inv_table[f]
            if self.comp.get((g, f)) != self.ident[a] or self.comp.get((f, g)) != self.ident[b]:
                raise StructureError(f"{self.name}: morphism {f} has no two-sided inverse")
        for (g, f), h in self.comp.items():
            if self.src[g] != self.tgt[f] or self.src[h] != self.src[f] or self.tgt[h] != self.tgt[g]:
                raise StructureError(f"{self.name}: composite {g} o {f} has wrong endpoints")
        triples = sum(len(self._outs[self.tgt[g]]) for f in range(n) for g in self._outs[self.tgt[f]])
        if n < ASSOC_FULL_LIMIT and triples <= ASSOC_TRIPLE_BUDGET:
            for f in range(n):
                for g in self._outs[self.tgt[f]]:
                    gf = self.comp[(g, f)]
                    for h in self._outs[self.tgt[g]]:
                        if self.comp[(h, gf)] != self.comp[(self.comp[(h, g)], f)]:
                            raise StructureError(f"{self.name}: associativity fails at ({h},{g},{f})")
        elif n:
            rng = random.Random(seed)
            for _ in range(ASSOC_SAMPLE):
                f = rng.randrange(n)
                g = rng.choice(self._outs[self.tgt[f]])
                h = rng.choice(self._outs[self.tgt[g]])
                if self.comp[(h, self.comp[(g, f)])] != self.comp[(self.comp[(h, g)], f)]:
                    raise StructureError(f"{self.name}: associativity fails at ({h},{g},{f})")
            log.info("%s: associativity sampled (%d morphisms, %d triples)", self.name, n, triples)

    # ---------------------------------
    # Componentes y generadores
    # ---------------------------------
    @cached_property
    def component_of(self) -> Tuple[int, ...]:
        """Minimal object of the connected component of each object."""
        ds: DisjointSet[int] = DisjointSet(self.objects)
        for f in range(self.n_morphisms):
            ds.union(self.src[f], self.tgt[f])
        first = {x: cls[0] for cls in ds.classes() for x in cls}
        return tuple(first[x] for x in self.objects)

    @property
    def components(self) -> List[List[int]]:
        groups: Dict[int, List[int]] = {}
        for x, c in enumerate(self.component_of):
            groups.setdefault(c, []).append(x)
        return [groups[c] for c in sorted(groups)]

    def connecting_morphism(self, a: int, b: int) -> Optional[int]:
        hs = self.hom(a, b)
        return hs[0] if hs else None

    @cached_property
    def generating_morphisms(self) -> Tuple[int, ...]:
        """Spanning-tree morphisms from each component base plus generators of the base vertex groups."""
        gens: List[int] = []
        for comp in self.components:
            base = comp[0]
            for x in comp[1:]:
                gens.append(self.hom(base, x)[0])
            gens.extend(self._vertex_generators(base))
        return tuple(gens)

    @cached_property
    def symmetric_generators(self) -> Tuple[int, ...]:
        """Generating morphisms together with their inverses."""
        gens = list(self.generating_morphisms)
        return tuple(dict.fromkeys(gens + [self.inv(g) for g in gens]))

    def _vertex_generators(self, a: int) -> List[int]:
        gens: List[int] = []
        e = self.ident[a]
        reached = {e}
        for m in self.vertex_group(a):
            if m in reached:
                continue
            gens.append(m)
            reached = {e}
            frontier = [e]
            while frontier:
                nxt = []
                for x in frontier:
                    for g in gens:
                        y = self.comp[(g, x)]
                        if y not in reached:
                            reached.add(y)
                            nxt.append(y)
                frontier = nxt
        return gens

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "objects": [repr(o) for o in self.object_labels],
            "morphisms": [[self.src[m], self.tgt[m], repr(self.labels[m])] for m in range(self.n_morphisms)],
            "composition": [[g, f, h] for (g, f), h in sorted(self.comp.items())],
        }


# ---------------------------------
# Construcciones
# ---------------------------------
@lru_cache(maxsize=None)
def from_group(G: FiniteGroup) -> FiniteGroupoid:
    n = G.order
    comp = {(g, f): G.mul(g, f) for g in range(n) for f in range(n)}
    gpd = FiniteGroupoid(G.name, ("*",), [0] * n, [0] * n, comp, [0], [G.inv(g) for g in range(n)],
                         labels=[G.cycles(g) for g in range(n)], verify=n < ASSOC_FULL_LIMIT)
    gpd.group = G
    if G.generator_indices:
        gpd.__dict__["generating_morphisms"] = G.generator_indices
    return gpd


def trivial_groupoid() -> FiniteGroupoid:
    return from_group(catalog_group("C1"))


def disjoint_union(A: FiniteGroupoid, B: FiniteGroupoid) -> FiniteGroupoid:
    na, ma = A.n_objects, A.n_morphisms
    src = list(A.src) + [na + s for s in B.src]
    tgt = list(A.tgt) + [na + t for t in B.tgt]
    comp = dict(A.comp)
    comp.update({(ma + g, ma + f): ma + h for (g, f), h in B.comp.items()})
    ident = list(A.ident) + [ma + e for e in B.ident]
    inv = list(A.inv_table) + [ma + i for i in B.inv_table]
    objs = [(0, o) for o in A.object_labels] + [(1, o) for o in B.object_labels]
    labels = [(0, l) for l in A.labels] + [(1, l) for l in B.labels]
    return FiniteGroupoid(f"{A.name}+{B.name}", objs, src, tgt, comp, ident, inv, labels)


def product_groupoid(A: FiniteGroupoid, B: FiniteGroupoid) -> FiniteGroupoid:
    mb, ob = B.n_morphisms, B.n_objects
    n = A.n_morphisms * mb
    src = [A.src[m // mb] * ob + B.src[m % mb] for m in range(n)]
    tgt = [A.tgt[m // mb] * ob + B.tgt[m % mb] for m in range(n)]
    comp = {}
    for (g1, f1), h1 in A.comp.items():
        for (g2, f2), h2 in B.comp.items():
            comp[(g1 * mb + g2, f1 * mb + f2)] = h1 * mb + h2
    ident = [A.ident[a] * mb + B.ident[b] for a in A.objects for b in B.objects]
    inv = [A.inv(m // mb) * mb + B.inv(m % mb) for m in range(n)]
    objs = [(a, b) for a in A.object_labels for b in B.object_labels]
    labels = [(A.labels[m // mb], B.labels[m % mb]) for m in range(n)]
    return FiniteGroupoid(f"{A.name}x{B.name}", objs, src, tgt, comp, ident, inv, labels)


def full_subgroupoid(G: FiniteGroupoid, objects: Sequence[int], name: Optional[str] = None) -> Tuple[FiniteGroupoid, "GroupoidFunctor"]:
    """Full subgroupoid on ``objects`` and its inclusion."""
    objs = list(objects)
    pos = {x: i for i, x in enumerate(objs)}
    mors = [m for m in range(G.n_morphisms) if G.src[m] in pos and G.tgt[m] in pos]
    mpos = {m: i for i, m in enumerate(mors)}
    comp = {(mpos[g], mpos[f]): mpos[G.comp[(g, f)]]
            for g in mors for f in mors if G.src[g] == G.tgt[f]}
    sub = FiniteGroupoid(name or f"{G.name}|full", [G.object_labels[x] for x in objs],
                         [pos[G.src[m]] for m in mors], [pos[G.tgt[m]] for m in mors], comp,
                         [mpos[G.ident[x]] for x in objs], [mpos[G.inv(m)] for m in mors],
                         [G.labels[m] for m in mors])
    return sub, GroupoidFunctor(sub, G, tuple(objs), tuple(mors))


def skeletonize(G: FiniteGroupoid) -> Tuple[FiniteGroupoid, "GroupoidFunctor"]:
    """One object per component (the minimal one); returns the skeleton and its inclusion."""
    reps = [c[0] for c in G.components]
    sk, inc = full_subgroupoid(G, reps, name=f"sk({G.name})")
    log.info("skeletonize %s: %d -> %d objects", G.name, G.n_objects, sk.n_objects)
    return sk, inc


# ---------------------------------
# Funtores
# ---------------------------------
@dataclass(frozen=True, eq=False)
class GroupoidFunctor:
    source: FiniteGroupoid
    target: FiniteGroupoid
    obj_map: Tuple[int, ...]
    mor_map: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "obj_map", tuple(self.obj_map))
        object.__setattr__(self, "mor_map", tuple(self.mor_map))

    def verify(self) -> "GroupoidFunctor":
        S, T = self.source, self.target
        if len(self.obj_map) != S.n_objects or len(self.mor_map) != S.n_morphisms:
            raise StructureError("functor tables have the wrong size")
        for m in range(S.n_morphisms):
            fm = self.mor_map[m]
            if T.src[fm] != self.obj_map[S.src[m]] or T.tgt[fm] != self.obj_map[S.tgt[m]]:
                raise StructureError(f"functor does not preserve endpoints of morphism {m}")
        for a in S.objects:
            if self.mor_map[S.ident[a]] != T.ident[self.obj_map[a]]:
                raise StructureError(f"functor does not preserve the identity of object {a}")
        for (g, f), h in S.comp.items():
            if T.comp[(self.mor_map[g], self.mor_map[f])] != self.mor_map[h]:
                raise StructureError(f"functor does not preserve {g} o {f}")
        return self

    def __call__(self, m: int) -> int:
        return self.mor_map[m]

    def obj(self, a: int) -> int:
        return self.obj_map[a]

    def is_faithful(self) -> bool:
        for hs in self.source._homs.values():
            images = {self.mor_map[m] for m in hs}
            if len(images) != len(hs):
                return False
        return True

    def is_full(self) -> bool:
        S, T = self.source, self.target
        for a in S.objects:
            for b in S.objects:
                want = set(T.hom(self.obj_map[a], self.obj_map[b]))
                got = {self.mor_map[m] for m in S.hom(a, b)}
                if want != got:
                    return False
        return True

    def is_essentially_surjective(self) -> bool:
        T = self.target
        hit = {T.component_of[self.obj_map[a]] for a in self.source.objects}
        return all(T.component_of[y] in hit for y in T.objects)

    def is_equivalence(self) -> bool:
        return self.is_faithful() and self.is_full() and self.is_essentially_surjective()


def identity_functor(G: FiniteGroupoid) -> GroupoidFunctor:
    return GroupoidFunctor(G, G, tuple(G.objects), tuple(range(G.n_morphisms)))


def compose_functors(F2: GroupoidFunctor, F1: GroupoidFunctor) -> GroupoidFunctor:
    """F2 o F1."""
    if not F1.target.same_as(F2.source):
        raise StructureError("functors are not composable")
    return GroupoidFunctor(F1.source, F2.target,
                           tuple(F2.obj_map[x] for x in F1.obj_map),
                           tuple(F2.mor_map[m] for m in F1.mor_map))


def pairing(F1: GroupoidFunctor, F2: GroupoidFunctor) -> GroupoidFunctor:
    """(F1, F2): P -> A x B for F1: P -> A and F2: P -> B."""
    if not F1.source.same_as(F2.source):
        raise StructureError("pairing needs a common source")
    A, B = F1.target, F2.target
    AB = product_groupoid(A, B)
    ob, mb = B.n_objects, B.n_morphisms
    P = F1.source
    return GroupoidFunctor(P, AB,
                           tuple(F1.obj_map[x] * ob + F2.obj_map[x] for x in P.objects),
                           tuple(F1.mor_map[m] * mb + F2.mor_map[m] for m in range(P.n_morphisms)))


def group_hom_functor(P: FiniteGroup, G: FiniteGroup, phi: Sequence[int]) -> GroupoidFunctor:
    return GroupoidFunctor(from_group(P), from_group(G), (0,), tuple(phi)).verify()


def terminal_functor(G: FiniteGroupoid) -> GroupoidFunctor:
    return GroupoidFunctor(G, trivial_groupoid(), (0,) * G.n_objects, (0,) * G.n_morphisms)


@lru_cache(maxsize=None)
def subgroup_inclusion(H: Subgroup) -> GroupoidFunctor:
    """H as a one-object groupoid, included into its parent group."""
    K, emb = subgroup_as_group(H, name=f"{H.parent.name}_H{H.order}")
    return GroupoidFunctor(from_group(K), from_group(H.parent), (0,), emb)


# ---------------------------------
# Cuadrados de Mackey (iso-comma)
# ---------------------------------
@dataclass(frozen=True, eq=False)
class MackeySquare:
    """Iso-comma of i: H -> G and u: K -> G, with p: P -> H, q: P -> K and gamma: i p => u q."""

    apex: FiniteGroupoid
    p: GroupoidFunctor
    q: GroupoidFunctor
    i: GroupoidFunctor
    u: GroupoidFunctor
    gamma: Tuple[int, ...]

    def verify(self) -> "MackeySquare":
        P, G = self.apex, self.i.target
        for z in P.objects:
            g = self.gamma[z]
            if G.src[g] != self.i.obj(self.p.obj(z)) or G.tgt[g] != self.u.obj(self.q.obj(z)):
                raise StructureError(f"gamma component at {z} has wrong endpoints")
        for m in range(P.n_morphisms):
            a, b = P.src[m], P.tgt[m]
            lhs = G.compose(self.u(self.q(m)), self.gamma[a])
            rhs = G.compose(self.gamma[b], self.i(self.p(m)))
            if lhs != rhs:
                raise StructureError(f"gamma is not natural at morphism {m}")
        return self


def iso_comma(i: GroupoidFunctor, u: GroupoidFunctor) -> MackeySquare:
    G = i.target
    if not G.same_as(u.target):
        raise StructureError("iso_comma needs functors into a common groupoid")
    H, K = i.source, u.source
    objs: List[Tuple[int, int, int]] = []
    for x in H.objects:
        for y in K.objects:
            for g in G.hom(i.obj(x), u.obj(y)):
                objs.append((x, y, g))
    opos = {o: n for n, o in enumerate(objs)}
    src, tgt, labels = [], [], []
    mpos: Dict[Tuple[int, int, int], int] = {}
    for n, (x, y, g) in enumerate(objs):
        for h in H.out_morphisms(x):
            for k in K.out_morphisms(y):
                g2 = G.compose(G.compose(u(k), g), G.inv(i(h)))
                t = opos[(H.tgt[h], K.tgt[k], g2)]
                mpos[(n, h, k)] = len(src)
                src.append(n)
                tgt.append(t)
                labels.append((h, k))
    comp = {}
    for m1, (n1, (h1, k1)) in enumerate(zip(src, labels)):
        t1 = tgt[m1]
        for h2 in H.out_morphisms(H.tgt[h1]):
            for k2 in K.out_morphisms(K.tgt[k1]):
                m2 = mpos[(t1, h2, k2)]
                comp[(m2, m1)] = mpos[(n1, H.compose(h2, h1), K.compose(k2, k1))]
    ident = [mpos[(n, H.ident[x], K.ident[y])] for n, (x, y, g) in enumerate(objs)]
    inv = [mpos[(tgt[m], H.inv(h), K.inv(k))] for m, (h, k) in enumerate(labels)]
    apex = FiniteGroupoid(f"({H.name}/{G.name}\\{K.name})", objs, src, tgt, comp, ident, inv, labels)
    p = GroupoidFunctor(apex, H, tuple(x for x, _, _ in objs), tuple(h for h, _ in labels))
    q = GroupoidFunctor(apex, K, tuple(y for _, y, _ in objs), tuple(k for _, k in labels))
    log.info("iso_comma %s: %d objects, %d morphisms", apex.name, apex.n_objects, apex.n_morphisms)
    return MackeySquare(apex, p, q, i, u, tuple(g for _, _, g in objs))
