"""
Bisets finitos sobre grupoides: funtores H^op x G -> set.

Un G,H-biset tiene accion izquierda de G y derecha de H. Cada elemento
lleva su tipo ``(y, x)`` con y objeto de H y x objeto de G:

* g in G(x, x') manda un elemento de tipo (y, x) a uno de tipo (y, x');
* h in H(y', y) manda un elemento de tipo (y, x) a uno de tipo (y', x).

Las acciones se guardan como tablas ``{(g, s): g.s}`` y ``{(s, h): s.h}``.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Any, Callable, Dict, FrozenSet, Hashable, List, Optional, Sequence, Tuple
import logging

from mot2.disjoint_set import DisjointSet
from mot2.errors import StructureError
from mot2.groupoids import FiniteGroupoid, GroupoidFunctor
from mot2.groups import Subgroup, canonical_conjugate, direct_product

log = logging.getLogger("mot2.bisets")

Type = Tuple[int, int]


class Biset:
    def __init__(self, left: FiniteGroupoid, right: FiniteGroupoid, types: Sequence[Type],
                 lact: Dict[Tuple[int, int], int], ract: Dict[Tuple[int, int], int],
                 labels: Sequence[Hashable], name: str = "S", provenance: Any = None, verify: bool = True):
        self.left = left
        self.right = right
        self.types: Tuple[Type, ...] = tuple(types)
        self.lact = lact
        self.ract = ract
        self.labels = tuple(labels)
        self.name = name
        self.provenance = provenance
        if verify:
            self.verify()

    def __repr__(self) -> str:
        return f"Biset({self.name}: {self.left.name},{self.right.name}, size={self.size})"

    def __len__(self) -> int:
        return len(self.types)

    @property
    def size(self) -> int:
        return len(self.types)

    @property
    def elements(self) -> range:
        return range(self.size)

    def right_obj(self, s: int) -> int:
        return self.types[s][0]

    def left_obj(self, s: int) -> int:
        return self.types[s][1]

    def act_left(self, g: int, s: int) -> int:
        return self.lact[(g, s)]

    def act_right(self, s: int, h: int) -> int:
        return self.ract[(s, h)]

    @cached_property
    def by_left_obj(self) -> Dict[int, List[int]]:
        out: Dict[int, List[int]] = {}
        for s, (_, x) in enumerate(self.types):
            out.setdefault(x, []).append(s)
        return out

    @cached_property
    def by_right_obj(self) -> Dict[int, List[int]]:
        out: Dict[int, List[int]] = {}
        for s, (y, _) in enumerate(self.types):
            out.setdefault(y, []).append(s)
        return out

    @cached_property
    def label_index(self) -> Dict[Hashable, int]:
        return {l: i for i, l in enumerate(self.labels)}

    def same_as(self, other: "Biset") -> bool:
        if self is other:
            return True
        return (self.left.same_as(other.left) and self.right.same_as(other.right)
                and self.types == other.types and self.lact == other.lact and self.ract == other.ract)

    # ---------------------------------
    # Verificacion
    # ---------------------------------
    def verify(self) -> "Biset":
        G, H = self.left, self.right
        for s, (y, x) in enumerate(self.types):
            if self.lact.get((G.ident[x], s)) != s or self.ract.get((s, H.ident[y])) != s:
                raise StructureError(f"{self.name}: identities do not act trivially on element {s}")
            for g in G.out_morphisms(x):
                t = self.lact.get((g, s))
                if t is None or self.types[t] != (y, G.tgt[g]):
                    raise StructureError(f"{self.name}: left action of {g} on {s} has the wrong type")
            for h in H.in_morphisms(y):
                t = self.ract.get((s, h))
                if t is None or self.types[t] != (H.src[h], x):
                    raise StructureError(f"{self.name}: right action of {h} on {s} has the wrong type")
        # funtorialidad: basta comprobar contra generadores y sus inversos
        for s, (y, x) in enumerate(self.types):
            for g1 in G.out_morphisms(x):
                t = self.lact[(g1, s)]
                for g2 in G.symmetric_generators:
                    if G.src[g2] == G.tgt[g1] and self.lact[(g2, t)] != self.lact[(G.compose(g2, g1), s)]:
                        raise StructureError(f"{self.name}: left action is not functorial at {s}")
            for h1 in H.in_morphisms(y):
                t = self.ract[(s, h1)]
                for h2 in H.symmetric_generators:
                    if H.tgt[h2] == H.src[h1] and self.ract[(t, h2)] != self.ract[(s, H.compose(h1, h2))]:
                        raise StructureError(f"{self.name}: right action is not functorial at {s}")
            for g in G.symmetric_generators:
                if G.src[g] != x:
                    continue
                for h in H.symmetric_generators:
                    if H.tgt[h] != y:
                        continue
                    if self.ract[(self.lact[(g, s)], h)] != self.lact[(g, self.ract[(s, h)])]:
                        raise StructureError(f"{self.name}: actions do not commute at {s}")
        return self

    # ---------------------------------
    # Orbitas y estabilizadores
    # ---------------------------------
    @cached_property
    def orbits(self) -> List[Tuple[int, ...]]:
        ds: DisjointSet[int] = DisjointSet(self.elements)
        for (g, s), t in self.lact.items():
            ds.union(s, t)
        for (s, h), t in self.ract.items():
            ds.union(s, t)
        return ds.classes()

    @cached_property
    def orbit_index(self) -> Tuple[int, ...]:
        out = [0] * self.size
        for n, orb in enumerate(self.orbits):
            for s in orb:
                out[s] = n
        return tuple(out)

    def stabilizer(self, s: int) -> FrozenSet[Tuple[int, int]]:
        """{(g, h) in G(x,x) x H(y,y) : g.s = s.h}."""
        y, x = self.types[s]
        right_of = {}
        for h in self.right.vertex_group(y):
            right_of.setdefault(self.ract[(s, h)], []).append(h)
        out = set()
        for g in self.left.vertex_group(x):
            for h in right_of.get(self.lact[(g, s)], []):
                out.add((g, h))
        return frozenset(out)

    def is_right_free(self) -> bool:
        H = self.right
        for s, (y, _) in enumerate(self.types):
            for h in H.vertex_group(y):
                if h != H.ident[y] and self.ract[(s, h)] == s:
                    return False
        return True

    def is_left_free(self) -> bool:
        G = self.left
        for s, (_, x) in enumerate(self.types):
            for g in G.vertex_group(x):
                if g != G.ident[x] and self.lact[(g, s)] == s:
                    return False
        return True

    def to_dict(self) -> Dict[str, Any]:
        return {
            "left": self.left.name,
            "right": self.right.name,
            "elements": [[repr(self.labels[s]), y, x] for s, (y, x) in enumerate(self.types)],
            "left_action": [[g, s, t] for (g, s), t in sorted(self.lact.items())],
            "right_action": [[s, h, t] for (s, h), t in sorted(self.ract.items())],
        }


def build_biset(left: FiniteGroupoid, right: FiniteGroupoid, elements: Sequence[Tuple[Hashable, int, int]],
                left_fn: Callable[[int, Hashable], Hashable], right_fn: Callable[[Hashable, int], Hashable],
                name: str = "S", provenance: Any = None, verify: bool = True) -> Biset:
    """
    Biset a partir de etiquetas: ``elements`` son triples (etiqueta, y, x) y
    las funciones devuelven la etiqueta de g.s y de s.h.
    """
    labels = [e[0] for e in elements]
    idx = {l: i for i, l in enumerate(labels)}
    if len(idx) != len(labels):
        raise StructureError(f"{name}: repeated element labels")
    types = [(y, x) for _, y, x in elements]
    lact, ract = {}, {}
    try:
        for i, (l, y, x) in enumerate(elements):
            for g in left.out_morphisms(x):
                lact[(g, i)] = idx[left_fn(g, l)]
            for h in right.in_morphisms(y):
                ract[(i, h)] = idx[right_fn(l, h)]
    except KeyError as e:
        raise StructureError(f"{name}: action leaves the element set ({e})")
    return Biset(left, right, types, lact, ract, labels, name=name, provenance=provenance, verify=verify)


@lru_cache(maxsize=None)
def identity_biset(G: FiniteGroupoid) -> Biset:
    """G(-, -): elements are morphisms f: x -> x' of type (x, x')."""
    elements = [(m, G.src[m], G.tgt[m]) for m in range(G.n_morphisms)]
    return build_biset(G, G, elements, lambda g, f: G.compose(g, f), lambda f, h: G.compose(f, h),
                       name=f"Id_{G.name}")


def restrict(S: Biset, left: Optional[GroupoidFunctor] = None, right: Optional[GroupoidFunctor] = None,
             name: Optional[str] = None) -> Biset:
    """S(K-, F-) for F: G' -> G on the left and K: H' -> H on the right."""
    Gp = left.source if left is not None else S.left
    Hp = right.source if right is not None else S.right
    F = (lambda g: left.mor_map[g]) if left is not None else (lambda g: g)
    Fo = (lambda x: left.obj_map[x]) if left is not None else (lambda x: x)
    K = (lambda h: right.mor_map[h]) if right is not None else (lambda h: h)
    Ko = (lambda y: right.obj_map[y]) if right is not None else (lambda y: y)
    elements = []
    for yp in Hp.objects:
        for xp in Gp.objects:
            for s in S.by_right_obj.get(Ko(yp), []):
                if S.left_obj(s) == Fo(xp):
                    elements.append(((yp, xp, s), yp, xp))

    def left_fn(g, lab):
        yp, _, s = lab
        return (yp, Gp.tgt[g], S.act_left(F(g), s))

    def right_fn(lab, h):
        _, xp, s = lab
        return (Hp.src[h], xp, S.act_right(s, K(h)))

    return build_biset(Gp, Hp, elements, left_fn, right_fn, name=name or f"res({S.name})")


def sub_biset(S: Biset, elements: Sequence[int], name: Optional[str] = None) -> Tuple[Biset, "EquivariantMap"]:
    """Closed subset as a biset, with its inclusion."""
    elems = sorted(elements)
    pos = {s: i for i, s in enumerate(elems)}
    lact, ract = {}, {}
    for (g, s), t in S.lact.items():
        if s in pos:
            if t not in pos:
                raise StructureError("subset is not closed under the left action")
            lact[(g, pos[s])] = pos[t]
    for (s, h), t in S.ract.items():
        if s in pos:
            if t not in pos:
                raise StructureError("subset is not closed under the right action")
            ract[(pos[s], h)] = pos[t]
    sub = Biset(S.left, S.right, [S.types[s] for s in elems], lact, ract, [S.labels[s] for s in elems],
                name=name or f"{S.name}|sub", verify=False)
    return sub, EquivariantMap(sub, S, tuple(elems))


def disjoint_union_bisets(S: Biset, T: Biset, name: Optional[str] = None) -> Biset:
    if not (S.left.same_as(T.left) and S.right.same_as(T.right)):
        raise StructureError("disjoint union needs bisets over the same groupoids")
    n = S.size
    lact = dict(S.lact)
    lact.update({(g, n + s): n + t for (g, s), t in T.lact.items()})
    ract = dict(S.ract)
    ract.update({(n + s, h): n + t for (s, h), t in T.ract.items()})
    labels = [(0, l) for l in S.labels] + [(1, l) for l in T.labels]
    return Biset(S.left, S.right, S.types + T.types, lact, ract, labels, name=name or f"{S.name}+{T.name}")


# ---------------------------------
# Tensor (coend)
# ---------------------------------
@dataclass(frozen=True, eq=False)
class TensorData:
    left_factor: Biset
    right_factor: Biset
    quotient: Dict[Tuple[int, int], int]


@lru_cache(maxsize=4096)
def tensor(T: Biset, S: Biset) -> Biset:
    """T x_H S for a G,H-biset T and an H,K-biset S."""
    if not T.right.same_as(S.left):
        raise StructureError(f"tensor: middle groupoids differ ({T.right.name} vs {S.left.name})")
    H = T.right
    pairs = [(t, s) for y in H.objects for t in T.by_right_obj.get(y, []) for s in S.by_left_obj.get(y, [])]
    ds: DisjointSet[Tuple[int, int]] = DisjointSet(pairs)
    for t in T.elements:
        y = T.right_obj(t)
        for h in H.symmetric_generators:
            if H.tgt[h] != y:
                continue
            th = T.act_right(t, h)
            for s in S.by_left_obj.get(H.src[h], []):
                ds.union((th, s), (t, S.act_left(h, s)))
    classes = ds.classes()
    quotient = {p: n for n, cls in enumerate(classes) for p in cls}
    types = [(S.right_obj(cls[0][1]), T.left_obj(cls[0][0])) for cls in classes]
    lact, ract = {}, {}
    G, K = T.left, S.right
    for n, cls in enumerate(classes):
        t, s = cls[0]
        for g in G.out_morphisms(T.left_obj(t)):
            lact[(g, n)] = quotient[(T.act_left(g, t), s)]
        for k in K.in_morphisms(S.right_obj(s)):
            ract[(n, k)] = quotient[(t, S.act_right(s, k))]
    out = Biset(G, K, types, lact, ract, [cls[0] for cls in classes], name=f"({T.name}x{S.name})",
                provenance=TensorData(T, S, quotient))
    log.info("tensor %s: %d pairs -> %d classes", out.name, len(pairs), out.size)
    return out


def tensor_maps(f: "EquivariantMap", g: "EquivariantMap") -> "EquivariantMap":
    """f x g : T x S -> T' x S'."""
    src = tensor(f.source, g.source)
    tgt = tensor(f.target, g.target)
    q = tgt.provenance.quotient
    mapping = tuple(q[(f.mapping[t], g.mapping[s])] for t, s in src.labels)
    return EquivariantMap(src, tgt, mapping)


# ---------------------------------
# Mapas equivariantes
# ---------------------------------
@dataclass(frozen=True, eq=False)
class EquivariantMap:
    source: Biset
    target: Biset
    mapping: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(self.mapping))

    def __call__(self, s: int) -> int:
        return self.mapping[s]

    def verify(self) -> "EquivariantMap":
        S, T = self.source, self.target
        if not (S.left.same_as(T.left) and S.right.same_as(T.right)):
            raise StructureError("equivariant map between bisets over different groupoids")
        if len(self.mapping) != S.size:
            raise StructureError("map table has the wrong size")
        for s in S.elements:
            if S.types[s] != T.types[self.mapping[s]]:
                raise StructureError(f"map does not preserve the type of element {s}")
        for (g, s), t in S.lact.items():
            if self.mapping[t] != T.act_left(g, self.mapping[s]):
                raise StructureError(f"map is not left equivariant at {s}")
        for (s, h), t in S.ract.items():
            if self.mapping[t] != T.act_right(self.mapping[s], h):
                raise StructureError(f"map is not right equivariant at {s}")
        return self

    def is_bijective(self) -> bool:
        return len(set(self.mapping)) == self.target.size == self.source.size

    def inverse(self) -> "EquivariantMap":
        if not self.is_bijective():
            raise StructureError("map is not invertible")
        inv = [0] * self.target.size
        for s, t in enumerate(self.mapping):
            inv[t] = s
        return EquivariantMap(self.target, self.source, tuple(inv))

    def fiber(self, t: int) -> List[int]:
        return [s for s, u in enumerate(self.mapping) if u == t]


def identity_map(S: Biset) -> EquivariantMap:
    return EquivariantMap(S, S, tuple(S.elements))


def compose_maps(f2: EquivariantMap, f1: EquivariantMap) -> EquivariantMap:
    """f2 o f1."""
    if not f1.target.same_as(f2.source):
        raise StructureError("maps are not composable")
    return EquivariantMap(f1.source, f2.target, tuple(f2.mapping[x] for x in f1.mapping))


def pullback(alpha: EquivariantMap, beta: EquivariantMap) -> Tuple[Biset, EquivariantMap, EquivariantMap]:
    """W x_V W' for alpha: W -> V and beta: W' -> V."""
    if not alpha.target.same_as(beta.target):
        raise StructureError("pullback needs maps into the same biset")
    W, Wp = alpha.source, beta.source
    fib: Dict[int, List[int]] = {}
    for w2, v in enumerate(beta.mapping):
        fib.setdefault(v, []).append(w2)
    elements = [((w, w2), W.right_obj(w), W.left_obj(w)) for w in W.elements for w2 in fib.get(alpha(w), [])]
    P = build_biset(W.left, W.right, elements,
                    lambda g, l: (W.act_left(g, l[0]), Wp.act_left(g, l[1])),
                    lambda l, h: (W.act_right(l[0], h), Wp.act_right(l[1], h)),
                    name=f"({W.name}x_V{Wp.name})", verify=False)
    pr1 = EquivariantMap(P, W, tuple(l[0] for l in P.labels))
    pr2 = EquivariantMap(P, Wp, tuple(l[1] for l in P.labels))
    return P, pr1, pr2


# ---------------------------------
# Bisets transitivos
# ---------------------------------
def coset_biset(G: FiniteGroupoid, H: FiniteGroupoid, y0: int, x0: int, stab: FrozenSet[Tuple[int, int]],
                name: Optional[str] = None) -> Biset:
    """
    Transitive G,H-biset generated by a point of type (y0, x0) with
    stabilizer ``stab`` = {(a, b) : a.s0 = s0.b}. The class [g, h] stands for g.s0.h.
    """
    pairs = [(g, h) for g in G.out_morphisms(x0) for h in H.in_morphisms(y0)]
    cls_of: Dict[Tuple[int, int], Tuple[int, int]] = {}
    for g, h in pairs:
        if (g, h) in cls_of:
            continue
        members = {(G.compose(g, a), H.compose(H.inv(b), h)) for a, b in stab}
        rep = min(members)
        for m in members:
            if m in cls_of:
                raise StructureError("stabilizer data is not a subgroup")
            cls_of[m] = rep
    reps = sorted(set(cls_of.values()))
    elements = [(r, H.src[r[1]], G.tgt[r[0]]) for r in reps]
    return build_biset(G, H, elements,
                       lambda g2, r: cls_of[(G.compose(g2, r[0]), r[1])],
                       lambda r, h2: cls_of[(r[0], H.compose(r[1], h2))],
                       name=name or f"{G.name}x{H.name}/T{len(stab)}")


def stabilizer_pairs(M: Subgroup) -> FrozenSet[Tuple[int, int]]:
    GxG = M.parent
    return frozenset(GxG.pair(m) for m in M.elements)


def transitive_biset(G1: FiniteGroupoid, G2: FiniteGroupoid, M: Subgroup) -> Biset:
    """(G1 x G2)/M with (g1, g2).x = g1 x g2^-1."""
    return coset_biset(G1, G2, 0, 0, stabilizer_pairs(M), name=f"({G1.name}x{G2.name})/M{M.order}")


def stabilizer_subgroup(S: Biset, s: int) -> Subgroup:
    """Stab(s) as a subgroup of G1 x G2 (both sides groups)."""
    GxH = direct_product(S.left.group, S.right.group)
    return Subgroup(GxH, tuple(sorted(GxH.from_pair(g, h) for g, h in S.stabilizer(s))))


@dataclass(frozen=True, eq=False)
class OrbitPiece:
    stabilizer: Subgroup
    base: int
    elements: Tuple[int, ...]
    piece: Biset


def orbit_decomposition(S: Biset) -> List[OrbitPiece]:
    if not (hasattr(S.left, "group") and hasattr(S.right, "group")):
        raise StructureError("orbit_decomposition needs bisets between groups")
    out = []
    for orb in S.orbits:
        base = orb[0]
        M = canonical_conjugate(stabilizer_subgroup(S, base))
        piece, _ = sub_biset(S, orb)
        out.append(OrbitPiece(M, base, orb, piece))
    return out


# ---------------------------------
# Isomorfismos
# ---------------------------------
def _extend_from_base(S: Biset, T: Biset, s0: int, t0: int) -> Optional[Dict[int, int]]:
    mapping = {s0: t0}
    frontier = [s0]
    while frontier:
        nxt = []
        for s in frontier:
            y, x = S.types[s]
            t = mapping[s]
            moves = [(S.act_left(g, s), T.act_left(g, t)) for g in S.left.symmetric_generators if S.left.src[g] == x]
            moves += [(S.act_right(s, h), T.act_right(t, h)) for h in S.right.symmetric_generators if S.right.tgt[h] == y]
            for s2, t2 in moves:
                if s2 in mapping:
                    if mapping[s2] != t2:
                        return None
                else:
                    mapping[s2] = t2
                    nxt.append(s2)
        frontier = nxt
    return mapping


def is_isomorphic(S: Biset, T: Biset) -> Optional[EquivariantMap]:
    """An isomorphism S -> T matched orbit by orbit on (type, stabilizer), or None."""
    if not (S.left.same_as(T.left) and S.right.same_as(T.right)) or S.size != T.size:
        return None
    if S is T:
        return identity_map(S)
    used = set()
    mapping: Dict[int, int] = {}
    for orb in S.orbits:
        s0 = orb[0]
        key = (S.types[s0], S.stabilizer(s0), len(orb))
        found = None
        for n, torb in enumerate(T.orbits):
            if n in used or len(torb) != len(orb):
                continue
            for t0 in torb:
                if T.types[t0] == key[0] and T.stabilizer(t0) == key[1]:
                    found = (n, t0)
                    break
            if found:
                break
        if found is None:
            return None
        part = _extend_from_base(S, T, s0, found[1])
        if part is None:
            return None
        used.add(found[0])
        mapping.update(part)
    f = EquivariantMap(S, T, tuple(mapping[s] for s in S.elements))
    if not f.is_bijective():
        return None
    return f.verify()


# ---------------------------------
# Isomorfismos estructurales
# ---------------------------------
def associator(A: Biset, B: Biset, C: Biset) -> EquivariantMap:
    """(A x B) x C -> A x (B x C), [[a, b], c] -> [a, [b, c]]."""
    AB = tensor(A, B)
    src = tensor(AB, C)
    BC = tensor(B, C)
    tgt = tensor(A, BC)
    mapping = []
    for ab, c in src.labels:
        a, b = AB.labels[ab]
        mapping.append(tgt.provenance.quotient[(a, BC.provenance.quotient[(b, c)])])
    return EquivariantMap(src, tgt, tuple(mapping))


def left_unitor(S: Biset) -> EquivariantMap:
    """Id_G x S -> S, [g, s] -> g.s."""
    src = tensor(identity_biset(S.left), S)
    return EquivariantMap(src, S, tuple(S.act_left(g, s) for g, s in src.labels))


def right_unitor(S: Biset) -> EquivariantMap:
    """S x Id_H -> S, [s, h] -> s.h."""
    src = tensor(S, identity_biset(S.right))
    return EquivariantMap(src, S, tuple(S.act_right(s, h) for s, h in src.labels))
