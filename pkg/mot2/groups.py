"""
Grupos finitos como grupos de permutaciones completamente enumerados.

Los elementos se guardan como tuplas imagen (base 0) y se ordenan
lexicograficamente; el indice de un elemento es su posicion en ese orden
canonico, asi que la identidad siempre es el indice 0. El producto
``mul(a, b)`` es la composicion "primero b, luego a".
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product as iproduct
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple
import logging
import re

from sympy.combinatorics import Permutation, PermutationGroup

from mot2.errors import GroupError, StructureError

log = logging.getLogger("mot2.groups")

Perm = Tuple[int, ...]

DEFAULT_MAX_ORDER = 10080
_TABLE_LIMIT = 2048


def _compose(a: Perm, b: Perm) -> Perm:
    return tuple(a[x] for x in b)


def _invert(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


class FiniteGroup:
    """A finite permutation group with every element enumerated."""

    def __init__(self, name: str, degree: int, generators: Sequence[Perm], elements: Sequence[Perm],
                 factors: Optional[Tuple["FiniteGroup", "FiniteGroup"]] = None):
        self.name = name
        self.degree = degree
        self.elements: Tuple[Perm, ...] = tuple(elements)
        if list(self.elements) != sorted(self.elements):
            raise StructureError(f"{name}: elements are not in canonical order")
        self.index: Dict[Perm, int] = {p: i for i, p in enumerate(self.elements)}
        self.generators: Tuple[Perm, ...] = tuple(generators)
        self.factors = factors
        self._inv = [self.index[_invert(p)] for p in self.elements]
        self._table: Optional[List[List[int]]] = None
        if len(self.elements) <= _TABLE_LIMIT:
            self._table = [[self.index[_compose(a, b)] for b in self.elements] for a in self.elements]
        if self.elements and self.elements[0] != tuple(range(degree)):
            raise StructureError(f"{name}: identity missing")

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> int:
        return 0

    @cached_property
    def generator_indices(self) -> Tuple[int, ...]:
        return tuple(sorted({self.index[g] for g in self.generators} - {0}))

    @cached_property
    def key(self) -> Tuple[Perm, ...]:
        return self.elements

    def mul(self, a: int, b: int) -> int:
        if self._table is not None:
            return self._table[a][b]
        return self.index[_compose(self.elements[a], self.elements[b])]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def conj(self, g: int, h: int) -> int:
        """g h g^-1."""
        return self.mul(self.mul(g, h), self._inv[g])

    def element_order(self, a: int) -> int:
        n, x = 1, a
        while x != 0:
            x = self.mul(x, a)
            n += 1
        return n

    def cycles(self, a: int) -> str:
        p = self.elements[a]
        return cycle_string(p)

    def pair(self, a: int) -> Tuple[int, int]:
        """Components of an element of a direct product."""
        if not self.factors:
            raise GroupError(f"{self.name} is not a direct product")
        n2 = self.factors[1].order
        return a // n2, a % n2

    def from_pair(self, a: int, b: int) -> int:
        if not self.factors:
            raise GroupError(f"{self.name} is not a direct product")
        return a * self.factors[1].order + b

    @cached_property
    def whole(self) -> "Subgroup":
        return Subgroup(self, tuple(range(self.order)))

    @cached_property
    def trivial(self) -> "Subgroup":
        return Subgroup(self, (0,))


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    elements: Tuple[int, ...]

    def __post_init__(self):
        if list(self.elements) != sorted(set(self.elements)):
            object.__setattr__(self, "elements", tuple(sorted(set(self.elements))))

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and self.parent is other.parent and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __contains__(self, g: int) -> bool:
        return g in self.element_set

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent.name})"

    @cached_property
    def element_set(self) -> FrozenSet[int]:
        return frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def key(self) -> Tuple[int, ...]:
        return self.elements

    def is_subgroup_of(self, other: "Subgroup") -> bool:
        return self.element_set <= other.element_set


# ---------------------------------
# Construccion de grupos
# ---------------------------------
def _parse_cycles(text: str, degree: int) -> Perm:
    text = text.strip()
    cycles = []
    for body in re.findall(r"\(([^()]*)\)", text):
        pts = [int(t) - 1 for t in re.split(r"[\s,]+", body.strip()) if t]
        if any(p < 0 or p >= degree for p in pts):
            raise GroupError(f"point out of range in cycle ({body}) for degree {degree}")
        if len(set(pts)) != len(pts):
            raise GroupError(f"repeated point in cycle ({body})")
        if len(pts) > 1:
            cycles.append(pts)
    if re.sub(r"\([^()]*\)", "", text).strip():
        raise GroupError(f"malformed permutation '{text}'")
    if not cycles:
        return tuple(range(degree))
    return tuple(Permutation(cycles, size=degree).array_form)


def cycle_string(p: Perm) -> str:
    if all(i == x for i, x in enumerate(p)):
        return "()"
    cyc = Permutation(list(p)).cyclic_form
    return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in cyc)


def group_from_generators(degree: int, generators: Iterable[Perm], name: str = "G",
                          max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    gens = [tuple(g) for g in generators]
    for g in gens:
        if len(g) != degree or sorted(g) != list(range(degree)):
            raise GroupError(f"{name}: {g} is not a permutation of degree {degree}")
    if gens and degree > 1:
        order = int(PermutationGroup([Permutation(list(g)) for g in gens]).order())
        if order > max_order:
            raise GroupError(f"{name}: closure has order {order} > max_order={max_order}")
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = _compose(g, a)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
        if len(seen) > max_order:
            raise GroupError(f"{name}: closure exceeds max_order={max_order}")
    log.info("group %s: degree=%d order=%d", name, degree, len(seen))
    return FiniteGroup(name, degree, gens, sorted(seen))


def parse_presentation(text: str, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """
    Parse ``NAME = perm(N): (1 2), (1 2 3)``.
    """
    m = re.match(r"^\s*([A-Za-z0-9_]+)\s*=\s*perm\(\s*(\d+)\s*\)\s*:\s*(.*)$", text.strip())
    if not m:
        raise GroupError(f"presentacion invalida: '{text.strip()}'")
    name, degree, rest = m.group(1), int(m.group(2)), m.group(3)
    gens = []
    # separa generadores por comas que no esten dentro de un ciclo
    depth, cur = 0, ""
    for ch in rest:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            gens.append(cur)
            cur = ""
        else:
            cur += ch
    if cur.strip():
        gens.append(cur)
    perms = [_parse_cycles(g, degree) for g in gens if g.strip()]
    return group_from_generators(degree, perms, name=name, max_order=max_order)


def presentation(G: FiniteGroup) -> str:
    gens = ", ".join(cycle_string(g) for g in G.generators) or "()"
    return f"{G.name} = perm({G.degree}): {gens}"


def _cyclic(n: int) -> str:
    return "(" + " ".join(str(i) for i in range(1, n + 1)) + ")" if n > 1 else "()"


CATALOG: Dict[str, str] = {
    **{f"C{n}": f"C{n} = perm({n}): {_cyclic(n)}" for n in range(1, 9)},
    "K4": "K4 = perm(4): (1 2)(3 4), (1 3)(2 4)",
    "S3": "S3 = perm(3): (1 2), (1 2 3)",
    "S4": "S4 = perm(4): (1 2), (1 2 3 4)",
    "A4": "A4 = perm(4): (1 2 3), (1 2)(3 4)",
    "D8": "D8 = perm(4): (1 2 3 4), (1 3)",
    "Q8": "Q8 = perm(8): (1 2 3 4)(5 6 7 8), (1 5 3 7)(2 8 4 6)",
}

_CATALOG_CACHE: Dict[str, FiniteGroup] = {}


def catalog_group(name: str) -> FiniteGroup:
    key = str(name).strip()
    if key not in CATALOG:
        raise GroupError(f"grupo desconocido '{name}'. Catalogo: {sorted(CATALOG)}")
    if key not in _CATALOG_CACHE:
        _CATALOG_CACHE[key] = parse_presentation(CATALOG[key])
    return _CATALOG_CACHE[key]


@lru_cache(maxsize=None)
def direct_product(G1: FiniteGroup, G2: FiniteGroup) -> FiniteGroup:
    n1 = G1.degree
    elements = [a + tuple(n1 + x for x in b) for a in G1.elements for b in G2.elements]
    gens = [g + tuple(n1 + x for x in range(G2.degree)) for g in G1.generators]
    gens += [tuple(range(n1)) + tuple(n1 + x for x in g) for g in G2.generators]
    return FiniteGroup(f"{G1.name}x{G2.name}", n1 + G2.degree, gens, elements, factors=(G1, G2))


def subgroup_as_group(H: Subgroup, name: Optional[str] = None) -> Tuple[FiniteGroup, Tuple[int, ...]]:
    """The subgroup as a group of its own, plus the embedding on indices."""
    G = H.parent
    perms = [G.elements[h] for h in H.elements]
    gens = [G.elements[h] for h in _small_generating_set(H)]
    K = FiniteGroup(name or f"{G.name}_sub{H.order}", G.degree, gens, perms)
    return K, tuple(H.elements)


def homomorphisms(P: FiniteGroup, G: FiniteGroup) -> List[Tuple[int, ...]]:
    """All group homomorphisms P -> G, as image tuples indexed by P's elements."""
    gens = list(P.generator_indices)
    out = []
    for images in iproduct(range(G.order), repeat=len(gens)):
        phi = _extend_hom(P, G, dict(zip(gens, images)))
        if phi is not None:
            out.append(phi)
    return out


def _extend_hom(P: FiniteGroup, G: FiniteGroup, on_gens: Dict[int, int]) -> Optional[Tuple[int, ...]]:
    phi = {0: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for a in frontier:
            for s, t in on_gens.items():
                b = P.mul(s, a)
                val = G.mul(t, phi[a])
                if b in phi:
                    if phi[b] != val:
                        return None
                else:
                    phi[b] = val
                    nxt.append(b)
        frontier = nxt
    for a in phi:
        for b in phi:
            if phi[P.mul(a, b)] != G.mul(phi[a], phi[b]):
                return None
    return tuple(phi[a] for a in range(P.order))


# ---------------------------------
# Subgrupos
# ---------------------------------
def closure(G: FiniteGroup, gens: Iterable[int]) -> FrozenSet[int]:
    gens = [g for g in set(gens) if g != 0]
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = G.mul(g, a)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return frozenset(seen)


def subgroup(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    return Subgroup(G, tuple(sorted(closure(G, gens))))


def subgroup_from_elements(G: FiniteGroup, elements: Iterable[int]) -> Subgroup:
    H = Subgroup(G, tuple(sorted(set(elements))))
    if 0 not in H:
        raise StructureError("subset without identity is not a subgroup")
    for a in H.elements:
        if G.inv(a) not in H:
            raise StructureError("subset not closed under inverse")
        for b in H.elements:
            if G.mul(a, b) not in H:
                raise StructureError("subset not closed under composition")
    return H


def _small_generating_set(H: Subgroup) -> List[int]:
    G = H.parent
    gens: List[int] = []
    current = frozenset([0])
    for h in H.elements:
        if h not in current:
            gens.append(h)
            current = closure(G, gens)
    return gens


def all_subgroups(G: FiniteGroup) -> List[Subgroup]:
    """Every subgroup, grown from the cyclic ones by adjoining one element at a time."""
    found: Dict[FrozenSet[int], List[int]] = {}
    for g in range(G.order):
        c = closure(G, [g])
        if c not in found:
            found[c] = [g] if g else []
    queue = list(found.items())
    while queue:
        elems, gens = queue.pop()
        for g in range(G.order):
            if g in elems:
                continue
            new_gens = gens + [g]
            c = closure(G, new_gens)
            if c not in found:
                found[c] = new_gens
                queue.append((c, new_gens))
    subs = [Subgroup(G, tuple(sorted(e))) for e in found]
    for H in subs:
        if G.order % H.order:
            raise StructureError(f"Lagrange violated: |H|={H.order} does not divide |G|={G.order}")
    return sorted(subs, key=lambda H: (H.order, H.elements))


def conjugate(H: Subgroup, g: int) -> Subgroup:
    """g H g^-1."""
    G = H.parent
    return Subgroup(G, tuple(sorted(G.conj(g, h) for h in H.elements)))


def conjugates(H: Subgroup) -> List[Subgroup]:
    G = H.parent
    seen = {}
    for g in range(G.order):
        K = conjugate(H, g)
        seen.setdefault(K.elements, K)
    return [seen[k] for k in sorted(seen)]


def canonical_conjugate(H: Subgroup) -> Subgroup:
    return conjugates(H)[0]


def conjugacy_classes_of_subgroups(G: FiniteGroup) -> List[Subgroup]:
    reps: Dict[Tuple[int, ...], Subgroup] = {}
    for H in all_subgroups(G):
        R = canonical_conjugate(H)
        reps.setdefault(R.elements, R)
    return sorted(reps.values(), key=lambda H: (H.order, H.elements))


def conjugating_element(H: Subgroup, K: Subgroup) -> Optional[int]:
    """Some g with g H g^-1 = K, or None."""
    for g in range(H.parent.order):
        if conjugate(H, g) == K:
            return g
    return None


def intersection(H: Subgroup, K: Subgroup) -> Subgroup:
    return Subgroup(H.parent, tuple(sorted(H.element_set & K.element_set)))


def index(G: FiniteGroup, H: Subgroup) -> int:
    return G.order // H.order


def centralizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    return Subgroup(G, tuple(g for g in range(G.order) if all(G.mul(g, h) == G.mul(h, g) for h in H.elements)))


def element_centralizer(G: FiniteGroup, a: int) -> Subgroup:
    return Subgroup(G, tuple(g for g in range(G.order) if G.mul(g, a) == G.mul(a, g)))


def normalizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    return Subgroup(G, tuple(g for g in range(G.order) if conjugate(H, g) == H))


# ---------------------------------
# Coclases y clases de conjugacion
# ---------------------------------
def left_coset(G: FiniteGroup, H: Subgroup, g: int) -> Tuple[int, ...]:
    return tuple(sorted(G.mul(g, h) for h in H.elements))


def right_coset(G: FiniteGroup, H: Subgroup, g: int) -> Tuple[int, ...]:
    return tuple(sorted(G.mul(h, g) for h in H.elements))


def cosets(G: FiniteGroup, H: Subgroup, side: str = "left") -> List[Tuple[int, ...]]:
    """Cosets gH (side='left') or Hg (side='right'), each sorted, listed by minimal element."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    make = left_coset if side == "left" else right_coset
    covered = set()
    out = []
    for g in range(G.order):
        if g in covered:
            continue
        c = make(G, H, g)
        covered.update(c)
        out.append(c)
    return out


def coset_representatives(G: FiniteGroup, H: Subgroup, side: str = "left") -> List[int]:
    return [c[0] for c in cosets(G, H, side)]


def double_coset(G: FiniteGroup, K: Subgroup, L: Subgroup, g: int) -> FrozenSet[int]:
    return frozenset(G.mul(G.mul(k, g), l) for k in K.elements for l in L.elements)


def double_cosets(G: FiniteGroup, K: Subgroup, L: Subgroup) -> List[int]:
    """Minimal representatives of K\\G/L."""
    covered = set()
    reps = []
    for g in range(G.order):
        if g in covered:
            continue
        covered |= double_coset(G, K, L, g)
        reps.append(g)
    return reps


def conjugacy_classes(G: FiniteGroup) -> List[Tuple[int, ...]]:
    covered = set()
    out = []
    for a in range(G.order):
        if a in covered:
            continue
        cls = tuple(sorted({G.conj(g, a) for g in range(G.order)}))
        covered.update(cls)
        out.append(cls)
    return out


def diagonal(GxG: FiniteGroup, H: Subgroup) -> Subgroup:
    """Delta(H) inside G x G for H <= G."""
    return Subgroup(GxG, tuple(sorted(GxG.from_pair(h, h) for h in H.elements)))


def is_projection_injective(M: Subgroup, factor: int = 0) -> bool:
    G = M.parent
    images = [G.pair(m)[factor] for m in M.elements]
    return len(set(images)) == len(images)
