"""
Generadores sembrados para las pruebas de propiedades: bisets aleatorios
(hasta 4 orbitas, grupos de orden <= 24), spans entre grupos por
homomorfismos y 2-celdas con coeficientes pequenos.

Todo parte de ``random.Random(seed)``: misma semilla, mismos objetos.
"""

from typing import List, Optional, Sequence
import random

from mot2.bisets import Biset, disjoint_union_bisets, transitive_biset
from mot2.groupoids import from_group, group_hom_functor
from mot2.groups import FiniteGroup, Subgroup, catalog_group, direct_product, homomorphisms, subgroup
from mot2.scalars import Field
from mot2.spans import Span
from mot2.twocells import TwoCell, twocell_basis

BISET_GROUPS = ("C1", "C2", "C3", "C4", "K4", "S3", "D8", "Q8", "A4", "S4")
SPAN_APEXES = ("C1", "C2", "C3", "C4", "K4", "S3")
SPAN_FEET = ("C1", "C2", "C3", "C4", "K4", "S3", "D8")

MAX_ORBITS = 4
# |G1 x G2| por encima de esto hace lentas las pruebas
MAX_PRODUCT_ORDER = 96


def seeds(seed: int, n: int) -> List[int]:
    rng = random.Random(seed)
    return [rng.randrange(2 ** 31) for _ in range(n)]


def random_group(rng: random.Random, names: Sequence[str] = BISET_GROUPS, max_order: int = 24) -> FiniteGroup:
    pool = [catalog_group(n) for n in names]
    pool = [G for G in pool if G.order <= max_order]
    return rng.choice(pool)


def random_subgroup(G: FiniteGroup, rng: random.Random, max_gens: int = 2) -> Subgroup:
    gens = [rng.randrange(G.order) for _ in range(rng.randint(0, max_gens))]
    return subgroup(G, gens)


def _right_free_subgroup(GxH: FiniteGroup, rng: random.Random, tries: int = 8) -> Subgroup:
    n2 = GxH.factors[1].order
    for _ in range(tries):
        M = random_subgroup(GxH, rng)
        # indices 1..n2-1 son los (1, h) con h != 1
        if not any(0 < x < n2 for x in M.elements):
            return M
    return subgroup(GxH, [])


def random_biset(rng: random.Random, max_orbits: int = MAX_ORBITS,
                 groups: Optional[Sequence[FiniteGroup]] = None, right_free: bool = False) -> Biset:
    """
    Disjoint union of 1..max_orbits transitive bisets (G1 x G2)/M.
    ``right_free`` only draws M with M & (1 x G2) = 1.
    """
    if groups is None:
        while True:
            G1, G2 = random_group(rng), random_group(rng)
            if G1.order * G2.order <= MAX_PRODUCT_ORDER:
                break
    else:
        G1, G2 = groups
    GxH = direct_product(G1, G2)
    A, B = from_group(G1), from_group(G2)
    out = None
    for _ in range(rng.randint(1, max_orbits)):
        M = _right_free_subgroup(GxH, rng) if right_free else random_subgroup(GxH, rng)
        piece = transitive_biset(A, B, M)
        out = piece if out is None else disjoint_union_bisets(out, piece)
    return out


def random_span(rng: random.Random, H: Optional[FiniteGroup] = None) -> Span:
    """
    H <-u- P -i-> G between one-object groupoids, legs sampled among all
    homomorphisms. A given ``H`` makes the span composable after one ending at H.
    """
    P = random_group(rng, SPAN_APEXES)
    H = H if H is not None else random_group(rng, SPAN_FEET)
    G = random_group(rng, SPAN_FEET)
    u = rng.choice(homomorphisms(P, H))
    i = rng.choice(homomorphisms(P, G))
    return Span(group_hom_functor(P, H, u), group_hom_functor(P, G, i))


def random_twocell(U: Biset, V: Biset, field: Field, rng: random.Random, max_terms: int = 3) -> TwoCell:
    """Small random combination of basis 2-cells U => V."""
    basis = twocell_basis(U, V, field)
    out = TwoCell.zero(U, V, field)
    if not basis:
        return out
    for t in rng.sample(basis, min(len(basis), rng.randint(1, max_terms))):
        out = out + t.scale(field(rng.randint(-2, 2)))
    return out
