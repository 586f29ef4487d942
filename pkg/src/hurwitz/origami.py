"""Hurwitz origamis as generating pairs with commutator of order exactly two.

The once-punctured-torus orbifold group <a, b, c | c^2, [a,b] c> maps onto
G exactly when G is generated by a pair whose commutator has order two, so
classifying Hurwitz origamis with deck group G reduces to classifying such
pairs up to automorphism.  Commutator order exactly two (not dividing) is
required: a trivial commutator gives an unramified genus-one cover.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import catalog as _catalog
from .fields import is_prime
from .group import FinGroup, generates, pair_isomorphic
from .perms import pmul


@dataclass(frozen=True)
class OrigamiPair:
    group: FinGroup
    a: int
    b: int

    @property
    def commutator(self) -> int:
        G = self.group
        return G.mul(G.mul(G.inv(self.a), G.inv(self.b)), G.mul(self.a, self.b))

    @property
    def genus(self) -> int:
        return origami_genus(self.group.order)


@dataclass(frozen=True)
class OrigamiClass:
    representative: OrigamiPair
    genus: int
    class_size: int


def origami_genus(order: int) -> int:
    """Genus attaining the translation-surface bound: |G| = 4(g - 1)."""
    if order % 4 != 0:
        raise ValueError(f"group order {order} is not divisible by 4")
    return 1 + order // 4


def enumerate_origami_pairs(G: FinGroup):
    """Automorphism classes of generating pairs with commutator of order 2.

    a runs over conjugacy-class representatives (weighted by class size),
    b over all elements; deduplication reuses the pair-isomorphism test.
    """
    if G.order % 4 != 0:
        return []
    classes = G.conjugacy_classes()
    orders = G.element_orders()
    found = []  # [key, OrigamiPair, weight]
    for cls in classes:
        ar = cls[0]
        weight = len(cls)
        aperm = G.elements[ar]
        ainv = G.inv(ar)
        for b in range(G.order):
            binv = G.inv(b)
            c = G.mul(G.mul(ainv, binv), G.index[pmul(aperm, G.elements[b])])
            if orders[c] != 2:
                continue
            if not generates(G, (ar, b)):
                continue
            key = (orders[ar], len(cls), orders[b], G.class_size(b), G.class_of(c))
            for rec in found:
                if rec[0] == key and pair_isomorphic(G, (rec[1].a, rec[1].b), (ar, b)):
                    rec[2] += weight
                    break
            else:
                found.append([key, OrigamiPair(G, ar, b), weight])
    g = origami_genus(G.order)
    out = [OrigamiClass(pair, g, weight) for _, pair, weight in found]
    out.sort(key=lambda c: (c.representative.a, c.representative.b))
    return out


@dataclass(frozen=True)
class ExistenceVerdict:
    genus: int
    order: int
    verdict: str  # "witness" | "exhaustive_no" | "unknown_no_witness"
    witness: OrigamiPair | None
    searched_groups: tuple

    def to_json(self) -> dict:
        out = {
            "genus": self.genus,
            "order": self.order,
            "verdict": self.verdict,
            "searched_groups": list(self.searched_groups),
        }
        if self.witness is not None:
            w = self.witness
            out["witness"] = {"group": w.group.name, "a": w.a, "b": w.b,
                              "commutator_order": w.group.element_order(w.commutator)}
        return out


def origami_existence(g: int, groups=None, cap=None) -> ExistenceVerdict:
    """Search for a Hurwitz origami in genus g over groups of order 4(g-1).

    exhaustive_no is only issued when the searched list provably covers all
    isomorphism types of the order (orders 4 and 4p for odd primes p);
    otherwise a fruitless search reports unknown_no_witness.
    """
    if g < 2:
        raise ValueError("genus must be >= 2")
    order = 4 * (g - 1)
    cap = cap or max(4 * order, 1000)
    complete = False
    if groups is None:
        if order == 4:
            groups = [_catalog.cyclic(4), _catalog.abelian([2, 2])]
            complete = True
        elif order % 4 == 0 and is_prime(order // 4) and order // 4 > 2:
            groups = _catalog.groups_of_order_4p(order // 4, cap=cap)
            complete = True
        else:
            groups = _catalog.groups_of_order(order, cap=cap)
    searched = tuple(G.name for G in groups)
    for G in groups:
        if G.order != order:
            raise ValueError(f"{G.name} has order {G.order}, expected {order}")
        classes = enumerate_origami_pairs(G)
        if classes:
            return ExistenceVerdict(g, order, "witness",
                                    classes[0].representative, searched)
    verdict = "exhaustive_no" if complete else "unknown_no_witness"
    return ExistenceVerdict(g, order, verdict, None, searched)
