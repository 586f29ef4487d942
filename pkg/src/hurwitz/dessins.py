"""Regular dessins as generating triples, with classification and census.

A regular dessin of type (p, q, r) with group G is a generating triple
(x, y, z), xyz = 1, of element orders p, q, r; two triples give the same
dessin iff mapping one pair to the other extends to an automorphism, i.e.
iff the corresponding epimorphisms from the triangle group have equal
kernels.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .group import FinGroup, generates, pair_isomorphic
from .perms import pinv, pmul, porder


@dataclass(frozen=True)
class TriangleTriple:
    """Indices of a generating triple x*y*z = 1 in its group."""
    group: FinGroup
    x: int
    y: int
    z: int
    type: tuple

    def orders(self):
        G = self.group
        return (G.element_order(self.x), G.element_order(self.y),
                G.element_order(self.z))


@dataclass(frozen=True)
class DessinClass:
    representative: TriangleTriple
    genus: int
    passport: tuple
    class_size: int


def genus_of(order: int, type_) -> int:
    """Genus of a regular cover: 2g - 2 = |G| (1 - 1/p - 1/q - 1/r)."""
    p, q, r = type_
    if min(p, q, r) < 1:
        raise ValueError("type entries must be >= 1")
    rhs = order * (1 - Fraction(1, p) - Fraction(1, q) - Fraction(1, r))
    if rhs.denominator != 1:
        raise ValueError(f"2g-2 = {rhs} is not an integer for order {order}, "
                         f"type {tuple(type_)}")
    rhs = int(rhs)
    if rhs % 2 != 0:
        raise ValueError(f"2g-2 = {rhs} is odd for order {order}, type {tuple(type_)}")
    g = (rhs + 2) // 2
    if g < 0:
        raise ValueError(f"negative genus for order {order}, type {tuple(type_)}")
    return g


def passport(t: TriangleTriple) -> tuple:
    """Fingerprint: order, type, (order, class size) per entry, z-class label."""
    G = t.group
    G.conjugacy_classes()
    entry = tuple((G.element_order(i), G.class_size(i)) for i in (t.x, t.y, t.z))
    return (G.order, tuple(t.type), entry, G.class_of(t.z))


def _bucket_key(pp: tuple) -> tuple:
    # Aut(G) may permute conjugacy classes, so dedup buckets drop the z label.
    return pp[:3]


def _order_matches(order: int, target: int, mode: str) -> bool:
    if mode == "exact":
        return order == target
    if mode == "dividing":
        return target % order == 0
    raise ValueError(f"unknown mode {mode!r} (want 'exact' or 'dividing')")


def enumerate_triples(G: FinGroup, type_, mode: str = "exact"):
    """All dessin classes of the given type with group G, canonically ordered.

    x runs over conjugacy-class representatives of matching order (results
    weighted by class size), y over all matching elements; candidates with
    order(xy) = r that generate G are deduplicated by passport bucket and
    then by the pair-isomorphism test.
    """
    p, q, r = type_
    classes = G.conjugacy_classes()
    orders = G.element_orders()
    found = []  # [ [bucket_key, rep_triple, weight] ]
    ys = [i for i in range(G.order) if _order_matches(orders[i], q, mode)]
    inv_idx = G.inverse_indices()
    for cls in classes:
        xr = cls[0]
        if not _order_matches(orders[xr], p, mode):
            continue
        weight = len(cls)
        xperm = G.elements[xr]
        for y in ys:
            xy = G.index[pmul(xperm, G.elements[y])]
            if not _order_matches(orders[xy], r, mode):
                continue
            if not generates(G, (xr, y)):
                continue
            z = inv_idx[xy]
            t = TriangleTriple(G, xr, y, z, tuple(type_))
            key = _bucket_key(passport(t))
            for rec in found:
                if rec[0] == key and pair_isomorphic(G, (rec[1].x, rec[1].y), (xr, y)):
                    rec[2] += weight
                    break
            else:
                found.append([key, t, weight])
    out = []
    for key, t, weight in found:
        g = genus_of(G.order, t.orders())
        out.append(DessinClass(t, g, passport(t), weight))
    out.sort(key=lambda c: (c.passport, c.representative.x, c.representative.y))
    return out


def count_triples_brute(G: FinGroup, type_, mode: str = "exact") -> int:
    """Independent total count of generating triples of the type (all x, all y)."""
    p, q, r = type_
    orders = G.element_orders()
    total = 0
    for x in range(G.order):
        if not _order_matches(orders[x], p, mode):
            continue
        xperm = G.elements[x]
        for y in range(G.order):
            if not _order_matches(orders[y], q, mode):
                continue
            xy = G.index[pmul(xperm, G.elements[y])]
            if not _order_matches(orders[xy], r, mode):
                continue
            if generates(G, (x, y)):
                total += 1
    return total


# -- Hurwitz census -----------------------------------------------------------

def order_for_genus(g: int, type_):
    """Group order forced by the genus for a hyperbolic type, or None."""
    p, q, r = type_
    excess = 1 - Fraction(1, p) - Fraction(1, q) - Fraction(1, r)
    if excess <= 0:
        raise ValueError("census requires a hyperbolic type")
    order = Fraction(2 * g - 2) / excess
    if order.denominator != 1 or order <= 0:
        return None
    return int(order)


def _enumerate_for_census(args):
    G, type_ = args
    return enumerate_triples(G, type_)


def hurwitz_census(catalog, g_max: int, type_=(2, 3, 7), jobs: int = 1):
    """Count dessin classes per genus over the catalog's perfect candidates.

    Classes found in different (possibly isomorphic) candidate groups are
    deduplicated by the cross-group kernel test, so each curve is counted
    once.  The result is catalog-conditional by construction.  jobs > 1
    fans the per-group enumerations out to a process pool; the merge is
    order-preserving, so output is identical at any parallelism degree.
    """
    rows = []
    unchecked = []
    for g in range(2, g_max + 1):
        order = order_for_genus(g, type_)
        if order is None:
            continue
        try:
            candidates = catalog.perfect_candidates(order)
        except Exception:
            unchecked.append(order)
            continue
        if jobs > 1 and len(candidates) > 1:
            import multiprocessing
            with multiprocessing.Pool(min(jobs, len(candidates))) as pool:
                per_group = pool.map(_enumerate_for_census,
                                     [(G, type_) for G in candidates])
        else:
            per_group = [enumerate_triples(G, type_) for G in candidates]
        kept = []  # (group, DessinClass)
        for G, classes in zip(candidates, per_group):
            for cls in classes:
                rep = cls.representative
                duplicate = False
                for H, kcls in kept:
                    krep = kcls.representative
                    if H.order == G.order and pair_isomorphic(
                            H, (krep.x, krep.y), (rep.x, rep.y), H=G):
                        duplicate = True
                        break
                if not duplicate:
                    kept.append((G, cls))
        rows.append({
            "genus": g,
            "order": order,
            "count": len(kept),
            "groups": _group_rows(kept),
            "searched": [G.name for G in candidates] + catalog.searched_families(order),
        })
    return {
        "type": list(type_),
        "max_genus": g_max,
        "catalog_version": catalog.version,
        "catalog_conditional": True,
        "counts": {str(row["genus"]): row["count"] for row in rows},
        "census": rows,
        "unchecked_orders": unchecked,
    }


def _group_rows(kept):
    by_group = {}
    for G, cls in kept:
        by_group.setdefault(G.name, []).append(cls)
    out = []
    for name in sorted(by_group):
        out.append({
            "name": name,
            "classes": [serialize_class(c) for c in by_group[name]],
        })
    return out


def serialize_class(c: DessinClass) -> dict:
    t = c.representative
    return {
        "genus": c.genus,
        "passport": _passport_json(c.passport),
        "class_size": c.class_size,
        "representative": {
            "x": t.x, "y": t.y, "z": t.z,
            "orders": list(t.orders()),
        },
    }


def _passport_json(pp):
    order, type_, entries, z_label = pp
    return {
        "order": order,
        "type": list(type_),
        "entries": [list(e) for e in entries],
        "z_class": z_label,
    }
