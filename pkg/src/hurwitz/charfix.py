"""Fixed points of automorphisms on a regular Belyi cover, and the H^1 character.

Points of the cover above 0, 1, infinity are the coset spaces of the cyclic
subgroups generated by the triple entries; a nontrivial automorphism fixes
no point elsewhere, so its fixed points are exactly its fixed cosets.  The
Lefschetz identity chi(h) = 2 - Fix(h) then gives the character on H^1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dessins import TriangleTriple, genus_of
from .group import FinGroup, subgroup_closure


def _cyclic_cosets(G: FinGroup, s: int):
    """Right cosets <s>\\G as (subgroup set, coset representative list)."""
    sub = set(subgroup_closure(G, [s]))
    seen = set()
    reps = []
    for g in range(G.order):
        if g in seen:
            continue
        reps.append(g)
        for h in sub:
            seen.add(G.mul(h, g))
    return sub, reps


def fixed_points(G: FinGroup, t: TriangleTriple, h: int) -> int:
    """Fixed points of h on the cover, by direct scan of the three coset spaces.

    A coset <s>g is fixed by right multiplication with h iff g h g^-1 lies
    in <s>.
    """
    if h == 0:
        raise ValueError("h must be nontrivial; use ramification_point_count")
    total = 0
    hinv = G.inv(h)
    for s in (t.x, t.y, t.z):
        sub, reps = _cyclic_cosets(G, s)
        for g in reps:
            if G.mul(G.mul(g, h), G.inv(g)) in sub:
                total += 1
    return total


def ramification_point_count(G: FinGroup, t: TriangleTriple) -> int:
    """Total number of points above the three branch points (fiber sizes)."""
    return sum(G.order // G.element_order(s) for s in (t.x, t.y, t.z))


def _fixed_by_class(G: FinGroup, t: TriangleTriple):
    """Fix(h) per conjugacy class (class function), sharing the coset tables."""
    spaces = [_cyclic_cosets(G, s) for s in (t.x, t.y, t.z)]
    out = []
    for cls in G.conjugacy_classes():
        h = cls[0]
        if h == 0:
            out.append(None)  # identity: not defined (ramification total instead)
            continue
        fix = 0
        for sub, reps in spaces:
            for g in reps:
                if G.mul(G.mul(g, h), G.inv(g)) in sub:
                    fix += 1
        out.append(fix)
    return out


def fixed_point_class_sum(G: FinGroup, t: TriangleTriple) -> int:
    """Sum of Fix(h) over nontrivial h, evaluated once per conjugacy class."""
    by_class = _fixed_by_class(G, t)
    return sum(len(cls) * fix
               for cls, fix in zip(G.conjugacy_classes(), by_class)
               if fix is not None)


def stabilizer_count_formula(G: FinGroup, t: TriangleTriple) -> int:
    """Independent prediction: sum_i (|G|/m_i)(m_i - 1) over the branch orders."""
    return sum((G.order // m) * (m - 1)
               for m in (G.element_order(s) for s in (t.x, t.y, t.z)))


@dataclass(frozen=True)
class ClassFunction:
    """Rational values, one per conjugacy class in canonical order."""
    group: FinGroup
    values: tuple

    def at_class(self, ci: int):
        return self.values[ci]

    def at_element(self, i: int):
        return self.values[self.group.class_of(i)]

    def inner_product(self, other: "ClassFunction") -> Fraction:
        G = self.group
        total = Fraction(0)
        for ci, cls in enumerate(G.conjugacy_classes()):
            total += len(cls) * Fraction(self.values[ci]) * Fraction(other.values[ci])
        return total / G.order


def trivial_character(G: FinGroup) -> ClassFunction:
    return ClassFunction(G, tuple(1 for _ in G.conjugacy_classes()))


def permutation_character(G: FinGroup, t: TriangleTriple, which: str) -> ClassFunction:
    """Character of the coset action for one of the triple entries x, y, z."""
    s = {"x": t.x, "y": t.y, "z": t.z}[which]
    sub, reps = _cyclic_cosets(G, s)
    values = []
    for cls in G.conjugacy_classes():
        h = cls[0]
        if h == 0:
            values.append(len(reps))
            continue
        fix = sum(1 for g in reps if G.mul(G.mul(g, h), G.inv(g)) in sub)
        values.append(fix)
    return ClassFunction(G, tuple(values))


@dataclass(frozen=True)
class H1Character:
    character: ClassFunction
    genus: int
    faithful: bool


def h1_character(G: FinGroup, t: TriangleTriple) -> H1Character:
    """Character of the G-action on H^1 of the cover, via Lefschetz numbers.

    chi(1) = 2g; chi(h) = 2 - Fix(h) for h != 1.  The action is faithful
    iff no nontrivial class attains chi(1).
    """
    g = genus_of(G.order, t.orders())
    if g < 2:
        raise ValueError(f"genus {g} < 2: no hyperbolic cover")
    by_class = _fixed_by_class(G, t)
    values = [2 * g if fix is None else 2 - fix for fix in by_class]
    chi = ClassFunction(G, tuple(values))
    faithful = all(v != 2 * g for v in values[1:])
    return H1Character(chi, g, faithful)


def character_report(G: FinGroup, t: TriangleTriple) -> dict:
    """JSON-able character rows for census reports."""
    h1 = h1_character(G, t)
    rows = []
    for ci, cls in enumerate(G.conjugacy_classes()):
        rows.append({
            "class_order": G.element_order(cls[0]),
            "class_size": len(cls),
            "chi_value": int(h1.character.values[ci]),
        })
    triv = trivial_character(G)
    return {
        "genus": h1.genus,
        "faithful": h1.faithful,
        "rows": rows,
        "trivial_multiplicity": str(h1.character.inner_product(triv)),
    }
