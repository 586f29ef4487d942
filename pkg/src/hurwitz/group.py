"""Table-based finite permutation groups.

Groups are enumerated completely by breadth-first closure over their
generators, so every query afterwards is exact.  A hard order cap keeps
the table-based approach honest; everything in scope fits well below it.
"""

from __future__ import annotations

from .perms import Perm, identity, pinv, pmul, porder

DEFAULT_CAP = 200_000


class CapExceededError(RuntimeError):
    """Group too large for table-based methods."""


class FinGroup:
    """A finite group given by its full element table.

    Elements are stored in BFS discovery order (identity first) so indices,
    class representatives and all derived output are reproducible.
    """

    def __init__(self, degree, generators, elements, index, name):
        self.degree = degree
        self.generators = list(generators)
        self.elements = elements
        self.index = index
        self.order = len(elements)
        self.name = name
        self._orders = None
        self._inverses = None
        self._classes = None
        self._class_of = None
        self._derived = None

    def __repr__(self):
        return f"FinGroup({self.name!r}, order={self.order}, degree={self.degree})"

    def __len__(self):
        return self.order

    # -- basic element arithmetic on indices --------------------------------

    def mul(self, i: int, j: int) -> int:
        return self.index[pmul(self.elements[i], self.elements[j])]

    def inv(self, i: int) -> int:
        return self.inverse_indices()[i]

    def conj(self, i: int, g: int) -> int:
        """g^-1 * i * g."""
        gp = self.elements[g]
        return self.index[pmul(pmul(pinv(gp), self.elements[i]), gp)]

    def element_order(self, i: int) -> int:
        orders = self.element_orders()
        return orders[i]

    def element_orders(self):
        if self._orders is None:
            self._orders = [porder(e) for e in self.elements]
        return self._orders

    def inverse_indices(self):
        if self._inverses is None:
            self._inverses = [self.index[pinv(e)] for e in self.elements]
        return self._inverses

    # -- conjugacy classes ---------------------------------------------------

    def conjugacy_classes(self):
        """Partition of element indices into classes, canonically sorted.

        Classes are ordered by element order, then class size, then by the
        lexicographically least member permutation.
        """
        if self._classes is None:
            self._classes = conjugacy_classes(self)
            self._class_of = [0] * self.order
            for ci, cls in enumerate(self._classes):
                for i in cls:
                    self._class_of[i] = ci
        return self._classes

    def class_of(self, i: int) -> int:
        self.conjugacy_classes()
        return self._class_of[i]

    def class_size(self, i: int) -> int:
        return len(self.conjugacy_classes()[self.class_of(i)])

    def centralizer_size(self, i: int) -> int:
        """Computed by direct scan; equals |G| / class size (orbit-stabilizer)."""
        e = self.elements[i]
        return sum(1 for g in self.elements if pmul(g, e) == pmul(e, g))

    def commutator_subgroup(self) -> "FinGroup":
        if self._derived is None:
            self._derived = commutator_subgroup(self)
        return self._derived

    def is_perfect(self) -> bool:
        return self.commutator_subgroup().order == self.order

    def is_abelian(self) -> bool:
        return self.commutator_subgroup().order == 1

    def is_simple(self) -> bool:
        """True iff every nontrivial conjugacy class has normal closure G."""
        if self.order == 1:
            return False
        for cls in self.conjugacy_classes():
            if 0 in cls:  # identity class
                continue
            if normal_closure_order(self, [cls[0]]) != self.order:
                return False
        return True

    def right_mult_table(self, i: int):
        """Array m with m[u] = index of u * elements[i]."""
        e = self.elements[i]
        idx = self.index
        return [idx[pmul(u, e)] for u in self.elements]


def group_from_generators(gens, cap=DEFAULT_CAP, name=None) -> FinGroup:
    """Enumerate the group generated by permutations via BFS closure."""
    gens = [tuple(g) for g in gens]
    if not gens:
        raise ValueError("need at least one generator")
    degree = len(gens[0])
    for g in gens:
        if len(g) != degree:
            raise ValueError("generators must share one degree")
        if sorted(g) != list(range(degree)):
            raise ValueError(f"not a permutation of 0..{degree - 1}: {g}")
    e = identity(degree)
    elements = [e]
    index = {e: 0}
    pos = 0
    while pos < len(elements):
        u = elements[pos]
        pos += 1
        for s in gens:
            v = pmul(u, s)
            if v not in index:
                if len(elements) >= cap:
                    raise CapExceededError(
                        f"order exceeds cap {cap} (group {name or 'unnamed'})"
                    )
                index[v] = len(elements)
                elements.append(v)
    return FinGroup(degree, gens, elements, index, name or f"<{len(gens)} gens>")


def conjugacy_classes(G: FinGroup):
    """Brute-force classes as orbits under conjugation by the generators."""
    n = G.order
    assigned = [False] * n
    gen_idx = [G.index[g] for g in G.generators]
    gen_inv = [G.index[pinv(g)] for g in G.generators]
    classes = []
    for start in range(n):
        if assigned[start]:
            continue
        orbit = [start]
        assigned[start] = True
        queue = [start]
        while queue:
            i = queue.pop()
            ei = G.elements[i]
            for gi, gii in zip(gen_idx, gen_inv):
                c = G.index[pmul(pmul(G.elements[gii], ei), G.elements[gi])]
                if not assigned[c]:
                    assigned[c] = True
                    orbit.append(c)
                    queue.append(c)
        classes.append(sorted(orbit))
    orders = G.element_orders()
    classes.sort(key=lambda cls: (orders[cls[0]], len(cls),
                                  min(G.elements[i] for i in cls)))
    return classes


def subgroup_closure(G: FinGroup, gen_indices, stop_above=None):
    """Indices of the subgroup generated by the given elements.

    If stop_above is set, stop as soon as the partial closure exceeds it and
    return None (used for fast generation tests).
    """
    gens = [G.elements[i] for i in gen_indices]
    e = G.elements[0]
    seen = {e}
    elems = [e]
    pos = 0
    while pos < len(elems):
        u = elems[pos]
        pos += 1
        for s in gens:
            v = pmul(u, s)
            if v not in seen:
                seen.add(v)
                elems.append(v)
                if stop_above is not None and len(elems) > stop_above:
                    return None
    return [G.index[x] for x in elems]


def generates(G: FinGroup, gen_indices) -> bool:
    """Do the given elements generate G?

    A subgroup of order > |G|/2 must be G itself, so the closure can stop
    early either way.
    """
    half = G.order // 2
    closure = subgroup_closure(G, gen_indices, stop_above=half)
    if closure is None:
        return True
    return len(closure) == G.order


def normal_closure_order(G: FinGroup, seed_indices) -> int:
    """Order of the normal closure of the given elements in G."""
    gen_idx = [G.index[g] for g in G.generators]
    gens = set(seed_indices)
    while True:
        closure = subgroup_closure(G, sorted(gens))
        extra = set()
        for i in closure:
            for gi in gen_idx:
                c = G.conj(i, gi)
                if c not in closure and c not in gens:
                    extra.add(c)
        if not extra:
            return len(closure)
        gens |= extra


def commutator_subgroup(G: FinGroup) -> FinGroup:
    """Derived subgroup: normal closure of generator commutators."""
    gen_idx = [G.index[g] for g in G.generators]
    seeds = set()
    for a in gen_idx:
        for b in gen_idx:
            c = G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b))
            if c != 0:
                seeds.add(c)
    if not seeds:
        return group_from_generators([G.elements[0]], name=f"[{G.name},{G.name}]")
    while True:
        closure = subgroup_closure(G, sorted(seeds))
        closure_set = set(closure)
        extra = set()
        for i in closure:
            for gi in gen_idx:
                c = G.conj(i, gi)
                if c not in closure_set:
                    extra.add(c)
        if not extra:
            gens = [G.elements[i] for i in sorted(seeds)]
            return group_from_generators(gens, name=f"[{G.name},{G.name}]")
        seeds |= extra


def regular_representation(G: FinGroup, cap=DEFAULT_CAP) -> FinGroup:
    """Right-multiplication action of G on itself (degree |G|, free and transitive)."""
    gens = [tuple(G.right_mult_table(G.index[g])) for g in G.generators]
    return group_from_generators(gens, cap=cap, name=f"reg({G.name})")


def pair_isomorphic(G: FinGroup, pair1, pair2, H: FinGroup | None = None) -> bool:
    """Does x1 -> x2, y1 -> y2 extend to an isomorphism G -> H (H defaults to G)?

    Single-base-point propagation over the Cayley graph of (x1, y1): starting
    from identity -> identity, assign tau(u*s1) = tau(u)*s2 and fail on any
    collision.  A consistent closure is automatically a homomorphism onto
    <x2, y2> = H, hence bijective.  Both pairs must generate (checked).
    """
    H = G if H is None else H
    pair1 = [G.index[tuple(p)] if not isinstance(p, int) else p for p in pair1]
    pair2 = [H.index[tuple(p)] if not isinstance(p, int) else p for p in pair2]
    if not generates(G, pair1):
        raise ValueError("first pair does not generate the group")
    if not generates(H, pair2):
        raise ValueError("second pair does not generate the group")
    if G.order != H.order:
        return False
    steps = []
    for s1, s2 in zip(pair1, pair2):
        t1 = G.right_mult_table(s1)
        t2 = H.right_mult_table(s2)
        steps.append((t1, t2))
    tau = [-1] * G.order
    tau[0] = 0
    queue = [0]
    qpos = 0
    while qpos < len(queue):
        u = queue[qpos]
        qpos += 1
        tu = tau[u]
        for t1, t2 in steps:
            v = t1[u]
            w = t2[tu]
            if tau[v] < 0:
                tau[v] = w
                queue.append(v)
            elif tau[v] != w:
                return False
    return True
