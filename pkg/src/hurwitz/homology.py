"""Reidemeister-Schreier homology of triangle-group kernels, and extensions.

Given the presentation <x, y | x^p, y^q, (xy)^r> and an epimorphism onto a
finite group G, the kernel's coset space is G itself (the regular action),
so no coset enumeration is needed.  A BFS spanning tree of the Cayley
graph yields Schreier generators; imposing all rewritten relator
conjugates as linear relations mod ell gives the kernel's mod-ell homology
as a G-module.  Invariant submodules then produce extension quotients via
an explicit 2-cocycle, which is how the genus-17 Hurwitz groups are built
from the Klein-quartic kernel.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .group import DEFAULT_CAP, FinGroup, generates, group_from_generators
from .fields import is_prime

# letters: (generator id 0 for x / 1 for y, exponent sign)
X, Y = 0, 1


def _word_inverse(word):
    return [(g, -s) for g, s in reversed(word)]


@dataclass
class SchreierData:
    """Coset table, spanning tree and Schreier generators for ker(phi).

    Cosets are identified with elements of G (regular action); the tree is
    BFS with move order (x, x^-1, y, y^-1).  Column j of the relation space
    corresponds to the j-th nontrivial Schreier generator (u, s): the word
    sigma(u) * s * sigma(u*s)^-1.
    """
    group: FinGroup
    type: tuple
    gen_images: tuple       # (index of phi(x), index of phi(y)) in G
    right: list             # right[g][coset] for g in (x, y)
    right_inv: list
    tree_word: list         # tree_word[coset] = word from identity coset
    column: dict            # (coset, gen id) -> column index, tree edges absent
    columns: list           # [(coset, gen id)] in column order

    @property
    def num_schreier(self) -> int:
        return len(self.columns)

    def rewrite(self, word, start: int = 0, vec=None):
        """Accumulate the Schreier-generator image of a word traced from a coset."""
        if vec is None:
            vec = np.zeros(self.num_schreier, dtype=np.int64)
        u = start
        for g, s in word:
            if s > 0:
                col = self.column.get((u, g))
                if col is not None:
                    vec[col] += 1
                u = self.right[g][u]
            else:
                u = self.right_inv[g][u]
                col = self.column.get((u, g))
                if col is not None:
                    vec[col] -= 1
        return vec, u

    def schreier_word(self, col: int):
        """The (u, s) Schreier generator as a word in x, y."""
        u, g = self.columns[col]
        v = self.right[g][u]
        return self.tree_word[u] + [(g, 1)] + _word_inverse(self.tree_word[v])

    def relator_words(self):
        p, q, r = self.type
        return [[(X, 1)] * p, [(Y, 1)] * q, [(X, 1), (Y, 1)] * r]


def schreier_data(type_, G: FinGroup, gx: int, gy: int) -> SchreierData:
    """Schreier data for the kernel of x -> gx, y -> gy on the triangle type."""
    if not generates(G, (gx, gy)):
        raise ValueError("images do not generate the group")
    right = [G.right_mult_table(gx), G.right_mult_table(gy)]
    inv_x, inv_y = G.inv(gx), G.inv(gy)
    right_inv = [G.right_mult_table(inv_x), G.right_mult_table(inv_y)]
    n = G.order
    tree_word = [None] * n
    tree_word[0] = []
    tree_edges = set()  # (coset, gen) pairs whose positive edge lies in the tree
    queue = [0]
    qpos = 0
    moves = [(X, 1), (X, -1), (Y, 1), (Y, -1)]
    while qpos < len(queue):
        u = queue[qpos]
        qpos += 1
        for g, s in moves:
            if s > 0:
                v = right[g][u]
                edge = (u, g)
            else:
                v = right_inv[g][u]
                edge = (v, g)
            if tree_word[v] is None:
                tree_word[v] = tree_word[u] + [(g, s)]
                tree_edges.add(edge)
                queue.append(v)
    columns = [(u, g) for u in range(n) for g in (X, Y) if (u, g) not in tree_edges]
    column = {ug: j for j, ug in enumerate(columns)}
    return SchreierData(G, tuple(type_), (gx, gy), right, right_inv,
                        tree_word, column, columns)


# -- linear algebra over F_ell ------------------------------------------------

def rref_mod(A, ell):
    """Reduced row echelon form mod ell; returns (R, pivot columns)."""
    R = np.array(A, dtype=np.int64) % ell
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + nz[0]
        if pr != r:
            R[[r, pr]] = R[[pr, r]]
        R[r] = (R[r] * pow(int(R[r, c]), ell - 2, ell)) % ell
        other = np.nonzero(R[:, c])[0]
        for i in other:
            if i != r:
                R[i] = (R[i] - R[i, c] * R[r]) % ell
        pivots.append(c)
        r += 1
    return R[:r], pivots


def _reduce_vector(vec, R, pivots, ell):
    v = np.array(vec, dtype=np.int64) % ell
    for i, c in enumerate(pivots):
        if v[c]:
            v = (v - v[c] * R[i]) % ell
    return v


@dataclass
class GModule:
    """Mod-ell homology of the kernel, as matrices acting for each generator.

    Coordinates are the non-pivot Schreier columns of the relation matrix's
    RREF; `project` maps a raw Schreier vector to these coordinates.
    """
    ell: int
    dim: int
    action: list            # matrices (dim x dim) for the images of x, y
    schreier: SchreierData
    basis_labels: list      # Schreier (coset, gen) labels of the free columns
    _rref: np.ndarray = field(repr=False, default=None)
    _pivots: list = field(repr=False, default=None)
    _free: list = field(repr=False, default=None)
    _rho: dict = field(repr=False, default=None)

    def project(self, vec):
        v = _reduce_vector(vec, self._rref, self._pivots, self.ell)
        return v[self._free]

    def action_of(self, g: int):
        """Action matrix of an arbitrary element of G, via its tree word."""
        if self._rho is None:
            self._rho = _propagate_actions(self)
        return self._rho[g]

    def fixed_subspace_dim(self) -> int:
        stack = np.vstack([(A - np.eye(self.dim, dtype=np.int64)) % self.ell
                           for A in self.action])
        _, pivots = rref_mod(stack, self.ell)
        return self.dim - len(pivots)


def _conjugated_generator_image(sd: SchreierData, conj_word, col, ell):
    word = conj_word + sd.schreier_word(col) + _word_inverse(conj_word)
    vec, end = sd.rewrite(word)
    if end != 0:
        raise RuntimeError("conjugated Schreier generator did not close")  # bug guard
    return vec


def kernel_mod_ell_homology(sd: SchreierData, ell: int) -> GModule:
    """H_1 of the kernel with F_ell coefficients, as a G-module."""
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    n = sd.group.order
    ncols = sd.num_schreier
    relators = sd.relator_words()
    rows = np.zeros((n * len(relators), ncols), dtype=np.int64)
    k = 0
    for u in range(n):
        for rel in relators:
            vec, end = sd.rewrite(rel, start=u, vec=rows[k])
            if end != u:
                raise RuntimeError("relator trace did not return to its coset")
            k += 1
    R, pivots = rref_mod(rows, ell)
    free = [c for c in range(ncols) if c not in set(pivots)]
    dim = len(free)
    mod = GModule(ell, dim, [], sd, [sd.columns[c] for c in free],
                  _rref=R, _pivots=pivots, _free=free)
    for g_img, gen in zip(sd.gen_images, (X, Y)):
        conj_word = sd.tree_word[g_img]
        cols = []
        for c in free:
            vec = _conjugated_generator_image(sd, conj_word, c, ell)
            cols.append(mod.project(vec))
        mod.action.append(np.array(cols, dtype=np.int64).T % ell)
    _check_relations(mod)
    return mod


def _check_relations(mod: GModule) -> None:
    p, q, r = mod.schreier.type
    Ax, Ay = mod.action
    eye = np.eye(mod.dim, dtype=np.int64)
    def matpow(A, k):
        out = eye
        for _ in range(k):
            out = (out @ A) % mod.ell
        return out
    if (matpow(Ax, p) != eye).any() or (matpow(Ay, q) != eye).any():
        raise RuntimeError("action matrices violate the generator relations")
    if (matpow((Ax @ Ay) % mod.ell, r) != eye).any():
        raise RuntimeError("action matrices violate the product relation")


def _propagate_actions(mod: GModule):
    """Matrices for every element of G, by BFS over right multiplication."""
    sd = mod.schreier
    G = sd.group
    ell = mod.ell
    eye = np.eye(mod.dim, dtype=np.int64)
    inv = [np.array(_matinv(A, ell), dtype=np.int64) for A in mod.action]
    rho = [None] * G.order
    rho[0] = eye
    queue = [0]
    qpos = 0
    while qpos < len(queue):
        u = queue[qpos]
        qpos += 1
        for g in (X, Y):
            for table, mat in (((sd.right[g]), mod.action[g]),
                               ((sd.right_inv[g]), inv[g])):
                v = table[u]
                if rho[v] is None:
                    rho[v] = (rho[u] @ mat) % ell
                    queue.append(v)
    return rho


def _matinv(A, ell):
    d = len(A)
    aug = np.hstack([np.array(A, dtype=np.int64) % ell,
                     np.eye(d, dtype=np.int64)])
    R, pivots = rref_mod(aug, ell)
    if pivots[:d] != list(range(d)):
        raise RuntimeError("matrix not invertible mod ell")
    return R[:, d:]


# -- invariant submodules -----------------------------------------------------

SUBSPACE_SCAN_LIMIT = 2_000_000


class ScanInfeasibleError(RuntimeError):
    """The exhaustive subspace scan would exceed the feasibility limit."""


def _rref_subspaces(n, d, ell):
    """All d-dimensional subspaces of F_ell^n, one RREF basis each."""
    from itertools import combinations, product
    for pivots in combinations(range(n), d):
        free_positions = []
        for i, p in enumerate(pivots):
            for c in range(p + 1, n):
                if c not in pivots:
                    free_positions.append((i, c))
        for values in product(range(ell), repeat=len(free_positions)):
            B = np.zeros((d, n), dtype=np.int64)
            for i, p in enumerate(pivots):
                B[i, p] = 1
            for (i, c), v in zip(free_positions, values):
                B[i, c] = v
            yield B


def _count_subspaces(n, d, ell):
    num = den = 1
    for i in range(d):
        num *= ell ** (n - i) - 1
        den *= ell ** (d - i) - 1
    return num // den


def invariant_submodules(mod: GModule, d: int):
    """All G-invariant d-dimensional subspaces, by exhaustive subspace scan."""
    n = mod.dim
    if not 0 <= d <= n:
        raise ValueError(f"dimension {d} outside 0..{n}")
    if d == 0:
        return [np.zeros((0, n), dtype=np.int64)]
    total = _count_subspaces(n, d, mod.ell)
    if total > SUBSPACE_SCAN_LIMIT:
        raise ScanInfeasibleError(
            f"subspace scan infeasible: {total} candidate subspaces "
            f"(limit {SUBSPACE_SCAN_LIMIT})")
    out = []
    for B in _rref_subspaces(n, d, mod.ell):
        R, pivots = rref_mod(B, mod.ell)
        ok = True
        for A in mod.action:
            img = (B @ A.T) % mod.ell
            for row in img:
                if _reduce_vector(row, R, pivots, mod.ell).any():
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(B)
    return out


# -- extension quotients ------------------------------------------------------

class CocycleError(RuntimeError):
    """The twisted multiplication failed an internal consistency check."""


@dataclass
class ExtensionGroup:
    """An extension of G by the quotient module M/U, with its projection."""
    group: FinGroup
    base: FinGroup
    module_dim: int
    ell: int
    split: bool

    def project(self, i: int) -> int:
        """Image in the base group of an extension element (by point 0's block)."""
        return self.group.elements[i][0] % self.base.order


def extension_quotient(mod: GModule, U, cap=DEFAULT_CAP, name=None) -> ExtensionGroup:
    """Quotient of the triangle group by the preimage of the invariant U.

    Elements are pairs (v, g) with v in M/U; multiplication is twisted by
    the 2-cocycle c(g, h) = image of sigma(g) sigma(h) sigma(gh)^-1.  The
    group is realized through the left-regular action on the |M/U| * |G|
    pairs (so index multiplication matches the extension product and the
    projection to G is a homomorphism); the cocycle identity is verified
    on sampled triples.
    """
    sd = mod.schreier
    G = sd.group
    ell = mod.ell
    RU, pivotsU = rref_mod(U, ell) if len(U) else (np.zeros((0, mod.dim),
                                                            dtype=np.int64), [])
    freeU = [c for c in range(mod.dim) if c not in set(pivotsU)]
    qdim = len(freeU)

    def to_quotient(coords):
        return tuple(int(x) for x in
                     _reduce_vector(coords, RU, pivotsU, ell)[freeU])

    # quotient-module action matrices for every element of G
    rho_q = []
    for g in range(G.order):
        A = mod.action_of(g)
        cols = [to_quotient(A[:, freeU[j]]) for j in range(qdim)]
        rho_q.append(tuple(cols))

    # cocycle values c(s, g) for the two generator letters
    def cocycle_row(s_img):
        vals = []
        for g in range(G.order):
            sg = G.mul(s_img, g)
            word = (sd.tree_word[s_img] + sd.tree_word[g]
                    + _word_inverse(sd.tree_word[sg]))
            vec, end = sd.rewrite(word)
            if end != 0:
                raise CocycleError("cocycle word did not close")
            vals.append(to_quotient(mod.project(vec)))
        return vals

    gx, gy = sd.gen_images
    cx = cocycle_row(gx)
    cy = cocycle_row(gy)

    # images of the presentation generators in the extension
    def gen_value(letter, img):
        vec, end = sd.rewrite([(letter, 1)] + _word_inverse(sd.tree_word[img]))
        if end != 0:
            raise CocycleError("generator lift word did not close")
        return to_quotient(mod.project(vec))

    vx = gen_value(X, gx)
    vy = gen_value(Y, gy)

    npoints = (ell ** qdim) * G.order

    def v_code(v):
        code = 0
        for c in reversed(v):
            code = code * ell + c
        return code

    def v_decode(code):
        out = []
        for _ in range(qdim):
            out.append(code % ell)
            code //= ell
        return tuple(out)

    def act(g, v):
        mat = rho_q[g]
        out = [0] * qdim
        for j, col in enumerate(mat):
            if v[j]:
                for i in range(qdim):
                    out[i] = (out[i] + v[j] * col[i]) % ell
        return tuple(out)

    def left_gen_perm(w, s_img, c_row):
        # s = (w, s_img) acting by left multiplication:
        # s * (v, g) = (w + rho(s) v + c(s, g), s_img * g)
        images = []
        for point in range(npoints):
            vc, g = divmod(point, G.order)
            sv = act(s_img, v_decode(vc))
            c = c_row[g]
            v2 = tuple((w[i] + sv[i] + c[i]) % ell for i in range(qdim))
            images.append(v_code(v2) * G.order + G.mul(s_img, g))
        return tuple(images)

    perm_x = left_gen_perm(vx, gx, cx)
    perm_y = left_gen_perm(vy, gy, cy)
    label = name or f"{G.name}.ext({ell}^{qdim})"
    E = group_from_generators([perm_x, perm_y], cap=cap, name=label)
    expected = G.order * ell ** qdim
    if E.order != expected:
        raise CocycleError(f"extension order {E.order} != expected {expected}")
    _verify_cocycle(sd, mod, to_quotient, rho_q, ell, qdim)
    split = _has_complement(E, G, qdim, ell)
    return ExtensionGroup(E, G, qdim, ell, split)


def _verify_cocycle(sd, mod, to_quotient, rho_q, ell, qdim, samples=40):
    """Spot-check c(g,h) + c(gh,k) = g*c(h,k) + c(g,hk) on deterministic triples."""
    G = sd.group

    def coc(g, h):
        gh = G.mul(g, h)
        word = sd.tree_word[g] + sd.tree_word[h] + _word_inverse(sd.tree_word[gh])
        vec, end = sd.rewrite(word)
        if end != 0:
            raise CocycleError("cocycle word did not close")
        return to_quotient(mod.project(vec))

    step = max(1, G.order // 7)
    picks = list(range(0, G.order, step))[:12]
    count = 0
    for g in picks:
        for h in picks:
            for k in picks:
                if count >= samples:
                    return
                lhs = [(a + b) % ell for a, b in zip(coc(g, h), coc(G.mul(g, h), k))]
                gc = _apply(rho_q[g], coc(h, k), ell)
                rhs = [(a + b) % ell for a, b in zip(gc, coc(g, G.mul(h, k)))]
                if lhs != rhs:
                    raise CocycleError("2-cocycle identity violated")
                count += 1


def _apply(mat_cols, v, ell):
    n = len(v)
    out = [0] * n
    for j, col in enumerate(mat_cols):
        if v[j]:
            for i in range(n):
                out[i] = (out[i] + v[j] * col[i]) % ell
    return out


def _has_complement(E: FinGroup, G: FinGroup, qdim: int, ell: int) -> bool:
    """Search for a homomorphic section G -> E over all lifts of the generators.

    The extension splits iff some choice of preimages of the two triangle
    generator images extends to a homomorphism, tested by Cayley-graph
    propagation over G with respect to those images.
    """
    base = G.order
    # Point 0 of the extension is (0, identity), so e.elements[i][0] encodes
    # the element itself and its G block is the projection to the base.
    gx = E.generators[0][0] % base
    gy = E.generators[1][0] % base
    tG = [G.right_mult_table(gx), G.right_mult_table(gy)]
    lifts_x = [i for i in range(E.order) if E.elements[i][0] % base == gx]
    lifts_y = [i for i in range(E.order) if E.elements[i][0] % base == gy]
    tables_x = {ax: E.right_mult_table(ax) for ax in lifts_x}
    tables_y = {ay: E.right_mult_table(ay) for ay in lifts_y}
    for ax in lifts_x:
        for ay in lifts_y:
            if _section_exists(G, tG, (tables_x[ax], tables_y[ay])):
                return True
    return False


def _section_exists(G: FinGroup, tables_G, tables_E) -> bool:
    tau = [-1] * G.order
    tau[0] = 0
    queue = [0]
    qpos = 0
    while qpos < len(queue):
        u = queue[qpos]
        qpos += 1
        for tG, tE in zip(tables_G, tables_E):
            v = tG[u]
            w = tE[tau[u]]
            if tau[v] < 0:
                tau[v] = w
                queue.append(v)
            elif tau[v] != w:
                return False
    return True


# -- the genus-17 pipeline ----------------------------------------------------

def klein_extension_groups(cap=DEFAULT_CAP):
    """The two order-1344 Hurwitz groups, built from the Klein-quartic kernel.

    Takes the dessin class of PSL(2,7), computes the kernel's mod-2
    homology (dimension 6), finds its two invariant 3-dimensional
    subspaces, and forms the corresponding extension quotients.
    """
    from . import catalog, dessins

    G = catalog.psl2(7, cap=cap)
    cls = dessins.enumerate_triples(G, (2, 3, 7))
    if len(cls) != 1:
        raise RuntimeError("expected a unique dessin class for PSL(2,7)")
    t = cls[0].representative
    sd = schreier_data((2, 3, 7), G, t.x, t.y)
    mod = kernel_mod_ell_homology(sd, 2)
    subs = invariant_submodules(mod, 3)
    if len(subs) != 2:
        raise RuntimeError(f"expected two invariant 3-dim subspaces, got {len(subs)}")
    out = []
    for i, U in enumerate(subs, start=1):
        ext = extension_quotient(mod, U, cap=cap,
                                 name=f"2^3.PSL(2,7)#{i}")
        out.append(ext)
    return out
