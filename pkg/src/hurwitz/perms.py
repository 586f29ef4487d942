"""Permutations as image tuples, 0-based."""

from __future__ import annotations

from math import lcm

Perm = tuple  # images: Perm[i] is the image of point i


def identity(n: int) -> Perm:
    return tuple(range(n))


def pmul(a: Perm, b: Perm) -> Perm:
    """Product a*b, acting as b first in the image convention (a*b)[i] = a[b[i]]."""
    return tuple(map(a.__getitem__, b))


def pinv(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def porder(a: Perm) -> int:
    """Order of a permutation via its cycle lengths."""
    n = len(a)
    seen = [False] * n
    o = 1
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = a[j]
            length += 1
        o = lcm(o, length)
    return o


def is_perm(images) -> bool:
    n = len(images)
    return sorted(images) == list(range(n))


def cycle_notation(a: Perm) -> str:
    n = len(a)
    seen = [False] * n
    parts = []
    for i in range(n):
        if seen[i] or a[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = a[j]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) if parts else "()"
