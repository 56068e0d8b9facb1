"""Permutations of the port alphabet ``{0, ..., n+1}``.

A permutation is a plain tuple ``img`` where ``img[k]`` is the image of port
``k``.  Composition follows the usual right-to-left convention:
``compose(a, b)(x) == a[b[x]]``.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

Perm = tuple


def check_perm(p: Sequence[int]) -> None:
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"not a permutation: {tuple(p)!r}")


def identity(size: int) -> Perm:
    return tuple(range(size))


def compose(a: Perm, b: Perm) -> Perm:
    """Return ``a o b``."""
    return tuple(a[x] for x in b)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


@lru_cache(maxsize=None)
def parity(p: Perm) -> int:
    """Return +1 for even and -1 for odd permutations."""
    seen = [False] * len(p)
    sign = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def is_even(p: Perm) -> bool:
    return parity(p) == 1


def is_odd(p: Perm) -> bool:
    return parity(p) == -1


def transposition(size: int, i: int, j: int) -> Perm:
    """The flip ``s_ij`` on ``size`` ports."""
    img = list(range(size))
    img[i], img[j] = img[j], img[i]
    return tuple(img)


def cycle(size: int, *elems: int) -> Perm:
    """Cycle ``(e0 e1 ... ek)``: e0 -> e1 -> ... -> ek -> e0."""
    img = list(range(size))
    for a, b in zip(elems, elems[1:] + elems[:1]):
        img[a] = b
    return tuple(img)


def apply_set(p: Perm, ports: Iterable[int]) -> frozenset:
    return frozenset(p[x] for x in ports)


@lru_cache(maxsize=None)
def all_perms(size: int) -> tuple:
    return tuple(permutations(range(size)))


@lru_cache(maxsize=None)
def even_perms(size: int) -> tuple:
    """Rotations, in lexicographic order (identity first)."""
    return tuple(p for p in all_perms(size) if parity(p) == 1)


@lru_cache(maxsize=None)
def odd_perms(size: int) -> tuple:
    """Gluings, in lexicographic order."""
    return tuple(p for p in all_perms(size) if parity(p) == -1)


def maps_onto(p: Perm, src: Iterable[int], dst: Iterable[int]) -> bool:
    return apply_set(p, src) == frozenset(dst)


def format_perm(p: Perm) -> str:
    return ",".join(map(str, p))


def parse_perm(text: str) -> Perm:
    p = tuple(int(x) for x in text.split(","))
    check_perm(p)
    return p
