"""Vertex names: plain string atoms, or derived names built by local rules.

A derived name is a nonempty finite set of ``(name, suffix)`` pairs where the
suffix ``0`` stands for the empty suffix and ``1..b`` for the numbered ones.
Derived names nest, so iterating a rule produces names of names.
"""
from __future__ import annotations

import re
from typing import Callable, Iterable, Union

_ATOM_RE = re.compile(r"[A-Za-z0-9_~'\-]+")


class DerivedName:
    __slots__ = ("parts", "_hash", "_text")

    def __init__(self, parts: Iterable[tuple]):
        parts = frozenset(parts)
        if not parts:
            raise ValueError("derived name must be nonempty")
        for base, suffix in parts:
            if not isinstance(suffix, int) or suffix < 0:
                raise ValueError(f"bad suffix {suffix!r}")
        self.parts = parts
        self._hash = hash(parts)
        self._text = None

    def __eq__(self, other):
        return isinstance(other, DerivedName) and self.parts == other.parts

    def __hash__(self):
        return self._hash

    def __str__(self):
        if self._text is None:
            self._text = "{" + ",".join(sorted(_part_str(b, s) for b, s in self.parts)) + "}"
        return self._text

    def __repr__(self):
        return f"DerivedName({str(self)})"

    def __lt__(self, other):
        return name_key(self) < name_key(other)

    def rename(self, fn: Callable) -> "DerivedName":
        """The elementwise action ``R*`` of a renaming ``fn`` on bases."""
        return DerivedName((fn(b), s) for b, s in self.parts)


Name = Union[str, DerivedName]


def _part_str(base, suffix: int) -> str:
    return str(base) if suffix == 0 else f"{base}.{suffix}"


def derived(*parts) -> DerivedName:
    """``derived(("u", 0), ("v", 2))`` -> ``{u,v.2}``."""
    return DerivedName(parts)


def dot(name: Name, suffix: int = 0) -> DerivedName:
    """The singleton derived name ``{name.suffix}``."""
    return DerivedName([(name, suffix)])


def name_key(name: Name) -> str:
    return str(name)


def sort_names(names: Iterable[Name]) -> list:
    return sorted(names, key=name_key)


def check_atom(text: str) -> str:
    if not _ATOM_RE.fullmatch(text):
        raise ValueError(f"invalid vertex name {text!r}")
    return text


def parse_name(text: str) -> Name:
    text = text.strip()
    if not text.startswith("{"):
        return check_atom(text)
    if not text.endswith("}"):
        raise ValueError(f"unbalanced braces in {text!r}")
    body = text[1:-1]
    items, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced braces in {text!r}")
        elif ch == "," and depth == 0:
            items.append(body[start:i])
            start = i + 1
    items.append(body[start:])
    if depth != 0:
        raise ValueError(f"unbalanced braces in {text!r}")
    parts = []
    for item in items:
        item = item.strip()
        m = re.fullmatch(r"(.*)\.(\d+)", item)
        if m:
            base, suffix = m.group(1), int(m.group(2))
        else:
            base, suffix = item, 0
        if not base:
            raise ValueError(f"empty name component in {text!r}")
        parts.append((parse_name(base), suffix))
    return DerivedName(parts)


def rename_name(name: Name, fn: Callable) -> Name:
    """Apply a renaming of atoms/bases; derived names are mapped elementwise."""
    if isinstance(name, DerivedName):
        return name.rename(fn)
    return fn(name)


def fresh_name(taken, host: Name, start: int = 0) -> tuple:
    """First unused ``<host>_<k>`` with ``k >= start``; returns (name, k)."""
    base = re.sub(r"[^A-Za-z0-9_~'\-]", "_", str(host)).strip("_") or "x"
    k = start
    while True:
        cand = f"{base}_{k}"
        if cand not in taken:
            return cand, k
        k += 1
