"""Coordinate permutations as 0-based image tuples.

``p[i]`` is the image of coordinate ``i``.  A permutation acts on words by
moving coordinates: ``apply(p, v)[p[i]] == v[i]``, i.e. the output at
``j`` is ``v[p^-1(j)]``.  With this action words transform by function
composition, ``apply(compose(p, q), v) == apply(p, apply(q, v))``.
"""

from __future__ import annotations

import re
from typing import Sequence

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_identity(p: Perm) -> bool:
    return all(i == x for i, x in enumerate(p))


def compose(p: Perm, q: Perm) -> Perm:
    """``p o q``: apply ``q`` first."""
    return tuple(p[x] for x in q)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def apply(p: Perm, v: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(v)
    for i, x in enumerate(v):
        out[p[i]] = x
    return tuple(out)


def fixed_points(p: Perm) -> list[int]:
    return [i for i, x in enumerate(p) if i == x]


def check_perm(p: Sequence[int], n: int | None = None) -> Perm:
    p = tuple(p)
    if sorted(p) != list(range(len(p))) or (n is not None and len(p) != n):
        raise ValueError(f"not a permutation of range({n if n is not None else len(p)}): {p}")
    return p


def to_cycles(p: Perm) -> str:
    """Disjoint cycles, 1-based, each starting at and sorted by its smallest point.

    The identity is ``()``.
    """
    seen = [False] * len(p)
    parts = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        parts.append("(" + ",".join(str(x + 1) for x in cyc) + ")")
    return "".join(parts) or "()"


_CYCLE = re.compile(r"\(([^()]*)\)")


def from_cycles(text: str, n: int) -> Perm:
    text = text.replace(" ", "")
    if not text or _CYCLE.sub("", text):
        raise ValueError(f"malformed cycle notation {text!r}")
    out = list(range(n))
    used: set[int] = set()
    for body in _CYCLE.findall(text):
        if not body:
            continue
        pts = [int(x) - 1 for x in body.split(",")]
        if any(not 0 <= x < n for x in pts) or used & set(pts) or len(set(pts)) != len(pts):
            raise ValueError(f"bad cycle ({body}) for degree {n}")
        used.update(pts)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            out[a] = b
    return tuple(out)
