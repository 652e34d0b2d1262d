"""Finite groups as Cayley tables, 2-cocycles and central extensions.

Everything is in log form: a cocycle with values in the k-th roots of
unity is stored as a table of exponents mod k, so the multiplicative
identity ``psi(g,h) psi(gh,c) = psi(g,hc) psi(h,c)`` becomes
``psi[g][h] + psi[g*h][c] == psi[g][h*c] + psi[h][c] (mod k)``.
Group elements are referred to by their index in the table.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .butson import LogMatrix
from .cyclotomic import is_vanishing


class NotAGroupError(ValueError):
    pass


class NotInvariantError(ValueError):
    def __init__(self, witness: tuple[int, int, int]):
        g, h, c = witness
        super().__init__(f"a[{g}*{c}, {h}*{c}] != a[{g}, {h}]")
        self.witness = witness


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    identity: int = 0

    def __post_init__(self):
        table = tuple(tuple(r) for r in self.table)
        object.__setattr__(self, "table", table)
        n = len(table)
        if n == 0 or len(self.labels) != n:
            raise NotAGroupError("table and labels must be non-empty and of equal size")
        T = np.array(table, dtype=np.int64)
        if T.shape != (n, n):
            raise NotAGroupError("Cayley table is not square")
        full = np.arange(n)
        if not (np.sort(T, axis=1) == full).all() or not (np.sort(T, axis=0) == full[:, None]).all():
            raise NotAGroupError("Cayley table is not a Latin square")
        e = self.identity
        if not ((T[e] == full).all() and (T[:, e] == full).all()):
            raise NotAGroupError(f"element {e} is not an identity")
        for a in range(n):
            if not (T[T[a]] == T[a][T]).all():
                b = np.argwhere(T[T[a]] != T[a][T])[0]
                raise NotAGroupError(f"associativity fails at ({a}, {b[0]}, {b[1]})")
        inv = [0] * n
        for a in range(n):
            inv[a] = int(np.flatnonzero(T[a] == e)[0])
        object.__setattr__(self, "_inv", tuple(inv))

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def is_abelian(self) -> bool:
        return all(self.table[a][b] == self.table[b][a]
                   for a, b in itertools.combinations(range(self.order), 2))


def group_from_factors(orders: Sequence[int]) -> FiniteGroup:
    """Direct product of cyclic groups, elements in mixed-radix order (first factor major)."""
    orders = tuple(orders)
    if any(o < 1 for o in orders):
        raise ValueError(f"cyclic factor orders must be >= 1, got {orders}")
    elems = list(itertools.product(*(range(o) for o in orders)))
    index = {e: i for i, e in enumerate(elems)}
    table = tuple(
        tuple(index[tuple((a + b) % o for a, b, o in zip(x, y, orders))] for y in elems)
        for x in elems
    )
    labels = tuple("(" + ",".join(map(str, e)) + ")" for e in elems)
    return FiniteGroup(table, labels, 0)


_SPEC = re.compile(r"^Z(\d+)(xZ(\d+))*$")


def parse_group_spec(spec: str) -> FiniteGroup:
    """``"Z8"``, ``"Z2xZ4"``, ... as a product of cyclic groups."""
    if not _SPEC.match(spec):
        raise ValueError(f"bad group spec {spec!r}; expected e.g. Z8 or Z2xZ4")
    return group_from_factors([int(f[1:]) for f in spec.split("x")])


@dataclass(frozen=True)
class CocycleMatrix:
    psi: tuple[tuple[int, ...], ...]
    k: int

    @classmethod
    def from_matrix(cls, M: LogMatrix) -> "CocycleMatrix":
        return cls(M.rows, M.k)

    def matrix(self) -> LogMatrix:
        return LogMatrix(self.psi, self.k)

    def is_normalized(self, identity: int = 0) -> bool:
        return all(r[identity] == 0 for r in self.psi) and all(x == 0 for x in self.psi[identity])


def _check_sizes(psi: CocycleMatrix, G: FiniteGroup):
    if len(psi.psi) != G.order or any(len(r) != G.order for r in psi.psi):
        raise ValueError(f"cocycle table is not {G.order}x{G.order}")


def cocycle_witness(psi: CocycleMatrix, G: FiniteGroup) -> tuple[int, int, int] | None:
    """First triple where the cocycle identity fails, or None."""
    _check_sizes(psi, G)
    P = np.array(psi.psi, dtype=np.int64)
    T = np.array(G.table, dtype=np.int64)
    for g in range(G.order):
        # rows index h, columns index c
        lhs = P[g][:, None] + P[T[g]]
        rhs = P[g][T] + P
        bad = (lhs - rhs) % psi.k
        if bad.any():
            h, c = np.argwhere(bad)[0]
            return g, int(h), int(c)
    return None


def is_cocycle(psi: CocycleMatrix, G: FiniteGroup) -> bool:
    return cocycle_witness(psi, G) is None


def coboundary(phi: Sequence[int], G: FiniteGroup, k: int) -> CocycleMatrix:
    """Log form of ``phi(g)^-1 phi(h)^-1 phi(gh)``."""
    if len(phi) != G.order:
        raise ValueError(f"phi has {len(phi)} values, group has order {G.order}")
    n = G.order
    return CocycleMatrix(
        tuple(tuple((phi[G.mul(g, h)] - phi[g] - phi[h]) % k for h in range(n)) for g in range(n)),
        k,
    )


def invariance_witness(A: LogMatrix, G: FiniteGroup) -> tuple[int, int, int] | None:
    n = G.order
    if A.n != n:
        raise ValueError(f"matrix order {A.n} != group order {n}")
    for g, h, c in itertools.product(range(n), repeat=3):
        if A.rows[G.mul(g, c)][G.mul(h, c)] != A.rows[g][h]:
            return g, h, c
    return None


def is_group_invariant(A: LogMatrix, G: FiniteGroup) -> bool:
    return invariance_witness(A, G) is None


def cocycle_from_invariant(A: LogMatrix, G: FiniteGroup) -> CocycleMatrix:
    """``psi(g,h) = -a[g,1] + a[g,h^-1] - a[1,h^-1]`` for a G-invariant ``A``.

    Normalized exactly when ``a[1,1] = 0``.
    """
    w = invariance_witness(A, G)
    if w is not None:
        raise NotInvariantError(w)
    n, k, e, a = G.order, A.k, G.identity, A.rows
    return CocycleMatrix(
        tuple(tuple((-a[g][e] + a[g][G.inv(h)] - a[e][G.inv(h)]) % k for h in range(n))
              for g in range(n)),
        k,
    )


def is_orthogonal_cocycle(psi: CocycleMatrix, G: FiniteGroup) -> bool:
    """Each non-identity row of ``M_psi`` sums to zero as a sum of roots of unity."""
    w = cocycle_witness(psi, G)
    if w is not None:
        raise ValueError(f"not a cocycle: identity fails at {w}")
    for g in range(G.order):
        if g == G.identity:
            continue
        counts = [0] * psi.k
        for x in psi.psi[g]:
            counts[x] += 1
        if not is_vanishing(counts):
            return False
    return True


def extension_group(psi: CocycleMatrix, G: FiniteGroup) -> FiniteGroup:
    """Central extension ``E_psi`` on pairs ``(u, g)``, indexed ``u * |G| + g``.

    ``(u, g)(v, h) = (u + v + psi(g, h), gh)``.
    """
    w = cocycle_witness(psi, G)
    if w is not None:
        raise ValueError(f"not a cocycle: identity fails at {w}")
    n, k = G.order, psi.k
    table = []
    for u in range(k):
        for g in range(n):
            table.append(tuple(
                ((u + v + psi.psi[g][h]) % k) * n + G.mul(g, h) for v in range(k) for h in range(n)
            ))
    labels = tuple(f"({u},{G.labels[g]})" for u in range(k) for g in range(n))
    # (u, e) with u = -psi(e, e) is the identity for any cocycle
    e = (-psi.psi[G.identity][G.identity] % k) * n + G.identity
    return FiniteGroup(tuple(table), labels, e)


def transversal_cocycle(E: FiniteGroup, G: FiniteGroup, k: int) -> CocycleMatrix:
    """``psi_T(g,h) = s(g) s(h) s(gh)^-1`` for the section ``s(g) = (0, g)`` of ``E_psi``."""
    n = G.order
    if E.order != k * n:
        raise ValueError(f"extension order {E.order} != {k}*{n}")
    # kernel element (u, e) is read as u - u0, where (u0, e) is the identity
    u0 = E.identity // n
    rows = []
    for g in range(n):
        row = []
        for h in range(n):
            x = E.mul(E.mul(g, h), E.inv(G.mul(g, h)))
            u, rest = divmod(x, n)
            if rest != G.identity:
                raise ValueError(f"section product for ({g},{h}) left the central subgroup")
            row.append((u - u0) % k)
        rows.append(tuple(row))
    return CocycleMatrix(tuple(rows), k)


def center(E: FiniteGroup) -> list[int]:
    return [a for a in range(E.order) if all(E.mul(a, b) == E.mul(b, a) for b in range(E.order))]
