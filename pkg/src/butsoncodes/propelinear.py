"""Propelinear structures on codes.

Each codeword ``x`` carries an isometry ``(sigma_x, pi_x)`` acting by
``(sigma, pi)(v) = sigma(pi(v))`` with the coordinate action of
:mod:`butsoncodes.perm`.  ``sigma_x`` is translation by ``x`` unless an
explicit per-coordinate table over ``Z_k`` is supplied.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from . import perm as P
from .butson import LogMatrix, butson_witness
from .cocyclic import CocycleMatrix, FiniteGroup, cocycle_witness
from .codes import Code, build_codes
from .graymap import gray_context, map_word
from .ring import PhaseParams, factorize

Word = tuple[int, ...]
SymbolTables = tuple[tuple[int, ...], ...]


@dataclass
class PropelinearAssignment:
    perms: dict[Word, P.Perm]
    k: int
    sigmas: dict[Word, SymbolTables] | None = None

    def pi(self, x: Word) -> P.Perm:
        try:
            return self.perms[tuple(x)]
        except KeyError:
            raise KeyError(f"word {x} is not in the assignment") from None

    def act(self, x: Word, v: Sequence[int]) -> Word:
        w = P.apply(self.pi(x), v)
        if self.sigmas is None:
            return tuple((a + b) % self.k for a, b in zip(x, w))
        return tuple(t[b] for t, b in zip(self.sigmas[tuple(x)], w))

    def sigma_tables(self, x: Word) -> SymbolTables:
        if self.sigmas is not None:
            return self.sigmas[tuple(x)]
        return tuple(tuple((a + v) % self.k for v in range(self.k)) for a in x)


def star(assignment: PropelinearAssignment, x: Sequence[int], y: Sequence[int]) -> Word:
    """``x * y = (sigma_x, pi_x)(y)``, i.e. ``x + pi_x(y)`` for translations."""
    x, y = tuple(x), tuple(y)
    if y not in assignment.perms:
        raise KeyError(f"word {y} is not in the assignment")
    return assignment.act(x, y)


def propelinear_from_cocycle(M: LogMatrix, G: FiniteGroup) -> tuple[Code, PropelinearAssignment]:
    """Full propelinear structure on ``C_H`` for a cocyclic Butson ``M`` indexed by ``G``.

    The row of ``g`` gets ``pi`` with ``pi^-1(j) = index(g * g_j)``;
    translates of a row share its permutation.
    """
    if M.n != G.order:
        raise ValueError(f"matrix order {M.n} != group order {G.order}")
    w = cocycle_witness(CocycleMatrix.from_matrix(M), G)
    if w is not None:
        raise ValueError(f"matrix is not cocyclic over the group: identity fails at {w}")
    w = butson_witness(M)
    if w is not None:
        raise ValueError(f"matrix is not Butson: rows {w} are not orthogonal")
    _, C = build_codes(M)
    row_perm = [P.inverse(tuple(G.mul(g, j) for j in range(G.order))) for g in range(G.order)]
    perms: dict[Word, P.Perm] = {}
    for a in range(M.k):
        for g, r in enumerate(M.rows):
            perms[tuple((x + a) % M.k for x in r)] = row_perm[g]
    return C, PropelinearAssignment(perms, M.k)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    axiom: str = ""
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


def _compose_isometries(a: PropelinearAssignment, x: Word, y: Word) -> tuple[SymbolTables, P.Perm]:
    px, py = a.pi(x), a.pi(y)
    sx, sy = a.sigma_tables(x), a.sigma_tables(y)
    pinv = P.inverse(px)
    sig = tuple(tuple(sx[i][v] for v in sy[pinv[i]]) for i in range(len(px)))
    return sig, P.compose(px, py)


def verify_propelinear(C: Code, assignment: PropelinearAssignment, full: bool = False) -> Verdict:
    words = C.words
    if set(assignment.perms) != C.word_set:
        missing = C.word_set - set(assignment.perms)
        extra = set(assignment.perms) - C.word_set
        return Verdict(False, "domain", (sorted(missing)[:1], sorted(extra)[:1]))
    n, k = C.n, C.k
    if assignment.k != k:
        return Verdict(False, "domain", (assignment.k, k))
    for x in words:
        try:
            P.check_perm(assignment.pi(x), n)
        except ValueError:
            return Verdict(False, "permutation", (x,))
    zero = (0,) * n
    if zero not in C:
        return Verdict(False, "zero", (zero,))
    for x in words:
        if assignment.act(x, zero) != x:
            return Verdict(False, "(i) maps 0 to x", (x,))
        for y in words:
            if assignment.act(x, y) not in C:
                return Verdict(False, "(i) closure", (x, y))
    translations = assignment.sigmas is None
    for x in words:
        for y in words:
            z = assignment.act(x, y)
            if translations:
                ok = assignment.pi(z) == P.compose(assignment.pi(x), assignment.pi(y))
            else:
                ok = (assignment.sigma_tables(z), assignment.pi(z)) == _compose_isometries(assignment, x, y)
            if not ok:
                return Verdict(False, "(ii) compatibility", (x, y, z))
    if full:
        for a in words:
            if not translations:
                want = tuple(tuple((ai + v) % k for v in range(k)) for ai in a)
                if assignment.sigma_tables(a) != want:
                    return Verdict(False, "full: sigma is translation", (a,))
            pa = assignment.pi(a)
            if len(set(a)) == 1:
                if not P.is_identity(pa):
                    return Verdict(False, "full: constant word has identity pi", (a,))
            elif P.fixed_points(pa):
                return Verdict(False, "full: pi has no fixed coordinate", (a, P.fixed_points(pa)[0]))
    return Verdict(True)


@dataclass(frozen=True)
class GroupDescriptor:
    order: int
    abelian: bool
    invariant_factors: tuple[int, ...] | None
    order_histogram: tuple[tuple[int, int], ...]
    center_order: int
    abelianization: tuple[int, ...]

    @property
    def cyclic(self) -> bool:
        return self.abelian and len(self.invariant_factors) <= 1


def invariant_factors_from_orders(hist: dict[int, int]) -> tuple[int, ...]:
    """Invariant factors ``d_1 | d_2 | ...`` of a finite abelian group from its order histogram."""
    total = sum(hist.values())
    if total == 1:
        return ()
    parts: dict[int, list[int]] = {}
    for p in sorted(factorize(total)):
        e_p = factorize(total)[p]
        counts = [sum(c for o, c in hist.items() if p**i % o == 0) for i in range(e_p + 1)]
        if counts[-1] != p**e_p:
            raise ArithmeticError("order histogram is not that of an abelian group")
        logs = []
        for c in counts:
            e = 0
            while c > 1:
                if c % p:
                    raise ArithmeticError("order histogram is not that of an abelian group")
                c //= p
                e += 1
            logs.append(e)
        conj = [logs[i] - logs[i - 1] for i in range(1, len(logs))]
        lam = [sum(1 for e in conj if e >= j) for j in range(1, (conj[0] if conj else 0) + 1)]
        parts[p] = sorted(lam, reverse=True)
    length = max(len(v) for v in parts.values())
    out = []
    for j in range(length):
        d = 1
        for p, lam in parts.items():
            if j < len(lam):
                d *= p ** lam[j]
        out.append(d)
    return tuple(sorted(out))


def _table_powers_order(table: np.ndarray, identity: int) -> list[int]:
    orders = []
    for a in range(len(table)):
        x, o = a, 1
        while x != identity:
            x = table[x, a]
            o += 1
        orders.append(o)
    return orders


def describe_table(table: np.ndarray, identity: int) -> GroupDescriptor:
    """Fingerprint of a group given as a Cayley table (rows times columns)."""
    n = len(table)
    abelian = bool((table == table.T).all())
    orders = _table_powers_order(table, identity)
    hist = Counter(orders)
    center = int(sum(1 for a in range(n) if (table[a] == table[:, a]).all()))
    inv = [int(np.flatnonzero(table[a] == identity)[0]) for a in range(n)]
    comms = {int(table[table[a, b], table[inv[a], inv[b]]]) for a in range(n) for b in range(n)}
    sub = set(comms) | {identity}
    frontier = list(sub)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(sub):
                for c in (int(table[a, b]), int(table[b, a])):
                    if c not in sub:
                        sub.add(c)
                        nxt.append(c)
        frontier = nxt
    if abelian:
        factors = invariant_factors_from_orders(hist)
        abel = factors
    else:
        factors = None
        qhist: Counter[int] = Counter()
        for a in range(n):
            x, o = a, 1
            while x not in sub:
                x = int(table[x, a])
                o += 1
            qhist[o] += 1
        abel = invariant_factors_from_orders({o: c // len(sub) for o, c in qhist.items()})
    return GroupDescriptor(n, abelian, factors, tuple(sorted(hist.items())), center, abel)


def cayley_table(elements: Sequence, mul: Callable) -> tuple[np.ndarray, int]:
    index = {e: i for i, e in enumerate(elements)}
    table = np.array([[index[mul(a, b)] for b in elements] for a in elements], dtype=np.int64)
    ident = [i for i in range(len(elements)) if (table[i] == np.arange(len(elements))).all()]
    if not ident:
        raise ValueError("operation has no identity on these elements")
    return table, ident[0]


def permutation_closure(gens: Sequence[P.Perm], bound: int = 100_000) -> list[P.Perm]:
    gens = list(dict.fromkeys(gens))
    if not gens:
        return []
    e = P.identity(len(gens[0]))
    group = {e: None}
    frontier = [e]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = P.compose(g, a)
                if c not in group:
                    group[c] = None
                    if len(group) > bound:
                        raise ValueError(f"permutation group exceeds bound {bound}")
                    nxt.append(c)
        frontier = nxt
    return list(group)


def code_group_table(C: Code, assignment: PropelinearAssignment) -> tuple[np.ndarray, int]:
    return cayley_table(C.words, lambda a, b: star(assignment, a, b))


def group_descriptor(C: Code, assignment: PropelinearAssignment,
                     bound: int = 100_000) -> tuple[GroupDescriptor, GroupDescriptor]:
    """Descriptors of ``(C, *)`` and of the group generated by all ``pi_x``."""
    code_desc = describe_table(*code_group_table(C, assignment))
    perms = permutation_closure([assignment.pi(x) for x in C.words], bound)
    perm_desc = describe_table(*cayley_table(perms, P.compose))
    return code_desc, perm_desc


def perm_group_descriptor(gens: Sequence[P.Perm], bound: int = 100_000) -> GroupDescriptor:
    perms = permutation_closure(gens, bound)
    return describe_table(*cayley_table(perms, P.compose))


def commutator(a: P.Perm, b: P.Perm) -> P.Perm:
    """``a b a^-1 b^-1`` as a composition of functions."""
    return P.compose(P.compose(a, b), P.compose(P.inverse(a), P.inverse(b)))


def transfer_permutation(x: Word, pi: P.Perm) -> P.Perm:
    """``rho_x pi_{Phi(x)}`` on ``2n`` coordinates.

    Block ``i`` (coordinates ``2i, 2i+1``) moves to block ``pi(i)``; the
    block is then swapped iff the symbol of ``x`` landing there is odd.
    """
    n = len(pi)
    out = [0] * (2 * n)
    for i in range(n):
        j = pi[i]
        swap = x[j] % 2
        out[2 * i] = 2 * j + swap
        out[2 * i + 1] = 2 * j + 1 - swap
    return tuple(out)


def gray_transfer(C: Code, assignment: PropelinearAssignment) -> tuple[Code, PropelinearAssignment]:
    """Carry a full propelinear structure on a ``Z_{4m}`` code (m odd) through Psi_2."""
    k = C.k
    if k % 4 or (k // 4) % 2 == 0:
        raise ValueError(f"modulus {k} is not 4m with m odd")
    if assignment.sigmas is not None:
        raise ValueError("gray transfer needs translation symbol actions")
    ctx = gray_context(PhaseParams(2, 2, k // 4))
    image: dict[Word, P.Perm] = {}
    for x in C.words:
        image[map_word("psi", x, ctx)] = transfer_permutation(x, assignment.pi(x))
    img = Code.from_words(image, k // 2, "image")
    if len(img) != len(C):
        raise RuntimeError("Psi_2 collapsed distinct codewords")
    return img, PropelinearAssignment(image, k // 2)


def check_transfer_isomorphism(C: Code, a: PropelinearAssignment,
                               C2: Code, a2: PropelinearAssignment) -> tuple | None:
    """First pair with ``Psi(x * y) != Psi(x) *' Psi(y)``, or None."""
    ctx = gray_context(PhaseParams(2, 2, C.k // 4))
    f = {x: map_word("psi", x, ctx) for x in C.words}
    for x in C.words:
        for y in C.words:
            if f[star(a, x, y)] != star(a2, f[x], f[y]):
                return x, y
    return None
