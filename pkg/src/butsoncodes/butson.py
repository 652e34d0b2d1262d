"""Butson matrices in logarithmic form.

A ``LogMatrix`` stores exponents: entry ``(i, j)`` stands for
``zeta_k ** rows[i][j]``.  Indices are 0-based throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import lcm
from typing import Sequence

import numpy as np

from .cyclotomic import rows_orthogonal, vanishing_rows
from .ring import is_prime, prime_power


@dataclass(frozen=True)
class LogMatrix:
    rows: tuple[tuple[int, ...], ...]
    k: int

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if self.k < 1:
            raise ValueError(f"phase {self.k} must be >= 1")
        n = len(rows)
        if n == 0:
            raise ValueError("matrix must have at least one row")
        for i, r in enumerate(rows):
            if len(r) != n:
                raise ValueError(f"row {i} has length {len(r)}, expected {n}")
            for j, x in enumerate(r):
                if not 0 <= x < self.k:
                    raise ValueError(f"entry ({i},{j})={x} outside [0, {self.k})")

    @property
    def n(self) -> int:
        return len(self.rows)

    def array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64)

    def transpose(self) -> "LogMatrix":
        return LogMatrix(tuple(zip(*self.rows)), self.k)

    def complex(self) -> np.ndarray:
        return np.exp(2j * np.pi * self.array() / self.k)

    def row_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.rows)

    def is_dephased(self) -> bool:
        return all(x == 0 for x in self.rows[0]) and all(r[0] == 0 for r in self.rows)


@dataclass(frozen=True)
class MonomialPair:
    """Row and column monomial matrices acting on a log matrix.

    ``apply_monomial`` sends ``M`` to the matrix with entries
    ``M[row_perm[i]][col_perm[j]] + row_phase[i] - col_phase[j]``.
    """

    row_perm: tuple[int, ...]
    row_phase: tuple[int, ...]
    col_perm: tuple[int, ...]
    col_phase: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> "MonomialPair":
        idx = tuple(range(n))
        return cls(idx, (0,) * n, idx, (0,) * n)


@dataclass(frozen=True)
class GeneratorMatrix:
    rows: tuple[tuple[int, ...], ...]
    orders: tuple[int, ...]
    p: int
    s: int
    t: tuple[int, ...]

    @property
    def k(self) -> int:
        return self.p**self.s

    @property
    def length(self) -> int:
        return len(self.rows[0])


def fourier(n: int) -> LogMatrix:
    if n < 1:
        raise ValueError(f"order {n} must be >= 1")
    return LogMatrix(tuple(tuple(i * j % n for j in range(n)) for i in range(n)), n)


def embed_phase(M: LogMatrix, phase: int) -> LogMatrix:
    if phase % M.k:
        raise ValueError(f"phase {M.k} does not divide {phase}")
    f = phase // M.k
    return LogMatrix(tuple(tuple(x * f for x in r) for r in M.rows), phase)


def kronecker(A: LogMatrix, B: LogMatrix) -> LogMatrix:
    """Kronecker product with ``A`` as the major index."""
    k = lcm(A.k, B.k)
    A, B = embed_phase(A, k), embed_phase(B, k)
    rows = []
    for ra in A.rows:
        for rb in B.rows:
            rows.append(tuple((x + y) % k for x in ra for y in rb))
    return LogMatrix(tuple(rows), k)


def kronecker_all(factors: Sequence[LogMatrix]) -> LogMatrix:
    out = LogMatrix(((0,),), 1)
    for f in factors:
        out = kronecker(out, f)
    return out


def _difference_counts(R: np.ndarray, i: int, k: int) -> np.ndarray:
    D = (R[i] - R[i + 1:]) % k
    r = D.shape[0]
    flat = (np.arange(r)[:, None] * k + D).ravel()
    return np.bincount(flat, minlength=r * k).reshape(r, k)


def butson_witness(M: LogMatrix) -> tuple[int, int] | None:
    """First pair of distinct non-orthogonal rows, or None if ``M`` is Butson."""
    R = M.array()
    for i in range(M.n - 1):
        ok = vanishing_rows(_difference_counts(R, i, M.k), M.k)
        if not ok.all():
            return i, i + 1 + int(np.argmin(ok))
    return None


def is_butson(M: LogMatrix) -> bool:
    return butson_witness(M) is None


def is_butson_pairwise(M: LogMatrix) -> bool:
    """Row-pair loop over :func:`rows_orthogonal`; slow reference path."""
    return all(rows_orthogonal(M.rows[i], M.rows[j], M.k)
               for i, j in itertools.combinations(range(M.n), 2))


def gram_offdiag_max(M: LogMatrix) -> float:
    H = M.complex()
    G = H @ H.conj().T
    np.fill_diagonal(G, 0)
    return float(np.abs(G).max(initial=0.0))


def apply_monomial(M: LogMatrix, pair: MonomialPair) -> LogMatrix:
    n, k = M.n, M.k
    for name in ("row_perm", "row_phase", "col_perm", "col_phase"):
        if len(getattr(pair, name)) != n:
            raise ValueError(f"{name} has length {len(getattr(pair, name))}, expected {n}")
    for name in ("row_perm", "col_perm"):
        if sorted(getattr(pair, name)) != list(range(n)):
            raise ValueError(f"{name} is not a permutation of range({n})")
    rows = tuple(
        tuple((M.rows[pair.row_perm[i]][pair.col_perm[j]] + pair.row_phase[i] - pair.col_phase[j]) % k
              for j in range(n))
        for i in range(n)
    )
    return LogMatrix(rows, k)


def dephase(M: LogMatrix) -> tuple[LogMatrix, MonomialPair]:
    """Make the first row and column zero; returns the matrix and the pair used."""
    n, k = M.n, M.k
    r0 = M.rows[0]
    row_phase = tuple(-r[0] % k for r in M.rows)
    col_phase = tuple((r0[j] - r0[0]) % k for j in range(n))
    idx = tuple(range(n))
    pair = MonomialPair(idx, row_phase, idx, col_phase)
    return apply_monomial(M, pair), pair


def is_balanced(M: LogMatrix) -> bool:
    """Every row difference and column difference hits each residue ``n/k`` times."""
    n, k = M.n, M.k
    if n % k:
        return n == 1
    for A in (M, M.transpose()):
        for x, y in itertools.combinations(A.rows, 2):
            counts = [0] * k
            for a, b in zip(x, y):
                counts[(a - b) % k] += 1
            if len(set(counts)) != 1:
                return False
    return True


def build_generator(p: int, s: int, t: Sequence[int]) -> GeneratorMatrix:
    """Recursive generator ``A^{t_1,...,t_s}`` over ``Z_{p^s}``, seeded by ``[0]``."""
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    t = tuple(t)
    if s < 1 or len(t) != s:
        raise ValueError(f"need s >= 1 and len(t) == s, got s={s}, t={t}")
    if t[0] < 1 or any(x < 0 for x in t):
        raise ValueError(f"need t_1 >= 1 and t_i >= 0, got {t}")
    rows: list[list[int]] = [[0]]
    orders = [1]
    for i in range(1, s + 1):
        reps = p ** (s - i + 1)
        step = p ** (i - 1)
        for _ in range(t[i - 1] - (1 if i == 1 else 0)):
            width = len(rows[0])
            rows = [r * reps for r in rows]
            rows.append([j * step for j in range(reps) for _ in range(width)])
            orders.append(reps)
    return GeneratorMatrix(tuple(tuple(r) for r in rows), tuple(orders), p, s, t)


def generator_order(p: int, s: int, t: Sequence[int]) -> int:
    return p ** (sum((s - i) * x for i, x in enumerate(t)) - s)


def span_rows(A: GeneratorMatrix) -> LogMatrix:
    """All Z_{p^s}-combinations of the generator rows.

    Coefficients run mixed-radix with the last generator row most
    significant, which reproduces the printed examples row for row.
    """
    k, width = A.k, A.length
    seen: dict[tuple[int, ...], None] = {}
    ranges = [range(o) for o in reversed(A.orders)]
    for coeffs in itertools.product(*ranges):
        row = [0] * width
        for c, g in zip(coeffs, reversed(A.rows)):
            if c:
                for j, x in enumerate(g):
                    row[j] += c * x
        seen.setdefault(tuple(x % k for x in row), None)
    if len(seen) != width:
        raise RuntimeError(f"span has {len(seen)} distinct rows, expected {width}")
    return LogMatrix(tuple(seen), k)


def kron_factors(p: int, s: int, t: Sequence[int]) -> list[LogMatrix]:
    """Fourier factors ``F_p^{t_s} x F_{p^2}^{t_{s-1}} x ... x F_{p^s}^{t_1-1}`` in phase p^s."""
    k = p**s
    out = []
    # stage i contributes F_{p^{s-i+1}}; later stages are more significant
    for i in range(s, 0, -1):
        reps = t[i - 1] - (1 if i == 1 else 0)
        out.extend([embed_phase(fourier(p ** (s - i + 1)), k)] * reps)
    return out


def verify_kron_factorization(p: int, s: int, t: Sequence[int], max_order: int = 4096) -> bool:
    n = generator_order(p, s, t)
    if n > max_order:
        raise ValueError(f"order {n} exceeds bound {max_order}")
    H = span_rows(build_generator(p, s, t))
    K = embed_phase(kronecker_all(kron_factors(p, s, t)), p**s)
    return H.row_set() == K.row_set()


@dataclass(frozen=True)
class RowStats:
    repetitions: tuple[int, ...]   # r_H(l) for each symbol l
    p: int | None
    bound_ok: bool | None
    pattern_ok: bool | None
    pattern_violations: tuple[int, ...]


def _row_pattern_ok(row: Sequence[int], p: int, s: int) -> bool:
    unit = p ** (s - 1)
    counts: dict[int, list[int]] = {}
    for x in row:
        counts.setdefault(x % unit, [0] * p)[x // unit] += 1
    if 0 not in counts:
        return False
    return all(len(set(c)) == 1 for c in counts.values())


def row_stats(M: LogMatrix) -> RowStats:
    """Symbol repetition maxima over non-initial rows, with prime-power checks."""
    n, k = M.n, M.k
    reps = [0] * k
    for r in M.rows[1:]:
        counts = [0] * k
        for x in r:
            counts[x] += 1
        reps = [max(a, b) for a, b in zip(reps, counts)]
    pp = prime_power(k)
    if pp is None:
        return RowStats(tuple(reps), None, None, None, ())
    p, s = pp
    unit = p ** (s - 1)
    bound_ok = n % p == 0 and all(
        r <= (n // p if l % unit == 0 else n // p - 1) for l, r in enumerate(reps)
    ) if n > 1 else True
    bad = tuple(i for i, r in enumerate(M.rows) if i and not _row_pattern_ok(r, p, s))
    return RowStats(tuple(reps), p, bound_ok, not bad, bad)
