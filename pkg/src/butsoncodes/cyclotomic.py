"""Exact vanishing test for sums of k-th roots of unity.

A sum ``sum_j c_j * zeta_k**j`` is zero iff the integer polynomial
``sum_j c_j x**j`` is divisible by the cyclotomic polynomial Phi_k.
Python ints are unbounded, so coefficient arithmetic cannot wrap; the
numpy batch path checks its int64 headroom and falls back to objects.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np

from .ring import check_word

_INT64_SAFE = 2**62


def normalize(poly: Sequence[int]) -> tuple[int, ...]:
    poly = list(poly)
    while poly and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def poly_mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return normalize(out)


def poly_divmod(a: Sequence[int], b: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Quotient and remainder of ``a`` by a monic ``b`` over the integers."""
    b = normalize(b)
    if not b or b[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(normalize(a))
    db = len(b) - 1
    if len(rem) <= db:
        return (), tuple(rem)
    quot = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c:
            quot[i - db] = c
            for j in range(db + 1):
                rem[i - db + j] -= c * b[j]
    return normalize(quot), normalize(rem[:db])


def divisors(k: int) -> list[int]:
    return [d for d in range(1, k + 1) if k % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_poly(k: int) -> tuple[int, ...]:
    """Coefficients of Phi_k in ascending degree."""
    if k < 1:
        raise ValueError(f"k={k} must be >= 1")
    num = (-1,) + (0,) * (k - 1) + (1,)  # x**k - 1
    den: tuple[int, ...] = (1,)
    for d in divisors(k)[:-1]:
        den = poly_mul(den, cyclotomic_poly(d))
    quot, rem = poly_divmod(num, den)
    if rem:
        raise ArithmeticError(f"x^{k}-1 not divisible by lower cyclotomic factors")
    return quot


@lru_cache(maxsize=None)
def reduction_table(k: int) -> tuple[tuple[int, ...], ...]:
    """Row ``j`` holds the coefficients of ``x**j mod Phi_k``, padded to phi(k)."""
    phi = cyclotomic_poly(k)
    deg = len(phi) - 1
    rows = []
    for j in range(k):
        _, r = poly_divmod((0,) * j + (1,), phi)
        rows.append(tuple(r) + (0,) * (deg - len(r)))
    return tuple(rows)


def is_vanishing(counts: Sequence[int]) -> bool:
    """True iff ``sum_j counts[j] * zeta_k**j == 0`` with ``k = len(counts)``."""
    k = len(counts)
    if k < 1:
        raise ValueError("count vector must be non-empty")
    if any(c < 0 for c in counts):
        raise ValueError("counts must be nonnegative")
    _, rem = poly_divmod(counts, cyclotomic_poly(k))
    return not rem


def difference_counts(x: Sequence[int], y: Sequence[int], k: int) -> list[int]:
    x, y = check_word(x, k), check_word(y, k)
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} != {len(y)}")
    counts = [0] * k
    for a, b in zip(x, y):
        counts[(a - b) % k] += 1
    return counts


def rows_orthogonal(x: Sequence[int], y: Sequence[int], k: int) -> bool:
    """Hermitian orthogonality of the phase-k vectors with log forms ``x``, ``y``."""
    return is_vanishing(difference_counts(x, y, k))


def vanishing_rows(counts: np.ndarray, k: int) -> np.ndarray:
    """Vectorized :func:`is_vanishing` over the rows of a ``(r, k)`` count array."""
    table = reduction_table(k)
    bound = max((abs(c) for row in table for c in row), default=0)
    total = int(counts.sum(axis=1).max(initial=0))
    if bound * total < _INT64_SAFE:
        rem = counts.astype(np.int64) @ np.array(table, dtype=np.int64)
    else:
        rem = counts.astype(object) @ np.array(table, dtype=object)
    return ~np.any(rem != 0, axis=1)
