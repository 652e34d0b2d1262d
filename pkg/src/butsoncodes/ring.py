"""Residue arithmetic over Z_k, weights and distances.

Residues are plain ints in ``[0, k)`` and words are tuples of such ints.
Negative or oversized entries are rejected rather than reduced.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

METRICS = ("hamming", "lee", "star", "dagger")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` as ``{prime: exponent}``."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def prime_power(k: int) -> tuple[int, int] | None:
    """Return ``(p, s)`` if ``k = p**s`` with ``s >= 1``, else None."""
    f = factorize(k) if k >= 2 else {}
    if len(f) != 1:
        return None
    (p, s), = f.items()
    return p, s


def valuation(k: int, p: int) -> int:
    s = 0
    while k % p == 0:
        k //= p
        s += 1
    return s


@dataclass(frozen=True)
class PhaseParams:
    """Parameters of ``k = m * p**s`` with ``p`` prime and ``gcd(m, p) = 1``."""

    p: int
    s: int
    m: int = 1

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if self.s < 1:
            raise ValueError(f"s={self.s} must be >= 1")
        if self.m < 1 or self.m % self.p == 0:
            raise ValueError(f"m={self.m} must be positive and coprime to p={self.p}")

    @property
    def k(self) -> int:
        return self.m * self.p**self.s

    @property
    def ps(self) -> int:
        return self.p**self.s

    @classmethod
    def for_modulus(cls, k: int, p: int | None = None) -> "PhaseParams":
        """Split ``k`` along the prime ``p``.

        When ``p`` is omitted, ``k`` must be a prime power.
        """
        if p is None:
            pp = prime_power(k)
            if pp is None:
                raise ValueError(f"modulus {k} is not a prime power; give p explicitly")
            p = pp[0]
        if k % p:
            raise ValueError(f"p={p} does not divide k={k}")
        s = valuation(k, p)
        return cls(p, s, k // p**s)


def check_residue(x: int, k: int) -> int:
    if not isinstance(x, int) or isinstance(x, bool):
        raise TypeError(f"residue must be an int, got {type(x).__name__}")
    if not 0 <= x < k:
        raise ValueError(f"residue {x} outside [0, {k})")
    return x


def check_word(w: Sequence[int], k: int) -> tuple[int, ...]:
    w = tuple(w)
    if not w:
        raise ValueError("words must have length >= 1")
    for x in w:
        check_residue(x, k)
    return w


def decompose(x: int, params: PhaseParams) -> tuple[int, int]:
    """Write ``x = a*p**s + b*m (mod k)`` with ``a < m`` and ``b < p**s``."""
    check_residue(x, params.k)
    m, ps = params.m, params.ps
    b = x * pow(m, -1, ps) % ps
    a = x * pow(ps, -1, m) % m if m > 1 else 0
    return a, b


def _star(x: int, p: int, s: int) -> int:
    ps = p**s
    if x % ps == 0:
        return 0
    unit = p ** (s - 1)
    if x % unit == 0:
        return unit
    # only reachable for s >= 2
    return (p - 1) * p ** (s - 2)


@lru_cache(maxsize=None)
def weight_table(metric: str, params: PhaseParams) -> tuple[int, ...]:
    """Weights of every residue of ``Z_k`` under ``metric``."""
    k = params.k
    if metric == "hamming":
        return tuple(int(x != 0) for x in range(k))
    if metric == "lee":
        return tuple(min(x, k - x) for x in range(k))
    if metric == "star":
        if params.m != 1:
            raise ValueError("star weight needs k = p**s (m = 1)")
        return tuple(_star(x, params.p, params.s) for x in range(k))
    if metric == "dagger":
        out = []
        for x in range(k):
            a, b = decompose(x, params)
            out.append(_star(b, params.p, params.s) if a == 0 else params.p ** (params.s - 1))
        return tuple(out)
    raise ValueError(f"unknown metric {metric!r}; expected one of {METRICS}")


def weight(metric: str, x: int, params: PhaseParams) -> int:
    check_residue(x, params.k)
    return weight_table(metric, params)[x]


def distance(metric: str, x: Sequence[int], y: Sequence[int], params: PhaseParams) -> int:
    """Sum of ``weight(y_i - x_i)`` over coordinates."""
    k = params.k
    x, y = check_word(x, k), check_word(y, k)
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} != {len(y)}")
    table = weight_table(metric, params)
    return sum(table[(b - a) % k] for a, b in zip(x, y))


def params_for_metric(metric: str, k: int, p: int | None = None) -> PhaseParams:
    """Parameters good enough to evaluate ``metric`` on ``Z_k``.

    Hamming and Lee only use ``k``; any prime divisor is picked to carry it.
    """
    if metric in ("hamming", "lee") and p is None:
        if k == 1:
            raise ValueError("modulus must be >= 2")
        p = min(factorize(k))
    return PhaseParams.for_modulus(k, p)
