"""Generalized Gray maps Phi_p and Psi_p and the Butson morphism they induce."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .butson import LogMatrix
from .ring import PhaseParams, check_word, decompose, factorize, valuation


def inner_product_matrix(p: int, dim: int) -> LogMatrix:
    """``L(D) = [x . y]`` over ``Z_p^dim`` in lexicographic order (most significant digit first)."""
    vecs = list(itertools.product(range(p), repeat=dim))
    rows = tuple(tuple(sum(a * b for a, b in zip(x, y)) % p for y in vecs) for x in vecs)
    return LogMatrix(rows, p)


@dataclass(frozen=True)
class GrayContext:
    params: PhaseParams
    D: LogMatrix

    @property
    def length(self) -> int:
        """Length of the image of one symbol, ``p**(s-1)``."""
        return self.params.p ** (self.params.s - 1)


@lru_cache(maxsize=None)
def gray_context(params: PhaseParams) -> GrayContext:
    return GrayContext(params, inner_product_matrix(params.p, params.s - 1))


@lru_cache(maxsize=None)
def _phi_table(p: int, s: int) -> tuple[tuple[int, ...], ...]:
    ctx = gray_context(PhaseParams(p, s))
    unit = p ** (s - 1)
    out = []
    for x in range(p**s):
        a, b = divmod(x, unit)
        out.append(tuple((v + a) % p for v in ctx.D.rows[b]))
    return tuple(out)


@lru_cache(maxsize=None)
def _psi_table(params: PhaseParams) -> tuple[tuple[int, ...], ...]:
    p, m = params.p, params.m
    phi = _phi_table(p, params.s)
    out = []
    for x in range(params.k):
        a, b = decompose(x, params)
        out.append(tuple((m * v + a * p) % (m * p) for v in phi[b]))
    return tuple(out)


def phi(x: int, ctx: GrayContext) -> tuple[int, ...]:
    """``Phi_p(a p^{s-1} + b) = [L(D)]_b + a*1`` over ``Z_p``."""
    if ctx.params.m != 1:
        raise ValueError("Phi_p needs k = p**s")
    return _phi_table(ctx.params.p, ctx.params.s)[x]


def psi(x: int, ctx: GrayContext) -> tuple[int, ...]:
    """``Psi_p(a p^s + b m) = m Phi_p(b) + a p 1`` over ``Z_{mp}``."""
    return _psi_table(ctx.params)[x]


def image_modulus(f: str, ctx: GrayContext) -> int:
    return ctx.params.p if f == "phi" else ctx.params.p * ctx.params.m


def map_word(f: str, w: Sequence[int], ctx: GrayContext) -> tuple[int, ...]:
    """Entrywise Gray map, images concatenated."""
    if f not in ("phi", "psi"):
        raise ValueError(f"unknown map {f!r}")
    if f == "phi" and ctx.params.m != 1:
        raise ValueError("Phi_p needs k = p**s")
    w = check_word(w, ctx.params.k)
    table = _psi_table(ctx.params)
    return tuple(v for x in w for v in table[x])


def lift_psi(M: LogMatrix, p: int) -> LogMatrix:
    """``H^{Psi_p}``: Psi_p applied to the stacked translates ``L(H) + r m J``."""
    if M.k % p:
        raise ValueError(f"p={p} does not divide phase {M.k}")
    params = PhaseParams.for_modulus(M.k, p)
    if params.s == 1:
        return M
    table = _psi_table(params)
    k, m = params.k, params.m
    rows = []
    for r in range(p ** (params.s - 1)):
        for row in M.rows:
            rows.append(tuple(v for x in row for v in table[(x + r * m) % k]))
    return LogMatrix(tuple(rows), p * m)


def lift_phi(M: LogMatrix) -> LogMatrix:
    params = PhaseParams.for_modulus(M.k)
    return lift_psi(M, params.p)


def reduce_squarefree(M: LogMatrix) -> LogMatrix:
    """Lift along every prime with exponent >= 2, smallest prime first."""
    for p in sorted(factorize(M.k)):
        if valuation(M.k, p) > 1:
            M = lift_psi(M, p)
    return M
