"""BH-codes and their parameters."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .butson import LogMatrix
from .graymap import GrayContext, image_modulus, map_word
from .ring import PhaseParams, check_word, factorize, prime_power, weight_table


@dataclass(frozen=True)
class Code:
    """A set of words of common length ``n`` over ``Z_k``, kept in first-seen order."""

    words: tuple[tuple[int, ...], ...]
    n: int
    k: int
    tag: str = "custom"
    merged: int = field(default=0, compare=False)

    @classmethod
    def from_words(cls, words: Iterable[Sequence[int]], k: int, tag: str = "custom") -> "Code":
        seen: dict[tuple[int, ...], None] = {}
        total = 0
        for w in words:
            seen.setdefault(check_word(w, k), None)
            total += 1
        if not seen:
            raise ValueError("a code needs at least one word")
        lengths = {len(w) for w in seen}
        if len(lengths) != 1:
            raise ValueError(f"words of mixed lengths {sorted(lengths)}")
        return cls(tuple(seen), lengths.pop(), k, tag, total - len(seen))

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, w) -> bool:
        return tuple(w) in self.word_set

    @property
    def word_set(self) -> frozenset[tuple[int, ...]]:
        s = self.__dict__.get("_set")
        if s is None:
            s = frozenset(self.words)
            object.__setattr__(self, "_set", s)
        return s

    def array(self) -> np.ndarray:
        return np.array(self.words, dtype=np.int64)


def build_codes(M: LogMatrix) -> tuple[Code, Code]:
    """``F_H`` (the rows) and ``C_H`` (all constant translates of the rows)."""
    k = M.k
    F = Code.from_words(M.rows, k, "F_H")
    C = Code.from_words(
        (tuple((x + a) % k for x in r) for a in range(k) for r in M.rows), k, "C_H"
    )
    return F, C


def min_distance(C: Code, metric: str, params: PhaseParams | None = None) -> int:
    """Exact minimum over all pairs of distinct codewords."""
    if len(C) < 2:
        raise ValueError("minimum distance needs at least two codewords")
    if params is None:
        params = _default_params(metric, C.k)
    if params.k != C.k:
        raise ValueError(f"params modulus {params.k} != code modulus {C.k}")
    table = np.array(weight_table(metric, params), dtype=np.float64)
    k, n, N = C.k, C.n, len(C)
    if N * n * k > 2**25:
        return _min_distance_rows(C, table.astype(np.int64))
    # distance(x, y) = onehot(x) . (I_n (x) Wt) . onehot(y), with Wt[a, b] = w(b - a);
    # entries are small integers, so float64 products are exact
    Wt = table[(np.arange(k)[None, :] - np.arange(k)[:, None]) % k]
    onehot = np.zeros((N, n, k), dtype=np.float64)
    onehot[np.arange(N)[:, None], np.arange(n)[None, :], C.array()] = 1.0
    left = (onehot @ Wt).reshape(N, n * k)
    right = onehot.reshape(N, n * k)
    best = None
    step = max(1, 2**24 // max(N, 1))
    for lo in range(0, N, step):
        D = left[lo:lo + step] @ right.T
        rows = np.arange(lo, min(lo + step, N))
        D[rows - lo, rows] = np.inf
        d = D.min()
        if best is None or d < best:
            best = d
    return int(round(best))


def _min_distance_rows(C: Code, table: np.ndarray) -> int:
    W = C.array()
    best = None
    for i in range(len(W) - 1):
        d = int(table[(W[i + 1:] - W[i]) % C.k].sum(axis=1).min())
        if best is None or d < best:
            best = d
    return best


def _default_params(metric: str, k: int) -> PhaseParams:
    if metric in ("hamming", "lee"):
        return PhaseParams.for_modulus(k, min(factorize(k)))
    return PhaseParams.for_modulus(k)


@dataclass(frozen=True)
class AdditiveType:
    t: tuple[int, ...]

    def size(self, p: int) -> int:
        s = len(self.t)
        return p ** sum((s - i) * x for i, x in enumerate(self.t))


@dataclass(frozen=True)
class NotAdditive:
    """Closure failure: ``x + y`` is not a codeword."""

    x: tuple[int, ...]
    y: tuple[int, ...]
    result: tuple[int, ...]


def additive_type(C: Code, p: int, s: int) -> AdditiveType | NotAdditive:
    k = p**s
    if C.k != k:
        raise ValueError(f"code modulus {C.k} != p**s = {k}")
    words = C.words
    W = C.array()
    members = np.sort(_row_keys(W))

    def missing(A: np.ndarray) -> np.ndarray:
        keys = _row_keys(A)
        pos = np.searchsorted(members, keys)
        pos[pos >= len(members)] = 0
        return members[pos] != keys

    # Grow the subgroup H generated by the words seen so far.  C + x in C for
    # every generator x forces C + <C> in C, hence C is a subgroup.
    H = np.zeros((1, C.n), dtype=np.int64)
    h_keys = {key.tobytes() for key in _row_keys(H)}
    for x in words:
        xa = np.array(x, dtype=np.int64)
        if _row_keys(xa[None, :])[0].tobytes() in h_keys:
            continue
        bad = np.flatnonzero(missing((W + xa) % k))
        if len(bad):
            y = words[int(bad[0])]
            return NotAdditive(x, y, tuple((a + b) % k for a, b in zip(x, y)))
        cosets = [H]
        step = xa
        while _row_keys(step[None, :])[0].tobytes() not in h_keys:
            cosets.append((H + step) % k)
            step = (step + xa) % k
        H = np.concatenate(cosets)
        h_keys = {key.tobytes() for key in _row_keys(H)}
    # e_i = #{components of order >= p^i}
    logs = []
    for i in range(s + 1):
        q = p**i
        cnt = sum(1 for w in words if all(q * a % k == 0 for a in w))
        logs.append(_exact_log(cnt, p))
    e = [logs[i] - logs[i - 1] for i in range(1, s + 1)] + [0]
    # t_j counts components of order p^{s-j+1}
    t = tuple(e[s - j] - e[s - j + 1] for j in range(1, s + 1))
    return AdditiveType(t)


def _row_keys(A: np.ndarray) -> np.ndarray:
    """One opaque, sortable key per row."""
    A = np.ascontiguousarray(A, dtype=np.int64)
    return A.view(np.dtype((np.void, A.shape[1] * 8))).ravel()


def _exact_log(n: int, p: int) -> int:
    e = 0
    while n > 1:
        if n % p:
            raise ArithmeticError(f"{n} is not a power of {p}")
        n //= p
        e += 1
    return e


def gray_image(C: Code, f: str, ctx: GrayContext) -> Code:
    if C.k != ctx.params.k:
        raise ValueError(f"code modulus {C.k} != Gray context modulus {ctx.params.k}")
    img = Code.from_words((map_word(f, w, ctx) for w in C.words), image_modulus(f, ctx), "image")
    if len(img) != len(C):
        raise RuntimeError("Gray map collapsed distinct codewords")
    return img


def average_weight(params: PhaseParams) -> Fraction:
    return Fraction(sum(weight_table("dagger", params)), params.k)


def plotkin_check(M: LogMatrix, p: int | None = None) -> bool:
    """Punctured ``F_H`` has minimum dagger distance ``gamma * n``.

    ``gamma`` is the mean dagger weight over ``Z_k``.  For composite
    non-prime-power phases the prime ``p`` must be given.
    """
    if M.n == 1:
        return True
    params = PhaseParams.for_modulus(M.k, p)
    gamma = average_weight(params)
    punctured = Code.from_words((r[1:] for r in M.rows), M.k, "custom")
    if len(punctured) != M.n:
        return False
    return min_distance(punctured, "dagger", params) == gamma * M.n


def prime_power_params(k: int) -> PhaseParams | None:
    pp = prime_power(k)
    return PhaseParams(*pp) if pp else None
