"""Plain-text formats for matrices, codes and propelinear assignments.

Matrix file::

    # optional comment lines
    n k
    n lines of n integers in [0, k), single-space separated

Code files have header ``n k M`` followed by ``M`` codeword lines.  An
assignment file has one line per codeword: its ``n`` entries and then its
permutation in cycle notation, e.g. ``0 1 2 (1,3,2)``.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from . import perm as P
from .butson import LogMatrix
from .codes import Code
from .propelinear import PropelinearAssignment


class ParseError(ValueError):
    def __init__(self, line: int, col: int, msg: str):
        super().__init__(f"{line}:{col}: {msg}")
        self.line, self.col, self.msg = line, col, msg


def _lines(text: str) -> Iterator[tuple[int, str]]:
    """Significant lines with their 1-based numbers."""
    if "\r" in text:
        i = text.index("\r")
        line = text.count("\n", 0, i) + 1
        raise ParseError(line, i - text.rfind("\n", 0, i), "CR found; LF line endings required")
    body = text[:-1] if text.endswith("\n") else text
    for no, line in enumerate(body.split("\n"), 1):
        if not line.startswith("#"):
            yield no, line


def _ints(no: int, line: str, count: int | None, bound: int | None = None) -> list[int]:
    if line == "":
        raise ParseError(no, 1, "empty line")
    if line != line.rstrip(" \t"):
        raise ParseError(no, len(line.rstrip(" \t")) + 1, "trailing whitespace")
    out, col = [], 1
    for tok in line.split(" "):
        if tok == "":
            raise ParseError(no, col, "fields must be separated by exactly one space")
        if not tok.isdigit() or not tok.isascii():
            raise ParseError(no, col, f"not a non-negative integer: {tok!r}")
        v = int(tok)
        if bound is not None and v >= bound:
            raise ParseError(no, col, f"entry {v} outside [0, {bound})")
        out.append(v)
        col += len(tok) + 1
    if count is not None and len(out) != count:
        raise ParseError(no, col - 1, f"expected {count} fields, found {len(out)}")
    return out


def _header(it: Iterator[tuple[int, str]], fields: int, what: str) -> tuple[int, list[int]]:
    try:
        no, line = next(it)
    except StopIteration:
        raise ParseError(1, 1, f"missing {what} header") from None
    return no, _ints(no, line, fields)


def _trailing(it: Iterator[tuple[int, str]]):
    for no, _ in it:
        raise ParseError(no, 1, "unexpected line after the last row")


def parse_matrix(text: str) -> LogMatrix:
    it = _lines(text)
    no, (n, k) = _header(it, 2, "'n k'")
    if n < 1 or k < 1:
        raise ParseError(no, 1, "n and k must be positive")
    rows = []
    for _ in range(n):
        try:
            no, line = next(it)
        except StopIteration:
            raise ParseError(no + 1, 1, f"expected {n} rows, found {len(rows)}") from None
        rows.append(tuple(_ints(no, line, n, k)))
    _trailing(it)
    return LogMatrix(tuple(rows), k)


def emit_matrix(M: LogMatrix, comments: Sequence[str] = ()) -> str:
    head = "".join(f"# {c}\n" for c in comments)
    return head + f"{M.n} {M.k}\n" + "".join(" ".join(map(str, r)) + "\n" for r in M.rows)


def parse_code(text: str) -> Code:
    it = _lines(text)
    no, (n, k, m) = _header(it, 3, "'n k M'")
    if n < 1 or k < 1 or m < 1:
        raise ParseError(no, 1, "n, k and M must be positive")
    words = []
    for _ in range(m):
        try:
            no, line = next(it)
        except StopIteration:
            raise ParseError(no + 1, 1, f"expected {m} codewords, found {len(words)}") from None
        words.append(tuple(_ints(no, line, n, k)))
    _trailing(it)
    code = Code.from_words(words, k)
    if len(code) != m:
        raise ParseError(no, 1, f"{m - len(code)} repeated codeword(s)")
    return code


def emit_code(C: Code, comments: Sequence[str] = ()) -> str:
    head = "".join(f"# {c}\n" for c in comments)
    return head + f"{C.n} {C.k} {len(C)}\n" + "".join(" ".join(map(str, w)) + "\n" for w in C.words)


def is_code_file(text: str) -> bool:
    """True when the first significant line has three fields."""
    for _, line in _lines(text):
        return len(line.split(" ")) == 3
    return False


def parse_assignment(text: str, C: Code) -> PropelinearAssignment:
    n, k = C.n, C.k
    perms: dict[tuple[int, ...], P.Perm] = {}
    for no, line in _lines(text):
        cut = line.find("(")
        if cut < 1 or line[cut - 1] != " ":
            raise ParseError(no, max(cut, 0) + 1, "expected codeword entries then a cycle token")
        word = tuple(_ints(no, line[:cut - 1], n, k))
        try:
            perm = P.from_cycles(line[cut:], n)
        except ValueError as e:
            raise ParseError(no, cut + 1, str(e)) from None
        if word in perms:
            raise ParseError(no, 1, "codeword listed twice")
        if word not in C:
            raise ParseError(no, 1, "codeword is not in the code")
        perms[word] = perm
    return PropelinearAssignment(perms, k)


def emit_assignment(C: Code, a: PropelinearAssignment, comments: Sequence[str] = ()) -> str:
    head = "".join(f"# {c}\n" for c in comments)
    return head + "".join(" ".join(map(str, w)) + " " + P.to_cycles(a.pi(w)) + "\n" for w in C.words)
