"""Command line front end.

Every command prints a report whose first line echoes the command.  Reports
that are matrices or codes carry the echo as a ``#`` comment so the output
can be fed straight back in.  The exit status is 0 iff the verdict is true;
usage and input errors exit with 2.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence, TextIO

from . import perm as P
from .butson import (
    LogMatrix, build_generator, butson_witness, embed_phase, fourier, kronecker, span_rows,
)
from .cocyclic import (
    CocycleMatrix, cocycle_witness, is_orthogonal_cocycle, parse_group_spec,
)
from .codes import (
    Code, NotAdditive, additive_type, average_weight, build_codes, gray_image, min_distance,
    plotkin_check,
)
from .formats import (
    ParseError, emit_assignment, emit_code, emit_matrix, is_code_file, parse_assignment,
    parse_code, parse_matrix,
)
from .graymap import gray_context, lift_phi, lift_psi, reduce_squarefree
from .propelinear import (
    GroupDescriptor, check_transfer_isomorphism, gray_transfer, group_descriptor,
    propelinear_from_cocycle, verify_propelinear,
)
from .ring import METRICS, PhaseParams, params_for_metric


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _load_matrix(path: str) -> LogMatrix:
    try:
        return parse_matrix(_read(path))
    except ParseError as e:
        raise UsageError(f"{path}:{e}") from None


def _load_code(path: str) -> Code:
    try:
        return parse_code(_read(path))
    except ParseError as e:
        raise UsageError(f"{path}:{e}") from None


def _load_structure(code_path: str, assign_path: str):
    C = _load_code(code_path)
    try:
        a = parse_assignment(_read(assign_path), C)
    except ParseError as e:
        raise UsageError(f"{assign_path}:{e}") from None
    return C, a


def _bool(v: bool) -> str:
    return "true" if v else "false"


def _word(w: Sequence[int]) -> str:
    return "[" + ",".join(map(str, w)) + "]"


def _ints(xs: Sequence[int] | None) -> str:
    return ",".join(map(str, xs)) if xs else "-"


def _group_lines(prefix: str, d: GroupDescriptor) -> list[str]:
    lines = [
        f"{prefix} order: {d.order}",
        f"{prefix} abelian: {_bool(d.abelian)}",
    ]
    if d.abelian:
        lines.append(f"{prefix} invariant factors: {_ints(d.invariant_factors)}")
    else:
        lines.append(f"{prefix} center order: {d.center_order}")
        lines.append(f"{prefix} abelianization: {_ints(d.abelianization)}")
    hist = " ".join(f"{o}:{c}" for o, c in d.order_histogram)
    lines.append(f"{prefix} element orders: {hist}")
    return lines


def _write(path: str | None, text: str):
    if path:
        try:
            Path(path).write_text(text, encoding="utf-8")
        except OSError as e:
            raise UsageError(f"cannot write {path}: {e.strerror}") from None


# --- gen -----------------------------------------------------------------

def _gen(args, echo):
    if args.what == "fourier":
        try:
            n = int(args.order)
        except ValueError:
            raise UsageError(f"order must be an integer, got {args.order!r}") from None
        M = fourier(n)
    elif args.what == "kron":
        M = kronecker(_load_matrix(args.a), _load_matrix(args.b))
    elif args.what == "span":
        try:
            t = [int(x) for x in args.t.split(",")]
        except ValueError:
            raise UsageError(f"--t must be comma-separated integers, got {args.t!r}") from None
        M = span_rows(build_generator(args.p, args.s, t))
    else:
        M = embed_phase(_load_matrix(args.file), args.phase)
    return emit_matrix(M, [echo]), True


# --- verify --------------------------------------------------------------

def _verify(args, echo):
    M = _load_matrix(args.file)
    lines = [f"command: {echo}", f"n: {M.n}", f"k: {M.k}"]
    if args.what == "butson":
        w = butson_witness(M)
        lines.append(f"verdict: {_bool(w is None)}")
        if w is not None:
            lines.append(f"witness: rows {w[0] + 1} and {w[1] + 1} are not orthogonal")
        return "\n".join(lines) + "\n", w is None
    G = parse_group_spec(args.group)
    if G.order != M.n:
        raise UsageError(f"group {args.group} has order {G.order}, matrix has order {M.n}")
    psi = CocycleMatrix.from_matrix(M)
    w = cocycle_witness(psi, G)
    lines.append(f"group: {args.group}")
    lines.append(f"cocycle: {_bool(w is None)}")
    if w is not None:
        g, h, c = (G.labels[i] for i in w)
        lines.append(f"witness: cocycle identity fails at g={g} h={h} c={c}")
    ok = w is None
    if args.what == "orthogonal-cocycle":
        orth = ok and is_orthogonal_cocycle(psi, G)
        if ok:
            lines.append(f"orthogonal: {_bool(orth)}")
        ok = orth
    lines.append(f"verdict: {_bool(ok)}")
    return "\n".join(lines) + "\n", ok


# --- gray ----------------------------------------------------------------

def _gray(args, echo):
    text = _read(args.file)
    if is_code_file(text):
        if args.what == "reduce":
            raise UsageError("gray reduce takes a matrix file")
        C = _load_code(args.file)
        if args.what == "phi":
            params = PhaseParams.for_modulus(C.k)
            if params.m != 1:
                raise UsageError(f"phi needs a prime-power modulus, got {C.k}")
        else:
            params = PhaseParams.for_modulus(C.k, args.p)
        return emit_code(gray_image(C, args.what, gray_context(params)), [echo]), True
    M = _load_matrix(args.file)
    if args.what == "phi":
        out = lift_phi(M)
    elif args.what == "psi":
        out = lift_psi(M, args.p)
    else:
        out = reduce_squarefree(M)
    return emit_matrix(out, [echo]), True


# --- code ----------------------------------------------------------------

def _code_from(args) -> Code:
    text = _read(args.file)
    if is_code_file(text):
        return _load_code(args.file)
    F, C = build_codes(_load_matrix(args.file))
    return F if getattr(args, "code", "c") == "f" else C


def _code(args, echo):
    lines = [f"command: {echo}"]
    if args.what == "params":
        C = _code_from(args)
        params = params_for_metric(args.metric, C.k, args.p)
        lines += [f"n: {C.n}", f"M: {len(C)}", f"d: {min_distance(C, args.metric, params)}"]
        return "\n".join(lines) + "\n", True
    if args.what == "additive-type":
        C = _code_from(args)
        res = additive_type(C, args.p, args.s)
        ok = not isinstance(res, NotAdditive)
        lines.append(f"additive: {_bool(ok)}")
        if ok:
            lines += [f"type: {_ints(res.t)}", f"size: {res.size(args.p)}"]
        else:
            lines += [f"witness x: {_word(res.x)}", f"witness y: {_word(res.y)}",
                      f"x + y: {_word(res.result)} is not a codeword"]
        return "\n".join(lines) + "\n", ok
    M = _load_matrix(args.file)
    params = PhaseParams.for_modulus(M.k, args.p)
    ok = plotkin_check(M, args.p)
    lines += [f"n: {M.n}", f"k: {M.k}", f"p: {params.p}",
              f"gamma: {average_weight(params)}", f"verdict: {_bool(ok)}"]
    return "\n".join(lines) + "\n", ok


# --- prop ----------------------------------------------------------------

def _perm_histogram(C: Code, a) -> list[str]:
    seen: dict[str, int] = {}
    for w in C.words:
        c = P.to_cycles(a.pi(w))
        seen[c] = seen.get(c, 0) + 1
    return [f"pi: {c} x{n}" for c, n in seen.items()]


def _prop(args, echo):
    lines = [f"command: {echo}"]
    if args.what == "build":
        M = _load_matrix(args.file)
        G = parse_group_spec(args.group)
        if G.order != M.n:
            raise UsageError(f"group {args.group} has order {G.order}, matrix has order {M.n}")
        C, a = propelinear_from_cocycle(M, G)
        v = verify_propelinear(C, a, full=True)
        lines += [f"group: {args.group}", f"n: {C.n}", f"M: {len(C)}",
                  f"d: {min_distance(C, 'hamming')}"]
        for g, row in enumerate(M.rows):
            lines.append(f"row {g + 1} {_word(row)}: {P.to_cycles(a.pi(row))}")
        lines.append(f"full propelinear: {_bool(v.ok)}")
        if v.ok:
            code_d, perm_d = group_descriptor(C, a)
            lines += _group_lines("code group", code_d) + _group_lines("perm group", perm_d)
        _write(args.code_out, emit_code(C, [echo]))
        _write(args.assign_out, emit_assignment(C, a, [echo]))
        lines.append(f"verdict: {_bool(v.ok)}")
        return "\n".join(lines) + "\n", v.ok
    C, a = _load_structure(args.code, args.assign)
    if args.what == "verify":
        v = verify_propelinear(C, a, full=args.full)
        lines += [f"full: {_bool(args.full)}", f"verdict: {_bool(v.ok)}"]
        if not v.ok:
            lines.append(f"failed axiom: {v.axiom}")
            lines.append("witness: " + " ".join(_word(w) if isinstance(w, tuple) else str(w)
                                                for w in v.witness))
        return "\n".join(lines) + "\n", v.ok
    v = verify_propelinear(C, a)
    if not v.ok:
        lines += ["verdict: false", f"failed axiom: {v.axiom}"]
        return "\n".join(lines) + "\n", False
    if args.what == "group":
        code_d, perm_d = group_descriptor(C, a)
        lines += _group_lines("code group", code_d) + _group_lines("perm group", perm_d)
        lines.append("verdict: true")
        return "\n".join(lines) + "\n", True
    C2, a2 = gray_transfer(C, a)
    full = verify_propelinear(C2, a2, full=True)
    bad = check_transfer_isomorphism(C, a, C2, a2)
    lines += [f"image length: {C2.n}", f"image modulus: {C2.k}", f"M: {len(C2)}",
              f"full propelinear: {_bool(full.ok)}", f"isomorphism: {_bool(bad is None)}"]
    if bad is not None:
        lines.append(f"witness: {_word(bad[0])} {_word(bad[1])}")
    ok = full.ok and bad is None
    if ok:
        code_d, perm_d = group_descriptor(C2, a2)
        lines += _group_lines("code group", code_d) + _group_lines("perm group", perm_d)
    _write(args.code_out, emit_code(C2, [echo]))
    _write(args.assign_out, emit_assignment(C2, a2, [echo]))
    lines.append(f"verdict: {_bool(ok)}")
    return "\n".join(lines) + "\n", ok


# --- parser --------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="butsoncodes", description=__doc__.splitlines()[0])
    top = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    gen = top.add_parser("gen", help="construct matrices").add_subparsers(dest="what", required=True)
    g = gen.add_parser("fourier")
    g.add_argument("order")
    g = gen.add_parser("kron")
    g.add_argument("a")
    g.add_argument("b")
    g = gen.add_parser("span")
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--s", type=int, required=True)
    g.add_argument("--t", required=True, help="comma-separated t_1,...,t_s")
    g = gen.add_parser("embed")
    g.add_argument("file")
    g.add_argument("--phase", type=int, required=True)

    ver = top.add_parser("verify", help="check matrices").add_subparsers(dest="what", required=True)
    ver.add_parser("butson").add_argument("file")
    for name in ("cocycle", "orthogonal-cocycle"):
        v = ver.add_parser(name)
        v.add_argument("file")
        v.add_argument("--group", required=True, help="e.g. Z8 or Z2xZ4")

    gray = top.add_parser("gray", help="Gray maps").add_subparsers(dest="what", required=True)
    gray.add_parser("phi").add_argument("file")
    g = gray.add_parser("psi")
    g.add_argument("file")
    g.add_argument("--p", type=int, required=True)
    gray.add_parser("reduce").add_argument("file")

    code = top.add_parser("code", help="code analysis").add_subparsers(dest="what", required=True)
    c = code.add_parser("params")
    c.add_argument("file")
    c.add_argument("--code", choices=("f", "c"), default="c")
    c.add_argument("--metric", choices=METRICS, default="hamming")
    c.add_argument("--p", type=int, default=None)
    c = code.add_parser("additive-type")
    c.add_argument("file")
    c.add_argument("--code", choices=("f", "c"), default="c")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--s", type=int, required=True)
    c = code.add_parser("plotkin")
    c.add_argument("file")
    c.add_argument("--p", type=int, default=None)

    prop = top.add_parser("prop", help="propelinear structures").add_subparsers(dest="what", required=True)
    pr = prop.add_parser("build")
    pr.add_argument("file")
    pr.add_argument("--group", required=True)
    pr.add_argument("--code-out")
    pr.add_argument("--assign-out")
    for name in ("verify", "group", "transfer"):
        pr = prop.add_parser(name)
        pr.add_argument("code")
        pr.add_argument("assign")
        if name == "verify":
            pr.add_argument("--full", action="store_true")
        if name == "transfer":
            pr.add_argument("--code-out")
            pr.add_argument("--assign-out")
    return ap


_HANDLERS = {"gen": _gen, "verify": _verify, "gray": _gray, "code": _code, "prop": _prop}


def run(argv: Sequence[str], out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(argv)
    try:
        args = build_parser().parse_args(argv)
        report, ok = _HANDLERS[args.cmd](args, " ".join(argv))
    except UsageError as e:
        err.write(f"error: {e}\n")
        return 2
    except (ValueError, KeyError, ArithmeticError, RuntimeError) as e:
        err.write(f"error: {e}\n")
        return 2
    out.write(report)
    return 0 if ok else 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
