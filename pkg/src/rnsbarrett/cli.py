"""Command-line front end: multiply, exponentiate, and generate parameters.

Exit codes: 0 on success, 1 for usage or parse problems, 2 when the
mathematics refuses (a divisor or capacity condition fails, or no parameter
set can be found).
"""

import argparse
import sys

from .barrett import RangeCase, final_correct
from .errors import CaseMismatch, ConditionViolation, SelectionFailed
from .modexp import bmm_modexp, final_result
from .paramfile import dumps as dump_params
from .paramfile import load as load_params
from .rns import decode_crt, encode
from .rns_barrett import RnsBarrettContext, StepTrace, trace_bmm
from .selection import select_context

# word sizes tried in order when no parameter file is given
_WORD_BITS_LADDER = (16, 24, 32, 48, 60)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _number(text: str) -> int:
    try:
        if text.lower().startswith("0x"):
            return int(text, 16)
        return int(text, 10)
    except ValueError:
        raise _UsageError(f"not a number: {text!r}") from None


def _build_parser() -> _Parser:
    parser = _Parser(prog="rns-barrett", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    mul = sub.add_parser("modmul", help="compute A*B mod N in residue form")
    mul.add_argument("--modulus", required=True, help="the modulus N (decimal or 0x hex)")
    mul.add_argument("--case", type=int, choices=(1, 2, 3, 4), default=None,
                     help="range case for automatic parameter selection (default 1)")
    mul.add_argument("--params", metavar="FILE", default=None,
                     help="parameter file instead of automatic selection")
    mul.add_argument("--trace", action="store_true",
                     help="print the residue vectors after every step")
    mul.add_argument("--raw", action="store_true",
                     help="print the bounded representative, skipping final correction")
    mul.add_argument("a", metavar="A", help="left operand")
    mul.add_argument("b", metavar="B", help="right operand")
    mul.set_defaults(func=_cmd_modmul)

    exp = sub.add_parser("modexp", help="compute X^E mod N in residue form")
    exp.add_argument("--modulus", required=True, help="the modulus N")
    exp.add_argument("--case", type=int, choices=(2, 4), default=None,
                     help="closed range case for selection (default 2)")
    exp.add_argument("--params", metavar="FILE", default=None,
                     help="parameter file instead of automatic selection")
    exp.add_argument("x", metavar="X", help="base")
    exp.add_argument("e", metavar="E", help="exponent")
    exp.set_defaults(func=_cmd_modexp)

    par = sub.add_parser("params", help="search parameters and write them to a file")
    par.add_argument("--modulus", required=True, help="the modulus N")
    par.add_argument("--case", type=int, choices=(1, 2, 3, 4), default=1)
    par.add_argument("--word-bits", type=int, default=16,
                     help="target bit size of the moduli (4..62, default 16)")
    par.add_argument("--out", metavar="FILE", default=None,
                     help="output file; without it the document goes to stdout")
    par.set_defaults(func=_cmd_params)

    return parser


def _require_modulus(args) -> int:
    n = _number(args.modulus)
    if n < 2:
        raise _UsageError(f"modulus must be at least 2, got {n}")
    return n


def _context_for(args, n: int, default_case: int) -> RnsBarrettContext:
    if args.params is not None:
        try:
            ctx = load_params(args.params)
        except OSError as exc:
            raise _UsageError(f"cannot read {args.params}: {exc}") from None
        except ValueError as exc:
            raise _UsageError(f"bad parameter file {args.params}: {exc}") from None
        if ctx.params.modulus != n:
            raise _UsageError(
                f"--modulus {n} disagrees with parameter file (N = {ctx.params.modulus})"
            )
        if args.case is not None and args.case != ctx.params.case.value:
            raise _UsageError(
                f"--case {args.case} disagrees with parameter file "
                f"(case {ctx.params.case.value})"
            )
        return ctx
    case = RangeCase(args.case if args.case is not None else default_case)
    last_failure = None
    for word_bits in _WORD_BITS_LADDER:
        try:
            return select_context(n, case, word_bits)
        except SelectionFailed as exc:
            last_failure = exc
    raise last_failure


def _vector_text(values) -> str:
    return "(" + " ".join(str(v) for v in values) + ")"


def _partial_text(partial) -> str:
    n = len(partial.mset.moduli)
    shown = [str(partial.values[i]) if i in partial.values else "*" for i in range(n)]
    return "(" + " ".join(shown) + ")"


def _print_trace(ctx: RnsBarrettContext, trace: StepTrace) -> None:
    print(f"Step1  mu = {_vector_text(ctx.mu_rv.values)}")
    print(f"Step2  X = {_vector_text(trace.x.values)}")
    print(f"Step3a D = {_partial_text(trace.d_partial)}")
    print(f"Step3b D = {_vector_text(trace.d_full.values)}")
    print(f"Step4  E = {_vector_text(trace.e.values)}")
    print(f"Step5a Q = {_partial_text(trace.q_partial)}")
    print(f"Step5b Q = {_vector_text(trace.q_full.values)}")
    print(f"Step6  C = {_vector_text(trace.c.values)}")


def _cmd_modmul(args) -> int:
    n = _require_modulus(args)
    a = _number(args.a)
    b = _number(args.b)
    ctx = _context_for(args, n, default_case=1)
    limit = ctx.params.case.input_bound * n
    for name, value in (("A", a), ("B", b)):
        if not 0 <= value < limit:
            raise _UsageError(f"operand {name} = {value} not in [0, {limit})")
    trace = trace_bmm(encode(a, ctx.mset), encode(b, ctx.mset), ctx)
    if args.trace:
        _print_trace(ctx, trace)
    value = decode_crt(trace.c)
    print(value if args.raw else final_correct(value, n))
    return 0


def _cmd_modexp(args) -> int:
    n = _require_modulus(args)
    x = _number(args.x)
    e = _number(args.e)
    if e < 0:
        raise _UsageError(f"exponent must be nonnegative, got {e}")
    ctx = _context_for(args, n, default_case=2)
    limit = ctx.params.case.input_bound * n
    if not 0 <= x < limit:
        raise _UsageError(f"base X = {x} not in [0, {limit})")
    y = bmm_modexp(encode(x, ctx.mset), e, ctx)
    print(final_result(y, ctx))
    return 0


def _cmd_params(args) -> int:
    n = _require_modulus(args)
    if not 4 <= args.word_bits <= 62:
        raise _UsageError(f"--word-bits must be in [4, 62], got {args.word_bits}")
    case = RangeCase(args.case)
    ctx = select_context(n, case, args.word_bits)

    g = ctx.params.g
    h = ctx.params.h
    m = ctx.mset.product
    print(f"moduli: {len(ctx.mset.moduli)}")
    print(f"G = {g}  (indices {', '.join(str(i + 1) for i in ctx.g_indices) or '-'})")
    print(f"H = {h}  (indices {', '.join(str(i + 1) for i in ctx.h_indices)})")
    print(f"M: {m.bit_length()} bits")

    pf = case.product_factor
    product_name = (f"{pf}*N^2 < G*H" if case.strict_product
                    else f"{pf}*N^2 <= G*H").replace("1*", "")
    g_name = "2*G < N" if case.halves_g else "G < N"
    cf = case.capacity_factor
    capacity_name = f"{cf}*H*N < M".replace("1*", "")
    product_ok = (pf * n * n < g * h) if case.strict_product else (pf * n * n <= g * h)
    checks = [
        (product_name, product_ok),
        (g_name, 2 * g < n if case.halves_g else g < n),
        ("G | M", m % g == 0),
        ("H | M", m % h == 0),
        (capacity_name, cf * h * n < m),
    ]
    print("conditions:")
    for name, ok in checks:
        print(f"  [{'ok' if ok else 'FAIL'}] {name}")

    document = dump_params(ctx)
    if args.out is None:
        print(document, end="")
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(document)
        print(f"wrote {args.out}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ConditionViolation, SelectionFailed, CaseMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
