"""Wall-clock comparison of the reduction strategies at a few modulus sizes.

Pure-Python timings, useful for relative trends only; the channel
parallelism the residue pipeline is shaped for does not exist here, every
channel runs sequentially. Run as ``python -m rnsbarrett.bench``.
"""

import argparse
import random
import time

from .barrett import RangeCase, make_params, modmul
from .reference import montgomery_modmul
from .rns import encode
from .rns_barrett import bmm
from .selection import select_context

DEFAULT_BIT_SIZES = (64, 128, 256)


def _random_modulus(bits: int, rng: random.Random) -> int:
    # Odd and full-width, so the Montgomery baseline is applicable.
    return rng.getrandbits(bits) | (1 << (bits - 1)) | 1


def _time_loop(fn, pairs) -> float:
    start = time.perf_counter()
    for a, b in pairs:
        fn(a, b)
    return (time.perf_counter() - start) / len(pairs)


def run_benchmark(
    bit_sizes=DEFAULT_BIT_SIZES,
    iterations: int = 200,
    word_bits: int = 30,
    seed: int = 20240801,
) -> str:
    """Return a markdown report comparing the multiplication strategies."""
    rng = random.Random(seed)
    rows = []
    for bits in bit_sizes:
        n = _random_modulus(bits, rng)
        ctx = select_context(n, RangeCase.CASE1, word_bits)
        params = make_params(n, ctx.params.g, ctx.params.h, RangeCase.CASE1)
        r = 1 << (bits + 1)
        pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(iterations)]
        encoded = [(encode(a, ctx.mset), encode(b, ctx.mset)) for a, b in pairs]

        builtin_us = _time_loop(lambda a, b: (a * b) % n, pairs) * 1e6
        scalar_us = _time_loop(lambda a, b: modmul(a, b, params), pairs) * 1e6
        mont_us = _time_loop(lambda a, b: montgomery_modmul(a, b, n, r), pairs) * 1e6
        rns_us = _time_loop(lambda a, b: bmm(a, b, ctx), encoded) * 1e6

        rows.append(
            (bits, len(ctx.mset.moduli), scalar_us, rns_us, mont_us, builtin_us)
        )

    lines = [
        "# Modular multiplication benchmark",
        "",
        f"{iterations} multiplications per cell, moduli near 2^{word_bits},",
        "times in microseconds per operation (pure Python, single thread).",
        "",
        "| N bits | channels | scalar Barrett | RNS BMM | Montgomery | builtin % |",
        "|-------:|---------:|---------------:|--------:|-----------:|----------:|",
    ]
    for bits, channels, scalar_us, rns_us, mont_us, builtin_us in rows:
        lines.append(
            f"| {bits} | {channels} | {scalar_us:.1f} | {rns_us:.1f} "
            f"| {mont_us:.1f} | {builtin_us:.1f} |"
        )
    lines.append("")
    lines.append(
        "The RNS column pays for Python-level channel loops; its point is "
        "that every stage is word-sized and channel-parallelizable, not that "
        "it wins a sequential race against native big integers."
    )
    return "\n".join(lines) + "\n"


def write_report(path, **kwargs) -> str:
    """Generate the report, write it to ``path`` and return the text."""
    report = run_benchmark(**kwargs)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(report)
    return report


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="benchmark the multiplication paths")
    parser.add_argument("--iterations", type=int, default=200)
    parser.add_argument("--word-bits", type=int, default=30)
    parser.add_argument("--out", default=None, help="write the report to this file")
    args = parser.parse_args(argv)
    if args.out is None:
        print(run_benchmark(iterations=args.iterations, word_bits=args.word_bits))
    else:
        write_report(args.out, iterations=args.iterations, word_bits=args.word_bits)
        print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
