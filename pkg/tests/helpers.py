"""Shared generators for the test suite."""

import random

from rnsbarrett import RangeCase, SelectionFailed, select_context

# Distinct prime powers: any subset is pairwise coprime.
COPRIME_POOL = (4, 9, 25, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def random_modulus(rng: random.Random, max_bits: int, min_value: int = 2) -> int:
    bits = rng.randint(2, max_bits)
    lo = max(min_value, 1 << (bits - 1))
    hi = 1 << bits
    if lo >= hi:
        lo = min_value
        hi = max(min_value + 1, hi)
    return rng.randrange(lo, hi)


def random_context(rng: random.Random, cases=(1, 2, 3, 4), max_bits=128):
    """A valid random reduction context; deterministic for a seeded rng."""
    while True:
        case = RangeCase(rng.choice(cases))
        n = random_modulus(rng, max_bits, min_value=3 if case.halves_g else 2)
        lo = min(30, max(8, n.bit_length() // 4))
        word_bits = rng.randint(lo, 30)
        try:
            return select_context(n, case, word_bits)
        except SelectionFailed:
            continue
