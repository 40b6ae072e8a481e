"""Deterministic construction of a working moduli set for a given modulus.

The conditions leave wide freedom, so this module just has to find one
valid configuration, not a good one. Strategy: walk candidate moduli
downward from 2**word_bits - 1, keeping only values coprime to everything
chosen so far. First grow g as large as its case bound allows, then grow h
until g*h clears the product bound, then append further moduli until the
capacity condition holds. The result is revalidated by ``make_context``, so
a bug here cannot hand out an unsound context.
"""

from math import gcd, prod

from .barrett import RangeCase
from .errors import ConditionViolation, SelectionFailed
from .rns import make_moduli_set
from .rns_barrett import RnsBarrettContext, make_context


def _coprime_to_all(candidate: int, chosen: list[int]) -> bool:
    return all(gcd(candidate, m) == 1 for m in chosen)


def select_context(
    modulus: int,
    case=RangeCase.CASE1,
    word_bits: int = 16,
    *,
    max_moduli: int = 512,
) -> RnsBarrettContext:
    """Pick moduli near 2**word_bits and divisor index sets for the modulus.

    Deterministic: the same arguments always yield the same context. Raises
    SelectionFailed when the candidate pool or the moduli budget runs out;
    retrying with larger word_bits usually helps.
    """
    case = RangeCase(case)
    if modulus < 2:
        raise ValueError(f"modulus must be at least 2, got {modulus}")
    if not 4 <= word_bits <= 62:
        raise ValueError(f"word_bits must be in [4, 62], got {word_bits}")

    top = (1 << word_bits) - 1
    chosen: list[int] = []

    # Largest admissible g value for the case's divisor bound.
    g_cap = (modulus - 1) // 2 if case.halves_g else modulus - 1
    if g_cap < 1:
        raise SelectionFailed(
            f"no admissible g exists for modulus {modulus} under case {case.value}"
        )

    g_value = 1
    g_moduli: list[int] = []
    cand = min(top, g_cap)
    while cand >= 2:
        if g_value * cand > g_cap:
            # Every candidate down to the bound overshoots too; skip them.
            cand = g_cap // g_value
            continue
        if _coprime_to_all(cand, chosen):
            g_moduli.append(cand)
            chosen.append(cand)
            g_value *= cand
            if len(chosen) > max_moduli:
                raise SelectionFailed(f"exceeded budget of {max_moduli} moduli")
            cand = min(cand - 1, g_cap // g_value)
        else:
            cand -= 1

    product_goal = case.product_factor * modulus * modulus

    def product_ok(h: int) -> bool:
        gh = g_value * h
        return gh > product_goal if case.strict_product else gh >= product_goal

    h_value = 1
    h_moduli: list[int] = []
    cand = top
    while not product_ok(h_value):
        if cand < 2:
            raise SelectionFailed(
                f"ran out of coprime candidates below 2^{word_bits} while building h"
            )
        if _coprime_to_all(cand, chosen):
            h_moduli.append(cand)
            chosen.append(cand)
            h_value *= cand
            if len(chosen) > max_moduli:
                raise SelectionFailed(f"exceeded budget of {max_moduli} moduli")
        cand -= 1

    m_value = prod(chosen)
    capacity_goal = case.capacity_factor * h_value * modulus
    while m_value <= capacity_goal:
        if cand < 2:
            raise SelectionFailed(
                f"ran out of coprime candidates below 2^{word_bits} "
                "while extending capacity"
            )
        if _coprime_to_all(cand, chosen):
            chosen.append(cand)
            m_value *= cand
            if len(chosen) > max_moduli:
                raise SelectionFailed(f"exceeded budget of {max_moduli} moduli")
        cand -= 1

    ms = make_moduli_set(chosen)
    where = {m: i for i, m in enumerate(ms.moduli)}
    try:
        return make_context(
            ms,
            modulus,
            tuple(sorted(where[m] for m in g_moduli)),
            tuple(sorted(where[m] for m in h_moduli)),
            case,
        )
    except ConditionViolation as exc:  # pragma: no cover - search invariant
        raise SelectionFailed(f"search produced an invalid context: {exc}") from exc
