"""Barrett-style modular reduction with two general scaling divisors.

Classic Barrett reduction replaces division by the modulus n with one
precomputed reciprocal and two divisions by powers of two. Both of those
divisors can in fact be arbitrary positive integers g and h: with
mu = g*h // n, the estimate

    q_hat = ((x // g) * mu) // h

never exceeds the true quotient x // n and undershoots by a bounded amount
whenever g and h satisfy the conditions of the chosen range case. Freeing
the divisors from powers of two is what lets the residue pipeline in
``rns_barrett`` pick them as subproducts of its moduli.

Range cases (n is the modulus):

    case 1: inputs < n    outputs < 3n    g < n     n^2   <= g*h
    case 2: inputs < 3n   outputs < 3n    g < n     9n^2  <= g*h
    case 3: inputs < n    outputs < 2n    2g < n    2n^2  <= g*h
    case 4: inputs < 2n   outputs < 2n    2g < n    8n^2  <  g*h

Cases 1 and 2 guarantee a quotient estimate within 2 of the truth, cases 3
and 4 within 1. Cases 2 and 4 are closed (inputs and outputs occupy the
same range), which chained multiplication needs. g and h need not be
coprime, and g = 1 is allowed.
"""

from dataclasses import dataclass
from enum import Enum

from .errors import ConditionViolation, InputOutOfRange


class RangeCase(Enum):
    """One (input range, output range) regime and its divisor conditions."""

    def __new__(cls, number, input_bound, output_bound, product_factor, capacity_factor):
        obj = object.__new__(cls)
        obj._value_ = number
        obj.input_bound = input_bound
        obj.output_bound = output_bound
        obj.product_factor = product_factor
        obj.capacity_factor = capacity_factor
        return obj

    #        number, k_in, k_out, product factor, capacity factor
    CASE1 = (1, 1, 3, 1, 1)
    CASE2 = (2, 3, 3, 9, 9)
    CASE3 = (3, 1, 2, 2, 2)
    CASE4 = (4, 2, 2, 8, 4)

    @property
    def halves_g(self) -> bool:
        """Whether the case requires 2*g < n instead of g < n."""
        return self.value in (3, 4)

    @property
    def strict_product(self) -> bool:
        """Whether the g*h lower bound is strict (case 4 only)."""
        return self.value == 4

    @property
    def closed(self) -> bool:
        """Inputs and outputs share one range, so calls can be chained."""
        return self.input_bound == self.output_bound

    @property
    def quotient_slack(self) -> int:
        """Worst-case undershoot of the quotient estimate."""
        return 2 if self.value in (1, 2) else 1


@dataclass(frozen=True)
class BarrettParams:
    """Validated reduction constants for one modulus and range case."""

    modulus: int
    g: int
    h: int
    mu: int
    case: RangeCase


def make_params(modulus: int, g: int, h: int, case=RangeCase.CASE1) -> BarrettParams:
    """Check the case conditions and precompute mu = g*h // modulus.

    Raises ConditionViolation naming the first inequality that fails.
    """
    case = RangeCase(case)
    if modulus < 2:
        raise ConditionViolation(f"n >= 2 fails: n = {modulus}")
    if g < 1 or h < 1:
        raise ConditionViolation(f"divisors must be positive: g = {g}, h = {h}")
    if case.halves_g:
        if 2 * g >= modulus:
            raise ConditionViolation(f"2*g < n fails: 2*{g} >= {modulus}")
    elif g >= modulus:
        raise ConditionViolation(f"g < n fails: {g} >= {modulus}")
    floor_bound = case.product_factor * modulus * modulus
    if case.strict_product:
        if g * h <= floor_bound:
            raise ConditionViolation(
                f"{case.product_factor}*n^2 < g*h fails: {g * h} <= {floor_bound}"
            )
    elif g * h < floor_bound:
        raise ConditionViolation(
            f"{case.product_factor}*n^2 <= g*h fails: {g * h} < {floor_bound}"
        )
    return BarrettParams(modulus, g, h, g * h // modulus, case)


def quotient_steps(x: int, p: BarrettParams) -> tuple[int, int, int]:
    """The three stages of the estimate: d = x//g, e = d*mu, q = e//h.

    Exposed so callers can inspect or log the intermediates; most code wants
    ``estimate_quotient``.
    """
    d = x // p.g
    e = d * p.mu
    return d, e, e // p.h


def estimate_quotient(x: int, p: BarrettParams) -> int:
    """Estimate x // modulus from below.

    For x in the admissible range (x below the case's input product bound,
    hence below g*h), the true quotient exceeds the estimate by at most
    ``p.case.quotient_slack``. The range is the caller's contract; nothing
    is checked here.
    """
    return (x // p.g) * p.mu // p.h


def modmul(a: int, b: int, p: BarrettParams) -> int:
    """a*b reduced modulo p.modulus into [0, output_bound * modulus).

    No final correction is applied, so the result is a bounded
    representative rather than the canonical remainder; feed it to
    ``final_correct`` when the canonical value is needed.
    """
    limit = p.case.input_bound * p.modulus
    if not 0 <= a < limit:
        raise InputOutOfRange(f"operand {a} not in [0, {limit})")
    if not 0 <= b < limit:
        raise InputOutOfRange(f"operand {b} not in [0, {limit})")
    x = a * b
    return x - estimate_quotient(x, p) * p.modulus


def final_correct(c: int, modulus: int) -> int:
    """Reduce a representative in [0, 3*modulus) to [0, modulus).

    Two conditional subtractions; anything already reduced passes through.
    """
    if c >= modulus:
        c -= modulus
    if c >= modulus:
        c -= modulus
    return c
