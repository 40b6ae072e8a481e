"""The Barrett modular multiplier that never leaves residue form.

Multiplying two residue vectors channel-wise yields the residues of the
double-width product x. The quotient estimate needs x // g and e // h;
choosing g and h as subproducts of the moduli turns both into channel
peeling (``quotient``), each followed by a base extension (``base_extension``)
to repopulate the peeled channels. The closing step x - q*n is channel
arithmetic again, so no stage of the pipeline converts to a big integer.

For the residues to mean what they should, every intermediate integer must
stay below the moduli product M. The largest intermediate is the
mu-product e, bounded by input_bound^2 * h * n, which is what the capacity
condition (capacity_factor * h * n < M) guarantees. The same bounds keep
both base extensions inside their contract: the first quotient is below
M/g and the second below M/h.
"""

from dataclasses import dataclass, field
from math import prod

from .barrett import BarrettParams, RangeCase, make_params
from .base_extension import base_extend
from .errors import ConditionViolation, ContextMismatch
from .quotient import ModuliPartition, quotient_by_moduli_product
from .rns import ModuliSet, PartialResidueVector, ResidueVector, encode


@dataclass(frozen=True)
class RnsBarrettContext:
    """Everything one modulus needs for residue-form multiply-reduce.

    ``g_indices`` and ``h_indices`` select the moduli whose products are the
    two scaling divisors; the sets may overlap, and ``g_indices`` may be
    empty (g = 1, first quotient degenerates to the identity). Instances are
    immutable and safe to share across threads.
    """

    mset: ModuliSet
    params: BarrettParams
    g_indices: tuple[int, ...]
    h_indices: tuple[int, ...]
    mu_rv: ResidueVector
    n_rv: ResidueVector
    _g_partition: ModuliPartition | None = field(init=False, repr=False)
    _h_partition: ModuliPartition = field(init=False, repr=False)

    def __post_init__(self):
        g_part = (
            ModuliPartition(self.mset, self.g_indices) if self.g_indices else None
        )
        object.__setattr__(self, "_g_partition", g_part)
        object.__setattr__(
            self, "_h_partition", ModuliPartition(self.mset, self.h_indices)
        )


@dataclass(frozen=True)
class StepTrace:
    """Intermediate residue vectors of one multiply-reduce pass.

    Partial vectors keep their unknown channels structurally absent, which
    is how the trace records which channels each quotient determined.
    """

    x: ResidueVector
    d_partial: PartialResidueVector
    d_full: ResidueVector
    e: ResidueVector
    q_partial: PartialResidueVector
    q_full: ResidueVector
    c: ResidueVector


def _normalize_indices(indices, n: int, name: str) -> tuple[int, ...]:
    idx = tuple(sorted(indices))
    if len(set(idx)) != len(idx):
        raise ValueError(f"duplicate index in {name}")
    if idx and (idx[0] < 0 or idx[-1] >= n):
        raise ValueError(f"{name} out of range 0..{n - 1}")
    return idx


def make_context(
    ms: ModuliSet, modulus: int, g_indices, h_indices, case=RangeCase.CASE1
) -> RnsBarrettContext:
    """Validate divisor choices against the moduli set and precompute.

    On top of the scalar case conditions this enforces the capacity
    condition capacity_factor * h * modulus < M, without which intermediates
    would wrap around M and the residues would stop describing the true
    integers. Raises ConditionViolation naming whichever condition fails.
    """
    case = RangeCase(case)
    n = len(ms.moduli)
    g_idx = _normalize_indices(g_indices, n, "g_indices")
    h_idx = _normalize_indices(h_indices, n, "h_indices")
    g = prod((ms.moduli[i] for i in g_idx), start=1)
    h = prod((ms.moduli[i] for i in h_idx), start=1)
    params = make_params(modulus, g, h, case)
    if case.capacity_factor * h * modulus >= ms.product:
        raise ConditionViolation(
            f"capacity {case.capacity_factor}*h*n < M fails: "
            f"{case.capacity_factor * h * modulus} >= {ms.product}"
        )
    return RnsBarrettContext(
        mset=ms,
        params=params,
        g_indices=g_idx,
        h_indices=h_idx,
        mu_rv=encode(params.mu, ms),
        n_rv=encode(modulus, ms),
    )


def _indices_for_divisor(ms: ModuliSet, value: int, name: str) -> tuple[int, ...]:
    """Resolve a divisor value to the unique moduli subset with that product."""
    if value == 1:
        return ()
    if value < 1 or ms.product % value != 0:
        raise ConditionViolation(
            f"{name} | M fails: {value} does not divide {ms.product}"
        )
    idx = tuple(i for i, m in enumerate(ms.moduli) if value % m == 0)
    if prod((ms.moduli[i] for i in idx), start=1) != value:
        raise ConditionViolation(
            f"{name} = {value} is not a product of distinct moduli from the set"
        )
    return idx


def make_context_from_divisors(
    ms: ModuliSet, modulus: int, g: int, h: int, case=RangeCase.CASE1
) -> RnsBarrettContext:
    """Like make_context but taking the divisors as integers.

    Because the moduli are pairwise coprime, a divisor that is a product of
    set members decomposes into them uniquely; anything else is rejected.
    """
    return make_context(
        ms,
        modulus,
        _indices_for_divisor(ms, g, "g"),
        _indices_for_divisor(ms, h, "h"),
        case,
    )


def _multiply_reduce(
    a: ResidueVector, b: ResidueVector, ctx: RnsBarrettContext
) -> StepTrace:
    if a.mset != ctx.mset or b.mset != ctx.mset:
        raise ContextMismatch("operands do not belong to the context's moduli set")
    x = a * b
    if ctx._g_partition is None:
        # g = 1: the first quotient is x itself, already known everywhere.
        d_partial = PartialResidueVector(dict(enumerate(x.values)), ctx.mset)
        d_full = x
    else:
        d_partial = quotient_by_moduli_product(x, ctx._g_partition)
        d_full = base_extend(d_partial)
    e = d_full * ctx.mu_rv
    q_partial = quotient_by_moduli_product(e, ctx._h_partition)
    q_full = base_extend(q_partial)
    c = x - q_full * ctx.n_rv
    return StepTrace(x, d_partial, d_full, e, q_partial, q_full, c)


def bmm(a: ResidueVector, b: ResidueVector, ctx: RnsBarrettContext) -> ResidueVector:
    """Residues of a representative of a*b mod n, in [0, output_bound * n).

    The decoded operands must lie in [0, input_bound * n); that is the
    caller's contract, since checking it would require a decode. The result
    is exactly what the scalar ``barrett.modmul`` computes for the same
    operands and constants, not merely congruent to it.
    """
    return _multiply_reduce(a, b, ctx).c


def trace_bmm(
    a: ResidueVector, b: ResidueVector, ctx: RnsBarrettContext
) -> StepTrace:
    """Run one multiply-reduce pass and keep every intermediate vector."""
    return _multiply_reduce(a, b, ctx)
