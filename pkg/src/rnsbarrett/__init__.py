"""Residue number system arithmetic with a generalized-divisor Barrett
reduction that runs entirely in residue form.

The package splits a large modular multiplication across pairwise coprime
word-sized channels, estimates the quotient with two divisor constants
chosen as subproducts of the channel moduli, and never reconstructs a big
integer between steps. See README.md for the mathematical background and
the command-line tool.
"""

from .barrett import (
    BarrettParams,
    RangeCase,
    estimate_quotient,
    final_correct,
    make_params,
    modmul,
    quotient_steps,
)
from .base_extension import base_extend
from .errors import (
    CaseMismatch,
    ConditionViolation,
    ContextMismatch,
    DuplicateOrNonCoprime,
    EmptyKnownSet,
    InputOutOfRange,
    ModulusTooSmall,
    NotCoprime,
    OutOfRange,
    PartitionMismatch,
    RnsBarrettError,
    SelectionFailed,
    SetMismatch,
)
from .modexp import bmm_modexp, final_result
from .paramfile import dumps as dump_params
from .paramfile import load as load_params
from .paramfile import loads as parse_params
from .paramfile import save as save_params
from .quotient import ModuliPartition, quotient_by_moduli_product
from .reference import (
    classic_barrett_quotient,
    montgomery_modmul,
    oracle_modexp,
    oracle_modmul,
)
from .rns import (
    MixedRadixDigits,
    ModuliSet,
    PartialResidueVector,
    ResidueVector,
    decode_crt,
    encode,
    make_moduli_set,
    to_mixed_radix,
)
from .rns_barrett import (
    RnsBarrettContext,
    StepTrace,
    bmm,
    make_context,
    make_context_from_divisors,
    trace_bmm,
)
from .selection import select_context

__version__ = "0.1.0"

__all__ = [
    "BarrettParams",
    "CaseMismatch",
    "ConditionViolation",
    "ContextMismatch",
    "DuplicateOrNonCoprime",
    "EmptyKnownSet",
    "InputOutOfRange",
    "MixedRadixDigits",
    "ModuliPartition",
    "ModuliSet",
    "ModulusTooSmall",
    "NotCoprime",
    "OutOfRange",
    "PartialResidueVector",
    "PartitionMismatch",
    "RangeCase",
    "ResidueVector",
    "RnsBarrettContext",
    "RnsBarrettError",
    "SelectionFailed",
    "SetMismatch",
    "StepTrace",
    "base_extend",
    "bmm",
    "bmm_modexp",
    "classic_barrett_quotient",
    "decode_crt",
    "dump_params",
    "encode",
    "estimate_quotient",
    "final_correct",
    "final_result",
    "load_params",
    "make_context",
    "make_context_from_divisors",
    "make_moduli_set",
    "make_params",
    "modmul",
    "montgomery_modmul",
    "oracle_modexp",
    "oracle_modmul",
    "parse_params",
    "quotient_by_moduli_product",
    "quotient_steps",
    "save_params",
    "select_context",
    "to_mixed_radix",
    "trace_bmm",
]
