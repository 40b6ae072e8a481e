"""Moduli sets, residue vectors, and conversions between integer forms.

An integer in [0, M) is represented by its remainders modulo n pairwise
coprime moduli whose product is M. Addition, subtraction and multiplication
then act channel by channel with no carries between channels. Decoding back
to an ordinary integer uses the classic remainder-theorem weights; decoding
to mixed-radix digits stays entirely in channel arithmetic.

Moduli are expected to be machine-word sized (they are validated only as
being at least 2); the product M and any decoded integer are ordinary
Python integers of arbitrary size.
"""

from dataclasses import dataclass
from math import gcd, prod

from .errors import (
    DuplicateOrNonCoprime,
    EmptyKnownSet,
    ModulusTooSmall,
    OutOfRange,
    SetMismatch,
)


class ModuliSet:
    """An ascending tuple of pairwise coprime moduli plus its lookup tables.

    Instances are immutable after construction and safe to share between
    threads. Construction precomputes the decoding weights and, for every
    ordered pair (k, i), the inverse of moduli[k] modulo moduli[i]; the
    channel algorithms in this package only ever read these tables and never
    invert at run time.
    """

    __slots__ = ("moduli", "product", "crt_weights", "_crt_terms", "_inv")

    def __init__(self, moduli):
        if not moduli:
            raise ModulusTooSmall("a moduli set needs at least one modulus")
        for m in moduli:
            if m < 2:
                raise ModulusTooSmall(f"modulus {m} is smaller than 2")
        ordered = tuple(sorted(moduli))
        n = len(ordered)
        for a in range(n):
            for b in range(a + 1, n):
                if gcd(ordered[a], ordered[b]) != 1:
                    raise DuplicateOrNonCoprime(
                        f"moduli {ordered[a]} and {ordered[b]} share a factor"
                    )
        self.moduli = ordered
        self.product = prod(ordered)
        # Decoding weight w_i solves w_i * (M / m_i) == 1 (mod m_i); the
        # stored term w_i * (M / m_i) is what the decode sum actually uses.
        weights = []
        terms = []
        for m in ordered:
            cofactor = self.product // m
            w = pow(cofactor, -1, m)
            weights.append(w)
            terms.append(w * cofactor)
        self.crt_weights = tuple(weights)
        self._crt_terms = tuple(terms)
        self._inv = [
            [pow(mk, -1, mi) if k != i else None for i, mi in enumerate(ordered)]
            for k, mk in enumerate(ordered)
        ]

    def __len__(self) -> int:
        return len(self.moduli)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuliSet):
            return NotImplemented
        return self.moduli == other.moduli

    def __hash__(self) -> int:
        return hash(self.moduli)

    def __repr__(self) -> str:
        return f"ModuliSet({list(self.moduli)})"


def make_moduli_set(moduli) -> ModuliSet:
    """Validate and build a ModuliSet, sorting the moduli ascending."""
    return ModuliSet(moduli)


@dataclass(frozen=True)
class ResidueVector:
    """Channel-wise remainders of one integer, tied to a ModuliSet."""

    values: tuple[int, ...]
    mset: ModuliSet

    def __post_init__(self):
        moduli = self.mset.moduli
        if len(self.values) != len(moduli):
            raise ValueError(
                f"expected {len(moduli)} residues, got {len(self.values)}"
            )
        for v, m in zip(self.values, moduli):
            if not 0 <= v < m:
                raise ValueError(f"residue {v} out of range for modulus {m}")

    def _require_same_set(self, other: "ResidueVector") -> None:
        if self.mset != other.mset:
            raise SetMismatch("residue vectors belong to different moduli sets")

    def __add__(self, other: "ResidueVector") -> "ResidueVector":
        self._require_same_set(other)
        vals = tuple(
            (a + b) % m
            for a, b, m in zip(self.values, other.values, self.mset.moduli)
        )
        return ResidueVector(vals, self.mset)

    def __sub__(self, other: "ResidueVector") -> "ResidueVector":
        self._require_same_set(other)
        vals = tuple(
            (a - b) % m
            for a, b, m in zip(self.values, other.values, self.mset.moduli)
        )
        return ResidueVector(vals, self.mset)

    def __mul__(self, other: "ResidueVector") -> "ResidueVector":
        self._require_same_set(other)
        vals = tuple(
            (a * b) % m
            for a, b, m in zip(self.values, other.values, self.mset.moduli)
        )
        return ResidueVector(vals, self.mset)


@dataclass(frozen=True)
class PartialResidueVector:
    """Residues known only at a subset of channel positions.

    Positions are 0-based indices into the moduli tuple. This is the output
    shape of the channel-wise quotient, which determines the result only on
    the channels whose moduli were not divided out, and the input shape of
    base extension. Keeping the unknown channels structurally absent (rather
    than filled with stale numbers) prevents them from being read by
    accident.
    """

    values: dict[int, int]
    mset: ModuliSet

    def __post_init__(self):
        if not self.values:
            raise EmptyKnownSet("a partial residue vector needs at least one residue")
        moduli = self.mset.moduli
        object.__setattr__(self, "values", dict(self.values))
        for i, v in self.values.items():
            if not 0 <= i < len(moduli):
                raise ValueError(f"channel index {i} out of range")
            if not 0 <= v < moduli[i]:
                raise ValueError(f"residue {v} out of range for modulus {moduli[i]}")

    @property
    def known(self) -> tuple[int, ...]:
        """Indices that carry a residue, ascending."""
        return tuple(sorted(self.values))

    def is_full(self) -> bool:
        return len(self.values) == len(self.mset.moduli)


@dataclass(frozen=True)
class MixedRadixDigits:
    """Positional digits with place values 1, m_1, m_1*m_2, and so on."""

    digits: tuple[int, ...]
    mset: ModuliSet

    def value(self) -> int:
        """Reconstruct the integer from the positional sum."""
        total = 0
        place = 1
        for d, m in zip(self.digits, self.mset.moduli):
            total += d * place
            place *= m
        return total


def encode(x: int, ms: ModuliSet) -> ResidueVector:
    """Residues of x on every channel. Requires 0 <= x < M."""
    if x < 0 or x >= ms.product:
        raise OutOfRange(f"{x} is not in [0, {ms.product})")
    return ResidueVector(tuple(x % m for m in ms.moduli), ms)


def decode_crt(rv: ResidueVector) -> int:
    """The unique integer in [0, M) with the vector's residues.

    Accumulates the weighted sum exactly and reduces modulo M once at the
    end; no channel information is consulted beyond the residues themselves.
    """
    total = 0
    for v, term in zip(rv.values, rv.mset._crt_terms):
        total += v * term
    return total % rv.mset.product


def _peel_division(ms: ModuliSet, current: list, peel) -> list[int]:
    """Divide out the listed moduli one at a time, entirely channel-wise.

    ``current`` is a mutable length-n list of residues; entries at peeled
    positions are replaced by None. Dividing by moduli[k] works because the
    remainder is exactly the channel-k residue: subtracting it makes the
    value divisible by moduli[k], so every surviving channel multiplies by
    the precomputed inverse of moduli[k]. Returns the remainder digit pulled
    off at each peel, in peel order.

    After the call, ``current[i]`` for surviving i holds the residue of the
    iterated quotient, which is uniquely determined by those channels alone
    because it is smaller than the product of the surviving moduli.
    """
    moduli = ms.moduli
    inv = ms._inv
    alive = [i for i, v in enumerate(current) if v is not None]
    digits = []
    for k in peel:
        r = current[k]
        digits.append(r)
        current[k] = None
        alive.remove(k)
        inv_k = inv[k]
        for i in alive:
            current[i] = (current[i] - r) * inv_k[i] % moduli[i]
    return digits


def to_mixed_radix(rv: ResidueVector) -> MixedRadixDigits:
    """Mixed-radix digits of the encoded integer, channel arithmetic only.

    Peels every modulus in ascending order; the remainder digits pulled off
    are precisely the positional digits, so no decode to a big integer
    happens anywhere.
    """
    current: list = list(rv.values)
    digits = _peel_division(rv.mset, current, range(len(rv.mset.moduli)))
    return MixedRadixDigits(tuple(digits), rv.mset)
