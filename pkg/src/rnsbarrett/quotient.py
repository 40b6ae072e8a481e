"""Exact quotients by moduli subproducts, computed entirely channel-wise.

Floor-dividing by a product of moduli is the same as floor-dividing by each
of them in turn. Each single division is cheap in residue form (see
``rns._peel_division``), so the quotient by any subproduct of the moduli
costs one peel per divisor modulus. The price is that the result is known
only on the surviving channels; that is still a complete description, since
the quotient is smaller than the product of the surviving moduli.
"""

from dataclasses import dataclass, field
from math import prod

from .errors import PartitionMismatch
from .rns import ModuliSet, PartialResidueVector, ResidueVector, _peel_division


@dataclass(frozen=True)
class ModuliPartition:
    """Split of a moduli set into divisor channels and surviving channels.

    The divisor indices select the moduli whose product is divided out; they
    may be any nonempty proper subset, not necessarily a prefix. Peeling
    happens in ascending index order (the result does not depend on the
    order).
    """

    mset: ModuliSet
    divisor_indices: tuple[int, ...]
    remaining_indices: tuple[int, ...] = field(init=False)
    divisor_product: int = field(init=False)
    remaining_product: int = field(init=False)

    def __post_init__(self):
        n = len(self.mset.moduli)
        idx = tuple(sorted(self.divisor_indices))
        if len(set(idx)) != len(idx):
            raise ValueError("duplicate divisor index")
        if not idx:
            raise ValueError("divisor index set is empty")
        if idx[0] < 0 or idx[-1] >= n:
            raise ValueError(f"divisor index out of range 0..{n - 1}")
        if len(idx) == n:
            raise ValueError("divisor set must leave at least one channel")
        remaining = tuple(i for i in range(n) if i not in set(idx))
        object.__setattr__(self, "divisor_indices", idx)
        object.__setattr__(self, "remaining_indices", remaining)
        object.__setattr__(
            self, "divisor_product", prod(self.mset.moduli[i] for i in idx)
        )
        object.__setattr__(
            self, "remaining_product", self.mset.product // self.divisor_product
        )


def quotient_by_moduli_product(
    x: ResidueVector, part: ModuliPartition
) -> PartialResidueVector:
    """Residues of x // divisor_product on the surviving channels.

    The quotient is exact floor division of the encoded integer, and since
    it is below ``remaining_product`` the returned partial vector determines
    it uniquely. Divisor-channel residues are consumed by the peeling and
    are deliberately absent from the result.
    """
    if x.mset != part.mset:
        raise PartitionMismatch("partition and vector use different moduli sets")
    current: list = list(x.values)
    _peel_division(part.mset, current, part.divisor_indices)
    return PartialResidueVector(
        {i: current[i] for i in part.remaining_indices}, part.mset
    )
