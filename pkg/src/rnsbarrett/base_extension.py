"""Extension of residues from a subset of channels to all channels.

When an integer x is smaller than the product P of the moduli on its known
channels, those residues determine it completely, so the missing channels
can be filled in without ever reconstructing x as a big integer.

The trick: seed the unknown channels with arbitrary values (zeros in
production) and peel the known moduli as in the quotient routine. The peel
digits depend only on the known residues and are the mixed-radix digits of
x over the known moduli, so their positional sum is x itself. Whatever
integer x' the seeded vector happened to represent therefore satisfies
x' = q * P + x, where q is the final peeled quotient, whose residue every
unknown channel is left holding. Subtracting q * P channel-wise from the
seed values yields the true residues, and the arbitrary seed cancels
exactly.
"""

from math import prod

from .errors import EmptyKnownSet
from .rns import PartialResidueVector, ResidueVector, _peel_division


def base_extend(x: PartialResidueVector, *, fill: dict | None = None) -> ResidueVector:
    """Full residue vector agreeing with x on every channel.

    The caller must guarantee that the encoded integer is below the product
    of the known-channel moduli; that bound is not detectable here, and a
    violation silently yields the residues of the value reduced into that
    range. Call sites in this package document why their quotients satisfy
    the bound.

    ``fill`` overrides the seed values on unknown channels and exists so
    tests can demonstrate that the seed does not influence the result; leave
    it alone in production code.
    """
    ms = x.mset
    moduli = ms.moduli
    n = len(moduli)
    known = x.known
    if not known:
        raise EmptyKnownSet("nothing to extend from")
    if len(known) == n:
        return ResidueVector(tuple(x.values[i] for i in range(n)), ms)

    seed = {}
    current: list = []
    for i in range(n):
        if i in x.values:
            current.append(x.values[i])
        else:
            s = fill[i] if fill is not None else 0
            seed[i] = s
            current.append(s)

    _peel_division(ms, current, known)

    peeled_product = prod(moduli[i] for i in known)
    out = list(x.values[i] if i in x.values else 0 for i in range(n))
    for i, s in seed.items():
        out[i] = (s - current[i] * (peeled_product % moduli[i])) % moduli[i]
    return ResidueVector(tuple(out), ms)
