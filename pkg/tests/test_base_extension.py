"""Base extension against direct encoding, with seed-independence checks."""

import random
from math import prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rnsbarrett import (
    EmptyKnownSet,
    PartialResidueVector,
    base_extend,
    encode,
    make_moduli_set,
    to_mixed_radix,
)
from rnsbarrett.rns import _peel_division

from helpers import COPRIME_POOL

EX_SET = make_moduli_set([4, 5, 7, 11])


def test_golden_extend_19():
    # 19 < 7 * 11, known on the last two channels
    partial = PartialResidueVector({2: 5, 3: 8}, EX_SET)
    assert base_extend(partial).values == (3, 4, 5, 8)


def test_golden_extend_17():
    # 17 < 5 * 11, known on a non-adjacent pair
    partial = PartialResidueVector({1: 2, 3: 6}, EX_SET)
    assert base_extend(partial).values == (1, 2, 3, 6)


def test_full_known_passthrough():
    partial = PartialResidueVector({0: 3, 1: 3, 2: 2, 3: 1}, EX_SET)
    assert base_extend(partial).values == (3, 3, 2, 1)


def test_empty_known_set_rejected():
    with pytest.raises(EmptyKnownSet):
        PartialResidueVector({}, EX_SET)


def test_partial_vector_validation():
    with pytest.raises(ValueError):
        PartialResidueVector({0: 4}, EX_SET)
    with pytest.raises(ValueError):
        PartialResidueVector({7: 1}, EX_SET)


def test_exhaustive_small_ring():
    ms = make_moduli_set([3, 4, 5])
    subsets = [(0,), (1,), (2,), (0, 1), (0, 2), (1, 2)]
    for known in subsets:
        bound = prod(ms.moduli[i] for i in known)
        for x in range(bound):
            partial = PartialResidueVector({i: x % ms.moduli[i] for i in known}, ms)
            assert base_extend(partial) == encode(x, ms)


def test_seed_values_do_not_matter():
    rng = random.Random(3)
    for _ in range(300):
        ms = make_moduli_set(rng.sample(COPRIME_POOL, rng.randint(2, 6)))
        n = len(ms.moduli)
        known = sorted(rng.sample(range(n), rng.randint(1, n - 1)))
        bound = prod(ms.moduli[i] for i in known)
        x = rng.randrange(bound)
        partial = PartialResidueVector({i: x % ms.moduli[i] for i in known}, ms)
        fill = {
            i: rng.randrange(ms.moduli[i]) for i in range(n) if i not in set(known)
        }
        zero_seeded = base_extend(partial)
        random_seeded = base_extend(partial, fill=fill)
        assert zero_seeded == random_seeded
        assert zero_seeded == encode(x, ms)


def test_peeled_digits_are_mixed_radix_digits():
    rng = random.Random(4)
    for _ in range(200):
        ms = make_moduli_set(rng.sample(COPRIME_POOL, rng.randint(2, 6)))
        n = len(ms.moduli)
        known = sorted(rng.sample(range(n), rng.randint(1, n - 1)))
        bound = prod(ms.moduli[i] for i in known)
        x = rng.randrange(bound)
        current = [x % m if i in set(known) else 0 for i, m in enumerate(ms.moduli)]
        digits = _peel_division(ms, current, known)
        known_only = make_moduli_set([ms.moduli[i] for i in known])
        assert tuple(digits) == to_mixed_radix(encode(x, known_only)).digits


@given(
    st.lists(st.sampled_from(COPRIME_POOL), min_size=2, max_size=6, unique=True),
    st.data(),
)
@settings(deadline=None)
def test_oracle_property(moduli, data):
    ms = make_moduli_set(moduli)
    n = len(ms.moduli)
    size = data.draw(st.integers(min_value=1, max_value=n - 1))
    known = data.draw(
        st.lists(
            st.integers(min_value=0, max_value=n - 1),
            min_size=size,
            max_size=size,
            unique=True,
        )
    )
    bound = prod(ms.moduli[i] for i in known)
    x = data.draw(st.integers(min_value=0, max_value=bound - 1))
    partial = PartialResidueVector({i: x % ms.moduli[i] for i in known}, ms)
    assert base_extend(partial) == encode(x, ms)
