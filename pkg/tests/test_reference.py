"""The big-integer baselines behave as documented."""

import random
from math import gcd

import pytest

from rnsbarrett import (
    NotCoprime,
    classic_barrett_quotient,
    estimate_quotient,
    make_params,
    montgomery_modmul,
    oracle_modexp,
    oracle_modmul,
)


class TestOracles:
    def test_modmul_goldens(self):
        assert oracle_modmul(20, 19, 21) == 2
        assert oracle_modmul(0, 12345, 97) == 0
        assert oracle_modmul(13, 17, 21) == 11

    def test_modexp_goldens(self):
        assert oracle_modexp(2, 0, 21) == 1
        assert oracle_modexp(20, 13, 21) == 20
        assert oracle_modexp(20, 2, 21) == 1

    def test_modexp_matches_builtin(self):
        rng = random.Random(1)
        for _ in range(300):
            n = rng.randrange(1, 1 << 64)
            x = rng.randrange(1 << 64)
            e = rng.randrange(1 << 32)
            assert oracle_modexp(x, e, n) == pow(x, e, n)


class TestClassicBarrett:
    def test_golden(self):
        # mu = 512 // 21 = 24, d = 23, e = 552, estimate 17 (true quotient 18)
        assert classic_barrett_quotient(380, 21, 4, 5) == 17
        assert 380 // 21 == 18

    def test_zero(self):
        assert classic_barrett_quotient(0, 21, 4, 5) == 0

    def test_below_modulus(self):
        assert classic_barrett_quotient(20, 21, 4, 5) == 0

    def test_is_power_of_two_specialization(self):
        rng = random.Random(8)
        for _ in range(1000):
            n = rng.randrange(4, 1 << 64)
            a_bits = rng.randrange(0, n.bit_length() - 1)  # keep 2^a < n
            b_bits = 2 * n.bit_length() - a_bits + rng.randrange(0, 8)
            p = make_params(n, 1 << a_bits, 1 << b_bits)
            x = rng.randrange(min(n * n, 1 << (a_bits + b_bits)))
            assert classic_barrett_quotient(x, n, a_bits, b_bits) == estimate_quotient(x, p)


class TestMontgomery:
    def test_golden(self):
        # 380 * 32^-1 is 4 mod 21; the representative may carry one extra 21
        assert montgomery_modmul(20, 19, 21, 32) == 25

    def test_zero(self):
        assert montgomery_modmul(0, 0, 21, 32) == 0

    def test_one_times_r(self):
        n, r = 21, 32
        got = montgomery_modmul(1, r % n, n, r)
        assert got % n == 1

    def test_not_coprime(self):
        with pytest.raises(NotCoprime):
            montgomery_modmul(1, 2, 21, 35)

    def test_reduction_identity(self):
        rng = random.Random(14)
        for _ in range(500):
            n = rng.randrange(3, 1 << 96) | 1
            r = 1 << n.bit_length()
            assert gcd(n, r) == 1
            a, b = rng.randrange(n), rng.randrange(n)
            y = montgomery_modmul(a, b, n, r)
            assert 0 <= y < 2 * n
            assert y * r % n == a * b % n
