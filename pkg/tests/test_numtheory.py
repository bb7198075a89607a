import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from pgt import numtheory as nt
from pgt.errors import InvalidParameter


def test_fib_base_cases():
    assert nt.fib(0) == 0
    assert nt.fib(1) == 1
    assert nt.fib(10) == 55
    assert nt.fib(25) == 75025


def test_fib_fast_doubling_matches_iteration():
    for n in list(range(0, 120)) + [250, 500, 1000]:
        assert nt.fib(n) == nt.fib_iterative(n)


def test_fib_mod():
    assert nt.fib_mod(25, 25) == 0  # 75025 = 25 * 3001
    for n in (0, 1, 7, 30, 100):
        assert nt.fib_mod(n, 13) == nt.fib(n) % 13
    with pytest.raises(InvalidParameter):
        nt.fib_mod(5, 1)
    with pytest.raises(InvalidParameter):
        nt.fib(-1)


def test_pisano_periods():
    assert nt.pisano_period(2) == 3
    assert nt.pisano_period(3) == 8
    assert nt.pisano_period(10) == 60
    for m in (2, 3, 5, 7, 11):
        k = nt.pisano_period(m)
        for n in (0, 1, 5, 17, 40):
            assert nt.fib_mod(n + k, m) == nt.fib_mod(n, m)


@given(st.integers(min_value=1, max_value=200), st.integers(min_value=1, max_value=200))
@settings(max_examples=60, deadline=None)
def test_fib_gcd_identity(r, s):
    assert math.gcd(nt.fib(r), nt.fib(s)) == nt.fib(math.gcd(r, s))


def test_remark_condition():
    r5 = nt.remark_condition(5)
    assert not r5.holds
    assert r5.fib_p2_mod == 0  # fib(25) = 75025 = 0 mod 25

    r2 = nt.remark_condition(2)
    assert r2.fib_p2_mod == nt.fib(4) % 4 == 3
    assert r2.fib_p2_minus1_mod == nt.fib(3) % 4 == 2
    assert not r2.holds

    with pytest.raises(InvalidParameter):
        nt.remark_condition(9)


def test_remark_scan_small():
    assert nt.remark_scan(1000) == []


def test_damettere_components():
    assert nt.damettere_components(2, 1) == (1, 2, 1)
    assert nt.damettere_D(2, 1) == 1
    assert nt.damettere_components(2, 5) == (5, 9, 4)
    assert nt.damettere_D(2, 5) == 11  # 9*4 - 25
    for u in range(5, 31):
        assert nt.damettere_D(2, u) > 4


def test_damettere_witness():
    for t in range(2, 6):
        for m in range(0, 26):
            n = nt.damettere_witness(t, m)
            assert n is not None and m < n <= m + 10
            assert nt.damettere_D(t, n) > t * t


def _random_unimodular(rng):
    m = nt.mat2_identity()
    for _ in range(rng.randrange(1, 6)):
        a = rng.randrange(-4, 5)
        if rng.randrange(2):
            m = nt.mat2_mul(m, (1, a, 0, 1))
        else:
            m = nt.mat2_mul(m, (1, 0, a, 1))
    return m


def test_cheb_trace_basics():
    m = (2, 1, 1, 1)
    a, b = nt.cheb_trace(m, 0)
    assert a == b == 2
    a, b = nt.cheb_trace(m, 1)
    assert a == b == 3
    a, b = nt.cheb_trace(m, 2)
    assert a == b == 7  # M^2 = [[5,3],[3,2]]


def test_cheb_trace_random():
    rng = random.Random(4242)
    for _ in range(100):
        m = _random_unimodular(rng)
        n = rng.randrange(0, 21)
        a, b = nt.cheb_trace(m, n)
        assert a == b


def test_cheb_power_basics():
    m = (2, 1, 1, 1)
    a, b = nt.cheb_power(m, 1)
    assert a == b == m
    a, b = nt.cheb_power(m, 2)
    assert a == b  # Cayley-Hamilton: tr(M) M - I
    a, b = nt.cheb_power(m, 5)
    assert a == b


def test_cheb_power_random_and_mod_p():
    rng = random.Random(24601)
    for _ in range(100):
        m = _random_unimodular(rng)
        n = rng.randrange(1, 21)
        a, b = nt.cheb_power(m, n)
        assert a == b
    for p in (2, 3, 7):
        for _ in range(20):
            m = tuple(v % p for v in _random_unimodular(rng))
            n = rng.randrange(1, 15)
            a, b = nt.cheb_power(m, n, mod=p)
            assert a == b


def test_cheb_rejects_non_unimodular():
    with pytest.raises(InvalidParameter):
        nt.cheb_trace((1, 1, 1, 0), 3)  # Fibonacci matrix has det -1
    with pytest.raises(InvalidParameter):
        nt.cheb_power((2, 0, 0, 2), 2)


def test_primes():
    assert nt.primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert nt.is_prime(2) and nt.is_prime(97) and nt.is_prime(2**31 - 1)
    assert not nt.is_prime(1) and not nt.is_prime(91)
