import math

import pytest
import sympy
from hypothesis import given, strategies as st

from numtheory.errors import InvalidArgument
from numtheory.modmath import (
    Factorization,
    coprime_split,
    crt_combine,
    derive_seed,
    factor_integer,
    find_generator,
    integer_root_prime_power,
    is_probable_prime,
    make_rng,
    mod_inv,
    mod_pow,
    multiplicative_order,
    prime_sieve,
    random_prime,
    solve_linear_congruence,
)


def test_mod_pow_examples():
    assert mod_pow(340003, 6, 1040483) == 50064
    assert mod_pow(2, 10, 1000) == 24
    assert mod_pow(5, 0, 7) == 1
    assert mod_pow(0, 0, 7) == 1


def test_mod_pow_rejects_bad_arguments():
    with pytest.raises(InvalidArgument):
        mod_pow(2, 3, 1)
    with pytest.raises(InvalidArgument):
        mod_pow(2, -1, 7)


@given(st.integers(0, 10 ** 6), st.integers(0, 10 ** 4), st.integers(0, 10 ** 4))
def test_mod_pow_adds_exponents(g, a, b):
    p = 1040483
    assert mod_pow(g, a, p) * mod_pow(g, b, p) % p == mod_pow(g, a + b, p)


def test_mod_inv_examples():
    assert mod_inv(1, 5) == 1
    assert mod_inv(3, 10) == 7
    assert mod_inv(2, 8) is None


@given(st.integers(-10 ** 6, 10 ** 6), st.integers(2, 500))
def test_mod_inv_matches_gcd(a, n):
    v = mod_inv(a, n)
    if math.gcd(a, n) == 1:
        assert 1 <= v < n
        assert a * v % n == 1
    else:
        assert v is None


def test_crt_examples():
    assert crt_combine([0, 0], [3, 5]) == 0
    assert crt_combine([2, 3], [3, 5]) == 8
    with pytest.raises(InvalidArgument):
        crt_combine([1, 2], [4, 6])
    with pytest.raises(InvalidArgument):
        crt_combine([1, 2], [3])


@given(st.lists(st.sampled_from([3, 4, 5, 7, 11, 13, 17, 19]), min_size=1, max_size=4, unique=True),
       st.data())
def test_crt_reproduces_residues(moduli, data):
    residues = [data.draw(st.integers(0, m - 1)) for m in moduli]
    x = crt_combine(residues, moduli)
    assert 0 <= x < math.prod(moduli)
    assert [x % m for m in moduli] == residues


def test_coprime_split_examples():
    assert coprime_split(12, 2) == (4, 3)
    assert coprime_split(15, 3) == (3, 5)
    assert coprime_split(8, 2) is None


def test_coprime_split_requires_proper_divisor():
    with pytest.raises(InvalidArgument):
        coprime_split(12, 5)
    with pytest.raises(InvalidArgument):
        coprime_split(12, 24)


@given(st.integers(2, 10 ** 6), st.integers(2, 10 ** 6))
def test_coprime_split_is_coprime(n, witness):
    d = math.gcd(n, witness)
    if d in (1, n):
        return
    split = coprime_split(n, witness)
    if split is None:
        assert all(witness % q == 0 for q in sympy.primefactors(n))
        return
    n1, n2 = split
    assert n1 * n2 == n
    assert math.gcd(n1, n2) == 1
    assert n1 > 1 and n2 > 1


def test_linear_congruence_examples():
    assert solve_linear_congruence(4, 2, 6) == [2, 5]
    assert solve_linear_congruence(3, 1, 10) == [7]
    assert solve_linear_congruence(2, 1, 4) == []


@pytest.mark.parametrize("n", range(2, 31))
def test_linear_congruence_brute_force_small(n):
    for a in range(n):
        for c in range(n):
            expected = [x for x in range(n) if (a * x - c) % n == 0]
            assert solve_linear_congruence(a, c, n) == expected


@given(st.integers(2, 200), st.integers(-500, 500), st.integers(-500, 500))
def test_linear_congruence_brute_force(n, a, c):
    expected = [x for x in range(n) if (a * x - c) % n == 0]
    assert solve_linear_congruence(a, c, n) == expected


def test_is_probable_prime_examples():
    assert is_probable_prime(227)
    assert not is_probable_prime(221)
    assert not is_probable_prime(0)
    assert not is_probable_prime(1)
    assert not is_probable_prime(561)
    assert is_probable_prime(2 ** 89 - 1)
    assert not is_probable_prime((2 ** 61 - 1) * (2 ** 31 - 1))


def test_is_probable_prime_matches_sympy():
    assert [n for n in range(5000) if is_probable_prime(n)] == list(sympy.primerange(0, 5000))


@given(st.integers(2, 2 ** 70))
def test_is_probable_prime_agrees_with_sympy(n):
    assert is_probable_prime(n) == sympy.isprime(n)


def test_random_prime_contract():
    p = random_prime(8, 11)
    assert 128 <= p <= 255
    assert sympy.isprime(p)
    assert random_prime(20, 5) == random_prime(20, 5)
    assert random_prime(20, 5).bit_length() == 20
    with pytest.raises(InvalidArgument):
        random_prime(2, 1)


def test_prime_sieve():
    assert prime_sieve(1) == ()
    assert prime_sieve(30) == (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)


def test_factor_integer_examples():
    assert factor_integer(226).factors == ((2, 1), (113, 1))
    assert factor_integer(1024).factors == ((2, 10),)
    fact = factor_integer(1040482)
    assert math.prod(q ** e for q, e in fact.factors) == 1040482
    assert all(sympy.isprime(q) for q in fact.primes)


def test_factor_integer_uses_rho_for_large_cofactors():
    n = random_prime(32, 1) * random_prime(32, 2) * 12
    assert factor_integer(n).as_dict() == sympy.factorint(n)


def test_factor_integer_limits():
    with pytest.raises(InvalidArgument):
        factor_integer(1)
    with pytest.raises(InvalidArgument):
        factor_integer(2 ** 81 + 1)


@given(st.integers(2, 10 ** 12))
def test_factor_integer_matches_sympy(n):
    assert factor_integer(n).as_dict() == sympy.factorint(n)


def test_factorization_rejects_wrong_product():
    with pytest.raises(InvalidArgument):
        Factorization(12, ((2, 2), (5, 1)))


def test_find_generator_examples():
    assert find_generator(11, factor_integer(10)) == 2
    assert find_generator(3, factor_integer(2)) == 2
    with pytest.raises(InvalidArgument):
        find_generator(2, Factorization(1, ()))


@pytest.mark.parametrize("p", list(sympy.primerange(5, 2000))[::7])
def test_find_generator_has_full_order(p):
    g = find_generator(p, factor_integer(p - 1))
    assert sympy.n_order(g, p) == p - 1
    assert all(sympy.n_order(h, p) != p - 1 for h in range(2, g))


@given(st.sampled_from([227, 1009, 65537, 1040483]), st.integers(1, 10 ** 6))
def test_multiplicative_order_matches_sympy(p, a):
    if a % p == 0:
        return
    assert multiplicative_order(a, p, factor_integer(p - 1)) == sympy.n_order(a, p)


def test_integer_root_prime_power():
    assert integer_root_prime_power(8) == (2, 3)
    assert integer_root_prime_power(49) == (7, 2)
    assert integer_root_prime_power(13) == (13, 1)
    assert integer_root_prime_power(12) is None
    assert integer_root_prime_power(36) is None
    assert integer_root_prime_power(1) is None


def test_derive_seed_is_stable_and_64_bit():
    assert derive_seed(1, "g") == derive_seed(1, "g")
    assert derive_seed(1, "g") != derive_seed(1, "b")
    assert derive_seed(20, 1) != derive_seed(2, 1)
    assert 0 <= derive_seed("anything", 3.5) < 2 ** 64


def test_make_rng_is_reproducible():
    assert make_rng(42).getrandbits(64) == make_rng(42).getrandbits(64)
    assert make_rng(2 ** 64 + 42).getrandbits(64) == make_rng(42).getrandbits(64)
