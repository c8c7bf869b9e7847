import random
from fractions import Fraction

import pytest

import oracles
from brandtkit.quatalg import (OO, ConstructionError, QuaternionAlgebra,
                               construct_algebra, hilbert_symbol, is_prime,
                               legendre, ramified_primes)


def test_is_prime_matches_sieve():
    sieve = set(oracles.primes_upto(500))
    for n in range(500):
        assert is_prime(n) == (n in sieve)


def test_legendre_matches_euler():
    for p in (3, 5, 7, 11, 13, 31, 97):
        for u in range(-8, 40):
            assert legendre(u, p) == oracles.legendre_euler(u, p)


def test_hilbert_symbol_against_conic_search():
    # squarefree coefficients keep the search modulus honest
    rng = random.Random(1)
    squarefree = [n for n in range(1, 35)
                  if all(n % (q * q) for q in (2, 3, 5))]
    cases = 0
    while cases < 60:
        a = rng.choice(squarefree) * rng.choice((1, -1))
        b = rng.choice(squarefree) * rng.choice((1, -1))
        p = rng.choice((2, 3, 5, 7))
        want = 1 if oracles.conic_has_point(a, b, p) else -1
        assert hilbert_symbol(a, b, p) == want, (a, b, p)
        cases += 1


def test_hilbert_symbol_at_infinity():
    assert hilbert_symbol(-1, -1, OO) == -1
    assert hilbert_symbol(-1, 2, OO) == 1
    assert hilbert_symbol(3, 5, OO) == 1


def test_hilbert_product_formula():
    # product over all places of (a,b)_v equals 1
    rng = random.Random(2)
    for _ in range(40):
        a = rng.randint(1, 60) * rng.choice((1, -1))
        b = rng.randint(1, 60) * rng.choice((1, -1))
        places = {2, OO}
        for n in (abs(a), abs(b)):
            d = 2
            while d * d <= n:
                while n % d == 0:
                    places.add(d)
                    n //= d
                d += 1
            if n > 1:
                places.add(n)
        prod = 1
        for v in places:
            prod *= hilbert_symbol(a, b, v)
        assert prod == 1, (a, b)


def test_hilbert_symbol_bilinearity_in_squares():
    rng = random.Random(3)
    for _ in range(30):
        a = rng.randint(1, 30) * rng.choice((1, -1))
        b = rng.randint(1, 30) * rng.choice((1, -1))
        c = rng.randint(1, 9)
        p = rng.choice((2, 3, 5, 7, 11))
        assert hilbert_symbol(a * c * c, b, p) == hilbert_symbol(a, b, p)
        assert hilbert_symbol(a, b, p) == hilbert_symbol(b, a, p)


def test_ramified_primes_examples():
    assert ramified_primes(-1, -1) == [2]
    assert ramified_primes(-1, -11) == [11]
    assert ramified_primes(-2, -5) == [5]


def test_construct_algebra_is_ramified_exactly_at_level():
    for N in oracles.primes_upto(200):
        alg = construct_algebra(N)
        assert ramified_primes(alg.a, alg.b) == [N]
        assert hilbert_symbol(alg.a, alg.b, OO) == -1
        assert alg.level == N


def test_construct_algebra_recipe_by_residue_class():
    assert (construct_algebra(2).a, construct_algebra(2).b) == (-1, -1)
    for N in (3, 7, 11, 19, 23):
        assert (construct_algebra(N).a, construct_algebra(N).b) == (-1, -N)
    for N in (5, 13, 29, 37):
        assert (construct_algebra(N).a, construct_algebra(N).b) == (-2, -N)
    for N in (17, 41, 73, 89, 97):
        alg = construct_algebra(N)
        r = -alg.a
        assert is_prime(r) and r % 4 == 3 and alg.b == -N


def test_algebra_level_certification_rejects_wrong_level():
    with pytest.raises(ConstructionError):
        QuaternionAlgebra(-1, -11, level=7)


def test_element_ring_axioms():
    alg = construct_algebra(11)
    one, i, j, k = alg.one(), *alg.gens()
    assert i * i == alg.element(alg.a)
    assert j * j == alg.element(alg.b)
    assert i * j == k and j * i == -k
    rng = random.Random(4)
    for _ in range(60):
        x = alg.element(*(rng.randint(-5, 5) for _ in range(4)))
        y = alg.element(*(rng.randint(-5, 5) for _ in range(4)))
        z = alg.element(*(rng.randint(-5, 5) for _ in range(4)))
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert (x * y).reduced_norm() == x.reduced_norm() * y.reduced_norm()
        assert (x * y).conjugate() == y.conjugate() * x.conjugate()
        assert x + x.conjugate() == alg.element(x.reduced_trace())
        assert x * x.conjugate() == alg.element(x.reduced_norm())


def test_norm_positive_definite():
    rng = random.Random(5)
    for N in (2, 11, 17, 37):
        alg = construct_algebra(N)
        for _ in range(40):
            x = alg.element(*(rng.randint(-6, 6) for _ in range(4)))
            n = x.reduced_norm()
            assert n > 0 or x == alg.element(0)


def test_element_inverse():
    alg = construct_algebra(13)
    rng = random.Random(6)
    for _ in range(20):
        coords = [Fraction(rng.randint(-5, 5), rng.randint(1, 3))
                  for _ in range(4)]
        if not any(coords):
            continue
        x = alg.element(*coords)
        assert x * x.inverse() == alg.one()
