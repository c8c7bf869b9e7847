import random

import pytest

import oracles
from brandtkit.brandt import BrandtCollection
from brandtkit.ideals import enumerate_classes
from brandtkit.orders import maximal_order
from brandtkit.quatalg import ConsistencyError, construct_algebra
from brandtkit.ssoracle import (QuadField, cross_validate, curve_from_j,
                                hasse_polynomial, is_supersingular,
                                point_count, supersingular_set)


def pipeline(N):
    classes = enumerate_classes(maximal_order(construct_algebra(N)), level=N)
    return classes, BrandtCollection(classes, bound=max(5, (N + 1) // 6 + 1))


def minpoly_pairs(ss, N):
    """Model-independent (trace, norm) fingerprints of a j-list over
    F_N(sqrt(c)): trace 2s, norm s^2 - c t^2."""
    c = QuadField(N).c if N >= 5 else 0
    return sorted(((2 * s) % N, (s * s - c * t * t) % N)
                  for s, t in ss.j_list)


def test_supersingular_sets_match_brute_scan():
    for N in (5, 7, 11, 13, 17, 19, 23):
        ss = supersingular_set(N)
        assert minpoly_pairs(ss, N) == oracles.brute_supersingular_minpolys(N)


def test_small_characteristic_tables():
    assert is_supersingular(0, 2)
    assert not is_supersingular(1, 2)
    assert is_supersingular(0, 3)
    assert is_supersingular(1728, 3)  # 1728 = 0 mod 3
    assert len(supersingular_set(2)) == 1
    assert len(supersingular_set(3)) == 1


def test_known_rational_j_values():
    # mod 11 exactly j = 0 and j = 1728 = 1 are supersingular
    assert sorted(supersingular_set(11).j_list) == [(0, 0), (1, 0)]
    for j in range(11):
        assert is_supersingular(j, 11) == (j in (0, 1))
    # mod 13 the single supersingular j is 5
    assert supersingular_set(13).j_list == [(5, 0)]
    assert is_supersingular(5, 13)


def test_set_invariants():
    for N in (11, 23, 37, 43):
        ss = supersingular_set(N)
        assert ss.frobenius_closed()
        assert ss.rational_count <= len(ss)
        assert len(set(ss.j_list)) == len(ss)


def test_hasse_polynomial_shape():
    for N in (5, 11, 37):
        H = hasse_polynomial(N)
        assert len(H) == (N - 1) // 2 + 1
        assert H[0] == 1
        assert H[-1] == 1


def test_quadfield_axioms():
    F = QuadField(13)
    rng = random.Random(3)
    one, zero = (1, 0), (0, 0)
    for _ in range(40):
        x = (rng.randrange(13), rng.randrange(13))
        y = (rng.randrange(13), rng.randrange(13))
        z = (rng.randrange(13), rng.randrange(13))
        assert F.mul(x, y) == F.mul(y, x)
        assert F.mul(x, F.mul(y, z)) == F.mul(F.mul(x, y), z)
        assert F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z))
        assert F.conj(F.mul(x, y)) == F.mul(F.conj(x), F.conj(y))
        assert F.pow(x, 13) == F.conj(x)  # Frobenius
        if x != zero:
            assert F.mul(x, F.inv(x)) == one
            assert F.chi(F.mul(x, x)) == 1
            assert F.chi(F.mul(x, y)) == F.chi(x) * F.chi(y) or y == zero
    # chi is the quadratic character: half the nonzero elements are squares
    vals = [F.chi(x) for x in F.elements() if x != zero]
    assert sum(vals) == 0
    assert F.pow((0, 1), F.q - 1) == one


def test_curve_from_j_round_trip():
    F = QuadField(11)
    rng = random.Random(9)
    for _ in range(20):
        j = (rng.randrange(11), rng.randrange(11))
        if j in ((0, 0), (1728 % 11, 0)):
            continue
        A, B = curve_from_j(F, j)
        # j(E) = 1728 * 4A^3 / (4A^3 + 27B^2)
        a3 = F.smul(4, F.mul(A, F.mul(A, A)))
        disc = F.add(a3, F.smul(27, F.mul(B, B)))
        back = F.smul(1728, F.mul(a3, F.inv(disc)))
        assert back == j


def test_point_count_supersingular_trace():
    # j = 0 is supersingular mod 5; over F_25 the trace must be +-10
    F = QuadField(5)
    A, B = curve_from_j(F, (0, 0))
    assert point_count(F, A, B) in (16, 36)


def test_cross_validate_matching_levels():
    for N in (11, 23, 37):
        classes, coll = pipeline(N)
        rep = cross_validate(classes, coll)
        assert rep["j_count"] == classes.n
        assert rep["level_fixed_points"] == rep["rational_count"]
        assert len(rep["j_invariants"]) == classes.n
        assert rep["automorphism_match"]["j0"] == (N % 3 == 2)
        assert rep["automorphism_match"]["j1728"] == (N % 4 == 3)


def test_cross_validate_level_23_rational_points():
    classes, coll = pipeline(23)
    rep = cross_validate(classes, coll)
    # weights 1, 2, 3 pair with three rational j, including 0 and 1728
    assert rep["rational_count"] == 3
    assert sorted(classes.weights) == [1, 2, 3]


def test_cross_validate_rejects_wrong_set():
    classes, coll = pipeline(11)
    with pytest.raises(ConsistencyError):
        cross_validate(classes, coll, ss=supersingular_set(13))
