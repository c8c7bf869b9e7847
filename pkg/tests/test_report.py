from fractions import Fraction

import pytest

from brandtkit.brandt import BrandtCollection
from brandtkit.ideals import enumerate_classes
from brandtkit.orders import maximal_order
from brandtkit.quatalg import ConsistencyError, construct_algebra
from brandtkit.report import (SERIES_TOL, atkin_lehner_rho, build_report,
                              dim_theta_exact, full_span_check,
                              hecke_field_probe, sigma_set,
                              verify_expansion_identities)
from brandtkit.spectral import eigendecompose, sigma_level

_cache = {}


def pipeline(N, bound=9):
    key = (N, bound)
    if key not in _cache:
        classes = enumerate_classes(maximal_order(construct_algebra(N)),
                                    level=N)
        coll = BrandtCollection(classes, bound=bound)
        _cache[key] = (coll, eigendecompose(coll, seed=0))
    return _cache[key]


def star_class(coll):
    """The class fixed by the level involution (unique at N=37)."""
    BN = coll.matrix(coll.level)
    fixed = [i for i in range(coll.n) if BN[i][i] == 1]
    assert len(fixed) == 1
    return fixed[0]


def test_dims_level_11():
    coll, _ = pipeline(11)
    assert [dim_theta_exact(coll, i) for i in range(2)] == [2, 2]


def test_dims_level_37():
    coll, _ = pipeline(37)
    star = star_class(coll)
    dims = [dim_theta_exact(coll, i) for i in range(3)]
    assert dims[star] == 2
    assert sorted(dims) == [2, 3, 3]


def test_dim_raises_below_sturm():
    classes = enumerate_classes(maximal_order(construct_algebra(11)), level=11)
    thin = BrandtCollection(classes, bound=2)
    with pytest.raises(ValueError):
        dim_theta_exact(thin, 0)
    with pytest.raises(ValueError):
        full_span_check(thin)


def test_sigma_sets_level_37():
    coll, spec = pipeline(37)
    star = star_class(coll)
    # label 1 is the a_2 = -2 eigenform; the fixed class omits exactly it
    assert sigma_set(spec, star) == {2, 3}
    for i in range(3):
        if i != star:
            assert sigma_set(spec, i) == {1, 2, 3}


def test_sigma_set_target_reconciliation():
    coll, spec = pipeline(37)
    star = star_class(coll)
    assert sigma_set(spec, star, target=2) == {2, 3}
    with pytest.raises(ConsistencyError):
        sigma_set(spec, star, target=0)


def test_expansion_identities_within_tolerance():
    for N in (11, 37):
        coll, spec = pipeline(N)
        for i in range(coll.n):
            for j in range(coll.n):
                resid, scale = verify_expansion_identities(coll, spec, i, j)
                assert resid <= SERIES_TOL * scale, (N, i, j, resid)


def test_explicit_relations_level_11():
    # theta_11 = (2/5) f_1 + (3/5) f_2, theta_12 = -(3/5) f_1 + (3/5) f_2
    coll, spec = pipeline(11)
    perm = sorted(range(2), key=lambda i: coll.weights[i])
    i1, i2 = perm[0], perm[1]
    for m in range(1, 10):
        a = spec.characters[0][m - 1]
        s = sigma_level(m, 11)
        t11 = coll.matrix(m)[i1][i1]
        t12 = coll.matrix(m)[i1][i2]
        assert abs(t11 - (0.4 * a + 0.6 * s)) < 1e-8
        assert abs(t12 - (-0.6 * a + 0.6 * s)) < 1e-8
    # constant terms: 1/4 = (3/5)(5/12)
    assert Fraction(3, 5) * Fraction(5, 12) == Fraction(1, 4)


def test_explicit_relations_level_37():
    # theta_11 = (2/3) g + (1/3) e, theta_12 = theta_13 = -(1/3) g + (1/3) e
    # with g the a_2 = 0 eigenform (label 2) and e the Eisenstein series
    coll, spec = pipeline(37)
    star = star_class(coll)
    others = [j for j in range(3) if j != star]
    for m in range(1, 10):
        g = spec.characters[1][m - 1]
        e = sigma_level(m, 37)
        B = coll.matrix(m)
        assert abs(B[star][star] - (2 * g + e) / 3.0) < 1e-8
        assert B[star][others[0]] == B[star][others[1]]
        assert abs(B[star][others[0]] - (e - g) / 3.0) < 1e-8


def test_atkin_lehner_rho_level_11():
    coll, spec = pipeline(11)
    # B(11) is forced to the identity by weighted symmetry (weights 2 != 3)
    assert coll.matrix(11) == [[1, 0], [0, 1]]
    rho, checks = atkin_lehner_rho(spec, coll,
                                   [dim_theta_exact(coll, i) for i in range(2)])
    assert rho == 0
    assert [i for i, _ in checks] == [0, 1]
    assert all(ok for _, ok in checks)


def test_atkin_lehner_rho_level_37():
    coll, spec = pipeline(37)
    star = star_class(coll)
    dims = [dim_theta_exact(coll, i) for i in range(3)]
    rho, checks = atkin_lehner_rho(spec, coll, dims)
    assert rho == 1
    assert checks == [(star, True)]


def test_full_span_levels():
    classes = enumerate_classes(maximal_order(construct_algebra(2)), level=2)
    coll2 = BrandtCollection(classes, bound=3)
    assert full_span_check(coll2) == (True, 1)
    for N in (11, 37):
        coll, _ = pipeline(N)
        ok, rank = full_span_check(coll)
        assert ok and rank == coll.n


def test_probe_trivial_for_two_classes():
    coll, _ = pipeline(11)
    verdict, detail = hecke_field_probe(coll)
    assert verdict == "field"
    assert "trivially" in detail


def test_probe_field_verdicts():
    for N in (23, 41):
        coll, _ = pipeline(N)
        verdict, detail = hecke_field_probe(coll, seed=0)
        assert verdict == "field", (N, detail)
        assert "irreducible mod" in detail


def test_probe_product_verdict_level_37():
    coll, _ = pipeline(37)
    verdict, detail = hecke_field_probe(coll, seed=0)
    assert verdict == "product"
    assert "degree 1" in detail


def test_build_report_level_11():
    coll, spec = pipeline(11)
    rep = build_report(coll, spec)
    assert rep.dims == [2, 2]
    assert rep.hecke_conjecture_holds
    assert rep.rho == 0
    assert rep.frobenius_fixed == [1, 2]
    assert rep.field_verdict == "field"
    assert all(ok for _, ok, _ in rep.checks)
    assert rep.basis_labels(0) == [1, 2]


def test_build_report_level_37():
    coll, spec = pipeline(37)
    star = star_class(coll)
    rep = build_report(coll, spec)
    assert not rep.hecke_conjecture_holds
    assert rep.dims[star] == 2
    assert rep.rho == 1
    assert rep.frobenius_fixed == [star + 1]
    assert rep.field_verdict == "product"
    assert rep.basis_labels(star) == [2, 3]
    assert all(ok for _, ok, _ in rep.checks)
    names = [name for name, _, _ in rep.checks]
    assert "field-verdict-dimensions" not in names


def test_report_check_names_stable():
    coll, spec = pipeline(11)
    rep = build_report(coll, spec)
    names = [name for name, _, _ in rep.checks]
    assert names == ["theta-rank-consistency", "theta-eisenstein-membership",
                     "eigenform-expansion", "theta-full-span",
                     "atkin-lehner-bound", "field-verdict-dimensions"]
