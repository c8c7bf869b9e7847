"""Dimensions and eigenform bases of the theta spaces.

For each class index i the row space of (theta_ij)_j inside the space of
weight-2 forms has an exactly computable dimension: the rank of the integer
coefficient matrix (B(m)_ij)_{j,m}.  The spectral side predicts the same
number as |Sigma(i)| = #{k : ([i], f_k) != 0}; the two must agree, and the
eigenforms labelled by Sigma(i) are a basis.

All headline dimensions come from fraction-free integer rank; the numeric
set Sigma(i) is reconciled against that rank and never trusted on its own.
"""

import random
from itertools import combinations

from .intmat import (charpoly, divides_exactly, exact_rank,
                     is_irreducible_mod, poly_is_squarefree)
from .quatalg import ConsistencyError, is_prime
from .spectral import jacobi_eigensystem, sigma_level, sturm_bound, symmetrize

SIGMA_TOL = 1e-6
SERIES_TOL = 1e-6


def dim_theta_exact(coll, i):
    """Exact dimension of the span of row i's theta series.

    Rank over Q of the n x M integer matrix whose row j holds the
    coefficients B(1)_ij .. B(M)_ij of theta_ij; constant terms are
    determined by the rest and carry no information.
    """
    M = coll.bound
    if M < sturm_bound(coll.level):
        raise ValueError(
            f"need at least {sturm_bound(coll.level)} coefficients, have {M}")
    rows = [[coll.matrix(m)[i][j] for m in range(1, M + 1)]
            for j in range(coll.n)]
    return exact_rank(rows)


def full_span_check(coll):
    """All n^2 theta series together span the full n-dimensional space."""
    M = coll.bound
    if M < sturm_bound(coll.level):
        raise ValueError(
            f"need at least {sturm_bound(coll.level)} coefficients, have {M}")
    rows = [[coll.matrix(m)[i][j] for m in range(1, M + 1)]
            for i in range(coll.n) for j in range(coll.n)]
    rank = exact_rank(rows)
    return rank == coll.n, rank


def sigma_set(spec, i, tol=SIGMA_TOL, target=None):
    """Labels k (1-based) with ([i], f_k) != 0, decided at tolerance tol.

    The pairing values are w_i * f_ik; a value counts as nonzero when it
    exceeds tol times the largest pairing value of that eigenvector.  When
    the expected cardinality (the exact rank) is supplied, a mismatch moves
    tol by decades up to three times before giving up.
    """
    n = spec.n
    w = spec.weights

    def pick(t):
        labels = set()
        for k in range(n):
            vals = [abs(w[a] * spec.eigenvectors[k][a]) for a in range(n)]
            scale = max(vals)
            if vals[i] > t * scale:
                labels.add(k + 1)
        return labels

    labels = pick(tol)
    if target is None or len(labels) == target:
        return labels
    t = tol
    for _ in range(3):
        t = t / 10.0 if len(labels) < target else t * 10.0
        labels = pick(t)
        if len(labels) == target:
            return labels
    raise ConsistencyError(
        f"Sigma({i + 1}) has {len(labels)} labels but exact rank is {target}")


def verify_expansion_identities(coll, spec, i, j):
    """Largest coefficient residual of the two expansion identities at (i,j).

    Identity (2): w_i B(m)_ij = sum_k ([j],f_k)([i],f_k) alpha_k(T_m).
    Identity (1): ([i],f_k) alpha_k(T_m) = w_i sum_l (f_k)_l B(m)_il.
    Returns (residual, scale) with scale = max |w_i B(m)_ij| over m.
    """
    n = spec.n
    w = spec.weights
    worst = 0.0
    scale = 1.0
    for m in range(1, coll.bound + 1):
        B = coll.matrix(m)
        lhs = float(w[i] * B[i][j])
        scale = max(scale, abs(lhs))
        rhs = sum((w[j] * spec.eigenvectors[k][j]) *
                  (w[i] * spec.eigenvectors[k][i]) * spec.character(k, m)
                  for k in range(n))
        worst = max(worst, abs(lhs - rhs))
        for k in range(n):
            one_lhs = w[i] * spec.eigenvectors[k][i] * spec.character(k, m)
            one_rhs = w[i] * sum(spec.eigenvectors[k][l] * B[i][l]
                                 for l in range(n))
            worst = max(worst, abs(one_lhs - one_rhs))
    return worst, scale


def atkin_lehner_rho(spec, coll, dims):
    """rho and the per-fixed-point dimension bound.

    rho counts cuspidal eigenforms with B(N)-eigenvalue -1.  For every i
    fixed by the level involution (B(N)_ii = 1) the theta space must miss
    at least rho eigenforms: n - dim_i >= rho.
    """
    BN = coll.matrix(coll.level)
    rho = sum(1 for s in spec.tn_signs if s == -1)
    checks = []
    for i in range(coll.n):
        if BN[i][i] == 1:
            checks.append((i, coll.n - dims[i] >= rho))
    return rho, checks


def _restrict_to_kernel(B):
    """Action of B on ker(sum of coordinates), basis e_1 - e_k, k = 2..n."""
    n = len(B)
    return [[B[l][k] - B[l][0] for k in range(1, n)] for l in range(1, n)]


def _combo_matrix(coll, primes, coeffs):
    n = coll.n
    T = [[0] * n for _ in range(n)]
    for p, c in zip(primes, coeffs):
        B = coll.matrix(p)
        for a in range(n):
            for b in range(n):
                T[a][b] += c * B[a][b]
    return T


def _numeric_roots(coll, T, eis_value):
    """Eigenvalues of T on the kernel, via the symmetrized full matrix."""
    vals, _ = jacobi_eigensystem(symmetrize(T, coll.weights))
    vals = sorted(vals)
    drop = min(range(len(vals)), key=lambda a: abs(vals[a] - eis_value))
    return [v for a, v in enumerate(vals) if a != drop]


def _product_certificate(f, roots, subset_cap=20000):
    """Monic integer factor of f recovered from a subset of numeric roots.

    Expands prod (x - root) over subsets in deterministic order (small
    subsets first); a rounded coefficient vector only counts if it divides
    f exactly over Z.
    """
    d = len(roots)
    tried = 0
    for size in range(1, d):
        for subset in combinations(range(d), size):
            tried += 1
            if tried > subset_cap:
                return None
            poly = [1.0]
            for a in subset:
                root = roots[a]
                poly = [0.0] + poly
                for t in range(len(poly) - 1):
                    poly[t] -= root * poly[t + 1]
            coeffs = [round(c) for c in poly]
            if max(abs(c - r) for c, r in zip(poly, coeffs)) > 1e-3:
                continue
            g = [int(c) for c in coeffs]
            if divides_exactly(g, f):
                return g
    return None


def hecke_field_probe(coll, seed=0):
    """Decide whether the cuspidal Hecke algebra spans a single field.

    Returns ("field", detail), ("product", detail) or ("inconclusive",
    detail).  A "field" verdict is certified by irreducibility mod p of the
    exact characteristic polynomial of a generic Hecke combination on the
    augmentation kernel; "product" by an exact integer factorization viewed
    off the numeric spectrum.  With n <= 2 the kernel algebra has degree
    at most 1 and the verdict is "field" by convention.
    """
    n = coll.n
    N = coll.level
    if n <= 2:
        return "field", f"degree {n - 1} is trivially a field"
    primes = [p for p in range(2, coll.bound + 1) if is_prime(p) and p != N][:4]
    rng = random.Random(seed)
    last = "no squarefree combination found"
    for _ in range(3):
        coeffs = [rng.randrange(1, 10) for _ in primes]
        T = _combo_matrix(coll, primes, coeffs)
        f = charpoly(_restrict_to_kernel(T))
        if not poly_is_squarefree(f):
            continue
        p = 2
        tried = 0
        while tried < 60:
            if is_prime(p):
                tried += 1
                if is_irreducible_mod(f, p):
                    return "field", f"charpoly irreducible mod {p}"
            p += 1
        eis_value = sum(c * sigma_level(q, N) for q, c in zip(primes, coeffs))
        roots = _numeric_roots(coll, T, eis_value)
        g = _product_certificate(f, roots)
        if g is not None:
            return "product", (f"charpoly has exact factor of degree "
                               f"{len(g) - 1}")
        last = "reducibility suspected but no exact factor recovered"
    return "inconclusive", last


class ThetaReport:
    """Per-level digest of the theta-space structure."""

    def __init__(self, level, n, weights, dims, sigma_sets, rho,
                 frobenius_fixed, field_verdict, field_detail, checks):
        self.level = level
        self.n = n
        self.weights = weights
        self.dims = dims
        self.sigma_sets = sigma_sets
        self.rho = rho
        self.frobenius_fixed = frobenius_fixed
        self.field_verdict = field_verdict
        self.field_detail = field_detail
        self.checks = checks

    @property
    def hecke_conjecture_holds(self):
        return all(d == self.n for d in self.dims)

    def basis_labels(self, i):
        return sorted(self.sigma_sets[i])


def build_report(coll, spec, probe_seed=0):
    """Assemble the full report, reconciling numeric sets with exact ranks."""
    n = coll.n
    checks = []

    dims = [dim_theta_exact(coll, i) for i in range(n)]
    sigma_sets = [sigma_set(spec, i, target=dims[i]) for i in range(n)]
    checks.append(("theta-rank-consistency",
                   all(len(sigma_sets[i]) == dims[i] for i in range(n)),
                   f"dims {dims}"))

    eis_label = spec.eisenstein_index + 1
    eis_ok = all(eis_label in s for s in sigma_sets)
    checks.append(("theta-eisenstein-membership", eis_ok,
                   f"label {eis_label} present in every Sigma(i)"))

    worst = 0.0
    ok32 = True
    for i in range(n):
        for j in range(n):
            resid, scale = verify_expansion_identities(coll, spec, i, j)
            worst = max(worst, resid / scale)
            if resid > SERIES_TOL * scale:
                ok32 = False
    checks.append(("eigenform-expansion", ok32,
                   f"max scaled residual {worst:.2e}"))

    span_ok, rank = full_span_check(coll)
    checks.append(("theta-full-span", span_ok, f"joint rank {rank} of n={n}"))

    rho, bound_checks = atkin_lehner_rho(spec, coll, dims)
    fixed = [i for i, _ in bound_checks]
    checks.append(("atkin-lehner-bound", all(ok for _, ok in bound_checks),
                   f"rho={rho}, fixed classes {[i + 1 for i in fixed]}"))

    verdict, detail = hecke_field_probe(coll, seed=probe_seed)
    if verdict == "field":
        field_ok = all(d == n for d in dims)
        checks.append(("field-verdict-dimensions", field_ok,
                       "field verdict forces full theta spaces"))

    return ThetaReport(coll.level, n, coll.weights, dims,
                       [sorted(s) for s in sigma_sets], rho,
                       [i + 1 for i in fixed], verdict, detail, checks)
