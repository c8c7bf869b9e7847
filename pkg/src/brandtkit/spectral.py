"""Spectral decomposition of the Brandt matrix family.

The class module carries the pairing ([i],[j]) = w_i delta_ij.  All B(m)
are self-adjoint for it, so D^{1/2} B D^{-1/2} with D = diag(w) is an honest
symmetric matrix.  A generic integer combination of the B(p) is diagonalized
with a cyclic Jacobi sweep and the resulting frame is shared by the whole
family; eigenvalues of the individual B(m) come back as Rayleigh quotients.

Everything numeric is double precision with explicit residual checks at
1e-8; the Eisenstein eigenvector is additionally verified in exact rational
arithmetic, since it is known in closed form: coordinates 1/w_i.
"""

import random
from fractions import Fraction
from math import sqrt

from .intmat import exact_rank  # noqa: F401  (re-exported; it is spectral API)
from .quatalg import ConsistencyError, is_prime

RESIDUAL_TOL = 1e-8
ORTHO_TOL = 1e-9


def sigma_level(m, N):
    """Sum of divisors of m that are prime to N."""
    s = 0
    for d in range(1, m + 1):
        if m % d == 0 and d % N != 0:
            s += d
    return s


def sturm_bound(N):
    """Coefficient prefix length that pins down a weight-2 form of level N."""
    return (N + 1) // 6 + 1


def augmentation(vec):
    return sum(vec)


def monodromy_pairing(x, y, weights):
    return sum(w * a * b for w, a, b in zip(weights, x, y))


def eisenstein_vector(weights):
    """The exact ray spanned by sum_i (1/w_i)[i], plus its unit vector.

    Returns (exact, unit): exact has Fraction coordinates 1/w_i, unit is the
    float vector normalized to pairing-norm 1 (all coordinates positive).
    """
    exact = [Fraction(1, w) for w in weights]
    norm2 = sum(Fraction(1, w) for w in weights)  # sum w*(1/w)^2
    scale = 1.0 / sqrt(float(norm2))
    unit = [float(x) * scale for x in exact]
    return exact, unit


def eisenstein_exact_check(coll):
    """B(m) (1/w_j)_j = sigma(m) (1/w_i)_i in exact rationals, every stored m."""
    w = coll.weights
    v = [Fraction(1, wi) for wi in w]
    for m in coll.available():
        B = coll.matrix(m)
        target = sigma_level(m, coll.level)
        for i in range(coll.n):
            s = sum(B[i][j] * v[j] for j in range(coll.n))
            if s != target * v[i]:
                return False, f"Eisenstein identity failed at m={m}, row {i + 1}"
    return True, "exact rational eigenvector for every stored B(m)"


def symmetrize(B, weights):
    """D^{1/2} B D^{-1/2}; exact weighted symmetry is checked first."""
    n = len(weights)
    for i in range(n):
        for j in range(n):
            if weights[i] * B[i][j] != weights[j] * B[j][i]:
                raise ConsistencyError("matrix is not self-adjoint for the pairing")
    roots = [sqrt(float(wi)) for wi in weights]
    return [[roots[i] * float(B[i][j]) / roots[j] for j in range(n)]
            for i in range(n)]


def jacobi_eigensystem(S, tol=1e-13, max_sweeps=64):
    """Cyclic Jacobi on a symmetric matrix: (eigenvalues, eigenvector columns)."""
    n = len(S)
    A = [row[:] for row in S]
    V = [[1.0 if i == j else 0.0 for j in range(n)] for i in range(n)]
    scale = max(abs(A[i][j]) for i in range(n) for j in range(n)) or 1.0
    for _ in range(max_sweeps):
        off = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                off = max(off, abs(A[i][j]))
        if off <= tol * scale:
            break
        for p in range(n):
            for q in range(p + 1, n):
                if abs(A[p][q]) <= 1e-300:
                    continue
                theta = (A[q][q] - A[p][p]) / (2.0 * A[p][q])
                t = (1.0 if theta >= 0 else -1.0) / (
                    abs(theta) + sqrt(theta * theta + 1.0))
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp, akq = A[k][p], A[k][q]
                    A[k][p] = c * akp - s * akq
                    A[k][q] = s * akp + c * akq
                for k in range(n):
                    apk, aqk = A[p][k], A[q][k]
                    A[p][k] = c * apk - s * aqk
                    A[q][k] = s * apk + c * aqk
                for k in range(n):
                    vkp, vkq = V[k][p], V[k][q]
                    V[k][p] = c * vkp - s * vkq
                    V[k][q] = s * vkp + c * vkq
    eigvals = [A[i][i] for i in range(n)]
    eigvecs = [[V[i][k] for i in range(n)] for k in range(n)]
    return eigvals, eigvecs


class SpectralData:
    """Shared eigenframe of a Brandt family.

    eigenvectors[k] is f_k in class coordinates (pairing-orthonormal), with
    the Eisenstein vector last.  characters[k][m-1] approximates the
    eigenvalue of B(m) on f_k; tn_sign[k] is the exact +-1 eigenvalue of
    B(N) on a cuspidal f_k (None for the Eisenstein one).
    """

    def __init__(self, level, weights, eigenvectors, characters, char_stored,
                 tn_signs, eisenstein_index, max_residual, seed, combo):
        self.level = level
        self.weights = weights
        self.eigenvectors = eigenvectors
        self.characters = characters
        self.char_stored = char_stored
        self.tn_signs = tn_signs
        self.eisenstein_index = eisenstein_index
        self.max_residual = max_residual
        self.seed = seed
        self.combo = combo

    @property
    def n(self):
        return len(self.weights)

    def character(self, k, m):
        """Eigenvalue of B(m) on f_k; m must be stored or within the bound."""
        if m in self.char_stored[k]:
            return self.char_stored[k][m]
        return self.characters[k][m - 1]

    def pairing_with_class(self, i, k):
        """([i], f_k) = w_i * (f_k)_i."""
        return self.weights[i] * self.eigenvectors[k][i]


def character_qexpansion(spec, k, bound=None):
    """Coefficient list a_1..a_M of the eigenform attached to f_k."""
    row = spec.characters[k]
    if bound is None:
        return list(row)
    return list(row[:bound])


def _mat_inf_norm(B):
    return max(sum(abs(float(x)) for x in row) for row in B)


def _apply(B, v):
    return [sum(float(B[i][j]) * v[j] for j in range(len(v)))
            for i in range(len(v))]


def eigendecompose(coll, seed=0):
    """Diagonalize the whole family off one generic combination of the B(p).

    Retries with fresh pseudo-random combinations (still derived from the
    seed) up to three times if the frame fails its residual checks, then
    gives up loudly.
    """
    n = coll.n
    N = coll.level
    primes = [p for p in range(2, coll.bound + 1) if is_prime(p) and p != N]
    if not primes and n > 1:
        raise ConsistencyError("no primes available for the generic combination")
    rng = random.Random(seed)
    last_err = None
    for _ in range(3):
        coeffs = [rng.randrange(1, 10) for _ in primes[:4]]
        try:
            return _decompose_once(coll, primes[:4], coeffs, seed)
        except ConsistencyError as err:
            last_err = err
    raise ConsistencyError(f"eigenframe failed three attempts: {last_err}")


def _decompose_once(coll, primes, coeffs, seed):
    n = coll.n
    N = coll.level
    weights = coll.weights
    roots = [sqrt(float(w)) for w in weights]

    if n == 1:
        vec = [1.0 / roots[0]]
        chars = [[float(sigma_level(m, N)) for m in range(1, coll.bound + 1)]]
        stored = [{m: float(sigma_level(m, N)) for m in coll.available()}]
        return SpectralData(N, weights, [vec], chars, stored, [None], 0, 0.0,
                            seed, {"primes": [], "coeffs": []})

    combo = [[0.0] * n for _ in range(n)]
    for p, c in zip(primes, coeffs):
        S = symmetrize(coll.matrix(p), weights)
        for i in range(n):
            for j in range(n):
                combo[i][j] += c * S[i][j]
    eigvals, eigvecs = jacobi_eigensystem(combo)

    # orthonormality of the returned frame
    for a in range(n):
        for b in range(a, n):
            dot = sum(eigvecs[a][i] * eigvecs[b][i] for i in range(n))
            want = 1.0 if a == b else 0.0
            if abs(dot - want) > ORTHO_TOL:
                raise ConsistencyError("Jacobi frame is not orthonormal")

    # back to class coordinates, sign-fixed
    vectors = []
    for u in eigvecs:
        f = [u[i] / roots[i] for i in range(n)]
        lead = max(abs(x) for x in f)
        for x in f:
            if abs(x) > 1e-8 * lead:
                if x < 0:
                    f = [-y for y in f]
                break
        vectors.append(f)

    # characters for every stored matrix, with residual control
    ms = coll.available()
    sym = {m: symmetrize(coll.matrix(m), weights) for m in ms}
    max_residual = 0.0
    char_map = []
    for k, u in enumerate(eigvecs):
        row = {}
        for m in ms:
            Sm = sym[m]
            Su = _apply(Sm, u)
            alpha = sum(u[i] * Su[i] for i in range(n))
            resid = max(abs(Su[i] - alpha * u[i]) for i in range(n))
            norm = _mat_inf_norm(Sm) or 1.0
            if resid > RESIDUAL_TOL * norm:
                raise ConsistencyError(
                    f"residual {resid:.2e} too large at m={m} (combination "
                    "not generic enough)")
            max_residual = max(max_residual, resid / norm)
            row[m] = alpha
        char_map.append(row)

    # the characters must be pairwise distinct on the stored range
    for a in range(n):
        for b in range(a + 1, n):
            gap = max(abs(char_map[a][m] - char_map[b][m]) for m in ms)
            if gap < 1e-6:
                raise ConsistencyError("two eigenvectors share a character")

    # locate the Eisenstein ray: all coordinates strictly positive
    eis = [k for k, f in enumerate(vectors) if all(x > 0 for x in f)]
    if len(eis) != 1:
        raise ConsistencyError(f"{len(eis)} all-positive eigenvectors, wanted 1")
    eis_k = eis[0]
    for m in ms:
        if abs(char_map[eis_k][m] - sigma_level(m, N)) > 1e-6 * max(
                1.0, sigma_level(m, N)):
            raise ConsistencyError("Eisenstein character mismatch")

    # exact closed form beats the numeric copy
    _, eis_unit = eisenstein_vector(weights)
    vectors[eis_k] = eis_unit
    for m in ms:
        char_map[eis_k][m] = float(sigma_level(m, N))

    # cuspidal T_N eigenvalues must be +-1
    tn = {}
    for k in range(n):
        if k == eis_k:
            tn[k] = None
            continue
        val = char_map[k][N]
        sign = 1 if val > 0 else -1
        if abs(val - sign) > 1e-6:
            raise ConsistencyError(f"B(N) eigenvalue {val} is not +-1")
        tn[k] = sign

    # Ramanujan bound for cuspidal characters at primes away from N
    for k in range(n):
        if k == eis_k:
            continue
        for p in range(2, coll.bound + 1):
            if is_prime(p) and p != N:
                if abs(char_map[k][p]) > 2 * sqrt(p) + 1e-6:
                    raise ConsistencyError(
                        f"cuspidal eigenvalue at p={p} breaks the Ramanujan bound")

    # deterministic ordering: cusp forms sorted by character, Eisenstein
    # last; rounding the key keeps ties immune to eigensolver noise
    order = [k for k in range(n) if k != eis_k]
    order.sort(key=lambda k: tuple(round(char_map[k][m], 9) for m in ms))
    order.append(eis_k)

    eigenvectors = [vectors[k] for k in order]
    characters = []
    char_stored = []
    tn_signs = []
    for k in order:
        characters.append([char_map[k][m] for m in range(1, coll.bound + 1)])
        char_stored.append(dict(char_map[k]))
        tn_signs.append(tn[k])
    return SpectralData(N, weights, eigenvectors, characters, char_stored,
                        tn_signs, n - 1, max_residual, seed,
                        {"primes": list(primes), "coeffs": list(coeffs)})
