"""Rank-4 lattices inside a definite quaternion algebra.

A lattice is stored as a primitive pair (mat, den): four HNF basis rows of
integers over the coordinate basis 1, i, j, k, divided by a common positive
denominator.  That representation is canonical, so lattice equality is just
tuple equality.

Vector counting follows the usual hybrid: a floating-point LDL^T of the Gram
matrix proposes candidate boxes (slightly inflated), and every candidate is
accepted or rejected with an exact integer evaluation of the norm form.
Counts are cached per lattice up to the largest bound requested so far.
"""

from fractions import Fraction
from math import ceil, floor, gcd, sqrt

from .intmat import hnf, mat_inv
from .quatalg import ConsistencyError, QuatElement, bilin4, mul4, norm4


class QuatLattice:
    """Full lattice (rank 4) in a definite quaternion algebra."""

    __slots__ = ("alg", "mat", "den", "_inv", "_content", "_gram_int",
                 "_count_bound", "_counts")

    def __init__(self, alg, mat, den):
        if den == 0:
            raise ValueError("denominator must be nonzero")
        if den < 0:
            den = -den
        g = den
        for row in mat:
            for x in row:
                g = gcd(g, x)
        if g > 1:
            den //= g
            mat = [[x // g for x in row] for row in mat]
        self.alg = alg
        self.mat = tuple(tuple(row) for row in mat)
        self.den = den
        self._inv = None
        self._content = None
        self._gram_int = None
        self._count_bound = -1
        self._counts = None

    # -- construction ------------------------------------------------------

    @classmethod
    def from_rows(cls, alg, rows, den=1):
        """Lattice spanned by integer coordinate rows / den."""
        reduced = hnf(rows)
        if len(reduced) != 4:
            raise ValueError("generators span a rank-deficient lattice")
        return cls(alg, reduced, den)

    @classmethod
    def from_generators(cls, alg, elements):
        """Lattice spanned by QuatElements (their Z-span must have rank 4)."""
        den = 1
        for e in elements:
            for c in e.coords:
                den = den * c.denominator // gcd(den, c.denominator)
        rows = [[int(c * den) for c in e.coords] for e in elements]
        return cls.from_rows(alg, rows, den)

    # -- basic accessors ----------------------------------------------------

    def basis_elements(self):
        return [QuatElement(self.alg, tuple(Fraction(x, self.den) for x in row))
                for row in self.mat]

    def inv_mat(self):
        if self._inv is None:
            self._inv = mat_inv([list(r) for r in self.mat])
        return self._inv

    def gram_int(self):
        """Integer Gram matrix of the norm form on the rows of mat
        (denominator den^2 is carried separately)."""
        if self._gram_int is None:
            a, b = self.alg.a, self.alg.b
            self._gram_int = [[bilin4(a, b, ri, rj) for rj in self.mat]
                              for ri in self.mat]
        return self._gram_int

    def gram(self):
        d2 = self.den * self.den
        return [[Fraction(x, d2) for x in row] for row in self.gram_int()]

    def content_int(self):
        """gcd of the integer norm form values on the row lattice."""
        if self._content is None:
            a, b = self.alg.a, self.alg.b
            g = 0
            G = self.gram_int()
            for r in range(4):
                g = gcd(g, G[r][r])
                for s in range(r):
                    g = gcd(g, 2 * G[r][s])
            if g == 0:
                raise ConsistencyError("degenerate norm form on a lattice")
            self._content = g
        return self._content

    def content(self):
        """Normalized content: the positive rational c with N(x)/c integral
        and coprime over the lattice."""
        return Fraction(self.content_int(), self.den * self.den)

    def norm_value(self, introw):
        """Q(x)/content for an integer coordinate row of this lattice."""
        v = norm4(self.alg.a, self.alg.b, introw)
        c = self.content_int()
        if v % c:
            raise ConsistencyError("norm value not divisible by the content")
        return v // c

    def contains(self, elem):
        coords = elem.coords if isinstance(elem, QuatElement) else elem
        inv = self.inv_mat()
        for col in range(4):
            s = sum(Fraction(coords[k]) * inv[k][col] for k in range(4))
            if (s * self.den).denominator != 1:
                return False
        return True

    def coordinates(self, elem):
        """Integer coordinates of elem in this basis (raises if not a member)."""
        coords = elem.coords if isinstance(elem, QuatElement) else elem
        inv = self.inv_mat()
        out = []
        for col in range(4):
            s = sum(Fraction(coords[k]) * inv[k][col] for k in range(4)) * self.den
            if s.denominator != 1:
                raise ValueError("element is not in the lattice")
            out.append(int(s))
        return out

    def scaled(self, c):
        c = Fraction(c)
        mat = [[x * c.numerator for x in row] for row in self.mat]
        return QuatLattice(self.alg, mat, self.den * c.denominator)

    def conjugated(self):
        rows = [(r[0], -r[1], -r[2], -r[3]) for r in self.mat]
        return QuatLattice.from_rows(self.alg, [list(r) for r in rows], self.den)

    def __eq__(self, other):
        return (isinstance(other, QuatLattice) and self.alg == other.alg
                and self.den == other.den and self.mat == other.mat)

    def __hash__(self):
        return hash((self.alg, self.den, self.mat))

    def __repr__(self):
        return f"QuatLattice(den={self.den}, mat={[list(r) for r in self.mat]})"

    # -- vector counting ----------------------------------------------------

    def counts_up_to(self, bound):
        """dict m -> #{x in L : Q(x)/content = m} for 0 <= m <= bound."""
        if bound <= self._count_bound:
            return self._counts
        counts = _count_by_value(self.gram_int(), self.content_int(), bound)
        self._count_bound = bound
        self._counts = counts
        return counts

    def count_vectors(self, m):
        """#{x in L : Q(x) = m * content}."""
        if m < 0:
            return 0
        bound = m if m > self._count_bound else self._count_bound
        return self.counts_up_to(bound).get(m, 0)

    def theta_coefficients(self, bound):
        counts = self.counts_up_to(bound)
        return [counts.get(m, 0) for m in range(bound + 1)]


def _gso(A):
    """Exact Gram-Schmidt data (mu, B) from a Gram matrix alone."""
    n = len(A)
    mu = [[Fraction(0)] * n for _ in range(n)]
    B = [Fraction(0)] * n
    s = [[Fraction(0)] * n for _ in range(n)]  # s[i][j] = b_i . b*_j
    for i in range(n):
        for j in range(i + 1):
            v = Fraction(A[i][j])
            for t in range(j):
                v -= mu[j][t] * s[i][t]
            s[i][j] = v
            if j < i:
                mu[i][j] = v / B[j]
            else:
                B[i] = v
    return mu, B


def _gram_row_op(A, k, j, r):
    """Gram update for b_k <- b_k - r b_j."""
    n = len(A)
    for t in range(n):
        A[k][t] -= r * A[j][t]
    for t in range(n):
        A[t][k] -= r * A[t][j]


def _lll_gram(G, delta=Fraction(99, 100)):
    """LLL-reduced Gram matrix, computed exactly on the Gram alone.

    HNF bases of ideal products can be skew enough (entries ~N^2 apart)
    that a float Cholesky descent on the raw Gram silently loses boundary
    vectors; counting on the reduced Gram is equivalent and conditions the
    float stage to harmless error levels.
    """
    A = [list(row) for row in G]
    n = len(A)
    k = 1
    while k < n:
        mu, B = _gso(A)
        changed = False
        for j in range(k - 1, -1, -1):
            r = round(mu[k][j])
            if r:
                _gram_row_op(A, k, j, r)
                changed = True
        if changed:
            mu, B = _gso(A)
        if B[k] >= (delta - mu[k][k - 1] ** 2) * B[k - 1]:
            k += 1
        else:
            A[k], A[k - 1] = A[k - 1], A[k]
            for row in A:
                row[k], row[k - 1] = row[k - 1], row[k]
            k = max(k - 1, 1)
    return A


def _ldl(G):
    """Floating LDL^T of a symmetric positive definite 4x4 matrix."""
    n = len(G)
    L = [[0.0] * n for _ in range(n)]
    D = [0.0] * n
    for i in range(n):
        for j in range(i):
            s = float(G[i][j])
            for k in range(j):
                s -= L[i][k] * L[j][k] * D[k]
            L[i][j] = s / D[j] if D[j] else 0.0
        s = float(G[i][i])
        for k in range(i):
            s -= L[i][k] * L[i][k] * D[k]
        D[i] = s
        L[i][i] = 1.0
        if D[i] <= 0.0:
            raise ConsistencyError("norm form is not positive definite")
    return L, D


def _count_by_value(G, cint, bound):
    """Exact histogram of Q/cint values <= bound on Z^4 with Gram G.

    The float descent only proposes candidates; each one is checked with the
    exact integer form, so the counts are exact as long as the inflated boxes
    do not truncate.  The Gram matrix is LLL-reduced first (exactly), which
    keeps the float stage well-conditioned regardless of how skew the HNF
    basis was.
    """
    G = _lll_gram(G)
    L, D = _ldl(G)
    target = bound * cint
    budget = float(target) * (1.0 + 1e-7) + 1e-6
    counts = {}
    g00, g01, g02, g03 = G[0][0], G[0][1], G[0][2], G[0][3]
    g11, g12, g13 = G[1][1], G[1][2], G[1][3]
    g22, g23 = G[2][2], G[2][3]
    g33 = G[3][3]

    # descend coordinates 3,2,1,0; only the half-space with last nonzero
    # coordinate positive is walked, every nonzero vector counts double
    def rng(center, r, dk, nonneg):
        if r < 0.0:
            r = 0.0
        s = sqrt(r / dk) * (1.0 + 1e-9) + 1e-9
        lo_i = ceil(-center - s - 1e-9)
        hi_i = floor(-center + s + 1e-9)
        if nonneg and lo_i < 0:
            lo_i = 0
        return lo_i, hi_i

    lo3, hi3 = rng(0.0, budget, D[3], True)
    for u3 in range(lo3, hi3 + 1):
        r3 = budget - D[3] * u3 * u3
        c2 = L[3][2] * u3
        lo2, hi2 = rng(c2, r3, D[2], u3 == 0)
        for u2 in range(lo2, hi2 + 1):
            t2 = u2 + c2
            r2 = r3 - D[2] * t2 * t2
            c1 = L[2][1] * u2 + L[3][1] * u3
            lo1, hi1 = rng(c1, r2, D[1], u3 == 0 and u2 == 0)
            for u1 in range(lo1, hi1 + 1):
                t1 = u1 + c1
                r1 = r2 - D[1] * t1 * t1
                c0 = L[1][0] * u1 + L[2][0] * u2 + L[3][0] * u3
                lo0, hi0 = rng(c0, r1, D[0], u3 == 0 and u2 == 0 and u1 == 0)
                for u0 in range(lo0, hi0 + 1):
                    q = (g00 * u0 * u0 + g11 * u1 * u1 + g22 * u2 * u2
                         + g33 * u3 * u3
                         + 2 * (g01 * u0 * u1 + g02 * u0 * u2 + g03 * u0 * u3
                                + g12 * u1 * u2 + g13 * u1 * u3
                                + g23 * u2 * u3))
                    if q <= target:
                        m, rem = divmod(q, cint)
                        if rem:
                            raise ConsistencyError(
                                "lattice value escaped its content")
                        if u0 or u1 or u2 or u3:
                            counts[m] = counts.get(m, 0) + 2
                        else:
                            counts[m] = counts.get(m, 0) + 1
    return counts


def hnf_basis(alg, elements):
    """Canonical HNF lattice basis for the Z-span of the given elements."""
    return QuatLattice.from_generators(alg, elements)


def normalized_content(lat):
    return lat.content()


def count_vectors(lat, m):
    return lat.count_vectors(m)


def product_lattice(L1, L2):
    """Lattice generated by all pairwise products x*y, x in L1, y in L2."""
    if L1.alg != L2.alg:
        raise ValueError("lattices live in different algebras")
    a, b = L1.alg.a, L1.alg.b
    rows = []
    for x in L1.mat:
        for y in L2.mat:
            rows.append(list(mul4(a, b, x, y)))
    return QuatLattice.from_rows(L1.alg, rows, L1.den * L2.den)
