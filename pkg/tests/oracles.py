"""Independent reference implementations used only by the tests.

Everything here is deliberately naive and written against different
primary sources than the library code: rational Gauss elimination instead
of fraction-free elimination, box scans instead of recursive enumeration,
conic solvability by residue search instead of symbol formulas, full
point-count scans instead of character sums.
"""

from fractions import Fraction


def primes_upto(bound):
    sieve = bytearray([1]) * (bound + 1)
    sieve[:2] = b"\x00\x00"
    for p in range(2, int(bound ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p::p] = b"\x00" * len(sieve[p * p::p])
    return [p for p in range(bound + 1) if sieve[p]]


def rational_rank(rows):
    """Rank over Q by straightforward Gauss elimination on Fractions."""
    a = [[Fraction(x) for x in row] for row in rows]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank = 0
    col = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = 1 / a[rank][col]
        a[rank] = [x * inv for x in a[rank]]
        for r in range(nrows):
            if r != rank and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank


def rational_det(rows):
    a = [[Fraction(x) for x in row] for row in rows]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        inv = 1 / a[c][c]
        for r in range(c + 1, n):
            if a[r][c] != 0:
                f = a[r][c] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


def charpoly_by_interpolation(rows):
    """det(xI - A) through d+1 exact evaluations and Lagrange interpolation."""
    n = len(rows)
    xs = list(range(n + 1))
    ys = [rational_det([[ (x if r == c else 0) - rows[r][c]
                          for c in range(n)] for r in range(n)]) for x in xs]
    # Lagrange basis, assembled coefficient by coefficient
    coeffs = [Fraction(0)] * (n + 1)
    for i, xi in enumerate(xs):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            nxt = [Fraction(0)] * (len(basis) + 1)
            for t, c in enumerate(basis):
                nxt[t + 1] += c
                nxt[t] -= xj * c
            basis = nxt
            denom *= xi - xj
        scale = ys[i] / denom
        for k in range(len(basis)):
            coeffs[k] += scale * basis[k]
    assert all(c.denominator == 1 for c in coeffs)
    return [int(c) for c in coeffs]


def legendre_euler(u, p):
    """Quadratic residue symbol by Euler's criterion."""
    u %= p
    if u == 0:
        return 0
    r = pow(u, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def eichler_class_number(N):
    """(N-1)/12 + (1/4)(1 - (-4|N)) + (1/3)(1 - (-3|N)) for prime N."""
    if N == 2:
        k4, k3 = 0, -1
    elif N == 3:
        k4, k3 = -1, 0
    else:
        k4 = legendre_euler(-4, N)
        k3 = legendre_euler(-3, N)
    n = Fraction(N - 1, 12) + Fraction(1 - k4, 4) + Fraction(1 - k3, 3)
    assert n.denominator == 1
    return int(n)


def conic_has_point(a, b, p):
    """Primitive solution of z^2 = a x^2 + b y^2 over Z/p^k, k large enough
    to decide p-adic solvability for squarefree a, b."""
    k = 6 if p == 2 else 3
    pk = p ** k
    roots = {}
    for z in range(pk):
        roots.setdefault(z * z % pk, []).append(z)
    for x in range(pk):
        axx = a * x * x % pk
        for y in range(pk):
            v = (axx + b * y * y) % pk
            for z in roots.get(v, ()):
                if x % p or y % p or z % p:
                    return True
    return False


def box_count(gram, cint, bound):
    """Vector counts by scanning an explicit box.

    gram is an integer Gram matrix, cint its content; returns a dict
    m -> #{u != 0 : u gram u^T = m * cint} for 1 <= m <= bound.
    """
    n = len(gram)
    inv = _fraction_inverse(gram)
    budget = bound * cint
    limits = [int((budget * inv[i][i]) ** 0.5) + 1 for i in range(n)]
    counts = {}

    def q(u):
        return sum(u[r] * gram[r][c] * u[c] for r in range(n)
                   for c in range(n))

    ranges = [range(-L, L + 1) for L in limits]
    for u0 in ranges[0]:
        for u1 in ranges[1]:
            for u2 in ranges[2]:
                for u3 in ranges[3]:
                    u = (u0, u1, u2, u3)
                    if u == (0, 0, 0, 0):
                        continue
                    val = q(u)
                    if 0 < val <= budget:
                        assert val % cint == 0
                        m = val // cint
                        counts[m] = counts.get(m, 0) + 1
    return counts


def _fraction_inverse(rows):
    n = len(rows)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j))
                                       for j in range(n)]
         for i, row in enumerate(rows)]
    for c in range(n):
        piv = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [[float(a[i][n + j]) for j in range(n)] for i in range(n)]


class BruteQuadField:
    """F_{N^2} as F_N[x]/(x^2 + u x + v), the first irreducible monic
    quadratic in lexicographic order.  Different model than the library."""

    def __init__(self, N):
        self.N = N
        self.u, self.v = next(
            (u, v) for u in range(N) for v in range(N)
            if all((x * x + u * x + v) % N for x in range(N)))
        self.q = N * N

    def mul(self, a, c):
        N, u, v = self.N, self.u, self.v
        # (a0 + a1 x)(c0 + c1 x) with x^2 = -u x - v
        hi = a[1] * c[1]
        return ((a[0] * c[0] - v * hi) % N,
                (a[0] * c[1] + a[1] * c[0] - u * hi) % N)

    def add(self, a, c):
        return ((a[0] + c[0]) % self.N, (a[1] + c[1]) % self.N)

    def smul(self, k, a):
        return (k * a[0] % self.N, k * a[1] % self.N)

    def pow(self, a, e):
        r = (1, 0)
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a):
        return self.pow(a, self.q - 2)

    def minpoly_pair(self, a):
        """(trace, norm) of a over F_N: model-independent fingerprint."""
        # conjugate of a0 + a1 x is a0 + a1 (-u - x)
        cj = ((a[0] - a[1] * self.u) % self.N, (-a[1]) % self.N)
        s = self.add(a, cj)
        n = self.mul(a, cj)
        assert s[1] == 0 and n[1] == 0
        return (s[0], n[0])

    def sub(self, a, c):
        return ((a[0] - c[0]) % self.N, (a[1] - c[1]) % self.N)

    def elements(self):
        for s in range(self.N):
            for t in range(self.N):
                yield (s, t)


def brute_supersingular_minpolys(N):
    """Multiset of (trace, norm) pairs of all supersingular j over F_{N^2},
    found by scanning every j and counting points with a double loop."""
    F = BruteQuadField(N)
    zero, one = (0, 0), (1, 0)
    j1728 = (1728 % N, 0)
    result = []
    squares = {}
    for y in F.elements():
        squares.setdefault(F.mul(y, y), 0)
        squares[F.mul(y, y)] += 1
    for j in F.elements():
        if j == zero:
            A, B = zero, one
        elif j == j1728:
            A, B = one, zero
        else:
            d = F.sub(j1728, j)
            A = F.smul(3, F.mul(j, d))
            B = F.smul(2, F.mul(j, F.mul(d, d)))
        count = 1
        for x in F.elements():
            fx = F.add(F.mul(F.mul(x, x), x), F.add(F.mul(A, x), B))
            count += squares.get(fx, 0)
        if (F.q + 1 - count) % N == 0:
            result.append(F.minpoly_pair(j))
    return sorted(result)
