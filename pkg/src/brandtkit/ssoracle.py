"""Supersingular j-invariants by exhaustive point counting.

This is a cross-check that never touches the quaternion side: candidates
come from the Hasse polynomial sum_i C(m,i)^2 x^i (m = (N-1)/2), whose
roots are exactly the supersingular Legendre parameters, and every
candidate j is then confirmed by counting points of an explicit curve over
F_{N^2}.  A curve over F_q is supersingular iff its trace q + 1 - #E(F_q)
is divisible by N.

The field F_{N^2} is F_N[x]/(x^2 - c) with c the smallest quadratic
nonresidue; elements are pairs (s, t) meaning s + t*sqrt(c).
"""

from math import comb

from .quatalg import ConsistencyError, is_prime

SS_TABLE_SMALL = {2: [(0, 0)], 3: [(0, 0)]}


class QuadField:
    """F_{N^2} as F_N(sqrt(c)), c the least quadratic nonresidue."""

    def __init__(self, N):
        assert is_prime(N) and N >= 3
        self.N = N
        squares = {x * x % N for x in range(1, N)}
        self.squares = squares
        self.c = next(u for u in range(2, N) if u not in squares)
        self.q = N * N

    def add(self, x, y):
        N = self.N
        return ((x[0] + y[0]) % N, (x[1] + y[1]) % N)

    def sub(self, x, y):
        N = self.N
        return ((x[0] - y[0]) % N, (x[1] - y[1]) % N)

    def mul(self, x, y):
        N = self.N
        return ((x[0] * y[0] + self.c * x[1] * y[1]) % N,
                (x[0] * y[1] + x[1] * y[0]) % N)

    def smul(self, a, x):
        N = self.N
        return (a * x[0] % N, a * x[1] % N)

    def pow(self, x, e):
        r = (1, 0)
        while e:
            if e & 1:
                r = self.mul(r, x)
            x = self.mul(x, x)
            e >>= 1
        return r

    def inv(self, x):
        # norm(x) = s^2 - c t^2 lies in F_N*, and 1/x = conj(x)/norm(x)
        N = self.N
        nrm = (x[0] * x[0] - self.c * x[1] * x[1]) % N
        ninv = pow(nrm, N - 2, N)
        return (x[0] * ninv % N, -x[1] * ninv % N)

    def conj(self, x):
        return (x[0], (self.N - x[1]) % self.N)

    def chi(self, x):
        """Quadratic character of F_{N^2}: chi = legendre(norm) on F_N."""
        nrm = (x[0] * x[0] - self.c * x[1] * x[1]) % self.N
        if nrm == 0:
            return 0
        return 1 if nrm in self.squares else -1

    def elements(self):
        for s in range(self.N):
            for t in range(self.N):
                yield (s, t)


def curve_from_j(F, j):
    """Coefficients (A, B) of a curve y^2 = x^3 + Ax + B with invariant j."""
    zero = (0, 0)
    if j == zero:
        return zero, (1, 0)
    if j == (1728 % F.N, 0):
        return (1, 0), zero
    # 3j(1728 - j), 2j(1728 - j)^2
    d = F.sub((1728 % F.N, 0), j)
    return F.smul(3, F.mul(j, d)), F.smul(2, F.mul(j, F.mul(d, d)))


def point_count(F, A, B):
    """#E(F_{N^2}) for y^2 = x^3 + Ax + B by full character sum."""
    total = F.q + 1
    for x in F.elements():
        x2 = F.mul(x, x)
        val = F.add(F.mul(x2, x), F.add(F.mul(A, x), B))
        total += F.chi(val)
    return total


def is_supersingular(j, N, field=None):
    """Exhaustive decision: trace of Frobenius divisible by N."""
    if isinstance(j, int):
        j = (j % N, 0)
    if N in (2, 3):
        return tuple(j) in SS_TABLE_SMALL[N]
    F = field or QuadField(N)
    A, B = curve_from_j(F, j)
    trace = F.q + 1 - point_count(F, A, B)
    return trace % N == 0


def hasse_polynomial(N):
    """sum_i C(m,i)^2 x^i mod N, m = (N-1)/2, ascending coefficients."""
    m = (N - 1) // 2
    return [comb(m, i) ** 2 % N for i in range(m + 1)]


def _legendre_j(F, lam):
    """j-invariant 256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2) of the
    curve y^2 = x(x - 1)(x - lam)."""
    one = (1, 0)
    l2 = F.mul(lam, lam)
    num = F.add(F.sub(l2, lam), one)
    num = F.mul(F.mul(num, num), num)
    den = F.mul(l2, F.mul(F.sub(lam, one), F.sub(lam, one)))
    return F.smul(256, F.mul(num, F.inv(den)))


class SupersingularSet:
    """All supersingular j-invariants in characteristic N."""

    def __init__(self, N, j_list):
        self.N = N
        self.j_list = sorted(j_list)
        self.rational_count = sum(1 for j in self.j_list if j[1] == 0)

    def __len__(self):
        return len(self.j_list)

    def frobenius_closed(self):
        pool = set(self.j_list)
        return all((j[0], (self.N - j[1]) % self.N) in pool for j in pool)


def supersingular_set(N):
    """Enumerate every supersingular j over F_{N^2}, each one confirmed
    by an independent point count."""
    if N in SS_TABLE_SMALL:
        return SupersingularSet(N, list(SS_TABLE_SMALL[N]))
    F = QuadField(N)
    H = hasse_polynomial(N)
    zero, one = (0, 0), (1, 0)
    found = set()
    # roots come in conjugate pairs, so scanning t <= (N-1)/2 suffices
    for s in range(N):
        for t in range((N + 1) // 2):
            lam = (s, t)
            if lam in (zero, one):
                continue
            acc = (H[-1] % N, 0)
            for coeff in reversed(H[:-1]):
                acc = F.mul(acc, lam)
                acc = ((acc[0] + coeff) % N, acc[1])
            if acc == zero:
                j = _legendre_j(F, lam)
                found.add(j)
                found.add(F.conj(j))
    for j in sorted(found):
        if not is_supersingular(j, N, field=F):
            raise ConsistencyError(f"candidate j={j} fails point counting")
    return SupersingularSet(N, found)


def cross_validate(classes, coll, ss=None):
    """Match the geometric picture against the quaternion computation.

    Checks: #j-invariants = class number; Frobenius-fixed j count = trace
    of the level permutation B(N); the special automorphisms line up
    (j=0 supersingular iff some weight is 3, j=1728 iff some weight is 2,
    at most one of each for N >= 5).  Raises on any mismatch.
    """
    N = classes.level
    if ss is None:
        ss = supersingular_set(N)
    report = {"level": N, "j_count": len(ss), "class_number": classes.n,
              "rational_count": ss.rational_count,
              "j_invariants": [list(j) for j in ss.j_list]}
    if len(ss) != classes.n:
        raise ConsistencyError(
            f"{len(ss)} supersingular j but class number {classes.n}")
    if not ss.frobenius_closed():
        raise ConsistencyError("j-list not closed under Frobenius")
    BN = coll.matrix(N)
    fixed = sum(BN[i][i] for i in range(classes.n))
    report["level_fixed_points"] = fixed
    if fixed != ss.rational_count:
        raise ConsistencyError(
            f"B(N) has {fixed} fixed points but {ss.rational_count} "
            "rational supersingular j")
    if N >= 5:
        w = classes.weights
        has_j0 = (0, 0) in ss.j_list
        has_j1728 = (1728 % N, 0) in ss.j_list
        if has_j0 != (3 in w) or (has_j0 and w.count(3) != 1):
            raise ConsistencyError("j=0 does not match the weight-3 count")
        if has_j1728 != (2 in w) or (has_j1728 and w.count(2) != 1):
            raise ConsistencyError("j=1728 does not match the weight-2 count")
        if has_j0 != (N % 3 == 2) or has_j1728 != (N % 4 == 3):
            raise ConsistencyError("special j presence contradicts N mod 12")
        report["automorphism_match"] = {"j0": has_j0, "j1728": has_j1728}
    return report
