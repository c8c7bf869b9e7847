"""Brandt matrices and theta series.

With classes I_1..I_n and weights w_i, entry (i,j) of B(m) counts the
vectors of normalized norm m in M_ij = I_j^-1 I_i, divided by 2w_i.  The
division must come out exact; a remainder means the classes or weights are
wrong, and that is treated as an internal error rather than rounded away.

theta_ij(q) = 1/(2 w_i) + sum_m B(m)_ij q^m, and column j of the B(m) family
collects the coefficients of the n theta series attached to I_j.
"""

from fractions import Fraction

from .quatalg import ConsistencyError
from .spectral import sigma_level


class ThetaSeries:
    """Constant plus integer q-coefficients of one theta_ij."""

    def __init__(self, constant, coefficients):
        self.constant = Fraction(constant)
        self.coefficients = list(coefficients)  # index m-1 holds q^m

    def coefficient(self, m):
        if m == 0:
            return self.constant
        return Fraction(self.coefficients[m - 1])

    def __repr__(self):
        head = [f"{self.constant}"]
        for m, c in enumerate(self.coefficients[:8], start=1):
            head.append(f"{c}q^{m}")
        return "ThetaSeries(" + " + ".join(head) + " + ...)"


class BrandtCollection:
    """All Brandt matrices of one level up to a coefficient bound M,
    plus B(N) itself (needed for the Atkin-Lehner involution)."""

    def __init__(self, classes, bound):
        self.classes = classes
        self.level = classes.level
        self.n = classes.n
        self.weights = list(classes.weights)
        self.bound = bound
        self._matrices = {}
        self._compute()

    def _compute(self):
        n = self.n
        sweep = max(self.bound, self.level)
        tables = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                lat = self.classes.translation_module(i, j)
                tables[i][j] = lat.counts_up_to(sweep)
        for m in range(1, self.bound + 1):
            self._matrices[m] = self._assemble(tables, m)
        if self.level > self.bound:
            self._matrices[self.level] = self._assemble(tables, self.level)

    def _assemble(self, tables, m):
        out = []
        for i in range(self.n):
            wi2 = 2 * self.weights[i]
            row = []
            for j in range(self.n):
                cnt = tables[i][j].get(m, 0)
                q, r = divmod(cnt, wi2)
                if r:
                    raise ConsistencyError(
                        f"vector count {cnt} not divisible by 2w_{i + 1}={wi2}")
                row.append(q)
            out.append(row)
        return out

    def matrix(self, m):
        """B(m); anything outside the precomputed range is swept on demand."""
        if m == 0:
            return self.b0()
        if m not in self._matrices:
            self._matrices[m] = brandt_matrix(self.classes, m)
        return self._matrices[m]

    def b0(self):
        return [[Fraction(1, 2 * w)] * self.n for w in self.weights]

    def available(self):
        return sorted(self._matrices)

    def theta(self, i, j, bound=None):
        bound = self.bound if bound is None else bound
        coeffs = [self.matrix(m)[i][j] for m in range(1, bound + 1)]
        return ThetaSeries(Fraction(1, 2 * self.weights[i]), coeffs)


def brandt_matrix(classes, m):
    """B(m) as an exact integer matrix (m >= 1)."""
    if m < 1:
        raise ValueError("use brandt_b0 for the constant term")
    n = classes.n
    out = []
    for i in range(n):
        wi2 = 2 * classes.weights[i]
        row = []
        for j in range(n):
            cnt = classes.translation_module(i, j).count_vectors(m)
            q, r = divmod(cnt, wi2)
            if r:
                raise ConsistencyError(
                    f"vector count {cnt} not divisible by 2w_{i + 1}={wi2}")
            row.append(q)
        out.append(row)
    return out


def brandt_b0(classes):
    """B(0): row i is constant 1/(2 w_i)."""
    return [[Fraction(1, 2 * w)] * classes.n for w in classes.weights]


def theta_series(classes, i, j, bound):
    counts = classes.translation_module(i, j).counts_up_to(bound)
    wi2 = 2 * classes.weights[i]
    coeffs = []
    for m in range(1, bound + 1):
        q, r = divmod(counts.get(m, 0), wi2)
        if r:
            raise ConsistencyError("theta coefficient not integral")
        coeffs.append(q)
    return ThetaSeries(Fraction(1, wi2), coeffs)


# ---------------------------------------------------------------------------
# structural identities; each returns (ok, detail)

def check_b1_identity(coll):
    n = coll.n
    ok = coll.matrix(1) == [[1 if i == j else 0 for j in range(n)]
                            for i in range(n)]
    return ok, "B(1) = I" if ok else f"B(1) = {coll.matrix(1)}"


def check_weighted_symmetry(coll):
    """Eq-style symmetry w_i B(m)_ij = w_j B(m)_ji for all stored m."""
    w = coll.weights
    for m in coll.available():
        B = coll.matrix(m)
        for i in range(coll.n):
            for j in range(coll.n):
                if w[i] * B[i][j] != w[j] * B[j][i]:
                    return False, f"failed at m={m}, (i,j)=({i + 1},{j + 1})"
    return True, f"checked m in {{1..{coll.bound}}} and m={coll.level}"


def check_column_sums(coll):
    """Columns of B(m) sum to sigma(m) with divisors prime to N omitted."""
    for m in coll.available():
        B = coll.matrix(m)
        target = sigma_level(m, coll.level)
        for j in range(coll.n):
            if sum(B[i][j] for i in range(coll.n)) != target:
                return False, f"column {j + 1} of B({m}) does not sum to {target}"
    return True, "column sums equal sigma(m)"


def check_weighted_row_sums(coll):
    """sum_j B(m)_ij / w_j = sigma(m) / w_i, the Eisenstein identity."""
    w = coll.weights
    for m in coll.available():
        B = coll.matrix(m)
        target = sigma_level(m, coll.level)
        for i in range(coll.n):
            s = sum(Fraction(B[i][j], w[j]) for j in range(coll.n))
            if s != Fraction(target, w[i]):
                return False, f"row {i + 1} of B({m}) weighted sum is {s}"
    return True, "weighted row sums equal sigma(m)/w_i"


def check_commutativity(coll):
    from .intmat import mat_mul
    ms = [m for m in coll.available()]
    for x in range(len(ms)):
        for y in range(x + 1, len(ms)):
            A, B = coll.matrix(ms[x]), coll.matrix(ms[y])
            if mat_mul(A, B) != mat_mul(B, A):
                return False, f"B({ms[x]}) and B({ms[y]}) do not commute"
    return True, f"all {len(ms)} stored matrices commute pairwise"


def check_hecke_recursion(coll):
    """B(p) B(p^k) = B(p^{k+1}) + p B(p^{k-1}) for p prime to the level."""
    from .intmat import mat_mul
    from .quatalg import is_prime
    n = coll.n
    checked = 0
    for p in range(2, coll.bound + 1):
        if not is_prime(p) or p == coll.level:
            continue
        pk = p
        while pk * p <= coll.bound:
            lhs = mat_mul(coll.matrix(p), coll.matrix(pk))
            rhs = [[coll.matrix(pk * p)[i][j]
                    + p * (coll.matrix(pk // p)[i][j] if pk // p >= 1 else 0)
                    for j in range(n)] for i in range(n)]
            if lhs != rhs:
                return False, f"recursion failed at p={p}, p^k={pk}"
            checked += 1
            pk *= p
    return True, f"{checked} prime-power recursions verified"


def check_level_involution(coll):
    """B(N) is a permutation matrix squaring to the identity."""
    from .intmat import mat_mul
    n = coll.n
    B = coll.matrix(coll.level)
    for i in range(n):
        if sum(B[i]) != 1 or any(x not in (0, 1) for x in B[i]):
            return False, "B(N) is not a 0/1 permutation matrix"
        if sum(B[r][i] for r in range(n)) != 1:
            return False, "B(N) is not a 0/1 permutation matrix"
    if mat_mul(B, B) != [[1 if i == j else 0 for j in range(n)] for i in range(n)]:
        return False, "B(N)^2 is not the identity"
    return True, "B(N) is a permutation involution"


def check_level_powers(coll):
    """B(N^k) = B(N)^k for the stored range (usually vacuous: N^2 > M)."""
    from .intmat import mat_mul
    BN = coll.matrix(coll.level)
    power = BN
    nk = coll.level
    checked = 0
    while nk * coll.level <= coll.bound:
        nk *= coll.level
        power = mat_mul(power, BN)
        if coll.matrix(nk) != power:
            return False, f"B({nk}) != B({coll.level})^{checked + 2}"
        checked += 1
    return True, f"{checked} level-power identities verified"


def structural_checks(coll):
    """Run the whole battery; list of (name, ok, detail)."""
    battery = [
        ("brandt-b1-identity", check_b1_identity),
        ("brandt-weighted-symmetry", check_weighted_symmetry),
        ("brandt-column-sums", check_column_sums),
        ("brandt-weighted-row-sums", check_weighted_row_sums),
        ("brandt-commutativity", check_commutativity),
        ("brandt-hecke-recursion", check_hecke_recursion),
        ("brandt-level-involution", check_level_involution),
        ("brandt-level-powers", check_level_powers),
    ]
    out = []
    for name, fn in battery:
        ok, detail = fn(coll)
        out.append((name, ok, detail))
    return out
