"""Exact linear algebra on small matrices.

Everything here works on plain lists of row lists.  Integer routines stay
fraction-free where that matters (HNF, Bareiss rank); the rational helpers
use Fraction.  Matrices are tiny (4x4 up to ~20x40), so clarity wins over
asymptotics.
"""

from fractions import Fraction
from math import gcd


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    rows = len(A)
    inner = len(B)
    cols = len(B[0])
    out = []
    for i in range(rows):
        Ai = A[i]
        row = []
        for j in range(cols):
            s = 0
            for k in range(inner):
                s += Ai[k] * B[k][j]
            row.append(s)
        out.append(row)
    return out


def mat_transpose(A):
    return [list(col) for col in zip(*A)]


def mat_vec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def vec_mat(v, A):
    return [sum(v[k] * A[k][j] for k in range(len(v))) for j in range(len(A[0]))]


def hnf(rows):
    """Row Hermite normal form of an integer matrix; returns the nonzero rows.

    Pivots positive, entries above each pivot reduced into [0, pivot).  The
    output is canonical: any generating set of the same row lattice gives the
    identical matrix.
    """
    rows = [list(r) for r in rows]
    if not rows:
        return []
    nrows = len(rows)
    ncols = len(rows[0])
    pr = 0
    for c in range(ncols):
        if pr >= nrows:
            break
        while True:
            nz = [r for r in range(pr, nrows) if rows[r][c] != 0]
            if not nz:
                break
            r0 = min(nz, key=lambda r: abs(rows[r][c]))
            if r0 != pr:
                rows[pr], rows[r0] = rows[r0], rows[pr]
            p = rows[pr][c]
            reduced = True
            for r in range(pr + 1, nrows):
                if rows[r][c]:
                    q = rows[r][c] // p
                    if q:
                        rows[r] = [x - q * y for x, y in zip(rows[r], rows[pr])]
                    if rows[r][c]:
                        reduced = False
            if reduced:
                break
        if pr < nrows and rows[pr][c] != 0:
            if rows[pr][c] < 0:
                rows[pr] = [-x for x in rows[pr]]
            p = rows[pr][c]
            for r in range(pr):
                q = rows[r][c] // p
                if q:
                    rows[r] = [x - q * y for x, y in zip(rows[r], rows[pr])]
            pr += 1
    return rows[:pr]


def mat_inv(rows):
    """Inverse of a square matrix, exact over Fraction."""
    n = len(rows)
    a = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
         for i, row in enumerate(rows)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def mat_det(rows):
    """Determinant, exact over Fraction."""
    n = len(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def exact_rank(rows):
    """Rank over Q of an integer matrix, by fraction-free Bareiss elimination."""
    a = [[int(x) for x in r] for r in rows]
    if not a:
        return 0
    nr, nc = len(a), len(a[0])
    rank = 0
    row = 0
    prev = 1
    for col in range(nc):
        piv = None
        for r in range(row, nr):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            continue
        if piv != row:
            a[row], a[piv] = a[piv], a[row]
        pv = a[row][col]
        for r in range(row + 1, nr):
            arc = a[r][col]
            for c2 in range(col + 1, nc):
                # Sylvester identity: this division is exact
                a[r][c2] = (a[r][c2] * pv - arc * a[row][c2]) // prev
            a[r][col] = 0
        prev = pv
        rank += 1
        row += 1
        if row == nr:
            break
    return rank


def charpoly(rows):
    """det(xI - A) of a square integer matrix.

    Faddeev-LeVerrier; the intermediate divisions are exact.  Returns integer
    coefficients in ascending order, monic leading 1.
    """
    n = len(rows)
    if n == 0:
        return [1]
    A = [[Fraction(x) for x in row] for row in rows]
    M = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    coeffs = [Fraction(1)]  # descending: x^n first
    for k in range(1, n + 1):
        AM = mat_mul(A, M)
        c = -sum(AM[i][i] for i in range(n)) / k
        coeffs.append(c)
        M = [[AM[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
    out = []
    for c in reversed(coeffs):
        if c.denominator != 1:
            raise ArithmeticError("characteristic polynomial came out non-integral")
        out.append(int(c))
    return out


# ---------------------------------------------------------------------------
# polynomial helpers (coefficient lists, ascending order)

def poly_trim(f):
    while len(f) > 1 and f[-1] == 0:
        f = f[:-1]
    return f


def poly_deg(f):
    f = poly_trim(f)
    return len(f) - 1 if any(f) else -1


def poly_mul(f, g):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def poly_eval(f, x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def poly_derivative(f):
    return [i * c for i, c in enumerate(f)][1:] or [0]


def poly_divmod_exact(f, g):
    """Divide f by g over Q; returns (quotient, remainder) as Fractions."""
    f = [Fraction(c) for c in poly_trim(list(f))]
    g = [Fraction(c) for c in poly_trim(list(g))]
    if poly_deg(g) < 0:
        raise ZeroDivisionError("division by zero polynomial")
    q = [Fraction(0)] * max(1, len(f) - len(g) + 1)
    r = f[:]
    dg = len(g) - 1
    lead = g[-1]
    while poly_deg(r) >= dg and any(r):
        dr = poly_deg(r)
        c = r[dr] / lead
        q[dr - dg] = c
        for i in range(dg + 1):
            r[dr - dg + i] -= c * g[i]
        r = poly_trim(r)
    return q, poly_trim(r)


def poly_is_squarefree(f):
    """Squarefree over Q: gcd(f, f') is a constant."""
    g = _poly_gcd_q(f, poly_derivative(f))
    return poly_deg(g) == 0


def _poly_gcd_q(f, g):
    f = [Fraction(c) for c in poly_trim(list(f))]
    g = [Fraction(c) for c in poly_trim(list(g))]
    while poly_deg(g) >= 0 and any(g):
        _, r = poly_divmod_exact(f, g)
        f, g = g, r if any(r) else [Fraction(0)]
        if not any(g):
            break
    return f


def divides_exactly(g, f):
    """True iff integer polynomial g divides integer polynomial f over Q
    with an integer quotient."""
    q, r = poly_divmod_exact(f, g)
    if any(r):
        return False
    return all(c.denominator == 1 for c in q)


# --- arithmetic mod a prime -------------------------------------------------

def _pmod(f, p):
    return poly_trim([c % p for c in f])


def _polmul_mod(f, g, h, p):
    prod = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                prod[i + j] = (prod[i + j] + a * b) % p
    return _polrem_mod(prod, h, p)


def _polrem_mod(f, h, p):
    f = [c % p for c in f]
    dh = len(h) - 1
    inv = pow(h[-1], -1, p)
    while len(f) > dh:
        c = (f[-1] * inv) % p
        if c:
            off = len(f) - 1 - dh
            for i in range(dh + 1):
                f[off + i] = (f[off + i] - c * h[i]) % p
        f.pop()
    return poly_trim(f)


def _polpow_mod(base, e, h, p):
    result = [1]
    base = _polrem_mod(base, h, p)
    while e:
        if e & 1:
            result = _polmul_mod(result, base, h, p)
        base = _polmul_mod(base, base, h, p)
        e >>= 1
    return result


def _polgcd_mod(f, g, p):
    f = _pmod(f, p)
    g = _pmod(g, p)
    while any(g):
        f, g = g, _polrem_mod(f, g, p)
    return f


def is_irreducible_mod(f, p):
    """Rabin test: is the integer polynomial f irreducible modulo p?"""
    f = _pmod(f, p)
    d = poly_deg(f)
    if d <= 0:
        return False
    if d == 1:
        return True
    if f[-1] % p == 0:
        return False
    # distinct prime divisors of d
    divs = []
    dd = d
    q = 2
    while q * q <= dd:
        if dd % q == 0:
            divs.append(q)
            while dd % q == 0:
                dd //= q
        q += 1
    if dd > 1:
        divs.append(dd)
    x = [0, 1]
    b = x
    powers = {}
    for i in range(1, d + 1):
        b = _polpow_mod(b, p, f, p)
        powers[i] = b
    top = powers[d]
    tx = list(top) + [0] * max(0, 2 - len(top))
    tx[1] = (tx[1] - 1) % p
    if any(poly_trim(tx)):
        return False
    for ell in divs:
        bi = powers[d // ell]
        tx = list(bi) + [0] * max(0, 2 - len(bi))
        tx[1] = (tx[1] - 1) % p
        tx = poly_trim(tx)
        if not any(tx):
            return False
        g = _polgcd_mod(tx, f, p)
        if poly_deg(g) > 0:
            return False
    return True
