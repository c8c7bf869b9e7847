"""Left ideal classes of a maximal order.

Ideals are lattices closed under left multiplication by the order R.  The
class set is produced by a breadth-first walk over p-neighbors: for a prime
p away from the level, the p+1 sublattices of index p^2 that stay left
R-stable and are isotropic for the norm form mod p are the ideals of norm
p*N(I) directly below I.  The walk terminates exactly when the accumulated
mass sum(1/w_i) reaches (N-1)/12.

Etymology of the weights: w_i is the unit group of the right order R_i of
I_i modulo {+-1}, i.e. half the number of norm-1 vectors of R_i.
"""

from collections import deque
from fractions import Fraction
from math import gcd

from .intmat import hnf, mat_inv, mat_mul
from .lattices import QuatLattice, product_lattice
from .orders import QuatOrder
from .quatalg import ConsistencyError, mul4


class EnumerationError(RuntimeError):
    """The class walk could not be completed (graph closed early at all p)."""


def _lmat(a, b, x):
    """Matrix of b -> x*b on coordinate rows: row(x*b) = beta . _lmat(x)."""
    basis = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    return [list(mul4(a, b, x, e)) for e in basis]


def _rmat(a, b, y):
    """Matrix of b -> b*y on coordinate rows."""
    basis = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    return [list(mul4(a, b, e, y)) for e in basis]


def _solve_right_module(alg, conds):
    """The lattice {beta : beta . C in Z^4 for every C in conds}.

    Each single condition cuts out the row lattice Z^4 . C^{-1}; the
    intersection is computed through duals: dual(sum of duals), where the
    dual of Z^4 . B is Z^4 . B^{-T} and the sum is an HNF of stacked rows.
    """
    stacked = []
    den = 1
    for C in conds:
        Ct = [[Fraction(C[r][c]) for r in range(4)] for c in range(4)]
        for row in Ct:
            for x in row:
                den = den * x.denominator // gcd(den, x.denominator)
        stacked.append(Ct)
    rows = []
    for Ct in stacked:
        for row in Ct:
            rows.append([int(x * den) for x in row])
    H = hnf(rows)
    if len(H) != 4:
        raise ConsistencyError("transporter lattice is rank-deficient")
    Hinv = mat_inv(H)
    # basis of the intersection: den * H^{-T}
    dual_rows = [[Hinv[c][r] * den for c in range(4)] for r in range(4)]
    big = 1
    for row in dual_rows:
        for x in row:
            big = big * x.denominator // gcd(big, x.denominator)
    int_rows = [[int(x * big) for x in row] for row in dual_rows]
    return QuatLattice.from_rows(alg, int_rows, big)


class LeftIdeal:
    """A left ideal of a fixed maximal order R, kept as a lattice."""

    __slots__ = ("order", "lattice")

    def __init__(self, order, lattice, check=False):
        self.order = order
        self.lattice = lattice
        if check and not _left_stable(order, lattice):
            raise ConsistencyError("lattice is not left-stable under the order")

    def norm(self):
        return self.lattice.content()

    def __repr__(self):
        return f"LeftIdeal(norm={self.norm()}, {self.lattice!r})"


def _left_stable(order, lattice):
    try:
        _left_action_mats(order, lattice)
    except ConsistencyError:
        return False
    return True


def _left_action_mats(order, lattice):
    """Integer matrices of left multiplication by the order basis on ideal
    coordinates; their integrality is exactly left-stability."""
    alg = lattice.alg
    a, b = alg.a, alg.b
    inv = lattice.inv_mat()
    mats = []
    for r in order.lattice.mat:
        lm = _lmat(a, b, r)
        m = mat_mul([list(x) for x in lattice.mat], lm)
        m = mat_mul(m, inv)
        out = []
        for row in m:
            introw = []
            for x in row:
                q = Fraction(x, order.lattice.den)
                if q.denominator != 1:
                    raise ConsistencyError("lattice is not left-stable")
                introw.append(int(q))
            out.append(introw)
        mats.append(out)
    return mats


def right_order(ideal):
    """The right order {b : I b <= I} of a left ideal; always maximal here."""
    lat = ideal.lattice
    a, b = lat.alg.a, lat.alg.b
    inv = lat.inv_mat()
    conds = []
    for r in lat.mat:
        conds.append(mat_mul(_lmat(a, b, r), inv))
    sol = _solve_right_module(lat.alg, conds)
    order = QuatOrder(sol)
    if order.reduced_discriminant() != lat.alg.level:
        raise ConsistencyError("right order of an ideal is not maximal")
    return order


def ideal_inverse(lattice):
    """The set {b : I b I <= I} for the lattice I of a left ideal.

    Satisfies N(I^-1) N(I) = 1 and I^-1 I = the right order of I.
    """
    a, b = lattice.alg.a, lattice.alg.b
    inv = lattice.inv_mat()
    conds = []
    for r in lattice.mat:
        lm = _lmat(a, b, r)
        for s in lattice.mat:
            C = mat_mul(mat_mul(lm, _rmat(a, b, s)), inv)
            conds.append([[Fraction(x, lattice.den) for x in row] for row in C])
    return _solve_right_module(lattice.alg, conds)


def ideal_product(L1, L2):
    """Lattice product L1 * L2 (all pairwise products, then HNF)."""
    return product_lattice(L1, L2)


def is_equivalent(I, J):
    """Same left ideal class: the normalized norm form on J^-1 I represents 1."""
    lat = ideal_product(ideal_inverse(J.lattice), I.lattice)
    return lat.count_vectors(1) > 0


def unit_weight(order):
    """|O^x / {+-1}|: half the number of norm-1 vectors of the order."""
    if order.lattice.content() != 1:
        raise ConsistencyError("order norm form has nontrivial content")
    cnt = order.lattice.count_vectors(1)
    if cnt % 2:
        raise ConsistencyError("odd count of norm-1 units")
    return cnt // 2


# ---------------------------------------------------------------------------

def _mod_p_matrix(mats, p):
    return [[[x % p for x in row] for row in m] for m in mats]


def _in_span2(v, w1, w2, piv1, piv2, p):
    """Is v in the F_p-span of RREF rows w1 (pivot piv1), w2 (pivot piv2)?"""
    t = [(x - v[piv1] * y1 - v[piv2] * y2) % p
         for x, y1, y2 in zip(v, w1, w2)]
    return not any(t)


def _two_dim_subspaces(p):
    """All 2-dimensional subspaces of F_p^4 as RREF row pairs."""
    cols = range(4)
    out = []
    for c1 in cols:
        for c2 in range(c1 + 1, 4):
            free1 = [c for c in cols if c > c1 and c != c2]
            free2 = [c for c in cols if c > c2]
            for vals1 in _tuples(p, len(free1)):
                w1 = [0, 0, 0, 0]
                w1[c1] = 1
                for c, v in zip(free1, vals1):
                    w1[c] = v
                for vals2 in _tuples(p, len(free2)):
                    w2 = [0, 0, 0, 0]
                    w2[c2] = 1
                    for c, v in zip(free2, vals2):
                        w2[c] = v
                    out.append((w1[:], w2, c1, c2))
    return out


def _tuples(p, k):
    if k == 0:
        yield ()
        return
    for head in range(p):
        for tail in _tuples(p, k - 1):
            yield (head,) + tail


def p_neighbors(ideal, p):
    """The p+1 left-stable index-p^2 sublattices with norm p*N(I)."""
    lat = ideal.lattice
    alg = lat.alg
    if alg.level is not None and p == alg.level:
        raise ValueError("neighbor prime must differ from the level")
    Tmats = _mod_p_matrix(_left_action_mats(ideal.order, lat), p)
    cint = lat.content_int()

    def qbar(u):
        x = [sum(u[r] * lat.mat[r][c] for r in range(4)) for c in range(4)]
        return lat.norm_value(x) % p

    found = []
    for w1, w2, c1, c2 in _two_dim_subspaces(p):
        w12 = [(x + y) % p for x, y in zip(w1, w2)]
        if qbar(w1) or qbar(w2) or qbar(w12):
            continue
        stable = True
        for T in Tmats:
            for w in (w1, w2):
                img = [sum(w[r] * T[r][c] for r in range(4)) % p for c in range(4)]
                if not _in_span2(img, w1, w2, c1, c2, p):
                    stable = False
                    break
            if not stable:
                break
        if not stable:
            continue
        rows = [[x * p for x in row] for row in lat.mat]
        for w in (w1, w2):
            rows.append([sum(w[r] * lat.mat[r][c] for r in range(4))
                         for c in range(4)])
        nb = QuatLattice.from_rows(alg, rows, lat.den)
        if nb.content() != p * lat.content():
            raise ConsistencyError("neighbor has unexpected norm")
        found.append(nb)
    if len(found) != p + 1:
        raise ConsistencyError(
            f"expected {p + 1} neighbors at p={p}, found {len(found)}")
    return found


class ClassList:
    """Representatives of the left ideal classes of a maximal order."""

    def __init__(self, level, order, ideals, right_orders, weights):
        self.level = level
        self.alg = order.alg
        self.order = order
        self.ideals = ideals
        self.right_orders = right_orders
        self.weights = weights
        self._inverses = {}
        self._translations = {}

    @property
    def n(self):
        return len(self.ideals)

    def mass(self):
        return sum(Fraction(1, w) for w in self.weights)

    def ideal_inverse(self, j):
        if j not in self._inverses:
            self._inverses[j] = ideal_inverse(self.ideals[j].lattice)
        return self._inverses[j]

    def translation_module(self, i, j):
        """M_ij = I_j^-1 I_i, the lattice whose theta series feeds B(m)_ij."""
        key = (i, j)
        if key not in self._translations:
            self._translations[key] = ideal_product(self.ideal_inverse(j),
                                                    self.ideals[i].lattice)
        return self._translations[key]


def enumerate_classes(order, level=None, start_p=2, max_p=97):
    """All left ideal classes of a maximal order, mass-formula terminated."""
    level = level if level is not None else order.alg.level
    if order.reduced_discriminant() != level:
        raise ValueError("order is not maximal of the given level")
    target = Fraction(level - 1, 12)
    ideals = [LeftIdeal(order, order.lattice)]
    right_orders = [order]
    weights = [unit_weight(order)]
    mass = Fraction(1, weights[0])
    p = start_p
    while p == level:
        p = _next_prime(p)
    frontier = deque(ideals)
    while mass < target:
        if not frontier:
            p = _next_prime(p)
            while p == level:
                p = _next_prime(p)
            if p > max_p:
                raise EnumerationError(
                    f"class walk did not close below p={max_p}")
            frontier = deque(ideals)
        current = frontier.popleft()
        for nb in p_neighbors(current, p):
            cand = LeftIdeal(order, nb)
            if any(is_equivalent(cand, known) for known in ideals):
                continue
            ro = right_order(cand)
            w = unit_weight(ro)
            ideals.append(cand)
            right_orders.append(ro)
            weights.append(w)
            mass += Fraction(1, w)
            frontier.append(cand)
            if mass == target:
                break
        if mass > target:
            raise ConsistencyError("mass overshot (N-1)/12; duplicate classes?")
    classes = ClassList(level, order, ideals, right_orders, weights)
    _check_class_invariants(classes, target)
    return classes


def _check_class_invariants(classes, target):
    if classes.mass() != target:
        raise ConsistencyError("mass formula failed after enumeration")
    prod = 1
    for w in classes.weights:
        prod *= w
    if prod != target.denominator:
        raise ConsistencyError(
            f"weight product {prod} != mass denominator {target.denominator}")


def _next_prime(p):
    from .quatalg import is_prime
    q = p + 1
    while not is_prime(q):
        q += 1
    return q
