"""Exact integer and rational linear algebra.

Everything in this module is pure Python over ``int`` and
``fractions.Fraction``; no floats anywhere.  The polyhedral routines use
Fourier-Motzkin elimination with back-substitution witnesses, which is
exponential in the worst case but entirely adequate for the handful of
variables this package works with.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, gcd, lcm

from .errors import DimensionMismatch, LimitExceeded, RankDeficient, ZeroVector


def xgcd(a: int, b: int):
    """Extended gcd: (g, s, t) with g = s*a + t*b and g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def dot(u, v) -> int:
    if len(u) != len(v):
        raise DimensionMismatch(f"dot: {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def primitive(v):
    """v divided by the gcd of its entries, keeping orientation."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ZeroVector("primitive vector of the zero vector is undefined")
    return tuple(x // g for x in v)


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored as a tuple of row tuples."""

    entries: tuple

    def __post_init__(self):
        rows = []
        for row in self.entries:
            cells = tuple(row)
            for x in cells:
                if not isinstance(x, int):
                    raise TypeError(f"integer entry expected, got {x!r}")
            rows.append(cells)
        rows = tuple(rows)
        if rows:
            w = len(rows[0])
            if any(len(r) != w for r in rows):
                raise DimensionMismatch("ragged rows")
            if w == 0:
                raise DimensionMismatch("rows must be nonempty")
        object.__setattr__(self, "entries", rows)

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def row(self, i):
        return self.entries[i]

    def col(self, j):
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries))) if self.entries else IntMatrix(())

    def submatrix(self, rows, cols) -> "IntMatrix":
        return IntMatrix(tuple(tuple(self.entries[i][j] for j in cols) for i in rows))

    def mulvec(self, v):
        if self.entries and len(v) != self.ncols:
            raise DimensionMismatch(f"mulvec: {self.ncols} cols vs vector of {len(v)}")
        return tuple(dot(r, v) for r in self.entries)

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch("matrix product shape mismatch")
        ot = other.transpose()
        return IntMatrix(
            tuple(tuple(dot(r, c) for c in ot.entries) for r in self.entries)
        )

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in r) for r in self.entries)


def identity_matrix(n: int) -> IntMatrix:
    return IntMatrix(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))


def hnf(M: IntMatrix):
    """Row Hermite normal form.

    Returns (H, U) with U unimodular and U*M = H.  Pivots are positive,
    entries above a pivot are reduced into [0, pivot), and zero rows sit
    at the bottom.  This fixes H uniquely; U is whatever the elimination
    produced.
    """
    nr, nc = M.nrows, M.ncols
    m = [list(r) for r in M.entries]
    u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    prow = 0
    for col in range(nc):
        if prow == nr:
            break
        pivot_at = next((i for i in range(prow, nr) if m[i][col] != 0), None)
        if pivot_at is None:
            continue
        if pivot_at != prow:
            m[prow], m[pivot_at] = m[pivot_at], m[prow]
            u[prow], u[pivot_at] = u[pivot_at], u[prow]
        for i in range(prow + 1, nr):
            if m[i][col] == 0:
                continue
            a, b = m[prow][col], m[i][col]
            g, s, t = xgcd(a, b)
            p, q = a // g, b // g
            # [[s, t], [-q, p]] has determinant (s*a + t*b)/g = 1
            m[prow], m[i] = (
                [s * x + t * y for x, y in zip(m[prow], m[i])],
                [-q * x + p * y for x, y in zip(m[prow], m[i])],
            )
            u[prow], u[i] = (
                [s * x + t * y for x, y in zip(u[prow], u[i])],
                [-q * x + p * y for x, y in zip(u[prow], u[i])],
            )
        if m[prow][col] < 0:
            m[prow] = [-x for x in m[prow]]
            u[prow] = [-x for x in u[prow]]
        piv = m[prow][col]
        for i in range(prow):
            f = m[i][col] // piv  # floor keeps the residue in [0, piv)
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[prow])]
                u[i] = [x - f * y for x, y in zip(u[i], u[prow])]
        prow += 1
    return IntMatrix(tuple(map(tuple, m))), IntMatrix(tuple(map(tuple, u)))


def rank(M: IntMatrix) -> int:
    H, _ = hnf(M)
    return sum(1 for r in H.entries if any(r))


def det_bareiss(M: IntMatrix) -> int:
    """Determinant by fraction-free Bareiss elimination."""
    n = M.nrows
    if n != M.ncols:
        raise DimensionMismatch("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = [list(r) for r in M.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def max_abs_minor(M: IntMatrix, k=None, max_terms: int = 2_000_000) -> int:
    """Largest absolute value of a k x k minor of M.

    With k omitted, k is the number of rows and M must have full row
    rank, so the result is positive.  Enumerates all row/column subsets;
    a guard refuses inputs where that count exceeds max_terms.
    """
    full_rows = k is None
    if full_rows:
        k = M.nrows
        if rank(M) < k:
            raise RankDeficient("maximal minors of a rank-deficient matrix are all 0")
    if k < 0 or k > M.nrows or k > M.ncols:
        raise DimensionMismatch(f"no {k} x {k} minors in a {M.nrows} x {M.ncols} matrix")
    count = comb(M.nrows, k) * comb(M.ncols, k)
    if count > max_terms:
        raise LimitExceeded(f"{count} minors exceed the cap of {max_terms}")
    best = 0
    for rsub in combinations(range(M.nrows), k):
        for csub in combinations(range(M.ncols), k):
            best = max(best, abs(det_bareiss(M.submatrix(rsub, csub))))
    return best


def kernel_lattice_basis(A: IntMatrix) -> IntMatrix:
    """Basis of the integer kernel {u : A u = 0} as matrix rows.

    A must have full row rank (RankDeficient otherwise).  The returned
    basis is itself in Hermite normal form, so it is canonical for A.
    """
    H, U = hnf(A.transpose())
    r = sum(1 for row in H.entries if any(row))
    if r != A.nrows:
        raise RankDeficient(f"matrix has rank {r}, expected {A.nrows}")
    ker_rows = U.entries[r:]
    if not ker_rows:
        return IntMatrix(())
    HB, _ = hnf(IntMatrix(ker_rows))
    return HB


def solve_affine(rows, rhs, ncols=None):
    """Solve rows * y = rhs over the rationals.

    Returns (particular, nullspace_basis) with Fraction entries, free
    variables set to 0 in the particular solution, or None when the
    system is inconsistent.
    """
    if len(rows) != len(rhs):
        raise DimensionMismatch("one right-hand side per equation")
    if ncols is None:
        if not rows:
            raise DimensionMismatch("cannot infer width of an empty system")
        ncols = len(rows[0])
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots = []
    prow = 0
    for col in range(ncols):
        piv = next((i for i in range(prow, len(aug)) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[prow], aug[piv] = aug[piv], aug[prow]
        inv = 1 / aug[prow][col]
        aug[prow] = [x * inv for x in aug[prow]]
        for i in range(len(aug)):
            if i != prow and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[prow])]
        pivots.append(col)
        prow += 1
    for i in range(prow, len(aug)):
        if aug[i][ncols] != 0:
            return None
    particular = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        particular[col] = aug[i][ncols]
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for i, col in enumerate(pivots):
            vec[col] = -aug[i][free]
        basis.append(tuple(vec))
    return tuple(particular), tuple(basis)


# ---------------------------------------------------------------------------
# Linear inequality systems.
#
# A constraint is a triple (coeffs, rhs, strict) and means
#     coeffs . x >  rhs   when strict is true,
#     coeffs . x >= rhs   otherwise.
# ---------------------------------------------------------------------------


def _normalize_constraint(con, n):
    a, b, strict = con
    if len(a) != n:
        raise DimensionMismatch(f"constraint of width {len(a)}, expected {n}")
    fracs = [Fraction(x) for x in a] + [Fraction(b)]
    scale = lcm(*(f.denominator for f in fracs)) if fracs else 1
    ints = [int(f * scale) for f in fracs]
    if not any(ints[:-1]):
        # constant constraint; only the sign of the rhs matters
        c = ints[-1]
        return ((0,) * n, 0 if c == 0 else (1 if c > 0 else -1), bool(strict))
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    return (tuple(ints[:-1]), ints[-1], bool(strict))


def _dedupe(cons):
    # same normal: keep the strongest bound (larger rhs; strict beats weak)
    best = {}
    for a, b, strict in cons:
        cur = best.get(a)
        if cur is None or (b, strict) > cur:
            best[a] = (b, strict)
    return [(a, b, s) for a, (b, s) in best.items()]


def _eliminate(cons, k):
    pos, neg, rest = [], [], []
    for c in cons:
        ck = c[0][k]
        (pos if ck > 0 else neg if ck < 0 else rest).append(c)
    out = list(rest)
    n = len(cons[0][0]) if cons else 0
    for ap, bp, sp in pos:
        for aq, bq, sq in neg:
            mp, mq = -aq[k], ap[k]  # both positive, so the sense is preserved
            a = tuple(mp * x + mq * y for x, y in zip(ap, aq))
            out.append(_normalize_constraint((a, mp * bp + mq * bq, sp or sq), n))
    return _dedupe(out)


def feasible_witness(constraints, n):
    """A rational point satisfying every constraint, or None.

    Fourier-Motzkin elimination from the highest variable down, then
    back-substitution picking midpoints (or an endpoint shifted by 1 when
    only one side is bounded).
    """
    levels = [None] * (n + 1)
    levels[n] = _dedupe([_normalize_constraint(c, n) for c in constraints])
    for k in range(n - 1, -1, -1):
        levels[k] = _eliminate(levels[k + 1], k)
    for _, b, strict in levels[0]:
        # constant constraints read 0 > b or 0 >= b
        if b >= 0 if strict else b > 0:
            return None
    x = [Fraction(0)] * n
    for k in range(n):
        lo = up = None
        lo_strict = up_strict = False
        for a, b, strict in levels[k + 1]:
            if a[k] == 0:
                continue
            bound = Fraction(b - sum(a[i] * x[i] for i in range(k)), a[k])
            if a[k] > 0:
                if lo is None or bound > lo or (bound == lo and strict):
                    lo, lo_strict = bound, strict
            else:
                if up is None or bound < up or (bound == up and strict):
                    up, up_strict = bound, strict
        if lo is None and up is None:
            x[k] = Fraction(0)
        elif lo is None:
            x[k] = up - 1
        elif up is None:
            x[k] = lo + 1
        elif lo == up:
            x[k] = lo  # projection feasibility rules out a strict tie
        else:
            x[k] = (lo + up) / 2
    return tuple(x)


def strict_feasible(vectors):
    """A rational y with v . y > 0 for every v, or None.

    The input is homogeneous: each vector contributes the open constraint
    v . y > 0.
    """
    vectors = list(vectors)
    if not vectors:
        raise DimensionMismatch("no vectors given")
    n = len(vectors[0])
    return feasible_witness([(v, 0, True) for v in vectors], n)


def is_irredundant(ineqs, index: int) -> bool:
    """Whether inequality `index` is essential for the cone {w : g.w >= 0}.

    True iff some w has ineqs[index].w < 0 while g.w >= 0 for every other
    g.  Callers should deduplicate the vectors first: a duplicate row
    masks its twin and both test as redundant.
    """
    vectors = list(ineqs)
    if not vectors:
        raise DimensionMismatch("no inequalities given")
    n = len(vectors[0])
    system = []
    for j, g in enumerate(vectors):
        if j == index:
            system.append((tuple(-x for x in g), 0, True))
        else:
            system.append((g, 0, False))
    return feasible_witness(system, n) is not None
