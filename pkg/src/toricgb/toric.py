"""Constructions attached to an integer point configuration.

The central object is ConfigMatrix: an integer matrix whose columns are
the points.  Dependent rows are dropped up front (they change neither
the kernel nor any ideal computed from it), and a positive grading is
derived once and reused everywhere: a vector in the row space giving
every variable a strictly positive degree.  Such a grading exists
exactly when the configuration is pointed, which is what makes every
term order in sight terminate.

The toric ideal itself is obtained by the lattice-basis-plus-saturation
route: start from a kernel lattice basis and saturate one variable at a
time, each saturation being a single Groebner computation under a
reverse lexicographic order in which that variable is cheapest.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm

from .buchberger import Binomial, GroebnerBasis, buchberger
from .errors import (
    DimensionMismatch,
    LimitExceeded,
    NotACircuit,
    NotPointed,
    RankDeficient,
    ToricError,
    ZeroVector,
)
from .exactmath import (
    IntMatrix,
    det_bareiss,
    dot,
    hnf,
    kernel_lattice_basis,
    max_abs_minor,
    rank,
    solve_affine,
    strict_feasible,
)
from .orders import TermOrder, degrevlex, term_order, weighted_revlex


def normalize_sign(v):
    """One representative per +/- pair: first nonzero entry positive."""
    for x in v:
        if x > 0:
            return tuple(v)
        if x < 0:
            return tuple(-y for y in v)
    raise ZeroVector("cannot sign-normalize the zero vector")


class ConfigMatrix:
    """Point configuration with rank and pointedness sorted out once.

    Attributes:
        original: the matrix as given.
        matrix: the working matrix; dependent rows of the input dropped.
        kept_rows: indices of the surviving rows.
        grading: positive integer degrees (one per column) lying in the
            row space of the matrix, or None when the configuration is
            not pointed.  The all-ones grading is preferred when valid.
    """

    def __init__(self, rows):
        M = rows if isinstance(rows, IntMatrix) else IntMatrix(tuple(tuple(r) for r in rows))
        if M.nrows == 0 or M.ncols == 0:
            raise DimensionMismatch("configuration must have rows and columns")
        self.original = M
        kept = []
        current = None
        for i in range(M.nrows):
            cand = IntMatrix(tuple(M.entries[j] for j in kept + [i]))
            if rank(cand) == len(kept) + 1:
                kept.append(i)
                current = cand
        if current is None:
            raise DimensionMismatch("configuration has rank zero")
        self.kept_rows = tuple(kept)
        self.matrix = current
        self.grading = self._find_grading()
        self._kernel = None

    @property
    def d(self) -> int:
        return self.matrix.nrows

    @property
    def n(self) -> int:
        return self.matrix.ncols

    @property
    def pointed(self) -> bool:
        return self.grading is not None

    def _find_grading(self):
        A = self.matrix
        onescheck = solve_affine(A.transpose().entries, (1,) * A.ncols, ncols=A.nrows)
        if onescheck is not None:
            return (1,) * A.ncols
        y = strict_feasible([A.col(j) for j in range(A.ncols)])
        if y is None:
            return None
        degs = [sum(Fraction(yi) * aji for yi, aji in zip(y, A.col(j))) for j in range(A.ncols)]
        scale = lcm(*(f.denominator for f in degs))
        return tuple(int(f * scale) for f in degs)

    def kernel_basis(self):
        """Rows of a canonical lattice basis of {v : Av = 0}."""
        if self._kernel is None:
            self._kernel = kernel_lattice_basis(self.matrix)
        return self._kernel

    def degree(self, v) -> int:
        """Grading degree of the positive part of a kernel vector."""
        g = self.grading if self.grading is not None else (1,) * self.n
        return sum(gi * x for gi, x in zip(g, v) if x > 0)

    def project_rhs(self, b):
        """Right-hand side restricted to the kept rows.

        Returns None when b contradicts a dropped (dependent) row, in
        which case the fiber is empty.
        """
        if len(b) != self.original.nrows:
            raise DimensionMismatch(
                f"right-hand side of length {len(b)}, expected {self.original.nrows}"
            )
        bk = tuple(b[i] for i in self.kept_rows)
        dropped = [i for i in range(self.original.nrows) if i not in self.kept_rows]
        for i in dropped:
            sol = solve_affine(
                self.matrix.transpose().entries, self.original.row(i), ncols=self.d
            )
            y = sol[0]
            if sum(Fraction(yi) * bi for yi, bi in zip(y, bk)) != b[i]:
                return None
        return bk

    def __repr__(self):
        return f"ConfigMatrix({self.d}x{self.n}, pointed={self.pointed})"


def saturate_variable(gens, i: int, degrees=None, max_elements: int = 100_000,
                      max_degree=None):
    """Generators of (ideal of gens) : x_i^infinity, as lattice vectors.

    One Groebner computation under a reverse lexicographic order with
    x_i cheapest; in such an order x_i divides a leading term only if it
    divides the whole binomial, so stripping the shared x_i power from
    every output element saturates the ideal.  The generators must be
    homogeneous for `degrees` (any lattice of kernel vectors of a graded
    configuration is); default all-ones.
    """
    gens = [tuple(v) for v in gens]
    if not gens:
        return []
    n = len(gens[0])
    gamma = tuple(degrees) if degrees is not None else (1,) * n
    ord = weighted_revlex(gamma, cheapest=i)
    gb = buchberger(gens, ord, max_elements=max_elements, max_degree=max_degree)
    return [b.vector for b in gb.elements]


def toric_generators(A: ConfigMatrix, max_elements: int = 100_000,
                     max_degree=None):
    """Lattice vectors whose binomials generate the toric ideal of A.

    Kernel lattice basis, then one saturation per variable in ascending
    index order, then a final reduction pass under the grading-refined
    reverse lexicographic order; the output is the reduced Groebner
    basis for that order, canonically sorted.
    """
    if not A.pointed:
        raise NotPointed("toric generators require a pointed configuration")
    K = A.kernel_basis()
    if K.nrows == 0:
        return []
    gens = [tuple(r) for r in K.entries]
    for i in range(A.n):
        gens = saturate_variable(gens, i, degrees=A.grading,
                                 max_elements=max_elements, max_degree=max_degree)
    gb = buchberger(gens, _canonical_order(A), max_elements=max_elements,
                    max_degree=max_degree)
    return [b.vector for b in gb.elements]


def _canonical_order(A: ConfigMatrix) -> TermOrder:
    if A.grading == (1,) * A.n:
        return degrevlex(A.n)
    return degrevlex(A.n, weight=A.grading)


def toric_groebner(A: ConfigMatrix, ord: TermOrder = None) -> GroebnerBasis:
    """Reduced Groebner basis of the toric ideal under ord (or the default)."""
    gens = toric_generators(A)
    order = ord if ord is not None else _canonical_order(A)
    if not gens:
        return GroebnerBasis(order, (), True)
    return buchberger(gens, order)


def lawrence_lifting(M: IntMatrix) -> IntMatrix:
    """The (d+n) x 2n block matrix [[A, 0], [I, I]]."""
    d, n = M.nrows, M.ncols
    top = [tuple(row) + (0,) * n for row in M.entries]
    bottom = [
        tuple(1 if j == i else 0 for j in range(n)) * 2 for i in range(n)
    ]
    return IntMatrix(tuple(top + bottom))


def graver(A: ConfigMatrix, max_elements: int = 100_000, max_degree=None):
    """The Graver basis of A via its Lawrence lifting.

    The toric ideal of [[A, 0], [I, I]] has a unique reduced Groebner
    basis whose elements all look like x^u y^v - x^v y^u; the vectors
    u - v, one per +/- pair, form the Graver basis.

    max_degree bounds the grading degree of intermediate elements in the
    lifted computation (LimitExceeded beyond it), which is the practical
    guard for random sweeps: hopeless instances die fast.
    """
    if not A.pointed:
        raise NotPointed("Graver basis requires a pointed configuration")
    n = A.n
    lifted = ConfigMatrix(lawrence_lifting(A.matrix))
    gens = toric_generators(lifted, max_elements=max_elements,
                            max_degree=max_degree)
    gb = buchberger(gens, degrevlex(2 * n), max_elements=max_elements,
                    max_degree=max_degree)
    out = set()
    for b in gb.elements:
        w = b.vector
        u, v = w[:n], w[n:]
        if any(x + y for x, y in zip(u, v)):
            raise ToricError(
                "internal invariant violated: Lawrence Groebner element "
                f"{w} is not of the form (u, -u)"
            )
        out.add(normalize_sign(u))
    return sorted(out)


@dataclass(frozen=True)
class Circuit:
    """Primitive kernel vector of minimal support, with its true degree.

    true_degree is the degree the determinant formula assigns before
    dividing by the common factor of the maximal minors.
    """

    vector: tuple
    true_degree: int


def _circuit_scan(A: ConfigMatrix):
    """Yield (normalized vector, common factor, support set) per column subset."""
    M = A.matrix
    d, n = M.nrows, M.ncols
    all_rows = tuple(range(d))
    for S in combinations(range(n), d + 1):
        dets = [
            det_bareiss(M.submatrix(all_rows, S[:j] + S[j + 1:]))
            for j in range(d + 1)
        ]
        if not any(dets):
            continue
        c = 0
        for x in dets:
            c = gcd(c, x)
        vec = [0] * n
        for j, col in enumerate(S):
            vec[col] = (-1) ** j * dets[j] // c
        # rank(A_S) = d here, so ker(A_S) is one-dimensional and vec is
        # automatically support-minimal: a kernel vector with smaller
        # support would be a dependent multiple of vec.
        yield normalize_sign(vec), c, S


def circuits(A: ConfigMatrix):
    """All circuits of A, one per +/- pair, with true degrees.

    The true degree of a circuit is taken over every (d+1)-subset of
    columns that produces it, since the common factor can differ with
    the ambient subset when the support is smaller than d+1.
    """
    if rank(A.matrix) != A.d:
        raise RankDeficient("circuit enumeration requires full row rank")
    best = {}
    for vec, c, _ in _circuit_scan(A):
        deg = c * A.degree(vec)
        if vec not in best or deg > best[vec]:
            best[vec] = deg
    return [Circuit(v, best[v]) for v in sorted(best)]


def true_degree(c, A: ConfigMatrix) -> int:
    """Degree of a circuit before division by the minors' common factor."""
    vec = c.vector if isinstance(c, Circuit) else tuple(c)
    target = normalize_sign(vec)
    found = None
    for v, cf, _ in _circuit_scan(A):
        if v == target:
            deg = cf * A.degree(v)
            if found is None or deg > found:
                found = deg
    if found is None:
        raise NotACircuit(f"{vec} is not a circuit of the configuration")
    return found


def degree_bound(A: ConfigMatrix) -> int:
    """(n - d)(d + 1) D(A): every reduced-GB element has degree below this."""
    return (A.n - A.d) * (A.d + 1) * max_abs_minor(A.matrix)


def is_unimodular(A: ConfigMatrix) -> bool:
    """All nonzero maximal minors share one absolute value."""
    M = A.matrix
    if rank(M) != M.nrows:
        raise RankDeficient("unimodularity requires full row rank")
    values = set()
    all_rows = tuple(range(M.nrows))
    for S in combinations(range(M.ncols), M.nrows):
        v = abs(det_bareiss(M.submatrix(all_rows, S)))
        if v:
            values.add(v)
    return len(values) == 1


def universal_gb(A: ConfigMatrix, max_graver: int = 22):
    """Union of all reduced Groebner bases, with the distinct initial ideals.

    Returns (ugb, initial_ideals, witnesses):
        ugb: sign-normalized lattice vectors, sorted;
        initial_ideals: deduplicated monomial initial ideals;
        witnesses: one generic weight vector per initial ideal.

    The weight space is explored by sign patterns over the Graver
    vectors: each full-dimensional cell of the Graver hyperplane
    arrangement fixes the orientation of every Groebner basis element,
    so one interior witness per cell reaches every reduced basis.
    Infeasible sign prefixes are pruned, which is the only difference
    from enumerating all 2^N patterns.
    """
    from .fan import MonomialIdeal

    if not A.pointed:
        raise NotPointed("universal basis requires a pointed configuration")
    grv = graver(A)
    if len(grv) > max_graver:
        raise LimitExceeded(
            f"Graver basis has {len(grv)} elements; sign-pattern enumeration "
            f"is capped at {max_graver}"
        )
    base = toric_generators(A)
    n = A.n
    if not grv:
        return [], [MonomialIdeal((), n)], [(0,) * n]

    K = A.kernel_basis()
    r = K.nrows
    coords = [tuple(dot(row, g) for row in K.entries) for g in grv]

    ugb = set()
    seen_gbs = set()
    initial = {}

    def lift_weight(beta):
        w = [sum(Fraction(bi) * K.entries[i][j] for i, bi in enumerate(beta))
             for j in range(n)]
        scale = lcm(*(f.denominator for f in w))
        return tuple(int(f * scale) for f in w)

    def visit(beta):
        omega = lift_weight(beta)
        gb = buchberger(base, term_order(n, weight=omega, tiebreak="degrevlex"))
        key = gb.vectors
        if key in seen_gbs:
            return
        seen_gbs.add(key)
        for b in gb.elements:
            ugb.add(normalize_sign(b.vector))
        leads = tuple(sorted(b.lead for b in gb.elements))
        if leads not in initial:
            initial[leads] = omega

    def descend(k, signed):
        if k == len(coords):
            beta = strict_feasible(signed)
            visit(beta)
            return
        for s in (1, -1):
            nxt = signed + [tuple(s * x for x in coords[k])]
            if strict_feasible(nxt) is not None:
                descend(k + 1, nxt)

    descend(0, [])
    ideals = sorted(initial)
    return (
        sorted(ugb),
        [MonomialIdeal(gens, n) for gens in ideals],
        [initial[gens] for gens in ideals],
    )
