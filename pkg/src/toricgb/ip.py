"""Integer programming over fibers {x in N^n : Ax = b}.

Minimizing a linear cost over a fiber is normal-form reduction: compute
the reduced Gröbner basis for the cost order and reduce any feasible
point.  The module also carries the elimination-order pipeline that
starts from the monomial t^b, fiber enumeration, skeleton graphs, and a
literal test-set checker.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .buchberger import GroebnerBasis, buchberger, normal_form
from .errors import (
    DimensionMismatch,
    GuardViolated,
    LimitExceeded,
    NegativeEntries,
    NotPointed,
)
from .exactmath import solve_affine
from .orders import term_order
from .toric import ConfigMatrix, toric_generators


@dataclass(frozen=True)
class IPInstance:
    """Minimize omega . x subject to Ax = b, x nonnegative integer."""

    A: ConfigMatrix
    omega: tuple
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "omega", tuple(self.omega))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        if len(self.omega) != self.A.n:
            raise DimensionMismatch(
                f"cost of length {len(self.omega)}, expected {self.A.n}"
            )
        if len(self.b) != self.A.original.nrows:
            raise DimensionMismatch(
                f"right-hand side of length {len(self.b)}, "
                f"expected {self.A.original.nrows}"
            )


def _nonneg_guard(M):
    for i in range(M.ncols):
        col = M.col(i)
        if any(x < 0 for x in col):
            raise GuardViolated("matrix has a negative entry")
        if not any(col):
            raise GuardViolated(f"column {i} is zero")


def _fiber_dfs(M, b, collect, max_points=None):
    """Exhaustive search over {x >= 0 : Mx = b} for a nonnegative matrix.

    Calls collect(x) for each point found; collect returns True to stop
    early (used by feasible_point).  Upper bounds come from the residual
    right-hand side, which stays nonnegative along the search.
    """
    d, n = M.nrows, M.ncols
    cols = [M.col(i) for i in range(n)]
    # rows that some later column can still touch; a positive residual
    # outside this set kills the branch
    support = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        mask = support[i + 1]
        for j in range(d):
            if cols[i][j] > 0:
                mask |= 1 << j
        support[i] = mask
    count = 0

    def search(i, residual, point):
        nonlocal count
        if any(residual[j] > 0 and not (support[i] >> j) & 1 for j in range(d)):
            return False
        if i == n:
            if any(residual):
                return False
            count += 1
            if max_points is not None and count > max_points:
                raise LimitExceeded(f"fiber larger than {max_points} points")
            return collect(tuple(point))
        cap = min(
            (residual[j] // cols[i][j] for j in range(d) if cols[i][j] > 0),
            default=0,
        )
        for v in range(cap + 1):
            point.append(v)
            nxt = tuple(r - v * c for r, c in zip(residual, cols[i]))
            if search(i + 1, nxt, point):
                point.pop()
                return True
            point.pop()
        return False

    if any(x < 0 for x in b):
        return
    search(0, tuple(b), [])


def feasible_point(A: ConfigMatrix, b):
    """Any point of the fiber, or None.

    Requires a nonnegative matrix with no zero column so the search is
    bounded; works on the original rows, so dependent constraints are
    honoured automatically.
    """
    _nonneg_guard(A.original)
    found = []

    def collect(x):
        found.append(x)
        return True

    _fiber_dfs(A.original, tuple(int(x) for x in b), collect)
    return found[0] if found else None


def fiber(A: ConfigMatrix, b, max_points: int = 200_000):
    """The complete fiber {x >= 0 : Ax = b}, canonically sorted."""
    _nonneg_guard(A.original)
    out = []

    def collect(x):
        out.append(x)
        return False

    _fiber_dfs(A.original, tuple(int(x) for x in b), collect, max_points)
    return sorted(out)


def _graded_feasible(A: ConfigMatrix, b, max_nodes=None):
    """Feasible point for a pointed configuration, negative entries allowed.

    Any solution has grading degree w . b where the rational w expresses
    the grading in terms of the rows, so the search runs over the finite
    simplex {x >= 0 : grading . x <= that degree}.
    """
    bk = A.project_rhs(b)
    if bk is None:
        return None
    M = A.matrix
    gamma = A.grading
    sol = solve_affine(
        [M.col(i) for i in range(M.ncols)], gamma, ncols=M.nrows
    )
    w, _ = sol  # the grading lies in the row space by construction
    g0 = sum(Fraction(wi) * bi for wi, bi in zip(w, bk))
    if g0 < 0 or g0.denominator != 1:
        return None
    g0 = int(g0)
    n = M.ncols
    cols = [M.col(i) for i in range(n)]
    nodes = 0

    def search(i, budget, image, point):
        nonlocal nodes
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            raise LimitExceeded(f"feasibility search exceeded {max_nodes} nodes")
        if i == n:
            if budget == 0 and image == bk:
                return tuple(point)
            return None
        for v in range(budget // gamma[i] + 1):
            point.append(v)
            nxt = tuple(p + v * c for p, c in zip(image, cols[i]))
            hit = search(i + 1, budget - v * gamma[i], nxt, point)
            point.pop()
            if hit is not None:
                return hit
        return None

    return search(0, g0, (0,) * M.nrows, [])


def solve_ip(inst: IPInstance, max_nodes=None):
    """The omega-optimal fiber point, ties broken by the tie-break order.

    Computes the reduced Gröbner basis for (omega, degrevlex) and takes
    the normal form of any feasible point; the result is independent of
    the starting point.  Returns None when the fiber is empty.
    """
    A = inst.A
    if not A.pointed:
        raise NotPointed("integer program needs a positively graded matrix")
    start = _graded_feasible(A, inst.b, max_nodes)
    if start is None:
        return None
    G = buchberger(toric_generators(A), term_order(A.n, weight=inst.omega))
    return normal_form(start, G)


def solve_ip_elimination(inst: IPInstance, max_elements: int = 100_000,
                         max_pairs=None):
    """Optimize by reducing t^b against the graph ideal of x_i -> t^{a_i}.

    The generators (-a_i | e_i) present the toric ideal of [I | A]
    directly, so no saturation is needed; an elimination order with the
    t block first turns reduction of t^b into the integer program.
    Returns None when t variables survive in the normal form.  The
    elimination basis can be far larger than the fiber warrants, so
    max_pairs offers a deterministic bailout (LimitExceeded).
    """
    M = inst.A.original
    if any(x < 0 for row in M.entries for x in row):
        raise NegativeEntries("elimination pipeline needs a nonnegative matrix")
    d, n = M.nrows, M.ncols
    for i in range(n):
        if not any(M.col(i)):
            raise NotPointed(f"column {i} is zero")
    gens = []
    for i in range(n):
        vec = tuple(-c for c in M.col(i))
        vec += tuple(1 if j == i else 0 for j in range(n))
        gens.append(vec)
    order = term_order(
        d + n, weight=(0,) * d + tuple(inst.omega), elimination_block=d
    )
    G = buchberger(gens, order, max_elements=max_elements, max_pairs=max_pairs)
    if any(x < 0 for x in inst.b):
        return None
    nf = normal_form(tuple(inst.b) + (0,) * n, G)
    if any(nf[:d]):
        return None
    return nf[d:]


@dataclass(frozen=True)
class SkeletonGraph:
    """Directed graph on a fiber; edges step down by oriented GB vectors."""

    vertices: tuple
    edges: tuple

    def is_connected(self) -> bool:
        """Connectivity of the underlying undirected graph."""
        if len(self.vertices) <= 1:
            return True
        adj = {v: [] for v in self.vertices}
        for v, u in self.edges:
            adj[v].append(u)
            adj[u].append(v)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for u in adj[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == len(self.vertices)

    def is_acyclic(self) -> bool:
        out = {v: [] for v in self.vertices}
        for v, u in self.edges:
            out[v].append(u)
        state = dict.fromkeys(self.vertices, 0)  # 0 new, 1 open, 2 done

        def visit(v):
            state[v] = 1
            for u in out[v]:
                if state[u] == 1 or (state[u] == 0 and not visit(u)):
                    return False
            state[v] = 2
            return True

        return all(state[v] or visit(v) for v in self.vertices)

    def sinks(self):
        has_out = {v for v, _ in self.edges}
        return tuple(v for v in self.vertices if v not in has_out)


def skeleton_graph(inst: IPInstance, G: GroebnerBasis) -> SkeletonGraph:
    """The fiber graph whose edges subtract oriented basis vectors."""
    pts = fiber(inst.A, inst.b)
    vset = set(pts)
    edges = []
    for v in pts:
        for g in G.elements:
            u = tuple(x - y for x, y in zip(v, g.vector))
            if all(x >= 0 for x in u):
                if u not in vset:
                    raise GuardViolated("edge step left the fiber")
                edges.append((v, u))
    return SkeletonGraph(tuple(pts), tuple(sorted(edges)))


def is_test_set(T, A: ConfigMatrix, omega, fibers,
                max_points: int = 200_000) -> bool:
    """Literal test-set check for the order (omega, degrevlex).

    (a) every non-optimal feasible point admits a vector of T stepping to
    a feasible, order-smaller point of the same fiber; (b) subtracting
    any vector of T from the optimum produces a negative entry.
    """
    order = term_order(A.n, weight=omega)
    vectors = [tuple(w) for w in T]
    M = A.matrix
    for b in fibers:
        pts = fiber(A, b, max_points)
        if not pts:
            continue
        opt = min(pts, key=order.key)
        image_b = M.mulvec(pts[0])
        for v in pts:
            if v == opt:
                for w in vectors:
                    if all(x - y >= 0 for x, y in zip(v, w)):
                        return False
                continue
            improved = False
            for w in vectors:
                step = tuple(x - y for x, y in zip(v, w))
                if (all(x >= 0 for x in step)
                        and M.mulvec(step) == image_b
                        and order.key(step) < order.key(v)):
                    improved = True
                    break
            if not improved:
                return False
    return True
