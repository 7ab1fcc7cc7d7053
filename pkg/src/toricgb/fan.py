"""Gröbner cones, initial ideals, and regular triangulations.

The weight vectors selecting one fixed reduced Gröbner basis form a
closed polyhedral cone, and the cones of all reduced bases fit together
into a complete fan.  This module counts cone facets, enumerates the
distinct monomial initial ideals, builds the regular triangulation
induced by a lifting weight, and checks the combinatorial statements
tying the two pictures together: the Stanley-Reisner correspondence and
the chain condition on associated primes of initial ideals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .buchberger import GroebnerBasis, buchberger
from .errors import (
    DimensionMismatch,
    LimitExceeded,
    NonGenericOmega,
    ToricError,
)
from .exactmath import (
    IntMatrix,
    dot,
    feasible_witness,
    is_irredundant,
    primitive,
    rank,
    solve_affine,
)
from .orders import term_order
from .toric import ConfigMatrix, toric_generators, universal_gb


def _minimal_exponents(items):
    """The antichain of componentwise-minimal vectors among `items`."""
    uniq = sorted(set(tuple(g) for g in items))
    keep = []
    for g in uniq:
        dominated = any(
            h != g and all(x <= y for x, y in zip(h, g)) for h in uniq
        )
        if not dominated:
            keep.append(g)
    return tuple(keep)


class MonomialIdeal:
    """A monomial ideal stored by its unique minimal generators.

    The empty generator list is the zero ideal; the all-zero exponent
    vector generates the unit ideal.
    """

    __slots__ = ("gens", "n")

    def __init__(self, gens, n: int):
        items = []
        for g in gens:
            t = tuple(int(e) for e in g)
            if len(t) != n:
                raise DimensionMismatch(
                    f"exponent vector of length {len(t)}, expected {n}"
                )
            if any(e < 0 for e in t):
                raise ToricError("monomial exponents must be nonnegative")
            items.append(t)
        self.gens = _minimal_exponents(items)
        self.n = n

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def contains(self, m) -> bool:
        """Whether the monomial with exponent vector m lies in the ideal."""
        return any(all(g[i] <= m[i] for i in range(self.n)) for g in self.gens)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and self.gens == other.gens

    def __hash__(self):
        return hash((self.n, self.gens))

    def __repr__(self):
        return f"MonomialIdeal({len(self.gens)} generators, {self.n} variables)"


@dataclass(frozen=True)
class Cone:
    """Intersection of half-spaces {w : g . w >= 0}, one g per inequality."""

    inequalities: tuple
    lineality_dim: int
    irredundant: bool

    @property
    def facet_count(self) -> int:
        return len(self.inequalities)

    def contains(self, omega, strict: bool = False) -> bool:
        if strict:
            return all(dot(g, omega) > 0 for g in self.inequalities)
        return all(dot(g, omega) >= 0 for g in self.inequalities)


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex given by its facets (inclusion-maximal faces)."""

    n_vertices: int
    facets: tuple

    def __post_init__(self):
        cleaned = []
        for f in self.facets:
            t = tuple(sorted(int(i) for i in f))
            if len(set(t)) != len(t):
                raise ToricError("repeated vertex in a facet")
            if t and not (0 <= t[0] and t[-1] < self.n_vertices):
                raise DimensionMismatch("facet vertex out of range")
            cleaned.append(t)
        cleaned = sorted(set(cleaned))
        sets = [set(f) for f in cleaned]
        for a in range(len(cleaned)):
            for b in range(len(cleaned)):
                if a != b and sets[a] <= sets[b]:
                    raise ToricError("facet contained in another facet")
        object.__setattr__(self, "facets", tuple(cleaned))

    def is_face(self, tau) -> bool:
        t = set(tau)
        return any(t <= set(f) for f in self.facets)


def groebner_cone(G: GroebnerBasis) -> Cone:
    """The closed cone of weights under which G stays the reduced basis.

    Each basis element contributes the inequality w . (lead - trail) >= 0.
    The normals live in the kernel lattice, which is exactly the
    orthogonal complement of the cone's lineality space, so no projection
    is needed before deduplication; primitive scaling plus redundancy
    removal leaves one inequality per facet.
    """
    n = G.order.n
    seen, normals = set(), []
    for g in G.elements:
        v = primitive(g.vector)
        if v not in seen:
            seen.add(v)
            normals.append(v)
    if not normals:
        return Cone((), n, True)
    lineality = n - rank(IntMatrix(tuple(normals)))
    keep = list(normals)
    for i in range(len(keep) - 1, -1, -1):
        if not is_irredundant(keep, i):
            del keep[i]
    return Cone(tuple(sorted(keep)), lineality, True)


def enumerate_initial_ideals(A: ConfigMatrix, max_graver: int = 22):
    """All distinct monomial initial ideals with interior weight witnesses.

    Returns (ideal, witness) pairs; the count equals the number of
    maximal cones in the Gröbner fan.
    """
    _, ideals, witnesses = universal_gb(A, max_graver=max_graver)
    return list(zip(ideals, witnesses))


def _face_witness(cols, w, sigma, d):
    """A point y with a_i.y = w_i on sigma and a_j.y < w_j off sigma, or None."""
    inside = set(sigma)
    sol = solve_affine([cols[i] for i in sigma], [w[i] for i in sigma], ncols=d)
    if sol is None:
        return None
    base, null = sol
    outside = [j for j in range(len(cols)) if j not in inside]
    if not null:
        if all(dot(cols[j], base) < w[j] for j in outside):
            return tuple(base)
        return None
    cons = []
    for j in outside:
        # a_j.(base + sum t_k z_k) < w_j, rewritten over the t coordinates
        coeffs = tuple(-dot(cols[j], z) for z in null)
        cons.append((coeffs, dot(cols[j], base) - w[j], True))
    t = feasible_witness(cons, len(null))
    if t is None:
        return None
    return tuple(
        b + sum(tk * z[i] for tk, z in zip(t, null))
        for i, b in enumerate(base)
    )


def _cone_member(cols, facet, j) -> bool:
    """Whether column j lies in the nonnegative span of the facet columns."""
    d = len(cols[0])
    rows = [[cols[i][r] for i in facet] for r in range(d)]
    sol = solve_affine(rows, cols[j], ncols=len(facet))
    if sol is None:
        return False
    coeffs, _ = sol
    return all(c >= 0 for c in coeffs)


def regular_triangulation(A: ConfigMatrix, omega,
                          max_subsets: int = 2_000_000) -> SimplicialComplex:
    """The regular triangulation of cone(A) induced by lifting heights omega.

    A subset sigma is a face exactly when some y satisfies a_i . y =
    omega_i on sigma and a_j . y < omega_j everywhere else.  Facets of a
    generic lift all have size d; a maximal face of smaller size, or a
    column left uncovered, certifies that the lifted subdivision is not
    simplicial.
    """
    d, n = A.d, A.n
    if len(omega) != n:
        raise DimensionMismatch(f"weight of length {len(omega)}, expected {n}")
    w = [Fraction(x) for x in omega]
    if sum(comb(n, k) for k in range(d + 1)) > max_subsets:
        raise LimitExceeded("too many column subsets to scan")
    cols = [A.matrix.col(j) for j in range(n)]
    faces = []
    for k in range(d + 1):
        for sigma in itertools.combinations(range(n), k):
            if k and rank(IntMatrix(tuple(cols[i] for i in sigma))) < k:
                continue
            if _face_witness(cols, w, sigma, d) is not None:
                faces.append(sigma)
    sets = [set(f) for f in faces]
    facets = [f for f, fs in zip(faces, sets) if not any(fs < gs for gs in sets)]
    if any(len(f) != d for f in facets):
        raise NonGenericOmega(
            "weight is not generic: the induced subdivision has a cell "
            "that is not a simplex"
        )
    for j in range(n):
        if not any(_cone_member(cols, f, j) for f in facets):
            raise NonGenericOmega(
                f"column {j} is not covered by any facet cone"
            )
    return SimplicialComplex(n, tuple(facets))


def _intersect_gens(a, b):
    """Generators of the intersection of two monomial ideals."""
    return list(_minimal_exponents(
        tuple(max(x, y) for x, y in zip(g, h)) for g in a for h in b
    ))


def _minimal_nonfaces(delta: SimplicialComplex, max_subsets: int = 2_000_000):
    n = delta.n_vertices
    top = max((len(f) for f in delta.facets), default=0)
    if sum(comb(n, k) for k in range(1, top + 2)) > max_subsets:
        raise LimitExceeded("too many vertex subsets to scan")
    out = []
    for k in range(1, top + 2):
        for tau in itertools.combinations(range(n), k):
            if delta.is_face(tau):
                continue
            if all(delta.is_face(tau[:i] + tau[i + 1:]) for i in range(k)):
                out.append(tuple(1 if i in tau else 0 for i in range(n)))
    return out


def stanley_reisner(delta: SimplicialComplex) -> MonomialIdeal:
    """The ideal of non-faces, computed two ways and cross-checked.

    The defining form intersects, over all facets, the primes generated
    by the off-facet variables; the result must coincide with the ideal
    of squarefree monomials supported on minimal non-faces.
    """
    n = delta.n_vertices
    acc = [(0,) * n]  # unit ideal: intersecting with it changes nothing
    for f in delta.facets:
        inside = set(f)
        prime = [
            tuple(1 if i == v else 0 for i in range(n))
            for v in range(n)
            if v not in inside
        ]
        acc = _intersect_gens(acc, prime)
    by_intersection = MonomialIdeal(acc, n)
    by_nonfaces = MonomialIdeal(_minimal_nonfaces(delta), n)
    if by_intersection != by_nonfaces:
        raise ToricError("Stanley-Reisner constructions disagree")
    return by_intersection


def radical_monomial(I: MonomialIdeal) -> MonomialIdeal:
    """Radical: squarefree-ize every generator, then re-minimalize."""
    return MonomialIdeal(
        [tuple(1 if e else 0 for e in g) for g in I.gens], I.n
    )


def is_squarefree(I: MonomialIdeal) -> bool:
    return all(e <= 1 for g in I.gens for e in g)


def check_radical_triangulation(A: ConfigMatrix, omega) -> bool:
    """Whether rad(in_w(I_A)) equals the Stanley-Reisner ideal of Delta_w."""
    G = buchberger(toric_generators(A), term_order(A.n, weight=omega))
    for g in G.elements:
        if dot(omega, g.vector) == 0:
            raise NonGenericOmega("weight lies on a wall of the Gröbner fan")
    init = MonomialIdeal([g.lead for g in G.elements], A.n)
    delta = regular_triangulation(A, omega)
    return radical_monomial(init) == stanley_reisner(delta)


def assoc_primes_monomial(I: MonomialIdeal, max_witnesses: int = 2_000_000):
    """Supports of the associated primes of a monomial ideal.

    A support sigma qualifies exactly when some monomial m outside I has
    (I : m) equal to the prime generated by {x_i : i in sigma}.  Witness
    exponents never need to exceed the largest generator exponent in each
    variable, so the grid below is exhaustive.
    """
    if I.n > 12:
        raise LimitExceeded("associated-prime search is limited to 12 variables")
    if I.is_zero:
        return []
    bounds = [max(g[i] for g in I.gens) for i in range(I.n)]
    count = 1
    for b in bounds:
        count *= b + 1
        if count > max_witnesses:
            raise LimitExceeded(f"witness grid larger than {max_witnesses}")
    found = set()
    for m in itertools.product(*(range(b + 1) for b in bounds)):
        if I.contains(m):
            continue
        colon = _minimal_exponents(
            tuple(max(g[i] - m[i], 0) for i in range(I.n)) for g in I.gens
        )
        if all(sum(g) == 1 for g in colon):
            found.add(frozenset(i for g in colon for i in range(I.n) if g[i]))
    return sorted(tuple(sorted(s)) for s in found)


def check_chain_property(I: MonomialIdeal) -> bool:
    """Chain condition: every embedded prime covers some associated prime.

    For each non-minimal associated prime P there must be an associated
    prime Q with supp(Q) inside supp(P) and exactly one variable fewer.
    Initial ideals of toric ideals always satisfy this; arbitrary
    monomial ideals need not.
    """
    primes = [set(p) for p in assoc_primes_monomial(I)]
    for p in primes:
        if not any(q < p for q in primes):
            continue  # minimal prime, nothing to check
        if not any(q < p and len(q) == len(p) - 1 for q in primes):
            return False
    return True
