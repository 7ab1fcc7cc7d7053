"""Brute-force reference implementations for the test suite.

Everything here trades speed for obviousness: kernel vectors come from
matching monomials with equal image fiber by fiber, Graver membership is
checked against the definition, initial ideals come from grid sweeps of
weight vectors, and monomial ideals are decomposed by recursive
splitting.  The main algorithm modules never call into this one.
"""

from __future__ import annotations

import itertools

from .errors import LimitExceeded
from .fan import MonomialIdeal
from .orders import term_order
from .toric import ConfigMatrix, normalize_sign


def _monomials_by_image(A: ConfigMatrix, degbound: int, max_monomials: int):
    """Group all monomials of grading degree <= degbound by their A-image."""
    gamma = A.grading
    M = A.matrix
    n = A.n
    cols = [M.col(i) for i in range(n)]
    groups = {}
    count = 0

    def walk(i, budget, image, point):
        nonlocal count
        if i == n:
            count += 1
            if count > max_monomials:
                raise LimitExceeded(f"more than {max_monomials} monomials in range")
            groups.setdefault(image, []).append(tuple(point))
            return
        for v in range(budget // gamma[i] + 1):
            point.append(v)
            walk(
                i + 1,
                budget - v * gamma[i],
                tuple(p + v * c for p, c in zip(image, cols[i])),
                point,
            )
            point.pop()

    walk(0, int(degbound), (0,) * M.nrows, [])
    return groups


def kernel_vectors_up_to(A: ConfigMatrix, degbound: int,
                         max_monomials: int = 2_000_000):
    """All nonzero kernel vectors whose positive part has degree <= degbound.

    One representative per +- pair.  Two monomials share an A-image
    exactly when their difference is a kernel vector, and both sides of
    any such difference have equal grading degree, so each fiber lies
    entirely inside the degree cut: the enumeration is exhaustive.
    """
    found = set()
    for fiber in _monomials_by_image(A, degbound, max_monomials).values():
        for u, v in itertools.combinations(fiber, 2):
            found.add(normalize_sign(tuple(x - y for x, y in zip(u, v))))
    return sorted(found)


def _conformal(u, v) -> bool:
    # u sits in the same closed orthant as v and under it componentwise
    return all(x * y >= 0 and abs(x) <= abs(y) for x, y in zip(u, v))


def graver_bruteforce(A: ConfigMatrix, degbound: int,
                      max_monomials: int = 2_000_000):
    """Kernel vectors within the bound with no conformal decomposition.

    v survives unless some other kernel vector u (either sign) satisfies
    u below v in v's orthant; then v = u + (v - u) splits.  Equals the
    Graver basis whenever degbound reaches the true maximum degree.
    """
    kernel = kernel_vectors_up_to(A, degbound, max_monomials)
    signed = [k for v in kernel for k in (v, tuple(-x for x in v))]
    out = []
    for v in kernel:
        proper = (
            u for u in signed
            if u != v and _conformal(u, v)
        )
        if not any(proper):
            out.append(v)
    return sorted(out)


def single_step_normal_form(u, G):
    """Normal form by repeated single subtraction of a basis vector.

    Scans the basis in order, subtracts the first element whose leading
    exponent divides the current monomial, and starts over; no step-count
    shortcuts.  Agrees with the k-step reducer on reduced bases.
    """
    cur = tuple(u)
    changed = True
    while changed:
        changed = False
        for g in G.elements:
            if all(l <= c for l, c in zip(g.lead, cur)):
                cur = tuple(c - x for c, x in zip(cur, g.vector))
                changed = True
                break
    return cur


def _minimal_vectors(items):
    uniq = sorted(set(tuple(g) for g in items))
    return [
        g for g in uniq
        if not any(h != g and all(x <= y for x, y in zip(h, g)) for h in uniq)
    ]


def weight_grid_initial_ideals(A: ConfigMatrix, grid_radius: int,
                               degbound=None, max_monomials: int = 500_000):
    """Distinct initial ideals met by integer weights in a box.

    For each omega in [-r, r]^n the initial ideal of the order (omega,
    degrevlex) is read off standard monomials: within each fiber the
    order-minimal monomial is standard and the rest generate.  The
    result is a lower bound for the full fan: thin cones can slip
    between grid points.  degbound defaults to the proven reduced-basis
    degree bound and caps the monomial enumeration.
    """
    if degbound is None:
        from .toric import degree_bound

        degbound = degree_bound(A)
    groups = [
        g for g in _monomials_by_image(A, degbound, max_monomials).values()
        if len(g) > 1
    ]
    n = A.n
    ideals = set()
    for omega in itertools.product(range(-grid_radius, grid_radius + 1), repeat=n):
        key = term_order(n, weight=omega).key
        nonstandard = []
        for fiber in groups:
            best = min(fiber, key=key)
            nonstandard.extend(u for u in fiber if u != best)
        ideals.add(MonomialIdeal(_minimal_vectors(nonstandard), n))
    return sorted(ideals, key=lambda I: I.gens)


def irreducible_decomposition(I: MonomialIdeal):
    """Irredundant decomposition into irreducible monomial ideals.

    Splits any generator with two support variables: I + <x_i^{g_i}> and
    I + <g without x_i> intersect back to I.  Leaves are generated by
    pure powers.  Guarded brute force for small ideals only.
    """
    if I.n > 4:
        raise LimitExceeded("decomposition oracle is limited to 4 variables")
    if any(e > 8 for g in I.gens for e in g):
        raise LimitExceeded("decomposition oracle is limited to exponents <= 8")
    components = []
    stack = [I.gens]

    def first_mixed(gens):
        for g in gens:
            if sum(1 for e in g if e) > 1:
                return g
        return None

    while stack:
        gens = stack.pop()
        g = first_mixed(gens)
        if g is None:
            components.append(MonomialIdeal(gens, I.n))
            continue
        i = next(j for j, e in enumerate(g) if e)
        pure = tuple(e if j == i else 0 for j, e in enumerate(g))
        rest = tuple(0 if j == i else e for j, e in enumerate(g))
        stack.append(MonomialIdeal(tuple(gens) + (pure,), I.n).gens)
        stack.append(MonomialIdeal(tuple(gens) + (rest,), I.n).gens)
    uniq = sorted(set(components), key=lambda c: c.gens)
    # drop any component containing another one; irreducible components
    # make pairwise containment checks sufficient
    keep = []
    for a in uniq:
        if not any(b is not a and _contains_ideal(a, b) for b in uniq):
            keep.append(a)
    return keep


def _contains_ideal(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    """Whether ideal a contains ideal b (every generator of b is in a)."""
    return all(a.contains(g) for g in b.gens)
