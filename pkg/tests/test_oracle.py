"""Cross-checks of the brute-force reference implementations."""

import random

import pytest

from toricgb.buchberger import buchberger, normal_form
from toricgb.errors import LimitExceeded
from toricgb.fan import MonomialIdeal, enumerate_initial_ideals
from toricgb.oracle import (
    graver_bruteforce,
    irreducible_decomposition,
    kernel_vectors_up_to,
    single_step_normal_form,
    weight_grid_initial_ideals,
)
from toricgb.orders import term_order
from toricgb.toric import ConfigMatrix, graver, normalize_sign, toric_generators

TWISTED = ConfigMatrix(((1, 1, 1, 1), (0, 1, 2, 3)))


def test_kernel_vectors_small_degrees():
    assert kernel_vectors_up_to(TWISTED, 2) == [
        (0, 1, -2, 1),
        (1, -2, 1, 0),
        (1, -1, -1, 1),
    ]
    for v in kernel_vectors_up_to(TWISTED, 4):
        assert TWISTED.matrix.mulvec(v) == (0, 0)
        assert v == normalize_sign(v)


def test_kernel_vector_monomial_guard():
    with pytest.raises(LimitExceeded):
        kernel_vectors_up_to(TWISTED, 6, max_monomials=10)


def test_bruteforce_graver_matches_algebraic_graver():
    expected = sorted(normalize_sign(v) for v in graver(TWISTED))
    assert graver_bruteforce(TWISTED, 3) == expected
    line = ConfigMatrix(((1, 2),))
    assert graver_bruteforce(line, 2) == [(2, -1)]
    assert sorted(normalize_sign(v) for v in graver(line)) == [(2, -1)]


def test_bruteforce_graver_random_small_configs():
    rng = random.Random(71)
    checked = 0
    while checked < 12:
        n = rng.randint(2, 4)
        rows = tuple(
            tuple(rng.randint(0, 3) for _ in range(n))
            for _ in range(rng.randint(1, 2))
        )
        if not any(any(r) for r in rows):
            continue
        A = ConfigMatrix(rows)
        if not A.pointed:
            continue
        try:
            grv = sorted(normalize_sign(v) for v in graver(A, max_degree=12))
        except LimitExceeded:
            continue
        bound = max((A.degree(v) for v in grv), default=1)
        assert graver_bruteforce(A, bound) == grv
        checked += 1


def test_single_step_reduction_agrees_with_kstep():
    rng = random.Random(73)
    gens = toric_generators(TWISTED)
    for _ in range(20):
        w = tuple(rng.randint(-4, 4) for _ in range(4))
        G = buchberger(gens, term_order(4, weight=w))
        for _ in range(10):
            u = tuple(rng.randint(0, 6) for _ in range(4))
            assert normal_form(u, G) == single_step_normal_form(u, G)


def test_weight_grid_finds_exactly_the_fan_cells():
    grid = weight_grid_initial_ideals(TWISTED, 2, degbound=3)
    full = {I for I, _ in enumerate_initial_ideals(TWISTED)}
    assert len(grid) == len(set(grid)) == 8
    assert set(grid) == full


def test_weight_grid_radius_one_is_a_lower_bound():
    grid = weight_grid_initial_ideals(TWISTED, 1, degbound=4)
    full = {I for I, _ in enumerate_initial_ideals(TWISTED)}
    assert set(grid) <= full


def test_irreducible_decomposition_of_monomial_ideal():
    I = MonomialIdeal([(2, 0), (1, 1)], 2)
    comps = irreducible_decomposition(I)
    assert [c.gens for c in comps] == [((0, 1), (2, 0)), ((1, 0),)]
    # every component is generated by pure powers and contains the ideal
    for c in comps:
        assert all(sum(1 for e in g if e) == 1 for g in c.gens)
        assert all(c.contains(g) for g in I.gens)
    # intersecting back recovers exactly the original ideal
    for m in [(x, y) for x in range(4) for y in range(4)]:
        assert I.contains(m) == all(c.contains(m) for c in comps)


def test_irreducible_decomposition_guards():
    with pytest.raises(LimitExceeded):
        irreducible_decomposition(MonomialIdeal([(1, 1, 1, 1, 1)], 5))
    with pytest.raises(LimitExceeded):
        irreducible_decomposition(MonomialIdeal([(9, 1)], 2))
