import random
from collections import defaultdict
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mideal.core import PrimeIdeal, mono_lcm, power, prime_power
from mideal.errors import SizeGuardError
from mideal.graphs import cycle_graph, edge_ideal
from mideal.resolution import (
    betti,
    has_linear_resolution,
    matrix_rank,
    multigraded_betti_koszul,
    multigraded_betti_taylor,
    regularity,
)

from conftest import RP2_TEXT, TWO_TRIANGLES, ideal, random_ideal
from strategies import ideals


def fraction_rank(rows):
    rows = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def k_polynomial(I):
    """Σ_σ (-1)^{|σ|+1} x^{lcm σ} over nonempty subsets of generators."""
    out = defaultdict(int)
    gens = I.gens
    for r in range(1, len(gens) + 1):
        for sigma in combinations(gens, r):
            l = sigma[0]
            for g in sigma[1:]:
                l = mono_lcm(l, g)
            out[l] += (-1) ** (r + 1)
    return {k: v for k, v in out.items() if v}


def test_two_variables():
    B = betti(ideal("x,y"))
    assert B.entries == {(0, 1): 2, (1, 2): 1}


@pytest.mark.parametrize("n,d", [(2, 2), (3, 3), (4, 2), (3, 4)])
def test_powers_of_maximal_ideal_are_linear(n, d):
    m = PrimeIdeal.maximal(n)
    B = betti(prime_power(m, d))
    assert all(j == d + i for (i, j) in B.entries)
    assert B.regularity() == d


def test_c5_square_linear():
    B = betti(power(edge_ideal(cycle_graph(5)), 2))
    assert all(j == 4 + i for (i, j) in B.entries)


def test_two_triangles_powers_linear():
    I = edge_ideal(TWO_TRIANGLES)
    assert has_linear_resolution(I)
    assert has_linear_resolution(power(I, 2))


def test_c7_not_linear():
    assert not has_linear_resolution(edge_ideal(cycle_graph(7)))


def test_mixed_degrees_are_not_linear():
    assert not has_linear_resolution(ideal("x^2, x*y, x*z, x*t, y*z*t"))


def test_rp2_betti_depend_on_characteristic():
    J = ideal(RP2_TEXT)
    assert betti(J).entries == {(0, 3): 10, (1, 4): 15, (2, 5): 6}
    assert betti(J, characteristic=2).entries == {(0, 3): 10, (1, 4): 15, (2, 5): 6, (2, 6): 1, (3, 6): 1}
    assert has_linear_resolution(J)
    assert not has_linear_resolution(J, characteristic=2)


def test_size_guards(J3):
    with pytest.raises(SizeGuardError):
        betti(J3)
    rng = random.Random(3)
    I = random_ideal(rng, 5, 40, 5, min_deg=3)
    while len(I.gens) <= 16:
        I = random_ideal(rng, 5, 40, 5, min_deg=3)
    with pytest.raises(SizeGuardError):
        betti(I, method="taylor")


@settings(max_examples=150, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=5))
def test_matrix_rank_matches_fraction_elimination(rows):
    assert matrix_rank([list(r) for r in rows]) == fraction_rank(rows)


@settings(max_examples=100, deadline=None)
@given(ideals(max_n=4, max_gens=6, max_exp=3))
def test_euler_characteristic_matches_inclusion_exclusion(I):
    mg = multigraded_betti_koszul(I)
    euler = {}
    for b, per_i in mg.items():
        v = sum((-1) ** i * r for i, r in per_i.items())
        if v:
            euler[b] = v
    assert euler == k_polynomial(I)


@settings(max_examples=60, deadline=None)
@given(ideals(max_n=4, max_gens=6, max_exp=3))
def test_koszul_matches_taylor_in_characteristic_two(I):
    assert multigraded_betti_koszul(I, 2) == multigraded_betti_taylor(I, 2)
