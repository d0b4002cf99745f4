import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from mideal.core import PrimeIdeal, intersect_prime_powers, is_subideal, power, prime_from_mask
from mideal.decomp import canonical_decomposition
from mideal.errors import PreconditionError
from mideal.newton import (
    integral_closure,
    integral_closure_gaps,
    is_integrally_closed,
    minimal_primary_component,
    newton_contains,
    supporting_hyperplanes,
    symbolic_containment,
    symbolic_power,
    symbolic_power_all_primes,
    verify_newton_result,
)
from mideal.polymatroid import veronese_ideal

from conftest import MIXED_TEXT, ideal, random_ideal
from strategies import ideals


def lp_contains(I, m):
    """m ∈ con(I) iff some λ >= 0, Σλ = 1 has Σ λ_g g <= m (floating LP)."""
    gens = list(I.gens)
    A_ub = [[g[i] for g in gens] for i in range(I.n)]
    res = linprog([0] * len(gens), A_ub=A_ub, b_ub=list(m), A_eq=[[1] * len(gens)], b_eq=[1],
                  bounds=[(0, None)] * len(gens), method="highs")
    return res.status == 0


def test_membership_examples():
    I = ideal("x, y^2")
    r = newton_contains(I, (0, 1))
    assert not r and verify_newton_result(I, (0, 1), r)
    K = ideal("x^2, y^2")
    r = newton_contains(K, (1, 1))
    assert r and r.combination == {(2, 0): Fraction(1, 2), (0, 2): Fraction(1, 2)}
    for g in K.gens:
        assert newton_contains(K, g)


def test_hyperplanes_veronese(veronese):
    hs = {(tuple(sorted(h.support)), h.level, h.kind) for h in supporting_hyperplanes(veronese)}
    assert hs == {((0,), 1, "prime_power"), ((1, 2), 1, "prime_power"), ((0, 2), 2, "prime_power"),
                  ((0, 1), 3, "prime_power"), ((0, 1, 2), 4, "prime_power"),
                  ((1,), 0, "coordinate"), ((2,), 0, "coordinate")}


def test_hyperplanes_principal_and_squarefree_veronese():
    hs = {(tuple(sorted(h.support)), h.level) for h in supporting_hyperplanes(ideal("x1*x2"))}
    assert hs == {((0,), 1), ((1,), 1)}
    hs = supporting_hyperplanes(veronese_ideal(3, (1, 1, 1, 1)))
    pairs = {tuple(sorted(h.support)) for h in hs if h.kind == "prime_power"}
    coords = {tuple(sorted(h.support)) for h in hs if h.kind == "coordinate"}
    assert pairs == {(i, j) for i in range(4) for j in range(i + 1, 4)}
    assert all(h.level == 1 for h in hs if h.kind == "prime_power")
    assert coords == {(i,) for i in range(4)}


def test_hyperplanes_refuse_non_intersection_type():
    with pytest.raises(PreconditionError):
        supporting_hyperplanes(ideal("x, y^2"))


def test_integral_closure_examples(J, J2):
    assert is_integrally_closed(ideal("x, y^2"))
    assert not is_integrally_closed(ideal("x^2, y^2"))
    assert integral_closure(ideal("x^2, y^2")) == ideal("x^2, x*y, y^2")
    assert is_integrally_closed(J)
    # xyztuv averages the generators of J twice over
    assert (1, 1, 1, 1, 1, 1) in integral_closure(J2).gens


def test_minimal_primary_components():
    I = ideal(MIXED_TEXT)
    assert minimal_primary_component(I, PrimeIdeal.of(4, [0, 1])) == PrimeIdeal.of(4, [0, 1]).ideal()
    sq = ideal("x*y, y*z")
    assert minimal_primary_component(sq, PrimeIdeal.of(3, [1])) == PrimeIdeal.of(3, [1]).ideal()


def test_veronese_first_component(veronese):
    assert minimal_primary_component(veronese, PrimeIdeal.of(3, [0])) == PrimeIdeal.of(3, [0]).ideal()
    with pytest.raises(PreconditionError):
        minimal_primary_component(veronese, PrimeIdeal.maximal(3))


def test_triangle_symbolic_square():
    I = ideal("x*y, x*z, y*z")
    S = symbolic_power(I, 2)
    assert (1, 1, 1) in S.gens
    assert (1, 1, 1) not in power(I, 2)
    assert S == symbolic_power_all_primes(I, 2)


def test_containment_report(veronese):
    r = symbolic_containment(veronese, 2)
    assert r.power_is_intersection_type
    assert r.regularity_containment and r.polymatroid_containment and r.general_containment
    assert r.polymatroid_degree == 4


@settings(max_examples=120, deadline=None)
@given(ideals(max_n=3, max_gens=4, max_exp=3), st.lists(st.integers(0, 4), min_size=3, max_size=3))
def test_fme_membership_matches_lp(I, m):
    m = tuple(m[: I.n])
    r = newton_contains(I, m)
    assert verify_newton_result(I, m, r)
    assert bool(r) == lp_contains(I, m)
    assert bool(newton_contains(I, m, prefilter=False)) == bool(r)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.tuples(st.integers(1, (1 << n) - 1), st.integers(1, 3)), min_size=1, max_size=4,
             unique_by=lambda c: c[0]))))
def test_halfspaces_match_fme_for_intersection_type(data):
    n, raw = data
    comps = [(prime_from_mask(n, mask), d) for mask, d in raw]
    I = intersect_prime_powers(comps, n)
    dec = canonical_decomposition(I)
    top = [max(g[i] for g in I.gens) + 1 for i in range(n)]
    for c in product(*(range(t + 1) for t in top)):
        assert bool(newton_contains(I, c, dec=dec)) == bool(newton_contains(I, c))
    assert is_integrally_closed(I)


def test_random_closures_are_closed_and_contain_the_ideal():
    rng = random.Random(4)
    for _ in range(30):
        I = random_ideal(rng, 3, 4, 4)
        if I.is_unit:
            continue
        C = integral_closure(I)
        assert is_subideal(I, C)
        assert is_integrally_closed(C)


@settings(max_examples=150, deadline=None)
@given(ideals(max_n=3, max_gens=5, max_exp=4))
def test_corner_test_matches_full_enumeration(I):
    if I.is_unit:
        return
    assert is_integrally_closed(I) == (not integral_closure_gaps(I))
