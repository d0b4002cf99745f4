"""Discrete polymatroids, their ideals and rank functions, and the Borel-type
classifier.

Subsets of the ground set are bitmasks (bit i for variable i) throughout.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Optional, Sequence

from .core import (
    MonomialIdeal,
    PrimeIdeal,
    check_dim_guard,
    minimal_generators,
    multiply,
    prime_from_mask,
    saturate,
    unit_ideal,
)
from .decomp import (
    PrimePowerDecomposition,
    canonical_decomposition,
    is_intersection_type,
    is_strong_intersection_type,
    make_decomposition,
)
from .errors import ConsistencyError, PreconditionError
from .spectrum import associated_primes


def as_mask(F) -> int:
    if isinstance(F, int):
        return F
    m = 0
    for i in F:
        m |= 1 << i
    return m


def mask_indices(mask: int, n: int) -> tuple:
    return tuple(i for i in range(n) if mask >> i & 1)


def exchange_violation(bases, n: int):
    """First (u, v, i) violating the exchange property, or None."""
    bset = set(bases)
    for u in bset:
        for v in bset:
            for i in range(n):
                if u[i] <= v[i]:
                    continue
                ok = False
                for j in range(n):
                    if u[j] < v[j]:
                        w = list(u)
                        w[i] -= 1
                        w[j] += 1
                        if tuple(w) in bset:
                            ok = True
                            break
                if not ok:
                    return (u, v, i)
    return None


@dataclass(frozen=True)
class DiscretePolymatroid:
    n: int
    rank: int
    bases: frozenset

    def __post_init__(self):
        object.__setattr__(self, "bases", frozenset(tuple(b) for b in self.bases))
        if not self.bases:
            raise PreconditionError("a polymatroid needs at least one base")
        for b in self.bases:
            if len(b) != self.n or any(e < 0 for e in b):
                raise PreconditionError(f"invalid base {b}")
            if sum(b) != self.rank:
                raise PreconditionError(f"base {b} does not have modulus {self.rank}")
        bad = exchange_violation(self.bases, self.n)
        if bad is not None:
            raise PreconditionError(f"exchange property fails for {bad}")

    @classmethod
    def from_bases(cls, bases: Iterable[Sequence[int]]) -> "DiscretePolymatroid":
        bases = [tuple(b) for b in bases]
        if not bases:
            raise PreconditionError("empty base set")
        return cls(len(bases[0]), sum(bases[0]), frozenset(bases))

    @cached_property
    def rank_table(self) -> tuple:
        """ρ(F) for every mask F, computed from the base set."""
        check_dim_guard(self.n)
        full = 1 << self.n
        table = [0] * full
        bases = list(self.bases)
        for F in range(1, full):
            idx = mask_indices(F, self.n)
            table[F] = max(sum(b[i] for i in idx) for b in bases)
        return tuple(table)

    def ground_rank(self, F) -> int:
        return self.rank_table[as_mask(F)]

    def tau(self, F) -> int:
        full = (1 << self.n) - 1
        return self.rank - self.rank_table[full & ~as_mask(F)]

    @cached_property
    def tau_table(self) -> tuple:
        return tuple(self.tau(F) for F in range(1 << self.n))

    def ideal(self) -> MonomialIdeal:
        return minimal_generators(self.bases, self.n)


def polymatroid_rank(P: DiscretePolymatroid, F) -> int:
    return P.ground_rank(F)


def tau(P: DiscretePolymatroid, F) -> int:
    return P.tau(F)


def from_ideal(I: MonomialIdeal) -> Optional[DiscretePolymatroid]:
    """The polymatroid whose bases are the generator exponents, if any."""
    if I.is_zero:
        raise PreconditionError("zero ideal")
    if not I.is_equigenerated():
        return None
    if exchange_violation(I.gens, I.n) is not None:
        return None
    return DiscretePolymatroid(I.n, sum(I.gens[0]), frozenset(I.gens))


def is_polymatroidal(I: MonomialIdeal) -> bool:
    return from_ideal(I) is not None


def _require_polymatroid(I: MonomialIdeal) -> DiscretePolymatroid:
    P = from_ideal(I)
    if P is None:
        raise PreconditionError("ideal is not polymatroidal")
    return P


def localization_degree(P: DiscretePolymatroid, F) -> int:
    """Generation degree of I(p_F): d - ρ([n] ∖ F)."""
    if as_mask(F) == 0:
        raise PreconditionError("F must be nonempty")
    return P.tau(F)


def canonical_decomposition_polymatroidal(I: MonomialIdeal, check: bool = True) -> PrimePowerDecomposition:
    """Components (p_F, d - ρ([n]∖F)) over the associated primes.

    Ass itself comes from the socle criterion; the rank function only supplies
    the exponents.  With ``check`` the result is compared with the socle-based
    canonical decomposition.
    """
    P = _require_polymatroid(I)
    comps = [(p, P.tau(p.mask)) for p in associated_primes(I)]
    dec = make_decomposition(comps, I.n, source=I)
    if check:
        other = canonical_decomposition(I)
        if other is None or other.components != dec.components:
            raise ConsistencyError("rank-function and socle decompositions differ", dec, other)
    return dec


def tau_closed(P: DiscretePolymatroid, F) -> bool:
    F = as_mask(F)
    if F == 0:
        raise PreconditionError("F must be nonempty")
    t = P.tau_table
    G = (F - 1) & F
    while True:
        if t[G] >= t[F]:
            return False
        if G == 0:
            return True
        G = (G - 1) & F


def tau_separable(P: DiscretePolymatroid, F) -> bool:
    F = as_mask(F)
    if F == 0:
        raise PreconditionError("F must be nonempty")
    t = P.tau_table
    G = (F - 1) & F
    while G:
        if t[G] + t[F ^ G] == t[F]:
            return True
        G = (G - 1) & F
    return False


def tau_closed_sets(P: DiscretePolymatroid) -> list:
    check_dim_guard(P.n)
    return [F for F in range(1, 1 << P.n) if tau_closed(P, F)]


def tau_decomposition(I: MonomialIdeal) -> PrimePowerDecomposition:
    """⋂ p_F^τ(F) over τ-closed, τ-inseparable F with τ(F) >= 1.

    Reassembly is verified; the irredundancy flag is computed, not assumed.
    """
    P = _require_polymatroid(I)
    check_dim_guard(I.n)
    comps = []
    for F in range(1, 1 << I.n):
        t = P.tau(F)
        if t >= 1 and tau_closed(P, F) and not tau_separable(P, F):
            comps.append((prime_from_mask(I.n, F), t))
    return make_decomposition(comps, I.n, source=I)


def full_tau_decomposition(I: MonomialIdeal) -> PrimePowerDecomposition:
    """⋂ p_F^τ(F) over every nonempty F with τ(F) >= 1."""
    P = _require_polymatroid(I)
    check_dim_guard(I.n)
    comps = [(prime_from_mask(I.n, F), P.tau(F)) for F in range(1, 1 << I.n) if P.tau(F) >= 1]
    return make_decomposition(comps, I.n, source=I)


# --------------------------------------------------------------------------
# Veronese type and transversal ideals


def veronese_ideal(d: int, caps: Sequence[int]) -> MonomialIdeal:
    """All degree-d monomials x^c with c_i <= caps[i]."""
    if sum(caps) < d:
        raise PreconditionError("caps sum below the degree: the ideal would be zero")
    if any(a < 0 for a in caps) or d < 0:
        raise PreconditionError("negative degree or cap")
    gens = [c for c in product(*(range(a + 1) for a in caps)) if sum(c) == d]
    return minimal_generators(gens, len(caps))


def veronese_rank(d: int, caps: Sequence[int], F) -> int:
    F = as_mask(F)
    return min(d, sum(a for i, a in enumerate(caps) if F >> i & 1))


def veronese_ass(d: int, caps: Sequence[int]) -> list:
    """Closed-form associated primes, valid for d >= a_i >= 1."""
    n = len(caps)
    if any(a < 1 or a > d for a in caps):
        raise PreconditionError("closed form needs d >= a_i >= 1")
    check_dim_guard(n)
    total = sum(caps)
    out = []
    for F in range(1, 1 << n):
        size = bin(F).count("1")
        outside = sum(a for i, a in enumerate(caps) if not F >> i & 1)
        if total >= d - 1 + size and outside <= d - 1:
            out.append(prime_from_mask(n, F))
    return sorted(out, key=PrimeIdeal.sort_key)


def transversal_ideal(sets: Sequence[Iterable[int]], n: int | None = None) -> MonomialIdeal:
    """p_{F_1} ⋯ p_{F_d} for 0-based index sets."""
    sets = [frozenset(F) for F in sets]
    if any(not F for F in sets):
        raise PreconditionError("empty factor")
    if n is None:
        n = max(max(F) for F in sets) + 1
    result = unit_ideal(n)
    for F in sets:
        result = multiply(result, PrimeIdeal(n, F).ideal())
    return result


def transversal_graph(sets: Sequence[Iterable[int]]) -> set:
    """Edges {i, j} (0-based factor positions) with F_i ∩ F_j nonempty."""
    sets = [frozenset(F) for F in sets]
    return {(i, j) for i in range(len(sets)) for j in range(i + 1, len(sets)) if sets[i] & sets[j]}


def transversal_rank(sets: Sequence[Iterable[int]], F) -> int:
    """ρ(F) = number of factors meeting F."""
    F = set(mask_indices(F, 64)) if isinstance(F, int) else set(F)
    return sum(1 for S in sets if F & set(S))


def normalize_transversal(sets: Sequence[Iterable[int]]):
    """Relabel onto the union of the sets; returns (relabeled sets, n)."""
    used = sorted(set().union(*map(set, sets)))
    pos = {v: k for k, v in enumerate(used)}
    return [frozenset(pos[i] for i in S) for S in sets], len(used)


# --------------------------------------------------------------------------
# Borel type


def _order(n: int, order: Sequence[int] | None) -> tuple:
    order = tuple(range(n)) if order is None else tuple(order)
    if sorted(order) != list(range(n)):
        raise PreconditionError("order must be a permutation of the variables")
    return order


def principal_borel_product(u: Sequence[int], order: Sequence[int] | None = None) -> MonomialIdeal:
    """⟨u⟩ as the product of initial-segment primes: ∏_k (x_{o_1},…,x_{o_k})^{u_{o_k}}."""
    n = len(u)
    order = _order(n, order)
    result = unit_ideal(n)
    for k, v in enumerate(order):
        if u[v]:
            p = PrimeIdeal(n, frozenset(order[: k + 1]))
            for _ in range(u[v]):
                result = multiply(result, p.ideal())
    return result


def principal_borel_closure(u: Sequence[int], order: Sequence[int] | None = None) -> MonomialIdeal:
    """Smallest monomial set containing u closed under moves x_{o_b} -> x_{o_a}, a < b."""
    n = len(u)
    order = _order(n, order)
    seen = {tuple(u)}
    frontier = [tuple(u)]
    while frontier:
        nxt = []
        for m in frontier:
            for b in range(1, n):
                vb = order[b]
                if not m[vb]:
                    continue
                for a in range(b):
                    va = order[a]
                    w = list(m)
                    w[vb] -= 1
                    w[va] += 1
                    w = tuple(w)
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
        frontier = nxt
    return minimal_generators(seen, n)


def principal_borel(u: Sequence[int], order: Sequence[int] | None = None) -> MonomialIdeal:
    """The principal Borel ideal ⟨u⟩, built two ways and cross-checked."""
    u = tuple(u)
    if not any(u):
        raise PreconditionError("principal Borel ideal of the unit monomial")
    a = principal_borel_product(u, order)
    b = principal_borel_closure(u, order)
    if a != b:
        raise ConsistencyError("product formula and Borel closure disagree", a, b)
    return a


def is_borel_type(I: MonomialIdeal, order: Sequence[int] | None = None) -> bool:
    """I : x_j^∞ = I : (x_1, …, x_j)^∞ for every j (in ``order``)."""
    order = _order(I.n, order)
    for j in range(I.n):
        left = saturate(I, PrimeIdeal(I.n, frozenset([order[j]])))
        right = saturate(I, PrimeIdeal(I.n, frozenset(order[: j + 1])))
        if left != right:
            return False
    return True


def borel_generator(I: MonomialIdeal, order: Sequence[int] | None = None):
    """The lex-smallest generator: the only possible u with I = ⟨u⟩."""
    order = _order(I.n, order)
    return min(I.gens, key=lambda g: tuple(g[v] for v in order))


def is_principal_borel(I: MonomialIdeal, order: Sequence[int] | None = None) -> bool:
    if I.is_zero or I.is_unit or not I.is_equigenerated():
        return False
    return principal_borel(borel_generator(I, order), order) == I


def chain_generator(chain: Sequence[Iterable[int]], exponents: Sequence[int], n: int):
    """For primes p_1 ⊂ … ⊂ p_s with d_1 < … < d_s return (u, order) such that
    ⋂ p_i^{d_i} = ⟨u⟩ with respect to ``order``.

    The order lists the variables of p_1, then those of p_2 ∖ p_1, and so on;
    u = x_{n_1}^{d_1} x_{n_2}^{d_2-d_1} ⋯ with x_{n_i} the last variable of p_i.
    """
    chain = [frozenset(F) for F in chain]
    for a, b in zip(chain, chain[1:]):
        if not a < b:
            raise PreconditionError("primes must form a strictly increasing chain")
    for a, b in zip(exponents, exponents[1:]):
        if not a < b:
            raise PreconditionError("exponents must be strictly increasing")
    order = []
    u = [0] * n
    prev_d = 0
    prev = frozenset()
    for F, d in zip(chain, exponents):
        order.extend(sorted(F - prev))
        u[order[-1]] += d - prev_d
        prev, prev_d = F, d
    order.extend(i for i in range(n) if i not in prev)
    return tuple(u), tuple(order)


class BorelClass(enum.Enum):
    STRONG = "strong"
    INTERSECTION_ONLY = "intersection_only"
    NEITHER = "neither"


def reconstruct_borel_generator(dec: PrimePowerDecomposition, order: Sequence[int] | None = None):
    """u from a chain-shaped canonical decomposition of a Borel-type ideal."""
    order = _order(dec.n, order)
    rank_of = {v: k for k, v in enumerate(order)}
    u = [0] * dec.n
    prev = 0
    for p, d in sorted(dec.components, key=lambda c: c[0].height):
        last = max(p.support, key=rank_of.__getitem__)
        u[last] += d - prev
        prev = d
    return tuple(u)


def borel_intersection_classifier(I: MonomialIdeal, order: Sequence[int] | None = None,
                                  force: bool = False) -> BorelClass:
    """Classify a Borel-type ideal as strong / intersection-only / neither.

    Strong intersection type is decided by Betti numbers and then compared
    with the principal-Borel test on the reconstructed generator; a mismatch is
    a consistency error.
    """
    if not is_borel_type(I, order):
        raise PreconditionError("ideal is not of Borel type")
    res = is_intersection_type(I)
    if not res:
        return BorelClass.NEITHER
    dec = make_decomposition(list(res.exponents.items()), I.n, source=I)
    u = reconstruct_borel_generator(dec, order)
    principal = any(u) and principal_borel(u, order) == I
    strong = bool(is_strong_intersection_type(I, force=force))
    if principal != strong:
        raise ConsistencyError("principal Borel test and strong-type test disagree", principal, strong)
    return BorelClass.STRONG if strong else BorelClass.INTERSECTION_ONLY


def borel_fixed_closure(monomials: Iterable[Sequence[int]], n: int) -> MonomialIdeal:
    """Smallest Borel-fixed ideal containing the given monomials."""
    gens = set()
    for m in monomials:
        gens.update(principal_borel_closure(tuple(m)).gens)
    return minimal_generators(gens, n)
