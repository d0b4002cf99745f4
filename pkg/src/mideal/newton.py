"""Newton polyhedra, integral closure and symbolic powers.

con(I) is the convex hull of the exponents of monomials in I, i.e. the
generator hull plus the nonnegative orthant.  Membership of a lattice point
c is decided exactly: either an explicit convex combination λ of generators
with Σ λ_g g <= c, or a separator w >= 0, α with w·g >= α for all
generators and w·c < α.  Both are found by Fourier-Motzkin elimination on
the system in (w, α), whose Farkas certificate is the convex combination.

Integral closure needs only the box below the componentwise maximum of the
generators: if c ∈ con(I) and c_i exceeds every generator's i-th exponent,
then c - e_i ∈ con(I) as well, so every minimal generator of the closure
lies in that box.  Deciding closedness needs only the maximal box points
outside I.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Optional

from . import fme
from .core import (
    MonomialIdeal,
    add,
    PrimeIdeal,
    check_dim_guard,
    contains,
    embed,
    intersect_all,
    is_subideal,
    localize,
    max_degree,
    power,
    weight,
)
from .decomp import PrimePowerDecomposition, canonical_decomposition, is_intersection_type
from .errors import ConsistencyError, PreconditionError
from .resolution import regularity
from .spectrum import associated_primes, minimal_primes, socle


@dataclass(frozen=True)
class Hyperplane:
    """{ξ : Σ_{i∈F} ξ_i = level}; coordinate planes have level 0."""

    support: frozenset
    level: int
    kind: str  # "prime_power" or "coordinate"

    def sort_key(self):
        return (self.kind != "prime_power", len(self.support), tuple(sorted(self.support)), self.level)

    def format(self, names) -> str:
        return f"sum({','.join(names[i] for i in sorted(self.support))}) = {self.level}"

    def to_json(self) -> dict:
        return {"kind": self.kind, "support": [i + 1 for i in sorted(self.support)], "level": self.level}


def supporting_hyperplanes(I: MonomialIdeal, dec: PrimePowerDecomposition | None = None) -> list:
    """H_{F,d_F} per canonical component plus ξ_i = 0 for each (x_i) ∉ Ass."""
    if dec is None:
        dec = canonical_decomposition(I)
        if dec is None:
            raise PreconditionError("ideal is not of intersection type")
    out = [Hyperplane(p.support, d, "prime_power") for p, d in dec.components]
    principal = {next(iter(p.support)) for p, _ in dec.components if p.height == 1}
    out += [Hyperplane(frozenset([i]), 0, "coordinate") for i in range(I.n) if i not in principal]
    return sorted(out, key=Hyperplane.sort_key)


@dataclass(frozen=True)
class NewtonResult:
    contained: bool
    combination: Optional[dict] = None  # generator -> λ (Fraction)
    separator: Optional[tuple] = None  # (w, α)

    def __bool__(self):
        return self.contained


def verify_newton_result(I: MonomialIdeal, m, res: NewtonResult) -> bool:
    if res.contained:
        lam = res.combination
        if any(v < 0 for v in lam.values()) or sum(lam.values()) != 1:
            return False
        return all(sum(v * g[i] for g, v in lam.items()) <= m[i] for i in range(I.n))
    w, alpha = res.separator
    if any(x < 0 for x in w):
        return False
    if any(sum(a * b for a, b in zip(w, g)) < alpha for g in I.gens):
        return False
    return sum(a * b for a, b in zip(w, m)) < alpha


def newton_contains_halfspaces(dec: PrimePowerDecomposition, m) -> bool:
    """Conjunction of Σ_{i∈F} c_i >= d_F over the canonical components."""
    return all(weight(m, p.support) >= d for p, d in dec.components)


@lru_cache(maxsize=256)
def _coordinate_halfspaces(I: MonomialIdeal) -> tuple:
    """(F, indices, min_g g(F)) for every nonempty F; each half-space
    Σ_F ξ >= min_g g(F) contains con(I)."""
    check_dim_guard(I.n)
    out = []
    for F in range(1, 1 << I.n):
        idx = tuple(i for i in range(I.n) if F >> i & 1)
        out.append((F, idx, min(sum(g[i] for i in idx) for g in I.gens)))
    return tuple(out)


def newton_contains(I: MonomialIdeal, m, dec: PrimePowerDecomposition | None = None,
                    prefilter: bool = True) -> NewtonResult:
    """Exact test of m ∈ con(I) with a certificate.

    With ``dec`` (a canonical decomposition) only the half-space conjunction
    is evaluated and no certificate is produced.
    """
    m = tuple(m)
    if I.is_zero:
        raise PreconditionError("zero ideal")
    if len(m) != I.n:
        raise PreconditionError("monomial length does not match the ring")
    if dec is not None:
        return NewtonResult(newton_contains_halfspaces(dec, m))
    for g in I.gens:
        if all(x <= y for x, y in zip(g, m)):
            return NewtonResult(True, combination={g: Fraction(1)})
    n = I.n
    if prefilter:
        for F, idx, low in _coordinate_halfspaces(I):
            if sum(m[i] for i in idx) < low:
                w = tuple(Fraction(1 if F >> i & 1 else 0) for i in range(n))
                return NewtonResult(False, separator=(w, Fraction(low)))
    gens = list(I.gens)
    # variables (w_1..w_n, α)
    A = [[-g[i] for i in range(n)] + [1] for g in gens]
    b = [0] * len(gens)
    for i in range(n):
        row = [0] * (n + 1)
        row[i] = -1
        A.append(row)
        b.append(0)
    A.append(list(m) + [-1])
    b.append(-1)
    res = fme.solve(A, b)
    if res.feasible:
        x = res.point
        out = NewtonResult(False, separator=(tuple(x[:n]), x[n]))
    else:
        y = res.farkas
        t = y.get(len(A) - 1, Fraction(0))
        if t <= 0:
            raise ConsistencyError("degenerate Farkas certificate", I, m)
        lam = {gens[k]: v / t for k, v in y.items() if k < len(gens) and v}
        out = NewtonResult(True, combination=lam)
    if not verify_newton_result(I, m, out):
        raise ConsistencyError("Newton membership certificate failed verification", I, m)
    return out


def closure_box(I: MonomialIdeal) -> tuple:
    return tuple(max(g[i] for g in I.gens) for i in range(I.n))


def integral_closure_gaps(I: MonomialIdeal) -> list:
    """Lattice points of the generator box in con(I) but not in I."""
    if I.is_zero or I.is_unit:
        raise PreconditionError("need a nonzero proper ideal")
    box = closure_box(I)
    out = []
    for c in product(*(range(b + 1) for b in box)):
        if contains(I, c):
            continue
        if newton_contains(I, c):
            out.append(c)
    return out


def closure_corners(I: MonomialIdeal) -> tuple:
    """Maximal lattice points of the generator box that lie outside I.

    These are the socle monomials of I + (x_i^(b_i+1)).  Since con(I) is
    closed upwards, a gap exists iff one of these corners lies in con(I).
    """
    if I.is_zero or I.is_unit:
        raise PreconditionError("need a nonzero proper ideal")
    box = closure_box(I)
    walls = [tuple(b + 1 if j == i else 0 for j in range(I.n)) for i, b in enumerate(box)]
    return socle(add(I, MonomialIdeal.from_generators(walls, I.n))).witnesses


def is_integrally_closed(I: MonomialIdeal) -> bool:
    return not any(newton_contains(I, c) for c in closure_corners(I))


def integral_closure(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal.from_generators(list(I.gens) + integral_closure_gaps(I), I.n)


# --------------------------------------------------------------------------
# symbolic powers


def minimal_primary_component(I: MonomialIdeal, p: PrimeIdeal, check: bool = True) -> MonomialIdeal:
    """The p-primary component for a minimal prime p: I(p) pulled back to S."""
    if p not in minimal_primes(I):
        raise PreconditionError(f"{p} is not a minimal prime of the ideal")
    Q = embed(localize(I, p), p)
    if check and associated_primes(Q) != [p]:
        raise ConsistencyError("localized component is not primary", p, Q)
    return Q


def minimal_primary_components(I: MonomialIdeal) -> list:
    return [minimal_primary_component(I, p, check=False) for p in minimal_primes(I)]


def symbolic_power(I: MonomialIdeal, t: int) -> MonomialIdeal:
    """I^(t) = ⋂ Q_i^t over the primary components at minimal primes."""
    if t < 1:
        raise PreconditionError("symbolic power exponent must be positive")
    return intersect_all([power(Q, t) for Q in minimal_primary_components(I)], I.n)


def symbolic_power_all_primes(I: MonomialIdeal, t: int) -> MonomialIdeal:
    """The variant over all associated primes: ⋂_{p ∈ Ass} (I^t S_p ∩ S)."""
    It = power(I, t)
    return intersect_all([embed(localize(It, p), p) for p in associated_primes(I)], I.n)


@dataclass(frozen=True)
class ContainmentReport:
    k: int
    power_is_intersection_type: bool
    regularity: int
    regularity_containment: bool  # I^(reg(I^k)) ⊂ I^k
    polymatroid_degree: Optional[int]
    polymatroid_containment: Optional[bool]  # I^(dk) ⊂ I^k
    general_multiplier: int  # max(I) + 1
    general_containment: bool  # I^((max(I)+1) k) ⊂ I^k


def symbolic_containment(I: MonomialIdeal, k: int, force: bool = False) -> ContainmentReport:
    from .polymatroid import from_ideal

    if k < 1:
        raise PreconditionError("k must be positive")
    Ik = power(I, k)
    it = bool(is_intersection_type(Ik))
    s = regularity(Ik, force=force)
    reg_ok = is_subideal(symbolic_power(I, s), Ik)
    P = from_ideal(I)
    d = P.rank if P is not None else None
    poly_ok = is_subideal(symbolic_power(I, d * k), Ik) if P is not None else None
    r = max_degree(I) + 1
    gen_ok = is_subideal(symbolic_power(I, r * k), Ik)
    return ContainmentReport(k, it, s, reg_ok, d, poly_ok, r, gen_ok)
