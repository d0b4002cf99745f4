"""Intersection-type decision, canonical primary decomposition and the
strong-intersection-type test."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .core import (
    MonomialIdeal,
    PrimeIdeal,
    intersect_prime_powers,
    intersect_prime_power,
    localize,
    min_degree,
    saturate,
)
from .errors import ConsistencyError, PreconditionError
from .resolution import has_linear_resolution, regularity
from .spectrum import associated_primes, local_socle


@dataclass(frozen=True)
class PrimePowerDecomposition:
    """I = ⋂ p^d over ``components``, each a (PrimeIdeal, exponent) pair."""

    n: int
    components: tuple
    irredundant: bool

    def ideal(self) -> MonomialIdeal:
        return intersect_prime_powers(self.components, self.n)

    def primes(self) -> list:
        return [p for p, _ in self.components]

    def exponents(self) -> dict:
        return {p: d for p, d in self.components}

    def as_set(self) -> frozenset:
        return frozenset((p.support, d) for p, d in self.components)

    def __len__(self):
        return len(self.components)


def _sorted_components(components):
    return tuple(sorted(components, key=lambda c: (c[0].height, c[0].indices, c[1])))


def component_is_redundant(components, k: int) -> bool:
    """Whether dropping component ``k`` leaves the intersection unchanged.

    The other components lie in p^d iff their localization at p does, and only
    components whose prime sits inside p survive the localization, so the test
    reduces to a minimal degree in S(p).
    """
    p, d = components[k]
    pos = {v: j for j, v in enumerate(p.indices)}
    local = []
    for j, (q, e) in enumerate(components):
        if j == k or not q.support <= p.support:
            continue
        local.append((PrimeIdeal(p.height, frozenset(pos[i] for i in q.support)), e))
    inter = intersect_prime_powers(local, p.height)
    return min_degree(inter) >= d


def make_decomposition(components, n: int, source: MonomialIdeal | None = None) -> PrimePowerDecomposition:
    components = _sorted_components(components)
    seen = set()
    for p, d in components:
        if p.n != n:
            raise PreconditionError("component lives in the wrong dimension")
        if d < 1:
            raise PreconditionError("exponents must be positive")
        if p.support in seen:
            raise PreconditionError(f"prime {p} repeated in decomposition")
        seen.add(p.support)
    irredundant = not any(component_is_redundant(components, k) for k in range(len(components)))
    dec = PrimePowerDecomposition(n, components, irredundant)
    if source is not None:
        whole = dec.ideal()
        if whole != source:
            raise ConsistencyError("decomposition does not reassemble to the source ideal",
                                   source, whole)
    return dec


def remove_redundant(dec: PrimePowerDecomposition) -> PrimePowerDecomposition:
    """Greedily drop redundant components, largest primes and exponents first."""
    comps = list(dec.components)
    order = sorted(range(len(comps)), key=lambda k: (-comps[k][0].height, -comps[k][1]))
    keep = [True] * len(comps)
    for k in order:
        current = [c for j, c in enumerate(comps) if keep[j]]
        idx = sum(keep[:k])
        if component_is_redundant(current, idx):
            keep[k] = False
    return PrimePowerDecomposition(dec.n, _sorted_components(c for j, c in enumerate(comps) if keep[j]),
                                   True)


def _require_proper_nonzero(I: MonomialIdeal):
    if I.is_zero:
        raise PreconditionError("ideal is zero")
    if I.is_unit:
        raise PreconditionError("ideal is the unit ideal")


@dataclass(frozen=True)
class LocalFailure:
    """An associated prime at which min(I(p)) <= max(Soc(S(p)/I(p)))."""

    prime: PrimeIdeal
    min_degree: int
    socle_degree: int
    witness: tuple  # ambient coordinates, zero outside p


@dataclass(frozen=True)
class IntersectionTypeResult:
    is_intersection_type: bool
    associated: tuple
    exponents: dict = field(default_factory=dict)
    failures: tuple = ()

    def __bool__(self):
        return self.is_intersection_type

    @property
    def witness(self) -> Optional[LocalFailure]:
        return self.failures[0] if self.failures else None


def _embed_monomial(m, p: PrimeIdeal):
    e = [0] * p.n
    for k, i in enumerate(p.indices):
        e[i] = m[k]
    return tuple(e)


def is_intersection_type(I: MonomialIdeal, jobs: int = 1) -> IntersectionTypeResult:
    """Test min(I(p)) > max(Soc(S(p)/I(p))) at every associated prime."""
    _require_proper_nonzero(I)
    ass = associated_primes(I, jobs=jobs)
    exps = {}
    failures = []
    for p in ass:
        local = localize(I, p)
        soc = local_socle(I, p)
        mind = min_degree(local)
        exps[p] = soc.max_degree + 1
        if mind <= soc.max_degree:
            w = max(soc.witnesses, key=lambda m: (sum(m), m))
            failures.append(LocalFailure(p, mind, soc.max_degree, _embed_monomial(w, p)))
    return IntersectionTypeResult(not failures, tuple(ass), exps, tuple(failures))


def canonical_decomposition(I: MonomialIdeal, jobs: int = 1) -> Optional[PrimePowerDecomposition]:
    """(p, max socle degree of I(p) + 1) over Ass(S/I), or None when I is not
    of intersection type.  Reassembly is always verified."""
    res = is_intersection_type(I, jobs=jobs)
    if not res:
        return None
    dec = make_decomposition(list(res.exponents.items()), I.n, source=I)
    if not dec.irredundant:
        raise ConsistencyError("canonical decomposition is redundant", I, dec)
    return dec


def saturation_exponents(I: MonomialIdeal) -> dict:
    """For each associated prime p the exponent a with I(p) = sat(I(p)) ∩ m_p^a,
    or None when no such a exists."""
    _require_proper_nonzero(I)
    out = {}
    for p in associated_primes(I):
        local = localize(I, p)
        m = PrimeIdeal.maximal(local.n)
        sat = saturate(local, m)
        found = None
        for a in range(1, max(local.degrees()) + 1):
            if intersect_prime_power(sat, m, a) == local:
                found = a
                break
        out[p] = found
    return out


def verify_saturation_criterion(I: MonomialIdeal) -> bool:
    return all(a is not None for a in saturation_exponents(I).values())


@dataclass(frozen=True)
class StrongTypeResult:
    is_strong: bool
    reason: str
    failing_prime: Optional[PrimeIdeal] = None

    def __bool__(self):
        return self.is_strong


def is_strong_intersection_type(I: MonomialIdeal, force: bool = False,
                                characteristic: int = 0, jobs: int = 1) -> StrongTypeResult:
    """Intersection type with I(p) linearly resolved at every associated prime.

    Localizations not generated in a single degree fail without a Betti
    computation.
    """
    res = is_intersection_type(I, jobs=jobs)
    if not res:
        return StrongTypeResult(False, "not of intersection type", res.witness.prime)
    locals_ = {p: localize(I, p) for p in res.associated}
    for p, L in locals_.items():
        if not L.is_equigenerated():
            return StrongTypeResult(False, "localization not generated in a single degree", p)
    for p, L in locals_.items():
        if not has_linear_resolution(L, force=force, characteristic=characteristic):
            return StrongTypeResult(False, "localization has no linear resolution", p)
    return StrongTypeResult(True, "all localizations at associated primes have linear resolutions")


def exponent_bound_table(I: MonomialIdeal, force: bool = False) -> dict:
    """{p: (d_p, reg(I(p)))} over the canonical components."""
    res = is_intersection_type(I)
    if not res:
        raise PreconditionError("ideal is not of intersection type")
    return {p: (d, regularity(localize(I, p), force=force)) for p, d in res.exponents.items()}


def exponent_bound_check(I: MonomialIdeal, force: bool = False) -> bool:
    """d_p <= reg(I(p)) at every associated prime, both sides computed independently."""
    return all(d <= r for d, r in exponent_bound_table(I, force).values())
