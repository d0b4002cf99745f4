"""Socles, the support V*(I) and associated primes via monomial localization."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .core import (
    MonomialIdeal,
    PrimeIdeal,
    _minimalize,
    contains,
    localize,
    mono_lcm,
    nonempty_masks,
    prime_from_mask,
    support_mask,
)
from .errors import NotContainedError, PreconditionError


@dataclass(frozen=True)
class SocleReport:
    """Socle of S/I: the monomials u not in I with x_i u in I for all i."""

    witnesses: tuple
    max_degree: Optional[int]

    @property
    def is_zero(self) -> bool:
        return not self.witnesses


def _require_proper(I: MonomialIdeal):
    if I.is_unit:
        raise PreconditionError("ideal is the unit ideal")


def _require_proper_nonzero(I: MonomialIdeal):
    if I.is_zero:
        raise PreconditionError("ideal is zero")
    _require_proper(I)


@lru_cache(maxsize=8192)
def socle(I: MonomialIdeal) -> SocleReport:
    """Minimal generators of I : m that are not in I.

    Each witness lies in every I : x_i without lying in I, so it is an lcm of
    one element from each of the sets {g / x_i} that escape I.  The lcms are
    built one variable at a time, discarding anything that falls into I.
    """
    _require_proper(I)
    n = I.n
    if n == 0:
        return SocleReport(((),), 0)
    if I.is_zero:
        return SocleReport((), None)
    cands = None
    for i in range(n):
        shifted = []
        for g in I.gens:
            if g[i]:
                h = list(g)
                h[i] -= 1
                h = tuple(h)
                if not contains(I, h):
                    shifted.append(h)
        if not shifted:
            return SocleReport((), None)
        shifted = _minimalize(shifted)
        if cands is None:
            cands = shifted
            continue
        nxt = []
        for c in cands:
            if any(all(x <= y for x, y in zip(s, c)) for s in shifted):
                nxt.append(c)
                continue
            for s in shifted:
                l = mono_lcm(c, s)
                if not contains(I, l):
                    nxt.append(l)
        cands = _minimalize(nxt)
        if not cands:
            return SocleReport((), None)
    return SocleReport(tuple(cands), max(sum(c) for c in cands))


def local_socle(I: MonomialIdeal, p: PrimeIdeal) -> SocleReport:
    """Socle of S(p)/I(p); witnesses are in the coordinates of S(p)."""
    return socle(localize(I, p))


def contains_ideal_in_prime(I: MonomialIdeal, p: PrimeIdeal) -> bool:
    mask = p.mask
    return all(support_mask(g) & mask for g in I.gens)


def v_star(I: MonomialIdeal, max_n: int | None = None) -> list:
    """All monomial primes containing I, ordered by height then indices."""
    _require_proper_nonzero(I)
    supports = sorted({support_mask(g) for g in I.gens})
    masks = nonempty_masks(I.n, max_n)
    out = [prime_from_mask(I.n, F) for F in masks if all(s & F for s in supports)]
    return sorted(out, key=PrimeIdeal.sort_key)


def is_associated(I: MonomialIdeal, p: PrimeIdeal) -> bool:
    _require_proper_nonzero(I)
    if not contains_ideal_in_prime(I, p):
        raise NotContainedError(f"{p} does not contain the ideal")
    return not local_socle(I, p).is_zero


def _assoc_worker(args):
    I, p = args
    return not local_socle(I, p).is_zero


def associated_primes(I: MonomialIdeal, jobs: int = 1) -> list:
    """Ass(S/I), by filtering V*(I) with the socle criterion."""
    cands = v_star(I)
    if jobs > 1 and len(cands) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            flags = list(pool.map(_assoc_worker, [(I, p) for p in cands], chunksize=4))
    else:
        flags = [not local_socle(I, p).is_zero for p in cands]
    return [p for p, f in zip(cands, flags) if f]


def minimal_primes(I: MonomialIdeal) -> list:
    cands = v_star(I)
    masks = [p.mask for p in cands]
    out = []
    for p, m in zip(cands, masks):
        if not any(o != m and (o & m) == o for o in masks):
            out.append(p)
    return out
