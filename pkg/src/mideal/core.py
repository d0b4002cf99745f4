"""Exact monomial and monomial-ideal arithmetic.

A monomial is a plain tuple of nonnegative exponents.  A `MonomialIdeal`
stores the ambient dimension and its minimal generators in canonical order
(degree-lexicographic with x1 > x2 > ...), so two ideals are
equal exactly when their representations are equal.

Variable indices are 0-based internally; names are only attached when
printing.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Sequence

from .errors import ConsistencyError, DimensionError, PreconditionError, SizeGuardError

Monomial = tuple  # tuple[int, ...]

MAX_DIM = 24


def degree(m: Monomial) -> int:
    return sum(m)


def divides(a: Monomial, b: Monomial) -> bool:
    """True iff x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x <= y else y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_quotient(a: Monomial, b: Monomial) -> Monomial:
    """x^a / gcd(x^a, x^b)."""
    return tuple(x - y if x > y else 0 for x, y in zip(a, b))


def monomial_key(m: Monomial):
    """Degree first, then lexicographic with x1 > x2 > ... (deglex)."""
    return (sum(m), tuple(-e for e in m))


def unit_monomial(n: int) -> Monomial:
    return (0,) * n


def variable(n: int, i: int) -> Monomial:
    e = [0] * n
    e[i] = 1
    return tuple(e)


def _minimalize(gens: Iterable[Monomial]) -> tuple:
    cands = sorted(set(gens), key=monomial_key)
    kept: list = []
    # bucket kept generators by support so the divisibility scan can skip
    # generators whose support is not contained in the candidate's
    by_support: dict = {}
    for c in cands:
        csupp = 0
        for i, e in enumerate(c):
            if e:
                csupp |= 1 << i
        hit = False
        for supp, group in by_support.items():
            if supp & ~csupp:
                continue
            for k in group:
                if all(x <= y for x, y in zip(k, c)):
                    hit = True
                    break
            if hit:
                break
        if not hit:
            kept.append(c)
            by_support.setdefault(csupp, []).append(c)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    gens: tuple

    def __post_init__(self):
        if self.n < 0:
            raise DimensionError("ambient dimension must be nonnegative")

    @classmethod
    def from_generators(cls, gens: Iterable[Sequence[int]], n: int | None = None) -> "MonomialIdeal":
        return minimal_generators(gens, n)

    def __len__(self):
        return len(self.gens)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.gens)

    def __contains__(self, m) -> bool:
        return contains(self, tuple(m))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def degrees(self) -> list:
        return [sum(g) for g in self.gens]

    def is_equigenerated(self) -> bool:
        return len(set(self.degrees())) <= 1

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def __str__(self):
        return format_ideal(self)


def minimal_generators(gens: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
    """Return the ideal generated by ``gens`` with a canonical minimal basis."""
    gens = [tuple(int(e) for e in g) for g in gens]
    if n is None:
        if not gens:
            raise DimensionError("cannot infer the dimension of an empty generator list")
        n = len(gens[0])
    for g in gens:
        if len(g) != n:
            raise DimensionError(f"monomial {g} has length {len(g)}, expected {n}")
        if any(e < 0 for e in g):
            raise ValueError(f"negative exponent in {g}")
    return MonomialIdeal(n, _minimalize(gens))


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ())


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, (unit_monomial(n),))


def _check_dim(*ideals):
    n = ideals[0].n
    for J in ideals[1:]:
        if J.n != n:
            raise DimensionError(f"ambient dimensions differ: {n} vs {J.n}")
    return n


def contains(I: MonomialIdeal, m: Monomial) -> bool:
    if len(m) != I.n:
        raise DimensionError(f"monomial of length {len(m)} in a ring of dimension {I.n}")
    for g in I.gens:
        if all(x <= y for x, y in zip(g, m)):
            return True
    return False


def is_subideal(J: MonomialIdeal, I: MonomialIdeal) -> bool:
    """True iff J is contained in I."""
    _check_dim(I, J)
    return all(contains(I, g) for g in J.gens)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    n = _check_dim(I, J)
    # a generator of one ideal that already lies in the other is a generator
    # of the intersection candidate set; only the remaining pairs need lcms
    out = []
    a_rest = []
    for a in I.gens:
        if contains(J, a):
            out.append(a)
        else:
            a_rest.append(a)
    b_rest = []
    for b in J.gens:
        if contains(I, b):
            out.append(b)
        else:
            b_rest.append(b)
    for a in a_rest:
        for b in b_rest:
            out.append(mono_lcm(a, b))
    return MonomialIdeal(n, _minimalize(out))


def intersect_all(ideals: Sequence[MonomialIdeal], n: int | None = None) -> MonomialIdeal:
    if not ideals:
        if n is None:
            raise DimensionError("empty intersection needs an explicit dimension")
        return unit_ideal(n)
    result = ideals[0]
    for J in ideals[1:]:
        result = intersect(result, J)
    return result


def add(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    n = _check_dim(I, J)
    return MonomialIdeal(n, _minimalize(I.gens + J.gens))


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    n = _check_dim(I, J)
    return MonomialIdeal(n, _minimalize(mono_mul(a, b) for a in I.gens for b in J.gens))


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """I^k; ``power(I, 0)`` is the unit ideal by convention."""
    if k < 0:
        raise PreconditionError("power exponent must be nonnegative")
    result = unit_ideal(I.n)
    base = I
    while k:
        if k & 1:
            result = multiply(result, base)
        k >>= 1
        if k:
            base = multiply(base, base)
    return result


def colon(I: MonomialIdeal, J) -> MonomialIdeal:
    """I : J for a monomial ideal or a single monomial J."""
    if isinstance(J, MonomialIdeal):
        _check_dim(I, J)
        if J.is_zero:
            raise PreconditionError("colon by the zero ideal")
        return intersect_all([colon(I, g) for g in J.gens])
    m = tuple(J)
    if len(m) != I.n:
        raise DimensionError(f"monomial of length {len(m)} in a ring of dimension {I.n}")
    return MonomialIdeal(I.n, _minimalize(mono_quotient(g, m) for g in I.gens))


def min_degree(I: MonomialIdeal) -> int:
    if I.is_zero:
        raise PreconditionError("min_degree of the zero ideal")
    return sum(I.gens[0])


def max_degree(I: MonomialIdeal) -> int:
    if I.is_zero:
        raise PreconditionError("max_degree of the zero ideal")
    return max(sum(g) for g in I.gens)


# --------------------------------------------------------------------------
# monomial primes


@dataclass(frozen=True)
class PrimeIdeal:
    n: int
    support: frozenset

    def __post_init__(self):
        object.__setattr__(self, "support", frozenset(self.support))
        if not self.support:
            raise PreconditionError("a monomial prime needs a nonempty support")
        if min(self.support) < 0 or max(self.support) >= self.n:
            raise DimensionError(f"support {sorted(self.support)} outside 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, indices: Iterable[int]) -> "PrimeIdeal":
        return cls(n, frozenset(indices))

    @classmethod
    def maximal(cls, n: int) -> "PrimeIdeal":
        return cls(n, frozenset(range(n)))

    @property
    def indices(self) -> tuple:
        """Sorted support; this is also the index map of the localized ring."""
        return tuple(sorted(self.support))

    @property
    def height(self) -> int:
        return len(self.support)

    @property
    def mask(self) -> int:
        m = 0
        for i in self.support:
            m |= 1 << i
        return m

    def sort_key(self):
        return (len(self.support), self.indices)

    def is_maximal(self) -> bool:
        return len(self.support) == self.n

    def __le__(self, other):
        return self.support <= other.support

    def __lt__(self, other):
        return self.support < other.support

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.n, tuple(sorted((variable(self.n, i) for i in self.support),
                                                  key=monomial_key)))

    def __str__(self):
        return format_prime(self)


def prime_from_mask(n: int, mask: int) -> PrimeIdeal:
    return PrimeIdeal(n, frozenset(i for i in range(n) if mask >> i & 1))


def check_dim_guard(n: int, max_n: int | None = None):
    if max_n is None:
        max_n = MAX_DIM
    if n > max_n:
        raise SizeGuardError(f"ambient dimension {n} exceeds the subset-enumeration guard {max_n}")


def nonempty_masks(n: int, max_n: int | None = None) -> range:
    check_dim_guard(n, max_n)
    return range(1, 1 << n)


def weight(m: Monomial, support) -> int:
    """Sum of the exponents of ``m`` over the indices in ``support``."""
    return sum(m[i] for i in support)


def in_prime_power(m: Monomial, p: PrimeIdeal, a: int) -> bool:
    """Membership in p^a by the degree-sum criterion."""
    return weight(m, p.support) >= a


def _monomials_of_degree(indices: Sequence[int], n: int, d: int):
    for combo in combinations_with_replacement(indices, d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        yield tuple(e)


def prime_power(p: PrimeIdeal, a: int) -> MonomialIdeal:
    """Explicit generators of p^a (all degree-a monomials in the variables of p)."""
    if a < 0:
        raise PreconditionError("negative exponent")
    return MonomialIdeal(p.n, tuple(sorted(_monomials_of_degree(p.indices, p.n, a), key=monomial_key)))


def intersect_prime_power(I: MonomialIdeal, p: PrimeIdeal, a: int) -> MonomialIdeal:
    """I ∩ p^a without expanding p^a: (g) ∩ p^a = g · p^(a - g(F))."""
    _check_dim(I, p.ideal())
    out = []
    idx = p.indices
    for g in I.gens:
        need = a - weight(g, idx)
        if need <= 0:
            out.append(g)
        else:
            for q in _monomials_of_degree(idx, I.n, need):
                out.append(mono_mul(g, q))
    return MonomialIdeal(I.n, _minimalize(out))


def intersect_prime_powers(components: Sequence, n: int) -> MonomialIdeal:
    """Intersection of p^a over (PrimeIdeal, a) pairs; empty list gives the unit ideal."""
    result = unit_ideal(n)
    # small primes first keeps intermediate generator sets small
    for p, a in sorted(components, key=lambda c: (c[0].height, c[1], c[0].indices)):
        if p.n != n:
            raise DimensionError("component dimension mismatch")
        result = intersect_prime_power(result, p, a)
    return result


def maximal_ideal(n: int) -> MonomialIdeal:
    return PrimeIdeal.maximal(n).ideal()


def localize(I: MonomialIdeal, p: PrimeIdeal) -> MonomialIdeal:
    """Monomial localization I(p) in the ring on the variables of p.

    Variables outside p are set to 1.  The result lives in dimension |p|;
    coordinate k of the result is variable ``p.indices[k]`` of the source.
    """
    if p.n != I.n:
        raise DimensionError(f"prime in dimension {p.n}, ideal in dimension {I.n}")
    idx = p.indices
    return MonomialIdeal(len(idx), _minimalize(tuple(g[i] for i in idx) for g in I.gens))


def embed(J: MonomialIdeal, p: PrimeIdeal) -> MonomialIdeal:
    """Re-embed an ideal of S(p) into the ambient ring of p."""
    idx = p.indices
    if J.n != len(idx):
        raise DimensionError("ideal does not live in the localized ring of p")
    out = []
    for g in J.gens:
        e = [0] * p.n
        for k, i in enumerate(idx):
            e[i] = g[k]
        out.append(tuple(e))
    return MonomialIdeal(p.n, _minimalize(out))


def saturate(I: MonomialIdeal, p: PrimeIdeal) -> MonomialIdeal:
    """I : p^∞, by iterated colon with p until stable."""
    if p.n != I.n:
        raise DimensionError(f"prime in dimension {p.n}, ideal in dimension {I.n}")
    if I.is_zero:
        return I
    P = p.ideal()
    # every proper step adds a monomial of the box below the generator maximum
    cap = 1
    for i in range(I.n):
        cap *= max(g[i] for g in I.gens) + 1
    current = I
    for _ in range(cap + 1):
        nxt = colon(current, P)
        if nxt == current:
            return current
        current = nxt
    raise ConsistencyError(f"saturation did not stabilize within {cap} colon steps", I, current)


def truncate(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """I_{>=k} = I ∩ m^k."""
    if k < 0:
        raise PreconditionError("truncation degree must be nonnegative")
    if I.is_zero or I.n == 0:
        return I
    return intersect_prime_power(I, PrimeIdeal.maximal(I.n), k)


def support_mask(m: Monomial) -> int:
    s = 0
    for i, e in enumerate(m):
        if e:
            s |= 1 << i
    return s


# --------------------------------------------------------------------------
# printing


def default_names(n: int) -> list:
    return [f"x{i + 1}" for i in range(n)]


def format_monomial(m: Monomial, names: Sequence[str] | None = None, sep: str = "*") -> str:
    names = names or default_names(len(m))
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return sep.join(parts) if parts else "1"


def format_ideal(I: MonomialIdeal, names: Sequence[str] | None = None) -> str:
    if I.is_zero:
        return "(0)"
    return "(" + ", ".join(format_monomial(g, names) for g in I.gens) + ")"


def format_prime(p: PrimeIdeal, names: Sequence[str] | None = None) -> str:
    names = names or default_names(p.n)
    return "(" + ",".join(names[i] for i in p.indices) + ")"
