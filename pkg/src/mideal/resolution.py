"""Multigraded Betti numbers, regularity and linear resolutions.

Two independent routes compute Tor_i(I, K)_b:

* ``koszul``: reduced homology of the upper Koszul simplicial complex
  K^b(I) = {squarefree τ ≤ b : x^(b-τ) ∈ I}, with β_{i,b} = dim H̃_{i-1}(K^b),
  over the multidegrees of the lcm-lattice.
* ``taylor``: homology of the Taylor complex tensored with K, whose degree-b
  strand is spanned by generator subsets with lcm exactly b.

Ranks are exact: fraction-free elimination over the integers (rationals),
or modulo a prime when ``characteristic`` is set.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .core import MonomialIdeal, mono_lcm
from .errors import PreconditionError, SizeGuardError

DEFAULT_MAX_GENERATORS = 64
TAYLOR_MAX_GENERATORS = 16


def matrix_rank(rows, characteristic: int = 0) -> int:
    """Rank of an integer matrix given as a list of rows.

    Characteristic 0 uses fraction-free integer elimination, so no rational
    arithmetic is needed; a positive characteristic reduces modulo that prime.
    """
    from math import gcd

    p = characteristic
    mat = [list(r) for r in rows if any(r)]
    if p:
        mat = [[x % p for x in r] for r in mat]
        mat = [r for r in mat if any(r)]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(mat)):
            if mat[r][col]:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        prow = mat[rank]
        a = prow[col]
        if p:
            inv = pow(a, -1, p)
            prow = [(x * inv) % p for x in prow]
            mat[rank] = prow
        for r in range(rank + 1, len(mat)):
            b = mat[r][col]
            if not b:
                continue
            if p:
                mat[r] = [(x - b * y) % p for x, y in zip(mat[r], prow)]
            else:
                row = [a * x - b * y for x, y in zip(mat[r], prow)]
                g = 0
                for x in row:
                    if x:
                        g = gcd(g, x)
                        if g == 1:
                            break
                if g > 1:
                    row = [x // g for x in row]
                mat[r] = row
        rank += 1
        if rank == len(mat):
            break
    return rank


def reduced_homology(facets, characteristic: int = 0) -> dict:
    """Reduced simplicial homology ranks {dim: rank} of the complex spanned by
    ``facets`` (bitmasks over the vertex set).  Zero ranks are omitted.

    An empty facet list is the void complex (no homology); a single empty
    facet is the complex {∅}, with H̃_{-1} = K.
    """
    if not facets:
        return {}
    facets = set(facets)
    maximal = [f for f in facets if not any(g != f and f & g == f for g in facets)]
    common = maximal[0]
    for f in maximal[1:]:
        common &= f
    if common:
        # cone over any common vertex
        return {}
    faces = set()
    for f in maximal:
        sub = f
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
    by_dim = defaultdict(list)
    for f in faces:
        by_dim[bin(f).count("1") - 1].append(f)
    for d in by_dim:
        by_dim[d].sort()
    index = {d: {f: k for k, f in enumerate(fs)} for d, fs in by_dim.items()}
    top = max(by_dim)
    ranks = {}
    for d in range(0, top + 1):
        rows = []
        lower = index[d - 1]
        for f in by_dim[d]:
            row = [0] * len(lower)
            sign = 1
            bits = f
            while bits:
                low = bits & -bits
                row[lower[f ^ low]] = sign
                sign = -sign
                bits ^= low
            rows.append(row)
        ranks[d] = matrix_rank(rows, characteristic)
    out = {}
    for d in range(-1, top + 1):
        h = len(by_dim[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if h:
            out[d] = h
    return out


def lcm_lattice(I: MonomialIdeal) -> set:
    """All lcms of nonempty subsets of the minimal generators."""
    gens = I.gens
    seen = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                l = mono_lcm(a, g)
                if l not in seen:
                    seen.add(l)
                    nxt.append(l)
        frontier = nxt
    return seen


def upper_koszul_facets(I: MonomialIdeal, b) -> list:
    """Facets (bitmasks) of K^b(I): for each generator g dividing x^b, the
    squarefree τ with x^(b-τ) ∈ (g) are the subsets of {i : g_i < b_i}."""
    out = []
    for g in I.gens:
        slack = 0
        ok = True
        for i, (x, y) in enumerate(zip(g, b)):
            if x > y:
                ok = False
                break
            if x < y:
                slack |= 1 << i
        if ok:
            out.append(slack)
    return out


def _guard(I: MonomialIdeal, max_generators: int, force: bool):
    if I.is_zero or I.is_unit:
        raise PreconditionError("Betti numbers need a nonzero proper ideal")
    if len(I.gens) > max_generators and not force:
        raise SizeGuardError(
            f"{len(I.gens)} generators exceed the resolution guard of {max_generators}; "
            "pass force=True (CLI: --force-large) to proceed"
        )


def multigraded_betti_koszul(I: MonomialIdeal, characteristic: int = 0,
                             max_generators: int = DEFAULT_MAX_GENERATORS,
                             force: bool = False) -> dict:
    """{multidegree b: {i: β_{i,b}}} via upper Koszul complexes."""
    _guard(I, max_generators, force)
    out = {}
    for b in sorted(lcm_lattice(I), key=lambda m: (sum(m), m)):
        h = reduced_homology(upper_koszul_facets(I, b), characteristic)
        if h:
            out[b] = {d + 1: r for d, r in h.items()}
    return out


def multigraded_betti_taylor(I: MonomialIdeal, characteristic: int = 0,
                             max_generators: int = TAYLOR_MAX_GENERATORS,
                             force: bool = False) -> dict:
    """{multidegree b: {i: β_{i,b}}} via the Taylor complex; exponential in
    the number of generators."""
    _guard(I, max_generators, force)
    gens = I.gens
    g = len(gens)
    lcms = [None] * (1 << g)
    groups = defaultdict(list)
    for mask in range(1, 1 << g):
        low = mask & -mask
        j = low.bit_length() - 1
        rest = mask ^ low
        lcms[mask] = gens[j] if not rest else mono_lcm(lcms[rest], gens[j])
        groups[lcms[mask]].append(mask)
    out = {}
    for b, masks in groups.items():
        by_size = defaultdict(list)
        for m in masks:
            by_size[bin(m).count("1")].append(m)
        index = {s: {m: k for k, m in enumerate(ms)} for s, ms in by_size.items()}
        ranks = {}
        for s, ms in by_size.items():
            if s == 1 or (s - 1) not in by_size:
                ranks[s] = 0
                continue
            lower = index[s - 1]
            rows = []
            for m in ms:
                row = [0] * len(lower)
                sign = 1
                bits = m
                while bits:
                    low = bits & -bits
                    face = m ^ low
                    if face in lower:
                        row[lower[face]] = sign
                    sign = -sign
                    bits ^= low
                rows.append(row)
            ranks[s] = matrix_rank(rows, characteristic)
        entry = {}
        for s, ms in by_size.items():
            h = len(ms) - ranks.get(s, 0) - ranks.get(s + 1, 0)
            if h:
                entry[s - 1] = h
        if entry:
            out[b] = entry
    return dict(sorted(out.items(), key=lambda kv: (sum(kv[0]), kv[0])))


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers β_{i,j} of an ideal (zeros omitted)."""

    ambient_dim: int
    entries: dict = field(default_factory=dict)

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def regularity(self) -> int:
        return max(j - i for (i, j) in self.entries)

    def projective_dimension(self) -> int:
        return max(i for (i, _) in self.entries)

    def total(self, i: int) -> int:
        return sum(r for (k, _), r in self.entries.items() if k == i)

    def rows(self):
        """Macaulay2-style table: {row j-i: {column i: rank}}."""
        out = defaultdict(dict)
        for (i, j), r in sorted(self.entries.items()):
            out[j - i][i] = r
        return dict(sorted(out.items()))

    def format(self) -> str:
        if not self.entries:
            return "(empty)"
        pd = self.projective_dimension()
        width = max(len(str(r)) for r in self.entries.values()) + 1
        lines = ["     " + "".join(f"{i:>{width}}" for i in range(pd + 1))]
        for row, cols in self.rows().items():
            cells = "".join(f"{cols.get(i, '.')!s:>{width}}" for i in range(pd + 1))
            lines.append(f"{row:>4}:" + cells)
        return "\n".join(lines)


def collapse(multigraded: dict, n: int) -> BettiTable:
    entries = defaultdict(int)
    for b, per_i in multigraded.items():
        j = sum(b)
        for i, r in per_i.items():
            entries[(i, j)] += r
    return BettiTable(n, dict(sorted(entries.items())))


def betti(I: MonomialIdeal, method: str = "koszul", characteristic: int = 0,
          max_generators: int | None = None, force: bool = False) -> BettiTable:
    if method == "koszul":
        mg = multigraded_betti_koszul(I, characteristic,
                                      max_generators or DEFAULT_MAX_GENERATORS, force)
    elif method == "taylor":
        mg = multigraded_betti_taylor(I, characteristic,
                                      max_generators or TAYLOR_MAX_GENERATORS, force)
    else:
        raise ValueError(f"unknown method {method!r}")
    return collapse(mg, I.n)


def regularity(I: MonomialIdeal, **kwargs) -> int:
    return betti(I, **kwargs).regularity()


def has_linear_resolution(I: MonomialIdeal, **kwargs) -> bool:
    if I.is_zero or I.is_unit:
        raise PreconditionError("linear resolution test needs a nonzero proper ideal")
    if not I.is_equigenerated():
        return False
    return regularity(I, **kwargs) == sum(I.gens[0])
