"""Edge ideals of simple graphs and the central-3-cycle criterion for squares."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .core import MonomialIdeal, PrimeIdeal, contains, localize, minimal_generators, power
from .decomp import is_intersection_type
from .errors import ConsistencyError, PreconditionError
from .spectrum import associated_primes, socle


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 0..n-1; edges are sorted pairs."""

    n: int
    edges: frozenset

    def __post_init__(self):
        clean = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise PreconditionError(f"loop at vertex {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise PreconditionError(f"edge {e} outside 0..{self.n - 1}")
            clean.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(clean))

    @classmethod
    def from_edges(cls, edges: Iterable, n: int | None = None) -> "Graph":
        edges = [tuple(e) for e in edges]
        if n is None:
            n = max((max(e) for e in edges), default=-1) + 1
        return cls(n, frozenset(edges))

    def neighbors(self, v: int) -> set:
        return {j if i == v else i for i, j in self.edges if v in (i, j)}

    def adjacent(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    @property
    def isolated_vertices(self) -> list:
        touched = {v for e in self.edges for v in e}
        return [v for v in range(self.n) if v not in touched]

    @property
    def no_isolated_vertices(self) -> bool:
        return not self.isolated_vertices

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in self.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def is_bipartite(self) -> bool:
        color = {}
        for s in range(self.n):
            if s in color:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                for w in self.neighbors(v):
                    if w not in color:
                        color[w] = 1 - color[v]
                        stack.append(w)
                    elif color[w] == color[v]:
                        return False
        return True


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges([(i, (i + 1) % n) for i in range(n)], n)


def edge_ideal(G: Graph) -> MonomialIdeal:
    if not G.edges:
        raise PreconditionError("edgeless graph has the zero edge ideal")
    gens = []
    for i, j in G.edges:
        e = [0] * G.n
        e[i] = e[j] = 1
        gens.append(tuple(e))
    return minimal_generators(gens, G.n)


def three_cycles(G: Graph) -> list:
    return [c for c in combinations(range(G.n), 3)
            if G.adjacent(c[0], c[1]) and G.adjacent(c[0], c[2]) and G.adjacent(c[1], c[2])]


def is_central(G: Graph, C) -> bool:
    """Every vertex of G lies on C or is adjacent to a vertex of C."""
    a, b, c = sorted(C)
    if not (G.adjacent(a, b) and G.adjacent(a, c) and G.adjacent(b, c)):
        raise PreconditionError(f"{C} is not a 3-cycle")
    cover = {a, b, c} | G.neighbors(a) | G.neighbors(b) | G.neighbors(c)
    return len(cover) == G.n


def _require_no_isolated(G: Graph):
    if not G.no_isolated_vertices:
        raise PreconditionError(f"isolated vertices {G.isolated_vertices}")


def central_cycle_criterion(G: Graph) -> bool:
    """All 3-cycles of G are central."""
    _require_no_isolated(G)
    return all(is_central(G, C) for C in three_cycles(G))


def square_is_intersection_type(G: Graph, check: bool = True) -> bool:
    """Graph criterion for I(G)^2 to be of intersection type; with ``check``
    the direct socle test on I(G)^2 must agree."""
    verdict = central_cycle_criterion(G)
    if check:
        direct = bool(is_intersection_type(power(edge_ideal(G), 2)))
        if direct != verdict:
            raise ConsistencyError("central-cycle criterion disagrees with the socle test",
                                   verdict, direct)
    return verdict


@dataclass(frozen=True)
class AssSquareReport:
    holds: bool
    ass_square: tuple
    ass_base: tuple
    extra: tuple  # primes of Ass(S/I^2) outside Ass(S/I) ∪ {m}


def ass_square_bound(G: Graph) -> AssSquareReport:
    """Whether Ass(S/I^2) ⊂ Ass(S/I) ∪ {m}, both sides from the socle criterion."""
    _require_no_isolated(G)
    I = edge_ideal(G)
    base = associated_primes(I)
    sq = associated_primes(power(I, 2))
    allowed = set(base) | {PrimeIdeal.maximal(G.n)}
    extra = tuple(p for p in sq if p not in allowed)
    return AssSquareReport(not extra, tuple(sq), tuple(base), extra)


def cone_ideal(H: Graph, k: int) -> MonomialIdeal:
    """(y_1, …, y_k, I(H)) with the y's appended after the vertices of H."""
    n = H.n + k
    gens = []
    for i, j in H.edges:
        e = [0] * n
        e[i] = e[j] = 1
        gens.append(tuple(e))
    for t in range(k):
        e = [0] * n
        e[H.n + t] = 1
        gens.append(tuple(e))
    return minimal_generators(gens, n)


@dataclass(frozen=True)
class DepthZeroReport:
    depth_zero: bool
    criterion: bool
    witness: Optional[tuple]


def depth_zero_square(H: Graph, k: int = 0) -> DepthZeroReport:
    """depth R/I^2 = 0 for I = (y_1..y_k, I(H)) iff H is connected with a
    central 3-cycle; in that case the cycle's product is a degree-3 socle
    element, which is verified directly."""
    I = cone_ideal(H, k)
    sq = power(I, 2)
    soc = socle(sq)
    central = [C for C in three_cycles(H) if is_central(H, C)]
    criterion = H.is_connected() and bool(central)
    if criterion != (not soc.is_zero):
        raise ConsistencyError("depth-zero criterion disagrees with the socle", criterion, soc)
    witness = None
    if criterion:
        e = [0] * I.n
        for v in central[0]:
            e[v] = 1
        witness = tuple(e)
        if not is_socle_element(sq, witness):
            raise ConsistencyError("cycle product is not a socle element", sq, witness)
    return DepthZeroReport(not soc.is_zero, criterion, witness)


def is_socle_element(I: MonomialIdeal, u) -> bool:
    if contains(I, u):
        return False
    for i in range(I.n):
        w = list(u)
        w[i] += 1
        if not contains(I, tuple(w)):
            return False
    return True


@dataclass(frozen=True)
class HigherPowerEntry:
    k: int
    is_intersection_type: bool
    prime: PrimeIdeal
    witness: tuple  # ambient coordinates
    witness_degree: int
    local_min_degree: int


def non_central_prime(G: Graph, C) -> PrimeIdeal:
    """Prime on the vertices that are neighbors of C (including C itself)."""
    cover = set(C)
    for v in C:
        cover |= G.neighbors(v)
    return PrimeIdeal(G.n, frozenset(cover))


def higher_powers_not_intersection_type(G: Graph, k_max: int) -> list:
    """For k = 2..k_max, confirm I^k is not of intersection type and exhibit a
    socle element of degree 2k-1 of S(p)/I(p)^k at the prime spanned by the
    neighborhood of a non-central 3-cycle."""
    _require_no_isolated(G)
    bad = [C for C in three_cycles(G) if not is_central(G, C)]
    if not bad:
        raise PreconditionError("every 3-cycle is central: I^2 is of intersection type")
    C = bad[0]
    p = non_central_prime(G, C)
    pos = {v: t for t, v in enumerate(p.indices)}
    I = edge_ideal(G)
    out = []
    for k in range(2, k_max + 1):
        Ik = power(I, k)
        res = is_intersection_type(Ik)
        local = localize(Ik, p)
        witness = None
        for a, b in combinations(C, 2):
            c = next(v for v in C if v not in (a, b))
            e = [0] * p.height
            e[pos[a]] += k - 1
            e[pos[b]] += k - 1
            e[pos[c]] += 1
            if is_socle_element(local, tuple(e)):
                witness = tuple(e)
                break
        if witness is None:
            raise ConsistencyError(f"no degree {2 * k - 1} socle witness found for k={k}", G, p)
        amb = [0] * G.n
        for t, v in enumerate(p.indices):
            amb[v] = witness[t]
        mind = min(sum(g) for g in local.gens)
        out.append(HigherPowerEntry(k, bool(res), p, tuple(amb), sum(witness), mind))
    return out
