"""Text input and output: ideals, primes, monomials and graph edge lists.

Ideal grammar (whitespace is ignored)::

    ideal    := '(' list ')' | list
    list     := monomial (',' monomial)*
    monomial := factor ('*'? factor)*
    factor   := NAME ('^' INT)? | '1'
    NAME     := letter digit*

``0`` or ``()`` is the zero ideal and ``1`` the unit ideal.  Without an
explicit variable list, names sharing one letter with numeric suffixes are
sorted by index (``x1..xN``, gaps filled); otherwise variables are ordered
by first appearance.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import MonomialIdeal, PrimeIdeal, format_ideal, format_monomial, minimal_generators
from .errors import ParseError, PreconditionError

_TOKEN = re.compile(r"\s*(?:([A-Za-z][0-9]*)|([0-9]+)|(.))")
_INDEXED = re.compile(r"([A-Za-z])([0-9]+)$")


@dataclass(frozen=True)
class ParsedIdeal:
    ideal: MonomialIdeal
    names: tuple

    def format(self) -> str:
        return format_ideal(self.ideal, self.names)


def _tokens(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1):
            out.append(("name", m.group(1), start))
        elif m.group(2):
            out.append(("int", int(m.group(2)), start))
        elif m.group(3):
            if m.group(3) not in "(),*^":
                raise ParseError(f"unexpected character {m.group(3)!r}", start)
            out.append((m.group(3), m.group(3), start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1] if tok[1] is not None else 'end of input'!r}",
                             tok[2])
        self.i += 1
        return tok

    def ideal(self):
        """List of monomials, each a list of (name, exponent, position)."""
        wrapped = self.peek()[0] == "("
        if wrapped:
            self.take("(")
        mons = []
        if not (wrapped and self.peek()[0] == ")"):
            mons.append(self.monomial())
            while self.peek()[0] == ",":
                self.take(",")
                mons.append(self.monomial())
        if wrapped:
            self.take(")")
        self.take("end")
        return mons

    def monomial(self):
        factors = [self.factor()]
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take("*")
                factors.append(self.factor())
            elif kind in ("name", "int"):
                factors.append(self.factor())
            else:
                break
        return [f for f in factors if f is not None]

    def factor(self):
        kind, val, pos = self.peek()
        if kind == "int":
            self.take()
            if val == 1:
                return None
            if val == 0:
                return ("0", 1, pos)
            raise ParseError("coefficients are not allowed; only the constant 1 or 0", pos)
        if kind != "name":
            raise ParseError(f"expected a variable, found {val if val is not None else 'end of input'!r}", pos)
        self.take()
        exp = 1
        if self.peek()[0] == "^":
            self.take("^")
            exp = self.take("int")[1]
        return (val, exp, pos)


def infer_names(found: list) -> tuple:
    """Variable order for names in order of first appearance."""
    matches = [_INDEXED.match(v) for v in found]
    if found and all(matches) and len({m.group(1) for m in matches}) == 1:
        letter = matches[0].group(1)
        idx = [int(m.group(2)) for m in matches]
        if min(idx) >= 1:
            return tuple(f"{letter}{i}" for i in range(1, max(idx) + 1))
    return tuple(found)


def parse_vars(spec: str) -> tuple:
    """``--vars`` argument: a count N (meaning x1..xN) or a comma list."""
    spec = spec.strip()
    if spec.isdigit():
        n = int(spec)
        return tuple(f"x{i}" for i in range(1, n + 1))
    names = tuple(s.strip() for s in spec.strip("()").split(",") if s.strip())
    for s in names:
        if not re.fullmatch(r"[A-Za-z][0-9]*", s):
            raise ParseError(f"invalid variable name {s!r}", spec.find(s))
    if len(set(names)) != len(names):
        raise ParseError("repeated variable name", 0)
    return names


def parse_ideal_with_names(text: str, names=None) -> ParsedIdeal:
    mons = _Parser(text).ideal()
    zero = False
    if len(mons) == 1 and any(f[0] == "0" for f in mons[0]):
        if len(mons[0]) != 1:
            raise ParseError("0 cannot appear in a product", mons[0][0][2])
        zero = True
        mons = []
    for mon in mons:
        for f in mon:
            if f[0] == "0":
                raise ParseError("0 is only allowed as the whole ideal", f[2])
    found = []
    for mon in mons:
        for name, _, _ in mon:
            if name not in found:
                found.append(name)
    if names is None:
        names = infer_names(found)
    else:
        names = tuple(names)
        for mon in mons:
            for name, _, pos in mon:
                if name not in names:
                    raise ParseError(f"variable {name!r} is not in the declared variable set", pos)
    if not names and (zero or not mons):
        raise ParseError("cannot infer the number of variables; pass --vars", 0)
    index = {v: i for i, v in enumerate(names)}
    n = len(names)
    gens = []
    for mon in mons:
        e = [0] * n
        for name, exp, _ in mon:
            e[index[name]] += exp
        gens.append(tuple(e))
    return ParsedIdeal(minimal_generators(gens, n), names)


def parse_ideal(text: str, names=None) -> MonomialIdeal:
    return parse_ideal_with_names(text, names).ideal


def parse_monomial(text: str, names) -> tuple:
    parsed = parse_ideal_with_names(text, names)
    if len(parsed.ideal.gens) != 1:
        raise ParseError("expected a single monomial", 0)
    return parsed.ideal.gens[0]


def parse_prime(text: str, names) -> PrimeIdeal:
    """``x,y,z`` or ``(x1,x3)`` by name, or ``1,3`` by 1-based index."""
    parts = [s.strip() for s in text.strip().strip("()").split(",") if s.strip()]
    if not parts:
        raise ParseError("empty prime", 0)
    support = set()
    for s in parts:
        if s.isdigit():
            i = int(s) - 1
            if not 0 <= i < len(names):
                raise ParseError(f"variable index {s} out of range", text.find(s))
        elif s in names:
            i = names.index(s)
        else:
            raise ParseError(f"unknown variable {s!r}", text.find(s))
        support.add(i)
    return PrimeIdeal(len(names), frozenset(support))


def parse_int_list(text: str) -> tuple:
    try:
        return tuple(int(s) for s in text.replace(" ", "").split(",") if s)
    except ValueError as exc:
        raise ParseError(f"expected comma-separated integers: {text!r}", 0) from exc


def parse_set_list(text: str) -> list:
    """``1,2;2,3`` as 0-based index sets."""
    out = []
    for chunk in text.split(";"):
        vals = parse_int_list(chunk)
        if not vals or min(vals) < 1:
            raise ParseError(f"sets use 1-based indices: {chunk!r}", text.find(chunk))
        out.append(frozenset(v - 1 for v in vals))
    return out


def parse_edges(text: str) -> list:
    """Inline edges ``1-2,2-3``, 1-indexed, returned 0-based."""
    edges = []
    offset = 0
    for chunk in text.split(","):
        piece = chunk.strip()
        m = re.fullmatch(r"(\d+)\s*-\s*(\d+)", piece)
        if not m:
            raise ParseError(f"bad edge {piece!r}", offset)
        edges.append(_edge(int(m.group(1)), int(m.group(2)), offset))
        offset += len(chunk) + 1
    return edges


def read_edge_list(text: str) -> list:
    """One ``i j`` pair per line, 1-indexed; blank lines and ``#`` comments skipped."""
    edges = []
    pos = 0
    for line in text.splitlines(keepends=True):
        body = line.split("#", 1)[0].strip()
        if body:
            parts = body.split()
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise ParseError(f"bad edge line {body!r}", pos)
            edges.append(_edge(int(parts[0]), int(parts[1]), pos))
        pos += len(line)
    return edges


def _edge(i: int, j: int, pos: int) -> tuple:
    if i < 1 or j < 1:
        raise ParseError("vertices are 1-indexed", pos)
    if i == j:
        raise PreconditionError(f"loop at vertex {i}")
    return (i - 1, j - 1)


def print_ideal(I: MonomialIdeal, names=None) -> str:
    return format_ideal(I, names)


def print_monomial(m, names=None) -> str:
    return format_monomial(m, names)
