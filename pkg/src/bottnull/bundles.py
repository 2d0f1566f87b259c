"""Equivariant bundle expressions over the flag variety and their weight multisets.

Atoms: ``n`` (nilradical, weights -alpha), ``h`` (Cartan, weight 0 with
multiplicity rank), ``b = n + h``, ``q = g/b`` (weights +alpha), ``g = b + q``,
and ``L[c1,...,ck]`` (line with the given fundamental coordinates).  Operators:
``*`` tensor, ``+`` direct sum, ``^`` tensor power, ``wedge^k(...)`` and
``sym^k(...)`` with index-expansion semantics (binding precedence ^ > * > +).

Semantics keep only the weight multiset (filtration-graded data): every
evaluation is a map weight -> multiplicity with deterministic ordering.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb
from typing import Iterator, Union

from . import _kernels
from .errors import ExprSyntaxError, InvalidWeight, UnknownAtom
from .rootsys import RootSystem, Weight

ATOMS = ("n", "h", "b", "g", "q")


@dataclass(frozen=True)
class Atom:
    kind: str  # one of ATOMS


@dataclass(frozen=True)
class Line:
    coords: tuple[int, ...]


@dataclass(frozen=True)
class Tensor:
    factors: tuple["Expr", ...]


@dataclass(frozen=True)
class Sum:
    terms: tuple["Expr", ...]


@dataclass(frozen=True)
class Power:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Wedge:
    degree: int
    inner: "Expr"


@dataclass(frozen=True)
class Sym:
    degree: int
    inner: "Expr"


Expr = Union[Atom, Line, Tensor, Sum, Power, Wedge, Sym]

_TOKEN = re.compile(r"(?P<int>-?\d+)|(?P<name>[A-Za-z]+)|(?P<sym>[-+*^()\[\],])")


class _Parser:
    """Recursive-descent parser for the expression grammar."""

    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos >= len(text):
                break
            m = _TOKEN.match(text, pos)
            if m is None:
                raise ExprSyntaxError("unexpected character", pos)
            assert m.lastgroup is not None
            self.tokens.append((m.lastgroup, m.group(m.lastgroup), pos))
            pos = m.end()
        self.tokens.append(("end", "", len(text)))
        self.idx = 0

    def peek(self):
        return self.tokens[self.idx]

    def next(self):
        tok = self.tokens[self.idx]
        self.idx += 1
        return tok

    def expect(self, value: str):
        kind, text, pos = self.next()
        if text != value:
            raise ExprSyntaxError(f"expected {value!r}", pos)

    def parse(self) -> Expr:
        expr = self.expr()
        kind, text, pos = self.peek()
        if kind != "end":
            raise ExprSyntaxError(f"unexpected {text!r}", pos)
        return expr

    def expr(self) -> Expr:
        terms = [self.term()]
        while self.peek()[1] == "+":
            self.next()
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def term(self) -> Expr:
        factors = [self.factor()]
        while self.peek()[1] == "*":
            self.next()
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Tensor(tuple(factors))

    def factor(self) -> Expr:
        base = self.primary()
        if self.peek()[1] == "^":
            self.next()
            k = self.uint()
            return Power(base, k)
        return base

    def uint(self) -> int:
        kind, text, pos = self.next()
        if kind != "int" or int(text) < 0:
            raise ExprSyntaxError("expected a non-negative integer", pos)
        return int(text)

    def primary(self) -> Expr:
        kind, text, pos = self.next()
        if text == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "name":
            if text in ("wedge", "sym"):
                self.expect("^")
                k = self.uint()
                self.expect("(")
                inner = self.expr()
                self.expect(")")
                return Wedge(k, inner) if text == "wedge" else Sym(k, inner)
            if text == "L":
                self.expect("[")
                coords = [self.int_()]
                while self.peek()[1] == ",":
                    self.next()
                    coords.append(self.int_())
                self.expect("]")
                return Line(tuple(coords))
            if text in ATOMS:
                return Atom(text)
            raise UnknownAtom(text, pos)
        raise ExprSyntaxError(f"unexpected {text!r}" if text else "unexpected end of input", pos)

    def int_(self) -> int:
        kind, text, pos = self.next()
        if kind != "int":
            raise ExprSyntaxError("expected an integer", pos)
        return int(text)


def parse(text: str) -> Expr:
    """Parse an expression; raises ExprSyntaxError/UnknownAtom with positions."""
    return _Parser(text).parse()


def unparse(expr: Expr) -> str:
    """Canonical text form; ``parse(unparse(e)) == e``."""
    return _unparse(expr, 0)


def _unparse(expr: Expr, level: int) -> str:
    # level: 0 sum context, 1 tensor context, 2 power-base context
    if isinstance(expr, Atom):
        return expr.kind
    if isinstance(expr, Line):
        return "L[" + ",".join(str(c) for c in expr.coords) + "]"
    if isinstance(expr, Wedge):
        return f"wedge^{expr.degree}(" + _unparse(expr.inner, 0) + ")"
    if isinstance(expr, Sym):
        return f"sym^{expr.degree}(" + _unparse(expr.inner, 0) + ")"
    if isinstance(expr, Power):
        return _unparse(expr.base, 2) + f"^{expr.exponent}"
    if isinstance(expr, Tensor):
        body = "*".join(_unparse(f, 1) for f in expr.factors)
        return f"({body})" if level >= 2 else body
    body = "+".join(_unparse(t, 0) for t in expr.terms)
    return f"({body})" if level >= 1 else body


class WeightMultiset:
    """Immutable weight -> multiplicity map with deterministic ordering."""

    __slots__ = ("_counts",)

    def __init__(self, counts: dict[Weight, int] | None = None):
        data = {w: c for w, c in (counts or {}).items() if c != 0}
        self._counts = data

    @property
    def counts(self) -> dict[Weight, int]:
        return dict(self._counts)

    def get(self, weight: Weight) -> int:
        return self._counts.get(weight, 0)

    @property
    def total_dim(self) -> int:
        return sum(self._counts.values())

    def support(self) -> frozenset[Weight]:
        return frozenset(self._counts)

    def sorted_items(self) -> list[tuple[Weight, int]]:
        return sorted(self._counts.items())

    def __len__(self) -> int:
        return len(self._counts)

    def __bool__(self) -> bool:
        return bool(self._counts)

    def __iter__(self) -> Iterator[Weight]:
        return iter(self._counts)

    def __eq__(self, other) -> bool:
        if isinstance(other, WeightMultiset):
            return self._counts == other._counts
        if isinstance(other, dict):
            return self._counts == other
        return NotImplemented

    def __repr__(self) -> str:
        inner = ", ".join(f"{w}: {c}" for w, c in self.sorted_items())
        return f"WeightMultiset({{{inner}}})"


def _zero(rs: RootSystem) -> Weight:
    return (0,) * rs.rank


def _merge(acc: dict, extra: dict, scale: int = 1) -> None:
    for w, c in extra.items():
        acc[w] = acc.get(w, 0) + scale * c


def _graded_power(rs: RootSystem, ws: dict, k: int, symmetric: bool) -> dict:
    """Index-expansion wedge/sym of a weight multiset via layered DP."""
    layers: list[dict] = [{} for _ in range(k + 1)]
    layers[0][_zero(rs)] = 1
    for w, m in sorted(ws.items()):
        new = [dict(layer) for layer in layers]
        for j in range(1, k + 1):
            coeff = comb(m + j - 1, j) if symmetric else comb(m, j)
            if coeff == 0:
                continue
            off = tuple(j * c for c in w)
            for d in range(j, k + 1):
                src = layers[d - j]
                if not src:
                    continue
                tgt = new[d]
                for wt, c in src.items():
                    key = tuple(x + y for x, y in zip(wt, off))
                    tgt[key] = tgt.get(key, 0) + c * coeff
        layers = new
    return layers[k]


def _eval(rs: RootSystem, expr: Expr) -> dict:
    if isinstance(expr, Atom):
        if expr.kind == "n":
            return {tuple(-c for c in r.fund_coords): 1 for r in rs.positive_roots}
        if expr.kind == "h":
            return {_zero(rs): rs.rank}
        if expr.kind == "b":
            out = {tuple(-c for c in r.fund_coords): 1 for r in rs.positive_roots}
            out[_zero(rs)] = rs.rank
            return out
        if expr.kind == "q":
            return {r.fund_coords: 1 for r in rs.positive_roots}
        out = {r.fund_coords: 1 for r in rs.positive_roots}
        for r in rs.positive_roots:
            out[tuple(-c for c in r.fund_coords)] = 1
        out[_zero(rs)] = rs.rank
        return out
    if isinstance(expr, Line):
        if len(expr.coords) != rs.rank:
            raise InvalidWeight(
                f"line weight has {len(expr.coords)} coordinates; rank is {rs.rank}")
        return {expr.coords: 1}
    if isinstance(expr, Tensor):
        acc = _eval(rs, expr.factors[0])
        for f in expr.factors[1:]:
            acc = _kernels.convolve(acc, _eval(rs, f))
        return acc
    if isinstance(expr, Sum):
        acc: dict = {}
        for t in expr.terms:
            _merge(acc, _eval(rs, t))
        return acc
    if isinstance(expr, Power):
        acc = {_zero(rs): 1}
        base = _eval(rs, expr.base)
        for _ in range(expr.exponent):
            acc = _kernels.convolve(acc, base)
        return acc
    if isinstance(expr, Wedge):
        return _graded_power(rs, _eval(rs, expr.inner), expr.degree, symmetric=False)
    if isinstance(expr, Sym):
        return _graded_power(rs, _eval(rs, expr.inner), expr.degree, symmetric=True)
    raise TypeError(f"not an expression: {expr!r}")


def weights(rs: RootSystem, expr: Expr | str) -> WeightMultiset:
    """Weight multiset of the expression over the given root system."""
    if isinstance(expr, str):
        expr = parse(expr)
    return WeightMultiset(_eval(rs, expr))


def dim(rs: RootSystem, expr: Expr | str) -> int:
    """Total dimension (computed structurally; equals weights(...).total_dim)."""
    if isinstance(expr, str):
        expr = parse(expr)
    return _dim(rs, expr)


def _dim(rs: RootSystem, expr: Expr) -> int:
    if isinstance(expr, Atom):
        n_pos = len(rs.positive_roots)
        return {"n": n_pos, "h": rs.rank, "b": n_pos + rs.rank,
                "q": n_pos, "g": 2 * n_pos + rs.rank}[expr.kind]
    if isinstance(expr, Line):
        if len(expr.coords) != rs.rank:
            raise InvalidWeight(
                f"line weight has {len(expr.coords)} coordinates; rank is {rs.rank}")
        return 1
    if isinstance(expr, Tensor):
        out = 1
        for f in expr.factors:
            out *= _dim(rs, f)
        return out
    if isinstance(expr, Sum):
        return sum(_dim(rs, t) for t in expr.terms)
    if isinstance(expr, Power):
        return _dim(rs, expr.base) ** expr.exponent
    if isinstance(expr, Wedge):
        return comb(_dim(rs, expr.inner), expr.degree)
    if isinstance(expr, Sym):
        d = _dim(rs, expr.inner)
        return comb(d + expr.degree - 1, expr.degree)
    raise TypeError(f"not an expression: {expr!r}")
