"""Sparse polynomials over the rationals with weighted grading.

Canonical text form: terms in descending graded-lex order joined by
`` + `` / `` - ``, each term ``coef*var^e*...`` with the coefficient omitted
when it is 1, e.g. ``3/2*q1^2*k2 - x3``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence


class PolynomialError(ValueError):
    pass


@dataclass(frozen=True)
class VariableTable:
    names: tuple[str, ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        if len(self.names) != len(self.weights):
            raise PolynomialError("names and weights differ in length")
        if len(set(self.names)) != len(self.names):
            raise PolynomialError("duplicate variable names")
        for name, w in zip(self.names, self.weights):
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name):
                raise PolynomialError(f"bad variable name {name!r}")
            if not isinstance(w, int) or w <= 0:
                raise PolynomialError(f"weight of {name} must be a positive integer")

    @classmethod
    def of(cls, pairs: Iterable[tuple[str, int]]) -> "VariableTable":
        pairs = list(pairs)
        return cls(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise PolynomialError(f"unknown variable {name!r}") from None

    def degree(self, mono: Sequence[int]) -> int:
        return sum(a * w for a, w in zip(mono, self.weights))


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"coefficient {c!r} is not exact")


def _order_key(table: VariableTable, mono):
    return (table.degree(mono), mono)


class WeightedPolynomial:
    """Immutable polynomial: ``{exponent tuple: Fraction}`` over a table."""

    __slots__ = ("table", "terms", "_hash")

    def __init__(self, table: VariableTable, terms: Mapping[tuple[int, ...], object] | None = None):
        n = len(table)
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != n or any(a < 0 for a in mono):
                raise PolynomialError(f"bad exponent vector {mono}")
            c = _coerce(c)
            if c:
                clean[mono] = clean.get(mono, 0) + c
                if not clean[mono]:
                    del clean[mono]
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *_):
        raise AttributeError("WeightedPolynomial is immutable")

    # construction
    @classmethod
    def zero(cls, table):
        return cls(table)

    @classmethod
    def constant(cls, table, c):
        return cls(table, {(0,) * len(table): c})

    @classmethod
    def var(cls, table, name, power: int = 1):
        mono = [0] * len(table)
        mono[table.index(name)] = power
        return cls(table, {tuple(mono): 1})

    @classmethod
    def monomial(cls, table, mono, c=1):
        return cls(table, {tuple(mono): c})

    # basic queries
    @property
    def nvars(self) -> int:
        return len(self.table)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(self.table.degree(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({self.table.degree(m) for m in self.terms}) <= 1

    def coefficient(self, mono) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * self.nvars)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _order_key(self.table, t[0]), reverse=True)

    def homogeneous_part(self, d: int) -> "WeightedPolynomial":
        return WeightedPolynomial(self.table, {m: c for m, c in self.terms.items() if self.table.degree(m) == d})

    def variables_used(self) -> set[int]:
        return {i for m in self.terms for i, a in enumerate(m) if a}

    # arithmetic
    def _lift(self, other) -> "WeightedPolynomial":
        if isinstance(other, WeightedPolynomial):
            if other.table != self.table:
                raise PolynomialError("variable tables differ")
            return other
        return WeightedPolynomial.constant(self.table, _coerce(other))

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return WeightedPolynomial(self.table, out)

    __radd__ = __add__

    def __neg__(self):
        return WeightedPolynomial(self.table, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, WeightedPolynomial):
            c = _coerce(other)
            return WeightedPolynomial(self.table, {m: c * v for m, v in self.terms.items()})
        other = self._lift(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return WeightedPolynomial(self.table, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = _coerce(other)
        if not c:
            raise ZeroDivisionError("division by zero")
        return self * (1 / c)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise PolynomialError("exponent must be a nonnegative integer")
        result = WeightedPolynomial.constant(self.table, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, WeightedPolynomial):
            return self.table == other.table and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == WeightedPolynomial.constant(self.table, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.table, frozenset(self.terms.items()))))
        return self._hash

    # substitution and change of table
    def substitute(self, values: Mapping[str, "WeightedPolynomial"], table: VariableTable | None = None):
        """Replace variables by polynomials over ``table`` (default: same table).
        Variables not in ``values`` must exist in the target table."""
        target = table or self.table
        images = []
        for name in self.table.names:
            if name in values:
                v = values[name]
                if not isinstance(v, WeightedPolynomial):
                    v = WeightedPolynomial.constant(target, v)
                if v.table != target:
                    raise PolynomialError(f"image of {name} lives over another table")
                images.append(v)
            else:
                images.append(WeightedPolynomial.var(target, name))
        out = WeightedPolynomial.zero(target)
        cache: dict = {}
        for mono, c in self.terms.items():
            term = WeightedPolynomial.constant(target, c)
            for i, a in enumerate(mono):
                if a:
                    key = (i, a)
                    if key not in cache:
                        cache[key] = images[i] ** a
                    term = term * cache[key]
            out = out + term
        return out

    def embed(self, table: VariableTable) -> "WeightedPolynomial":
        """Same polynomial over a table that contains all used variables."""
        idx = [table.index(n) for n in self.table.names]
        out = {}
        for mono, c in self.terms.items():
            new = [0] * len(table)
            for i, a in enumerate(mono):
                if a:
                    if table.weights[idx[i]] != self.table.weights[i]:
                        raise PolynomialError(f"weight of {self.table.names[i]} differs")
                    new[idx[i]] = a
            out[tuple(new)] = c
        return WeightedPolynomial(table, out)

    def restrict(self, table: VariableTable) -> "WeightedPolynomial":
        """Drop to a smaller table; fails if a dropped variable occurs."""
        keep = {n: i for i, n in enumerate(self.table.names)}
        out = {}
        for mono, c in self.terms.items():
            for i, a in enumerate(mono):
                if a and self.table.names[i] not in table.names:
                    raise PolynomialError(f"variable {self.table.names[i]} still occurs")
            out[tuple(mono[keep[n]] for n in table.names)] = c
        return WeightedPolynomial(table, out)

    def divide_by_variable(self, name: str) -> "WeightedPolynomial":
        i = self.table.index(name)
        out = {}
        for mono, c in self.terms.items():
            if mono[i] == 0:
                raise PolynomialError(f"{name} does not divide the polynomial")
            m = list(mono)
            m[i] -= 1
            out[tuple(m)] = c
        return WeightedPolynomial(self.table, out)

    # text form
    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"WeightedPolynomial({format_polynomial(self)!r})"


def _format_coef(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(p: WeightedPolynomial) -> str:
    if not p.terms:
        return "0"
    parts = []
    for k, (mono, c) in enumerate(p.sorted_terms()):
        factors = []
        for name, a in zip(p.table.names, mono):
            if a == 1:
                factors.append(name)
            elif a > 1:
                factors.append(f"{name}^{a}")
        mag = abs(c)
        if not factors:
            body = _format_coef(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _format_coef(mag) + "*" + "*".join(factors)
        if k == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def parse_polynomial(text: str, table: VariableTable) -> WeightedPolynomial:
    """Parse sums/products/powers with parentheses and rational constants."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        num, name, sym = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif name is not None:
            tokens.append(("name", name))
        else:
            if sym not in "+-*/^()":
                raise PolynomialError(f"unexpected character {sym!r} in {text!r}")
            tokens.append((sym, sym))
        pos = m.end()
    tokens.append(("end", None))
    state = {"i": 0}

    def peek():
        return tokens[state["i"]][0]

    def take(kind=None):
        tok = tokens[state["i"]]
        if kind is not None and tok[0] != kind:
            raise PolynomialError(f"expected {kind!r} in {text!r}, found {tok[1]!r}")
        state["i"] += 1
        return tok

    def expr():
        sign = 1
        if peek() in "+-":
            sign = -1 if take()[0] == "-" else 1
        acc = term() * sign
        while peek() in ("+", "-"):
            op = take()[0]
            t = term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term():
        acc = factor()
        while peek() in ("*", "/"):
            op = take()[0]
            f = factor()
            if op == "*":
                acc = acc * f
            else:
                if not (f.is_zero() or f.degree() == 0):
                    raise PolynomialError("division only by nonzero constants")
                if f.is_zero():
                    raise PolynomialError("division by zero")
                acc = acc / f.constant_term()
        return acc

    def factor():
        if peek() == "-":
            take()
            return -factor()
        base = atom()
        if peek() == "^":
            take()
            exp = take("num")[1]
            base = base ** exp
        return base

    def atom():
        kind = peek()
        if kind == "num":
            return WeightedPolynomial.constant(table, take()[1])
        if kind == "name":
            return WeightedPolynomial.var(table, take()[1])
        if kind == "(":
            take()
            v = expr()
            take(")")
            return v
        raise PolynomialError(f"unexpected token {tokens[state['i']][1]!r} in {text!r}")

    if not text:
        raise PolynomialError("empty polynomial")
    result = expr()
    if peek() != "end":
        raise PolynomialError(f"trailing input in {text!r}")
    return result


# --- symmetric functions and series ----------------------------------------


def elementary_symmetric(k: int, variables: Sequence[WeightedPolynomial]) -> WeightedPolynomial:
    if not variables:
        raise PolynomialError("need at least one variable")
    if not 0 <= k <= len(variables):
        raise PolynomialError(f"e_{k} undefined on {len(variables)} variables")
    table = variables[0].table
    out = WeightedPolynomial.zero(table)
    for combo in combinations(variables, k):
        term = WeightedPolynomial.constant(table, 1)
        for v in combo:
            term = term * v
        out = out + term
    return out


Series = list  # coefficient list in a formal parameter t


def series_mul(a: Series, b: Series, cap: int) -> Series:
    table = (a or b)[0].table
    out = [WeightedPolynomial.zero(table) for _ in range(cap + 1)]
    for i, x in enumerate(a[: cap + 1]):
        if x.is_zero():
            continue
        for j, y in enumerate(b[: cap + 1 - i]):
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return out


def series_negate_t(a: Series) -> Series:
    """p(t) -> p(-t)."""
    return [c if k % 2 == 0 else -c for k, c in enumerate(a)]


def truncated_inverse(p: Series, cap: int) -> Series:
    """Coefficients 0..cap of 1/p(t); p[0] must be a nonzero constant."""
    if not p:
        raise PolynomialError("empty series")
    c0 = p[0]
    if c0.is_zero() or c0.degree() != 0:
        raise PolynomialError("constant term is not a unit")
    inv0 = 1 / c0.constant_term()
    table = c0.table
    out = [WeightedPolynomial.constant(table, inv0)]
    for k in range(1, cap + 1):
        acc = WeightedPolynomial.zero(table)
        for i in range(1, min(k, len(p) - 1) + 1):
            acc = acc + p[i] * out[k - i]
        out.append(acc * (-inv0))
    return out
