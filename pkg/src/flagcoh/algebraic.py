"""Exact arithmetic in Q[y]/(f) together with a real root of f.

Used when a relation splits over the reals but not over the rationals. The
root is pinned by an interval with a strict rational sign change, so the
evaluation map Q[y]/(f) -> R, y -> root, is a well-defined ring map. A
class g is certified nonzero under that map when g is a nonzero constant or
gcd(g, f) = 1; neither needs f to be irreducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .polyring import WeightedPolynomial


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def upoly_eval(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def upoly_divmod(a, b):
    a, b = _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    r = [Fraction(v) for v in a]
    while len(r) >= len(b) and r:
        k = len(r) - len(b)
        f = r[-1] / b[-1]
        q[k] = f
        for i, v in enumerate(b):
            r[k + i] -= f * v
        r = _trim(r)
    return _trim(q), r


def upoly_gcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, upoly_divmod(a, b)[1]
    if not a:
        return []
    lead = a[-1]
    return [v / lead for v in a]


def rational_roots(p: Sequence[Fraction]) -> list[Fraction]:
    """All rational roots (rational root theorem on the integer-scaled poly)."""
    p = _trim([Fraction(v) for v in p])
    if len(p) <= 1:
        return []
    roots = []
    shift = 0
    while p[0] == 0:
        p = p[1:]
        shift += 1
    if shift:
        roots.append(Fraction(0))
    den = 1
    for v in p:
        den = den * v.denominator // _igcd(den, v.denominator)
    ints = [int(v * den) for v in p]
    a0, an = abs(ints[0]), abs(ints[-1])
    cands = set()
    for num in _divisors(a0):
        for d in _divisors(an):
            cands.add(Fraction(num, d))
            cands.add(Fraction(-num, d))
    for c in sorted(cands):
        if upoly_eval(p, c) == 0:
            roots.append(c)
    return sorted(set(roots))


def _igcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _divisors(n):
    n = abs(n)
    return [d for d in range(1, n + 1) if n % d == 0]


def sign_change_interval(p: Sequence[Fraction], depth: int = 24):
    """An interval (lo, hi) with p(lo) * p(hi) < 0, or None."""
    p = _trim([Fraction(v) for v in p])
    if len(p) <= 1:
        return None
    bound = 1 + max(abs(c / p[-1]) for c in p[:-1])
    lo0 = -Fraction(bound.numerator // bound.denominator + 1)
    for k in range(depth):
        step = Fraction(1, 2**k)
        x = lo0
        prev = upoly_eval(p, x)
        while x < -lo0:
            y = x + step
            cur = upoly_eval(p, y)
            if prev * cur < 0:
                return x, y
            x, prev = y, cur
    return None


@dataclass(frozen=True)
class RealNumberField:
    minpoly: tuple[Fraction, ...]  # low to high, degree >= 1
    interval: tuple[Fraction, Fraction]

    def __post_init__(self):
        f = _trim(self.minpoly)
        if len(f) < 2:
            raise ValueError("defining polynomial must have positive degree")
        lo, hi = self.interval
        if not upoly_eval(f, lo) * upoly_eval(f, hi) < 0:
            raise ValueError("interval does not isolate a sign change")
        object.__setattr__(self, "minpoly", tuple(Fraction(v) for v in f))

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    def reduce(self, coeffs):
        return upoly_divmod(coeffs, self.minpoly)[1]

    def certainly_nonzero(self, coeffs) -> bool:
        g = self.reduce(coeffs)
        if not g:
            return False
        if len(g) == 1:
            return True
        return len(upoly_gcd(g, self.minpoly)) == 1

    def approx(self) -> float:
        lo, hi = self.interval
        return float((lo + hi) / 2)

    def describe(self) -> str:
        terms = " + ".join(f"({c})*y^{k}" for k, c in enumerate(self.minpoly) if c)
        lo, hi = self.interval
        return f"y root of {terms} in [{lo}, {hi}]"


class FieldPolynomial:
    """sum_k theta^k * comps[k] with theta the chosen real root."""

    def __init__(self, field: RealNumberField, comps: Sequence[WeightedPolynomial]):
        comps = list(comps)
        if not comps:
            raise ValueError("need at least one component")
        table = comps[0].table
        # reduce theta-powers modulo the defining polynomial
        f = field.minpoly
        deg = field.degree
        comps = comps + [WeightedPolynomial.zero(table)] * max(0, deg - len(comps))
        for k in range(len(comps) - 1, deg - 1, -1):
            c = comps[k]
            if not c.is_zero():
                lead = f[-1]
                for i in range(deg):
                    comps[k - deg + i] = comps[k - deg + i] - c * (f[i] / lead)
        self.field = field
        self.comps = tuple(comps[:deg])
        self.table = table

    @classmethod
    def lift(cls, field, p: WeightedPolynomial) -> "FieldPolynomial":
        return cls(field, [p])

    def __mul__(self, other: "FieldPolynomial") -> "FieldPolynomial":
        if other.field != self.field:
            raise ValueError("different fields")
        out = [WeightedPolynomial.zero(self.table) for _ in range(len(self.comps) + len(other.comps) - 1)]
        for i, a in enumerate(self.comps):
            if a.is_zero():
                continue
            for j, b in enumerate(other.comps):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return FieldPolynomial(self.field, out)

    def degree(self) -> int:
        return max((c.degree() for c in self.comps), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {c.degree() for c in self.comps if not c.is_zero()}
        return len(degs) <= 1 and all(c.is_homogeneous() for c in self.comps)

    def map(self, fn) -> "FieldPolynomial":
        return FieldPolynomial(self.field, [fn(c) for c in self.comps])

    def coefficient_polys(self) -> dict:
        """Monomial -> coefficient list in theta."""
        out: dict = {}
        for k, c in enumerate(self.comps):
            for mono, v in c.terms.items():
                out.setdefault(mono, [Fraction(0)] * len(self.comps))[k] = v
        return out

    def certainly_nonzero(self) -> bool:
        return any(self.field.certainly_nonzero(v) for v in self.coefficient_polys().values())

    def is_zero(self) -> bool:
        return all(not self.field.reduce(v) for v in self.coefficient_polys().values())

    def __str__(self):
        parts = [f"theta^{k}*({c})" if k else f"({c})" for k, c in enumerate(self.comps) if not c.is_zero()]
        return " + ".join(parts) or "0"
