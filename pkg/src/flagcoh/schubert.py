"""Schubert calculus on the Grassmannian G(1,m) of lines in P^m.

Classes are two-row partitions sigma_{a1,a2} with m-1 >= a1 >= a2 >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping


@dataclass(frozen=True, order=True)
class SchubertClass:
    m: int
    a1: int
    a2: int = 0

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be positive")
        if not self.m - 1 >= self.a1 >= self.a2 >= 0:
            raise ValueError(f"invalid Schubert class ({self.a1},{self.a2}) for G(1,{self.m})")

    @property
    def codim(self) -> int:
        return self.a1 + self.a2

    def __str__(self):
        return f"s({self.a1},{self.a2})"


class SchubertSum:
    """Rational combination of Schubert classes of one G(1,m)."""

    def __init__(self, m: int, coeffs: Mapping[SchubertClass, object] | None = None):
        self.m = m
        clean = {}
        for cls, c in (coeffs or {}).items():
            if cls.m != m:
                raise ValueError("classes from different Grassmannians")
            c = Fraction(c)
            if c:
                clean[cls] = clean.get(cls, 0) + c
        self.coeffs = {k: v for k, v in clean.items() if v}

    @classmethod
    def of(cls, x: SchubertClass, c=1) -> "SchubertSum":
        return cls(x.m, {x: c})

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.coeffs.values())

    def __add__(self, other: "SchubertSum") -> "SchubertSum":
        if other.m != self.m:
            raise ValueError("classes from different Grassmannians")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return SchubertSum(self.m, out)

    def scale(self, c) -> "SchubertSum":
        return SchubertSum(self.m, {k: v * Fraction(c) for k, v in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, SchubertSum) and self.m == other.m and self.coeffs == other.coeffs

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs, reverse=True):
            c = self.coeffs[k]
            parts.append(f"{c}*{k}" if c != 1 else str(k))
        return " + ".join(parts)


def product(x: SchubertClass, y: SchubertClass) -> SchubertSum:
    if x.m != y.m:
        raise ValueError("classes from different Grassmannians")
    m = x.m
    a, b = (x, y) if x.a1 - x.a2 >= y.a1 - y.a2 else (y, x)
    total = a.codim + b.codim
    out = {}
    for c1 in range(a.a1 + b.a2, min(a.a1 + b.a1, m - 1) + 1):
        c2 = total - c1
        if 0 <= c2 <= c1:
            out[SchubertClass(m, c1, c2)] = 1
    return SchubertSum(m, out)


def product_sum(x: SchubertSum, y: SchubertSum) -> SchubertSum:
    if x.m != y.m:
        raise ValueError("classes from different Grassmannians")
    out = SchubertSum(x.m)
    for k1, v1 in x.coeffs.items():
        for k2, v2 in y.coeffs.items():
            out = out + product(k1, k2).scale(v1 * v2)
    return out


def all_classes(m: int) -> list[SchubertClass]:
    return [SchubertClass(m, a1, a2) for a1 in range(m) for a2 in range(a1 + 1)]


def betti_numbers(m: int) -> list[int]:
    out = [0] * (2 * m - 1)
    for c in all_classes(m):
        out[c.codim] += 1
    return out


def min_vanishing_degree(m: int) -> int:
    if m < 3:
        raise ValueError("m must be at least 3")
    best = None
    classes = all_classes(m)
    for i, x in enumerate(classes):
        if x.codim == 0:
            continue
        for y in classes[i:]:
            if y.codim == 0:
                continue
            if product(x, y).is_zero():
                d = x.codim + y.codim
                if best is None or d < best:
                    best = d
    return best


def effective_divisibility(m: int) -> int:
    """Products of effective classes reduce to products of Schubert classes,
    since the structure constants are nonnegative."""
    return min_vanishing_degree(m) - 1
