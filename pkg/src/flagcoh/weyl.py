"""Classical Weyl groups as signed permutation groups on the x-coordinates."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .dynkin import DiagramError, DynkinDiagram, weyl_order
from .polyring import WeightedPolynomial


class EnumerationCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class WeylElement:
    """x_i -> signs[i] * x_{perm[i]} (0-based)."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))) or len(self.signs) != len(self.perm):
            raise ValueError("not a signed permutation")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")

    @classmethod
    def identity(cls, size: int) -> "WeylElement":
        return cls(tuple(range(size)), (1,) * size)

    @property
    def size(self) -> int:
        return len(self.perm)

    @property
    def negations(self) -> int:
        return sum(1 for s in self.signs if s < 0)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        # (self * other)(x_i) = self(other(x_i))
        if other.size != self.size:
            raise ValueError("size mismatch")
        perm = tuple(self.perm[other.perm[i]] for i in range(self.size))
        signs = tuple(other.signs[i] * self.signs[other.perm[i]] for i in range(self.size))
        return WeylElement(perm, signs)

    def order(self) -> int:
        e = WeylElement.identity(self.size)
        g, k = self, 1
        while g != e:
            g, k = g * self, k + 1
        return k


def coordinate_count(d: DynkinDiagram) -> int:
    if not d.is_classical:
        raise DiagramError(f"Weyl group elements only for classical types, got {d}")
    return d.rank + 1 if d.family == "A" else d.rank


def simple_reflection(d: DynkinDiagram, i: int) -> WeylElement:
    """Reflection in the simple root alpha_i.

    For D_n the last generator swaps x_{n-1}, x_n and changes both signs;
    together with s_{n-1} it generates the same group as the plain double
    sign change, and it keeps the Coxeter relations of the diagram.
    """
    size = coordinate_count(d)
    d.check_node(i)
    n = d.rank
    perm, signs = list(range(size)), [1] * size
    if i < n or d.family == "A":
        perm[i - 1], perm[i] = i, i - 1
    elif d.family in "BC":
        signs[n - 1] = -1
    else:
        perm[n - 2], perm[n - 1] = n - 1, n - 2
        signs[n - 2] = signs[n - 1] = -1
    return WeylElement(tuple(perm), tuple(signs))


@dataclass(frozen=True)
class WeylGroup:
    diagram: DynkinDiagram
    subset: tuple[int, ...] | None = None  # parabolic W(I) when given

    @property
    def generator_nodes(self) -> tuple[int, ...]:
        return tuple(self.diagram.nodes) if self.subset is None else tuple(sorted(self.subset))

    @property
    def generators(self) -> list[WeylElement]:
        return [simple_reflection(self.diagram, i) for i in self.generator_nodes]

    def order(self) -> int:
        if self.subset is None:
            return weyl_order(self.diagram)
        return len(enumerate_group(self))


def enumerate_group(w: WeylGroup, cap: int = 10**6) -> list[WeylElement]:
    gens = w.generators
    start = WeylElement.identity(coordinate_count(w.diagram))
    seen = {start}
    out = [start]
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = s * g
            if h not in seen:
                if len(seen) >= cap:
                    raise EnumerationCapExceeded(f"group order exceeds cap {cap}")
                seen.add(h)
                out.append(h)
                queue.append(h)
    return out


def act(e: WeylElement, p: WeightedPolynomial) -> WeightedPolynomial:
    if p.nvars != e.size:
        raise ValueError(f"polynomial has {p.nvars} variables, element acts on {e.size}")
    terms: dict[tuple[int, ...], Fraction] = {}
    for mono, c in p.terms.items():
        new = [0] * e.size
        sign = 1
        for i, a in enumerate(mono):
            if a:
                new[e.perm[i]] += a
                if e.signs[i] < 0 and a % 2:
                    sign = -sign
        key = tuple(new)
        terms[key] = terms.get(key, 0) + sign * c
    return WeightedPolynomial(p.table, terms)


def is_invariant(w: WeylGroup, p: WeightedPolynomial) -> bool:
    return all(act(g, p) == p for g in w.generators)
