"""Projections of the second Veronese embedding of P^n onto smooth quadrics.

Coordinates are Z_{i,j} = x_i x_j with i <= j, indexed 0..n. The quadric is
a sum of hyperbolic blocks Z_{2i,2i} Z_{2i+1,2i+1} - Z_{2i,2i+1}^2, with one
extra block Z_{n-2,n-1} Z_{n,n} - Z_{n-2,n} Z_{n-1,n} when n is even.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import row_reduce
from .polyring import VariableTable, WeightedPolynomial


def coordinates(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n + 1) for j in range(i, n + 1)]


def _z(i, j):
    return (i, j) if i <= j else (j, i)


@dataclass(frozen=True)
class QuadricInZ:
    n: int
    coords: tuple[tuple[int, int], ...]
    gram: tuple[tuple[Fraction, ...], ...]  # F(v) = v^T G v

    def index(self, i, j) -> int:
        return self.coords.index(_z(i, j))


def quadric_terms(n: int) -> list[tuple[Fraction, tuple[int, int], tuple[int, int]]]:
    """The quadric as a list of (coefficient, Z, Z')."""
    if n < 2:
        raise ValueError("n must be at least 2")
    terms = []
    last = (n - 1) // 2 if n % 2 else (n - 2) // 2
    for i in range(last + 1):
        a, b = 2 * i, 2 * i + 1
        terms.append((Fraction(1), (a, a), (b, b)))
        terms.append((Fraction(-1), (a, b), (a, b)))
    if n % 2 == 0:
        terms.append((Fraction(1), _z(n - 2, n - 1), (n, n)))
        terms.append((Fraction(-1), _z(n - 2, n), _z(n, n - 1)))
    return terms


def build_quadric(n: int) -> QuadricInZ:
    coords = coordinates(n)
    size = len(coords)
    g = [[Fraction(0)] * size for _ in range(size)]
    for c, p, q in quadric_terms(n):
        i, j = coords.index(p), coords.index(q)
        if i == j:
            g[i][i] += c
        else:
            g[i][j] += c / 2
            g[j][i] += c / 2
    return QuadricInZ(n, tuple(coords), tuple(tuple(r) for r in g))


def quadric_polynomial(q: QuadricInZ) -> WeightedPolynomial:
    table = VariableTable.of((f"Z{i}_{j}", 1) for i, j in q.coords)
    out = WeightedPolynomial.zero(table)
    for c, p, r in quadric_terms(q.n):
        out = out + WeightedPolynomial.var(table, f"Z{p[0]}_{p[1]}") * WeightedPolynomial.var(table, f"Z{r[0]}_{r[1]}") * c
    return out


def vertex_codimension(q: QuadricInZ) -> int:
    return row_reduce(q.gram).rank


def vertex_equations(q: QuadricInZ) -> list[tuple[Fraction, ...]]:
    """A basis of the linear forms vanishing on the vertex (the Gram row space)."""
    red = row_reduce(q.gram)
    return [row for row in red.rref[: red.rank]]


def listed_vertex_equations(n: int) -> list[tuple[int, int]]:
    """Coordinates whose vanishing is claimed to cut out the vertex."""
    eqs = [(j, j) for j in range(n + 1)]
    eqs += [(2 * i, 2 * i + 1) for i in range(n + 1) if 2 * i + 1 <= n]
    if n % 2 == 0:
        eqs += [(n - 1, n), (n - 2, n)]
    return list(dict.fromkeys(eqs))


def listed_equations_span_vertex(q: QuadricInZ) -> bool:
    listed = [[Fraction(int(c == _z(*e))) for c in q.coords] for e in listed_vertex_equations(q.n)]
    r_gram = vertex_codimension(q)
    r_listed = row_reduce(listed).rank
    r_both = row_reduce(list(q.gram) + listed).rank
    return r_gram == r_listed == r_both


def verify_disjoint(q: QuadricInZ) -> bool:
    """Each Z_{j,j} (pulling back to x_j^2) lies in the span of the vertex
    equations, so the vertex misses v_2(P^n)."""
    rows = vertex_equations(q)
    base = row_reduce(rows).rank
    for j in range(q.n + 1):
        e = [Fraction(int(c == (j, j))) for c in q.coords]
        if row_reduce(rows + [e]).rank != base:
            return False
    return True


def target_quadric_dimension(n: int) -> int:
    return vertex_codimension(build_quadric(n)) - 2


def expected_codimension(n: int) -> int:
    return 3 * (n + 1) // 2 if n % 2 else 3 * (n + 2) // 2
