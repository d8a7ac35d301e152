"""Dynkin diagrams, Cartan matrices, root systems and the node combinatorics
used by the splitting criteria.

Node numbering follows Humphreys::

    A_n   1 - 2 - ... - n
    B_n   1 - 2 - ... - (n-1) => n        (n short)
    C_n   1 - 2 - ... - (n-1) <= n        (n long)
    D_n   1 - 2 - ... - (n-2) - (n-1)
                          \\
                           n
    E_n   1 - 3 - 4 - 5 - ... - n
                  |
                  2
    F_4   1 - 2 => 3 - 4                  (3, 4 short)
    G_2   1 <= 2                          (1 short)

Cartan entries are ``entry(i, j) = <alpha_i, alpha_j^vee>``, so a ``-2`` or
``-3`` sits in the row of the long root: ``C_2 = [[2, -1], [-2, 2]]``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache, total_ordering


class DiagramError(ValueError):
    """Raised for invalid diagram labels, ranks or node indices."""


@total_ordering
class _Infinity:
    """Sentinel for h and r of the projective line; compares above every int."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("flagcoh-infinity")

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "inf"


INFINITY = _Infinity()

_RANK_RULES = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

CLASSICAL = frozenset("ABCD")


@dataclass(frozen=True, order=True)
class DynkinDiagram:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_RULES:
            raise DiagramError(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or not _RANK_RULES[self.family](self.rank):
            raise DiagramError(f"invalid rank {self.rank!r} for family {self.family}")

    @classmethod
    def parse(cls, text: str) -> "DynkinDiagram":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*", text)
        if not m:
            raise DiagramError(f"cannot parse diagram {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    @property
    def is_classical(self) -> bool:
        return self.family in CLASSICAL

    def check_node(self, j: int) -> int:
        if not isinstance(j, int) or not 1 <= j <= self.rank:
            raise DiagramError(f"node {j!r} not in {self}")
        return j


def _edges(d: DynkinDiagram):
    """Yield (i, j, a_ij, a_ji) for each edge, 1-based."""
    n, f = d.rank, d.family
    if f in "ABC":
        for i in range(1, n):
            yield i, i + 1, -1, -1
        return
    if f == "D":
        for i in range(1, n - 1):
            yield i, i + 1, -1, -1
        yield n - 2, n, -1, -1
        return
    if f == "E":
        for i, j in ((1, 3), (3, 4), (2, 4), (4, 5), (5, 6), (6, 7), (7, 8)):
            if j <= n:
                yield i, j, -1, -1
        return
    if f == "F":
        yield 1, 2, -1, -1
        yield 2, 3, -2, -1
        yield 3, 4, -1, -1
        return
    yield 1, 2, -1, -3  # G2


@lru_cache(maxsize=None)
def cartan_matrix(d: DynkinDiagram) -> tuple[tuple[int, ...], ...]:
    n = d.rank
    m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, a, b in _edges(d):
        m[i - 1][j - 1] = a
        m[j - 1][i - 1] = b
    if d.family == "B" and n >= 2:
        m[n - 2][n - 1] = -2
    if d.family == "C" and n >= 2:
        m[n - 1][n - 2] = -2
    return tuple(tuple(row) for row in m)


def cartan_entry(d: DynkinDiagram, i: int, j: int) -> int:
    return cartan_matrix(d)[d.check_node(i) - 1][d.check_node(j) - 1]


def neighbors(d: DynkinDiagram, j: int) -> list[int]:
    row = cartan_matrix(d)[d.check_node(j) - 1]
    return [i + 1 for i, v in enumerate(row) if v != 0 and i + 1 != j]


_DEGREES = {
    "E6": [2, 5, 6, 8, 9, 12],
    "E7": [2, 6, 8, 10, 12, 14, 18],
    "E8": [2, 8, 12, 14, 18, 20, 24, 30],
    "F4": [2, 6, 8, 12],
    "G2": [2, 6],
}


def fundamental_degrees(d: DynkinDiagram) -> list[int]:
    n = d.rank
    if d.family == "A":
        return list(range(2, n + 2))
    if d.family in "BC":
        return [2 * i for i in range(1, n + 1)]
    if d.family == "D":
        return sorted([2 * i for i in range(1, n)] + [n])
    return list(_DEGREES[str(d)])


def coxeter_number(d: DynkinDiagram) -> int:
    return max(fundamental_degrees(d))


def weyl_order(d: DynkinDiagram) -> int:
    out = 1
    for k in fundamental_degrees(d):
        out *= k
    return out


# --- roots -----------------------------------------------------------------


@lru_cache(maxsize=None)
def positive_roots(d: DynkinDiagram) -> tuple[tuple[int, ...], ...]:
    """Positive roots in the simple-root basis, ordered by height."""
    c = cartan_matrix(d)
    n = d.rank
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    known = set(simple)
    layer = list(simple)
    out = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # pairing <beta, alpha_i^vee>
                pairing = sum(beta[k] * c[k][i] for k in range(n))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in known:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in known:
                        known.add(up)
                        nxt.append(up)
        nxt.sort()
        out.extend(nxt)
        layer = nxt
    return tuple(out)


def simple_roots_x(d: DynkinDiagram) -> list[tuple[int, ...]]:
    """Simple roots in the x-basis (n+1 coordinates for type A)."""
    if not d.is_classical:
        raise DiagramError(f"x-coordinates only for classical types, got {d}")
    n, f = d.rank, d.family
    size = n + 1 if f == "A" else n
    out = []
    for i in range(1, n + 1):
        v = [0] * size
        if i < n or f == "A":
            v[i - 1], v[i] = 1, -1
        elif f == "B":
            v[n - 1] = 1
        elif f == "C":
            v[n - 1] = 2
        else:  # D
            v[n - 2], v[n - 1] = 1, 1
        out.append(tuple(v))
    return out


@dataclass(frozen=True)
class RootSystem:
    diagram: DynkinDiagram
    roots: tuple[tuple[int, ...], ...]  # simple-root basis, positives first
    positive: tuple[bool, ...]
    roots_x: tuple[tuple[int, ...], ...] | None  # classical only

    @property
    def positive_count(self) -> int:
        return sum(self.positive)


def root_system(d: DynkinDiagram) -> RootSystem:
    pos = positive_roots(d)
    roots = tuple(pos) + tuple(tuple(-c for c in r) for r in pos)
    flags = (True,) * len(pos) + (False,) * len(pos)
    rx = None
    if d.is_classical:
        basis = simple_roots_x(d)
        rx = tuple(
            tuple(sum(r[i] * basis[i][k] for i in range(d.rank)) for k in range(len(basis[0])))
            for r in roots
        )
    return RootSystem(d, roots, flags, rx)


# --- marked diagrams -------------------------------------------------------


@dataclass(frozen=True, order=True)
class MarkedDiagram:
    diagram: DynkinDiagram
    marked: tuple[int, ...]

    def __post_init__(self):
        marked = tuple(sorted(set(self.marked)))
        if not marked:
            raise DiagramError("a marked diagram needs at least one marked node")
        for j in marked:
            self.diagram.check_node(j)
        object.__setattr__(self, "marked", marked)

    @classmethod
    def single(cls, d: DynkinDiagram, j: int) -> "MarkedDiagram":
        return cls(d, (j,))

    @classmethod
    def parse(cls, text: str) -> "MarkedDiagram":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*\(\s*([\d\s,]+)\)\s*", text)
        if not m:
            raise DiagramError(f"cannot parse space {text!r} (expected e.g. D6(6))")
        d = DynkinDiagram(m.group(1).upper(), int(m.group(2)))
        nodes = tuple(int(t) for t in m.group(3).split(",") if t.strip())
        return cls(d, nodes)

    @property
    def node(self) -> int:
        if len(self.marked) != 1:
            raise DiagramError(f"{self} has more than one marked node")
        return self.marked[0]

    @property
    def is_single(self) -> bool:
        return len(self.marked) == 1

    def __str__(self):
        return f"{self.diagram}({','.join(map(str, self.marked))})"


def dimension(x: MarkedDiagram) -> int:
    idx = [j - 1 for j in x.marked]
    return sum(1 for r in positive_roots(x.diagram) if any(r[i] for i in idx))


def is_projective_line(x: MarkedDiagram) -> bool:
    return x.diagram == DynkinDiagram("A", 1)


# --- subdiagrams -----------------------------------------------------------


@dataclass(frozen=True)
class Component:
    """A connected subdiagram: its type and the parent labels of its nodes.

    ``labels[k - 1]`` is the parent node that becomes node ``k``.
    """

    diagram: DynkinDiagram
    labels: tuple[int, ...]

    def local(self, parent_node: int) -> int:
        return self.labels.index(parent_node) + 1

    def __str__(self):
        return f"{self.diagram} on {{{','.join(map(str, sorted(self.labels)))}}}"


def _mult(c, i, j):
    return c[i - 1][j - 1] * c[j - 1][i - 1]


def _walk(adj, start, prev):
    path = [start]
    while True:
        nxt = [k for k in adj[path[-1]] if k != prev]
        if not nxt:
            return path
        prev = path[-1]
        path.append(nxt[0])


def classify(d: DynkinDiagram, nodes) -> Component:
    """Classify a connected node subset of ``d`` as a simple type."""
    nodes = sorted(set(nodes))
    if not nodes:
        raise DiagramError("empty subdiagram")
    c = cartan_matrix(d)
    adj = {i: [j for j in nodes if j != i and c[i - 1][j - 1] != 0] for i in nodes}
    k = len(nodes)
    if k == 1:
        return Component(DynkinDiagram("A", 1), tuple(nodes))
    # connectivity
    seen, stack = {nodes[0]}, [nodes[0]]
    while stack:
        for j in adj[stack.pop()]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    if len(seen) != k:
        raise DiagramError(f"node set {nodes} is not connected in {d}")
    branch = [i for i in nodes if len(adj[i]) == 3]
    if branch:
        b = branch[0]
        arms = [_walk(adj, t, b) for t in adj[b]]
        arms.sort(key=lambda a: (len(a), min(a)))
        lens = tuple(len(a) for a in arms)
        if lens[:2] == (1, 1):
            if lens[2] == 1:
                # D4: the smallest leaf plays node 1
                arms.sort(key=lambda a: a[0])
                long, s1, s2 = arms[0], arms[1], arms[2]
            else:
                long, s1, s2 = arms[2], arms[0], arms[1]
            s1, s2 = sorted([s1, s2], key=lambda a: a[0])
            labels = tuple(reversed(long)) + (b, s1[0], s2[0])
            return Component(DynkinDiagram("D", k), labels)
        if lens[0] == 1 and lens[1] == 2 and lens[2] in (2, 3, 4):
            short, mid, long = arms
            if lens[2] == 2:
                mid, long = sorted([mid, long], key=min)
            # Humphreys: 1-3-4-5-..., 2 on 4
            labels = (mid[1], short[0], mid[0], b) + tuple(long)
            return Component(DynkinDiagram("E", k), labels)
        raise DiagramError(f"unclassifiable branched subdiagram {nodes} of {d}")
    ends = sorted(i for i in nodes if len(adj[i]) == 1)
    path = _walk(adj, ends[0], None)
    mults = [_mult(c, path[t], path[t + 1]) for t in range(k - 1)]
    if all(m == 1 for m in mults):
        return Component(DynkinDiagram("A", k), tuple(path))
    if 3 in mults:
        short = path[0] if c[path[1] - 1][path[0] - 1] == -3 else path[1]
        long = path[1] if short == path[0] else path[0]
        return Component(DynkinDiagram("G", 2), (short, long))
    pos = mults.index(2)
    if k == 4 and pos == 1:
        # F4: long roots first
        if c[path[1] - 1][path[2] - 1] != -2:
            path.reverse()
        return Component(DynkinDiagram("F", 4), tuple(path))
    if pos == 0 and k > 2:
        path.reverse()
    a, b = path[-2], path[-1]
    fam = "B" if c[a - 1][b - 1] == -2 else "C"
    return Component(DynkinDiagram(fam, k), tuple(path))


def components(d: DynkinDiagram, nodes) -> list[Component]:
    nodes = set(nodes)
    c = cartan_matrix(d)
    out = []
    while nodes:
        start = min(nodes)
        comp, stack = {start}, [start]
        while stack:
            i = stack.pop()
            for j in nodes:
                if j not in comp and c[i - 1][j - 1] != 0:
                    comp.add(j)
                    stack.append(j)
        nodes -= comp
        out.append(classify(d, comp))
    return out


def components_minus_node(d: DynkinDiagram, j: int) -> list[Component]:
    d.check_node(j)
    return components(d, set(d.nodes) - {j})


def is_extremal(d: DynkinDiagram, j: int) -> bool:
    return len(components_minus_node(d, j)) <= 1


# --- normalizations --------------------------------------------------------


def normalize(x: MarkedDiagram) -> tuple[MarkedDiagram, str | None]:
    """Replace D_n(n-1) by D_n(n); returns the new space and a note."""
    d = x.diagram
    if d.family == "D" and x.is_single and x.node == d.rank - 1:
        y = MarkedDiagram.single(d, d.rank)
        return y, f"{x} normalized to {y}"
    return x, None


_D3_TO_A3 = {1: 2, 2: 1, 3: 3}


def normalize_d3(x: MarkedDiagram) -> MarkedDiagram:
    """The isomorphism D3 = A3 (node 1 of D3 is the middle node of A3)."""
    if x.diagram != DynkinDiagram("D", 3):
        return x
    return MarkedDiagram(DynkinDiagram("A", 3), tuple(_D3_TO_A3[j] for j in x.marked))


def canonical(x: MarkedDiagram) -> MarkedDiagram:
    """Representative of the isomorphism class of a Picard-one space.

    Uses D3 = A3, diagram symmetries of A_n and D_4, D_n(n-1) = D_n(n) and
    the isomorphisms B2(1) = C2(2), B2(2) = C2(1).
    """
    x = normalize_d3(normalize(x)[0])
    if not x.is_single:
        return x
    d, j = x.diagram, x.node
    if d.family == "A" and 2 * j > d.rank + 1:
        return MarkedDiagram.single(d, d.rank + 1 - j)
    if d.family == "D" and d.rank == 4 and j in (3, 4):
        return MarkedDiagram.single(d, 1)
    if d == DynkinDiagram("C", 2):
        return MarkedDiagram.single(DynkinDiagram("B", 2), 3 - j)
    return x


# --- h(X), r(X), isotropic lines -------------------------------------------


def h_of_X(x: MarkedDiagram):
    if is_projective_line(x):
        return INFINITY
    comps = components_minus_node(x.diagram, x.node)
    return min(coxeter_number(c.diagram) for c in comps)


def r_of_X(x: MarkedDiagram):
    if is_projective_line(x):
        return INFINITY
    comps = components_minus_node(x.diagram, x.node)
    return min(c.diagram.rank for c in comps)


def neighbor_piece(x: MarkedDiagram, t: int) -> tuple[Component, MarkedDiagram]:
    """For a neighbour t of the mark: J_t = {mark} + component of t, and the
    extremal space F_t on it marked at the image of the mark."""
    j = x.node
    comp = next(c for c in components_minus_node(x.diagram, j) if t in c.labels)
    sub = classify(x.diagram, set(comp.labels) | {j})
    f = normalize(MarkedDiagram.single(sub.diagram, sub.local(j)))[0]
    return sub, f


def isotropic_lines_fiber(x: MarkedDiagram) -> list[MarkedDiagram]:
    x = normalize(x)[0]
    if is_projective_line(x):
        return []
    j = x.node
    out = []
    for t in neighbors(x.diagram, j):
        comp = next(c for c in components_minus_node(x.diagram, j) if t in c.labels)
        out.append(normalize(MarkedDiagram.single(comp.diagram, comp.local(t)))[0])
    return out
