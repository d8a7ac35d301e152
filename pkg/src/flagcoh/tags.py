"""Tags of flag bundles on P^1."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .dynkin import DynkinDiagram, MarkedDiagram, cartan_entry, components_minus_node


@dataclass(frozen=True)
class Tag:
    diagram: DynkinDiagram
    values: tuple[int, ...]
    labels: tuple[int, ...] | None = None  # parent node labels, when a restriction

    def __post_init__(self):
        if len(self.values) != self.diagram.rank:
            raise ValueError(f"tag length {len(self.values)} does not match rank of {self.diagram}")
        if self.labels is not None and len(self.labels) != len(self.values):
            raise ValueError("labels and values differ in length")

    @property
    def nodes(self) -> tuple[int, ...]:
        return self.labels if self.labels is not None else tuple(self.diagram.nodes)

    def value(self, node: int) -> int:
        return self.values[self.nodes.index(node)]

    def __str__(self):
        return ",".join(map(str, self.values))


def tag_from_splitting_type(splitting: Sequence[int]) -> Tag:
    a = list(splitting)
    if len(a) < 2:
        raise ValueError("a splitting type needs at least two entries")
    if any(a[i] < a[i + 1] for i in range(len(a) - 1)):
        raise ValueError("splitting type must be non-increasing")
    return Tag(DynkinDiagram("A", len(a) - 1), tuple(a[i] - a[i + 1] for i in range(len(a) - 1)))


def zero_set(t: Tag) -> frozenset[int]:
    return frozenset(n for n, v in zip(t.nodes, t.values) if v == 0)


def universal_tag(x: MarkedDiagram) -> "RestrictedTag":
    """d_i = -C(i, j) on the nodes i != j of the diagram.

    The nodes off the mark need not form a connected diagram; the tag lives
    on the parent labels, with ``diagram`` recording the full parent.
    """
    d, j = x.diagram, x.node
    nodes = tuple(i for i in d.nodes if i != j)
    return RestrictedTag(d, nodes, tuple(-cartan_entry(d, i, j) for i in nodes))


@dataclass(frozen=True)
class RestrictedTag:
    """A tag on the diagram with one node removed (possibly disconnected)."""

    parent: DynkinDiagram
    labels: tuple[int, ...]
    values: tuple[int, ...]

    @property
    def nodes(self):
        return self.labels

    def value(self, node: int) -> int:
        return self.values[self.labels.index(node)]

    def components(self):
        j = next(i for i in self.parent.nodes if i not in self.labels)
        out = []
        for c in components_minus_node(self.parent, j):
            out.append(Tag(c.diagram, tuple(self.value(p) for p in c.labels), c.labels))
        return out

    def __str__(self):
        return ",".join(f"d{i}={v}" for i, v in zip(self.labels, self.values))
