"""Immutable simple graphs stored as rows of int bitsets."""

from __future__ import annotations

from typing import Iterable, Iterator, List, Sequence, Tuple


class GraphError(ValueError):
    pass


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A simple undirected graph on vertices 0..n-1.

    ``adj[i]`` is an int whose bit j is set iff i and j are adjacent.
    """

    __slots__ = ("n", "adj", "label")

    def __init__(self, adj: Sequence[int], label: str = ""):
        rows = tuple(adj)
        n = len(rows)
        for i, row in enumerate(rows):
            if row >> n:
                raise GraphError(f"row {i} has bits beyond n={n}")
            if row >> i & 1:
                raise GraphError(f"self-loop at vertex {i}")
            for j in bits(row):
                if not rows[j] >> i & 1:
                    raise GraphError(f"asymmetric edge {i}-{j}")
        self.n = n
        self.adj = rows
        self.label = label

    @classmethod
    def build(cls, n: int, edges: Iterable[Tuple[int, int]], label: str = "") -> "Graph":
        rows = [0] * n
        for e in edges:
            i, j = e
            if not (0 <= i < n and 0 <= j < n):
                raise GraphError(f"edge {e} has an endpoint outside [0, {n})")
            if i == j:
                raise GraphError(f"self-loop {e} not allowed")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(rows, label)

    def __repr__(self) -> str:
        name = f" {self.label!r}" if self.label else ""
        return f"<Graph{name} n={self.n} m={self.edge_count()}>"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self) -> int:
        return hash(self.adj)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()

    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self.adj]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Edges (i, j) with i < j, ascending."""
        for i, row in enumerate(self.adj):
            yield from ((i, j) for j in bits(row >> (i + 1) << (i + 1)))

    def neighbors(self, i: int) -> List[int]:
        return list(bits(self.adj[i]))

    def common_neighbors(self, i: int, j: int) -> int:
        if i == j:
            raise GraphError("common_neighbors needs two distinct vertices")
        return (self.adj[i] & self.adj[j]).bit_count()

    def induced_subgraph(self, keep: Sequence[int], label: str = "") -> "Graph":
        """Subgraph on ``keep``; new vertex p is old vertex keep[p]."""
        pos = {}
        for p, v in enumerate(keep):
            if not 0 <= v < self.n:
                raise GraphError(f"vertex {v} out of range")
            if v in pos:
                raise GraphError(f"duplicate vertex {v}")
            pos[v] = p
        rows = []
        for v in keep:
            row = 0
            for w in bits(self.adj[v]):
                p = pos.get(w)
                if p is not None:
                    row |= 1 << p
            rows.append(row)
        return Graph(rows, label)

    def is_coclique(self, mask: int) -> bool:
        return all(not (self.adj[v] & mask) for v in bits(mask))

    def is_clique(self, mask: int) -> bool:
        return all((self.adj[v] | 1 << v) & mask == mask for v in bits(mask))


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m
