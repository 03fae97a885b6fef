"""Isomorphism witnesses by individualization-refinement.

Both graphs are refined together as one disjoint union, so a color means
the same thing on each side and compatibility is a per-class count check.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from .graph import Graph, bits


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.float64)
    for i, row in enumerate(g.adj):
        a[i, list(bits(row))] = 1.0
    return a


def _canonical(colors: Sequence[int]) -> np.ndarray:
    """Relabel to contiguous ids 0..c-1, keeping the order of the ids."""
    _, ids = np.unique(np.asarray(colors), return_inverse=True)
    return ids.reshape(-1)


def _refine(a: np.ndarray, colors: np.ndarray) -> np.ndarray:
    colors = _canonical(colors)
    n_classes = int(colors.max()) + 1 if len(colors) else 0
    while True:
        counts = a @ np.eye(n_classes)[colors]
        sig = np.column_stack([colors, counts])
        _, new = np.unique(sig, axis=0, return_inverse=True)
        new = new.reshape(-1)
        k = int(new.max()) + 1
        if k == n_classes:
            return new
        colors, n_classes = new, k


def refine(g: Graph, initial: Optional[Sequence[int]] = None) -> List[int]:
    """Coarsest equitable refinement of ``initial`` (uniform by default).

    Vertices share an output color only if they shared an input color and
    have the same number of neighbours in every output color.  Ids are
    assigned by sorting (old color, neighbour counts), so they do not
    depend on vertex numbering.
    """
    colors = np.zeros(g.n, dtype=np.int64) if initial is None else np.asarray(initial)
    if len(colors) != g.n:
        raise ValueError("coloring length does not match the graph")
    if g.n == 0:
        return []
    return _refine(adjacency_matrix(g), colors).tolist()


@dataclass(frozen=True)
class IsoWitness:
    perm: Tuple[int, ...]  # vertex i of g1 maps to perm[i] of g2

    def render(self) -> str:
        return "".join(f"{i} -> {j}\n" for i, j in enumerate(self.perm))


@dataclass(frozen=True)
class NotFound:
    reason: str

    def __bool__(self) -> bool:
        return False


def is_isomorphism(g1: Graph, g2: Graph, perm: Sequence[int]) -> bool:
    """Exhaustive pairwise check that ``perm`` is an edge-preserving bijection."""
    n = g1.n
    if g2.n != n or sorted(perm) != list(range(n)):
        return False
    for i in range(n):
        pi = perm[i]
        for j in range(i + 1, n):
            if g1.has_edge(i, j) != g2.has_edge(pi, perm[j]):
                return False
    return True


def compose(first: Sequence[int], second: Sequence[int]) -> List[int]:
    """The map i -> second[first[i]]."""
    return [second[p] for p in first]


def find_isomorphism(
    g1: Graph,
    g2: Graph,
    seed1: Optional[Sequence[int]] = None,
    seed2: Optional[Sequence[int]] = None,
) -> Union[IsoWitness, NotFound]:
    """Search for an isomorphism g1 -> g2 mapping seed colors to seed colors.

    Backtracks over individualizations of the lowest vertex of the largest
    non-singleton class of g1.  Returns NotFound only once the search space
    is exhausted or an invariant already differs.
    """
    n = g1.n
    if g2.n != n:
        return NotFound(f"vertex counts differ: {n} vs {g2.n}")
    if g1.edge_count() != g2.edge_count():
        return NotFound("edge counts differ")
    seed1 = [0] * n if seed1 is None else list(seed1)
    seed2 = [0] * n if seed2 is None else list(seed2)
    if len(seed1) != n or len(seed2) != n:
        raise ValueError("seed colorings must cover every vertex")
    if sorted(seed1) != sorted(seed2):
        return NotFound("seed class sizes differ")
    if n == 0:
        return IsoWitness(())

    a = np.zeros((2 * n, 2 * n))
    a[:n, :n] = adjacency_matrix(g1)
    a[n:, n:] = adjacency_matrix(g2)

    def compatible(colors: np.ndarray) -> bool:
        k = int(colors.max()) + 1
        return np.array_equal(np.bincount(colors[:n], minlength=k), np.bincount(colors[n:], minlength=k))

    def search(colors: np.ndarray) -> Optional[List[int]]:
        colors = _refine(a, colors)
        if not compatible(colors):
            return None
        left = colors[:n]
        sizes = np.bincount(left)
        if sizes.max() == 1:
            right_of = {int(c): j for j, c in enumerate(colors[n:])}
            return [right_of[int(c)] for c in left]
        target = int(np.argmax(sizes))
        v = int(np.flatnonzero(left == target)[0])
        fresh = int(colors.max()) + 1
        for w in np.flatnonzero(colors[n:] == target):
            trial = colors.copy()
            trial[v] = trial[n + w] = fresh
            found = search(trial)
            if found is not None:
                return found
        return None

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * n + 100))
    try:
        perm = search(np.concatenate([_canonical(seed1 + seed2)]))
    finally:
        sys.setrecursionlimit(limit)
    if perm is None:
        return NotFound("search space exhausted")
    if not is_isomorphism(g1, g2, perm):
        raise AssertionError("refinement produced a map that does not preserve edges")
    return IsoWitness(tuple(perm))
