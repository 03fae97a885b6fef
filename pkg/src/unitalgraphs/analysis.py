"""Strong-regularity verification and clique counting by size."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Tuple, Union

from .graph import Graph, bits


@dataclass(frozen=True)
class SrgParams:
    v: int
    k: int
    lambda_: int
    mu: int

    def __post_init__(self):
        if not (self.v > 0 and 0 <= self.k < self.v and self.lambda_ <= self.k and self.mu <= self.k):
            raise ValueError(f"inconsistent srg parameters {self.astuple()}")

    def astuple(self) -> Tuple[int, int, int, int]:
        return (self.v, self.k, self.lambda_, self.mu)

    def feasible(self) -> bool:
        """k(k - lambda - 1) == (v - k - 1) mu."""
        v, k, lam, mu = self.astuple()
        return k * (k - lam - 1) == (v - k - 1) * mu

    def __str__(self) -> str:
        return "srg(%d,%d,%d,%d)" % self.astuple()


@dataclass(frozen=True)
class SrgFailure:
    """First violation found by :func:`verify_srg`.

    ``reason`` is one of ``empty-graph``, ``degree``, ``lambda``, ``mu``,
    ``no-edges`` (lambda undefined) or ``complete`` (mu undefined).
    """

    reason: str
    vertices: Tuple[int, ...] = ()
    observed: Optional[int] = None
    expected: Optional[int] = None

    def __bool__(self) -> bool:
        return False

    def __str__(self) -> str:
        where = "-".join(map(str, self.vertices))
        if self.observed is None:
            return f"not strongly regular ({self.reason})"
        return (
            f"not strongly regular: {self.reason} at {where} "
            f"is {self.observed}, expected {self.expected}"
        )


def verify_srg(g: Graph) -> Union[SrgParams, SrgFailure]:
    """Return the parameters of ``g`` if it is strongly regular.

    Scans every pair with bitset intersections and reports the first
    violation otherwise.
    """
    n, adj = g.n, g.adj
    if n == 0:
        return SrgFailure("empty-graph")
    k = adj[0].bit_count()
    for i in range(1, n):
        d = adj[i].bit_count()
        if d != k:
            return SrgFailure("degree", (i,), d, k)
    if k == 0:
        return SrgFailure("no-edges")
    if k == n - 1:
        return SrgFailure("complete")

    lam = mu = None
    for i in range(n):
        row = adj[i]
        for j in range(i + 1, n):
            c = (row & adj[j]).bit_count()
            if row >> j & 1:
                if lam is None:
                    lam = c
                elif c != lam:
                    return SrgFailure("lambda", (i, j), c, lam)
            else:
                if mu is None:
                    mu = c
                elif c != mu:
                    return SrgFailure("mu", (i, j), c, mu)

    params = SrgParams(n, k, lam, mu)
    assert params.feasible(), f"{params} violates k(k-l-1)=(v-k-1)mu"
    return params


def count_cliques(g: Graph, s_max: int = 7) -> Dict[int, int]:
    """Number of complete subgraphs of each size 2..s_max.

    Each clique is counted once by extending in ascending vertex order.
    """
    if s_max < 2:
        raise ValueError("s_max must be at least 2")
    adj = g.adj
    counts = [0] * (s_max + 1)
    # forward[v]: neighbors of v with larger index
    forward = [row >> (v + 1) << (v + 1) for v, row in enumerate(adj)]

    def extend(cand: int, size: int) -> None:
        # cand holds the common forward neighbors of a clique of `size`
        counts[size + 1] += cand.bit_count()
        if size + 1 == s_max:
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            nxt = cand & forward[v]
            if nxt:
                extend(nxt, size + 1)

    for v in range(g.n):
        if forward[v]:
            extend(forward[v], 1)
    return {s: counts[s] for s in range(2, s_max + 1)}


def format_profile(counts: Dict[int, int]) -> str:
    """Render as `` 2:20800 3:249600 ...``."""
    return "".join(f" {s}:{c}" for s, c in sorted(counts.items()))
