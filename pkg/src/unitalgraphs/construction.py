"""Build G (416 vertices), its subgraph E on C, the supergraph H and the
five 256-vertex graphs F_0..F_4.

Vertices of G are orthogonal bases {a, b, c} of nonisotropic points.  Each
basis carries the 15 isotropic points on the polars of a, b and c (its
iso-set); two bases are adjacent iff their iso-sets share exactly 3 points.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

from .geometry import PointTables, enumerate_points, hermitian_form
from .graph import Graph, bits


@dataclass(frozen=True)
class TriangleVertex:
    basis: Tuple[int, int, int]  # sorted nonisotropic indices (1..208)
    iso_set: int  # bit k-1 set iff isotropic point k is on one of the polars

    def iso_indices(self) -> List[int]:
        return [b + 1 for b in bits(self.iso_set)]


def _iso_mask(indices) -> int:
    m = 0
    for k in indices:
        m |= 1 << (k - 1)
    return m


def enumerate_bases(tables: PointTables) -> List[TriangleVertex]:
    """All unordered triples of pairwise orthogonal nonisotropic points,
    in lexicographic order of their sorted index triples."""
    noniso = tables.nonisotropic
    n = len(noniso)
    ortho = [
        [j for j in range(n) if j != i and hermitian_form(noniso[i], noniso[j]) == 0]
        for i in range(n)
    ]
    ortho_sets = [set(o) for o in ortho]
    polar = [_iso_mask(tables.polar_iso[p]) for p in noniso]

    triangles = []
    for a in range(n):
        for b in ortho[a]:
            if b <= a:
                continue
            for c in ortho[b]:
                if c <= b or c not in ortho_sets[a]:
                    continue
                pa, pb, pc = polar[a], polar[b], polar[c]
                if pa & pb or pa & pc or pb & pc:
                    raise AssertionError(f"polars of basis {(a, b, c)} share isotropic points")
                triangles.append(TriangleVertex((a + 1, b + 1, c + 1), pa | pb | pc))
    return triangles


def build_G(triangles: List[TriangleVertex]) -> Graph:
    masks = [t.iso_set for t in triangles]
    n = len(masks)
    rows = [0] * n
    for i in range(n):
        mi = masks[i]
        for j in range(i + 1, n):
            if (mi & masks[j]).bit_count() == 3:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(rows, "G")


def intersection_histogram(triangles: List[TriangleVertex]) -> Dict[int, int]:
    """Counts of |iso_set(i) & iso_set(j)| over unordered pairs i < j."""
    hist: Dict[int, int] = {}
    masks = [t.iso_set for t in triangles]
    for i, mi in enumerate(masks):
        for mj in masks[i + 1:]:
            c = (mi & mj).bit_count()
            hist[c] = hist.get(c, 0) + 1
    return dict(sorted(hist.items()))


def split_B_C(triangles: List[TriangleVertex], iso_point: int = 1) -> Tuple[List[int], List[int]]:
    bit = 1 << (iso_point - 1)
    B = [i for i, t in enumerate(triangles) if t.iso_set & bit]
    C = [i for i, t in enumerate(triangles) if not t.iso_set & bit]
    return B, C


def compute_X_W(
    tables: PointTables,
    triangles: List[TriangleVertex],
    g: Graph,
    B: List[int],
    C: List[int],
    iso_point: int = 1,
) -> Tuple[List[int], Dict[int, FrozenSet[int]]]:
    """X: nonisotropic points whose polar contains ``iso_point``.

    W(i) for i in C: the members of X that are not a basis point of any
    neighbour of i in B.
    """
    X = [
        tables.noniso_index[p]
        for p in tables.nonisotropic
        if iso_point in tables.polar_iso[p]
    ]
    xset = frozenset(X)
    in_B = 0
    for b in B:
        in_B |= 1 << b
    W = {}
    for i in C:
        used = set()
        for b in bits(g.adj[i] & in_B):
            used.update(triangles[b].basis)
        W[i] = xset - used
    return X, W


def build_H(e: Graph, C: List[int], X: List[int], W: Dict[int, FrozenSet[int]]) -> Graph:
    """E plus 16 independent vertices d(x); vertex 320+k is d(X[k]) and
    is adjacent to i in C iff X[k] is in W(i)."""
    n_c = len(C)
    xpos = {x: k for k, x in enumerate(X)}
    rows = list(e.adj) + [0] * len(X)
    for p, i in enumerate(C):
        for x in W[i]:
            d = n_c + xpos[x]
            rows[p] |= 1 << d
            rows[d] |= 1 << p
    return Graph(rows, "H")


def build_F(e: Graph, m, excluded_r: int) -> Graph:
    """Subgraph of E on the four cell sets other than ``excluded_r``,
    vertices in (r, s, t, u) lexicographic order."""
    if not 0 <= excluded_r <= 4:
        raise ValueError("excluded_r must be in [0, 4]")
    keep = [m.to_vertex[key] for key in sorted(m.to_vertex) if key[0] != excluded_r]
    return e.induced_subgraph(keep, f"F{excluded_r}")


@dataclass
class ConstructionState:
    tables: PointTables
    triangles: List[TriangleVertex]
    g: Graph
    B: List[int]
    C: List[int]
    e: Graph
    X: List[int]
    W: Dict[int, FrozenSet[int]]
    h: Graph
    m: Optional[object] = None
    f_variants: List[Graph] = field(default_factory=list)

    def w_by_position(self) -> List[FrozenSet[int]]:
        """W indexed by vertex of E (position in C)."""
        return [self.W[i] for i in self.C]

    def graphs(self) -> Dict[str, Graph]:
        """Export stems mapped to graphs."""
        out = {"G24": self.g, "320": self.e, "336": self.h}
        out.update({f"256_{r}": f for r, f in enumerate(self.f_variants)})
        return out


def construct() -> ConstructionState:
    from .hierarchy import build_M

    tables = enumerate_points()
    triangles = enumerate_bases(tables)
    g = build_G(triangles)
    B, C = split_B_C(triangles)
    e = g.induced_subgraph(C, "E")
    X, W = compute_X_W(tables, triangles, g, B, C)
    h = build_H(e, C, X, W)
    state = ConstructionState(tables, triangles, g, B, C, e, X, W, h)
    state.m = build_M(e, state.w_by_position())
    state.f_variants = [build_F(e, state.m, r) for r in range(5)]
    return state
