"""Cell hierarchy on the 320 vertices of E.

Vertices with equal W-sets form 20 cells of 16.  Cells with pairwise
disjoint W-sets group into 5 cell sets of 4 cells, each cell induces
K_{4,4,4,4} whose four parts are 4-cocliques.  The bijection
M(r, s, t, u) indexes cell set r, cell s, part t and position u.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Dict, FrozenSet, List, Sequence, Tuple

from .graph import Graph, bits, mask_of

Key = Tuple[int, int, int, int]

N_SETS, N_CELLS, N_PARTS, PART_SIZE = 5, 4, 4, 4


class HierarchyError(RuntimeError):
    pass


@dataclass
class MIndex:
    to_vertex: Dict[Key, int]
    from_vertex: Dict[int, Key]
    wset_of_cell: Dict[Tuple[int, int], FrozenSet[int]]

    def vertex(self, r: int, s: int, t: int, u: int) -> int:
        return self.to_vertex[(r, s, t, u)]

    def cell_of(self, v: int) -> Tuple[int, int]:
        return self.from_vertex[v][:2]

    def cell(self, r: int, s: int) -> List[int]:
        return [self.to_vertex[(r, s, t, u)] for t in range(N_PARTS) for u in range(PART_SIZE)]

    def part(self, r: int, s: int, t: int) -> List[int]:
        return [self.to_vertex[(r, s, t, u)] for u in range(PART_SIZE)]

    def cell_set(self, r: int) -> List[int]:
        return [v for s in range(N_CELLS) for v in self.cell(r, s)]


def _complement_components(g: Graph, members: Sequence[int]) -> List[List[int]]:
    cell = mask_of(members)
    seen = 0
    comps = []
    for v in sorted(members):
        if seen >> v & 1:
            continue
        comp, frontier = 1 << v, 1 << v
        while frontier:
            w = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = cell & ~g.adj[w] & ~(1 << w) & ~comp
            comp |= new
            frontier |= new
        seen |= comp
        comps.append(list(bits(comp)))
    return comps


def build_M(e: Graph, wsets: Sequence[FrozenSet[int]]) -> MIndex:
    """Derive the canonical M from E and the W-set of each E-vertex.

    r orders cell sets by smallest member, s orders cells within a set by
    smallest member, t orders parts by smallest member, u is ascending.
    """
    if len(wsets) != e.n:
        raise HierarchyError("need one W-set per vertex")
    classes: Dict[FrozenSet[int], List[int]] = {}
    for v, w in enumerate(wsets):
        classes.setdefault(frozenset(w), []).append(v)
    sizes = sorted(len(c) for c in classes.values())
    if sizes != [N_PARTS * PART_SIZE] * (N_SETS * N_CELLS):
        raise HierarchyError(f"equal-W classes have sizes {sizes}, expected 20 x 16")

    cells = sorted(classes.items(), key=lambda kv: kv[1][0])
    groups: List[List[int]] = []
    assigned = [False] * len(cells)
    for a, (wa, _) in enumerate(cells):
        if assigned[a]:
            continue
        group = [a] + [b for b, (wb, _) in enumerate(cells) if b != a and not wa & wb]
        if len(group) != N_CELLS or any(assigned[b] for b in group):
            raise HierarchyError(f"cell {a} has {len(group) - 1} W-disjoint cells, expected 3")
        for b in group:
            for c in group:
                if b != c and cells[b][0] & cells[c][0]:
                    raise HierarchyError("W-disjointness is not an equivalence on cells")
            assigned[b] = True
        groups.append(group)
    if len(groups) != N_SETS:
        raise HierarchyError(f"found {len(groups)} cell sets, expected 5")

    to_vertex: Dict[Key, int] = {}
    wset_of_cell = {}
    # cells are sorted by first member, so groups and their members already are
    for r, group in enumerate(groups):
        for s, c in enumerate(group):
            wset, members = cells[c]
            wset_of_cell[(r, s)] = wset
            parts = _complement_components(e, members)
            if sorted(map(len, parts)) != [PART_SIZE] * N_PARTS:
                raise HierarchyError(f"cell ({r},{s}) complement has components {list(map(len, parts))}")
            for t, part in enumerate(parts):
                for u, v in enumerate(part):
                    to_vertex[(r, s, t, u)] = v
    from_vertex = {v: k for k, v in to_vertex.items()}
    if len(from_vertex) != e.n:
        raise HierarchyError("M is not a bijection onto the vertices of E")
    return MIndex(to_vertex, from_vertex, wset_of_cell)


@dataclass
class CheckReport:
    lines: List[Tuple[str, bool, str]] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.lines.append((name, bool(passed), detail))

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.lines)

    def render(self) -> str:
        return "\n".join(
            f"{'PASS' if ok else 'FAIL'} {name}" + (f": {detail}" if detail else "")
            for name, ok, detail in self.lines
        )

    def __str__(self) -> str:
        return self.render()


R, S, T, U = range(N_SETS), range(N_CELLS), range(N_PARTS), range(PART_SIZE)


def verify_hierarchy(e: Graph, m: MIndex, wsets: Sequence[FrozenSet[int]]) -> CheckReport:
    """Check |W| = 4 and the six propositions on W-intersections and on
    adjacency between cells, parts and cell sets, each exhaustively."""
    rep = CheckReport()
    adj = e.adj
    M = m.to_vertex
    part_mask = {(r, s, t): mask_of(m.part(r, s, t)) for r in R for s in S for t in T}
    cell_mask = {(r, s): mask_of(m.cell(r, s)) for r in R for s in S}
    keys = sorted(M)

    bad = [v for v, w in enumerate(wsets) if len(w) != 4]
    rep.add("w-size |W(i)| = 4 for all i in C", not bad, f"{len(wsets) - len(bad)}/{len(wsets)} vertices")

    n_bad = 0
    for k1 in keys:
        w1 = wsets[M[k1]]
        for k2 in keys:
            size = len(w1 & wsets[M[k2]])
            want = (4 if k1[1] == k2[1] else 0) if k1[0] == k2[0] else 1
            n_bad += size != want
    rep.add("w-overlap W-intersections 4/0/1", n_bad == 0, f"{len(keys) ** 2} ordered pairs, {n_bad} violations")

    n_bad = sum(
        any(adj[v] & part_mask[(r, s, t)] for v in m.part(r, s, t))
        for r in R for s in S for t in T
    )
    rep.add("part-coclique no edges inside a cell part", n_bad == 0, f"{n_bad} parts with edges")

    n_bad = 0
    for r, s, t1, u1 in keys:
        row = adj[M[(r, s, t1, u1)]]
        for t2 in T:
            if t2 != t1:
                n_bad += (row & part_mask[(r, s, t2)]).bit_count() != PART_SIZE
    rep.add("cell-multipartite complete between parts of a cell", n_bad == 0, f"{n_bad} violations")

    n_bad = 0
    for r, s1, t, u in keys:
        row = adj[M[(r, s1, t, u)]]
        n_bad += sum(bool(row & cell_mask[(r, s2)]) for s2 in S if s2 != s1)
    rep.add("set-separation no edges between cells of a cell set", n_bad == 0, f"{n_bad} violations")

    n_bad = 0
    for r1, s1, t1, u1 in keys:
        row = adj[M[(r1, s1, t1, u1)]]
        for r2 in R:
            if r2 == r1:
                continue
            for s2 in S:
                for t2 in T:
                    n_bad += (row & part_mask[(r2, s2, t2)]).bit_count() != 1
    rep.add("foreign-part one neighbour in each foreign cell part", n_bad == 0, f"{n_bad} violations")

    n_bad = checked = 0
    for r1 in R:
        for s1 in S:
            cell = [(t, u) for t in T for u in U]
            for (t1, u1), (t2, u2) in product(cell, cell):
                if (t1, u1) == (t2, u2):
                    continue
                common = adj[M[(r1, s1, t1, u1)]] & adj[M[(r1, s1, t2, u2)]]
                want = 1 if t1 != t2 else 0
                for r3 in R:
                    if r3 == r1:
                        continue
                    for s3 in S:
                        checked += 1
                        n_bad += (common & cell_mask[(r3, s3)]).bit_count() != want
    rep.add("foreign-common common neighbours in a foreign cell 0/1", n_bad == 0, f"{checked} cases, {n_bad} violations")
    return rep


def structure_checks(e: Graph, m: MIndex) -> CheckReport:
    """Cell counts, K_{4,4,4,4} cells, degree decomposition and the
    same-cell common-neighbour counts."""
    rep = CheckReport()
    cells = {m.cell_of(v) for v in range(e.n)}
    rep.add("20 cells of 16", len(cells) == 20 and all(len(m.cell(*c)) == 16 for c in cells))
    rep.add("5 cell sets of 4 cells", sorted({r for r, _ in cells}) == list(R) and all(
        sum(1 for c in cells if c[0] == r) == 4 for r in R))

    k4444 = 0
    for r in R:
        for s in S:
            sub = e.induced_subgraph(m.cell(r, s))
            want = [((1 << 16) - 1) & ~(0xF << (4 * (p // 4))) for p in range(16)]
            k4444 += list(sub.adj) == want
    rep.add("every cell induces K4,4,4,4", k4444 == 20, f"{k4444}/20 cells")

    cell_mask = {(r, s): mask_of(m.cell(r, s)) for r in R for s in S}
    n_bad = 0
    for v in range(e.n):
        r, s = m.cell_of(v)
        row = e.adj[v]
        n_bad += (row & cell_mask[(r, s)]).bit_count() != 12
        for r2 in R:
            for s2 in S:
                if (r2, s2) == (r, s):
                    continue
                want = 0 if r2 == r else 4
                n_bad += (row & cell_mask[(r2, s2)]).bit_count() != want
    rep.add("degree 12 + 4*4*4 = 76 by cells", n_bad == 0 and set(e.degrees()) == {76})

    same_part, other_part = same_cell_common_neighbors(e, m)
    rep.add("same-part pairs have 12 common neighbours", same_part == {12}, f"observed {sorted(same_part)}")
    rep.add("different-part same-cell pairs have 24", other_part == {24}, f"observed {sorted(other_part)}")
    return rep


def same_cell_common_neighbors(g: Graph, m: MIndex, vertex_map=None, sets=R):
    """Sets of common-neighbour counts over same-part and different-part
    pairs of every cell in ``sets``.  ``vertex_map`` translates E-vertices
    to vertices of ``g`` (for F variants)."""
    tr = vertex_map or (lambda v: v)
    same, other = set(), set()
    for r in sets:
        for s in S:
            for (t1, u1), (t2, u2) in product(product(T, U), repeat=2):
                if (t1, u1) >= (t2, u2):
                    continue
                a, b = tr(m.vertex(r, s, t1, u1)), tr(m.vertex(r, s, t2, u2))
                (same if t1 == t2 else other).add(g.common_neighbors(a, b))
    return same, other


@dataclass
class CocliqueReport:
    per_set_cocliques: List[int]
    per_set_divisions: List[int]
    parts_are_cocliques: bool

    @property
    def total_cocliques(self) -> int:
        return sum(self.per_set_cocliques)

    @property
    def passed(self) -> bool:
        return (
            self.parts_are_cocliques
            and self.per_set_cocliques == [256] * N_SETS
            and self.per_set_divisions == [13824] * N_SETS
        )

    def render(self) -> str:
        tag = lambda ok: "PASS" if ok else "FAIL"
        lines = [
            f"{tag(self.parts_are_cocliques)} every cell part is a 4-coclique",
            f"{tag(self.per_set_cocliques == [256] * N_SETS)} aligned 16-cocliques per cell set: "
            f"{self.per_set_cocliques} (total {self.total_cocliques})",
            f"{tag(self.per_set_divisions == [13824] * N_SETS)} divisions into four 16-cocliques "
            f"per cell set: {self.per_set_divisions}",
        ]
        if self.per_set_divisions == [13824] * N_SETS:
            lines.append(f"PASS divisions of C into twenty 16-cocliques: 13824^5 = {13824 ** 5}")
        return "\n".join(lines)


def coclique_census(e: Graph, m: MIndex) -> CocliqueReport:
    parts_ok = all(e.is_coclique(mask_of(m.part(r, s, t))) for r in R for s in S for t in T)
    cocl_counts, div_counts = [], []
    for r in R:
        pm = [[mask_of(m.part(r, s, t)) for t in T] for s in S]
        full = mask_of(m.cell_set(r))
        valid = {}
        for choice in product(T, repeat=N_CELLS):
            mask = 0
            for s, t in enumerate(choice):
                mask |= pm[s][t]
            valid[choice] = mask.bit_count() == 16 and e.is_coclique(mask)
        cocl_counts.append(sum(valid.values()))

        divisions = 0
        perms = list(permutations(T))
        for p1, p2, p3 in product(perms, repeat=3):
            union, ok = 0, True
            for k in T:
                choice = (k, p1[k], p2[k], p3[k])
                mask = pm[0][k] | pm[1][p1[k]] | pm[2][p2[k]] | pm[3][p3[k]]
                if not valid[choice] or union & mask:
                    ok = False
                    break
                union |= mask
            divisions += ok and union == full
        div_counts.append(divisions)
    return CocliqueReport(cocl_counts, div_counts, parts_ok)
