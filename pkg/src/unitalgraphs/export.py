"""Writers for graph6, DIMACS and Dreadnaut input."""

from __future__ import annotations

from pathlib import Path
from typing import Dict, List

from .graph import Graph, bits

EXTENSIONS = {"graph6": "g6", "dimacs": "dimacs", "dreadnaut": "dre"}


def _graph6_size(n: int) -> bytes:
    if n <= 62:
        return bytes([63 + n])
    if n <= 258047:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    raise ValueError("graph6 writer supports at most 258047 vertices")


def write_graph6(g: Graph) -> bytes:
    out = bytearray(_graph6_size(g.n))
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + acc)
                acc = nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    out += b"\n"
    return bytes(out)


def write_dimacs(g: Graph) -> bytes:
    lines = [f"p edge {g.n} {g.edge_count()}"]
    lines += [f"e {i + 1} {j + 1}" for i, j in g.edges()]
    return ("\n".join(lines) + "\n").encode("ascii")


def write_dreadnaut(g: Graph) -> bytes:
    """``n=N $=0 g`` then ``i: <neighbours j > i>;`` for i = 0..n-2, the
    last list ending in ``.``, then ``x``.

    Only the upper triangle is written; dreadnaut adds the reverse edges of
    an undirected graph itself.  Vertex n-1 has no higher neighbours and
    gets no line.
    """
    lines: List[str] = [f"n={g.n} $=0 g"]
    for i in range(g.n - 1):
        upper = " ".join(str(j) for j in bits(g.adj[i] >> (i + 1) << (i + 1)))
        lines.append(f"{i}: {upper};" if upper else f"{i}: ;")
    if len(lines) > 1:
        lines[-1] = lines[-1][:-1] + "."
    else:
        lines.append(".")
    lines.append("x")
    return ("\n".join(lines) + "\n").encode("ascii")


WRITERS = {"graph6": write_graph6, "dimacs": write_dimacs, "dreadnaut": write_dreadnaut}


def export_graphs(graphs: Dict[str, Graph], fmt: str, out_dir) -> List[Path]:
    """Write ``<stem>.<ext>`` for every graph; returns the written paths."""
    writer = WRITERS[fmt]
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for stem, g in graphs.items():
        path = out / f"{stem}.{EXTENSIONS[fmt]}"
        path.write_bytes(writer(g))
        paths.append(path)
    return paths
