"""Command line driver.

    unitalgraphs build
    unitalgraphs check-srg
    unitalgraphs cliques [--max 7]
    unitalgraphs hierarchy
    unitalgraphs iso [--out DIR]
    unitalgraphs export --format {graph6,dimacs,dreadnaut} --out DIR

Every subcommand prints to stdout and ends with ``== Regular program
stop ==`` exactly when all of its checks passed (exit status 0).
"""

from __future__ import annotations

import argparse
import sys
from itertools import combinations
from pathlib import Path
from typing import List, Optional

from . import analysis, construction, export, hierarchy, isomorphism

STOP_LINE = "== Regular program stop =="

EXPECTED_SRG = {
    "G": (416, 100, 36, 20),
    "H": (336, 80, 28, 16),
    **{f"F{r}": (256, 60, 20, 12) for r in range(5)},
}

EXPECTED_PROFILES = {
    "G": [20800, 249600, 873600, 698880, 0, 0],
    "E": [12160, 107520, 261120, 129024, 0, 0],
    "H": [13440, 125440, 330240, 201984, 9024, 0],
    "F": [7680, 51200, 81920, 15360, 0, 0],
}

DEFAULT_F = 4


def _tag(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def cmd_build(state, args) -> bool:
    t = state.tables
    print(f"points: {len(t.points)} ({len(t.isotropic)} isotropic, {len(t.nonisotropic)} nonisotropic)")
    print(f"orthogonal bases (vertices of G): {len(state.triangles)}")
    hist = construction.intersection_histogram(state.triangles)
    print("iso-set intersection sizes: " + " ".join(f"{k}:{v}" for k, v in hist.items()))
    print(f"|B| = {len(state.B)}, |C| = {len(state.C)}, |X| = {len(state.X)}")
    print(f"W-set sizes over C: {sorted({len(w) for w in state.W.values()})}")
    for name, g in [("G", state.g), ("E", state.e), ("H", state.h)] + [
        (f"F{r}", f) for r, f in enumerate(state.f_variants)
    ]:
        print(f"{name}: {g.n} vertices, {g.edge_count()} edges, {analysis.verify_srg(g)}")
    return True


def cmd_check_srg(state, args) -> bool:
    graphs = {"G": state.g, "H": state.h}
    graphs.update({f"F{r}": f for r, f in enumerate(state.f_variants)})
    ok = True
    for name, g in graphs.items():
        res = analysis.verify_srg(g)
        good = bool(res) and res.astuple() == EXPECTED_SRG[name]
        ok &= good
        print(f"{_tag(good)} {name} {res}")
    return ok


def cmd_cliques(state, args) -> bool:
    graphs = {"G": state.g, "E": state.e, "H": state.h, "F": state.f_variants[DEFAULT_F]}
    ok = True
    for name, g in graphs.items():
        counts = analysis.count_cliques(g, args.max)
        print(f"{name}:{analysis.format_profile(counts)}")
        want = EXPECTED_PROFILES[name]
        for s, c in counts.items():
            if s - 2 < len(want) and c != want[s - 2]:
                print(f"FAIL {name} has {c} cliques of size {s}, expected {want[s - 2]}", file=sys.stderr)
                ok = False
    return ok


def cmd_hierarchy(state, args) -> bool:
    w = state.w_by_position()
    reports = [
        hierarchy.verify_hierarchy(state.e, state.m, w),
        hierarchy.structure_checks(state.e, state.m),
    ]
    census = hierarchy.coclique_census(state.e, state.m)
    for rep in reports:
        print(rep.render())
    print(census.render())
    return all(r.passed for r in reports) and census.passed


def cmd_iso(state, args) -> bool:
    fs = state.f_variants
    ok = True
    if args.out:
        Path(args.out).mkdir(parents=True, exist_ok=True)
    for i, j in combinations(range(5), 2):
        w = isomorphism.find_isomorphism(fs[i], fs[j])
        good = bool(w) and isomorphism.is_isomorphism(fs[i], fs[j], w.perm)
        ok &= good
        print(f"{_tag(good)} F{i} ~ F{j}" + ("" if w else f": {w.reason}"))
        if good and args.out:
            (Path(args.out) / f"iso_F{i}_F{j}.txt").write_text(w.render())
    return ok


def cmd_export(state, args) -> bool:
    paths = export.export_graphs(state.graphs(), args.format, args.out)
    for p in paths:
        print(f"wrote {p}")
    return True


COMMANDS = {
    "build": cmd_build,
    "check-srg": cmd_check_srg,
    "cliques": cmd_cliques,
    "hierarchy": cmd_hierarchy,
    "iso": cmd_iso,
    "export": cmd_export,
}


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unitalgraphs",
        description="Construct G2(4) from the Hermitian unital in PG(2,16) and "
        "check the derived graphs E, F and H.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    sub.add_parser("build", help="construct everything and print a census")
    sub.add_parser("check-srg", help="verify strong regularity of G, H and F0..F4")
    p = sub.add_parser("cliques", help="count cliques of each size in G, E, H and F")
    p.add_argument("--max", type=int, default=7, help="largest clique size (default 7)")
    sub.add_parser("hierarchy", help="verify the cell hierarchy of E and the coclique census")
    p = sub.add_parser("iso", help="find isomorphisms between the five F variants")
    p.add_argument("--out", help="directory for witness files")
    p = sub.add_parser("export", help="write graph files")
    p.add_argument("--format", required=True, choices=sorted(export.WRITERS))
    p.add_argument("--out", required=True, help="output directory")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    if args.command == "cliques" and args.max < 2:
        print("error: --max must be at least 2", file=sys.stderr)
        return 2
    state = construction.construct()
    try:
        ok = COMMANDS[args.command](state, args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not ok:
        return 1
    print(STOP_LINE)
    return 0


if __name__ == "__main__":
    sys.exit(main())
