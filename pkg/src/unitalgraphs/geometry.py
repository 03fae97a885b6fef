"""The projective plane PG(2, 16) with the Hermitian form
h(a, b) = a1*conj(b3) + a2*conj(b2) + a3*conj(b1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Tuple

from .gf16 import CONJ_TABLE, MUL_TABLE, ORDER, inv, mul

Point = Tuple[int, int, int]


def hermitian_form(a: Point, b: Point) -> int:
    return (
        MUL_TABLE[a[0]][CONJ_TABLE[b[2]]]
        ^ MUL_TABLE[a[1]][CONJ_TABLE[b[1]]]
        ^ MUL_TABLE[a[2]][CONJ_TABLE[b[0]]]
    )


def normalize(v: Point) -> Point:
    """Scale a nonzero triple so its first nonzero coordinate is 1."""
    for c in v:
        if c:
            s = inv(c)
            return tuple(mul(s, x) for x in v)
    raise ValueError("the zero vector is not a projective point")


def all_points() -> List[Point]:
    pts: List[Point] = [(0, 0, 1)]
    pts += [(0, 1, c) for c in range(ORDER)]
    pts += [(1, b, c) for b in range(ORDER) for c in range(ORDER)]
    return pts


@dataclass(frozen=True)
class PointTables:
    """All 273 points, split by h(p, p) = 0.

    ``iso_index`` numbers isotropic points 1..65 and ``noniso_index``
    numbers the others 1..208, both in enumeration order.  ``polar_iso``
    maps each nonisotropic point to the iso-indices on its polar line.
    """

    points: Tuple[Point, ...]
    isotropic: Tuple[Point, ...]
    nonisotropic: Tuple[Point, ...]
    iso_index: Dict[Point, int]
    noniso_index: Dict[Point, int]
    polar_iso: Dict[Point, FrozenSet[int]]

    def is_isotropic(self, p: Point) -> bool:
        return p in self.iso_index

    def polar_isotropics(self, p: Point) -> FrozenSet[int]:
        if p not in self.polar_iso:
            raise ValueError(f"{p} is not a nonisotropic point")
        return self.polar_iso[p]


def polar_isotropics(p: Point, isotropic: List[Point]) -> FrozenSet[int]:
    if hermitian_form(p, p) == 0:
        raise ValueError(f"{p} is isotropic; its polar is a tangent line")
    return frozenset(k for k, q in enumerate(isotropic, 1) if hermitian_form(q, p) == 0)


@lru_cache(maxsize=None)
def enumerate_points() -> PointTables:
    pts = all_points()
    iso = [p for p in pts if hermitian_form(p, p) == 0]
    noniso = [p for p in pts if hermitian_form(p, p) != 0]
    return PointTables(
        points=tuple(pts),
        isotropic=tuple(iso),
        nonisotropic=tuple(noniso),
        iso_index={p: k for k, p in enumerate(iso, 1)},
        noniso_index={p: k for k, p in enumerate(noniso, 1)},
        polar_iso={p: polar_isotropics(p, iso) for p in noniso},
    )
