from collections import Counter

import pytest

from unitalgraphs.gf16 import conj, mul
from unitalgraphs.geometry import all_points, enumerate_points, hermitian_form, normalize


@pytest.fixture(scope="module")
def tables():
    return enumerate_points()


def test_form_examples():
    assert hermitian_form((1, 0, 0), (1, 0, 0)) == 0
    assert hermitian_form((0, 1, 0), (0, 1, 0)) == 1
    assert hermitian_form((1, 0, 0), (0, 0, 1)) == 1


def test_point_counts(tables):
    assert len(tables.points) == 273
    assert len(set(tables.points)) == 273
    assert len(tables.isotropic) == 65
    assert len(tables.nonisotropic) == 208
    assert all(normalize(p) == p for p in tables.points)
    assert tables.is_isotropic((1, 0, 0))


def test_enumeration_order():
    pts = all_points()
    assert pts[0] == (0, 0, 1)
    assert pts[1:17] == [(0, 1, c) for c in range(16)]
    assert pts[17] == (1, 0, 0)
    assert enumerate_points().iso_index[(0, 0, 1)] == 1


def test_polar_census(tables):
    assert all(len(s) == 5 for s in tables.polar_iso.values())
    assert sum(len(s) for s in tables.polar_iso.values()) == 1040
    per_iso = Counter(k for s in tables.polar_iso.values() for k in s)
    assert sorted(per_iso) == list(range(1, 66))
    assert set(per_iso.values()) == {16}
    assert per_iso[1] == 16


def test_polar_of_isotropic_point_rejected(tables):
    with pytest.raises(ValueError):
        tables.polar_isotropics((1, 0, 0))


def test_hermitian_symmetry(tables):
    pts = tables.points
    for a in pts:
        assert conj(hermitian_form(a, a)) == hermitian_form(a, a)
        for b in pts:
            assert hermitian_form(a, b) == conj(hermitian_form(b, a))


def test_orthogonality_is_projective(tables):
    pts = tables.points[::7]
    for a in pts:
        for b in pts:
            zero = hermitian_form(a, b) == 0
            for s in (2, 7, 13):
                sa = tuple(mul(s, x) for x in a)
                sb = tuple(mul(s ^ 1, x) for x in b)
                assert (hermitian_form(sa, sb) == 0) == zero
