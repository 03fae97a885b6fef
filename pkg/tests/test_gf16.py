from itertools import product

import pytest

from unitalgraphs import gf16
from unitalgraphs.gf16 import add, conj, inv, mul

F = range(16)


def slow_mul(a, b):
    """Carry-less product then long division by x^4 + x + 1."""
    p = 0
    for k in range(4):
        if b >> k & 1:
            p ^= a << k
    for deg in range(6, 3, -1):
        if p >> deg & 1:
            p ^= 0b10011 << (deg - 4)
    return p


@pytest.mark.parametrize("a,b,want", [(0, 7, 7), (5, 5, 0), (3, 5, 6)])
def test_add_examples(a, b, want):
    assert add(a, b) == want


@pytest.mark.parametrize("a,b,want", [(1, 9, 9), (2, 2, 4), (8, 2, 3)])
def test_mul_examples(a, b, want):
    assert mul(a, b) == want


def test_mul_matches_long_division():
    assert slow_mul(8, 2) == 3
    for a, b in product(F, F):
        assert mul(a, b) == slow_mul(a, b)


def test_inverse():
    assert inv(1) == 1
    assert inv(2) == 9
    for a in range(1, 16):
        assert mul(a, inv(a)) == 1


def test_inverse_of_zero_is_an_error():
    with pytest.raises(gf16.ZeroInverseError):
        inv(0)


def test_out_of_range_rejected():
    with pytest.raises(ValueError):
        mul(16, 1)


def test_conj_examples():
    assert conj(0) == 0
    assert conj(1) == 1
    assert conj(2) == 3
    for a in F:
        assert conj(a) == slow_mul(slow_mul(a, a), slow_mul(a, a))


def test_field_axioms_exhaustive():
    for a, b in product(F, F):
        assert add(a, b) == add(b, a)
        assert mul(a, b) == mul(b, a)
    for a, b, c in product(F, F, F):
        assert add(add(a, b), c) == add(a, add(b, c))
        assert mul(mul(a, b), c) == mul(a, mul(b, c))
        assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))


def test_conj_is_involutory_automorphism():
    for a in F:
        assert conj(conj(a)) == a
    for a, b in product(F, F):
        assert conj(mul(a, b)) == mul(conj(a), conj(b))
        assert conj(add(a, b)) == add(conj(a), conj(b))
    assert sorted(a for a in F if conj(a) == a) == [0, 1, 6, 7]


def test_multiplicative_group_is_cyclic():
    assert any(gf16.element_order(a) == 15 for a in range(1, 16))
    assert gf16.element_order(2) == 15
