"""Arithmetic in GF(16) = GF(2)[x]/(x^4 + x + 1).

Elements are ints in [0, 15]; bit k is the coefficient of x^k.
"""

from math import gcd

MODULUS = 0b10011  # x^4 + x + 1
ORDER = 16


class ZeroInverseError(ZeroDivisionError):
    """Raised when the inverse of 0 is requested."""


def _poly_mul(a: int, b: int) -> int:
    """Shift-and-add product, reduced modulo MODULUS."""
    result = 0
    while b:
        if b & 1:
            result ^= a
        b >>= 1
        a <<= 1
        if a & 0b10000:
            a ^= MODULUS
    return result


MUL_TABLE = tuple(tuple(_poly_mul(a, b) for b in range(ORDER)) for a in range(ORDER))

# x is primitive for this modulus, so powers of 2 run through all 15 units.
EXP = [1] * 30
for _k in range(1, 30):
    EXP[_k] = _poly_mul(EXP[_k - 1], 2)
EXP = tuple(EXP)
LOG = {EXP[_k]: _k for _k in range(15)}

INV_TABLE = (0,) + tuple(EXP[(15 - LOG[a]) % 15] for a in range(1, ORDER))
CONJ_TABLE = tuple(_poly_mul(_poly_mul(a, a), _poly_mul(a, a)) for a in range(ORDER))


def _check(a: int) -> int:
    if not 0 <= a < ORDER:
        raise ValueError(f"not a GF(16) element: {a!r}")
    return a


def add(a: int, b: int) -> int:
    return _check(a) ^ _check(b)


def mul(a: int, b: int) -> int:
    return MUL_TABLE[_check(a)][_check(b)]


def inv(a: int) -> int:
    if _check(a) == 0:
        raise ZeroInverseError("0 has no multiplicative inverse in GF(16)")
    return INV_TABLE[a]


def conj(a: int) -> int:
    """The involution a -> a^4, fixing the subfield GF(4) = {0, 1, 6, 7}."""
    return CONJ_TABLE[_check(a)]


def element_order(a: int) -> int:
    if _check(a) == 0:
        raise ValueError("0 has no multiplicative order")
    return 15 // gcd(LOG[a], 15)
