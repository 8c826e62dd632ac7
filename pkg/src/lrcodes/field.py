"""Exact arithmetic over GF(p) and GF(2^e), plus univariate polynomial utilities.

Field elements are plain Python ints in [0, q), in canonical form: the
residue mod p for prime fields, the coefficient bit pattern for binary
extension fields.  Polynomials are lists of such ints, lowest degree
first, with no trailing zeros; the zero polynomial is the empty list and
its degree is the sentinel NEG_INF (so degree arithmetic stays honest:
deg(a*b) = deg(a) + deg(b) holds for the sentinel too).
"""

from __future__ import annotations

from typing import Sequence

from .errors import (
    DivisionByZero,
    DuplicateAbscissa,
    NotAPrimePower,
    UnsupportedField,
)

NEG_INF = float("-inf")

MAX_ORDER = 1 << 16

# Smallest irreducible binary polynomial of each degree, as a coefficient
# bit mask (bit i = coefficient of x^i).  Degree 8 is the familiar 0x11B.
_IRREDUCIBLE = {
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11B,
    9: 0x203,
    10: 0x409,
    11: 0x805,
    12: 0x1009,
    13: 0x201B,
    14: 0x4021,
    15: 0x8003,
    16: 0x1002B,
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """GF(p) for prime p <= 2^16, or GF(2^e) for 2 <= e <= 16.

    Instances are immutable and freely shareable; every operation is a
    pure function of its arguments.
    """

    __slots__ = ("order", "characteristic", "extension_degree", "modulus")

    def __init__(self, q: int):
        if not isinstance(q, int) or q < 2:
            raise NotAPrimePower(f"field order must be an integer >= 2, got {q!r}")
        if _is_prime(q):
            if q > MAX_ORDER:
                raise UnsupportedField(f"prime field order {q} exceeds 2^16")
            p, e, modulus = q, 1, None
        elif q & (q - 1) == 0:
            e = q.bit_length() - 1
            if e > 16:
                raise UnsupportedField(f"GF(2^{e}) exceeds the supported degree 16")
            p, modulus = 2, _IRREDUCIBLE[e]
        else:
            # odd prime powers p^e with e > 1 land here too
            root = round(q ** 0.5)
            if root * root == q and _is_prime(root):
                raise UnsupportedField(f"odd-characteristic extension field {q} not supported")
            raise NotAPrimePower(f"{q} is not a prime or a power of two")
        self.order = q
        self.characteristic = p
        self.extension_degree = e
        self.modulus = modulus

    def __repr__(self) -> str:
        if self.extension_degree == 1:
            return f"Field(GF({self.order}))"
        return f"Field(GF(2^{self.extension_degree}), modulus={self.modulus:#x})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and self.order == other.order

    def __hash__(self) -> int:
        return hash(("Field", self.order))

    def check(self, a: int) -> int:
        """Validate that *a* is a canonical element of this field."""
        if not isinstance(a, int) or not 0 <= a < self.order:
            raise ValueError(f"{a!r} is not an element of GF({self.order})")
        return a

    def elements(self) -> range:
        return range(self.order)

    # -- arithmetic ---------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.characteristic == 2:
            return a ^ b
        return (a + b) % self.characteristic

    def sub(self, a: int, b: int) -> int:
        if self.characteristic == 2:
            return a ^ b
        return (a - b) % self.characteristic

    def neg(self, a: int) -> int:
        if self.characteristic == 2:
            return a
        return (-a) % self.characteristic

    def mul(self, a: int, b: int) -> int:
        if self.extension_degree == 1:
            return (a * b) % self.characteristic
        # carry-less multiply, reducing as we go to keep ints small
        e, modulus = self.extension_degree, self.modulus
        acc = 0
        while b:
            if b & 1:
                acc ^= a
            a <<= 1
            if a >> e:
                a ^= modulus
            b >>= 1
        return acc

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"zero has no inverse in GF({self.order})")
        if self.extension_degree == 1:
            return pow(a, self.characteristic - 2, self.characteristic)
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        """a**n by square-and-multiply; a**0 = 1 for every a, including 0."""
        if n < 0:
            raise ValueError("negative exponent; invert explicitly instead")
        if self.extension_degree == 1:
            return pow(a, n, self.characteristic) if n else 1
        acc = 1
        base = a
        while n:
            if n & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            n >>= 1
        return acc


# -- polynomials ------------------------------------------------------


def poly_trim(coeffs: Sequence[int]) -> list[int]:
    """Normalize: strip trailing zero coefficients."""
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


def poly_degree(p: Sequence[int]) -> int | float:
    return len(p) - 1 if p else NEG_INF


def poly_add(F: Field, a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = F.add(out[i], c)
    return poly_trim(out)


def poly_sub(F: Field, a: Sequence[int], b: Sequence[int]) -> list[int]:
    return poly_add(F, a, [F.neg(c) for c in b])


def poly_scale(F: Field, c: int, p: Sequence[int]) -> list[int]:
    if c == 0:
        return []
    return poly_trim([F.mul(c, x) for x in p])


def poly_shift(p: Sequence[int], i: int) -> list[int]:
    """Multiply by x^i."""
    if not p:
        return []
    return [0] * i + list(p)


def poly_mul(F: Field, a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return poly_trim(out)


def poly_pow(F: Field, p: Sequence[int], n: int) -> list[int]:
    acc: list[int] = [1]
    for _ in range(n):
        acc = poly_mul(F, acc, p)
    return acc


def poly_eval(F: Field, p: Sequence[int], x: int) -> int:
    """Horner evaluation of p at x."""
    acc = 0
    for c in reversed(p):
        acc = F.add(F.mul(acc, x), c)
    return acc


def poly_from_roots(F: Field, roots: Sequence[int]) -> list[int]:
    """Monic polynomial whose root set is exactly *roots* (with multiplicity)."""
    acc: list[int] = [1]
    for rt in roots:
        acc = poly_mul(F, acc, [F.neg(rt), 1])
    return acc


def lagrange_interpolate(F: Field, points: Sequence[tuple[int, int]]) -> list[int]:
    """Unique polynomial of degree < len(points) through all (x, y) pairs.

    Raises DuplicateAbscissa when two x values coincide.
    """
    if not points:
        raise ValueError("need at least one interpolation point")
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa(f"repeated x coordinate in {xs}")
    result: list[int] = []
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        # yi * prod_{j != i} (x - xj) / (xi - xj)
        basis: list[int] = [1]
        denom = 1
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = poly_mul(F, basis, [F.neg(xj), 1])
            denom = F.mul(denom, F.sub(xi, xj))
        result = poly_add(F, result, poly_scale(F, F.mul(yi, F.inv(denom)), basis))
    return result


def interpolate_at(F: Field, points: Sequence[tuple[int, int]], x0: int) -> int:
    """Value at x0 of the interpolating polynomial, without building it."""
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa(f"repeated x coordinate in {xs}")
    acc = 0
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        num, den = 1, 1
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            num = F.mul(num, F.sub(x0, xj))
            den = F.mul(den, F.sub(xi, xj))
        acc = F.add(acc, F.mul(yi, F.div(num, den)))
    return acc
