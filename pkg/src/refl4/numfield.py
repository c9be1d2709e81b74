"""Exact arithmetic in K = Q(i, sqrt2, sqrt3, sqrt5).

K is represented as a single 16-dimensional Q-algebra on the basis of
products of the four generators; every element has a unique coordinate
vector, so equality is tuple comparison.  This is the coefficient domain for
the whole package: it contains the golden ratio, all the matrix entries of
the builtin groups, and every root of unity of order dividing 24.

There is deliberately no square-root or root-finding operation: each needed
irrational is a named constant (``sqrt2()``, ``tau()``, ``root_of_unity``).
All values are immutable; operations are pure.
"""

from __future__ import annotations

import re
from fractions import Fraction

from . import kernel as _k

_BITS = ((1, "i"), (2, "r2"), (4, "r3"), (8, "r5"))

_SYMBOLS = []
for _idx in range(16):
    _parts = [name for bit, name in _BITS if _idx & bit]
    _SYMBOLS.append("*".join(_parts))

_SYMBOL_BIT = {"i": 1, "r2": 2, "r3": 4, "r5": 8}

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


class FieldElement:
    """An element of Q(i, sqrt2, sqrt3, sqrt5) in canonical form."""

    __slots__ = ("_v",)

    def __init__(self, value=0):
        if isinstance(value, FieldElement):
            self._v = value._v
        elif isinstance(value, int):
            self._v = _k.fe_from_int(value)
        elif isinstance(value, Fraction):
            self._v = _k.fe_mul_q(_k.FE_ONE, value.numerator, value.denominator)
        elif isinstance(value, tuple) and len(value) == 2:
            self._v = value  # trusted kernel pair
        else:
            raise TypeError(f"cannot build FieldElement from {value!r}")

    @classmethod
    def _raw(cls, v):
        e = object.__new__(cls)
        e._v = v
        return e

    @classmethod
    def from_coords(cls, coords) -> "FieldElement":
        """Build from 16 rationals indexed by the basis products."""
        coords = [Fraction(c) for c in coords]
        if len(coords) != 16:
            raise ValueError("expected 16 coordinates")
        den = 1
        for c in coords:
            den = den * c.denominator // _gcd(den, c.denominator)
        nums = [int(c * den) for c in coords]
        return cls._raw(_k.fe_canon(den, nums))

    @property
    def coords(self):
        """The 16 rational coordinates, basis order 1, i, r2, i*r2, r3, ..."""
        den, nums = self._v
        return tuple(Fraction(n, den) for n in nums)

    @property
    def raw(self):
        return self._v

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            return other._v
        if isinstance(other, int):
            return _k.fe_from_int(other)
        if isinstance(other, Fraction):
            return _k.fe_mul_q(_k.FE_ONE, other.numerator, other.denominator)
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement._raw(_k.fe_add(self._v, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement._raw(_k.fe_sub(self._v, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement._raw(_k.fe_sub(v, self._v))

    def __mul__(self, other):
        if isinstance(other, int):
            return FieldElement._raw(_k.fe_mul_q(self._v, other, 1))
        if isinstance(other, Fraction):
            return FieldElement._raw(
                _k.fe_mul_q(self._v, other.numerator, other.denominator)
            )
        if isinstance(other, FieldElement):
            return FieldElement._raw(_k.fe_mul(self._v, other._v))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return FieldElement._raw(_k.fe_mul_q(self._v, 1, other))
        if isinstance(other, Fraction):
            return FieldElement._raw(
                _k.fe_mul_q(self._v, other.denominator, other.numerator)
            )
        if isinstance(other, FieldElement):
            return self * other.inv()
        return NotImplemented

    def __rtruediv__(self, other):
        inv = self.inv()
        return inv * other

    def __neg__(self):
        return FieldElement._raw(_k.fe_neg(self._v))

    def __pow__(self, k):
        return FieldElement._raw(_k.fe_pow(self._v, k))

    def inv(self) -> "FieldElement":
        return FieldElement._raw(_k.fe_inv(self._v))

    def conj(self) -> "FieldElement":
        """Complex conjugation; fixes exactly the real subfield."""
        return FieldElement._raw(_k.fe_conj(self._v))

    def galois(self, mask: int) -> "FieldElement":
        """Galois map negating the generators in mask (bit0=i .. bit3=r5)."""
        return FieldElement._raw(_k.fe_galois(self._v, mask & 15))

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return _k.fe_is_zero(self._v)

    def is_real(self) -> bool:
        return all(n == 0 for i, n in enumerate(self._v[1]) if i & 1)

    def is_rational(self) -> bool:
        return all(n == 0 for n in self._v[1][1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._v[1][0], self._v[0])

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        v = self._coerce(other) if not isinstance(other, FieldElement) else other._v
        if v is None:
            return NotImplemented
        return self._v == v

    def __hash__(self):
        return hash(self._v)

    # -- rendering ----------------------------------------------------------

    def render(self) -> str:
        """Canonical text form, e.g. '-13/16' or '1/2 + 1/2*i*r3'."""
        den, nums = self._v
        parts = []
        for idx, n in enumerate(nums):
            if not n:
                continue
            mag = Fraction(abs(n), den)
            rat = str(mag.numerator)
            if mag.denominator != 1:
                rat += f"/{mag.denominator}"
            sym = _SYMBOLS[idx]
            body = f"{rat}*{sym}" if sym else rat
            parts.append(("-" if n < 0 else "+", body))
        if not parts:
            return "0"
        sign0, body0 = parts[0]
        out = ("-" if sign0 == "-" else "") + body0
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    @classmethod
    def parse(cls, text: str) -> "FieldElement":
        s = text.strip().replace(" ", "")
        if not s:
            raise ValueError("empty field element text")
        if s == "0":
            return ZERO
        coords = [Fraction(0)] * 16
        terms = re.findall(r"[+-]?[^+-]+", s)
        if "".join(terms) != s:
            raise ValueError(f"dangling operator in {text!r}")
        for term in terms:
            sign = 1
            if term[0] == "+":
                term = term[1:]
            elif term[0] == "-":
                sign = -1
                term = term[1:]
            coeff = Fraction(1)
            idx = 0
            seen_rat = False
            for tok in term.split("*"):
                if tok in _SYMBOL_BIT:
                    bit = _SYMBOL_BIT[tok]
                    if idx & bit:
                        raise ValueError(f"repeated symbol in {text!r}")
                    idx |= bit
                elif _RATIONAL_RE.match(tok) and not seen_rat:
                    coeff = Fraction(tok)
                    seen_rat = True
                else:
                    raise ValueError(f"bad token {tok!r} in {text!r}")
            coords[idx] += sign * coeff
        return cls.from_coords(coords)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"FieldElement({self.render()!r})"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


# -- named constants --------------------------------------------------------

ZERO = FieldElement(0)
ONE = FieldElement(1)
HALF = FieldElement(Fraction(1, 2))


def _unit(idx):
    nums = [0] * 16
    nums[idx] = 1
    return FieldElement._raw((1, tuple(nums)))


I = _unit(1)
R2 = _unit(2)
R3 = _unit(4)
R5 = _unit(8)


def sqrt2() -> FieldElement:
    return R2


def sqrt3() -> FieldElement:
    return R3


def sqrt5() -> FieldElement:
    return R5


def imag_unit() -> FieldElement:
    return I


def tau() -> FieldElement:
    """The golden ratio (1 + sqrt5)/2."""
    return (ONE + R5) * HALF


def rational(num, den=1) -> FieldElement:
    return FieldElement(Fraction(num, den))


_PRIMITIVE_ROOTS = {
    1: ONE,
    2: -ONE,
    4: I,
    3: (-ONE + I * R3) * HALF,
    6: (ONE + I * R3) * HALF,
    8: (R2 * HALF) * (ONE + I),
    12: R3 * HALF + I * HALF,
    24: (R2 * R3 + R2) * Fraction(1, 4) + I * (R2 * R3 - R2) * Fraction(1, 4),
}


def root_of_unity(order: int, power: int = 1) -> FieldElement:
    """exp(2*pi*i*power/order) for the orders present in the field."""
    try:
        z = _PRIMITIVE_ROOTS[order]
    except KeyError:
        raise ValueError(f"no root of unity of order {order} in the field")
    return z ** (power % order)


def all_roots_of_unity():
    """Every root of unity of the field (the 24th roots), as a list."""
    z = _PRIMITIVE_ROOTS[24]
    out = []
    cur = ONE
    for _ in range(24):
        out.append(cur)
        cur = cur * z
    return out
