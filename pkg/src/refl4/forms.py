"""Closed-form reference data for the degree 2, 6, 8, 12 invariant family.

This module holds the explicit published expansions of the three higher
basic invariants of the order-1152 reflection group, the factored plane
products they come from, and the two point witnesses used by the
verification suite.  The geometric construction in ``refl4.geometry``
rebuilds all of these independently; the test suite compares the two.

Symmetric sums run over distinct monomials: a pattern like (4,4) on four
variables contributes one term per unordered index pair.  The published
degree-12 expansion fails its own point check with the printed (6,6)
coefficient -255/2; ``f12_explicit`` therefore takes the coefficient as a
parameter, defaulting to the printed value, and the suite reports the
mismatch against the geometric reconstruction (see the verification
driver).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from .mpoly import MPoly
from .numfield import HALF, I, ONE, R2, R3, ZERO

# the degree-6 plane constants
A_CONST = (ONE + I * R3) * HALF
B_CONST = (ONE - I * R3) * HALF
C_CONST = I * R2


def quadric() -> MPoly:
    return MPoly({(2, 0, 0, 0): 1, (0, 2, 0, 0): 1, (0, 0, 2, 0): 1, (0, 0, 0, 2): 1})


def witness_points():
    """The two quadric points used for the divisibility witnesses."""
    p1 = (I * R2, ONE, ONE, ZERO)
    p2 = (ONE, I, ZERO, ZERO)
    return p1, p2


def distinct_monomials(pattern):
    """All distinct exponent tuples obtained by placing the pattern on the
    four variables, e.g. (4, 4) -> the six x_i^4 x_j^4 monomials."""
    padded = tuple(pattern) + (0,) * (4 - len(pattern))
    return sorted(set(permutations(padded)), reverse=True)


def symmetric_sum(pattern, coeff) -> MPoly:
    c = Fraction(coeff)
    return MPoly({exps: c for exps in distinct_monomials(pattern)})


def f6_explicit() -> MPoly:
    """The published degree-6 expansion (leading coefficient 1)."""
    terms = {}

    def add(exps, c):
        exps = tuple(exps)
        terms[exps] = terms.get(exps, 0) + c

    for i in range(4):
        e = [0, 0, 0, 0]
        e[i] = 6
        add(e, 1)

    def pair_block(i, j, c):
        # c * xi^2 xj^2 (xi^2 + xj^2)
        e = [0, 0, 0, 0]
        e[i], e[j] = 4, 2
        add(e, c)
        e = [0, 0, 0, 0]
        e[i], e[j] = 2, 4
        add(e, c)

    pair_block(0, 1, 5)
    pair_block(1, 3, 5)
    pair_block(1, 2, 5)
    pair_block(0, 2, 6)
    pair_block(0, 3, 6)
    pair_block(3, 2, 6)
    add((2, 0, 2, 2), 2)
    return MPoly({e: Fraction(c) for e, c in terms.items()})


def f8_explicit() -> MPoly:
    """The published degree-8 expansion (leading coefficient 3)."""
    out = symmetric_sum((8,), 3)
    out = out + symmetric_sum((6, 2), 12)
    out = out + symmetric_sum((4, 4), 30)
    out = out + symmetric_sum((4, 2, 2), 24)
    out = out + MPoly({(2, 2, 2, 2): 144})
    return out


F12_PRINTED_66 = Fraction(-255, 2)


def f12_explicit(coeff66=F12_PRINTED_66) -> MPoly:
    """The published degree-12 expansion; coeff66 is the x_i^6 x_j^6 coefficient."""
    out = symmetric_sum((12,), Fraction(123, 8))
    out = out + symmetric_sum((10, 2), Fraction(231, 4))
    out = out + symmetric_sum((8, 4), Fraction(21, 8))
    out = out + symmetric_sum((6, 6), Fraction(coeff66))
    out = out + symmetric_sum((8, 2, 2), Fraction(949, 2))
    out = out + symmetric_sum((6, 4, 2), Fraction(1839, 2))
    out = out + symmetric_sum((4, 4, 4), Fraction(6111, 4))
    out = out + symmetric_sum((6, 2, 2, 2), 1809)
    out = out + symmetric_sum((4, 4, 2, 2), Fraction(7281, 2))
    return out


def f6_corrected() -> MPoly:
    """The invariant the degree-6 expansion should display (monic).

    The printed expansion is not fixed by the rotation generators: an
    invariant of this group is symmetric under all coordinate permutations,
    which forces equal coefficients on all x_i^4 x_j^2 terms.  The geometric
    reconstruction gives sum x_i^6 + 5 sum_{i != j} x_i^4 x_j^2, which the
    test suite re-derives independently.
    """
    out = symmetric_sum((6,), 1)
    return out + symmetric_sum((4, 2), 5)


F12_PRINTED_822 = Fraction(949, 2)
F12_CORRECTED_822 = Fraction(1899, 4)


def f12_corrected() -> MPoly:
    """The degree-12 expansion with its one wrong printed coefficient fixed.

    The x_i^8 x_j^2 x_k^2 coefficient must be 1899/4, not the printed 949/2;
    with that correction the expansion is invariant, projects to
    (3/256) chi_1 chi_2, and equals the geometric reconstruction scaled to
    the printed leading coefficient 123/8.
    """
    out = f12_explicit()
    delta = F12_CORRECTED_822 - F12_PRINTED_822
    return out + symmetric_sum((8, 2, 2), delta)


def _lin(c0, c1, c2, c3) -> MPoly:
    return MPoly.linear_form([c0, c1, c2, c3])


def plane_factors(degree: int):
    """The published linear factors of the orbit plane products."""
    a, b, c = A_CONST, B_CONST, C_CONST
    if degree == 6:
        return [
            _lin(0, 0, ONE, -I),
            _lin(0, ONE, 0, I),
            _lin(0, 0, ONE, I),
            _lin(0, ONE, -I, 0),
            _lin(0, ONE, 0, -I),
            _lin(0, ONE, I, 0),
        ]
    if degree == 8:
        return [
            _lin(0, ONE, a, -b),
            _lin(0, ONE, b, -a),
            _lin(0, ONE, -a, -b),
            _lin(0, ONE, -b, -a),
            _lin(0, b, ONE, -a),
            _lin(0, a, ONE, -b),
            _lin(0, -b, ONE, a),
            _lin(0, -a, ONE, b),
        ]
    if degree == 12:
        return [
            _lin(0, -ONE, c, ONE),
            _lin(0, -ONE, -c, ONE),
            _lin(0, -c, ONE, ONE),
            _lin(0, c, ONE, ONE),
            _lin(0, c, -ONE, ONE),
            _lin(0, -c, -ONE, ONE),
            _lin(0, ONE, ONE, c),
            _lin(0, ONE, ONE, -c),
            _lin(0, ONE, -c, ONE),
            _lin(0, ONE, c, ONE),
            _lin(0, ONE, -ONE, c),
            _lin(0, ONE, -ONE, -c),
        ]
    raise ValueError(f"no plane factor list for degree {degree}")


def plane_product(degree: int) -> MPoly:
    out = MPoly.constant(1)
    for factor in plane_factors(degree):
        out = out * factor
    return out
