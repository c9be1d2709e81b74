import random
from fractions import Fraction

import pytest

from refl4.numfield import (
    FieldElement,
    HALF,
    I,
    ONE,
    R2,
    R3,
    R5,
    ZERO,
    all_roots_of_unity,
    rational,
    root_of_unity,
    sqrt2,
    tau,
)


def rand_element(rng, size=9):
    coords = [Fraction(rng.randint(-size, size), rng.randint(1, size)) for _ in range(16)]
    return FieldElement.from_coords(coords)


def test_defining_relations():
    assert I * I == -ONE
    assert R2 * R2 == FieldElement(2)
    assert R3 * R3 == FieldElement(3)
    assert R5 * R5 == FieldElement(5)


def test_golden_ratio_relations():
    t = tau()
    assert t * t == t + 1
    assert t * t - t - 1 == ZERO
    assert t.inv() == t - 1


def test_i_sqrt2_square():
    assert (I * R2) * (I * R2) == FieldElement(-2)


def test_plane_constants_sum_and_product():
    a = (ONE + I * R3) * HALF
    b = (ONE - I * R3) * HALF
    assert a + b == ONE
    assert a * b == ONE
    assert a.conj() == b


def test_conjugation_examples():
    assert tau().conj() == tau()
    c = I * R2
    assert c.conj() == -c


def test_inverse_examples():
    assert (ONE + I).inv() == (ONE - I) * HALF
    assert R2.inv() == R2 * HALF
    assert tau().inv() == tau() - 1
    with pytest.raises(ZeroDivisionError):
        ZERO.inv()


def test_field_axioms_random():
    rng = random.Random(12345)
    for _ in range(1000):
        e = rand_element(rng)
        f = rand_element(rng)
        g = rand_element(rng)
        assert (e * f) * g == e * (f * g)
        assert e * (f + g) == e * f + e * g
        assert (e * f).conj() == e.conj() * f.conj()
        if not e.is_zero():
            assert e * e.inv() == ONE


def test_uniqueness_of_representation():
    # zero iff all 16 coordinates vanish; basis products round-trip
    rng = random.Random(7)
    for _ in range(200):
        e = rand_element(rng)
        assert e.is_zero() == all(c == 0 for c in e.coords)
    basis = [ONE, I, R2, R3, R5]
    for x in basis:
        for y in basis:
            p = x * y
            assert FieldElement.from_coords(p.coords) == p


def test_real_detection():
    assert tau().is_real()
    assert not (I * R2).is_real()
    assert (R2 * R3 * R5).is_real()
    e = HALF + I * R3 * HALF
    assert not e.is_real()
    assert (e + e.conj()).is_real()


def test_rational_detection():
    assert rational(-13, 16).is_rational()
    assert rational(-13, 16).to_fraction() == Fraction(-13, 16)
    assert not R2.is_rational()
    with pytest.raises(ValueError):
        R2.to_fraction()


def test_render_examples():
    assert rational(-13, 16).render() == "-13/16"
    e = HALF + HALF * I * R3
    assert e.render() == "1/2 + 1/2*i*r3"
    assert ZERO.render() == "0"
    assert tau().render() == "1/2 + 1/2*r5"


def test_parse_round_trip():
    rng = random.Random(99)
    for _ in range(200):
        e = rand_element(rng, size=23)
        assert FieldElement.parse(e.render()) == e
    assert FieldElement.parse("-13/16") == rational(-13, 16)
    assert FieldElement.parse("1/2 + 1/2*i*r3") == HALF + HALF * I * R3
    assert FieldElement.parse("0") == ZERO
    assert FieldElement.parse("i") == I
    assert FieldElement.parse("-i*r2") == -(I * R2)


def test_parse_rejects_garbage():
    for bad in ("", "1 +", "2*q3", "1/2*i*i", "r2*r2*1"):
        with pytest.raises(ValueError):
            FieldElement.parse(bad)


def test_roots_of_unity():
    z8 = root_of_unity(8)
    assert z8 * z8 == I
    z12 = root_of_unity(12)
    assert z12**12 == ONE and z12**6 == -ONE and z12**4 != ONE
    z3 = root_of_unity(3)
    assert z3**3 == ONE and z3 != ONE
    with pytest.raises(ValueError):
        root_of_unity(5)
    roots = all_roots_of_unity()
    assert len(set(r.raw for r in roots)) == 24
    for r in roots:
        assert r**24 == ONE
        assert r * r.conj() == ONE


def test_galois_maps():
    e = R2 + R3 * R5 + I
    assert e.galois(2) == -R2 + R3 * R5 + I
    assert e.galois(1) == e.conj()
    assert e.galois(4).galois(4) == e


def test_fraction_coercion_arithmetic():
    assert Fraction(1, 2) * R2 == R2 * HALF
    assert R2 / 2 == R2 * HALF
    assert 1 + I - 1 == I
    assert (3 * ONE) / Fraction(3, 2) == FieldElement(2)
