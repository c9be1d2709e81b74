"""Acceptance gate: every stated criterion at its stated tolerance.

All arithmetic is exact, so every comparison below is exact equality
(tolerance zero); runtime bounds are asserted on the reference
configuration (compiled kernel), and skipped under REFL4_PURE.

Three printed-table deviations are documented and tested as such (the
verification suite reports each one):

* the degree-6 display is not invariant (impossible coefficients); the
  geometric reconstruction is authoritative and its corrected form passes;
* the degree-12 display has one wrong coefficient (949/2 for 1899/4) and
  its printed witness value 32 matches no consistent normalization (the
  true value is 48);
* the displayed classical icosahedral binary forms belong to a different
  conjugate of the binary icosahedral group than the builtin quaternion
  realization, so the degree 12/20/30 lifts project onto the group-aligned
  invariants instead (rational factors, recorded below).

Each of those literal readings is kept visible as a strict xfail.
"""

import time
from fractions import Fraction

import pytest

from refl4 import _ruled, forms, geometry, klein
from refl4.driver import (
    Workspace,
    check_degrees,
    check_invariance,
    check_jacobian_independence,
    check_nondivisibility,
)
from refl4.groups import (
    builtin_generators,
    builtin_group,
    group_closure,
    invariant_dimension_series,
    molien_series,
    reynolds_sum,
)
from refl4.kernel import IMPLEMENTATION
from refl4.mpoly import MPoly
from refl4.numfield import FieldElement

TIMED = IMPLEMENTATION == "compiled"


@pytest.fixture(scope="session")
def ws():
    return Workspace()


def _announce(num, name, detail=""):
    print(f"\nACCEPTANCE {num} ({name}): PASS {detail}")


def _assert_time(elapsed, bound, what):
    if TIMED:
        assert elapsed < bound, f"{what} took {elapsed:.1f}s, bound {bound}s"


def test_criterion_01_group_orders():
    want = {"G6": 288, "G8": 1152, "G12": 7200, "F4": 1152, "H4": 14400}
    for name, order in sorted(want.items()):
        t0 = time.time()
        g = group_closure(builtin_generators(name), name=name)
        elapsed = time.time() - t0
        assert g.order == order, (name, g.order)
        _assert_time(elapsed, 120, f"{name} closure")
    assert builtin_group("F4").order == 4 * builtin_group("G6").order
    assert builtin_group("H4").order == 2 * builtin_group("G12").order
    _announce(1, "group orders", str(want))


def test_criterion_02_invariance(ws):
    t0 = time.time()
    gens = builtin_generators("F4")
    rep8 = check_invariance(forms.f8_explicit(), gens)
    assert rep8.passed  # the printed degree-8 expansion is exactly invariant
    for name in ("F6", "F8", "F12"):
        rep = check_invariance(ws.geometric(name), gens)
        assert rep.passed, (name, rep.witness)
    # the corrected displays equal the reconstructions, so they pass as well
    assert check_invariance(forms.f6_corrected(), gens).passed
    assert check_invariance(forms.f12_corrected(), gens).passed
    _assert_time(time.time() - t0, 60, "invariance checks")
    _announce(2, "invariance", "F8 display + geometric F6/F8/F12 under all 6 generators")


@pytest.mark.xfail(strict=True, reason="printed degree-6 display is not invariant")
def test_criterion_02_literal_f6_display():
    gens = builtin_generators("F4")
    assert check_invariance(forms.f6_explicit(), gens).passed


@pytest.mark.xfail(strict=True, reason="printed degree-12 display is not invariant")
def test_criterion_02_literal_f12_display():
    gens = builtin_generators("F4")
    assert check_invariance(forms.f12_explicit(), gens).passed


def test_criterion_03_phi_scalars(ws):
    assert klein.phi(forms.quadric()).is_zero()
    lam6 = klein.phi_factor(forms.f6_explicit(), klein.klein_pair("t"))
    assert lam6 == FieldElement(Fraction(-13, 16))
    lam8 = klein.phi_factor(forms.f8_explicit(), klein.klein_pair("W"))
    assert lam8 == FieldElement(Fraction(3, 64))
    # the degree-12 display fails; the stated downgrade applies: the
    # geometric invariant projects to a nonzero rational multiple, and with
    # the display normalization the multiple is exactly the printed 3/256
    with pytest.raises(klein.PhiFactorError):
        klein.phi_factor(forms.f12_explicit(), klein.klein_pair("chi"))
    f12_display_scale = ws.geometric("F12") * FieldElement(Fraction(123, 8))
    lam12 = klein.phi_factor(f12_display_scale, klein.klein_pair("chi"))
    assert lam12 == FieldElement(Fraction(3, 256))
    _announce(
        3,
        "phi scalars",
        "phi(q)=0, -13/16, 3/64; degree-12 display downgraded, geometric gives 3/256",
    )


@pytest.mark.xfail(
    strict=True, reason="printed degree-12 display does not project onto chi1*chi2"
)
def test_criterion_03_literal_f12_phi():
    klein.phi_factor(forms.f12_explicit(), klein.klein_pair("chi"))


def test_criterion_04_point_witnesses(ws):
    t0 = time.time()
    q = forms.quadric()
    p1, p2 = forms.witness_points()
    assert q.eval(p1).is_zero() and q.eval(p2).is_zero()
    assert forms.f6_explicit().eval(p1) == FieldElement(26)
    assert forms.f8_explicit().eval(p2) == FieldElement(12)
    # the degree-12 witness: nonzero certifies the divisibility claim; the
    # printed number 32 is inconsistent (see the xfail below): true value 48
    v12 = forms.f12_corrected().eval(p2)
    assert v12 == FieldElement(48) and not v12.is_zero()
    for name in ("F6", "F8", "F12"):
        assert check_nondivisibility(ws.geometric(name), q).passed
    assert check_nondivisibility(ws.geometric("F12"), ws.geometric("F6")).passed
    assert ws.geometric("F6").eval(p2).is_zero()
    _assert_time(time.time() - t0, 60, "point witnesses")
    _announce(4, "point witnesses", "26, 12, 48(nonzero), remainders nonzero")


@pytest.mark.xfail(
    strict=True,
    reason="printed degree-12 point value 32 matches no consistent normalization",
)
def test_criterion_04_literal_f12_point_value():
    p2 = forms.witness_points()[1]
    assert forms.f12_explicit().eval(p2) == FieldElement(32) or forms.f12_corrected().eval(
        p2
    ) == FieldElement(32)


def test_criterion_05_klein_syzygies():
    t0 = time.time()
    for which in ("tetrahedral", "icosahedral"):
        for slot in (1, 2):
            assert klein.verify_syzygy(which, slot).is_zero(), (which, slot)
    _assert_time(time.time() - t0, 30, "syzygies")
    _announce(5, "syzygies", "both relations, both slots, exactly zero")


def test_criterion_06_geometric_reconstruction(ws):
    t0 = time.time()
    for name, deg in (("T6", 6), ("O8", 8), ("O12", 12)):
        mine = geometry.orbit_plane_product(name).monic()
        assert mine == forms.plane_product(deg).monic(), name
    assert ws.geometric("F8") == forms.f8_explicit().monic()
    # degree 6 and 12: proportional to the corrected displays; the printed
    # ones deviate (documented by the display_fidelity suite check)
    assert ws.geometric("F6") == forms.f6_corrected().monic()
    assert ws.geometric("F12") == forms.f12_corrected().monic()
    _assert_time(time.time() - t0, 120, "geometric reconstruction")
    _announce(6, "geometric reconstruction", "plane products and averages match")


@pytest.mark.xfail(
    strict=True, reason="averaged sum is not proportional to the printed degree-6 display"
)
def test_criterion_06_literal_f6_proportionality(ws):
    assert ws.geometric("F6") == forms.f6_explicit().monic()


@pytest.mark.slow
def test_criterion_07_jacobian_independence(ws):
    t0 = time.time()
    q = forms.quadric()
    rep = check_jacobian_independence(
        [q, ws.geometric("F6"), ws.geometric("F8"), ws.geometric("F12")]
    )
    assert rep.passed, rep.witness
    rep = check_jacobian_independence(
        [q, ws.lifted("Gamma12"), ws.lifted("Gamma20"), ws.lifted("Gamma30")]
    )
    assert rep.passed, rep.witness
    _assert_time(time.time() - t0, 300, "jacobian certificates")
    _announce(7, "algebraic independence", "both quadruples, Jacobian nonzero")


def test_criterion_08_molien_series():
    t0 = time.time()
    f4 = builtin_group("F4")
    mol = molien_series(f4, 32)
    assert mol.as_ints() == invariant_dimension_series([2, 6, 8, 12], 32)
    h4 = builtin_group("H4")
    mol = molien_series(h4, 30)
    assert mol.as_ints() == invariant_dimension_series([2, 12, 20, 30], 30)
    assert check_degrees(f4, [2, 6, 8, 12], max_degree=32).passed
    assert check_degrees(h4, [2, 12, 20, 30], max_degree=30).passed
    _assert_time(time.time() - t0, 600, "Molien series")
    _announce(8, "Molien series", "degrees {2,6,8,12} to 32 and {2,12,20,30} to 30")


def test_criterion_09_gamma12(ws):
    t0 = time.time()
    g12 = ws.lifted("Gamma12")
    elapsed = time.time() - t0
    gens = builtin_generators("H4")
    assert check_invariance(g12, gens).passed
    assert check_nondivisibility(g12, forms.quadric()).passed
    lam = klein.phi_factor(g12, geometry.icosahedral_pair(12))
    assert lam.is_rational() and not lam.is_zero()
    _assert_time(elapsed, 120, "degree-12 lift construction")
    _announce(9, "lift construction (degree 12)", f"phi factor {lam.render()}")


@pytest.mark.slow
def test_criterion_09_gamma20_gamma30(ws):
    t0 = time.time()
    factors = {}
    for name, degree in (("Gamma20", 20), ("Gamma30", 30)):
        g = ws.lifted(name)
        assert check_invariance(g, builtin_generators("H4")).passed, name
        assert check_nondivisibility(g, forms.quadric()).passed, name
        lam = klein.phi_factor(g, geometry.icosahedral_pair(degree))
        assert lam.is_rational() and not lam.is_zero()
        factors[name] = lam.render()
    _assert_time(time.time() - t0, 3600, "degree 20/30 lift constructions")
    _announce(9, "lift construction (degrees 20, 30)", str(factors))


@pytest.mark.xfail(
    strict=True,
    reason="the builtin binary icosahedral group is a different conjugate of the "
    "stabilizer of the displayed classical forms",
)
def test_criterion_09_literal_klein_products(ws):
    klein.phi_factor(ws.lifted("Gamma12"), klein.klein_pair("f"))


def test_criterion_10_lift_roundtrip():
    import random

    t0 = time.time()
    rng = random.Random(424242)
    count = 0
    for e0 in range(3):
        for e2 in range(3):
            zmon = MPoly.monomial((e0, 2 - e0, e2, 2 - e2), 1, "z")
            assert klein.phi(geometry.lift(zmon)) == zmon
            count += 1
    for degree in (6, 8, 12, 20, 30):
        seen = set()
        budget = min(50, (degree + 1) ** 2)
        while len(seen) < budget:
            a = rng.randint(0, degree)
            c = rng.randint(0, degree)
            key = (a, degree - a, c, degree - c)
            if key in seen:
                continue
            seen.add(key)
            zmon = MPoly.monomial(key, 1, "z")
            assert klein.phi(geometry.lift(zmon)) == zmon
            count += 1
    _assert_time(time.time() - t0, 120, "lift round trips")
    _announce(10, "phi o lift identity", f"{count} monomials")


@pytest.mark.slow
def test_factorization_smoke_degree12():
    # the coset-factored reflection sum equals the elementwise sum, bit for
    # bit, on a degree-12 input over the order-1152 group
    target = klein.klein_pair("chi")
    praw = _ruled.lift_praw(target._praw(), 0)
    fast = _ruled.mpoly_from_uvwy(geometry._reflection_reynolds_uvwy(praw, "F4"))
    direct = reynolds_sum(builtin_group("F4"), geometry.lift(target))
    assert fast == direct
    print("\nFACTORIZATION SMOKE (degree 12, order 1152): bit-exact")
