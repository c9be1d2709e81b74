import random

import pytest

from refl4 import _ruled, forms, geometry as geo, klein
from refl4.groups import builtin_generators, builtin_group, builtin_matrix, reynolds_sum
from refl4.mpoly import Matrix4, MPoly
from refl4.numfield import FieldElement, HALF, I, ONE, R2, ZERO, rational, tau


ONE4 = (ONE, ZERO, ZERO, ZERO)


def test_quaternion_multiplication_table():
    e = ONE4
    i = (ZERO, ONE, ZERO, ZERO)
    j = (ZERO, ZERO, ONE, ZERO)
    k = (ZERO, ZERO, ZERO, ONE)
    assert geo.quat_mul(i, j) == k
    assert geo.quat_mul(j, k) == i
    assert geo.quat_mul(k, i) == j
    assert geo.quat_mul(i, i) == tuple(-c for c in e)
    assert geo.quat_mul(e, i) == i
    assert geo.quat_conj(geo.quat_mul(i, j)) == geo.quat_mul(
        geo.quat_conj(j), geo.quat_conj(i)
    )


def test_su2_embedding_is_multiplicative():
    rng = random.Random(1)
    group = geo.binary_group("O")
    for _ in range(50):
        a = rng.choice(group)
        b = rng.choice(group)
        assert a * b == geo.SU2Element.from_quaternion(
            geo.quat_mul(a.to_quaternion(), b.to_quaternion())
        )


def test_su2_validation():
    with pytest.raises(ValueError):
        geo.SU2Element(((ONE, ONE), (ZERO, ONE)))  # det 1 but not unitary
    with pytest.raises(ValueError):
        geo.SU2Element(((FieldElement(2), ZERO), (ZERO, HALF)))


def test_binary_group_orders():
    assert len(geo.binary_group("T")) == 24
    assert len(geo.binary_group("O")) == 48
    assert len(geo.binary_group("I")) == 120
    assert len(geo.plus_minus_classes(geo.binary_group("T"))) == 12
    assert len(geo.plus_minus_classes(geo.binary_group("I"))) == 60
    with pytest.raises(geo.GeometryError):
        geo.binary_group("X")


def test_so4_images_match_builtin_matrices():
    one = ONE4
    for lbl, (lq, rq) in {
        "(q2,1)": ("q2", None),
        "(1,q2)": (None, "q2"),
        "(p3,1)": ("p3", None),
        "(1,p3)": (None, "p3"),
        "(p4,1)": ("p4", None),
        "(1,p4)": (None, "p4"),
        "(p5,1)": ("p5", None),
        "(1,p5)": (None, "p5"),
    }.items():
        p = geo.QUATERNIONS[lq] if lq else one
        q = geo.QUATERNIONS[rq] if rq else one
        assert geo.so4_image(p, q).matrix == builtin_matrix(lbl), lbl


def test_left_factor_image_equals_closure():
    # the rotation images of (g,1) over the binary tetrahedral group equal
    # the closure of the (q2,1),(p3,1) pair, elementwise as a set
    img = {geo.so4_image(m, geo.SU2_IDENTITY).key() for m in geo.binary_group("T")}
    assert img == set(builtin_group("Ttilde1").index)
    imgO = {geo.so4_image(m, geo.SU2_IDENTITY).key() for m in geo.binary_group("O")}
    assert imgO == set(builtin_group("Otilde1").index)


def test_identify_examples():
    assert geo.identify((1, 0, 0, 0)) == ((ONE, ZERO), (ZERO, ONE))
    p2 = forms.witness_points()[1]
    assert geo.identify(p2) == ((ZERO, ZERO), (ZERO, FieldElement(2)))
    rng = random.Random(2)
    q = forms.quadric()
    for _ in range(20):
        pt = tuple(
            FieldElement(rng.randint(-3, 3)) + I * rng.randint(-3, 3)
            for _ in range(4)
        )
        (a, b), (c, d) = geo.identify(pt)
        assert a * d - b * c == q.eval(pt)


def test_segre_examples():
    assert geo.segre((1, 0), (1, 0)) == (HALF, -(I * HALF), ZERO, ZERO)
    assert geo.segre((0, 1), (1, 0)) == (ZERO, ZERO, -HALF, -(I * HALF))
    q = forms.quadric()
    rng = random.Random(3)
    for _ in range(20):
        zl = (FieldElement(rng.randint(-3, 3)) + I * rng.randint(0, 2), ONE)
        zr = (ONE, FieldElement(rng.randint(-3, 3)) - I * rng.randint(0, 2))
        assert q.eval(geo.segre(zl, zr)).is_zero()
    with pytest.raises(geo.GeometryError):
        geo.segre((0, 0), (1, 0))


def test_fixed_points_eigenvalues():
    j = geo.SU2Element.from_quaternion(geo.QUATERNIONS["q2"])
    lines = geo.fixed_points(j)
    vals = {ln.eigenvalue for ln in lines}
    assert vals == {I, -I}
    p3 = geo.SU2Element.from_quaternion(geo.QUATERNIONS["p3"])
    lines = geo.fixed_points(p3)  # order 6: primitive sixth roots
    a = (ONE + I * FieldElement.parse("r3")) * HALF
    assert {ln.eigenvalue for ln in lines} == {a, a.conj()}
    with pytest.raises(geo.CentralElementError):
        geo.fixed_points(geo.SU2_IDENTITY)
    with pytest.raises(geo.CentralElementError):
        geo.fixed_points(-geo.SU2_IDENTITY)
    p5 = geo.SU2Element.from_quaternion(geo.QUATERNIONS["p5"])
    with pytest.raises(geo.EigenvalueNotInFieldError):
        geo.fixed_points(p5)


def test_line_orbit_lengths():
    assert [o.length for o in geo.line_orbits("T")] == [4, 4, 6]
    assert [o.length for o in geo.line_orbits("O")] == [6, 8, 12]
    orbits_i = geo.line_orbits("I")
    assert [o.length for o in orbits_i] == [12, 20, 30]
    assert [o.stabilizer_order for o in orbits_i] == [5, 3, 2]
    assert all(o.points == () for o in orbits_i)
    # T and O orbit points are genuine eigenvectors with eigenvalue tags
    for o in geo.line_orbits("O"):
        assert o.points
        assert o.eigenvalue is not None
        assert len(o.points) == o.length


def test_couples_and_planes():
    # the order-4 rotation pair with eigenvalue i spans the plane x2 - i x3
    iq = geo.SU2Element.from_quaternion((ZERO, ONE, ZERO, ZERO))
    c = geo.couple_for(iq, I)
    assert c.left.eigenvalue == c.right.eigenvalue == I
    plane = geo.couple_plane(c)
    x2 = MPoly.variable(2)
    x3 = MPoly.variable(3)
    assert plane.form == (x2 - I * x3).monic()
    cbar = geo.couple_for(iq, -I)
    assert geo.couple_plane(cbar).form == (x2 + I * x3).monic()


def test_plane_vanishes_on_sampled_line_points():
    for name in ("T6", "O8", "O12"):
        for c in geo.orbit_couples(name):
            plane = geo.couple_plane(c)
            for w in ((ONE, ZERO), (ZERO, ONE), (ONE, ONE), (ONE, -ONE)):
                assert plane.form.eval(geo.segre(c.left.vector, w)).is_zero()
                assert plane.form.eval(geo.segre(w, c.right.vector)).is_zero()


def test_plane_bilinear_formula_oracle():
    # independent derivation: the plane form is zeta^perp . Z(x) . eta^perp
    for name in ("T6", "O8", "O12"):
        for c in geo.orbit_couples(name):
            z0, z1 = c.left.vector
            e0, e1 = c.right.vector
            x = [MPoly.variable(i) for i in range(4)]
            zmat = (
                (x[0] + I * x[1], x[2] + I * x[3]),
                (-x[2] + I * x[3], x[0] - I * x[1]),
            )
            # row (-z1, z0) times Z times column (-e1, e0)
            row = (-z1 * zmat[0][0] + z0 * zmat[1][0],
                   -z1 * zmat[0][1] + z0 * zmat[1][1])
            form = row[0] * (-e1) + row[1] * e0
            assert form.monic() == geo.couple_plane(c).form


def test_orbit_products_match_published_lists():
    for name, deg in (("T6", 6), ("O8", 8), ("O12", 12)):
        mine = geo.orbit_plane_product(name).monic()
        assert mine == forms.plane_product(deg).monic()


def test_invariants_from_orbits():
    f6 = geo.invariant_from_orbit("F6")
    f8 = geo.invariant_from_orbit("F8")
    f12 = geo.invariant_from_orbit("F12")
    gens = builtin_generators("F4")
    for p in (f6, f8, f12):
        assert p.has_real_coeffs()
        assert p.has_rational_coeffs()
        for g in gens:
            assert p.act(g) == p
    assert f8 == forms.f8_explicit().monic()
    assert f6 == forms.f6_corrected().monic()
    assert f12 == forms.f12_corrected().monic()
    # also invariant under the right-factor subgroup: nothing new from 1 x T
    one = geo.SU2_IDENTITY
    for m in geo.binary_group("T"):
        g = geo.so4_image(one, m)
        assert f6.act(g) == f6


def test_octahedral_symmetrization_differs():
    # The tetrahedral-subgroup sum of the octahedral orbit products is the
    # published invariant; symmetrizing over the full octahedral left factor
    # gives a genuinely different polynomial (not even proportional), and
    # the degree 8/12 invariants are not fixed by the octahedral pair group.
    prod8 = geo.orbit_plane_product("O8")
    t_sum = reynolds_sum(builtin_group("Ttilde1"), prod8)
    o_sum = reynolds_sum(builtin_group("Otilde1"), prod8)
    assert t_sum.monic() != o_sum.monic()
    f8 = geo.invariant_from_orbit("F8")
    g8_gens = builtin_generators("G8")
    assert not all(f8.act(g) == f8 for g in g8_gens)


def test_lift_examples():
    z0z2 = MPoly.monomial((1, 0, 1, 0), 1, "z")
    x0 = MPoly.variable(0)
    x1 = MPoly.variable(1)
    assert geo.lift(z0z2) == x0 + I * x1
    assert geo.lift(MPoly.zero("z")).is_zero()
    with pytest.raises(geo.GeometryError):
        geo.lift(MPoly.monomial((2, 0, 1, 0), 1, "z"))


def test_lift_roundtrip_bidegree22_exhaustive():
    for e0 in range(3):
        for e2 in range(3):
            zmon = MPoly.monomial((e0, 2 - e0, e2, 2 - e2), 1, "z")
            assert klein.phi(geo.lift(zmon)) == zmon


def test_lift_roundtrip_sampled():
    rng = random.Random(2024)
    for degree in (6, 8, 12):
        for _ in range(20):
            a = rng.randint(0, degree)
            c = rng.randint(0, degree)
            zmon = MPoly.monomial((a, degree - a, c, degree - c), 1, "z")
            assert klein.phi(geo.lift(zmon)) == zmon
    # alternative pairings stay right inverses where defined
    zmon = MPoly.monomial((3, 3, 3, 3), 1, "z")
    for shift in (0, 1, 2):
        assert klein.phi(geo.lift(zmon, shift)) == zmon


def test_icosahedral_invariants():
    f12 = geo.icosahedral_invariant(12)
    assert f12.degree() == 12
    assert f12.has_real_coeffs()
    assert f12.leading_coeff() == ONE
    f20 = geo.icosahedral_invariant(20)
    f30 = geo.icosahedral_invariant(30)
    assert f20.degree() == 20 and f30.degree() == 30
    # slot 2 is the variable swap
    f12b = geo.icosahedral_invariant(12, 2)
    assert f12b.terms == {
        (0, 0, e0, e1): c for (e0, e1, _, _), c in f12.terms.items()
    }
    with pytest.raises(geo.GeometryError):
        geo.icosahedral_invariant(14)


def test_factored_reynolds_equals_direct_f4_degree6():
    target = klein.klein_pair("t")
    praw = _ruled.lift_praw(target._praw(), 0)
    fast = _ruled.mpoly_from_uvwy(geo._reflection_reynolds_uvwy(praw, "F4"))
    direct = reynolds_sum(builtin_group("F4"), geo.lift(target))
    assert fast == direct


def test_invariant_by_lift_f6_decomposition():
    f6l = geo.invariant_by_lift("F6")
    f6g = geo.invariant_from_orbit("F6")
    lam_l = klein.phi_factor(f6l, klein.klein_pair("t"))
    lam_g = klein.phi_factor(f6g, klein.klein_pair("t"))
    lam = lam_l * lam_g.inv()
    diff = f6l - f6g * lam
    quo, rem = diff.divrem(forms.quadric())
    assert rem.is_zero()
    # h = diff / q is itself an invariant
    if not quo.is_zero():
        for g in builtin_generators("F4"):
            assert quo.act(g) == quo


def test_gamma12_construction():
    g12 = geo.invariant_by_lift("Gamma12")
    assert g12.degree() == 12
    assert g12.has_real_coeffs()
    gens = builtin_generators("H4")
    for g in gens:
        assert g12.act(g) == g12
    _, rem = g12.divrem(forms.quadric())
    assert not rem.is_zero()
    lam = klein.phi_factor(g12, geo.icosahedral_pair(12))
    assert lam.is_rational() and not lam.is_zero()
    with pytest.raises(klein.PhiFactorError):
        klein.phi_factor(g12, klein.klein_pair("f"))


@pytest.mark.slow
def test_gamma20_gamma30_construction():
    praws = {}
    for name, degree in (("Gamma20", 20), ("Gamma30", 30)):
        g = geo.invariant_by_lift(name)
        assert g.degree() == degree
        assert g.has_real_coeffs()
        lam = klein.phi_factor(g, geo.icosahedral_pair(degree))
        assert lam.is_rational() and not lam.is_zero()
        _, rem = g.divrem(forms.quadric())
        assert not rem.is_zero()
        praws[name] = _ruled.mpoly_to_uvwy(g)
    for name, praw in praws.items():
        for g in builtin_generators("H4"):
            assert _ruled.uvwy_action(praw, g.matrix) == praw, (name, g.label)


def test_uvwy_action_equals_direct_action():
    rng = random.Random(4)
    f6 = geo.invariant_from_orbit("F6")
    p = f6 * f6.coeff((0, 2, 2, 2)) + forms.quadric() ** 3  # just some poly
    praw = _ruled.mpoly_to_uvwy(p)
    for g in builtin_generators("F4") + builtin_generators("G12"):
        fast = _ruled.mpoly_from_uvwy(_ruled.uvwy_action(praw, g.matrix))
        assert fast == p.act(g), g.label


def test_unknown_names_raise():
    with pytest.raises(geo.GeometryError):
        geo.orbit_plane_product("T4")
    with pytest.raises(geo.GeometryError):
        geo.invariant_from_orbit("F10")
    with pytest.raises(geo.GeometryError):
        geo.invariant_by_lift("Gamma42")
