import random
from fractions import Fraction

import pytest

from refl4 import forms, geometry, klein
from refl4.groups import builtin_generators
from refl4.kernel import praw_linear_subst
from refl4.mpoly import MPoly
from refl4.numfield import FieldElement, ONE, ZERO, rational


def z_slot1_action(p, m):
    """(m . p) for a 2x2 unitary acting on the first parameter pair of a
    z-space polynomial: substitute (z0, z1) <- m^-1 (z0, z1)^T."""
    (a, b), (c, d) = m.inverse().rows
    imgs = [
        {
            k: v.raw
            for k, v in ((( 1, 0, 0, 0), a), ((0, 1, 0, 0), b))
            if not v.is_zero()
        },
        {
            k: v.raw
            for k, v in (((1, 0, 0, 0), c), ((0, 1, 0, 0), d))
            if not v.is_zero()
        },
        {(0, 0, 1, 0): ONE.raw},
        {(0, 0, 0, 1): ONE.raw},
    ]
    return MPoly._raw(praw_linear_subst(p._praw(), imgs), "z")


def test_form_data_exact():
    t = klein.klein_form("t", 1)
    assert t.poly == MPoly({(5, 1, 0, 0): 1, (1, 5, 0, 0): -1}, "z")
    assert t.degree == 6
    w = klein.klein_form("W", 1).poly
    assert w == MPoly({(8, 0, 0, 0): 1, (4, 4, 0, 0): 14, (0, 8, 0, 0): 1}, "z")
    chi = klein.klein_form("chi", 1).poly
    # the displayed last term is corrected to the homogeneous z1^12
    assert chi.coeff((0, 12, 0, 0)) == ONE
    assert chi.coeff((0, 8, 0, 0)).is_zero()
    f2 = klein.klein_form("f", 2).poly
    assert f2 == MPoly(
        {(0, 0, 11, 1): 1, (0, 0, 6, 6): 11, (0, 0, 1, 11): -1}, "z"
    )
    for name, deg in klein.KLEIN_DEGREES.items():
        for slot in (1, 2):
            form = klein.klein_form(name, slot)
            assert form.poly.degree() == deg
            assert form.poly.is_homogeneous()
            assert form.poly.has_rational_coeffs()


def test_form_errors():
    with pytest.raises(ValueError):
        klein.klein_form("nope", 1)
    with pytest.raises(ValueError):
        klein.klein_form("t", 3)


def test_syzygies_vanish():
    for which in ("tetrahedral", "icosahedral"):
        for slot in (1, 2):
            assert klein.verify_syzygy(which, slot).is_zero()
    with pytest.raises(ValueError):
        klein.verify_syzygy("octahedral", 1)


def test_phi_kills_quadric():
    assert klein.phi(forms.quadric()).is_zero()
    assert klein.phi_direct(forms.quadric()).is_zero()


def test_phi_equals_direct_substitution():
    rng = random.Random(555)
    for _ in range(30):
        terms = {}
        deg = rng.randint(1, 5)
        for _ in range(4):
            e = [0, 0, 0, 0]
            left = deg
            for v in range(3):
                e[v] = rng.randint(0, left)
                left -= e[v]
            e[3] = left
            terms[tuple(e)] = rng.randint(-5, 5)
        p = MPoly(terms)
        assert klein.phi(p) == klein.phi_direct(p)
    assert klein.phi(forms.f6_explicit()) == klein.phi_direct(forms.f6_explicit())


def test_phi_is_ring_map():
    rng = random.Random(556)
    for _ in range(100):
        def hom(deg):
            terms = {}
            for _ in range(3):
                e = [0, 0, 0, 0]
                left = deg
                for v in range(3):
                    e[v] = rng.randint(0, left)
                    left -= e[v]
                e[3] = left
                terms[tuple(e)] = rng.randint(-4, 4)
            return MPoly(terms)

        p = hom(rng.randint(1, 3))
        r = hom(rng.randint(1, 3))
        assert klein.phi(p * r) == klein.phi(p) * klein.phi(r)


def test_phi_bidegree():
    p = forms.f8_explicit()
    image = klein.phi(p)
    for (e0, e1, e2, e3) in image.terms:
        assert e0 + e1 == 8 and e2 + e3 == 8


def test_phi_equivariance_on_generators():
    # phi(g.p) equals phi(p) transformed by the induced parameter action:
    # slot 1 by the inverse left factor, slot 2 by the right factor.
    rng = random.Random(557)
    pairs = [("q2", None), (None, "q2"), ("p3", None), (None, "p3")]
    one = (ONE, ZERO, ZERO, ZERO)
    for lbl_l, lbl_r in pairs:
        pq = geometry.QUATERNIONS
        gl = geometry.SU2Element.from_quaternion(pq[lbl_l] if lbl_l else one)
        gr = geometry.SU2Element.from_quaternion(pq[lbl_r] if lbl_r else one)
        g = geometry.so4_image(gl, gr)
        for _ in range(5):
            terms = {}
            for _ in range(3):
                e = [0, 0, 0, 0]
                left = 3
                for v in range(3):
                    e[v] = rng.randint(0, left)
                    left -= e[v]
                e[3] = left
                terms[tuple(e)] = rng.randint(-4, 4)
            p = MPoly(terms)
            lhs = klein.phi(p.act(g))
            # z-side substitution: (z0,z1) <- A^-1 (z0,z1)^T, rows of B act on (z2,z3)
            ai = gl.inverse().rows
            b = gr.rows
            imgs = [
                {(1, 0, 0, 0): ai[0][0].raw, (0, 1, 0, 0): ai[0][1].raw},
                {(1, 0, 0, 0): ai[1][0].raw, (0, 1, 0, 0): ai[1][1].raw},
                {(0, 0, 1, 0): b[0][0].raw, (0, 0, 0, 1): b[1][0].raw},
                {(0, 0, 1, 0): b[0][1].raw, (0, 0, 0, 1): b[1][1].raw},
            ]
            zero = (1, (0,) * 16)
            imgs = [{k: v for k, v in img.items() if v != zero} for img in imgs]
            rhs = MPoly._raw(
                praw_linear_subst(klein.phi(p)._praw(), imgs), "z"
            )
            assert lhs == rhs


def test_tetrahedral_forms_invariant_under_binary_group():
    group = geometry.binary_group("T")
    for name in ("t", "W", "chi"):
        p = klein.klein_form(name, 1).poly
        for m in group:
            assert z_slot1_action(p, m) == p, (name, m)


def test_icosahedral_displayed_forms_misaligned_with_builtin_group():
    # The builtin binary icosahedral group is a different conjugate of the
    # stabilizer of the displayed forms: the element i moves f.
    f = klein.klein_form("f", 1).poly
    iq = geometry.SU2Element.from_quaternion((ZERO, ONE, ZERO, ZERO))
    assert z_slot1_action(f, iq) != f
    # while the group-aligned degree-12 invariant is fixed by all 120
    aligned = geometry.icosahedral_invariant(12, 1)
    for m in geometry.binary_group("I"):
        assert z_slot1_action(aligned, m) == aligned


def test_icosahedral_displayed_forms_are_classical():
    # Hessian-type certificates: H ~ Hessian(f), Tau ~ Jacobian(f, H); the
    # syzygy is checked elsewhere.  These pin the displayed forms exactly.
    f = klein.klein_form("f", 1).poly
    h = klein.klein_form("H", 1).poly
    tau_form = klein.klein_form("Tau", 1).poly
    f00 = f.partial(0).partial(0)
    f01 = f.partial(0).partial(1)
    f11 = f.partial(1).partial(1)
    hess = f00 * f11 - f01 * f01
    assert hess.monic() == h.monic()
    jac = f.partial(0) * h.partial(1) - f.partial(1) * h.partial(0)
    assert jac.monic() == tau_form.monic()


def _binary_products(forms_list, degrees, total):
    """All products of the given binary forms with matching total degree."""
    out = []

    def rec(idx, poly, deg):
        if deg == total:
            out.append(poly)
            return
        if idx == len(forms_list) or deg > total:
            return
        rec(idx + 1, poly, deg)
        rec(idx, poly * forms_list[idx], deg + degrees[idx])

    rec(0, MPoly.constant(1, "z"), 0)
    return out


def _rank_of_forms(polys):
    # exact Gaussian rank of the coefficient matrix
    monoms = sorted({e for p in polys for e in p.terms})
    rows = [[p.coeff(e) for e in monoms] for p in polys]
    rank = 0
    cols = len(monoms)
    r = 0
    for col in range(cols):
        piv = None
        for i in range(r, len(rows)):
            if not rows[i][col].is_zero():
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][col].inv()
        rows[r] = [c * inv for c in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][col].is_zero():
                fct = rows[i][col]
                rows[i] = [a - fct * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def test_no_tetrahedral_relations_below_24():
    t = klein.klein_form("t", 1).poly
    w = klein.klein_form("W", 1).poly
    chi = klein.klein_form("chi", 1).poly
    for total in range(1, 24):
        prods = _binary_products([t, w, chi], [6, 8, 12], total)
        if len(prods) > 1:
            assert _rank_of_forms(prods) == len(prods), f"relation at degree {total}"
    # and the syzygy does live at degree 24
    prods24 = _binary_products([t, w, chi], [6, 8, 12], 24)
    assert _rank_of_forms(prods24) == len(prods24) - 1


@pytest.mark.slow
def test_no_icosahedral_relations_below_60():
    f = klein.klein_form("f", 1).poly
    h = klein.klein_form("H", 1).poly
    tau_form = klein.klein_form("Tau", 1).poly
    for total in range(1, 60):
        prods = _binary_products([f, h, tau_form], [12, 20, 30], total)
        if len(prods) > 1:
            assert _rank_of_forms(prods) == len(prods), f"relation at degree {total}"
    prods60 = _binary_products([f, h, tau_form], [12, 20, 30], 60)
    assert _rank_of_forms(prods60) == len(prods60) - 1


def test_phi_factor_examples():
    t1t2 = klein.klein_pair("t")
    lam = klein.phi_factor(forms.f6_explicit(), t1t2)
    assert lam == FieldElement(Fraction(-13, 16))
    lam8 = klein.phi_factor(forms.f8_explicit(), klein.klein_pair("W"))
    assert lam8 == FieldElement(Fraction(3, 64))


def test_phi_factor_zero_error():
    q = forms.quadric()
    x0 = MPoly.variable(0)
    with pytest.raises(klein.PhiImageZeroError):
        klein.phi_factor(q * x0**4, klein.klein_pair("t"))


def test_phi_factor_mismatch_error():
    with pytest.raises(klein.PhiFactorMismatchError):
        klein.phi_factor(forms.f8_explicit(), klein.klein_pair("t") * MPoly.monomial((1, 1, 1, 1), 1, "z"))
    with pytest.raises(klein.PhiFactorMismatchError):
        klein.phi_factor(forms.f12_explicit(), klein.klein_pair("chi"))
