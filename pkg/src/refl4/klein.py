"""The quadric side: classical binary forms, the projection phi, syzygies.

``phi`` maps a degree-n form on the ambient space to a bidegree-(n,n) form
on the quadric by the substitution

    x0 = (z0 z2 + z1 z3)/2,   x1 = (z0 z2 - z1 z3)/(2i),
    x2 = (z0 z3 - z1 z2)/2,   x3 = (z0 z3 + z1 z2)/(2i).

It is a ring map whose kernel is generated by the quadric form q.

The classical tetrahedral forms t, W, chi (degrees 6, 8, 12) and
icosahedral forms f, H, Tau (degrees 12, 20, 30) are stored verbatim in
both variable slots; the displayed last term of chi is z1^12 (degree 12
homogeneity forces it).  The two classical relations

    108 t^4 - W^3 + chi^2 = 0   and   Tau^2 + H^3 - 1728 f^5 = 0

hold exactly and are exposed as residual computations.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _ruled, kernel as _k
from .mpoly import MPoly
from .numfield import FieldElement, HALF, I

KLEIN_DEGREES = {"t": 6, "W": 8, "chi": 12, "f": 12, "H": 20, "Tau": 30}

# coefficients on (z0 exponent, z1 exponent), slot-1 layout
_FORM_TERMS = {
    "t": {(5, 1): 1, (1, 5): -1},
    "W": {(8, 0): 1, (4, 4): 14, (0, 8): 1},
    "chi": {(12, 0): 1, (8, 4): -33, (4, 8): -33, (0, 12): 1},
    "f": {(11, 1): 1, (6, 6): 11, (1, 11): -1},
    "H": {(20, 0): -1, (15, 5): 228, (5, 15): -228, (10, 10): -494, (0, 20): -1},
    "Tau": {
        (30, 0): 1,
        (0, 30): 1,
        (25, 5): 522,
        (5, 25): -522,
        (20, 10): -10005,
        (10, 20): -10005,
    },
}


class PhiFactorError(ArithmeticError):
    pass


class PhiImageZeroError(PhiFactorError):
    """phi(p) vanished: p is a multiple of the quadric."""


class PhiFactorMismatchError(PhiFactorError):
    """phi(p) is not a scalar multiple of the requested target."""


@dataclass(frozen=True)
class KleinForm:
    name: str
    slot: int
    poly: MPoly

    @property
    def degree(self) -> int:
        return KLEIN_DEGREES[self.name]


def klein_form(name: str, slot: int = 1) -> KleinForm:
    """One of the classical binary forms, in variable slot 1 or 2."""
    try:
        base = _FORM_TERMS[name]
    except KeyError:
        raise ValueError(f"unknown form name {name!r}")
    if slot not in (1, 2):
        raise ValueError("slot must be 1 or 2")
    terms = {}
    for (e0, e1), c in base.items():
        exps = (e0, e1, 0, 0) if slot == 1 else (0, 0, e0, e1)
        terms[exps] = c
    return KleinForm(name, slot, MPoly(terms, space="z"))


def klein_pair(name: str) -> MPoly:
    """The product form(slot 1) * form(slot 2)."""
    return klein_form(name, 1).poly * klein_form(name, 2).poly


def phi(p: MPoly) -> MPoly:
    """Projection of an x-space polynomial to the quadric.

    Implemented through the ruled coordinates, where the four pairing
    products become a monomial map; the straightforward power-table
    substitution gives the same polynomial and serves as the test oracle.
    """
    if p.space != "x":
        raise ValueError("phi expects an x-space polynomial")
    praw = _ruled.uvwy_to_z(_ruled.x_to_uvwy(p._praw()))
    return MPoly._raw(praw, "z")


def phi_direct(p: MPoly) -> MPoly:
    """Reference implementation: substitute the displayed quadratic images."""
    if p.space != "x":
        raise ValueError("phi expects an x-space polynomial")
    half = HALF.raw
    mhalf_i = (-(I * HALF)).raw
    half_i = (I * HALF).raw
    imgs = [
        {(1, 0, 1, 0): half, (0, 1, 0, 1): half},          # x0
        {(1, 0, 1, 0): mhalf_i, (0, 1, 0, 1): half_i},     # x1
        {(1, 0, 0, 1): half, (0, 1, 1, 0): (-HALF).raw},   # x2
        {(1, 0, 0, 1): mhalf_i, (0, 1, 1, 0): mhalf_i},    # x3
    ]
    return MPoly._raw(_k.praw_linear_subst(p._praw(), imgs), "z")


def verify_syzygy(which: str, slot: int = 1) -> MPoly:
    """Residual of the classical relation; identically zero when it holds."""
    if which == "tetrahedral":
        t = klein_form("t", slot).poly
        w = klein_form("W", slot).poly
        chi = klein_form("chi", slot).poly
        return 108 * t**4 - w**3 + chi**2
    if which == "icosahedral":
        f = klein_form("f", slot).poly
        h = klein_form("H", slot).poly
        tau_form = klein_form("Tau", slot).poly
        return tau_form**2 + h**3 - 1728 * f**5
    raise ValueError(f"unknown syzygy {which!r}")


def phi_factor(p: MPoly, target: MPoly) -> FieldElement:
    """The scalar lam with phi(p) = lam * target, when it exists.

    Raises PhiImageZeroError when phi(p) = 0 (p is a multiple of the
    quadric) and PhiFactorMismatchError when the image is not proportional
    to the target.
    """
    image = phi(p)
    if image.is_zero():
        raise PhiImageZeroError("phi image is zero")
    if target.is_zero():
        raise ValueError("target must be nonzero")
    texps, tcoeff = target.leading_term()
    icoeff = image.coeff(texps)
    if icoeff.is_zero():
        raise PhiFactorMismatchError(
            "phi image lacks the target's leading monomial"
        )
    lam = icoeff * tcoeff.inv()
    if image != target * lam:
        raise PhiFactorMismatchError("phi image is not a multiple of the target")
    return lam
