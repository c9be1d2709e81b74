"""Lines on the quadric, couples, plane products, and lift constructions.

The rotation groups act through pairs of unit quaternions: x -> p x q'
(q' the conjugate).  The binary polyhedral groups are built from exact
quaternion generators matching the builtin 4x4 matrices: the left factors
of (q2,1), (p3,1), (p4,1), (p5,1) are

    q2 = j,  p3 = (1 + i - j + k)/2,  p4 = (1 + i)/sqrt2,
    p5 = (tau + (tau-1) j + k)/2.

A non-central element of a binary group fixes two points of its ruling
parameter line; a couple pairs the fixed point of (p,1) for an eigenvalue
with the fixed point of (1,p) for the same eigenvalue, and spans a plane.
Products of the plane forms over an orbit, summed over the 24-element left
tetrahedral subgroup, give the degree 6, 8, 12 invariants.

Eigenvalues of 5-fold icosahedral elements lie outside the coefficient
field, so the icosahedral construction goes through the quadric instead:
the basic binary icosahedral invariants are produced by exact averaging of
the ruling parameter action, lifted to the ambient space, and symmetrized
over the full reflection group (coset by coset; the factored sum equals
the elementwise sum exactly).
"""

from __future__ import annotations

from dataclasses import dataclass
from . import _ruled, kernel as _k, klein
from .groups import SO4Element, builtin_group, reynolds_sum
from .mpoly import Matrix4, MPoly
from .numfield import (
    FieldElement,
    HALF,
    I,
    ONE,
    ZERO,
    all_roots_of_unity,
    sqrt2,
    tau,
)


class GeometryError(ValueError):
    pass


class CentralElementError(GeometryError):
    """Every point is fixed; there are no distinguished lines."""


class EigenvalueNotInFieldError(GeometryError):
    """The element's eigenvalues lie outside Q(i, sqrt2, sqrt3, sqrt5)."""


class DegenerateCoupleError(GeometryError):
    pass


class LiftAveragedOutError(GeometryError):
    """Every retried lift averaged into a multiple of the quadric."""


# ---------------------------------------------------------------------------
# quaternions and SU(2)


def quat_mul(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def quat_conj(a):
    return (a[0], -a[1], -a[2], -a[3])


class SU2Element:
    """An exact special unitary 2x2 matrix."""

    __slots__ = ("rows",)

    def __init__(self, rows, _trusted=False):
        rows = tuple(
            tuple(c if isinstance(c, FieldElement) else FieldElement(c) for c in row)
            for row in rows
        )
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError("expected a 2x2 matrix")
        self.rows = rows
        if not _trusted:
            (a, b), (c, d) = rows
            if a * d - b * c != ONE:
                raise ValueError("determinant is not 1")
            # unitarity: conjugate transpose equals the inverse (adjugate)
            if a.conj() != d or b.conj() != -c:
                raise ValueError("matrix is not unitary")

    @classmethod
    def from_quaternion(cls, q, _trusted=False):
        w, x, y, z = (c if isinstance(c, FieldElement) else FieldElement(c) for c in q)
        return cls(
            ((w + I * x, y + I * z), (-y + I * z, w - I * x)), _trusted=_trusted
        )

    def to_quaternion(self):
        (a, b), (_, _) = self.rows
        half = HALF
        mihalf = -(I * half)
        w = (a + self.rows[1][1]) * half
        x = (a - self.rows[1][1]) * mihalf
        y = (b - self.rows[1][0]) * half
        z = (b + self.rows[1][0]) * mihalf
        return (w, x, y, z)

    def key(self):
        return tuple(c.raw for row in self.rows for c in row)

    def __mul__(self, other):
        if not isinstance(other, SU2Element):
            return NotImplemented
        (a, b), (c, d) = self.rows
        (e, f), (g, h) = other.rows
        return SU2Element(
            ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)),
            _trusted=True,
        )

    def inverse(self):
        (a, b), (c, d) = self.rows
        return SU2Element(((d, -b), (-c, a)), _trusted=True)

    def __neg__(self):
        return SU2Element(
            tuple(tuple(-c for c in row) for row in self.rows), _trusted=True
        )

    def trace(self):
        return self.rows[0][0] + self.rows[1][1]

    def is_central(self):
        return self.key() in (_SU2_ID_KEY, _SU2_NEG_ID_KEY)

    def pair_matrix(self):
        """The rows as raw fe pairs, for the ruled-coordinate actions."""
        return tuple(tuple(c.raw for c in row) for row in self.rows)

    def __eq__(self, other):
        if not isinstance(other, SU2Element):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"SU2Element({[[c.render() for c in row] for row in self.rows]})"


SU2_IDENTITY = SU2Element(((ONE, ZERO), (ZERO, ONE)), _trusted=True)
_SU2_ID_KEY = SU2_IDENTITY.key()
_SU2_NEG_ID_KEY = (-SU2_IDENTITY).key()

_INV_SQRT2 = sqrt2() * HALF

QUATERNIONS = {
    "q2": (ZERO, ZERO, ONE, ZERO),
    "p3": (HALF, HALF, -HALF, HALF),
    "p4": (_INV_SQRT2, _INV_SQRT2, ZERO, ZERO),
    "p5": (tau() * HALF, ZERO, (tau() - 1) * HALF, HALF),
}

_BINARY_GENERATORS = {
    "T": ("q2", "p3"),
    "O": ("q2", "p3", "p4"),
    "I": ("q2", "p3", "p5"),
}

BINARY_ORDERS = {"T": 24, "O": 48, "I": 120}


def su2_closure(gens, bound=300):
    elements = [SU2_IDENTITY]
    seen = {SU2_IDENTITY.key()}
    frontier = [SU2_IDENTITY]
    while frontier:
        new = []
        for m in frontier:
            for g in gens:
                prod = m * g
                k = prod.key()
                if k in seen:
                    continue
                seen.add(k)
                elements.append(prod)
                new.append(prod)
                if len(elements) > bound:
                    raise GeometryError(f"SU(2) closure exceeded bound {bound}")
        frontier = new
    return elements


_binary_cache = {}


def binary_group(name: str):
    """The binary tetrahedral/octahedral/icosahedral group, as SU(2) matrices."""
    got = _binary_cache.get(name)
    if got is None:
        try:
            labels = _BINARY_GENERATORS[name]
        except KeyError:
            raise GeometryError(f"unknown binary group {name!r}")
        gens = [SU2Element.from_quaternion(QUATERNIONS[lbl]) for lbl in labels]
        got = su2_closure(gens)
        if len(got) != BINARY_ORDERS[name]:
            raise GeometryError(
                f"binary group {name} closed with order {len(got)}, "
                f"expected {BINARY_ORDERS[name]}"
            )
        _binary_cache[name] = got
    return got


def plus_minus_classes(elements):
    """One representative per {m, -m} pair, deterministically."""
    reps = {}
    for m in elements:
        k1 = m.key()
        k2 = (-m).key()
        key = min(k1, k2)
        if key not in reps:
            reps[key] = m if k1 <= k2 else -m
    return [reps[k] for k in sorted(reps)]


def so4_image(p, q) -> SO4Element:
    """The rotation x -> p x q' as a 4x4 matrix (p, q unit quaternions)."""
    if isinstance(p, SU2Element):
        p = p.to_quaternion()
    if isinstance(q, SU2Element):
        q = q.to_quaternion()
    qc = quat_conj(q)
    cols = []
    for m in range(4):
        basis = tuple(ONE if i == m else ZERO for i in range(4))
        cols.append(quat_mul(quat_mul(p, basis), qc))
    rows = [[cols[j][i] for j in range(4)] for i in range(4)]
    return SO4Element(Matrix4(rows), _trusted_det=1)


# ---------------------------------------------------------------------------
# the quadric and its parametrization


def identify(point):
    """The 2x2 matrix of a point; its determinant is the quadric form."""
    x0, x1, x2, x3 = (
        c if isinstance(c, FieldElement) else FieldElement(c) for c in point
    )
    return (
        (x0 + I * x1, x2 + I * x3),
        (-x2 + I * x3, x0 - I * x1),
    )


def segre(z_left, z_right):
    """The quadric point with ruling parameters z_left, z_right."""
    z0, z1 = (c if isinstance(c, FieldElement) else FieldElement(c) for c in z_left)
    z2, z3 = (c if isinstance(c, FieldElement) else FieldElement(c) for c in z_right)
    if z0.is_zero() and z1.is_zero():
        raise GeometryError("left parameter pair is zero")
    if z2.is_zero() and z3.is_zero():
        raise GeometryError("right parameter pair is zero")
    mihalf = -(I * HALF)
    return (
        (z0 * z2 + z1 * z3) * HALF,
        (z0 * z2 - z1 * z3) * mihalf,
        (z0 * z3 - z1 * z2) * HALF,
        (z0 * z3 + z1 * z2) * mihalf,
    )


# ---------------------------------------------------------------------------
# fixed lines, couples, planes

_UNIT_CANDIDATES = None


def _unit_candidates():
    global _UNIT_CANDIDATES
    if _UNIT_CANDIDATES is None:
        _UNIT_CANDIDATES = all_roots_of_unity()
    return _UNIT_CANDIDATES


def _normalize_projective(v):
    v0, v1 = v
    if not v0.is_zero():
        return (ONE, v1 * v0.inv())
    if v1.is_zero():
        raise GeometryError("zero vector cannot be normalized")
    return (ZERO, ONE)


def _column_eigenvector(m: SU2Element, lam: FieldElement):
    (a, b), (c, d) = m.rows
    if not b.is_zero():
        v = (b, lam - a)
    elif not c.is_zero():
        v = (lam - d, c)
    else:
        v = (ONE, ZERO) if lam == a else (ZERO, ONE)
    v = _normalize_projective(v)
    if (a * v[0] + b * v[1], c * v[0] + d * v[1]) != (lam * v[0], lam * v[1]):
        raise GeometryError("eigenvector verification failed")
    return v


@dataclass(frozen=True)
class EigenLine:
    """A fixed line of one ruling: an exact projective eigenvector.

    First ruling: source * v = eigenvalue * v (column action).
    Second ruling: v * source^-1 = eigenvalue * v (row action).
    """

    source: SU2Element
    eigenvalue: FieldElement
    vector: tuple
    ruling: str

    def __post_init__(self):
        (a, b), (c, d) = self.source.rows
        v0, v1 = self.vector
        lam = self.eigenvalue
        if self.ruling == "first":
            ok = (a * v0 + b * v1 == lam * v0) and (c * v0 + d * v1 == lam * v1)
        elif self.ruling == "second":
            ia, ib, ic, id_ = d, -b, -c, a  # inverse of a det-1 matrix
            ok = (v0 * ia + v1 * ic == lam * v0) and (v0 * ib + v1 * id_ == lam * v1)
        else:
            raise ValueError(f"bad ruling {self.ruling!r}")
        if not ok:
            raise GeometryError("eigenline does not satisfy its eigen equation")
        if lam * lam.conj() != ONE:
            raise GeometryError("eigenvalue is not on the unit circle")


@dataclass(frozen=True)
class Couple:
    """A pair of fixed lines, one per ruling, with equal eigenvalue."""

    left: EigenLine
    right: EigenLine

    def __post_init__(self):
        if self.left.ruling != "first" or self.right.ruling != "second":
            raise GeometryError("couple rulings must be (first, second)")
        if self.left.eigenvalue != self.right.eigenvalue:
            raise GeometryError("couple eigenvalues differ")


@dataclass(frozen=True)
class PlaneForm:
    """The linear form of the plane spanned by a couple of lines."""

    form: MPoly
    couple: Couple


def fixed_points(m: SU2Element):
    """Both exact eigenpairs of a non-central element, as first-ruling seeds.

    Eigenvalues are located among the roots of unity of the field; 5-fold
    icosahedral elements have eigenvalues outside it and raise.
    """
    if m.is_central():
        raise CentralElementError("central element fixes every point")
    tr = m.trace()
    pairs = []
    seen = set()
    for lam in _unit_candidates():
        if lam.raw in seen:
            continue
        if lam * lam - tr * lam + ONE == ZERO:
            seen.add(lam.raw)
            pairs.append((lam, _column_eigenvector(m, lam)))
    if not pairs:
        raise EigenvalueNotInFieldError(
            "eigenvalues outside the field (5-fold icosahedral element)"
        )
    if len(pairs) != 2:
        raise GeometryError("expected two distinct eigenvalues")
    pairs.sort(key=lambda it: it[0].render())
    return [
        EigenLine(source=m, eigenvalue=lam, vector=v, ruling="first")
        for lam, v in pairs
    ]


def second_line(m: SU2Element, lam: FieldElement) -> EigenLine:
    """The second-ruling fixed line of (1, m) with row eigenvalue lam."""
    mt = SU2Element(tuple(zip(*m.rows)), _trusted=True)
    v = _column_eigenvector(mt, lam.conj())
    return EigenLine(source=m, eigenvalue=lam, vector=v, ruling="second")


def couple_for(m: SU2Element, lam: FieldElement) -> Couple:
    left = EigenLine(
        source=m, eigenvalue=lam, vector=_column_eigenvector(m, lam), ruling="first"
    )
    return Couple(left=left, right=second_line(m, lam))


def _nullspace_vector(rows):
    """A basis vector of the nullspace of an m x 4 exact system (dim must be 1)."""
    work = [list(row) for row in rows]
    ncols = 4
    pivots = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(work)):
            if not work[i][col].is_zero():
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = work[r][col].inv()
        work[r] = [c * inv for c in work[r]]
        for i in range(len(work)):
            if i != r and not work[i][col].is_zero():
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    if len(free) != 1:
        raise DegenerateCoupleError(
            f"plane system has nullity {len(free)}, expected 1"
        )
    fc = free[0]
    vec = [ZERO] * ncols
    vec[fc] = ONE
    for i, col in enumerate(pivots):
        vec[col] = -work[i][fc]
    return vec


_SAMPLE_PARAMS = ((ONE, ZERO), (ZERO, ONE), (ONE, ONE))


def couple_plane(c: Couple) -> PlaneForm:
    """The unique plane through both lines, via the sampled nullspace."""
    rows = []
    for w in _SAMPLE_PARAMS:
        rows.append(segre(c.left.vector, w))
    for u in _SAMPLE_PARAMS:
        rows.append(segre(u, c.right.vector))
    coeffs = _nullspace_vector(rows)
    form = MPoly.linear_form(coeffs).monic()
    for pt in rows:
        if not form.eval(pt).is_zero():
            raise DegenerateCoupleError("plane form does not vanish on its lines")
    return PlaneForm(form=form, couple=c)


# ---------------------------------------------------------------------------
# orbits of fixed points


@dataclass(frozen=True)
class LineOrbit:
    group: str
    length: int
    points: tuple          # canonical projective parameters, or () for bookkeeping
    stabilizer_order: int  # rotation stabilizer order of a point
    eigenvalue: FieldElement | None  # representative eigenvalue, if available


def _quat_axis_key(m: SU2Element):
    w, x, y, z = m.to_quaternion()
    for lead in (x, y, z):
        if not lead.is_zero():
            inv = lead.inv()
            return tuple((c * inv).raw for c in (x, y, z))
    raise CentralElementError("central element has no axis")


def line_orbits(name: str):
    """Fixed-point orbits of one ruling under a binary polyhedral group.

    For T and O the orbits carry exact points and eigenvalue tags.  For I
    only the bookkeeping via axes and stabilizer orders is available (the
    5-fold eigenvectors live outside the field) and points are empty.
    """
    group = binary_group(name)
    if name == "I":
        axes = {}
        for m in group:
            if m.is_central():
                continue
            axes.setdefault(_quat_axis_key(m), []).append(m)
        by_stab = {}
        for _, members in axes.items():
            # rotation stabilizer: identity plus the +-classes of its members
            stab = 1 + len({min(mm.key(), (-mm).key()) for mm in members})
            by_stab[stab] = by_stab.get(stab, 0) + 1
        orbits = []
        half_order = len(group) // 2
        for stab, n_axes in sorted(by_stab.items()):
            length = half_order // stab
            if length != 2 * n_axes:
                raise GeometryError(
                    f"axis count {n_axes} inconsistent with stabilizer {stab}"
                )
            orbits.append(
                LineOrbit(
                    group=name,
                    length=length,
                    points=(),
                    stabilizer_order=stab,
                    eigenvalue=None,
                )
            )
        return sorted(orbits, key=lambda o: o.length)

    points = {}
    for m in group:
        if m.is_central():
            continue
        for line in fixed_points(m):
            key = tuple(c.raw for c in line.vector)
            if key not in points:
                points[key] = line.vector
    # partition under the column action
    unassigned = dict(points)
    orbits = []
    while unassigned:
        start_key = min(unassigned)
        frontier = [unassigned.pop(start_key)]
        orbit = {start_key: frontier[0]}
        while frontier:
            v = frontier.pop()
            for m in group:
                (a, b), (c, d) = m.rows
                img = _normalize_projective((a * v[0] + b * v[1], c * v[0] + d * v[1]))
                k = tuple(x.raw for x in img)
                if k not in orbit:
                    orbit[k] = img
                    unassigned.pop(k, None)
                    frontier.append(img)
        rep_key = min(orbit)
        rep_source, rep_lam = _point_source(group, orbit[rep_key])
        orbits.append(
            LineOrbit(
                group=name,
                length=len(orbit),
                points=tuple(orbit[k] for k in sorted(orbit)),
                stabilizer_order=(len(group) // 2) // len(orbit),
                eigenvalue=rep_lam,
            )
        )
    return sorted(
        orbits,
        key=lambda o: (o.length, tuple(tuple(c.raw for c in p) for p in o.points)),
    )


def _point_source(group, v):
    """The canonical stabilizing element of a point and its eigenvalue there.

    One generator per cyclic stabilizer: the minimal-key non-central element
    fixing the point.
    """
    best = None
    for m in group:
        if m.is_central():
            continue
        (a, b), (c, d) = m.rows
        img = (a * v[0] + b * v[1], c * v[0] + d * v[1])
        # img proportional to v?
        if img[0] * v[1] != img[1] * v[0]:
            continue
        key = m.key()
        if best is None or key < best[0]:
            lam = img[0] * v[0].inv() if not v[0].is_zero() else img[1] * v[1].inv()
            best = (key, m, lam)
    if best is None:
        raise GeometryError("point has no stabilizer in the group")
    return best[1], best[2]


_ORBIT_PRODUCTS = {
    "T6": ("T", 6),
    "O8": ("O", 8),
    "O12": ("O", 12),
}


def orbit_couples(name: str):
    """The couples attached to a named fixed-point orbit, in canonical order."""
    try:
        gname, length = _ORBIT_PRODUCTS[name]
    except KeyError:
        raise GeometryError(f"unknown orbit name {name!r}")
    group = binary_group(gname)
    orbit = next(o for o in line_orbits(gname) if o.length == length)
    couples = []
    for v in orbit.points:
        source, lam = _point_source(group, v)
        left = EigenLine(source=source, eigenvalue=lam, vector=v, ruling="first")
        couples.append(Couple(left=left, right=second_line(source, lam)))
    return couples


def orbit_plane_product(name: str) -> MPoly:
    """Product of the couple plane forms over a named orbit."""
    out = MPoly.constant(1)
    for c in orbit_couples(name):
        out = out * couple_plane(c).form
    return out


_FROM_ORBIT = {"F6": "T6", "F8": "O8", "F12": "O12"}

_orbit_invariant_cache = {}


def invariant_from_orbit(name: str) -> MPoly:
    """Sum of the orbit plane product over the 24 left tetrahedral rotations,
    normalized to leading coefficient 1."""
    got = _orbit_invariant_cache.get(name)
    if got is not None:
        return got
    try:
        orbit_name = _FROM_ORBIT[name]
    except KeyError:
        raise GeometryError(f"unknown invariant name {name!r}")
    product = orbit_plane_product(orbit_name)
    total = reynolds_sum(builtin_group("Ttilde1"), product)
    if total.is_zero():
        raise GeometryError(f"orbit sum for {name} vanished (convention bug)")
    got = total.monic()
    _orbit_invariant_cache[name] = got
    return got


# ---------------------------------------------------------------------------
# the lift route


def lift(p: MPoly, shift: int = 0) -> MPoly:
    """A right inverse of the quadric projection on balanced bidegrees.

    Greedy monomial pairing (see _ruled.lift_exponents); phi(lift(p)) == p
    exactly.  Raises on unbalanced bidegree input.
    """
    if p.space != "z":
        raise ValueError("lift expects a z-space polynomial")
    for (e0, e1, e2, e3) in p.terms:
        if e0 + e1 != e2 + e3:
            raise GeometryError(
                f"unbalanced bidegree: monomial {(e0, e1, e2, e3)}"
            )
    praw = _ruled.lift_praw(p._praw(), shift)
    return _ruled.mpoly_from_uvwy(praw)


_icosa_cache = {}


def icosahedral_invariant(degree: int, slot: int = 1) -> MPoly:
    """The basic binary icosahedral invariant of the ruling action.

    Exact average over the 120-element group built from the builtin
    quaternion generators, acting on one ruling parameter; normalized to
    leading coefficient 1.  Degrees 12, 20, 30 carry one invariant each.
    """
    if degree not in (12, 20, 30):
        raise GeometryError(f"no basic icosahedral invariant of degree {degree}")
    if slot not in (1, 2):
        raise ValueError("slot must be 1 or 2")
    got = _icosa_cache.get(degree)
    if got is None:
        reps = plus_minus_classes(binary_group("I"))
        inv_mats = []
        for m in reps:
            (a, b), (c, d) = m.rows
            inv_mats.append((d.raw, (-b).raw, (-c).raw, a.raw))
        result = None
        for k in range(degree + 1):
            seed = {(degree - k, k, 0, 0): _k.FE_ONE}
            total = {}
            for mat in inv_mats:
                _k.praw_iadd(total, _k.praw_pair_subst(seed, (0, 1), mat, (2, 3), _ID2))
            if total:
                result = MPoly._raw(total, "z").monic()
                break
        if result is None:
            raise GeometryError("icosahedral average vanished for every seed")
        _icosa_cache[degree] = got = result
    if slot == 1:
        return got
    return MPoly(
        {(0, 0, e0, e1): c for (e0, e1, _, _), c in got.terms.items()}, space="z"
    )


_ID2 = (_k.FE_ONE, _k.FE_ZERO, _k.FE_ZERO, _k.FE_ONE)


def icosahedral_pair(degree: int) -> MPoly:
    return icosahedral_invariant(degree, 1) * icosahedral_invariant(degree, 2)


_LIFT_TARGETS = {
    "F6": ("F4", lambda: klein.klein_pair("t")),
    "F8": ("F4", lambda: klein.klein_pair("W")),
    "F12": ("F4", lambda: klein.klein_pair("chi")),
    "Gamma12": ("H4", lambda: icosahedral_pair(12)),
    "Gamma20": ("H4", lambda: icosahedral_pair(20)),
    "Gamma30": ("H4", lambda: icosahedral_pair(30)),
}

LIFT_INVARIANT_NAMES = tuple(sorted(_LIFT_TARGETS))


def _reflection_reynolds_uvwy(praw, group_name: str):
    """Sum of the substitution action over the full reflection group, computed
    coset by coset in ruled coordinates.  Exactly equals the elementwise sum
    for homogeneous even degree (verified by the factorization smoke test)."""
    binary_name = "T" if group_name == "F4" else "I"
    reps = plus_minus_classes(binary_group(binary_name))
    s1 = {}
    for m in reps:
        _k.praw_iadd(s1, _ruled.right_action(praw, m.pair_matrix()))
    s2 = {}
    for m in reps:
        inv = m.inverse()
        _k.praw_iadd(s2, _ruled.left_action(s1, inv.pair_matrix()))
    s2 = _k.praw_scale(s2, _k.fe_from_int(2))
    out = dict(s2)
    _k.praw_iadd(out, _ruled.ruling_swap_action(s2))
    if group_name == "F4":
        swapped = _ruled.coord_swap_action(s2)
        _k.praw_iadd(out, swapped)
        _k.praw_iadd(out, _ruled.ruling_swap_action(swapped))
    return out


_lift_invariant_cache = {}


def invariant_by_lift(name: str) -> MPoly:
    """Reflection-group average of a lifted ruling invariant, normalized.

    Lifts the matching product of ruling invariants, sums the substitution
    action over the full reflection group, and retries alternative lift
    pairings if the average lands in the multiples of the quadric.
    """
    got = _lift_invariant_cache.get(name)
    if got is not None:
        return got
    try:
        group_name, target_fn = _LIFT_TARGETS[name]
    except KeyError:
        raise GeometryError(f"unknown lift invariant {name!r}")
    target = target_fn()
    zraw = target._praw()
    degree = target.degree() // 2
    if degree % 2:
        raise GeometryError("lift construction expects even degree")
    for shift in (0, 1, 2):
        praw = _ruled.lift_praw(zraw, shift)
        total = _reflection_reynolds_uvwy(praw, group_name)
        if not total:
            continue
        if _ruled.uvwy_to_z(total):
            result = _ruled.mpoly_from_uvwy(total).monic()
            _lift_invariant_cache[name] = result
            return result
    raise LiftAveragedOutError(
        f"all lift pairings for {name} averaged into multiples of the quadric"
    )
