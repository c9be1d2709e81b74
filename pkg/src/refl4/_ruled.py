"""Internal coordinates adapted to the two rulings of the quadric.

The identification of a point x with the 2x2 matrix

    Z(x) = [[x0 + i x1, x2 + i x3], [-x2 + i x3, x0 - i x1]]

suggests the complex linear coordinates

    u = x0 + i x1,  v = x0 - i x1,  w = x2 + i x3,  y = -x2 + i x3,

so that Z = [[u, w], [y, v]] and det Z = u v - w y equals the quadric form.
In these coordinates the two factors of a rotation pair act block
diagonally:

    Z -> P Z     mixes {u, y} and {w, v}  (same 2x2 matrix P on both),
    Z -> Z Q     mixes {u, w} and {y, v}  (the transpose of Q on both),

and the projection to the quadric is a monomial map:

    u -> z0 z2,  v -> z1 z3,  w -> z0 z3,  y -> z1 z2.

Everything here works on raw polynomial dicts (see kernel docs); exponent
tuples are ordered (u, v, w, y).  This module is internal: public
polynomial values are always x-space or z-space MPoly objects.
"""

from __future__ import annotations

from . import kernel as _k
from .mpoly import Matrix4, MPoly
from .numfield import HALF, I, ONE

_FE_I = I.raw
_FE_NEG_I = (-I).raw
_FE_ONE = ONE.raw
_FE_NEG_ONE = (-ONE).raw
_FE_HALF = HALF.raw
_FE_NEG_HALF = (-HALF).raw
_FE_I_HALF = (I * HALF).raw
_FE_NEG_I_HALF = (-(I * HALF)).raw

# positions in exponent tuples
U, V, W, Y = 0, 1, 2, 3

# x -> uvwy: substitute u = x0 + i x1, v = x0 - i x1, w = x2 + i x3,
# y = -x2 + i x3 into a uvwy-polynomial to get the x-polynomial back.
_UVWY_TO_X_A = ((U, V), (_FE_ONE, _FE_I, _FE_ONE, _FE_NEG_I))
_UVWY_TO_X_B = ((W, Y), (_FE_ONE, _FE_I, _FE_NEG_ONE, _FE_I))

# and the inverse substitution x0 = (u+v)/2, x1 = -i(u-v)/2,
# x2 = (w-y)/2, x3 = -i(w+y)/2 turns an x-polynomial into uvwy form.
_X_TO_UVWY_A = ((U, V), (_FE_HALF, _FE_HALF, _FE_NEG_I_HALF, _FE_I_HALF))
_X_TO_UVWY_B = ((W, Y), (_FE_HALF, _FE_NEG_HALF, _FE_NEG_I_HALF, _FE_NEG_I_HALF))


def x_to_uvwy(praw):
    return _k.praw_pair_subst(praw, *_X_TO_UVWY_A, *_X_TO_UVWY_B)


def uvwy_to_x(praw):
    return _k.praw_pair_subst(praw, *_UVWY_TO_X_A, *_UVWY_TO_X_B)


def left_action(praw, p2x2):
    """Substitution Z -> P Z for a 2x2 matrix P given as ((a,b),(c,d)) of fe."""
    (a, b), (c, d) = p2x2
    mat = (a, b, c, d)
    return _k.praw_pair_subst(praw, (U, Y), mat, (W, V), mat)


def right_action(praw, q2x2):
    """Substitution Z -> Z Q."""
    (a, b), (c, d) = q2x2
    mat = (a, c, b, d)  # transpose
    return _k.praw_pair_subst(praw, (U, W), mat, (Y, V), mat)


def ruling_swap_action(praw):
    """Substitution for the reflection diag(1,-1,-1,-1): u<->v, w->-w, y->-y."""
    out = {}
    for (eu, ev, ew, ey), c in praw.items():
        if (ew + ey) % 2:
            c = _k.fe_neg(c)
        _k.praw_acc(out, (ev, eu, ew, ey), c)
    return out


def coord_swap_action(praw):
    """Substitution for the reflection swapping x2 and x3: w -> -i y, y -> i w."""
    return _k.praw_pair_subst(
        praw,
        (U, V),
        (_FE_ONE, _k.FE_ZERO, _k.FE_ZERO, _FE_ONE),
        (W, Y),
        (_k.FE_ZERO, _FE_NEG_I, _FE_I, _k.FE_ZERO),
    )


def uvwy_to_z(praw):
    """The quadric projection as a monomial map; collisions accumulate."""
    out = {}
    for (eu, ev, ew, ey), c in praw.items():
        key = (eu + ew, ev + ey, eu + ey, ev + ew)
        _k.praw_acc(out, key, c)
    return out


def lift_exponents(zexps, shift=0):
    """Exponents (eu, ev, ew, ey) with monomial image z0^a z1^b z2^c z3^d.

    Solves eu+ew = a, ev+ey = b, eu+ey = c, ev+ew = d; requires the balanced
    bidegree a + b == c + d.  The free parameter is pinned greedily at its
    maximum minus `shift` (alternative pairings differ by multiples of the
    quadric).  Returns None if no non-negative solution exists.
    """
    a, b, c, d = zexps
    if a + b != c + d:
        raise ValueError(f"unbalanced bidegree in {zexps!r}")
    lo = max(0, c - b, a - d)
    hi = min(a, c)
    eu = hi - shift
    if eu < lo:
        return None
    return (eu, d - a + eu, a - eu, c - eu)


def lift_praw(zpraw, shift=0):
    """Monomial-wise right inverse of the projection, in uvwy coordinates."""
    out = {}
    for zexps, coeff in zpraw.items():
        exps = lift_exponents(zexps, shift)
        if exps is None:
            exps = lift_exponents(zexps, 0)
        _k.praw_acc(out, exps, coeff)
    return out


# ---------------------------------------------------------------------------
# factoring an orthogonal matrix into ruling actions

_VAR_FORMS = Matrix4(
    [
        [ONE, I, 0, 0],  # u
        [ONE, -I, 0, 0],  # v
        [0, 0, ONE, I],  # w
        [0, 0, -ONE, I],  # y
    ]
)
_VAR_FORMS_INV = _VAR_FORMS.inverse()

# uvwy position -> Z entry (row, col)
_ENTRY = {U: (0, 0), V: (1, 1), W: (0, 1), Y: (1, 0)}
_POS_OF_ENTRY = {(0, 0): U, (1, 1): V, (0, 1): W, (1, 0): Y}


class NotKroneckerError(ValueError):
    pass


def substitution_images(matrix: Matrix4) -> Matrix4:
    """Images of u, v, w, y under x -> matrix^-1 x, in the uvwy basis.

    Row s of the result gives the coefficients of the image of variable s.
    """
    comp = _VAR_FORMS * matrix.inverse() * _VAR_FORMS_INV
    return comp


def split_rotation(matrix: Matrix4):
    """Factor the substitution of a rotation as Z -> P Z Q.

    Returns (P, Q) as 2x2 tuples of fe such that applying right_action with
    Q then left_action with P equals substitution by the matrix.  Raises
    NotKroneckerError when no such factorization exists (e.g. reflections).
    """
    umat = substitution_images(matrix)

    # R[(i,k)][(j,l)] = U[pos(i,j)][pos(k,l)] should be the outer product
    # P[i][k] * Qt[j][l]
    def uval(i, j, k, l):
        return umat.entry(_POS_OF_ENTRY[(i, j)], _POS_OF_ENTRY[(k, l)])

    pivot = None
    for i in range(2):
        for k in range(2):
            for j in range(2):
                for l in range(2):
                    if not uval(i, j, k, l).is_zero():
                        pivot = (i, j, k, l)
                        break
                if pivot:
                    break
            if pivot:
                break
        if pivot:
            break
    if pivot is None:
        raise NotKroneckerError("zero substitution matrix")
    i0, j0, k0, l0 = pivot
    base = uval(i0, j0, k0, l0)
    base_inv = base.inv()
    P = [[uval(i, j0, k, l0) for k in range(2)] for i in range(2)]
    Qt = [[uval(i0, j, k0, l) * base_inv for l in range(2)] for j in range(2)]
    for i in range(2):
        for k in range(2):
            for j in range(2):
                for l in range(2):
                    if uval(i, j, k, l) != P[i][k] * Qt[j][l]:
                        raise NotKroneckerError(
                            "substitution does not factor through the rulings"
                        )
    Q = ((Qt[0][0], Qt[1][0]), (Qt[0][1], Qt[1][1]))
    return (tuple(P[0]), tuple(P[1])), Q


_C_MATRIX = Matrix4(
    [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]
)


def uvwy_action(praw, matrix: Matrix4):
    """Apply the substitution x -> matrix^-1 x to a uvwy polynomial.

    Rotations factor into a right and a left ruling action; an orientation
    reversing matrix is first composed with the standard ruling swap.
    """
    det = matrix.det()
    if det == -ONE:
        praw = ruling_swap_action(praw)
        matrix = matrix * _C_MATRIX
    P, Q = split_rotation(matrix)
    P = tuple(tuple(c.raw for c in row) for row in P)
    Q = tuple(tuple(c.raw for c in row) for row in Q)
    return left_action(right_action(praw, Q), P)


def mpoly_to_uvwy(p: MPoly):
    if p.space != "x":
        raise ValueError("expected an x-space polynomial")
    return x_to_uvwy(p._praw())


def mpoly_from_uvwy(praw) -> MPoly:
    return MPoly._raw(uvwy_to_x(praw), "x")
