"""Finite matrix groups in O(4): builtin generators, closure, Reynolds, Molien.

The builtin generator matrices are the explicit rotation pairs (q2,1),
(1,q2), (p3,1), (1,p3), (p4,1), (1,p4), (p5,1), (1,p5) together with the
reflections C = diag(1,-1,-1,-1) and C' = swap of the last two coordinates.
The reflection group of order 1152 is generated by the G6 set plus C, C';
the one of order 14400 by the G12 set plus C.

Closure enumeration is breadth-first with a fixed generator order, so the
element list (and hence every export) is deterministic.  Exact arithmetic
makes deduplication exact: the canonical key of a matrix is its rendered
entry text.
"""

from __future__ import annotations

from fractions import Fraction

from . import kernel as _k
from .mpoly import Matrix4, MPoly
from .numfield import ONE, FieldElement, rational, sqrt2, tau


class ClosureBoundError(RuntimeError):
    """Closure exceeded its bound: wrong generators or broken arithmetic."""


class UnknownGroupError(ValueError):
    pass


class SO4Element:
    """An exact orthogonal 4x4 matrix with determinant +1 or -1."""

    __slots__ = ("matrix", "det", "label")

    def __init__(self, matrix: Matrix4, label: str = "", _trusted_det=None):
        self.matrix = matrix
        self.label = label
        if _trusted_det is None:
            if not matrix.is_orthogonal():
                raise ValueError(f"matrix is not orthogonal: {label or matrix!r}")
            d = matrix.det()
            if d != ONE and d != -ONE:
                raise ValueError("orthogonal matrix with determinant not +-1")
            self.det = 1 if d == ONE else -1
        else:
            self.det = _trusted_det

    def inverse_matrix(self) -> Matrix4:
        # orthogonal, so the inverse is the transpose
        return self.matrix.transpose()

    def inverse(self) -> "SO4Element":
        return SO4Element(self.matrix.transpose(), _trusted_det=self.det)

    def __mul__(self, other):
        if isinstance(other, SO4Element):
            return SO4Element(
                self.matrix * other.matrix, _trusted_det=self.det * other.det
            )
        return NotImplemented

    def key(self) -> str:
        return self.matrix.render()

    def __eq__(self, other):
        if not isinstance(other, SO4Element):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"SO4Element({self.label or self.key()!r})"


class MatrixGroup:
    """A finite matrix group as an explicit element list with key lookup."""

    def __init__(self, elements, name=""):
        self.elements = list(elements)
        self.name = name
        self.index = {el.key(): pos for pos, el in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, el):
        key = el.key() if isinstance(el, SO4Element) else Matrix4.render(el)
        return key in self.index

    def position(self, el) -> int:
        return self.index[el.key()]

    def to_text(self) -> str:
        return "\n\n".join(el.key() for el in self.elements) + "\n"

    def to_json(self) -> str:
        import json

        return json.dumps(
            {
                "name": self.name,
                "order": self.order,
                "elements": [
                    [[c.render() for c in row] for row in el.matrix.rows]
                    for el in self.elements
                ],
            },
            indent=1,
        )

    def __repr__(self):
        return f"MatrixGroup({self.name or 'unnamed'}, order {self.order})"


def _m(rows, scale=None):
    m = Matrix4(rows)
    return m if scale is None else m.scale(scale)


def _builtin_matrices():
    h = Fraction(1, 2)
    s = sqrt2() * h  # 1/sqrt(2)
    t = tau()
    u = t - 1  # tau - 1 = 1/tau
    mats = {
        "(q2,1)": _m([[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]]),
        "(1,q2)": _m([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]]),
        "(p3,1)": _m(
            [[1, -1, 1, -1], [1, 1, -1, -1], [-1, 1, 1, -1], [1, 1, 1, 1]], h
        ),
        "(1,p3)": _m(
            [[1, 1, -1, 1], [-1, 1, -1, -1], [1, 1, 1, -1], [-1, 1, 1, 1]], h
        ),
        "(p4,1)": _m([[1, -1, 0, 0], [1, 1, 0, 0], [0, 0, 1, -1], [0, 0, 1, 1]], s),
        "(1,p4)": _m([[1, 1, 0, 0], [-1, 1, 0, 0], [0, 0, 1, -1], [0, 0, 1, 1]], s),
        "(p5,1)": _m(
            [[t, 0, -u, -1], [0, t, -1, u], [u, 1, t, 0], [1, -u, 0, t]], h
        ),
        "(1,p5)": _m(
            [[t, 0, u, 1], [0, t, -1, u], [-u, 1, t, 0], [-1, -u, 0, t]], h
        ),
        "C": _m([[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]),
        "C'": _m([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]),
    }
    return mats


_MATS = _builtin_matrices()

_GENERATOR_SETS = {
    "G6": ["(q2,1)", "(1,q2)", "(p3,1)", "(1,p3)"],
    "G8": ["(q2,1)", "(1,q2)", "(p3,1)", "(1,p3)", "(p4,1)", "(1,p4)"],
    "G12": ["(q2,1)", "(1,q2)", "(p3,1)", "(1,p3)", "(p5,1)", "(1,p5)"],
    "F4": ["(q2,1)", "(1,q2)", "(p3,1)", "(1,p3)", "C", "C'"],
    "H4": ["(q2,1)", "(1,q2)", "(p3,1)", "(1,p3)", "(p5,1)", "(1,p5)", "C"],
    "Ttilde1": ["(q2,1)", "(p3,1)"],
    "Otilde1": ["(q2,1)", "(p3,1)", "(p4,1)"],
    "Itilde1": ["(q2,1)", "(p3,1)", "(p5,1)"],
}

EXPECTED_ORDERS = {
    "G6": 288,
    "G8": 1152,
    "G12": 7200,
    "F4": 1152,
    "H4": 14400,
    "Ttilde1": 24,
    "Otilde1": 48,
    "Itilde1": 120,
}

GROUP_NAMES = tuple(sorted(_GENERATOR_SETS))


def builtin_matrix(label: str) -> Matrix4:
    return _MATS[label]


def builtin_generators(name: str):
    """The generator list of a builtin group, as printed matrices."""
    try:
        labels = _GENERATOR_SETS[name]
    except KeyError:
        raise UnknownGroupError(f"unknown group name {name!r}")
    return [SO4Element(_MATS[lbl], label=lbl) for lbl in labels]


def group_closure(gens, bound: int = 20000, name: str = "") -> MatrixGroup:
    """Breadth-first closure of a generator list.

    Deterministic: elements appear in BFS discovery order with the generator
    order fixed.  Raises ClosureBoundError beyond `bound` elements.
    """
    gens = list(gens)
    for g in gens:
        if not isinstance(g, SO4Element):
            raise TypeError("generators must be SO4Element values")
    ident = SO4Element(Matrix4.identity(), label="1", _trusted_det=1)
    elements = [ident]
    seen = {ident.matrix.flat_raw()}
    gen_flats = [(g.matrix.flat_raw(), g.det) for g in gens]
    frontier = [(ident.matrix.flat_raw(), 1)]
    while frontier:
        new = []
        for flat, det in frontier:
            for gflat, gdet in gen_flats:
                prod = _k.mat4_mul(flat, gflat)
                if prod in seen:
                    continue
                seen.add(prod)
                el = SO4Element(
                    Matrix4._raw_flat(prod), _trusted_det=det * gdet
                )
                elements.append(el)
                new.append((prod, el.det))
                if len(elements) > bound:
                    raise ClosureBoundError(
                        f"closure exceeded bound {bound}; wrong generators "
                        f"or broken arithmetic"
                    )
        frontier = new
    return MatrixGroup(elements, name=name)


_closure_cache = {}


def builtin_group(name: str, bound: int = 20000) -> MatrixGroup:
    """Closure of the builtin generator set, cached per name."""
    got = _closure_cache.get(name)
    if got is None:
        got = group_closure(builtin_generators(name), bound=bound, name=name)
        _closure_cache[name] = got
    return got


def reynolds_sum(subset, p: MPoly) -> MPoly:
    """Plain (unnormalized) sum of g.p over an element list or group.

    The average is sum / |subset|.  For a group, the result is fixed by
    every element of it.
    """
    if not p.is_homogeneous():
        raise ValueError("reynolds_sum expects a homogeneous polynomial")
    total = {}
    praw = p._praw()
    for g in subset:
        inv = g.inverse_matrix()
        imgs = []
        for i in range(4):
            img = {}
            for j in range(4):
                c = inv.entry(i, j)
                if not c.is_zero():
                    exps = [0, 0, 0, 0]
                    exps[j] = 1
                    img[tuple(exps)] = c.raw
            imgs.append(img)
        _k.praw_iadd(total, _k.praw_linear_subst(praw, imgs))
    return MPoly._raw(total, p.space)


class MolienSeries:
    """Power-series coefficients of the invariant dimension series."""

    def __init__(self, coefficients, group_name=""):
        self.coefficients = [Fraction(c) for c in coefficients]
        self.group_name = group_name

    def __getitem__(self, n):
        return self.coefficients[n]

    def __len__(self):
        return len(self.coefficients)

    def __eq__(self, other):
        if isinstance(other, MolienSeries):
            return self.coefficients == other.coefficients
        if isinstance(other, (list, tuple)):
            return self.coefficients == [Fraction(c) for c in other]
        return NotImplemented

    def as_ints(self):
        return [int(c) for c in self.coefficients]

    def to_text(self):
        return "\n".join(
            f"{n} {c}" for n, c in enumerate(self.coefficients)
        ) + "\n"

    def to_json(self):
        import json

        return json.dumps(
            {
                "group": self.group_name,
                "coefficients": [str(c) for c in self.coefficients],
            },
            indent=1,
        )

    def __repr__(self):
        return f"MolienSeries({self.group_name}, {self.as_ints()!r})"


def _char_poly_key(matrix: Matrix4):
    """Coefficients (c1, c2, c3, c4) of det(I - t M) = 1 - c1 t + c2 t^2 - ..."""
    rows = matrix.rows
    c1 = rows[0][0] + rows[1][1] + rows[2][2] + rows[3][3]
    c2 = ONE - ONE
    for i in range(4):
        for j in range(i + 1, 4):
            c2 = c2 + (rows[i][i] * rows[j][j] - rows[i][j] * rows[j][i])
    c3 = ONE - ONE
    import itertools

    for idx in itertools.combinations(range(4), 3):
        sub = [[rows[a][b] for b in idx] for a in idx]
        c3 = c3 + (
            sub[0][0] * (sub[1][1] * sub[2][2] - sub[1][2] * sub[2][1])
            - sub[0][1] * (sub[1][0] * sub[2][2] - sub[1][2] * sub[2][0])
            + sub[0][2] * (sub[1][0] * sub[2][1] - sub[1][1] * sub[2][0])
        )
    c4 = matrix.det()
    return (c1.raw, c2.raw, c3.raw, c4.raw)


def molien_series(group: MatrixGroup, max_degree: int) -> MolienSeries:
    """(1/|G|) sum over g of 1/det(I - t g), exactly, to max_degree.

    Each 1/det factor is expanded over the field by truncated power-series
    inversion of the degree-4 characteristic polynomial; elements sharing a
    characteristic polynomial share one expansion.
    """
    counts = {}
    for el in group:
        key = _char_poly_key(el.matrix)
        counts[key] = counts.get(key, 0) + 1
    total = [_k.FE_ZERO] * (max_degree + 1)
    for key, mult in counts.items():
        c1, c2, c3, c4 = key
        # p_k: coefficient of t^k in det(I - tM)
        p = (None, _k.fe_neg(c1), c2, _k.fe_neg(c3), c4)
        s = [_k.FE_ONE]
        for n in range(1, max_degree + 1):
            acc = _k.FE_ZERO
            for k in range(1, 5):
                if k > n:
                    break
                acc = _k.fe_add(acc, _k.fe_mul(p[k], s[n - k]))
            s.append(_k.fe_neg(acc))
        for n in range(max_degree + 1):
            total[n] = _k.fe_add(total[n], _k.fe_mul_q(s[n], mult, 1))
    order = group.order
    coeffs = []
    for n, v in enumerate(total):
        e = FieldElement._raw(_k.fe_mul_q(v, 1, order))
        if not e.is_rational():
            raise ArithmeticError(f"Molien coefficient {n} not rational: {e}")
        f = e.to_fraction()
        if f.denominator != 1 or f < 0:
            raise ArithmeticError(f"Molien coefficient {n} not a non-negative integer: {f}")
        coeffs.append(f)
    return MolienSeries(coeffs, group_name=group.name)


def invariant_dimension_series(degrees, max_degree: int):
    """Coefficients of prod 1/(1 - t^d) to max_degree, by partition counting.

    Independent of molien_series: plain dynamic programming over the parts.
    """
    ways = [0] * (max_degree + 1)
    ways[0] = 1
    for d in degrees:
        for n in range(d, max_degree + 1):
            ways[n] += ways[n - d]
    return ways
