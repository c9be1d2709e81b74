"""Sparse exact multivariate polynomials in four variables over the field.

Polynomials carry a space tag, either ``'x'`` (coordinates x0..x3 of the
ambient 4-space) or ``'z'`` (the two projective parameters z0,z1 and z2,z3
of the quadric).  Mixing spaces in arithmetic is an error.

The one and only term order is graded lexicographic with
x0 > x1 > x2 > x3 (resp. z0 > ... > z3): higher total degree first, ties by
the exponent tuple.  Printing, division and normalization all use it, so
canonical outputs are bit identical across runs.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import kernel as _k
from .numfield import ZERO, ONE, FieldElement

SPACES = ("x", "z")


class SpaceMismatchError(ValueError):
    pass


class SingularMatrixError(ZeroDivisionError):
    pass


def grlex_key(exps):
    return (exps[0] + exps[1] + exps[2] + exps[3], exps)


def _coerce_fe(c):
    if isinstance(c, FieldElement):
        return c
    if isinstance(c, (int, Fraction)):
        return FieldElement(c)
    raise TypeError(f"bad coefficient {c!r}")


class MPoly:
    """Immutable-by-convention sparse polynomial over the field."""

    __slots__ = ("terms", "space")

    def __init__(self, terms=None, space="x"):
        if space not in SPACES:
            raise ValueError(f"unknown space tag {space!r}")
        clean = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != 4 or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent tuple {exps!r}")
                c = _coerce_fe(c)
                if not c.is_zero():
                    clean[exps] = c
        self.terms = clean
        self.space = space

    # -- constructors -------------------------------------------------------

    @classmethod
    def _raw(cls, praw, space):
        p = object.__new__(cls)
        p.terms = {e: FieldElement._raw(v) for e, v in praw.items()}
        p.space = space
        return p

    @classmethod
    def zero(cls, space="x"):
        return cls({}, space)

    @classmethod
    def constant(cls, c, space="x"):
        return cls({(0, 0, 0, 0): _coerce_fe(c)}, space)

    @classmethod
    def variable(cls, i, space="x"):
        exps = [0, 0, 0, 0]
        exps[i] = 1
        return cls({tuple(exps): ONE}, space)

    @classmethod
    def monomial(cls, exps, c=1, space="x"):
        return cls({tuple(exps): _coerce_fe(c)}, space)

    @classmethod
    def linear_form(cls, coeffs, space="x"):
        terms = {}
        for i, c in enumerate(coeffs):
            exps = [0, 0, 0, 0]
            exps[i] = 1
            terms[tuple(exps)] = _coerce_fe(c)
        return cls(terms, space)

    def _praw(self):
        return {e: c.raw for e, c in self.terms.items()}

    # -- structure ----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def num_terms(self):
        return len(self.terms)

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def sorted_terms(self):
        """Terms in descending graded-lex order (leading first)."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms, key=grlex_key)
        return exps, self.terms[exps]

    def leading_coeff(self):
        return self.leading_term()[1]

    def coeff(self, exps):
        return self.terms.get(tuple(exps), ZERO)

    def monic(self):
        """Divide by the graded-lex leading coefficient."""
        if not self.terms:
            return self
        return self * self.leading_coeff().inv()

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.space == other.space and self.terms == other.terms

    def __hash__(self):
        return hash((self.space, tuple(sorted((e, c.raw) for e, c in self.terms.items()))))

    # -- arithmetic ---------------------------------------------------------

    def _check_space(self, other):
        if self.space != other.space:
            raise SpaceMismatchError(
                f"space mismatch: {self.space!r} vs {other.space!r}"
            )

    def __add__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check_space(other)
        return MPoly._raw(_k.praw_add(self._praw(), other._praw()), self.space)

    def __sub__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check_space(other)
        return self + (-other)

    def __neg__(self):
        return MPoly._raw(_k.praw_neg(self._praw()), self.space)

    def __mul__(self, other):
        if isinstance(other, MPoly):
            self._check_space(other)
            return MPoly._raw(_k.praw_mul(self._praw(), other._praw()), self.space)
        if isinstance(other, (int, Fraction, FieldElement)):
            return MPoly._raw(
                _k.praw_scale(self._praw(), _coerce_fe(other).raw), self.space
            )
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = MPoly.constant(1, self.space)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- operations ---------------------------------------------------------

    def eval(self, point):
        """Exact value at a 4-tuple of field elements."""
        pt = tuple(_coerce_fe(c).raw for c in point)
        return FieldElement._raw(_k.praw_eval(self._praw(), pt))

    def partial(self, var):
        out = {}
        for exps, c in self.terms.items():
            e = exps[var]
            if not e:
                continue
            ne = list(exps)
            ne[var] = e - 1
            out[tuple(ne)] = c * e
        return MPoly(out, self.space)

    def compose_linear(self, matrix: "Matrix4") -> "MPoly":
        """p(M*x): substitute each variable by the matching row form of M."""
        imgs = []
        for i in range(4):
            img = {}
            for j in range(4):
                c = matrix.entry(i, j)
                if not c.is_zero():
                    exps = [0, 0, 0, 0]
                    exps[j] = 1
                    img[tuple(exps)] = c.raw
            imgs.append(img)
        return MPoly._raw(_k.praw_linear_subst(self._praw(), imgs), self.space)

    def act(self, g) -> "MPoly":
        """The group action (g . p)(x) = p(g^-1 x)."""
        matrix = g.matrix if hasattr(g, "matrix") else g
        return self.compose_linear(matrix.inverse())

    def divrem(self, d: "MPoly"):
        """Division with remainder by a single divisor.

        Returns (quotient, remainder) with self == quotient*d + remainder and
        no remainder term divisible by the leading monomial of d.
        """
        if not isinstance(d, MPoly):
            raise TypeError("divisor must be an MPoly")
        self._check_space(d)
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        dexps, dcoeff = d.leading_term()
        dinv = dcoeff.inv()
        draw = d._praw()
        work = self._praw()
        quo = {}
        rem = {}
        while work:
            exps = max(work, key=grlex_key)
            c = work.pop(exps)
            if all(exps[i] >= dexps[i] for i in range(4)):
                t = tuple(exps[i] - dexps[i] for i in range(4))
                qc = _k.fe_mul(c, dinv.raw)
                _k.praw_acc(quo, t, qc)
                # work -= qc * x^t * d, skipping the cancelled leading term
                for de, dc in draw.items():
                    if de == dexps:
                        continue
                    key = (t[0] + de[0], t[1] + de[1], t[2] + de[2], t[3] + de[3])
                    _k.praw_acc(work, key, _k.fe_neg(_k.fe_mul(qc, dc)))
            else:
                rem[exps] = c
        return MPoly._raw(quo, self.space), MPoly._raw(rem, self.space)

    def conj_coeffs(self) -> "MPoly":
        """Apply complex conjugation to every coefficient."""
        return MPoly._raw(
            {e: _k.fe_conj(c.raw) for e, c in self.terms.items()}, self.space
        )

    def has_real_coeffs(self) -> bool:
        return all(c.is_real() for c in self.terms.values())

    def has_rational_coeffs(self) -> bool:
        return all(c.is_rational() for c in self.terms.values())

    # -- rendering ----------------------------------------------------------

    def to_text(self) -> str:
        lines = []
        for exps, c in self.sorted_terms():
            lines.append(f"{c.render()} ; {exps[0]} {exps[1]} {exps[2]} {exps[3]}")
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def from_text(cls, text: str, space="x") -> "MPoly":
        terms = {}
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            coeff_part, sep, exps_part = line.partition(";")
            if not sep:
                raise ValueError(f"bad polynomial line {line!r}")
            exps = tuple(int(t) for t in exps_part.split())
            if len(exps) != 4:
                raise ValueError(f"bad exponents in line {line!r}")
            terms[exps] = FieldElement.parse(coeff_part)
        return cls(terms, space)

    def to_json(self) -> str:
        items = []
        for exps, c in self.sorted_terms():
            items.append(
                {
                    "exponents": list(exps),
                    "coords": [str(f) for f in c.coords],
                }
            )
        return json.dumps({"space": self.space, "terms": items}, indent=1)

    @classmethod
    def from_json(cls, text: str) -> "MPoly":
        data = json.loads(text)
        terms = {}
        for item in data["terms"]:
            exps = tuple(int(e) for e in item["exponents"])
            coords = [Fraction(s) for s in item["coords"]]
            terms[exps] = FieldElement.from_coords(coords)
        return cls(terms, data["space"])

    def __str__(self):
        if not self.terms:
            return "0"
        names = [f"{self.space}{i}" for i in range(4)]
        parts = []
        for exps, c in self.sorted_terms():
            mon = "*".join(
                f"{names[i]}^{e}" if e > 1 else names[i]
                for i, e in enumerate(exps)
                if e
            )
            cs = c.render()
            if " " in cs or "+" in cs[1:] or "-" in cs[1:]:
                cs = f"({cs})"
            parts.append(f"{cs}*{mon}" if mon else cs)
        return " + ".join(parts)

    def __repr__(self):
        return f"MPoly[{self.space}]({len(self.terms)} terms, deg {self.degree()})"


class Matrix4:
    """Exact 4x4 matrix over the field."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(_coerce_fe(c) for c in row) for row in rows)
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise ValueError("expected a 4x4 matrix")
        self.rows = rows

    @classmethod
    def _raw_flat(cls, flat):
        m = object.__new__(cls)
        m.rows = tuple(
            tuple(FieldElement._raw(flat[4 * i + j]) for j in range(4))
            for i in range(4)
        )
        return m

    @classmethod
    def identity(cls):
        return cls([[1 if i == j else 0 for j in range(4)] for i in range(4)])

    def entry(self, i, j) -> FieldElement:
        return self.rows[i][j]

    def flat_raw(self):
        return tuple(c.raw for row in self.rows for c in row)

    def __mul__(self, other):
        if isinstance(other, Matrix4):
            return Matrix4._raw_flat(_k.mat4_mul(self.flat_raw(), other.flat_raw()))
        return NotImplemented

    def apply(self, vec):
        v = tuple(_coerce_fe(c).raw for c in vec)
        return tuple(FieldElement._raw(c) for c in _k.mat4_apply(self.flat_raw(), v))

    def transpose(self):
        return Matrix4(tuple(zip(*self.rows)))

    def scale(self, c):
        c = _coerce_fe(c)
        return Matrix4([[e * c for e in row] for row in self.rows])

    def __add__(self, other):
        if isinstance(other, Matrix4):
            return Matrix4(
                [
                    [a + b for a, b in zip(ra, rb)]
                    for ra, rb in zip(self.rows, other.rows)
                ]
            )
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, Matrix4):
            return Matrix4(
                [
                    [a - b for a, b in zip(ra, rb)]
                    for ra, rb in zip(self.rows, other.rows)
                ]
            )
        return NotImplemented

    def __neg__(self):
        return Matrix4([[-e for e in row] for row in self.rows])

    def __eq__(self, other):
        if not isinstance(other, Matrix4):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.flat_raw())

    def minor(self, drop_row, drop_col) -> FieldElement:
        rows = [r for i, r in enumerate(self.rows) if i != drop_row]
        sub = [[c for j, c in enumerate(r) if j != drop_col] for r in rows]
        return _det3(sub)

    def det(self) -> FieldElement:
        total = ZERO
        for j in range(4):
            c = self.rows[0][j]
            if c.is_zero():
                continue
            m = self.minor(0, j)
            total = total + (c * m if j % 2 == 0 else -(c * m))
        return total

    def inverse(self) -> "Matrix4":
        d = self.det()
        if d.is_zero():
            raise SingularMatrixError("matrix is singular")
        dinv = d.inv()
        adj = [
            [
                self.minor(j, i) * dinv * ((-1) ** ((i + j) % 2))
                for j in range(4)
            ]
            for i in range(4)
        ]
        return Matrix4(adj)

    def is_orthogonal(self) -> bool:
        return self.transpose() * self == Matrix4.identity()

    def render(self) -> str:
        return "\n".join(
            " ; ".join(c.render() for c in row) for row in self.rows
        )

    @classmethod
    def parse(cls, text: str) -> "Matrix4":
        rows = []
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            rows.append([FieldElement.parse(tok) for tok in line.split(";")])
        return cls(rows)

    def __repr__(self):
        return f"Matrix4({self.render()!r})"


def _det2(a, b, c, d):
    return a * d - b * c


def _det3(m):
    return (
        m[0][0] * _det2(m[1][1], m[1][2], m[2][1], m[2][2])
        - m[0][1] * _det2(m[1][0], m[1][2], m[2][0], m[2][2])
        + m[0][2] * _det2(m[1][0], m[1][1], m[2][0], m[2][1])
    )


def det_of_poly_matrix(rows):
    """Symbolic determinant of a 4x4 matrix of MPoly entries (minor expansion)."""
    space = rows[0][0].space

    def det2(a, b, c, d):
        return a * d - b * c

    def det3(m):
        return (
            m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2])
            - m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2])
            + m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1])
        )

    total = MPoly.zero(space)
    for j in range(4):
        c = rows[0][j]
        if c.is_zero():
            continue
        sub = [
            [rows[i][k] for k in range(4) if k != j] for i in range(1, 4)
        ]
        term = c * det3(sub)
        total = total + term if j % 2 == 0 else total - term
    return total
