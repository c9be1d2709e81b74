"""Pure-Python arithmetic kernels.

This module implements the low-level exact arithmetic that everything else
sits on.  A compiled twin (``_corecy``) implements the same functions with
the same data contracts; ``refl4.kernel`` picks one at import time.

Data contracts
--------------
field element ("fe")
    A pair ``(den, nums)`` where ``den`` is a positive int and ``nums`` is a
    tuple of 16 ints: the numerators of the coordinates with respect to the
    basis ``i**a * r2**b * r3**c * r5**d`` of Q(i, sqrt2, sqrt3, sqrt5).
    Basis index bits: bit0 = i, bit1 = r2, bit2 = r3, bit3 = r5.
    Canonical form: gcd(den, *nums) == 1 and den > 0; zero is ``(1, (0,)*16)``.

raw polynomial ("praw")
    A dict mapping 4-tuples of non-negative int exponents to nonzero fe
    values.  No space tag at this level; the MPoly layer owns that.

matrix ("mat4")
    A flat tuple of 16 fe values, row major.

All functions are pure; inputs are never mutated unless the name says so.
"""

from math import gcd

IMPLEMENTATION = "pure"

_Z16 = (0,) * 16
FE_ZERO = (1, _Z16)
FE_ONE = (1, (1,) + (0,) * 15)


def _build_mul_tables():
    # basis_i * basis_j = coef * basis_(i xor j), coef from the squared radicals
    ks = []
    cs = []
    for i in range(16):
        krow = []
        crow = []
        for j in range(16):
            c = 1
            if i & j & 1:
                c = -c          # i*i = -1
            if i & j & 2:
                c *= 2          # r2*r2 = 2
            if i & j & 4:
                c *= 3
            if i & j & 8:
                c *= 5
            krow.append(i ^ j)
            crow.append(c)
        ks.append(tuple(krow))
        cs.append(tuple(crow))
    return tuple(ks), tuple(cs)


_MUL_K, _MUL_C = _build_mul_tables()

# _PARITY[mask][idx] is -1 if the basis product at idx picks up a sign under
# the Galois map negating the generators selected by mask, else +1.
_PARITY = tuple(
    tuple(-1 if bin(idx & mask).count("1") % 2 else 1 for idx in range(16))
    for mask in range(16)
)


def fe_canon(den, nums):
    """Reduce (den, nums) to canonical form.  den may be negative."""
    g = 0
    for v in nums:
        if v:
            g = gcd(g, v)
    if g == 0:
        return FE_ZERO
    g = gcd(g, den)
    if den < 0:
        g = -g
    if g != 1:
        den //= g
        nums = [v // g for v in nums]
    return (den, tuple(nums))


def fe_from_int(n):
    if n == 0:
        return FE_ZERO
    return (1, (n,) + (0,) * 15)


def fe_is_zero(a):
    return a[1] == _Z16


def fe_add(a, b):
    da, na = a
    db, nb = b
    if da == db:
        return fe_canon(da, [x + y for x, y in zip(na, nb)])
    g = gcd(da, db)
    ma = db // g
    mb = da // g
    return fe_canon(da * ma, [x * ma + y * mb for x, y in zip(na, nb)])


def fe_sub(a, b):
    da, na = a
    db, nb = b
    if da == db:
        return fe_canon(da, [x - y for x, y in zip(na, nb)])
    g = gcd(da, db)
    ma = db // g
    mb = da // g
    return fe_canon(da * ma, [x * ma - y * mb for x, y in zip(na, nb)])


def fe_neg(a):
    return (a[0], tuple(-x for x in a[1]))


def fe_mul(a, b):
    da, na = a
    db, nb = b
    acc = [0] * 16
    for i in range(16):
        ai = na[i]
        if not ai:
            continue
        krow = _MUL_K[i]
        crow = _MUL_C[i]
        for j in range(16):
            bj = nb[j]
            if bj:
                acc[krow[j]] += ai * bj * crow[j]
    return fe_canon(da * db, acc)


def fe_mul_q(a, num, den):
    """Multiply by the rational num/den (den nonzero)."""
    if num == 0:
        return FE_ZERO
    if den < 0:
        num, den = -num, -den
    return fe_canon(a[0] * den, [x * num for x in a[1]])


def fe_conj(a):
    # complex conjugation: negate every coordinate whose basis product has i
    return (a[0], tuple(-v if i & 1 else v for i, v in enumerate(a[1])))


def fe_galois(a, mask):
    """Galois conjugate negating the generators in mask (bit0=i, .. bit3=r5)."""
    par = _PARITY[mask]
    return (a[0], tuple(v * par[i] for i, v in enumerate(a[1])))


def fe_inv(a):
    """Exact inverse via norm descent down the quadratic tower."""
    if a[1] == _Z16:
        raise ZeroDivisionError("field element is zero")
    mult = None
    cur = a
    for mask in (8, 4, 2, 1):
        conj = fe_galois(cur, mask)
        mult = conj if mult is None else fe_mul(mult, conj)
        cur = fe_mul(cur, conj)
    # cur is now rational: nums[0]/den
    nums = cur[1]
    if any(nums[1:]):
        raise ArithmeticError("norm descent did not reach the rationals")
    return fe_mul_q(mult, cur[0], nums[0])


def fe_pow(a, k):
    if k < 0:
        return fe_pow(fe_inv(a), -k)
    out = FE_ONE
    base = a
    while k:
        if k & 1:
            out = fe_mul(out, base)
        base = fe_mul(base, base)
        k >>= 1
    return out


# ---------------------------------------------------------------------------
# raw polynomials


def praw_acc(out, key, val):
    """out[key] += val, dropping exact zeros.  Mutates out."""
    cur = out.get(key)
    if cur is None:
        if val[1] != _Z16:
            out[key] = val
        return
    s = fe_add(cur, val)
    if s[1] == _Z16:
        del out[key]
    else:
        out[key] = s


def praw_add(p, q):
    out = dict(p)
    for key, val in q.items():
        praw_acc(out, key, val)
    return out


def praw_iadd(out, p):
    for key, val in p.items():
        praw_acc(out, key, val)
    return out


def praw_neg(p):
    return {k: fe_neg(v) for k, v in p.items()}


def praw_scale(p, c):
    if c[1] == _Z16:
        return {}
    out = {}
    for k, v in p.items():
        cv = fe_mul(v, c)
        if cv[1] != _Z16:
            out[k] = cv
    return out


def praw_mul(p, q):
    out = {}
    for e1, c1 in p.items():
        a0, a1, a2, a3 = e1
        for e2, c2 in q.items():
            key = (a0 + e2[0], a1 + e2[1], a2 + e2[2], a3 + e2[3])
            praw_acc(out, key, fe_mul(c1, c2))
    return out


def praw_eval(p, pt):
    pows = [[FE_ONE], [FE_ONE], [FE_ONE], [FE_ONE]]
    total = FE_ZERO
    for exps, c in p.items():
        term = c
        for v in range(4):
            e = exps[v]
            if not e:
                continue
            pv = pows[v]
            while len(pv) <= e:
                pv.append(fe_mul(pv[-1], pt[v]))
            term = fe_mul(term, pv[e])
        total = fe_add(total, term)
    return total


def _bf_mul_lin(c, alpha, beta):
    """Multiply a binary form (coeff list over first-var exponent) by
    alpha*X + beta*Y."""
    n = len(c)
    out = []
    for m in range(n + 1):
        lo = fe_mul(c[m], beta) if m < n else FE_ZERO
        hi = fe_mul(c[m - 1], alpha) if m > 0 else FE_ZERO
        out.append(fe_add(lo, hi))
    return out


def _bf_power(cache, mat, a, b):
    """Expansion of img0**a * img1**b where img0 = m00*X + m01*Y and
    img1 = m10*X + m11*Y, as a coefficient list indexed by the X exponent."""
    got = cache.get((a, b))
    if got is not None:
        return got
    if a == 0 and b == 0:
        res = [FE_ONE]
    elif b > 0:
        res = _bf_mul_lin(_bf_power(cache, mat, a, b - 1), mat[2], mat[3])
    else:
        res = _bf_mul_lin(_bf_power(cache, mat, a - 1, 0), mat[0], mat[1])
    cache[(a, b)] = res
    return res


def praw_pair_subst(p, pa, ma, pb, mb):
    """Substitute each variable of two 2-variable blocks by a linear form in
    the same block.

    pa = (i, j): positions of the first block; ma = (m00, m01, m10, m11):
    image of var i is m00*var_i + m01*var_j, image of var j is
    m10*var_i + m11*var_j.  Same for pb/mb.  The blocks must be disjoint and
    cover a subset of the 4 positions; untouched positions must not appear
    in p.
    """
    ia, ja = pa
    ib, jb = pb
    ca = {}
    cb = {}
    out = {}
    key = [0, 0, 0, 0]
    for exps, c in p.items():
        ea0, ea1 = exps[ia], exps[ja]
        eb0, eb1 = exps[ib], exps[jb]
        A = _bf_power(ca, ma, ea0, ea1)
        B = _bf_power(cb, mb, eb0, eb1)
        sa = ea0 + ea1
        sb = eb0 + eb1
        for ka in range(sa + 1):
            cA = A[ka]
            if cA[1] == _Z16:
                continue
            cac = fe_mul(c, cA)
            key[ia] = ka
            key[ja] = sa - ka
            for kb in range(sb + 1):
                cB = B[kb]
                if cB[1] == _Z16:
                    continue
                key[ib] = kb
                key[jb] = sb - kb
                praw_acc(out, tuple(key), fe_mul(cac, cB))
    return out


def praw_linear_subst(p, imgs):
    """Substitute every variable by a general linear form.

    imgs: list of 4 praw dicts, each the (degree <= 1, homogeneous degree 1
    here) image of the corresponding variable.  Classic pair-table scheme:
    products img0**a * img1**b and img2**c * img3**d are cached and combined
    per monomial.
    """
    t01 = {(0, 0): {(0, 0, 0, 0): FE_ONE}}
    t23 = {(0, 0): {(0, 0, 0, 0): FE_ONE}}

    def power(cache, i0, i1, a, b):
        got = cache.get((a, b))
        if got is not None:
            return got
        if b > 0:
            res = praw_mul(power(cache, i0, i1, a, b - 1), imgs[i1])
        else:
            res = praw_mul(power(cache, i0, i1, a - 1, 0), imgs[i0])
        cache[(a, b)] = res
        return res

    out = {}
    for exps, c in p.items():
        pa = power(t01, 0, 1, exps[0], exps[1])
        pb = power(t23, 2, 3, exps[2], exps[3])
        for e1, c1 in pa.items():
            cc = fe_mul(c, c1)
            a0, a1, a2, a3 = e1
            for e2, c2 in pb.items():
                key = (a0 + e2[0], a1 + e2[1], a2 + e2[2], a3 + e2[3])
                praw_acc(out, key, fe_mul(cc, c2))
    return out


# ---------------------------------------------------------------------------
# 4x4 matrices


def mat4_mul(a, b):
    out = []
    for i in (0, 4, 8, 12):
        a0, a1, a2, a3 = a[i], a[i + 1], a[i + 2], a[i + 3]
        for j in range(4):
            s = fe_mul(a0, b[j])
            s = fe_add(s, fe_mul(a1, b[4 + j]))
            s = fe_add(s, fe_mul(a2, b[8 + j]))
            s = fe_add(s, fe_mul(a3, b[12 + j]))
            out.append(s)
    return tuple(out)


def mat4_apply(m, v):
    out = []
    for i in (0, 4, 8, 12):
        s = fe_mul(m[i], v[0])
        s = fe_add(s, fe_mul(m[i + 1], v[1]))
        s = fe_add(s, fe_mul(m[i + 2], v[2]))
        s = fe_add(s, fe_mul(m[i + 3], v[3]))
        out.append(s)
    return tuple(out)
