# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled arithmetic kernels.

Same functions and data contracts as _corepy (which holds the reference
implementation and the documentation); coefficients stay arbitrary
precision Python ints, the win is C-level dispatch in the inner loops.
"""

from math import gcd

IMPLEMENTATION = "compiled"

_Z16 = (0,) * 16
FE_ZERO = (1, _Z16)
FE_ONE = (1, (1,) + (0,) * 15)

cdef tuple ZE16 = _Z16
cdef tuple FEZ = FE_ZERO
cdef tuple FEO = FE_ONE

cdef int MK[256]
cdef long MC[256]

cdef int _i, _j, _c
for _i in range(16):
    for _j in range(16):
        _c = 1
        if _i & _j & 1:
            _c = -_c
        if _i & _j & 2:
            _c *= 2
        if _i & _j & 4:
            _c *= 3
        if _i & _j & 8:
            _c *= 5
        MK[(_i << 4) + _j] = _i ^ _j
        MC[(_i << 4) + _j] = _c

cdef long PARITY[256]
for _i in range(16):
    for _j in range(16):
        PARITY[(_i << 4) + _j] = -1 if bin(_j & _i).count("1") % 2 else 1


cdef tuple _canon(object den, list nums):
    cdef object g = 0
    cdef object v
    cdef int i
    for i in range(16):
        v = nums[i]
        if v:
            g = gcd(g, v)
    if g == 0:
        return FEZ
    g = gcd(g, den)
    if den < 0:
        g = -g
    if g != 1:
        den = den // g
        for i in range(16):
            v = nums[i]
            if v:
                nums[i] = v // g
    return (den, tuple(nums))


def fe_canon(den, nums):
    return _canon(den, list(nums))


def fe_from_int(n):
    if n == 0:
        return FEZ
    return (1, (n,) + (0,) * 15)


def fe_is_zero(a):
    return a[1] == ZE16


cdef tuple _fe_add(tuple a, tuple b):
    cdef object da = a[0]
    cdef object db = b[0]
    cdef tuple na = <tuple> a[1]
    cdef tuple nb = <tuple> b[1]
    cdef list acc = [0] * 16
    cdef int i
    cdef object g, ma, mb
    if da == db:
        for i in range(16):
            acc[i] = na[i] + nb[i]
        return _canon(da, acc)
    g = gcd(da, db)
    ma = db // g
    mb = da // g
    for i in range(16):
        acc[i] = na[i] * ma + nb[i] * mb
    return _canon(da * ma, acc)


def fe_add(a, b):
    return _fe_add(a, b)


cdef tuple _fe_sub(tuple a, tuple b):
    return _fe_add(a, _fe_neg(b))


def fe_sub(a, b):
    return _fe_sub(a, b)


cdef tuple _fe_neg(tuple a):
    cdef tuple na = <tuple> a[1]
    cdef list out = [0] * 16
    cdef int i
    for i in range(16):
        out[i] = -na[i]
    return (a[0], tuple(out))


def fe_neg(a):
    return _fe_neg(a)


cdef tuple _fe_mul(tuple a, tuple b):
    cdef tuple na = <tuple> a[1]
    cdef tuple nb = <tuple> b[1]
    cdef list acc = [0] * 16
    cdef int i, j, base, k
    cdef object ai, bj
    for i in range(16):
        ai = na[i]
        if not ai:
            continue
        base = i << 4
        for j in range(16):
            bj = nb[j]
            if bj:
                k = MK[base + j]
                acc[k] = acc[k] + ai * bj * MC[base + j]
    return _canon(<object> a[0] * <object> b[0], acc)


def fe_mul(a, b):
    return _fe_mul(a, b)


def fe_mul_q(a, num, den):
    cdef tuple na
    cdef list acc
    cdef int i
    if num == 0:
        return FEZ
    if den < 0:
        num, den = -num, -den
    na = <tuple> a[1]
    acc = [0] * 16
    for i in range(16):
        acc[i] = na[i] * num
    return _canon(<object> a[0] * den, acc)


def fe_conj(a):
    cdef tuple na = <tuple> a[1]
    cdef list out = [0] * 16
    cdef int i
    for i in range(16):
        out[i] = -na[i] if i & 1 else na[i]
    return (a[0], tuple(out))


def fe_galois(a, mask):
    cdef tuple na = <tuple> a[1]
    cdef list out = [0] * 16
    cdef int i, base = (<int> mask) << 4
    for i in range(16):
        out[i] = na[i] * PARITY[base + i]
    return (a[0], tuple(out))


def fe_inv(a):
    if a[1] == ZE16:
        raise ZeroDivisionError("field element is zero")
    mult = None
    cur = a
    for mask in (8, 4, 2, 1):
        conj = fe_galois(cur, mask)
        mult = conj if mult is None else _fe_mul(mult, conj)
        cur = _fe_mul(cur, conj)
    nums = cur[1]
    if any(nums[1:]):
        raise ArithmeticError("norm descent did not reach the rationals")
    return fe_mul_q(mult, cur[0], nums[0])


def fe_pow(a, k):
    if k < 0:
        return fe_pow(fe_inv(a), -k)
    out = FEO
    base = a
    while k:
        if k & 1:
            out = _fe_mul(out, base)
        base = _fe_mul(base, base)
        k >>= 1
    return out


# ---------------------------------------------------------------------------
# raw polynomials


cdef inline void _acc(dict out, tuple key, tuple val):
    cdef object cur = out.get(key)
    cdef tuple s
    if cur is None:
        if <tuple> val[1] != ZE16:
            out[key] = val
        return
    s = _fe_add(<tuple> cur, val)
    if <tuple> s[1] == ZE16:
        del out[key]
    else:
        out[key] = s


def praw_acc(out, key, val):
    _acc(<dict> out, <tuple> key, <tuple> val)


def praw_add(p, q):
    cdef dict out = dict(p)
    for key, val in (<dict> q).items():
        _acc(out, <tuple> key, <tuple> val)
    return out


def praw_iadd(out, p):
    cdef dict o = <dict> out
    for key, val in (<dict> p).items():
        _acc(o, <tuple> key, <tuple> val)
    return o


def praw_neg(p):
    cdef dict out = {}
    for key, val in (<dict> p).items():
        out[key] = _fe_neg(<tuple> val)
    return out


def praw_scale(p, c):
    cdef dict out = {}
    cdef tuple cv
    if (<tuple> c)[1] == ZE16:
        return out
    for key, val in (<dict> p).items():
        cv = _fe_mul(<tuple> val, <tuple> c)
        if <tuple> cv[1] != ZE16:
            out[key] = cv
    return out


def praw_mul(p, q):
    cdef dict out = {}
    cdef tuple e1, e2, key
    cdef int a0, a1, a2, a3
    for e1, c1 in (<dict> p).items():
        a0 = e1[0]
        a1 = e1[1]
        a2 = e1[2]
        a3 = e1[3]
        for e2, c2 in (<dict> q).items():
            key = (a0 + <int> e2[0], a1 + <int> e2[1], a2 + <int> e2[2], a3 + <int> e2[3])
            _acc(out, key, _fe_mul(<tuple> c1, <tuple> c2))
    return out


def praw_eval(p, pt):
    cdef list pows = [[FEO], [FEO], [FEO], [FEO]]
    cdef tuple total = FEZ
    cdef tuple term, exps
    cdef list pv
    cdef int v, e
    for exps, c in (<dict> p).items():
        term = <tuple> c
        for v in range(4):
            e = exps[v]
            if not e:
                continue
            pv = <list> pows[v]
            while len(pv) <= e:
                pv.append(_fe_mul(<tuple> pv[len(pv) - 1], <tuple> pt[v]))
            term = _fe_mul(term, <tuple> pv[e])
        total = _fe_add(total, term)
    return total


cdef list _bf_mul_lin(list c, tuple alpha, tuple beta):
    cdef int n = len(c)
    cdef int m
    cdef list out = []
    cdef tuple lo, hi
    for m in range(n + 1):
        lo = _fe_mul(<tuple> c[m], beta) if m < n else FEZ
        hi = _fe_mul(<tuple> c[m - 1], alpha) if m > 0 else FEZ
        out.append(_fe_add(lo, hi))
    return out


cdef list _bf_power(dict cache, tuple mat, int a, int b):
    cdef object got = cache.get((a, b))
    cdef list res
    if got is not None:
        return <list> got
    if a == 0 and b == 0:
        res = [FEO]
    elif b > 0:
        res = _bf_mul_lin(_bf_power(cache, mat, a, b - 1), <tuple> mat[2], <tuple> mat[3])
    else:
        res = _bf_mul_lin(_bf_power(cache, mat, a - 1, 0), <tuple> mat[0], <tuple> mat[1])
    cache[(a, b)] = res
    return res


def praw_pair_subst(p, pa, ma, pb, mb):
    cdef int ia = pa[0]
    cdef int ja = pa[1]
    cdef int ib = pb[0]
    cdef int jb = pb[1]
    cdef tuple tma = <tuple> ma
    cdef tuple tmb = <tuple> mb
    cdef dict ca = {}
    cdef dict cb = {}
    cdef dict out = {}
    cdef list key = [0, 0, 0, 0]
    cdef list A, B
    cdef tuple exps, cA, cB, cac
    cdef int ea0, ea1, eb0, eb1, sa, sb, ka, kb
    for exps, c in (<dict> p).items():
        ea0 = exps[ia]
        ea1 = exps[ja]
        eb0 = exps[ib]
        eb1 = exps[jb]
        A = _bf_power(ca, tma, ea0, ea1)
        B = _bf_power(cb, tmb, eb0, eb1)
        sa = ea0 + ea1
        sb = eb0 + eb1
        for ka in range(sa + 1):
            cA = <tuple> A[ka]
            if <tuple> cA[1] == ZE16:
                continue
            cac = _fe_mul(<tuple> c, cA)
            key[ia] = ka
            key[ja] = sa - ka
            for kb in range(sb + 1):
                cB = <tuple> B[kb]
                if <tuple> cB[1] == ZE16:
                    continue
                key[ib] = kb
                key[jb] = sb - kb
                _acc(out, (key[0], key[1], key[2], key[3]), _fe_mul(cac, cB))
    return out


def praw_linear_subst(p, imgs):
    cdef dict t01 = {(0, 0): {(0, 0, 0, 0): FEO}}
    cdef dict t23 = {(0, 0): {(0, 0, 0, 0): FEO}}
    cdef dict out = {}
    cdef dict pa, pb
    cdef tuple exps, e1, e2, cc, key
    cdef int a0, a1, a2, a3

    def power(dict cache, int i0, int i1, int a, int b):
        got = cache.get((a, b))
        if got is not None:
            return got
        if b > 0:
            res = praw_mul(power(cache, i0, i1, a, b - 1), imgs[i1])
        else:
            res = praw_mul(power(cache, i0, i1, a - 1, 0), imgs[i0])
        cache[(a, b)] = res
        return res

    for exps, c in (<dict> p).items():
        pa = <dict> power(t01, 0, 1, exps[0], exps[1])
        pb = <dict> power(t23, 2, 3, exps[2], exps[3])
        for e1, c1 in pa.items():
            cc = _fe_mul(<tuple> c, <tuple> c1)
            a0 = e1[0]
            a1 = e1[1]
            a2 = e1[2]
            a3 = e1[3]
            for e2, c2 in pb.items():
                key = (a0 + <int> e2[0], a1 + <int> e2[1], a2 + <int> e2[2], a3 + <int> e2[3])
                _acc(out, key, _fe_mul(cc, <tuple> c2))
    return out


# ---------------------------------------------------------------------------
# 4x4 matrices


def mat4_mul(a, b):
    cdef tuple ta = <tuple> a
    cdef tuple tb = <tuple> b
    cdef list out = []
    cdef int i, j
    cdef tuple s
    for i in range(0, 16, 4):
        for j in range(4):
            s = _fe_mul(<tuple> ta[i], <tuple> tb[j])
            s = _fe_add(s, _fe_mul(<tuple> ta[i + 1], <tuple> tb[4 + j]))
            s = _fe_add(s, _fe_mul(<tuple> ta[i + 2], <tuple> tb[8 + j]))
            s = _fe_add(s, _fe_mul(<tuple> ta[i + 3], <tuple> tb[12 + j]))
            out.append(s)
    return tuple(out)


def mat4_apply(m, v):
    cdef tuple tm = <tuple> m
    cdef tuple tv = <tuple> v
    cdef list out = []
    cdef int i
    cdef tuple s
    for i in range(0, 16, 4):
        s = _fe_mul(<tuple> tm[i], <tuple> tv[0])
        s = _fe_add(s, _fe_mul(<tuple> tm[i + 1], <tuple> tv[1]))
        s = _fe_add(s, _fe_mul(<tuple> tm[i + 2], <tuple> tv[2]))
        s = _fe_add(s, _fe_mul(<tuple> tm[i + 3], <tuple> tv[3]))
        out.append(s)
    return tuple(out)
