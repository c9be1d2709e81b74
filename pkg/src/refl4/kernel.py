"""Kernel selection: compiled extension if available, pure Python otherwise.

Set REFL4_PURE=1 to force the pure implementation (used by the parity tests
and the benchmark).
"""

import os

if os.environ.get("REFL4_PURE"):
    from . import _corepy as impl
else:
    try:
        from . import _corecy as impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _corepy as impl

IMPLEMENTATION = impl.IMPLEMENTATION

FE_ZERO = impl.FE_ZERO
FE_ONE = impl.FE_ONE

fe_canon = impl.fe_canon
fe_from_int = impl.fe_from_int
fe_is_zero = impl.fe_is_zero
fe_add = impl.fe_add
fe_sub = impl.fe_sub
fe_neg = impl.fe_neg
fe_mul = impl.fe_mul
fe_mul_q = impl.fe_mul_q
fe_conj = impl.fe_conj
fe_galois = impl.fe_galois
fe_inv = impl.fe_inv
fe_pow = impl.fe_pow

praw_acc = impl.praw_acc
praw_add = impl.praw_add
praw_iadd = impl.praw_iadd
praw_neg = impl.praw_neg
praw_scale = impl.praw_scale
praw_mul = impl.praw_mul
praw_eval = impl.praw_eval
praw_pair_subst = impl.praw_pair_subst
praw_linear_subst = impl.praw_linear_subst

mat4_mul = impl.mat4_mul
mat4_apply = impl.mat4_apply
