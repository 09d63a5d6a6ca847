# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernels_py``.

Same functions, same dict-in dict-out contracts.  Coefficient arithmetic
still goes through Python objects (exact ints / Fractions / Scalars); the
win is C-level loop and dict traffic, which dominates at the term counts
the reordering engine produces.
"""


def mpoly_add(dict a, dict b):
    """Sum of two term maps."""
    cdef dict out
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    for k, v in b.items():
        s = out.get(k)
        if s is None:
            out[k] = v
        else:
            s = s + v
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def mpoly_sub(dict a, dict b):
    """Difference of two term maps."""
    cdef dict out = dict(a)
    for k, v in b.items():
        s = out.get(k)
        if s is None:
            out[k] = -v
        else:
            s = s - v
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def mpoly_neg(dict a):
    cdef dict out = {}
    for k, v in a.items():
        out[k] = -v
    return out


def mpoly_scale(dict a, c):
    """Multiply every coefficient by the number c."""
    cdef dict out = {}
    if not c:
        return out
    for k, v in a.items():
        out[k] = v * c
    return out


def mpoly_mul(dict a, dict b, bias):
    """Product of two term maps; ``bias`` is the constant-term key."""
    cdef dict out = {}
    if not a or not b:
        return out
    if len(b) < len(a):
        a, b = b, a
    for ka, va in a.items():
        ka = ka - bias
        for kb, vb in b.items():
            k = ka + kb
            s = out.get(k)
            if s is None:
                out[k] = va * vb
            else:
                s = s + va * vb
                if s:
                    out[k] = s
                else:
                    del out[k]
    return out


def mpoly_mul_term(dict a, key, c, bias):
    """Product with the single term ``c * x^key``."""
    cdef dict out = {}
    if not c:
        return out
    key = key - bias
    for k, v in a.items():
        out[k + key] = v * c
    return out


def axpy(dict acc, dict src, c):
    """acc += c * src, in place; prunes entries that cancel to zero."""
    if not c:
        return acc
    for k, v in src.items():
        s = acc.get(k)
        if s is None:
            acc[k] = c * v
        else:
            s = s + c * v
            if s:
                acc[k] = s
            else:
                del acc[k]
    return acc


def axpy_shift(dict acc, dict src, shift, c):
    """acc += c * (src with every key translated by ``shift``), in place."""
    if not c:
        return acc
    for k, v in src.items():
        k = k + shift
        s = acc.get(k)
        if s is None:
            acc[k] = c * v
        else:
            s = s + c * v
            if s:
                acc[k] = s
            else:
                del acc[k]
    return acc
