# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled term-arithmetic kernel; behavioural twin of _kernel_py.

Coefficients stay Python objects (Fraction / CycloNumber / RatFunc1); the
speedup comes from running the per-term loops and tuple construction at C
level instead of through the interpreter.
"""

IMPLEMENTATION = "c"


def terms_add(dict a, dict b):
    cdef dict out = dict(a)
    cdef object e, c, s
    for e, c in b.items():
        s = out.get(e)
        if s is None:
            out[e] = c
        else:
            s = s + c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def terms_sub(dict a, dict b):
    cdef dict out = dict(a)
    cdef object e, c, s
    for e, c in b.items():
        s = out.get(e)
        if s is None:
            out[e] = -c
        else:
            s = s - c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def terms_addmul(dict a, dict b, object c):
    cdef dict out
    cdef object e, cb, v, s
    if not c:
        return dict(a)
    out = dict(a)
    for e, cb in b.items():
        v = c * cb
        if not v:
            continue
        s = out.get(e)
        if s is None:
            out[e] = v
        else:
            s = s + v
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def terms_neg(dict a):
    cdef dict out = {}
    cdef object e, c
    for e, c in a.items():
        out[e] = -c
    return out


def terms_scale(dict a, object c):
    cdef dict out = {}
    cdef object e, v, w
    if not c:
        return out
    for e, v in a.items():
        w = c * v
        if w:
            out[e] = w
    return out


def terms_mul(dict a, dict b):
    cdef dict out = {}
    cdef object ea, ca, eb, cb, v, s
    cdef tuple e, ta, tb
    cdef Py_ssize_t n, k
    if not a or not b:
        return out
    if len(a) > len(b):
        a, b = b, a
    for ea, ca in a.items():
        ta = <tuple> ea
        n = len(ta)
        for eb, cb in b.items():
            tb = <tuple> eb
            e = tuple([<object> ta[k] + <object> tb[k] for k in range(n)])
            v = ca * cb
            if not v:
                continue
            s = out.get(e)
            if s is None:
                out[e] = v
            else:
                s = s + v
                if s:
                    out[e] = s
                else:
                    del out[e]
    return out


def terms_shift(dict a, tuple delta):
    cdef dict out = {}
    cdef object ea, c
    cdef tuple ta, e
    cdef Py_ssize_t n = len(delta), k
    for ea, c in a.items():
        ta = <tuple> ea
        e = tuple([<object> ta[k] + <object> delta[k] for k in range(n)])
        out[e] = c
    return out


def terms_permute(dict a, tuple perm):
    cdef dict out = {}
    cdef object ea, c
    cdef tuple ta, e
    cdef Py_ssize_t n = len(perm), k
    for ea, c in a.items():
        ta = <tuple> ea
        e = tuple([ta[<Py_ssize_t> perm[k]] for k in range(n)])
        out[e] = c
    return out


def terms_scale_var(dict a, Py_ssize_t i, object c, object cpows):
    cdef dict out = {}
    cdef object ea, v, w, s
    cdef tuple ta
    cdef object k
    for ea, v in a.items():
        ta = <tuple> ea
        k = ta[i]
        if k:
            w = v * cpows(k)
            if not w:
                continue
        else:
            w = v
        s = out.get(ea)
        if s is None:
            out[ea] = w
        else:
            s = s + w
            if s:
                out[ea] = s
            else:
                del out[ea]
    return out
