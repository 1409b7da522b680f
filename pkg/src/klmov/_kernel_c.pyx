# cython: language_level=3, binding=False
"""Compiled twin of ``_kernel_py``.

Coefficients stay Python objects (arbitrary-precision ints and Fractions);
the win comes from C-level dict iteration and loop bookkeeping.
"""


def qt_mul(dict d1, dict d2):
    cdef dict out = {}
    cdef tuple k1, k2, k
    cdef object c1, c2, v
    cdef list items2
    if not d1 or not d2:
        return out
    if len(d1) > len(d2):
        d1, d2 = d2, d1
    items2 = list(d2.items())
    for k1, c1 in d1.items():
        for k2, c2 in items2:
            k = (k1[0] + k2[0], k1[1] + k2[1])
            v = out.get(k)
            if v is None:
                out[k] = c1 * c2
            else:
                v = v + c1 * c2
                if v:
                    out[k] = v
                else:
                    del out[k]
    return out


def qt_mul_qp(dict d, dict p):
    cdef dict out = {}
    cdef tuple k1, k
    cdef object a2, c1, c2, v
    cdef list items
    if not d or not p:
        return out
    items = list(p.items())
    for k1, c1 in d.items():
        for a2, c2 in items:
            k = (k1[0] + a2, k1[1])
            v = out.get(k)
            if v is None:
                out[k] = c1 * c2
            else:
                v = v + c1 * c2
                if v:
                    out[k] = v
                else:
                    del out[k]
    return out


def qt_iadd(dict acc, dict d, object c=1):
    cdef object k, v, v0
    if not c or not d:
        return acc
    if c == 1:
        for k, v0 in d.items():
            v = acc.get(k)
            if v is None:
                acc[k] = v0
            else:
                v = v + v0
                if v:
                    acc[k] = v
                else:
                    del acc[k]
    else:
        for k, v0 in d.items():
            v = acc.get(k)
            if v is None:
                acc[k] = c * v0
            else:
                v = v + c * v0
                if v:
                    acc[k] = v
                else:
                    del acc[k]
    return acc


def qp_mul(dict p1, dict p2):
    cdef dict out = {}
    cdef object a1, a2, c1, c2, k, v
    cdef list items2
    if not p1 or not p2:
        return out
    if len(p1) > len(p2):
        p1, p2 = p2, p1
    items2 = list(p2.items())
    for a1, c1 in p1.items():
        for a2, c2 in items2:
            k = a1 + a2
            v = out.get(k)
            if v is None:
                out[k] = c1 * c2
            else:
                v = v + c1 * c2
                if v:
                    out[k] = v
                else:
                    del out[k]
    return out


def qp_iadd(dict acc, dict p, object c=1):
    cdef object k, v, v0
    if not c or not p:
        return acc
    for k, v0 in p.items():
        v = acc.get(k)
        if v is None:
            acc[k] = c * v0
        else:
            v = v + c * v0
            if v:
                acc[k] = v
            else:
                del acc[k]
    return acc
