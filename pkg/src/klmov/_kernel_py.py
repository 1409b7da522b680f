"""Pure-Python polynomial kernels.

Bivariate Laurent polynomials are dicts mapping ``(qexp, texp)`` to a nonzero
rational (int or Fraction); univariate ones map ``exp`` to a coefficient.
These five functions dominate the runtime of every invariant computation,
so they also exist as a compiled twin in ``_kernel_c``.
"""


def qt_mul(d1, d2):
    """Convolution product of two bivariate term dicts."""
    if not d1 or not d2:
        return {}
    if len(d1) > len(d2):
        d1, d2 = d2, d1
    out = {}
    items2 = list(d2.items())
    for (a1, b1), c1 in d1.items():
        for (a2, b2), c2 in items2:
            k = (a1 + a2, b1 + b2)
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


def qt_mul_qp(d, p):
    """Product of a bivariate term dict with a q-only term dict."""
    if not d or not p:
        return {}
    out = {}
    items = list(p.items())
    for (a1, b1), c1 in d.items():
        for a2, c2 in items:
            k = (a1 + a2, b1)
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


def qt_iadd(acc, d, c=1):
    """In-place acc += c * d for bivariate term dicts; returns acc."""
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


def qp_mul(p1, p2):
    """Convolution product of two univariate term dicts."""
    if not p1 or not p2:
        return {}
    if len(p1) > len(p2):
        p1, p2 = p2, p1
    out = {}
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


def qp_iadd(acc, p, c=1):
    """In-place acc += c * p for univariate term dicts; returns acc."""
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
