# cython: language_level=3, boundscheck=False, wraparound=False
"""Cython twin of ``_convolve_py``; same semantics, same API.

Coefficients stay exact rationals in canonical form (lowest terms, positive
denominator).  The win over the fallback comes from typed loops plus
Henrici-style multiply/add fast paths on the Fraction slots, which keep the
gcd arguments small instead of normalizing full products.
"""

from fractions import Fraction
from math import gcd

cdef object FR = Fraction
cdef object _onew = object.__new__


cdef inline object _frac(object n, object d):
    out = _onew(FR)
    out._numerator = n
    out._denominator = d
    return out


cdef inline object fmul(object a, object b):
    # canonical inputs in, canonical output out (classic cross-reduction)
    cdef object na = a._numerator
    cdef object da = a._denominator
    cdef object nb = b._numerator
    cdef object db = b._denominator
    g1 = gcd(na, db)
    if g1 > 1:
        na = na // g1
        db = db // g1
    g2 = gcd(nb, da)
    if g2 > 1:
        nb = nb // g2
        da = da // g2
    return _frac(na * nb, da * db)


cdef inline object fadd(object a, object b):
    cdef object na = a._numerator
    cdef object da = a._denominator
    cdef object nb = b._numerator
    cdef object db = b._denominator
    g = gcd(da, db)
    if g == 1:
        return _frac(na * db + nb * da, da * db)
    s = da // g
    t = na * (db // g) + nb * s
    g2 = gcd(t, g)
    if g2 == 1:
        return _frac(t, s * db)
    return _frac(t // g2, s * (db // g2))


cdef inline tuple _madd(tuple a, tuple b):
    cdef Py_ssize_t la = len(a), lb = len(b), i
    if la == 0:
        return b
    if lb == 0:
        return a
    if la < lb:
        a, b = b, a
        la, lb = lb, la
    out = list(a)
    for i in range(lb):
        out[i] = out[i] + b[i]
    return tuple(out)


def coeff_mul(dict ca, dict cb):
    """Multiply two coefficient maps {m-exponents: Fraction}."""
    cdef dict out = {}
    for ma, qa in ca.items():
        for mb, qb in cb.items():
            m = _madd(<tuple> ma, <tuple> mb)
            q = fmul(qa, qb)
            s = out.get(m)
            if s is None:
                out[m] = q
            else:
                s = fadd(s, q)
                if s._numerator:
                    out[m] = s
                else:
                    del out[m]
    return out


def convolve(dict a, dict b, cap):
    """Truncated product of {t-exponents: coeff map} tables."""
    cdef dict out = {}
    cdef dict tgt, cb
    cdef Py_ssize_t da, db, i, n
    cdef bint capped = cap is not None
    cdef Py_ssize_t icap = cap if capped else 0
    cdef list bitems = []
    for tb, cbv in b.items():
        db = 0
        for x in <tuple> tb:
            db += <Py_ssize_t> x
        bitems.append((tb, db, cbv))
    for ta, cav in a.items():
        da = 0
        for x in <tuple> ta:
            da += <Py_ssize_t> x
        ca_items = list((<dict> cav).items())
        for tb, dbo, cbv in bitems:
            db = <Py_ssize_t> dbo
            if capped and da + db > icap:
                continue
            n = len(<tuple> ta)
            t = tuple([(<tuple> ta)[i] + (<tuple> tb)[i] for i in range(n)])
            tgt = <dict> out.get(t)
            if tgt is None:
                tgt = {}
                out[t] = tgt
            cb = <dict> cbv
            for ma, qa in ca_items:
                for mb, qb in cb.items():
                    m = _madd(<tuple> ma, <tuple> mb)
                    q = fmul(qa, qb)
                    s = tgt.get(m)
                    if s is None:
                        tgt[m] = q
                    else:
                        s = fadd(s, q)
                        if s._numerator:
                            tgt[m] = s
                        else:
                            del tgt[m]
    for t in [t for t, c in out.items() if not (<dict> c)]:
        del out[t]
    return out
