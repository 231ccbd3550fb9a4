"""Pure-Python sparse convolution kernel.

This is the hot inner loop of the whole engine: truncated multiplication of
two-level sparse maps {t-exponents: {m-exponents: Fraction}}.  A Cython
twin with identical semantics lives in ``_convolve_c.pyx``; ``kernels``
picks whichever is importable.
"""


def _madd(a, b):
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    la = list(a)
    for i, x in enumerate(b):
        la[i] += x
    return tuple(la)


def coeff_mul(ca, cb):
    """Multiply two coefficient maps {m-exponents: Fraction}."""
    out = {}
    for ma, qa in ca.items():
        for mb, qb in cb.items():
            m = _madd(ma, mb)
            q = qa * qb
            s = out.get(m)
            if s is None:
                out[m] = q
            else:
                s = s + q
                if s:
                    out[m] = s
                else:
                    del out[m]
    return out


def convolve(a, b, cap):
    """Truncated product of {t-exponents: coeff map} tables.

    Products of total t-degree above ``cap`` are dropped; pass None for no
    truncation.  Zero coefficient maps never appear in the result.
    """
    out = {}
    bitems = [(tb, sum(tb), cb) for tb, cb in b.items()]
    for ta, ca in a.items():
        da = sum(ta)
        ca_items = list(ca.items())
        for tb, db, cb in bitems:
            if cap is not None and da + db > cap:
                continue
            t = tuple(x + y for x, y in zip(ta, tb))
            tgt = out.get(t)
            if tgt is None:
                tgt = out[t] = {}
            for ma, qa in ca_items:
                for mb, qb in cb.items():
                    m = _madd(ma, mb)
                    q = qa * qb
                    s = tgt.get(m)
                    if s is None:
                        tgt[m] = q
                    else:
                        s = s + q
                        if s:
                            tgt[m] = s
                        else:
                            del tgt[m]
    for t in [t for t, c in out.items() if not c]:
        del out[t]
    return out
