# cython: boundscheck=False, wraparound=False
"""Compiled fraction-free row reduction over Q.

Same contract as ``_rrefpy.rref_fractions``; integers stay Python ints (they
can exceed machine words during elimination), the win comes from typed index
loops and no interpreter dispatch in the elimination kernel.
"""

from fractions import Fraction
from math import gcd

BACKEND = "compiled"


cdef list _to_int_row(raw, Py_ssize_t ncols):
    cdef Py_ssize_t i
    den = 1
    for x in raw:
        if isinstance(x, Fraction):
            d = (<object>x).denominator
            if d != 1:
                den = den * d // gcd(den, d)
    cdef list row
    if den == 1:
        row = [int(x) for x in raw]
    else:
        row = [int(x * den) for x in raw]
    if len(row) != ncols:
        raise ValueError("row has length %d, expected %d" % (len(row), ncols))
    g = 0
    for i in range(ncols):
        x = row[i]
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        for i in range(ncols):
            row[i] = row[i] // g
    return row


cdef void _strip(list row):
    cdef Py_ssize_t i, n = len(row)
    g = 0
    for i in range(n):
        x = row[i]
        if x:
            g = gcd(g, x)
            if g == 1:
                return
    if g > 1:
        for i in range(n):
            row[i] = row[i] // g


cdef void _combine(list row, list pr, Py_ssize_t start, a, b):
    # row[j] = a*row[j] - b*pr[j] for j >= start
    cdef Py_ssize_t j, n = len(row)
    if a == 1:
        for j in range(start, n):
            v = pr[j]
            if v:
                row[j] = row[j] - b * v
              # else untouched
    else:
        for j in range(start, n):
            row[j] = a * row[j] - b * pr[j]


def rref_fractions(rows, ncols):
    """Reduced row echelon form over Q; see the pure backend for the contract."""
    cdef dict pivots = {}
    cdef Py_ssize_t c, lead, n = ncols, k, m
    cdef list row, pr, r2
    for raw in rows:
        row = _to_int_row(raw, n)
        c = 0
        lead = -1
        while c < n:
            x = row[c]
            if x:
                pr = <list> pivots.get(c)
                if pr is None:
                    lead = c
                    break
                g = gcd(pr[c], x)
                a = pr[c] // g
                b = x // g
                _combine(row, pr, c, a, b)
            c += 1
        if lead < 0:
            continue
        _strip(row)
        if row[lead] < 0:
            for c in range(lead, n):
                row[c] = -row[c]
        pivots[lead] = row
    cdef list cols = sorted(pivots)
    for k in range(len(cols) - 1, 0, -1):
        c = cols[k]
        pr = <list> pivots[c]
        for m in range(k):
            r2 = <list> pivots[cols[m]]
            x = r2[c]
            if x:
                g = gcd(pr[c], x)
                a = pr[c] // g
                b = x // g
                _combine(r2, pr, 0, a, b)
                _strip(r2)
                if r2[<Py_ssize_t> cols[m]] < 0:
                    for c2 in range(n):
                        r2[c2] = -r2[c2]
                c = cols[k]
    out = []
    for c in cols:
        row = <list> pivots[c]
        p = row[c]
        out.append([Fraction(x, p) for x in row])
    return out, list(cols)
