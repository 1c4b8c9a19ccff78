"""Pure-Python fraction-free row reduction over Q.

This is the fallback implementation of the row-reduction kernel; the
compiled module ``_rrefc`` implements exactly the same contract.  Rows are
scaled to primitive integer vectors and eliminated with exact integer
cross-multiplication, so no intermediate Fraction arithmetic happens in the
inner loop.
"""

from fractions import Fraction
from math import gcd

BACKEND = "python"


def _to_int_row(raw, ncols):
    den = 1
    for x in raw:
        if isinstance(x, Fraction) and x.denominator != 1:
            den = den * x.denominator // gcd(den, x.denominator)
    if den == 1:
        row = [int(x) for x in raw]
    else:
        row = [int(x * den) for x in raw]
    if len(row) != ncols:
        raise ValueError("row has length %d, expected %d" % (len(row), ncols))
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        row = [x // g for x in row]
    return row


def _strip(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return
    if g > 1:
        for i, x in enumerate(row):
            row[i] = x // g


def rref_fractions(rows, ncols):
    """Reduced row echelon form over Q.

    ``rows`` is an iterable of length-``ncols`` sequences of Fraction/int.
    Returns ``(rref_rows, pivot_cols)`` where ``rref_rows`` are leading-1
    Fraction rows sorted by pivot column.  The output is canonical: two row
    sets span the same subspace iff the outputs are equal.
    """
    pivots = {}
    for raw in rows:
        row = _to_int_row(raw, ncols)
        c = 0
        lead = -1
        while c < ncols:
            x = row[c]
            if x:
                pr = pivots.get(c)
                if pr is None:
                    lead = c
                    break
                g = gcd(pr[c], x)
                a = pr[c] // g
                b = x // g
                row[c:] = [a * u - b * v for u, v in zip(row[c:], pr[c:])]
            c += 1
        if lead < 0:
            continue
        _strip(row)
        if row[lead] < 0:
            row[lead:] = [-x for x in row[lead:]]
        pivots[lead] = row
    cols = sorted(pivots)
    for k in range(len(cols) - 1, 0, -1):
        c = cols[k]
        pr = pivots[c]
        for m in range(k):
            r2 = pivots[cols[m]]
            x = r2[c]
            if x:
                g = gcd(pr[c], x)
                a = pr[c] // g
                b = x // g
                r2[:] = [a * u - b * v for u, v in zip(r2, pr)]
                _strip(r2)
                if r2[cols[m]] < 0:
                    r2[:] = [-u for u in r2]
    out = []
    for c in cols:
        row = pivots[c]
        p = row[c]
        out.append([Fraction(x, p) for x in row])
    return out, cols
