"""Sparse multivariate polynomials with number-field coefficients.

Terms are stored as ``{exponent tuple: ExactScalar}``.  This is deliberately
small: enough for building polynomial systems (which are then solved in
:mod:`coringlab.polysolve`) and for symbolic determinants of small matrices.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import QQ


class Poly:
    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field, nvars, terms):
        self.field = field
        self.nvars = nvars
        clean = {}
        for e, c in terms.items():
            c = field.scalar(c)
            if not c.is_zero():
                if len(e) != nvars:
                    raise ValueError("exponent tuple of wrong length")
                clean[tuple(int(x) for x in e)] = c
        self.terms = clean

    @classmethod
    def const(cls, field, nvars, value):
        return cls(field, nvars, {(0,) * nvars: field.scalar(value)})

    @classmethod
    def variable(cls, field, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(field, nvars, {tuple(e): field.one()})

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * self.nvars, self.field.zero())

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        return Poly.const(self.field, self.nvars, other)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and other.field is self.field
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.field.label, self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return Poly(self.field, self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                out[e] = out[e] + c if e in out else c
        return Poly(self.field, self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        out = Poly.const(self.field, self.nvars, 1)
        for _ in range(n):
            out = out * self
        return out

    def evaluate(self, values):
        acc = self.field.zero()
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    term = term * values[i] ** k
            acc = acc + term
        return acc

    def substitute(self, values):
        """Evaluate with Poly arguments (polynomial composition)."""
        if not values:
            tgt_field, tgt_nvars = self.field, 0
        else:
            tgt_field, tgt_nvars = values[0].field, values[0].nvars
        acc = Poly(tgt_field, tgt_nvars, {})
        for e, c in self.terms.items():
            term = Poly.const(tgt_field, tgt_nvars, c)
            for i, k in enumerate(e):
                for _ in range(k):
                    term = term * values[i]
            acc = acc + term
        return acc

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, key=lambda t: (sum(t), t), reverse=True):
            mono = "*".join(
                "x%d" % i if k == 1 else "x%d^%d" % (i, k)
                for i, k in enumerate(e)
                if k
            )
            c = repr(self.terms[e])
            bits.append("(%s)%s" % (c, "*" + mono if mono else ""))
        return " + ".join(bits)


def rationalize_system(polys, field):
    """Restrict scalars: rewrite polynomials over K as polynomials over Q.

    Each K-variable ``x_t`` is replaced by ``sum_r mu_r * u_{t*m+r}`` with
    ``mu_r`` the absolute Q-basis of K, and every equation is split into its
    ``m`` rational coordinates.  A K-point of the original system is exactly
    the image of a rational point of the new system (and conversely), so
    rational solving of the output finds *all* K-points of the input.
    """
    if not polys:
        return []
    nvars = polys[0].nvars
    m = field.abs_degree
    mus = field.qbasis_elements()
    substs = []
    for t in range(nvars):
        s = Poly(field, nvars * m, {})
        for r in range(m):
            s = s + Poly.variable(field, nvars * m, t * m + r) * Poly.const(
                field, nvars * m, mus[r]
            )
        substs.append(s)
    out = []
    for p in polys:
        q = p.substitute(substs)
        comps = [{} for _ in range(m)]
        for e, c in q.terms.items():
            qc = field.to_qvec(c)
            for r in range(m):
                if qc[r]:
                    comps[r][e] = QQ.scalar(qc[r])
        for comp in comps:
            rp = Poly(QQ, nvars * m, comp)
            if not rp.is_zero():
                out.append(rp)
    return out


def field_point(qpoint, field, nvars):
    """Reassemble a rational point of the restricted system into K-scalars."""
    m = field.abs_degree
    return tuple(
        field.from_qvec([Fraction(qpoint[t * m + r]) for r in range(m)])
        for t in range(nvars)
    )


def symbolic_det(rows):
    """Determinant of a square matrix of Poly entries (cofactor expansion,
    memoized on the active row set)."""
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    field = rows[0][0].field
    nvars = rows[0][0].nvars
    cache = {}

    def minor(rowset, col):
        if not rowset:
            return Poly.const(field, nvars, 1)
        key = (rowset, col)
        if key in cache:
            return cache[key]
        acc = Poly(field, nvars, {})
        sign = 1
        for idx, i in enumerate(rowset):
            entry = rows[i][col]
            if not entry.is_zero():
                rest = rowset[:idx] + rowset[idx + 1 :]
                sub = minor(rest, col + 1)
                term = entry * sub
                acc = acc + (term if sign > 0 else -term)
            sign = -sign
        cache[key] = acc
        return acc

    return minor(tuple(range(n)), 0)
