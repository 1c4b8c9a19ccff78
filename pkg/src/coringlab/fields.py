"""Exact arithmetic in towers of number fields over Q.

A field is either Q itself or an extension of an existing field by a monic
polynomial that is checked (or declared) irreducible.  Elements are immutable
coefficient vectors in the power basis of the top step; the coefficients live
in the field one step down, so a tower never flattens until a caller asks for
absolute (restriction-of-scalars) coordinates.

All arithmetic is exact: rationals are `fractions.Fraction`, inverses come
from the extended Euclidean algorithm on polynomials, and equality is
coefficient-wise.  No floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class FieldError(ValueError):
    pass


class ReduciblePolynomial(FieldError):
    """Raised when a proposed minimal polynomial factors over the base."""


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise FieldError("cannot coerce %r to a rational" % (x,))


class ExactScalar:
    """Immutable element of a :class:`NumberField`.

    ``coeffs`` is a tuple in the power basis of the top extension step: for Q
    it holds a single Fraction, for an extension it holds ExactScalars of the
    base field.
    """

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = tuple(coeffs)
        self._hash = None
        if len(self.coeffs) != field.degree:
            raise FieldError("coefficient vector has wrong length")

    # -- basic protocol ------------------------------------------------

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((id(self.field), self.coeffs))
        return self._hash

    def __eq__(self, other):
        if isinstance(other, ExactScalar) and other.field is self.field:
            return self.coeffs == other.coeffs
        if isinstance(other, (ExactScalar, int, Fraction)):
            try:
                return self.coeffs == self.field.scalar(other).coeffs
            except FieldError:
                return False
        return NotImplemented

    def __bool__(self):
        return not self.is_zero()

    def is_zero(self):
        if self.field.base is None:
            return self.coeffs[0] == 0
        return all(c.is_zero() for c in self.coeffs)

    def is_rational(self):
        if self.field.base is None:
            return True
        return self.coeffs[0].is_rational() and all(
            c.is_zero() for c in self.coeffs[1:]
        )

    def rational_value(self):
        """The element as a Fraction; raises if it is not rational."""
        if self.field.base is None:
            return self.coeffs[0]
        if not all(c.is_zero() for c in self.coeffs[1:]):
            raise FieldError("%s is not rational" % self)
        return self.coeffs[0].rational_value()

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, ExactScalar) and other.field is self.field:
            return other
        return self.field.scalar(other)

    def __add__(self, other):
        other = self._coerce(other)
        return ExactScalar(
            self.field, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar(self.field, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        return ExactScalar(
            self.field, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        F = self.field
        if F.base is None:
            return ExactScalar(F, (self.coeffs[0] * other.coeffs[0],))
        d = F.degree
        a, b = self.coeffs, other.coeffs
        zero = F.base.zero()
        prod = [zero] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai.is_zero():
                continue
            for j, bj in enumerate(b):
                if bj.is_zero():
                    continue
                prod[i + j] = prod[i + j] + ai * bj
        out = list(prod[:d])
        for e in range(d, 2 * d - 1):
            c = prod[e]
            if c.is_zero():
                continue
            row = F._high_power(e)
            for j in range(d):
                if not row[j].is_zero():
                    out[j] = out[j] + c * row[j]
        return ExactScalar(F, out)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via extended gcd against the minimal
        polynomial; exact in any tower."""
        F = self.field
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in %s" % F.label)
        if F.base is None:
            return ExactScalar(F, (1 / self.coeffs[0],))
        g, s, _ = _poly_xgcd(list(self.coeffs), list(F.min_poly), F.base)
        # g is a nonzero constant since min_poly is irreducible
        ginv = g[0].inverse()
        inv = [c * ginv for c in s]
        inv += [F.base.zero()] * (F.degree - len(inv))
        return ExactScalar(F, inv[: F.degree])

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- presentation --------------------------------------------------

    def __repr__(self):
        return self._pretty()

    def _pretty(self):
        F = self.field
        if F.base is None:
            return str(self.coeffs[0])
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            cs = c._pretty()
            if i == 0:
                parts.append(cs)
            else:
                gen = F.gen_label if i == 1 else "%s^%d" % (F.gen_label, i)
                if cs == "1":
                    parts.append(gen)
                elif cs == "-1":
                    parts.append("-" + gen)
                elif ("+" in cs[1:]) or ("-" in cs[1:]) or (" " in cs):
                    parts.append("(%s)*%s" % (cs, gen))
                else:
                    parts.append("%s*%s" % (cs, gen))
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


def _poly_trim(p):
    while p and p[-1].is_zero():
        p.pop()
    return p


def _poly_divmod(num, den, field):
    """Division with remainder for coefficient lists over ``field``."""
    num = list(num)
    q = [field.zero()] * max(0, len(num) - len(den) + 1)
    inv_lead = den[-1].inverse()
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1] * inv_lead
        if c.is_zero():
            continue
        q[i] = c
        for j, d in enumerate(den):
            num[i + j] = num[i + j] - c * d
    return q, _poly_trim(num)


def _poly_xgcd(a, b, field):
    """Extended gcd of coefficient lists: g, s, t with s*a + t*b = g."""
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    s0, s1 = [field.one()], []
    t0, t1 = [], [field.one()]
    while b:
        q, r = _poly_divmod(a, b, field)
        a, b = b, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1, field), field)
        t0, t1 = t1, _poly_sub(t0, _poly_mul(q, t1, field), field)
    return a, s0, t0


def _poly_mul(a, b, field):
    if not a or not b:
        return []
    out = [field.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _poly_trim(out)


def _poly_sub(a, b, field):
    n = max(len(a), len(b))
    z = field.zero()
    out = [(a[i] if i < len(a) else z) - (b[i] if i < len(b) else z) for i in range(n)]
    return _poly_trim(out)


def _poly_derivative(p, field):
    return _poly_trim([p[i] * field.scalar(i) for i in range(1, len(p))])


class NumberField:
    """A step in a tower of number fields over Q.

    Use the module-level ``QQ`` for the rationals and :meth:`extend` to climb.
    Field objects are compared by identity; presets are cached so that the
    same preset name always yields the same object.
    """

    def __init__(self, base, min_poly, gen_label, label=None):
        self.base = base  # None for Q
        self.min_poly = min_poly  # monic, constant first, includes leading 1
        self.gen_label = gen_label
        if base is None:
            self.degree = 1
            self.abs_degree = 1
            self.label = label or "Q"
        else:
            self.degree = len(min_poly) - 1
            self.abs_degree = self.degree * base.abs_degree
            self.label = label or "%s(%s)" % (base.label, gen_label)
        self._zero = None
        self._one = None
        self._high = {}

    def __repr__(self):
        return "NumberField(%s)" % self.label

    # -- element constructors -----------------------------------------

    def zero(self):
        if self._zero is None:
            if self.base is None:
                self._zero = ExactScalar(self, (Fraction(0),))
            else:
                self._zero = ExactScalar(self, (self.base.zero(),) * self.degree)
        return self._zero

    def one(self):
        if self._one is None:
            self._one = self.scalar(1)
        return self._one

    def scalar(self, x):
        """Coerce ``x`` (int, Fraction, 'p/q' string, or an element of any
        field lower in this tower) into this field."""
        if isinstance(x, ExactScalar):
            if x.field is self:
                return x
            if self.base is not None:
                lifted = self.base.scalar(x)
                coeffs = [lifted] + [self.base.zero()] * (self.degree - 1)
                return ExactScalar(self, coeffs)
            raise FieldError(
                "cannot coerce element of %s into %s" % (x.field.label, self.label)
            )
        q = _as_fraction(x)
        if self.base is None:
            return ExactScalar(self, (q,))
        coeffs = [self.base.scalar(q)] + [self.base.zero()] * (self.degree - 1)
        return ExactScalar(self, coeffs)

    def gen(self):
        if self.base is None:
            raise FieldError("Q has no generator")
        coeffs = [self.base.zero()] * self.degree
        coeffs[1 if self.degree > 1 else 0] = self.base.one()
        if self.degree == 1:
            # degenerate linear extension; the generator is rational
            return ExactScalar(self, (-self.min_poly[0],))
        return ExactScalar(self, coeffs)

    def element(self, coeffs):
        return ExactScalar(self, [self.base_scalar(c) for c in coeffs])

    def base_scalar(self, c):
        if self.base is None:
            return _as_fraction(c) if not isinstance(c, ExactScalar) else c.rational_value()
        return self.base.scalar(c)

    # -- reduction data ------------------------------------------------

    def _high_power(self, e):
        """theta^e (degree <= e <= 2*degree-2) as a basis coefficient row."""
        row = self._high.get(e)
        if row is not None:
            return row
        d = self.degree
        if e == d:
            row = tuple(-c for c in self.min_poly[:d])
        else:
            prev = self._high_power(e - 1)
            shifted = [self.base.zero()] + list(prev[: d - 1])
            top = prev[d - 1]
            red = self._high_power(d)
            row = tuple(
                shifted[j] + top * red[j] for j in range(d)
            )
        self._high[e] = row
        return row

    # -- tower extension ----------------------------------------------

    def extend(self, min_poly, gen_label, irreducible=None, label=None):
        """Extend by a monic polynomial (constant-first coefficient list,
        leading coefficient included and equal to 1).

        Irreducibility is decided mechanically for degrees <= 4 (squarefree
        check, exact root search, and for degree 4 a quadratic-split search);
        higher degrees must pass ``irreducible=True`` explicitly.
        """
        poly = [self.scalar(c) for c in min_poly]
        if len(poly) < 3:
            raise FieldError("extension degree must be at least 2")
        if poly[-1] != self.one():
            raise FieldError("minimal polynomial must be monic")
        deg = len(poly) - 1
        if irreducible is None:
            if deg > 4:
                raise FieldError(
                    "irreducibility check implemented only for degree <= 4; "
                    "pass irreducible=True to assert it"
                )
            if not self._is_irreducible(poly):
                raise ReduciblePolynomial(
                    "polynomial is reducible over %s" % self.label
                )
        return NumberField(self, tuple(poly), gen_label, label=label)

    def _is_irreducible(self, poly):
        deg = len(poly) - 1
        g, _, _ = _poly_xgcd(poly, _poly_derivative(poly, self), self)
        if len(g) > 1:
            return False  # repeated factor
        if self.roots_in_field(poly):
            return False
        if deg == 4 and _has_quadratic_split(poly, self):
            return False
        return True

    def roots_in_field(self, poly):
        """All roots of ``poly`` lying in this field, exactly."""
        from . import polysolve

        return polysolve.field_poly_roots(poly, self)

    # -- absolute (restriction of scalars) coordinates ----------------

    def to_qvec(self, x):
        """Flatten an element to absolute rational coordinates."""
        if self.base is None:
            return [x.coeffs[0]]
        out = []
        for c in x.coeffs:
            out.extend(self.base.to_qvec(c))
        return out

    def from_qvec(self, vec):
        if self.base is None:
            return ExactScalar(self, (_as_fraction(vec[0]),))
        m = self.base.abs_degree
        coeffs = [
            self.base.from_qvec(vec[i * m : (i + 1) * m]) for i in range(self.degree)
        ]
        return ExactScalar(self, coeffs)

    def mult_qmatrix(self, x):
        """Matrix of multiplication by ``x`` on absolute coordinates,
        as a row-major list of Fraction rows."""
        n = self.abs_degree
        cols = []
        for j in range(n):
            unit = [Fraction(0)] * n
            unit[j] = Fraction(1)
            cols.append(self.to_qvec(x * self.from_qvec(unit)))
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def qbasis_elements(self):
        """The absolute basis monomials as field elements."""
        out = []
        for j in range(self.abs_degree):
            unit = [Fraction(0)] * self.abs_degree
            unit[j] = Fraction(1)
            out.append(self.from_qvec(unit))
        return out

    def describe(self):
        steps = []
        f = self
        while f.base is not None:
            steps.append(
                {
                    "gen": f.gen_label,
                    "min_poly": [str(c) for c in _qvec_rows(f)],
                }
            )
            f = f.base
        steps.reverse()
        return {"label": self.label, "tower": steps}


def _qvec_rows(f):
    # minimal polynomial coefficients flattened for display
    out = []
    for c in f.min_poly:
        out.append("+".join(str(q) for q in f.base.to_qvec(c)) if f.base else str(c))
    return out


def _has_quadratic_split(poly, field):
    """Does a monic quartic factor as two monic quadratics over ``field``?"""
    from . import polysolve

    return polysolve.quartic_splits(poly, field)


QQ = NumberField(None, (Fraction(0), Fraction(1)), "1", label="Q")


@lru_cache(maxsize=None)
def field_preset(name):
    """Ground-tower presets used by the CLI and the built-in instances."""
    if name == "Q":
        return QQ
    if name in ("Qi", "Qw4"):
        return QQ.extend([1, 0, 1], "i", label="Q(i)")
    if name == "Qw3":
        return QQ.extend([1, 1, 1], "w", label="Q(w3)")
    raise FieldError("unknown field preset %r" % name)


def root_of_unity(field, n):
    """A primitive n-th root of unity in the preset tower, for n in 1..4."""
    if n == 1:
        return field.one()
    if n == 2:
        return field.scalar(-1)
    if n == 3:
        if field.degree == 2 and field.gen_label == "w":
            return field.gen()
    if n == 4:
        if field.degree == 2 and field.gen_label == "i":
            return field.gen()
    raise FieldError("no primitive %d-th root of unity in %s" % (n, field.label))
