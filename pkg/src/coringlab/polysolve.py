"""Exact solving of polynomial systems over Q and over number fields.

The entry points return *provably complete* answers whenever the variety is
finite (lex Groebner basis, then triangular enumeration by rational root
extraction).  For infinite varieties the solver either certifies emptiness
over the rationals (a generator that is positive definite on real space) or
falls back to deterministic slicing of the free variables, flagged as
incomplete.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import sympy

from .fields import QQ
from .poly import Poly, field_point, rationalize_system

_GRID = (0, 1, -1, 2, -2, 3, -3)
_MAX_SLICES = 343


class SolveResult:
    __slots__ = ("points", "complete", "certificate")

    def __init__(self, points, complete, certificate):
        self.points = points
        self.complete = complete
        self.certificate = certificate

    def __repr__(self):
        return "SolveResult(%d points, complete=%s, %r)" % (
            len(self.points),
            self.complete,
            self.certificate,
        )


class _NotZeroDimensional(Exception):
    pass


# ---------------------------------------------------------------------------
# univariate rational roots


def rational_roots_q(coeffs):
    """All rational roots of a univariate polynomial, constant term first."""
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        raise ValueError("zero polynomial has every root")
    roots = set()
    while cs[0] == 0:
        roots.add(Fraction(0))
        cs = cs[1:]
        if len(cs) == 1:
            break
    if len(cs) > 1:
        lcm = 1
        for c in cs:
            lcm = lcm * c.denominator // _gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in cs]
        g = 0
        for v in ints:
            g = _gcd(g, abs(v))
        ints = [v // g for v in ints]
        a0, an = abs(ints[0]), abs(ints[-1])
        for p in _divisors(a0):
            for q in _divisors(an):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if cand in roots:
                        continue
                    acc = Fraction(0)
                    for c in reversed(ints):
                        acc = acc * cand + c
                    if acc == 0:
                        roots.add(cand)
    return sorted(roots)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


# ---------------------------------------------------------------------------
# sympy bridge


def _to_sympy(p, syms):
    expr = sympy.Integer(0)
    for e, c in p.terms.items():
        q = c.coeffs[0]
        term = sympy.Rational(q.numerator, q.denominator)
        for i, k in enumerate(e):
            if k:
                term *= syms[i] ** k
        expr += term
    return expr


def _groebner(exprs, syms):
    live = [sympy.expand(e) for e in exprs]
    live = [e for e in live if e != 0]
    if not live:
        return None
    return sympy.groebner(live, *syms, order="lex", domain="QQ")


def _covered_vars(gb, syms):
    """Variables owning a pure-power leading monomial (lex)."""
    covered = set()
    for p in gb.polys:
        lead = p.monoms(order="lex")[0]
        nz = [i for i, k in enumerate(lead) if k]
        if len(nz) == 1:
            covered.add(nz[0])
    return covered


def _is_trivial(gb):
    return len(gb.exprs) == 1 and gb.exprs[0] == 1


def _enumerate_rational(exprs, syms):
    """All rational points of a finite variety; raises when not finite."""
    live = [sympy.expand(e) for e in exprs]
    live = [e for e in live if e != 0]
    if not syms:
        return [()] if not live else []
    if not live:
        raise _NotZeroDimensional()
    gb = sympy.groebner(live, *syms, order="lex", domain="QQ")
    if _is_trivial(gb):
        return []
    last = syms[-1]
    unis = [e for e in gb.exprs if e.free_symbols <= {last}]
    if not unis:
        raise _NotZeroDimensional()
    upoly = sympy.Poly(unis[0], last, domain="QQ")
    coeffs = [Fraction(c.p, c.q) for c in reversed(upoly.all_coeffs())]
    points = []
    for r in rational_roots_q(coeffs):
        rs = sympy.Rational(r.numerator, r.denominator)
        reduced = [e.subs(last, rs) for e in gb.exprs]
        for pt in _enumerate_rational(reduced, syms[:-1]):
            points.append(pt + (r,))
    return points


def _definite_generator(gb_exprs, syms):
    """A generator that is strictly positive on all of real space, if one is
    visible: even exponents throughout, all coefficients of one sign, and a
    nonzero constant term of that sign."""
    for e in gb_exprs:
        p = sympy.Poly(sympy.expand(e), *syms, domain="QQ")
        terms = p.terms()
        if not terms:
            continue
        const = None
        signs = set()
        even = True
        for mono, c in terms:
            if any(k % 2 for k in mono):
                even = False
                break
            signs.add(1 if c > 0 else -1)
            if not any(mono):
                const = c
        if even and const is not None and len(signs) == 1:
            return e
    return None


# ---------------------------------------------------------------------------
# public API


def rational_points(polys, nvars):
    """Rational solutions of a system of Poly over Q.

    Returns a :class:`SolveResult`; ``complete`` is True when the point list
    is provably the full set of rational solutions.
    """
    for p in polys:
        if p.field is not QQ:
            raise ValueError("rational_points expects polynomials over Q")
        if p.nvars != nvars:
            raise ValueError("variable count mismatch")
    syms = sympy.symbols("u0:%d" % nvars) if nvars else ()
    exprs = [_to_sympy(p, syms) for p in polys]
    if nvars == 0:
        ok = all(e == 0 for e in exprs)
        return SolveResult([()] if ok else [], True, "constant system")
    gb = _groebner(exprs, syms)
    if gb is None:
        # no constraints at all: slice everything
        return _sliced(exprs, syms, set(), nvars)
    if _is_trivial(gb):
        return SolveResult([], True, "inconsistent")
    covered = _covered_vars(gb, syms)
    if len(covered) == nvars:
        pts = sorted(_enumerate_rational(gb.exprs, syms))
        return SolveResult(pts, True, "finite variety")
    witness = _definite_generator(list(gb.exprs) + exprs, syms)
    if witness is not None:
        return SolveResult([], True, "definite generator: %s" % witness)
    return _sliced(list(gb.exprs), syms, covered, nvars)


def _sliced(exprs, syms, covered, nvars):
    free = [i for i in range(nvars) if i not in covered]
    combos = itertools.product(_GRID, repeat=len(free))
    points = set()
    used = 0
    for combo in itertools.islice(combos, _MAX_SLICES):
        used += 1
        sub = [
            e.subs([(syms[i], sympy.Integer(v)) for i, v in zip(free, combo)])
            for e in exprs
        ]
        rest = [syms[i] for i in range(nvars) if i not in free]
        try:
            partial = _enumerate_rational(sub, tuple(rest))
        except _NotZeroDimensional:
            continue
        for pt in partial:
            full = [None] * nvars
            others = [i for i in range(nvars) if i not in free]
            for i, v in zip(free, combo):
                full[i] = Fraction(v)
            for i, v in zip(others, pt):
                full[i] = v
            points.add(tuple(full))
    return SolveResult(
        sorted(points),
        False,
        "sliced %d free variables over %d assignments" % (len(free), used),
    )


def field_points(polys, field, nvars):
    """All K-rational solutions of a system over the number field K."""
    if field is QQ:
        res = rational_points(polys, nvars)
        pts = [tuple(QQ.scalar(q) for q in pt) for pt in res.points]
        return SolveResult(pts, res.complete, res.certificate)
    rat = rationalize_system(polys, field)
    res = rational_points(rat, nvars * field.abs_degree)
    pts = [field_point(pt, field, nvars) for pt in res.points]
    return SolveResult(pts, res.complete, res.certificate)


def field_poly_roots(coeffs, field):
    """Roots in K of a univariate polynomial with K coefficients
    (constant term first).  Always complete: the variety is finite."""
    coeffs = [field.scalar(c) for c in coeffs]
    if all(c.is_zero() for c in coeffs):
        raise ValueError("zero polynomial")
    if field is QQ:
        return [QQ.scalar(r) for r in rational_roots_q([c.coeffs[0] for c in coeffs])]
    p = Poly(field, 1, {})
    x = Poly.variable(field, 1, 0)
    for k, c in enumerate(coeffs):
        p = p + Poly.const(field, 1, c) * x**k
    res = field_points([p], field, 1)
    if not res.complete:
        raise RuntimeError("root search unexpectedly incomplete")
    return sorted((pt[0] for pt in res.points), key=field.to_qvec)


def quartic_splits(coeffs, field):
    """Whether a monic squarefree quartic factors into two monic quadratics
    over K.  (Linear factors are assumed to have been ruled out already.)"""
    cs = [field.scalar(c) for c in coeffs]
    if len(cs) != 5 or not (cs[4] - field.one()).is_zero():
        raise ValueError("expected a monic quartic")
    d, c, b, a = cs[0], cs[1], cs[2], cs[3]
    # (x^2 + p x + q)(x^2 + r x + s)
    P = [Poly.variable(field, 4, i) for i in range(4)]
    p_, q_, r_, s_ = P
    eqs = [
        p_ + r_ - Poly.const(field, 4, a),
        q_ + s_ + p_ * r_ - Poly.const(field, 4, b),
        p_ * s_ + q_ * r_ - Poly.const(field, 4, c),
        q_ * s_ - Poly.const(field, 4, d),
    ]
    res = field_points(eqs, field, 4)
    if not res.complete:
        raise RuntimeError("quartic factor search unexpectedly incomplete")
    return bool(res.points)
