"""Corings over a field extension: axioms, coideals, quotients, grouplikes,
and convolution duals.

A coring is a bimodule carrier together with a comultiplication into the
tensor square over the base field and a counit into the base field, both
bimodule maps.  Everything is held in the sparse rational coordinates of
:mod:`coringlab.bimodules`; subspaces (coideals) are QSpans.

The coideal test uses the kernel identity for the projection to a quotient
tensor square: an element maps to zero under pi (x) pi exactly when it lies
in the image of J (x) C + C (x) J, so comultiplying a candidate generator
and projecting decides the coideal condition without ever materializing the
balancing span of the quotient.
"""

from __future__ import annotations

from fractions import Fraction

from .bimodules import (
    TensorOver, cm_apply, cm_compose, cm_eq, cm_to_dense_rows,
    quotient_module, regular_bimodule, svec_add_into, svec_clean,
    svec_eq, svec_from_dense, svec_to_dense,
)
from .fields import QQ
from .linalg import QSpan, qsolve, qspan_kernel
from .poly import Poly
from . import polysolve

_ONE = Fraction(1)


class NotACoideal(ValueError):
    """A candidate subspace fails one of the coideal conditions."""

    def __init__(self, message, generator_index=None):
        super().__init__(message)
        self.generator_index = generator_index


class CarrierTooLarge(ValueError):
    """Raised when a complete enumeration is only promised for small carriers."""


# ---------------------------------------------------------------------------
# the coring type


class Coring:
    """An A-coring in rational coordinates.

    ``carrier`` must be a two-sided bimodule; ``delta`` is a column map from
    carrier coordinates to the coordinates of carrier (x)_A carrier, and
    ``counit`` a column map to the absolute coordinates of A.
    """

    __slots__ = ("carrier", "tensor", "delta", "counit", "_areg")

    def __init__(self, carrier, delta, counit):
        if carrier.left is None or carrier.right is None:
            raise ValueError("coring carrier must be a two-sided bimodule")
        self.carrier = carrier
        self.tensor = TensorOver(carrier, carrier, carrier.ext)
        if len(delta) != carrier.qdim or len(counit) != carrier.qdim:
            raise ValueError("structure maps have the wrong number of columns")
        self.delta = delta
        self.counit = counit
        self._areg = None

    @property
    def base_field(self):
        return self.carrier.ext

    @property
    def ground(self):
        return self.carrier.ground

    @property
    def qdim(self):
        return self.carrier.qdim

    def base_regular(self):
        if self._areg is None:
            self._areg = regular_bimodule(self.carrier.ground, self.carrier.ext)
        return self._areg

    def counit_scalar(self, svec):
        """Counit value as a field element."""
        A = self.carrier.ext
        return A.from_qvec(svec_to_dense(cm_apply(self.counit, svec), A.abs_degree))


def check_coring(coring):
    """All violated coring identities, as human-readable strings (empty list
    means the axioms hold)."""
    failures = []
    car = coring.carrier
    T = coring.tensor
    Tm = T.module()
    pairs = [
        ("ground action", car.sigma, Tm.sigma),
        ("left action", car.left, Tm.left),
        ("right action", car.right, Tm.right),
    ]
    for name, opc, opt in pairs:
        if not cm_eq(cm_compose(coring.delta, opc), cm_compose(opt, coring.delta)):
            failures.append("comultiplication does not commute with the %s" % name)
    areg = coring.base_regular()
    epairs = [
        ("ground action", car.sigma, areg.sigma),
        ("left action", car.left, areg.left),
        ("right action", car.right, areg.right),
    ]
    for name, opc, opa in epairs:
        if not cm_eq(cm_compose(coring.counit, opc), cm_compose(opa, coring.counit)):
            failures.append("counit does not commute with the %s" % name)
    failures.extend(_counit_laws(coring))
    failures.extend(_coassociativity(coring))
    return failures


def assert_coring(coring):
    bad = check_coring(coring)
    if bad:
        raise ValueError("not a coring: " + bad[0])


def _counit_laws(coring):
    car = coring.carrier
    A = car.ext
    T = coring.tensor
    nq = car.qdim
    eps_m = []  # counit of each basis vector of the left tensor factor
    for b in T.mbasis:
        eps_m.append(A.from_qvec(svec_to_dense(cm_apply(coring.counit, b), A.abs_degree)))
    left_ops = [car.op_of("left", a) for a in eps_m]
    failures = []
    for u in range(nq):
        acc = {}
        for idx, c in coring.delta[u].items():
            w, u2 = divmod(idx, nq)
            svec_add_into(acc, left_ops[w][u2], c)
        if not svec_eq(acc, {u: _ONE}):
            failures.append("left counit law fails at coordinate %d" % u)
            break
    for u in range(nq):
        acc = {}
        for idx, c in coring.delta[u].items():
            w, u2 = divmod(idx, nq)
            a = A.from_qvec(svec_to_dense(coring.counit[u2], A.abs_degree))
            svec_add_into(acc, car.act("right", a, T.mbasis[w]), c)
        if not svec_eq(acc, {u: _ONE}):
            failures.append("right counit law fails at coordinate %d" % u)
            break
    return failures


def _coassociativity(coring):
    car = coring.carrier
    T = coring.tensor
    nq = car.qdim
    deg = car.ext.abs_degree
    sb, sphi = T.structural_basis()
    T3 = TensorOver(T.module(), car, car.ext, sb, sphi)
    dexp = [T3.expand(cm_apply(coring.delta, b)) for b in T.mbasis]
    shift = T.rank * nq  # block length of one left-factor basis vector of T3
    for u in range(nq):
        lhs = {}
        rhs = {}
        for idx, c in coring.delta[u].items():
            w, u2 = divmod(idx, nq)
            for wv, coeffs in dexp[w].items():
                acc = {}
                for t, q in enumerate(coeffs):
                    if q:
                        svec_add_into(acc, T3.mu[t][u2], q)
                svec_add_into(lhs, T3.place(wv, acc), c)
            for idx2, c2 in coring.delta[u2].items():
                svec_add_into(rhs, {w * shift + idx2: c2}, c)
        if not svec_eq(lhs, rhs):
            return ["coassociativity fails at coordinate %d" % u]
    return []


# ---------------------------------------------------------------------------
# maps between corings


class TensorMapper:
    """(f (x) g) between two tensor squares, applied to sparse vectors."""

    def __init__(self, tsrc, ttgt, f, g):
        self.tsrc = tsrc
        self.ttgt = ttgt
        self.g = g
        self.fexp = [ttgt.expand(cm_apply(f, b)) for b in tsrc.mbasis]

    def apply(self, tsvec):
        out = {}
        nq = self.tsrc.right_factor.qdim
        for idx, c in tsvec.items():
            w, u = divmod(idx, nq)
            gcol = self.g[u]
            for w2, coeffs in self.fexp[w].items():
                acc = {}
                for t, q in enumerate(coeffs):
                    if q:
                        svec_add_into(acc, cm_apply(self.ttgt.mu[t], gcol), q)
                svec_add_into(out, self.ttgt.place(w2, acc), c)
        return svec_clean(out)


def coring_morphism_failures(f, src, tgt):
    """Violated conditions for ``f`` (column map on carriers) to be a
    homomorphism of corings over the same base field."""
    failures = []
    pairs = [
        ("ground action", src.carrier.sigma, tgt.carrier.sigma),
        ("left action", src.carrier.left, tgt.carrier.left),
        ("right action", src.carrier.right, tgt.carrier.right),
    ]
    for name, ops, opt in pairs:
        if not cm_eq(cm_compose(f, ops), cm_compose(opt, f)):
            failures.append("map does not commute with the %s" % name)
    if not cm_eq(cm_compose(tgt.counit, f), src.counit):
        failures.append("map does not preserve the counit")
    ff = TensorMapper(src.tensor, tgt.tensor, f, f)
    for u in range(src.qdim):
        lhs = ff.apply(src.delta[u])
        rhs = cm_apply(tgt.delta, f[u])
        if not svec_eq(lhs, rhs):
            failures.append("map does not preserve the comultiplication (coordinate %d)" % u)
            break
    return failures


def is_coring_isomorphism(f, src, tgt):
    if src.qdim != tgt.qdim:
        return False
    if coring_morphism_failures(f, src, tgt):
        return False
    rows = cm_to_dense_rows(f, tgt.qdim)
    return QSpan.from_qrows(rows, src.qdim).dim == src.qdim


# ---------------------------------------------------------------------------
# coideals and quotient corings


class CoidealReport:
    """Per-generator certificates for the three coideal conditions."""

    def __init__(self, entries, span):
        self.entries = entries
        self.span = span

    @property
    def ok(self):
        return all(e["ok"] for e in self.entries)

    def first_failure(self):
        for e in self.entries:
            if not e["ok"]:
                return e
        return None


def _as_svecs(gens, qdim):
    out = []
    for g in gens:
        if isinstance(g, dict):
            out.append(svec_clean({i: Fraction(c) for i, c in g.items()}))
        else:
            if len(g) != qdim:
                raise ValueError("generator has the wrong length")
            out.append(svec_from_dense(g))
    return out


def check_coideal(coring, gens):
    """Check that the span of ``gens`` is a coideal; returns a report with
    one entry per generator."""
    car = coring.carrier
    qdim = car.qdim
    svecs = _as_svecs(gens, qdim)
    span = QSpan.from_qrows([svec_to_dense(v, qdim) for v in svecs], qdim)
    entries = []
    quot = pi = None
    mapper = None
    stable = True
    for gi, v in enumerate(svecs):
        entry = {"index": gi, "ok": True, "reason": None}
        for name, op in (("ground", car.sigma), ("left", car.left), ("right", car.right)):
            moved = svec_to_dense(cm_apply(op, v), qdim)
            if not span.contains(moved):
                entry["ok"] = False
                entry["reason"] = "span is not stable under the %s action" % name
                stable = False
                break
        if entry["ok"] and svec_clean(cm_apply(coring.counit, v)):
            entry["ok"] = False
            entry["reason"] = "counit does not vanish"
        entries.append(entry)
    if stable:
        quot, pi, _sect = quotient_module(car, span, check=False)
        qtensor = TensorOver(quot, quot, quot.ext)
        mapper = TensorMapper(coring.tensor, qtensor, pi, pi)
        for entry, v in zip(entries, svecs):
            if not entry["ok"]:
                continue
            if mapper.apply(cm_apply(coring.delta, v)):
                entry["ok"] = False
                entry["reason"] = "comultiplication does not descend to the quotient"
    return CoidealReport(entries, span)


class QuotientCoring:
    __slots__ = ("coring", "parent", "span", "pi", "section")

    def __init__(self, coring, parent, span, pi, section):
        self.coring = coring
        self.parent = parent
        self.span = span
        self.pi = pi
        self.section = section


def quotient_coring(parent, gens, verify=True):
    """Quotient of a coring by the coideal spanned by ``gens``.

    Raises :class:`NotACoideal` (with the offending generator index) when a
    coideal condition fails.
    """
    report = check_coideal(parent, gens)
    bad = report.first_failure()
    if bad is not None:
        raise NotACoideal(
            "generator %d: %s" % (bad["index"], bad["reason"]),
            generator_index=bad["index"],
        )
    span = report.span
    quot, pi, sect = quotient_module(parent.carrier, span, check=False)
    qtensor = TensorOver(quot, quot, quot.ext)
    mapper = TensorMapper(parent.tensor, qtensor, pi, pi)
    delta_q = []
    counit_q = []
    comp = span.complement_cols()
    for j in comp:
        delta_q.append(mapper.apply(parent.delta[j]))
        counit_q.append(dict(parent.counit[j]))
    out = Coring(quot, delta_q, counit_q)
    if verify:
        assert_coring(out)
    return QuotientCoring(out, parent, span, pi, sect)


# ---------------------------------------------------------------------------
# grouplike elements


def is_grouplike(coring, svec):
    """Delta(g) = g (x) g and counit(g) = 1, decided exactly."""
    lhs = cm_apply(coring.delta, svec)
    rhs = coring.tensor.project_pure(svec, svec)
    if not svec_eq(lhs, rhs):
        return False
    return coring.counit_scalar(svec) == coring.base_field.one()


class GrouplikeResult:
    def __init__(self, points, complete, certificate):
        self.points = points
        self.complete = complete
        self.certificate = certificate

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)


def grouplike_elements(coring, max_dim=8):
    """Solve Delta(g) = g (x) g, counit(g) = 1 in rational coordinates.

    Returns the rational points found, whether the list is provably the whole
    solution set, and the certificate string from the solver.  The carrier
    must have dimension at most ``max_dim`` over the ground field.
    """
    car = coring.carrier
    qdim = car.qdim
    if qdim // car.ground.abs_degree > max_dim:
        raise CarrierTooLarge(
            "grouplike search needs carrier dimension <= %d over the ground field"
            % max_dim
        )
    T = coring.tensor
    deg = car.ext.abs_degree
    A = car.ext
    # linear forms: phi-coordinates of g and the monomial actions applied to g
    phi_lin = [dict() for _ in range(qdim)]
    for j, col in enumerate(T.mphi_inv):
        for idx, q in col.items():
            phi_lin[idx][j] = phi_lin[idx].get(j, Fraction(0)) + q
    mu_lin = [[dict() for _ in range(qdim)] for _ in range(deg)]
    for t in range(deg):
        for j, col in enumerate(T.mu[t]):
            for r, q in col.items():
                mu_lin[t][r][j] = mu_lin[t][r].get(j, Fraction(0)) + q
    def lin_poly(form):
        return Poly(QQ, qdim, {tuple(1 if jj == j else 0 for jj in range(qdim)): QQ.scalar(q) for j, q in form.items()})
    phi_polys = [lin_poly(f) for f in phi_lin]
    mu_polys = [[lin_poly(f) for f in row] for row in mu_lin]
    eqs = []
    # counit(g) = 1
    for r in range(A.abs_degree):
        form = {}
        for j in range(qdim):
            q = coring.counit[j].get(r)
            if q:
                form[j] = q
        p = lin_poly(form)
        if r == 0:
            p = p - Poly.const(QQ, qdim, QQ.one())
        eqs.append(p)
    # Delta(g) - g (x) g = 0, coordinate by coordinate in the tensor square
    nq = qdim
    for w in range(T.rank):
        for r in range(nq):
            coord = w * nq + r
            quad = Poly(QQ, qdim, {})
            for t in range(deg):
                quad = quad + phi_polys[w * deg + t] * mu_polys[t][r]
            form = {}
            for j in range(qdim):
                q = coring.delta[j].get(coord)
                if q:
                    form[j] = q
            eqs.append(quad - lin_poly(form))
    res = polysolve.rational_points(eqs, qdim)
    return GrouplikeResult(
        [[Fraction(q) for q in p] for p in res.points], res.complete, res.certificate
    )


# ---------------------------------------------------------------------------
# convolution duals


class DualRing:
    """The one-sided convolution dual of a coring, as a rational algebra.

    ``side`` records which convolution was used: for the left dual the
    product is (f * g)(c) = sum f(c_1 . g(c_2)); for the right dual it is
    (f * g)(c) = sum g(f(c_1) . c_2).  Elements are stored as column maps
    from carrier coordinates to the absolute coordinates of the base field.
    """

    def __init__(self, coring, side, algebra, basis):
        self.coring = coring
        self.side = side
        self.algebra = algebra
        self.basis = basis

    def functional(self, coords):
        """The column map of an algebra element given by coordinates."""
        out = [dict() for _ in range(self.coring.qdim)]
        for s, q in enumerate(coords):
            qq = q if isinstance(q, Fraction) else q.rational_value()
            if qq:
                for j, col in enumerate(self.basis[s]):
                    svec_add_into(out[j], col, qq)
        return out

    def evaluate(self, coords, svec):
        cm = self.functional(coords)
        return self.coring.carrier.ext.from_qvec(
            svec_to_dense(cm_apply(cm, svec), self.coring.carrier.ext.abs_degree)
        )


def dual_ring(coring, side="left"):
    """The convolution dual on one side, with its algebra structure."""
    from .algebra import FinAlgebra

    car = coring.carrier
    A = car.ext
    qdim = car.qdim
    absa = A.abs_degree
    areg = coring.base_regular()
    if side == "left":
        pairs = [(car.sigma, areg.sigma), (car.left, areg.left)]
    elif side == "right":
        pairs = [(car.sigma, areg.sigma), (car.right, areg.right)]
    else:
        raise ValueError("side must be 'left' or 'right'")
    # unknown h[r][j]; linearity over the base field on the chosen side
    rows = []
    for opc, opa in pairs:
        for j in range(qdim):
            for r in range(absa):
                row = [Fraction(0)] * (absa * qdim)
                for j2, c in opc[j].items():
                    row[r * qdim + j2] += c
                for r2 in range(absa):
                    c = opa[r2].get(r)
                    if c:
                        row[r2 * qdim + j] -= c
                rows.append(row)
    kern = qspan_kernel(rows, absa * qdim)
    basis = []
    for krow in kern.rows:
        cm = [dict() for _ in range(qdim)]
        for flat, c in enumerate(krow):
            if c:
                r, j = divmod(flat, qdim)
                cm[j][r] = c
        basis.append(cm)
    dim = len(basis)
    T = coring.tensor
    def convolve(f, g):
        out = [dict() for _ in range(qdim)]
        for u in range(qdim):
            for idx, c in coring.delta[u].items():
                w, u2 = divmod(idx, qdim)
                if side == "left":
                    a = A.from_qvec(svec_to_dense(cm_apply(g, {u2: _ONE}), absa))
                    vec = car.act("right", a, T.mbasis[w])
                    val = cm_apply(f, vec)
                else:
                    a = A.from_qvec(svec_to_dense(cm_apply(f, T.mbasis[w]), absa))
                    vec = car.act("left", a, {u2: _ONE})
                    val = cm_apply(g, vec)
                svec_add_into(out[u], val, c)
        return out
    def flat(cm):
        v = [Fraction(0)] * (absa * qdim)
        for j, col in enumerate(cm):
            for r, c in col.items():
                v[r * qdim + j] = c
        return v
    cols = [flat(b) for b in basis]
    mat = [[cols[s][i] for s in range(dim)] for i in range(absa * qdim)]
    rhs = []
    prods = []
    for s1 in range(dim):
        for s2 in range(dim):
            prods.append((s1, s2))
            rhs.append(flat(convolve(basis[s1], basis[s2])))
    rhs.append(flat([dict(coring.counit[j]) for j in range(qdim)]))
    sols = qsolve(mat, rhs, dim)
    mult = {}
    for (s1, s2), sol in zip(prods, sols[:-1]):
        if sol is None:
            raise ValueError("convolution product escapes the dual (internal error)")
        entry = {t: q for t, q in enumerate(sol) if q}
        if entry:
            mult[(s1, s2)] = entry
    unit_sol = sols[-1]
    if unit_sol is None:
        raise ValueError("counit is not in the computed dual (internal error)")
    alg = FinAlgebra(QQ, dim, mult, list(unit_sol), check=True)
    return DualRing(coring, side, alg, basis)
