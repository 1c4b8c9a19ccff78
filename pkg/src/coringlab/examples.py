"""Built-in instances.

Four families cover everything the verification suites exercise:

* the twisted two-dimensional coring over Q(i)/Q and its canonical
  comodule Sigma = Q(i)^2, whose endomorphism ring is the rational
  quaternion algebra;
* Sweedler corings A (x)_k A of a simple extension, both abstractly and
  as the rank-one comatrix coring;
* a cyclic-algebra family over a ground field with a primitive n-th root
  of unity: the algebra generated by x, y with x^n = alpha, y^n = beta,
  yx = omega*xy, embedded in M_n(C(alpha)), together with the published
  coideal generator sets for its lattice of intermediate rings and the
  presentations of the corresponding quotient corings;
* the upper-triangular 2x2 counterexample, where the canonical map onto
  the dual coring drops rank;

plus the classification of the simple cosemisimple Q(i)/Q-corings by
division subalgebras of End(Sigma_{Q(i)}) up to conjugacy, with explicit
isomorphism witnesses onto model corings.

Fixture data (generator sets, witness matrices) is embedded as code; every
constructor re-verifies the structures it returns are what they claim to be
only in the test suite, so building an instance stays cheap.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import quaternion_algebra
from .bimodules import (
    Bimodule, TensorOver, cm_apply, cm_compose, cm_eq, cm_from_dense_rows,
    cm_to_dense_rows, svec_add_into, svec_clean, svec_from_dense,
    svec_scale, svec_to_dense,
)
from .comatrix import ColumnSpace, ComatrixCoring, EndoSubalgebra
from .corings import Coring, quotient_coring
from .duality import OpEndAlgebra, can_u, u_comodule, ustar_coring
from .fields import QQ, ReduciblePolynomial, field_preset, root_of_unity
from .galois import conjugacy
from .linalg import QSpan, qinverse, qspan_kernel

_ZERO = Fraction(0)
_ONE = Fraction(1)


class HypothesisViolated(ValueError):
    """Instance parameters break a hypothesis of the construction."""


class UnknownExtension(ValueError):
    """No fixture data under the requested name."""


class OddRankForH(ValueError):
    """The quaternions only embed in End(Sigma_A) when the rank is even."""


# ---------------------------------------------------------------------------
# block carriers: free modules with a twisted action of the base generator


def _block_map(A, nblocks, moves):
    """Column map on ``nblocks`` A-blocks; ``moves[b]`` lists pairs
    (target block, A-element) describing where the free generator of
    block ``b`` goes, extended coordinate-wise through multiplication."""
    absa = A.abs_degree
    cm = []
    for b in range(nblocks):
        cols = [dict() for _ in range(absa)]
        for tb, elt in moves[b]:
            mat = A.mult_qmatrix(A.scalar(elt))
            off = tb * absa
            for t in range(absa):
                col = cols[t]
                for r in range(absa):
                    c = mat[r][t]
                    if c:
                        col[off + r] = col.get(off + r, _ZERO) + c
        cm.extend(svec_clean(col) for col in cols)
    return cm


def _bvec(A, b, elt):
    """Sparse carrier vector holding ``elt`` in block ``b``."""
    out = {}
    off = b * A.abs_degree
    for r, c in enumerate(A.to_qvec(A.scalar(elt))):
        if c:
            out[off + r] = c
    return out


def _scalar_moves(A, nblocks, elt):
    return [[(b, elt)] for b in range(nblocks)]


def _block_coring(ground, A, nblocks, delta_terms, counit_elts,
                  left_moves=None, right_moves=None, free_side="right"):
    """Coring on a free block carrier.

    ``delta_terms[b]`` lists triples (b1, b2, scale in A).  For a
    right-free carrier, Delta(g_b * a) = sum g_b1 (x) g_b2 * scale * a;
    for a left-free one, Delta(a * g_b) = sum a * g_b1 (x) scale * g_b2.
    ``counit_elts[b]`` is the counit value of the free generator.
    """
    gen = A.gen()
    if left_moves is None:
        left_moves = _scalar_moves(A, nblocks, gen)
    if right_moves is None:
        right_moves = _scalar_moves(A, nblocks, gen)
    sigma = None
    if ground is not QQ:
        sigma = _block_map(A, nblocks, _scalar_moves(A, nblocks, A.scalar(ground.gen())))
    qdim = nblocks * A.abs_degree
    carrier = Bimodule(ground, A, qdim,
                       sigma,
                       _block_map(A, nblocks, left_moves),
                       _block_map(A, nblocks, right_moves))
    T = TensorOver(carrier, carrier, A)
    mus = A.qbasis_elements()
    one = A.one()
    delta = []
    counit = []
    for b in range(nblocks):
        for a_t in mus:
            col = {}
            for b1, b2, scale in delta_terms[b]:
                if free_side == "right":
                    v1 = _bvec(A, b1, one)
                    v2 = _bvec(A, b2, A.scalar(scale) * a_t)
                else:
                    v1 = _bvec(A, b1, a_t)
                    v2 = _bvec(A, b2, scale)
                svec_add_into(col, T.project_pure(v1, v2))
            delta.append(svec_clean(col))
            counit.append(svec_from_dense(A.to_qvec(A.scalar(counit_elts[b]) * a_t)))
    return Coring(carrier, delta, counit)


def _cm_inverse(cm, n):
    return cm_from_dense_rows(qinverse(cm_to_dense_rows(cm, n)))


# ---------------------------------------------------------------------------
# the twisted two-dimensional coring and its quaternion comodule


def trig_coring():
    """The coring C = A*c + A*s over A = Q(i), ground Q, with the twisted
    left action i*c = c*i, i*s = -s*i and

        Delta(c) = c (x) c - s (x) s        counit(c) = 1
        Delta(s) = s (x) c + c (x) s        counit(s) = 0
    """
    Qi = field_preset("Qi")
    i = Qi.gen()
    one = Qi.one()
    return _block_coring(
        QQ, Qi, 2,
        delta_terms=[[(0, 0, one), (1, 1, -one)], [(1, 0, one), (0, 1, one)]],
        counit_elts=[one, Qi.zero()],
        left_moves=[[(0, i)], [(1, -i)]],
    )


def quaternion_embedding(space):
    """The quaternion division subalgebra of End(Sigma_A) for even rank,
    generated by the block rotation and the alternating-sign i.

    Returns (subalgebra, ibar, jbar) with ibar^2 = jbar^2 = -1 and
    ibar*jbar = -jbar*ibar.
    """
    n = space.rank
    if n % 2:
        raise OddRankForH(
            "rank %d: a quaternion subalgebra needs 4 | 2*rank^2, so the rank must be even" % n
        )
    A = space.A
    i = A.gen()
    zero, one = A.zero(), A.one()
    ib = [[zero] * n for _ in range(n)]
    jb = [[zero] * n for _ in range(n)]
    for l in range(0, n, 2):
        ib[l][l + 1] = one
        ib[l + 1][l] = -one
        jb[l][l] = i
        jb[l + 1][l + 1] = -i
    ibar = space.endo_from_amatrix(ib)
    jbar = space.endo_from_amatrix(jb)
    return EndoSubalgebra.from_generators(space, [ibar, jbar]), ibar, jbar


def _retarget(cols, finv, nq):
    """Postcompose the coring factor of Sigma (x) C by finv."""
    out = []
    for col in cols:
        new = {}
        for p, c in col.items():
            i, j = divmod(p, nq)
            for j2, c2 in finv[j].items():
                k = i * nq + j2
                new[k] = new.get(k, _ZERO) + c * c2
        out.append(svec_clean(new))
    return out


class TrigInstance:
    """Sigma = Q(i)^2 as a comodule over the twisted coring.

    ``coring`` is the two-dimensional model, ``com`` the comatrix coring
    over the embedded quaternions, ``iso`` the identification of the model
    with it (c -> class(v1* (x) v1), s -> class(v2* (x) v1)), and ``rho``
    the coaction of Sigma transported back to model coordinates.
    """

    def __init__(self):
        Qi = field_preset("Qi")
        sp = ColumnSpace(Qi, QQ, 2)
        B, ibar, jbar = quaternion_embedding(sp)
        com = ComatrixCoring(sp, B)
        model = trig_coring()
        car = com.coring.carrier
        c_cls = com.project_pure(sp.estar(0), sp.e(0))
        s_cls = com.project_pure(sp.estar(1), sp.e(0))
        F = [
            c_cls, cm_apply(car.right, c_cls),
            s_cls, cm_apply(car.right, s_cls),
        ]
        finv = _cm_inverse(F, 4)
        self.space = sp
        self.B = B
        self.ibar = ibar
        self.jbar = jbar
        self.com = com
        self.coring = model
        self.iso = F
        self.rho = _retarget(com.rho, finv, 4)


def trig_instance():
    return TrigInstance()


# ---------------------------------------------------------------------------
# Sweedler corings


def sweedler_coring(A):
    """A (x)_k A for the simple extension k = A.base, on the free right
    basis {x^j (x) 1}: Delta(a (x) b) = a (x) 1 (x)_A 1 (x) b and
    counit(a (x) b) = a*b."""
    ground = A.base
    n = A.degree
    x = A.gen()
    one = A.one()
    shifts = []
    for j in range(n - 1):
        shifts.append([(j + 1, one)])
    shifts.append([(r, -A.scalar(A.min_poly[r])) for r in range(n)])
    return _block_coring(
        ground, A, n,
        delta_terms=[[(j, 0, one)] for j in range(n)],
        counit_elts=[x ** j for j in range(n)],
        left_moves=shifts,
    )


class SweedlerInstance:
    """The Sweedler coring of k in A next to its comatrix realization
    Sigma* (x)_k Sigma for Sigma = A, with the identification between
    the two."""

    def __init__(self, A):
        ground = A.base
        sp = ColumnSpace(A, ground, 1)
        com = ComatrixCoring(sp, EndoSubalgebra.scalars(sp))
        model = sweedler_coring(A)
        x = A.gen()
        dual = sp.dual
        F = []
        for j in range(A.degree):
            phi = dual.act("left", x ** j, sp.estar(0))
            for a_t in A.qbasis_elements():
                F.append(com.project_pure(phi, svec_from_dense(A.to_qvec(a_t))))
        self.A = A
        self.space = sp
        self.com = com
        self.coring = model
        self.iso = F


def sweedler_instance(A=None):
    return SweedlerInstance(A if A is not None else field_preset("Qi"))


# ---------------------------------------------------------------------------
# the cyclic-algebra family


EXTENSION_NAMES = ("k", "C(alpha)", "C(beta)", "A_omega", "M_n(k)", "M_n(C(alpha))")


class AOmegaInstance:
    """The algebra generated by x, y with x^n = alpha, y^n = beta and
    yx = omega*xy, embedded in M_n(C(alpha)) via

        x -> X = diag(x, omega*x, ..., omega^(n-1)*x)
        y -> Y = e_{1,2} + ... + e_{n-1,n} + beta*e_{n,1},

    together with Sigma = C(alpha)^n, the comatrix coring
    Sigma* (x)_k Sigma, its right-basis elements

        z(i, l, m) = alpha^(-1) x^(n-i) v_l* (x) v_m x^i,

    and the generator sets of the coideals matching the six intermediate
    rings k, C(alpha), C(beta), A_omega, M_n(k), M_n(C(alpha)).
    """

    def __init__(self, n, ground, omega, alpha, beta):
        if n < 2:
            raise HypothesisViolated("the family needs n >= 2")
        omega = ground.scalar(omega)
        alpha = ground.scalar(alpha)
        beta = ground.scalar(beta)
        if alpha.is_zero() or beta.is_zero():
            raise HypothesisViolated("alpha and beta must be nonzero")
        if omega ** n != ground.one() or any(
            omega ** d == ground.one() for d in range(1, n)
        ):
            raise HypothesisViolated(
                "omega is not a primitive root of unity of order %d in %s"
                % (n, ground.label)
            )
        xpoly = [-alpha] + [0] * (n - 1) + [1]
        ypoly = [-beta] + [0] * (n - 1) + [1]
        try:
            A = ground.extend(xpoly, "x")
        except ReduciblePolynomial:
            raise HypothesisViolated(
                "x^%d - %s is reducible over %s" % (n, alpha, ground.label)
            ) from None
        try:
            ground.extend(ypoly, "y")
        except ReduciblePolynomial:
            raise HypothesisViolated(
                "y^%d - %s is reducible over %s" % (n, beta, ground.label)
            ) from None
        self.n = n
        self.ground = ground
        self.omega = omega
        self.alpha = alpha
        self.beta = beta
        self.A = A
        space = ColumnSpace(A, ground, n)
        self.space = space
        self.com = ComatrixCoring(space, EndoSubalgebra.scalars(space))
        x = A.gen()
        zero, one = A.zero(), A.one()

        def diag(vals):
            return [
                [vals[i] if i == j else zero for j in range(n)] for i in range(n)
            ]

        def cycle(corner):
            rows = [[zero] * n for _ in range(n)]
            for i in range(n - 1):
                rows[i][i + 1] = one
            rows[n - 1][0] = A.scalar(corner)
            return rows

        om = A.scalar(omega)
        self.X = space.endo_from_amatrix(diag([x * om ** j for j in range(n)]))
        self.Y = space.endo_from_amatrix(cycle(beta))
        self.Xunit = space.endo_from_amatrix(diag([om ** j for j in range(n)]))
        self.Yunit = space.endo_from_amatrix(cycle(1))
        self.extensions = [
            ("k", EndoSubalgebra.scalars(space)),
            ("C(alpha)", EndoSubalgebra.from_generators(space, [self.X])),
            ("C(beta)", EndoSubalgebra.from_generators(space, [self.Y])),
            ("A_omega", EndoSubalgebra.from_generators(space, [self.X, self.Y])),
            ("M_n(k)", EndoSubalgebra.from_generators(space, [self.Xunit, self.Yunit])),
            ("M_n(C(alpha))", EndoSubalgebra.full(space)),
        ]
        self._byname = dict(self.extensions)
        self._z = {}
        self._fixtures = {}
        self._ainv = A.scalar(alpha).inverse()

    def subalgebra(self, name):
        try:
            return self._byname[name]
        except KeyError:
            raise UnknownExtension(name) from None

    def z(self, i, l, m):
        """alpha^(-1) x^(n-i) v_l* (x) v_m x^i, one-indexed, as a carrier
        vector of Sigma* (x)_k Sigma."""
        got = self._z.get((i, l, m))
        if got is None:
            x = self.A.gen()
            phi = self.space.dual.act(
                "left", self._ainv * x ** (self.n - i), self.space.estar(l - 1)
            )
            xv = self.space.module.act("right", x ** i, self.space.e(m - 1))
            got = self.com.project_pure(phi, xv)
            self._z[(i, l, m)] = got
        return got

    def fixture_coideal(self, name):
        """The coideal of Sigma* (x)_k Sigma matching the named intermediate
        ring, spanned by its fixed generator set of z-combinations."""
        got = self._fixtures.get(name)
        if got is not None:
            return got
        qdim = self.com.coring.qdim
        carrier = self.com.coring.carrier
        n = self.n
        if name == "k":
            got = QSpan.zero(qdim)
        elif name == "M_n(C(alpha))":
            rows = [
                [self.com.coring.counit[u].get(r, _ZERO) for u in range(qdim)]
                for r in range(self.A.abs_degree)
            ]
            got = qspan_kernel(rows, qdim)
        else:
            gens = []
            if name in ("C(alpha)", "A_omega"):
                for l in range(1, n + 1):
                    for m in range(1, n + 1):
                        for i in range(1, n):
                            g = dict(self.z(n, l, m))
                            om = self.omega ** ((i * (m - l)) % n)
                            svec_add_into(
                                g, carrier.act("right", om, self.z(i, l, m)), -_ONE
                            )
                            gens.append(g)
            if name in ("C(beta)", "A_omega"):
                binv = self.ground.scalar(self.beta).inverse()
                for i in range(1, n + 1):
                    for l in range(1, n + 1):
                        for m in range(1, n + 1):
                            g = dict(self.z(i, l, m))
                            if l < m:
                                tail = carrier.act(
                                    "right", binv, self.z(i, n - (m - l) + 1, 1)
                                )
                            else:
                                tail = self.z(i, l - m + 1, 1)
                            svec_add_into(g, tail, -_ONE)
                            gens.append(g)
            if name == "M_n(k)":
                for i in range(1, n + 1):
                    for l in range(1, n + 1):
                        for m in range(1, n + 1):
                            if l != m:
                                gens.append(self.z(i, l, m))
                    for l in range(2, n + 1):
                        g = dict(self.z(i, 1, 1))
                        svec_add_into(g, self.z(i, l, l), -_ONE)
                        gens.append(g)
            if not gens and name not in EXTENSION_NAMES:
                raise UnknownExtension(name)
            rows = []
            for g in gens:
                for op in carrier.mono_ops("right"):
                    rows.append(svec_to_dense(cm_apply(op, g), qdim))
            got = QSpan.from_qrows(rows, qdim)
        self._fixtures[name] = got
        return got


def aomega_instance(n=2, ground=None, omega=None, alpha=None, beta=None):
    """The family instance; without arguments the two desk-scale parameter
    sets (n = 2 over Q with alpha = beta = -1, n = 3 over Q(w3) with
    alpha = 2, beta = 3)."""
    if ground is None:
        if n == 2:
            ground = QQ
        elif n == 3:
            ground = field_preset("Qw3")
        else:
            raise HypothesisViolated("no default ground field for n = %d" % n)
    if omega is None:
        omega = root_of_unity(ground, n)
    defaults = {2: (-1, -1), 3: (2, 3)}
    if alpha is None or beta is None:
        if n not in defaults:
            raise HypothesisViolated("no default parameters for n = %d" % n)
        da, db = defaults[n]
        alpha = da if alpha is None else alpha
        beta = db if beta is None else beta
    return AOmegaInstance(n, ground, omega, alpha, beta)


def _quotient_model(inst, name):
    """The published presentation of the quotient coring for the named
    intermediate ring: (model, class vectors of its free basis in the
    parent carrier, free side)."""
    n = inst.n
    A = inst.A
    ground = inst.ground
    x = A.gen()
    om = A.scalar(inst.omega)
    one = A.one()
    zero = A.zero()
    if name == "C(alpha)":
        # c_{l,m} = class(v_l* (x) v_m), x*c = omega^(m-l)*c*x
        delta = []
        left = []
        counit = []
        cls = []
        for l in range(n):
            for m in range(n):
                delta.append([(l * n + j, j * n + m, one) for j in range(n)])
                left.append([(l * n + m, om ** ((m - l) % n) * x)])
                counit.append(one if l == m else zero)
                cls.append(inst.z(n, l + 1, m + 1))
        model = _block_coring(ground, A, n * n, delta, counit, left_moves=left)
        return model, cls, "right"
    if name == "C(beta)":
        # left-free on c_l^i = class(z(i, l, 1)), c_l^i * x = x * c_l^(i+1)
        binv = A.scalar(inst.beta).inverse()
        delta = []
        right = []
        counit = []
        cls = []
        for l in range(1, n + 1):
            for i in range(1, n + 1):
                terms = [
                    ((j - 1) * n + (i - 1), (l - j) * n + (i - 1), one)
                    for j in range(1, l + 1)
                ]
                terms += [
                    ((j - 1) * n + (i - 1), (n - (j - l)) * n + (i - 1), binv)
                    for j in range(l + 1, n + 1)
                ]
                delta.append(terms)
                right.append([((l - 1) * n + (i % n), x)])
                counit.append(one if l == 1 else zero)
                cls.append(inst.z(i, l, 1))
        model = _block_coring(ground, A, n * n, delta, counit,
                              right_moves=right, free_side="left")
        return model, cls, "left"
    if name == "A_omega":
        # c_i = class(v_i* (x) v_1), x*c_i = omega^(1-i)*c_i*x
        binv = A.scalar(inst.beta).inverse()
        delta = []
        left = []
        counit = []
        cls = []
        for i in range(1, n + 1):
            b = i - 1
            terms = [(l - 1, i - l, one) for l in range(1, i + 1)]
            terms += [(l - 1, n + b - (l - 1), binv) for l in range(i + 1, n + 1)]
            delta.append(terms)
            left.append([(b, om ** ((1 - i) % n) * x)])
            counit.append(one if i == 1 else zero)
            cls.append(inst.z(n, i, 1))
        model = _block_coring(ground, A, n, delta, counit, left_moves=left)
        return model, cls, "right"
    if name == "M_n(k)":
        # group-like c_i = class(z(i, 1, 1)), x*c_i = c_(i-1)*x
        delta = [[(b, b, one)] for b in range(n)]
        left = [[((b - 1) % n, x)] for b in range(n)]
        counit = [one] * n
        cls = [inst.z(i, 1, 1) for i in range(1, n + 1)]
        model = _block_coring(ground, A, n, delta, counit, left_moves=left)
        return model, cls, "right"
    raise UnknownExtension(name)


def quotient_isomorphism(inst, name):
    """Quotient the comatrix coring by the fixture coideal and identify it
    with the published presentation.

    Returns (model, quotient, F) with F a carrier column map from model
    coordinates to quotient coordinates sending each free basis element to
    the class of its defining tensor.
    """
    span = inst.fixture_coideal(name)
    quot = quotient_coring(inst.com.coring, list(span.rows))
    model, cls, side = _quotient_model(inst, name)
    carrier = inst.com.coring.carrier
    F = []
    for vec in cls:
        for a_t in inst.A.qbasis_elements():
            F.append(cm_apply(quot.pi, carrier.act(side, a_t, vec)))
    return model, quot, F


def grouplike_quotient(inst):
    """The quotient by the matrix-ring coideal: its free basis classes are
    group-like, and the coring is the Sweedler coring of the extension.

    Returns (quot, classes, sweedler_model, G) where G maps quotient
    coordinates to Sweedler coordinates via c_i -> alpha^(-1) x^(n-i) (x) x^i.
    """
    model, quot, F = quotient_isomorphism(inst, "M_n(k)")
    n = inst.n
    A = inst.A
    x = A.gen()
    sw = sweedler_coring(A)
    H = []
    for b in range(n):
        elt = inst._ainv * x ** (b + 1)
        for a_t in A.qbasis_elements():
            H.append(_bvec(A, (n - b - 1) % n, elt * a_t))
    G = cm_compose(H, _cm_inverse(F, quot.coring.qdim))
    classes = [cm_apply(quot.pi, inst.z(i, 1, 1)) for i in range(1, n + 1)]
    return quot, classes, sw, G


# ---------------------------------------------------------------------------
# the upper-triangular counterexample


class T2Instance:
    """Upper-triangular matrices acting on Sigma = k^2.

    The dual coring of the algebra is 3-dimensional while
    Sigma* (x)_C Sigma is 4-dimensional over C = End(Sigma_U) = k, so the
    canonical map is onto with a 1-dimensional kernel.
    """

    def __init__(self):
        sp = ColumnSpace(QQ, QQ, 2)
        one, zero = QQ.one(), QQ.zero()
        e11 = sp.endo_from_amatrix([[one, zero], [zero, zero]])
        e12 = sp.endo_from_amatrix([[zero, one], [zero, zero]])
        B = EndoSubalgebra.from_generators(sp, [e11, e12])
        U = OpEndAlgebra(sp, B.span)
        algebra = U.as_finalgebra()
        ustar = ustar_coring(algebra)
        cms = U.basis_cms()
        self.space = sp
        self.B = B
        self.U = U
        self.algebra = algebra
        self.ustar = ustar
        self.action_cms = cms
        self.rho = u_comodule(ustar, sp, cms)
        self.report = can_u(ustar, sp, cms)


def t2_instance():
    return T2Instance()


def quaternion_ustar():
    """The rational quaternions as a ring over Q acting on Sigma = Q^4 by
    right regular multiplication; here the canonical map onto the dual
    coring of the algebra is bijective.

    Returns (algebra, space, action column maps, dual coring).
    """
    H = quaternion_algebra(QQ, Fraction(-1), Fraction(-1))
    sp = ColumnSpace(QQ, QQ, 4)
    cms = []
    for b in range(4):
        rows = H.right_mult_matrix(H.basis_vec(b)).rows
        cms.append(cm_from_dense_rows(
            [[c.rational_value() for c in row] for row in rows]
        ))
    return H, sp, cms, ustar_coring(H)


# ---------------------------------------------------------------------------
# model corings for the classification over Q(i)/Q


def z2_graded_coring():
    """The coring of the Z/2-grading of Q(i) over Q: free right basis
    {[0], [1]}, i[0] = [1]i, i[1] = [0]i, both basis elements group-like."""
    Qi = field_preset("Qi")
    i = Qi.gen()
    one = Qi.one()
    return _block_coring(
        QQ, Qi, 2,
        delta_terms=[[(0, 0, one)], [(1, 1, one)]],
        counit_elts=[one, one],
        left_moves=[[(1, i)], [(0, i)]],
    )


def comatrix_coalgebra(m):
    """The rational coalgebra on basis x_pq with Delta(x_pq) =
    sum_l x_pl (x) x_lq and counit(x_pq) = delta_pq, as plain column data
    (delta, counit values, dimension)."""
    d = m * m
    delta = []
    counit = []
    for p in range(m):
        for q in range(m):
            delta.append({(p * m + l) * d + (l * m + q): _ONE for l in range(m)})
            counit.append(_ONE if p == q else _ZERO)
    return delta, counit, d


def coring_coalgebra_product(coring, cdelta, ccounit, d):
    """The coring structure on C (x)_k V for a k-coalgebra V, with the
    bimodule actions on the C factor and componentwise structure maps."""
    car = coring.carrier
    nq = car.qdim
    A = car.ext

    def lift(cm):
        out = []
        for u in range(nq):
            for t in range(d):
                out.append({u2 * d + t: c for u2, c in cm[u].items()})
        return out

    carrier = Bimodule(car.ground, A, nq * d,
                       lift(car.sigma), lift(car.left), lift(car.right))
    T = TensorOver(carrier, carrier, A)
    mb = coring.tensor.mbasis
    delta = []
    counit = []
    for u in range(nq):
        terms = [divmod(p, nq) + (c,) for p, c in coring.delta[u].items()]
        for t in range(d):
            col = {}
            for w, u2, c in terms:
                for p2, c2 in cdelta[t].items():
                    t1, t2 = divmod(p2, d)
                    v1 = {u0 * d + t1: c0 for u0, c0 in mb[w].items()}
                    svec_add_into(col, T.project_pure(v1, {u2 * d + t2: _ONE}), c * c2)
            delta.append(svec_clean(col))
            counit.append(svec_scale(coring.counit[u], ccounit[t]))
    return Coring(carrier, delta, counit)


def matrix_coring(A, n):
    """The comatrix coalgebra of order n over A, viewed as a coring with
    the central bimodule structure."""
    one = A.one()
    zero = A.zero()
    delta = []
    counit = []
    for p in range(n):
        for q in range(n):
            delta.append([(p * n + l, l * n + q, one) for l in range(n)])
            counit.append(one if p == q else zero)
    gen_moves = _scalar_moves(A, n * n, A.gen())
    return _block_coring(QQ, A, n * n, delta, counit,
                         left_moves=gen_moves, right_moves=gen_moves)


def antidiagonal_coring(n):
    """Free right Q(i)-basis v_pq with i*v_pq = v_{n-p+1,n-q+1}*i and the
    comatrix comultiplication."""
    Qi = field_preset("Qi")
    i = Qi.gen()
    one = Qi.one()
    zero = Qi.zero()
    delta = []
    counit = []
    left = []
    for p in range(n):
        for q in range(n):
            delta.append([(p * n + l, l * n + q, one) for l in range(n)])
            counit.append(one if p == q else zero)
            left.append([((n - 1 - p) * n + (n - 1 - q), i)])
    return _block_coring(QQ, Qi, n * n, delta, counit, left_moves=left)


# ---------------------------------------------------------------------------
# classification of the simple cosemisimple Q(i)/Q-corings


class ClassificationCase:
    __slots__ = ("name", "dlabel", "space", "B", "com", "model", "witness")

    def __init__(self, name, dlabel, space, B, com, model, witness):
        self.name = name
        self.dlabel = dlabel
        self.space = space
        self.B = B
        self.com = com
        self.model = model
        self.witness = witness


def classification_names(n):
    names = ["embed-Q", "embed-Qi-diag"]
    if n >= 2:
        names.append("embed-Qi-twist")
    if n % 2 == 0:
        names.append("embed-H")
    return names


def quaternion_relations(ibar, jbar, nq):
    """ibar^2 = jbar^2 = -1 and ibar jbar = -jbar ibar as column maps."""
    mid = [{t: -_ONE} for t in range(nq)]
    ij = cm_compose(ibar, jbar)
    ji = cm_compose(jbar, ibar)
    return (
        cm_eq(cm_compose(ibar, ibar), mid)
        and cm_eq(cm_compose(jbar, jbar), mid)
        and cm_eq(ij, [{t: -c for t, c in col.items()} for col in ji])
    )


def classification_case(name, n):
    """One division-subalgebra embedding D -> End(Sigma_{Q(i)}) together
    with its comatrix coring, the model coring it is isomorphic to, and
    the witness column map model -> comatrix."""
    Qi = field_preset("Qi")
    i = Qi.gen()
    zero = Qi.zero()
    sp = ColumnSpace(Qi, QQ, n)
    car_act = None
    if name == "embed-Q":
        B = EndoSubalgebra.scalars(sp)
        cdelta, ccounit, d = comatrix_coalgebra(n)
        model = coring_coalgebra_product(z2_graded_coring(), cdelta, ccounit, d)
        com = ComatrixCoring(sp, B)
        car = com.coring.carrier
        minus_i = -i
        witness = []
        for b in range(2):
            if b == 0:
                mk = lambda m, l: com.project_pure(sp.estar(m), sp.e(l))
            else:
                mk = lambda m, l: com.project_pure(
                    sp.dual.act("left", minus_i, sp.estar(m)),
                    sp.module.act("right", i, sp.e(l)),
                )
            for s in range(2):
                for m in range(n):
                    for l in range(n):
                        vec = mk(m, l)
                        if s:
                            vec = car.act("right", i, vec)
                        witness.append(vec)
        # model coordinates run (z2 coord)*(d) + coalgebra coord
        reordered = [None] * (4 * n * n)
        pos = 0
        for b in range(2):
            for s in range(2):
                for t in range(n * n):
                    reordered[(b * 2 + s) * n * n + t] = witness[pos]
                    pos += 1
        return ClassificationCase(name, "Q", sp, B, com, model, reordered)
    if name == "embed-Qi-diag":
        rows = [[i if p == q else zero for q in range(n)] for p in range(n)]
        B = EndoSubalgebra.from_generators(sp, [sp.endo_from_amatrix(rows)])
        model = matrix_coring(Qi, n)
    elif name == "embed-Qi-twist":
        if n < 2:
            raise UnknownExtension("the antidiagonal embedding needs n >= 2")
        rows = [[i if p == n - 1 - q else zero for q in range(n)] for p in range(n)]
        B = EndoSubalgebra.from_generators(sp, [sp.endo_from_amatrix(rows)])
        model = antidiagonal_coring(n)
    elif name == "embed-H":
        B, _, _ = quaternion_embedding(sp)
        cdelta, ccounit, d = comatrix_coalgebra(n // 2)
        model = coring_coalgebra_product(trig_coring(), cdelta, ccounit, d)
        car_act = "quaternion"
    else:
        raise UnknownExtension(name)
    com = ComatrixCoring(sp, B)
    car = com.coring.carrier
    witness = []
    if car_act == "quaternion":
        m = n // 2
        pure = {
            0: lambda p, q: com.project_pure(sp.estar(2 * p + 1), sp.e(2 * q + 1)),
            1: lambda p, q: com.project_pure(sp.estar(2 * p + 1), sp.e(2 * q)),
        }
        for b in range(2):
            for s in range(2):
                for p in range(m):
                    for q in range(m):
                        vec = pure[b](p, q)
                        if s:
                            vec = car.act("right", i, vec)
                        witness.append(vec)
        reordered = [None] * (4 * m * m)
        pos = 0
        for b in range(2):
            for s in range(2):
                for t in range(m * m):
                    reordered[(b * 2 + s) * m * m + t] = witness[pos]
                    pos += 1
        witness = reordered
    else:
        for p in range(n):
            for q in range(n):
                vec = com.project_pure(sp.estar(p), sp.e(q))
                witness.append(vec)
                witness.append(car.act("right", i, vec))
    dlabel = "Q(i)" if name.startswith("embed-Qi") else "H"
    return ClassificationCase(name, dlabel, sp, B, com, model, witness)


def classification_cases(n):
    return [classification_case(name, n) for name in classification_names(n)]


def conjugacy_suite():
    """The three benchmark conjugacy decisions between embeddings:
    twisted vs. diagonal generator of the radical extension (distinct),
    diagonal vs. antidiagonal square root of -1 over Q(i) (distinct),
    and an inner twist of the quaternion embedding (conjugate)."""
    out = []
    inst = aomega_instance(2)
    x = inst.A.gen()
    zero = inst.A.zero()
    Cdiag = EndoSubalgebra.from_generators(
        inst.space, [inst.space.endo_from_amatrix([[x, zero], [zero, x]])]
    )
    out.append((
        "radical-twist-vs-diagonal",
        conjugacy(inst.space, inst.subalgebra("C(alpha)"), Cdiag, [inst.X]),
    ))
    Qi = field_preset("Qi")
    i = Qi.gen()
    zero = Qi.zero()
    sp = ColumnSpace(Qi, QQ, 2)
    iId = sp.endo_from_amatrix([[i, zero], [zero, i]])
    ibar = sp.endo_from_amatrix([[zero, i], [i, zero]])
    Bd = EndoSubalgebra.from_generators(sp, [iId])
    Bt = EndoSubalgebra.from_generators(sp, [ibar])
    out.append(("i-diagonal-vs-antidiagonal", conjugacy(sp, Bd, Bt, [iId])))
    BH, gi, gj = quaternion_embedding(sp)
    one = Qi.one()
    u = sp.endo_from_amatrix([[one, one], [zero, one]])
    uinv = sp.endo_from_amatrix([[one, -one], [zero, one]])
    ti = cm_compose(u, cm_compose(gi, uinv))
    tj = cm_compose(u, cm_compose(gj, uinv))
    Bp = EndoSubalgebra.from_generators(sp, [ti, tj])
    out.append((
        "quaternion-inner-twist",
        conjugacy(sp, BH, Bp, [gi, gj], images=[ti, tj]),
    ))
    return out


def classification_conjugacy(n):
    """Conjugacy verdicts between same-dimension embeddings at rank n; only
    the diagonal and antidiagonal square roots of -1 share a dimension."""
    if n < 2:
        return []
    Qi = field_preset("Qi")
    i = Qi.gen()
    zero = Qi.zero()
    sp = ColumnSpace(Qi, QQ, n)
    iId = sp.endo_from_amatrix(
        [[i if p == q else zero for q in range(n)] for p in range(n)]
    )
    ibar = sp.endo_from_amatrix(
        [[i if p == n - 1 - q else zero for q in range(n)] for p in range(n)]
    )
    Bd = EndoSubalgebra.from_generators(sp, [iId])
    Bt = EndoSubalgebra.from_generators(sp, [ibar])
    return [("embed-Qi-diag|embed-Qi-twist", conjugacy(sp, Bd, Bt, [iId]))]


def build(name, n=None, ground=None, omega=None, alpha=None, beta=None):
    """Instance constructor used by the command line; raises ValueError on
    unknown ids before any computation starts."""
    if name == "trig":
        return trig_instance()
    if name == "sweedler":
        return sweedler_instance()
    if name in ("t2", "t2-counterexample"):
        return t2_instance()
    if name == "aomega":
        return aomega_instance(n if n is not None else 2, ground, omega, alpha, beta)
    if name == "quaternion-ustar":
        return quaternion_ustar()
    if name in ("embed-Q", "embed-Qi-diag", "embed-Qi-twist", "embed-H"):
        return classification_case(name, n if n is not None else 2)
    raise ValueError("unknown instance id %r" % name)
