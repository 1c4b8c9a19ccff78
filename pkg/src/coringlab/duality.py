"""The endomorphism side of the correspondence.

Intermediate subalgebras of End(Sigma_A) were handled through balancing
relations; here the same lattice is reflected into End(_B Sigma), the
ring of B-linear (not necessarily A-linear) endomorphisms under opposite
composition.  The two reflections are plain matrix commutants, the dual
ring of the comatrix coring is identified with End(_B Sigma) by an
explicit matrix, and the dual coring U* of a finite A-ring U gives the
second canonical map.
"""

import time
from fractions import Fraction

from .fields import QQ
from .linalg import QSpan, qspan_kernel, qsolve, qinverse
from .algebra import FinAlgebra
from .bimodules import (
    Bimodule,
    TensorOver,
    cm_apply,
    cm_compose,
    cm_identity,
    svec_add_into,
    svec_clean,
    svec_from_dense,
    svec_to_dense,
)
from .corings import Coring, dual_ring
from .comatrix import ComatrixCoring, EndoSubalgebra, cm_rank
from .galois import J_of

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# commutants in the rational endomorphism ring


def commutant_span(space, cms, flat_extra=None):
    """Flattened basis of {f : f c = c f for all given c}, inside the full
    rational endomorphism ring of Sigma."""
    nq = space.module.qdim
    n2 = nq * nq
    vectors = []
    for p in range(n2):
        j, r = divmod(p, nq)
        diff = {}
        for t, c in enumerate(cms):
            # (G_p c - c G_p) where G_p = unit j -> r
            for j2, q in c[r].items():
                diff[(t, j, j2)] = diff.get((t, j, j2), _ZERO) + q
            for j2 in range(nq):
                q = c[j2].get(j)
                if q:
                    diff[(t, j2, r)] = diff.get((t, j2, r), _ZERO) - q
        vectors.append(svec_clean(diff))
    coords = sorted(set().union(*[set(v) for v in vectors])) if vectors else []
    rows = [[v.get(c, _ZERO) for v in vectors] for c in coords]
    kern = qspan_kernel(rows, n2)
    if flat_extra:
        rows = [list(r) for r in kern.rows] + [list(v) for v in flat_extra]
        return QSpan.from_qrows(rows, n2)
    return QSpan.from_qrows([list(r) for r in kern.rows], n2)


class OpEndAlgebra:
    """A subalgebra of End(_B Sigma): rational endomorphisms under the
    opposite composition product f * g = g o f."""

    __slots__ = ("space", "span", "_alg")

    def __init__(self, space, span):
        self.space = space
        self.span = span
        self._alg = None

    @classmethod
    def commutant_of(cls, space, cms):
        return cls(space, commutant_span(space, cms))

    @property
    def dim(self):
        return self.span.dim

    def basis_cms(self):
        return [self.space.endo_unflat(row) for row in self.span.rows]

    def contains_cm(self, cm):
        return self.span.contains(self.space.endo_flat(cm))

    def __eq__(self, other):
        return isinstance(other, OpEndAlgebra) and self.span == other.span

    def __le__(self, other):
        return other.span.contains_space(self.span)

    def __hash__(self):
        return hash((self.span.dim, tuple(self.span.pivots)))

    def as_finalgebra(self):
        if self._alg is not None:
            return self._alg
        basis = self.basis_cms()
        dim = len(basis)
        n2 = self.space.module.qdim ** 2
        mat = [
            [self.span.rows[s][i] for s in range(dim)] for i in range(n2)
        ]
        rhs = []
        for f in basis:
            for g in basis:
                rhs.append(self.space.endo_flat(cm_compose(g, f)))
        rhs.append(self.space.endo_flat(cm_identity(self.space.module.qdim)))
        sols = qsolve(mat, rhs, dim)
        mult = {}
        for pos, sol in enumerate(sols[:-1]):
            if sol is None:
                raise ValueError("span is not closed under composition")
            s1, s2 = divmod(pos, dim)
            entry = {t: QQ.scalar(q) for t, q in enumerate(sol) if q}
            if entry:
                mult[(s1, s2)] = entry
        if sols[-1] is None:
            raise ValueError("span does not contain the identity")
        unit = [QQ.scalar(q) for q in sols[-1]]
        self._alg = FinAlgebra(QQ, dim, mult, unit, check=False)
        return self._alg

    def is_simple_artinian(self):
        return self.as_finalgebra().is_simple_artinian()


def end_of_left_module(space, B):
    """End(_B Sigma) for an intermediate subalgebra B of End(Sigma_A)."""
    return OpEndAlgebra.commutant_of(space, B.basis_cms())


def J_star(space, C):
    """The subring End(_C Sigma) of End(_B Sigma) attached to C."""
    return OpEndAlgebra.commutant_of(space, C.basis_cms())


def R_star(space, U):
    """End(Sigma_U) for an A-ring U inside End(_B Sigma): the commutant
    again, landing back among A-linear endomorphisms."""
    cms = U.basis_cms() if isinstance(U, OpEndAlgebra) else list(U)
    span = commutant_span(space, cms)
    for row in span.rows:
        if not space.is_right_linear(space.endo_unflat(row)):
            raise ValueError("commutant escapes End(Sigma_A); U is not an A-ring")
    return EndoSubalgebra(space, span)


# ---------------------------------------------------------------------------
# the dual ring of the comatrix coring as End(_B Sigma)


class DualIso:
    """h -> f_h, f_h(x) = sum e_i . h(class(e_i* (x) x)), identifying the
    left convolution dual of Sigma* (x)_B Sigma with End(_B Sigma)."""

    __slots__ = ("com", "dual", "operators", "orientation", "onto", "span")

    def __init__(self, com, dual, operators, orientation, onto, span):
        self.com = com
        self.dual = dual
        self.operators = operators
        self.orientation = orientation
        self.onto = onto
        self.span = span

    def operator_of(self, coords):
        """Flattened endomorphism for a dual element given over the dual basis."""
        n2 = len(self.operators[0])
        out = [_ZERO] * n2
        for s, q in enumerate(coords):
            if q:
                for t, v in enumerate(self.operators[s]):
                    out[t] += q * v
        return out


def dual_iso_end(com):
    """Match the left dual of the comatrix coring with End(_B Sigma);
    records which composition order makes the matching multiplicative."""
    space = com.space
    A = space.A
    nq = space.module.qdim
    dual = dual_ring(com.coring, side="left")
    operators = []
    cls_of = [
        [com.project_pure(space.estar(i), {u: _ONE}) for u in range(nq)]
        for i in range(space.rank)
    ]
    for h in dual.basis:
        cm = [dict() for _ in range(nq)]
        for u in range(nq):
            for i in range(space.rank):
                val = cm_apply(h, cls_of[i][u])
                if val:
                    a = A.from_qvec(svec_to_dense(val, A.abs_degree))
                    svec_add_into(cm[u], space.module.act("right", a, space.e(i)))
        operators.append(space.endo_flat([svec_clean(col) for col in cm]))
    span = QSpan.from_qrows([list(v) for v in operators], nq * nq)
    target = commutant_span(space, com.B.basis_cms())
    onto = span == target and span.dim == dual.algebra.dim
    orientation = _orientation(com, dual, operators, span)
    return DualIso(com, dual, operators, orientation, onto, span)


def _orientation(com, dual, operators, span):
    space = com.space
    alg = dual.algebra
    straight = opposite = True
    for s1 in range(alg.dim):
        f1 = space.endo_unflat(operators[s1])
        for s2 in range(alg.dim):
            f2 = space.endo_unflat(operators[s2])
            prod = alg.mul_vec(alg.basis_vec(s1), alg.basis_vec(s2))
            img = [Fraction(0)] * len(operators[0])
            for t, c in enumerate(prod):
                q = c.rational_value()
                if q:
                    for p, v in enumerate(operators[t]):
                        img[p] += q * v
            if img != space.endo_flat(cm_compose(f1, f2)):
                straight = False
            if img != space.endo_flat(cm_compose(f2, f1)):
                opposite = False
        if not (straight or opposite):
            break
    if opposite:
        return "opposite"
    if straight:
        return "composition"
    return "neither"


# ---------------------------------------------------------------------------
# the primed correspondence


def J_prime(com, U):
    """Coideal attached to an A-ring U inside End(_B Sigma)."""
    return J_of(com, R_star(com.space, U))


def R_prime(com, jspan, iso=None, verify=True):
    """The A-subring of End(_B Sigma) attached to a coideal: the dual ring
    of the quotient coring, pulled back along the projection and realized
    as endomorphisms."""
    from .galois import quotient_comodule

    if iso is None:
        iso = dual_iso_end(com)
    quot, _rho = quotient_comodule(com, jspan, verify=verify)
    qdual = dual_ring(quot.coring, side="left")
    nq = com.coring.qdim
    rows = []
    for h in qdual.basis:
        pulled = [cm_apply(h, quot.pi[u]) for u in range(nq)]
        coords = _dual_coords(com, iso.dual, pulled)
        rows.append(iso.operator_of(coords))
    n2 = com.space.module.qdim ** 2
    span = QSpan.from_qrows(rows, n2)
    if span.dim != qdual.algebra.dim:
        raise ValueError("pullback of the quotient dual is not injective")
    return OpEndAlgebra(com.space, span)


def _dual_coords(com, dual, functional_cm):
    absa = com.space.A.abs_degree
    nq = com.coring.qdim
    flat = [_ZERO] * (absa * nq)
    for j, col in enumerate(functional_cm):
        for r, c in col.items():
            flat[r * nq + j] = c
    cols = []
    for b in dual.basis:
        v = [_ZERO] * (absa * nq)
        for j, col in enumerate(b):
            for r, c in col.items():
                v[r * nq + j] = c
        cols.append(v)
    mat = [[cols[s][i] for s in range(len(cols))] for i in range(absa * nq)]
    sol = qsolve(mat, [flat], len(cols))[0]
    if sol is None:
        raise ValueError("functional outside the dual ring (internal error)")
    return sol


def r_prime_j_prime_property(com, U, iso=None):
    """R'J'(U) against the double commutant of U, plus the containment."""
    C = R_star(com.space, U)
    back = R_prime(com, J_of(com, C), iso=iso, verify=False)
    double = OpEndAlgebra.commutant_of(com.space, C.basis_cms())
    ucms = U.basis_cms() if isinstance(U, OpEndAlgebra) else list(U)
    inside = all(back.span.contains(com.space.endo_flat(c)) for c in ucms)
    return {
        "RJ_is_double_commutant": back == double,
        "U_inside_RJ": inside,
    }


# ---------------------------------------------------------------------------
# Theorem-level roundtrips over a lattice of intermediate subalgebras


class JBReport:
    __slots__ = (
        "name", "c_dim", "u_dim", "u_simple_artinian",
        "roundtrip_RJ", "roundtrip_JR", "seconds",
    )

    def __init__(self, name, c_dim, u_dim, u_simple_artinian,
                 roundtrip_RJ, roundtrip_JR, seconds):
        self.name = name
        self.c_dim = c_dim
        self.u_dim = u_dim
        self.u_simple_artinian = u_simple_artinian
        self.roundtrip_RJ = roundtrip_RJ
        self.roundtrip_JR = roundtrip_JR
        self.seconds = seconds

    @property
    def ok(self):
        return self.roundtrip_RJ and self.roundtrip_JR

    def as_json(self):
        return {
            "instance": self.name,
            "C_dim": self.c_dim,
            "U_dim": self.u_dim,
            "U_simple_artinian": self.u_simple_artinian,
            "roundtrip_RJ": self.roundtrip_RJ,
            "roundtrip_JR": self.roundtrip_JR,
        }


def verify_jacobson_bourbaki(space, instances):
    """Double-commutant roundtrips C -> End(_C Sigma) -> End(Sigma_U) -> C
    over named intermediate subalgebras."""
    reports = []
    for name, C in instances:
        t0 = time.perf_counter()
        U = J_star(space, C)
        C2 = R_star(space, U)
        U2 = J_star(space, C2)
        reports.append(
            JBReport(
                name, C.dim, U.dim, U.is_simple_artinian(),
                C2 == C, U2 == U, time.perf_counter() - t0,
            )
        )
    return reports


# ---------------------------------------------------------------------------
# the dual coring of a finite A-ring


class UStarCoring:
    """The dual of a finite A-ring as an A-coring: Delta(phi) is
    sum_a (phi u_a) (x) u_a* over a dual basis, counit is evaluation at 1."""

    __slots__ = ("U", "A", "coring")

    def __init__(self, U, coring):
        self.U = U
        self.A = U.field
        self.coring = coring


def ustar_coring(U, ground=QQ, twist=None):
    """Build U* for a finite algebra U over a field in the tower.

    ``twist`` replaces the defining basis {u_a} by an invertible
    combination before the dual-basis sum is formed; the result must not
    depend on it.
    """
    A = U.field
    d = U.dim
    absa = A.abs_degree
    qdim = d * absa
    if A is QQ:
        sigma = gen = None
    else:
        rows = A.mult_qmatrix(A.gen())
        gen = _blockdiag_cm(rows, d)
        if ground is QQ:
            sigma = None
        else:
            sigma = _blockdiag_cm(A.mult_qmatrix(A.scalar(ground.gen())), d)
    carrier = Bimodule(ground, A, qdim, sigma, gen, gen, check=False)
    if twist is None:
        P = [[A.one() if i == j else A.zero() for j in range(d)] for i in range(d)]
        Pinv = P
    else:
        P = [[A.scalar(x) for x in row] for row in twist]
        Pinv = _amatrix_inverse(P, A)
    # products u'_a u_g expanded over the defining basis
    prods = {}
    for a in range(d):
        for g in range(d):
            acc = {}
            for s in range(d):
                c = P[s][a]
                if c.is_zero():
                    continue
                for b, q in U._table(s, g).items():
                    acc[b] = acc.get(b, A.zero()) + c * q
            prods[(a, g)] = acc
    T = TensorOver(carrier, carrier, A)
    gpos = {}
    for w, b in enumerate(T.mbasis):
        if len(b) == 1:
            coord, val = next(iter(b.items()))
            if val == _ONE and coord % absa == 0:
                gpos[coord // absa] = w
    if len(gpos) != d:
        raise RuntimeError("free basis of the dual carrier is not the unit basis")
    mus = A.qbasis_elements()
    delta = []
    counit = []
    unit_coords = list(U.one().coords)
    for beta in range(d):
        for r in range(absa):
            col = {}
            for a in range(d):
                for g in range(d):
                    m = prods[(a, g)].get(beta)
                    if m is None or m.is_zero():
                        continue
                    val = m * mus[r]
                    for tau in range(d):
                        c = Pinv[a][tau]
                        if c.is_zero():
                            continue
                        right = svec_from_dense(A.to_qvec(val * c))
                        col_part = {tau * absa + rr: q for rr, q in right.items()}
                        svec_add_into(col, T.place(gpos[g], col_part))
            delta.append(svec_clean(col))
            counit.append(svec_from_dense(A.to_qvec(unit_coords[beta] * mus[r])))
    return UStarCoring(U, Coring(carrier, delta, counit))


def _blockdiag_cm(dense_rows, blocks):
    absa = len(dense_rows)
    out = []
    for b in range(blocks):
        off = b * absa
        for j in range(absa):
            out.append({off + i: dense_rows[i][j] for i in range(absa) if dense_rows[i][j]})
    return out


def _amatrix_inverse(P, A):
    d = len(P)
    absa = A.abs_degree
    qrows = [[_ZERO] * (d * absa) for _ in range(d * absa)]
    for i in range(d):
        for j in range(d):
            if P[i][j].is_zero():
                continue
            block = A.mult_qmatrix(P[i][j])
            for r in range(absa):
                for s in range(absa):
                    qrows[i * absa + r][j * absa + s] = block[r][s]
    inv = qinverse(qrows)
    out = []
    for i in range(d):
        row = []
        for j in range(d):
            row.append(A.from_qvec([inv[i * absa + r][j * absa] for r in range(absa)]))
        out.append(row)
    return out


def u_comodule(ustar, space, action_cms):
    """Sigma as a right comodule over U*, from a right U-action given as
    one column map per basis element of U."""
    absa = ustar.A.abs_degree
    trho = _sigma_tensor(ustar, space)
    rho = []
    for u in range(space.module.qdim):
        col = {}
        for beta, act in enumerate(action_cms):
            img = act[u]
            if img:
                svec_add_into(col, trho.project_pure(img, {beta * absa: _ONE}))
        rho.append(svec_clean(col))
    return rho


_SIGMA_TENSORS = {}


def _sigma_tensor(ustar, space):
    key = (id(ustar), id(space))
    t = _SIGMA_TENSORS.get(key)
    if t is None:
        t = TensorOver(space.module, ustar.coring.carrier, space.A)
        _SIGMA_TENSORS[key] = t
    return t


class CanUReport:
    __slots__ = ("C", "dom", "can", "rank", "dom_dim", "target_dim", "bijective")

    def __init__(self, C, dom, can, rank, dom_dim, target_dim):
        self.C = C
        self.dom = dom
        self.can = can
        self.rank = rank
        self.dom_dim = dom_dim
        self.target_dim = target_dim
        self.bijective = dom_dim == target_dim == rank


def can_u(ustar, space, action_cms):
    """The map Sigma* (x)_C Sigma -> U*, phi (x) x -> sum phi(x u_a) u_a*,
    where C = End(Sigma_U)."""
    C = R_star(space, action_cms)
    dom = ComatrixCoring(space, C)
    A = space.A
    absa = A.abs_degree
    nq = space.module.qdim
    can = []
    for j in dom.balance.complement_cols():
        w, u = divmod(j, nq)
        phi = dom.ktensor.mbasis[w]
        col = {}
        for beta, act in enumerate(action_cms):
            a = space.pair(phi, act[u])
            if not a.is_zero():
                for r, q in enumerate(A.to_qvec(a)):
                    if q:
                        col[beta * absa + r] = col.get(beta * absa + r, _ZERO) + q
        can.append(svec_clean(col))
    rank = cm_rank(can, ustar.coring.carrier.qdim)
    return CanUReport(C, dom, can, rank, len(can), ustar.coring.carrier.qdim)
