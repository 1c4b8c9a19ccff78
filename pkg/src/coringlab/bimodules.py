"""Bimodules over a field extension, in absolute rational coordinates.

Conventions shared by everything built on top:

* A module is finite dimensional over Q and centralized by the ground field:
  the ground generator acts through a single matrix ``sigma`` (both sides).
* The module's base field ``ext`` (the ground field or one extension step
  above it) acts through the generator matrices ``left`` and ``right``;
  either side may be absent for one-sided modules.  Because the whole tower
  action is generated by these matrices, the module axioms reduce to the
  generator relations: each matrix satisfies the relevant minimal polynomial
  and the three matrices commute pairwise.
* Vectors are sparse dicts {coordinate: Fraction}.  Operators are sparse
  column maps: a list indexed by the input coordinate whose entries are
  sparse vectors.

``TensorOver`` realizes M (x)_F N for a field F in the tower by choosing a
free F-basis of M: tensor coordinates are pairs (F-basis vector of M,
rational coordinate of N).  Balancing relations are absorbed into the
coordinates, so building a tensor never row-reduces anything; only genuine
quotients (by coideals or balancing over a subalgebra bigger than the ground
field) do.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import QQ, FieldError
from .linalg import QSpan, qinverse

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# sparse vectors and sparse column maps


def svec_clean(v):
    return {i: c for i, c in v.items() if c}


def svec_to_dense(v, n):
    out = [_ZERO] * n
    for i, c in v.items():
        out[i] = c
    return out


def svec_from_dense(vec):
    return {i: Fraction(c) for i, c in enumerate(vec) if c}


def svec_add_into(acc, v, scale=_ONE):
    if not scale:
        return acc
    for i, c in v.items():
        s = acc.get(i, _ZERO) + scale * c
        if s:
            acc[i] = s
        elif i in acc:
            del acc[i]
    return acc


def svec_scale(v, scale):
    if not scale:
        return {}
    return {i: scale * c for i, c in v.items()}


def svec_eq(a, b):
    return svec_clean(a) == svec_clean(b)


def cm_identity(n):
    return [{i: _ONE} for i in range(n)]


def cm_from_dense_rows(rows):
    ncols = len(rows[0]) if rows else 0
    cols = [{} for _ in range(ncols)]
    for i, row in enumerate(rows):
        for j, c in enumerate(row):
            if c:
                cols[j][i] = Fraction(c)
    return cols


def cm_to_dense_rows(cm, nrows):
    out = [[_ZERO] * len(cm) for _ in range(nrows)]
    for j, col in enumerate(cm):
        for i, c in col.items():
            out[i][j] = c
    return out


def cm_apply(cm, svec):
    out = {}
    for i, c in svec.items():
        svec_add_into(out, cm[i], c)
    return out


def cm_compose(a, b):
    """The column map of x -> a(b(x))."""
    return [cm_apply(a, col) for col in b]


def cm_eq(a, b):
    if len(a) != len(b):
        return False
    return all(svec_eq(x, y) for x, y in zip(a, b))


def cm_is_zero(cm):
    return all(not svec_clean(col) for col in cm)


def cm_lincomb(cms, coeffs):
    out = [{} for _ in range(len(cms[0]))]
    for cm, q in zip(cms, coeffs):
        if not q:
            continue
        for j, col in enumerate(cm):
            svec_add_into(out[j], col, q)
    return out


def cm_power(cm, e):
    out = cm_identity(len(cm))
    for _ in range(e):
        out = cm_compose(cm, out)
    return out


# ---------------------------------------------------------------------------
# modules


def _tower_check(ground, ext):
    if ground is not QQ and ground.base is not QQ:
        raise FieldError("ground field must be Q or one step above Q")
    if ext is not ground and ext.base is not ground:
        raise FieldError("module field must be the ground field or one step above it")


class Bimodule:
    """A two- or one-sided module over ``ext`` centralized by ``ground``."""

    __slots__ = ("ground", "ext", "qdim", "sigma", "left", "right", "_mono", "_fb")

    def __init__(self, ground, ext, qdim, sigma=None, left=None, right=None, check=True):
        _tower_check(ground, ext)
        self.ground = ground
        self.ext = ext
        self.qdim = qdim
        if sigma is None:
            sigma = cm_identity(qdim)
        self.sigma = sigma
        if ext is ground:
            # the base field is the ground field, which is central
            left = sigma
            right = sigma
        self.left = left
        self.right = right
        self._mono = {}
        self._fb = {}
        if check:
            self.check()

    # -- axioms --------------------------------------------------------

    def check(self):
        if self.ground is not QQ:
            self._check_min_poly(self.sigma, QQ, self.ground, None, "sigma")
        for name, mat in (("left", self.left), ("right", self.right)):
            if mat is None or self.ext is self.ground:
                continue
            if not cm_eq(cm_compose(self.sigma, mat), cm_compose(mat, self.sigma)):
                raise ValueError("%s action does not commute with the ground action" % name)
            self._check_min_poly(mat, self.ground, self.ext, self.sigma, name)
        if self.left is not None and self.right is not None:
            if not cm_eq(cm_compose(self.left, self.right), cm_compose(self.right, self.left)):
                raise ValueError("left and right actions do not commute")

    def _check_min_poly(self, mat, coeff_field, field, coeff_action, name):
        acc = [{} for _ in range(self.qdim)]
        power = cm_identity(self.qdim)
        if coeff_field is not QQ:
            coeff_ops = [cm_power(coeff_action, r) for r in range(coeff_field.abs_degree)]
        for j, c in enumerate(field.min_poly):
            if j:
                power = cm_compose(mat, power)
            if coeff_field is QQ:
                q = c.rational_value() if hasattr(c, "rational_value") else Fraction(c)
                term = [svec_scale(col, q) for col in power]
            else:
                qv = coeff_field.to_qvec(coeff_field.scalar(c))
                term = cm_lincomb([cm_compose(op, power) for op in coeff_ops], qv)
            for col_acc, col in zip(acc, term):
                svec_add_into(col_acc, col)
        if not cm_is_zero(acc):
            raise ValueError("%s action does not satisfy the minimal polynomial" % name)

    # -- monomial action matrices --------------------------------------

    def ground_ops(self):
        """Action of the ground field's rational basis monomials."""
        key = ("ground",)
        ops = self._mono.get(key)
        if ops is None:
            ops = [cm_power(self.sigma, r) for r in range(self.ground.abs_degree)]
            self._mono[key] = ops
        return ops

    def mono_ops(self, side):
        """Action of ``ext``'s rational basis monomials on the given side."""
        key = ("mono", side)
        ops = self._mono.get(key)
        if ops is not None:
            return ops
        gen = self.left if side == "left" else self.right
        if gen is None:
            raise ValueError("module has no %s action" % side)
        if self.ext is self.ground:
            ops = self.ground_ops()
        else:
            gops = self.ground_ops()
            ops = []
            power = cm_identity(self.qdim)
            for j in range(self.ext.degree):
                if j:
                    power = cm_compose(gen, power)
                for r in range(self.ground.abs_degree):
                    ops.append(cm_compose(gops[r], power) if r else power)
        self._mono[key] = ops
        return ops

    def f_ops(self, field, side):
        if field is self.ext:
            return self.mono_ops(side)
        if field is self.ground:
            return self.ground_ops()
        raise FieldError("field %s is not a step of this module's tower" % field.label)

    def act(self, side, a, svec):
        """Apply the action of the field element ``a`` on the given side."""
        qv = self.ext.to_qvec(self.ext.scalar(a))
        ops = self.mono_ops(side)
        out = {}
        for t, q in enumerate(qv):
            if q:
                svec_add_into(out, cm_apply(ops[t], svec), q)
        return out

    def op_of(self, side, a):
        """The column map of the action of ``a`` on the given side."""
        qv = self.ext.to_qvec(self.ext.scalar(a))
        return cm_lincomb(self.mono_ops(side), qv)

    # -- free bases over a field in the tower --------------------------

    def f_basis(self, field, side):
        """A free basis over ``field`` acting on ``side``, with the inverse
        coordinate map.

        Returns ``(vectors, phi_inv)`` where ``vectors`` is the basis (as
        sparse vectors) and ``phi_inv`` is the column map sending a module
        vector to its stacked rational coordinates: index ``w * d + t`` holds
        the t-th rational component of the coefficient of basis vector ``w``
        (``d`` the absolute degree of ``field``).
        """
        key = (id(field), side)
        got = self._fb.get(key)
        if got is None:
            got = _free_basis(self.qdim, self.f_ops(field, side))
            self._fb[key] = got
        return got


def _free_basis(qdim, ops):
    deg = len(ops)
    if qdim % deg:
        raise ValueError("dimension %d is not a multiple of the field degree %d" % (qdim, deg))
    if deg == 1:
        return [{c: _ONE} for c in range(qdim)], cm_identity(qdim)
    rank = qdim // deg
    chosen = []
    acc_rows = []
    span = QSpan.zero(qdim)
    for c in range(qdim):
        if len(chosen) == rank:
            break
        unit = {c: _ONE}
        if span.contains(svec_to_dense(unit, qdim)):
            continue
        orbit = [svec_to_dense(cm_apply(op, unit), qdim) for op in ops]
        acc_rows.extend(orbit)
        new_span = QSpan.from_qrows(acc_rows, qdim)
        if new_span.dim != span.dim + deg:
            raise ValueError("module is not free over the field")
        span = new_span
        chosen.append(unit)
    if len(chosen) != rank:
        raise ValueError("free basis extraction did not terminate")
    cols = []
    for unit in chosen:
        for op in ops:
            cols.append(svec_to_dense(cm_apply(op, unit), qdim))
    phi_rows = [[cols[j][i] for j in range(qdim)] for i in range(qdim)]
    phi_inv = cm_from_dense_rows(qinverse(phi_rows))
    return chosen, phi_inv


def regular_bimodule(ground, ext):
    """The field ``ext`` as a bimodule over itself, centralized by ``ground``."""
    n = ext.abs_degree
    if ext is QQ:
        return Bimodule(QQ, QQ, 1)
    mult_gen = cm_from_dense_rows(ext.mult_qmatrix(ext.gen()))
    if ground is ext:
        return Bimodule(ground, ext, n, mult_gen)
    if ground is QQ:
        sigma = None
    else:
        sigma = cm_from_dense_rows(ext.mult_qmatrix(ext.scalar(ground.gen())))
    return Bimodule(ground, ext, n, sigma, mult_gen, mult_gen)


# ---------------------------------------------------------------------------
# tensor products over a field in the tower


class TensorOver:
    """M (x)_F N coordinatized by a free F-basis of M.

    Coordinate ``w * N.qdim + u`` is the basis vector ``m_w`` tensored with
    the u-th rational coordinate vector of N.
    """

    __slots__ = (
        "left_factor", "right_factor", "over", "rank", "qdim",
        "mbasis", "mphi_inv", "mu", "_module",
    )

    def __init__(self, M, N, over, mbasis=None, mphi_inv=None):
        if M.ground is not N.ground:
            raise FieldError("tensor factors live over different ground fields")
        self.left_factor = M
        self.right_factor = N
        self.over = over
        deg = over.abs_degree
        if mbasis is None:
            mbasis, mphi_inv = M.f_basis(over, "right")
        self.mbasis = mbasis
        self.mphi_inv = mphi_inv
        self.rank = M.qdim // deg
        if len(mbasis) != self.rank:
            raise ValueError("basis has wrong rank")
        self.mu = N.f_ops(over, "left")
        self.qdim = self.rank * N.qdim
        self._module = None

    # -- coordinates ---------------------------------------------------

    def expand(self, msvec):
        """F-coordinates of a vector of M over the chosen basis, grouped by
        basis vector: a dict w -> rational coefficient list of length deg."""
        deg = self.over.abs_degree
        raw = cm_apply(self.mphi_inv, msvec)
        out = {}
        for idx, q in raw.items():
            w, t = divmod(idx, deg)
            out.setdefault(w, [_ZERO] * deg)[t] = q
        return out

    def place(self, w, nsvec):
        off = w * self.right_factor.qdim
        return {off + i: c for i, c in nsvec.items()}

    def project_pure(self, msvec, nsvec):
        """Coordinates of the pure tensor m (x) n."""
        out = {}
        for w, coeffs in self.expand(msvec).items():
            acc = {}
            for t, q in enumerate(coeffs):
                if q:
                    svec_add_into(acc, cm_apply(self.mu[t], nsvec), q)
            svec_add_into(out, self.place(w, acc))
        return out

    # -- the tensor as a module ----------------------------------------

    def module(self, check=False):
        if self._module is not None:
            return self._module
        M, N = self.left_factor, self.right_factor
        nq = N.qdim
        sigma = self._blockwise(N.sigma)
        right = self._blockwise(N.right) if N.right is not None else None
        left = None
        if M.left is not None:
            expansions = [self.expand(cm_apply(M.left, b)) for b in self.mbasis]
            left = []
            for w in range(self.rank):
                exp = expansions[w]
                for u in range(nq):
                    col = {}
                    for w2, coeffs in exp.items():
                        acc = {}
                        for t, q in enumerate(coeffs):
                            if q:
                                svec_add_into(acc, self.mu[t][u], q)
                        svec_add_into(col, self.place(w2, acc))
                    left.append(col)
        ext = N.ext if N.ext is not N.ground else M.ext
        self._module = Bimodule(M.ground, ext, self.qdim, sigma, left, right, check=check)
        return self._module

    def _blockwise(self, cm):
        nq = self.right_factor.qdim
        out = []
        for w in range(self.rank):
            off = w * nq
            for u in range(nq):
                out.append({off + i: c for i, c in cm[u].items()})
        return out

    def structural_basis(self):
        """A free basis of the tensor itself over the same field, for use as
        the left factor of an iterated tensor: pairs (w, right-basis vector
        of N), with the blockwise inverse coordinate map."""
        nbasis, nphi_inv = self.right_factor.f_basis(self.over, "right")
        nq = self.right_factor.qdim
        deg = self.over.abs_degree
        basis = [self.place(w, b) for w in range(self.rank) for b in nbasis]
        nrank = len(nbasis)
        phi_inv = []
        for w in range(self.rank):
            for u in range(nq):
                col = {}
                for idx, c in nphi_inv[u].items():
                    v, t = divmod(idx, deg)
                    col[(w * nrank + v) * deg + t] = c
                phi_inv.append(col)
        return basis, phi_inv


# ---------------------------------------------------------------------------
# quotients


def quotient_module(module, span, check=True):
    """The quotient of a module by a stable subspace.

    ``span`` is a QSpan in the module's rational coordinates.  Returns
    ``(quotient, pi, section)`` with ``pi`` and ``section`` as column maps;
    the quotient uses the complement (non-pivot) coordinates of the span.
    """
    n = module.qdim
    if span.ambient != n:
        raise ValueError("span lives in the wrong ambient space")
    comp = span.complement_cols()
    pos = {c: i for i, c in enumerate(comp)}
    pi = [None] * n
    for j in range(n):
        if j in pos:
            pi[j] = {pos[j]: _ONE}
    for row, p in zip(span.rows, span.pivots):
        pi[p] = {pos[c]: -row[c] for c in comp if row[c]}
    section = [{comp[t]: _ONE} for t in range(len(comp))]
    ops = [("sigma", module.sigma), ("left", module.left), ("right", module.right)]
    if check:
        for name, op in ops:
            if op is None:
                continue
            for r, row in enumerate(span.rows):
                if svec_clean(cm_apply(pi, cm_apply(op, svec_from_dense(row)))):
                    raise ValueError(
                        "subspace is not stable under the %s action (row %d)" % (name, r)
                    )
    out_ops = []
    for _, op in ops:
        if op is None:
            out_ops.append(None)
        else:
            out_ops.append([cm_apply(pi, cm_apply(op, s)) for s in section])
    quot = Bimodule(
        module.ground, module.ext, len(comp),
        out_ops[0], out_ops[1], out_ops[2], check=False,
    )
    return quot, pi, section
