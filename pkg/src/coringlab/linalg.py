"""Exact linear algebra over number fields.

Three layers:

* ``ExactMatrix`` — dense matrices over a :class:`~coringlab.fields.NumberField`,
  with generic leading-1 RREF, kernels and solving (entry arithmetic is
  ExactScalar, so this works in any tower; it is meant for small systems).
* rational fast path — matrices over Q are routed through the row-reduction
  backend (compiled kernel when available), and K-linear systems can be
  flattened to Q by restriction of scalars.
* ``QSpan`` — the canonical form for subspaces: RREF over Q after restriction
  of scalars.  Two subspaces are equal iff their QSpans compare equal; every
  membership/containment decision in the package bottoms out here.
"""

from __future__ import annotations

from fractions import Fraction

from ._backend import kernel
from .fields import QQ, ExactScalar, FieldError


# ---------------------------------------------------------------------------
# dense matrices over a field


class ExactMatrix:
    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field, rows):
        self.field = field
        self.rows = [[field.scalar(x) for x in r] for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError("ragged rows")

    @classmethod
    def identity(cls, field, n):
        one, zero = field.one(), field.zero()
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, nrows, ncols):
        zero = field.zero()
        return cls(field, [[zero] * ncols for _ in range(nrows)])

    @classmethod
    def from_columns(cls, field, cols):
        n = len(cols[0]) if cols else 0
        return cls(field, [[cols[j][i] for j in range(len(cols))] for i in range(n)])

    def column(self, j):
        return [r[j] for r in self.rows]

    def __eq__(self, other):
        return (
            isinstance(other, ExactMatrix)
            and other.field is self.field
            and other.rows == self.rows
        )

    def __repr__(self):
        return "ExactMatrix(%s, %dx%d)" % (self.field.label, self.nrows, self.ncols)

    def __add__(self, other):
        return ExactMatrix(
            self.field,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
        )

    def __sub__(self, other):
        return ExactMatrix(
            self.field,
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
        )

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch")
            cols = [other.column(j) for j in range(other.ncols)]
            return ExactMatrix(
                self.field,
                [
                    [_dot(r, c, self.field) for c in cols]
                    for r in self.rows
                ],
            )
        return ExactMatrix(self.field, [[x * other for x in r] for r in self.rows])

    def apply(self, vec):
        return [_dot(r, vec, self.field) for r in self.rows]

    def transpose(self):
        return ExactMatrix(
            self.field, [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        )

    def is_zero(self):
        return all(x.is_zero() for r in self.rows for x in r)


def _dot(r, c, field):
    acc = field.zero()
    for a, b in zip(r, c):
        if not (a.is_zero() or (isinstance(b, ExactScalar) and b.is_zero())):
            acc = acc + a * b
    return acc


# ---------------------------------------------------------------------------
# RREF / kernels / solving, generic over the field with a Q fast path


def rref(matrix):
    """Leading-1 reduced row echelon form; returns (ExactMatrix, pivot list)."""
    field = matrix.field
    if field is QQ:
        rows = [[x.coeffs[0] for x in r] for r in matrix.rows]
        red, piv = kernel.rref_fractions(rows, matrix.ncols)
        return ExactMatrix(QQ, red), list(piv)
    red, piv = _rref_generic(matrix.rows, matrix.ncols, field)
    return ExactMatrix(field, red), piv


def _rref_generic(rows, ncols, field):
    work = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, len(work)):
            if not work[i][c].is_zero():
                sel = i
                break
        if sel is None:
            continue
        work[r], work[sel] = work[sel], work[r]
        inv = work[r][c].inverse()
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and not work[i][c].is_zero():
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank(matrix):
    return len(rref(matrix)[1])


def kernel_basis(matrix):
    """Exact basis of the null space (list of coordinate vectors)."""
    red, pivots = rref(matrix)
    field = matrix.field
    n = matrix.ncols
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    basis = []
    zero, one = field.zero(), field.one()
    for fc in free:
        v = [zero] * n
        v[fc] = one
        for i, pc in enumerate(pivots):
            v[pc] = -red.rows[i][fc]
        basis.append(v)
    return basis


def solve(matrix, rhs_cols):
    """Solve ``matrix @ x = rhs`` for each column in ``rhs_cols``.

    Returns a list of solutions (free variables set to zero), with None in
    place of inconsistent columns.
    """
    field = matrix.field
    if field is QQ:
        qrows = [[x.coeffs[0] for x in r] for r in matrix.rows]
        qrhs = [[x.coeffs[0] for x in col] for col in rhs_cols]
        qsols = qsolve(qrows, qrhs, matrix.ncols)
        return [
            None if s is None else [QQ.scalar(q) for q in s] for s in qsols
        ]
    nA = matrix.ncols
    aug_rows = [
        list(r) + [col[i] for col in rhs_cols] for i, r in enumerate(matrix.rows)
    ]
    red, pivots = rref(ExactMatrix(field, aug_rows))
    return _read_solutions(red.rows, pivots, nA, len(rhs_cols), field.zero())


def _read_solutions(red_rows, pivots, nA, nrhs, zero):
    sols = []
    bad_rows = [i for i, p in enumerate(pivots) if p >= nA]
    for j in range(nrhs):
        cj = nA + j
        consistent = True
        for i in bad_rows:
            v = red_rows[i][cj]
            nonzero = (not v.is_zero()) if hasattr(v, "is_zero") else bool(v)
            if nonzero:
                consistent = False
                break
        if not consistent:
            sols.append(None)
            continue
        x = [zero] * nA
        for i, p in enumerate(pivots):
            if p < nA:
                x[p] = red_rows[i][cj]
        sols.append(x)
    return sols


def qsolve(qrows, rhs_qcols, ncols=None):
    """Pure-Fraction multi-rhs solver on the row-reduction backend."""
    if ncols is None:
        ncols = len(qrows[0]) if qrows else 0
    aug = [list(r) + [col[i] for col in rhs_qcols] for i, r in enumerate(qrows)]
    if not aug and rhs_qcols:
        # no equations: zero solution for every rhs that is itself zero-length
        return [[Fraction(0)] * ncols for _ in rhs_qcols]
    red, pivots = kernel.rref_fractions(aug, ncols + len(rhs_qcols))
    return _read_solutions(red, pivots, ncols, len(rhs_qcols), Fraction(0))


def qinverse(qrows):
    """Exact inverse of a square Fraction matrix (list-of-rows in, same out)."""
    n = len(qrows)
    eye = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    aug = [list(r) + eye[i] for i, r in enumerate(qrows)]
    red, pivots = kernel.rref_fractions(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) != n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def inverse(matrix):
    if matrix.nrows != matrix.ncols:
        raise ValueError("not square")
    n = matrix.nrows
    field = matrix.field
    if field is QQ:
        inv = qinverse([[x.coeffs[0] for x in r] for r in matrix.rows])
        return ExactMatrix(QQ, inv)
    aug = [list(r) + ExactMatrix.identity(field, n).rows[i] for i, r in enumerate(matrix.rows)]
    red, pivots = rref(ExactMatrix(field, aug))
    if pivots[:n] != list(range(n)) or len(pivots) != n:
        raise ValueError("matrix is singular")
    return ExactMatrix(field, [r[n:] for r in red.rows])


# ---------------------------------------------------------------------------
# restriction of scalars


def flatten_vec(vec, field):
    """K-coordinate vector -> absolute rational coordinates."""
    out = []
    for x in vec:
        out.extend(field.to_qvec(x))
    return out


def unflatten_vec(qvec, field):
    m = field.abs_degree
    return [field.from_qvec(qvec[i * m : (i + 1) * m]) for i in range(len(qvec) // m)]


def solve_k_columns(cols, rhs_cols, field):
    """Solve ``sum_t z_t * cols[t] = rhs`` for K-scalars ``z_t``, by
    restriction of scalars to Q.  Returns per-rhs lists of ExactScalar or
    None for inconsistent columns."""
    mus = field.qbasis_elements()
    qcols = []
    for col in cols:
        for mu in mus:
            qcols.append(flatten_vec([mu * x for x in col], field))
    height = len(qcols[0]) if qcols else len(rhs_cols[0]) * field.abs_degree
    qrows = [[qcols[j][i] for j in range(len(qcols))] for i in range(height)]
    rhs_q = [flatten_vec(r, field) for r in rhs_cols]
    sols = qsolve(qrows, rhs_q, len(qcols))
    out = []
    m = field.abs_degree
    for s in sols:
        if s is None:
            out.append(None)
            continue
        zs = []
        for t in range(len(cols)):
            z = field.zero()
            for r in range(m):
                q = s[t * m + r]
                if q:
                    z = z + mus[r] * field.scalar(q)
            zs.append(z)
        out.append(zs)
    return out


# ---------------------------------------------------------------------------
# canonical subspaces over Q


class QSpan:
    """Canonical subspace of Q^n: the RREF of its generators.

    Equality of QSpans is set equality of subspaces; this is the one
    canonical form used for every subspace comparison in the package.
    """

    __slots__ = ("ambient", "rows", "pivots", "_pivset")

    def __init__(self, ambient, rows, pivots):
        self.ambient = ambient
        self.rows = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)
        self._pivset = set(pivots)

    @classmethod
    def from_qrows(cls, rows, ambient):
        red, piv = kernel.rref_fractions(rows, ambient)
        return cls(ambient, red, piv)

    @classmethod
    def zero(cls, ambient):
        return cls(ambient, [], [])

    @classmethod
    def from_field_vectors(cls, vecs, field, length):
        """Canonicalize the K-span of K-coordinate vectors (restriction of
        scalars: every basis-monomial multiple is thrown into the RREF)."""
        mus = field.qbasis_elements()
        rows = []
        for v in vecs:
            if len(v) != length:
                raise ValueError("vector length mismatch")
            for mu in mus:
                rows.append(flatten_vec([mu * x for x in v], field))
        return cls.from_qrows(rows, length * field.abs_degree)

    @property
    def dim(self):
        return len(self.rows)

    def __eq__(self, other):
        return (
            isinstance(other, QSpan)
            and other.ambient == self.ambient
            and other.rows == self.rows
        )

    def __hash__(self):
        return hash((self.ambient, self.rows))

    def __repr__(self):
        return "QSpan(dim %d in Q^%d)" % (self.dim, self.ambient)

    def reduce(self, qvec):
        """Residual of ``qvec`` after reduction: zero iff the vector lies in
        the span."""
        v = [Fraction(x) for x in qvec]
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                for j in range(p, self.ambient):
                    if row[j]:
                        v[j] -= c * row[j]
        return v

    def contains(self, qvec):
        return not any(self.reduce(qvec))

    def contains_space(self, other):
        return all(self.contains(r) for r in other.rows)

    def sum(self, other):
        return QSpan.from_qrows(list(self.rows) + list(other.rows), self.ambient)

    def complement_cols(self):
        return [c for c in range(self.ambient) if c not in self._pivset]

    def project(self, qvec):
        """Coordinates of ``qvec`` in the quotient Q^n / span, in the
        complement (non-pivot) coordinate system."""
        v = self.reduce(qvec)
        return [v[c] for c in self.complement_cols()]

    def section(self, tvec):
        """The standard section of :meth:`project` (complement unit vectors)."""
        v = [Fraction(0)] * self.ambient
        for c, t in zip(self.complement_cols(), tvec):
            v[c] = Fraction(t)
        return v


def qspan_kernel(qrows, ncols):
    """Kernel of a rational matrix given as Fraction rows, as a QSpan."""
    red, pivots = kernel.rref_fractions(qrows, ncols)
    pivset = set(pivots)
    basis = []
    for fc in range(ncols):
        if fc in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][fc]
        basis.append(v)
    return QSpan.from_qrows(basis, ncols)


# ---------------------------------------------------------------------------
# raw Fraction matrix helpers


def _qmatmul(a, b):
    n = len(a)
    p = len(b[0]) if b else 0
    out = [[Fraction(0)] * p for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k, x in enumerate(ai):
            if x:
                bk = b[k]
                for j in range(p):
                    if bk[j]:
                        oi[j] += x * bk[j]
    return out


def _qapply(mat, vec):
    out = []
    for row in mat:
        acc = Fraction(0)
        for x, v in zip(row, vec):
            if x and v:
                acc += x * v
        out.append(acc)
    return out
