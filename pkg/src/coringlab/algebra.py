"""Finite-dimensional associative algebras over a number field.

An algebra is given by structure constants on a distinguished basis; all
coordinates are over the central ground field.  The structural tests
(radical, center, simplicity) are exact:

* Jacobson radical via the trace form of the left regular representation
  (characteristic zero, so the radical is the radical of that form);
* simplicity via semisimplicity plus triviality of idempotents in the
  center; over the rationals the central idempotents come from factoring
  minimal polynomials and splitting by the polynomial CRT, over larger
  base fields from complete rational-point enumeration of the idempotent
  equations;
* division property (dimension at most 4) via a positivity certificate for
  the norm form.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .fields import QQ
from .linalg import (
    ExactMatrix,
    QSpan,
    flatten_vec,
    kernel_basis,
    qsolve,
    solve_k_columns,
    unflatten_vec,
)
from .poly import Poly, symbolic_det
from .polysolve import field_points


class FinAlgebra:
    """Associative unital algebra with a fixed basis over ``field``.

    ``mult`` maps a basis pair ``(i, j)`` to the sparse expansion
    ``{t: c}`` of ``e_i e_j``; missing pairs multiply to zero.
    """

    def __init__(self, field, dim, mult, unit, labels=None, check=True):
        self.field = field
        self.dim = dim
        self.mult = {}
        for (i, j), expansion in mult.items():
            row = {}
            for t, c in expansion.items():
                c = field.scalar(c)
                if not c.is_zero():
                    row[t] = c
            if row:
                self.mult[(i, j)] = row
        self.unit = [field.scalar(c) for c in unit]
        if len(self.unit) != dim:
            raise ValueError("unit vector has wrong length")
        self.labels = list(labels) if labels else ["e%d" % t for t in range(dim)]
        if check:
            self._check_axioms()

    # -- structure ---------------------------------------------------------

    def _check_axioms(self):
        for i in range(self.dim):
            ei = self.basis_vec(i)
            if not _vec_eq(self.mul_vec(self.unit, ei), ei):
                raise ValueError("unit fails on the left of %s" % self.labels[i])
            if not _vec_eq(self.mul_vec(ei, self.unit), ei):
                raise ValueError("unit fails on the right of %s" % self.labels[i])
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self._table(i, j)
                for l in range(self.dim):
                    left = self._expand_left(ij, l)
                    right = self._expand_right(i, self._table(j, l))
                    if left != right:
                        raise ValueError(
                            "associativity fails on (%s, %s, %s)"
                            % (self.labels[i], self.labels[j], self.labels[l])
                        )

    def _table(self, i, j):
        return self.mult.get((i, j), {})

    def _expand_left(self, sparse, l):
        out = {}
        for t, c in sparse.items():
            for u, d in self._table(t, l).items():
                v = c * d
                if u in out:
                    v = out[u] + v
                if v.is_zero():
                    out.pop(u, None)
                else:
                    out[u] = v
        return out

    def _expand_right(self, i, sparse):
        out = {}
        for t, c in sparse.items():
            for u, d in self._table(i, t).items():
                v = c * d
                if u in out:
                    v = out[u] + v
                if v.is_zero():
                    out.pop(u, None)
                else:
                    out[u] = v
        return out

    # -- vectors -----------------------------------------------------------

    def zero_vec(self):
        return [self.field.zero()] * self.dim

    def basis_vec(self, i):
        v = self.zero_vec()
        v[i] = self.field.one()
        return v

    def coerce_vec(self, coords):
        if isinstance(coords, dict):
            v = self.zero_vec()
            for t, c in coords.items():
                v[t] = self.field.scalar(c)
            return v
        v = [self.field.scalar(c) for c in coords]
        if len(v) != self.dim:
            raise ValueError("coordinate vector has wrong length")
        return v

    def mul_vec(self, u, v):
        out = self.zero_vec()
        for i, a in enumerate(u):
            if a.is_zero():
                continue
            for j, b in enumerate(v):
                if b.is_zero():
                    continue
                ab = a * b
                for t, c in self._table(i, j).items():
                    out[t] = out[t] + ab * c
        return out

    def element(self, coords):
        return AlgebraElement(self, self.coerce_vec(coords))

    def one(self):
        return AlgebraElement(self, list(self.unit))

    def basis_element(self, i):
        return AlgebraElement(self, self.basis_vec(i))

    def left_mult_matrix(self, u):
        cols = [self.mul_vec(u, self.basis_vec(j)) for j in range(self.dim)]
        return ExactMatrix.from_columns(self.field, cols)

    def right_mult_matrix(self, u):
        cols = [self.mul_vec(self.basis_vec(j), u) for j in range(self.dim)]
        return ExactMatrix.from_columns(self.field, cols)

    # -- structure theory --------------------------------------------------

    def trace_form_gram(self):
        """Gram matrix of (a, b) -> tr(L_ab) on the basis."""
        traces = []
        for t in range(self.dim):
            tr = self.field.zero()
            for l in range(self.dim):
                c = self._table(t, l).get(l)
                if c is not None:
                    tr = tr + c
            traces.append(tr)
        gram = []
        for i in range(self.dim):
            row = []
            for j in range(self.dim):
                tr = self.field.zero()
                for t, c in self._table(i, j).items():
                    tr = tr + c * traces[t]
                row.append(tr)
            gram.append(row)
        return ExactMatrix(self.field, gram)

    def jacobson_radical(self):
        """Basis of the radical (characteristic zero: trace-form kernel)."""
        return kernel_basis(self.trace_form_gram())

    def is_semisimple(self):
        return not self.jacobson_radical()

    def center_basis(self):
        rows = []
        for i in range(self.dim):
            d = self.left_mult_matrix(self.basis_vec(i)) - self.right_mult_matrix(
                self.basis_vec(i)
            )
            rows.extend(d.rows)
        return kernel_basis(ExactMatrix(self.field, rows))

    def _min_poly_q(self, zvec, unit_vec):
        """Rational minimal polynomial of z inside the unital subalgebra
        with unit ``unit_vec`` (so z^0 = unit), constant first."""
        rows = [[c.rational_value() for c in unit_vec]]
        power = unit_vec
        while True:
            power = self.mul_vec(power, zvec)
            rhs = [c.rational_value() for c in power]
            mat = [[rows[i][t] for i in range(len(rows))] for t in range(self.dim)]
            sol = qsolve(mat, [rhs], len(rows))[0]
            if sol is not None:
                return [-c for c in sol] + [Fraction(1)]
            rows.append(rhs)

    def _eval_poly(self, coeffs_high_first, zvec, unit_vec):
        val = self.zero_vec()
        for c in coeffs_high_first:
            val = self.mul_vec(val, zvec)
            if c:
                fc = self.field.scalar(c)
                val = [val[t] + fc * unit_vec[t] for t in range(self.dim)]
        return val

    def _split_block(self, e, vecs):
        """Split a commutative unital block along a reducible minimal
        polynomial, or return None when the block is certified connected.

        Candidates are the block basis and the pairwise combinations
        v_i + lam*v_j over a grid large enough that some candidate
        separates any two components of the semisimple quotient.
        """
        import sympy

        c = len(vecs)
        x = sympy.Symbol("x")

        def candidates():
            for v in vecs:
                yield v
            for i in range(c):
                for j in range(i + 1, c):
                    for lam in range(1, c * c + 2):
                        fl = self.field.scalar(lam)
                        yield [vecs[i][t] + fl * vecs[j][t] for t in range(self.dim)]

        for z in candidates():
            m = self._min_poly_q(z, e)
            mpoly = sympy.Poly(
                [sympy.Rational(q.numerator, q.denominator) for q in reversed(m)],
                x,
            )
            parts = [p ** k for p, k in mpoly.factor_list()[1]]
            if len(parts) == 1:
                if mpoly.degree() == c:
                    return None
                continue
            out = []
            for q in parts:
                g = mpoly.exquo(q)
                s, _, h = g.gcdex(q)
                epoly = (s * g).rem(mpoly) * (1 / h.LC())
                coeffs = [
                    Fraction(int(r.numerator), int(r.denominator))
                    for r in epoly.all_coeffs()
                ]
                ei = self._eval_poly(coeffs, z, e)
                span = QSpan.from_qrows(
                    [
                        [q2.rational_value() for q2 in self.mul_vec(ei, v)]
                        for v in vecs
                    ],
                    self.dim,
                )
                out.append(
                    (ei, [[self.field.scalar(q2) for q2 in row] for row in span.rows])
                )
            return out
        return None

    def _primitive_central_idempotents_q(self, zb):
        blocks = [(list(self.unit), [list(v) for v in zb])]
        done = []
        while blocks:
            e, vecs = blocks.pop()
            if len(vecs) <= 1:
                done.append(e)
                continue
            split = self._split_block(e, vecs)
            if split is None:
                done.append(e)
            else:
                blocks.extend(split)
        done.sort(key=lambda v: [q.rational_value() for q in v])
        return done

    def central_idempotents(self):
        """All idempotents lying in the center; complete enumeration."""
        zb = self.center_basis()
        if self.field.abs_degree == 1:
            prim = self._primitive_central_idempotents_q(zb)
            out = []
            for mask in range(1 << len(prim)):
                v = self.zero_vec()
                for t, ei in enumerate(prim):
                    if mask >> t & 1:
                        v = [v[r] + ei[r] for r in range(self.dim)]
                out.append(v)
            return out
        c = len(zb)
        vars_ = [Poly.variable(self.field, c, t) for t in range(c)]
        # x = sum z_t zb[t]; equations: coords of x*x - x
        eqs = []
        prods = {}
        for a in range(c):
            for b in range(c):
                prods[(a, b)] = self.mul_vec(zb[a], zb[b])
        for coord in range(self.dim):
            p = Poly(self.field, c, {})
            for a in range(c):
                for b in range(c):
                    q = prods[(a, b)][coord]
                    if not q.is_zero():
                        p = p + vars_[a] * vars_[b] * Poly.const(self.field, c, q)
                lin = zb[a][coord]
                if not lin.is_zero():
                    p = p - vars_[a] * Poly.const(self.field, c, lin)
            if not p.is_zero():
                eqs.append(p)
        res = field_points(eqs, self.field, c)
        if not res.complete:
            raise RuntimeError("idempotent enumeration unexpectedly incomplete")
        out = []
        for pt in res.points:
            v = self.zero_vec()
            for t, z in enumerate(pt):
                for coord in range(self.dim):
                    v[coord] = v[coord] + z * zb[t][coord]
            out.append(v)
        return out

    def is_simple_artinian(self):
        if not self.is_semisimple():
            return False
        idems = self.central_idempotents()
        return len(idems) == 2  # only 0 and 1

    def norm_form(self):
        """det of left multiplication by a generic element, as a Poly."""
        xs = [Poly.variable(self.field, self.dim, t) for t in range(self.dim)]
        entries = [[Poly(self.field, self.dim, {}) for _ in range(self.dim)] for _ in range(self.dim)]
        for i in range(self.dim):
            for j in range(self.dim):
                for t, c in self._table(i, j).items():
                    entries[t][j] = entries[t][j] + xs[i] * Poly.const(
                        self.field, self.dim, c
                    )
        return symbolic_det(entries)

    def is_division_certified(self):
        """True when the norm form is certifiably anisotropic (dim <= 4 and
        positive or negative definite in the visible sense); None when the
        certificate does not apply."""
        if self.dim > 4:
            return None
        nf = self.norm_form()
        if _homogeneous_definite(nf, self.dim):
            return True
        # a rational zero exhibited on a small grid disproves division
        grid = (Fraction(0), Fraction(1), Fraction(-1), Fraction(2))
        for pt in itertools.product(grid, repeat=self.dim):
            if all(q == 0 for q in pt):
                continue
            val = nf.evaluate([self.field.scalar(q) for q in pt])
            if val.is_zero():
                return False
        return None

    def describe(self):
        mult = {}
        for (i, j), row in sorted(self.mult.items()):
            mult["%d,%d" % (i, j)] = {
                str(t): str(c) for t, c in sorted(row.items())
            }
        return {
            "field": self.field.describe(),
            "dim": self.dim,
            "labels": list(self.labels),
            "unit": [str(c) for c in self.unit],
            "mult": mult,
        }

    def __repr__(self):
        return "FinAlgebra(dim %d over %s)" % (self.dim, self.field.label)


def _homogeneous_definite(p, nvars):
    if p.is_zero():
        return False
    signs = set()
    pure = set()
    for e, c in p.terms.items():
        if any(k % 2 for k in e):
            return False
        q = c.rational_value() if c.is_rational() else None
        if q is None:
            return False
        signs.add(1 if q > 0 else -1)
        nz = [i for i, k in enumerate(e) if k]
        if len(nz) == 1:
            pure.add(nz[0])
    return len(signs) == 1 and pure == set(range(nvars))


def _vec_eq(u, v):
    return all((a - b).is_zero() for a, b in zip(u, v))


class AlgebraElement:
    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        self.algebra = algebra
        self.coords = coords

    def __add__(self, other):
        return AlgebraElement(
            self.algebra, [a + b for a, b in zip(self.coords, other.coords)]
        )

    def __sub__(self, other):
        return AlgebraElement(
            self.algebra, [a - b for a, b in zip(self.coords, other.coords)]
        )

    def __neg__(self):
        return AlgebraElement(self.algebra, [-a for a in self.coords])

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return AlgebraElement(
                self.algebra, self.algebra.mul_vec(self.coords, other.coords)
            )
        s = self.algebra.field.scalar(other)
        return AlgebraElement(self.algebra, [a * s for a in self.coords])

    def __rmul__(self, other):
        s = self.algebra.field.scalar(other)
        return AlgebraElement(self.algebra, [s * a for a in self.coords])

    def __pow__(self, n):
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self):
        return all(a.is_zero() for a in self.coords)

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraElement)
            and other.algebra is self.algebra
            and _vec_eq(other.coords, self.coords)
        )

    def __repr__(self):
        bits = []
        for t, c in enumerate(self.coords):
            if not c.is_zero():
                bits.append("(%r)%s" % (c, self.algebra.labels[t]))
        return " + ".join(bits) if bits else "0"


# ---------------------------------------------------------------------------
# standard constructions


def matrix_algebra(field, n):
    """M_n over the field; basis e_{ij}, row-major."""
    mult = {}
    for i in range(n):
        for j in range(n):
            for l in range(n):
                mult[(i * n + j, j * n + l)] = {i * n + l: field.one()}
    unit = {}
    for i in range(n):
        unit[i * n + i] = field.one()
    unit_vec = [unit.get(t, field.zero()) for t in range(n * n)]
    labels = ["e%d%d" % (i + 1, j + 1) for i in range(n) for j in range(n)]
    return FinAlgebra(field, n * n, mult, unit_vec, labels=labels)


def quaternion_algebra(field, a, b):
    """The algebra (a, b | field): i^2 = a, j^2 = b, ji = -ij."""
    a = field.scalar(a)
    b = field.scalar(b)
    one = field.one()
    # basis 1, i, j, k with k = ij
    mult = {
        (0, 0): {0: one}, (0, 1): {1: one}, (0, 2): {2: one}, (0, 3): {3: one},
        (1, 0): {1: one}, (2, 0): {2: one}, (3, 0): {3: one},
        (1, 1): {0: a},
        (2, 2): {0: b},
        (1, 2): {3: one},
        (2, 1): {3: -one},
        (1, 3): {2: a},
        (3, 1): {2: -a},
        (2, 3): {1: -b},
        (3, 2): {1: b},
        (3, 3): {0: -a * b},
    }
    unit = [one, field.zero(), field.zero(), field.zero()]
    return FinAlgebra(field, 4, mult, unit, labels=["1", "i", "j", "k"])


# ---------------------------------------------------------------------------
# subalgebras


class Subalgebra:
    """A unital subalgebra of an ambient FinAlgebra, in canonical form.

    The canonical form is the QSpan of the subspace after restriction of
    scalars, so equality and containment of subalgebras are decidable by
    comparison.
    """

    def __init__(self, ambient, span, gens):
        self.ambient = ambient
        self.span = span
        self.gens = gens

    @property
    def qdim(self):
        return self.span.dim

    @property
    def kdim(self):
        m = self.ambient.field.abs_degree
        if self.span.dim % m:
            raise ValueError("subspace is not defined over the ground field")
        return self.span.dim // m

    def contains_vec(self, vec):
        return self.span.contains(flatten_vec(vec, self.ambient.field))

    def __eq__(self, other):
        return (
            isinstance(other, Subalgebra)
            and other.ambient is self.ambient
            and other.span == self.span
        )

    def __le__(self, other):
        return other.span.contains_space(self.span)

    def __hash__(self):
        return hash(self.span)

    def __repr__(self):
        return "Subalgebra(kdim %d of %r)" % (self.kdim, self.ambient)

    def basis_vecs(self):
        field = self.ambient.field
        return [unflatten_vec(list(r), field) for r in self.span.rows]

    def as_algebra(self, check=True):
        """Abstract FinAlgebra on the canonical basis of the subspace."""
        field = self.ambient.field
        basis = self.basis_vecs()
        d = len(basis)
        prods = []
        for u in basis:
            for v in basis:
                prods.append(self.ambient.mul_vec(u, v))
        sols = solve_k_columns(basis, prods, field)
        mult = {}
        idx = 0
        for i in range(d):
            for j in range(d):
                s = sols[idx]
                idx += 1
                if s is None:
                    raise ValueError("subspace is not closed under multiplication")
                row = {t: c for t, c in enumerate(s) if not c.is_zero()}
                if row:
                    mult[(i, j)] = row
        unit_sol = solve_k_columns(basis, [self.ambient.unit], field)[0]
        if unit_sol is None:
            raise ValueError("subalgebra does not contain the unit")
        return FinAlgebra(field, d, mult, unit_sol, check=check)

    def is_simple_artinian(self):
        return self.as_algebra(check=False).is_simple_artinian()


def subalgebra_closure(ambient, gen_vectors, include_unit=True):
    """Smallest unital subalgebra containing the given coordinate vectors."""
    field = ambient.field
    gens = [ambient.coerce_vec(v) for v in gen_vectors]
    seed = list(gens)
    if include_unit:
        seed.append(list(ambient.unit))
    span = QSpan.from_field_vectors(seed, field, ambient.dim)
    while True:
        basis = [unflatten_vec(list(r), field) for r in span.rows]
        vecs = list(basis)
        for u in basis:
            for v in basis:
                vecs.append(ambient.mul_vec(u, v))
        new = QSpan.from_field_vectors(vecs, field, ambient.dim)
        if new == span:
            return Subalgebra(ambient, span, gens)
        span = new
