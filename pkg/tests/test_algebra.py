"""Structure theory of finite algebras: radicals, idempotents, certificates."""

from fractions import Fraction

import pytest

from coringlab.algebra import (
    FinAlgebra, matrix_algebra, quaternion_algebra, subalgebra_closure,
)
from coringlab.fields import QQ, field_preset

Qi = field_preset("Qi")


def product_of_rationals(k):
    """Q x ... x Q with k factors."""
    one = QQ.one()
    mult = {(t, t): {t: one} for t in range(k)}
    return FinAlgebra(QQ, k, mult, [one] * k)


def group_algebra_c3():
    one = QQ.one()
    mult = {(i, j): {(i + j) % 3: one} for i in range(3) for j in range(3)}
    return FinAlgebra(QQ, 3, mult, [one, QQ.zero(), QQ.zero()])


def dual_numbers():
    one = QQ.one()
    mult = {(0, 0): {0: one}, (0, 1): {1: one}, (1, 0): {1: one}}
    return FinAlgebra(QQ, 2, mult, [one, QQ.zero()])


def upper_triangular_2():
    one = QQ.one()
    # basis e11, e22, e12
    mult = {
        (0, 0): {0: one}, (1, 1): {1: one},
        (0, 2): {2: one}, (2, 1): {2: one},
    }
    return FinAlgebra(QQ, 3, mult, [one, one, QQ.zero()])


def q_q_qi():
    """Q x Q x Q(i) as a 4-dimensional rational algebra."""
    one = QQ.one()
    mult = {
        (0, 0): {0: one}, (1, 1): {1: one},
        (2, 2): {2: one}, (2, 3): {3: one}, (3, 2): {3: one},
        (3, 3): {2: -one},
    }
    return FinAlgebra(QQ, 4, mult, [one, one, one, QQ.zero()])


def gram_oracle(A):
    """Trace form computed from scratch via left-multiplication matrices."""
    mats = [A.left_mult_matrix(A.basis_vec(i)) for i in range(A.dim)]
    out = []
    for i in range(A.dim):
        row = []
        for j in range(A.dim):
            prod = mats[i] * mats[j]
            tr = A.field.zero()
            for t in range(A.dim):
                tr = tr + prod.rows[t][t]
            row.append(tr)
        out.append(row)
    return out


def test_trace_form_matches_definition():
    for A in (
        matrix_algebra(QQ, 2),
        quaternion_algebra(QQ, Fraction(-1), Fraction(-1)),
        group_algebra_c3(),
        dual_numbers(),
        upper_triangular_2(),
        matrix_algebra(Qi, 2),
    ):
        assert A.trace_form_gram().rows == gram_oracle(A)


def test_matrix_algebra_structure():
    M = matrix_algebra(QQ, 2)
    assert M.dim == 4
    assert M.is_semisimple() and M.is_simple_artinian()
    assert len(M.center_basis()) == 1
    e11 = M.basis_element(0)
    e12 = M.basis_element(1)
    e21 = M.basis_element(2)
    assert e11 * e12 == M.basis_element(1)
    assert e12 * e21 == M.basis_element(0)
    assert (e12 * e12).is_zero()


def test_quaternion_relations_and_division():
    H = quaternion_algebra(QQ, Fraction(-1), Fraction(-1))
    i, j, k = H.basis_element(1), H.basis_element(2), H.basis_element(3)
    minus_one = -H.one()
    assert i * i == minus_one and j * j == minus_one
    assert i * j == k and j * i == -k
    assert H.is_simple_artinian()
    assert H.is_division_certified() is True
    # (1, 1) gives a split algebra: zero divisors, no division certificate
    Hs = quaternion_algebra(QQ, Fraction(1), Fraction(1))
    assert Hs.is_simple_artinian()
    assert Hs.is_division_certified() is False


def test_radicals():
    assert dual_numbers().jacobson_radical() != []
    assert not dual_numbers().is_semisimple()
    T = upper_triangular_2()
    rad = T.jacobson_radical()
    assert len(rad) == 1
    # the radical element squares to zero
    r = rad[0]
    assert all(c.is_zero() for c in T.mul_vec(r, r))
    assert not T.is_simple_artinian()
    assert group_algebra_c3().is_semisimple()


def test_central_idempotents_products():
    # all central idempotents: one subset sum per primitive block
    assert len(product_of_rationals(1).central_idempotents()) == 2
    assert len(product_of_rationals(2).central_idempotents()) == 4
    assert len(product_of_rationals(3).central_idempotents()) == 8
    assert len(q_q_qi().central_idempotents()) == 8
    assert len(group_algebra_c3().central_idempotents()) == 4
    for A in (matrix_algebra(QQ, 2), quaternion_algebra(QQ, Fraction(-1), Fraction(-1))):
        assert len(A.central_idempotents()) == 2  # only 0 and 1


def test_central_idempotents_are_idempotent_and_central():
    A = q_q_qi()
    for e in A.central_idempotents():
        assert A.mul_vec(e, e) == e
        for t in range(A.dim):
            b = A.basis_vec(t)
            assert A.mul_vec(e, b) == A.mul_vec(b, e)


def test_central_idempotents_over_extension_field():
    # non-rational ground field goes through the point-solver route
    M1 = matrix_algebra(Qi, 1)
    assert len(M1.central_idempotents()) == 2


def test_nonsemisimple_idempotents_lift():
    # dual numbers: radical is nilpotent, so only 0 and 1 are idempotent
    assert len(dual_numbers().central_idempotents()) == 2


def test_subalgebra_closure():
    M = matrix_algebra(QQ, 2)
    e11_flat = [QQ.one(), QQ.zero(), QQ.zero(), QQ.zero()]
    S = subalgebra_closure(M, [e11_flat])
    assert S.qdim == 2  # spanned by e11 and the identity
    alg = S.as_algebra()
    assert alg.dim == 2
    assert alg.is_semisimple()
    assert not S.is_simple_artinian()  # Q x Q splits
    assert S.contains_vec(M.unit)


def test_subalgebra_closure_generates_ambient():
    M = matrix_algebra(QQ, 2)
    e12 = [QQ.zero(), QQ.one(), QQ.zero(), QQ.zero()]
    e21 = [QQ.zero(), QQ.zero(), QQ.one(), QQ.zero()]
    S = subalgebra_closure(M, [e12, e21])
    assert S.qdim == 4
    assert S.is_simple_artinian()


def test_norm_form_anisotropy():
    H = quaternion_algebra(QQ, Fraction(-1), Fraction(-1))
    nf = H.norm_form()
    # x0^2 + x1^2 + x2^2 + x3^2 up to sign conventions: definite either way
    vals = [
        nf.evaluate([QQ.scalar(q) for q in pt])
        for pt in ((1, 0, 0, 0), (0, 1, 0, 0), (1, 2, 3, 4))
    ]
    assert all(not v.is_zero() for v in vals)


def test_algebra_axiom_guards():
    one = QQ.one()
    with pytest.raises(ValueError):
        # e1 * e1 = e2 with unit e1 breaks unitality
        FinAlgebra(QQ, 2, {(0, 0): {1: one}}, [one, QQ.zero()])
    with pytest.raises(ValueError):
        # (a a) a = b a = 0 while a (a a) = a b = 1
        FinAlgebra(
            QQ, 3,
            {(0, 0): {0: one}, (0, 1): {1: one}, (1, 0): {1: one},
             (0, 2): {2: one}, (2, 0): {2: one},
             (1, 1): {2: one}, (1, 2): {0: one}},
            [one, QQ.zero(), QQ.zero()],
        )
