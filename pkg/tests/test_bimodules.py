"""Sparse vectors, column maps, bimodules and balanced tensor products."""

import random
from fractions import Fraction

import pytest

from coringlab.bimodules import (
    Bimodule, TensorOver, cm_apply, cm_compose, cm_eq, cm_from_dense_rows,
    cm_identity, cm_lincomb, cm_power, cm_to_dense_rows, quotient_module,
    svec_add_into, svec_eq, svec_from_dense, svec_scale, svec_to_dense,
)
from coringlab.fields import QQ, field_preset
from coringlab.linalg import QSpan

Qi = field_preset("Qi")
F1 = Fraction(1)


def rand_cm(seed, n, density=0.4):
    rng = random.Random(seed)
    return [
        {t: Fraction(rng.randint(-5, 5)) for t in range(n)
         if rng.random() < density and rng.randint(-5, 5)}
        for _ in range(n)
    ]


def test_svec_roundtrip_and_ops():
    v = {0: F1, 3: Fraction(-2, 3)}
    dense = svec_to_dense(v, 5)
    assert dense == [F1, 0, 0, Fraction(-2, 3), 0]
    assert svec_from_dense(dense) == v
    acc = dict(v)
    svec_add_into(acc, {0: -F1, 1: F1})
    assert acc == {1: F1, 3: Fraction(-2, 3)}
    assert svec_scale(v, Fraction(3)) == {0: Fraction(3), 3: Fraction(-2)}
    assert svec_eq({}, {0: Fraction(0)}) or svec_eq({}, {})


def test_cm_compose_associative():
    for seed in range(10):
        a = rand_cm("a:%d" % seed, 6)
        b = rand_cm("b:%d" % seed, 6)
        c = rand_cm("c:%d" % seed, 6)
        assert cm_eq(
            cm_compose(cm_compose(a, b), c), cm_compose(a, cm_compose(b, c))
        )
        v = {0: F1, 2: Fraction(7, 2)}
        assert svec_eq(
            cm_apply(cm_compose(a, b), v), cm_apply(a, cm_apply(b, v))
        )


def test_cm_identity_lincomb_power():
    n = 5
    ident = cm_identity(n)
    a = rand_cm("p", n)
    assert cm_eq(cm_compose(a, ident), a) and cm_eq(cm_compose(ident, a), a)
    two_a = cm_lincomb([a, a], [F1, F1])
    assert cm_eq(two_a, cm_lincomb([a], [Fraction(2)]))
    assert cm_eq(cm_power(a, 0), ident)
    assert cm_eq(cm_power(a, 3), cm_compose(a, cm_compose(a, a)))
    rows = cm_to_dense_rows(a, n)
    assert cm_eq(cm_from_dense_rows(rows), a)


def test_regular_bimodule_actions():
    mult_i = cm_from_dense_rows(Qi.mult_qmatrix(Qi.gen()))
    areg = Bimodule(QQ, Qi, 2, None, mult_i, mult_i)
    v = cm_apply(mult_i, {0: F1})  # the vector of i
    w = areg.act("left", Qi.element([1, 1]), v)  # (1+i) * i = -1 + i
    assert w == {0: -F1, 1: F1}
    # op_of agrees with act on the whole basis
    for a in Qi.qbasis_elements():
        op = areg.op_of("left", a)
        for j in range(2):
            assert svec_eq(cm_apply(op, {j: F1}), areg.act("left", a, {j: F1}))


def test_tensor_balancing():
    """m.a (x) n = m (x) a.n for every basis triple, the defining relation."""
    mult_i = cm_from_dense_rows(Qi.mult_qmatrix(Qi.gen()))
    areg = Bimodule(QQ, Qi, 2, None, mult_i, mult_i)
    T = TensorOver(areg, areg, Qi)
    for a in Qi.qbasis_elements():
        for m in range(2):
            for n in range(2):
                left = T.project_pure(areg.act("right", a, {m: F1}), {n: F1})
                right = T.project_pure({m: F1}, areg.act("left", a, {n: F1}))
                assert svec_eq(left, right)
    assert T.rank == 1 and T.qdim == 2
    # i (x) i = 1 (x) i*i = -(1 (x) 1)
    t = T.project_pure({1: F1}, {1: F1})
    assert t == {0: -F1}


def test_tower_tensors():
    k = field_preset("Qw3")
    A = k.extend([-2, 0, 0, 1], "x")
    assert A.abs_degree == 6
    mult_x = cm_from_dense_rows(A.mult_qmatrix(A.gen()))
    mult_w = cm_from_dense_rows(A.mult_qmatrix(A.scalar(k.gen())))
    breg = Bimodule(k, A, 6, mult_w, mult_x, mult_x)
    TB = TensorOver(breg, breg, A)
    assert TB.rank == 1 and TB.qdim == 6
    xv = cm_apply(mult_x, {0: F1})
    assert TB.project_pure(xv, xv) == cm_apply(mult_x, xv)  # x (x) x = 1 (x) x^2
    TBk = TensorOver(breg, breg, k)
    assert TBk.rank == 3 and TBk.qdim == 18
    TBk.module().check()


def test_quotient_module():
    mult_i = cm_from_dense_rows(Qi.mult_qmatrix(Qi.gen()))
    n = 4
    lm = [dict() for _ in range(n)]
    for blk in range(2):
        for j in range(2):
            for idx, c in mult_i[j].items():
                lm[blk * 2 + j][blk * 2 + idx] = c
    M = Bimodule(QQ, Qi, n, None, lm, lm)
    diag = QSpan.from_qrows(
        [svec_to_dense({j: F1, 2 + j: F1}, n) for j in range(2)], n
    )
    quot, pi, sect = quotient_module(M, diag)
    assert quot.qdim == 2
    quot.check()
    assert cm_eq(cm_compose(pi, sect), cm_identity(2))
    # a subspace the action moves is rejected
    with pytest.raises(ValueError):
        quotient_module(M, QSpan.from_qrows([svec_to_dense({0: F1}, n)], n))


def test_free_basis_after_shuffle():
    k = field_preset("Qw3")
    A = k.extend([-2, 0, 0, 1], "x")
    mult_x = cm_from_dense_rows(A.mult_qmatrix(A.gen()))
    mult_w = cm_from_dense_rows(A.mult_qmatrix(A.scalar(k.gen())))
    n = 12
    sig = [dict() for _ in range(n)]
    lm = [dict() for _ in range(n)]
    for blk in range(2):
        for j in range(6):
            for idx, c in mult_w[j].items():
                sig[blk * 6 + j][blk * 6 + idx] = c
            for idx, c in mult_x[j].items():
                lm[blk * 6 + j][blk * 6 + idx] = c
    perm = [3, 1, 4, 0, 5, 2, 9, 7, 10, 6, 11, 8]
    P = [{perm[j]: F1} for j in range(n)]
    Pinv = [{perm.index(j): F1} for j in range(n)]
    M2 = Bimodule(k, A, n, cm_compose(P, cm_compose(sig, Pinv)),
                  cm_compose(P, cm_compose(lm, Pinv)),
                  cm_compose(P, cm_compose(lm, Pinv)))
    basis, phi_inv = M2.f_basis(A, "right")
    assert len(basis) == 2
    breg = Bimodule(k, A, 6, mult_w, mult_x, mult_x)
    T2 = TensorOver(M2, breg, A)
    vec = {0: Fraction(2), 5: -F1, 7: Fraction(3)}
    exp = T2.expand(vec)
    rebuilt = {}
    for w, coeffs in exp.items():
        a = A.from_qvec(coeffs)
        for idx, c in M2.act("right", a, basis[w]).items():
            rebuilt[idx] = rebuilt.get(idx, Fraction(0)) + c
    assert svec_eq(rebuilt, vec)
