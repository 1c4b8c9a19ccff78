"""Column spaces, endomorphism subalgebras and comatrix corings."""

import random
from fractions import Fraction

import pytest

from coringlab.bimodules import cm_apply, svec_eq, svec_to_dense
from coringlab.comatrix import (
    ColumnSpace, ComatrixCoring, EndoSubalgebra, NotASubalgebraOfEnd,
    balance_span, canonical_map, check_comodule, cm_rank, comod_end,
    is_bijective_cm,
)
from coringlab.corings import check_coring
from coringlab.fields import QQ, field_preset
from coringlab.linalg import QSpan

Qi = field_preset("Qi")
F1 = Fraction(1)


def rand_amatrix(space, rng):
    A = space.A
    return [
        [A.from_qvec([Fraction(rng.randint(-4, 4)) for _ in range(A.abs_degree)])
         for _ in range(space.rank)]
        for _ in range(space.rank)
    ]


def test_pairing_is_dual():
    sp = ColumnSpace(Qi, QQ, 2)
    for i in range(2):
        for j in range(2):
            val = sp.pair(sp.estar(i), sp.e(j))
            assert val == (Qi.one() if i == j else Qi.zero())


def test_endo_amatrix_roundtrip():
    sp = ColumnSpace(Qi, QQ, 2)
    rng = random.Random("amatrix")
    for _ in range(10):
        rows = rand_amatrix(sp, rng)
        cm = sp.endo_from_amatrix(rows)
        assert sp.is_right_linear(cm)
        back = sp.amatrix_of(cm)
        assert back == rows


def test_right_linearity_detects_conjugation():
    sp = ColumnSpace(Qi, QQ, 1)
    # complex conjugation is additive but not Q(i)-linear
    conj = [{0: F1}, {1: -F1}]
    assert not sp.is_right_linear(conj)


def test_endo_flat_unflat():
    sp = ColumnSpace(Qi, QQ, 2)
    rng = random.Random("flat")
    for _ in range(5):
        cm = sp.endo_from_amatrix(rand_amatrix(sp, rng))
        assert sp.endo_unflat(sp.endo_flat(cm)) == cm


def test_end_basis_dimension():
    sp = ColumnSpace(Qi, QQ, 2)
    basis = sp.end_basis_cms()
    # End over A of a free rank-2 column space: 2 x 2 matrices over Q(i)
    assert len(basis) == 8
    flats = [sp.endo_flat(cm) for cm in basis]
    assert QSpan.from_qrows(flats, len(flats[0])).dim == 8


def test_endo_subalgebra_lattice():
    sp = ColumnSpace(Qi, QQ, 2)
    scal = EndoSubalgebra.scalars(sp)
    full = EndoSubalgebra.full(sp)
    assert scal.dim == 1 and full.dim == 8
    iId = sp.endo_from_amatrix(
        [[Qi.gen(), Qi.zero()], [Qi.zero(), Qi.gen()]]
    )
    mid = EndoSubalgebra.from_generators(sp, [iId])
    assert mid.dim == 2
    for cm in scal.basis_cms():
        assert mid.contains_cm(cm)
    for cm in mid.basis_cms():
        assert full.contains_cm(cm)
    assert not mid.contains_cm(sp.endo_from_amatrix(
        [[Qi.zero(), Qi.one()], [Qi.zero(), Qi.zero()]]
    ))


def test_from_generators_rejects_nonlinear():
    sp = ColumnSpace(Qi, QQ, 1)
    conj = [{0: F1}, {1: -F1}]
    with pytest.raises(NotASubalgebraOfEnd):
        EndoSubalgebra.from_generators(sp, [conj])


def test_from_generators_closure():
    sp = ColumnSpace(QQ, QQ, 2)
    e12 = sp.endo_from_amatrix([[QQ.zero(), QQ.one()], [QQ.zero(), QQ.zero()]])
    e21 = sp.endo_from_amatrix([[QQ.zero(), QQ.zero()], [QQ.one(), QQ.zero()]])
    bare = EndoSubalgebra.from_generators(sp, [e12, e21], closure=False)
    assert bare.dim == 3  # e12, e21 and the identity, products not added
    closed = EndoSubalgebra.from_generators(sp, [e12, e21])
    assert closed.dim == 4


def test_as_finalgebra_multiplication():
    sp = ColumnSpace(QQ, QQ, 2)
    full = EndoSubalgebra.full(sp)
    alg = full.as_finalgebra()
    assert alg.dim == 4
    assert alg.is_simple_artinian()


def test_balance_span_is_literal_relation_span():
    """balance_span equals the span of phi.b (x) x - phi (x) b.x over bases."""
    sp = ColumnSpace(Qi, QQ, 2)
    iId = sp.endo_from_amatrix([[Qi.gen(), Qi.zero()], [Qi.zero(), Qi.gen()]])
    B = EndoSubalgebra.from_generators(sp, [iId])
    span = balance_span(sp, B)
    kt = sp.ktensor()
    nq = kt.qdim
    rows = []
    for b in B.kbasis_cms():
        bstar = sp.dual_right_action(b)
        for p in range(sp.module.qdim):
            phi = {p: F1}
            for x in range(sp.module.qdim):
                xv = {x: F1}
                diff = dict(kt.project_pure(cm_apply(bstar, phi), xv))
                for t, c in kt.project_pure(phi, cm_apply(b, xv)).items():
                    diff[t] = diff.get(t, Fraction(0)) - c
                rows.append(svec_to_dense(diff, nq))
    literal = QSpan.from_qrows(rows, nq)
    assert span == literal


def test_comatrix_coring_galois_over_scalars():
    sp = ColumnSpace(Qi, QQ, 2)
    B = EndoSubalgebra.scalars(sp)
    com = ComatrixCoring(sp, B)
    assert com.coring.qdim == 16
    assert check_coring(com.coring) == []
    assert check_comodule(sp, com.coring.carrier, com.rho, com.coring) == []
    T = comod_end(sp, com.coring.carrier, com.rho)
    assert T == B
    dom, can = canonical_map(sp, T, com.coring.carrier, com.rho)
    assert is_bijective_cm(can, com.coring.qdim)


def test_comatrix_coring_morita_collapse():
    sp = ColumnSpace(Qi, QQ, 2)
    full = EndoSubalgebra.full(sp)
    com = ComatrixCoring(sp, full)
    # Sigma* (x)_{End} Sigma collapses to the base ring A
    assert com.coring.qdim == 2
    assert check_coring(com.coring) == []


def test_cm_rank_helpers():
    ident = [{0: F1}, {1: F1}, {2: F1}]
    assert cm_rank(ident, 3) == 3 and is_bijective_cm(ident, 3)
    proj = [{0: F1}, {0: F1}, {}]
    assert cm_rank(proj, 3) == 1
    assert not is_bijective_cm(proj, 3)
    assert not is_bijective_cm(ident[:2], 3)  # wrong domain size
