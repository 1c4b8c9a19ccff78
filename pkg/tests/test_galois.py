"""The J/R correspondence, closure behavior and conjugacy certificates."""

from fractions import Fraction

import pytest

from coringlab.bimodules import cm_apply
from coringlab.comatrix import (
    ColumnSpace, ComatrixCoring, EndoSubalgebra, check_comodule, comod_end,
)
from coringlab.galois import (
    J_of, NoIsomorphismSupplied, NotIntermediate, R_of, conjugacy,
    enumerate_coideals, galois_report, is_galois, is_simple_cosemisimple,
    operator_min_poly, proposition_properties, quotient_comodule,
    scalar_commutant, verify_correspondence,
)
from coringlab.fields import QQ, field_preset

Qi = field_preset("Qi")
F1 = Fraction(1)


@pytest.fixture(scope="module")
def sweedler():
    space = ColumnSpace(Qi, QQ, 1)
    B = EndoSubalgebra.scalars(space)
    return space, B, ComatrixCoring(space, B)


def test_j_of_endpoints(sweedler):
    space, B, com = sweedler
    S = EndoSubalgebra.full(space)
    assert J_of(com, B).dim == 0
    Jfull = J_of(com, S)
    assert Jfull.dim == 2  # kernel of the counit
    with pytest.raises(NotIntermediate):
        J_of(ComatrixCoring(space, S), B)


def test_j_of_monotone(sweedler):
    space, B, com = sweedler
    S = EndoSubalgebra.full(space)
    assert J_of(com, S).contains_space(J_of(com, B))


def test_roundtrips_rank_one(sweedler):
    space, B, com = sweedler
    S = EndoSubalgebra.full(space)
    for rep in verify_correspondence(com, [("base", B), ("full", S)]):
        assert rep.ok
        assert rep.galois and rep.simple_cosemisimple
    # R_of inverts J_of directly as well
    assert R_of(com, J_of(com, S)) == S


def test_enumerate_coideals_sweedler(sweedler):
    _, _, com = sweedler
    coideals, complete = enumerate_coideals(com.coring)
    assert [c.dim for c in coideals] == [0, 2]
    assert complete


def test_scalar_commutant_closure(sweedler):
    space, B, com = sweedler
    g = com.project_pure({0: F1}, {0: F1})
    assert scalar_commutant(com.coring.carrier, g).dim == 1
    quot, _rho = quotient_comodule(com, J_of(com, EndoSubalgebra.full(space)))
    gq = cm_apply(quot.pi, g)
    assert scalar_commutant(quot.coring.carrier, gq).dim == 2


def test_proposition_properties(sweedler):
    space, B, com = sweedler
    S = EndoSubalgebra.full(space)
    flags = proposition_properties(com, C=S, jspan=J_of(com, S))
    assert flags and all(flags.values())
    flags_base = proposition_properties(com, C=B, jspan=J_of(com, B))
    assert flags_base and all(flags_base.values())


def test_t2_closure_jumps():
    sp = ColumnSpace(QQ, QQ, 2)
    B = EndoSubalgebra.scalars(sp)
    e11 = sp.endo_from_amatrix([[QQ.one(), QQ.zero()], [QQ.zero(), QQ.zero()]])
    e12 = sp.endo_from_amatrix([[QQ.zero(), QQ.one()], [QQ.zero(), QQ.zero()]])
    T2 = EndoSubalgebra.from_generators(sp, [e11, e12])
    assert T2.dim == 3 and not T2.is_simple_artinian()
    com = ComatrixCoring(sp, B)
    S = EndoSubalgebra.full(sp)
    J = J_of(com, T2)
    # the balancing relations of the triangular algebra already cut the
    # counit kernel, so J cannot tell T2 and the full algebra apart
    assert J.dim == 3 and J == J_of(com, S)
    rep = verify_correspondence(com, [("T2", T2)])[0]
    assert not rep.simple_artinian
    assert not rep.roundtrip_RJ and rep.R == S
    assert rep.roundtrip_JR


def trig_comodule():
    from coringlab.bimodules import Bimodule, cm_from_dense_rows
    from coringlab.corings import Coring

    mult_i = cm_from_dense_rows(Qi.mult_qmatrix(Qi.gen()))
    R = [dict() for _ in range(4)]
    L = [dict() for _ in range(4)]
    for blk, sign in ((0, 1), (1, -1)):
        for j in range(2):
            for r, c in mult_i[j].items():
                R[blk * 2 + j][blk * 2 + r] = c
                L[blk * 2 + j][blk * 2 + r] = sign * c
    car = Bimodule(QQ, Qi, 4, None, L, R)
    trig = Coring(car, [
        {0: F1, 6: -F1}, {1: F1, 7: -F1}, {2: F1, 4: F1}, {3: F1, 5: F1},
    ], [{0: F1}, {1: F1}, {}, {}])
    sp = ColumnSpace(Qi, QQ, 2)
    rho = [
        {0: F1, 6: F1}, {1: F1, 7: F1}, {4: F1, 2: -F1}, {5: F1, 3: -F1},
    ]
    return sp, car, rho, trig


def test_trig_comodule_is_galois():
    sp, car, rho, trig = trig_comodule()
    assert check_comodule(sp, car, rho, trig) == []
    rep = galois_report(sp, car, rho)
    assert rep.verdict and rep.can_rank == rep.target_dim == 4
    assert rep.T.dim == 4
    assert is_galois(sp, car, rho)
    ok, cert = is_simple_cosemisimple(sp, car, rho)
    assert ok
    assert cert["end_simple_artinian"] and cert["can_bijective"]
    assert cert["end_dim"] == 4


def test_conjugacy_explicit_identification():
    sp, car, rho, _ = trig_comodule()
    H = comod_end(sp, car, rho)
    cert = conjugacy(sp, H, H, H.basis_cms(), H.basis_cms())
    assert cert.conjugate and cert.witness is not None
    assert cert.verdict == "conjugate"


def test_conjugacy_discovery_and_min_poly():
    sp = ColumnSpace(Qi, QQ, 2)
    iId = sp.endo_from_amatrix([[Qi.gen(), Qi.zero()], [Qi.zero(), Qi.gen()]])
    AId = EndoSubalgebra.from_generators(sp, [iId])
    assert operator_min_poly(iId, sp.module.qdim) == [F1, Fraction(0), F1]
    cert = conjugacy(sp, AId, AId, [iId])
    assert cert.conjugate and cert.candidates == 2


def test_conjugacy_argument_guards():
    sp = ColumnSpace(Qi, QQ, 2)
    iId = sp.endo_from_amatrix([[Qi.gen(), Qi.zero()], [Qi.zero(), Qi.gen()]])
    AId = EndoSubalgebra.from_generators(sp, [iId])
    scal = EndoSubalgebra.scalars(sp)
    with pytest.raises(ValueError):
        conjugacy(sp, AId, AId, scal.basis_cms())  # does not generate AId
    full = EndoSubalgebra.full(sp)
    with pytest.raises(NoIsomorphismSupplied):
        conjugacy(sp, full, full, full.basis_cms())
