"""Dual rings as endomorphisms, U* corings, and the lattice roundtrips."""

import random
from fractions import Fraction

import pytest

from coringlab.algebra import quaternion_algebra
from coringlab.bimodules import Bimodule, cm_from_dense_rows
from coringlab.comatrix import (
    ColumnSpace, ComatrixCoring, EndoSubalgebra, check_comodule,
)
from coringlab.corings import Coring, check_coring
from coringlab.duality import (
    J_prime, J_star, OpEndAlgebra, R_prime, R_star, can_u, dual_iso_end,
    end_of_left_module, r_prime_j_prime_property, u_comodule, ustar_coring,
    verify_jacobson_bourbaki,
)
from coringlab.fields import QQ, field_preset
from coringlab.galois import J_of, galois_report

Qi = field_preset("Qi")
F1 = Fraction(1)


def rand_invertible(rng, d):
    while True:
        rows = [[Fraction(rng.randint(-3, 3)) for _ in range(d)] for _ in range(d)]
        from coringlab.linalg import qinverse

        try:
            qinverse(rows)
            return rows
        except ValueError:
            continue


def test_ustar_independent_of_dual_basis():
    H = quaternion_algebra(QQ, Fraction(-1), Fraction(-1))
    base = ustar_coring(H)
    assert check_coring(base.coring) == []
    for seed in range(20):
        rng = random.Random("twist:%d" % seed)
        twist = rand_invertible(rng, H.dim)
        twisted = ustar_coring(H, twist=twist)
        assert twisted.coring.delta == base.coring.delta
        assert twisted.coring.counit == base.coring.counit


def test_t2_canonical_map_not_bijective():
    sp = ColumnSpace(QQ, QQ, 2)
    e11 = sp.endo_from_amatrix([[QQ.one(), QQ.zero()], [QQ.zero(), QQ.zero()]])
    e12 = sp.endo_from_amatrix([[QQ.zero(), QQ.one()], [QQ.zero(), QQ.zero()]])
    T2 = EndoSubalgebra.from_generators(sp, [e11, e12])
    U = OpEndAlgebra(sp, T2.span)
    alg = U.as_finalgebra()
    assert alg.dim == 3 and not alg.is_simple_artinian()
    ustar = ustar_coring(alg)
    assert check_coring(ustar.coring) == []
    cms = U.basis_cms()
    rho = u_comodule(ustar, sp, cms)
    assert check_comodule(sp, ustar.coring.carrier, rho, ustar.coring) == []
    rep = can_u(ustar, sp, cms)
    assert rep.C.dim == 1
    assert rep.dom_dim == 4 and rep.rank == 3 and rep.target_dim == 3
    assert not rep.bijective


def test_quaternion_canonical_map_bijective():
    H = quaternion_algebra(QQ, Fraction(-1), Fraction(-1))
    sp = ColumnSpace(QQ, QQ, 4)
    cms = []
    for beta in range(4):
        rows = H.right_mult_matrix(H.basis_vec(beta)).rows
        cms.append(cm_from_dense_rows(
            [[x.rational_value() for x in r] for r in rows]
        ))
    ustar = ustar_coring(H)
    assert check_coring(ustar.coring) == []
    rho = u_comodule(ustar, sp, cms)
    assert check_comodule(sp, ustar.coring.carrier, rho, ustar.coring) == []
    rep = can_u(ustar, sp, cms)
    assert rep.bijective and rep.C.dim == 4
    assert rep.C.as_finalgebra().is_division_certified() is True


def trig_setup():
    mult_i = cm_from_dense_rows(Qi.mult_qmatrix(Qi.gen()))
    R = [dict() for _ in range(4)]
    L = [dict() for _ in range(4)]
    for blk, sign in ((0, 1), (1, -1)):
        for j in range(2):
            for r, c in mult_i[j].items():
                R[blk * 2 + j][blk * 2 + r] = c
                L[blk * 2 + j][blk * 2 + r] = sign * c
    car = Bimodule(QQ, Qi, 4, None, L, R)
    rho = [
        {0: F1, 6: F1}, {1: F1, 7: F1}, {4: F1, 2: -F1}, {5: F1, 3: -F1},
    ]
    sp = ColumnSpace(Qi, QQ, 2)
    return sp, car, rho


def test_dual_iso_end_across_the_lattice():
    sp, car, rho = trig_setup()
    Hend = galois_report(sp, car, rho).T
    for T, dual_dim in (
        (EndoSubalgebra.scalars(sp), 16),
        (Hend, 4),
        (EndoSubalgebra.full(sp), 2),
    ):
        com = ComatrixCoring(sp, T)
        iso = dual_iso_end(com)
        assert iso.onto
        assert iso.dual.algebra.dim == dual_dim
        assert iso.orientation in ("composition", "opposite")


def test_jacobson_bourbaki_small_lattice():
    sp, car, rho = trig_setup()
    Hend = galois_report(sp, car, rho).T
    iId = sp.endo_from_amatrix([[Qi.gen(), Qi.zero()], [Qi.zero(), Qi.gen()]])
    AId = EndoSubalgebra.from_generators(sp, [iId])
    lattice = [
        ("k", EndoSubalgebra.scalars(sp)), ("A", AId),
        ("H", Hend), ("S", EndoSubalgebra.full(sp)),
    ]
    reports = verify_jacobson_bourbaki(sp, lattice)
    dims = [(r.c_dim, r.u_dim) for r in reports]
    assert dims == [(1, 16), (2, 8), (4, 4), (8, 2)]
    for r in reports:
        assert r.ok and r.u_simple_artinian


def test_jacobson_bourbaki_full_n2_lattice(ao2):
    reports = verify_jacobson_bourbaki(ao2.space, ao2.extensions)
    dims = [(r.c_dim, r.u_dim) for r in reports]
    assert dims == [(1, 16), (2, 8), (2, 8), (4, 4), (4, 4), (8, 2)]
    for r in reports:
        assert r.ok and r.u_simple_artinian


def test_primed_maps_rank_one():
    sp = ColumnSpace(Qi, QQ, 1)
    B = EndoSubalgebra.scalars(sp)
    com = ComatrixCoring(sp, B)
    iso = dual_iso_end(com)
    assert iso.onto
    AId = EndoSubalgebra.from_generators(sp, [sp.endo_from_amatrix([[Qi.gen()]])])
    U = J_star(sp, AId)
    assert U.dim == 2
    Jp = J_prime(com, U)
    assert Jp.dim == 2 and Jp == J_of(com, EndoSubalgebra.full(sp))
    Rp = R_prime(com, Jp, iso=iso)
    assert Rp.dim == 2
    flags = r_prime_j_prime_property(com, U, iso=iso)
    assert all(flags.values())
    flags0 = r_prime_j_prime_property(com, end_of_left_module(sp, B), iso=iso)
    assert all(flags0.values())


def test_prime_closure_stabilizes(ao2):
    """Applying R'J' twice equals applying it once."""
    com = ao2.com
    iso = dual_iso_end(com)
    sp = com.space
    picks = [
        J_star(sp, ao2.extensions[1][1]),   # C(alpha) side
        J_star(sp, ao2.extensions[3][1]),   # A_omega side
        end_of_left_module(sp, EndoSubalgebra.scalars(sp)),
    ]
    for U in picks:
        bar = R_prime(com, J_prime(com, U), iso=iso, verify=False)
        barbar = R_prime(com, J_prime(com, bar), iso=iso, verify=False)
        assert barbar == bar


def test_rstar_jstar_are_mutual(ao2):
    sp = ao2.space
    for _name, C in ao2.extensions:
        U = J_star(sp, C)
        back = R_star(sp, U)
        assert back == C
