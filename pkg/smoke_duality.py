from fractions import Fraction

from coringlab.fields import QQ, field_preset
from coringlab.bimodules import Bimodule, cm_from_dense_rows
from coringlab.corings import Coring, check_coring
from coringlab.comatrix import ColumnSpace, EndoSubalgebra, ComatrixCoring, check_comodule
from coringlab.galois import galois_report, J_of
from coringlab.algebra import quaternion_algebra
from coringlab.duality import (
    OpEndAlgebra, commutant_span, end_of_left_module, J_star, R_star,
    dual_iso_end, J_prime, R_prime, r_prime_j_prime_property,
    verify_jacobson_bourbaki, ustar_coring, u_comodule, can_u,
)

Qi = field_preset("Qi")
F1 = Fraction(1)

# ---- T2 counterexample through canU ---------------------------------------
sp2 = ColumnSpace(QQ, QQ, 2)
e11 = sp2.endo_from_amatrix([[QQ.one(), QQ.zero()], [QQ.zero(), QQ.zero()]])
e12 = sp2.endo_from_amatrix([[QQ.zero(), QQ.one()], [QQ.zero(), QQ.zero()]])
T2 = EndoSubalgebra.from_generators(sp2, [e11, e12])
U2 = OpEndAlgebra(sp2, T2.span)
alg2 = U2.as_finalgebra()
assert alg2.dim == 3 and not alg2.is_simple_artinian()
ustar2 = ustar_coring(alg2)
assert not check_coring(ustar2.coring)
cms2 = U2.basis_cms()
rho2 = u_comodule(ustar2, sp2, cms2)
bad = check_comodule(sp2, ustar2.coring.carrier, rho2, ustar2.coring)
assert not bad, bad
rep2 = can_u(ustar2, sp2, cms2)
print("T2 canU: C_dim=%d dom=%d rank=%d target=%d bijective=%s" % (
    rep2.C.dim, rep2.dom_dim, rep2.rank, rep2.target_dim, rep2.bijective))
assert rep2.C.dim == 1            # End(Sigma_T2) = k
assert rep2.dom_dim == 4 and rep2.rank == 3 and not rep2.bijective

# ---- quaternions as an A-ring over Q, regular action ----------------------
H = quaternion_algebra(QQ, Fraction(-1), Fraction(-1))
sp4 = ColumnSpace(QQ, QQ, 4)
cmsH = []
for beta in range(4):
    cm = []
    for j in range(4):
        cm.append({t: c.rational_value() for t, c in H._table(j, beta).items()})
    cmsH.append(cm)
ustarH = ustar_coring(H)
assert not check_coring(ustarH.coring)
rhoH = u_comodule(ustarH, sp4, cmsH)
assert not check_comodule(sp4, ustarH.coring.carrier, rhoH, ustarH.coring)
repH = can_u(ustarH, sp4, cmsH)
print("H canU: C_dim=%d dom=%d rank=%d bijective=%s" % (
    repH.C.dim, repH.dom_dim, repH.rank, repH.bijective))
assert repH.C.dim == 4 and repH.bijective
assert repH.C.as_finalgebra().is_division_certified() is True

# dual-basis independence under a twist
twist = [[2, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 3], [0, 0, 0, 1]]
ustarH2 = ustar_coring(H, twist=twist)
assert ustarH2.coring.delta == ustarH.coring.delta
assert ustarH2.coring.counit == ustarH.coring.counit
print("ustar coring independent of the dual basis twist")

# ---- trig / quaternion instance: dual_iso_end and the JB lattice ----------
sp3 = ColumnSpace(Qi, QQ, 2)
mult_i = cm_from_dense_rows(Qi.mult_qmatrix(Qi.gen()))
R = [dict() for _ in range(4)]
L = [dict() for _ in range(4)]
for blk, sign in ((0, 1), (1, -1)):
    for j in range(2):
        for r, c in mult_i[j].items():
            R[blk * 2 + j][blk * 2 + r] = c
            L[blk * 2 + j][blk * 2 + r] = sign * c
car = Bimodule(QQ, Qi, 4, None, L, R)
rho3 = [
    {0: F1, 6: F1},
    {1: F1, 7: F1},
    {4: F1, 2: -F1},
    {5: F1, 3: -F1},
]
trig = Coring(car, [
    {0: F1, 6: -F1}, {1: F1, 7: -F1}, {2: F1, 4: F1}, {3: F1, 5: F1},
], [{0: F1}, {1: F1}, {}, {}])
Hend = galois_report(sp3, car, rho3).T
scal3 = EndoSubalgebra.scalars(sp3)
full3 = EndoSubalgebra.full(sp3)
iId = sp3.endo_from_amatrix([[Qi.gen(), Qi.zero()], [Qi.zero(), Qi.gen()]])
AId = EndoSubalgebra.from_generators(sp3, [iId])

comH = ComatrixCoring(sp3, Hend)
assert comH.coring.qdim == 4
iso = dual_iso_end(comH)
print("dual_iso_end over H: dual_dim=%d onto=%s orientation=%s" % (
    iso.dual.algebra.dim, iso.onto, iso.orientation))
assert iso.onto and iso.orientation in ("composition", "opposite")

com_full = ComatrixCoring(sp3, full3)
assert com_full.coring.qdim == 2  # Morita collapse to A
iso_full = dual_iso_end(com_full)
assert iso_full.onto and iso_full.dual.algebra.dim == 2

com_k = ComatrixCoring(sp3, scal3)
iso_k = dual_iso_end(com_k)
assert iso_k.onto and iso_k.dual.algebra.dim == 16
print("dual_iso_end onto in all three instances")

jb = verify_jacobson_bourbaki(sp3, [
    ("k", scal3), ("A", AId), ("H", Hend), ("S", full3),
])
for r in jb:
    print("JB %-2s C_dim=%d U_dim=%d sa=%s RJ=%s JR=%s" % (
        r.name, r.c_dim, r.u_dim, r.u_simple_artinian,
        r.roundtrip_RJ, r.roundtrip_JR))
    assert r.ok and r.u_simple_artinian

# ---- primed correspondence on the Sweedler instance -----------------------
sp1 = ColumnSpace(Qi, QQ, 1)
B1 = EndoSubalgebra.scalars(sp1)
com1 = ComatrixCoring(sp1, B1)
iso1 = dual_iso_end(com1)
assert iso1.onto
A1 = EndoSubalgebra.from_generators(
    sp1, [sp1.endo_from_amatrix([[Qi.gen()]])]
)
U1 = J_star(sp1, A1)
assert U1.dim == 2
Jp = J_prime(com1, U1)
assert Jp.dim == 2 and Jp == J_of(com1, EndoSubalgebra.full(sp1))  # Ker(eps)
Rp = R_prime(com1, Jp, iso=iso1)
assert Rp.dim == 2
props = r_prime_j_prime_property(com1, U1, iso=iso1)
print("primed property flags:", props)
assert all(props.values())

flags0 = r_prime_j_prime_property(com1, end_of_left_module(sp1, B1), iso=iso1)
assert all(flags0.values())

print("all duality smoke tests passed")
