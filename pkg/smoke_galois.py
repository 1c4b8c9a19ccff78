from fractions import Fraction

from coringlab.fields import QQ, field_preset
from coringlab.bimodules import Bimodule, cm_from_dense_rows, svec_to_dense
from coringlab.corings import Coring, check_coring
from coringlab.comatrix import ColumnSpace, EndoSubalgebra, ComatrixCoring, comod_end, check_comodule
from coringlab.galois import (
    J_of, R_of, quotient_comodule, verify_correspondence, proposition_properties,
    galois_report, is_galois, is_simple_cosemisimple, enumerate_coideals,
    scalar_commutant, conjugacy, operator_min_poly, NotIntermediate,
)

Qi = field_preset("Qi")
F1 = Fraction(1)

# ---- Sweedler instance: Q inside Q(i), rank 1 -----------------------------
space = ColumnSpace(Qi, QQ, 1)
B = EndoSubalgebra.scalars(space)
S = EndoSubalgebra.full(space)
com = ComatrixCoring(space, B)

J0 = J_of(com, B)
assert J0.dim == 0
Jfull = J_of(com, S)
assert Jfull.dim == 2, Jfull.dim  # Ker(counit)
try:
    J_of(ComatrixCoring(space, S), B)
    raise SystemExit("NotIntermediate not raised")
except NotIntermediate:
    pass

reports = verify_correspondence(com, [("base", B), ("full", S)])
for r in reports:
    print("%-5s J_dim=%d R_dim=%d RJ=%s JR=%s galois=%s scs=%s (%.2fs)" % (
        r.name, r.j_dim, r.r_dim, r.roundtrip_RJ, r.roundtrip_JR,
        r.galois, r.simple_cosemisimple, r.seconds))
    assert r.ok

coideals, complete = enumerate_coideals(com.coring)
print("sweedler coideals:", [c.dim for c in coideals], "complete:", complete)
assert [c.dim for c in coideals] == [0, 2] and complete

# closure formula on the distinguished grouplike 1 (x) 1
g = com.project_pure({0: F1}, {0: F1})
cw0 = scalar_commutant(com.coring.carrier, g)
assert cw0.dim == 1  # only Q commutes before quotienting
quot, rho_bar = quotient_comodule(com, Jfull)
from coringlab.bimodules import cm_apply
gq = cm_apply(quot.pi, g)
cw1 = scalar_commutant(quot.coring.carrier, gq)
assert cw1.dim == 2  # everything commutes in the trivial quotient
print("closure formula dims ok (1 then 2)")

props = proposition_properties(com, C=S, jspan=Jfull)
print("proposition flags:", props)
assert all(props.values())

# ---- T2 upper triangular counterexample -----------------------------------
sp2 = ColumnSpace(QQ, QQ, 2)
B2 = EndoSubalgebra.scalars(sp2)
e11 = sp2.endo_from_amatrix([[QQ.one(), QQ.zero()], [QQ.zero(), QQ.zero()]])
e12 = sp2.endo_from_amatrix([[QQ.zero(), QQ.one()], [QQ.zero(), QQ.zero()]])
T2 = EndoSubalgebra.from_generators(sp2, [e11, e12])
assert T2.dim == 3
assert not T2.is_simple_artinian()
com2 = ComatrixCoring(sp2, B2)
J = J_of(com2, T2)
S2 = EndoSubalgebra.full(sp2)
# the extra balancing relations of T2 already fill out Ker(counit)
assert J.dim == 3 and J == J_of(com2, S2), J.dim
r2 = verify_correspondence(com2, [("T2", T2)])[0]
print("T2: sa=%s J_dim=%d R_dim=%d RJ=%s JR=%s" % (
    r2.simple_artinian, r2.j_dim, r2.r_dim, r2.roundtrip_RJ, r2.roundtrip_JR))
assert not r2.simple_artinian
assert not r2.roundtrip_RJ and r2.R == S2  # closure jumps to all of M_2
assert r2.roundtrip_JR  # J(T2) = Ker(counit) is already closed
print("T2 closure behaves as expected on the J/R side")

# ---- trigonometric coring as a comodule -----------------------------------
mult_i = cm_from_dense_rows(Qi.mult_qmatrix(Qi.gen()))
R = [dict() for _ in range(4)]
L = [dict() for _ in range(4)]
for blk, sign in ((0, 1), (1, -1)):
    for j in range(2):
        for r, c in mult_i[j].items():
            R[blk * 2 + j][blk * 2 + r] = c
            L[blk * 2 + j][blk * 2 + r] = sign * c
car = Bimodule(QQ, Qi, 4, None, L, R)
delta = [
    {0: F1, 6: -F1},
    {1: F1, 7: -F1},
    {2: F1, 4: F1},
    {3: F1, 5: F1},
]
counit = [{0: F1}, {1: F1}, {}, {}]
trig = Coring(car, delta, counit)
sp3 = ColumnSpace(Qi, QQ, 2)
rho3 = [
    {0: F1, 6: F1},
    {1: F1, 7: F1},
    {4: F1, 2: -F1},
    {5: F1, 3: -F1},
]
assert not check_comodule(sp3, car, rho3, trig)
rep3 = galois_report(sp3, car, rho3)
assert rep3.verdict, (rep3.dom_dim, rep3.can_rank)
H = rep3.T
print("trig: galois, comod_end dim", H.dim)
assert H.dim == 4
alg = H.as_finalgebra()
assert alg.is_simple_artinian() and alg.is_division_certified() is True

# trivial conjugacy: H against itself with identity identification
cert = conjugacy(sp3, H, H, H.basis_cms(), H.basis_cms())
assert cert.conjugate and cert.witness is not None
print("H ~ H with explicit identification: ok")

# discovery route: scalars A.Id, generator i.Id, roots +-i give conjugacy
iId = sp3.endo_from_amatrix([[Qi.gen(), Qi.zero()], [Qi.zero(), Qi.gen()]])
AId = EndoSubalgebra.from_generators(sp3, [iId])
assert AId.dim == 2
mp = operator_min_poly(iId, sp3.module.qdim)
assert mp == [F1, Fraction(0), F1], mp  # t^2 + 1
cert2 = conjugacy(sp3, AId, AId, [iId])
assert cert2.conjugate and cert2.candidates == 2
print("A.Id ~ A.Id by discovered identification: ok,", cert2.candidates, "roots")

print("all galois smoke tests passed")
