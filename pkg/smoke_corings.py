from fractions import Fraction

from coringlab.fields import QQ, field_preset
from coringlab.bimodules import Bimodule, cm_from_dense_rows, cm_identity
from coringlab.corings import (
    Coring, check_coring, grouplike_elements, dual_ring, quotient_coring,
    check_coideal, NotACoideal,
)
from coringlab.comatrix import (
    ColumnSpace, EndoSubalgebra, ComatrixCoring, comod_end, canonical_map,
    check_comodule, is_bijective_cm, cm_rank,
)

Qi = field_preset("Qi")
F1 = Fraction(1)

# ---- trigonometric coring over Q(i), basis {c, s} -------------------------
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
    {0: F1, 1 * 4 + 2: -F1},
    {1: F1, 1 * 4 + 3: -F1},
    {2: F1, 1 * 4 + 0: F1},
    {3: F1, 1 * 4 + 1: F1},
]
counit = [{0: F1}, {1: F1}, {}, {}]
trig = Coring(car, delta, counit)
bad = check_coring(trig)
assert not bad, bad
print("trig coring axioms ok")

g = grouplike_elements(trig)
print("trig grouplikes:", g.points, g.complete, "|", g.certificate)
assert g.points == [] and g.complete

D = dual_ring(trig, "left")
assert D.algebra.dim == 4
assert D.algebra.is_simple_artinian()
assert D.algebra.is_division_certified() is True
print("trig left dual is a 4-dim division algebra")

# identity functional behaves as the unit
eps_coords = D.algebra.unit
val = D.evaluate([x.rational_value() for x in eps_coords], {0: F1})
assert val == Qi.one()

# a coideal: span{s} is NOT one (counit ok, but Delta(s) escapes)
rep = check_coideal(trig, [{2: F1}])
assert not rep.ok
print("span{s,si} rejected:", rep.first_failure()["reason"])

# the zero coideal and the full coideal-free quotient work
q = quotient_coring(trig, [])
assert q.coring.qdim == 4

# ---- comatrix coring over B = Q, Sigma = Q(i)^2 ---------------------------
space = ColumnSpace(Qi, QQ, 2)
B = EndoSubalgebra.scalars(space)
assert B.dim == 1
com = ComatrixCoring(space, B)
assert com.coring.qdim == 16
bad = check_coring(com.coring)
assert not bad, bad
bad = check_comodule(space, com.coring.carrier, com.rho, com.coring)
assert not bad, bad
print("comatrix coring over Q: axioms and comodule ok")

T = comod_end(space, com.coring.carrier, com.rho)
assert T.dim == 1 and T == B, T.dim
dom, can = canonical_map(space, T, com.coring.carrier, com.rho)
assert is_bijective_cm(can, com.coring.qdim)
print("comatrix over Q is Galois with T = Q")

# ---- Sweedler coring of Q in Q(i): rank 1 ---------------------------------
sw_space = ColumnSpace(Qi, QQ, 1)
sw = ComatrixCoring(sw_space, EndoSubalgebra.scalars(sw_space))
assert sw.coring.qdim == 4
assert not check_coring(sw.coring)
T2 = comod_end(sw_space, sw.coring.carrier, sw.rho)
assert T2.dim == 1
dom2, can2 = canonical_map(sw_space, T2, sw.coring.carrier, sw.rho)
assert is_bijective_cm(can2, 4)
gsw = grouplike_elements(sw.coring)
print("sweedler grouplikes:", len(gsw.points), "complete:", gsw.complete, "|", gsw.certificate)
assert not gsw.complete  # the grouplike variety is a positive-dimensional conic

# the classes of u^{-1} (x) u are grouplike: check u = 1 and u = i
onecls = sw.project_pure({0: F1}, {0: F1})
assert [onecls.get(t, Fraction(0)) for t in range(4)] in gsw.points
# u = i: u^{-1} = -i
minus_i_otimes_i = sw.project_pure({1: -F1}, {1: F1})
assert [minus_i_otimes_i.get(t, Fraction(0)) for t in range(4)] in gsw.points
print("sweedler unit classes found among grouplikes")

# ---- comatrix coring over the tower: n = 3 ground field -------------------
k3 = field_preset("Qw3")
A3 = k3.extend([-2, 0, 0, 1], "x")
sp3 = ColumnSpace(A3, k3, 3)
B3 = EndoSubalgebra.scalars(sp3)
assert B3.dim == 2
com3 = ComatrixCoring(sp3, B3)
assert com3.coring.qdim == 162
import time
t0 = time.time()
bad = check_coring(com3.coring)
assert not bad, bad
bad = check_comodule(sp3, com3.coring.carrier, com3.rho, com3.coring)
assert not bad, bad
print("n=3 comatrix coring over k: axioms ok in %.2fs" % (time.time() - t0))

print("all coring smoke tests passed")
