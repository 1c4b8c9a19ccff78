from fractions import Fraction

from coringlab.fields import QQ, field_preset
from coringlab.bimodules import (
    Bimodule, TensorOver, quotient_module,
    cm_from_dense_rows, cm_identity, cm_apply, svec_from_dense, svec_to_dense,
    svec_eq, cm_eq, cm_compose,
)
from coringlab.linalg import QSpan

Qi = field_preset("Qi")
i = Qi.gen()

# A = Q(i) as a bimodule over itself, ground Q
mult_i = cm_from_dense_rows(Qi.mult_qmatrix(i))
Areg = Bimodule(QQ, Qi, 2, None, mult_i, mult_i)
print("A-regular axioms ok")

# act: multiply (1+i) * i = i - 1
v = cm_apply(mult_i, {0: Fraction(1)})  # i as a vector
w = Areg.act("left", Qi.element([1, 1]), v)
assert w == {0: Fraction(-1), 1: Fraction(1)}, w

# A (x)_A A has rank 1 and qdim 2
T = TensorOver(Areg, Areg, Qi)
assert T.rank == 1 and T.qdim == 2
# i (x) i = (1 (x) i*i) = -(1 (x) 1)
t = T.project_pure({1: Fraction(1)}, {1: Fraction(1)})
assert t == {0: Fraction(-1)}, t
Tm = T.module()
Tm.check()
print("A (x)_A A ok")

# tower: k = Q(w3), A = k[x]/(x^3-2)
k = field_preset("Qw3")
A = k.extend([-2, 0, 0, 1], "x")
assert A.abs_degree == 6
mult_x = cm_from_dense_rows(A.mult_qmatrix(A.gen()))
mult_w = cm_from_dense_rows(A.mult_qmatrix(A.scalar(k.gen())))
Breg = Bimodule(k, A, 6, mult_w, mult_x, mult_x)
TB = TensorOver(Breg, Breg, A)
assert TB.rank == 1 and TB.qdim == 6
# x (x) x = 1 (x) x^2
got = TB.project_pure(cm_apply(mult_x, {0: Fraction(1)}), cm_apply(mult_x, {0: Fraction(1)}))
x2 = cm_apply(mult_x, cm_apply(mult_x, {0: Fraction(1)}))
assert got == x2, (got, x2)
# tensor over k instead: rank 3, qdim 18
TBk = TensorOver(Breg, Breg, k)
assert TBk.rank == 3 and TBk.qdim == 18
TBk.module().check()
print("tower tensors ok")

# M = A + A, quotient by the diagonal is isomorphic to A
n = 12
sig = [dict() for _ in range(n)]
lm = [dict() for _ in range(n)]
for blk in range(2):
    for j in range(6):
        for idx, c in mult_w[j].items():
            sig[blk * 6 + j][blk * 6 + idx] = c
        for idx, c in mult_x[j].items():
            lm[blk * 6 + j][blk * 6 + idx] = c
M = Bimodule(k, A, n, sig, lm, lm)
diag = QSpan.from_qrows(
    [svec_to_dense({j: Fraction(1), 6 + j: Fraction(1)}, n) for j in range(6)], n
)
quot, pi, sect = quotient_module(M, diag)
assert quot.qdim == 6
quot.check()
# pi(section) = id
assert cm_eq(cm_compose(pi, sect), cm_identity(6))
print("quotient ok")

# unstable subspace must be rejected
bad = QSpan.from_qrows([svec_to_dense({0: Fraction(1)}, n)], n)
try:
    quotient_module(M, bad)
    raise SystemExit("missed instability")
except ValueError as e:
    print("instability detected:", e)

# free basis extraction on a shuffled module: conjugate the actions
perm = [3, 1, 4, 0, 5, 2, 9, 7, 10, 6, 11, 8]
P = [dict([(perm[j], Fraction(1))]) for j in range(n)]
Pinv = [dict([(perm.index(j), Fraction(1))]) for j in range(n)]
sig2 = cm_compose(P, cm_compose(sig, Pinv))
lm2 = cm_compose(P, cm_compose(lm, Pinv))
M2 = Bimodule(k, A, n, sig2, lm2, lm2)
basis, phi_inv = M2.f_basis(A, "right")
assert len(basis) == 2
# expand a random-ish vector and rebuild it
T2 = TensorOver(M2, Breg, A)
vec = {0: Fraction(2), 5: Fraction(-1), 7: Fraction(3)}
exp = T2.expand(vec)
rebuilt = {}
for w, coeffs in exp.items():
    a = A.from_qvec(coeffs)
    for idx, c in M2.act("right", a, basis[w]).items():
        rebuilt[idx] = rebuilt.get(idx, Fraction(0)) + c
assert svec_eq(rebuilt, vec), (rebuilt, vec)
print("free basis roundtrip ok")

print("all bimodule smoke tests passed")
