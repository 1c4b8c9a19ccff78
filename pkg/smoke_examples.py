import time

from coringlab.bimodules import cm_apply, cm_compose, cm_eq, cm_identity, svec_eq
from coringlab.comatrix import check_comodule, comod_end
from coringlab.corings import (
    check_coring, grouplike_elements, is_coring_isomorphism, is_grouplike,
)
from coringlab.examples import (
    HypothesisViolated, OddRankForH, aomega_instance, build,
    classification_case, classification_cases, conjugacy_suite,
    grouplike_quotient, quaternion_ustar, quotient_isomorphism,
    sweedler_instance, t2_instance, trig_instance,
)
from coringlab.galois import J_of, is_galois, is_simple_cosemisimple

t0 = time.time()


def stamp(msg):
    print("[%6.2fs] %s" % (time.time() - t0, msg))


# --- trig ---------------------------------------------------------------
tr = trig_instance()
assert check_coring(tr.coring) == []
assert check_coring(tr.com.coring) == []
assert is_coring_isomorphism(tr.iso, tr.coring, tr.com.coring)
assert check_comodule(tr.space, tr.coring.carrier, tr.rho, tr.coring) == []
T = comod_end(tr.space, tr.coring.carrier, tr.rho)
assert T == tr.B, (T.dim, tr.B.dim)
nq = 4
mid = [{0: -1}, {1: -1}, {2: -1}, {3: -1}]
assert cm_eq(cm_compose(tr.ibar, tr.ibar), mid)
assert cm_eq(cm_compose(tr.jbar, tr.jbar), mid)
ij = cm_compose(tr.ibar, tr.jbar)
ji = cm_compose(tr.jbar, tr.ibar)
assert cm_eq(ij, [{k: -c for k, c in col.items()} for col in ji])
assert is_galois(tr.space, tr.coring.carrier, tr.rho)
gr = grouplike_elements(tr.coring)
print("trig grouplikes:", gr.points, "complete:", gr.complete, "| cert:", gr.certificate)
assert gr.points == [] and gr.complete
ok, cert = is_simple_cosemisimple(tr.space, tr.coring.carrier, tr.rho)
assert ok, cert
stamp("trig instance ok (End dim %d)" % T.dim)

# --- sweedler -----------------------------------------------------------
sw = sweedler_instance()
assert check_coring(sw.coring) == []
assert is_coring_isomorphism(sw.iso, sw.coring, sw.com.coring)
stamp("sweedler instance ok")

# --- aomega n=2 ---------------------------------------------------------
inst = aomega_instance(2)
for name, C in inst.extensions:
    span = inst.fixture_coideal(name)
    jj = J_of(inst.com, C)
    assert span == jj, (name, span.dim, jj.dim)
    print("  fixture %-14s dim %2d == J_of" % (name, span.dim))
stamp("aomega n=2 fixtures == J_of (all six)")

for name in ("C(alpha)", "C(beta)", "A_omega", "M_n(k)"):
    model, quot, F = quotient_isomorphism(inst, name)
    assert check_coring(model) == [], name
    assert is_coring_isomorphism(F, model, quot.coring), name
    print("  quotient model %-10s qdim %2d iso ok" % (name, model.qdim))
stamp("aomega n=2 quotient presentations ok")

quot, classes, swm, G = grouplike_quotient(inst)
for g in classes:
    assert is_grouplike(quot.coring, g)
assert is_coring_isomorphism(G, quot.coring, swm)
stamp("aomega n=2 grouplike quotient == sweedler coring of the extension")

# hypothesis guards
try:
    aomega_instance(2, QQ := inst.ground, omega=1, alpha=-1, beta=-1)
    raise AssertionError("omega=1 accepted")
except HypothesisViolated as e:
    print("  rejected omega=1:", e)
try:
    aomega_instance(2, inst.ground, omega=-1, alpha=4, beta=-1)
    raise AssertionError("alpha=4 accepted")
except HypothesisViolated as e:
    print("  rejected alpha=4:", e)
stamp("aomega hypothesis guards ok")

# --- t2 counterexample --------------------------------------------------
t2 = t2_instance()
rep = t2.report
print("  t2: C dim %d, dom %d, rank %d, target %d, bijective %s" % (
    rep.C.dim, rep.dom_dim, rep.rank, rep.target_dim, rep.bijective))
assert rep.dom_dim == 4 and rep.rank == 3 and rep.target_dim == 3
assert not rep.bijective
stamp("t2 counterexample ok")

# --- quaternion ustar ---------------------------------------------------
H, sp4, cms, ustar = quaternion_ustar()
assert check_coring(ustar.coring) == []
repH = __import__("coringlab.duality", fromlist=["can_u"]).can_u(ustar, sp4, cms)
assert repH.bijective and repH.C.as_finalgebra().is_division_certified()
stamp("quaternion ustar ok (canonical map bijective)")

# --- classification -----------------------------------------------------
for n in (1, 2, 3):
    cases = classification_cases(n)
    expected = {1: 2, 2: 4, 3: 3}[n]
    assert len(cases) == expected, (n, len(cases))
    for case in cases:
        assert check_coring(case.model) == [], (n, case.name)
        assert is_coring_isomorphism(case.witness, case.model, case.com.coring), (n, case.name)
        ok, cert = is_simple_cosemisimple(case.space, case.com.coring.carrier, case.com.rho)
        assert ok, (n, case.name, cert)
        print("  n=%d %-14s model qdim %2d witness ok, simple cosemisimple" % (
            n, case.name, case.model.qdim))
    stamp("classification n=%d ok (%d classes)" % (n, expected))

try:
    classification_case("embed-H", 3)
    raise AssertionError("odd H accepted")
except OddRankForH as e:
    print("  rejected embed-H at n=3:", e)
try:
    build("embed-H", n=1)
    raise AssertionError("odd H accepted")
except OddRankForH:
    pass
stamp("odd-rank rejection ok")

# --- conjugacy suite ----------------------------------------------------
suite = conjugacy_suite()
for name, cert in suite:
    print("  %-28s -> %s (candidates %d)" % (name, cert.verdict, cert.candidates))
verdicts = [cert.verdict for _, cert in suite]
assert verdicts == ["not-conjugate", "not-conjugate", "conjugate"], verdicts
stamp("conjugacy suite ok")

# --- aomega n=3 spot checks ---------------------------------------------
t3 = time.time()
inst3 = aomega_instance(3)
stamp("aomega n=3 built (%.2fs)" % (time.time() - t3))
for name in ("C(alpha)", "C(beta)", "A_omega", "M_n(k)", "M_n(C(alpha))"):
    t4 = time.time()
    span = inst3.fixture_coideal(name)
    jj = J_of(inst3.com, inst3.subalgebra(name))
    assert span == jj, (name, span.dim, jj.dim)
    print("  n=3 fixture %-14s dim %3d == J_of  (%.2fs)" % (name, span.dim, time.time() - t4))
stamp("aomega n=3 fixtures == J_of")

t5 = time.time()
model3, quot3, F3 = quotient_isomorphism(inst3, "A_omega")
assert is_coring_isomorphism(F3, model3, quot3.coring)
stamp("aomega n=3 A_omega quotient iso ok (%.2fs)" % (time.time() - t5))

print("ALL EXAMPLES SMOKE CHECKS PASSED")
