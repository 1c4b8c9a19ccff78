"""The built-in instance families and their frozen invariants."""

import pytest

from coringlab.bimodules import cm_compose, cm_eq
from coringlab.comatrix import check_comodule, comod_end
from coringlab.corings import (
    check_coring, grouplike_elements, is_coring_isomorphism, is_grouplike,
)
from coringlab.duality import can_u
from coringlab.examples import (
    EXTENSION_NAMES, HypothesisViolated, OddRankForH, UnknownExtension,
    antidiagonal_coring, aomega_instance, build, classification_case,
    classification_cases, classification_conjugacy, classification_names,
    comatrix_coalgebra, coring_coalgebra_product, conjugacy_suite,
    grouplike_quotient, matrix_coring, quaternion_relations, quaternion_ustar,
    quotient_isomorphism, sweedler_instance, t2_instance, z2_graded_coring,
)
from coringlab.fields import QQ, field_preset
from coringlab.galois import J_of, is_galois, is_simple_cosemisimple

# dim_Q of the coideal attached to each built-in extension
J_DIMS_N2 = {
    "k": 0, "C(alpha)": 8, "C(beta)": 8,
    "A_omega": 12, "M_n(k)": 12, "M_n(C(alpha))": 14,
}
J_DIMS_N3 = {
    "k": 0, "C(alpha)": 108, "C(beta)": 108,
    "A_omega": 144, "M_n(k)": 144, "M_n(C(alpha))": 156,
}


def test_trig_instance(trig):
    assert check_coring(trig.coring) == []
    assert check_coring(trig.com.coring) == []
    assert is_coring_isomorphism(trig.iso, trig.coring, trig.com.coring)
    assert check_comodule(trig.space, trig.coring.carrier, trig.rho, trig.coring) == []
    T = comod_end(trig.space, trig.coring.carrier, trig.rho)
    assert T == trig.B and T.dim == 4


def test_trig_quaternion_relations(trig):
    ok = quaternion_relations(trig.ibar, trig.jbar, 4)
    assert ok
    mid = [{t: -1} for t in range(4)]
    assert cm_eq(cm_compose(trig.ibar, trig.ibar), mid)
    ij = cm_compose(trig.ibar, trig.jbar)
    ji = cm_compose(trig.jbar, trig.ibar)
    assert cm_eq(ij, [{k: -c for k, c in col.items()} for col in ji])
    alg = trig.B.as_finalgebra()
    assert alg.is_simple_artinian() and alg.is_division_certified() is True


def test_trig_galois_no_grouplikes(trig):
    assert is_galois(trig.space, trig.coring.carrier, trig.rho)
    g = grouplike_elements(trig.coring)
    assert g.points == [] and g.complete
    ok, cert = is_simple_cosemisimple(trig.space, trig.coring.carrier, trig.rho)
    assert ok, cert


def test_sweedler_instance():
    sw = sweedler_instance()
    assert check_coring(sw.coring) == []
    assert is_coring_isomorphism(sw.iso, sw.coring, sw.com.coring)


def test_extension_names(ao2):
    assert tuple(name for name, _ in ao2.extensions) == EXTENSION_NAMES


def test_fixtures_match_j_of_n2(ao2):
    for name, C in ao2.extensions:
        span = ao2.fixture_coideal(name)
        jj = J_of(ao2.com, C)
        assert span == jj, name
        assert span.dim == J_DIMS_N2[name], name


def test_fixtures_match_j_of_n3(ao3):
    for name, C in ao3.extensions:
        span = ao3.fixture_coideal(name)
        jj = J_of(ao3.com, C)
        assert span == jj, name
        assert span.dim == J_DIMS_N3[name], name


def test_quotient_presentations_n2(ao2):
    for name in ("C(alpha)", "C(beta)", "A_omega", "M_n(k)"):
        model, quot, F = quotient_isomorphism(ao2, name)
        assert check_coring(model) == [], name
        assert is_coring_isomorphism(F, model, quot.coring), name


def test_quotient_presentation_n3(ao3):
    model, quot, F = quotient_isomorphism(ao3, "A_omega")
    assert check_coring(model) == []
    assert is_coring_isomorphism(F, model, quot.coring)


def test_grouplike_quotient_is_sweedler(ao2):
    quot, classes, sweedler_model, G = grouplike_quotient(ao2)
    for g in classes:
        assert is_grouplike(quot.coring, g)
    assert is_coring_isomorphism(G, quot.coring, sweedler_model)


def test_hypothesis_guards(ao2):
    with pytest.raises(HypothesisViolated):
        aomega_instance(2, ao2.ground, omega=1, alpha=-1, beta=-1)
    with pytest.raises(HypothesisViolated):
        aomega_instance(2, ao2.ground, omega=-1, alpha=4, beta=-1)
    with pytest.raises(HypothesisViolated):
        aomega_instance(2, ao2.ground, omega=-1, alpha=-1, beta=0)


def test_t2_instance_counterexample():
    t2 = t2_instance()
    rep = t2.report
    assert rep.C.dim == 1
    assert rep.dom_dim == 4 and rep.rank == 3 and rep.target_dim == 3
    assert not rep.bijective


def test_quaternion_ustar():
    H, sp, cms, ustar = quaternion_ustar()
    assert check_coring(ustar.coring) == []
    rep = can_u(ustar, sp, cms)
    assert rep.bijective
    assert rep.C.as_finalgebra().is_division_certified() is True


@pytest.mark.parametrize("n,count", [(1, 2), (2, 4), (3, 3)])
def test_classification_counts(n, count):
    names = classification_names(n)
    assert len(names) == count
    cases = classification_cases(n)
    assert len(cases) == count
    for case in cases:
        assert check_coring(case.model) == [], case.name
        assert is_coring_isomorphism(case.witness, case.model, case.com.coring)
        ok, cert = is_simple_cosemisimple(
            case.space, case.com.coring.carrier, case.com.rho
        )
        assert ok, (case.name, cert)


def test_classification_guards():
    with pytest.raises(OddRankForH):
        classification_case("embed-H", 3)
    with pytest.raises(OddRankForH):
        build("embed-H", n=1)
    with pytest.raises(UnknownExtension):
        classification_case("embed-Qi-twist", 1)


def test_classification_twist_not_conjugate_to_diagonal():
    pairs = classification_conjugacy(2)
    assert len(pairs) == 1
    name, cert = pairs[0]
    assert name == "embed-Qi-diag|embed-Qi-twist"
    assert cert.verdict == "not-conjugate"


def test_conjugacy_suite_verdicts():
    suite = conjugacy_suite()
    verdicts = [cert.verdict for _name, cert in suite]
    assert verdicts == ["not-conjugate", "not-conjugate", "conjugate"]
    last = suite[-1][1]
    assert last.witness is not None


def test_build_dispatch():
    for name in ("trig", "sweedler", "t2-counterexample", "quaternion-ustar",
                 "embed-Q", "embed-Qi-diag"):
        assert build(name) is not None
    with pytest.raises(ValueError):
        build("no-such-instance")


def test_small_coring_constructions():
    z2 = z2_graded_coring()
    assert check_coring(z2) == []
    for b in range(2):
        assert is_grouplike(z2, {b * 2: 1})
    Qi = field_preset("Qi")
    mc = matrix_coring(Qi, 2)
    assert check_coring(mc) == [] and mc.qdim == 8
    anti = antidiagonal_coring(2)
    assert check_coring(anti) == [] and anti.qdim == 8


def test_coring_coalgebra_product():
    z2 = z2_graded_coring()
    cdelta, ccounit, d = comatrix_coalgebra(2)
    prod = coring_coalgebra_product(z2, cdelta, ccounit, d)
    assert check_coring(prod) == []
    assert prod.qdim == z2.qdim * d
