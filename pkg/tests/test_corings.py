"""Coring axioms, coideals, quotients, grouplikes and convolution duals."""

from fractions import Fraction

import pytest

from coringlab.bimodules import Bimodule, cm_apply, cm_from_dense_rows
from coringlab.comatrix import ColumnSpace, ComatrixCoring, EndoSubalgebra
from coringlab.corings import (
    CarrierTooLarge, Coring, NotACoideal, assert_coring, check_coideal,
    check_coring, dual_ring, grouplike_elements, is_grouplike,
    quotient_coring,
)
from coringlab.fields import QQ, field_preset

Qi = field_preset("Qi")
F1 = Fraction(1)


def trig_coring_raw():
    """The 2-block coring on {c, s} with the rotation comultiplication."""
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
        {0: F1, 6: -F1}, {1: F1, 7: -F1}, {2: F1, 4: F1}, {3: F1, 5: F1},
    ]
    counit = [{0: F1}, {1: F1}, {}, {}]
    return Coring(car, delta, counit)


def test_trig_axioms_and_counit():
    trig = trig_coring_raw()
    assert check_coring(trig) == []
    assert_coring(trig)
    assert trig.counit_scalar({0: F1}) == Qi.one()
    assert trig.counit_scalar({2: F1}) == Qi.zero()
    assert trig.qdim == 4
    assert trig.base_field is Qi and trig.ground is QQ


def test_broken_coring_reported():
    trig = trig_coring_raw()
    # flipping a sign in delta breaks coassociativity and the counit law
    bad_delta = [dict(col) for col in trig.delta]
    bad_delta[2] = {2: F1, 4: -F1}
    bad = Coring(trig.carrier, bad_delta, trig.counit)
    failures = check_coring(bad)
    assert failures
    with pytest.raises(ValueError):
        assert_coring(bad)


def test_trig_has_no_grouplikes():
    g = grouplike_elements(trig_coring_raw())
    assert g.points == [] and g.complete
    assert g.certificate


def test_grouplike_membership():
    trig = trig_coring_raw()
    # c is not grouplike: Delta(c) = c (x) c - s (x) s
    assert not is_grouplike(trig, {0: F1})


def test_coideal_rejection_and_index():
    trig = trig_coring_raw()
    rep = check_coideal(trig, [{2: F1}])
    assert not rep.ok
    assert rep.first_failure()["index"] == 0
    with pytest.raises(NotACoideal) as exc:
        quotient_coring(trig, [{2: F1}])
    assert exc.value.generator_index == 0


def test_quotient_by_zero_is_identity():
    trig = trig_coring_raw()
    q = quotient_coring(trig, [])
    assert q.coring.qdim == 4
    assert check_coring(q.coring) == []


def test_dual_ring_of_trig_is_quaternionic():
    D = dual_ring(trig_coring_raw(), "left")
    assert D.algebra.dim == 4
    assert D.algebra.is_simple_artinian()
    assert D.algebra.is_division_certified() is True
    # the counit is the unit of the convolution algebra
    coords = [x.rational_value() for x in D.algebra.unit]
    assert D.evaluate(coords, {0: F1}) == Qi.one()
    assert D.evaluate(coords, {2: F1}) == Qi.zero()


def test_dual_ring_right_side():
    D = dual_ring(trig_coring_raw(), "right")
    assert D.algebra.dim == 4
    with pytest.raises(ValueError):
        dual_ring(trig_coring_raw(), "middle")


def test_sweedler_grouplike_classes():
    space = ColumnSpace(Qi, QQ, 1)
    sw = ComatrixCoring(space, EndoSubalgebra.scalars(space))
    assert sw.coring.qdim == 4
    assert check_coring(sw.coring) == []
    g = grouplike_elements(sw.coring)
    # the grouplike variety u^{-1} (x) u is a conic: solutions exist but the
    # rational list cannot be complete
    assert not g.complete
    onecls = sw.project_pure({0: F1}, {0: F1})
    assert is_grouplike(sw.coring, onecls)
    assert [onecls.get(t, Fraction(0)) for t in range(4)] in g.points
    icls = sw.project_pure({1: -F1}, {1: F1})  # (-i) (x) i
    assert is_grouplike(sw.coring, icls)


def test_grouplike_carrier_guard():
    k3 = field_preset("Qw3")
    A3 = k3.extend([-2, 0, 0, 1], "x")
    sp = ColumnSpace(A3, k3, 3)
    com = ComatrixCoring(sp, EndoSubalgebra.scalars(sp))
    with pytest.raises(CarrierTooLarge):
        grouplike_elements(com.coring)


def test_tower_comatrix_axioms():
    k3 = field_preset("Qw3")
    A3 = k3.extend([-2, 0, 0, 1], "x")
    sp = ColumnSpace(A3, k3, 3)
    B3 = EndoSubalgebra.scalars(sp)
    assert B3.dim == 2
    com = ComatrixCoring(sp, B3)
    assert com.coring.qdim == 162
    assert check_coring(com.coring) == []
