from fractions import Fraction

import pytest

from coringlab.fields import QQ, field_preset
from coringlab.poly import Poly
from coringlab.polysolve import (
    field_points, field_poly_roots, quartic_splits, rational_points,
    rational_roots_q,
)

Qi = field_preset("Qi")
Qw3 = field_preset("Qw3")


def test_rational_roots():
    assert sorted(rational_roots_q([-4, 0, 1])) == [-2, 2]
    assert sorted(rational_roots_q([0, -1, 0, 1])) == [-1, 0, 1]
    assert rational_roots_q([-2, 0, 1]) == []
    # non-monic with fractional coefficients: 6x^2 - x - 1 = (3x+1)(2x-1)
    assert sorted(rational_roots_q([-1, -1, 6])) == [Fraction(-1, 3), Fraction(1, 2)]
    with pytest.raises(ValueError):
        rational_roots_q([0, 0])


def test_rational_points_line_and_circle():
    # y = x - 1 meets x^2 + y^2 = 5 in (2, 1) and (-1, -2)
    x = Poly.variable(QQ, 2, 0)
    y = Poly.variable(QQ, 2, 1)
    five = Poly.const(QQ, 2, QQ.scalar(5))
    one = Poly.const(QQ, 2, QQ.one())
    res = rational_points([x * x + y * y - five, x - y - one], 2)
    assert res.complete
    assert sorted(res.points) == [(-1, -2), (2, 1)]


def test_rational_points_empty():
    x = Poly.variable(QQ, 1, 0)
    two = Poly.const(QQ, 1, QQ.scalar(2))
    res = rational_points([x * x - two], 1)
    assert res.complete and res.points == []


def test_field_points_over_qi():
    x = Poly.variable(Qi, 1, 0)
    p = x * x + Poly.const(Qi, 1, Qi.one())
    res = field_points([p], Qi, 1)
    assert res.complete
    got = sorted(Qi.to_qvec(pt[0]) for pt in res.points)
    assert got == [[0, -1], [0, 1]]


def test_field_poly_roots():
    roots = field_poly_roots([1, 1, 1], Qw3)  # x^2 + x + 1
    w = Qw3.gen()
    assert sorted(map(Qw3.to_qvec, roots)) == sorted(
        [Qw3.to_qvec(w), Qw3.to_qvec(w * w)]
    )
    assert field_poly_roots([1, 1, 1], QQ) == []


def test_quartic_splits():
    # (x^2+1)(x^2-2) has no rational roots but splits over Q
    assert quartic_splits([-2, 0, -1, 0, 1], QQ)
    # x^4 + x + 1 is irreducible over Q
    assert not quartic_splits([1, 1, 0, 0, 1], QQ)
    # x^4 + 1 stays irreducible over Q but splits over Q(i): (x^2+i)(x^2-i)
    assert not quartic_splits([1, 0, 0, 0, 1], QQ)
    assert quartic_splits([1, 0, 0, 0, 1], Qi)
