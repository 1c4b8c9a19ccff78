import random
from fractions import Fraction

import pytest

from coringlab.fields import (
    QQ, FieldError, ReduciblePolynomial, field_preset, root_of_unity,
)

Qi = field_preset("Qi")
Qw3 = field_preset("Qw3")


def rand_element(field, rng):
    return field.from_qvec(
        [Fraction(rng.randint(-9, 9), rng.randint(1, 5))
         for _ in range(field.abs_degree)]
    )


def test_presets():
    assert field_preset("Q") is QQ
    assert Qi.abs_degree == 2 and Qw3.abs_degree == 2
    assert field_preset("Qw4").gen_label == "i"
    with pytest.raises(FieldError):
        field_preset("Qsqrt2")


def test_rational_arithmetic():
    a = QQ.scalar(Fraction(3, 4))
    b = QQ.scalar(Fraction(-1, 6))
    assert (a + b).rational_value() == Fraction(7, 12)
    assert (a * b).rational_value() == Fraction(-1, 8)
    assert a.inverse().rational_value() == Fraction(4, 3)
    assert QQ.zero().is_zero() and not QQ.one().is_zero()


def test_gaussian_arithmetic():
    i = Qi.gen()
    one = Qi.one()
    assert (i * i + one).is_zero()
    assert (one + i) * (one - i) == Qi.scalar(2)
    inv = Qi.element([3, 4]).inverse()
    assert Qi.to_qvec(inv) == [Fraction(3, 25), Fraction(-4, 25)]
    assert not i.is_rational()
    with pytest.raises(FieldError):
        i.rational_value()


def test_omega3_arithmetic():
    w = Qw3.gen()
    assert (w * w + w + Qw3.one()).is_zero()
    # (1 + w) is a sixth root of unity; its inverse is -w
    assert (Qw3.one() + w).inverse() == -w
    assert (w ** 3) == Qw3.one()


def test_inverse_grid():
    for field in (QQ, Qi, Qw3):
        rng = random.Random(field.label)
        for _ in range(25):
            x = rand_element(field, rng)
            if x.is_zero():
                continue
            assert x * x.inverse() == field.one()


def test_qvec_roundtrip_and_mult_matrix():
    for field in (Qi, Qw3):
        rng = random.Random("qvec:" + field.label)
        for _ in range(20):
            x = rand_element(field, rng)
            y = rand_element(field, rng)
            assert field.from_qvec(field.to_qvec(x)) == x
            # the multiplication matrix acts as left multiplication by x
            rows = field.mult_qmatrix(x)
            yv = field.to_qvec(y)
            prod = [sum(rows[t][j] * yv[j] for j in range(field.abs_degree))
                    for t in range(field.abs_degree)]
            assert prod == field.to_qvec(x * y)


def test_extend_tower():
    A = Qw3.extend([-2, 0, 0, 1], "x")
    assert A.abs_degree == 6
    x = A.gen()
    assert x ** 3 == A.scalar(2)
    assert x.inverse() * x == A.one()
    # scalars of the base embed and commute
    w = A.scalar(Qw3.gen())
    assert w * x == x * w


def test_extend_rejects_reducible():
    with pytest.raises(ReduciblePolynomial):
        QQ.extend([-1, 0, 1], "s")  # x^2 - 1 = (x-1)(x+1)
    with pytest.raises(ReduciblePolynomial):
        Qi.extend([1, 0, 1], "j")  # x^2 + 1 splits over Q(i)


def test_roots_in_field():
    roots = Qi.roots_in_field([1, 0, 1])
    assert sorted(Qi.to_qvec(r) for r in roots) == [[0, -1], [0, 1]]
    assert QQ.roots_in_field([1, 0, 1]) == []
    assert [r.rational_value() for r in QQ.roots_in_field([-4, 0, 1])] == [-2, 2]


def test_root_of_unity():
    assert root_of_unity(QQ, 1) == QQ.one()
    assert root_of_unity(QQ, 2).rational_value() == -1
    w = root_of_unity(Qw3, 3)
    assert w ** 3 == Qw3.one() and w != Qw3.one()
    assert root_of_unity(Qi, 4) == Qi.gen()
    with pytest.raises(FieldError):
        root_of_unity(QQ, 3)


def test_describe_labels():
    assert Qi.describe()["label"] == "Q(i)"
    assert QQ.label == "Q"
