from fractions import Fraction

from coringlab.fields import QQ, field_preset
from coringlab.poly import Poly, field_point, rationalize_system, symbolic_det
from coringlab.polysolve import rational_points

Qi = field_preset("Qi")


def qpoly(nvars, terms):
    return Poly(QQ, nvars, {e: QQ.scalar(c) for e, c in terms.items()})


def test_ring_operations():
    x = Poly.variable(QQ, 2, 0)
    y = Poly.variable(QQ, 2, 1)
    sq = (x + y) * (x + y)
    assert sq == qpoly(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
    assert (x - x).is_zero()
    assert sq.total_degree() == 2
    c = Poly.const(QQ, 2, QQ.scalar(Fraction(5, 3)))
    assert c.is_constant() and c.constant_value() == QQ.scalar(Fraction(5, 3))


def test_evaluate_and_substitute():
    x = Poly.variable(QQ, 2, 0)
    y = Poly.variable(QQ, 2, 1)
    p = x * x - y + Poly.const(QQ, 2, QQ.scalar(3))
    val = p.evaluate([QQ.scalar(2), QQ.scalar(5)])
    assert val == QQ.scalar(2)
    # substituting y = x^2 + 3 makes p vanish identically
    sub = p.substitute([x, x * x + Poly.const(QQ, 2, QQ.scalar(3))])
    assert sub.is_zero()


def test_symbolic_det_matches_cofactors():
    v = [Poly.variable(QQ, 4, k) for k in range(4)]
    det = symbolic_det([[v[0], v[1]], [v[2], v[3]]])
    assert det == v[0] * v[3] - v[1] * v[2]
    # numeric 3x3 check against a hand-computed determinant
    rows = [[1, 2, 3], [4, 5, 6], [7, 8, 10]]
    consts = [[Poly.const(QQ, 1, QQ.scalar(c)) for c in r] for r in rows]
    assert symbolic_det(consts).constant_value() == QQ.scalar(-3)


def test_rationalize_system_gaussian_circle():
    # x^2 + 1 = 0 over Q(i) becomes a real system with solutions +-i
    x = Poly.variable(Qi, 1, 0)
    p = x * x + Poly.const(Qi, 1, Qi.one())
    rat = rationalize_system([p], Qi)
    res = rational_points(rat, 2)
    assert res.complete
    assert sorted(res.points) == [(-1,), (1,)] or sorted(
        tuple(pt) for pt in res.points
    ) == [(0, -1), (0, 1)]
    pts = [field_point(pt, Qi, 1) for pt in res.points]
    vals = sorted(Qi.to_qvec(pt[0]) for pt in pts)
    assert vals == [[0, -1], [0, 1]]
