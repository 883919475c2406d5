import random

import pytest

from triplepoints.fields import Field
from triplepoints.poly import MultiPoly
from triplepoints.surfaces import ProjPoint, Surface
from triplepoints.singular import local_jet, _wrap, certify
from triplepoints.constructions import (MultiplicityAssignment,
                                        forms_with_multiplicity,
                                        quadrics_through, echelon_basis,
                                        mixed_power_system, reciprocal_point,
                                        reciprocal_transform, dianode_surface,
                                        steiner_curve, generic_points)

QQ = Field.QQ()
F31 = Field.GF(31)


def test_assignment_guards():
    P = ProjPoint(QQ, [1, 0, 0, 0])
    with pytest.raises(ValueError):
        MultiplicityAssignment([(P, 0)])
    with pytest.raises(ValueError):
        MultiplicityAssignment([(P, 1), (P, 2)])
    a = MultiplicityAssignment([(P, 2), (ProjPoint(QQ, [0, 1, 0, 0]), 1)])
    assert a.conditions() == 4 + 1
    assert len(a) == 2


def test_forms_with_multiplicity_dimensions():
    # quintics with triple points at nu generic points: 56 - 10*nu
    for nu in range(1, 6):
        pts = generic_points(F31, nu, seed=7)
        basis = forms_with_multiplicity(5, [(P, 3) for P in pts])
        assert len(basis) == 56 - 10 * nu
    pts7 = generic_points(F31, 7, seed=7)
    # sextics with triple points at 7 generic points: 84 - 70 = 14
    assert len(forms_with_multiplicity(6, [(P, 3) for P in pts7])) == 14
    # quartics simply through 7 generic points: 35 - 7 = 28
    assert len(forms_with_multiplicity(4, [(P, 1) for P in pts7])) == 28
    assert len(quadrics_through(pts7)) == 3


def test_forms_vanish_to_assigned_order():
    pts = generic_points(F31, 3, seed=9)
    assignment = [(pts[0], 2), (pts[1], 2), (pts[2], 1)]
    for g in forms_with_multiplicity(4, assignment):
        for P, m in assignment:
            jet = local_jet(_wrap(g), P, m - 1)
            assert jet.min_degree() is None  # vanishes to order m


def test_forms_with_multiplicity_guards():
    with pytest.raises(ValueError):
        forms_with_multiplicity(0, [(ProjPoint(QQ, [1, 0, 0, 0]), 1)])
    with pytest.raises(ValueError):
        forms_with_multiplicity(2, [])


def test_echelon_basis():
    f = MultiPoly.parse("x^2+y^2", QQ)
    g = MultiPoly.parse("2*x^2+2*y^2", QQ)
    h = MultiPoly.parse("x^2-z*w", QQ)
    basis = echelon_basis([f, g, h, MultiPoly.zero(QQ)])
    assert len(basis) == 2
    assert echelon_basis(basis) == basis  # idempotent
    with pytest.raises(ValueError):
        echelon_basis([f, MultiPoly.parse("x^3", QQ)])
    assert echelon_basis([]) == []


def test_mixed_power_system():
    x2 = MultiPoly.parse("x^2", QQ)
    y2 = MultiPoly.parse("y^2", QQ)
    z2 = MultiPoly.parse("z^2", QQ)
    basis = mixed_power_system([x2, y2, z2], 3)
    # all ten even monomials of degree 6 in x, y, z
    assert len(basis) == 10
    assert all(g.homogeneous_degree() == 6 for g in basis)
    with pytest.raises(ValueError):
        mixed_power_system([])


def test_reciprocal_point():
    P = ProjPoint(QQ, [1, 2, 3, 4])
    Q = reciprocal_point(P)
    # (1 : 1/2 : 1/3 : 1/4) scaled
    assert Q == ProjPoint(QQ, [QQ(12), QQ(6), QQ(4), QQ(3)])
    assert reciprocal_point(Q) == P
    # one zero coordinate sends the point to the opposite vertex
    assert reciprocal_point(ProjPoint(QQ, [1, 1, 1, 0])) == \
        ProjPoint(QQ, [0, 0, 0, 1])
    # two or more zero coordinates kill every product
    with pytest.raises(ValueError):
        reciprocal_point(ProjPoint(QQ, [1, 1, 0, 0]))
    with pytest.raises(ValueError):
        reciprocal_point(ProjPoint(QQ, [1, 0, 0, 0]))


def test_reciprocal_transform_fixed_examples():
    X = Surface(MultiPoly.parse("x*y+z*w", QQ))
    img, mults = reciprocal_transform(X)
    assert mults == (1, 1, 1, 1)
    assert img.degree == 2
    assert img.f == X.f
    X1 = Surface(MultiPoly.parse("x+y+z+w", QQ))
    img1, mults1 = reciprocal_transform(X1)
    assert mults1 == (0, 0, 0, 0)
    assert img1.f == MultiPoly.parse("y*z*w+x*z*w+x*y*w+x*y*z", QQ)


def test_reciprocal_transform_rejects_plane_components():
    with pytest.raises(ValueError):
        reciprocal_transform(Surface(MultiPoly.parse("x*y", QQ)))


def test_reciprocal_transform_is_an_involution():
    rng = random.Random(51)
    from triplepoints.poly import exponents_of_degree
    exps = exponents_of_degree(6)
    for _ in range(50):
        terms = {e: F31.random_element(rng) for e in exps
                 if rng.random() < 0.3}
        f = MultiPoly(F31, {e: c for e, c in terms.items() if c})
        if not f:
            continue
        X = Surface(f)
        try:
            img, mults = reciprocal_transform(X)
        except ValueError:
            continue
        assert img.degree == 3 * 6 - sum(mults)
        back, _ = reciprocal_transform(img)
        # double transform recovers f up to a scalar
        (e0, c0) = next(iter(f.terms.items()))
        scale = back.f.terms[e0] / c0
        assert back.f == f.scale(scale)


def test_dianode_surface():
    pts = generic_points(F31, 7, seed=1)
    # quartic with nodes at all seven points: a cubic with nodes at the
    # first four and simple points at the last three, times the plane
    # through the last three
    cubics = forms_with_multiplicity(
        3, [(P, 2) for P in pts[:4]] + [(P, 1) for P in pts[4:]])
    planes = forms_with_multiplicity(1, [(P, 1) for P in pts[4:]])
    assert len(cubics) == 1 and len(planes) == 1
    g = cubics[0] * planes[0]
    q1, q2, q3 = quadrics_through(pts)
    delta = dianode_surface(g, q1, q2, q3)
    assert delta.homogeneous_degree() == 6
    X = Surface(delta, {"points": pts})
    report = certify(X)
    assert report.to_json()["verdict"] == "certified-exact"
    assert len(report.to_json()["points"]) == 7


def test_dianode_degenerate_inputs():
    pts = generic_points(F31, 7, seed=1)
    q1, q2, q3 = quadrics_through(pts)
    # g in the ideal of the net makes the gradients dependent everywhere
    assert not dianode_surface(q1 * q2, q1, q2, q3)
    with pytest.raises(ValueError):
        dianode_surface(q1, q1, q2, q3)
    with pytest.raises(ValueError):
        dianode_surface(q1 * q2, q1, q2, q1 * q2)


def test_steiner_curve():
    pts = generic_points(F31, 7, seed=1)
    q1, q2, q3 = quadrics_through(pts)
    minors = steiner_curve(q1, q2, q3)
    assert len(minors) == 4
    assert all(m.homogeneous_degree() == 3 for m in minors if m)
    # at a base point Euler's relation puts the point itself in the
    # kernel of the 3x4 Jacobian, so the signed minor vector is
    # proportional to the point
    for P in pts:
        vals = [m.evaluate(list(P.coords)) for m in minors]
        k = [vals[3], -vals[2], vals[1], -vals[0]]
        assert any(k)
        for i in range(4):
            for j in range(4):
                assert k[i] * P.coords[j] == k[j] * P.coords[i]
    with pytest.raises(ValueError):
        steiner_curve(q1, q2, q1 * q2)


def test_generic_points():
    a = generic_points(F31, 5, seed=3)
    b = generic_points(F31, 5, seed=3)
    assert a == b
    assert len(set(a)) == 5
    c = generic_points(F31, 5, seed=4)
    assert a != c
    # the predicate is honoured
    pts = generic_points(F31, 4, seed=0,
                         avoid_degenerate=lambda ps: ps[-1].coords[0])
    assert all(P.coords[0] for P in pts)
    with pytest.raises(RuntimeError):
        generic_points(F31, 1, avoid_degenerate=lambda ps: False)
