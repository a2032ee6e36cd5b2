import random
from fractions import Fraction

import numpy as np
import pytest
from scipy.spatial import ConvexHull

from alexmedley.laurent import LaurentPoly, deg_alpha, newton_polytope
from alexmedley.polytopes import (
    DegenerateNormError,
    MembershipError,
    PolytopeError,
    alexander_norm_ball,
    ball_from_functionals,
    convex_hull,
    dual_face,
    face_of,
    in_cone_over_interior,
    polar,
    symmetric_hull,
    thurston_lower_bound_check,
)

F = Fraction


def random_points(rng, k, n, den=3):
    return [tuple(F(rng.randint(-6, 6), rng.randint(1, den)) for _ in range(k)) for _ in range(n)]


def test_hull_examples():
    cross = convex_hull([(1, 0), (-1, 0), (0, 1), (0, -1), (0, 0)])
    assert len(cross.vertices) == 4 and len(cross.facets) == 4
    assert all(f.rhs == 1 and sorted(abs(x) for x in f.normal) == [1, 1] for f in cross.facets)
    seg = convex_hull([(0, 0), (1, 2), (2, 4)])
    assert seg.affine_dim == 1 and seg.vertex_set() == {(0, 0), (2, 4)}
    x = LaurentPoly.var(1, 0)
    assert newton_polytope((x - 1) ** 4).vertex_set() == {(0,), (4,)}
    assert convex_hull([(5, 5)]).affine_dim == 0
    with pytest.raises(PolytopeError):
        convex_hull([])


def test_hull_matches_scipy():
    rng = random.Random(2)
    for k in (2, 3, 4):
        for _ in range(15):
            pts = random_points(rng, k, k + 6)
            ours = convex_hull(pts)
            arr = np.array([[float(c) for c in p] for p in pts])
            ref = ConvexHull(arr)
            ref_vertices = {tuple(pts[i]) for i in ref.vertices}
            assert ours.vertex_set() == ref_vertices
            # every input point satisfies every facet inequality, each facet is tight on >= k vertices
            for f in ours.facets:
                assert all(f.value(p) <= f.rhs for p in pts)
                assert sum(1 for v in ours.vertices if f.value(v) == f.rhs) >= k
            assert len(ours.facets) == len({tuple(np.round(eq, 9)) for eq in ref.equations})


def test_euler_relation():
    rng = random.Random(3)
    for k in (2, 3, 4):
        for _ in range(6):
            p = convex_hull(random_points(rng, k, k + 5))
            if not p.full_dimensional:
                continue
            fv = p.f_vector()
            assert sum((-1) ** i * n for i, n in enumerate(fv)) == 1 - (-1) ** k


def test_norm_ball_examples():
    pair = ball_from_functionals([[2, 0], [0, 2]])
    assert pair.dual_ball.vertex_set() == {(2, 0), (-2, 0), (0, 2), (0, -2)}
    assert pair.ball.vertex_set() == {(F(s1, 2), F(s2, 2)) for s1 in (-1, 1) for s2 in (-1, 1)}
    assert pair.norm((1, -3)) == 6 and pair.dual_norm((1, 1)) == 1
    interval = ball_from_functionals([[4]])
    assert interval.dual_ball.vertex_set() == {(4,), (-4,)}
    with pytest.raises(DegenerateNormError):
        ball_from_functionals([[0, 0]])
    with pytest.raises(PolytopeError):
        ball_from_functionals([[1, 0], [0, 2]])


def test_faces_and_duality_examples():
    square = convex_hull([(s1, s2) for s1 in (-1, 1) for s2 in (-1, 1)])
    cross = polar(square)
    assert cross.vertex_set() == {(1, 0), (-1, 0), (0, 1), (0, -1)}
    vertex = face_of((1, 1), square)
    assert vertex.dim == 0
    edge = dual_face(vertex, cross)
    assert edge.dim == 1 and set(map(tuple, edge.vertices)) == {(1, 0), (0, 1)}
    mid = face_of((1, F(1, 3)), square)
    assert mid.dim == 1 and mid.in_relative_interior((1, F(1, 3)))
    assert dual_face(mid, cross).vertices == [(1, 0)]
    with pytest.raises(MembershipError):
        face_of((0, 0), square)
    with pytest.raises(MembershipError):
        face_of((3, 0), square)
    # a face of a polytope that is not the polar's partner has no dual face
    other = convex_hull([(s1 * 2, s2 * 2) for s1 in (-1, 1) for s2 in (-1, 1)])
    with pytest.raises(MembershipError):
        dual_face(face_of((2, 2), other), cross)
    interval = ball_from_functionals([[6]])
    top = face_of((6,), interval.dual_ball)
    assert dual_face(top, interval.ball).vertices == [(F(1, 6),)]


def test_cone_over_interior():
    square = convex_hull([(s1, s2) for s1 in (-1, 1) for s2 in (-1, 1)])
    edge = face_of((1, 0), square)
    assert in_cone_over_interior(tuple(3 * x for x in edge.barycenter()), edge)
    assert not in_cone_over_interior((2, 2), edge)
    assert not in_cone_over_interior((0, 0), edge)
    assert not in_cone_over_interior((-1, 0), edge)


def test_faces_double_dual():
    rng = random.Random(4)
    for k in (2, 3):
        b = symmetric_hull(random_points(rng, k, k + 2))
        bp = polar(b)
        for face in bp.faces():
            back = dual_face(dual_face(face, b), bp)
            assert set(map(tuple, face.vertices)) <= set(map(tuple, back.vertices))


def test_gauge_against_lp_and_trichotomy():
    rng = random.Random(5)
    for k in (2, 3):
        b = symmetric_hull(random_points(rng, k, k + 3))
        for x in random_points(rng, k, 30, den=4):
            g = b.gauge(x)
            assert g == b.gauge_lp(x)
            label = b.classify(x)
            assert label == ("interior" if g < 1 else "boundary" if g == 1 else "exterior")
        v = b.vertices[0]
        assert b.classify(v) == "boundary" and b.gauge(v) == 1


def test_alexander_norm_ball():
    x, y = LaurentPoly.var(2, 0), LaurentPoly.var(2, 1)
    sq = alexander_norm_ball((x - 1) * (y - 1))
    rng = random.Random(6)
    for _ in range(40):
        a = (F(rng.randint(-5, 5), rng.randint(1, 3)), F(rng.randint(-5, 5), rng.randint(1, 3)))
        assert sq.norm(a) == abs(a[0]) + abs(a[1]) == deg_alpha((x - 1) * (y - 1), a)
    seg = alexander_norm_ball((LaurentPoly.var(1, 0) - 1) ** 2)
    assert seg.norm((F(3, 2),)) == 3 and not seg.degenerate
    flat = alexander_norm_ball(LaurentPoly.const(2, 5))
    assert flat.degenerate and flat.ball is None and flat.norm((1, 1)) == 0
    with pytest.raises(PolytopeError):
        alexander_norm_ball(LaurentPoly.zero(1))


def test_thurston_check_controls():
    gamma = LaurentPoly.var(1, 0)
    ok = thurston_lower_bound_check((gamma - 1) ** 2, ball_from_functionals([[2]]), 1, samples=20)
    assert ok.ok and ok.correction == 2
    one = thurston_lower_bound_check(LaurentPoly.const(2, 1), ball_from_functionals([[2, 0], [0, 2]]), 2, samples=20)
    assert one.ok
    # negative control: degree 4 against a norm of 2 at the vertex violates the b >= 2 bound
    delta = (LaurentPoly.var(2, 1) - 1) ** 4
    bad = thurston_lower_bound_check(delta, ball_from_functionals([[0, 2], [2, 0]]), 2, samples=20)
    assert not bad.ok and bad.failures()
    with pytest.raises(PolytopeError):
        thurston_lower_bound_check(delta, ball_from_functionals([[2]]), 2, projection=[[1, 0], [0, 1]])
