import math

import numpy as np
import pytest

from spectral_chroma import (
    MAX_CIRCLE_RADIUS,
    ORIGIN,
    DomainError,
    MoebiusMap,
    Point,
    circle_point,
    distance,
)


def random_map(rng) -> MoebiusMap:
    # Iwasawa-style sample: shear * diagonal * rotation, unit determinant
    x = rng.uniform(-2.0, 2.0)
    t = rng.uniform(-3.0, 3.0)
    phi = rng.uniform(0.0, 2.0 * math.pi)
    shear = MoebiusMap(1.0, x, 0.0, 1.0)
    return shear.compose(MoebiusMap.push(t)).compose(MoebiusMap.rotation(phi))


def random_point(rng) -> Point:
    return Point(rng.uniform(-5.0, 5.0), rng.uniform(0.1, 5.0))


class TestPoint:
    def test_rejects_boundary_and_lower_half(self):
        for y in (0.0, -1.0, -1e-300):
            with pytest.raises(DomainError):
                Point(0.0, y)

    def test_rejects_non_finite(self):
        with pytest.raises(DomainError):
            Point(math.nan, 1.0)
        with pytest.raises(DomainError):
            Point(0.0, math.inf)


class TestDistance:
    def test_origin_to_e(self):
        assert distance(ORIGIN, Point(0.0, math.e)) == pytest.approx(1.0, abs=1e-12)

    def test_identity_is_zero(self):
        assert distance(ORIGIN, ORIGIN) == 0.0

    def test_unit_horizontal(self):
        assert distance(ORIGIN, Point(1.0, 1.0)) == pytest.approx(math.acosh(1.5), abs=1e-15)

    def test_bitwise_symmetry(self):
        rng = np.random.default_rng(101)
        for _ in range(200):
            p, q = random_point(rng), random_point(rng)
            assert distance(p, q) == distance(q, p)

    def test_triangle_inequality(self):
        rng = np.random.default_rng(102)
        for _ in range(200):
            p, q, z = (random_point(rng) for _ in range(3))
            assert distance(p, q) <= distance(p, z) + distance(z, q) + 1e-12

    def test_positive_for_distinct(self):
        assert distance(ORIGIN, Point(1e-8, 1.0)) > 0.0


class TestMoebiusMap:
    def test_identity_fixes_points(self):
        p = Point(0.3, 2.0)
        q = MoebiusMap.identity().apply(p)
        assert (q.x, q.y) == (0.3, 2.0)

    def test_push_moves_origin_up(self):
        r = 1.7
        q = MoebiusMap.push(r).apply(ORIGIN)
        assert q.x == 0.0
        assert q.y == pytest.approx(math.exp(r), rel=1e-14)

    def test_rotation_stabilizes_origin(self):
        for phi in np.linspace(0.0, math.pi, 17):
            q = MoebiusMap.rotation(phi).apply(ORIGIN)
            assert abs(q.x) < 1e-15
            assert q.y == pytest.approx(1.0, abs=1e-15)

    def test_determinant_renormalized(self):
        g = MoebiusMap(2.0, 0.0, 0.0, 2.0)
        assert abs(g.a * g.d - g.b * g.c - 1.0) <= 1e-12
        assert g == MoebiusMap.identity()

    def test_sign_quotient_equality(self):
        g = MoebiusMap(1.0, 2.0, 0.5, 2.0)
        h = MoebiusMap(-1.0, -2.0, -0.5, -2.0)
        assert g == h
        assert hash(g) == hash(h)

    def test_rejects_nonpositive_determinant(self):
        with pytest.raises(DomainError):
            MoebiusMap(1.0, 0.0, 0.0, -1.0)
        with pytest.raises(DomainError):
            MoebiusMap(1.0, 1.0, 1.0, 1.0)

    def test_inverse_composes_to_identity(self):
        rng = np.random.default_rng(103)
        for _ in range(50):
            g = random_map(rng)
            p = random_point(rng)
            q = g.inverse().apply(g.apply(p))
            assert q.x == pytest.approx(p.x, abs=1e-10)
            assert q.y == pytest.approx(p.y, rel=1e-10)

    def test_isometry_invariance(self):
        rng = np.random.default_rng(104)
        for _ in range(1000):
            g = random_map(rng)
            p, q = random_point(rng), random_point(rng)
            assert abs(distance(g.apply(p), g.apply(q)) - distance(p, q)) < 1e-10

    def test_image_stays_in_half_plane(self):
        rng = np.random.default_rng(105)
        for _ in range(200):
            assert random_map(rng).apply(random_point(rng)).y > 0.0


class TestCirclePoint:
    def test_theta_zero_at_origin(self):
        q = circle_point(ORIGIN, 1.0, 0.0)
        assert abs(q.x) < 1e-15
        assert q.y == pytest.approx(math.e, rel=1e-13)

    def test_degenerate_circle(self):
        q = circle_point(ORIGIN, 0.0, 1.234)
        assert q.x == pytest.approx(0.0, abs=1e-15)
        assert q.y == pytest.approx(1.0, abs=1e-15)

    def test_sweep_keeps_radius(self):
        center = ORIGIN
        for theta in np.linspace(0.0, 2.0 * math.pi, 64, endpoint=False):
            assert abs(distance(center, circle_point(center, 2.0, theta)) - 2.0) <= 1e-10

    @pytest.mark.parametrize("r", [0.5, 1.0, 5.0, 10.0])
    def test_random_centers(self, r):
        rng = np.random.default_rng(106)
        for _ in range(25):
            center = random_point(rng)
            theta = rng.uniform(0.0, 2.0 * math.pi)
            assert abs(distance(center, circle_point(center, r, theta)) - r) <= 1e-9

    def test_sweep_is_injective(self):
        # theta covers the circle once: 8 equally spaced angles, 8 spots
        pts = [circle_point(Point(0.4, 1.3), 1.0, k * math.pi / 4.0) for k in range(8)]
        for i in range(8):
            for j in range(i + 1, 8):
                assert distance(pts[i], pts[j]) > 1e-6

    def test_rejects_bad_radius(self):
        with pytest.raises(DomainError):
            circle_point(ORIGIN, -0.1, 0.0)
        with pytest.raises(DomainError):
            circle_point(ORIGIN, MAX_CIRCLE_RADIUS + 1.0, 0.0)
        with pytest.raises(DomainError):
            circle_point(ORIGIN, math.nan, 0.0)
