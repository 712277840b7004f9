"""Projective-point utilities: scale invariance, infinity, collinearity."""

import random

import pytest

from focalcurves.geometry import (
    PlanePoint,
    ProjectivePoint,
    collinearity_residual,
    cross,
    projective_det,
    projectively_equal,
)


def test_plane_point_unpacks():
    x, y = PlanePoint(1.5, -2.0)
    assert (x, y) == (1.5, -2.0)


def test_rejects_zero_triple():
    with pytest.raises(ValueError):
        ProjectivePoint(0.0, 0.0, 0.0)


def test_affine_chart_and_infinity():
    p = ProjectivePoint(2.0, 4.0, 2.0)
    a = p.affine()
    assert (a.x, a.y) == (1.0, 2.0)
    assert not p.is_at_infinity()

    q = ProjectivePoint(1.0, -1.0, 0.0)
    assert q.affine() is None
    assert q.is_at_infinity()


def test_equality_ignores_scale():
    rng = random.Random(1203)
    for _ in range(200):
        p = ProjectivePoint(rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(1, 5))
        s = rng.choice([-3.0, -0.25, 0.5, 7.0])
        q = ProjectivePoint(p.x * s, p.y * s, p.z * s)
        assert projectively_equal(p, q)


def test_distinct_points_are_not_equal():
    e1 = ProjectivePoint(1.0, 0.0, 0.0)
    e2 = ProjectivePoint(0.0, 1.0, 0.0)
    e3 = ProjectivePoint(0.0, 0.0, 1.0)
    assert not projectively_equal(e1, e2)
    assert not projectively_equal(e2, e3)
    assert not projectively_equal(e1, ProjectivePoint(1.0, 1e-6, 0.0))


def test_cross_of_basis_vectors():
    e1 = ProjectivePoint(1.0, 0.0, 0.0)
    e2 = ProjectivePoint(0.0, 1.0, 0.0)
    assert cross(e1, e2) == (0.0, 0.0, 1.0)


def test_collinearity_residual_scale_free():
    rng = random.Random(88)
    for _ in range(100):
        # p, q random; r on the line through them, then rescaled arbitrarily
        p = ProjectivePoint(rng.uniform(-4, 4), rng.uniform(-4, 4), 1.0)
        q = ProjectivePoint(rng.uniform(-4, 4), rng.uniform(-4, 4), 1.0)
        u, v = rng.uniform(-2, 2), rng.uniform(-2, 2)
        r = ProjectivePoint(u * p.x + v * q.x, u * p.y + v * q.y, u * p.z + v * q.z)
        s = rng.choice([1e-6, 1.0, 1e6])
        r = ProjectivePoint(r.x * s, r.y * s, r.z * s)
        assert collinearity_residual(p, q, r) <= 1e-9


def test_collinearity_residual_detects_generic_triples():
    e1 = ProjectivePoint(1.0, 0.0, 0.0)
    e2 = ProjectivePoint(0.0, 1.0, 0.0)
    e3 = ProjectivePoint(0.0, 0.0, 1.0)
    assert projective_det(e1, e2, e3) == 1.0
    assert collinearity_residual(e1, e2, e3) == 1.0
