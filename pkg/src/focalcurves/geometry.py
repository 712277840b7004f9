"""Plane and projective-plane primitives shared across the package.

Points of the projective plane are coordinate triples up to nonzero scale;
triples with third coordinate zero are points at infinity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class PlanePoint:
    """A point of the Cartesian plane."""

    x: float
    y: float

    def __iter__(self):
        yield self.x
        yield self.y


@dataclass(frozen=True)
class ProjectivePoint:
    """Homogeneous coordinate triple (x : y : z), not all zero."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        if self.x == 0 and self.y == 0 and self.z == 0:
            raise ValueError("projective point must have a nonzero coordinate")

    def norm(self) -> float:
        return math.sqrt(float(self.x) ** 2 + float(self.y) ** 2 + float(self.z) ** 2)

    def normalized(self) -> "ProjectivePoint":
        n = self.norm()
        return ProjectivePoint(self.x / n, self.y / n, self.z / n)

    def is_at_infinity(self, tol: float = 0.0) -> bool:
        return abs(self.z) <= tol * max(abs(self.x), abs(self.y), abs(self.z))

    def affine(self) -> Optional[PlanePoint]:
        """Dehomogenize, or None for a point at infinity."""
        if self.z == 0:
            return None
        return PlanePoint(float(self.x) / float(self.z), float(self.y) / float(self.z))


def cross(p: ProjectivePoint, q: ProjectivePoint) -> tuple:
    return (
        p.y * q.z - p.z * q.y,
        p.z * q.x - p.x * q.z,
        p.x * q.y - p.y * q.x,
    )


def projectively_equal(p: ProjectivePoint, q: ProjectivePoint, tol: float = 1e-9) -> bool:
    """Equality up to scale: the cross product of the triples vanishes to tolerance."""
    c = cross(p, q)
    cn = math.sqrt(sum(float(v) ** 2 for v in c))
    return cn <= tol * p.norm() * q.norm()


def projective_det(p: ProjectivePoint, q: ProjectivePoint, r: ProjectivePoint) -> float:
    """Determinant of the three coordinate triples; zero iff the points are collinear."""
    return (
        p.x * (q.y * r.z - q.z * r.y)
        - p.y * (q.x * r.z - q.z * r.x)
        + p.z * (q.x * r.y - q.y * r.x)
    )


def collinearity_residual(p: ProjectivePoint, q: ProjectivePoint, r: ProjectivePoint) -> float:
    """|det| of the row-normalized triples; scale-free collinearity measure."""
    pn, qn, rn = p.normalized(), q.normalized(), r.normalized()
    return abs(projective_det(pn, qn, rn))
