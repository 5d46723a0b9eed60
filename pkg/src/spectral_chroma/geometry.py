"""Upper half-plane model of the hyperbolic plane.

Points, orientation-preserving isometries (real 2x2 matrices up to sign),
the distance formula, and an explicit parametrization of the circle of
radius r around any center.  Everything here is a pure function of its
inputs and safe for concurrent use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

# diag(exp(r/2), exp(-r/2)) entries stay well inside double range up to
# here; beyond, squared coordinates start to drown the distance formula
MAX_CIRCLE_RADIUS = 40.0


@dataclass(frozen=True)
class Point:
    """A point x + iy of the upper half-plane, y > 0 strictly."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise DomainError(f"point coordinates must be finite, got ({self.x}, {self.y})")
        if not self.y > 0.0:
            raise DomainError(f"point must satisfy y > 0, got y = {self.y}")


#: The distinguished point i, stabilized by the rotation subgroup.
ORIGIN = Point(0.0, 1.0)


@dataclass(frozen=True)
class MoebiusMap:
    """Orientation-preserving isometry z -> (az+b)/(cz+d).

    The matrix is renormalized to unit determinant on construction and
    stored with a canonical sign, so (a, b, c, d) and (-a, -b, -c, -d)
    produce equal objects.
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        entries = (self.a, self.b, self.c, self.d)
        if not all(math.isfinite(v) for v in entries):
            raise DomainError(f"matrix entries must be finite, got {entries}")
        det = self.a * self.d - self.b * self.c
        if not (math.isfinite(det) and det > 0.0):
            raise DomainError(f"matrix must have positive determinant, got {det}")
        scale = 1.0 / math.sqrt(det)
        a, b, c, d = (v * scale for v in entries)
        for v in (a, b, c, d):
            if v != 0.0:
                if v < 0.0:
                    a, b, c, d = -a, -b, -c, -d
                break
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    @classmethod
    def identity(cls) -> "MoebiusMap":
        return cls(1.0, 0.0, 0.0, 1.0)

    @classmethod
    def rotation(cls, phi: float) -> "MoebiusMap":
        """Rotation fixing the origin i; rotates the plane by angle 2*phi."""
        return cls(math.cos(phi), math.sin(phi), -math.sin(phi), math.cos(phi))

    @classmethod
    def push(cls, r: float) -> "MoebiusMap":
        """Diagonal map sending the origin i to exp(r)*i along the axis."""
        e = math.exp(0.5 * r)
        return cls(e, 0.0, 0.0, 1.0 / e)

    @classmethod
    def origin_to(cls, p: Point) -> "MoebiusMap":
        """Upper-triangular map taking the origin i to p."""
        s = math.sqrt(p.y)
        return cls(s, p.x / s, 0.0, 1.0 / s)

    def compose(self, other: "MoebiusMap") -> "MoebiusMap":
        """Matrix product self * other (apply other first)."""
        return MoebiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def apply(self, p: Point) -> Point:
        # y' = y * det / |cz+d|^2 computed directly, so the sign of the
        # imaginary part can never be lost to cancellation
        cxd = self.c * p.x + self.d
        cy = self.c * p.y
        denom = cxd * cxd + cy * cy
        num_x = (self.a * p.x + self.b) * cxd + self.a * self.c * p.y * p.y
        return Point(num_x / denom, p.y / denom)


def distance(p: Point, q: Point) -> float:
    """Hyperbolic distance acosh(1 + rho / (2 y y')) with rho = |q - p|^2.

    Evaluated in the equivalent half-angle form 2 asinh(sqrt(rho/(4 y y')))
    so nearby points keep their full separation instead of vanishing into
    the 1 + eps plateau of acosh.  Symmetric at the bit level: every
    floating-point operation commutes under swapping the arguments.
    """
    dx = q.x - p.x
    dy = q.y - p.y
    rho = dx * dx + dy * dy
    return 2.0 * math.asinh(0.5 * math.sqrt(rho / (p.y * q.y)))


def circle_point(center: Point, r: float, theta: float) -> Point:
    """Point at hyperbolic distance r from center, angle parameter theta.

    theta in [0, 2*pi) sweeps the circle exactly once; the rotation matrix
    acts on the plane by twice its angle, hence the theta/2 below.
    Supported radii: 0 <= r <= MAX_CIRCLE_RADIUS.
    """
    if not (math.isfinite(r) and r >= 0.0):
        raise DomainError(f"circle radius must be a finite non-negative real, got {r}")
    if r > MAX_CIRCLE_RADIUS:
        raise DomainError(f"circle radius {r} exceeds the supported range r <= {MAX_CIRCLE_RADIUS}")
    g = MoebiusMap.origin_to(center)
    g = g.compose(MoebiusMap.rotation(0.5 * theta))
    g = g.compose(MoebiusMap.push(r))
    return g.apply(ORIGIN)
