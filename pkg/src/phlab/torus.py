"""Flat-torus geometry: points, tangent vectors, angles and covering lattices.

Coordinates live on T = R^2/Z^2 with the metric induced by the Euclidean one.
All values are 64-bit floats; point coordinates are reduced to the canonical
half-open cell [0,1)^2 on construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "TorusPoint",
    "TangentVector",
    "Lattice",
    "angle",
    "perp",
    "lattice",
    "torus_dist",
    "wrap_displacement",
    "exp_map",
    "annulus_contains",
]


def _mod1(x: float) -> float:
    y = math.fmod(x, 1.0)
    return y + 1.0 if y < 0.0 else y


@dataclass(frozen=True, slots=True)
class TorusPoint:
    """Point on the flat torus, stored as its representative in [0,1)^2."""

    x: float
    y: float

    def __post_init__(self):
        object.__setattr__(self, "x", _mod1(self.x))
        object.__setattr__(self, "y", _mod1(self.y))

    @property
    def xy(self) -> np.ndarray:
        return np.array([self.x, self.y])

    def translate(self, vx: float, vy: float) -> "TorusPoint":
        return TorusPoint(self.x + vx, self.y + vy)


@dataclass(frozen=True, slots=True)
class TangentVector:
    """Tangent vector in the global trivialization of the torus tangent bundle."""

    vx: float
    vy: float

    @property
    def xy(self) -> np.ndarray:
        return np.array([self.vx, self.vy])

    def norm(self) -> float:
        return math.hypot(self.vx, self.vy)

    def scaled(self, c: float) -> "TangentVector":
        return TangentVector(c * self.vx, c * self.vy)

    def unit(self) -> "TangentVector":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return TangentVector(self.vx / n, self.vy / n)


def perp(v: TangentVector) -> TangentVector:
    """Rotate by a right angle counter-clockwise: (x, y) -> (-y, x)."""
    return TangentVector(-v.vy, v.vx)


def angle(u: TangentVector, v: TangentVector) -> float:
    """Unsigned angle between two nonzero tangent vectors, in [0, pi].

    Uses atan2 of |cross| and dot, which is stable for nearly parallel and
    nearly opposite pairs alike.
    """
    nu = u.norm()
    nv = v.norm()
    if nu == 0.0 or nv == 0.0:
        raise ValueError("angle undefined for the zero vector")
    cross = u.vx * v.vy - u.vy * v.vx
    dot = u.vx * v.vx + u.vy * v.vy
    return math.atan2(abs(cross), dot)


def signed_angle(u: TangentVector, v: TangentVector) -> float:
    """Signed angle from u to v in (-pi, pi] (counter-clockwise positive)."""
    nu = u.norm()
    nv = v.norm()
    if nu == 0.0 or nv == 0.0:
        raise ValueError("angle undefined for the zero vector")
    cross = u.vx * v.vy - u.vy * v.vx
    dot = u.vx * v.vx + u.vy * v.vy
    return math.atan2(cross, dot)


def wrap_displacement(dx: float, dy: float) -> tuple[float, float]:
    """Representative of (dx, dy) mod Z^2 with components in [-1/2, 1/2)."""
    dx = _mod1(dx)
    dy = _mod1(dy)
    if dx >= 0.5:
        dx -= 1.0
    if dy >= 0.5:
        dy -= 1.0
    return dx, dy


def torus_dist(p: TorusPoint, q: TorusPoint) -> float:
    """Distance on the torus: min over Z^2 translates of the Euclidean distance.

    For the unit square torus the componentwise min-image realizes the
    minimum over the 9 nearest translates.
    """
    dx, dy = wrap_displacement(q.x - p.x, q.y - p.y)
    return math.hypot(dx, dy)


def torus_dist_arrays(px: np.ndarray, py: np.ndarray, qx: float, qy: float) -> np.ndarray:
    """Vectorized torus distance from arrays of points to a single point."""
    dx = np.abs(np.mod(px - qx, 1.0))
    dy = np.abs(np.mod(py - qy, 1.0))
    dx = np.minimum(dx, 1.0 - dx)
    dy = np.minimum(dy, 1.0 - dy)
    return np.hypot(dx, dy)


def exp_map(z: TorusPoint, v: TangentVector) -> TorusPoint:
    """Exponential map of the flat torus: z + v reduced mod 1."""
    return TorusPoint(z.x + v.vx, z.y + v.vy)


@dataclass(frozen=True)
class Lattice:
    """Square grid of multiples of 1/(floor(1/delta)+1); the disks B(z, delta)
    over lattice points cover the torus."""

    delta: float
    spacing: float
    n_side: int

    @property
    def count(self) -> int:
        return self.n_side * self.n_side

    def points(self) -> list[TorusPoint]:
        s = self.spacing
        return [TorusPoint(i * s, j * s) for i in range(self.n_side) for j in range(self.n_side)]

    def points_array(self) -> np.ndarray:
        s = self.spacing
        i = np.arange(self.n_side)
        gx, gy = np.meshgrid(i * s, i * s, indexing="ij")
        return np.column_stack([gx.ravel(), gy.ravel()])

    def nearest(self, p: TorusPoint) -> TorusPoint:
        s = self.spacing
        i = round(p.x / s) % self.n_side
        j = round(p.y / s) % self.n_side
        return TorusPoint(i * s, j * s)


def lattice(delta: float) -> Lattice:
    """Covering lattice with spacing 1/(floor(1/delta)+1)."""
    if not 0.0 < delta < 1.0:
        raise ValueError(f"delta must lie in (0,1), got {delta}")
    n_side = int(math.floor(1.0 / delta)) + 1
    return Lattice(delta=delta, spacing=1.0 / n_side, n_side=n_side)


def annulus_contains(p: TorusPoint, half_width: float = 1.0 / 3.0, axis: int = 1) -> bool:
    """Membership in the annulus {|coordinate| <= half_width mod 1} of the torus."""
    c = p.y if axis == 1 else p.x
    d = min(c, 1.0 - c)
    return d <= half_width + 1e-15
