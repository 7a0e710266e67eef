"""Numeric realization of the trajectory: vertices, chords, crossings, rings.

Crossing detection is purely combinatorial (cyclic interleaving of vertex
indices), so the region counts built on it are exact.  Floating point only
enters for coordinates, ring radii and rendering.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass

from .core import RotationParameter, make_rotation

# Interior crossings must sit this close to one of the concentric rings.
RING_TOLERANCE = 1e-9


class RingAssignmentError(RuntimeError):
    """An interior crossing matched no ring radius within tolerance."""


@dataclass(frozen=True, slots=True)
class Chord:
    """One straight path of the trajectory; step_index is 1-based traversal order."""

    from_vertex: int
    to_vertex: int
    step_index: int


@dataclass(frozen=True)
class RingRadius:
    ring_index: int
    normalized_radius: float


@dataclass(frozen=True)
class Intersection:
    """Interior crossing of the chords with step indices chord_a < chord_b."""

    chord_a: int
    chord_b: int
    point: tuple[float, float]
    ring: int


@dataclass(frozen=True)
class TrajectoryGeometry:
    param: RotationParameter
    vertices: tuple[tuple[float, float], ...]
    chords: tuple[Chord, ...]
    intersections: tuple[Intersection, ...]


def vertex_positions(param: RotationParameter) -> list[tuple[float, float]]:
    """Reflection point j at angle 2*pi*j/q on the unit circle.

    Consecutive star corners subtend the central angle 2*pi/q = theta/p.
    """
    q = param.q
    return [
        (math.cos(2.0 * math.pi * j / q), math.sin(2.0 * math.pi * j / q))
        for j in range(q)
    ]


def chord_list(param: RotationParameter) -> list[Chord]:
    """The q chords in traversal order: chord n runs from vertex p*(n-1) to p*n (mod q)."""
    p, q = param.p, param.q
    return [Chord((p * (n - 1)) % q, (p * n) % q, n) for n in range(1, q + 1)]


def chords_cross(a: Chord, b: Chord, q: int) -> bool:
    """True iff the two chords cross at an interior point of the disc.

    Equivalent to their endpoints interleaving around the circle: exactly
    one endpoint of b lies on the open arc swept from a.from_vertex to
    a.to_vertex.  Chords sharing a vertex only meet on the boundary.
    """
    a0, a1, b0, b1 = a.from_vertex, a.to_vertex, b.from_vertex, b.to_vertex
    if a0 == b0 or a0 == b1 or a1 == b0 or a1 == b1:
        return False
    span = (a1 - a0) % q
    return ((b0 - a0) % q < span) != ((b1 - a0) % q < span)


def ring_radii(param: RotationParameter) -> list[RingRadius]:
    """Radii of the p concentric circles that carry the interior crossings.

    r_i = cos(p*pi/q) / cos(p*pi/q - i*pi/q) for i = 0..p-1, strictly
    decreasing; ring 0 is the boundary circle itself (radius exactly 1).
    """
    p, q = param.p, param.q
    base = math.pi * p / q
    return [
        RingRadius(i, math.cos(base) / math.cos(base - math.pi * i / q))
        for i in range(p)
    ]


def _line_intersection(p1, p2, p3, p4) -> tuple[float, float]:
    # Crossing chords are never parallel, so the denominator is nonzero.
    x1, y1 = p1
    x2, y2 = p2
    x3, y3 = p3
    x4, y4 = p4
    denom = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4)
    t = ((x1 - x3) * (y3 - y4) - (y1 - y3) * (x3 - x4)) / denom
    return (x1 + t * (x2 - x1), y1 + t * (y2 - y1))


def intersection_points(param: RotationParameter) -> TrajectoryGeometry:
    """All interior crossings of the full orbit, each assigned to its ring.

    Crossing pairs are selected combinatorially, located by line-line
    intersection, and matched to the nearest ring radius.  A point further
    than RING_TOLERANCE from every ring raises RingAssignmentError.
    """
    verts = vertex_positions(param)
    chords = chord_list(param)
    q = param.q
    ascending = [
        (rr.normalized_radius, rr.ring_index) for rr in reversed(ring_radii(param))
    ]
    radius_values = [v for v, _ in ascending]
    found = []
    for i, a in enumerate(chords):
        pa1, pa2 = verts[a.from_vertex], verts[a.to_vertex]
        for b in chords[i + 1 :]:
            if not chords_cross(a, b, q):
                continue
            pt = _line_intersection(pa1, pa2, verts[b.from_vertex], verts[b.to_vertex])
            d = math.hypot(pt[0], pt[1])
            j = bisect.bisect_left(radius_values, d)
            best_err, best_ring = math.inf, -1
            for k in (j - 1, j):
                if 0 <= k < len(ascending):
                    err = abs(radius_values[k] - d)
                    if err < best_err:
                        best_err, best_ring = err, ascending[k][1]
            if best_err > RING_TOLERANCE:
                raise RingAssignmentError(
                    f"crossing of chords {a.step_index},{b.step_index} at distance "
                    f"{d!r} matches no ring of {param.p}/{param.q}"
                )
            found.append(Intersection(a.step_index, b.step_index, pt, best_ring))
    return TrajectoryGeometry(param, tuple(verts), tuple(chords), tuple(found))


def sub_billiard_angle(param: RotationParameter, ring_index: int) -> RotationParameter:
    """Rotation parameter of the induced orbit on circle ring_index.

    The chords clip ring i into a trajectory advancing by (p - i)/q turns
    per step; the result is reduced like any other parameter.
    """
    if not 0 <= ring_index <= param.p - 1:
        raise ValueError(f"ring_index must be in 0..{param.p - 1}, got {ring_index}")
    return make_rotation(param.p - ring_index, param.q)
