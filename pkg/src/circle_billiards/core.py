"""Rotation parameters of rational circular billiards.

A point bouncing inside a circle advances by a fixed angle between
consecutive reflections.  When that angle is (p/q) * 2*pi with gcd(p, q) = 1
the orbit closes after q chords and p turns around the circle; the traced
figure is the star polygon {q/p}.  Every other module takes the validated
pair (p, q) from here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

# Region totals grow like p*q + 1; this guard keeps denominators in a range
# where every count is cheap exact integer arithmetic.
MAX_Q = 10**6


class ParameterError(ValueError):
    """Rotation fraction outside the supported range."""


@dataclass(frozen=True)
class RotationParameter:
    """Reduced rotation fraction p/q plus derived quantities.

    m and r split the denominator as q = m*p + r with 0 <= r < p; they
    control the block structure of the division sequence.  theta is the
    rotation angle per bounce, alpha the reflection angle against the
    boundary normal.  Instances are immutable and safe to share.
    """

    p: int
    q: int
    m: int
    r: int
    theta: float
    alpha: float


def make_rotation(p_in: int, q_in: int) -> RotationParameter:
    """Build a validated parameter from a (not necessarily reduced) fraction.

    The input is reduced by its gcd.  The reduced fraction must satisfy
    p/q < 1/2: larger fractions describe the same figures traced clockwise
    (or, at exactly 1/2, a retraced diameter) and are rejected.
    """
    if p_in < 1:
        raise ParameterError(f"p must be a positive integer, got {p_in}")
    if q_in < 1:
        raise ParameterError(f"q must be a positive integer, got {q_in}")
    if q_in > MAX_Q:
        raise ParameterError(f"q must be at most {MAX_Q}, got {q_in}")
    g = math.gcd(p_in, q_in)
    p = p_in // g
    q = q_in // g
    if 2 * p >= q:
        raise ParameterError(
            f"{p_in}/{q_in} reduces to {p}/{q}: out of supported range (p/q < 1/2 required)"
        )
    m, r = divmod(q, p)
    theta = 2.0 * math.pi * p / q
    alpha = 0.5 * (math.pi - theta)
    return RotationParameter(p=p, q=q, m=m, r=r, theta=theta, alpha=alpha)


def decompose(param: RotationParameter) -> tuple[int, int]:
    """Return (m, r) with q = m*p + r; (q, 0) when p = 1."""
    return param.m, param.r


def coprime_rotations(q_max: int, q_min: int = 3) -> Iterator[RotationParameter]:
    """All valid parameters with q_min <= q <= q_max, ordered by (q, p)."""
    for q in range(q_min, q_max + 1):
        for p in range(1, (q - 1) // 2 + 1):
            if math.gcd(p, q) == 1:
                yield make_rotation(p, q)
