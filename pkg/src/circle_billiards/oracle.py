"""Brute-force region counters: exact ground truth for the formula module.

Two accountings are kept deliberately separate so a bug in one cannot
silently confirm the other: an incremental count (each chord adds one
region per earlier chord it crosses, plus one) and a vertex/edge/face
census of the induced planar subdivision.  Both run on the combinatorial
crossing predicate only; no floating point is involved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import RotationParameter
from .formula import (
    DivisionSequence,
    SequenceSource,
    general_sequence,
    r1_sequence,
    special_sequence,
    total_regions,
)
from .geometry import (
    RingAssignmentError,
    chord_list,
    chords_cross,
    intersection_points,
    ring_radii,
)


@dataclass(frozen=True)
class ArrangementCensus:
    """Counts for the circle plus a chord prefix; faces exclude the outer face."""

    vertices_count: int
    edges_count: int
    faces_count: int


def _crossing_counts(param: RotationParameter) -> list[int]:
    """counts[n-1] = number of chords among 1..n-1 crossed by chord n."""
    chords = chord_list(param)
    q = param.q
    counts = []
    for i in range(len(chords)):
        b = chords[i]
        c = 0
        for j in range(i):
            if chords_cross(chords[j], b, q):
                c += 1
        counts.append(c)
    return counts


def oracle_sequence(param: RotationParameter) -> DivisionSequence:
    """f_n by direct counting: each chord adds 1 + (earlier chords it crosses).

    Valid because no three chords meet in a single interior point, so every
    crossing splits exactly one existing region in two.
    """
    increments = [1 + c for c in _crossing_counts(param)]
    return DivisionSequence.from_increments(param, increments, SequenceSource.ORACLE)


def arrangement_census(param: RotationParameter, upto_chord: int) -> ArrangementCensus:
    """Euler census of the subdivision induced by the first upto_chord chords.

    A boundary vertex counts once any incident chord is drawn; t touched
    points cut the boundary into t arcs; a chord crossed c times contributes
    c + 1 edges.  Faces follow from f = 1 + e - v with the outer face
    excluded.  The bare circle (upto_chord = 0) is (0, 0, 1) by convention.
    """
    q = param.q
    if not 0 <= upto_chord <= q:
        raise ValueError(f"upto_chord must be in 0..{q}, got {upto_chord}")
    if upto_chord == 0:
        return ArrangementCensus(0, 0, 1)
    chords = chord_list(param)[:upto_chord]
    touched = set()
    for ch in chords:
        touched.add(ch.from_vertex)
        touched.add(ch.to_vertex)
    crossings = 0
    for i in range(len(chords)):
        b = chords[i]
        for j in range(i):
            if chords_cross(chords[j], b, q):
                crossings += 1
    t = len(touched)
    v = t + crossings
    e = t + upto_chord + 2 * crossings
    return ArrangementCensus(v, e, 1 + e - v)


def census_prefixes(param: RotationParameter) -> list[ArrangementCensus]:
    """arrangement_census at every prefix 0..q, computed in one quadratic pass.

    The traversal touches one new boundary vertex per chord until the orbit
    closes, so the boundary part of the census is n + 1 touched vertices and
    arcs (q at closure); crossing totals accumulate per chord.
    """
    counts = _crossing_counts(param)
    out = [ArrangementCensus(0, 0, 1)]
    crossings = 0
    q = param.q
    for n in range(1, q + 1):
        crossings += counts[n - 1]
        t = n + 1 if n < q else q
        v = t + crossings
        e = t + n + 2 * crossings
        out.append(ArrangementCensus(v, e, 1 + e - v))
    return out


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    first_divergence: int | None = None


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of every cross-check for one parameter."""

    param: RotationParameter
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]


def _first_divergence(xs, ys) -> int | None:
    for n, (x, y) in enumerate(zip(xs, ys)):
        if x != y:
            return n
    if len(xs) != len(ys):
        return min(len(xs), len(ys))
    return None


def _ring_check(param: RotationParameter) -> CheckResult:
    """Crossings land on rings 1..p-1, q per ring, equally spaced, radii decreasing."""
    radii = [rr.normalized_radius for rr in ring_radii(param)]
    if any(a <= b for a, b in zip(radii, radii[1:])):
        return CheckResult("rings", False)
    try:
        geo = intersection_points(param)
    except RingAssignmentError:
        return CheckResult("rings", False)
    p, q = param.p, param.q
    if len(geo.intersections) != q * (p - 1):
        return CheckResult("rings", False)
    per_ring: dict[int, list[float]] = {}
    for x in geo.intersections:
        per_ring.setdefault(x.ring, []).append(math.atan2(x.point[1], x.point[0]))
    if set(per_ring) != set(range(1, p)):
        return CheckResult("rings", False)
    gap = 2.0 * math.pi / q
    for angles in per_ring.values():
        if len(angles) != q:
            return CheckResult("rings", False)
        angles.sort()
        deltas = [b - a for a, b in zip(angles, angles[1:])]
        deltas.append(angles[0] + 2.0 * math.pi - angles[-1])
        if any(abs(d - gap) > 1e-9 for d in deltas):
            return CheckResult("rings", False)
    return CheckResult("rings", True)


def verify_pair(param: RotationParameter) -> VerificationReport:
    """Run every cross-check for one parameter.

    Failures become report entries rather than exceptions so exhaustive
    scans can aggregate them.
    """
    try:
        general = general_sequence(param)
        oracle = oracle_sequence(param)
    except ValueError:
        return VerificationReport(
            param, (CheckResult("sequence_construction", False),)
        )
    checks = []

    div = _first_divergence(general.values, oracle.values)
    checks.append(CheckResult("general_vs_oracle", div is None, div))

    faces = tuple(c.faces_count for c in census_prefixes(param))
    div = _first_divergence(faces, general.values)
    checks.append(CheckResult("census_vs_general", div is None, div))

    full = arrangement_census(param, param.q)
    expected = (param.p * param.q, 2 * param.p * param.q, total_regions(param))
    got = (full.vertices_count, full.edges_count, full.faces_count)
    checks.append(CheckResult("full_orbit_census", got == expected))

    checks.append(
        CheckResult("endpoint_total", general.values[-1] == total_regions(param))
    )

    if param.q == 2 * param.p + 1:
        special = special_sequence(param.p)
        div = _first_divergence(special.values, general.values)
        checks.append(CheckResult("special_form", div is None, div))

    if param.r == 1:
        simplified = r1_sequence(param)
        div = _first_divergence(simplified.values, general.values)
        checks.append(CheckResult("r1_form", div is None, div))

    checks.append(_ring_check(param))
    return VerificationReport(param, tuple(checks))
