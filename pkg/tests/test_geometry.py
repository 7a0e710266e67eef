import math

import pytest

from circle_billiards.core import coprime_rotations, make_rotation
from circle_billiards.geometry import (
    Chord,
    chord_list,
    chords_cross,
    intersection_points,
    ring_radii,
    sub_billiard_angle,
    vertex_positions,
)


def test_vertex_positions_examples():
    square = vertex_positions(make_rotation(1, 4))
    assert square[1] == pytest.approx((0.0, 1.0), abs=1e-12)
    star = vertex_positions(make_rotation(3, 7))
    assert star[0] == pytest.approx((1.0, 0.0), abs=1e-12)
    pentagram = vertex_positions(make_rotation(2, 5))
    assert pentagram[2] == pytest.approx((-0.809017, 0.587785), abs=1e-6)


def test_all_chords_same_length():
    rp = make_rotation(2, 5)
    verts = vertex_positions(rp)
    lengths = {
        round(math.dist(verts[c.from_vertex], verts[c.to_vertex]), 12)
        for c in chord_list(rp)
    }
    assert len(lengths) == 1


def test_chord_list_examples():
    pentagram = chord_list(make_rotation(2, 5))
    assert [(c.from_vertex, c.to_vertex) for c in pentagram] == [
        (0, 2),
        (2, 4),
        (4, 1),
        (1, 3),
        (3, 0),
    ]
    star = chord_list(make_rotation(3, 7))
    assert (star[0].from_vertex, star[0].to_vertex) == (0, 3)
    big = chord_list(make_rotation(3, 13))
    assert (big[12].from_vertex, big[12].to_vertex, big[12].step_index) == (10, 0, 13)


def test_chords_close_the_orbit():
    for rp in coprime_rotations(20):
        chords = chord_list(rp)
        assert chords[0].from_vertex == 0
        assert chords[-1].to_vertex == 0
        for a, b in zip(chords, chords[1:]):
            assert a.to_vertex == b.from_vertex
            assert b.to_vertex == (b.from_vertex + rp.p) % rp.q


def test_chords_cross_examples():
    assert chords_cross(Chord(0, 2, 1), Chord(1, 3, 2), 5)
    assert not chords_cross(Chord(0, 2, 1), Chord(2, 4, 2), 5)
    assert not chords_cross(Chord(0, 1, 1), Chord(2, 3, 2), 6)


def test_crossing_symmetry_exhaustive():
    for rp in coprime_rotations(20):
        chords = chord_list(rp)
        for i, a in enumerate(chords):
            for b in chords[i + 1 :]:
                assert chords_cross(a, b, rp.q) == chords_cross(b, a, rp.q)


def _ccw(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]) > 0


def _segments_properly_intersect(p1, p2, p3, p4):
    return _ccw(p1, p2, p3) != _ccw(p1, p2, p4) and _ccw(p3, p4, p1) != _ccw(p3, p4, p2)


def test_crossing_matches_float_predicate():
    for rp in coprime_rotations(20):
        verts = vertex_positions(rp)
        chords = chord_list(rp)
        for i, a in enumerate(chords):
            for b in chords[i + 1 :]:
                if {a.from_vertex, a.to_vertex} & {b.from_vertex, b.to_vertex}:
                    expected = False
                else:
                    expected = _segments_properly_intersect(
                        verts[a.from_vertex],
                        verts[a.to_vertex],
                        verts[b.from_vertex],
                        verts[b.to_vertex],
                    )
                assert chords_cross(a, b, rp.q) == expected, (rp.p, rp.q, a, b)


def test_ring_radii_3_7():
    rings = ring_radii(make_rotation(3, 7))
    assert rings[0].normalized_radius == 1.0
    assert rings[1].normalized_radius == pytest.approx(0.356896, abs=1e-5)
    assert rings[2].normalized_radius == pytest.approx(0.246980, abs=1e-5)


def test_ring_radii_pentagram():
    rings = ring_radii(make_rotation(2, 5))
    assert [r.ring_index for r in rings] == [0, 1]
    assert rings[1].normalized_radius == pytest.approx(0.381966, abs=1e-6)


def test_ring_radii_polygon():
    rings = ring_radii(make_rotation(1, 5))
    assert len(rings) == 1
    assert rings[0].normalized_radius == 1.0


def test_ring_radii_strictly_decreasing():
    for rp in coprime_rotations(60):
        vals = [r.normalized_radius for r in ring_radii(rp)]
        assert vals[0] == 1.0
        assert all(a > b for a, b in zip(vals, vals[1:]))


def test_intersections_square():
    geo = intersection_points(make_rotation(1, 4))
    assert geo.intersections == ()


def test_intersections_pentagram():
    geo = intersection_points(make_rotation(2, 5))
    assert len(geo.intersections) == 5
    assert {x.ring for x in geo.intersections} == {1}


def test_intersections_7_star():
    geo = intersection_points(make_rotation(3, 7))
    assert len(geo.intersections) == 14
    per_ring = {}
    for x in geo.intersections:
        per_ring[x.ring] = per_ring.get(x.ring, 0) + 1
    assert per_ring == {1: 7, 2: 7}


def test_ring_membership_tolerance():
    for pq in [(3, 7), (4, 9), (5, 12), (7, 16)]:
        rp = make_rotation(*pq)
        radii = {r.ring_index: r.normalized_radius for r in ring_radii(rp)}
        for x in intersection_points(rp).intersections:
            d = math.hypot(*x.point)
            assert abs(d - radii[x.ring]) <= 1e-9


def test_ring_structure_scan():
    for rp in coprime_rotations(25):
        geo = intersection_points(rp)  # raises RingAssignmentError on failure
        assert len(geo.intersections) == rp.q * (rp.p - 1)
        rings = {}
        for x in geo.intersections:
            rings.setdefault(x.ring, []).append(math.atan2(x.point[1], x.point[0]))
        assert set(rings) == set(range(1, rp.p))
        gap = 2 * math.pi / rp.q
        for angles in rings.values():
            assert len(angles) == rp.q
            angles.sort()
            deltas = [b - a for a, b in zip(angles, angles[1:])]
            deltas.append(angles[0] + 2 * math.pi - angles[-1])
            assert all(abs(d - gap) <= 1e-9 for d in deltas)


def test_no_triple_intersections():
    for rp in coprime_rotations(25):
        pts = [x.point for x in intersection_points(rp).intersections]
        for i, a in enumerate(pts):
            for b in pts[i + 1 :]:
                assert (a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2 > 1e-12, (rp.p, rp.q)


def test_sub_billiard_examples():
    rp = make_rotation(3, 7)
    assert sub_billiard_angle(rp, 0) == rp
    inner = sub_billiard_angle(rp, 1)
    assert (inner.p, inner.q) == (2, 7)
    innermost = sub_billiard_angle(rp, 2)
    assert (innermost.p, innermost.q) == (1, 7)


def test_sub_billiard_reduces():
    reduced = sub_billiard_angle(make_rotation(4, 15), 1)  # 3/15 -> 1/5
    assert (reduced.p, reduced.q) == (1, 5)


def test_sub_billiard_bad_ring():
    rp = make_rotation(3, 7)
    with pytest.raises(ValueError):
        sub_billiard_angle(rp, 3)
    with pytest.raises(ValueError):
        sub_billiard_angle(rp, -1)
