import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circle_billiards.core import (
    MAX_Q,
    ParameterError,
    coprime_rotations,
    decompose,
    make_rotation,
)


def test_worked_example_3_13():
    rp = make_rotation(3, 13)
    assert (rp.p, rp.q, rp.m, rp.r) == (3, 13, 4, 1)


def test_non_reduced_input_is_reduced():
    rp = make_rotation(2, 6)
    assert (rp.p, rp.q, rp.m, rp.r) == (1, 3, 3, 0)


def test_worked_example_3_14():
    rp = make_rotation(3, 14)
    assert (rp.p, rp.q, rp.m, rp.r) == (3, 14, 4, 2)


def test_half_and_above_rejected():
    with pytest.raises(ParameterError, match="out of supported range"):
        make_rotation(1, 2)
    with pytest.raises(ParameterError, match="out of supported range"):
        make_rotation(3, 6)
    with pytest.raises(ParameterError, match="out of supported range"):
        make_rotation(5, 7)


def test_input_validation():
    with pytest.raises(ParameterError):
        make_rotation(0, 5)
    with pytest.raises(ParameterError):
        make_rotation(1, 0)
    with pytest.raises(ParameterError):
        make_rotation(1, MAX_Q + 1)


def test_derived_angles():
    rp = make_rotation(3, 7)
    assert rp.theta == pytest.approx(2 * math.pi * 3 / 7)
    assert rp.alpha == pytest.approx((math.pi - rp.theta) / 2)
    assert 0 < rp.alpha < math.pi / 2


def test_decompose_examples():
    assert decompose(make_rotation(3, 13)) == (4, 1)
    assert decompose(make_rotation(1, 5)) == (5, 0)
    assert decompose(make_rotation(3, 14)) == (4, 2)


def test_exhaustive_decomposition_up_to_200():
    count = 0
    for rp in coprime_rotations(200):
        count += 1
        assert math.gcd(rp.p, rp.q) == 1
        assert 2 * rp.p < rp.q
        assert rp.m * rp.p + rp.r == rp.q
        if rp.p == 1:
            assert rp.r == 0 and rp.m == rp.q
        else:
            assert 1 <= rp.r <= rp.p - 1
    assert count > 5000  # the scan actually enumerated something


def test_make_rotation_idempotent():
    for rp in coprime_rotations(40):
        assert make_rotation(rp.p, rp.q) == rp


@given(st.integers(1, MAX_Q), st.integers(1, MAX_Q))
@settings(max_examples=300)
def test_make_rotation_random_inputs(p_in, q_in):
    g = math.gcd(p_in, q_in)
    if 2 * (p_in // g) >= q_in // g:
        with pytest.raises(ParameterError):
            make_rotation(p_in, q_in)
    else:
        rp = make_rotation(p_in, q_in)
        assert rp.p * q_in == rp.q * p_in  # same fraction
        assert math.gcd(rp.p, rp.q) == 1
        assert rp.m * rp.p + rp.r == rp.q
        assert 0 <= rp.r < rp.p or (rp.p == 1 and rp.r == 0)
