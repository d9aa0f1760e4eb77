import random

import pytest

from weylkit.phases import HALF, Phase, ZERO, as_phase


def test_canonical_form():
    assert Phase(3, 6) == Phase(1, 2)
    assert Phase(-1, 4) == Phase(3, 4)
    assert Phase(7, 1) == ZERO
    assert Phase(10, 4) == HALF
    p = Phase(2, 8)
    assert (p.num, p.den) == (1, 4)


def test_group_laws_randomized():
    rng = random.Random(20240817)
    for _ in range(500):
        a = Phase(rng.randrange(-50, 50), rng.randrange(1, 40))
        b = Phase(rng.randrange(-50, 50), rng.randrange(1, 40))
        c = Phase(rng.randrange(-50, 50), rng.randrange(1, 40))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a + (-a) == ZERO
        assert a - b == a + (-b)
        # results stay canonical
        s = a + b
        from math import gcd
        assert 0 <= s.num < s.den and gcd(s.num, s.den) == 1


def test_integer_scaling():
    p = Phase(1, 6)
    assert 6 * p == ZERO
    assert 3 * p == HALF
    assert -1 * p == Phase(5, 6)
    with pytest.raises(TypeError):
        p * p  # noqa: B018


def test_parse_and_format():
    assert Phase.parse("3/4") == Phase(3, 4)
    assert Phase.parse("-1/3") == Phase(2, 3)
    assert Phase.parse("5") == ZERO
    assert str(Phase(2, 3)) == "2/3"
    assert as_phase("1/2") == HALF
    assert as_phase((1, 2)) == HALF
    assert as_phase(7) == ZERO


def test_numerator_at():
    assert Phase(1, 3).numerator_at(12) == 4
    with pytest.raises(ValueError):
        Phase(1, 3).numerator_at(8)


def test_complex_value():
    assert abs(HALF.complex() + 1) < 1e-15
    assert abs(Phase(1, 4).complex() - 1j) < 1e-15
