from fractions import Fraction

import pytest

import uturn


FROZEN = uturn.ParamPoint("2", "3", "1", "1/2", ["1/5"])
GENERIC = uturn.ParamPoint("2", "3/5", "4/3", "5/2", ["3/7", "5/7"])


def test_pf_frozen_value():
    f = uturn.pf(1, 1, "", [-1], FROZEN)
    assert uturn.fraction(f) == Fraction(-28, 3)
    assert uturn.state_count(1, 1, "", [-1], FROZEN) == 1


def test_pf_modes_agree():
    a = uturn.pf(2, 2, "-2,1", [2, -1], GENERIC, mode="dfs")
    b = uturn.pf(2, 2, "-2,1", [2, -1], GENERIC, mode="memoized")
    assert uturn.fraction(a) == uturn.fraction(b)


def test_closed_form_matches_pf():
    f = uturn.pf(2, 2, "", [-2, -1], GENERIC)
    g = uturn.closed_form(2, 2, [-2, -1], GENERIC)
    assert uturn.fraction(f) == uturn.fraction(g)


def test_total_mass_is_one():
    masses = uturn.total_mass(2, 2, "", GENERIC)
    label, total = masses[0]
    assert label == "total"
    assert uturn.fraction(total) == 1
    assert len(masses) > 1


def test_sampler_is_deterministic():
    point = uturn.ParamPoint("2", "1/2", "1", "2", ["1/4"])
    draws = [uturn.sample(1, 2, "", point, seed) for seed in (7, 7, 8)]
    assert draws[0] == draws[1]
    assert draws[0]["rejected"] or draws[0]["mu"] is not None


def test_check_exchange_passes():
    left, right, ok = uturn.check_exchange(2, 2, "1,-2", [2, -1], GENERIC, 1)
    assert ok
    assert uturn.fraction(left) == uturn.fraction(right)


def test_pole_is_arithmetic_error():
    bad = uturn.ParamPoint("2", "3", "1", "1/2", ["1/3"])
    with pytest.raises(ArithmeticError):
        uturn.pf(1, 1, "", [-1], bad)


def test_bad_spec_is_value_error():
    with pytest.raises(ValueError):
        uturn.pf(1, 1, "", [2], FROZEN)
