"""Recoding unit tests: worked examples, invariants, and the minimality oracle."""

import pytest

from blmacfir import (
    build_ntrits_table,
    pulse_count,
    pulse_stats,
    recode,
    recode_twos_complement,
)
from conftest import min_pulses


def test_recode_worked_examples():
    # 27 = +32 - 4 - 1
    assert recode(27).digits == (-1, 0, -1, 0, 0, 1)
    assert recode(27).pulses == 3
    # 7 = +8 - 1
    assert recode(7).digits == (-1, 0, 0, 1)
    assert recode(7).pulses == 2
    assert recode(0).digits == ()
    assert recode(0).pulses == 0
    assert pulse_count(118) == 3
    assert pulse_count(27) == 3
    assert pulse_count(1) == 1
    # 15 = 16 - 1, two pulses instead of four ones
    assert pulse_count(15) == 2


def test_recode_rejects_out_of_range():
    recode(2**24 - 1)
    with pytest.raises(ValueError):
        recode(2**24)
    with pytest.raises(ValueError):
        pulse_count(-(2**24))


def test_roundtrip_nonadjacent_and_sign_symmetry_exhaustive():
    for v in range(-(1 << 15), 1 << 15):
        tv = recode(v)
        assert tv.value == v
        digits = tv.digits
        assert all(not (digits[i] and digits[i + 1]) for i in range(len(digits) - 1))
        if v >= 0:
            neg = recode(-v)
            assert neg.digits == tuple(-d for d in digits)
            assert pulse_count(v) == pulse_count(-v) == tv.pulses


def test_minimality_against_dp_oracle():
    for v in range(1 << 12):
        assert pulse_count(v) == min_pulses(v), v


def test_ntrits_table_matches_pulse_count_exhaustively():
    table = build_ntrits_table(16)
    assert len(table) == 1 << 15
    assert table[118] == 3
    assert table[0] == 0
    assert table[27] == 3
    assert all(int(table[k]) == pulse_count(k) for k in range(1 << 15))


def test_ntrits_table_range_check():
    assert len(build_ntrits_table(1)) == 1
    with pytest.raises(ValueError):
        build_ntrits_table(18)
    with pytest.raises(ValueError):
        build_ntrits_table(0)


@pytest.mark.parametrize(
    "n_bits,avg,maximum",
    [(1, 0.50, 1), (7, 2.77, 4), (16, 5.77, 9)],
)
def test_pulse_stats_reference_points(n_bits, avg, maximum):
    stats = pulse_stats(n_bits)
    assert stats.max == maximum
    assert abs(stats.avg - avg) < 0.01


def test_pulse_stats_small_cases_exact():
    assert pulse_stats(1).avg == 0.5  # {0, 1}
    assert pulse_stats(2).avg == 1.0  # 0,1,1,2 over {0,1,2,3}
    assert pulse_stats(3).avg == 11 / 8


def test_pulse_stats_max_formula():
    for n in range(1, 17):
        assert pulse_stats(n).max == -(-(n + 1) // 2)


def test_pulse_stats_avg_below_max():
    for n in range(1, 17):
        stats = pulse_stats(n)
        assert stats.avg <= stats.max


def test_twos_complement_examples():
    rows = recode_twos_complement(-1, 4)
    assert rows.bits == (1, 1, 1, 1)
    assert rows.sign_layer == 3
    assert rows.value == -1
    assert recode_twos_complement(5, 4).bits == (1, 0, 1, 0)
    assert recode_twos_complement(5, 4).value == 5
    assert recode_twos_complement(-5, 4).bits == (1, 1, 0, 1)
    assert recode_twos_complement(-5, 4).value == -5


def test_twos_complement_roundtrip_and_range():
    for v in range(-128, 128):
        assert recode_twos_complement(v, 8).value == v
    with pytest.raises(ValueError):
        recode_twos_complement(128, 8)
    with pytest.raises(ValueError):
        recode_twos_complement(-129, 8)
