"""Tests for the repetition function: scans, closed forms, exponent estimates."""

import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from sturmia.errors import DepthError, PrefixTooShortError, RangeError
from sturmia.intercept import AlphaNumber, from_integer, sturmian_prefix, zero
from sturmia.ostrowski import all_digit_strings
from sturmia.repetition import (
    dio_estimate,
    repetition_characteristic,
    repetition_closed_form,
    repetition_direct,
    repetition_jump_check,
    repetition_level,
    repetition_rows,
)
from sturmia.slope import Slope, continuants, interval_locate, parse_slope
from sturmia.words import (
    central_decomposition,
    characteristic_prefix,
    shifted_characteristic_prefix,
    standard_word,
)

GOLDEN = parse_slope("[0;1*]")
TWO_ONE = parse_slope("[0;2,(1)*]")
MIXED = parse_slope("[0;2,1,3,(2,1)*]")
SLOPES = [GOLDEN, TWO_ONE, MIXED]


def oracle_word(rho: AlphaNumber, length: int, extension: int = 4) -> str:
    """Prefix of the shifted word via the zero-extension of the digit window."""
    deep = AlphaNumber(rho.digits + (0,) * extension, rho.slope)
    return sturmian_prefix(deep, length)


# ---------------------------------------------------------------- direct scan


def test_direct_examples():
    c = characteristic_prefix(GOLDEN, 40)
    assert repetition_direct(c, 2) == 3
    assert repetition_direct(c, 4) == 5
    assert repetition_direct("000000", 1) == 1


def test_direct_guards():
    with pytest.raises(RangeError):
        repetition_direct("0101", 0)
    with pytest.raises(PrefixTooShortError):
        repetition_direct("01", 2)


def test_characteristic_examples():
    assert repetition_characteristic(GOLDEN, 2) == 3
    assert repetition_characteristic(GOLDEN, 7) == 8
    assert repetition_characteristic(TWO_ONE, 1) == 2


def test_characteristic_matches_direct():
    for slope in SLOPES:
        c = characteristic_prefix(slope, 400)
        for m in range(1, 41):
            assert repetition_direct(c, m) == repetition_characteristic(slope, m)


# ------------------------------------------------------------- 4-branch level


def test_level_examples():
    # shift 0 is branch 1; the largest shift lands in branch 4 at the last m
    assert repetition_level(0, GOLDEN, 4) == 5
    table = continuants(GOLDEN, 5)
    m = table.q(5) - 2
    assert repetition_level(table.q(5) - 1, GOLDEN, m) == table.q(4) + 1


def test_level_shift_range_guard():
    with pytest.raises(RangeError):
        repetition_level(-1, GOLDEN, 4)
    with pytest.raises(RangeError):
        repetition_level(continuants(GOLDEN, 5).q(5), GOLDEN, 4)


@pytest.mark.parametrize("slope", SLOPES)
def test_level_sweep_matches_direct(slope):
    for n in range(2, 6):
        table = continuants(slope, n + 1)
        q_n, q_n1 = table.q(n), table.q(n + 1)
        for m in range(q_n - 1, q_n1 - 1):
            if m < 1:
                continue
            for shift in range(q_n1):
                word = shifted_characteristic_prefix(slope, shift, 2 * (m + 1) + m)
                assert repetition_level(shift, slope, m) == repetition_direct(word, m)


# ----------------------------------------------------------------- 8-case law


def test_closed_form_zero_intercept_is_characteristic():
    rho = zero(GOLDEN, 10)
    top = continuants(GOLDEN, 8).q(8) - 2
    for m in range(1, top + 1):
        value, case = repetition_closed_form(rho, m)
        assert value == repetition_characteristic(GOLDEN, m)
        assert case == "2"


def test_closed_form_depth_guard():
    rho = zero(GOLDEN, 6)
    big = continuants(GOLDEN, 7).q(7) - 2
    with pytest.raises(DepthError):
        repetition_closed_form(rho, big)


@pytest.mark.parametrize(
    "slope,depth,m_top_level,expected_cases",
    [
        (GOLDEN, 7, 6, {"1", "2", "4", "8"}),
        (MIXED, 7, 5, {"1", "2", "3", "4", "5", "6", "7", "8"}),
    ],
)
def test_closed_form_exhaustive_digit_strings(slope, depth, m_top_level, expected_cases):
    """Every valid digit window against the direct oracle, every m."""
    m_top = continuants(slope, m_top_level).q(m_top_level) - 2
    seen_cases = set()
    for digits in all_digit_strings(slope, depth):
        rho = AlphaNumber(digits, slope)
        word = oracle_word(rho, 2 * m_top + 4)
        for m in range(1, m_top + 1):
            value, case = repetition_closed_form(rho, m)
            seen_cases.add(case)
            assert value == repetition_direct(word, m), (digits, m, case)
    assert seen_cases == expected_cases


def test_closed_form_seeded_random_slopes():
    rng = random.Random(20260814)
    for _ in range(60):
        qs = tuple(rng.randint(1, 4) for _ in range(6))
        slope = Slope(qs, (0, len(qs)))
        digits = []
        prev = 0
        for i in range(1, 9):
            hi = slope.quotient(i) - 1 if i == 1 else slope.quotient(i)
            b = rng.randint(0, hi)
            if i >= 2 and b == slope.quotient(i) and prev != 0:
                b -= 1
            digits.append(b)
            prev = b
        rho = AlphaNumber(tuple(digits), slope)
        m_top = min(continuants(slope, 6).q(6) - 2, 40)
        word = oracle_word(rho, 2 * m_top + 4)
        m = rng.randint(1, m_top)
        value, _ = repetition_closed_form(rho, m)
        assert value == repetition_direct(word, m), (qs, digits, m)


def test_closed_form_agrees_with_level_formula():
    """Outside case 1 the window value comes from the 4-branch formula."""
    for slope, depth in [(GOLDEN, 8), (MIXED, 7)]:
        for digits in all_digit_strings(slope, depth):
            rho = AlphaNumber(digits, slope)
            m_top = continuants(slope, depth - 2).q(depth - 2) - 2
            for m in (1, 2, m_top // 2 + 1, m_top):
                if m < 1:
                    continue
                value, case = repetition_closed_form(rho, m)
                if case == "1":
                    continue
                n = interval_locate(m, slope).n
                assert value == repetition_level(rho.psi(n + 1), slope, m)


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_rows_tile_and_respect_bounds(data):
    qs = data.draw(st.lists(st.integers(1, 4), min_size=1, max_size=3))
    slope = Slope(tuple(qs), (0, len(qs)))
    depth = data.draw(st.integers(6, 9))
    digits = []
    prev = 0
    for i in range(1, depth + 1):
        hi = slope.quotient(i) - 1 if i == 1 else slope.quotient(i)
        b = data.draw(st.integers(0, hi))
        if i >= 2 and b == slope.quotient(i) and prev != 0:
            b -= 1
        digits.append(b)
        prev = b
    rho = AlphaNumber(tuple(digits), slope)
    for n in range(depth - 2):
        table = continuants(slope, n + 1)
        if table.q(n) - 1 > table.q(n + 1) - 2:
            continue
        rows = repetition_rows(rho, n)
        assert rows[0].m_lo == table.q(n) - 1
        assert rows[-1].m_hi == table.q(n + 1) - 2
        for left, right in zip(rows, rows[1:]):
            assert right.m_lo == left.m_hi + 1
            assert right.value >= left.value
        for row in rows:
            assert 1 <= row.value <= row.m_lo + 1


# ------------------------------------------------------------------- jump law


def test_jump_law_holds():
    c = characteristic_prefix(GOLDEN, 150)
    report = repetition_jump_check(c, 2, 30)
    assert report.holds and report.failures == ()
    shifted = shifted_characteristic_prefix(MIXED, 5, 150)
    assert repetition_jump_check(shifted, 2, 20).holds


def test_jump_targets_are_m_plus_one():
    c = characteristic_prefix(TWO_ONE, 150)
    values = {m: repetition_direct(c, m) for m in range(1, 31)}
    jumps = [m for m in range(2, 31) if values[m] != values[m - 1]]
    assert jumps
    for m in jumps:
        assert values[m] == m + 1


def test_repeated_window_is_the_prefix():
    # for characteristic words the window that repeats first is L_m itself
    for slope in SLOPES:
        c = characteristic_prefix(slope, 200)
        for m in range(1, 31):
            k = repetition_direct(c, m)
            assert c[k : k + m] == c[:m]


def test_central_word_repetition():
    hits = 0
    for slope in SLOPES:
        for n in range(3, 9):
            word = standard_word(slope, n)[:-2]
            if len(word) < 2 or set(word) <= {word[0]}:
                continue
            p, q = central_decomposition(word)
            if len(p) > len(q):
                continue
            try:
                assert repetition_direct(word, len(p) + 1) == len(p) + 2
                hits += 1
            except PrefixTooShortError:
                pass
    assert hits >= 5


# ------------------------------------------------------------------ exponents


def test_dio_golden_approaches_one_plus_phi():
    phi = (1 + math.sqrt(5)) / 2
    est = dio_estimate(zero(GOLDEN, 25))
    assert est.mode == "generic"
    assert abs(float(est.value) - (1 + phi)) < 1e-3
    assert est.witness.level >= 20


def test_dio_sparse_support_stays_close():
    phi = (1 + math.sqrt(5)) / 2
    est = dio_estimate(from_integer(1, GOLDEN, 25))
    assert abs(float(est.value) - (1 + phi)) < 1e-2


def test_dio_four_family_cross_check():
    slope = parse_slope("[0;4*]")
    rho = AlphaNumber((2,) * 14, slope)
    est = dio_estimate(rho)
    assert est.mode == "four-family"
    assert est.witness.family in (0, 1, 2, 3)
    generic = 1 + max(
        row.m_hi / row.value
        for n in range(1, rho.depth - 1)
        for row in repetition_rows(rho, n)
    )
    assert abs(float(est.value) - generic) < 0.02


def test_dio_depth_guards():
    with pytest.raises(DepthError):
        dio_estimate(zero(GOLDEN, 4))
    with pytest.raises(DepthError):
        dio_estimate(zero(GOLDEN, 10), depth=12)
