"""Tests for formal intercepts: projections, extraction, shifts, complement."""

import pytest
from hypothesis import given, settings, strategies as st

from sturmia.errors import (
    DepthError,
    NoSupportError,
    NotSturmianError,
    PrefixTooShortError,
    UnsupportedInterceptError,
)
from sturmia.intercept import (
    AlphaNumber,
    add_integer,
    agreement_length,
    classify,
    complement,
    complement_report,
    equivalent,
    from_integer,
    intercept_from_prefix,
    max_certified_length,
    next_support,
    sigma0,
    sigma1,
    sturmian_prefix,
    zero,
)
from sturmia.ostrowski import encode
from sturmia.slope import Slope, continuants, parse_slope
from sturmia.words import characteristic_prefix, factor_set

GOLDEN = parse_slope("[0;1*]")
TWO_ONE = parse_slope("[0;2,(1)*]")
MIXED = parse_slope("[0;2,1,3,(2,1)*]")

SLOPES = [GOLDEN, TWO_ONE, MIXED]


def slope_strategy():
    return st.lists(st.integers(1, 4), min_size=1, max_size=3).map(
        lambda qs: Slope(tuple(qs), (0, len(qs)))
    )


def digits_for(slope: Slope, depth: int, draw_int) -> tuple[int, ...]:
    """Random valid digit string built low-to-high under the adjacency rule."""
    out = []
    prev = 0
    for i in range(1, depth + 1):
        hi = slope.quotient(i) - 1 if i == 1 else slope.quotient(i)
        b = draw_int(0, hi)
        if b == slope.quotient(i) and i >= 2 and prev != 0:
            b -= 1
        out.append(b)
        prev = b
    return tuple(out)


@st.composite
def alpha_numbers(draw, min_depth=6, max_depth=10):
    slope = draw(slope_strategy())
    depth = draw(st.integers(min_depth, max_depth))
    digits = digits_for(slope, depth, lambda lo, hi: draw(st.integers(lo, hi)))
    return AlphaNumber(digits, slope)


# ---------------------------------------------------------------- projections


def test_psi_sigma0_golden():
    rho = sigma0(GOLDEN, 8)
    table = continuants(GOLDEN, 8)
    assert rho.psi(4) == 4
    for n in range(1, 9):
        assert rho.psi(n) == table.q(2 * (n // 2)) - 1


def test_psi_sigma1_pattern():
    # largest odd level <= n governs the residue
    for slope in SLOPES:
        rho = sigma1(slope, 9)
        table = continuants(slope, 9)
        for n in range(1, 10):
            odd = n if n % 2 == 1 else n - 1
            assert rho.psi(n) == table.q(odd) - 1


def test_psi_zero_and_partial_sum():
    assert all(zero(GOLDEN, 8).psi(n) == 0 for n in range(9))
    rho = AlphaNumber((0, 1, 0, 1), GOLDEN)
    assert rho.psi(3) == 1
    assert rho.psi(4) == 4


def test_psi_depth_guard():
    with pytest.raises(DepthError):
        zero(GOLDEN, 4).psi(5)


@given(alpha_numbers())
@settings(max_examples=60, deadline=None)
def test_projective_compatibility(rho):
    table = continuants(rho.slope, rho.depth)
    for n in range(rho.depth):
        assert 0 <= rho.psi(n + 1) < table.q(n + 1)
        assert rho.psi(n + 1) % table.q(n) == rho.psi(n) % table.q(n)


# ------------------------------------------------------------------- support


def test_next_support_examples():
    rho = AlphaNumber((0, 1, 0, 1), GOLDEN)
    assert next_support(rho, 2) == 3
    assert next_support(rho, 0) == 1
    assert next_support(sigma0(GOLDEN, 8), 2) == 3
    with pytest.raises(NoSupportError):
        next_support(zero(GOLDEN, 6), 0)
    with pytest.raises(NoSupportError):
        next_support(rho, 4)


@given(alpha_numbers())
@settings(max_examples=60, deadline=None)
def test_support_inequalities(rho):
    # membership <-> residue at least q_n; successor digit below its maximum
    table = continuants(rho.slope, rho.depth)
    for n in range(rho.depth):
        assert (n in rho.support()) == (rho.psi(n + 1) >= table.q(n))
    for n in sorted(rho.support()):
        if n + 2 <= rho.depth:
            assert rho.digit(n + 2) != rho.slope.quotient(n + 2)


# ---------------------------------------------------------------- extraction


def test_extract_characteristic_is_zero():
    for slope in SLOPES:
        table = continuants(slope, 8)
        prefix = characteristic_prefix(slope, table.q(8) + table.q(7))
        rho = intercept_from_prefix(prefix, slope, 7)
        assert rho.digits == (0,) * 7


def test_extract_integer_shift_matches_encode():
    for slope in SLOPES:
        table = continuants(slope, 7)
        need = table.q(7) + table.q(6)
        for k in (1, 3, 7):
            word = characteristic_prefix(slope, k + need)[k:]
            rho = intercept_from_prefix(word, slope, 6)
            assert rho.digits == encode(k, slope, 6).digits


def test_extract_prepended_letter_gives_sigmas():
    for slope in SLOPES:
        table = continuants(slope, 7)
        need = table.q(7) + table.q(6)
        body = characteristic_prefix(slope, need)
        assert intercept_from_prefix("0" + body, slope, 6).digits == sigma0(slope, 6).digits
        assert intercept_from_prefix("1" + body, slope, 6).digits == sigma1(slope, 6).digits


def test_extract_brute_force_minimal_shift_oracle():
    # independent oracle: scan shifts k < q_n directly instead of str.find
    slope = MIXED
    depth = 5
    table = continuants(slope, depth + 1)
    shift = 9
    word = characteristic_prefix(slope, shift + table.q(6) + table.q(5))[shift:]
    reference = characteristic_prefix(slope, 3 * table.q(depth))
    residues = []
    for n in range(1, depth + 1):
        window = word[: table.q(n) - 1]
        k = min(
            j
            for j in range(table.q(n))
            if reference[j : j + table.q(n) - 1] == window
        )
        residues.append(k)
    rho = intercept_from_prefix(word, slope, depth)
    assert [rho.psi(n) for n in range(1, depth + 1)] == residues


def test_extract_rejects_short_and_foreign_prefixes():
    table = continuants(GOLDEN, 7)
    need = table.q(7) + table.q(6)
    with pytest.raises(PrefixTooShortError):
        intercept_from_prefix("10" * 5, GOLDEN, 6)
    with pytest.raises(NotSturmianError):
        intercept_from_prefix("111" + "0" * need, GOLDEN, 6)
    with pytest.raises(NotSturmianError):
        intercept_from_prefix("2" * (need + 1), GOLDEN, 6)


# ------------------------------------------------------------------ prefixes


def test_sturmian_prefix_examples():
    assert sturmian_prefix(zero(GOLDEN, 8), 4) == "1011"
    assert sturmian_prefix(from_integer(2, GOLDEN, 8), 3) == "110"
    assert sturmian_prefix(sigma0(GOLDEN, 8), 5) == "01011"
    assert sturmian_prefix(sigma1(GOLDEN, 8), 5) == "11011"


def test_sturmian_prefix_depth_guard():
    rho = zero(GOLDEN, 4)
    assert max_certified_length(rho) == 4
    assert sturmian_prefix(rho, 4) == "1011"
    with pytest.raises(DepthError):
        sturmian_prefix(rho, 5)


@given(alpha_numbers(min_depth=7, max_depth=9))
@settings(max_examples=40, deadline=None)
def test_extraction_inverts_prefix_generation(rho):
    # depth loss of 3 keeps q_{d+1}+q_d within the certified q_depth-1 letters
    table = continuants(rho.slope, rho.depth)
    out_depth = rho.depth - 3
    need = table.q(out_depth + 1) + table.q(out_depth)
    back = intercept_from_prefix(sturmian_prefix(rho, need), rho.slope, out_depth)
    assert back.digits == rho.digits[:out_depth]


# ----------------------------------------------------------------- increment


def test_add_integer_examples():
    rho = from_integer(5, GOLDEN, 12)
    out = add_integer(rho, 3)
    assert out.digits == encode(8, GOLDEN, out.depth).digits
    assert add_integer(rho, 0) is rho
    bumped = add_integer(sigma0(GOLDEN, 12), 1)
    assert bumped.digits == (0,) * bumped.depth


def test_add_integer_digit_shortcut_on_tail_levels():
    # residues shift by k from the first level whose whole tail has room
    for slope in SLOPES:
        digits = [0] * 10
        for i in (2, 5, 8):
            digits[i] = 1
        rho = AlphaNumber(tuple(digits), slope)
        for k in (1, 2, 5):
            out = add_integer(rho, k)
            table = continuants(slope, rho.depth)
            start = out.depth + 1
            for n in range(out.depth, 0, -1):
                if table.q(n) <= rho.psi(n) + k:
                    break
                start = n
            assert start <= out.depth, "window too small to exercise the shortcut"
            for n in range(start, out.depth + 1):
                assert out.psi(n) == rho.psi(n) + k


# ---------------------------------------------------------------- agreement


def test_agreement_length_semantic():
    # shifted words agree on lambda_n letters, exactly when the digit is non-zero
    slope = TWO_ONE
    rho = AlphaNumber((1, 0, 1, 0, 0, 1, 0, 0), slope)
    table = continuants(slope, 8)
    horizon = 2 * table.q(8)
    ref = characteristic_prefix(slope, 2 * horizon)
    for n in range(1, 7):
        lam = agreement_length(rho, n)
        a = ref[rho.psi(n) : rho.psi(n) + horizon]
        b = ref[rho.psi(n + 1) : rho.psi(n + 1) + horizon]
        common = next((i for i in range(horizon) if a[i] != b[i]), horizon)
        if rho.digit(n + 1) != 0:
            assert common == lam
        else:
            assert common >= lam


# ------------------------------------------------------------------ classify


def test_classify_natural_integer():
    rho = from_integer(7, GOLDEN, 12)
    report = classify(rho)
    assert report.verdict == "natural-integer"
    assert report.witness == 6


def test_classify_sigma_patterns():
    assert classify(sigma0(GOLDEN, 12)).verdict == "sigma0-tail"
    assert classify(sigma1(GOLDEN, 12)).verdict == "sigma1-tail"
    assert classify(sigma0(MIXED, 12)).verdict == "sigma0-tail"
    assert classify(sigma1(MIXED, 12)).verdict == "sigma1-tail"


def test_classify_non_zero_pattern():
    rho = AlphaNumber((0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0), GOLDEN)
    assert classify(rho).verdict == "non-zero"
    assert classify(rho).witness is None


# ---------------------------------------------------------------- equivalence


def test_equivalent_reflexive_with_witness_zero():
    rho = AlphaNumber((0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0), GOLDEN)
    report = equivalent(rho, rho)
    assert report.equivalent and report.witness == 0


def test_equivalent_after_increment():
    rho = AlphaNumber((0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0), GOLDEN)
    report = equivalent(rho, add_integer(rho, 5))
    assert report.equivalent


def test_equivalent_zero_class_transitivity():
    # both sigma words shift onto the characteristic word, so their
    # intercepts sit in the zero class and are equivalent to each other
    report = equivalent(sigma0(GOLDEN, 12), sigma1(GOLDEN, 12))
    assert report.equivalent
    assert "zero class" in report.reason


def test_not_equivalent_across_classes():
    rho = AlphaNumber((0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0), GOLDEN)
    assert not equivalent(rho, sigma0(GOLDEN, 12)).equivalent
    assert not equivalent(rho, zero(GOLDEN, 12)).equivalent


def test_not_equivalent_distinct_tails():
    a = AlphaNumber((0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0), GOLDEN)
    b = AlphaNumber((0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1), GOLDEN)
    assert not equivalent(a, b).equivalent


# ---------------------------------------------------------------- complement


def fib_family(j: int, depth: int, step: int = 4) -> AlphaNumber:
    digits = [0] * depth
    for i in range(step + j, depth, step):
        digits[i] = 1
    return AlphaNumber(tuple(digits), GOLDEN)


def test_complement_fibonacci_step4_family():
    # complement of the step-4 index-0 family lands on the index-2 family
    # shifted by one; support moves from {4,8,12} to {1,6,10}
    report = complement_report(fib_family(0, 16))
    assert report.value.support() == frozenset({1, 6, 10})
    assert report.stable_from == 0
    assert report.top_level == 12


def test_complement_step4_index1():
    report = complement_report(fib_family(1, 16))
    assert report.value.support() == frozenset({3, 7, 11})


def test_complement_self_complementary_step3():
    rho = fib_family(0, 16, step=3)
    out = complement(rho)
    assert out.support() == frozenset({3, 6, 9, 12})
    assert equivalent(rho, out).equivalent


def test_complement_involution_on_tail():
    rho = fib_family(0, 20)
    back = complement(complement(rho))
    overlap = back.depth
    assert back.digits[2:overlap] == rho.digits[2:overlap]
    assert equivalent(rho, back).equivalent


def test_complement_orbit_seam_is_sturmian():
    # glue the reversed complement word against the original word and check
    # every window across the seam is a legal factor of the slope
    for rho in (fib_family(0, 16), fib_family(2, 16), fib_family(1, 16, step=3)):
        rbar = complement(rho)
        left = sturmian_prefix(rbar, 60)[::-1]
        right = sturmian_prefix(rho, 60)
        seam = left + right
        legal = factor_set(characteristic_prefix(GOLDEN, 500), 24)
        for i in range(40, 60):
            assert seam[i : i + 24] in legal


def test_complement_shift_rule():
    # complement(rho + k) + k recovers complement(rho) on the shared window
    rho = fib_family(0, 20)
    base = complement(rho)
    for k in (1, 2, 3):
        other = add_integer(complement(add_integer(rho, k)), k)
        overlap = min(base.depth, other.depth)
        assert base.digits[4:overlap] == other.digits[4:overlap]


def test_complement_exclusions():
    with pytest.raises(UnsupportedInterceptError):
        complement(zero(GOLDEN, 12))
    with pytest.raises(UnsupportedInterceptError):
        complement(from_integer(5, GOLDEN, 12))
    with pytest.raises(UnsupportedInterceptError):
        complement(sigma0(GOLDEN, 12))
    with pytest.raises(UnsupportedInterceptError):
        complement(sigma1(GOLDEN, 12))


def test_complement_mixed_slope_duality():
    # non-golden slope: the complement's word must prolong the original's
    # reversed word to a sturmian seam as well
    slope = MIXED
    digits = [0] * 14
    for i in (3, 7, 11):
        digits[i] = 1
    rho = AlphaNumber(tuple(digits), slope)
    rbar = complement(rho)
    left = sturmian_prefix(rbar, 50)[::-1]
    right = sturmian_prefix(rho, 50)
    seam = left + right
    legal = factor_set(characteristic_prefix(slope, 900), 20)
    for i in range(30, 50):
        assert seam[i : i + 20] in legal
