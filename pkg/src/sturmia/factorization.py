"""Reversed-standard-word products and the factorization trichotomy.

A digit window (b_1, ..., b_N) over a slope names the ascending product of
reversed standard words reversal(s_i)^{b_{i+1}}.  For non-integer windows
the product grows without bound and its prefix of any certified length is
well defined.  The shift of the characteristic word by a window equals the
product named by the complement window; characteristic words themselves
carry one explicit product pair per leading-quotient case.  Whether a word
admits zero, one, or two such products is decided entirely by the class of
its window.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import DepthError, RangeError, UnsupportedInterceptError
from .intercept import (
    AlphaNumber,
    ClassReport,
    classify,
    complement,
    sigma0,
    sigma1,
    sturmian_prefix,
)
from .ostrowski import encode
from .slope import Slope, continuants, interval_locate
from .words import characteristic_prefix, factor_set, standard_word


def _blocks(slope: Slope, pairs: Iterable[tuple[int, int]]) -> Callable[[int], str]:
    """Join reversal(s_level)^count blocks until a requested length."""

    def materialize(length: int) -> str:
        parts: list[str] = []
        built = 0
        for level, count in pairs:
            if count < 0:
                raise RangeError(f"negative exponent at level {level}")
            if count == 0:
                continue
            block = standard_word(slope, level)[::-1] * count
            parts.append(block)
            built += len(block)
            if built >= length:
                break
        if built < length:
            raise DepthError(f"product materializes {built} letters, need {length}")
        return "".join(parts)[:length]

    return materialize


def product_prefix(rho: AlphaNumber, length: int) -> str:
    """First letters of the ascending reversed-standard-word product.

    Rejects natural-integer windows: their product is a finite word, not a
    prefix of an infinite one.
    """
    if length < 0:
        raise RangeError(f"length must be >= 0, got {length}")
    report = classify(rho)
    if report.verdict == "natural-integer":
        raise UnsupportedInterceptError(
            "digit window is a natural integer: the product stays finite"
        )
    total = rho.psi(rho.depth)
    if total < length:
        raise DepthError(
            f"window materializes only {total} product letters, need {length}"
        )
    pairs = ((i, rho.digits[i]) for i in range(rho.depth))
    return _blocks(rho.slope, pairs)(length)


def integer_product(k: int, slope: Slope) -> str:
    """The finite product named by the digits of a non-negative integer."""
    if k < 0:
        raise RangeError(f"expected a non-negative integer, got {k}")
    if k == 0:
        return ""
    depth = 1
    while continuants(slope, depth).q(depth) <= k:
        depth += 1
    digits = encode(k, slope, depth).digits
    word = "".join(standard_word(slope, i)[::-1] * b for i, b in enumerate(digits))
    assert len(word) == k
    return word


@dataclass(frozen=True)
class SplitReport:
    ok: bool
    level: int
    left: str
    right: str
    expected: str


def central_split_check(m: int, p: int, slope: Slope) -> SplitReport:
    """Check the two-sided split of a doubly clipped standard word.

    For m + p = q_{N+1} - 2 the first q_{N+1} - 2 letters of the level-(N+1)
    standard word must equal the length-m characteristic prefix followed by
    the integer product of p.
    """
    if m < 0 or p < 0:
        raise RangeError("both split sizes must be >= 0")
    total = m + p
    level = 0
    while True:
        table = continuants(slope, level)
        if table.q(level) - 2 == total:
            break
        if table.q(level) - 2 > total:
            raise RangeError(f"m+p = {total} is not q_N - 2 for any subscript N")
        level += 1
    expected = standard_word(slope, level)[:-2]
    left = characteristic_prefix(slope, m)
    right = integer_product(p, slope)
    return SplitReport(
        ok=expected == left + right,
        level=level,
        left=left,
        right=right,
        expected=expected,
    )


@dataclass(frozen=True)
class DualityReport:
    ok: bool
    prefix_ok: bool
    orbit_ok: bool
    checked_length: int
    window: int


def duality_check(rho: AlphaNumber, length: int) -> DualityReport:
    """Shift-by-rho equals the product named by the complement window.

    Also glues the reversed complement side against the direct side and
    checks every window of the seam stays inside the slope's language: the
    finite-scale form of the two-sided orbit statement.
    """
    comp = complement(rho)
    lhs = sturmian_prefix(rho, length)
    rhs = product_prefix(comp, length)
    prefix_ok = lhs == rhs

    window = min(16, max(4, length // 8))
    seam_len = min(length, 40)
    seam = sturmian_prefix(comp, seam_len)[::-1] + lhs[:seam_len]
    pos = interval_locate(window, rho.slope)
    table = continuants(rho.slope, pos.n + 1)
    reference = characteristic_prefix(
        rho.slope, window + table.q(pos.n + 1) + table.q(pos.n) + 2
    )
    language = factor_set(reference, window)
    orbit_ok = all(
        seam[j : j + window] in language for j in range(len(seam) - window + 1)
    )
    return DualityReport(
        ok=prefix_ok and orbit_ok,
        prefix_ok=prefix_ok,
        orbit_ok=orbit_ok,
        checked_length=length,
        window=window,
    )


@dataclass(frozen=True)
class CharacteristicFactorizations:
    case: str
    first: str
    second: str
    ok: bool


def characteristic_factorizations(slope: Slope, length: int) -> CharacteristicFactorizations:
    """Materialize and verify the product pair for the characteristic word.

    The applicable pair depends only on whether the first two quotients
    exceed 1; each product is compared letter-by-letter to the prefix.
    """

    def odd_levels(start: int):
        i = start
        while True:
            yield 2 * i + 1, slope.quotient(2 * i + 2)
            i += 1

    def even_levels(start: int):
        i = start
        while True:
            yield 2 * i, slope.quotient(2 * i + 1)
            i += 1

    def chain(head, tail):
        yield from head
        yield from tail

    a1 = slope.quotient(1)
    a2 = slope.quotient(2)
    # the two digit windows are one less than the two one-letter extensions
    # of the characteristic word; the odd-level window reads the same in
    # every case, the even-level one needs a level-1/level-2 head when the
    # first quotient is 1
    second = chain([(0, a1 - 1), (1, a2 - 1)], odd_levels(1))
    if a1 >= 2:
        case = "a1>=2"
        first = chain([(0, a1 - 2)], even_levels(1))
    else:
        case = "a1=1,a2>=2" if a2 >= 2 else "a1=1,a2=1"
        first = chain([(1, a2), (2, slope.quotient(3) - 1)], even_levels(2))

    target = characteristic_prefix(slope, length)
    first_word = _blocks(slope, first)(length)
    second_word = _blocks(slope, second)(length)
    return CharacteristicFactorizations(
        case=case,
        first=first_word,
        second=second_word,
        ok=first_word == target == second_word,
    )


@dataclass(frozen=True)
class FactorizationVerdict:
    kind: str
    reason: str
    classified: ClassReport


def classify_factorization(rho: AlphaNumber, min_tail: int | None = None) -> FactorizationVerdict:
    """How many product factorizations the shifted word admits.

    Defers entirely to the window's class: non-zero class means exactly one
    product, integers mean the word is a suffix of the characteristic word
    with exactly two, other zero-class windows trail a one-letter extension
    of the characteristic word and admit none.  The two exact one-letter
    extensions themselves sit outside the trichotomy and are reported as
    boundary words.
    """
    report = classify(rho, min_tail)
    if report.verdict == "non-zero":
        return FactorizationVerdict(
            "unique-product", "no common suffix with the characteristic word", report
        )
    if report.verdict == "natural-integer":
        return FactorizationVerdict(
            "two-products", "the word is a suffix of the characteristic word", report
        )
    exact = (
        sigma0(rho.slope, rho.depth)
        if report.verdict == "sigma0-tail"
        else sigma1(rho.slope, rho.depth)
    )
    if rho.digits == exact.digits:
        return FactorizationVerdict(
            "boundary", "one-letter extension of the characteristic word", report
        )
    return FactorizationVerdict(
        "no-product",
        "the word ends in a one-letter extension of the characteristic word",
        report,
    )
