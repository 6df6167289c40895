"""Formal intercepts of sturmian words, truncated at a finite depth.

An intercept is known through the tower of residues rho_n in [0, q_n), one
per level, linked by digit truncation; equivalently through its digit string
(b_1, ..., b_depth) with rho_n = sum_{i<n} b_{i+1} q_i.  Digits obey the same
conditions as Ostrowski digits of integers, but the string is a window into a
possibly infinite expansion, so every "eventual" notion below is reported
relative to the window together with a witness level.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DepthError,
    InvalidDigitsError,
    NoSupportError,
    NotSturmianError,
    PrefixTooShortError,
    RangeError,
    UnsupportedInterceptError,
)
from .ostrowski import encode, validate
from .slope import Slope, continuants
from .words import characteristic_prefix


@dataclass(frozen=True)
class AlphaNumber:
    """A depth-truncated formal intercept over a slope, little-endian digits."""

    digits: tuple[int, ...]
    slope: Slope

    def __post_init__(self) -> None:
        report = validate(self.digits, self.slope)
        if not report.ok:
            raise InvalidDigitsError(f"bad intercept digits: {report.message}")

    @property
    def depth(self) -> int:
        return len(self.digits)

    def digit(self, i: int) -> int:
        """The digit b_i, indexed from 1; indices <= 0 read as 0."""
        if i <= 0:
            return 0
        if i > self.depth:
            raise DepthError(f"digit b_{i} beyond window depth {self.depth}")
        return self.digits[i - 1]

    def psi(self, n: int) -> int:
        """Level-n residue rho_n = sum_{i<n} b_{i+1} q_i; levels <= 0 give 0."""
        if n <= 0:
            return 0
        if n > self.depth:
            raise DepthError(f"residue at level {n} needs depth {n}, window has {self.depth}")
        table = continuants(self.slope, n)
        return sum(b * table.q(i) for i, b in enumerate(self.digits[:n]))

    def support(self) -> frozenset[int]:
        """Indices i < depth whose coefficient of q_i is non-zero."""
        return frozenset(i for i, b in enumerate(self.digits) if b != 0)

    def truncate(self, depth: int) -> "AlphaNumber":
        if depth > self.depth:
            raise DepthError("cannot extend a window by truncation")
        return AlphaNumber(self.digits[:depth], self.slope)


def zero(slope: Slope, depth: int) -> AlphaNumber:
    return AlphaNumber((0,) * depth, slope)


def from_integer(k: int, slope: Slope, depth: int) -> AlphaNumber:
    """The intercept of the k-fold shifted characteristic word."""
    return AlphaNumber(encode(k, slope, depth).digits, slope)


def sigma0(slope: Slope, depth: int) -> AlphaNumber:
    """Intercept of the characteristic word prefixed by 0: digits a_{2i+2} at odd indices."""
    digits = [0] * depth
    for i in range(1, depth, 2):
        digits[i] = slope.quotient(i + 1)
    return AlphaNumber(tuple(digits), slope)


def sigma1(slope: Slope, depth: int) -> AlphaNumber:
    """Intercept of the characteristic word prefixed by 1: a_1 - 1 then a_{2i+1} at even indices."""
    digits = [0] * depth
    if depth > 0:
        digits[0] = slope.quotient(1) - 1
    for i in range(2, depth, 2):
        digits[i] = slope.quotient(i + 1)
    return AlphaNumber(tuple(digits), slope)


def psi(rho: AlphaNumber, n: int) -> int:
    return rho.psi(n)


def next_support(rho: AlphaNumber, n: int) -> int:
    """Smallest support index >= n within the window."""
    candidates = [i for i in rho.support() if i >= n]
    if not candidates:
        raise NoSupportError(f"no non-zero digit at level >= {n} within depth {rho.depth}")
    return min(candidates)


def intercept_from_prefix(prefix: str, slope: Slope, depth: int) -> AlphaNumber:
    """Recover the intercept digits of a sturmian word from a finite prefix.

    rho_n is the least shift k with the characteristic word matching the
    prefix on its first q_n - 1 letters.  The prefix must supply at least
    q_{depth+1} + q_depth letters (2 q_depth when a_{depth+1} is out of
    reach), enough to pin every level and cross-check one level beyond.
    Raises NotSturmianError when no shift below q_n matches or when the
    residue tower is incompatible.
    """
    deep = continuants(slope, depth + 1)
    need = deep.q(depth + 1) + deep.q(depth)
    if len(prefix) < need:
        raise PrefixTooShortError(
            f"need {need} letters to certify depth {depth}, got {len(prefix)}"
        )
    if set(prefix) - {"0", "1"}:
        raise NotSturmianError("prefix must be over the alphabet {0, 1}")
    check_levels = depth + 1
    try:
        reference = characteristic_prefix(slope, 2 * deep.q(check_levels))
    except DepthError:
        # slope window too short to audit the extra level; verify to depth only
        check_levels = depth
        reference = characteristic_prefix(slope, 2 * deep.q(check_levels))
    residues = [0]
    for n in range(1, check_levels + 1):
        window = prefix[: deep.q(n) - 1]
        k = reference.find(window)
        if k < 0 or k >= deep.q(n):
            raise NotSturmianError(
                f"prefix of length {deep.q(n) - 1} does not occur as an early factor"
            )
        residues.append(k)
    digits = []
    for n in range(check_levels):
        gap = residues[n + 1] - residues[n]
        q_n = deep.q(n)
        if gap < 0 or gap % q_n:
            raise NotSturmianError(f"incompatible residues between levels {n} and {n + 1}")
        digits.append(gap // q_n)
    report = validate(tuple(digits), slope)
    if not report.ok:
        raise NotSturmianError(f"extracted digits violate {report.rule} at b_{report.index}")
    return AlphaNumber(tuple(digits[:depth]), slope)


def sturmian_prefix(rho: AlphaNumber, m: int) -> str:
    """First m letters of the sturmian word with intercept rho.

    Uses the smallest level n with q_n - 1 >= m: the word agrees with the
    rho_n-shifted characteristic word on that many letters.
    """
    if m < 0:
        raise RangeError("prefix length must be >= 0")
    if m == 0:
        return ""
    slope = rho.slope
    for n in range(rho.depth + 1):
        if continuants(slope, n).q(n) - 1 >= m:
            shift = rho.psi(n)
            return characteristic_prefix(slope, shift + m)[shift:]
    raise DepthError(
        f"window depth {rho.depth} certifies only {continuants(slope, rho.depth).q(rho.depth) - 1} letters"
    )


def max_certified_length(rho: AlphaNumber) -> int:
    """Longest prefix of the word that this window determines."""
    return continuants(rho.slope, rho.depth).q(rho.depth) - 1


def add_integer(rho: AlphaNumber, k: int) -> AlphaNumber:
    """Intercept of the k-fold shift of the word of rho, at reduced depth.

    Computed semantically: generate a prefix, drop k letters, re-extract the
    intercept at the deepest level the remaining letters certify.
    """
    if k < 0:
        raise RangeError("only non-negative shifts are defined")
    if k == 0:
        return rho
    slope = rho.slope
    table = continuants(slope, rho.depth)
    budget = table.q(rho.depth) - 1 - k
    out_depth = 0
    while (
        out_depth + 1 < rho.depth
        and table.q(out_depth + 2) + table.q(out_depth + 1) <= budget
    ):
        out_depth += 1
    if out_depth < 1:
        raise DepthError(f"shift {k} leaves no certifiable level in a depth-{rho.depth} window")
    need = table.q(out_depth + 1) + table.q(out_depth)
    word = sturmian_prefix(rho, k + need)[k:]
    return intercept_from_prefix(word, slope, out_depth)


def agreement_length(rho: AlphaNumber, n: int) -> int:
    """lambda_n = q_{n+1} + q_n - rho_{n+1} - 2.

    The words shifted by rho_n and rho_{n+1} agree on at least this many
    letters, exactly this many when b_{n+1} != 0.
    """
    if n + 1 > rho.depth:
        raise DepthError(f"level {n + 1} beyond window depth {rho.depth}")
    table = continuants(rho.slope, n + 1)
    return table.q(n + 1) + table.q(n) - rho.psi(n + 1) - 2


@dataclass(frozen=True)
class ClassReport:
    """Window verdict on the equivalence class of an intercept.

    verdict is one of "natural-integer", "sigma0-tail", "sigma1-tail",
    "non-zero"; witness is the first digit subscript from which the winning
    pattern holds through the window end (None for "non-zero").
    """

    verdict: str
    witness: int | None
    evidence: int


def _pattern_start(rho: AlphaNumber, kind: str) -> int:
    """Smallest subscript N such that the pattern holds for all i in [N, depth]."""
    slope = rho.slope
    start = rho.depth + 1
    for i in range(rho.depth, 0, -1):
        b = rho.digit(i)
        if kind == "zero":
            ok = b == 0
        elif kind == "sigma0":
            ok = b == (slope.quotient(i) if i % 2 == 0 else 0)
        else:
            ok = b == (slope.quotient(i) if i % 2 == 1 else 0)
        if not ok:
            break
        start = i
    return start


def classify(rho: AlphaNumber, min_tail: int | None = None) -> ClassReport:
    """Zero-class trichotomy on the window.

    An intercept is equivalent to zero exactly when its digits are eventually
    zero, eventually the sigma0 pattern (full even-subscript digits), or
    eventually the sigma1 pattern.  The verdict requires at least min_tail
    digits of evidence (default max(3, depth // 3)), otherwise "non-zero".
    """
    if min_tail is None:
        min_tail = max(3, rho.depth // 3)
    best: tuple[int, str] | None = None
    for kind, name in (("zero", "natural-integer"), ("sigma0", "sigma0-tail"), ("sigma1", "sigma1-tail")):
        start = _pattern_start(rho, kind)
        evidence = rho.depth + 1 - start
        if evidence >= min_tail and (best is None or start < best[0]):
            best = (start, name)
    if best is None:
        return ClassReport("non-zero", None, 0)
    return ClassReport(best[1], best[0], rho.depth + 1 - best[0])


def is_zero_class(rho: AlphaNumber, min_tail: int | None = None) -> bool:
    return classify(rho, min_tail).verdict != "non-zero"


@dataclass(frozen=True)
class EquivalenceReport:
    equivalent: bool
    witness: int | None
    reason: str


def equivalent(rho: AlphaNumber, gamma: AlphaNumber, min_tail: int | None = None) -> EquivalenceReport:
    """Window test for "the two words are shifts of each other".

    Two non-zero-class intercepts are equivalent exactly when their digits
    agree from some level on; zero-class windows are all equivalent to the
    zero intercept.  The witness is the first agreeing 0-based digit index.
    """
    if rho.slope != gamma.slope:
        raise ValueError("intercepts live over different slopes")
    depth = min(rho.depth, gamma.depth)
    tail = max(3, depth // 3) if min_tail is None else min_tail
    # a shared digit tail settles it in every class, so test that first
    agree_from = depth
    for i in range(depth - 1, -1, -1):
        if rho.digits[i] != gamma.digits[i]:
            break
        agree_from = i
    evidence = depth - agree_from
    if evidence >= tail:
        return EquivalenceReport(True, agree_from, f"digits agree from index {agree_from}")
    a, b = classify(rho, min_tail), classify(gamma, min_tail)
    zero_a, zero_b = a.verdict != "non-zero", b.verdict != "non-zero"
    if zero_a and zero_b:
        return EquivalenceReport(True, None, f"both zero class ({a.verdict}, {b.verdict})")
    if zero_a != zero_b:
        return EquivalenceReport(False, None, f"classes differ ({a.verdict} vs {b.verdict})")
    return EquivalenceReport(False, None, f"tail agreement only {evidence} < {tail} digits")


@dataclass(frozen=True)
class ComplementReport:
    """Digits of the reversal-dual intercept plus the stability diagnostics.

    value holds the digits computed from the deepest usable support level;
    stable_from is the first level n at which every admissible support level
    M >= n yields the same residue, so digits above it are trustworthy.
    """

    value: AlphaNumber
    stable_from: int
    top_level: int


def complement(rho: AlphaNumber) -> AlphaNumber:
    return complement_report(rho).value


def complement_report(rho: AlphaNumber) -> ComplementReport:
    """The intercept whose word is the reversed other half of the orbit.

    At each level n the residue is Psi_n(q_{M+1} - 2 - rho_{M+1}) for the
    next support level M = Lambda(n); the map is an involution away from the
    zero class and excludes natural integers and the two sigma intercepts.
    """
    cls = classify(rho)
    if cls.verdict == "natural-integer":
        raise UnsupportedInterceptError("natural-integer windows have no complement")
    slope = rho.slope
    if rho.digits == sigma0(slope, rho.depth).digits or rho.digits == sigma1(slope, rho.depth).digits:
        raise UnsupportedInterceptError("sigma intercepts are excluded from complementation")
    sup = sorted(rho.support())
    if not sup:
        raise UnsupportedInterceptError("zero window has no complement")

    def subtracted(m: int) -> int:
        """The integer q_{m+1} - 2 - rho_{m+1} at support level m."""
        return continuants(slope, m + 1).q(m + 1) - 2 - rho.psi(m + 1)

    # levels where rho_{m+1} = q_{m+1} - 1 carry no information and are skipped
    usable = [m for m in sup if subtracted(m) >= 0]
    if not usable:
        raise UnsupportedInterceptError(
            "every support level has the maximal residue; window looks sigma-like"
        )
    top = usable[-1]

    def residue_from(m: int, n: int) -> int:
        digits = encode(subtracted(m), slope, m + 1).digits
        t2 = continuants(slope, n)
        return sum(b * t2.q(i) for i, b in enumerate(digits[:n]))

    value = AlphaNumber(encode(residue_from(top, top), slope, top).digits, slope)

    stable_from = top
    for n in range(top, -1, -1):
        if any(residue_from(m, n) != value.psi(n) for m in usable if m >= n):
            break
        stable_from = n
    return ComplementReport(value, stable_from, top)
