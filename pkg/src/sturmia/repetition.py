"""Repetition function of sturmian words: direct scan and closed forms.

The repetition function r(x, m) is the first index whose length-m window
duplicates an earlier one; equivalently the largest k such that the windows
starting at 0 .. k-1 are pairwise distinct.  For a characteristic word it is
constant equal to q_n on the interval [q_n - 1, q_{n+1} - 2]; for a shifted
word the interval splits into at most four rows whose breakpoints are driven
by the digits of the shift.  The closed forms here are cross-validated
against the direct scan in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CaseDispatchError, DepthError, PrefixTooShortError, RangeError
from .intercept import AlphaNumber
from .slope import Slope, continuants, interval_locate


def repetition_direct(x_prefix: str, m: int) -> int:
    """First window index whose length-m factor repeats an earlier one.

    Certified: raises PrefixTooShortError when the prefix ends before any
    duplicate window is seen, rather than guessing.
    """
    if m < 1:
        raise RangeError(f"window length must be >= 1, got {m}")
    seen: set[str] = set()
    for i in range(len(x_prefix) - m + 1):
        window = x_prefix[i : i + m]
        if window in seen:
            return i
        seen.add(window)
    raise PrefixTooShortError(
        f"no repeated length-{m} window within {len(x_prefix)} letters"
    )


def repetition_characteristic(slope: Slope, m: int) -> int:
    """r(c, m) for the characteristic word: q_n on [q_n - 1, q_{n+1} - 2]."""
    pos = interval_locate(m, slope)
    return continuants(slope, pos.n).q(pos.n)


@dataclass(frozen=True)
class RepetitionRow:
    """One constant segment of the repetition function inside an interval."""

    m_lo: int
    m_hi: int
    value: int
    case: str


def repetition_rows(rho: AlphaNumber, n: int) -> tuple[RepetitionRow, ...]:
    """Closed-form repetition segments covering [q_n - 1, q_{n+1} - 2].

    Dispatches on (b_{n+1}, b_{n+2}, b_n, a_{n+1}); every row carries its
    case tag.  Rows always tile the interval exactly.
    """
    if n < 0:
        raise RangeError(f"interval level must be >= 0, got {n}")
    if n + 2 > rho.depth:
        raise DepthError(
            f"closed form at level {n} needs digits through {n + 2}, window has {rho.depth}"
        )
    slope = rho.slope
    table = continuants(slope, n + 1)
    q_lo, q, q_hi = table.q(n - 1), table.q(n), table.q(n + 1)
    a = slope.quotient(n + 1)
    b_cur = rho.digit(n + 1)
    b_below = rho.digit(n)
    b_above = rho.digit(n + 2)
    a_above = slope.quotient(n + 2)
    rho_n = rho.psi(n)
    rho_n1 = rho.psi(n + 1)
    lo, hi = q - 1, q_hi - 2
    if lo > hi:
        # only level 0 with first quotient 1 degenerates this way
        raise RangeError(f"interval at level {n} is empty for this slope")

    if b_cur == 0 and b_above == a_above:
        raw = [(lo, hi, q, "1")]
    elif b_cur == 0 and b_below == 0:
        raw = [
            (lo, q_hi - rho_n - 2, q, "2"),
            (q_hi - rho_n - 1, hi, q_hi - rho_n, "2"),
        ]
    elif b_cur == 0 and a != 1:
        raw = [
            (lo, q_hi - rho_n - 2, q, "3"),
            (q_hi - rho_n - 1, hi, q_hi - rho_n, "3"),
        ]
    elif b_cur == 0:
        raw = [(lo, hi, q + q_lo - rho_n, "4")]
    elif 0 < b_cur < a - 1:
        raw = [
            (lo, q_hi - rho_n1 - 2, q, "5"),
            (q_hi - rho_n1 - 1, q_hi - b_cur * q - 2, q_hi - rho_n1, "5"),
            (q_hi - b_cur * q - 1, q_hi + q - rho_n1 - 2, q_hi - b_cur * q, "5"),
            (q_hi + q - rho_n1 - 1, hi, q_hi + q - rho_n1, "5"),
        ]
    elif b_cur == a - 1 and b_below == 0:
        raw = [
            (lo, q + q_lo - rho_n - 2, q, "6"),
            (q + q_lo - rho_n - 1, q + q_lo - 2, q + q_lo - rho_n, "6"),
            (q + q_lo - 1, 2 * q + q_lo - rho_n - 2, q + q_lo, "6"),
            (2 * q + q_lo - rho_n - 1, hi, 2 * q + q_lo - rho_n, "6"),
        ]
    elif b_cur == a - 1:
        raw = [
            (lo, q + q_lo - 2, q + q_lo - rho_n, "7"),
            (q + q_lo - 1, 2 * q + q_lo - rho_n - 2, q + q_lo, "7"),
            (2 * q + q_lo - rho_n - 1, hi, 2 * q + q_lo - rho_n, "7"),
        ]
    elif b_cur == a:
        raw = [
            (lo, q + q_lo - rho_n - 2, q_lo, "8"),
            (q + q_lo - rho_n - 1, hi, q + q_lo - rho_n, "8"),
        ]
    else:
        raise CaseDispatchError(
            f"digits b_{n + 1}={b_cur}, a_{n + 1}={a} match no case"
        )

    rows = [
        RepetitionRow(max(m_lo, lo), min(m_hi, hi), value, case)
        for (m_lo, m_hi, value, case) in raw
        if max(m_lo, lo) <= min(m_hi, hi)
    ]
    assert rows and rows[0].m_lo == lo and rows[-1].m_hi == hi
    assert all(rows[i + 1].m_lo == rows[i].m_hi + 1 for i in range(len(rows) - 1))
    return tuple(rows)


def repetition_closed_form(rho: AlphaNumber, m: int) -> tuple[int, str]:
    """Closed-form r(x, m) for x the shift of the characteristic word by rho.

    Returns (value, case tag).  Needs digits through level n+2 where m sits
    in [q_n - 1, q_{n+1} - 2].
    """
    pos = interval_locate(m, rho.slope, max_level=rho.depth)
    for row in repetition_rows(rho, pos.n):
        if row.m_lo <= m <= row.m_hi:
            return row.value, row.case
    raise CaseDispatchError(f"m={m} escaped every row at level {pos.n}")


def repetition_level(rho_n1: int, slope: Slope, m: int) -> int:
    """4-branch value of r(T^j(c), m) for an integer shift j = rho_{n+1}.

    Branch by the position of the shift relative to the common-part offsets
    (a_{n+1} - l - 1) q_n + r and (a_{n+1} - l) q_n (+ r).
    """
    pos = interval_locate(m, slope)
    n, l, r = pos.n, pos.l, pos.r
    table = continuants(slope, n + 1)
    q_lo, q, q_hi = table.q(n - 1), table.q(n), table.q(n + 1)
    a = slope.quotient(n + 1)
    if not 0 <= rho_n1 < q_hi:
        raise RangeError(f"shift must lie in [0, {q_hi}), got {rho_n1}")
    if rho_n1 <= (a - l - 1) * q + r:
        return q
    if rho_n1 < (a - l) * q:
        return q_hi - rho_n1
    if rho_n1 <= (a - l) * q + r:
        return l * q + q_lo
    return q_hi - rho_n1 + q


@dataclass(frozen=True)
class JumpReport:
    """Verdict of the jump law r(x,m) != r(x,m-1) <=> r(x,m) = m+1."""

    holds: bool
    checked: tuple[int, int]
    failures: tuple[int, ...]


def repetition_jump_check(x_prefix: str, m_lo: int, m_hi: int) -> JumpReport:
    """Verify the jump law on m in [m_lo, m_hi] by direct scanning."""
    if m_lo < 2:
        raise RangeError("jump law compares m with m-1; need m_lo >= 2")
    values = {m: repetition_direct(x_prefix, m) for m in range(m_lo - 1, m_hi + 1)}
    failures = tuple(
        m
        for m in range(m_lo, m_hi + 1)
        if (values[m] != values[m - 1]) != (values[m] == m + 1)
    )
    return JumpReport(holds=not failures, checked=(m_lo, m_hi), failures=failures)


@dataclass(frozen=True)
class DioTerm:
    """One ratio feeding the exponent estimate; family -1 marks generic rows."""

    level: int
    family: int
    ratio: Fraction


@dataclass(frozen=True)
class DioEstimate:
    value: Fraction
    mode: str
    witness: DioTerm
    terms: tuple[DioTerm, ...]


# Number of top digit levels whose hypothesis 0 < b_i < a_i - 1 selects the
# four-family formula; anything else falls back to the generic segment bound.
def _tail_start(depth: int) -> int:
    return max(1, depth // 2)


def dio_estimate(rho: AlphaNumber, depth: int | None = None) -> DioEstimate:
    """Window estimate of the diophantine exponent of the shifted word.

    When the digits satisfy 0 < b_i < a_i - 1 on the inspected tail, uses the
    four ratio families in the exponent formula; otherwise the generic bound
    1 + max m / r(x, m), with the maximum taken at closed-form segment ends.
    Either way this estimates a limsup from a finite window: it is reported
    as an estimate, never as the limit.
    """
    d = rho.depth if depth is None else depth
    if d < 5:
        raise DepthError(f"need at least 5 digit levels, got {d}")
    if d > rho.depth:
        raise DepthError(f"window has {rho.depth} digits, cannot inspect {d}")
    slope = rho.slope
    table = continuants(slope, d)
    start = _tail_start(d)

    hypothesis = all(
        0 < rho.digit(i) < slope.quotient(i) - 1 for i in range(start, d + 1)
    )
    terms: list[DioTerm] = []
    if hypothesis:
        for n in range(start, d):
            q, q_hi = table.q(n), table.q(n + 1)
            b = rho.digit(n + 1)
            rho_n1 = rho.psi(n + 1)
            for family, ratio in enumerate(
                (
                    Fraction(q_hi - rho_n1, q),
                    Fraction(q_hi - b * q, q_hi - rho_n1),
                    Fraction(q_hi - rho_n1 + q, q_hi - b * q),
                    Fraction(q_hi, q_hi - rho_n1 + q),
                )
            ):
                terms.append(DioTerm(n, family, ratio))
        mode = "four-family"
    else:
        for n in range(1, d - 1):
            for row in repetition_rows(rho, n):
                terms.append(DioTerm(n, -1, Fraction(row.m_hi, row.value)))
        mode = "generic"

    witness = max(terms, key=lambda t: t.ratio)
    return DioEstimate(1 + witness.ratio, mode, witness, tuple(terms))
