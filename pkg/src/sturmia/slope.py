"""Slopes given by continued fractions, their continuants and interval partition.

A slope is an irrational number in (0,1) known through its partial quotients
[0; a_1, a_2, ...], truncated at a finite depth or extended by an eventual
period.  All arithmetic is exact: continuants are big integers, convergents
are Fractions.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .errors import DepthError, RangeError


@dataclass(frozen=True)
class Slope:
    """Partial quotients of [0; a_1, a_2, ...], with an optional periodic tail.

    `quotients` stores the explicitly given quotients a_1..a_D.  If `period`
    is (start, length), the block quotients[start:start+length] repeats
    forever past depth D; the block must end the stored list.
    """

    quotients: tuple[int, ...]
    period: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if not self.quotients:
            raise ValueError("at least one partial quotient is required")
        if any(not isinstance(a, int) or a < 1 for a in self.quotients):
            raise ValueError("partial quotients must be integers >= 1")
        if self.period is not None:
            start, length = self.period
            if length < 1 or start < 0 or start + length != len(self.quotients):
                raise ValueError("period must describe the tail of the stored quotients")

    @property
    def eventually_periodic(self) -> bool:
        return self.period is not None

    @property
    def known_depth(self) -> int | None:
        """Largest usable quotient index, or None when unbounded."""
        return None if self.period is not None else len(self.quotients)

    def quotient(self, i: int) -> int:
        """The partial quotient a_i, indexed from 1."""
        if i < 1:
            raise DepthError(f"partial quotients are indexed from 1, got {i}")
        if i <= len(self.quotients):
            return self.quotients[i - 1]
        if self.period is None:
            raise DepthError(
                f"a_{i} requested but only {len(self.quotients)} quotients are known"
            )
        start, length = self.period
        return self.quotients[start + (i - 1 - start) % length]

    def __str__(self) -> str:
        if self.period is None:
            return "[0;" + ",".join(str(a) for a in self.quotients) + "]"
        start, length = self.period
        head = ",".join(str(a) for a in self.quotients[:start])
        block = ",".join(str(a) for a in self.quotients[start:])
        period = f"({block})*" if length > 1 else f"{self.quotients[start]}*"
        return "[0;" + (head + "," if head else "") + period + "]"

    def to_json(self) -> str:
        payload = {
            "quotients": list(self.quotients),
            "period": None
            if self.period is None
            else {"start": self.period[0], "len": self.period[1]},
        }
        return json.dumps(payload)

    @staticmethod
    def from_json(text: str) -> "Slope":
        payload = json.loads(text)
        period = payload.get("period")
        return Slope(
            tuple(payload["quotients"]),
            None if period is None else (period["start"], period["len"]),
        )


_SLOPE_RE = re.compile(r"\[\s*0\s*;\s*(.*?)\s*\]\Z")
_GROUP_RE = re.compile(r"\(\s*([0-9][0-9,\s]*?)\s*\)\s*\*\s*\Z")
_SINGLE_RE = re.compile(r"([0-9]+)\s*\*\s*\Z")


def parse_slope(text: str) -> Slope:
    """Parse a slope literal like "[0;1,2,3]", "[0;1*]" or "[0;2,1,(3,1)*]"."""
    m = _SLOPE_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a slope literal: {text!r}")
    body = m.group(1)
    period_items: list[int] | None = None
    gm = _GROUP_RE.search(body)
    if gm is not None:
        period_items = [int(t) for t in gm.group(1).split(",")]
        body = body[: gm.start()].rstrip().rstrip(",")
    else:
        sm = _SINGLE_RE.search(body)
        if sm is not None:
            period_items = [int(sm.group(1))]
            body = body[: sm.start()].rstrip().rstrip(",")
    head = [int(t) for t in body.split(",") if t.strip()] if body.strip() else []
    if period_items is None:
        return Slope(tuple(head))
    return Slope(tuple(head + period_items), (len(head), len(period_items)))


class ContinuantTable:
    """Continuant denominators q_n and numerators p_n for -1 <= n <= depth.

    q_-1 = 0, q_0 = 1, q_{n+1} = a_{n+1} q_n + q_{n-1}; p runs the same
    recurrence from p_-1 = 1, p_0 = 0, so p_n/q_n = [0; a_1..a_n].
    """

    __slots__ = ("slope", "depth", "_q", "_p")

    def __init__(self, slope: Slope, depth: int, q_row: tuple[int, ...], p_row: tuple[int, ...]):
        self.slope = slope
        self.depth = depth
        self._q = q_row
        self._p = p_row

    def q(self, n: int) -> int:
        if n < -1 or n > self.depth:
            raise DepthError(f"q_{n} outside computed range [-1, {self.depth}]")
        return self._q[n + 1]

    def p(self, n: int) -> int:
        if n < -1 or n > self.depth:
            raise DepthError(f"p_{n} outside computed range [-1, {self.depth}]")
        return self._p[n + 1]

    def q_values(self) -> tuple[int, ...]:
        """The row (q_-1, q_0, ..., q_depth)."""
        return self._q

    def convergent(self, n: int) -> Fraction:
        if n < 1:
            raise DepthError("convergents are defined for n >= 1")
        return Fraction(self.p(n), self.q(n))


@lru_cache(maxsize=8192)
def _rows(slope: Slope, depth: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    q = [0, 1]
    p = [1, 0]
    for i in range(1, depth + 1):
        a = slope.quotient(i)
        q.append(a * q[-1] + q[-2])
        p.append(a * p[-1] + p[-2])
    return tuple(q), tuple(p)


def continuants(slope: Slope, depth: int) -> ContinuantTable:
    """Continuants of `slope` up to q_depth; depth 0 gives the seed row (0, 1)."""
    if depth < 0:
        raise DepthError("depth must be >= 0")
    q_row, p_row = _rows(slope, depth)
    return ContinuantTable(slope, depth, q_row, p_row)


def convergent_value(slope: Slope, n: int) -> Fraction:
    """The convergent p_n/q_n as an exact reduced fraction."""
    return continuants(slope, n).convergent(n)


class IntervalPosition(NamedTuple):
    """Unique writing m = (l+1) q_n + q_{n-1} - 2 - r for an integer m >= 1."""

    n: int
    l: int
    r: int


def interval_locate(m: int, slope: Slope, max_level: int | None = None) -> IntervalPosition:
    """Locate m >= 1 in the partition by intervals [q_n - 1, q_{n+1} - 2].

    Within level n, sub-intervals are indexed by l: l = 0 covers
    [q_n - 1, q_n + q_{n-1} - 2] and each 1 <= l <= a_{n+1} - 1 covers
    [l q_n + q_{n-1} - 1, (l+1) q_n + q_{n-1} - 2].  Returns the unique
    (n, l, r) with m = (l+1) q_n + q_{n-1} - 2 - r and r inside the
    sub-interval width (q_{n-1} for l = 0, q_n otherwise).
    """
    if m < 1:
        raise RangeError(f"interval partition covers integers >= 1, got {m}")
    n = 0
    while True:
        if max_level is not None and n > max_level:
            raise DepthError(f"m={m} not located below level {max_level}")
        try:
            table = continuants(slope, n + 1)
        except DepthError as exc:
            raise DepthError(f"m={m} exceeds the representable range of the slope") from exc
        q_n, q_n1 = table.q(n), table.q(n + 1)
        if q_n - 1 <= m <= q_n1 - 2:
            q_nm1 = table.q(n - 1)
            if m <= q_n + q_nm1 - 2:
                l = 0
            else:
                l = (m + 1 - q_nm1) // q_n
            r = (l + 1) * q_n + q_nm1 - 2 - m
            width = q_nm1 if l == 0 else q_n
            a_next = slope.quotient(n + 1)
            if not (0 <= r < width and 0 <= l <= a_next - 1):
                raise RangeError(f"internal: bad interval location for m={m}: {(n, l, r)}")
            return IntervalPosition(n, l, r)
        n += 1
