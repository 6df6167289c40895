"""Finite sturmian word machinery over {0, 1} alphabets.

Standard words follow s_-1 = "1", s_0 = "0", s_1 = s_0^{a_1 - 1} s_-1 and
s_{n+1} = s_n^{a_{n+1}} s_{n-1}, so |s_n| is the continuant q_n.  The
characteristic word of the slope is the limit of the s_n.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import (
    DepthError,
    NotCentralError,
    PrefixTooShortError,
    RangeError,
    UndeterminedError,
)
from .ostrowski import encode
from .slope import Slope, continuants


@lru_cache(maxsize=4096)
def standard_word(slope: Slope, n: int) -> str:
    """The standard word s_n of the slope; defined for n >= -1."""
    if n < -1:
        raise DepthError("standard words start at index -1")
    if n == -1:
        return "1"
    if n == 0:
        return "0"
    if n == 1:
        return "0" * (slope.quotient(1) - 1) + "1"
    return standard_word(slope, n - 1) * slope.quotient(n) + standard_word(slope, n - 2)


def _prefix_level(slope: Slope, m: int) -> int:
    """Smallest d with q_d > m."""
    d = 0
    while continuants(slope, d).q(d) <= m:
        d += 1
    return d


@lru_cache(maxsize=64)
def characteristic_prefix(slope: Slope, m: int) -> str:
    """First m letters of the characteristic word, assembled from digit blocks.

    With m = sum b_{i+1} q_i the prefix is the downward product
    s_N^{b_{N+1}} ... s_0^{b_1}.  Agrees with truncating any s_d of length
    >= m, which the tests cross-check.
    """
    if m < 0:
        raise RangeError("prefix length must be >= 0")
    if m == 0:
        return ""
    depth = _prefix_level(slope, m)
    digits = encode(m, slope, depth).digits
    parts = []
    for i in range(depth - 1, -1, -1):
        if digits[i]:
            parts.append(standard_word(slope, i) * digits[i])
    word = "".join(parts)
    if len(word) != m:
        raise AssertionError("digit block product has the wrong length")
    return word


def shifted_characteristic_prefix(slope: Slope, k: int, m: int) -> str:
    """First m letters of the characteristic word shifted k places."""
    if k < 0:
        raise RangeError("shift must be >= 0")
    return characteristic_prefix(slope, k + m)[k:]


def mechanical_prefix(alpha: Fraction, rho: Fraction, n: int, kind: str = "lower") -> str:
    """First n letters of the mechanical word of slope alpha and intercept rho.

    Upper words take floor differences, lower words ceiling differences; both
    are evaluated in exact rational arithmetic.
    """
    alpha = Fraction(alpha)
    rho = Fraction(rho)
    if not 0 <= alpha <= 1:
        raise RangeError("mechanical slope must lie in [0, 1]")
    if kind == "upper":
        step = lambda k: math.floor((k + 1) * alpha + rho) - math.floor(k * alpha + rho)
    elif kind == "lower":
        step = lambda k: math.ceil((k + 1) * alpha + rho) - math.ceil(k * alpha + rho)
    else:
        raise ValueError(f"kind must be 'upper' or 'lower', got {kind!r}")
    return "".join(str(step(k)) for k in range(n))


def factor_set(word: str, n: int) -> frozenset[str]:
    """All length-n factors occurring in the word."""
    if n < 0 or n > len(word):
        raise RangeError(f"factor length {n} outside [0, {len(word)}]")
    return frozenset(word[i : i + n] for i in range(len(word) - n + 1))


def complexity(word: str, n: int) -> int:
    """Number of distinct length-n factors of the word."""
    return len(factor_set(word, n))


def special_factor(factors: frozenset[str], direction: str) -> str:
    """The unique left (right) special factor one letter shorter than `factors`.

    `factors` must be the complete set of length-(n+1) factors of a sturmian
    window; w is left special when 0w and 1w both occur, right special when
    w0 and w1 do.  Raises UndeterminedError when the window shows no witness.
    """
    if not factors:
        raise UndeterminedError("empty factor set")
    if direction == "left":
        candidates = {w[1:] for w in factors if ("0" + w[1:]) in factors and ("1" + w[1:]) in factors}
    elif direction == "right":
        candidates = {w[:-1] for w in factors if (w[:-1] + "0") in factors and (w[:-1] + "1") in factors}
    else:
        raise ValueError(f"direction must be 'left' or 'right', got {direction!r}")
    if len(candidates) > 1:
        raise UndeterminedError(f"multiple {direction} special candidates: window not sturmian")
    if not candidates:
        raise UndeterminedError(f"no {direction} special factor visible in this window")
    return candidates.pop()


def is_palindrome(word: str) -> bool:
    return word == word[::-1]


def central_decomposition(word: str) -> tuple[str, str] | str:
    """Split a central word as p + "01" + q with p, q palindromes.

    Powers of a single letter (and the empty word) are central without such a
    split; they return the repeated letter instead of a pair.  The split is
    unique for genuinely central words; anything failing the checks raises
    NotCentralError.
    """
    if word == "" or set(word) <= {word[0]}:
        return word[:1]
    if not is_palindrome(word):
        raise NotCentralError("central words are palindromes")
    splits = []
    for i in range(len(word) - 1):
        if word[i : i + 2] == "01":
            p, q = word[:i], word[i + 2 :]
            if is_palindrome(p) and is_palindrome(q):
                splits.append((p, q))
    if len(splits) != 1:
        raise NotCentralError(
            f"palindrome admits {len(splits)} valid splits around '01'; central words have exactly 1"
        )
    return splits[0]


def fractional_power(word: str, exponent: Fraction | int) -> str:
    """word^exponent for rational exponent >= 0 with denominator scaling |word|."""
    if not word:
        raise RangeError("cannot take powers of the empty word")
    exponent = Fraction(exponent)
    if exponent < 0:
        raise RangeError("exponent must be >= 0")
    whole = int(exponent)
    rest = exponent - whole
    cut = math.floor(rest * len(word))
    return word * whole + word[:cut]


def balance_defect(word: str, n: int) -> int:
    """Largest difference of '1' counts over all pairs of length-n factors."""
    counts = {f.count("1") for f in factor_set(word, n)}
    return max(counts) - min(counts) if counts else 0
