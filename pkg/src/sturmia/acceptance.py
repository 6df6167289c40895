"""Runnable acceptance checks, one per numbered release criterion.

Every check returns a CheckResult instead of raising, so the registry can
print a one-line verdict per criterion; the pytest wrapper and the `verify`
CLI subcommand both drive this module.  Randomized corpora are seeded and
capped so the whole battery stays fast and reproducible; caps are reported
in the result details.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable

from .errors import DepthError, SturmiaError
from .factorization import characteristic_factorizations, duality_check, product_prefix
from .intercept import (
    AlphaNumber,
    classify,
    complement,
    equivalent,
    intercept_from_prefix,
    sturmian_prefix,
    zero,
)
from .ostrowski import all_digit_strings, decode, encode
from .rauzy import build_graph, count_turns
from .repetition import (
    dio_estimate,
    repetition_characteristic,
    repetition_closed_form,
    repetition_direct,
    repetition_rows,
)
from .slope import Slope, continuants, convergent_value, interval_locate, parse_slope
from .torsion import B_BLOCKS, b_factorize, even_family, self_complementary, torsion_search
from .words import characteristic_prefix, complexity, mechanical_prefix, standard_word

SEED = 20260814

GOLDEN = parse_slope("[0;1*]")
TWO_ONE = parse_slope("[0;2,(1)*]")
MIXED = parse_slope("[0;2,1,3,(2,1)*]")
TWO_THREE = parse_slope("[0;2,3,(1,2)*]")
ONE_THREE = parse_slope("[0;1,3,(2,1)*]")
TWO_TWO = parse_slope("[0;2*]")

NAMED_FIVE = (GOLDEN, TWO_ONE, MIXED, TWO_THREE, ONE_THREE)


@dataclass(frozen=True)
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"[{verdict}] criterion {self.number:2d} {self.name}: {self.detail}"


def _seeded_slopes(
    count: int, seed: int, hi: int = 5, cap_level: int = 12, cap: int = 100_000
) -> tuple[Slope, ...]:
    """Random periodic slopes with quotients in [1, hi], continuant-capped.

    Draws favour small quotients so the rejection loop terminates quickly;
    the cap keeps exhaustive sweeps within budget and is part of the
    reported corpus description.
    """
    rng = random.Random(seed)
    weights = [16, 8, 4, 2, 1][:hi]
    out = []
    while len(out) < count:
        qs = tuple(rng.choices(range(1, hi + 1), weights=weights, k=12))
        slope = Slope(qs, (0, len(qs)))
        if continuants(slope, cap_level).q(cap_level) <= cap:
            out.append(slope)
    return tuple(out)


def _seeded_digits(rng: random.Random, slope: Slope, depth: int) -> tuple[int, ...]:
    """One valid digit window drawn uniformly-ish with local fix-ups."""
    digits = []
    prev = 0
    for i in range(1, depth + 1):
        hi = slope.quotient(i) - 1 if i == 1 else slope.quotient(i)
        b = rng.randint(0, hi)
        if i >= 2 and b == slope.quotient(i) and prev != 0:
            b -= 1
        digits.append(b)
        prev = b
    return tuple(digits)


def _ten_slopes() -> tuple[Slope, ...]:
    return (GOLDEN,) + _seeded_slopes(9, SEED)


# --------------------------------------------------------------- criteria


def check_01_ostrowski_round_trip() -> CheckResult:
    """decode(encode(n)) identity below q_12 and depth-7 uniqueness."""
    slopes = _ten_slopes()
    total = 0
    for slope in slopes:
        table = continuants(slope, 12)
        top = min(table.q(12), 100_000)
        for n in range(top):
            if decode(encode(n, slope, 12)) != n:
                return CheckResult(1, "ostrowski-round-trip", False, f"n={n} on {slope}")
        total += top
        values = sorted(decode(d, slope) for d in all_digit_strings(slope, 7))
        if values != list(range(continuants(slope, 7).q(7))):
            return CheckResult(1, "ostrowski-round-trip", False, f"uniqueness on {slope}")
    return CheckResult(
        1,
        "ostrowski-round-trip",
        True,
        f"{total} integers round-tripped on {len(slopes)} slopes; depth-7 bijection exhaustive",
    )


def check_02_prefix_product() -> CheckResult:
    """Descending product of standard words equals the plain truncation."""
    slopes = _ten_slopes()
    checked = 0
    for slope in slopes:
        depth = 1
        while continuants(slope, depth).q(depth) < 502:
            depth += 1
        reference = standard_word(slope, depth)
        for m in range(1, 501):
            digits = encode(m, slope, depth).digits
            product = "".join(
                standard_word(slope, i) * digits[i]
                for i in range(depth - 1, -1, -1)
                if digits[i]
            )
            if product != reference[:m] or characteristic_prefix(slope, m) != product:
                return CheckResult(2, "prefix-product", False, f"m={m} on {slope}")
            checked += 1
    return CheckResult(
        2, "prefix-product", True, f"m <= 500 on {len(slopes)} slopes ({checked} prefixes)"
    )


def check_03_complexity() -> CheckResult:
    """Window complexity n+1 once the prefix passes one recurrence span.

    The certified span is n plus the continuant above the repetition level:
    a prefix of n + r(c, n) letters can miss the last new factor when the
    next quotient is large, so the margin uses q_{level+1} >= r(c, n).
    """
    slopes = _ten_slopes()
    for slope in slopes:
        for n in range(1, 51):
            level = interval_locate(n, slope).n
            window = n + continuants(slope, level + 1).q(level + 1) + 10
            prefix = characteristic_prefix(slope, window)
            if complexity(prefix, n) != n + 1:
                return CheckResult(3, "sturmian-complexity", False, f"n={n} on {slope}")
    return CheckResult(3, "sturmian-complexity", True, f"n <= 50 on {len(slopes)} slopes")


def check_04_repetition_intervals() -> CheckResult:
    """Direct scan returns q_n on the whole interval [q_n - 1, q_{n+1} - 2]."""
    slopes = (GOLDEN, TWO_ONE) + _seeded_slopes(5, SEED + 4, cap_level=9, cap=100)
    pairs = 0
    for slope in slopes:
        table = continuants(slope, 9)
        prefix = characteristic_prefix(slope, 3 * table.q(9))
        for n in range(9):
            q_n, q_n1 = table.q(n), table.q(n + 1)
            for m in range(max(1, q_n - 1), q_n1 - 1):
                if repetition_direct(prefix, m) != q_n:
                    return CheckResult(
                        4, "repetition-intervals", False, f"m={m}, n={n} on {slope}"
                    )
                pairs += 1
    return CheckResult(
        4,
        "repetition-intervals",
        True,
        f"{pairs} (m, n) pairs, n <= 8, on {len(slopes)} slopes (seeded caps q_9 <= 100)",
    )


def check_05_closed_form_oracle() -> CheckResult:
    """Closed-form repetition versus the direct scan, exhaustive at depth 8."""
    slopes = (GOLDEN, parse_slope("[0;3,1,2,(1)*]")) + _seeded_slopes(
        5, SEED + 5, cap_level=8, cap=120
    )
    pairs = 0
    cases = set()
    for slope in slopes:
        m_top = continuants(slope, 7).q(7) - 2
        for digits in all_digit_strings(slope, 8):
            rho = AlphaNumber(digits, slope)
            deep = AlphaNumber(digits + (0,) * 4, slope)
            word = sturmian_prefix(deep, 2 * m_top + 4)
            for m in range(1, m_top + 1):
                value, case = repetition_closed_form(rho, m)
                cases.add(case)
                if value != repetition_direct(word, m):
                    return CheckResult(
                        5,
                        "closed-form-oracle",
                        False,
                        f"digits={digits}, m={m}, case={case} on {slope}",
                    )
                pairs += 1
    return CheckResult(
        5,
        "closed-form-oracle",
        True,
        f"{pairs} pairs, no discrepancies, cases seen {sorted(cases)} "
        f"on {len(slopes)} slopes (caps q_8 <= 120)",
    )


def check_06_intercept_bijection() -> CheckResult:
    """Digit recovery from the word the digits generate, depth 10."""
    count = 0
    for slope in NAMED_FIVE:
        rng = random.Random(SEED + 6)
        table = continuants(slope, 11)
        need = table.q(11) + table.q(10)
        for _ in range(200):
            digits = _seeded_digits(rng, slope, 10)
            deep = AlphaNumber(digits + (0,) * 3, slope)
            prefix = sturmian_prefix(deep, need)
            back = intercept_from_prefix(prefix, slope, 10)
            if back.digits != digits:
                return CheckResult(
                    6, "intercept-bijection", False, f"digits={digits} on {slope}"
                )
            count += 1
    return CheckResult(
        6, "intercept-bijection", True, f"{count} seeded windows across 5 slopes"
    )


def check_07_duality() -> CheckResult:
    """Shift word equals the complement's product word; complement involutes."""
    checked = 0
    for slope in NAMED_FIVE:
        rng = random.Random(SEED + 7)
        accepted = 0
        for _ in range(400):
            if accepted == 25:
                break
            rho = AlphaNumber(_seeded_digits(rng, slope, 16), slope)
            if classify(rho).verdict != "non-zero":
                continue
            try:
                comp = complement(rho)
                back = complement(comp)
            except SturmiaError:
                # the window cannot certify both directions; draw again
                continue
            if comp.psi(comp.depth) < 300 or classify(comp).verdict != "non-zero":
                continue
            report = duality_check(rho, 300)
            if not report.ok:
                return CheckResult(
                    7, "duality", False, f"digits={rho.digits} on {slope}"
                )
            if not equivalent(back, rho).equivalent:
                return CheckResult(
                    7, "duality", False, f"involution failed for {rho.digits} on {slope}"
                )
            accepted += 1
            checked += 1
        if accepted < 25:
            return CheckResult(
                7, "duality", False, f"only {accepted} usable corpus windows on {slope}"
            )
    return CheckResult(
        7, "duality", True, f"{checked} non-zero-class intercepts, prefix length 300"
    )


def check_08_characteristic_factorizations() -> CheckResult:
    """Both product factorizations of the characteristic word, three cases."""
    seen = {}
    for slope in (GOLDEN, TWO_ONE, MIXED, TWO_THREE, ONE_THREE):
        report = characteristic_factorizations(slope, 400)
        if not report.ok:
            return CheckResult(8, "characteristic-factorizations", False, f"{slope}")
        seen[report.case] = seen.get(report.case, 0) + 1
    if set(seen) != {"a1=1,a2=1", "a1=1,a2>=2", "a1>=2"}:
        return CheckResult(
            8, "characteristic-factorizations", False, f"cases covered: {sorted(seen)}"
        )
    return CheckResult(
        8,
        "characteristic-factorizations",
        True,
        "three quotient cases verified to length 400",
    )


def check_09_rauzy() -> CheckResult:
    """Cycle lengths, coprimality and turn counts on every graph up to m=150."""
    for slope in NAMED_FIVE:
        for m in range(1, 151):
            graph = build_graph(slope, m)
            pos = graph.level
            table = continuants(slope, pos.n + 1)
            q_n, q_n1 = table.q(pos.n), table.q(pos.n - 1)
            ref, other = len(graph.referent_cycle), len(graph.other_cycle)
            if ref != q_n or other != pos.l * q_n + q_n1:
                return CheckResult(9, "rauzy-structure", False, f"m={m} on {slope}")
            if gcd(ref, other) != 1:
                return CheckResult(9, "rauzy-structure", False, f"gcd at m={m} on {slope}")
            turns = count_turns(0, m, slope=slope)
            if turns != slope.quotient(pos.n + 1) - pos.l:
                return CheckResult(9, "rauzy-structure", False, f"turns at m={m} on {slope}")
    return CheckResult(9, "rauzy-structure", True, "all m <= 150 on 5 slopes")


def check_10_torsion() -> CheckResult:
    """Continuant congruences certified by digit supports, golden slope."""
    canonical = {2: 3, 4: 6, 3: 8, 5: 20}
    details = []
    for modulus, k_ref in canonical.items():
        anchored = torsion_search(GOLDEN, modulus, n=4)
        if not anchored.found or anchored.k != k_ref:
            return CheckResult(
                10, "torsion-identities", False, f"N={modulus} at n=4 gave k={anchored.k}"
            )
        hit = torsion_search(GOLDEN, modulus)
        if not hit.found or hit.k > k_ref:
            return CheckResult(
                10, "torsion-identities", False, f"N={modulus} default search k={hit.k}"
            )
        sweep_top = hit.n + 30
        for n in range(hit.n, sweep_top + 1):
            again = torsion_search(GOLDEN, modulus, n=n)
            if not again.found:
                return CheckResult(
                    10, "torsion-identities", False, f"N={modulus} no identity at n={n}"
                )
            table = continuants(GOLDEN, n + again.k)
            value = decode(again.quotient_digits, GOLDEN)
            if table.q(n + again.k) - table.q(n) != modulus * value:
                return CheckResult(
                    10, "torsion-identities", False, f"N={modulus} arithmetic at n={n}"
                )
            if not all(n < s < n + again.k for s in again.support):
                return CheckResult(
                    10, "torsion-identities", False, f"N={modulus} support at n={n}"
                )
        details.append(f"N={modulus}: k={k_ref} at n=4, k={hit.k} from n={hit.n}")
    return CheckResult(
        10,
        "torsion-identities",
        True,
        "; ".join(details) + "; identities re-verified for 31 ranks each",
    )


def check_11_self_complementary() -> CheckResult:
    """Three reversal-fixed classes per slope, plus the all-even family."""
    for slope in NAMED_FIVE:
        classes = self_complementary(slope, 20)
        if len(classes) != 3:
            return CheckResult(11, "self-complementary", False, f"{slope}")
        for rho in classes:
            if not equivalent(rho, complement(rho)).equivalent:
                return CheckResult(
                    11, "self-complementary", False, f"fixed-point fails on {slope}"
                )
        for a, b in itertools.combinations(classes, 2):
            if equivalent(a, b).equivalent:
                return CheckResult(
                    11, "self-complementary", False, f"classes collide on {slope}"
                )
    family = even_family(TWO_TWO, 20)
    for rho in family:
        if not equivalent(rho, complement(rho)).equivalent:
            return CheckResult(11, "self-complementary", False, "even family fails")
    return CheckResult(
        11,
        "self-complementary",
        True,
        "3 classes at depth 20 on 5 slopes; S0/S1/S2 family on the all-even slope",
    )


def check_12_b_factorization() -> CheckResult:
    """Prefix-free inventory, at-most-one parsing, and the finite trichotomy."""
    inventory = ["00", "01"] + [
        "1" + "0" * k + "1" + x for k in range(16) for x in "01"
    ]
    for a in inventory:
        for b in inventory:
            if a != b and b.startswith(a):
                return CheckResult(12, "b-factorization", False, f"{a} prefixes {b}")
    words = 0
    for length in range(17):
        for bits in itertools.product("01", repeat=length):
            u = "".join(bits)
            done = sum(b_factorize(p + u).complete for p in ("", "1", "11"))
            if done != 1:
                return CheckResult(12, "b-factorization", False, f"trichotomy at {u!r}")
            words += 1
    for length in range(13):
        for bits in itertools.product("01", repeat=length):
            u = "".join(bits)
            ways = [0] * (len(u) + 1)
            ways[0] = 1
            for j in range(1, len(u) + 1):
                for i in range(j):
                    if ways[i] and u[i:j] in B_BLOCKS:
                        ways[j] += ways[i]
            if ways[-1] > 1 or (ways[-1] == 1) != b_factorize(u).complete:
                return CheckResult(12, "b-factorization", False, f"uniqueness at {u!r}")
    return CheckResult(
        12,
        "b-factorization",
        True,
        f"inventory prefix-free; trichotomy on {words} words (<= 16); "
        "parse count <= 1 cross-checked to length 12",
    )


def check_13_dio_estimate() -> CheckResult:
    """Golden window value against 1 + phi; family formula against generic."""
    phi = (1 + math.sqrt(5)) / 2
    est = dio_estimate(zero(GOLDEN, 25))
    if abs(float(est.value) - (1 + phi)) >= 1e-3:
        return CheckResult(13, "dio-estimate", False, f"golden value {float(est.value)}")
    for text, digit in (("[0;4*]", 2), ("[0;5*]", 3)):
        slope = parse_slope(text)
        rho = AlphaNumber((digit,) * 14, slope)
        family = dio_estimate(rho)
        if family.mode != "four-family":
            return CheckResult(13, "dio-estimate", False, f"{text} missed the hypothesis")
        generic = 1 + max(
            Fraction(row.m_hi, row.value)
            for n in range(1, rho.depth - 1)
            for row in repetition_rows(rho, n)
        )
        # The family estimate refreshes on alternating depth parities, so a
        # single last step can be degenerate; one window term is the larger
        # of the final two one-level refinements.
        v14, v13, v12 = (float(dio_estimate(rho, depth=d).value) for d in (14, 13, 12))
        step = max(abs(v14 - v13), abs(v13 - v12))
        gap = abs(float(family.value - generic))
        if gap > step:
            return CheckResult(
                13, "dio-estimate", False, f"{text}: gap {gap} above window term {step}"
            )
    return CheckResult(
        13,
        "dio-estimate",
        True,
        f"golden window value {float(est.value):.6f} within 1e-3 of 1+phi; "
        "family/generic gap below one window term on two slopes",
    )


def check_14_mechanical_oracle() -> CheckResult:
    """Convergent-slope mechanical words, then rational complexity bounds."""
    for slope in NAMED_FIVE:
        depth = 1
        while continuants(slope, depth).q(depth) <= 2 * 202:
            depth += 1
        alpha = convergent_value(slope, depth)
        if mechanical_prefix(alpha, alpha, 200, "lower") != characteristic_prefix(slope, 200):
            return CheckResult(14, "mechanical-oracle", False, f"{slope}")
    rng = random.Random(SEED + 14)
    for _ in range(50):
        den = rng.randint(2, 40)
        alpha = Fraction(rng.randint(0, den), den)
        rho = Fraction(rng.randint(0, den), rng.randint(1, 40))
        word = mechanical_prefix(alpha, rho, 240, rng.choice(("lower", "upper")))
        for n in range(1, 31):
            if complexity(word, n) > n + 1:
                return CheckResult(
                    14, "mechanical-oracle", False, f"alpha={alpha}, rho={rho}, n={n}"
                )
    return CheckResult(
        14,
        "mechanical-oracle",
        True,
        "5 convergent slopes exact to 200; 50 rational pairs stay below n+1",
    )


CHECKS: tuple[Callable[[], CheckResult], ...] = (
    check_01_ostrowski_round_trip,
    check_02_prefix_product,
    check_03_complexity,
    check_04_repetition_intervals,
    check_05_closed_form_oracle,
    check_06_intercept_bijection,
    check_07_duality,
    check_08_characteristic_factorizations,
    check_09_rauzy,
    check_10_torsion,
    check_11_self_complementary,
    check_12_b_factorization,
    check_13_dio_estimate,
    check_14_mechanical_oracle,
)


def run_check(number: int) -> CheckResult:
    if not 1 <= number <= len(CHECKS):
        raise ValueError(f"criteria are numbered 1..{len(CHECKS)}, got {number}")
    return CHECKS[number - 1]()


def run_all() -> tuple[CheckResult, ...]:
    return tuple(check() for check in CHECKS)
