"""Parity-word block streams and congruence identities on continuants.

A small block inventory scans any binary word with enough ones into a
unique block stream.  Scanning the parity word of the partial quotients
cuts the continuant ladder at the block boundaries; each cut difference
is even and its half glues into a digit window that is equivalent to its
own reversal dual.  Reducing the continuant pair mod N instead drives a
finite state walk whose repeated states certify divisibility identities
q_{n+k} = q_n mod N whose quotients have all their digits strictly
between the two ranks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DepthError, ParityError, RangeError
from .intercept import AlphaNumber, complement, equivalent
from .ostrowski import RelaxedCoefficients, encode, normalize
from .slope import Slope, continuants
from .words import characteristic_prefix, factor_set, is_palindrome


class BWordSet:
    """The block inventory {00, 01} and {1 0^k 1 x : k >= 0, x a letter}.

    No block is a prefix of another, so a scanner can commit to a block
    as soon as it has seen one.
    """

    def __contains__(self, word: str) -> bool:
        if word in ("00", "01"):
            return True
        if len(word) < 3 or word[0] != "1" or word[-2] != "1":
            return False
        return word[-1] in "01" and set(word[1:-2]) <= {"0"}

    def next_block(self, text: str, pos: int) -> int | None:
        """End index of the block starting at pos; None if text runs out."""
        if text[pos] == "0":
            end = pos + 2
            return end if end <= len(text) else None
        one = text.find("1", pos + 1)
        if one < 0 or one + 2 > len(text):
            return None
        return one + 2


B_BLOCKS = BWordSet()


@dataclass(frozen=True)
class BFactorization:
    blocks: tuple[str, ...]
    leftover: str

    @property
    def complete(self) -> bool:
        return not self.leftover

    @property
    def failure_at(self) -> int | None:
        """Position where the unmatched tail starts, None when complete."""
        if self.complete:
            return None
        return sum(len(b) for b in self.blocks)


def b_factorize(u: str) -> BFactorization:
    """Greedy block scan; an unmatched tail is reported, not raised.

    The inventory is prefix-free, so the greedy scan finds the unique
    factorization whenever one exists.  A leftover is always extendable
    to a block, so on prefixes of infinite words the certified blocks
    are final.
    """
    blocks: list[str] = []
    pos = 0
    while pos < len(u):
        end = B_BLOCKS.next_block(u, pos)
        if end is None:
            break
        blocks.append(u[pos:end])
        pos = end
    return BFactorization(tuple(blocks), u[pos:])


@dataclass(frozen=True)
class ParityWord:
    """Partial quotients reduced mod a fixed modulus, one letter each."""

    letters: tuple[int, ...]
    modulus: int

    def __len__(self) -> int:
        return len(self.letters)

    def text(self) -> str:
        if self.modulus > 10:
            raise ValueError("single-character rendering needs modulus <= 10")
        return "".join(str(letter) for letter in self.letters)


def parity_word(slope: Slope, depth: int, modulus: int = 2) -> ParityWord:
    if modulus < 2:
        raise RangeError(f"modulus must be >= 2, got {modulus}")
    if depth < 1:
        raise RangeError(f"depth must be >= 1, got {depth}")
    return ParityWord(
        tuple(slope.quotient(i) % modulus for i in range(1, depth + 1)), modulus
    )


@dataclass(frozen=True)
class IndexedFactorization:
    """A block stream covering the word after `offset` skipped letters."""

    offset: int
    blocks: tuple[str, ...]

    def boundaries(self) -> tuple[int, ...]:
        # a block starting at 1-based letter position p cuts the continuant
        # ladder at index p - 2; one trailing boundary closes the last block
        out = []
        pos = self.offset
        for block in self.blocks:
            out.append(pos - 1)
            pos += len(block)
        out.append(pos - 1)
        return tuple(out)


def suffix_classes(
    y: str,
) -> tuple[IndexedFactorization, IndexedFactorization, IndexedFactorization]:
    """The three inequivalent block streams of y, read off y, 1y, 11y.

    Exactly one of u, 1u, 11u scans completely for every finite u, which
    is what makes the three streams pairwise inequivalent.
    """
    if y.count("1") < 2:
        raise ParityError("need at least two odd letters in the window")
    base = b_factorize(y)
    one = b_factorize("1" + y)
    two = b_factorize("11" + y)
    if min(len(base.blocks), len(one.blocks), len(two.blocks)) < 2:
        raise ParityError("window too short to certify the three block streams")
    return (
        IndexedFactorization(0, base.blocks),
        IndexedFactorization(len(one.blocks[0]) - 1, one.blocks[1:]),
        IndexedFactorization(len(two.blocks[0]) - 2, two.blocks[1:]),
    )


def _halved_window(slope: Slope, depth: int, indexed: IndexedFactorization) -> AlphaNumber:
    """Glue the halved ladder differences of one block stream into digits.

    Block at boundary pair (d, d') contributes relaxed coefficients on
    positions [d+1, d'-1]; the windows are disjoint, one global normalize
    settles everything, and the telescoped value pins the construction.
    """
    bounds = indexed.boundaries()
    pairs = [
        (bounds[j], bounds[j + 1], block)
        for j, block in enumerate(indexed.blocks)
        if bounds[j] >= 0 and bounds[j + 1] <= depth - 1
    ]
    if len(pairs) < 2:
        raise DepthError("window too shallow to glue at least two blocks")
    coeffs = [0] * depth
    for d, _, block in pairs:
        if block in ("00", "01"):
            a = slope.quotient(d + 2)
            assert a % 2 == 0
            coeffs[d + 1] += a // 2
        else:
            k = len(block) - 3
            lo, hi = slope.quotient(d + 2), slope.quotient(d + 3 + k)
            assert lo % 2 == 1 and hi % 2 == 1
            coeffs[d + 1] += (lo + 1) // 2
            for l in range(1, k + 1):
                middle = slope.quotient(d + 2 + l)
                assert middle % 2 == 0
                coeffs[d + 1 + l] += middle // 2
            coeffs[d + 2 + k] += (hi - 1) // 2
    table = continuants(slope, depth)
    total = sum(c * table.q(i) for i, c in enumerate(coeffs))
    assert 2 * total == table.q(pairs[-1][1]) - table.q(pairs[0][0])
    digits = list(normalize(RelaxedCoefficients(0, tuple(coeffs)), slope).digits)
    assert all(b == 0 for b in digits[depth:])
    digits = digits[:depth] + [0] * (depth - len(digits))
    return AlphaNumber(tuple(digits), slope)


def self_complementary(slope: Slope, depth: int) -> tuple[AlphaNumber, ...]:
    """The three classes of windows equivalent to their reversal dual.

    Requires quotient parities that are not eventually even on the window;
    the eventually-even regime is covered by even_family instead.
    """
    y = parity_word(slope, depth).text()
    if y.count("1") < 4:
        raise ParityError("parities look eventually even here; use even_family")
    classes = tuple(
        _halved_window(slope, depth, indexed) for indexed in suffix_classes(y)
    )
    for rho in classes:
        assert equivalent(rho, complement(rho)).equivalent
    for i in range(3):
        for j in range(i + 1, 3):
            assert not equivalent(classes[i], classes[j]).equivalent
    return classes


def even_family(slope: Slope, depth: int) -> tuple[AlphaNumber, ...]:
    """The three self-dual classes when quotients are eventually all even.

    Built from an even start index 2*k0 through the window; every digit is
    half the quotient above it, on even positions, odd positions, or all.
    """
    start = depth + 1
    i = depth
    while i >= 1 and slope.quotient(i) % 2 == 0:
        start = i
        i -= 1
    if depth - start < 4:
        raise ParityError("quotients are not eventually even on this window")
    k0 = (start + 1) // 2
    s0, s1, s2 = [0] * depth, [0] * depth, [0] * depth
    for pos in range(2 * k0, depth):
        if pos % 2 == 0:
            s0[pos] = slope.quotient(pos + 1) // 2
        else:
            s1[pos] = slope.quotient(pos + 1) // 2
        s2[pos] = slope.quotient(pos + 1) // 2
    classes = tuple(AlphaNumber(tuple(d), slope) for d in (s0, s1, s2))
    for rho in classes:
        assert equivalent(rho, complement(rho)).equivalent
    for i in range(3):
        for j in range(i + 1, 3):
            assert not equivalent(classes[i], classes[j]).equivalent
    return classes


@dataclass(frozen=True)
class ComplementFamilyReport:
    ok: bool
    even_ok: bool
    odd_ok: bool
    even_window: tuple[int, int]
    odd_window: tuple[int, int]


def complement_family(M, slope: Slope, depth: int) -> ComplementFamilyReport:
    """Digitwise check of the dual formulas for gap-indexed full digits.

    The family on even positions 2i (i in M) carries full quotients; its
    dual is the family on the complementary index set shifted by q_3 - 2.
    The odd-position family pairs with q_4 - 2 the same way.
    """
    M = frozenset(M)
    if not M or min(M) < 2:
        raise RangeError("family indices start at 2")
    table = continuants(slope, depth)
    results = []
    windows = []
    for parity in (0, 1):
        digits = [0] * depth
        inside = [i for i in M if 2 * i + parity <= depth - 1]
        for i in inside:
            digits[2 * i + parity] = slope.quotient(2 * i + parity + 1)
        outside = [
            i for i in range(2, (depth - 1 - parity) // 2 + 1) if i not in M
        ]
        if len(inside) < 2 or len(outside) < 2:
            raise DepthError("window too small for both index families")
        rho = AlphaNumber(tuple(digits), slope)
        comp = complement(rho)
        value = table.q(3 + parity) - 2 + sum(
            slope.quotient(2 * i + parity + 1) * table.q(2 * i + parity)
            for i in outside
            if 2 * i + parity <= comp.depth - 1
        )
        expected = encode(value, slope, comp.depth)
        lo, hi = 1, comp.depth - 3
        if hi - lo < 4:
            raise DepthError("window too small to compare the dual family")
        results.append(comp.digits[lo:hi] == expected.digits[lo:hi])
        windows.append((lo, hi))
    return ComplementFamilyReport(
        ok=all(results),
        even_ok=results[0],
        odd_ok=results[1],
        even_window=windows[0],
        odd_window=windows[1],
    )


# ------------------------------------------------------------- mod-N machine


def _mul(x, y, modulus: int):
    return (
        (
            (x[0][0] * y[0][0] + x[0][1] * y[1][0]) % modulus,
            (x[0][0] * y[0][1] + x[0][1] * y[1][1]) % modulus,
        ),
        (
            (x[1][0] * y[0][0] + x[1][1] * y[1][0]) % modulus,
            (x[1][0] * y[0][1] + x[1][1] * y[1][1]) % modulus,
        ),
    )


def generator_matrix(a: int, modulus: int):
    """The ladder step [[a, 1], [1, 0]] reduced mod the modulus."""
    return ((a % modulus, 1), (1, 0))


@dataclass(frozen=True)
class AutomatonLog:
    """Left-to-right products of quotient generators applied to (1, 0).

    states[n] is the column after n letters; every state from n0 on is
    one that keeps recurring, which is what the congruence search needs.
    """

    modulus: int
    states: tuple[tuple[int, int], ...]
    recurring: frozenset[tuple[int, int]]
    n0: int
    preperiod: int
    period: int


def _phase(slope: Slope, i: int) -> int:
    """Position of letter i in the stored quotients, folding the period."""
    if slope.period is None:
        return i
    start, length = slope.period
    if i <= start:
        return i
    return start + (i - 1 - start) % length


def _matrix_walk(slope: Slope, modulus: int, depth: int):
    mats = [((1, 0), (0, 1))]
    states = [(1, 0)]
    for n in range(depth):
        step = generator_matrix(slope.quotient(n + 1), modulus)
        mats.append(_mul(mats[-1], step, modulus))
        states.append((mats[-1][0][0], mats[-1][1][0]))
    return states, mats


def automaton_states(slope: Slope, modulus: int, depth: int) -> AutomatonLog:
    """Walk the matrix product along the quotient word and log the states.

    The pair (matrix, quotient phase) is Markov, so its first repeat closes
    the cycle; states seen inside the cycle are exactly the recurring ones.
    """
    if modulus < 2:
        raise RangeError(f"modulus must be >= 2, got {modulus}")
    if depth < 1:
        raise RangeError(f"depth must be >= 1, got {depth}")
    states, mats = _matrix_walk(slope, modulus, depth)
    seen: dict = {}
    cycle = None
    for n in range(depth + 1):
        key = (mats[n], _phase(slope, n + 1))
        if key in seen:
            cycle = (seen[key], n)
            break
        seen[key] = n
    if cycle is None:
        raise DepthError("window too shallow to close the state cycle")
    first, again = cycle
    recurring = frozenset(states[n] for n in range(first, again))
    n0 = first
    while n0 > 0 and states[n0 - 1] in recurring:
        n0 -= 1
    return AutomatonLog(
        modulus=modulus,
        states=tuple(states),
        recurring=recurring,
        n0=n0,
        preperiod=first,
        period=again - first,
    )


@dataclass(frozen=True)
class TorsionHit:
    found: bool
    modulus: int
    n: int
    k: int | None
    quotient_digits: tuple[int, ...] | None
    support: frozenset[int] | None
    state_trace: tuple[tuple[int, int], ...]
    reason: str = ""


def torsion_search(
    slope: Slope, modulus: int, n: int | None = None, k_max: int = 40
) -> TorsionHit:
    """Smallest k <= k_max with modulus | q_{n+k} - q_n, digits inside ]n, n+k[.

    When n is omitted, the first rank from which only recurring automaton
    states appear is used.  The state walk guides; exact integer division
    and digit encoding certify.  A miss is a window verdict, not a proof.
    """
    if k_max < 2:
        raise RangeError(f"k_max must be >= 2, got {k_max}")
    if n is None:
        n = automaton_states(slope, modulus, max(80, 8 * modulus * modulus)).n0
    if n < 0:
        raise RangeError(f"n must be >= 0, got {n}")
    top = n + k_max + 2
    states, _ = _matrix_walk(slope, modulus, top)
    table = continuants(slope, top)
    for k in range(2, k_max + 1):
        difference = table.q(n + k) - table.q(n)
        if difference % modulus:
            continue
        digits = encode(difference // modulus, slope, top)
        supp = digits.support()
        if all(n < s < n + k for s in supp):
            return TorsionHit(
                found=True,
                modulus=modulus,
                n=n,
                k=k,
                quotient_digits=digits.digits,
                support=supp,
                state_trace=tuple(states[n : n + k + 1]),
            )
    return TorsionHit(
        found=False,
        modulus=modulus,
        n=n,
        k=None,
        quotient_digits=None,
        support=None,
        state_trace=tuple(states[n : n + k_max + 1]),
        reason=f"no admissible k <= {k_max} from n = {n}",
    )


def palindromic_center_word(slope: Slope, half_length: int) -> str:
    """Right half of the unique even-length palindromic factor, stabilized.

    The halves of the palindromic factors of the characteristic word nest
    into one infinite word; its window is a reversal-dual fixed class, so
    this is an independent route to one self-complementary word.
    """
    if half_length < 1:
        raise RangeError(f"half_length must be >= 1, got {half_length}")
    checkpoints = sorted({max(1, half_length // 4), half_length // 2, half_length})
    length = 4 * half_length + 8
    word = ""
    for half in checkpoints:
        if half < 1:
            continue
        while True:
            prefix = characteristic_prefix(slope, length)
            factors = factor_set(prefix, 2 * half)
            if len(factors) >= 2 * half + 1:
                break
            length *= 2
        palindromes = [f for f in factors if is_palindrome(f)]
        assert len(palindromes) == 1, "even lengths carry a single palindrome"
        right = palindromes[0][half:]
        assert right.startswith(word), "palindrome halves nest as prefixes"
        word = right
    return word
