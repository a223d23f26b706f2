"""
Palindrome counts of the run encoded word 00 1^r(1) 00 1^r(2) 00 ...
with r(i) = nu_2(i) + 1, the fixed point of 0 -> 001, 1 -> 1

A factor of length at most k_max never sees a run longer than k_max, and it
only spans runs within k_max // 6 + 2 of its centre. A window of that many
runs on each side is determined by its index modulo 2^t (2^t larger than the
window) together with the valuation of the one multiple of 2^t it may hold.
Enumerating every centre of every such window gives pal(k) for all k <= k_max
without building a prefix long enough to contain 1^k_max.
"""
from collections import Counter
from functools import partial
from typing import Callable, Dict, List, Optional, Tuple

from app.core.exceptions import InputError
from app.utils.logger import get_logger
from app.words.core import Word

logger = get_logger(__name__)

# (symbol, repeat count); None once the word has no more runs on that side
Segment = Optional[Tuple[int, int]]
RunAt = Callable[[int], Optional[int]]


def valuation(n: int) -> int:
    """2-adic valuation of n > 0"""
    return (n & -n).bit_length() - 1


def ruler_run(i: int) -> int:
    return valuation(i) + 1


def ruler_run_word(length: int) -> Word:
    """First `length` symbols of the run encoded word"""
    out: List[int] = []
    i = 0
    while len(out) < length:
        i += 1
        out.extend((0, 0))
        out.extend([1] * ruler_run(i))
    return tuple(out[:length])


class _PrefixTrie:
    """Distinct prefixes of the inserted words, by length"""

    def __init__(self) -> None:
        self.root: Dict[int, dict] = {}
        self.by_length: Counter = Counter()

    def insert(self, word: Word) -> None:
        node = self.root
        for depth, symbol in enumerate(word, 1):
            if symbol not in node:
                node[symbol] = {}
                self.by_length[depth] += 1
            node = node[symbol]


def _ones(run_at: RunAt, d: int) -> Segment:
    value = run_at(d)
    return None if value is None else (1, value)


def _around_run(run_at: RunAt, sign: int, i: int) -> Segment:
    """Pair, run, pair, run ... moving away from the middle of run 0"""
    return (0, 2) if i % 2 == 0 else _ones(run_at, sign * ((i + 1) // 2))


def _around_pair(run_at: RunAt, sign: int, i: int) -> Segment:
    """Moving away from the gap inside the pair that precedes run 0"""
    if i == 0:
        return (0, 1)
    if i % 2 == 0:
        return (0, 2)
    return _ones(run_at, (i - 1) // 2 if sign > 0 else -((i + 1) // 2))


def _common_half(left: Callable[[int], Segment], right: Callable[[int], Segment], limit: int) -> Word:
    half: List[int] = []
    i = 0
    while len(half) < limit:
        a, b = left(i), right(i)
        i += 1
        if a is None or b is None or a[0] != b[0]:
            break
        half.extend([a[0]] * min(a[1], b[1], limit - len(half)))
        if a[1] != b[1]:
            break
    return tuple(half)


class _CentreCollector:
    """
    Half palindromes around the two kinds of centres that can carry an
    even or odd palindrome containing a 0: the middle of a run of ones
    (keyed by the run length) and the gap between the two zeros of a pair.
    """

    def __init__(self, k_max: int) -> None:
        self.k_max = k_max
        self.longest_run = 0
        self.between_zeros = _PrefixTrie()
        self.in_run: Dict[int, _PrefixTrie] = {}

    def visit(self, run_at: RunAt) -> None:
        r = run_at(0)
        self.longest_run = max(self.longest_run, r)

        if r < self.k_max:
            half = _common_half(
                partial(_around_run, run_at, -1), partial(_around_run, run_at, 1), (self.k_max - r) // 2
            )
            self.in_run.setdefault(r, _PrefixTrie()).insert(half)
        self.between_zeros.insert(
            _common_half(partial(_around_pair, run_at, -1), partial(_around_pair, run_at, 1), self.k_max // 2)
        )

    def counts(self) -> List[int]:
        counts = [1] + [0] * self.k_max
        counts[1] += 1  # the letter 0
        for n in range(1, min(self.longest_run, self.k_max) + 1):
            counts[n] += 1  # 1^n
        for depth, number in self.between_zeros.by_length.items():
            counts[2 * depth] += number
        for r, trie in self.in_run.items():
            for depth, number in trie.by_length.items():
                counts[r + 2 * depth] += number
        return counts


def _real_run(j: int, k_max: int, d: int) -> Optional[int]:
    return None if j + d <= 0 else min(ruler_run(j + d), k_max)


def _generic_run(residue: int, period: int, large: int, k_max: int, d: int) -> int:
    n = (residue + d) % period
    return large if n == 0 else min(ruler_run(n), k_max)


def ruler_palindrome_counts(k_max: int) -> List[int]:
    """pal(0..k_max) of the run encoded word, pal(0) = 1"""
    if k_max < 1:
        raise InputError(f"k_max must be positive, got {k_max}")
    reach = k_max // 6 + 2
    t = (2 * reach).bit_length()
    period = 1 << t
    collector = _CentreCollector(k_max)

    # runs near the start, where the left side ends
    for j in range(1, reach + 2):
        collector.visit(partial(_real_run, j, k_max))

    # runs far from the start: residue mod 2^t, plus the valuation of the
    # single multiple of 2^t in the window, if there is one
    for residue in range(period):
        holds_multiple = any((residue + d) % period == 0 for d in range(-reach, reach + 1))
        valuations = range(t, max(k_max, t + 1)) if holds_multiple else (t,)
        for v in valuations:
            collector.visit(partial(_generic_run, residue, period, min(v + 1, k_max), k_max))

    counts = collector.counts()
    logger.debug("Ruler palindrome counts", k_max=k_max, windows=reach + 1, period=period)
    return counts
