"""
Suffix automaton over a small integer alphabet
States in flat arrays; transitions in one array indexed state * sigma + symbol
"""
from array import array
from typing import List, Optional, Sequence

import numpy as np

from app.core.exceptions import InputError


class SuffixAutomaton:
    """
    Minimal automaton of all factors of a word

    Every state v != 0 stands for the factors of lengths
    length[link[v]] + 1 .. length[v], each distinct factor exactly once.
    """

    def __init__(self, word: Sequence[int], sigma: Optional[int] = None):
        word = list(word)
        if sigma is None:
            sigma = max(word) + 1 if word else 1
        if any(not 0 <= s < sigma for s in word):
            raise InputError(f"Symbols must lie in 0..{sigma - 1}")
        self.sigma = sigma
        capacity = 2 * len(word) + 2
        self.length = array("l", [0]) * capacity
        self.link = array("l", [-1]) * capacity
        self.next = array("l", [-1]) * (capacity * sigma)
        self.size = 1
        self._last = 0
        for symbol in word:
            self.extend(symbol)

    def extend(self, symbol: int) -> None:
        sigma, length, link, nxt = self.sigma, self.length, self.link, self.next
        current = self.size
        self.size += 1
        length[current] = length[self._last] + 1
        p = self._last
        while p != -1 and nxt[p * sigma + symbol] == -1:
            nxt[p * sigma + symbol] = current
            p = link[p]
        if p == -1:
            link[current] = 0
        else:
            q = nxt[p * sigma + symbol]
            if length[p] + 1 == length[q]:
                link[current] = q
            else:
                clone = self.size
                self.size += 1
                length[clone] = length[p] + 1
                nxt[clone * sigma:(clone + 1) * sigma] = nxt[q * sigma:(q + 1) * sigma]
                link[clone] = link[q]
                while p != -1 and nxt[p * sigma + symbol] == q:
                    nxt[p * sigma + symbol] = clone
                    p = link[p]
                link[q] = link[current] = clone
        self._last = current

    def contains(self, factor: Sequence[int]) -> bool:
        state = 0
        for symbol in factor:
            if not 0 <= symbol < self.sigma:
                return False
            state = self.next[state * self.sigma + symbol]
            if state == -1:
                return False
        return True

    def factor_counts(self, k_max: int) -> List[int]:
        """counts[k] = number of distinct factors of length k, counts[0] = 1"""
        lengths = np.frombuffer(self.length, dtype=np.int64 if self.length.itemsize == 8 else np.int32)
        links = np.frombuffer(self.link, dtype=lengths.dtype)
        states = np.arange(1, self.size)
        high = np.minimum(lengths[states], k_max)
        low = lengths[links[states]] + 1
        keep = low <= high
        delta = np.zeros(k_max + 2, dtype=np.int64)
        np.add.at(delta, low[keep], 1)
        np.add.at(delta, high[keep] + 1, -1)
        counts = np.cumsum(delta)[:k_max + 1]
        counts[0] = 1
        return [int(c) for c in counts]
