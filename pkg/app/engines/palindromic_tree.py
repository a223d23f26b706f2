"""
Palindromic tree (eertree)
One node per distinct palindromic factor, built online in amortized linear time
"""
from typing import Dict, Iterator, List, Sequence, Tuple

from app.words.core import Word

IMAGINARY = 0  # length -1 root
EMPTY_NODE = 1  # length 0 root


class PalindromicTree:
    """
    Nodes are stored in parallel lists; node i has length[i], suffix link
    link[i], outgoing edges edges[i] (symbol -> node of a w a) and the end
    position of its first occurrence first_end[i].
    """

    def __init__(self, word: Sequence[int] = ()):
        self.length: List[int] = [-1, 0]
        self.link: List[int] = [IMAGINARY, IMAGINARY]
        self.edges: List[Dict[int, int]] = [{}, {}]
        self.first_end: List[int] = [-1, -1]
        self.text: List[int] = []
        self._last = EMPTY_NODE
        for symbol in word:
            self.add(symbol)
        self.check_node_bound()

    def __len__(self) -> int:
        """Number of distinct non-empty palindromic factors"""
        return len(self.length) - 2

    def _suffix_for(self, node: int, i: int, symbol: int) -> int:
        text, length, link = self.text, self.length, self.link
        while True:
            start = i - 1 - length[node]
            if start >= 0 and text[start] == symbol:
                return node
            node = link[node]

    def add(self, symbol: int) -> bool:
        """Append one symbol; True when a new palindrome appeared"""
        i = len(self.text)
        self.text.append(symbol)
        parent = self._suffix_for(self._last, i, symbol)
        existing = self.edges[parent].get(symbol)
        if existing is not None:
            self._last = existing
            return False

        node = len(self.length)
        size = self.length[parent] + 2
        if size == 1:
            link = EMPTY_NODE
        else:
            link = self.edges[self._suffix_for(self.link[parent], i, symbol)][symbol]
        self.length.append(size)
        self.link.append(link)
        self.edges.append({})
        self.first_end.append(i)
        self.edges[parent][symbol] = node
        self._last = node
        return True

    def check_node_bound(self) -> None:
        """A word of length L has at most L + 1 distinct palindromic factors, empty word included"""
        if len(self) + 1 > len(self.text) + 1:
            raise RuntimeError(
                f"Palindromic tree has {len(self) + 1} palindromes for a word of length {len(self.text)}"
            )

    def nodes(self) -> Iterator[int]:
        return iter(range(2, len(self.length)))

    def word(self, node: int) -> Word:
        end = self.first_end[node]
        return tuple(self.text[end - self.length[node] + 1:end + 1])

    def start(self, node: int) -> int:
        """Leftmost occurrence"""
        return self.first_end[node] - self.length[node] + 1

    def counts_by_length(self, k_max: int) -> List[int]:
        """counts[k] = number of distinct palindromes of length k; counts[0] = 1"""
        counts = [0] * (k_max + 1)
        counts[0] = 1
        for size in self.length[2:]:
            if size <= k_max:
                counts[size] += 1
        return counts

    def palindromes(self, k_max: int) -> List[Tuple[Word, int]]:
        """(palindrome, leftmost start) for every length 1..k_max, sorted by (length, word)"""
        found = [(self.word(node), self.start(node)) for node in self.nodes() if self.length[node] <= k_max]
        found.sort(key=lambda item: (len(item[0]), item[0]))
        return found

    def unextended(self, len_max: int, ending_before: int) -> List[Word]:
        """Palindromes w with |w| <= len_max, first seen before a position, such that no a w a occurs"""
        found = [
            self.word(node) for node in self.nodes()
            if not self.edges[node]
            and self.length[node] <= len_max
            and self.first_end[node] < ending_before
        ]
        found.sort(key=lambda w: (len(w), w))
        return found
