"""
Alphabets and words
A word is an immutable tuple of symbol indices; the Alphabet owns the names
"""
from typing import Dict, Iterable, List, Sequence, Set, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from app.core.exceptions import DomainError, InputError

Word = Tuple[int, ...]

EMPTY: Word = ()


class Alphabet(BaseModel):
    """Ordered list of distinct letter names; index i names symbol i"""
    model_config = ConfigDict(frozen=True)

    letters: Tuple[str, ...] = Field(..., min_length=1, description="Letter names in index order")

    @field_validator("letters")
    def validate_letters(cls, v):
        """Letters must be distinct, non-empty and free of whitespace"""
        if len(set(v)) != len(v):
            raise ValueError(f"Duplicate letters in alphabet: {' '.join(v)}")
        for letter in v:
            if not letter or any(ch.isspace() for ch in letter):
                raise ValueError(f"Invalid letter name: {letter!r}")
        return v

    @property
    def size(self) -> int:
        return len(self.letters)

    @property
    def single_char(self) -> bool:
        """True when words can be printed without separators"""
        return all(len(letter) == 1 for letter in self.letters)

    def index(self, letter: str) -> int:
        try:
            return self._lookup()[letter]
        except KeyError:
            raise InputError(f"Letter {letter!r} not in alphabet {' '.join(self.letters)}")

    def _lookup(self) -> Dict[str, int]:
        return {letter: i for i, letter in enumerate(self.letters)}

    def parse(self, text: str) -> Word:
        """
        Parse a token string into a word

        Whitespace-separated tokens are always accepted; a token-free string is
        split per character when every letter is a single character.
        """
        text = text.strip()
        if not text:
            return EMPTY
        if any(ch.isspace() for ch in text) or not self.single_char:
            tokens: Sequence[str] = text.split()
        else:
            tokens = list(text)
        lookup = self._lookup()
        try:
            return tuple(lookup[token] for token in tokens)
        except KeyError as e:
            raise InputError(f"Symbol {e.args[0]!r} not in alphabet {' '.join(self.letters)}")

    def render(self, word: Iterable[int]) -> str:
        names = [self.letters[s] for s in word]
        return "".join(names) if self.single_char else " ".join(names)

    def validate_word(self, word: Sequence[int]) -> Word:
        for s in word:
            if not 0 <= s < self.size:
                raise InputError(f"Symbol index {s} outside alphabet of size {self.size}")
        return tuple(word)


BINARY = Alphabet(letters=("0", "1"))

# Index 0 is the letter "1", index 1 the letter "2"
ONE_TWO = Alphabet(letters=("1", "2"))


def binary(text: str) -> Word:
    """Shorthand used by constructors and tests: "0110" -> (0, 1, 1, 0)"""
    return BINARY.parse(text)


def reverse(w: Sequence[int]) -> Word:
    return tuple(reversed(w))


def is_palindrome(w: Sequence[int]) -> bool:
    n = len(w)
    return all(w[i] == w[n - 1 - i] for i in range(n // 2))


def concat(*words: Sequence[int]) -> Word:
    out: List[int] = []
    for w in words:
        out.extend(w)
    return tuple(out)


def to_bytes(w: Sequence[int]) -> bytes:
    """Pack a word into bytes for fast slicing and substring search"""
    if any(s > 255 for s in w):
        raise InputError("Words over more than 256 letters cannot be packed")
    return bytes(w)


def is_factor(u: Sequence[int], w: Sequence[int]) -> bool:
    """True when u occurs contiguously in w"""
    if not u:
        return True
    try:
        return to_bytes(u) in to_bytes(w)
    except InputError:
        n, m = len(w), len(u)
        u = tuple(u)
        return any(tuple(w[i:i + m]) == u for i in range(n - m + 1))


def factors(w: Sequence[int], k: int) -> Set[Word]:
    """Distinct length-k factors of w"""
    if k < 0:
        raise InputError("Factor length must be non-negative")
    w = tuple(w)
    return {w[i:i + k] for i in range(len(w) - k + 1)}


def run_lengths(w: Sequence[int]) -> List[Tuple[int, int]]:
    """Maximal runs as (symbol, length) pairs"""
    runs: List[Tuple[int, int]] = []
    for s in w:
        if runs and runs[-1][0] == s:
            runs[-1] = (s, runs[-1][1] + 1)
        else:
            runs.append((s, 1))
    return runs


def cinf_derivative(w: Sequence[int]) -> Word:
    """
    Run-length derivative of a word over {1, 2} (indices 0 and 1 of ONE_TWO)

    The first and last runs are dropped when they have length one.

    Raises:
        DomainError: if w is not differentiable (contains 111 or 222)
    """
    if any(s not in (0, 1) for s in w):
        raise DomainError("Derivative is defined on words over {1, 2} only")
    runs = [length for _, length in run_lengths(w)]
    if any(length > 2 for length in runs):
        raise DomainError(f"Word {ONE_TWO.render(w)} is not differentiable")
    if runs and runs[0] == 1:
        runs = runs[1:]
    if runs and runs[-1] == 1:
        runs = runs[:-1]
    return tuple(length - 1 for length in runs)


def is_differentiable(w: Sequence[int]) -> bool:
    return all(s in (0, 1) for s in w) and all(length <= 2 for _, length in run_lengths(w))
