"""
Sequence sources
Deterministic producers of arbitrarily long prefixes of infinite sequences
"""
import threading
from abc import ABC, abstractmethod
from typing import Dict, Iterator, List, Mapping, Optional, Sequence

import numpy as np

from app.core.config import settings
from app.core.exceptions import InputError, ResourceError
from app.sequences.streams import ParameterStream
from app.utils.logger import get_logger
from app.words.core import BINARY, ONE_TWO, Alphabet, Word, reverse
from app.words.morphism import Morphism, fixed_point_prefix

logger = get_logger(__name__)


class SequenceSource(ABC):
    """
    One infinite sequence, produced prefix by prefix

    prefix(n) is always a prefix of prefix(n + 1). The longest generated
    prefix is memoized behind a lock, so one instance can be shared by
    threads.
    """

    kind: str = "abstract"

    def __init__(self, name: str, alphabet: Alphabet, parameters: Optional[Mapping[str, str]] = None):
        self.name = name
        self.alphabet = alphabet
        self.parameters: Dict[str, str] = dict(parameters or {})
        self._cache: Word = ()
        self._lock = threading.Lock()

    def prefix(self, n: int) -> Word:
        """
        First n symbols

        Raises:
            InputError: negative n
            ResourceError: n above GENERATOR_MAX_LENGTH
        """
        if n < 0:
            raise InputError("Prefix length must be non-negative")
        cap = settings.GENERATOR_MAX_LENGTH
        if n > cap:
            raise ResourceError(f"{self.name}: prefix {n} exceeds generator cap {cap}")
        with self._lock:
            if len(self._cache) < n:
                target = min(max(n, 2 * len(self._cache)), cap)
                generated = tuple(self._generate(target))
                if len(generated) < n:
                    raise RuntimeError(f"{self.name}: generator returned {len(generated)} < {n} symbols")
                if generated[:len(self._cache)] != self._cache:
                    raise RuntimeError(f"{self.name}: generator is not extension-consistent")
                self._cache = generated
                logger.debug("Extended prefix cache", source=self.name, length=len(generated))
            return self._cache[:n]

    @abstractmethod
    def _generate(self, n: int) -> Sequence[int]:
        """At least n symbols from the start of the sequence"""

    def describe(self) -> str:
        if not self.parameters:
            return self.name
        params = ", ".join(f"{k}={v}" for k, v in sorted(self.parameters.items()))
        return f"{self.name} ({params})"

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.describe()}>"


class MorphicSource(SequenceSource):
    """Fixed point of a prolongable morphism"""

    kind = "morphic"

    def __init__(self, name: str, morphism: Morphism, seed: int = 0):
        super().__init__(name, morphism.alphabet, {
            "morphism": morphism.describe(),
            "seed": morphism.alphabet.letters[seed]
        })
        self.morphism = morphism
        self.seed = seed
        # fail fast on non-prolongable seeds
        fixed_point_prefix(morphism, seed, 2)

    def _generate(self, n: int) -> Word:
        return fixed_point_prefix(self.morphism, self.seed, n)


class ImageSource(SequenceSource):
    """Pointwise image under a word-valued letter map"""

    kind = "derived-transform"

    def __init__(self, name: str, base: SequenceSource, letter_map: Mapping[int, Word], alphabet: Alphabet):
        missing = [base.alphabet.letters[a] for a in range(base.alphabet.size) if a not in letter_map]
        if missing:
            raise InputError(f"Letter map is not total, missing: {' '.join(missing)}")
        if any(len(letter_map[a]) == 0 for a in range(base.alphabet.size)):
            raise InputError("Letter map must not erase letters")
        for image in letter_map.values():
            alphabet.validate_word(image)
        super().__init__(name, alphabet, {
            "base": base.name,
            "map": ", ".join(
                f"{base.alphabet.letters[a]}->{alphabet.render(letter_map[a])}"
                for a in range(base.alphabet.size)
            )
        })
        self.base = base
        self.letter_map = {a: tuple(letter_map[a]) for a in range(base.alphabet.size)}

    def _generate(self, n: int) -> Word:
        out: List[int] = []
        for symbol in self.base.prefix(n):
            out.extend(self.letter_map[symbol])
            if len(out) >= n:
                break
        return tuple(out[:n])


class DifferenceSource(SequenceSource):
    """(s_{n+1} - s_n) mod 2 of a binary sequence"""

    kind = "derived-transform"

    def __init__(self, name: str, base: SequenceSource):
        if base.alphabet.size != 2:
            raise InputError(f"difference_mod2 needs a binary source, {base.name} is not")
        super().__init__(name, BINARY, {"base": base.name})
        self.base = base

    def _generate(self, n: int) -> Word:
        values = np.frombuffer(bytes(self.base.prefix(n + 1)), dtype=np.uint8)
        return tuple(int(v) for v in np.diff(values.astype(np.int8)) % 2)


class RoteSource(SequenceSource):
    """w_0 given, w_{n+1} = w_n + beta_n mod 2"""

    kind = "derived-transform"

    def __init__(self, name: str, beta: SequenceSource, w0: int = 0):
        if beta.alphabet.size != 2:
            raise InputError(f"Rote construction needs a binary difference sequence, {beta.name} is not")
        if w0 not in (0, 1):
            raise InputError("w0 must be 0 or 1")
        super().__init__(name, BINARY, {"beta": beta.name, "w0": str(w0)})
        self.beta = beta
        self.w0 = w0

    def _generate(self, n: int) -> Word:
        if n == 0:
            return ()
        beta = np.frombuffer(bytes(self.beta.prefix(n - 1)), dtype=np.uint8).astype(np.int64)
        tail = (self.w0 + np.cumsum(beta)) % 2
        return (self.w0,) + tuple(int(v) for v in tail)


class SturmianSource(SequenceSource):
    """
    Characteristic Sturmian word from a continued-fraction stream a_1, a_2, ...

    Standard words s_{-1} = 1, s_0 = 0, s_k = s_{k-1}^{a_k} s_{k-2}; the slope is
    [0; a_1 + 1, a_2, a_3, ...], so (1) gives the Fibonacci word.
    """

    kind = "rotation"

    def __init__(self, name: str, cf: ParameterStream):
        super().__init__(name, BINARY, {"cf": cf.describe()})
        self.cf = cf

    def _generate(self, n: int) -> Word:
        older: Word = (1,)
        current: Word = (0,)
        k = 0
        while len(current) < n:
            try:
                a = self.cf.term(k)
            except InputError:
                raise InputError(
                    f"Continued fraction {self.cf.describe()} too short for a prefix of length {n}"
                )
            if a * len(current) >= n:
                reps = -(-n // len(current))
                return (current * reps)[:n]
            older, current = current, current * a + older
            k += 1
        return current[:n]


class PaperfoldingSource(SequenceSource):
    """u_n = (j + i_m) mod 2 for n = 2^m (2j + 1), indexed from n = 1"""

    kind = "paperfolding"

    def __init__(self, name: str, instructions: ParameterStream):
        super().__init__(name, BINARY, {"instructions": instructions.describe()})
        self.instructions = instructions

    def _generate(self, n: int) -> Word:
        return tuple(int(v) for v in paperfolding_values(self.instructions, n))


class RudinShapiroSource(SequenceSource):
    """v_0 = 0, v_n = u_1 + ... + u_n mod 2 over a paperfolding sequence u"""

    kind = "paperfolding"

    def __init__(self, name: str, instructions: ParameterStream):
        super().__init__(name, BINARY, {"instructions": instructions.describe()})
        self.instructions = instructions

    def _generate(self, n: int) -> Word:
        if n == 0:
            return ()
        folds = paperfolding_values(self.instructions, n - 1)
        sums = np.cumsum(folds) % 2
        return (0,) + tuple(int(v) for v in sums)


class KolakoskiSource(SequenceSource):
    """Self-reading run-length sequence 2 2 1 1 2 1 2 2 1 ..., symbols stored over ONE_TWO"""

    kind = "self-runlength"

    def __init__(self, name: str = "kolakoski"):
        super().__init__(name, ONE_TWO, {"start": "2"})

    def _generate(self, n: int) -> Word:
        seq = [2, 2]
        r = 1
        while len(seq) < n:
            symbol = 1 if r % 2 else 2
            seq.extend([symbol] * seq[r])
            r += 1
        return tuple(v - 1 for v in seq[:n])


class ChampernowneSource(SequenceSource):
    """Binary numerals of 0, 1, 2, ... concatenated"""

    kind = "explicit-recurrence"

    def __init__(self, name: str = "champernowne-binary"):
        super().__init__(name, BINARY)

    def _generate(self, n: int) -> Word:
        out: List[int] = []
        i = 0
        while len(out) < n:
            out.extend(int(ch) for ch in format(i, "b"))
            i += 1
        return tuple(out[:n])


class PeriodicSource(SequenceSource):
    """www..."""

    kind = "explicit-recurrence"

    def __init__(self, name: str, word: Word, alphabet: Alphabet = BINARY):
        word = alphabet.validate_word(word)
        if not word:
            raise InputError("A periodic source needs a non-empty word")
        super().__init__(name, alphabet, {"word": alphabet.render(word)})
        self.word = word

    def _generate(self, n: int) -> Word:
        reps = -(-n // len(self.word))
        return (self.word * reps)[:n]


def remcor_blocks(j: int, w_j: Word) -> Iterator[Word]:
    """
    Blocks x_1 ... x_N with N = 2^(2^j - 1) extending w_j to w_{j+1}

    x_i = 0^(2^(2^(j+1)) + 2 - 4i) reverse(w_j) 0^(2^(2^(j+1)) - 4i) w_j

    Raises:
        ResourceError: a single block longer than GENERATOR_MAX_LENGTH
    """
    big = 1 << (1 << (j + 1))
    count = 1 << ((1 << j) - 1)
    cap = settings.GENERATOR_MAX_LENGTH
    mirrored = reverse(w_j)
    for i in range(1, count + 1):
        size = 2 * big + 2 - 8 * i + 2 * len(w_j)
        if size > cap:
            raise ResourceError(f"remcor block of {size} symbols exceeds generator cap {cap}")
        yield (0,) * (big + 2 - 4 * i) + mirrored + (0,) * (big - 4 * i) + w_j


def remcor_length(j: int) -> int:
    """|w_j| from |w_{j+1}| = |w_j| + sum_i (2 * 2^(2^(j+1)) + 2 - 8i + 2|w_j|)"""
    if j < 0:
        raise InputError("remcor index must be non-negative")
    length = 1
    for level in range(j):
        big = 1 << (1 << (level + 1))
        count = 1 << ((1 << level) - 1)
        length += count * (2 * big + 2 + 2 * length) - 8 * count * (count + 1) // 2
    return length


def remcor_word(j: int) -> Word:
    """
    Exact w_j with w_0 = 1

    Raises:
        ResourceError: |w_j| above GENERATOR_MAX_LENGTH
    """
    expected = remcor_length(j)
    if expected > settings.GENERATOR_MAX_LENGTH:
        raise ResourceError(f"|w_{j}| = {expected} exceeds generator cap")
    w: Word = (1,)
    for level in range(j):
        w = w + tuple(s for block in remcor_blocks(level, w) for s in block)
    return w


class RemcorSource(SequenceSource):
    """Limit of the w_j, each w_j a prefix of w_{j+1}"""

    kind = "explicit-recurrence"

    def __init__(self, name: str = "remcor-limit"):
        super().__init__(name, BINARY, {"w0": "1"})

    def _generate(self, n: int) -> Word:
        out: List[int] = [1]
        level = 0
        while len(out) < n:
            w_j = tuple(out)
            for block in remcor_blocks(level, w_j):
                out.extend(block)
                if len(out) >= n:
                    break
            level += 1
        return tuple(out[:n])


def paperfolding_values(instructions: ParameterStream, n: int) -> np.ndarray:
    """u_1 ... u_n as an int64 array"""
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    index = np.arange(1, n + 1, dtype=np.int64)
    values = np.zeros(n, dtype=np.int64)
    m = 0
    while (1 << m) <= n:
        step = 1 << m
        mask = (index % (2 * step)) == step
        j = (index[mask] // step - 1) // 2
        values[mask] = (j + instructions.term(m)) % 2
        m += 1
    return values
