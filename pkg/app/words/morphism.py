"""
Morphisms (substitutions) on a finite alphabet
Concatenation homomorphisms, fixed points and primitivity
"""
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.core.exceptions import ConstructionError, InputError
from app.words.core import Alphabet, Word


class Morphism(BaseModel):
    """Letter -> word map; images[i] is the image of symbol i"""
    model_config = ConfigDict(frozen=True)

    alphabet: Alphabet = Field(..., description="Source and target alphabet")
    images: Tuple[Tuple[int, ...], ...] = Field(..., description="One image per letter")

    @model_validator(mode="after")
    def validate_images(self):
        if len(self.images) != self.alphabet.size:
            raise ValueError(
                f"Morphism needs {self.alphabet.size} images, got {len(self.images)}"
            )
        for image in self.images:
            self.alphabet.validate_word(image)
        return self

    @classmethod
    def from_rules(cls, alphabet: Alphabet, rules: Dict[str, str]) -> "Morphism":
        """Build from letter-name rules, e.g. {"0": "01", "1": "00"}"""
        missing = [a for a in alphabet.letters if a not in rules]
        if missing:
            raise InputError(f"No rule for letters: {' '.join(missing)}")
        return cls(
            alphabet=alphabet,
            images=tuple(alphabet.parse(rules[a]) for a in alphabet.letters)
        )

    @cached_property
    def uniform_length(self) -> Optional[int]:
        lengths = {len(image) for image in self.images}
        return lengths.pop() if len(lengths) == 1 else None

    @cached_property
    def erasing(self) -> bool:
        return any(len(image) == 0 for image in self.images)

    @cached_property
    def primitive(self) -> bool:
        return is_primitive(self)

    def image(self, symbol: int) -> Word:
        return self.images[symbol]

    def describe(self) -> str:
        render = self.alphabet.render
        return ", ".join(
            f"{a}->{render(image)}" for a, image in zip(self.alphabet.letters, self.images)
        )


def apply(m: Morphism, w: Sequence[int]) -> Word:
    """
    Image of a word: concatenation of the letter images in order

    Raises:
        InputError: if a symbol of w is outside m's alphabet
    """
    images = m.images
    out: List[int] = []
    try:
        for s in w:
            if s < 0:
                raise IndexError
            out.extend(images[s])
    except (IndexError, TypeError):
        raise InputError(f"Word contains a symbol outside alphabet {' '.join(m.alphabet.letters)}")
    return tuple(out)


def compose(outer: Morphism, inner: Morphism) -> Morphism:
    """(outer o inner)(a) = outer(inner(a))"""
    if outer.alphabet != inner.alphabet:
        raise InputError("Cannot compose morphisms over different alphabets")
    return Morphism(
        alphabet=inner.alphabet,
        images=tuple(apply(outer, image) for image in inner.images)
    )


def power(m: Morphism, exponent: int) -> Morphism:
    if exponent < 1:
        raise InputError("Morphism powers start at 1")
    result = m
    for _ in range(exponent - 1):
        result = compose(m, result)
    return result


def is_prolongable(m: Morphism, seed: int) -> bool:
    image = m.images[seed]
    return len(image) >= 2 and image[0] == seed


def fixed_point_prefix(m: Morphism, seed: int, n: int) -> Word:
    """
    First n symbols of the fixed point of m starting with seed

    The fixed point u satisfies u = m(u_0) m(u_1) m(u_2) ..., so images are
    appended while reading the output itself; at most one image beyond n is
    ever materialized.

    Raises:
        ConstructionError: seed not prolongable or m erasing
    """
    if n < 0:
        raise InputError("Prefix length must be non-negative")
    if not 0 <= seed < m.alphabet.size:
        raise InputError(f"Seed index {seed} outside alphabet")
    if n == 0:
        return ()
    if n == 1:
        return (seed,)
    if m.erasing:
        raise ConstructionError(f"Morphism {m.describe()} is erasing")
    if not is_prolongable(m, seed):
        raise ConstructionError(
            f"Morphism {m.describe()} is not prolongable on {m.alphabet.letters[seed]}"
        )
    images = m.images
    out: List[int] = list(images[seed])
    i = 1
    while len(out) < n:
        out.extend(images[out[i]])
        i += 1
    return tuple(out[:n])


def incidence_matrix(m: Morphism) -> np.ndarray:
    """M[a, b] = number of occurrences of b in m(a)"""
    size = m.alphabet.size
    matrix = np.zeros((size, size), dtype=np.int64)
    for a, image in enumerate(m.images):
        for b in image:
            matrix[a, b] += 1
    return matrix


def is_primitive(m: Morphism) -> bool:
    """
    Some power k <= (size-1)^2 + 1 of the incidence matrix is entrywise positive
    (Wielandt bound; boolean arithmetic keeps entries bounded)
    """
    size = m.alphabet.size
    adjacency = incidence_matrix(m) > 0
    current = adjacency.copy()
    for _ in range((size - 1) ** 2 + 1):
        if current.all():
            return True
        current = (current.astype(np.int64) @ adjacency.astype(np.int64)) > 0
    return False
