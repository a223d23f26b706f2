"""
Pydantic schemas for word-level records
Palindrome classification, class P decompositions and period lemma reports
"""
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.words.core import is_palindrome
from app.words.morphism import Morphism

PalindromeClass = Literal["non_periodic", "odd_period", "even_period"]


class PalindromeRecord(BaseModel):
    """A palindrome with its smallest period and period class"""
    model_config = ConfigDict(frozen=True)

    word: Tuple[int, ...] = Field(..., description="The palindrome")
    period: int = Field(..., ge=1, description="Smallest period T")
    palindrome_class: PalindromeClass = Field(..., description="Period class")
    twin: Optional[Tuple[int, ...]] = Field(None, description="Twin, for even-period palindromes")

    @model_validator(mode="after")
    def validate_record(self):
        if not is_palindrome(self.word):
            raise ValueError("PalindromeRecord.word must be a palindrome")
        if (self.twin is not None) != (self.palindrome_class == "even_period"):
            raise ValueError("twin is present exactly for even-period palindromes")
        if self.twin is not None and (len(self.twin) != len(self.word) or self.twin == self.word):
            raise ValueError("twin must be a distinct word of the same length")
        return self


class ClassPDecomposition(BaseModel):
    """sigma(a) = p q_a (prefix form) or sigma(a) = q_a p (suffix form)"""
    model_config = ConfigDict(frozen=True)

    side: Literal["prefix", "suffix"] = Field(..., description="Where p sits in every image")
    p: Tuple[int, ...] = Field(..., description="Common palindrome, possibly empty")
    q: Tuple[Tuple[int, ...], ...] = Field(..., description="Per-letter palindromes q_a")

    @model_validator(mode="after")
    def validate_palindromes(self):
        if not is_palindrome(self.p) or not all(is_palindrome(q) for q in self.q):
            raise ValueError("p and every q_a must be palindromes")
        return self

    def image(self, symbol: int) -> Tuple[int, ...]:
        q = self.q[symbol]
        return self.p + q if self.side == "prefix" else q + self.p

    def reassembles(self, m: Morphism) -> bool:
        return len(self.q) == m.alphabet.size and all(
            self.image(a) == m.images[a] for a in range(m.alphabet.size)
        )

    def describe(self, m: Morphism) -> str:
        render = m.alphabet.render
        q = ", ".join(
            f"q_{a}={render(qa) or 'ε'}" for a, qa in zip(m.alphabet.letters, self.q)
        )
        return f"{self.side}-form p={render(self.p) or 'ε'}; {q}"


class NormalizedClassP(BaseModel):
    """Result of normalizing a class P morphism to |p| <= 1"""
    model_config = ConfigDict(frozen=True)

    morphism: Morphism
    power: int = Field(..., ge=1, description="Least l such that morphism^l is prolongable")
    seed: int = Field(..., ge=0, description="Letter on which morphism^power is prolongable")
    decomposition: ClassPDecomposition
    factor_check_length: int = Field(..., ge=0, description="Factor sets compared up to this length")

    @model_validator(mode="after")
    def validate_short_p(self):
        if len(self.decomposition.p) > 1:
            raise ValueError("normalized decomposition must have |p| <= 1")
        return self


class PeriodicClassP(BaseModel):
    """Constant morphism tau(a) = w = A B with A, B palindromes"""
    model_config = ConfigDict(frozen=True)

    morphism: Morphism
    left: Tuple[int, ...] = Field(..., description="Palindrome A")
    right: Tuple[int, ...] = Field(..., description="Palindrome B")
    witness_length: int = Field(..., ge=0, description="Length of the long palindrome found")


class LemmaItemResult(BaseModel):
    """Outcome of one item of the period lemma"""
    item: int = Field(..., ge=1, le=3)
    applicable: bool
    holds: Optional[bool] = Field(None, description="None when not applicable")
    detail: str


class PeriodLemmaReport(BaseModel):
    items: List[LemmaItemResult]

    @property
    def all_hold(self) -> bool:
        return all(item.holds for item in self.items if item.applicable)
