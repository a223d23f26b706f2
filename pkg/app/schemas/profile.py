"""
Pydantic schemas for complexity measurements
"""
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from app.words.core import is_palindrome

Measure = Literal["fac", "pal"]


class ComplexityProfile(BaseModel):
    """
    fac(k) and pal(k) on a stabilized prefix

    Lists are indexed by k; index 0 holds the empty word (always 1) and is
    left out of every report.
    """
    source: str = Field(..., description="Source name")
    parameters: Dict[str, str] = Field(default_factory=dict, description="Source parameters")
    k_max: int = Field(..., ge=1)
    prefix_len: int = Field(..., ge=0, description="Length of the examined prefix")
    fac: Optional[List[int]] = Field(None, description="Factor complexity, index 0..k_max")
    pal: Optional[List[int]] = Field(None, description="Palindrome complexity, index 0..k_max")
    stable: List[bool] = Field(..., description="Per-k flag: counts unchanged across one doubling")

    @model_validator(mode="after")
    def validate_counts(self):
        size = self.k_max + 1
        if self.fac is None and self.pal is None:
            raise ValueError("A profile measures fac, pal or both")
        for name, values in (("fac", self.fac), ("pal", self.pal), ("stable", self.stable)):
            if values is not None and len(values) != size:
                raise ValueError(f"{name} must have k_max + 1 = {size} entries")
        if self.fac is not None and self.pal is not None:
            for k in range(1, size):
                if self.pal[k] > self.fac[k]:
                    raise ValueError(f"pal({k}) = {self.pal[k]} exceeds fac({k}) = {self.fac[k]}")
                half = (k + 1) // 2
                if self.pal[k] > self.fac[half]:
                    raise ValueError(f"pal({k}) exceeds fac({half})")
        return self

    @property
    def measures(self) -> Tuple[Measure, ...]:
        found: List[Measure] = []
        if self.fac is not None:
            found.append("fac")
        if self.pal is not None:
            found.append("pal")
        return tuple(found)

    @property
    def all_stable(self) -> bool:
        return all(self.stable[1:])

    def unstable_ks(self) -> List[int]:
        return [k for k in range(1, self.k_max + 1) if not self.stable[k]]


class PalindromeWitness(BaseModel):
    word: Tuple[int, ...]
    position: int = Field(..., ge=0, description="Leftmost occurrence in the prefix")

    @model_validator(mode="after")
    def validate_palindrome(self):
        if not self.word or not is_palindrome(self.word):
            raise ValueError("Inventory entries must be non-empty palindromes")
        return self


class PalindromeInventory(BaseModel):
    """Palindromic factors of length 1..k_max with one witness position each"""
    source: str
    k_max: int = Field(..., ge=1)
    prefix_len: int = Field(..., ge=0)
    stable: bool
    palindromes: List[PalindromeWitness]

    @model_validator(mode="after")
    def validate_lengths(self):
        for witness in self.palindromes:
            if len(witness.word) > self.k_max:
                raise ValueError("Inventory entry longer than k_max")
            if witness.position + len(witness.word) > self.prefix_len:
                raise ValueError("Inventory witness lies outside the examined prefix")
        return self

    def of_length(self, k: int) -> List[Tuple[int, ...]]:
        return [w.word for w in self.palindromes if len(w.word) == k]


class RatioRow(BaseModel):
    """k pal(k) / fac(k) exactly, and pal(k) / sqrt(fac(k)) via its exact square"""
    k: int = Field(..., ge=1)
    fac: int
    pal: int
    defined: bool = Field(..., description="False when fac(k) = 0")
    k_pal_over_fac: Optional[str] = Field(None, description="Exact rational 'num/den'")
    pal_squared_over_fac: Optional[str] = Field(None, description="Exact square of pal / sqrt(fac)")
    pal_over_sqrt_fac: Optional[float] = Field(None, description="Rounded to 12 digits")
    stable: bool
