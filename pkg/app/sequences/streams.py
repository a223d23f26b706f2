"""
Parameter streams for parametric sequences
Instruction streams (paperfolding, Rudin-Shapiro) and continued-fraction
expansions (Sturmian slopes) given as finite or ultimately periodic lists

    "001010"      finite instructions
    "0(01)"       0 followed by 01 repeated forever
    "1,1,1,..."   trailing ... repeats the last term
    "1,(2,1)"     continued fraction 1 followed by 2,1 repeated
"""
import re
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.core.exceptions import InputError


class ParameterStream(BaseModel):
    """head followed by cycle repeated forever; finite when cycle is empty"""
    model_config = ConfigDict(frozen=True)

    head: Tuple[int, ...] = Field(default=(), description="Pre-period terms")
    cycle: Tuple[int, ...] = Field(default=(), description="Repeated terms, empty for a finite stream")

    @model_validator(mode="after")
    def validate_not_empty(self):
        if not self.head and not self.cycle:
            raise ValueError("A parameter stream needs at least one term")
        return self

    @property
    def finite(self) -> bool:
        return not self.cycle

    @property
    def length(self) -> Optional[int]:
        return len(self.head) if self.finite else None

    def term(self, index: int) -> int:
        """
        Raises:
            InputError: index beyond a finite stream
        """
        if index < len(self.head):
            return self.head[index]
        if self.finite:
            raise InputError(
                f"Parameter stream has {len(self.head)} terms, term {index} requested"
            )
        return self.cycle[(index - len(self.head)) % len(self.cycle)]

    def take(self, n: int) -> List[int]:
        return [self.term(i) for i in range(n)]

    def describe(self) -> str:
        head = ",".join(map(str, self.head))
        if self.finite:
            return head
        cycle = "(" + ",".join(map(str, self.cycle)) + ")"
        return f"{head},{cycle}" if head else cycle


_PERIODIC = re.compile(r"^(?P<head>[^()]*)\((?P<cycle>[^()]+)\)$")


def _parse(text: str, tokenize) -> ParameterStream:
    text = text.strip().replace(" ", "")
    if not text:
        raise InputError("Empty parameter stream")
    try:
        if text.endswith("..."):
            terms = tokenize(text[:-3].rstrip(","))
            if not terms:
                raise InputError("'...' needs a term to repeat")
            return ParameterStream(head=tuple(terms[:-1]), cycle=(terms[-1],))
        match = _PERIODIC.match(text)
        if match:
            return ParameterStream(
                head=tuple(tokenize(match.group("head").rstrip(","))),
                cycle=tuple(tokenize(match.group("cycle")))
            )
        if "(" in text or ")" in text:
            raise InputError(f"Unbalanced period marker in {text!r}")
        return ParameterStream(head=tuple(tokenize(text)))
    except ValueError as e:
        if isinstance(e, InputError):
            raise
        raise InputError(f"Invalid parameter stream {text!r}: {e}")


def _instruction_tokens(text: str) -> List[int]:
    digits = text.replace(",", "")
    if any(ch not in "01" for ch in digits):
        raise InputError(f"Instructions must be 0/1, got {text!r}")
    return [int(ch) for ch in digits]


def _cf_tokens(text: str) -> List[int]:
    if not text:
        return []
    terms = [int(token) for token in text.split(",") if token]
    if any(t < 1 for t in terms):
        raise InputError("Continued-fraction terms must be positive")
    return terms


def parse_instructions(text: str) -> ParameterStream:
    """0/1 instruction stream, one digit per term"""
    return _parse(text, _instruction_tokens)


def parse_continued_fraction(text: str) -> ParameterStream:
    """Comma-separated positive integers"""
    return _parse(text, _cf_tokens)


CLASSICAL_INSTRUCTIONS = parse_instructions("0(01)")

GOLDEN_CF = parse_continued_fraction("(1)")
