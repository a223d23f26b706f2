"""
Line-oriented morphism text format

    # period-doubling
    alphabet: 0 1
    rule: 0 -> 0 1
    rule: 1 -> 0 0
    seed: 0
"""
from pathlib import Path
from typing import Dict, List, NamedTuple, Optional, Tuple, Union

from app.core.exceptions import InputError, MorphismFileError
from app.words.core import Alphabet
from app.words.morphism import Morphism


class MorphismDefinition(NamedTuple):
    morphism: Morphism
    seed: Optional[int]


def parse_morphism_text(text: str) -> MorphismDefinition:
    """
    Parse the morphism format

    Raises:
        MorphismFileError: with the offending line number
    """
    alphabet: Optional[Alphabet] = None
    rules: Dict[str, Tuple[int, List[str]]] = {}
    seed_entry: Optional[Tuple[int, str]] = None

    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise MorphismFileError(f"expected 'key: value', got {line!r}", number)
        key, value = key.strip().lower(), value.strip()

        if key == "alphabet":
            if alphabet is not None:
                raise MorphismFileError("alphabet declared twice", number)
            try:
                alphabet = Alphabet(letters=tuple(value.split()))
            except ValueError as e:
                raise MorphismFileError(f"invalid alphabet: {_first_error(e)}", number)
        elif key == "rule":
            if alphabet is None:
                raise MorphismFileError("rule before alphabet", number)
            letter, arrow, image = value.partition("->")
            letter = letter.strip()
            if not arrow or not letter:
                raise MorphismFileError(f"expected 'rule: a -> image', got {value!r}", number)
            if letter not in alphabet.letters:
                raise MorphismFileError(f"rule for unknown letter {letter!r}", number)
            if letter in rules:
                raise MorphismFileError(f"second rule for letter {letter!r}", number)
            tokens = image.split()
            unknown = [t for t in tokens if t not in alphabet.letters]
            if unknown:
                raise MorphismFileError(f"image uses unknown letters: {' '.join(unknown)}", number)
            rules[letter] = (number, tokens)
        elif key == "seed":
            seed_entry = (number, value)
        else:
            raise MorphismFileError(f"unknown key {key!r}", number)

    if alphabet is None:
        raise MorphismFileError("missing 'alphabet:' line")
    missing = [a for a in alphabet.letters if a not in rules]
    if missing:
        raise MorphismFileError(f"no rule for letters: {' '.join(missing)}")

    morphism = Morphism(
        alphabet=alphabet,
        images=tuple(
            tuple(alphabet.index(t) for t in rules[a][1]) for a in alphabet.letters
        )
    )

    seed = None
    if seed_entry is not None:
        number, value = seed_entry
        try:
            seed = alphabet.index(value)
        except InputError:
            raise MorphismFileError(f"seed {value!r} not in alphabet", number)
    return MorphismDefinition(morphism=morphism, seed=seed)


def load_morphism_file(path: Union[str, Path]) -> MorphismDefinition:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise MorphismFileError(f"cannot read {path}: {e.strerror}")
    return parse_morphism_text(text)


def format_morphism_file(m: Morphism, seed: Optional[int] = None, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append("alphabet: " + " ".join(m.alphabet.letters))
    for letter, image in zip(m.alphabet.letters, m.images):
        lines.append(f"rule: {letter} -> " + " ".join(m.alphabet.letters[s] for s in image))
    if seed is not None:
        lines.append(f"seed: {m.alphabet.letters[seed]}")
    return "\n".join(lines) + "\n"


def _first_error(e: ValueError) -> str:
    errors = getattr(e, "errors", None)
    if callable(errors):
        return errors()[0].get("msg", str(e))
    return str(e)
