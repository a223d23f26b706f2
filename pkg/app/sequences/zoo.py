"""
Sequence zoo
Named constructors and the builtin registry behind one prefix interface
"""
import threading
from typing import Callable, Dict, List, Mapping, NamedTuple, Optional

from app.core.exceptions import InputError
from app.sequences.sources import (
    ChampernowneSource,
    DifferenceSource,
    ImageSource,
    KolakoskiSource,
    MorphicSource,
    PaperfoldingSource,
    PeriodicSource,
    RemcorSource,
    RoteSource,
    RudinShapiroSource,
    SequenceSource,
    SturmianSource,
)
from app.sequences.streams import (
    CLASSICAL_INSTRUCTIONS,
    GOLDEN_CF,
    ParameterStream,
    parse_continued_fraction,
    parse_instructions,
)
from app.utils.logger import get_logger
from app.words.core import BINARY, Alphabet, Word
from app.words.morphism import Morphism
from app.words.morphism_file import load_morphism_file

logger = get_logger(__name__)

AB = Alphabet(letters=("a", "b"))
ABCD = Alphabet(letters=("a", "b", "c", "d"))

PARAMETRIC = ("sturmian", "rote", "paperfolding", "rudin-shapiro")


def sturmian(cf: ParameterStream, name: Optional[str] = None) -> SequenceSource:
    return SturmianSource(name or f"sturmian[{cf.describe()}]", cf)


def paperfolding(instructions: ParameterStream, name: Optional[str] = None) -> SequenceSource:
    return PaperfoldingSource(name or f"paperfolding[{instructions.describe()}]", instructions)


def rudin_shapiro_generalized(instructions: ParameterStream, name: Optional[str] = None) -> SequenceSource:
    return RudinShapiroSource(name or f"rudin-shapiro[{instructions.describe()}]", instructions)


def rote_from_sturmian(beta: SequenceSource, w0: int = 0, name: Optional[str] = None) -> SequenceSource:
    return RoteSource(name or f"rote[{beta.name}]", beta, w0)


def difference_mod2(s: SequenceSource, name: Optional[str] = None) -> SequenceSource:
    return DifferenceSource(name or f"delta[{s.name}]", s)


def pointwise_image(
        s: SequenceSource,
        letter_map: Mapping[str, str],
        alphabet: Alphabet = BINARY,
        name: Optional[str] = None
) -> SequenceSource:
    """
    Recode s letter by letter; images are words over alphabet

    Raises:
        InputError: the map is partial, erasing, or uses unknown letters
    """
    unknown = [letter for letter in letter_map if letter not in s.alphabet.letters]
    if unknown:
        raise InputError(f"Letter map mentions letters outside the source alphabet: {' '.join(unknown)}")
    index_map: Dict[int, Word] = {
        s.alphabet.index(letter): alphabet.parse(image) for letter, image in letter_map.items()
    }
    return ImageSource(name or f"image[{s.name}]", s, index_map, alphabet)


def periodic(word: str, alphabet: Alphabet = BINARY, name: Optional[str] = None) -> SequenceSource:
    return PeriodicSource(name or f"periodic[{word}]", alphabet.parse(word), alphabet)


def morphic(name: str, alphabet: Alphabet, rules: Dict[str, str], seed: str) -> SequenceSource:
    m = Morphism.from_rules(alphabet, rules)
    return MorphicSource(name, m, alphabet.index(seed))


class BuiltinEntry(NamedTuple):
    name: str
    description: str
    factory: Callable[[], SequenceSource]
    # False when a stable fac(k) is still only a lower bound
    recurrent: bool = True


def _rote_image_base() -> SequenceSource:
    return morphic("rote-image-base", ABCD, {"a": "ad", "b": "bac", "c": "bacab", "d": "baca"}, "a")


_REGISTRY: Dict[str, BuiltinEntry] = {entry.name: entry for entry in [
    BuiltinEntry(
        "period-doubling", "fixed point of 0->01, 1->00",
        lambda: morphic("period-doubling", BINARY, {"0": "01", "1": "00"}, "0")
    ),
    BuiltinEntry(
        "thue-morse-squared", "fixed point of a->abba, b->baab",
        lambda: morphic("thue-morse-squared", AB, {"a": "abba", "b": "baab"}, "a")
    ),
    BuiltinEntry(
        "thue-morse", "fixed point of a->ab, b->ba",
        lambda: morphic("thue-morse", AB, {"a": "ab", "b": "ba"}, "a")
    ),
    BuiltinEntry(
        "fibonacci", "fixed point of 0->01, 1->0",
        lambda: morphic("fibonacci", BINARY, {"0": "01", "1": "0"}, "0")
    ),
    BuiltinEntry(
        "rote-morphic", "fixed point of 0->001, 1->111",
        lambda: morphic("rote-morphic", BINARY, {"0": "001", "1": "111"}, "0")
    ),
    BuiltinEntry(
        "v-sequence", "fixed point of 0->001, 1->101",
        lambda: morphic("v-sequence", BINARY, {"0": "001", "1": "101"}, "0")
    ),
    BuiltinEntry(
        "chacon", "fixed point of 0->0010, 1->1",
        lambda: morphic("chacon", BINARY, {"0": "0010", "1": "1"}, "0")
    ),
    BuiltinEntry("kolakoski", "self-runlength sequence starting 2 2", KolakoskiSource),
    BuiltinEntry(
        "pansiot-quadratic", "fixed point of 0->001, 1->1",
        lambda: morphic("pansiot-quadratic", BINARY, {"0": "001", "1": "1"}, "0"),
        recurrent=False
    ),
    BuiltinEntry(
        "loglog", "fixed point of 0->010, 1->11",
        lambda: morphic("loglog", BINARY, {"0": "010", "1": "11"}, "0"),
        recurrent=False
    ),
    BuiltinEntry(
        "champernowne-binary", "binary numerals 0, 1, 10, 11, ... concatenated",
        ChampernowneSource, recurrent=False
    ),
    BuiltinEntry(
        "scrambler-image", "champernowne-binary under 0->011001, 1->001011",
        lambda: pointwise_image(
            ChampernowneSource(), {"0": "011001", "1": "001011"}, name="scrambler-image"
        ),
        recurrent=False
    ),
    BuiltinEntry("remcor-limit", "limit of the w_j construction, w_0 = 1", RemcorSource, recurrent=False),
    BuiltinEntry(
        "paperfolding-classical", "paperfolding with instructions 0(01)",
        lambda: paperfolding(CLASSICAL_INSTRUCTIONS, name="paperfolding-classical")
    ),
    BuiltinEntry(
        "rudin-shapiro-classical", "generalized Rudin-Shapiro with instructions 0(01)",
        lambda: rudin_shapiro_generalized(CLASSICAL_INSTRUCTIONS, name="rudin-shapiro-classical")
    ),
    BuiltinEntry(
        "rote-fibonacci", "Rote sequence over the Fibonacci word, w0 = 0",
        lambda: rote_from_sturmian(sturmian(GOLDEN_CF, name="fibonacci-sturmian"), name="rote-fibonacci")
    ),
    BuiltinEntry(
        "rote-image", "fixed point of a->ad, b->bac, c->bacab, d->baca under a->0, b->1, c->10110, d->101",
        lambda: pointwise_image(
            _rote_image_base(), {"a": "0", "b": "1", "c": "10110", "d": "101"}, name="rote-image"
        )
    ),
]}

_instances: Dict[str, SequenceSource] = {}
_instances_lock = threading.Lock()


def builtin_names() -> List[str]:
    return list(_REGISTRY)


def builtin_entry(name: str) -> BuiltinEntry:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise InputError(f"Unknown sequence {name!r}; known: {', '.join(_REGISTRY)}")


def builtin(name: str) -> SequenceSource:
    """
    Shared instance of a registered sequence

    Raises:
        InputError: unknown name
    """
    entry = builtin_entry(name)
    with _instances_lock:
        source = _instances.get(name)
        if source is None:
            source = entry.factory()
            _instances[name] = source
            logger.debug("Created builtin source", source=name, kind=source.kind)
    return source


def make_source(
        selector: str,
        instructions: Optional[str] = None,
        cf: Optional[str] = None,
) -> SequenceSource:
    """
    Resolve a source selector

    builtin name, file:<morphism-file>, or one of the parametric names
    sturmian / rote (need cf) and paperfolding / rudin-shapiro (need instructions)

    Raises:
        InputError: unknown selector or missing parameter
        MorphismFileError: malformed morphism file
    """
    selector = selector.strip()
    if selector.startswith("file:"):
        path = selector[len("file:"):]
        definition = load_morphism_file(path)
        seed = definition.seed if definition.seed is not None else 0
        return MorphicSource(f"file:{path}", definition.morphism, seed)
    if selector in ("sturmian", "rote"):
        if not cf:
            raise InputError(f"--cf is required for {selector}")
        base = sturmian(parse_continued_fraction(cf))
        return base if selector == "sturmian" else rote_from_sturmian(base)
    if selector in ("paperfolding", "rudin-shapiro"):
        if not instructions:
            raise InputError(f"--instructions is required for {selector}")
        stream = parse_instructions(instructions)
        if selector == "paperfolding":
            return paperfolding(stream)
        return rudin_shapiro_generalized(stream)
    return builtin(selector)
