"""
Class P morphisms
Detection of p / q_a decompositions, conjugation by a common prefix or suffix,
normalization to |p| <= 1 and the constant morphism of a periodic sequence
"""
from typing import List, Literal, Optional, Tuple

from app.core.config import settings
from app.core.exceptions import ConstructionError, DomainError, InputError
from app.schemas.words import ClassPDecomposition, NormalizedClassP, PeriodicClassP
from app.utils.logger import get_logger
from app.words.core import Alphabet, Word, factors, is_palindrome, reverse
from app.words.morphism import Morphism, apply, fixed_point_prefix, is_prolongable, power

logger = get_logger(__name__)

Side = Literal["prefix", "suffix"]


def detect_class_p(m: Morphism) -> List[ClassPDecomposition]:
    """
    Every decomposition sigma(a) = p q_a (prefix form) or q_a p (suffix form)

    Prefix-form decompositions come first, each side ordered by |p| ascending.
    An empty list means m is not in class P.
    """
    found: List[ClassPDecomposition] = []
    for side in ("prefix", "suffix"):
        images = m.images if side == "prefix" else tuple(reverse(i) for i in m.images)
        common = _common_prefix_length(images)
        for lp in range(common + 1):
            p = images[0][:lp]
            if not is_palindrome(p):
                continue
            q = tuple(image[lp:] for image in images)
            if side == "suffix":
                q = tuple(reverse(qa) for qa in q)
            if all(is_palindrome(qa) for qa in q):
                found.append(ClassPDecomposition(side=side, p=p, q=q))
    for decomposition in found:
        if not decomposition.reassembles(m):
            raise RuntimeError(f"Decomposition does not reassemble {m.describe()}")
    return found


def shift_conjugate(m: Morphism, x: Word, side: Side) -> Morphism:
    """
    Move x across every image: x z_a -> z_a x (prefix side), z_a x -> x z_a (suffix side)

    Raises:
        InputError: if x is empty or not common to every image on that side
    """
    x = tuple(x)
    if not x:
        raise InputError("Shift word must be non-empty")
    n = len(x)
    images = []
    for image in m.images:
        if side == "prefix":
            if image[:n] != x:
                raise InputError(f"{m.alphabet.render(x)} is not a prefix of every image")
            images.append(image[n:] + x)
        else:
            if n > len(image) or image[len(image) - n:] != x:
                raise InputError(f"{m.alphabet.render(x)} is not a suffix of every image")
            images.append(x + image[:len(image) - n])
    shifted = Morphism(alphabet=m.alphabet, images=tuple(images))
    if m.primitive and not shifted.primitive:
        raise RuntimeError("Conjugation lost primitivity")
    return shifted


def switch_side(m: Morphism, decomposition: ClassPDecomposition) -> Tuple[Morphism, ClassPDecomposition]:
    """Conjugate by x = p, turning a prefix-form decomposition into a suffix-form one and back"""
    flipped: Side = "suffix" if decomposition.side == "prefix" else "prefix"
    target = ClassPDecomposition(side=flipped, p=decomposition.p, q=decomposition.q)
    if not decomposition.p:
        return m, target
    return shift_conjugate(m, decomposition.p, decomposition.side), target


def normalize_class_p(m: Morphism, test_length: Optional[int] = None) -> NormalizedClassP:
    """
    Conjugate a primitive class P morphism so that |p| <= 1

    With p = r r~ (even) or p = r b r~ (odd) the shift by r (prefix form) or by
    r~ (suffix form) leaves images r~ q_a r, with b kept as the new p when |p|
    is odd. Then the least power l <= |A| that is prolongable on some letter
    is searched, and the factor sets of both languages are compared up to
    test_length.

    Raises:
        DomainError: m not primitive or not class P
        ConstructionError: no prolongable power, or the factor sets disagree
    """
    test_length = settings.CLASSP_TEST_LENGTH if test_length is None else test_length
    if m.erasing or not m.primitive:
        raise DomainError(f"Normalization needs a primitive non-erasing morphism: {m.describe()}")
    decompositions = detect_class_p(m)
    if not decompositions:
        raise DomainError(f"Morphism {m.describe()} is not in class P")

    decomposition = min(decompositions, key=lambda d: len(d.p))
    p = decomposition.p
    half = len(p) // 2
    r = p[:half]
    middle = p[half:len(p) - half]

    if not r:
        normalized, new_decomposition = m, decomposition
    else:
        x = r if decomposition.side == "prefix" else reverse(r)
        normalized = shift_conjugate(m, x, decomposition.side)
        new_decomposition = ClassPDecomposition(
            side=decomposition.side,
            p=middle,
            q=tuple(reverse(r) + qa + r for qa in decomposition.q)
        )
        if not new_decomposition.reassembles(normalized):
            raise RuntimeError("Normalized decomposition does not reassemble")

    ell, seed = _least_prolongable_power(normalized)
    _check_same_language(m, normalized, ell, seed, test_length)

    logger.info(
        "Normalized class P morphism",
        original=m.describe(),
        normalized=normalized.describe(),
        power=ell,
        seed=normalized.alphabet.letters[seed]
    )
    return NormalizedClassP(
        morphism=normalized,
        power=ell,
        seed=seed,
        decomposition=new_decomposition,
        factor_check_length=test_length
    )


def class_p_power_images(m: Morphism, exponent: int) -> List[Tuple[Word, bool]]:
    """Images of m^exponent, each with its palindromicity"""
    return [(image, is_palindrome(image)) for image in power(m, exponent).images]


def periodic_class_p(w: Word, alphabet: Alphabet) -> Optional[PeriodicClassP]:
    """
    Constant morphism tau(a) = w = A B with A, B palindromes

    A palindrome of length >= 2|w| is searched in www... up to length 4|w|.
    When one exists, w~ occurs in ww at some i < |w| and the split is
    A = w[:i], B = w[i:].
    """
    w = alphabet.validate_word(w)
    n = len(w)
    if n == 0:
        raise InputError("periodic_class_p needs a non-empty word")

    window = w * 6
    witness = 0
    for length in range(2 * n, 4 * n + 1):
        if any(is_palindrome(window[i:i + length]) for i in range(n)):
            witness = length
            break
    if not witness:
        return None

    doubled = w + w
    target = reverse(w)
    for i in range(n):
        if doubled[i:i + n] == target:
            left, right = w[:i], w[i:]
            if not (is_palindrome(left) and is_palindrome(right)):
                raise RuntimeError("Split of a periodic class P word is not palindromic")
            return PeriodicClassP(
                morphism=Morphism(alphabet=alphabet, images=tuple(w for _ in alphabet.letters)),
                left=left,
                right=right,
                witness_length=witness
            )
    return None


def _common_prefix_length(images: Tuple[Word, ...]) -> int:
    shortest = min(len(image) for image in images)
    length = 0
    while length < shortest and all(image[length] == images[0][length] for image in images):
        length += 1
    return length


def _least_prolongable_power(m: Morphism) -> Tuple[int, int]:
    for ell in range(1, m.alphabet.size + 1):
        candidate = power(m, ell)
        for seed in range(m.alphabet.size):
            if is_prolongable(candidate, seed):
                return ell, seed
    raise ConstructionError(
        f"No power l <= {m.alphabet.size} of {m.describe()} is prolongable"
    )


def _language_sample(m: Morphism, length: int) -> Word:
    """Prefix of m^n(0) of the given length; factors of it lie in the language of m"""
    w: Word = (0,)
    while len(w) < length:
        grown = apply(m, w)
        if len(grown) == len(w):
            break
        w = grown[:length]
    return w


def _check_same_language(
        original: Morphism, normalized: Morphism, ell: int, seed: int, test_length: int
) -> None:
    length = settings.CLASSP_PREFIX_LENGTH
    fixed = fixed_point_prefix(power(normalized, ell), seed, length)
    sample = _language_sample(original, length)
    for k in range(1, test_length + 1):
        if factors(fixed, k) != factors(sample, k):
            raise ConstructionError(
                f"Normalized fixed point and original language differ at factor length {k}"
            )
