"""
Period calculus on finite words
Smallest periods via the border array, Fine-Wilf, Lyndon-Schutzenberger,
the three-item period lemma and palindrome period classes with twins
"""
from math import gcd
from typing import List, Optional, Sequence, Tuple

from app.core.exceptions import DomainError, InputError
from app.schemas.words import LemmaItemResult, PalindromeRecord, PeriodLemmaReport
from app.words.core import Word, is_factor, is_palindrome


def border_array(w: Sequence[int]) -> List[int]:
    """
    border[i] = length of the longest proper border of w[:i+1]

    >>> border_array((0, 1, 0, 0, 1, 0, 1))
    [0, 0, 1, 1, 2, 3, 2]
    """
    border = [0] * len(w)
    k = 0
    for i in range(1, len(w)):
        while k > 0 and w[i] != w[k]:
            k = border[k - 1]
        if w[i] == w[k]:
            k += 1
        border[i] = k
    return border


def smallest_period(w: Sequence[int]) -> int:
    """|w| minus its longest border"""
    if not w:
        raise InputError("The empty word has no period")
    return len(w) - border_array(w)[-1]


def has_period(w: Sequence[int], p: int) -> bool:
    """w is a prefix of a p-periodic sequence (vacuous for p >= |w|)"""
    if p < 1:
        return False
    return all(w[i] == w[i + p] for i in range(len(w) - p))


def periods(w: Sequence[int]) -> List[int]:
    """All periods p in 1..|w|"""
    return [p for p in range(1, len(w) + 1) if has_period(w, p)]


def fine_wilf_threshold(t: int, t_prime: int) -> int:
    if t < 1 or t_prime < 1:
        raise InputError("Periods must be positive")
    return t + t_prime - gcd(t, t_prime)


def fine_wilf_reduce(w: Sequence[int], t: int, t_prime: int) -> Optional[int]:
    """
    gcd(T, T') when |w| reaches the Fine-Wilf threshold, otherwise None

    Raises:
        InputError: if T or T' is not a period of w
    """
    threshold = fine_wilf_threshold(t, t_prime)
    for p in (t, t_prime):
        if not has_period(w, p):
            raise InputError(f"{p} is not a period of the word")
    if len(w) >= threshold:
        return gcd(t, t_prime)
    return None


def lyndon_schutzenberger(
        x: Sequence[int], y: Sequence[int], z: Sequence[int]
) -> Optional[Tuple[Word, Word, int]]:
    """
    Canonical (u, v, e) with x = uv, z = vu, y = (uv)^e u when xy = yz

    |u| = |y| mod |x| and e = |y| div |x|; None when xy != yz.
    """
    x, y, z = tuple(x), tuple(y), tuple(z)
    if not x or not z:
        raise InputError("x and z must be non-empty")
    if x + y != y + z:
        return None
    e, r = divmod(len(y), len(x))
    u, v = x[:r], x[r:]
    return u, v, e


def lemma3_checks(w: Sequence[int], z: Sequence[int], w_prime: Sequence[int]) -> PeriodLemmaReport:
    """
    Evaluate the three items of the period lemma on concrete words

    Item 1 concerns w alone; item 2 uses z with factor w; item 3 uses z with
    factors w and w'. Unmet hypotheses are reported as not applicable.
    """
    w, z, w_prime = tuple(w), tuple(z), tuple(w_prime)
    items: List[LemmaItemResult] = []

    # item 1
    if not w:
        items.append(LemmaItemResult(item=1, applicable=False, detail="w is empty"))
    else:
        t = smallest_period(w)
        if 2 * t > len(w):
            items.append(LemmaItemResult(
                item=1, applicable=False, detail=f"T={t} > |w|/2"
            ))
        else:
            small = [p for p in periods(w) if 2 * p <= len(w)]
            items.append(LemmaItemResult(
                item=1, applicable=True, holds=all(p % t == 0 for p in small),
                detail=f"T={t}; periods <= |w|/2: {small}"
            ))

    # item 2
    if not w or not z or not is_factor(w, z):
        items.append(LemmaItemResult(item=2, applicable=False, detail="w is not a factor of z"))
    else:
        t, t_prime = smallest_period(z), smallest_period(w)
        if t + t_prime > len(w):
            items.append(LemmaItemResult(
                item=2, applicable=False, detail=f"T+T'={t + t_prime} > |w|={len(w)}"
            ))
        else:
            items.append(LemmaItemResult(
                item=2, applicable=True, holds=has_period(z, t_prime),
                detail=f"T={t}, T'={t_prime}: T' period of z"
            ))

    # item 3
    if not (w and w_prime and z and is_factor(w, z) and is_factor(w_prime, z)):
        items.append(LemmaItemResult(item=3, applicable=False, detail="w, w' not both factors of z"))
    else:
        theta, t, t_prime = smallest_period(z), smallest_period(w), smallest_period(w_prime)
        if theta + t > len(w) or theta + t_prime > len(w_prime):
            items.append(LemmaItemResult(
                item=3, applicable=False, detail=f"Theta={theta} too large for w or w'"
            ))
        else:
            items.append(LemmaItemResult(
                item=3, applicable=True, holds=t == t_prime,
                detail=f"Theta={theta}, T={t}, T'={t_prime}"
            ))
    return PeriodLemmaReport(items=items)


def classify_palindrome(w: Sequence[int]) -> PalindromeRecord:
    """
    Non-periodic when T > |w|/2, otherwise odd or even period by the parity of T

    Raises:
        DomainError: if w is not a non-empty palindrome
    """
    w = tuple(w)
    if not w or not is_palindrome(w):
        raise DomainError("classify_palindrome expects a non-empty palindrome")
    t = smallest_period(w)
    if 2 * t > len(w):
        return PalindromeRecord(word=w, period=t, palindrome_class="non_periodic")
    if t % 2:
        return PalindromeRecord(word=w, period=t, palindrome_class="odd_period")
    return PalindromeRecord(word=w, period=t, palindrome_class="even_period", twin=_twin(w, t))


def twin(w: Sequence[int]) -> Word:
    """
    Prefix of length |w| of (yx)^inf where w prefixes (xy)^inf, |x| = |y| = T/2

    Raises:
        DomainError: if w is not a palindrome of even period
    """
    record = classify_palindrome(w)
    if record.twin is None:
        raise DomainError(f"twin is defined for even-period palindromes only ({record.palindrome_class})")
    return record.twin


def twin_by_decomposition(w: Sequence[int]) -> Word:
    """Same twin, assembled as y (xy)^(d-1) z reversed(y) from w = (xy)^d z"""
    w = tuple(w)
    record = classify_palindrome(w)
    if record.twin is None:
        raise DomainError("twin is defined for even-period palindromes only")
    t = record.period
    half = t // 2
    x, y = w[:half], w[half:t]
    d = len(w) // t
    z = w[d * t:]
    return y + (x + y) * (d - 1) + z + tuple(reversed(y))


def periodic_palindrome_split(w: Sequence[int]) -> Optional[Tuple[Word, Word, int]]:
    """
    (B, C, d) with w = (BC)^d B, B and C palindromes, d >= 2; None when w is
    not a periodic palindrome
    """
    w = tuple(w)
    if not w or not is_palindrome(w):
        return None
    t = smallest_period(w)
    if 2 * t > len(w):
        return None
    d, r = divmod(len(w), t)
    b, c = w[:r], w[r:t]
    if d < 2 or not is_palindrome(b) or not is_palindrome(c):
        return None
    return b, c, d


def _twin(w: Word, t: int) -> Word:
    half = t // 2
    return tuple(w[(i + half) % t] for i in range(len(w)))
