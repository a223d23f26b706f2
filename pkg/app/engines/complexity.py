"""
Complexity engine
Exact fac(k) and pal(k) on prefixes, the doubling stabilization protocol,
palindrome inventories, maximal palindromes and ratio tables
"""
import csv
import io
import math
import time
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from app.core.config import settings
from app.core.exceptions import InputError
from app.engines.palindromic_tree import PalindromicTree
from app.engines.suffix_automaton import SuffixAutomaton
from app.schemas.profile import (
    ComplexityProfile,
    Measure,
    PalindromeInventory,
    PalindromeWitness,
    RatioRow,
)
from app.sequences.sources import SequenceSource
from app.utils.logger import get_logger
from app.words.core import Word, is_palindrome, to_bytes

logger = get_logger(__name__)

CSV_HEADER = ["k", "fac", "pal", "prefix_len", "stable"]

# a maximal palindrome seen before L must stay unextended up to this many times L
MAXIMAL_CONFIRM_FACTOR = 4


# ------------------------------------------------------------
# COUNTS ON ONE WORD
# ------------------------------------------------------------

def palindrome_counts(w: Sequence[int], k_max: int) -> List[int]:
    """pal(0..k_max) of a finite word, pal(0) = 1"""
    return PalindromicTree(w).counts_by_length(k_max)


def factor_counts_windows(w: Sequence[int], k_max: int) -> List[int]:
    """Distinct length-k windows collected as byte slices"""
    data = to_bytes(w)
    n = len(data)
    counts = [1]
    for k in range(1, k_max + 1):
        counts.append(len({data[i:i + k] for i in range(n - k + 1)}))
    return counts


def factor_counts_automaton(w: Sequence[int], k_max: int, sigma: Optional[int] = None) -> List[int]:
    return SuffixAutomaton(w, sigma).factor_counts(k_max)


def factor_counts(w: Sequence[int], k_max: int, sigma: Optional[int] = None) -> List[int]:
    """fac(0..k_max) of a finite word; windows for small k_max, suffix automaton above"""
    if k_max <= settings.WINDOW_COUNT_MAX_K and (sigma is None or sigma <= 256):
        return factor_counts_windows(w, k_max)
    return factor_counts_automaton(w, k_max, sigma)


def brute_force_factor_counts(w: Sequence[int], k_max: int) -> List[int]:
    w = tuple(w)
    return [len({w[i:i + k] for i in range(len(w) - k + 1)}) for k in range(k_max + 1)]


def brute_force_palindrome_counts(w: Sequence[int], k_max: int) -> List[int]:
    w = tuple(w)
    counts = [1]
    for k in range(1, k_max + 1):
        counts.append(len({w[i:i + k] for i in range(len(w) - k + 1) if is_palindrome(w[i:i + k])}))
    return counts


# ------------------------------------------------------------
# STABILIZATION
# ------------------------------------------------------------

def _check_arguments(k_max: int, budget: int) -> None:
    if k_max < 1:
        raise InputError("k_max must be at least 1")
    if budget < 2 * k_max:
        raise InputError(f"budget {budget} must be at least 2 * k_max = {2 * k_max}")


def _initial_length(k_max: int, budget: int) -> int:
    return min(max(settings.INITIAL_PREFIX_LENGTH, 8 * k_max), budget)


def _measure(w: Word, k_max: int, measures: Tuple[Measure, ...], sigma: int) -> Dict[str, List[int]]:
    out: Dict[str, List[int]] = {}
    if "fac" in measures:
        out["fac"] = factor_counts(w, k_max, sigma)
    if "pal" in measures:
        out["pal"] = palindrome_counts(w, k_max)
    return out


def measure_profile(
        source: SequenceSource,
        k_max: int,
        budget: Optional[int] = None,
        measures: Tuple[Measure, ...] = ("fac", "pal"),
) -> ComplexityProfile:
    """
    Stabilized profile of a source

    Counts start at L0 = max(INITIAL_PREFIX_LENGTH, 8 k_max) and are recomputed
    on 2L until no count for k <= k_max changes across one doubling, or the
    budget is reached. Unchanged counts are flagged stable; at the budget the
    remaining ks stay unstable and the profile is still returned.
    """
    budget = settings.PALCTL_BUDGET if budget is None else budget
    _check_arguments(k_max, budget)
    started = time.perf_counter()

    length = _initial_length(k_max, budget)
    sigma = source.alphabet.size
    counts = _measure(source.prefix(length), k_max, measures, sigma)
    stable = [False] * (k_max + 1)

    while length < budget:
        next_length = min(2 * length, budget)
        next_counts = _measure(source.prefix(next_length), k_max, measures, sigma)
        stable = [
            all(counts[m][k] == next_counts[m][k] for m in counts)
            for k in range(k_max + 1)
        ]
        counts, length = next_counts, next_length
        if all(stable):
            break
    stable[0] = True

    profile = ComplexityProfile(
        source=source.name,
        parameters=source.parameters,
        k_max=k_max,
        prefix_len=length,
        fac=counts.get("fac"),
        pal=counts.get("pal"),
        stable=stable,
    )
    logger.info(
        "Measured complexity profile",
        source=source.name,
        k_max=k_max,
        prefix_len=length,
        measures=",".join(measures),
        stable=profile.all_stable,
        elapsed_ms=round((time.perf_counter() - started) * 1000, 1),
    )
    return profile


def factor_complexity(source: SequenceSource, k_max: int, budget: Optional[int] = None) -> ComplexityProfile:
    return measure_profile(source, k_max, budget, ("fac",))


def palindrome_complexity(source: SequenceSource, k_max: int, budget: Optional[int] = None) -> ComplexityProfile:
    return measure_profile(source, k_max, budget, ("pal",))


# ------------------------------------------------------------
# PALINDROME SETS
# ------------------------------------------------------------

def palindrome_inventory(source: SequenceSource, k_max: int, budget: Optional[int] = None) -> PalindromeInventory:
    """Palindromic factors of length <= k_max on the stabilized prefix, leftmost witnesses"""
    profile = palindrome_complexity(source, k_max, budget)
    tree = PalindromicTree(source.prefix(profile.prefix_len))
    return PalindromeInventory(
        source=source.name,
        k_max=k_max,
        prefix_len=profile.prefix_len,
        stable=profile.all_stable,
        palindromes=[PalindromeWitness(word=w, position=p) for w, p in tree.palindromes(k_max)],
    )


def palindrome_set(source: SequenceSource, k: int, budget: Optional[int] = None) -> Set[Word]:
    if k < 1:
        raise InputError("Palindrome length must be at least 1")
    return set(palindrome_inventory(source, k, budget).of_length(k))


def central_letter_count(source: SequenceSource, k: int, letter: int, budget: Optional[int] = None) -> int:
    """Length-k palindromic factors (k odd) whose central letter is the given symbol"""
    if k < 1 or k % 2 == 0:
        raise InputError("central_letter_count needs an odd length")
    return sum(1 for w in palindrome_set(source, k, budget) if w[k // 2] == letter)


def maximal_palindromes(source: SequenceSource, len_max: int, budget: Optional[int] = None) -> List[Word]:
    """
    Palindromic factors w, |w| <= len_max, such that a w a occurs for no letter a

    A candidate first seen before position L must still be unextended in the
    prefix of length 4L; L doubles until the list stops changing.
    """
    budget = settings.PALCTL_BUDGET if budget is None else budget
    _check_arguments(len_max, budget)
    length = _initial_length(len_max, max(budget // MAXIMAL_CONFIRM_FACTOR, 1))
    previous: Optional[List[Word]] = None
    while True:
        tree = PalindromicTree(source.prefix(MAXIMAL_CONFIRM_FACTOR * length))
        found = tree.unextended(len_max, ending_before=length)
        if found == previous or 2 * MAXIMAL_CONFIRM_FACTOR * length > budget:
            break
        previous, length = found, 2 * length
    logger.info(
        "Maximal palindromes",
        source=source.name,
        len_max=len_max,
        prefix_len=MAXIMAL_CONFIRM_FACTOR * length,
        count=len(found)
    )
    return found


# ------------------------------------------------------------
# RATIOS AND CSV
# ------------------------------------------------------------

def _fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def complexity_ratios(profile: ComplexityProfile) -> List[RatioRow]:
    """
    k pal(k) / fac(k) and pal(k) / sqrt(fac(k)) per k

    The square-root ratio is irrational in general; its exact square
    pal^2 / fac is emitted with a rounded float beside it.
    """
    if profile.fac is None or profile.pal is None:
        raise InputError("Ratios need a profile with both fac and pal")
    rows = []
    for k in range(1, profile.k_max + 1):
        fac, pal = profile.fac[k], profile.pal[k]
        if fac == 0:
            rows.append(RatioRow(k=k, fac=fac, pal=pal, defined=False, stable=profile.stable[k]))
            continue
        rows.append(RatioRow(
            k=k,
            fac=fac,
            pal=pal,
            defined=True,
            k_pal_over_fac=_fraction(Fraction(k * pal, fac)),
            pal_squared_over_fac=_fraction(Fraction(pal * pal, fac)),
            pal_over_sqrt_fac=round(pal / math.sqrt(fac), 12),
            stable=profile.stable[k],
        ))
    return rows


def profile_to_csv(profile: ComplexityProfile) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for k in range(1, profile.k_max + 1):
        writer.writerow([
            k,
            "" if profile.fac is None else profile.fac[k],
            "" if profile.pal is None else profile.pal[k],
            profile.prefix_len,
            "true" if profile.stable[k] else "false",
        ])
    return buffer.getvalue()


def profile_from_csv(text: str, source: str, parameters: Optional[Dict[str, str]] = None) -> ComplexityProfile:
    """
    Raises:
        InputError: wrong header, gaps in k or inconsistent prefix_len
    """
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != CSV_HEADER:
        raise InputError(f"CSV header must be {','.join(CSV_HEADER)}")
    rows = list(reader)
    if not rows:
        raise InputError("CSV profile has no rows")
    try:
        ks = [int(row["k"]) for row in rows]
        if ks != list(range(1, len(rows) + 1)):
            raise InputError("CSV rows must cover k = 1..k_max in order")
        lengths = {int(row["prefix_len"]) for row in rows}
        if len(lengths) != 1:
            raise InputError("CSV rows disagree on prefix_len")

        fac, pal = _csv_column(rows, "fac"), _csv_column(rows, "pal")
    except ValueError as e:
        if isinstance(e, InputError):
            raise
        raise InputError(f"Malformed CSV profile: {e}")

    return ComplexityProfile(
        source=source,
        parameters=parameters or {},
        k_max=len(rows),
        prefix_len=lengths.pop(),
        fac=fac,
        pal=pal,
        stable=[True] + [row["stable"] == "true" for row in rows],
    )


def _csv_column(rows: List[Dict[str, str]], name: str) -> Optional[List[int]]:
    cells = [row[name] for row in rows]
    if all(cell == "" for cell in cells):
        return None
    return [1] + [int(cell) for cell in cells]
