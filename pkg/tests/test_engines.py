import pytest
from hypothesis import given, strategies as st

from app.core.exceptions import InputError
from app.engines.complexity import (
    CSV_HEADER,
    brute_force_factor_counts,
    brute_force_palindrome_counts,
    central_letter_count,
    complexity_ratios,
    factor_complexity,
    factor_counts,
    factor_counts_automaton,
    factor_counts_windows,
    maximal_palindromes,
    measure_profile,
    palindrome_complexity,
    palindrome_counts,
    palindrome_inventory,
    palindrome_set,
    profile_from_csv,
    profile_to_csv,
)
from app.engines.palindromic_tree import PalindromicTree
from app.engines.ruler_palindromes import ruler_palindrome_counts, ruler_run, ruler_run_word
from app.engines.suffix_automaton import SuffixAutomaton
from app.schemas.profile import ComplexityProfile
from app.sequences.zoo import builtin, periodic
from app.services.verification import pansiot_maximal_words, pansiot_rule
from app.words.core import binary


@st.composite
def words(draw, max_alphabet=4, max_size=80):
    sigma = draw(st.integers(1, max_alphabet))
    w = draw(st.lists(st.integers(0, sigma - 1), max_size=max_size))
    return tuple(w), sigma


@given(words())
def test_palindromic_tree_matches_brute_force(case):
    w, _ = case
    k_max = len(w) + 1
    assert palindrome_counts(w, k_max) == brute_force_palindrome_counts(w, k_max)


@given(words())
def test_factor_counts_match_brute_force(case):
    w, sigma = case
    k_max = len(w) + 1
    expected = brute_force_factor_counts(w, k_max)
    assert factor_counts_automaton(w, k_max, sigma) == expected
    assert factor_counts_windows(w, k_max) == expected
    assert factor_counts(w, k_max, sigma) == expected


@given(words(max_alphabet=3, max_size=60))
def test_palindromic_tree_node_bound(case):
    w, _ = case
    tree = PalindromicTree(w)
    assert len(tree) <= len(w)
    for node in tree.nodes():
        word = tree.word(node)
        start = tree.start(node)
        assert w[start:start + len(word)] == word


def test_palindromic_tree_small_word():
    tree = PalindromicTree(binary("0110"))
    assert len(tree) == 4
    assert tree.palindromes(4) == [((0,), 0), ((1,), 1), ((1, 1), 1), ((0, 1, 1, 0), 0)]


def test_suffix_automaton_contains():
    automaton = SuffixAutomaton(binary("01001"), 2)
    assert automaton.contains(binary("100"))
    assert not automaton.contains(binary("11"))
    with pytest.raises(InputError):
        SuffixAutomaton((0, 3), 2)


def test_period_doubling_profile(period_doubling, budget):
    profile = measure_profile(period_doubling, 16, budget)
    assert profile.pal[1:8] == [2, 1, 3, 0, 4, 0, 3]
    assert profile.fac[1:4] == [2, 3, 5]
    assert profile.all_stable
    assert profile.unstable_ks() == []
    assert profile.prefix_len <= budget


def test_single_measure_profiles(fibonacci, budget):
    pal_only = palindrome_complexity(fibonacci, 10, budget)
    assert pal_only.fac is None
    assert pal_only.measures == ("pal",)
    fac_only = factor_complexity(fibonacci, 10, budget)
    assert fac_only.pal is None
    assert fac_only.fac[1:] == [k + 1 for k in range(1, 11)]


def test_profile_argument_checks(fibonacci):
    with pytest.raises(InputError):
        measure_profile(fibonacci, 0, 100)
    with pytest.raises(InputError):
        measure_profile(fibonacci, 64, 100)


def test_profile_stops_at_budget(budget):
    # 1^n grows forever in champernowne, so long counts keep changing
    profile = measure_profile(builtin("champernowne-binary"), 40, budget)
    assert profile.prefix_len == budget
    assert not profile.all_stable


def test_profile_rejects_impossible_counts():
    with pytest.raises(ValueError):
        ComplexityProfile(source="x", k_max=1, prefix_len=4, fac=[1, 1], pal=[1, 2], stable=[True, True])
    with pytest.raises(ValueError):
        ComplexityProfile(source="x", k_max=2, prefix_len=4, pal=[1, 2], stable=[True, True])


def test_csv_round_trip(period_doubling, budget):
    profile = measure_profile(period_doubling, 12, budget)
    text = profile_to_csv(profile)
    assert text.splitlines()[0] == ",".join(CSV_HEADER)
    assert text.splitlines()[1] == f"1,2,2,{profile.prefix_len},true"
    restored = profile_from_csv(text, profile.source, profile.parameters)
    assert restored == profile


@pytest.mark.parametrize("text", [
    "k,fac\n1,2\n",
    "k,fac,pal,prefix_len,stable\n",
    "k,fac,pal,prefix_len,stable\n2,3,1,64,true\n",
    "k,fac,pal,prefix_len,stable\n1,2,2,64,true\n2,3,1,32,true\n",
    "k,fac,pal,prefix_len,stable\n1,x,2,64,true\n",
])
def test_csv_rejects_malformed(text):
    with pytest.raises(InputError):
        profile_from_csv(text, "x")


def test_ratios(fibonacci, budget):
    rows = complexity_ratios(measure_profile(fibonacci, 4, budget))
    assert [row.k_pal_over_fac for row in rows] == ["1/1", "2/3", "3/2", "4/5"]
    assert rows[0].pal_squared_over_fac == "2/1"
    assert rows[1].pal_over_sqrt_fac == pytest.approx(1 / 3 ** 0.5)
    assert all(row.defined and row.stable for row in rows)


def test_ratios_need_both_measures(fibonacci, budget):
    with pytest.raises(InputError):
        complexity_ratios(palindrome_complexity(fibonacci, 4, budget))


def test_inventory_and_sets(period_doubling, budget):
    inventory = palindrome_inventory(period_doubling, 5, budget)
    assert set(inventory.of_length(3)) == {binary("000"), binary("010"), binary("101")}
    assert inventory.stable
    prefix = period_doubling.prefix(inventory.prefix_len)
    for witness in inventory.palindromes:
        assert prefix[witness.position:witness.position + len(witness.word)] == witness.word
    assert palindrome_set(period_doubling, 4, budget) == set()
    assert central_letter_count(period_doubling, 3, 0, budget) == 2


def test_central_letter_count_needs_odd_length(period_doubling):
    with pytest.raises(InputError):
        central_letter_count(period_doubling, 4, 0)


def test_maximal_palindromes_pansiot():
    found = maximal_palindromes(builtin("pansiot-quadratic"), 20, 1 << 16)
    assert found[:2] == [binary("0"), binary("1001")]
    assert found == pansiot_maximal_words(20)


def test_sturmian_palindromes_always_extend(fibonacci, budget):
    assert maximal_palindromes(fibonacci, 12, budget) == []


def test_periodic_source_profile(budget):
    profile = measure_profile(periodic("001"), 6, budget)
    assert profile.fac[1:] == [2, 3, 3, 3, 3, 3]
    assert profile.pal[1:] == [2, 1, 1, 1, 1, 1]


def test_ruler_runs():
    assert [ruler_run(i) for i in range(1, 9)] == [1, 2, 1, 3, 1, 2, 1, 4]
    assert ruler_run_word(12) == binary("001001100100")


def test_ruler_run_word_is_the_pansiot_fixed_point():
    assert ruler_run_word(1 << 12) == builtin("pansiot-quadratic").prefix(1 << 12)


def test_ruler_palindrome_counts_first_values():
    counts = ruler_palindrome_counts(20)
    assert counts[0] == 1
    assert counts[1:] == [2, 2, 2, 3, 3, 3, 4, 4, 5, 5, 5, 6, 6, 7, 7, 8, 8, 9, 9, 9]


@pytest.mark.parametrize("k_max", [1, 2, 3, 5, 8])
def test_ruler_palindrome_counts_small_ranges(k_max):
    assert ruler_palindrome_counts(k_max) == ruler_palindrome_counts(20)[:k_max + 1]


def test_ruler_palindrome_counts_match_palindromic_tree():
    # every palindrome of length <= 12 occurs before the run 1^12 at index 2048
    prefix = builtin("pansiot-quadratic").prefix(1 << 15)
    assert ruler_palindrome_counts(12) == palindrome_counts(prefix, 12)


def test_ruler_palindrome_counts_rejects_zero():
    with pytest.raises(InputError):
        ruler_palindrome_counts(0)


@pytest.mark.slow
def test_ruler_palindrome_counts_long_range():
    counts = ruler_palindrome_counts(512)
    assert all(counts[k] == pansiot_rule(k) for k in range(1, 513))


@pytest.mark.parametrize("name", ["champernowne-binary", "pansiot-quadratic", "kolakoski", "remcor-limit"])
def test_larger_budget_never_lowers_counts(name):
    source = builtin(name)
    profiles = [measure_profile(source, 24, budget) for budget in (1 << 10, 1 << 12, 1 << 14)]
    for small, large in zip(profiles, profiles[1:]):
        assert large.prefix_len >= small.prefix_len
        for k in range(25):
            assert large.fac[k] >= small.fac[k]
            assert large.pal[k] >= small.pal[k]
