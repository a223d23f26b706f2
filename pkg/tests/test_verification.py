import pytest

from app.core.exceptions import InputError
from app.engines.complexity import palindrome_counts
from app.sequences.zoo import builtin, periodic
from app.services.verification import (
    CHECKS,
    STANDALONE_CHECKS,
    kernel_finiteness_check,
    pansiot_maximal_words,
    pansiot_rule,
    recursion_set,
    rote_phi,
    rote_psi,
    run_check,
    scrambler_absence_oracle,
    verify_cassaigne_bound,
    verify_class_p_examples,
    verify_counting_rule,
    verify_droubay_pirillo,
    verify_engine_oracle,
    verify_fine_wilf_sharpness,
    verify_general_recursion,
    verify_kernel,
    verify_maximal_palindromes,
    verify_period_divisibility,
    verify_remcor,
    verify_rote_bijection,
    verify_twin_involution,
)
from app.words.core import BINARY, Alphabet, binary
from app.words.morphism import Morphism

AB = Alphabet(letters=("a", "b"))
PERIOD_DOUBLING = Morphism.from_rules(BINARY, {"0": "01", "1": "00"})


def test_recursion_set():
    # l = 2, |p| = 1: odd n has s in {(n-1)/2, (n+1)/2}, even n has none
    assert recursion_set(7, 2, 1) == [3, 4]
    assert recursion_set(8, 2, 1) == []
    assert recursion_set(1, 2, 1) == [1]


def test_general_recursion_period_doubling(budget):
    report = verify_general_recursion(PERIOD_DOUBLING, 32, budget, "period-doubling")
    assert report.status == "pass"
    assert report.observations["n0"] == 3
    assert report.observations["failures_below_n0"][0]["n"] == 2
    assert report.parameters["l"] == 2 and report.parameters["l_p"] == 1


def test_general_recursion_thue_morse_square(budget):
    squared = Morphism.from_rules(AB, {"a": "abba", "b": "baab"})
    report = verify_general_recursion(squared, 32, budget)
    assert report.status == "pass"
    assert report.parameters["l_p"] == 0
    assert report.observations["n0"] == 5


@pytest.mark.parametrize("m", [
    Morphism.from_rules(BINARY, {"0": "01", "1": "0"}),
    Morphism.from_rules(AB, {"a": "ab", "b": "ba"}),
    Morphism.from_rules(BINARY, {"0": "00", "1": "11"}),
])
def test_general_recursion_not_applicable(m):
    assert verify_general_recursion(m, 16, 1 << 12).status == "not_applicable"


def test_kernel_of_periodic_values():
    report = kernel_finiteness_check([n % 2 for n in range(1024)], 2, 4, 1024)
    assert report.status == "pass"
    assert report.observations["distinct_by_depth"] == [1, 3, 3, 3, 3]


def test_kernel_of_identity_grows():
    report = kernel_finiteness_check(list(range(1024)), 2, 4, 1024)
    assert report.status == "fail"
    assert report.witness["count"] > report.witness["previous"]


def test_period_doubling_palindromes_have_finite_kernel():
    values = palindrome_counts(builtin("period-doubling").prefix(1 << 15), 1023)
    report = kernel_finiteness_check(values, 2, 5, 1024, "period-doubling")
    assert report.status == "pass"
    assert report.observations["distinct_by_depth"] == [1, 3, 6, 9, 10, 10]


def test_champernowne_palindromes_kernel_keeps_growing():
    report = verify_kernel(builtin("champernowne-binary"), depth=5, horizon=1024, budget=1 << 14)
    assert report.status == "fail"
    assert report.witness["count"] > report.witness["previous"] == 31


@pytest.mark.parametrize("kwargs", [
    {"d": 1},
    {"depth": 0},
    {"horizon": 64},
])
def test_kernel_argument_checks(kwargs):
    options = {"d": 2, "depth": 4, "horizon": 1024, **kwargs}
    with pytest.raises(InputError):
        kernel_finiteness_check([0] * 1024, **options)


def test_kernel_needs_enough_values():
    with pytest.raises(InputError):
        kernel_finiteness_check([0] * 100, 2, 3, 1024)


def test_cassaigne_bound(fibonacci, budget):
    report = verify_cassaigne_bound(fibonacci, 16, budget)
    assert report.status == "pass"
    assert report.observations["untested_k"] == []


def test_cassaigne_periodic_is_not_applicable(budget):
    assert verify_cassaigne_bound(periodic("01"), 8, budget).status == "not_applicable"


def test_droubay_pirillo(fibonacci, period_doubling, budget):
    sturmian = verify_droubay_pirillo(fibonacci, 20, budget)
    assert sturmian.status == "pass"
    assert sturmian.observations["sturmian_consistent"]

    other = verify_droubay_pirillo(period_doubling, 20, budget)
    assert other.status == "fail"
    assert other.witness == {"k": 3, "measure": "pal", "expected": 2, "measured": 3}
    assert not other.observations["sturmian_consistent"]


def test_rote_maps():
    w = binary("0110")
    assert rote_phi(w) == binary("101")
    assert rote_psi(rote_phi(w), w[0]) == w
    assert rote_psi(binary("101"), 1) == binary("1001")


def test_rote_bijection(budget):
    report = verify_rote_bijection(builtin("rote-fibonacci"), 16, budget)
    assert report.status == "pass"


def test_rote_bijection_fails_off_rote(period_doubling, budget):
    report = verify_rote_bijection(period_doubling, 8, budget)
    assert report.status == "fail"
    assert report.witness["k"] == 2


def test_scrambler_oracle():
    report = scrambler_absence_oracle()
    assert report.status == "pass"
    assert report.observations["windows_checked"] == 16 * ((24 - 8 + 1) + (24 - 9 + 1))


def test_scrambler_oracle_with_prefix():
    report = scrambler_absence_oracle(4096)
    assert report.status == "pass"
    assert (report.observations["pal_8"], report.observations["pal_9"]) == (0, 0)


def test_word_level_checks():
    assert verify_twin_involution(10).status == "pass"
    assert verify_period_divisibility(10).status == "pass"
    fine_wilf = verify_fine_wilf_sharpness(5)
    assert fine_wilf.status == "pass"
    assert set(fine_wilf.observations["extremal_words"]) == {"2,3", "2,5", "3,4", "3,5", "4,5"}


def test_pansiot_rule():
    assert [pansiot_rule(k) for k in range(1, 5)] == [2, 2, 2, 3]
    assert [len(w) for w in pansiot_maximal_words(40)] == [1, 4, 9, 18, 35]


def test_maximal_palindromes_check():
    report = verify_maximal_palindromes(20, 1 << 16)
    assert report.status == "pass"
    assert report.observations["found"][:2] == ["0", "1001"]


def test_counting_rule():
    report = verify_counting_rule(64, 1 << 16)
    assert report.status == "pass"
    assert report.observations["tested_k"] == [1, 64]
    assert report.observations["engine_checked_k"] == [1, 11]
    assert "untested_k" not in report.observations


def test_counting_rule_small_budget_still_covers_range():
    report = verify_counting_rule(40, 32)
    assert report.status == "pass"
    assert report.observations["tested_k"] == [1, 40]
    assert "engine_checked_k" not in report.observations


@pytest.mark.slow
def test_counting_rule_full_range():
    report = verify_counting_rule(512)
    assert report.status == "pass"
    assert report.observations["tested_k"] == [1, 512]


def test_remcor(budget):
    report = verify_remcor(budget)
    assert report.status == "pass"
    assert set(report.observations) >= {"pal_4", "pal_16", "k_pal_over_fac_16"}


@pytest.mark.slow
def test_word_level_checks_full_ranges():
    assert verify_twin_involution(14).status == "pass"
    assert verify_period_divisibility(16).status == "pass"
    fine_wilf = verify_fine_wilf_sharpness(6)
    assert fine_wilf.status == "pass"
    assert "5,6" in fine_wilf.observations["extremal_words"]


@pytest.mark.slow
def test_engine_oracle_full_run():
    report = verify_engine_oracle()
    assert report.status == "pass"
    assert report.parameters["count"] == 200 and report.parameters["max_length"] == 2000


def test_class_p_examples():
    report = verify_class_p_examples(8)
    assert report.status == "pass"
    assert report.observations["normalized"] == "a->bab, b->babab"


def test_engine_oracle():
    report = verify_engine_oracle(count=20, max_length=300, k_max=12, seed=7)
    assert report.status == "pass"


def test_run_check_dispatch(budget):
    report = run_check("droubay-pirillo", source="sturmian", cf="(2)", k_max=12, budget=budget)
    assert report.status == "pass"
    assert report.source == "sturmian[(2)]"


def test_run_check_general_needs_morphic_source(budget):
    report = run_check("general", source="kolakoski", k_max=8, budget=budget)
    assert report.status == "not_applicable"


def test_run_check_errors():
    with pytest.raises(InputError):
        run_check("no-such-check")
    with pytest.raises(InputError):
        run_check("cassaigne")
    assert set(STANDALONE_CHECKS) < set(CHECKS)


@pytest.mark.slow
def test_scrambler_oracle_on_a_million_symbols():
    report = scrambler_absence_oracle(1_000_000)
    assert report.status == "pass"
    assert report.observations["prefix_len"] == 1_000_000
