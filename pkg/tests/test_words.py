import pytest
from hypothesis import given, strategies as st

from app.core.exceptions import DomainError, InputError
from app.words.core import (
    BINARY,
    ONE_TWO,
    Alphabet,
    binary,
    cinf_derivative,
    factors,
    is_differentiable,
    is_factor,
    is_palindrome,
    reverse,
    run_lengths,
)
from app.words.periods import (
    border_array,
    classify_palindrome,
    fine_wilf_reduce,
    fine_wilf_threshold,
    has_period,
    lemma3_checks,
    lyndon_schutzenberger,
    periodic_palindrome_split,
    periods,
    smallest_period,
    twin,
    twin_by_decomposition,
)

binary_words = st.lists(st.integers(0, 1), min_size=1, max_size=40).map(tuple)


def test_alphabet_rejects_duplicates():
    with pytest.raises(ValueError):
        Alphabet(letters=("0", "0"))


def test_alphabet_rejects_whitespace_letter():
    with pytest.raises(ValueError):
        Alphabet(letters=("a b", "c"))


def test_parse_single_char_and_spaced():
    assert BINARY.parse("0110") == (0, 1, 1, 0)
    assert BINARY.parse("0 1 1 0") == (0, 1, 1, 0)
    assert BINARY.parse("") == ()


def test_parse_unknown_symbol():
    with pytest.raises(InputError):
        BINARY.parse("012")


def test_multi_char_letters_render_with_spaces():
    alphabet = Alphabet(letters=("ab", "c"))
    assert alphabet.parse("ab c ab") == (0, 1, 0)
    assert alphabet.render((0, 1)) == "ab c"


def test_validate_word_bounds():
    with pytest.raises(InputError):
        BINARY.validate_word((0, 2))


def test_palindrome_and_reverse():
    assert is_palindrome(binary("0110"))
    assert is_palindrome(())
    assert not is_palindrome(binary("01"))
    assert reverse(binary("001")) == binary("100")


def test_factors_and_is_factor():
    w = binary("01001")
    assert factors(w, 2) == {binary("01"), binary("10"), binary("00")}
    assert factors(w, 6) == set()
    assert is_factor(binary("100"), w)
    assert not is_factor(binary("11"), w)
    assert is_factor((), w)


def test_run_lengths():
    assert run_lengths(binary("00101")) == [(0, 2), (1, 1), (0, 1), (1, 1)]


def test_cinf_derivative():
    # 1 2 2 1 has runs 1, 2, 1; the outer runs of length one are dropped
    w = ONE_TWO.parse("1221")
    assert cinf_derivative(w) == ONE_TWO.parse("2")
    assert cinf_derivative(ONE_TWO.parse("112211")) == ONE_TWO.parse("222")


def test_cinf_derivative_rejects_long_runs():
    w = ONE_TWO.parse("1112")
    assert not is_differentiable(w)
    with pytest.raises(DomainError):
        cinf_derivative(w)


def test_border_array():
    assert border_array((0, 1, 0, 0, 1, 0, 1)) == [0, 0, 1, 1, 2, 3, 2]


def test_smallest_period_and_periods():
    w = binary("01101")
    assert smallest_period(w) == 3
    assert periods(w) == [3, 5]
    with pytest.raises(InputError):
        smallest_period(())


@given(binary_words)
def test_smallest_period_is_least_period(w):
    t = smallest_period(w)
    assert has_period(w, t)
    assert not any(has_period(w, p) for p in range(1, t))


def test_fine_wilf():
    assert fine_wilf_threshold(4, 6) == 8
    assert fine_wilf_reduce(binary("0000"), 2, 3) == 1
    assert fine_wilf_reduce(binary("010"), 2, 3) is None
    with pytest.raises(InputError):
        fine_wilf_reduce(binary("011"), 2, 3)


def test_lyndon_schutzenberger():
    assert lyndon_schutzenberger(binary("01"), binary("0"), binary("10")) == ((0,), (1,), 0)
    assert lyndon_schutzenberger(binary("01"), binary("1"), binary("10")) is None


@given(st.lists(st.integers(0, 1), min_size=1, max_size=6).map(tuple),
       st.lists(st.integers(0, 1), max_size=6).map(tuple),
       st.integers(0, 3))
def test_lyndon_schutzenberger_recovers_conjugates(u, v, e):
    x, z = u + v, v + u
    if not v:
        return
    y = (u + v) * e + u
    found = lyndon_schutzenberger(x, y, z)
    assert found is not None
    uu, vv, ee = found
    assert uu + vv == x and vv + uu == z and (uu + vv) * ee + uu == y


def test_period_lemma_on_periodic_words():
    report = lemma3_checks(binary("0101"), binary("010101"), binary("1010"))
    assert [item.applicable for item in report.items] == [True, True, True]
    assert report.all_hold


def test_period_lemma_reports_unmet_hypotheses():
    report = lemma3_checks(binary("011"), binary("0"), binary("1"))
    assert [item.applicable for item in report.items] == [False, False, False]
    assert report.all_hold


def test_classify_palindrome():
    assert classify_palindrome(binary("010")).palindrome_class == "non_periodic"
    record = classify_palindrome(binary("0110110"))
    assert (record.period, record.palindrome_class, record.twin) == (3, "odd_period", None)
    even = classify_palindrome(binary("01100110"))
    assert even.period == 4
    assert even.palindrome_class == "even_period"
    assert even.twin == binary("10011001")


def test_classify_rejects_non_palindromes():
    with pytest.raises(DomainError):
        classify_palindrome(binary("01"))
    with pytest.raises(DomainError):
        twin(binary("010"))


def test_twin_formulas_agree():
    w = binary("01100110")
    assert twin_by_decomposition(w) == twin(w)
    assert twin(twin(w)) == w


def test_periodic_palindrome_split():
    assert periodic_palindrome_split(binary("0110110")) == ((0,), (1, 1), 2)
    assert periodic_palindrome_split(binary("010")) is None
    assert periodic_palindrome_split(binary("01")) is None
