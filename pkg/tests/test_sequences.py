import pytest

from app.core.config import settings
from app.core.exceptions import InputError, MorphismFileError, ResourceError
from app.sequences.sources import DifferenceSource, remcor_length, remcor_word
from app.sequences.streams import parse_continued_fraction, parse_instructions
from app.sequences.zoo import (
    builtin,
    builtin_entry,
    builtin_names,
    make_source,
    periodic,
    pointwise_image,
)
from app.services.verification import REMCOR_W2
from app.words.core import BINARY, ONE_TWO, cinf_derivative, factors, is_differentiable, run_lengths


def rendered(source, n):
    return source.alphabet.render(source.prefix(n))


# ------------------------------------------------------------
# parameter streams
# ------------------------------------------------------------

def test_instruction_stream_forms():
    assert parse_instructions("0(01)").take(6) == [0, 0, 1, 0, 1, 0]
    assert parse_instructions("(1)").take(3) == [1, 1, 1]
    assert parse_instructions("011").take(3) == [0, 1, 1]
    assert parse_instructions("01...").take(4) == [0, 1, 1, 1]


def test_continued_fraction_forms():
    assert parse_continued_fraction("1,(2,1)").take(5) == [1, 2, 1, 2, 1]
    assert parse_continued_fraction("1,2,...").take(4) == [1, 2, 2, 2]
    assert parse_continued_fraction("1,(2,1)").describe() == "1,(2,1)"


def test_finite_stream_runs_out():
    stream = parse_instructions("01")
    assert stream.finite and stream.length == 2
    with pytest.raises(InputError):
        stream.term(2)


@pytest.mark.parametrize("text", ["", "0(1", "012", "(0))"])
def test_bad_instruction_streams(text):
    with pytest.raises(InputError):
        parse_instructions(text)


@pytest.mark.parametrize("text", ["0", "1,-2", "a"])
def test_bad_continued_fractions(text):
    with pytest.raises(InputError):
        parse_continued_fraction(text)


# ------------------------------------------------------------
# builtin sources
# ------------------------------------------------------------

@pytest.mark.parametrize("name, prefix", [
    ("period-doubling", "01000101"),
    ("fibonacci", "01001010"),
    ("thue-morse", "abbabaab"),
    ("kolakoski", "221121221"),
    ("champernowne-binary", "0110111"),
    ("paperfolding-classical", "00110110"),
    ("rudin-shapiro-classical", "00010010"),
    ("rote-fibonacci", "00111001"),
    ("pansiot-quadratic", "0010011"),
    ("scrambler-image", "011001001011"),
])
def test_builtin_prefixes(name, prefix):
    assert rendered(builtin(name), len(prefix)) == prefix


def test_every_builtin_generates():
    for name in builtin_names():
        source = builtin(name)
        assert len(source.prefix(256)) == 256
        assert all(0 <= s < source.alphabet.size for s in source.prefix(256))


def test_builtins_are_shared():
    assert builtin("fibonacci") is builtin("fibonacci")
    assert builtin_entry("loglog").recurrent is False


def test_unknown_builtin():
    with pytest.raises(InputError):
        builtin("no-such-sequence")


def test_prefixes_extend_each_other():
    source = make_source("sturmian", cf="1,(2,1)")
    long = source.prefix(500)
    assert source.prefix(37) == long[:37]
    assert source.prefix(1000)[:500] == long


@pytest.mark.parametrize("name", builtin_names())
def test_builtin_prefixes_extend_each_other(name):
    source = builtin(name)
    long = source.prefix(600)
    for n in (1, 7, 64, 299):
        assert source.prefix(n) == long[:n]


def test_kolakoski_is_its_own_run_length_sequence():
    w = builtin("kolakoski").prefix(60)
    lengths = [length for _, length in run_lengths(w)]
    # the last run may be cut by the prefix
    assert lengths[:-1] == [s + 1 for s in w[:len(lengths) - 1]]
    assert ONE_TWO.render(w[:12]) == "221121221221"


def test_kolakoski_factors_are_closed_under_derivative():
    prefix = builtin("kolakoski").prefix(4096)
    by_length = {k: factors(prefix, k) for k in range(41)}
    for k in range(1, 41):
        for f in by_length[k]:
            assert is_differentiable(f)
            d = cinf_derivative(f)
            assert d in by_length[len(d)], ONE_TWO.render(f)


def test_sturmian_golden_ratio_is_fibonacci():
    assert make_source("sturmian", cf="(1)").prefix(300) == builtin("fibonacci").prefix(300)


def test_finite_continued_fraction_too_short():
    with pytest.raises(InputError):
        make_source("sturmian", cf="1,1").prefix(100)


def test_rote_difference_is_beta():
    rote = make_source("rote", cf="(2)")
    beta = make_source("sturmian", cf="(2)")
    assert DifferenceSource("delta", rote).prefix(400) == beta.prefix(400)


def test_paperfolding_instructions_from_selector():
    assert rendered(make_source("paperfolding", instructions="0(01)"), 8) == "00110110"
    assert rendered(make_source("rudin-shapiro", instructions="0(01)"), 8) == "00010010"


@pytest.mark.parametrize("selector, kwargs", [
    ("sturmian", {}),
    ("rote", {}),
    ("paperfolding", {}),
    ("rudin-shapiro", {}),
])
def test_parametric_sources_need_parameters(selector, kwargs):
    with pytest.raises(InputError):
        make_source(selector, **kwargs)


def test_file_source(morphism_file):
    path = morphism_file("alphabet: a b\nrule: a -> a b\nrule: b -> b a\nseed: a\n")
    source = make_source(f"file:{path}")
    assert rendered(source, 8) == "abbabaab"


def test_bad_file_source(morphism_file):
    path = morphism_file("alphabet: a b\nrule: a -> a c\n")
    with pytest.raises(MorphismFileError):
        make_source(f"file:{path}")


def test_periodic_and_image():
    assert rendered(periodic("01"), 5) == "01010"
    doubled = pointwise_image(periodic("01"), {"0": "00", "1": "1"})
    assert rendered(doubled, 6) == "001001"
    with pytest.raises(InputError):
        pointwise_image(periodic("01"), {"0": "00"})


def test_prefix_limits():
    source = builtin("period-doubling")
    with pytest.raises(InputError):
        source.prefix(-1)
    with pytest.raises(ResourceError):
        source.prefix(settings.GENERATOR_MAX_LENGTH + 1)


def test_remcor_words():
    assert BINARY.render(remcor_word(1)) == "10011"
    assert BINARY.render(remcor_word(2)) == REMCOR_W2
    assert [remcor_length(j) for j in range(3)] == [1, 5, 69]
    assert len(remcor_word(3)) == remcor_length(3)


def test_remcor_limit_prefix():
    assert rendered(builtin("remcor-limit"), len(REMCOR_W2)) == REMCOR_W2
