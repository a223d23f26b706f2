import pytest

from app.core.exceptions import InputError
from app.services.survey_tables import EXTRA_INSTRUCTIONS, SURVEY, survey_names, survey_table_check


def test_registry_covers_the_families():
    names = survey_names()
    for name in ("period-doubling", "fibonacci", "rote-fibonacci", "v-sequence", "chacon", "scrambler-image"):
        assert name in names
    assert all(f"paperfolding:{s}" in names for s in EXTRA_INSTRUCTIONS)
    assert all(f"rudin-shapiro:{s}" in names for s in EXTRA_INSTRUCTIONS)


@pytest.mark.parametrize("name", survey_names())
def test_tables_hold(name):
    budget = 1 << 16
    report = survey_table_check(name, budget)
    assert report.status == "pass", report.witness
    assert report.check == "survey"
    assert report.parameters["prefix_len"] <= budget


@pytest.mark.parametrize("name", ["period-doubling", "fibonacci", "rote-image", "v-sequence", "chacon", "loglog"])
def test_exact_tables_settle_within_budget(name):
    report = survey_table_check(name, 1 << 16)
    assert report.observations["untested"] == []


def test_kolakoski_rows_are_observations():
    entry = SURVEY["kolakoski"]
    assert all(e.observation for e in entry.expectations)
    report = survey_table_check("kolakoski", 1 << 12)
    assert report.status == "pass"


def test_unknown_table():
    with pytest.raises(InputError):
        survey_table_check("no-such-table")
