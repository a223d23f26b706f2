import pytest

from app.services.report_service import ReportJob, ReportService, default_jobs
from app.services.survey_tables import survey_names
from app.services.verification import STANDALONE_CHECKS


def test_job_labels():
    assert ReportJob("survey", {"source": "fibonacci"}).label() == "survey:fibonacci"
    assert ReportJob("twin", {}).label() == "twin"


def test_default_jobs_cover_surveys_and_standalone_checks():
    labels = [job.label() for job in default_jobs(1 << 14)]
    assert all(f"survey:{name}" in labels for name in survey_names())
    assert all(check in labels for check in STANDALONE_CHECKS)
    assert all(job.options["budget"] == 1 << 14 for job in default_jobs(1 << 14))


def test_small_report_keeps_job_order():
    jobs = [
        ReportJob("droubay-pirillo", {"source": "period-doubling", "k_max": 12, "budget": 1 << 12}),
        ReportJob("twin", {"max_len": 8}),
        ReportJob("general", {"source": "kolakoski", "k_max": 8, "budget": 1 << 12}),
    ]
    report = ReportService(budget=1 << 12, workers=1).run(jobs)
    assert [r.check for r in report.reports] == ["droubay-pirillo", "twin", "general"]
    assert report.summary == {"pass": 1, "fail": 1, "not_applicable": 1}
    assert report.metadata.config["jobs"] == ["droubay-pirillo:period-doubling", "twin", "general:kolakoski"]


def test_failing_job_is_reported_not_raised():
    report = ReportService(budget=1 << 12).run([ReportJob("cassaigne", {"source": "no-such-sequence"})])
    only = report.reports[0]
    assert only.status == "not_applicable"
    assert only.notes[0].startswith("InputError")


@pytest.mark.slow
def test_full_report_runs_every_job():
    budget = 1 << 16
    report = ReportService(budget=budget, workers=1).run()
    assert len(report.reports) == len(default_jobs(budget))
    assert sum(report.summary.values()) == len(report.reports)
    failed = [r.check + ":" + str(r.source) for r in report.reports if r.status == "fail"]
    assert report.summary["fail"] == 0, failed
    by_label = dict(zip(report.metadata.config["jobs"], report.reports))
    for label in ("counting-rule", "maximal-palindromes", "kernel:period-doubling", "general:thue-morse-squared"):
        assert by_label[label].status == "pass"
