"""
Report Service
Runs the full survey suite as independent jobs and assembles one consolidated report
"""
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, NamedTuple, Optional

from app.core.config import settings
from app.core.exceptions import PalctlError
from app.schemas.reports import ConsolidatedReport, ReportMetadata, VerificationReport
from app.sequences.zoo import builtin_names
from app.services.survey_tables import STURMIAN_SLOPES, survey_names
from app.services.verification import STANDALONE_CHECKS, run_check
from app.utils.logger import get_logger

logger = get_logger(__name__)


class ReportJob(NamedTuple):
    check: str
    options: Dict[str, Any]

    def label(self) -> str:
        source = self.options.get("source")
        return f"{self.check}:{source}" if source else self.check


def default_jobs(budget: int) -> List[ReportJob]:
    """Job list of the consolidated report; its order is the order of the output"""
    jobs = [ReportJob("survey", {"source": name, "budget": budget}) for name in survey_names()]
    jobs.append(ReportJob("droubay-pirillo", {"source": "fibonacci", "budget": budget}))
    for slope in STURMIAN_SLOPES:
        jobs.append(ReportJob("droubay-pirillo", {"source": "sturmian", "cf": slope, "budget": budget}))
        jobs.append(ReportJob("rote", {"source": "rote", "cf": slope, "k_max": 32, "budget": budget}))
    jobs.append(ReportJob("rote", {"source": "rote-fibonacci", "k_max": 32, "budget": budget}))
    jobs += [
        ReportJob("general", {"source": "period-doubling", "budget": budget}),
        ReportJob("general", {"source": "thue-morse-squared", "budget": budget}),
        ReportJob("kernel", {"source": "period-doubling", "budget": budget}),
    ]
    jobs += [ReportJob("cassaigne", {"source": name, "budget": budget}) for name in builtin_names()]
    jobs += [ReportJob(check, {"budget": budget}) for check in STANDALONE_CHECKS]
    return jobs


def _run_job(job: ReportJob) -> VerificationReport:
    try:
        return run_check(job.check, **job.options)
    except PalctlError as e:
        logger.error("Report job failed", job=job.label(), error=str(e))
        return VerificationReport(
            check=job.check,
            source=job.options.get("source"),
            parameters={k: v for k, v in job.options.items() if k != "source"},
            status="not_applicable",
            notes=[f"{type(e).__name__}: {e}"],
        )


class ReportService:
    """
    Fans jobs out over worker processes when more than one worker is configured;
    results are always assembled in job order
    """

    def __init__(self, budget: Optional[int] = None, workers: Optional[int] = None):
        self.budget = settings.PALCTL_BUDGET if budget is None else budget
        self.workers = settings.MAX_WORKERS if workers is None else max(1, workers)

    def run(self, jobs: Optional[List[ReportJob]] = None) -> ConsolidatedReport:
        jobs = default_jobs(self.budget) if jobs is None else jobs
        start_time = time.time()
        logger.info("Starting consolidated report", jobs=len(jobs), workers=self.workers, budget=self.budget)

        if self.workers > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                reports = list(pool.map(_run_job, jobs))
        else:
            reports = [_run_job(job) for job in jobs]

        report = ConsolidatedReport(
            metadata=ReportMetadata(
                project=settings.PROJECT_NAME,
                version=settings.VERSION,
                config={"budget": self.budget, "jobs": [job.label() for job in jobs]},
            ),
            reports=reports,
        )
        logger.info(
            "Consolidated report completed",
            elapsed_ms=round((time.time() - start_time) * 1000, 2),
            **report.summary
        )
        return report


def run_report(budget: Optional[int] = None, workers: Optional[int] = None) -> ConsolidatedReport:
    return ReportService(budget, workers).run()
