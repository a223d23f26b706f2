# app/api/v1/endpoints/verify.py
"""
Verification Endpoints
Runs one named check and returns its report
"""
import time
from typing import Optional

from fastapi import APIRouter, HTTPException, Query, status

from app.api.v1.endpoints.sequences import to_http_error
from app.core.exceptions import PalctlError
from app.schemas.reports import VerificationReport
from app.services.survey_tables import survey_names
from app.services.verification import CHECKS, run_check
from app.utils.logger import get_logger

logger = get_logger(__name__)
router = APIRouter()


@router.get("/", summary="Available checks and survey tables")
async def list_checks():
    return {"checks": list(CHECKS), "survey_tables": survey_names()}


@router.get(
    "/{check}",
    response_model=VerificationReport,
    summary="Run a check",
    description="""
    Source checks (general, kernel, cassaigne, droubay-pirillo, rote, survey)
    need a source; the others ignore it. The report status is pass, fail or
    not_applicable; a failing report carries a re-checkable witness.
    """
)
def run_verification(
        check: str,
        source: Optional[str] = None,
        k_max: Optional[int] = Query(None, ge=1),
        budget: Optional[int] = Query(None, ge=2),
        instructions: Optional[str] = None,
        cf: Optional[str] = None,
):
    if check not in CHECKS:
        raise HTTPException(status_code=status.HTTP_404_NOT_FOUND, detail=f"Unknown check {check!r}")
    start_time = time.time()
    try:
        report = run_check(check, source=source, k_max=k_max, budget=budget, instructions=instructions, cf=cf)
    except PalctlError as e:
        raise to_http_error(e)
    logger.info(
        "Verification request completed",
        check=check,
        source=source,
        status=report.status,
        processing_time_ms=round((time.time() - start_time) * 1000, 2)
    )
    return report
