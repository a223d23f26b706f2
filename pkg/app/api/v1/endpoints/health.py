# app/api/v1/endpoints/health.py
"""
Health Check Endpoint
Configuration summary plus a self-test of the counting engines on small words
"""
import time
from datetime import datetime
from typing import Dict, Literal

from fastapi import APIRouter, HTTPException, status

from app.core.config import settings
from app.engines.complexity import (
    brute_force_factor_counts,
    brute_force_palindrome_counts,
    factor_counts_automaton,
    palindrome_counts,
)
from app.schemas.reports import ComponentStatus, HealthResponse
from app.sequences.zoo import builtin, builtin_names
from app.utils.logger import get_logger
from app.words.core import BINARY

logger = get_logger(__name__)
router = APIRouter()

SELF_TEST_WORD = "0110100110010110"


@router.get(
    "/",
    response_model=HealthResponse,
    summary="Full health check",
    description="""
    Checks the components every computation depends on:

    - Engines: palindromic tree and suffix automaton against brute force
    - Registry: builtin sequences resolve and generate their documented prefixes
    - Configuration: budget and generator limits are consistent

    Possible states:
    - healthy: every component passed
    - degraded: a component reported a warning
    - unhealthy: a component failed
    """
)
async def health_check():
    start_time = time.time()
    overall_status: Literal["healthy", "degraded", "unhealthy"] = "healthy"
    components: Dict[str, ComponentStatus] = {}

    try:
        logger.info("Starting health check")

        components["engines"] = await _check_engines()
        components["registry"] = await _check_registry()
        components["configuration"] = await _check_configuration()

        for component in components.values():
            if component.status == "error":
                overall_status = "unhealthy"
            elif component.status == "warning" and overall_status == "healthy":
                overall_status = "degraded"

        logger.info(
            "Health check completed",
            overall_status=overall_status,
            check_time_ms=round((time.time() - start_time) * 1000, 2),
            components_checked=len(components)
        )
        return HealthResponse(
            status=overall_status,
            version=settings.VERSION,
            environment=settings.ENVIRONMENT,
            timestamp=datetime.now(),
            components=components,
        )

    except Exception as e:
        logger.error("Health check failed", error=str(e))
        return HealthResponse(
            status="unhealthy",
            version=settings.VERSION,
            environment=settings.ENVIRONMENT,
            timestamp=datetime.now(),
            components={"error": ComponentStatus(
                status="error",
                message=str(e),
                details={"exception_type": type(e).__name__}
            )},
        )


async def _check_engines() -> ComponentStatus:
    try:
        w = BINARY.parse(SELF_TEST_WORD)
        k_max = len(w)
        pal_ok = palindrome_counts(w, k_max) == brute_force_palindrome_counts(w, k_max)
        fac_ok = factor_counts_automaton(w, k_max, 2) == brute_force_factor_counts(w, k_max)
        if not (pal_ok and fac_ok):
            return ComponentStatus(
                status="error",
                message="Engine disagrees with brute force",
                details={"word": SELF_TEST_WORD, "palindromic_tree": pal_ok, "suffix_automaton": fac_ok}
            )
        return ComponentStatus(status="healthy", message="Engines agree with brute force",
                               details={"word": SELF_TEST_WORD})
    except Exception as e:
        return ComponentStatus(
            status="error",
            message=f"Engine self-test failed: {e}",
            details={"exception_type": type(e).__name__}
        )


async def _check_registry() -> ComponentStatus:
    try:
        source = builtin("period-doubling")
        prefix = source.alphabet.render(source.prefix(8))
        if prefix != "01000101":
            return ComponentStatus(
                status="error",
                message="period-doubling prefix mismatch",
                details={"prefix": prefix}
            )
        return ComponentStatus(
            status="healthy",
            message=f"{len(builtin_names())} builtin sequences registered",
            details={"builtins": builtin_names()}
        )
    except Exception as e:
        return ComponentStatus(
            status="error",
            message=f"Registry check failed: {e}",
            details={"exception_type": type(e).__name__}
        )


async def _check_configuration() -> ComponentStatus:
    issues = []
    if settings.PALCTL_BUDGET < 2 * settings.DEFAULT_K_MAX:
        issues.append("budget below 2 * default k_max")
    if settings.INITIAL_PREFIX_LENGTH > settings.PALCTL_BUDGET:
        issues.append("initial prefix length above the budget")
    if issues:
        return ComponentStatus(status="warning", message=", ".join(issues), details={"issues": issues})
    return ComponentStatus(
        status="healthy",
        message="Configuration valid",
        details={
            "budget": settings.PALCTL_BUDGET,
            "default_k_max": settings.DEFAULT_K_MAX,
            "generator_max_length": settings.GENERATOR_MAX_LENGTH,
            "max_workers": settings.MAX_WORKERS,
        }
    )


@router.get(
    "/quick",
    summary="Quick health check"
)
async def quick_health_check():
    """Liveness probe without engine work"""
    try:
        return {
            "status": "healthy",
            "timestamp": datetime.now().isoformat(),
            "version": settings.VERSION,
            "budget": settings.PALCTL_BUDGET,
        }
    except Exception as e:
        logger.error("Quick health check failed", error=str(e))
        raise HTTPException(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            detail="Quick health check failed"
        )
