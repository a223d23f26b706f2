# app/api/v1/router.py
"""
Router for API v1
Health, sequence registry and verification endpoints
"""
from fastapi import APIRouter

from app.api.v1.endpoints import health, sequences, verify
from app.core.config import settings

router = APIRouter()

ENDPOINT_GROUPS = (
    (health.router, "health", "health"),
    (sequences.router, "sequences", "sequences"),
    (verify.router, "verify", "verification"),
)

for group_router, prefix, tag in ENDPOINT_GROUPS:
    router.include_router(
        group_router,
        prefix=f"/{prefix}",
        tags=[tag],
        responses={404: {"description": "Not found"}}
    )


@router.get("/", tags=["info"])
async def api_info():
    """Version and endpoint index"""
    return {
        "api_version": "v1",
        "service": settings.PROJECT_NAME,
        "version": settings.VERSION,
        "environment": settings.ENVIRONMENT,
        "endpoints": {prefix: f"{settings.API_V1_STR}/{prefix}" for _, prefix, _ in ENDPOINT_GROUPS},
        "documentation": "/docs" if settings.ENABLE_DOCS else "disabled"
    }
