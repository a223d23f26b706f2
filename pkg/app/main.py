# app/main.py
"""
FastAPI Application Entry Point
HTTP surface of the palindrome complexity lab
"""
from contextlib import asynccontextmanager

import uvicorn
from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from app.api.v1.endpoints.sequences import to_http_error
from app.api.v1.router import router as v1_router
from app.core.config import settings
from app.core.exceptions import PalctlError
from app.sequences.zoo import builtin, builtin_names
from app.utils.logger import get_logger

logger = get_logger(__name__)

# built on startup so the first request does not pay for the fixed-point construction
WARM_BUILTINS = ("period-doubling", "fibonacci", "thue-morse")


@asynccontextmanager
async def lifespan(app_instance: FastAPI):
    for name in WARM_BUILTINS:
        builtin(name).prefix(settings.INITIAL_PREFIX_LENGTH)
    logger.info(
        "Starting service",
        project=settings.PROJECT_NAME,
        version=settings.VERSION,
        environment=settings.ENVIRONMENT,
        budget=settings.PALCTL_BUDGET,
        builtins=len(builtin_names()),
        warmed=list(WARM_BUILTINS)
    )
    yield
    logger.info("Shutting down service", project=settings.PROJECT_NAME)


async def palctl_error_handler(request: Request, exc: PalctlError) -> JSONResponse:
    """Errors that escape an endpoint get the same status mapping as the handled ones"""
    error = to_http_error(exc)
    return JSONResponse(status_code=error.status_code, content={"detail": error.detail})


def create_application() -> FastAPI:
    """Application factory"""
    fastapi_app = FastAPI(
        title=settings.PROJECT_NAME,
        description="Palindrome and factor complexity of infinite words.",
        version=settings.VERSION,
        docs_url="/docs" if settings.ENABLE_DOCS else None,
        redoc_url="/redoc" if settings.ENABLE_DOCS else None,
        lifespan=lifespan
    )

    # read-only service
    fastapi_app.add_middleware(
        CORSMiddleware,
        allow_origins=settings.ALLOWED_ORIGINS,
        allow_credentials=False,
        allow_methods=["GET"],
        allow_headers=["*"],
    )
    fastapi_app.add_exception_handler(PalctlError, palctl_error_handler)
    fastapi_app.include_router(v1_router, prefix=settings.API_V1_STR)

    @fastapi_app.get("/", tags=["health"])
    async def root():
        return {
            "service": settings.PROJECT_NAME,
            "environment": settings.ENVIRONMENT,
            "version": settings.VERSION,
            "health_check": f"{settings.API_V1_STR}/health",
            "sequences": f"{settings.API_V1_STR}/sequences",
            "docs": "/docs" if settings.ENABLE_DOCS else "disabled"
        }

    return fastapi_app


app = create_application()

if __name__ == "__main__":
    uvicorn.run(
        "app.main:app",
        host=settings.HOST,
        port=settings.PORT,
        reload=settings.ENVIRONMENT == "development",
        log_level=settings.LOG_LEVEL.lower()
    )
