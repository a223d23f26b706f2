# app/api/v1/endpoints/sequences.py
"""
Sequence Endpoints
Registry listing, prefixes and stabilized complexity profiles
"""
import time
from typing import List, Optional

from fastapi import APIRouter, HTTPException, Query, status

from app.core.config import settings
from app.core.exceptions import ConstructionError, PalctlError, ResourceError
from app.engines.complexity import complexity_ratios, measure_profile, palindrome_inventory
from app.schemas.profile import ComplexityProfile, PalindromeInventory, RatioRow
from app.schemas.reports import PrefixResponse, SequenceInfo
from app.sequences.sources import SequenceSource
from app.sequences.zoo import builtin, builtin_entry, builtin_names, make_source
from app.utils.logger import get_logger

logger = get_logger(__name__)
router = APIRouter()


def to_http_error(e: PalctlError) -> HTTPException:
    """Map a package error to the HTTP status the API answers with"""
    if isinstance(e, ResourceError):
        code = status.HTTP_507_INSUFFICIENT_STORAGE
    elif isinstance(e, ConstructionError):
        code = status.HTTP_422_UNPROCESSABLE_ENTITY
    else:
        code = status.HTTP_400_BAD_REQUEST
    logger.warning("Request rejected", error=str(e), status_code=code)
    return HTTPException(status_code=code, detail=str(e))


def _resolve(name: str, instructions: Optional[str], cf: Optional[str]) -> SequenceSource:
    try:
        return make_source(name, instructions=instructions, cf=cf)
    except PalctlError as e:
        raise to_http_error(e)


@router.get("/", response_model=List[SequenceInfo], summary="List builtin sequences")
async def list_sequences():
    infos = []
    for name in builtin_names():
        source = builtin(name)
        infos.append(SequenceInfo(
            name=name,
            description=builtin_entry(name).description,
            kind=source.kind,
            alphabet=list(source.alphabet.letters),
        ))
    return infos


@router.get("/{name}/prefix", response_model=PrefixResponse, summary="First symbols of a sequence")
def get_prefix(
        name: str,
        length: int = Query(64, ge=0, le=settings.PALCTL_BUDGET),
        instructions: Optional[str] = None,
        cf: Optional[str] = None,
):
    source = _resolve(name, instructions, cf)
    try:
        prefix = source.prefix(length)
    except PalctlError as e:
        raise to_http_error(e)
    return PrefixResponse(name=source.name, length=length, prefix=source.alphabet.render(prefix))


@router.get(
    "/{name}/complexity",
    response_model=ComplexityProfile,
    summary="Stabilized fac(k) and pal(k)",
    description="""
    Counts start on a short prefix and are recomputed on doubled prefixes
    until they stop changing or the budget is reached. Rows that changed at
    the last doubling carry stable=false.
    """
)
def get_complexity(
        name: str,
        k_max: int = Query(settings.DEFAULT_K_MAX, ge=1),
        budget: Optional[int] = Query(None, ge=2),
        instructions: Optional[str] = None,
        cf: Optional[str] = None,
):
    start_time = time.time()
    source = _resolve(name, instructions, cf)
    try:
        profile = measure_profile(source, k_max, budget)
    except PalctlError as e:
        raise to_http_error(e)
    logger.info(
        "Complexity request completed",
        source=source.name,
        k_max=k_max,
        processing_time_ms=round((time.time() - start_time) * 1000, 2)
    )
    return profile


@router.get("/{name}/ratios", response_model=List[RatioRow], summary="Ratios of pal(k) to fac(k)")
def get_ratios(
        name: str,
        k_max: int = Query(settings.DEFAULT_K_MAX, ge=1),
        budget: Optional[int] = Query(None, ge=2),
        instructions: Optional[str] = None,
        cf: Optional[str] = None,
):
    source = _resolve(name, instructions, cf)
    try:
        return complexity_ratios(measure_profile(source, k_max, budget))
    except PalctlError as e:
        raise to_http_error(e)


@router.get("/{name}/palindromes", response_model=PalindromeInventory, summary="Palindromic factors")
def get_palindromes(
        name: str,
        k_max: int = Query(16, ge=1),
        budget: Optional[int] = Query(None, ge=2),
        instructions: Optional[str] = None,
        cf: Optional[str] = None,
):
    source = _resolve(name, instructions, cf)
    try:
        return palindrome_inventory(source, k_max, budget)
    except PalctlError as e:
        raise to_http_error(e)
