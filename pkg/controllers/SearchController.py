from datetime import datetime
from fastapi import APIRouter
from models.api.ApiRequests import VerifyRequest
from models.search.SearchModels import SearchConfig
from pool_storage.BuiltinCatalog import builtin_catalog, golden_recombinations
from services.search.SearchService import search
from services.search.VerifyService import entries_for_verification, verify_catalog
import logging

logger = logging.getLogger(__name__)


search_router = APIRouter(prefix="/api/v1", tags=["Search"])


@search_router.post("/search")
def run_search(request: SearchConfig):
    start_time = datetime.now()
    result = search(request)
    duration = (datetime.now() - start_time).total_seconds()
    logger.info(f"Search request took {duration} seconds")
    return {"result": result.model_dump(mode="json")}


@search_router.post("/verify")
def run_verify(request: VerifyRequest):
    entries = entries_for_verification(request.golden, request.pool, request.states)
    report = verify_catalog(entries, request.cap)
    return {
        "result": report.model_dump(mode="json"),
        "passed": report.passed,
        "failed": report.failed,
        "ok": report.ok,
    }


@search_router.get("/catalog")
def get_catalog(golden: bool = False):
    entries = golden_recombinations() if golden else builtin_catalog()
    return {"result": [entry.model_dump(mode="json") for entry in entries]}
