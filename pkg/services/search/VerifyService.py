import logging
from datetime import datetime
from typing import Iterable, List, Optional

from config import config
from models.catalog.CatalogEntry import CatalogEntry
from models.machine.MachineModels import DEFAULT_STATES
from models.search.SearchModels import VerifyEntryResult, VerifyReport, VerifyVerdict
from pool_storage.BuiltinCatalog import builtin_catalog, golden_recombinations, require_builtin_states
from pool_storage.PoolStorage import load_pool
from services.simulator.TuringSimulator import run

logger = logging.getLogger(__name__)


def verify_entry(entry: CatalogEntry, cap: int) -> VerifyEntryResult:
    outcome = run(entry.machine, cap)
    verdict = VerifyVerdict.PASS
    reason = None

    if not outcome.halted:
        verdict = VerifyVerdict.FAIL if entry.has_expectations else VerifyVerdict.MEASURED
        reason = f"step limit exceeded after {outcome.steps} steps"
    elif entry.expected_steps is None:
        if entry.expected_ones is None:
            verdict = VerifyVerdict.MEASURED
        elif entry.expected_ones != outcome.ones:
            verdict = VerifyVerdict.FAIL
            reason = f"ones {outcome.ones} != listed class {entry.expected_ones}"
        else:
            reason = "ones only; no step count listed"
    else:
        mismatches = []
        if entry.expected_ones is not None and entry.expected_ones != outcome.ones:
            mismatches.append(f"ones {outcome.ones} != {entry.expected_ones}")
        if entry.expected_steps != outcome.steps:
            mismatches.append(f"steps {outcome.steps} != {entry.expected_steps}")
        if mismatches:
            verdict = VerifyVerdict.FAIL
            reason = "; ".join(mismatches)

    return VerifyEntryResult(
        id=entry.id,
        name=entry.name,
        expected_ones=entry.expected_ones,
        expected_steps=entry.expected_steps,
        status=outcome.status,
        steps=outcome.steps,
        ones=outcome.ones,
        verdict=verdict,
        reason=reason,
    )


def verify_catalog(entries: Iterable[CatalogEntry], cap: Optional[int] = None) -> VerifyReport:
    """Simulate every entry and compare (ones, steps) with its expectations."""
    cap = config.step_limit if cap is None else cap
    start_time = datetime.now()
    report = VerifyReport(cap=cap, results=[verify_entry(entry, cap) for entry in entries])
    duration = (datetime.now() - start_time).total_seconds()
    logger.info(f"Verify took {duration} seconds: {report.passed} PASS, {report.failed} FAIL of {len(report.results)}")
    return report


def entries_for_verification(golden: bool = False, pool: Optional[str] = None,
                             n: int = DEFAULT_STATES) -> List[CatalogEntry]:
    if pool:
        return load_pool(pool, n)
    require_builtin_states(n)
    return golden_recombinations() if golden else builtin_catalog()
