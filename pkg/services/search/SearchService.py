import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime
from typing import Dict, List, Optional, Sequence, Set, Tuple

from exception.exceptions import OutcomeNotHaltedError, UnknownMachineError
from models.catalog.CatalogEntry import CatalogEntry
from models.machine.MachineModels import Machine
from models.machine.RecombinationModels import Lineage, LineageLeaf, LineageNode
from models.machine.RunModels import RunOutcome
from models.search.SearchModels import (
    SearchConfig,
    SearchRecord,
    SearchResult,
    SearchSummary,
    mpp_label,
)
from pool_storage.BuiltinCatalog import builtin_catalog, golden_recombinations, require_builtin_states
from pool_storage.PoolStorage import load_pool
from pool_storage.RecordStorage import write_records
from services.recombinator.LineageService import format_lineage
from services.recombinator.Recombinator import enumerate_selections, enumeration_size, make_spec, recombine
from services.simulator.TuringSimulator import run
from services.tm_core.MachineCodec import encode_name

logger = logging.getLogger(__name__)

# Contiguous batches handed to each worker per job slot.
BATCHES_PER_JOB = 4

# Candidate specs held before their machines are simulated and recorded.
CHUNK_SIZE = 10_000

# (enumeration index, name, machine, selection, cuts)
Candidate = Tuple[int, str, Machine, Tuple[int, ...], Tuple[int, ...]]


def classify_mpp(outcome: RunOutcome) -> str:
    """Placid Platypus class label M_PP(ones) of a halted run."""
    if not outcome.halted:
        raise OutcomeNotHaltedError(f"only halted machines have an M_PP class, got {outcome.status.value}")
    return mpp_label(outcome.ones)


def resolve_pool(cfg: SearchConfig) -> List[CatalogEntry]:
    if cfg.pool in ("builtin", "golden", "all"):
        require_builtin_states(cfg.states)
    if cfg.pool == "builtin":
        entries = builtin_catalog()
    elif cfg.pool == "golden":
        entries = golden_recombinations()
    elif cfg.pool == "all":
        entries = builtin_catalog() + golden_recombinations()
    else:
        entries = load_pool(cfg.pool, cfg.states)

    if cfg.select:
        by_id = {entry.id: entry for entry in entries}
        missing = [i for i in cfg.select if i not in by_id]
        if missing:
            raise UnknownMachineError(f"pool '{cfg.pool}' has no machines with ids {missing}")
        entries = [by_id[i] for i in cfg.select]
    return entries


def _simulate_batch(batch: List[Tuple[str, Tuple[int, ...]]], n: int, cap: int) -> List[Tuple[str, RunOutcome]]:
    return [(name, run(Machine(n=n, table=table), cap)) for name, table in batch]


def simulate_distinct(machines: Dict[str, Machine], cap: int, jobs: int = 1) -> Dict[str, RunOutcome]:
    """
    Simulate each distinct machine once. Work is split into contiguous ranges of
    first-occurrence order; results are keyed by name, so the partitioning
    never changes the result.
    """
    if not machines:
        return {}
    n = next(iter(machines.values())).n
    items = [(name, machine.table) for name, machine in machines.items()]

    if jobs == 1 or len(items) == 1:
        return dict(_simulate_batch(items, n, cap))

    size = max(1, -(-len(items) // (jobs * BATCHES_PER_JOB)))
    batches = [items[i:i + size] for i in range(0, len(items), size)]
    logger.debug(f"Simulating {len(items)} machines in {len(batches)} batches on {jobs} workers")
    outcomes = {}
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        for results in executor.map(_simulate_batch, batches, [n] * len(batches), [cap] * len(batches)):
            outcomes.update(results)
    return outcomes


def _passes_filter(outcome: RunOutcome, cfg: SearchConfig) -> bool:
    if cfg.min_ones is not None and (not outcome.halted or outcome.ones < cfg.min_ones):
        return False
    if cfg.min_steps is not None and outcome.steps < cfg.min_steps:
        return False
    return True


def _spec_lineage(lineages: Sequence[Lineage], selection: Tuple[int, ...], cuts: Tuple[int, ...]) -> Lineage:
    if len(selection) == 1:
        return lineages[selection[0]]
    return LineageNode(cuts=cuts, children=tuple(lineages[i] for i in selection))


def _make_record(name: str, lineage: str, outcome: RunOutcome, index: int, round_number: int,
                 provenance_count: Optional[int]) -> SearchRecord:
    return SearchRecord(
        name=name,
        lineage=lineage,
        status=outcome.status,
        steps=outcome.steps,
        ones=outcome.ones,
        mpp_class=classify_mpp(outcome) if outcome.halted else None,
        index=index,
        round=round_number,
        provenance_count=provenance_count,
    )


def _process_chunk(chunk: List[Candidate], cfg: SearchConfig, outcomes: Dict[str, RunOutcome],
                   lineages: Sequence[Lineage], round_number: int, pool_names: Set[str],
                   discovered: List[Tuple[Machine, Lineage]]) -> List[SearchRecord]:
    """Simulate the chunk's unseen machines, then turn its candidates into filtered records."""
    pending: Dict[str, Machine] = {}
    for _, name, machine, _, _ in chunk:
        if name not in outcomes:
            pending.setdefault(name, machine)
    outcomes.update(simulate_distinct(pending, cfg.step_limit, cfg.jobs))

    records = []
    for index, name, machine, selection, cuts in chunk:
        outcome = outcomes[name]
        if not _passes_filter(outcome, cfg):
            continue
        lineage = _spec_lineage(lineages, selection, cuts)
        records.append(_make_record(name, format_lineage(lineage), outcome, index, round_number, None))
        if outcome.halted and name not in pool_names:
            pool_names.add(name)
            discovered.append((machine, lineage))
    return records


def summarize(records: List[SearchRecord], outcomes: Dict[str, RunOutcome], enumerated: int,
              rounds: int, elapsed: float) -> SearchSummary:
    halted_records = [r for r in records if r.mpp_class is not None]
    classes = Counter(r.ones for r in halted_records)
    return SearchSummary(
        enumerated=enumerated,
        distinct=len(outcomes),
        halted=sum(1 for o in outcomes.values() if o.halted),
        step_limit_exceeded=sum(1 for o in outcomes.values() if not o.halted),
        kept=len(records),
        classes={mpp_label(ones): count for ones, count in sorted(classes.items(), reverse=True)},
        max_steps=max(halted_records, key=lambda r: r.steps, default=None),
        rounds=rounds,
        elapsed_seconds=elapsed,
    )


def search(cfg: SearchConfig) -> SearchResult:
    """
    Enumerate k-way recombinations of the pool, simulate every distinct result
    under the step cap, filter, optionally deduplicate by canonical name and
    persist. Output is sorted by (name, enumeration index).

    Specs stream from the enumerator and are simulated in chunks of CHUNK_SIZE
    candidates, so only first occurrences and kept records stay in memory.
    """
    start_time = datetime.now()
    entries = resolve_pool(cfg)
    if not entries:
        raise UnknownMachineError(f"pool '{cfg.pool}' is empty")

    pool: List[Machine] = [entry.machine for entry in entries]
    lineages: List[Lineage] = [LineageLeaf(id=entry.id) for entry in entries]
    pool_names = {encode_name(machine) for machine in pool}
    n = pool[0].n

    outcomes: Dict[str, RunOutcome] = {}
    kept: List[SearchRecord] = []
    seen_names = set()
    enumerated = 0

    for round_number in range(1, cfg.rounds + 1):
        total = enumeration_size(len(pool), n, cfg.k)
        logger.info(f"Round {round_number}: enumerating {total} {cfg.k}-way recombinations of {len(pool)} machines")

        provenance = Counter()
        discovered: List[Tuple[Machine, Lineage]] = []
        round_records: List[SearchRecord] = []
        chunk: List[Candidate] = []
        for selection, cuts in enumerate_selections(len(pool), n, cfg.k):
            index = enumerated
            enumerated += 1
            machine = recombine(make_spec([pool[i] for i in selection], cuts))
            name = encode_name(machine)
            provenance[name] += 1
            if cfg.dedup and name in seen_names:
                continue
            seen_names.add(name)
            chunk.append((index, name, machine, selection, cuts))
            if len(chunk) >= CHUNK_SIZE:
                round_records += _process_chunk(chunk, cfg, outcomes, lineages, round_number, pool_names, discovered)
                chunk = []
        round_records += _process_chunk(chunk, cfg, outcomes, lineages, round_number, pool_names, discovered)

        # A name's spec count is only known once the round is fully enumerated.
        if cfg.count_provenance:
            round_records = [r.model_copy(update={"provenance_count": provenance[r.name]}) for r in round_records]
        kept.extend(round_records)

        if round_number < cfg.rounds:
            logger.info(f"Round {round_number}: {len(discovered)} new halting machines join the pool")
            pool.extend(machine for machine, _ in discovered)
            lineages.extend(lineage for _, lineage in discovered)

    kept.sort(key=lambda r: (r.name, r.index))
    elapsed = (datetime.now() - start_time).total_seconds()
    summary = summarize(kept, outcomes, enumerated, cfg.rounds, elapsed)
    logger.info(
        f"Search finished in {elapsed} seconds: {summary.enumerated} specs, "
        f"{summary.distinct} distinct machines, {summary.kept} records kept"
    )

    if cfg.out:
        write_records(kept, cfg.out, csv_mirror=cfg.csv_mirror)
    return SearchResult(records=kept, summary=summary)
