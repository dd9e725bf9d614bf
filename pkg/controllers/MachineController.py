from datetime import datetime
from fastapi import APIRouter
from models.api.ApiRequests import DecodeRequest, EncodeRequest, LineageRequest, RecombineRequest, RunRequest
from models.machine.MachineModels import Machine
from pool_storage.PoolStorage import registry_for
from pool_storage.Utility import resolve_machine
from services.recombinator.LineageService import evaluate_lineage, format_lineage, parse_lineage
from services.recombinator.Recombinator import make_spec, recombine_with_provenance
from services.search.SearchService import classify_mpp
from services.simulator.TuringSimulator import rado_report, run
from services.tm_core.MachineCodec import decode_action, encode_name, format_rules, parse_rules
import logging

logger = logging.getLogger(__name__)


machine_router = APIRouter(prefix="/api/v1", tags=["Machines"])


def describe_machine(machine: Machine) -> dict:
    rules = []
    for index, code in machine.defined_rules():
        state, read = divmod(index, 2)
        action = decode_action(code, machine.n)
        rules.append({
            "index": index,
            "code": code,
            "state": state,
            "read": read,
            "next_state": action.next_state,
            "write": action.write,
            "move": action.move.name,
        })
    return {"name": encode_name(machine), "states": machine.n, "rules": rules, "listing": format_rules(machine)}


def describe_run(machine: Machine, step_limit, rado: bool = False) -> dict:
    outcome = run(machine, step_limit)
    result = {"name": encode_name(machine), "outcome": outcome.model_dump(mode="json"), "extent": outcome.extent}
    if outcome.halted:
        result["mpp_class"] = classify_mpp(outcome)
        if rado:
            result["rado"] = rado_report(outcome)._asdict()
    return result


@machine_router.post("/run")
def run_machine(request: RunRequest):
    start_time = datetime.now()
    machine = resolve_machine(request.name, registry_for(n=request.states), request.states)
    result = describe_run(machine, request.step_limit, request.rado)
    duration = (datetime.now() - start_time).total_seconds()
    logger.info(f"Run of {result['name']} took {duration} seconds")
    return {"result": result}


@machine_router.post("/decode")
def decode_machine(request: DecodeRequest):
    machine = resolve_machine(request.name, {}, request.states)
    return {"result": describe_machine(machine)}


@machine_router.post("/encode")
def encode_machine(request: EncodeRequest):
    machine = parse_rules(request.rules, request.states)
    return {"result": {"name": encode_name(machine)}}


@machine_router.post("/recombine")
def recombine_machines(request: RecombineRequest):
    registry = registry_for(request.pool, request.states)
    sources = [resolve_machine(token, registry, request.states) for token in request.sources]
    machine, provenance = recombine_with_provenance(make_spec(sources, request.cuts))
    result = describe_machine(machine)
    result["provenance"] = list(provenance)
    return {"result": result}


@machine_router.post("/lineage")
def evaluate_lineage_text(request: LineageRequest):
    lineage = parse_lineage(request.lineage)
    machine = evaluate_lineage(lineage, registry_for(request.pool, request.states))
    result = describe_machine(machine)
    result["lineage"] = format_lineage(lineage)
    if request.step_limit is not None:
        result["run"] = describe_run(machine, request.step_limit)
    return {"result": result}
