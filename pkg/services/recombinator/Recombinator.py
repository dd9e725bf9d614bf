import logging
from bisect import bisect_right
from itertools import combinations_with_replacement, product
from math import comb
from typing import Iterator, List, Sequence, Tuple

from pydantic import ValidationError

from exception.exceptions import RecombinationError
from models.machine.MachineModels import Machine, rule_count_for
from models.machine.RecombinationModels import RecombinationSpec

logger = logging.getLogger(__name__)


def make_spec(sources: Sequence[Machine], cuts: Sequence[int] = ()) -> RecombinationSpec:
    try:
        return RecombinationSpec(sources=tuple(sources), cuts=tuple(cuts))
    except ValidationError as e:
        details = "; ".join(error["msg"] for error in e.errors())
        raise RecombinationError(f"Invalid recombination: {details}") from e


def segment_of(index: int, cuts: Sequence[int]) -> int:
    """Position of the source whose segment holds rule `index`; segment m covers [v(m-1), v(m))."""
    return bisect_right(cuts, index)


def recombine_with_provenance(spec: RecombinationSpec) -> Tuple[Machine, Tuple[int, ...]]:
    """Recombined machine plus, per rule index, the position of the source it was copied from."""
    provenance = tuple(segment_of(i, spec.cuts) for i in range(rule_count_for(spec.n)))
    # Undefined slots are copied too, so a segment can remove a rule.
    table = tuple(spec.sources[m].table[i] for i, m in enumerate(provenance))
    return Machine(n=spec.n, table=table), provenance


def recombine(spec: RecombinationSpec) -> Machine:
    machine, _ = recombine_with_provenance(spec)
    return machine


def count_cut_vectors(n: int, k: int) -> int:
    """Number of nondecreasing (k-1)-tuples over [0, 2n-1]."""
    if k < 1:
        raise RecombinationError(f"arity must be at least 1, got {k}")
    return comb(rule_count_for(n) + k - 2, k - 1)


def cut_vectors(n: int, k: int) -> Iterator[Tuple[int, ...]]:
    return combinations_with_replacement(range(rule_count_for(n)), k - 1)


def _check_pool(pool: Sequence[Machine], k: int) -> int:
    if k < 1:
        raise RecombinationError(f"arity must be at least 1, got {k}")
    if not pool:
        raise RecombinationError("cannot enumerate over an empty pool")
    n = pool[0].n
    if any(machine.n != n for machine in pool):
        raise RecombinationError("all pool machines must have the same number of states")
    return n


def enumerate_selections(pool_size: int, n: int, k: int) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """
    (source positions, cuts) pairs in lexicographic order: source positions first,
    then cut vectors, so position i of the stream is stable run to run.
    """
    for selection in product(range(pool_size), repeat=k):
        for cuts in cut_vectors(n, k):
            yield selection, cuts


def enumeration_size(pool_size: int, n: int, k: int) -> int:
    return pool_size ** k * count_cut_vectors(n, k)


def enumerate_kway(pool: Sequence[Machine], k: int) -> Iterator[Tuple[RecombinationSpec, Machine]]:
    """Every ordered k-selection (with repetition) of pool machines under every cut vector."""
    n = _check_pool(pool, k)
    logger.debug(f"Enumerating {enumeration_size(len(pool), n, k)} {k}-way recombinations")
    for selection, cuts in enumerate_selections(len(pool), n, k):
        spec = make_spec([pool[i] for i in selection], cuts)
        yield spec, recombine(spec)


def enumerate_pairwise(pool: Sequence[Machine]) -> Iterator[Tuple[RecombinationSpec, Machine]]:
    """(T_i, T_j, u) for every i, j in the pool and u in [0, 2n-1]."""
    return enumerate_kway(pool, 2)

