"""
Repair sets of the construction: the t partitions of the positions, their strong orthogonality,
the verified distance of the code restricted to each repair group, and erasure repair inside
the groups of one partition.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from math import prod
from typing import Callable, Dict, List, Optional, Sequence, Tuple
from weakref import WeakKeyDictionary

import galois
import numpy as np

from cyclic_lrc.construction import ConstructionParams, CyclicLRC, is_codeword
from cyclic_lrc.distance import min_weight
from cyclic_lrc.errors import ParameterError, RepairError
from cyclic_lrc.models import AvailabilityReport, GroupCheck

logger = logging.getLogger(__name__)

DEFAULT_LOCAL_BUDGET = 2 ** 24
DEFAULT_RANK_TEST_MAX_DISTANCE = 4

METHOD_EXHAUSTIVE = 'exhaustive'
METHOD_PARITY_RANK = 'parity-rank'

_LOCAL_CHECKS: WeakKeyDictionary = WeakKeyDictionary()


@dataclass(frozen=True)
class PartitionFamily:
    """
    t partitions of [0, n - 1]; partition i consists of the groups A_{i,j}.
    """
    n: int
    n_list: Tuple[int, ...]
    partitions: Tuple[Tuple[Tuple[int, ...], ...], ...]

    def group_of(self, i: int, position: int) -> Tuple[int, ...]:
        """
        Returns the group of partition i (1-based) containing the position.
        """
        for group in self.partitions[i - 1]:
            if position in group:
                return group
        raise ParameterError(f'position {position} is not covered by partition {i}')


def build_partitions(params: ConstructionParams) -> PartitionFamily:
    """
    Returns the partitions A_{i,j} = { j + v * n / n_i : 0 <= v < n_i }, 0 <= j < n / n_i.
    """
    n = params.n
    partitions = []
    for n_i in params.n_list:
        nu = n // n_i
        partitions.append(tuple(tuple(j + v * nu for v in range(n_i)) for j in range(nu)))
    return PartitionFamily(n=n, n_list=tuple(params.n_list), partitions=tuple(partitions))


def crt_map(x: int, n_list: Sequence[int]) -> Tuple[int, ...]:
    """
    Maps a position to its residues (x mod n_1, ..., x mod n_t).
    """
    n = prod(n_list)
    if not 0 <= x < n:
        raise ParameterError(f'position {x} outside [0, {n - 1}]')
    return tuple(x % n_i for n_i in n_list)


def _check_well_formed(pf: PartitionFamily, n_list: Sequence[int]) -> None:
    if len(pf.partitions) != len(n_list):
        raise ParameterError(f'{len(pf.partitions)} partitions for {len(n_list)} lengths')
    for i, (partition, n_i) in enumerate(zip(pf.partitions, n_list), start=1):
        covered = sorted(x for group in partition for x in group)
        if covered != list(range(pf.n)):
            raise ParameterError(f'partition {i} does not cover [0, {pf.n - 1}] exactly once')
        if any(len(group) != n_i for group in partition):
            raise ParameterError(f'partition {i} has groups of size other than {n_i}')


def check_strong_orthogonality(pf: PartitionFamily, n_list: Optional[Sequence[int]] = None,
                               position_map: Optional[Callable[[int], Tuple[int, ...]]] = None) -> bool:
    """
    Checks that a position map is a bijection onto Z/n_1 x ... x Z/n_t under which every group of
    partition i varies only coordinate i.
    Args:
        pf: the partitions
        n_list: the coordinate moduli, by default pf.n_list
        position_map: the bijection to test, by default crt_map
    Returns:
        bool: True if the partitions are strongly orthogonal under the map
    """
    n_list = tuple(pf.n_list if n_list is None else n_list)
    _check_well_formed(pf, n_list)
    if position_map is None:
        def position_map(x):
            return crt_map(x, n_list)

    images = [tuple(position_map(x)) for x in range(pf.n)]
    if len(set(images)) != pf.n or any(len(image) != len(n_list) for image in images):
        return False
    for i, partition in enumerate(pf.partitions):
        for group in partition:
            for coordinate in range(len(n_list)):
                if coordinate != i and len({images[x][coordinate] for x in group}) != 1:
                    return False
    return True


def restricted_basis(code: CyclicLRC, positions: Sequence[int]) -> galois.FieldArray:
    """
    Returns a basis (as rows) of the code restricted to the positions.
    """
    columns = code.generator_matrix[:, list(positions)]
    if code.k == 0:
        return columns
    return columns.row_space()


def local_checks(code: CyclicLRC, positions: Tuple[int, ...]) -> galois.FieldArray:
    """
    Parity checks of the restricted code, one row per check, columns in the order of positions.
    Cached per code for as long as the code is alive.
    """
    cache = _LOCAL_CHECKS.setdefault(code, {})
    positions = tuple(positions)
    if positions not in cache:
        basis = restricted_basis(code, positions)
        if basis.shape[0] == 0:
            cache[positions] = code.field.gf.Identity(len(positions))
        else:
            cache[positions] = basis.null_space()
    return cache[positions]


def _parity_rank_distance(checks: galois.FieldArray, length: int, max_distance: int) -> Tuple[int, bool]:
    """
    The distance is the smallest number of linearly dependent check columns. Subsets up to
    max_distance - 1 columns are tested; beyond that only the lower bound max_distance is known.
    """
    redundancy = checks.shape[0]
    if redundancy == 0:
        return 1, True
    for size in range(1, min(max_distance - 1, redundancy) + 1):
        for subset in combinations(range(length), size):
            if np.linalg.matrix_rank(checks[:, list(subset)]) < size:
                return size, True
    if redundancy <= max_distance - 1:
        # all sets of n - k columns independent: the Singleton bound is met
        return redundancy + 1, True
    return max_distance, False


def measure_local_distance(code: CyclicLRC, positions: Sequence[int],
                           budget: int = DEFAULT_LOCAL_BUDGET,
                           max_rank_distance: int = DEFAULT_RANK_TEST_MAX_DISTANCE) -> Tuple[int, bool, str]:
    """
    Distance of the code restricted to the positions, with how it was obtained.
    Returns:
        Tuple[int, bool, str]: the distance (or lower bound), whether it is exact, and the method
    """
    positions = tuple(positions)
    if not positions:
        raise ParameterError('the position set is empty')
    if len(set(positions)) != len(positions) or any(not 0 <= x < code.n for x in positions):
        raise ParameterError(f'positions must be distinct and within [0, {code.n - 1}]')

    basis = restricted_basis(code, positions)
    dimension = basis.shape[0]
    if code.q ** dimension <= budget:
        distance, _ = min_weight(basis)
        logger.debug('Group %s: dimension %d, exhaustive distance %d', positions, dimension, distance)
        return distance, True, METHOD_EXHAUSTIVE
    distance, exact = _parity_rank_distance(local_checks(code, positions), len(positions),
                                            max_rank_distance)
    logger.debug('Group %s: dimension %d, parity-rank distance %s%d', positions, dimension,
                 '' if exact else '>= ', distance)
    return distance, exact, METHOD_PARITY_RANK


def local_distance(code: CyclicLRC, positions: Sequence[int],
                   budget: int = DEFAULT_LOCAL_BUDGET,
                   max_rank_distance: int = DEFAULT_RANK_TEST_MAX_DISTANCE) -> int:
    """
    Lower bound on the distance of the code restricted to the positions, exact where feasible.
    Exhaustive over the restricted messages when q^k' fits the budget, otherwise by testing
    subsets of parity-check columns for full rank.
    """
    return measure_local_distance(code, positions, budget, max_rank_distance)[0]


def verify_availability(code: CyclicLRC, params: Optional[ConstructionParams] = None,
                        budget: int = DEFAULT_LOCAL_BUDGET,
                        max_rank_distance: int = DEFAULT_RANK_TEST_MAX_DISTANCE) -> AvailabilityReport:
    """
    Verifies every repair group of every partition against its rho_i, and the strong
    orthogonality of the partitions. Groups are reported ordered by (i, j).
    """
    params = code.params if params is None else params
    pf = build_partitions(params)
    groups = []
    for i, (partition, rho_i) in enumerate(zip(pf.partitions, params.rho), start=1):
        for j, group in enumerate(partition):
            bound, exact, method = measure_local_distance(code, group, budget, max_rank_distance)
            groups.append(GroupCheck(partition=i, group=j, positions=list(group), bound=bound,
                                     exact=exact, method=method, passed=bound >= rho_i))
    orthogonal = check_strong_orthogonality(pf)
    passed = orthogonal and all(check.passed for check in groups)
    if not passed:
        logger.warning('Availability verification failed for %s', params)
    return AvailabilityReport(r=list(params.locality), rho=list(params.rho),
                              strongly_orthogonal=orthogonal, groups=groups, passed=passed)


def _solve(matrix: galois.FieldArray, rhs: galois.FieldArray) -> galois.FieldArray:
    """
    Solves matrix @ x = rhs for x with independent columns, by row reduction.
    """
    gf = type(matrix)
    rows, unknowns = matrix.shape
    if rows < unknowns:
        raise RepairError(f'{unknowns} erasures but only {rows} local checks')
    augmented = gf.Zeros((rows, unknowns + 1))
    augmented[:, :unknowns] = matrix
    augmented[:, unknowns] = rhs
    reduced = augmented.row_reduce()
    if not np.array_equal(reduced[:unknowns, :unknowns], gf.Identity(unknowns)):
        raise RepairError('the erased positions are not determined by the local checks')
    if np.any(reduced[unknowns:, unknowns] != 0):
        raise RepairError('the remaining symbols of the group are not consistent with a codeword')
    return reduced[:unknowns, unknowns]


def repair(code: CyclicLRC, word: Sequence[Optional[int]], i: int) -> galois.FieldArray:
    """
    Repairs erasures group by group through partition i.
    Args:
        code: the code
        word: n symbols, None marking an erasure
        i: partition index, 1 <= i <= t
    Returns:
        galois.FieldArray: the repaired codeword
    """
    params = code.params
    if not 1 <= i <= params.t:
        raise ParameterError(f'partition index {i} outside [1, {params.t}]')
    if len(word) != code.n:
        raise ParameterError(f'word must have length {code.n}, got {len(word)}')

    gf = code.field.gf
    repaired = gf(np.array([0 if symbol is None else int(symbol) for symbol in word], dtype=np.int64))
    rho_i = params.rho[i - 1]
    for group in build_partitions(params).partitions[i - 1]:
        lost = [column for column, x in enumerate(group) if word[x] is None]
        if not lost:
            continue
        if len(lost) > rho_i - 1:
            raise RepairError(f'{len(lost)} erasures in group {list(group)}, at most {rho_i - 1} '
                              f'are repairable')
        kept = [column for column in range(len(group)) if column not in lost]
        checks = local_checks(code, group)
        known = repaired[[group[column] for column in kept]]
        rhs = -(checks[:, kept] @ known) if kept else gf.Zeros(checks.shape[0])
        repaired[[group[column] for column in lost]] = _solve(checks[:, lost], rhs)

    if not is_codeword(code, repaired):
        raise RepairError('the repaired word is not a codeword; the inputs are inconsistent')
    return repaired


def repair_through_each(code: CyclicLRC, word: Sequence[Optional[int]]) -> Dict[int, galois.FieldArray]:
    """
    Repairs the word through every partition that admits its erasure pattern.
    Returns:
        Dict[int, galois.FieldArray]: partition index to repaired codeword
    """
    results = {}
    for i in range(1, code.params.t + 1):
        try:
            results[i] = repair(code, word, i)
        except RepairError as e:
            logger.debug('Partition %d cannot repair the word: %s', i, e)
    return results


def erasure_groups(code: CyclicLRC, erased: Sequence[int]) -> List[List[Tuple[int, ...]]]:
    """
    For each partition, the groups touched by the erased positions.
    """
    pf = build_partitions(code.params)
    return [sorted({pf.group_of(i, x) for x in erased}) for i in range(1, code.params.t + 1)]
