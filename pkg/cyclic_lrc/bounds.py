"""
Distance and dimension bounds for the construction.

Lower bounds on the distance come from the defining set (BCH, Hartmann-Tzeng) and from the
product structure of the repair sets. Upper bounds are the Singleton-like bound for codes with
(r, rho)-locality and the dimension bounds for strongly orthogonal repair sets: the puncturing
bound with its hypercube construction and the refinement searching all puncturing rectangles.
"""

import logging
from math import gcd, prod
from typing import Iterator, Optional, Sequence, Tuple

import numpy as np

from cyclic_lrc.construction import ConstructionParams, DefiningSet, full_defining_set
from cyclic_lrc.errors import ParameterError
from cyclic_lrc.models import BoundReport, HTWitness

logger = logging.getLogger(__name__)


def units(n: int) -> np.ndarray:
    """
    Returns the units of Z/n in ascending order.
    """
    return np.array([z for z in range(1, n) if gcd(z, n) == 1] or [1], dtype=np.int64)


def _run_lengths(mask: np.ndarray) -> np.ndarray:
    """
    Returns runs[u, z], the number of consecutive s >= 0 with u + s * z in the set, capped at n.
    """
    n = mask.size
    starts = np.arange(n, dtype=np.int64)[:, None]
    steps = np.arange(n, dtype=np.int64)[None, :]
    runs = np.zeros((n, n), dtype=np.int64)
    alive = np.ones((n, n), dtype=bool)
    for s in range(n):
        alive &= mask[(starts + s * steps) % n]
        if not alive.any():
            break
        runs += alive
    return runs


def _trivial_witness() -> HTWitness:
    return HTWitness(u=0, z1=1, z2=1, delta=1, gamma=0)


def bch_bound_mask(mask: np.ndarray) -> Tuple[int, HTWitness]:
    n = mask.size
    if not mask.any():
        return 1, _trivial_witness()
    steps = units(n)
    runs = _run_lengths(mask)[:, steps]
    longest = runs.max()
    u, z_index = np.argwhere(runs == longest)[0]
    delta = int(longest) + 1
    return delta, HTWitness(u=int(u), z1=int(steps[z_index]), z2=1, delta=delta, gamma=0)


def bch_bound(defining_set: DefiningSet) -> Tuple[int, HTWitness]:
    """
    BCH bound: the longest arithmetic progression u, u + z, ..., u + (delta - 2) z in D with z a
    unit mod n gives d >= delta.
    Args:
        defining_set: the defining set D
    Returns:
        Tuple[int, HTWitness]: delta and its witness (gamma = 0), smallest (u, z) on ties
    """
    return bch_bound_mask(defining_set.mask())


def ht_bound_mask(mask: np.ndarray) -> Tuple[int, HTWitness]:
    n = mask.size
    if not mask.any():
        return 1, _trivial_witness()
    if mask.all():
        # every progression lies in D; the zero code
        return n + 1, HTWitness(u=0, z1=1, z2=1, delta=n + 1, gamma=0)

    steps = units(n)
    count = steps.size
    runs = _run_lengths(mask)[:, steps]
    starts = np.arange(n, dtype=np.int64)[:, None]

    # indexed [u, z1, z2]
    best_value = np.zeros((n, count, count), dtype=np.int64)
    best_delta = np.zeros((n, count, count), dtype=np.int64)
    shortest = np.full((n, count, count), n, dtype=np.int64)
    for s2 in range(n):
        rows = (starts + s2 * steps[None, :]) % n
        shortest = np.minimum(shortest, runs[rows].transpose(0, 2, 1))
        feasible = shortest >= 1
        if not feasible.any():
            break
        value = shortest + 1 + s2
        # >= keeps the largest gamma, hence the smallest delta, for equal delta + gamma
        improve = feasible & (value >= best_value)
        best_value = np.where(improve, value, best_value)
        best_delta = np.where(improve, shortest + 1, best_delta)

    top = best_value.max()
    u, z1_index, z2_index = np.argwhere(best_value == top)[0]
    delta = int(best_delta[u, z1_index, z2_index])
    witness = HTWitness(u=int(u), z1=int(steps[z1_index]), z2=int(steps[z2_index]),
                        delta=delta, gamma=int(top) - delta)
    logger.debug('HT bound %d with witness %s', top, witness)
    return int(top), witness


def ht_bound(defining_set: DefiningSet) -> Tuple[int, HTWitness]:
    """
    Hartmann-Tzeng bound by exhaustive witness search.

    Searches every start u, every pair of unit steps z1, z2 and every gamma >= 0, taking for each
    the largest delta >= 2 such that all u + s1 * z1 + s2 * z2 (s1 <= delta - 2, s2 <= gamma) lie
    in D. The maximum of delta + gamma is returned; ties go to the lexicographically smallest
    (u, z1, z2, delta). The search includes gamma = 0, so the result is never below the BCH bound.
    Args:
        defining_set: the defining set D
    Returns:
        Tuple[int, HTWitness]: the bound and its witness
    """
    return ht_bound_mask(defining_set.mask())


def witness_exponents(witness: HTWitness, n: int) -> Iterator[int]:
    for s1 in range(witness.delta - 1):
        for s2 in range(witness.gamma + 1):
            yield (witness.u + s1 * witness.z1 + s2 * witness.z2) % n


def validate_witness(defining_set: DefiningSet, witness: HTWitness) -> bool:
    """
    Independently re-checks a Hartmann-Tzeng witness against a defining set.
    """
    n = defining_set.n
    if gcd(n, witness.z1) != 1 or gcd(n, witness.z2) != 1:
        return False
    if witness.delta < 1 or witness.gamma < 0:
        return False
    return all(e in defining_set for e in witness_exponents(witness, n))


def sij(i: int, j: int, p: int, q: int) -> int:
    """
    Returns s_{i,j} = j * q - i * p mod p * q.
    """
    if p < 1 or q < 1:
        raise ParameterError(f'p and q must be positive, got p = {p}, q = {q}')
    return (j * q - i * p) % (p * q)


def base_code_witness(n1: int, n2: int) -> Optional[HTWitness]:
    """
    Returns the explicit witness of d >= 4 for the base code with t = 2, rho = (2, 2), l = 0:
    u = i * n1, z1 = s_{i,j1}, z2 = s_{i,n1-j1}, delta = 3, gamma = 1. The first (i, j1) whose
    steps are units mod n is used; None if no pair qualifies.
    """
    n = n1 * n2
    for i in range(1, n2):
        for j1 in range(1, n1):
            z1 = sij(i, j1, n1, n2)
            z2 = sij(i, n1 - j1, n1, n2)
            if gcd(n, z1) == 1 and gcd(n, z2) == 1:
                return HTWitness(u=(i * n1) % n, z1=z1, z2=z2, delta=3, gamma=1)
    return None


def singleton_like(n: int, k: int, r: int, rho: int) -> int:
    """
    Singleton-like upper bound d <= n - k + 1 - (ceil(k / r) - 1)(rho - 1) for codes with
    (r, rho)-locality.
    """
    if not 1 <= k <= n:
        raise ParameterError(f'k = {k} must lie in [1, n = {n}]')
    if r < 1:
        raise ParameterError(f'locality r = {r} must be positive')
    if rho < 2:
        raise ParameterError(f'rho = {rho} must be at least 2')
    return n - k + 1 - (-(-k // r) - 1) * (rho - 1)


def _integer_root(value: int, degree: int) -> int:
    """
    Largest v >= 0 with v ** degree <= value.
    """
    if value <= 0:
        return 0
    root = int(round(value ** (1.0 / degree)))
    while root ** degree > value:
        root -= 1
    while (root + 1) ** degree <= value:
        root += 1
    return root


def _check_lengths(n_list: Sequence[int], rho_list: Sequence[int], d: int) -> None:
    if len(n_list) == 0 or len(n_list) != len(rho_list):
        raise ParameterError(f'need one rho per length, got {list(n_list)} and {list(rho_list)}')
    for i, n_i in enumerate(n_list):
        if n_i < 2:
            raise ParameterError(f'lengths must be at least 2, got {list(n_list)}')
        if any(gcd(n_i, n_j) != 1 for n_j in n_list[i + 1:]):
            raise ParameterError(f'lengths {list(n_list)} are not pairwise coprime')
    for n_i, rho_i in zip(n_list, rho_list):
        if not 2 <= rho_i <= n_i:
            raise ParameterError(f'rho = {rho_i} must lie in [2, {n_i}]')
    if not 1 <= d <= prod(n_list):
        raise ParameterError(f'd = {d} must lie in [1, {prod(n_list)}]')


def xi_value(n_sorted: Sequence[int], rho: int, d: int) -> Tuple[int, int]:
    """
    Returns (xi, v): xi is the smallest index with n_{xi+1} > v, where
    v = floor(((d - 1) / prod_{i <= xi} n_i) ^ (1 / (t - xi))).
    Args:
        n_sorted: the lengths, ascending
        rho: the common local distance
        d: the distance
    Returns:
        Tuple[int, int]: xi in [0, t - 1] and the side length v of the hypercube part
    """
    if list(n_sorted) != sorted(n_sorted):
        raise ParameterError(f'lengths must be sorted ascending, got {list(n_sorted)}')
    _check_lengths(n_sorted, [rho] * len(n_sorted), d)
    t = len(n_sorted)
    for xi in range(t):
        v = _integer_root((d - 1) // prod(n_sorted[:xi]), t - xi)
        if n_sorted[xi] > v:
            return xi, v
    # unreachable for d <= n: the last candidate has v <= (d - 1) / prod(n_1..n_{t-1}) < n_t
    raise ParameterError(f'no xi found for lengths {list(n_sorted)} and d = {d}')


def dim_bound_thm4(n_list: Sequence[int], rho: int, d: int) -> int:
    """
    Dimension bound for codes with strong (n_i - rho + 1, rho)-t-availability:
    k <= prod(n_i - rho + 1) - max(0, v - (rho - 1))^(t - xi) * prod_{i <= xi}(n_i - rho + 1).

    The lengths are sorted ascending first. Each side of the punctured hypercube loses rho - 1
    positions to the local checks.
    """
    n_sorted = sorted(n_list)
    _check_lengths(n_sorted, [rho] * len(n_sorted), d)
    xi, v = xi_value(n_sorted, rho, d)
    full = prod(n_i - rho + 1 for n_i in n_sorted)
    filled = prod(n_i - rho + 1 for n_i in n_sorted[:xi])
    return full - max(0, v - (rho - 1)) ** (len(n_sorted) - xi) * filled


def _rectangles(limits: Sequence[int], volume: int) -> Iterator[Tuple[int, ...]]:
    """
    Yields, in lexicographic order, all side vectors with 1 <= v_i <= limits[i] and
    prod(v_i) <= volume.
    """
    if not limits:
        yield ()
        return
    for side in range(1, min(limits[0], volume) + 1):
        for rest in _rectangles(limits[1:], volume // side):
            yield (side,) + rest


def dim_bound_rect(n_list: Sequence[int], rho_list: Sequence[int], d: int) -> Tuple[int, Tuple[int, ...]]:
    """
    Refined dimension bound: puncturing any rectangle with sides v_i <= n_i and volume at most
    d - 1 must keep the dimension, and removes prod(max(0, v_i - rho_i + 1)) of it.
    Args:
        n_list: the lengths n_i
        rho_list: the local distances rho_i
        d: the distance
    Returns:
        Tuple[int, Tuple[int, ...]]: the bound and the lexicographically smallest optimal sides
    """
    _check_lengths(n_list, rho_list, d)
    full = prod(n_i - rho_i + 1 for n_i, rho_i in zip(n_list, rho_list))
    best_reduction, best_sides = 0, (0,) * len(n_list)
    for sides in _rectangles(list(n_list), d - 1):
        reduction = prod(max(0, v - rho_i + 1) for v, rho_i in zip(sides, rho_list))
        if reduction > best_reduction:
            best_reduction, best_sides = reduction, sides
    return full - best_reduction, best_sides


def product_distance_bound(params: ConstructionParams) -> int:
    return prod(params.rho)


def bound_report(params: ConstructionParams) -> BoundReport:
    """
    Evaluates every bound for the code of the given parameters. The bounds depend on the
    defining set only, not on the field.
    Args:
        params: the construction parameters
    Returns:
        BoundReport: the bounds, with the dimension bounds evaluated at the HT distance
    """
    defining_set = full_defining_set(params)
    n = params.n
    k = n - len(defining_set)
    bch, bch_witness = bch_bound(defining_set)
    ht, ht_witness = ht_bound(defining_set)
    report = BoundReport(bch=bch, bch_witness=bch_witness, ht=ht, ht_witness=ht_witness,
                         product=product_distance_bound(params), singleton_like=[])
    if k == 0:
        return report

    report.singleton_like = [singleton_like(n, k, r, rho)
                             for r, rho in zip(params.locality, params.rho)]
    report.singleton_like_min = min(report.singleton_like)
    report.distance_determined = ht == report.singleton_like_min
    report.singleton_optimal = ht in report.singleton_like

    d = min(ht, n)
    if len(set(params.rho)) == 1:
        rho = params.rho[0]
        report.xi, report.v = xi_value(sorted(params.n_list), rho, d)
        report.thm4 = dim_bound_thm4(params.n_list, rho, d)
    report.rect, sides = dim_bound_rect(params.n_list, params.rho, d)
    report.rect_sides = list(sides)
    return report
