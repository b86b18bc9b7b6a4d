"""
Choice of the global extension D_g of the defining set, and evaluation of the reference
parameter table.
"""

import logging
from itertools import combinations
from math import comb
from typing import List, Optional

from cyclic_lrc import table1
from cyclic_lrc.bounds import dim_bound_thm4, ht_bound, ht_bound_mask
from cyclic_lrc.construction import ConstructionParams, full_defining_set, local_union
from cyclic_lrc.errors import ParameterError
from cyclic_lrc.gf import find_field_for_length
from cyclic_lrc.models import SearchResult, Table1Row

logger = logging.getLogger(__name__)

DEFAULT_SEARCH_CAP = 10 ** 7


def optimize_dg(params: ConstructionParams, m: int, allow_overlap: bool = False,
                cap: int = DEFAULT_SEARCH_CAP) -> SearchResult:
    """
    Exhaustive search for the m exponents D_g maximising the Hartmann-Tzeng bound of the
    resulting defining set. Any D_g in params is ignored.
    Args:
        params: the base construction parameters
        m: the size of D_g
        allow_overlap: also consider exponents already in the local defining sets
        cap: maximum number of candidate sets
    Returns:
        SearchResult: the best D_g, lexicographically smallest on ties
    """
    base = local_union(params)
    n = params.n
    pool = [e for e in range(n) if allow_overlap or e not in base]
    if not 0 <= m <= len(pool):
        raise ParameterError(f'D_g size {m} outside [0, {len(pool)}]')
    candidates = comb(len(pool), m)
    if candidates > cap:
        raise ParameterError(f'{candidates} candidate sets exceed the search cap of {cap}')
    logger.debug('Searching %d candidate sets of size %d for n = %d', candidates, m, n)

    base_mask = base.mask()
    best_value, best_subset, best_witness = 0, (), None
    examined = 0
    for subset in combinations(pool, m):
        mask = base_mask.copy()
        mask[list(subset)] = True
        value, witness = ht_bound_mask(mask)
        examined += 1
        if value > best_value:
            best_value, best_subset, best_witness = value, subset, witness

    dimension = n - int(base_mask.sum()) - sum(1 for e in best_subset if not base_mask[e])
    return SearchResult(dg=list(best_subset), ht=best_value, k=dimension, examined=examined,
                        witness=best_witness)


def row_params(row: dict) -> ConstructionParams:
    return ConstructionParams(n_list=(row['n1'], row['n2']), rho=table1.RHO, dg=tuple(row['dg']))


def evaluate_row(number: int, row: dict) -> Table1Row:
    params = row_params(row)
    defining_set = full_defining_set(params)
    ht, _ = ht_bound(defining_set)
    k = params.n - len(defining_set)
    bound = dim_bound_thm4(params.n_list, table1.RHO[0], min(ht, params.n))
    return Table1Row(row=number, n=params.n, n1=row['n1'], n2=row['n2'], dg=list(row['dg']),
                     q=find_field_for_length(params.n).order, ht=ht, k=k, bound=bound,
                     printed_ht=row['ht'], printed_k=row['k'], printed_bound=row['bound'],
                     matches=(ht, k, bound) == (row['ht'], row['k'], row['bound']),
                     attains_bound=k == bound)


def table1_rows(rows: Optional[List[int]] = None) -> List[Table1Row]:
    """
    Evaluates the rows of the reference table with their printed D_g.
    Args:
        rows: 1-based row numbers, all rows if None
    Returns:
        List[Table1Row]: computed and printed values side by side
    """
    numbers = range(1, len(table1.ROWS) + 1) if rows is None else rows
    results = []
    for number in numbers:
        if not 1 <= number <= len(table1.ROWS):
            raise ParameterError(f'row {number} outside [1, {len(table1.ROWS)}]')
        results.append(evaluate_row(number, table1.ROWS[number - 1]))
    return results


def printed_dg_is_optimal(number: int, cap: int = DEFAULT_SEARCH_CAP) -> Optional[bool]:
    """
    Whether the printed D_g of a row reaches the best HT bound over all D_g of the same size.
    None if the search does not fit the cap.
    """
    row = table1.ROWS[number - 1]
    params = row_params(row)
    try:
        result = optimize_dg(params.without_dg(), len(row['dg']), cap=cap)
    except ParameterError as e:
        logger.info('Row %d not checked: %s', number, e)
        return None
    return result.ht == evaluate_row(number, row).ht
