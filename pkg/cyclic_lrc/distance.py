"""
Minimum distance of whole codes: exact by enumeration when the budget allows, otherwise a
bracket between the Hartmann-Tzeng bound and the lightest of a sample of codewords.
"""

import logging
from typing import Iterator, Optional, Tuple

import galois
import numpy as np

from cyclic_lrc.bounds import ht_bound
from cyclic_lrc.construction import CyclicLRC
from cyclic_lrc.errors import ParameterError
from cyclic_lrc.models import DistanceResult

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 2 ** 24
DEFAULT_TRIALS = 10000
DEFAULT_SEED = 0
CHUNK = 1 << 15


def normalized_messages(gf, k: int, chunk: int = CHUNK) -> Iterator[galois.FieldArray]:
    """
    Yields blocks of messages whose first nonzero coordinate is 1. Every nonzero message is a
    nonzero scalar multiple of exactly one of them, so they cover all codeword weights.
    Args:
        gf: the galois field class
        k: message length
        chunk: maximum block size
    """
    q = gf.order
    for lead in range(k):
        free = k - lead - 1
        total = q ** free
        powers = q ** np.arange(free, dtype=np.int64)
        for start in range(0, total, chunk):
            index = np.arange(start, min(start + chunk, total), dtype=np.int64)
            block = np.zeros((index.size, k), dtype=np.int64)
            block[:, lead] = 1
            if free:
                block[:, lead + 1:] = (index[:, None] // powers[None, :]) % q
            yield gf(block)


def row_weights(vectors: galois.FieldArray) -> np.ndarray:
    """
    Hamming weight of each row, counted on the underlying integers (GF arrays do not cast to bool).
    """
    return np.count_nonzero(vectors.view(np.ndarray), axis=1)


def min_weight(basis: galois.FieldArray, stop_at: Optional[int] = None) -> Tuple[int, int]:
    """
    Minimum Hamming weight of the nonzero vectors spanned by the rows of `basis`.
    Args:
        basis: k x n generator rows, linearly independent
        stop_at: a known lower bound; enumeration stops once a codeword of that weight is seen
    Returns:
        Tuple[int, int]: the minimum weight (n + 1 for an empty basis) and the number of
        codewords evaluated
    """
    k, n = basis.shape
    best, evaluations = n + 1, 0
    for block in normalized_messages(type(basis), k):
        weights = row_weights(block @ basis)
        evaluations += block.shape[0]
        best = min(best, int(weights.min()))
        if stop_at is not None and best <= stop_at:
            break
    return best, evaluations


def min_distance_exact(code: CyclicLRC, budget: int = DEFAULT_BUDGET,
                       trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED) -> DistanceResult:
    """
    Exact minimum distance by enumerating all messages, skipping scalar multiples.
    Falls back to min_distance_bracket when q^k exceeds the budget.
    Args:
        code: the code
        budget: maximum number of messages q^k for exact mode
        trials: sample size for the fallback
        seed: seed for the fallback
    Returns:
        DistanceResult: exact result, or a bracket if over budget
    """
    lower, _ = ht_bound(code.defining_set)
    if code.k == 0:
        return DistanceResult(lower=code.n + 1, upper=code.n + 1, exact=True, method='exhaustive',
                              evaluations=0)
    if code.q ** code.k > budget:
        logger.info('q^k = %d^%d exceeds the budget of %d, bracketing instead',
                    code.q, code.k, budget)
        return min_distance_bracket(code, trials=trials, seed=seed)

    distance, evaluations = min_weight(code.generator_matrix, stop_at=lower)
    logger.info('Exact distance %d after %d codewords', distance, evaluations)
    return DistanceResult(lower=distance, upper=distance, exact=True, method='exhaustive',
                          evaluations=evaluations)


def min_distance_bracket(code: CyclicLRC, trials: int = DEFAULT_TRIALS,
                         seed: int = DEFAULT_SEED) -> DistanceResult:
    """
    Brackets the distance: the lower end is the Hartmann-Tzeng bound, the upper end the lightest
    codeword among the generator rows, the systematic generator rows and `trials` random
    nonzero messages. Deterministic for a given seed.
    """
    if trials < 1:
        raise ParameterError(f'trials must be positive, got {trials}')
    lower, _ = ht_bound(code.defining_set)
    if code.k == 0:
        return DistanceResult(lower=code.n + 1, upper=code.n + 1, exact=True, method='exhaustive',
                              evaluations=0)

    gf = code.field.gf
    generator = code.generator_matrix
    upper = int(row_weights(generator).min())
    upper = min(upper, int(row_weights(generator.row_reduce()).min()))
    evaluations = 2 * code.k

    rng = np.random.default_rng(seed)
    for start in range(0, trials, CHUNK):
        size = min(CHUNK, trials - start)
        messages = gf(rng.integers(0, code.q, size=(size, code.k), dtype=np.int64))
        weights = row_weights(messages @ generator)
        # zero messages give zero codewords; they are not codewords of interest
        weights = weights[row_weights(messages) > 0]
        if weights.size:
            upper = min(upper, int(weights.min()))
        evaluations += size

    return DistanceResult(lower=lower, upper=upper, exact=False, method='sampled',
                          evaluations=evaluations)
