from itertools import product

import numpy as np
import pytest

from cyclic_lrc.bounds import bch_bound, ht_bound, singleton_like
from cyclic_lrc.construction import ConstructionParams, build_code, encode, full_defining_set
from cyclic_lrc.distance import (min_distance_bracket, min_distance_exact, min_weight,
                                 normalized_messages, row_weights)
from cyclic_lrc.errors import ParameterError
from cyclic_lrc.gf import field_new, find_field_for_length
from cyclic_lrc.search import row_params
from cyclic_lrc import table1

SMALL_LENGTHS = [(2, 3), (2, 5), (3, 4), (2, 7), (3, 5), (4, 5), (2, 9), (3, 7)]


def naive_distance(code):
    """
    Minimum distance over all pairs of distinct codewords.
    """
    codewords = np.array([[int(symbol) for symbol in encode(code, message)]
                          for message in product(range(code.q), repeat=code.k)])
    best = code.n
    for a in range(len(codewords) - 1):
        distances = np.count_nonzero(codewords[a + 1:] != codewords[a], axis=1)
        best = min(best, int(distances.min()))
    return best


def random_small_codes(count, max_messages, seed):
    rng = np.random.default_rng(seed)
    codes = []
    while len(codes) < count:
        n_list = SMALL_LENGTHS[int(rng.integers(len(SMALL_LENGTHS)))]
        rho = tuple(int(rng.integers(2, n_i + 1)) for n_i in n_list)
        n = n_list[0] * n_list[1]
        dg = tuple(int(e) for e in rng.choice(n, size=int(rng.integers(0, 4)), replace=False))
        params = ConstructionParams(n_list=n_list, rho=rho, dg=dg)
        k = n - len(full_defining_set(params))
        if k >= 1 and find_field_for_length(n).order ** k <= max_messages:
            codes.append(build_code(params))
    return codes


def test_normalized_messages_cover_projective_space():
    gf = field_new(5, 1).gf
    blocks = list(normalized_messages(gf, 3, chunk=7))
    messages = np.concatenate([np.asarray(block) for block in blocks])
    assert len(messages) == (5 ** 3 - 1) // 4
    assert len({tuple(m) for m in messages}) == len(messages)
    for m in messages:
        assert m[np.nonzero(m)[0][0]] == 1


def test_min_weight_empty_basis():
    gf = field_new(7, 1).gf
    assert min_weight(gf.Zeros((0, 6))) == (7, 0)


def test_row_weights_on_field_arrays():
    gf = field_new(2, 4).gf
    vectors = gf([[0, 0, 0, 0], [1, 0, 15, 0], [3, 7, 9, 2]])
    assert list(row_weights(vectors)) == [0, 2, 4]


def test_min_weight_of_single_parity_code():
    gf = field_new(5, 1).gf
    basis = gf([[1, 0, 0, 4], [0, 1, 0, 4], [0, 0, 1, 4]])
    weight, evaluations = min_weight(basis)
    assert weight == 2
    assert evaluations == (5 ** 3 - 1) // 4


def test_desk_code_distance(desk_code):
    result = min_distance_exact(desk_code)
    assert result.exact
    assert result.lower == result.upper == 4
    assert result.method == 'exhaustive'


def test_example2_distance(example2_code):
    result = min_distance_exact(example2_code, budget=30000)
    assert result.exact
    assert result.lower == 8
    assert bch_bound(example2_code.defining_set)[0] == 8
    assert singleton_like(12, 4, 2, 2) == 8


def test_table1_row2_distance():
    code = build_code(row_params(table1.ROWS[1]))
    assert code.k == 4
    result = min_distance_exact(code)
    assert result.exact
    assert result.lower == 11


def test_example1_distance(example1_code):
    # 16^6 messages fit the default budget
    result = min_distance_exact(example1_code)
    assert result.exact
    assert result.lower == result.upper == 8


def test_repetition_like_code():
    code = build_code(ConstructionParams(n_list=(6,), rho=(6,), q=7))
    assert code.k == 1
    result = min_distance_exact(code)
    assert result.lower == row_weights(code.generator_matrix[:1])[0] == 6


def test_zero_code_distance():
    code = build_code(ConstructionParams(n_list=(2, 3), rho=(2, 3), dg=(5,)))
    result = min_distance_exact(code)
    assert result.exact
    assert result.lower == 7


def test_budget_fallback(example2_code):
    result = min_distance_exact(example2_code, budget=100, trials=50, seed=1)
    assert not result.exact
    assert result.method == 'sampled'
    assert result.lower <= 8 <= result.upper


def test_bracket_example1(example1_code):
    result = min_distance_bracket(example1_code, trials=20000, seed=0)
    assert result.lower == 7
    assert result.lower <= result.upper
    assert not result.exact
    assert result.evaluations == 20000 + 12


def test_bracket_is_deterministic(example1_code):
    first = min_distance_bracket(example1_code, trials=1, seed=42)
    second = min_distance_bracket(example1_code, trials=1, seed=42)
    assert first == second


def test_bracket_requires_trials(example1_code):
    with pytest.raises(ParameterError):
        min_distance_bracket(example1_code, trials=0)


def test_exact_distance_respects_bounds(example2_code, desk_code):
    for code in (example2_code, desk_code):
        d = min_distance_exact(code).lower
        assert d >= ht_bound(code.defining_set)[0]
        assert d >= int(np.prod(code.params.rho))
        for r, rho in zip(code.params.locality, code.params.rho):
            assert d <= singleton_like(code.n, code.k, r, rho)


def test_exact_distance_matches_naive_oracle():
    for code in random_small_codes(10, max_messages=2000, seed=17):
        assert min_distance_exact(code).lower == naive_distance(code)
