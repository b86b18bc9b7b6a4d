import pytest

from cyclic_lrc.bounds import dim_bound_rect, ht_bound
from cyclic_lrc.construction import ConstructionParams, DefiningSet, local_union
from cyclic_lrc.errors import ParameterError
from cyclic_lrc.search import optimize_dg, printed_dg_is_optimal, row_params, table1_rows
from cyclic_lrc import table1


@pytest.fixture
def base15():
    return ConstructionParams(n_list=(3, 5), rho=(2, 2))


@pytest.fixture
def base21():
    return ConstructionParams(n_list=(3, 7), rho=(2, 2))


def ht_with(params, exponents):
    base = local_union(params)
    return ht_bound(base.union(DefiningSet(params.n, tuple(exponents))))[0]


def test_optimize_dg_n15(base15):
    result = optimize_dg(base15, 1)
    assert result.ht == 5
    assert result.k == 7
    assert result.examined == 8
    # every unit exponent gives the same bound; {4} of the table is one of them
    assert ht_with(base15, [4]) == 5
    assert result.dg == [1]


def test_optimize_dg_n21(base21):
    result = optimize_dg(base21, 2)
    assert result.ht == 6
    assert result.k == 10
    assert ht_with(base21, [4, 5]) == 6
    assert result.dg == sorted(result.dg)
    assert not set(result.dg) & set(local_union(base21))


def test_optimize_dg_empty(base15):
    result = optimize_dg(base15, 0)
    assert result.dg == []
    assert result.ht == ht_bound(local_union(base15))[0]
    assert result.k == 8
    assert result.examined == 1


def test_optimize_dg_monotone_in_size(base15):
    values = [optimize_dg(base15, m).ht for m in range(4)]
    assert values == sorted(values)


def test_optimize_dg_ignores_given_dg(base15):
    with_dg = base15.model_copy(update={'dg': (7, 8)})
    assert optimize_dg(with_dg, 1) == optimize_dg(base15, 1)


def test_optimize_dg_with_overlap(base15):
    result = optimize_dg(base15, 1, allow_overlap=True)
    assert result.examined == 15
    assert result.ht == 5


def test_optimize_dg_limits(base15):
    with pytest.raises(ParameterError):
        optimize_dg(base15, 9)
    with pytest.raises(ParameterError):
        optimize_dg(base15, 2, cap=10)


def test_table1_rows_match():
    rows = table1_rows()
    assert len(rows) == 11
    for row in rows:
        assert row.matches, row


@pytest.mark.parametrize('number, expected', [
    (6, (5, 31, 31)),
    (5, (11, 8, 8)),
    (11, (10, 19, 20)),
])
def test_table1_examples(number, expected):
    row = table1_rows([number])[0]
    assert (row.ht, row.k, row.bound) == expected


def test_table1_fields():
    assert {row.n: row.q for row in table1_rows()} == {15: 16, 21: 43, 51: 103, 35: 71}


def test_table1_attains_bound():
    flags = [row.attains_bound for row in table1_rows()]
    assert flags == [True, True, True, False, True, True, False, False, False, False, False]


def test_table1_invalid_row():
    with pytest.raises(ParameterError):
        table1_rows([12])
    with pytest.raises(ParameterError):
        table1_rows([0])


def test_table1_dimension_below_rect_bound():
    for row in table1_rows():
        params = row_params(table1.ROWS[row.row - 1])
        rect, _ = dim_bound_rect(params.n_list, params.rho, min(row.ht, row.n))
        assert row.k <= rect


@pytest.mark.parametrize("row", [1, 2, 3, 4, 5, 6, 7, 9, 10])
def test_printed_dg_is_optimal(row):
    assert printed_dg_is_optimal(row) is True


def test_printed_dg_optimality_over_cap():
    assert printed_dg_is_optimal(2, cap=10) is None
