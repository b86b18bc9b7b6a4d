import json

import pytest

from cyclic_lrc.analyzer import CyclicLrcAnalyzer, analyze_code, code_parameters
from cyclic_lrc.models import SCHEMA_VERSION, CodeReport


@pytest.fixture
def analyzer(example1_params):
    return CyclicLrcAnalyzer(example1_params, trials=200, seed=0)


def test_report_example1(analyzer):
    report = analyzer.get_report()
    assert report.n == 15
    assert report.k == 6
    assert report.field.q == 16
    assert report.field.modulus == [1, 1, 0, 0, 1]
    assert report.defining_set['D'] == [0, 3, 5, 6, 7, 8, 9, 10, 12]
    assert report.defining_set['D_g'] == [7, 8]
    assert len(report.generator_poly) == 10
    assert report.bounds.bch == 7
    assert report.availability.passed
    assert report.distance.lower == 7
    assert not report.distance.exact


def test_report_is_consistent(analyzer):
    report = analyzer.get_report()
    assert report.k == report.n - len(report.defining_set['D'])
    assert report.distance.lower <= report.distance.upper


def test_report_computed_once(analyzer):
    assert analyzer.get_report() is analyzer.get_report()


def test_json_round_trip(analyzer):
    text = analyzer.get_json()
    assert json.loads(text)['schema'] == SCHEMA_VERSION
    assert CodeReport.model_validate_json(text) == analyzer.get_report()


def test_dictionary(analyzer):
    output = analyzer.get_dictionary()
    assert output['schema'] == 1
    assert output['params']['n_list'] == [3, 5]
    assert output['bounds']['ht_witness']['delta'] + output['bounds']['ht_witness']['gamma'] == 7


def test_dataframes(analyzer):
    assert analyzer.get_dataframe().shape == (4, 15)
    groups = analyzer.get_groups_dataframe()
    assert len(groups) == 8
    assert groups['passed'].all()


def test_code_parameters(analyzer):
    assert code_parameters(analyzer.code) == {'n': 15, 'k': 6, 'r': [2, 4], 'rho': [2, 2]}


def test_analyze_code_exact_distance(example2_params):
    output = analyze_code(example2_params, exact_distance=True)
    assert output['k'] == 4
    assert output['bounds']['bch'] == 8
    assert output['distance'] == {'lower': 8, 'upper': 8, 'exact': True, 'method': 'exhaustive',
                                  'evaluations': output['distance']['evaluations']}
