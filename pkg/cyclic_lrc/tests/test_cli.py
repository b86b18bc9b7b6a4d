import json
import logging

import pytest
from click.testing import CliRunner

import cli
from cyclic_lrc import table1
from cyclic_lrc.models import (SCHEMA_VERSION, AvailabilityReport, DistanceResult, SearchResult,
                               Table1Row)

EXAMPLE1 = ['--n', '3,5', '--rho', '2,2', '--dg', '7,8', '--q', '16']
EXAMPLE2 = ['--n', '3,4', '--rho', '2,2', '--dg', '5,7', '--q', '13']


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cli.run, list(args))


def without_schema(output):
    return {key: value for key, value in output.items() if key != 'schema'}


def test_validate_json():
    assert cli.validate_json({'seed': 0}, ['seed', 'search_cap']) == ['search_cap']


def test_load_config_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        cli.load_config(tmp_path / 'missing.json')


def test_load_config_rejects_missing_keys(tmp_path):
    path = tmp_path / 'config.json'
    path.write_text(json.dumps({'seed': 3}), encoding='UTF8')
    with pytest.raises(cli.UsageFailure, match='search_cap'):
        cli.load_config(path, cli.CONFIG_KEYS)


def test_config_missing_keys_is_usage_error(runner, tmp_path):
    path = tmp_path / 'config.json'
    path.write_text(json.dumps({'seed': 3}), encoding='UTF8')
    result = runner.invoke(cli.run, ['--config', str(path), 'table1'])
    assert result.exit_code == 2
    assert 'Missing keys' in result.output


def test_default_config_next_to_cli():
    config = cli.load_config(cli.DEFAULT_CONFIG, cli.CONFIG_KEYS)
    assert config['output_format'] == 'text'


def test_parse_list():
    assert cli.parse_list('3,5', 'n') == (3, 5)
    assert cli.parse_list(None, 'dg') == ()
    with pytest.raises(cli.UsageFailure):
        cli.parse_list('3,x', 'n')


def test_construct_json_example1(runner):
    result = invoke(runner, 'construct', *EXAMPLE1, '--format', 'json')
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report['schema'] == 1
    assert report['k'] == 6
    assert report['bounds']['bch'] == 7
    assert report['availability']['passed']


def test_construct_text_example2(runner):
    result = invoke(runner, 'construct', *EXAMPLE2)
    assert result.exit_code == 0, result.output
    assert 'k = 4' in result.output
    assert 'BCH bound: d >= 8' in result.output


def test_construct_base_code(runner):
    result = invoke(runner, 'construct', '--n', '3,5', '--rho', '2,2', '--format', 'json')
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report['k'] == 8
    assert report['bounds']['ht'] >= 4


def test_construct_is_deterministic(runner):
    first = invoke(runner, 'construct', *EXAMPLE2, '--format', 'json')
    second = invoke(runner, 'construct', *EXAMPLE2, '--format', 'json')
    assert first.output == second.output


def test_construct_writes_output_file(runner, tmp_path):
    out = tmp_path / 'report.json'
    result = invoke(runner, 'construct', *EXAMPLE2, '--format', 'json', '--out', str(out))
    assert result.exit_code == 0, result.output
    assert json.loads(out.read_text(encoding='UTF8')) == json.loads(result.output)


@pytest.mark.parametrize('args', [
    ['--n', '3,6', '--rho', '2,2'],
    ['--n', '3,5', '--rho', '2,9'],
    ['--n', '3,5', '--rho', '2,2', '--q', '17'],
    ['--n', '3,x', '--rho', '2,2'],
])
def test_construct_invalid_parameters(runner, args):
    result = invoke(runner, 'construct', *args)
    assert result.exit_code == 2


def test_construct_warns_once_on_overlap(runner, caplog):
    with caplog.at_level(logging.WARNING):
        result = invoke(runner, 'construct', '--n', '3,5', '--rho', '2,2', '--dg', '0,7')
    assert result.exit_code == 0, result.output
    overlaps = [record for record in caplog.records if 'already lie' in record.getMessage()]
    assert len(overlaps) == 1


def test_missing_config(runner, tmp_path):
    result = runner.invoke(cli.run, ['--config', str(tmp_path / 'none.json'), 'table1'])
    assert result.exit_code == 1
    assert isinstance(result.exception, FileNotFoundError)


def test_table1_text(runner):
    result = invoke(runner, 'table1')
    assert result.exit_code == 0, result.output
    assert len(result.output.strip().splitlines()) == 12


def test_table1_csv(runner):
    result = invoke(runner, 'table1', '--format', 'csv')
    assert result.exit_code == 0, result.output
    lines = result.output.strip().splitlines()
    assert lines[0] == 'n,n1,n2,dg,ht,k,bound'
    assert len(lines) == 12
    assert lines[2] == '15,3,5,4 7 8 11,11,4,4'


def test_table1_single_row(runner):
    result = invoke(runner, 'table1', '--row', '4', '--format', 'json')
    assert result.exit_code == 0, result.output
    output = json.loads(result.output)
    assert output['schema'] == SCHEMA_VERSION
    rows = [Table1Row.model_validate(row).model_dump() for row in output['rows']]
    assert rows == output['rows']
    assert len(rows) == 1
    assert (rows[0]['n'], rows[0]['dg'], rows[0]['ht'], rows[0]['k']) == (21, [4, 5], 6, 10)


def test_table1_check_optimal(runner):
    result = invoke(runner, 'table1', '--row', '1', '--check-optimal', '--format', 'csv')
    assert result.exit_code == 0, result.output
    assert result.output.splitlines()[0].endswith(',dg_optimal')
    assert result.output.splitlines()[1].endswith(',True')


def test_table1_mismatch_exits_1(runner, monkeypatch):
    rows = [dict(row) for row in table1.ROWS]
    rows[2]['ht'] = 6
    monkeypatch.setattr(table1, 'ROWS', rows)
    result = invoke(runner, 'table1', '--format', 'csv')
    assert result.exit_code == 1
    assert 'row 3' in result.output


def test_table1_invalid_row(runner):
    result = invoke(runner, 'table1', '--row', '12')
    assert result.exit_code == 2


def test_search_dg(runner):
    result = invoke(runner, 'search-dg', '--n', '3,5', '--rho', '2,2', '--size', '1',
                    '--format', 'json')
    assert result.exit_code == 0, result.output
    output = json.loads(result.output)
    assert output['schema'] == SCHEMA_VERSION
    assert SearchResult.model_validate(output).model_dump(mode='json') == without_schema(output)
    assert output['ht'] == 5
    assert output['k'] == 7


def test_search_dg_over_cap(runner):
    result = invoke(runner, 'search-dg', '--n', '3,5', '--rho', '2,2', '--size', '4', '--cap', '5')
    assert result.exit_code == 2


def test_distance_example2(runner):
    result = invoke(runner, 'distance', *EXAMPLE2, '--budget', '30000')
    assert result.exit_code == 0, result.output
    assert 'd = 8' in result.output


def test_distance_bracket_json(runner):
    result = invoke(runner, 'distance', *EXAMPLE2, '--budget', '10', '--trials', '100', '--seed', '3',
                    '--format', 'json')
    assert result.exit_code == 0, result.output
    output = json.loads(result.output)
    assert output['schema'] == SCHEMA_VERSION
    assert DistanceResult.model_validate(output).model_dump() == without_schema(output)
    assert not output['exact']
    assert output['lower'] == 8


def test_verify(runner):
    result = invoke(runner, 'verify', *EXAMPLE1)
    assert result.exit_code == 0, result.output
    assert 'passed' in result.output


def test_verify_json(runner):
    result = invoke(runner, 'verify', *EXAMPLE2, '--format', 'json')
    assert result.exit_code == 0, result.output
    output = json.loads(result.output)
    assert output['schema'] == SCHEMA_VERSION
    report = AvailabilityReport.model_validate(output)
    assert report.model_dump() == without_schema(output)
    assert report.passed
    assert len(report.groups) == 4 + 3


def test_repair_demo(runner):
    result = invoke(runner, 'repair-demo', *EXAMPLE1, '--erase', '0', '--seed', '7')
    assert result.exit_code == 0, result.output
    assert result.output.strip() == 'repaired via groups {0,5,10} and {0,3,6,9,12}; results agree'


def test_repair_demo_json(runner):
    result = invoke(runner, 'repair-demo', *EXAMPLE2, '--erase', '0,1', '--format', 'json')
    assert result.exit_code == 0, result.output
    output = json.loads(result.output)
    assert output['schema'] == SCHEMA_VERSION
    assert output['agree']
    assert output['erased'] == [0, 1]
    assert sorted(output['repaired']) == ['1', '2']


def test_repair_demo_invalid_position(runner):
    result = invoke(runner, 'repair-demo', *EXAMPLE1, '--erase', '15')
    assert result.exit_code == 2
