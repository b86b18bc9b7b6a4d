"""
Command line interface for the cyclic_lrc package.
"""
import json
import logging
from functools import wraps
from pathlib import Path

import click
import numpy as np
import pandas as pd
from pydantic import ValidationError

from cyclic_lrc.analyzer import CyclicLrcAnalyzer, code_parameters
from cyclic_lrc.construction import ConstructionParams, build_code, encode
from cyclic_lrc.distance import min_distance_exact
from cyclic_lrc.errors import LrcError
from cyclic_lrc.locality import erasure_groups, repair_through_each, verify_availability
from cyclic_lrc.models import SCHEMA_VERSION
from cyclic_lrc.search import optimize_dg, printed_dg_is_optimal, table1_rows

CONFIG_KEYS = ['distance_budget', 'bracket_trials', 'seed', 'search_cap', 'local_exact_budget',
               'rank_test_max_distance', 'output_format']
TABLE1_COLUMNS = ['n', 'n1', 'n2', 'dg', 'ht', 'k', 'bound']
DEFAULT_CONFIG = Path(__file__).parent / 'config.json'


class UsageFailure(click.ClickException):
    """
    Invalid parameters or flags; exits with code 2.
    """
    exit_code = 2


def validate_json(json_object: dict, keys: list) -> list:
    """
    Validates a JSON object against a list of keys.
    Args:
        json_object: JSON object to validate.
        keys: List of keys to check for.
    Returns:
        List of missing keys.
    """
    return [key for key in keys if key not in json_object]


def load_config(file, keys: list = None) -> dict:
    """
    Loads a JSON config file and validates it against a list of keys.
    Args:
        file: Path to the JSON config file.
        keys: List of keys to check for.
    Returns:
        JSON config file as a dictionary.
    Raises:
        UsageFailure: if a key is missing.
    """
    if keys is None:
        keys = []
    try:
        with open(file=file, encoding='UTF8') as f:
            config = json.load(f)
    except Exception as e:
        raise FileNotFoundError(f"Error loading {file}. Original error: {str(e)}") from e
    missing_keys = validate_json(config, keys)
    if missing_keys:
        raise UsageFailure(f"Invalid config file {file}. Missing keys: {missing_keys}")
    return config


def write_file(outputformat: str, outputfile: str, output) -> None:
    """
    Writes the output to a file.
    Args:
        outputformat: Output format.
        outputfile: Path to the output file.
        output: a dictionary for json, a DataFrame for csv, rendered text otherwise.
    """
    if outputformat == 'csv':
        output.to_csv(outputfile, index=False)
    elif outputformat == 'json':
        with open(file=outputfile, mode='w', encoding='UTF8') as f:
            json.dump(output, f, indent=4)
    else:
        with open(file=outputfile, mode='w', encoding='UTF8') as f:
            f.write(output + '\n')


def emit(outputformat: str, output, outputfile: str = None) -> None:
    """
    Prints the output to the console and optionally writes it to a file.
    """
    if outputformat == 'csv':
        click.echo(output.to_csv(index=False), nl=False)
    elif outputformat == 'json':
        click.echo(json.dumps(output, indent=4))
    else:
        click.echo(output)
    if outputfile:
        write_file(outputformat, outputfile, output)


def versioned(payload: dict) -> dict:
    """
    Prefixes a JSON payload with the schema version.
    """
    return {'schema': SCHEMA_VERSION, **payload}


def parse_list(value: str, name: str) -> tuple:
    """
    Parses a comma separated list of integers, e.g. "3,5".
    """
    if value is None or value.strip() == '':
        return ()
    try:
        return tuple(int(item) for item in value.split(','))
    except ValueError as e:
        raise UsageFailure(f'--{name} expects comma separated integers, got {value!r}') from e


def usage_errors(function):
    """
    Turns library errors and invalid parameters into exit code 2.
    """
    @wraps(function)
    def wrapper(*args, **kwargs):
        try:
            return function(*args, **kwargs)
        except ValidationError as e:
            messages = '; '.join(error['msg'] for error in e.errors())
            raise UsageFailure(f'invalid parameters: {messages}') from e
        except LrcError as e:
            raise UsageFailure(str(e)) from e
    return wrapper


def code_options(function):
    """
    The flags shared by every command describing one code.
    """
    options = [
        click.option('--n', 'n_list', required=True, help='Local lengths n_i, e.g. 3,5.'),
        click.option('--rho', required=True, help='Local distances rho_i, e.g. 2,2.'),
        click.option('--b', default=None, help='Offsets b_i, coprime to n_i. Default all 1.'),
        click.option('--l', 'shift', default=0, type=int, help='Global shift l of the exponents.'),
        click.option('--dg', default=None, help='Global exponents D_g, e.g. 7,8.'),
        click.option('--q', default=None, type=int,
                     help='Field order. Default: smallest q with n | q - 1.'),
    ]
    for option in reversed(options):
        function = option(function)
    return function


def make_params(n_list, rho, b, shift, dg, q) -> ConstructionParams:
    return ConstructionParams(n_list=parse_list(n_list, 'n'), rho=parse_list(rho, 'rho'),
                              b=parse_list(b, 'b'), shift=shift, dg=parse_list(dg, 'dg'), q=q)


def braces(exponents) -> str:
    return '{' + ','.join(str(e) for e in exponents) + '}'


def render_report(analyzer: CyclicLrcAnalyzer) -> str:
    report = analyzer.get_report()
    summary = code_parameters(analyzer.code)
    field = report.field
    bounds = report.bounds
    witness = bounds.ht_witness
    lines = [
        f"Code: n = {summary['n']}, k = {summary['k']} over GF({field.q}) = GF({field.p}^{field.m}), "
        f"modulus {field.modulus} (lowest degree first)",
        f"Locality: r = {summary['r']}, rho = {summary['rho']}",
        'Defining set:',
        analyzer.get_dataframe().to_string(),
        f'Generator polynomial: {report.generator_poly} (lowest degree first)',
        f'BCH bound: d >= {bounds.bch}',
        f'Hartmann-Tzeng bound: d >= {bounds.ht} (u = {witness.u}, z1 = {witness.z1}, '
        f'z2 = {witness.z2}, delta = {witness.delta}, gamma = {witness.gamma})',
        f'Product bound: d >= {bounds.product}',
    ]
    if bounds.singleton_like:
        lines.append(f'Singleton-like bound: d <= {bounds.singleton_like_min}'
                     + (' (distance determined)' if bounds.distance_determined else ''))
    if bounds.thm4 is not None:
        lines.append(f'Dimension bound: k <= {bounds.thm4} (xi = {bounds.xi}, v = {bounds.v})')
    if bounds.rect is not None:
        lines.append(f'Refined dimension bound: k <= {bounds.rect} (sides {bounds.rect_sides})')
    availability = report.availability
    lines.append(f"Availability: {len(availability.groups)} groups, "
                 f"{'strongly orthogonal' if availability.strongly_orthogonal else 'not strongly orthogonal'}, "
                 f"{'passed' if availability.passed else 'FAILED'}")
    lines.append(render_distance(report.distance))
    return '\n'.join(lines)


def render_distance(distance) -> str:
    if distance.exact:
        return f'Distance: d = {distance.lower} ({distance.method}, {distance.evaluations} codewords)'
    return (f'Distance: {distance.lower} <= d <= {distance.upper} '
            f'({distance.method}, {distance.evaluations} codewords)')


@click.group()
@click.option('--verbose', '-v', help='Verbose output.', is_flag=True)
@click.option('--config', '-c', help='Path to the config file.', default=None)
@click.pass_context
def run(ctx, verbose, config):
    """
    Cyclic locally repairable codes with availability.
    """
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING,
                        format='%(asctime)s %(name)s %(levelname)s: %(message)s')
    if config is None:
        config = DEFAULT_CONFIG
    ctx.obj = load_config(config, CONFIG_KEYS)


@run.command()
@code_options
@click.option('--format', '-f', 'outputformat', type=click.Choice(['text', 'json']), default=None,
              help='Output format. If not specified, the config output_format.')
@click.option('--out', '-o', 'outputfile', default=None, help='Also write the output to this file.')
@click.pass_obj
@usage_errors
def construct(config, n_list, rho, b, shift, dg, q, outputformat, outputfile):
    """
    Builds a code and reports its bounds, availability and bracketed distance.
    """
    params = make_params(n_list, rho, b, shift, dg, q)
    analyzer = CyclicLrcAnalyzer(params, trials=config['bracket_trials'], seed=config['seed'],
                                 local_budget=config['local_exact_budget'],
                                 max_rank_distance=config['rank_test_max_distance'])
    outputformat = outputformat or config['output_format']
    if outputformat == 'json':
        emit('json', analyzer.get_dictionary(), outputfile)
    else:
        emit('text', render_report(analyzer), outputfile)


@run.command()
@click.option('--format', '-f', 'outputformat', type=click.Choice(['text', 'csv', 'json']),
              default=None, help='Output format. If not specified, the config output_format.')
@click.option('--row', '-r', 'rows', type=int, multiple=True, help='Row number, 1-based.')
@click.option('--check-optimal', is_flag=True,
              help='Also check that each printed D_g maximises the HT bound.')
@click.option('--cap', default=None, type=int, help='Search cap for --check-optimal.')
@click.option('--out', '-o', 'outputfile', default=None, help='Also write the output to this file.')
@click.pass_context
@usage_errors
def table1(ctx, outputformat, rows, check_optimal, cap, outputfile):
    """
    Evaluates the reference parameter table and checks it against the printed values.
    """
    config = ctx.obj
    results = table1_rows(list(rows) if rows else None)
    frame = pd.DataFrame([{
        'n': row.n, 'n1': row.n1, 'n2': row.n2, 'dg': ' '.join(str(e) for e in row.dg),
        'ht': row.ht, 'k': row.k, 'bound': row.bound,
    } for row in results], columns=TABLE1_COLUMNS)
    if check_optimal:
        cap = config['search_cap'] if cap is None else cap
        frame['dg_optimal'] = [printed_dg_is_optimal(row.row, cap=cap) for row in results]

    outputformat = outputformat or config['output_format']
    if outputformat == 'json':
        emit('json', versioned({'rows': [row.model_dump(mode='json') for row in results]}), outputfile)
    elif outputformat == 'csv':
        emit('csv', frame, outputfile)
    else:
        frame.insert(0, 'row', [row.row for row in results])
        frame['q'] = [row.q for row in results]
        frame['attains'] = [row.attains_bound for row in results]
        emit('text', frame.to_string(index=False), outputfile)

    mismatches = [row for row in results if not row.matches]
    for row in mismatches:
        click.echo(f'row {row.row}: computed (ht, k, bound) = ({row.ht}, {row.k}, {row.bound}), '
                   f'printed ({row.printed_ht}, {row.printed_k}, {row.printed_bound})', err=True)
    if mismatches:
        ctx.exit(1)


@run.command(name='search-dg')
@code_options
@click.option('--size', '-m', required=True, type=int, help='Number of exponents in D_g.')
@click.option('--allow-overlap', is_flag=True, help='Also search the local defining sets.')
@click.option('--cap', default=None, type=int, help='Maximum number of candidate sets.')
@click.option('--format', '-f', 'outputformat', type=click.Choice(['text', 'json']), default=None)
@click.option('--out', '-o', 'outputfile', default=None, help='Also write the output to this file.')
@click.pass_obj
@usage_errors
def search_dg(config, n_list, rho, b, shift, dg, q, size, allow_overlap, cap, outputformat,
              outputfile):
    """
    Finds the D_g of the given size maximising the Hartmann-Tzeng bound.
    """
    params = make_params(n_list, rho, b, shift, dg, q)
    result = optimize_dg(params.without_dg(), size, allow_overlap=allow_overlap,
                         cap=config['search_cap'] if cap is None else cap)
    outputformat = outputformat or config['output_format']
    if outputformat == 'json':
        emit('json', versioned(result.model_dump(mode='json')), outputfile)
    else:
        emit('text', f'D_g = {braces(result.dg)}: HT {result.ht}, k = {result.k} '
                     f'({result.examined} candidates)', outputfile)


@run.command()
@code_options
@click.option('--budget', default=None, type=int, help='Maximum q^k for exact enumeration.')
@click.option('--trials', default=None, type=int, help='Random messages when bracketing.')
@click.option('--seed', default=None, type=int, help='Seed for the random messages.')
@click.option('--format', '-f', 'outputformat', type=click.Choice(['text', 'json']), default=None)
@click.option('--out', '-o', 'outputfile', default=None, help='Also write the output to this file.')
@click.pass_obj
@usage_errors
def distance(config, n_list, rho, b, shift, dg, q, budget, trials, seed, outputformat, outputfile):
    """
    Computes the minimum distance exactly, or brackets it when q^k exceeds the budget.
    """
    params = make_params(n_list, rho, b, shift, dg, q)
    result = min_distance_exact(build_code(params),
                                budget=config['distance_budget'] if budget is None else budget,
                                trials=config['bracket_trials'] if trials is None else trials,
                                seed=config['seed'] if seed is None else seed)
    outputformat = outputformat or config['output_format']
    if outputformat == 'json':
        emit('json', versioned(result.model_dump(mode='json')), outputfile)
    else:
        emit('text', render_distance(result), outputfile)


@run.command()
@code_options
@click.option('--format', '-f', 'outputformat', type=click.Choice(['text', 'json']), default=None)
@click.option('--out', '-o', 'outputfile', default=None, help='Also write the output to this file.')
@click.pass_context
@usage_errors
def verify(ctx, n_list, rho, b, shift, dg, q, outputformat, outputfile):
    """
    Verifies the local distance of every repair group and the strong orthogonality.
    """
    config = ctx.obj
    params = make_params(n_list, rho, b, shift, dg, q)
    report = verify_availability(build_code(params), budget=config['local_exact_budget'],
                                 max_rank_distance=config['rank_test_max_distance'])
    outputformat = outputformat or config['output_format']
    if outputformat == 'json':
        emit('json', versioned(report.model_dump(mode='json')), outputfile)
    else:
        frame = pd.DataFrame([group.model_dump() for group in report.groups])
        frame['positions'] = frame['positions'].map(braces)
        emit('text', '\n'.join([
            frame.to_string(index=False),
            f"strongly orthogonal: {report.strongly_orthogonal}",
            f"{'passed' if report.passed else 'FAILED'}",
        ]), outputfile)
    if not report.passed:
        ctx.exit(1)


@run.command(name='repair-demo')
@code_options
@click.option('--erase', '-e', required=True, help='Positions to erase, e.g. 0,4.')
@click.option('--seed', default=None, type=int, help='Seed for the random message.')
@click.option('--format', '-f', 'outputformat', type=click.Choice(['text', 'json']), default=None)
@click.option('--out', '-o', 'outputfile', default=None, help='Also write the output to this file.')
@click.pass_context
@usage_errors
def repair_demo(ctx, n_list, rho, b, shift, dg, q, erase, seed, outputformat, outputfile):
    """
    Encodes a random message, erases positions and repairs them through every partition.
    """
    config = ctx.obj
    params = make_params(n_list, rho, b, shift, dg, q)
    code = build_code(params)
    erased = sorted(set(parse_list(erase, 'erase')))
    if any(not 0 <= x < code.n for x in erased):
        raise UsageFailure(f'erased positions must lie in [0, {code.n - 1}], got {erased}')

    rng = np.random.default_rng(config['seed'] if seed is None else seed)
    codeword = encode(code, rng.integers(0, code.q, size=code.k))
    word = [None if x in erased else int(symbol) for x, symbol in enumerate(codeword)]
    repaired = repair_through_each(code, word)
    groups = erasure_groups(code, erased)
    agree = bool(repaired) and all(np.array_equal(result, codeword) for result in repaired.values())

    outputformat = outputformat or config['output_format']
    if outputformat == 'json':
        emit('json', versioned({
            'codeword': [int(symbol) for symbol in codeword],
            'erased': erased,
            'repaired': {str(i): [int(symbol) for symbol in result] for i, result in repaired.items()},
            'groups': {str(i): [list(group) for group in groups[i - 1]] for i in repaired},
            'agree': agree,
        }), outputfile)
    elif not repaired:
        emit('text', f'no partition can repair the erasures {braces(erased)}', outputfile)
    else:
        via = [' + '.join(braces(group) for group in groups[i - 1]) for i in sorted(repaired)]
        joined = via[0] if len(via) == 1 else ', '.join(via[:-1]) + ' and ' + via[-1]
        emit('text', f"repaired via groups {joined}; results {'agree' if agree else 'DISAGREE'}",
             outputfile)
    if not agree:
        ctx.exit(1)


if __name__ == "__main__":

    run()  # pylint: disable=E1120
