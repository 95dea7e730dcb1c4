'''
Module for the contextualextension command: one subcommand per check or construction, JSON/DOT/text reports and
exit statuses 0 (success), 1 (violations found) and 2 (unusable input)
'''

import argparse
from dataclasses import dataclass, field
import logging
from pathlib import Path
import sys

import numpy as np

from contextualextension.Configuration import Configuration, THREADS_ENVIRONMENT_VARIABLE
from contextualextension.ContextualExtension import (
    build_limit_extension, check_limit_agreement, embed, evaluate_state, extend_state, extension_to_dict
)
from contextualextension.Errors import DomainError, InputError, SizeCapExceededError, StructuralError
from contextualextension.FiniteCategory import category_to_dot, check_category
from contextualextension.GroupFieldTheory import (
    PolyhedronSpace, TestFunction, TruncatedFock, ccr_defect, weyl_defect_sweep
)
from contextualextension.LocalNet import (
    LocalNet, check_covariance, check_isotony, check_lc_square, check_locality, check_translation_action
)
from contextualextension.MatrixStarAlgebra import MatrixStarAlgebra, context_category
from contextualextension.RealismInequality import MeasureProvider, QuantumProvider, search_signs
from contextualextension.Serialization import (
    algebra_spec_from_dict, category_from_dict, dump_json, family_from_dict, load_json, matrix_from_data,
    net_from_dict, ray_family_from_dict
)
from contextualextension.SpectralPresheaf import (
    build_spectral_presheaf, check_presheaf_functoriality, daseinisation_table, global_sections, has_parity_obstruction,
    ray_family_category
)
from contextualextension.ValidationReport import ValidationReport

__all__ = ['RunConfig', 'run', 'build_parser', 'main']

logger = logging.getLogger(__name__)

SUBCOMMANDS = ('cat-check', 'limit', 'state-extend', 'ks-check', 'daseinise', 'net-check', 'gft-ccr', 'gft-weyl', 'inequality', 'export-dot')
SCENARIOS_DIRECTORY = Path(__file__).resolve().parent.parent / 'scenarios'
# guarded CCR defects above this count as violations
CCR_THRESHOLD = 1e-10

@dataclass
class RunConfig:
    '''
    The parsed options of one run.

    Instance variables:
        subcommand: str -- one of SUBCOMMANDS
        arguments: dict -- the subcommand's own options
        tolerance: float -- numeric tolerance
        seed: int -- seed of every random choice
        output_format: str -- json, dot or text
        carrier_cap: int -- largest product spectrum
        apex_cap: int -- largest enumerated apex
        nmax_cap: int -- largest accepted Fock cutoff
        threads: int -- worker threads
        output: str -- output path, or None for standard output
    '''

    subcommand: str
    arguments: dict = field(default_factory = dict)
    tolerance: float = 1e-9
    seed: int = 0
    output_format: str = 'json'
    carrier_cap: int = 10 ** 6
    apex_cap: int = 4
    nmax_cap: int = 8
    threads: int = 1
    output: str = None

    def configuration(self):
        '''
        Provides the Configuration of this run

        Keyword arguments:
            none

        Return values:
            a Configuration carrying tolerance, seed, carrier_cap, apex_cap and threads

        Side effects:
            none

        Exceptions raised:
            InputError if nmax_cap is not positive or Configuration refuses a value

        Restrictions on when this method can be called:
            none
        '''

        if self.nmax_cap <= 0:
            raise InputError('nmax_cap must be positive')
        return Configuration(tolerance = self.tolerance, seed = self.seed, carrier_cap = self.carrier_cap, apex_cap = self.apex_cap, threads = self.threads)

def _resolve(path):
    '''
    Provides a path as given when it exists, else the file of that name among the bundled scenarios
    '''

    if path is None:
        raise InputError('a required input file was not given')
    candidate = Path(path)
    if not candidate.exists() and (SCENARIOS_DIRECTORY / candidate.name).exists():
        return SCENARIOS_DIRECTORY / candidate.name
    return candidate

def _algebra_and_seeds(arguments, configuration):
    dimension, seeds = algebra_spec_from_dict(load_json(_resolve(arguments.get('algebra'))))
    names = [name for name in (arguments.get('seeds') or ','.join(seeds)).split(',') if name]
    unknown = [name for name in names if name not in seeds]
    if unknown:
        raise InputError(f'seeds {unknown} are not in the algebra specification')
    ambient = MatrixStarAlgebra.full_matrix_algebra(dimension, configuration.tolerance)
    return ambient, seeds, {name: seeds[name] for name in names}

def _density_matrix(arguments, dimension):
    if not arguments.get('state'):
        return np.eye(dimension, dtype = complex) / dimension
    data = load_json(_resolve(arguments['state']))
    return matrix_from_data(data['matrix'] if isinstance(data, dict) else data)

def _run_cat_check(config, configuration):
    category = category_from_dict(load_json(_resolve(config.arguments.get('category'))))
    report = check_category(category)
    return report, {'objects': len(category.objects), 'morphisms': len(category.morphisms)}, category_to_dot(category)

def _run_limit(config, configuration):
    ambient, _, chosen = _algebra_and_seeds(config.arguments, configuration)
    cc = context_category(ambient, chosen, configuration)
    ext = build_limit_extension(cc, configuration)
    report = ValidationReport('limit').extend(cc.check()).extend(check_limit_agreement(ext, cc, configuration))
    result = {'carrier_size': ext.size, 'contexts': list(cc.labels), 'sizes': list(ext.carrier.sizes)}
    if config.arguments.get('points'):
        result['extension'] = extension_to_dict(ext)
    return report, result, category_to_dot(cc.to_fin_category())

def _run_state_extend(config, configuration):
    ambient, _, chosen = _algebra_and_seeds(config.arguments, configuration)
    cc = context_category(ambient, chosen, configuration)
    ext = build_limit_extension(cc, configuration)
    rho = _density_matrix(config.arguments, ambient.dim)
    mu = extend_state(rho, ext, configuration)
    report = ValidationReport('state extension')
    expectations = {}
    for label, generators in zip(cc.labels, cc.generators):
        for position, generator in enumerate(generators):
            value = evaluate_state(mu, embed(generator, label, ext))
            expected = complex(np.trace(rho @ generator))
            expectations[f'{label}[{position}]'] = [value.real, value.imag]
            if abs(value - expected) > 1e-8:
                report.add('ctxext.state_consistency', f'{label}[{position}]', f'extended state gives {value:.6g}, Tr(ρA) is {expected:.6g}')
    return report, {'extension': extension_to_dict(ext, mu), 'expectations': expectations}, None

def _run_ks_check(config, configuration):
    dimension, bases = ray_family_from_dict(load_json(_resolve(config.arguments.get('fixture'))))
    cc = ray_family_category(bases, configuration)
    presheaf = build_spectral_presheaf(cc, configuration)
    report = check_presheaf_functoriality(presheaf)
    sections = global_sections(presheaf, config.arguments.get('limit'), configuration)
    result = {
        'dimension': dimension,
        'bases': len(bases),
        'contexts': len(cc.contexts),
        'sections': len(sections),
        'parity_obstruction': has_parity_obstruction(bases),
        'examples': [section.as_dict() for section in sections[:3]]
    }
    return report, result, category_to_dot(cc.to_fin_category())

def _run_daseinise(config, configuration):
    ambient, seeds, chosen = _algebra_and_seeds(config.arguments, configuration)
    name = config.arguments.get('operator')
    if name not in seeds:
        raise InputError(f'operator {name!r} is not in the algebra specification')
    cc = context_category(ambient, chosen, configuration)
    table = daseinisation_table(seeds[name], cc, configuration)
    report = ValidationReport('daseinisation')
    for row in table.itertuples():
        if row.lower > row.upper + configuration.tolerance:
            report.add('presheaf.interval_order', f'({row.context}, {row.character})', 'lower end exceeds upper end')
    return report, {'operator': name, 'intervals': table.to_dict(orient = 'records')}, None

def _run_net_check(config, configuration):
    if config.arguments.get('net'):
        net = net_from_dict(load_json(_resolve(config.arguments['net'])), configuration)
    else:
        net = LocalNet.standard(int(config.arguments.get('chain') or 2), configuration)
    report = ValidationReport(f'net of {net.chain_length} sites')
    report.extend(check_isotony(net)).extend(check_locality(net)).extend(check_translation_action(net.chain_length, configuration))
    for sub in net.regions():
        for whole in net.regions():
            if whole.contains(sub):
                report.extend(check_lc_square(sub, whole, net))
    contexts = [net.site_context(site, 'z') for site in range(net.chain_length)]
    report.extend(check_covariance(net, 1, contexts))
    return report, {'chain_length': net.chain_length, 'regions': len(net.regions())}, None

def _polyhedron_space(arguments):
    return PolyhedronSpace(int(arguments.get('m') or 2), int(arguments.get('n') or 2))

def _check_cutoff(n_max, config):
    if n_max > config.nmax_cap:
        raise SizeCapExceededError('Fock cutoff', n_max, config.nmax_cap)

def _random_test_function(space, random_number_generator, scale = 1.0):
    values = random_number_generator.standard_normal(space.dimension) + 1j * random_number_generator.standard_normal(space.dimension)
    return TestFunction(scale * values, space)

def _run_gft_ccr(config, configuration):
    space = _polyhedron_space(config.arguments)
    n_max = int(config.arguments.get('nmax') or 3)
    _check_cutoff(n_max, config)
    fock = TruncatedFock(space, n_max, 1, configuration)
    random_number_generator = np.random.default_rng(configuration.seed)
    defects = []
    for _ in range(int(config.arguments.get('pairs') or 5)):
        f = _random_test_function(space, random_number_generator)
        g = _random_test_function(space, random_number_generator)
        defects.append(ccr_defect(f, g, fock))
    report = ValidationReport('canonical commutation relations')
    if max(defects) > CCR_THRESHOLD:
        report.add('gft.ccr', f'n_max {n_max}', f'guarded defect {max(defects):.3g} exceeds {CCR_THRESHOLD}')
    return report, {'fock_dimension': fock.dimension, 'max_defect': max(defects), 'n_max': n_max}, None

def _run_gft_weyl(config, configuration):
    space = _polyhedron_space(config.arguments)
    n_max = int(config.arguments.get('nmax') or 4)
    _check_cutoff(n_max, config)
    sector_cap = int(config.arguments.get('sector_cap') or 1)
    random_number_generator = np.random.default_rng(configuration.seed)
    scale = float(config.arguments.get('scale') or 0.3)
    f = _random_test_function(space, random_number_generator, scale)
    g = _random_test_function(space, random_number_generator, scale)
    cutoffs = list(range(sector_cap + 1, n_max + 1)) if config.arguments.get('sweep') else [n_max]
    table = weyl_defect_sweep(f, g, cutoffs, sector_cap, configuration)
    return ValidationReport('Weyl relations'), {'sector_cap': sector_cap, 'table': table.reset_index().to_dict(orient = 'records')}, None

def _run_inequality(config, configuration):
    family = family_from_dict(load_json(_resolve(config.arguments.get('family'))), configuration.tolerance)
    provider_name = config.arguments.get('provider') or 'measure'
    report = ValidationReport('realism inequality')
    if provider_name == 'measure':
        lengths = {observable.shape[0] for observable in family.observables() if observable.ndim == 1}
        if len(lengths) != 1:
            raise InputError('a measure provider needs carrier functions of one common length')
        points = lengths.pop()
        provider = MeasureProvider(np.full(points, 1.0 / points))
    else:
        dimensions = {observable.shape[0] for observable in family.observables() if observable.ndim == 2}
        if len(dimensions) != 1:
            raise InputError('a quantum provider needs matrices of one common dimension')
        provider = QuantumProvider(_density_matrix(config.arguments, dimensions.pop()))
    result = search_signs(family, provider, configuration)
    if provider_name == 'measure' and result.below_classical_bound:
        report.add('realism.classical_bound', 'minimum', f'measure-based minimum {result.lhs:.12g} lies below q = {result.q}')
    return report, dict(result.to_dict(), provider = provider_name), None

def _run_export_dot(config, configuration):
    category = category_from_dict(load_json(_resolve(config.arguments.get('category'))))
    return ValidationReport('export'), {'objects': len(category.objects)}, category_to_dot(category)

_HANDLERS = {
    'cat-check': _run_cat_check,
    'limit': _run_limit,
    'state-extend': _run_state_extend,
    'ks-check': _run_ks_check,
    'daseinise': _run_daseinise,
    'net-check': _run_net_check,
    'gft-ccr': _run_gft_ccr,
    'gft-weyl': _run_gft_weyl,
    'inequality': _run_inequality,
    'export-dot': _run_export_dot
}

def _render(config, document, dot):
    if config.output_format == 'dot':
        if dot is None:
            raise InputError(f'{config.subcommand} has no DOT export')
        return dot
    if config.output_format == 'text':
        lines = [f'{config.subcommand}: {"valid" if document.get("valid", False) else "invalid"}']
        lines += [f'{key}: {value}' for key, value in sorted(document.get('result', {}).items()) if not isinstance(value, (dict, list))]
        lines += [f'violation {v["invariant"]} at {v["location"]}: {v["message"]}' for v in document.get('violations', [])]
        if 'error' in document:
            lines.append(f'error: {document["error"]}')
        return '\n'.join(lines) + '\n'
    return dump_json(document) + '\n'

def run(config):
    '''
    Runs one subcommand

    Keyword arguments:
        config: RunConfig -- the parsed options

    Return values:
        the pair (exit status, report text): 0 when every check passed, 1 when a check found violations, 2 when the input was unusable

    Side effects:
        Logs the seed in use

    Exceptions raised:
        none for unusable input, which yields exit status 2 and a report naming the error
    '''

    logger.info('running %s with seed %d', config.subcommand, config.seed)
    try:
        if config.subcommand not in _HANDLERS:
            raise InputError(f'unknown subcommand {config.subcommand!r}')
        report, result, dot = _HANDLERS[config.subcommand](config, config.configuration())
        document = dict(report.to_dict(), command = config.subcommand, seed = config.seed, result = result)
        status = 0 if report.is_valid else 1
        return status, _render(config, document, dot)
    except (InputError, DomainError, StructuralError, SizeCapExceededError) as error:
        logger.warning('%s refused: %s', config.subcommand, error)
        document = {'command': config.subcommand, 'seed': config.seed, 'valid': False, 'error': str(error)}
        text = dump_json(document) + '\n' if config.output_format != 'text' else f'error: {error}\n'
        return 2, text

def build_parser():
    '''
    Builds the argument parser of the contextualextension command: global options, then one subparser per subcommand

    Keyword arguments:
        none

    Return values:
        an argparse.ArgumentParser

    Side effects:
        none

    Exceptions raised:
        none

    Restrictions on when this function can be called:
        none
    '''

    parser = argparse.ArgumentParser(prog = 'contextualextension', description = 'Contextual extensions of operator algebras at finite scale')
    parser.add_argument('--tolerance', type = float, default = 1e-9)
    parser.add_argument('--seed', type = int, default = 0)
    parser.add_argument('--format', dest = 'output_format', choices = ['json', 'dot', 'text'], default = 'json')
    parser.add_argument('--carrier-cap', type = int, default = 10 ** 6)
    parser.add_argument('--apex-cap', type = int, default = 4)
    parser.add_argument('--nmax-cap', type = int, default = 8)
    parser.add_argument('--threads', type = int, default = None, help = f'worker threads; defaults to ${THREADS_ENVIRONMENT_VARIABLE} or 1')
    parser.add_argument('--output', default = None, help = 'write the report to this file')
    parser.add_argument('--debug', action = 'store_true')
    subparsers = parser.add_subparsers(dest = 'subcommand', required = True)
    for name in ('cat-check', 'export-dot'):
        subparsers.add_parser(name).add_argument('--category', required = True)
    for name in ('limit', 'state-extend', 'daseinise'):
        subparser = subparsers.add_parser(name)
        subparser.add_argument('--algebra', required = True)
        subparser.add_argument('--seeds', default = None, help = 'comma-separated seed names; all seeds by default')
        if name == 'limit':
            subparser.add_argument('--points', action = 'store_true')
        if name == 'state-extend':
            subparser.add_argument('--state', default = None)
        if name == 'daseinise':
            subparser.add_argument('--operator', required = True)
    ks = subparsers.add_parser('ks-check')
    ks.add_argument('--fixture', required = True)
    ks.add_argument('--limit', type = int, default = None)
    net = subparsers.add_parser('net-check')
    net.add_argument('--chain', type = int, default = 2)
    net.add_argument('--net', default = None)
    for name in ('gft-ccr', 'gft-weyl'):
        subparser = subparsers.add_parser(name)
        subparser.add_argument('--m', type = int, default = 2)
        subparser.add_argument('--n', type = int, default = 2)
        subparser.add_argument('--nmax', type = int, default = 3 if name == 'gft-ccr' else 4)
        if name == 'gft-ccr':
            subparser.add_argument('--pairs', type = int, default = 5)
        else:
            subparser.add_argument('--sector-cap', type = int, default = 1)
            subparser.add_argument('--scale', type = float, default = 0.3)
            subparser.add_argument('--sweep', action = 'store_true')
    inequality = subparsers.add_parser('inequality')
    inequality.add_argument('--family', required = True)
    inequality.add_argument('--provider', choices = ['measure', 'quantum'], default = 'measure')
    inequality.add_argument('--state', default = None)
    return parser

_GLOBAL_OPTIONS = ('tolerance', 'seed', 'output_format', 'carrier_cap', 'apex_cap', 'nmax_cap', 'threads', 'output', 'debug', 'subcommand')

def main(argv = None):
    '''
    Parses the command line, runs the subcommand and writes its report

    Return values:
        the exit status
    '''

    parser = build_parser()
    try:
        namespace = parser.parse_args(argv)
    except SystemExit as exit_request:
        return 2 if exit_request.code else 0
    logging.basicConfig(format = '%(levelname)9s:%(filename)s:%(message)s', level = logging.DEBUG if namespace.debug else logging.WARNING)
    threads = namespace.threads if namespace.threads is not None else Configuration.from_environment().threads
    config = RunConfig(
        subcommand = namespace.subcommand,
        arguments = {key: value for key, value in vars(namespace).items() if key not in _GLOBAL_OPTIONS},
        tolerance = namespace.tolerance,
        seed = namespace.seed,
        output_format = namespace.output_format,
        carrier_cap = namespace.carrier_cap,
        apex_cap = namespace.apex_cap,
        nmax_cap = namespace.nmax_cap,
        threads = threads,
        output = namespace.output
    )
    try:
        config.configuration()
    except InputError as error:
        sys.stderr.write(f'error: {error}\n')
        return 2
    status, text = run(config)
    if config.output:
        Path(config.output).write_text(text, encoding = 'utf-8')
    else:
        sys.stdout.write(text)
    return status
