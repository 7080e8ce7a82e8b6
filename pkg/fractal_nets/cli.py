#!/usr/bin/env python3
"""fractal-nets command line.

    fractal-nets generate --model rbfm -m 2 -Y 1 -t 3 --seed 7 -o g.edges
    fractal-nets metrics -i g.edges -o metrics.csv
    fractal-nets boxdim -i g.edges -o curve.csv --report report.csv
    fractal-nets sweep --model rbfm -t 3 --axis m=1,2,3 --axis Y=0,0.5,1 -o sweep.csv
    fractal-nets transition --dims 16x16,32x32 --p-values 0,0.1,1 -o transition.csv

Every subcommand accepts --config PATH, a flat YAML mapping whose keys are
the long flag names; flags given on the command line take precedence.
Exit status: 0 on success, 1 on usage or parameter errors, 2 on runtime errors.
"""
import argparse
import logging
import re
import sys

import yaml

from fractal_nets.analysis.boxcover import DEFAULT_ORDERINGS, DEFAULT_R2_CUTOFF, classify_fractality, nb_curve
from fractal_nets.analysis.metrics import metric_suite
from fractal_nets.experiments.emitters import emit_csv, emit_svg_contour, emit_svg_loglog, emit_svg_transition, \
    write_frame
from fractal_nets.experiments.replications import DEFAULT_REPLICATIONS, SweepSpec, sweep_grid
from fractal_nets.experiments.transition import transition_study
from fractal_nets.models.model_spec import MODEL_KINDS, ModelSpec
from fractal_nets.utils.edgelist import read_edge_list, write_edge_list
from fractal_nets.utils.exceptions import FractalNetsError, InvalidParameterError, UsageError
from fractal_nets.utils.graph import distance_matrix
from fractal_nets.utils.utils import format_dims, parse_dims
from fractal_nets.version import VERSION

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RUNTIME = 2

REQUIRED = {
    'generate': ('model', 'output'),
    'metrics': ('input', 'output'),
    'boxdim': ('input', 'output'),
    'sweep': ('model', 'axis', 'output'),
    'transition': ('dims', 'p_values', 'output'),
}

# never echoed into outputs, they do not change results
NOT_ECHOED = ('command', 'config', 'verbose', 'jobs')

AXIS_TYPES = {'m': int, 't': int, 'p': float, 'Y': float, 'a': float, 'dims': parse_dims}


class ArgumentParser(argparse.ArgumentParser):
    """Raises UsageError instead of exiting."""

    def error(self, message):
        raise UsageError('%s%s: error: %s' % (self.format_usage(), self.prog, message))


def _add_model_arguments(parser):
    parser.add_argument('--model', choices=MODEL_KINDS, help='model kind')
    parser.add_argument('-m', type=int, help='offspring factor (shm, rbfm)')
    parser.add_argument('-Y', type=float, help='repulsion target (rbfm)')
    parser.add_argument('-p', type=float, help='rewiring probability (shm, lswtm)')
    parser.add_argument('-t', type=int, help='iterations (shm, rbfm)')
    parser.add_argument('--dims', help='grid shape, e.g. 32x32 (lswtm)')
    parser.add_argument('-a', type=float, help='logistic steepness (lswtm)')


def build_parser():
    common = ArgumentParser(add_help=False)
    common.add_argument('--config', help='YAML file with default flag values')
    common.add_argument('-v', '--verbose', action='store_true', help='log progress')

    parser = ArgumentParser(prog='fractal-nets', description='Fractal network models and box-covering analysis.')
    parser.add_argument('--version', action='version', version='%(prog)s ' + VERSION)
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True

    generate = subparsers.add_parser('generate', parents=[common], help='generate a graph as an edge list')
    _add_model_arguments(generate)
    generate.add_argument('--seed', type=int, help='PRNG seed')
    generate.add_argument('-o', '--output', help='edge-list file')

    metrics = subparsers.add_parser('metrics', parents=[common], help='structural metrics of a graph')
    metrics.add_argument('-i', '--input', help='edge-list file')
    metrics.add_argument('-o', '--output', help='CSV file')

    boxdim = subparsers.add_parser('boxdim', parents=[common], help='box counting curve and fractality')
    boxdim.add_argument('-i', '--input', help='edge-list file')
    boxdim.add_argument('-o', '--output', help='curve CSV file')
    boxdim.add_argument('--report', help='fractality report CSV file')
    boxdim.add_argument('--svg', help='log-log plot SVG file')
    boxdim.add_argument('--n-orderings', type=int, default=DEFAULT_ORDERINGS, help='greedy orderings')
    boxdim.add_argument('--seed', type=int, default=0, help='seed of the shuffled orderings')
    boxdim.add_argument('--r2-cutoff', type=float, default=DEFAULT_R2_CUTOFF, help='classification threshold')
    boxdim.add_argument('--steps', action='store_true', help='fit one point per distinct box count')

    sweep = subparsers.add_parser('sweep', parents=[common], help='replications over a parameter grid')
    _add_model_arguments(sweep)
    sweep.add_argument('--axis', action='append', help='swept parameter, NAME=v1,v2,... (one or two)')
    sweep.add_argument('--n-reps', type=int, default=DEFAULT_REPLICATIONS, help='replications per cell')
    sweep.add_argument('--seed', type=int, default=0, help='master seed')
    sweep.add_argument('-o', '--output', help='CSV file')
    sweep.add_argument('--svg', help='heatmap SVG file (two axes)')
    sweep.add_argument('--metric', default='assortativity', help='metric shown in the heatmap')
    sweep.add_argument('--jobs', type=int, default=1, help='worker processes')

    transition = subparsers.add_parser('transition', parents=[common], help='fractal to small-world transition')
    transition.add_argument('--dims', help='grid shapes, e.g. 16x16,32x32')
    transition.add_argument('--p-values', help='rewiring probabilities, e.g. 0,0.1,1')
    transition.add_argument('-a', type=float, default=10.0, help='logistic steepness')
    transition.add_argument('--n-reps', type=int, default=10, help='replications per cell')
    transition.add_argument('--seed', type=int, default=0, help='master seed')
    transition.add_argument('--n-orderings', type=int, default=DEFAULT_ORDERINGS, help='greedy orderings')
    transition.add_argument('--r2-cutoff', type=float, default=DEFAULT_R2_CUTOFF, help='classification threshold')
    transition.add_argument('-o', '--output', help='CSV file')
    transition.add_argument('--svg', help='transition plot SVG file')
    transition.add_argument('--curves-svg', help='log-log plot of one curve per cell')
    transition.add_argument('--jobs', type=int, default=1, help='worker processes')

    return parser, subparsers.choices


KEY_VALUE_LINE = re.compile(r'^\s*([A-Za-z_][\w-]*)\s*=(.*)$')


def _key_value_config(text):
    """Flat key=value lines as a mapping, None when text is not in that form."""

    lines = [line for line in text.splitlines() if line.strip() and not line.lstrip().startswith('#')]
    matches = [KEY_VALUE_LINE.match(line) for line in lines]
    if not matches or not all(matches):
        return None
    config = {}
    for match in matches:
        value = match.group(2).strip()
        try:
            # same typing as a YAML scalar, so m=2 gives an int and dims=16x16 a string
            config[match.group(1)] = yaml.safe_load(value)
        except yaml.YAMLError:
            config[match.group(1)] = value
    return config


def load_config(path):
    """Read a config file, a YAML mapping or flat key=value lines."""

    try:
        with open(path, 'r') as stream:
            text = stream.read()
    except OSError as exc:
        raise UsageError("Cannot read config file %s: %s" % (path, exc.strerror or exc))
    config = _key_value_config(text)
    if config is None:
        try:
            config = yaml.safe_load(text)
        except yaml.YAMLError as exc:
            raise UsageError("Malformed config file %s: %s" % (path, exc))
    if config is None:
        return {}
    if not isinstance(config, dict):
        raise UsageError("Config file %s must hold a mapping of flag names to values." % path)
    return {str(key).replace('-', '_'): value for key, value in config.items()}


def parse_args(argv):
    """Parse argv, merging a --config file under the explicit flags."""

    parser, subparsers = build_parser()
    args = parser.parse_args(argv)
    subparser = subparsers[args.command]
    if args.config:
        config = load_config(args.config)
        known = set(vars(subparser.parse_args([]))) - {'config'}
        unknown = sorted(set(config) - known)
        if unknown:
            subparser.error("unknown config keys: %s" % ', '.join(unknown))
        if isinstance(config.get('axis'), str):
            config['axis'] = [config['axis']]
        subparser.set_defaults(**config)
        explicit_axis = getattr(args, 'axis', None)
        args = parser.parse_args(argv)
        if explicit_axis:
            # appended flags would otherwise extend the configured axes
            args.axis = explicit_axis
    missing = [name for name in REQUIRED[args.command] if getattr(args, name) is None]
    if missing:
        subparser.error("the following arguments are required: %s"
                        % ', '.join('--' + name.replace('_', '-') for name in missing))
    return args


def resolved_config(args):
    config = {'command': args.command}
    for key, value in sorted(vars(args).items()):
        if key in NOT_ECHOED or value is None:
            continue
        config[key] = ' '.join(value) if key == 'axis' and isinstance(value, list) else value
    config['version'] = VERSION
    return config


def _split(value):
    if isinstance(value, (list, tuple)):
        return [str(item).strip() for item in value]
    return [item.strip() for item in str(value).split(',') if item.strip()]


def parse_axis(text):
    """'NAME=v1,v2,...' to (name, values)."""

    name, sep, values = str(text).partition('=')
    name = name.strip()
    if not sep or name not in AXIS_TYPES:
        raise UsageError("Invalid axis '%s', expected NAME=v1,v2,... with NAME one of %s."
                         % (text, ', '.join(AXIS_TYPES)))
    convert = AXIS_TYPES[name]
    try:
        return name, [convert(value) for value in _split(values)]
    except ValueError:
        raise UsageError("Invalid value in axis '%s'." % text)


def parse_floats(value, name):
    try:
        return [float(item) for item in _split(value)]
    except ValueError:
        raise UsageError("--%s expects comma-separated numbers, got %r." % (name, value))


def model_spec(args):
    return ModelSpec.from_params(args.model, m=args.m, Y=args.Y, p=args.p, t=args.t, dims=args.dims, a=args.a,
                                 seed=getattr(args, 'seed', None))


def run_generate(args):
    spec = model_spec(args)
    g = spec.generate()
    header = {'generator': spec.model_id}
    header.update(spec.header())
    header['version'] = VERSION
    write_edge_list(g, args.output, header)


def run_metrics(args):
    g, _ = read_edge_list(args.input)
    write_frame(metric_suite(g).to_frame(), args.output, resolved_config(args))


def run_boxdim(args):
    g, header = read_edge_list(args.input)
    curve = nb_curve(g, seed=args.seed, n_orderings=args.n_orderings, distances=distance_matrix(g))
    config = resolved_config(args)
    write_frame(curve.to_frame(), args.output, config)
    if args.report:
        report = classify_fractality(curve, r2_cutoff=args.r2_cutoff, steps=args.steps)
        write_frame(report.to_frame(), args.report, config)
    if args.svg:
        label = header.get('model', args.input)
        emit_svg_loglog([curve], [label], args.svg, config)


def run_sweep(args):
    axes = [parse_axis(axis) for axis in args.axis]
    sweep = SweepSpec(model=model_spec(args), axes=axes, n_reps=args.n_reps, master_seed=args.seed)
    table = sweep_grid(sweep, jobs=args.jobs)
    table.metadata = {**resolved_config(args), **table.metadata}
    emit_csv(table, args.output)
    if args.svg:
        emit_svg_contour(table, args.metric, args.svg)


def run_transition(args):
    dims_list = [parse_dims(dims) for dims in _split(args.dims)]
    p_values = parse_floats(args.p_values, 'p-values')
    table = transition_study(dims_list, p_values, a=args.a, n_reps=args.n_reps, master_seed=args.seed,
                             n_orderings=args.n_orderings, r2_cutoff=args.r2_cutoff, jobs=args.jobs)
    table.metadata = {**resolved_config(args), **table.metadata}
    emit_csv(table, args.output)
    if args.svg:
        emit_svg_transition(table, args.svg)
    if args.curves_svg:
        emit_svg_loglog(list(table.curves.values()), list(table.curves), args.curves_svg, table.metadata)


COMMANDS = {
    'generate': run_generate,
    'metrics': run_metrics,
    'boxdim': run_boxdim,
    'sweep': run_sweep,
    'transition': run_transition,
}


def configure_logging(verbose):
    logging.basicConfig(stream=sys.stderr, format='%(levelname)s: %(name)s: %(message)s')
    logging.getLogger('fractal_nets').setLevel(logging.INFO if verbose else logging.WARNING)


def main(argv=None):
    """Run one subcommand and return the exit status."""

    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parse_args(argv)
        configure_logging(args.verbose)
        COMMANDS[args.command](args)
    except SystemExit as exc:
        # --help and --version
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    except UsageError as exc:
        sys.stderr.write('%s\n' % exc)
        return EXIT_USAGE
    except InvalidParameterError as exc:
        sys.stderr.write('fractal-nets: error: %s\n' % exc)
        return EXIT_USAGE
    except (FractalNetsError, OSError) as exc:
        sys.stderr.write('fractal-nets: runtime error: %s\n' % exc)
        return EXIT_RUNTIME
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
