#-----------------------------------------------------------------------
# cli.py
#-----------------------------------------------------------------------

"""
The invar command: apply transforms to sequences, check invariance, and
run the logarithm, intertwining, kernel and Problem 1 / Problem 2
pipelines.

    invar transform --name hankel --seq "1,1,2,5,14" --terms 3
    invar invariance --target binomial:mu=1 --candidate hankel --terms 4
    invar problem1 --transform psum --terms 4 --format json

Exit status: 0 on success or an invariant verdict, 1 on a not-invariant
or inconclusive verdict, 2 on bad usage or bad input.
"""

import json
import re
from fractions import Fraction

import attr
import click

from invar import errors, registry, schemas
from invar import log as invar_log
from invar.config import FORMATS, MODES, RunConfig, load_defaults
from invar.invariant_kernel import intertwining_solve, kernel_presentation
from invar.poly_core import print_poly
from invar.transforms import Sequence, apply_transform, \
    check_invariance_numeric, check_invariance_symbolic, solve_problem1, \
    solve_problem2
from stdlib import stdarray
from stdlib.instream import InStream

log = invar_log.get_logger(__name__)

#-----------------------------------------------------------------------
# Sequence ingestion

_SEPARATORS = re.compile(r'[,\s]+')


def _rational(token, line=None):
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise errors.SequenceFormatError('malformed term %r' % token, line)


def parse_bfile(stream):
    """
    Read an OEIS b-file from the InStream stream: '#' comment lines and
    blank lines, then one 'index value' pair per line with consecutive
    indices.
    """
    terms = []
    previous = None
    for number, line in stream.numbered_lines():
        text = line.strip()
        if not text or text.startswith('#'):
            continue
        parts = text.split()
        if len(parts) != 2:
            raise errors.SequenceFormatError('malformed entry %r' % text,
                                             number)
        try:
            index = int(parts[0])
        except ValueError:
            raise errors.SequenceFormatError('malformed entry %r' % text,
                                             number)
        if previous is not None and index != previous + 1:
            raise errors.SequenceFormatError('non-contiguous index', number)
        terms.append(_rational(parts[1], number))
        previous = index
    if not terms:
        raise errors.SequenceFormatError('empty input')
    return Sequence(terms)


def ingest_sequence(source, kind='inline'):
    """
    Return the Sequence in source: comma or whitespace separated
    rationals when kind is 'inline', the name of a b-file ('-' for
    standard input) when kind is 'bfile'.
    """
    if kind == 'inline':
        tokens = [t for t in _SEPARATORS.split(source.strip()) if t]
        if not tokens:
            raise errors.SequenceFormatError('empty input')
        return Sequence([_rational(t) for t in tokens])
    if kind == 'bfile':
        try:
            stream = InStream(source)
        except IOError as e:
            raise errors.SequenceFormatError(str(e))
        with stream:
            return parse_bfile(stream)
    raise errors.ConfigError('unknown sequence kind %r' % kind)

#-----------------------------------------------------------------------
# Reports

@attr.s(frozen=True)
class TransformReport:
    transform = attr.ib()
    start = attr.ib()
    values = attr.ib()

    def to_json(self):
        return {'transform': self.transform, 'start': self.start,
                'terms': [str(x) for x in self.values]}


@attr.s(frozen=True)
class DerivationReport:
    transform = attr.ib()
    derivation = attr.ib()
    bound = attr.ib()
    psi = attr.ib(default=None)

    def to_json(self):
        obj = {'transform': self.transform,
               'derivation': self.derivation.to_json(self.bound)}
        if self.psi is not None:
            obj['psi'] = self.psi.to_json()
        return obj


@attr.s(frozen=True)
class Outcome:
    status = attr.ib()
    kind = attr.ib()
    report = attr.ib()


def _image_lines(images, indent=''):
    return ['%s%s -> %s' % (indent, name, poly)
            for name, poly in images.items()]


def _text_invariance(r):
    label = {'invariant': 'INVARIANT', 'not-invariant': 'NOT INVARIANT',
             'inconclusive': 'INCONCLUSIVE'}[r.verdict]
    scope = '%s, n ≤ %d' % (r.mode, r.terms)
    if r.mode == 'numeric':
        scope += ', %d samples' % r.samples
    lines = ['%s (%s)' % (label, scope)]
    for w in r.witnesses:
        if r.mode == 'symbolic':
            lines.append('  n = %d: residual %s' % (w[0], print_poly(w[1])))
        else:
            lines.append('  sequence %s: differs at n = %d'
                         % (stdarray.format_1d(w[0]), w[1]))
    return lines


def _text_problem2(r):
    if not r.pairs:
        return ['only the zero derivation found']
    lines = ['%d derivation(s) on x0..x%d' % (len(r.pairs), r.bound)]
    for d, phi in r.pairs:
        lines.append('%s:' % d.name)
        lines += _image_lines(d.to_json()['images'], '  ')
        lines.append('exp(%s):' % d.name)
        lines += _image_lines(phi.to_json(r.bound)['images'], '  ')
    return lines


def _text_lines(kind, r):
    if kind == 'transform':
        return [str(stdarray.format_1d(r.values))]
    if kind == 'invariance':
        return _text_invariance(r)
    if kind in ('log', 'intertwine'):
        lines = _image_lines(r.derivation.to_json(r.bound)['images'])
        if r.psi is not None:
            lines += ['', 'psi:', str(r.psi)]
        return lines
    if kind == 'kernel':
        lines = ['%s = %s' % (name, print_poly(g)) for name, g in r.generators]
        return lines + ['localized at %s' % r.localized]
    if kind == 'problem1':
        lines = ['D:'] + _image_lines(
            r.derivation.to_json(r.psi.bound)['images'], '  ')
        lines += ['psi:', str(r.psi)]
        for f in r.families:
            lines.append('%s:' % f.name)
            for t, p in enumerate(f.polys(r.terms + 1)):
                lines.append('  n = %d: %s' % (f.start + t, print_poly(p)))
        return lines
    if kind == 'problem2':
        return _text_problem2(r)
    raise errors.InvarError('unknown report kind %r' % kind)


def emit_report(kind, report, output_format='text'):
    """
    Return report as text, or as JSON checked against its schema.
    """
    if output_format == 'json':
        obj = schemas.validate(kind, report.to_json())
        return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)
    return '\n'.join(_text_lines(kind, report))

#-----------------------------------------------------------------------

def _inputs(config, arity):
    if config.file is not None:
        first = ingest_sequence(config.file, 'bfile')
    else:
        first = ingest_sequence(config.seq)
    inputs = [first]
    if arity == 2:
        if config.seq2 is None:
            raise errors.ArityError('%s takes two sequences; give --seq2'
                                    % config.name)
        inputs.append(ingest_sequence(config.seq2))
    return inputs


def run(config):
    """
    Carry out the command described by the RunConfig config and return
    an Outcome (exit status, report kind, report).
    """
    config.validate()
    terms = config.resolved_terms()
    cmd = config.command
    log.info('running', extra={'command': cmd, 'terms': terms})

    if cmd == 'transform':
        family = registry.make_family(config.name)
        values = apply_transform(family, _inputs(config, family.arity), terms)
        return Outcome(0, cmd, TransformReport(family.name, family.start,
                                               values))

    if cmd == 'invariance':
        candidate = registry.make_family(config.candidate)
        if config.mode == 'symbolic':
            target = registry.make_family(config.target)
            bound = candidate.prefix_need(candidate.start + terms)
            report = check_invariance_symbolic(target.derivation(bound),
                                               candidate, terms)
            report = attr.evolve(report, target=target.name)
        else:
            defaults = config.defaults
            targets = registry.expand_targets(config.target,
                                              defaults.mu_values)
            report = check_invariance_numeric(
                targets, candidate, config.resolved_samples(), terms,
                config.resolved_seed(), defaults.entry_range)
        return Outcome(0 if report.invariant else 1, cmd, report)

    if cmd == 'log':
        d = registry.make_derivation(config.name, terms)
        return Outcome(0, cmd, DerivationReport(config.name, d, terms))

    if cmd == 'intertwine':
        d = registry.make_derivation(config.name, terms)
        psi = intertwining_solve(d, terms)
        return Outcome(0, cmd, DerivationReport(config.name, d, terms, psi))

    if cmd == 'kernel':
        d = registry.make_derivation(config.name, terms)
        return Outcome(0, cmd, kernel_presentation(d, terms))

    if cmd == 'problem1':
        family = registry.make_family(config.name)
        return Outcome(0, cmd, solve_problem1(family, terms))

    family = registry.make_family(config.name)
    return Outcome(0, cmd, solve_problem2(family, terms,
                                          config.ansatz_bound,
                                          config.defaults.nilpotency_cap))

#-----------------------------------------------------------------------
# Command line

def _execute(ctx, **fields):
    config = RunConfig(defaults=ctx.obj['defaults'], **fields)
    try:
        outcome = run(config)
        text = emit_report(outcome.kind, outcome.report,
                           config.output_format)
    except errors.InvarError as e:
        click.echo('error: %s' % e, err=True)
        ctx.exit(2)
    click.echo(text)
    ctx.exit(outcome.status)


def _name_option(f):
    return click.option('--name', '--transform', 'name',
                        help='Transform name, e.g. psum or binomial:mu=1/2.')(f)


def _terms_option(f):
    return click.option('--terms', type=int, default=None,
                        help='Number of terms (or largest index) to '
                             'compute.')(f)


def _format_option(f):
    return click.option('--format', 'output_format',
                        type=click.Choice(FORMATS), default='text',
                        show_default=True)(f)


@click.group()
@click.option('--log-level', envvar='INVAR_LOG_LEVEL', default='WARNING',
              show_default=True,
              type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                                case_sensitive=False))
@click.option('--log-json/--no-log-json', default=False,
              help='Write log records as JSON objects.')
@click.option('--config', 'config_path', type=click.Path(dir_okay=False),
              default=None, help='YAML file of run defaults.')
@click.pass_context
def cli(ctx, log_level, log_json, config_path):
    """Invariant polynomial transformations of sequences."""
    invar_log.configure(log_level, json_output=log_json)
    try:
        defaults = load_defaults(config_path)
    except errors.InvarError as e:
        click.echo('error: %s' % e, err=True)
        ctx.exit(2)
    ctx.obj = {'defaults': defaults}


@cli.command()
@_name_option
@click.option('--seq', default=None, help='Inline terms, e.g. "1,1,2,5".')
@click.option('--seq2', default=None, help='Second sequence (inline).')
@click.option('--file', default=None, help="b-file path ('-' for stdin).")
@_terms_option
@_format_option
@click.pass_context
def transform(ctx, **fields):
    """Apply a transform to a sequence."""
    _execute(ctx, command='transform', **fields)


@cli.command()
@click.option('--target', required=True, help='The transformation F.')
@click.option('--candidate', required=True, help='The family G.')
@click.option('--mode', type=click.Choice(MODES), default='symbolic',
              show_default=True)
@_terms_option
@click.option('--samples', type=int, default=None)
@click.option('--seed', type=int, envvar='INVAR_SEED', default=None)
@_format_option
@click.pass_context
def invariance(ctx, **fields):
    """Check whether the candidate family is target-invariant."""
    _execute(ctx, command='invariance', **fields)


@cli.command(name='log')
@_name_option
@_terms_option
@_format_option
@click.pass_context
def log_command(ctx, **fields):
    """Print the derivation D with exp(D) = the transform."""
    _execute(ctx, command='log', **fields)


@cli.command()
@_name_option
@_terms_option
@_format_option
@click.pass_context
def intertwine(ctx, **fields):
    """Print the intertwining change of basis of a derivation."""
    _execute(ctx, command='intertwine', **fields)


@cli.command()
@_name_option
@_terms_option
@_format_option
@click.pass_context
def kernel(ctx, **fields):
    """Print kernel generators of a derivation."""
    _execute(ctx, command='kernel', **fields)


@cli.command()
@_name_option
@_terms_option
@_format_option
@click.pass_context
def problem1(ctx, **fields):
    """Find families invariant under a triangular transform."""
    _execute(ctx, command='problem1', **fields)


@cli.command()
@_name_option
@_terms_option
@click.option('--ansatz-bound', type=int, default=None,
              help='Largest variable index of the derivation ansatz.')
@_format_option
@click.pass_context
def problem2(ctx, **fields):
    """Find derivations whose exponentials leave a family invariant."""
    _execute(ctx, command='problem2', **fields)


def main():
    cli(prog_name='invar')


if __name__ == '__main__':
    main()
