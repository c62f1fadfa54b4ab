#-----------------------------------------------------------------------
# config.py
#-----------------------------------------------------------------------

"""
Run defaults and the validated description of one command-line run.

Defaults come from the built-in values, then an optional YAML file, then
the INVAR_SEED environment variable. Command-line flags override all of
them.
"""

import os
from fractions import Fraction

import attr
import yaml

from invar import errors

COMMANDS = ('transform', 'invariance', 'log', 'intertwine', 'problem1',
            'problem2', 'kernel')
MODES = ('symbolic', 'numeric')
FORMATS = ('text', 'json')

SEED_ENV = 'INVAR_SEED'

#-----------------------------------------------------------------------

def _fractions(values):
    try:
        return tuple(Fraction(str(v)) for v in values)
    except (TypeError, ValueError, ZeroDivisionError):
        raise errors.ConfigError('not a list of rationals: %r' % (values,))


def _nilpotency_cap(value):
    value = int(value)
    if value < 1:
        raise errors.ConfigError('nilpotency cap must be >= 1, got %d'
                                 % value)
    return value


def _entry_range(value):
    lo, hi = (int(v) for v in value)
    if lo > hi:
        raise errors.ConfigError('empty entry range [%d, %d]' % (lo, hi))
    return (lo, hi)


@attr.s(frozen=True)
class Defaults:
    symbolic_terms = attr.ib(default=4, converter=int)
    numeric_terms = attr.ib(default=6, converter=int)
    samples = attr.ib(default=20, converter=int)
    seed = attr.ib(default=20240101, converter=int)
    entry_range = attr.ib(default=(-9, 9), converter=_entry_range)
    mu_values = attr.ib(default=(1, -1, 2, Fraction(1, 2)),
                        converter=_fractions)
    nilpotency_cap = attr.ib(default=128, converter=_nilpotency_cap)


def load_defaults(path=None, environ=None):
    """
    Return the Defaults after overlaying the YAML mapping in file path
    (if any) and the seed in environ (os.environ by default).
    """
    environ = os.environ if environ is None else environ
    values = {}
    if path is not None:
        try:
            with open(path, 'r', encoding='utf-8') as f:
                loaded = yaml.safe_load(f)
        except OSError as e:
            raise errors.ConfigError('cannot read %s: %s' % (path, e))
        except yaml.YAMLError as e:
            raise errors.ConfigError('bad YAML in %s: %s' % (path, e))
        if loaded is None:
            loaded = {}
        if not isinstance(loaded, dict):
            raise errors.ConfigError('%s must hold a mapping' % path)
        known = {a.name for a in attr.fields(Defaults)}
        unknown = sorted(set(loaded) - known)
        if unknown:
            raise errors.ConfigError('unknown config keys: '
                                     + ', '.join(unknown))
        values.update(loaded)
    if environ.get(SEED_ENV):
        values['seed'] = environ[SEED_ENV]
    try:
        return Defaults(**values)
    except (TypeError, ValueError) as e:
        raise errors.ConfigError('bad config value: %s' % e)

#-----------------------------------------------------------------------

@attr.s(frozen=True)
class RunConfig:
    """
    One command: which verb, which transforms, where the sequences come
    from, and how far and how hard to check.
    """
    command = attr.ib()
    name = attr.ib(default=None)
    target = attr.ib(default=None)
    candidate = attr.ib(default=None)
    seq = attr.ib(default=None)
    seq2 = attr.ib(default=None)
    file = attr.ib(default=None)
    terms = attr.ib(default=None)
    mode = attr.ib(default='symbolic')
    samples = attr.ib(default=None)
    seed = attr.ib(default=None)
    ansatz_bound = attr.ib(default=None)
    output_format = attr.ib(default='text')
    defaults = attr.ib(factory=Defaults)

    def resolved_terms(self):
        if self.terms is not None:
            return self.terms
        if self.mode == 'numeric' or self.command == 'transform':
            return self.defaults.numeric_terms
        return self.defaults.symbolic_terms

    def resolved_samples(self):
        return self.defaults.samples if self.samples is None else self.samples

    def resolved_seed(self):
        return self.defaults.seed if self.seed is None else self.seed

    def validate(self):
        """
        Raise ConfigError unless every field the command needs is set
        and in range.
        """
        if self.command not in COMMANDS:
            raise errors.ConfigError('unknown command %r' % self.command)
        if self.mode not in MODES:
            raise errors.ConfigError('mode must be one of '
                                     + ', '.join(MODES))
        if self.output_format not in FORMATS:
            raise errors.ConfigError('format must be one of '
                                     + ', '.join(FORMATS))
        if self.command == 'invariance':
            if not self.target or not self.candidate:
                raise errors.ConfigError('invariance needs --target and '
                                         '--candidate')
        elif not self.name:
            raise errors.ConfigError('%s needs --name' % self.command)
        if self.command == 'transform' and self.seq is None \
                and self.file is None:
            raise errors.ConfigError('transform needs --seq or --file')
        if self.seq is not None and self.file is not None:
            raise errors.ConfigError('give --seq or --file, not both')
        terms = self.resolved_terms()
        low = 1 if self.command == 'transform' else 0
        if terms < low:
            raise errors.ConfigError('--terms must be >= %d' % low)
        if self.resolved_samples() < 0:
            raise errors.ConfigError('--samples must be >= 0')
        if self.ansatz_bound is not None and self.ansatz_bound < 0:
            raise errors.ConfigError('--ansatz-bound must be >= 0')
        return self
