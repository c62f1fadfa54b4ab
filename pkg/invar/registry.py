#-----------------------------------------------------------------------
# registry.py
#-----------------------------------------------------------------------

# Command-line names of the transforms and derivations. A transform is
# named by a flat string, optionally followed by parameters:
#     binomial:mu=1/2    transvectant:diagonal=1    binomial
# Parameter values use the polynomial grammar, so mu=-1 and mu=mu1
# (a symbol) both work.

from invar import errors
from invar import transforms
from invar.derivations import basic_weitzenbock, shift_derivation
from invar.poly_core import parse_poly

_FACTORIES = {
    'binomial': (transforms.binomial_family, ('mu',)),
    'hankel': (transforms.hankel_family, ()),
    'psum': (transforms.psum_family, ()),
    'sum': (transforms.sum_family, ()),
    'diff': (transforms.diff_family, ()),
    'cayley': (transforms.cayley_family, ()),
    'transvectant': (transforms.transvectant_family, ('diagonal',)),
    'resultant': (transforms.resultant_family, ()),
    'discriminant': (transforms.discriminant_family, ()),
    'altconv': (transforms.alt_convolution_family, ()),
    'identity': (transforms.identity_family, ()),
}

_DERIVATIONS = {
    'weitzenbock': basic_weitzenbock,
    'shift': shift_derivation,
}

#-----------------------------------------------------------------------

def known_names():
    return sorted(_FACTORIES)


def parse_name(text):
    """
    Split 'name:key=value:key=value' into the name and a dict of
    parameter texts.
    """
    parts = text.strip().split(':')
    name = parts[0]
    params = {}
    for part in parts[1:]:
        key, sep, value = part.partition('=')
        if not sep or not key or not value:
            raise errors.ConfigError('bad transform parameter %r in %r'
                                     % (part, text))
        params[key.strip()] = value.strip()
    return name, params


def _mu_value(text):
    p = parse_poly(text)
    return p.constant_value() if p.is_constant() else p


def make_family(text):
    """
    Return the TransformFamily named by text.
    """
    name, params = parse_name(text)
    if name not in _FACTORIES:
        raise errors.UnknownTransformError(name, known_names())
    factory, allowed = _FACTORIES[name]
    extra = sorted(set(params) - set(allowed))
    if extra:
        raise errors.ConfigError('%s takes no parameter %s'
                                 % (name, ', '.join(extra)))
    kwargs = {}
    if 'mu' in params:
        kwargs['mu'] = _mu_value(params['mu'])
    if 'diagonal' in params:
        kwargs['diagonal'] = params['diagonal'] not in ('0', 'false', 'no')
    return factory(**kwargs)


def expand_targets(text, mu_values):
    """
    Return the target families for a numeric check: a binomial target
    without mu stands for one binomial map per configured mu value.
    """
    name, params = parse_name(text)
    if name == 'binomial' and 'mu' not in params:
        return [transforms.binomial_family(mu) for mu in mu_values]
    return [make_family(text)]


def make_derivation(text, bound):
    """
    Return the derivation named by text: 'weitzenbock', 'shift', or the
    logarithm (on x0..x<bound>) of a triangular transform.
    """
    if text in _DERIVATIONS:
        return _DERIVATIONS[text]()
    return make_family(text).derivation(bound)
