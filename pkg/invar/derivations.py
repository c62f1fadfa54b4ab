#-----------------------------------------------------------------------
# derivations.py
#-----------------------------------------------------------------------

"""
Derivations and endomorphisms of the polynomial algebra, and the
exp/log correspondence between locally nilpotent derivations and
exponential automorphisms.

A Derivation is fixed by the images D(x_i); a PolyEndomorphism by the
images phi(x_i). Images come from an explicit table, from a rule for
unbounded families (the basic Weitzenbock derivation, the binomial
maps), or both. A declared support bound N makes any request for an
index above N an error, so a derivation built on x0..xN is never
silently extended by zeros.
"""

import math
from fractions import Fraction

from invar import errors
from invar.log import get_logger
from invar.poly_core import PARAM, SEQ, SEQ2, Polynomial, parse_poly, \
    print_poly, var_key, var_name

log = get_logger(__name__)

DEFAULT_CAP = 128

#-----------------------------------------------------------------------

def _parse_var_name(name):
    p = parse_poly(name)
    variables = p.variables()
    v = next(iter(variables), None)
    if len(variables) != 1 or p != Polynomial.var(v[1], v[0]):
        raise errors.InvarError('not a variable name: ' + repr(name))
    return v


class _ImageTable:

    # Shared plumbing of Derivation and PolyEndomorphism: an explicit
    # image table, an optional rule, an optional support bound, and a
    # default for unlisted variables inside the support.

    def __init__(self, images=None, bound=None, rule=None, name=None):
        self._images = {}
        for k, p in dict(images or {}).items():
            v = var_key(k)
            if v[0] == PARAM:
                raise errors.InvarError('parameters have fixed images')
            self._images[v] = p if isinstance(p, Polynomial) \
                else parse_poly(p) if isinstance(p, str) \
                else Polynomial.constant(p)
        self.bound = bound
        self._rule = rule
        self.name = name

    def _default(self, v):
        raise NotImplementedError

    # Return the image of variable var (an int means x<var>).
    def image(self, var):
        v = var_key(var)
        if v[0] == PARAM:
            return self._default(v)
        if v in self._images:
            return self._images[v]
        if self.bound is not None and v[1] > self.bound:
            raise errors.SupportError(v[1], self.bound)
        if self._rule is not None:
            return self._rule(v)
        return self._default(v)

    # Return {n: image(x_n)} for n = 0..upto.
    def images(self, upto=None):
        if upto is None:
            upto = self.bound
        if upto is None:
            raise errors.InvarError('unbounded map: give upto')
        return {n: self.image(n) for n in range(upto + 1)}

    def to_json(self, upto=None):
        """
        Return {"images": {"x0": text, ...}} for x0..x<upto> (default:
        the support bound), with "bound" added when one is declared.
        """
        obj = {'images': {var_name((SEQ, n)): print_poly(p)
                          for n, p in self.images(upto).items()}}
        if self.bound is not None:
            obj['bound'] = self.bound
        return obj

    @classmethod
    def from_json(cls, obj, name=None):
        images = {_parse_var_name(k): parse_poly(v)
                  for k, v in obj['images'].items()}
        bound = obj.get('bound')
        if bound is None and images:
            bound = max(v[1] for v in images)
        return cls(images, bound=bound, name=name)

    def __repr__(self):
        return '%s(%s)' % (type(self).__name__, self.name or '')

#-----------------------------------------------------------------------

class Derivation(_ImageTable):
    """
    A derivation of Q[x0, x1, ...]: D(f) = sum_i D(x_i) * df/dx_i.
    Unlisted variables inside the support are sent to 0; parameters
    (mu, ...) are constants.
    """

    def _default(self, v):
        return Polynomial.zero()

    def apply(self, f):
        f = f if isinstance(f, Polynomial) else parse_poly(str(f))
        result = Polynomial.zero()
        for v in sorted(f.variables()):
            if v[0] == PARAM:
                continue
            dv = self.image(v)
            if dv.is_zero():
                continue
            result = result + dv * f.partial(v)
        return result

    __call__ = apply

    def nilpotency_index(self, f, cap=DEFAULT_CAP):
        """
        Return the smallest r <= cap with D^r(f) = 0. Raise
        NilpotencyCapExceeded if there is none, which suggests D is not
        locally nilpotent on f.
        """
        g = f
        for r in range(cap + 1):
            if g.is_zero():
                return r
            g = self.apply(g)
        raise errors.NilpotencyCapExceeded(cap)

    def exp_apply(self, f, cap=DEFAULT_CAP):
        """
        Return exp(D)(f) = sum_k D^k(f) / k!, a finite sum when D is
        locally nilpotent on f.
        """
        total = Polynomial.zero()
        g = f
        k = 0
        while not g.is_zero():
            if k >= cap:
                raise errors.NilpotencyCapExceeded(cap)
            total = total + g.scale(Fraction(1, math.factorial(k)))
            g = self.apply(g)
            k += 1
        return total

    # Return c*D for a rational or polynomial scalar c (c = mu gives
    # the derivation mu*D of the binomial maps).
    def scaled(self, c, name=None):
        c = c if isinstance(c, Polynomial) else Polynomial.constant(c)
        rule = None
        if self._rule is not None:
            inner = self._rule
            rule = lambda v: c * inner(v)
        return Derivation({v: c * p for v, p in self._images.items()},
                          bound=self.bound, rule=rule,
                          name=name or '(%s)*%s' % (c, self.name))

    def __neg__(self):
        return self.scaled(-1, name='-' + str(self.name))

    def __add__(self, other):
        bounds = [b for b in (self.bound, other.bound) if b is not None]
        bound = min(bounds) if bounds else None
        keys = set(self._images) | set(other._images)
        images = {v: self.image(v) + other.image(v) for v in keys
                  if bound is None or v[1] <= bound}
        rule = None
        if self._rule is not None or other._rule is not None:
            rule = lambda v: self.image(v) + other.image(v)
        return Derivation(images, bound=bound, rule=rule,
                          name='%s + %s' % (self.name, other.name))

    def doubled(self):
        """
        Return the derivation acting on the c-variables exactly as self
        acts on the x-variables, and as self on the x-variables.
        """
        def rule(v):
            if v[0] == SEQ2:
                return self.image((SEQ, v[1])).rename_block(SEQ, SEQ2)
            return self.image(v)
        images = dict(self._images)
        for v, p in self._images.items():
            if v[0] == SEQ:
                images[(SEQ2, v[1])] = p.rename_block(SEQ, SEQ2)
        return Derivation(images, bound=self.bound, rule=rule,
                          name=self.name)

    # True iff D(x_n) = 0 for n = 0..upto.
    def is_zero_upto(self, upto):
        return all(self.image(n).is_zero() for n in range(upto + 1))

    # True iff self and other agree on x0..x<upto>.
    def same_on(self, other, upto):
        return all(self.image(n) == other.image(n) for n in range(upto + 1))

    def lower_coefficients(self, n):
        """
        Return {k: d} with D(x_n) = sum_k d x_k, k < n. Raise
        NotTriangularError if D(x_n) is not a linear form in lower
        variables, SymbolicCoefficientError if a coefficient involves mu.
        """
        return linear_form(self.image(n), n)

#-----------------------------------------------------------------------

class PolyEndomorphism(_ImageTable):
    """
    An algebra endomorphism of Q[x0, x1, ...] fixed by the images
    phi(x_i); unlisted variables inside the support are fixed.
    """

    def _default(self, v):
        return Polynomial.var(v[1], v[0])

    def apply(self, f):
        table = {v: self.image(v) for v in f.variables() if v[0] != PARAM}
        return f.substitute(table)

    __call__ = apply

    # True iff phi and other agree on x0..x<upto>.
    def same_on(self, other, upto):
        return all(self.image(n) == other.image(n) for n in range(upto + 1))

#-----------------------------------------------------------------------

def linear_form(p, n, allow_params=False):
    """
    Return {k: coefficient} for the linear form p = sum_k c_k x_k with
    every k < n. With allow_params the coefficients may be polynomials
    in mu, ...; otherwise they must be rationals.
    """
    coeffs = {}
    for mono, c in p.terms():
        seq_vars = [(v, e) for v, e in mono if v[0] != PARAM]
        if len(seq_vars) != 1 or seq_vars[0][1] != 1 \
                or seq_vars[0][0][0] != SEQ:
            raise errors.NotTriangularError(n, 'term %s is not linear'
                                            % print_poly(Polynomial({mono: c})))
        k = seq_vars[0][0][1]
        if k >= n:
            raise errors.NotTriangularError(n, 'involves x%d' % k)
        params = tuple((v, e) for v, e in mono if v[0] == PARAM)
        if params and not allow_params:
            raise errors.SymbolicCoefficientError(n)
        piece = Polynomial({params: c})
        coeffs[k] = coeffs.get(k, Polynomial.zero()) + piece
    if allow_params:
        return coeffs
    return {k: c.constant_value() for k, c in coeffs.items()}

#-----------------------------------------------------------------------
# Named derivations

def _weitzenbock_rule(v):
    block, i = v
    if i == 0:
        return Polynomial.zero()
    return Polynomial.var(i - 1, block).scale(i)


def basic_weitzenbock():
    """
    Return the basic Weitzenbock derivation: x0 -> 0, x_i -> i*x_(i-1),
    for every index (and every sequence block).
    """
    return Derivation(rule=_weitzenbock_rule, name='weitzenbock')


def _shift_rule(v):
    block, i = v
    return Polynomial.zero() if i == 0 else Polynomial.var(i - 1, block)


def shift_derivation():
    """
    Return the shift derivation x0 -> 0, x_i -> x_(i-1).
    """
    return Derivation(rule=_shift_rule, name='shift')


def zero_derivation(bound=None):
    return Derivation(bound=bound, name='zero')

#-----------------------------------------------------------------------

def identity_endomorphism(bound=None):
    return PolyEndomorphism(bound=bound, name='identity')


def exp_endomorphism(d, bound=None, cap=DEFAULT_CAP):
    """
    Return the endomorphism exp(D), x_n -> exp(D)(x_n). Images are
    computed on first use and kept; bound defaults to the support bound
    of D.
    """
    if bound is None:
        bound = d.bound
    cache = {}

    def rule(v):
        if v not in cache:
            cache[v] = d.exp_apply(Polynomial.var(v[1], v[0]), cap)
        return cache[v]

    return PolyEndomorphism(bound=bound, rule=rule,
                            name='exp(%s)' % d.name)


def lie_series(d, f, mu, cap=DEFAULT_CAP):
    """
    Return sum_i D^i(f) mu^i / i!, the expansion of f under exp(mu*D).
    """
    return d.scaled(mu).exp_apply(f, cap)


def log_endomorphism(phi, bound):
    """
    Return the derivation D on x0..x<bound> with exp(D) = phi, where
    phi(x_n) - x_n must be a linear form in x0..x_(n-1):
    D(x_n) = sum_(i=1..n) (-1)^(i+1)/i * E^i(x_n), E = phi - 1.
    """
    images = {}
    for n in range(bound + 1):
        x = Polynomial.var(n)
        linear_form(phi.image(n) - x, n, allow_params=True)
        total = Polynomial.zero()
        term = x
        for i in range(1, n + 1):
            term = phi.apply(term) - term
            if term.is_zero():
                break
            sign = 1 if i % 2 == 1 else -1
            total = total + term.scale(Fraction(sign, i))
        images[n] = total
        log.debug('log image', extra={'index': n, 'image': str(total)})
    log.info('logarithm computed', extra={'map': phi.name, 'bound': bound})
    return Derivation(images, bound=bound, name='log(%s)' % phi.name)


def compose_endo(phi, psi):
    """
    Return phi o psi: x_i -> phi(x_i) with psi substituted, i.e. the map
    of the transformation that applies psi first and phi second.
    """
    bounds = [b for b in (phi.bound, psi.bound) if b is not None]
    return PolyEndomorphism(
        bound=min(bounds) if bounds else None,
        rule=lambda v: psi.apply(phi.image(v)),
        name='%s o %s' % (phi.name, psi.name))


def invert_endomorphism(phi, bound):
    """
    Return phi^-1 on x0..x<bound> as exp(-log(phi)).
    """
    inverse = exp_endomorphism(-log_endomorphism(phi, bound), bound)
    inverse.name = 'inverse(%s)' % phi.name
    return inverse

#-----------------------------------------------------------------------

def _main():
    weitz = basic_weitzenbock()
    z2 = parse_poly('x0*x2 - x1^2')
    print(weitz(z2))
    print(weitz.nilpotency_index(Polynomial.var(3)))
    mu = Polynomial.param()
    print(lie_series(weitz, Polynomial.var(2), mu))
    psum = PolyEndomorphism(rule=lambda v: sum(
        (Polynomial.var(k) for k in range(v[1] + 1)), Polynomial.zero()))
    d = log_endomorphism(psum, 3)
    for n, p in d.images().items():
        print('x%d -> %s' % (n, p))


if __name__ == '__main__':
    _main()

#-----------------------------------------------------------------------

# python -m invar.derivations
# 0
# 4
# mu^2*x0 + 2*mu*x1 + x2
# x0 -> 0
# x1 -> x0
# x2 -> x1 + 1/2*x0
# x3 -> x2 + 1/2*x1 + 1/3*x0
