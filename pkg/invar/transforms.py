#-----------------------------------------------------------------------
# transforms.py
#-----------------------------------------------------------------------

"""
Polynomial transformations of sequences and the invariance pipelines.

A TransformFamily is the rule n -> f_n. Each family is written once, as
a function build(n, a, c) over indexable inputs: given the variables it
yields the symbolic f_n, given the terms of a sequence (as constant
polynomials) it yields b_n. Families of the triangular shape
b_n = a_n + sum_(i<n) alpha_i a_i (and the binomial maps) also carry the
endomorphism x_n -> f_n, from which the logarithm and the intertwining
map are computed.
"""

import math
from fractions import Fraction

import attr

from invar import errors
from invar.derivations import DEFAULT_CAP, PolyEndomorphism, \
    basic_weitzenbock, compose_endo, exp_endomorphism, \
    invert_endomorphism, log_endomorphism, zero_derivation
from invar.invariant_kernel import DerivationAnsatz, LinearChangeOfBasis, \
    cayley_generator, catalecticant, intertwining_solve, \
    problem2_find_derivations
from invar.log import get_logger
from invar.poly_core import PARAM, SEQ, SEQ2, PolyMatrix, Polynomial, \
    binary_form_coeffs, formal_discriminant, formal_resultant, print_poly
from stdlib import stdarray, stdrandom

log = get_logger(__name__)

#-----------------------------------------------------------------------

def _to_fraction(x):
    if isinstance(x, Polynomial):
        return x.constant_value()
    return Fraction(x)


@attr.s(frozen=True)
class Sequence:
    """
    A finite prefix a0, a1, ..., a_m of a rational sequence.
    """
    terms = attr.ib(converter=lambda ts: tuple(_to_fraction(t) for t in ts))

    @terms.validator
    def _nonempty(self, attribute, value):
        if not value:
            raise errors.SequenceFormatError('empty input')

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, i):
        return self.terms[i]

    def __iter__(self):
        return iter(self.terms)

    def __str__(self):
        return stdarray.format_1d(self.terms)


# Indexable views handed to the build functions.

class _Variables:

    def __init__(self, block):
        self._block = block

    def __getitem__(self, i):
        return Polynomial.var(i, self._block)


class _Constants:

    def __init__(self, terms):
        self._terms = terms

    def __getitem__(self, i):
        return Polynomial.constant(self._terms[i])


_X = _Variables(SEQ)
_C = _Variables(SEQ2)

#-----------------------------------------------------------------------

class TransformFamily:
    """
    The polynomial transformation n -> f_n.

    build(n, a, c) returns f_n over the inputs a (and c for two-sequence
    families); prefix_need(n) is the largest index of a (or c) it reads.
    The family produces the terms n = start, start + 1, ....
    """

    def __init__(self, name, build, prefix_need, arity=1, start=0,
                 endomorphism=None, params=None):
        if arity not in (1, 2):
            raise errors.ArityError('arity must be 1 or 2, got %r' % arity)
        self.name = name
        self.arity = arity
        self.start = start
        self.endomorphism = endomorphism
        self.params = dict(params or {})
        self._build = build
        self._prefix_need = prefix_need
        self._polys = {}

    @classmethod
    def from_polys(cls, name, poly, prefix_need=None, arity=1, start=0,
                   endomorphism=None):
        """
        Return the family with symbolic terms poly(n); evaluation
        substitutes the input terms into poly(n).
        """
        def need(n):
            f = poly(n)
            return max(f.max_index(SEQ), f.max_index(SEQ2), 0)

        def build(n, a, c=None):
            f = poly(n)
            table = {(SEQ, i): a[i] for i in range(f.max_index(SEQ) + 1)}
            for i in range(f.max_index(SEQ2) + 1):
                table[(SEQ2, i)] = c[i]
            return f.substitute(table)

        return cls(name, build, prefix_need or need, arity=arity,
                   start=start, endomorphism=endomorphism)

    def poly(self, n):
        if n < self.start:
            raise errors.InvarError('%s starts at n = %d' % (self.name,
                                                             self.start))
        if n not in self._polys:
            self._polys[n] = self._build(n, _X, _C) if self.arity == 2 \
                else self._build(n, _X)
        return self._polys[n]

    # Return f_n for the first count terms.
    def polys(self, count):
        return [self.poly(self.start + t) for t in range(count)]

    def prefix_need(self, n):
        return self._prefix_need(n)

    # Input length needed to produce count terms.
    def required_length(self, count):
        return self._prefix_need(self.start + count - 1) + 1

    def evaluate(self, n, *sequences):
        b = self._build(n, *(_Constants(s) for s in sequences))
        if not b.is_constant():
            raise errors.InvarError('%s has symbolic parameters; give '
                                    'numeric values' % self.name)
        return b.constant_value()

    def is_symbolic(self):
        """
        True iff a parameter of the family is a symbol such as mu.
        """
        return any(isinstance(v, Polynomial) and not v.is_constant()
                   for v in self.params.values())

    def derivation(self, bound):
        """
        Return the derivation D with exp(D) equal to this family's
        endomorphism on x0..x<bound>.
        """
        if self.endomorphism is None:
            raise errors.NotTriangularError(
                0, '%s is not a triangular linear map' % self.name)
        d = getattr(self.endomorphism, 'log', None)
        if d is not None:
            return d
        return log_endomorphism(self.endomorphism, bound)

    # True iff both families have the same first count terms.
    def agrees_with(self, other, count):
        return (self.start == other.start and
                all(self.poly(n) == other.poly(n)
                    for n in range(self.start, self.start + count)))

    def __repr__(self):
        return 'TransformFamily(%r)' % self.name

#-----------------------------------------------------------------------

def apply_transform(family, inputs, count):
    """
    Return the Sequence b_start, ..., b_(start+count-1) of family applied
    to inputs (one Sequence, or two for a two-sequence family).
    """
    inputs = list(inputs)
    if len(inputs) != family.arity:
        raise errors.ArityError('%s takes %d sequence(s), got %d'
                                % (family.name, family.arity, len(inputs)))
    if count < 1:
        raise errors.InvarError('count must be >= 1, got %d' % count)
    required = family.required_length(count)
    for s in inputs:
        if len(s) < required:
            raise errors.InsufficientPrefixError(family.name, required,
                                                 len(s))
    return Sequence([family.evaluate(family.start + t, *inputs)
                     for t in range(count)])

#-----------------------------------------------------------------------
# The catalog

def _param_text(mu):
    return print_poly(mu) if isinstance(mu, Polynomial) else str(Fraction(mu))


def _binomial_rule(mu):
    def rule(v):
        block, n = v
        return sum((Polynomial.var(i, block).scale(math.comb(n, i))
                    * mu ** (n - i) for i in range(n + 1)),
                   Polynomial.zero())
    return rule


def binomial_family(mu=None):
    """
    Return B_mu: b_n = sum_i C(n,i) a_i mu^(n-i), the endomorphism
    exp(mu*W) for W the basic Weitzenbock derivation. mu may be a
    rational or a polynomial in the parameters; None means the symbolic
    parameter mu.
    """
    if mu is None:
        mu = Polynomial.param()
    mu_poly = mu if isinstance(mu, Polynomial) else Polynomial.constant(mu)
    name = 'binomial:mu=' + _param_text(mu)
    endo = PolyEndomorphism(rule=_binomial_rule(mu_poly), name=name)
    endo.log = basic_weitzenbock().scaled(mu_poly, name='mu*W')

    def build(n, a):
        return sum((a[i].scale(math.comb(n, i)) * mu_poly ** (n - i)
                    for i in range(n + 1)), Polynomial.zero())

    return TransformFamily(name, build, lambda n: n, endomorphism=endo,
                           params={'mu': mu_poly})


def hankel_family():
    """
    Return H: b_n = det [a_(i+j)], 0 <= i, j <= n.
    """
    def build(n, a):
        if a is _X:
            return catalecticant(n)
        return PolyMatrix.hankel(a, n).determinant()
    return TransformFamily('hankel', build, lambda n: 2 * n)


def _triangular_family(name, images):
    endo = PolyEndomorphism(
        rule=lambda v: images(lambda i: Polynomial.var(i, v[0]), v[1]),
        name=name)
    return TransformFamily(name, lambda n, a: images(a.__getitem__, n),
                           lambda n: n, endomorphism=endo)


def psum_family():
    return _triangular_family(
        'psum', lambda a, n: sum((a(k) for k in range(n + 1)),
                                 Polynomial.zero()))


# SUM and DIFF read a_(-1) as 0.

def sum_family():
    return _triangular_family(
        'sum', lambda a, n: a(n) + a(n - 1) if n > 0 else a(0))


def diff_family():
    return _triangular_family(
        'diff', lambda a, n: a(n) - a(n - 1) if n > 0 else a(0))


def triangular_families():
    return {'psum': psum_family(), 'sum': sum_family(),
            'diff': diff_family()}


def identity_family():
    endo = PolyEndomorphism(name='identity')
    endo.log = zero_derivation()
    return TransformFamily('identity', lambda n, a: a[n], lambda n: n,
                           endomorphism=endo)


def cayley_family():
    """
    Return CAYLEY: b_n = z_n(a0, ..., a_n), starting at n = 2.
    """
    return TransformFamily('cayley', lambda n, a: cayley_generator(n, a),
                           lambda n: n, start=2)


def transvectant_family(diagonal=False):
    """
    Return Tr: b_n = sum_i (-1)^i C(n,i) a_i c_(n-i). The diagonal
    family takes c = a and reads one sequence.
    """
    def build(n, a, c=None):
        c = a if c is None else c
        return sum(((a[i] * c[n - i]).scale((-1) ** i * math.comb(n, i))
                    for i in range(n + 1)), Polynomial.zero())
    if diagonal:
        return TransformFamily('transvectant:diagonal=1',
                               lambda n, a: build(n, a), lambda n: n)
    return TransformFamily('transvectant', build, lambda n: n, arity=2)


def resultant_family():
    """
    Return RES: b_n = Res_X(P_n(a), P_n(c)) with
    P_n(a) = sum_i C(n,i) a_i X^(n-i), starting at n = 1.
    """
    def build(n, a, c):
        return formal_resultant(binary_form_coeffs(a, n),
                                binary_form_coeffs(c, n))
    return TransformFamily('resultant', build, lambda n: n, arity=2, start=1)


def discriminant_family():
    """
    Return DISCR: b_n = disc(P_(n+2)(a) / (n+2)^(n+2)).
    """
    def build(n, a):
        d = n + 2
        return formal_discriminant(binary_form_coeffs(a, d,
                                                      Fraction(1, d ** d)))
    return TransformFamily('discriminant', build, lambda n: n + 2)


def alt_convolution_family():
    """
    Return b_n = sum_(i=0..2n) (-1)^i a_i a_(2n-i).
    """
    def build(n, a):
        return sum(((a[i] * a[2 * n - i]).scale((-1) ** i)
                    for i in range(2 * n + 1)), Polynomial.zero())
    return TransformFamily('altconv', build, lambda n: 2 * n)

#-----------------------------------------------------------------------
# Families derived from others

def d_derivative_of_family(d, family):
    """
    Return the family n -> D(f_n). Two-sequence families are acted on
    by D on both sequences.
    """
    if family.arity == 2:
        d = d.doubled()
    return TransformFamily.from_polys(
        'D(%s)' % family.name, lambda n: d.apply(family.poly(n)),
        prefix_need=family.prefix_need, arity=family.arity,
        start=family.start)


def compose_families(outer, inner):
    """
    Return outer o inner: the sequence inner(A) fed to outer.
    """
    if inner.arity != 1 or inner.start != 0:
        raise errors.ArityError('the inner family must map one sequence '
                                'to one sequence from n = 0')

    def poly(n):
        f = outer.poly(n)
        return f.substitute({v: inner.poly(v[1]).rename_block(SEQ, v[0])
                             for v in f.variables() if v[0] != PARAM})

    endo = None
    if outer.endomorphism is not None and inner.endomorphism is not None:
        endo = compose_endo(outer.endomorphism, inner.endomorphism)
    return TransformFamily.from_polys(
        '%s o %s' % (outer.name, inner.name), poly,
        prefix_need=lambda n: inner.prefix_need(outer.prefix_need(n)),
        arity=outer.arity, start=outer.start, endomorphism=endo)


def inverse_family(family, bound):
    """
    Return the family of the inverse map on x0..x<bound>.
    """
    if family.endomorphism is None:
        raise errors.NotTriangularError(
            0, '%s is not a triangular linear map' % family.name)
    endo = invert_endomorphism(family.endomorphism, bound)
    return TransformFamily.from_polys(
        'inverse(%s)' % family.name, lambda n: endo.image(n),
        prefix_need=lambda n: n, endomorphism=endo)


def pushed_family(name, psi, family):
    """
    Return the family n -> Psi(f_n).
    """
    return TransformFamily.from_polys(
        name, lambda n: psi.push_through(family.poly(n)),
        prefix_need=family.prefix_need, start=family.start)

#-----------------------------------------------------------------------
# Reports

@attr.s(frozen=True)
class InvarianceReport:
    """
    Outcome of an invariance check. Symbolic witnesses are (n, residual)
    pairs; numeric witnesses are (sample terms, first differing n).
    """
    mode = attr.ib(validator=attr.validators.in_(('symbolic', 'numeric')))
    verdict = attr.ib(validator=attr.validators.in_(
        ('invariant', 'not-invariant', 'inconclusive')))
    terms = attr.ib()
    witnesses = attr.ib(converter=tuple, default=())
    target = attr.ib(default=None)
    candidate = attr.ib(default=None)
    samples = attr.ib(default=None)

    @property
    def invariant(self):
        return self.verdict == 'invariant'

    def to_json(self):
        obj = {'mode': self.mode, 'verdict': self.verdict,
               'terms': self.terms, 'target': self.target,
               'candidate': self.candidate}
        if self.mode == 'symbolic':
            obj['witnesses'] = [{'n': n, 'residual': print_poly(r)}
                                for n, r in self.witnesses]
        else:
            obj['samples'] = self.samples
            obj['witnesses'] = [{'sequence': [str(x) for x in seq],
                                 'n': n} for seq, n in self.witnesses]
        return obj


def check_invariance_symbolic(d, family, terms):
    """
    Check D(g_n) = 0 for the first terms + 1 members of the family.
    With exp(D) = F this decides F-invariance of the family up to there.
    """
    if family.arity == 2:
        d = d.doubled()
    witnesses = []
    for t in range(terms + 1):
        n = family.start + t
        residual = d.apply(family.poly(n))
        if not residual.is_zero():
            witnesses.append((n, residual))
    verdict = 'not-invariant' if witnesses else 'invariant'
    log.info('symbolic check', extra={'family': family.name,
                                      'verdict': verdict})
    return InvarianceReport('symbolic', verdict, terms, witnesses,
                            target=d.name, candidate=family.name)


def check_invariance_numeric(target, candidate, samples, terms, seed,
                             entry_range=(-9, 9)):
    """
    Check G(F(A)) = G(A) for the first terms + 1 members of the
    candidate G, F the target, on samples pseudo-random integer
    sequences. Sample k draws from the stream (seed, k) only. target may
    be a list of families; sample k then uses target[k % len(target)].
    """
    targets = list(target) if isinstance(target, (list, tuple)) \
        else [target]
    for f in targets:
        if f.arity != 1:
            raise errors.ArityError('the target must map one sequence '
                                    'to one')
        if f.is_symbolic():
            raise errors.InvarError('%s has symbolic parameters; numeric '
                                    'mode needs values' % f.name)
    count = terms + 1
    need = candidate.required_length(count)
    length = max([need] + [f.required_length(need) for f in targets])
    lo, hi = entry_range

    witnesses = []
    for k in range(samples):
        f = targets[k % len(targets)]
        rng = stdrandom.generator(seed, k)
        inputs = [Sequence(stdrandom.integer_sequence(rng, length, lo, hi))
                  for _ in range(candidate.arity)]
        moved = [apply_transform(f, [s], need) for s in inputs]
        before = apply_transform(candidate, inputs, count)
        after = apply_transform(candidate, moved, count)
        for t in range(count):
            if before[t] != after[t]:
                witnesses.append((inputs[0].terms, candidate.start + t))
                log.debug('numeric witness', extra={'sample': k,
                                                    'n': candidate.start + t})
                break
    if samples == 0:
        verdict = 'inconclusive'
    else:
        verdict = 'not-invariant' if witnesses else 'invariant'
    return InvarianceReport('numeric', verdict, terms, witnesses,
                            target=', '.join(f.name for f in targets),
                            candidate=candidate.name, samples=samples)

#-----------------------------------------------------------------------
# Problem 1: from a triangular transformation F to F-invariant families

@attr.s(frozen=True)
class Problem1Result:
    derivation = attr.ib()
    psi = attr.ib()
    families = attr.ib(converter=tuple)
    terms = attr.ib()
    transform = attr.ib(default=None)

    def to_json(self):
        return {
            'transform': self.transform,
            'derivation': self.derivation.to_json(self.psi.bound),
            'psi': self.psi.to_json(),
            'families': [
                {'name': f.name, 'start': f.start,
                 'terms': [print_poly(p) for p in f.polys(self.terms + 1)]}
                for f in self.families],
        }


def solve_problem1(family, terms):
    """
    Return the logarithm D of the triangular family F on the variables
    the emitted families need, the intertwining map Psi, and the
    F-invariant families Psi(x0), Psi(z_n), Psi(h_n). Each family is
    re-checked with check_invariance_symbolic before it is returned.
    """
    bound = max(2 * terms, terms + 2)
    if family.endomorphism is None:
        raise errors.NotTriangularError(
            0, '%s is not a triangular linear map' % family.name)
    d = log_endomorphism(family.endomorphism, bound)
    if d.is_zero_upto(bound):
        psi = LinearChangeOfBasis.identity(bound)
    else:
        psi = intertwining_solve(d, bound)

    x0 = psi.image(0)
    families = [
        TransformFamily.from_polys('psi_x0', lambda n: x0,
                                   prefix_need=lambda n: 0),
        pushed_family('psi_cayley', psi, cayley_family()),
        pushed_family('psi_hankel', psi, hankel_family()),
    ]
    for f in families:
        report = check_invariance_symbolic(d, f, terms)
        if not report.invariant:
            raise errors.InvarError('%s failed its invariance check at n = %d'
                                    % (f.name, report.witnesses[0][0]))
    log.info('problem 1 solved', extra={'family': family.name,
                                        'bound': bound})
    return Problem1Result(d, psi, families, terms, family.name)

#-----------------------------------------------------------------------
# Problem 2: from a family G to transformations F making it F-invariant

@attr.s(frozen=True)
class Problem2Result:
    family = attr.ib()
    bound = attr.ib()
    pairs = attr.ib(converter=tuple)

    def to_json(self):
        return {
            'family': self.family,
            'ansatz_bound': self.bound,
            'basis': [{'derivation': d.to_json(),
                       'transformation': phi.to_json(self.bound)}
                      for d, phi in self.pairs],
        }


def solve_problem2(family, terms, ansatz_bound=None, cap=DEFAULT_CAP):
    """
    Return a basis of triangular linear derivations D killing
    g_start..g_(start+terms), each paired with exp(D): the family is
    exp(D)-invariant for every D in the span. cap bounds the series
    length of each exp(D)(x_n).
    """
    if family.arity != 1:
        raise errors.ArityError('Problem 2 needs a one-sequence family')
    polys = family.polys(terms + 1)
    if ansatz_bound is None:
        ansatz_bound = max(family.prefix_need(family.start + t)
                           for t in range(terms + 1))
    basis = problem2_find_derivations(polys, DerivationAnsatz(ansatz_bound))
    pairs = [(d, exp_endomorphism(d, ansatz_bound, cap)) for d in basis]
    for _, phi in pairs:
        phi.images(ansatz_bound)
    return Problem2Result(family.name, ansatz_bound, pairs)

#-----------------------------------------------------------------------

@attr.s(frozen=True)
class OnesReport:
    """
    Values of g_n at the all-ones sequence. Components that do not
    vanish are listed, not treated as failures.
    """
    family = attr.ib()
    values = attr.ib(converter=tuple)

    @property
    def nonvanishing(self):
        return [n for n, v in self.values if v != 0]

    def to_json(self):
        return {'family': self.family,
                'values': [{'n': n, 'value': str(v)} for n, v in self.values],
                'nonvanishing': self.nonvanishing}


def ones_vanishing_check(family, terms):
    if family.arity != 1:
        raise errors.ArityError('the all-ones check reads one sequence')
    ones = Sequence([1] * family.required_length(terms + 1))
    values = apply_transform(family, [ones], terms + 1)
    return OnesReport(family.name,
                      [(family.start + t, v) for t, v in enumerate(values)])

#-----------------------------------------------------------------------

def _main():
    catalan = Sequence([1, 1, 2, 5, 14, 42, 132])
    print(apply_transform(hankel_family(), [catalan], 4))
    print(apply_transform(binomial_family(1), [Sequence([1, 1, 1, 1])], 4))
    print(binomial_family().poly(2))
    result = solve_problem1(psum_family(), 2)
    print(result.derivation.image(2))
    print(result.families[2].poly(1))
    print(check_invariance_symbolic(result.derivation, result.families[2],
                                    2).verdict)


if __name__ == '__main__':
    _main()

#-----------------------------------------------------------------------

# python -m invar.transforms
# 1, 1, 1, 1
# 1, 2, 4, 8
# mu^2*x0 + 2*mu*x1 + x2
# x1 + 1/2*x0
# 2*x0*x2 - x1^2 - x0*x1
# invariant
