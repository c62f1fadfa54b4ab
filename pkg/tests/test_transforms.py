import math
from fractions import Fraction

import pytest
from hypothesis import given

from invar import errors
from invar.derivations import Derivation, basic_weitzenbock, \
    exp_endomorphism, shift_derivation, zero_derivation
from invar.invariant_kernel import DerivationAnsatz, catalecticant, \
    cayley_generator, stirling2
from invar.poly_core import Polynomial, parse_poly, solve_rational_linear
from invar.transforms import Sequence, TransformFamily, \
    alt_convolution_family, apply_transform, binomial_family, \
    cayley_family, check_invariance_numeric, check_invariance_symbolic, \
    compose_families, d_derivative_of_family, diff_family, \
    discriminant_family, hankel_family, identity_family, inverse_family, \
    ones_vanishing_check, psum_family, resultant_family, solve_problem1, \
    solve_problem2, sum_family, transvectant_family
from tests.strategies import integer_sequences

P = parse_poly
W = basic_weitzenbock()
mu = Polynomial.param()
MU_VALUES = [1, -1, 2, Fraction(1, 2)]


def _seq(*terms):
    return Sequence(terms)


def _values(family, *inputs, count):
    return list(apply_transform(family, [Sequence(s) for s in inputs],
                                count))


# The catalog on concrete sequences

def test_hankel_of_catalan():
    assert _values(hankel_family(), [1, 1, 2, 5, 14], count=3) == [1, 1, 1]


def test_hankel_of_ones():
    assert _values(hankel_family(), [1] * 5, count=3) == [1, 0, 0]


def test_hankel_terms():
    h = hankel_family()
    assert h.poly(0) == P('x0')
    assert h.poly(1) == P('x0*x2 - x1^2')
    assert h.poly(2) == catalecticant(2)


def test_binomial_transform():
    assert _values(binomial_family(1), [1, 1, 1, 1], count=4) == [1, 2, 4, 8]
    assert _values(binomial_family(0), [3, -1, 4, 1], count=4) == \
        [3, -1, 4, 1]


def test_binomial_terms():
    b = binomial_family()
    assert b.poly(0) == P('x0')
    assert b.poly(2) == P('x2 + 2*mu*x1 + mu^2*x0')
    assert b.is_symbolic()
    assert not binomial_family(2).is_symbolic()


def test_symbolic_family_cannot_be_evaluated():
    with pytest.raises(errors.InvarError, match='symbolic parameters'):
        apply_transform(binomial_family(), [_seq(1, 2)], 2)


def test_triangular_families():
    assert _values(psum_family(), [1, 1, 1, 1], count=4) == [1, 2, 3, 4]
    assert _values(sum_family(), [1, 2, 3], count=3) == [1, 3, 5]
    assert _values(diff_family(), [1, 3, 6], count=3) == [1, 2, 3]


@given(integer_sequences(6))
def test_diff_undoes_psum(terms):
    a = Sequence(terms)
    assert apply_transform(diff_family(),
                           [apply_transform(psum_family(), [a], 6)], 6) == a


@given(integer_sequences(6))
def test_sum_plus_diff_doubles(terms):
    a = Sequence(terms)
    s = apply_transform(sum_family(), [a], 6)
    d = apply_transform(diff_family(), [a], 6)
    for n in range(1, 6):
        assert s[n] + d[n] == 2 * a[n]


def test_cayley_family():
    c = cayley_family()
    assert c.start == 2
    assert c.poly(2) == P('x0*x2 - x1^2')
    assert _values(c, [1, 2, 3, 4], count=2) == [-1, 2]
    assert _values(c, [1] * 7, count=5) == [0] * 5


def test_transvectant():
    tr = transvectant_family()
    assert tr.arity == 2
    assert tr.poly(1) == P('x0*c1 - x1*c0')
    diagonal = transvectant_family(diagonal=True)
    assert diagonal.poly(2) == P('2*x0*x2 - 2*x1^2')
    for n in (1, 3, 5):
        assert diagonal.poly(n) == 0


def test_resultant_and_discriminant_terms():
    assert resultant_family().poly(1) == P('x0*c1 - x1*c0')
    assert discriminant_family().poly(0) == \
        P('x1^2 - x0*x2').scale(Fraction(1, 4))


def test_discriminant_of_ones():
    assert _values(discriminant_family(), [1] * 5, count=3) == [0, 0, 0]


def test_alternating_convolution():
    g = alt_convolution_family()
    assert g.poly(0) == P('x0^2')
    assert g.poly(1) == P('2*x0*x2 - x1^2')
    for n in range(6):
        assert shift_derivation()(g.poly(n)) == 0


def test_apply_transform_errors():
    with pytest.raises(errors.ArityError):
        apply_transform(transvectant_family(), [_seq(1, 2)], 1)
    with pytest.raises(errors.InsufficientPrefixError,
                       match='prefix of length 5, got 3'):
        apply_transform(hankel_family(), [_seq(1, 1, 2)], 3)
    with pytest.raises(errors.InvarError):
        apply_transform(psum_family(), [_seq(1)], 0)


def test_empty_sequence():
    with pytest.raises(errors.SequenceFormatError, match='empty input'):
        Sequence([])


# Derivatives of families

def test_derivative_of_hankel_vanishes():
    family = d_derivative_of_family(W, hankel_family())
    assert all(family.poly(n) == 0 for n in range(5))


def test_zero_derivation_gives_zero_family():
    family = d_derivative_of_family(zero_derivation(), psum_family())
    assert all(p == 0 for p in family.polys(4))


def test_derivative_of_constant_x1_family():
    x1 = TransformFamily.from_polys('x1', lambda n: P('x1'))
    assert d_derivative_of_family(W, x1).polys(3) == [P('x0')] * 3


# Symbolic invariance

@pytest.mark.parametrize('family', [
    hankel_family(), cayley_family(), transvectant_family(diagonal=True)])
def test_weitzenbock_invariants(family):
    assert check_invariance_symbolic(W, family, 4).invariant


def test_identity_family_is_not_invariant():
    report = check_invariance_symbolic(W, identity_family(), 2)
    assert report.verdict == 'not-invariant'
    assert report.witnesses[0] == (1, P('x0'))


def test_exp_of_mu_weitzenbock_matches_binomial():
    d = W.scaled(mu)
    for n in range(9):
        expected = sum((Polynomial.var(n - i) * mu ** i).scale(
            math.comb(n, i)) for i in range(n + 1))
        assert d.exp_apply(Polynomial.var(n)) == expected
        assert binomial_family().poly(n) == expected


@pytest.mark.parametrize('n', range(4))
def test_binomial_fixes_catalecticants(n):
    phi = binomial_family().endomorphism
    assert phi(catalecticant(n)) == catalecticant(n)


@pytest.mark.parametrize('n', range(7))
def test_binomial_fixes_transvectants(n):
    phi = binomial_family().endomorphism
    f = transvectant_family().poly(n)
    assert phi(f) == f


def test_transvectant_symbolic_check():
    report = check_invariance_symbolic(W, transvectant_family(), 6)
    assert report.invariant


def test_binomial_group_laws():
    mu1, mu2 = Polynomial.param(1), Polynomial.param(2)
    both = compose_families(binomial_family(mu1), binomial_family(mu2))
    assert both.agrees_with(binomial_family(mu1 + mu2), 9)
    inverse = compose_families(binomial_family(mu), binomial_family(-mu))
    assert inverse.agrees_with(identity_family(), 9)


def test_inverse_family():
    assert inverse_family(psum_family(), 6).agrees_with(diff_family(), 7)
    with pytest.raises(errors.NotTriangularError):
        inverse_family(hankel_family(), 3)


# Numeric invariance

def test_hankel_is_binomial_invariant_numerically():
    targets = [binomial_family(m) for m in MU_VALUES]
    report = check_invariance_numeric(targets, hankel_family(), samples=100,
                                      terms=4, seed=7)
    assert report.verdict == 'invariant'
    assert report.samples == 100


def test_hankel_is_invariant_under_the_inverse_map():
    target = inverse_family(binomial_family(2), 8)
    assert target.agrees_with(binomial_family(-2), 9)
    report = check_invariance_numeric(target, hankel_family(), samples=10,
                                      terms=3, seed=8)
    assert report.invariant


def test_psum_is_not_binomial_invariant():
    report = check_invariance_numeric(binomial_family(1), psum_family(),
                                      samples=20, terms=4, seed=3)
    assert report.verdict == 'not-invariant'
    sequence, n = report.witnesses[0]
    assert n >= 1
    assert len(sequence) >= 5


def test_identity_target_is_invariant():
    report = check_invariance_numeric(identity_family(), cayley_family(),
                                      samples=10, terms=3, seed=1)
    assert report.invariant


def test_no_samples_is_inconclusive():
    report = check_invariance_numeric(binomial_family(1), hankel_family(),
                                      samples=0, terms=2, seed=1)
    assert report.verdict == 'inconclusive'


def test_numeric_check_needs_values():
    with pytest.raises(errors.InvarError):
        check_invariance_numeric(binomial_family(), hankel_family(),
                                 samples=1, terms=1, seed=1)


def test_numeric_check_is_reproducible():
    def run():
        return check_invariance_numeric(binomial_family(1), psum_family(),
                                        samples=5, terms=3, seed=11)
    assert run().to_json() == run().to_json()


@pytest.mark.parametrize('family, terms', [
    (resultant_family(), 3),
    (discriminant_family(), 2),
])
def test_resultant_and_discriminant_are_binomial_invariant(family, terms):
    targets = [binomial_family(m) for m in MU_VALUES]
    report = check_invariance_numeric(targets, family, samples=50,
                                      terms=terms, seed=5)
    assert report.invariant


# Problem 1

def test_problem1_psum():
    result = solve_problem1(psum_family(), 4)
    d = result.derivation
    for n in range(9):
        expected = sum((Polynomial.var(k).scale(Fraction(1, n - k))
                        for k in range(n)), Polynomial.zero())
        assert d.image(n) == expected
    for n in range(9):
        for k in range(1, n + 1):
            assert result.psi.coefficient(n, k) == \
                (-1) ** (n + k) * math.factorial(k) * stirling2(n, k)
    psi_hankel = result.families[2]
    assert psi_hankel.poly(1) == P('-a1^2 - a1*a0 + 2*a2*a0')
    assert check_invariance_symbolic(d, psi_hankel, 2).invariant


def test_problem1_sum():
    result = solve_problem1(sum_family(), 4)
    for n in range(9):
        for k in range(1, n + 1):
            assert result.psi.coefficient(n, k) == \
                math.factorial(k) * stirling2(n, k)
    assert check_invariance_symbolic(result.derivation, result.families[2],
                                     2).invariant


def test_problem1_identity():
    result = solve_problem1(identity_family(), 3)
    assert result.derivation.is_zero_upto(6)
    assert result.psi.table() == \
        [[1 if i == n else 0 for i in range(n + 1)] for n in range(7)]
    x0, cayley, hankel = result.families
    assert x0.poly(0) == P('x0')
    assert cayley.poly(3) == cayley_generator(3)
    assert hankel.poly(2) == catalecticant(2)


def test_problem1_families_survive_numeric_checks():
    result = solve_problem1(psum_family(), 2)
    for family in result.families:
        report = check_invariance_numeric(psum_family(), family, samples=20,
                                          terms=2, seed=2)
        assert report.invariant, family.name


def test_problem1_json():
    obj = solve_problem1(psum_family(), 2).to_json()
    assert obj['transform'] == 'psum'
    assert obj['derivation']['images']['x2'] == 'x1 + 1/2*x0'
    assert [f['name'] for f in obj['families']] == \
        ['psi_x0', 'psi_cayley', 'psi_hankel']


def test_problem1_needs_a_triangular_family():
    with pytest.raises(errors.NotTriangularError):
        solve_problem1(hankel_family(), 2)


# Problem 2

def _in_span(derivations, bound, d):
    ansatz = DerivationAnsatz(bound)
    target = ansatz.vector(d)
    columns = [ansatz.vector(b) for b in derivations]
    a = [[col[i] for col in columns] for i in range(len(target))]
    return solve_rational_linear(a, target, cols=len(columns)).consistent


def test_problem2_alternating_convolution():
    result = solve_problem2(alt_convolution_family(), 3, ansatz_bound=6)
    assert result.bound == 6
    basis = [d for d, _ in result.pairs]
    shift = Derivation({n: Polynomial.var(n - 1) for n in range(1, 7)},
                       bound=6)
    assert _in_span(basis, 6, shift)
    for d, phi in result.pairs:
        for n in range(7):
            assert phi.image(n) == d.exp_apply(Polynomial.var(n))


def test_exp_of_shift_is_the_rational_transformation():
    shift = Derivation({n: Polynomial.var(n - 1) for n in range(1, 7)},
                       bound=6)
    phi = exp_endomorphism(shift, 6)
    for n in range(7):
        expected = sum((Polynomial.var(n - k).scale(
            Fraction(1, math.factorial(k))) for k in range(n + 1)),
            Polynomial.zero())
        assert phi.image(n) == expected


def test_problem2_constant_family():
    x0 = TransformFamily.from_polys('x0', lambda n: P('x0'),
                                    prefix_need=lambda n: 3)
    result = solve_problem2(x0, 2)
    assert len(result.pairs) == DerivationAnsatz(3).unknown_count()


def test_problem2_hankel():
    result = solve_problem2(hankel_family(), 2, ansatz_bound=4)
    bounded = Derivation({n: W.image(n) for n in range(5)}, bound=4)
    assert _in_span([d for d, _ in result.pairs], 4, bounded)


def test_problem2_json():
    obj = solve_problem2(alt_convolution_family(), 1, ansatz_bound=2) \
        .to_json()
    assert obj['family'] == 'altconv'
    assert obj['ansatz_bound'] == 2
    for entry in obj['basis']:
        assert set(entry) == {'derivation', 'transformation'}


def test_problem2_respects_nilpotency_cap():
    with pytest.raises(errors.NilpotencyCapExceeded):
        solve_problem2(alt_convolution_family(), 3, ansatz_bound=6, cap=1)


def test_problem2_needs_one_sequence():
    with pytest.raises(errors.ArityError):
        solve_problem2(transvectant_family(), 2)


# Values at the all-ones sequence

def test_ones_check_cayley():
    report = ones_vanishing_check(cayley_family(), 4)
    assert [v for _, v in report.values] == [0] * 5
    assert report.nonvanishing == []


def test_ones_check_hankel():
    report = ones_vanishing_check(hankel_family(), 3)
    assert [v for _, v in report.values] == [1, 0, 0, 0]
    assert report.nonvanishing == [0]


def test_ones_check_diagonal_transvectant():
    report = ones_vanishing_check(transvectant_family(diagonal=True), 6)
    values = dict(report.values)
    assert values[0] == 1
    for n in (2, 4, 6):
        assert values[n] == 0
