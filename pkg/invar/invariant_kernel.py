#-----------------------------------------------------------------------
# invariant_kernel.py
#-----------------------------------------------------------------------

"""
Kernels of Weitzenbock derivations.

The kernel of the basic Weitzenbock derivation is generated, after
inverting x0, by x0 and the Cayley polynomials z2, z3, .... A triangular
linear derivation D whose D(x_j) always involves x_(j-1) is carried onto
the basic one by a linear change of basis Psi, and Psi moves the Cayley
generators (and every catalecticant) into the kernel of D. When no such
D is known, the method of indefinite coefficients finds every
triangular linear derivation killing a given list of polynomials.
"""

import functools
import math
import threading
from fractions import Fraction

import attr

from invar import errors
from invar.derivations import Derivation, basic_weitzenbock
from invar.log import get_logger
from invar.poly_core import SEQ, SEQ2, PolyMatrix, Polynomial, \
    print_poly, solve_rational_linear
from stdlib import stdarray

log = get_logger(__name__)

#-----------------------------------------------------------------------

def cayley_generator(k, a=None):
    """
    Return the Cayley polynomial
    z_k = sum_(i=0..k-2) (-1)^i C(k,i) x_(k-i) x1^i x0^(k-i-1)
          + (k-1) (-1)^(k+1) x1^k,
    which the basic Weitzenbock derivation kills. With a (anything
    indexable by variable number) the x_i are replaced by a[i].
    """
    if k < 2:
        raise errors.InvarError('Cayley generators start at k = 2, got %d'
                                % k)
    if a is None:
        a = [Polynomial.var(i) for i in range(k + 1)]
    x0, x1 = a[0], a[1]
    z = Polynomial.zero()
    for i in range(k - 1):
        term = a[k - i] * x1 ** i * x0 ** (k - i - 1)
        z = z + term.scale((-1) ** i * math.comb(k, i))
    return z + (x1 ** k).scale((k - 1) * (-1) ** (k + 1))

#-----------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def catalecticant(n):
    """
    Return h_n, the determinant of the (n+1) x (n+1) Hankel matrix
    [x_(i+j)].
    """
    entries = [Polynomial.var(i) for i in range(2 * n + 1)]
    return PolyMatrix.hankel(entries, n).determinant()

#-----------------------------------------------------------------------
# Stirling numbers of the second kind. Rows are appended under a lock;
# a row, once stored, never changes.

_stirling_rows = [(1,)]
_stirling_lock = threading.Lock()


def _stirling_row(n):
    if n < len(_stirling_rows):
        return _stirling_rows[n]
    with _stirling_lock:
        while len(_stirling_rows) <= n:
            prev = _stirling_rows[-1]
            m = len(_stirling_rows)
            row = [0] * (m + 1)
            for k in range(1, m + 1):
                below = prev[k] if k < len(prev) else 0
                row[k] = k * below + prev[k - 1]
            _stirling_rows.append(tuple(row))
    return _stirling_rows[n]


def stirling2(n, k):
    """
    Return S(n, k), the number of partitions of an n-set into k blocks.
    """
    if n < 0 or k < 0:
        raise ValueError('stirling2 needs n, k >= 0')
    if k > n:
        return 0
    return _stirling_row(n)[k]

#-----------------------------------------------------------------------

def _check_table(instance, attribute, value):
    if not value or value[0] != (Fraction(1),):
        raise errors.InvarError('a change of basis must fix x0')
    for n, row in enumerate(value):
        if len(row) != n + 1:
            raise errors.DimensionError('row %d has %d entries'
                                        % (n, len(row)))
        if row[n] == 0:
            raise errors.InvarError('zero diagonal entry at row %d' % n)


def _freeze_table(rows):
    return tuple(tuple(Fraction(c) for c in row) for row in rows)


@attr.s(frozen=True)
class LinearChangeOfBasis:
    """
    Psi(x_n) = sum_(i<=n) coeffs[n][i] x_i for n = 0..bound, a
    lower-triangular invertible linear map.
    """
    coeffs = attr.ib(converter=_freeze_table, validator=_check_table)

    @property
    def bound(self):
        return len(self.coeffs) - 1

    @classmethod
    def identity(cls, bound):
        return cls([[1 if i == n else 0 for i in range(n + 1)]
                    for n in range(bound + 1)])

    def coefficient(self, n, i):
        return self.coeffs[n][i] if i <= n else Fraction(0)

    def image(self, n):
        if n > self.bound:
            raise errors.SupportError(n, self.bound)
        return Polynomial({(((SEQ, i), 1),): c
                           for i, c in enumerate(self.coeffs[n])})

    def push_through(self, f):
        """
        Return f with x_n replaced by Psi(x_n).
        """
        top = max(f.max_index(SEQ), f.max_index(SEQ2))
        if top > self.bound:
            raise errors.SupportError(top, self.bound)
        return f.substitute({n: self.image(n)
                             for n in range(f.max_index(SEQ) + 1)})

    def table(self):
        return [list(row) for row in self.coeffs]

    def to_json(self):
        return {'bound': self.bound,
                'rows': [[str(c) for c in row] for row in self.coeffs]}

    def __str__(self):
        return stdarray.format_2d(self.coeffs)


def push_through(psi, f):
    return psi.push_through(f)

#-----------------------------------------------------------------------

def kernel_membership(d, f):
    return d.apply(f).is_zero()


def verify_intertwining(d, psi):
    """
    Return the list of n <= bound with D(Psi(x_n)) != n * Psi(x_(n-1)).
    """
    bad = []
    for n in range(1, psi.bound + 1):
        if d.apply(psi.image(n)) != psi.image(n - 1).scale(n):
            bad.append(n)
    return bad


def intertwining_solve(d, bound):
    """
    Return the change of basis Psi with D o Psi = Psi o W on x0..x<bound>,
    W the basic Weitzenbock derivation, normalized by Psi(x0) = x0 and
    no x0 term in Psi(x_n) for n >= 1.

    Row n solves, for k = 0..n-1,
        sum_(k<i<=n) c[n][i] * d[i][k] = n * c[n-1][k]
    which is triangular with diagonal d[k+1][k].
    """
    lower = [d.lower_coefficients(n) for n in range(bound + 1)]
    for j in range(1, bound + 1):
        if lower[j].get(j - 1, 0) == 0:
            raise errors.SingularSystemError(j)

    rows = [[Fraction(1)]]
    for n in range(1, bound + 1):
        a = stdarray.create_2d(n, n, Fraction(0))
        b = stdarray.create_1d(n, Fraction(0))
        for k in range(n):
            for i in range(k + 1, n + 1):
                a[k][i - 1] = lower[i].get(k, Fraction(0))
            b[k] = n * rows[n - 1][k]
        solution = solve_rational_linear(a, b)
        if not solution.unique:
            raise errors.SingularSystemError(n)
        rows.append([Fraction(0)] + list(solution.particular))
        log.debug('intertwining row', extra={'row': n,
                                             'coeffs': [str(c) for c in rows[-1]]})

    psi = LinearChangeOfBasis(rows)
    bad = verify_intertwining(d, psi)
    if bad:
        raise errors.InvarError('intertwining check failed at x%d' % bad[0])
    log.info('intertwining map solved', extra={'bound': bound})
    return psi

#-----------------------------------------------------------------------

@attr.s(frozen=True)
class KernelPresentation:
    derivation = attr.ib()
    psi = attr.ib()
    generators = attr.ib(converter=tuple)
    localized = attr.ib(default='psi_x0')

    def to_json(self):
        return {'derivation': self.derivation.to_json(self.psi.bound),
                'generators': [{'name': name, 'poly': print_poly(p)}
                               for name, p in self.generators],
                'localized': self.localized}


def kernel_presentation(d, bound):
    """
    Return Psi(x0), Psi(z2), ..., Psi(z_bound) for Psi the intertwining
    map of D. Each one is checked to lie in the kernel of D.
    """
    psi = intertwining_solve(d, bound)
    generators = [('psi_x0', psi.image(0))]
    for k in range(2, bound + 1):
        generators.append(('psi_z%d' % k,
                           psi.push_through(cayley_generator(k))))
    for name, g in generators:
        if not kernel_membership(d, g):
            raise errors.InvarError('%s is not in the kernel' % name)
    return KernelPresentation(d, psi, generators)

#-----------------------------------------------------------------------

@attr.s(frozen=True)
class DerivationAnsatz:
    """
    Triangular linear derivations on x0..x<bound>:
    D(x_n) = sum_(k<n) d[n][k] x_k, with D(x0) = 0.
    """
    bound = attr.ib(validator=attr.validators.instance_of(int))
    shape = attr.ib(default='triangular-linear')

    def unknowns(self):
        return [(n, k) for n in range(1, self.bound + 1) for k in range(n)]

    def unknown_count(self):
        return self.bound * (self.bound + 1) // 2

    def instantiate(self, vector, name=None):
        images = {}
        for (n, k), c in zip(self.unknowns(), vector):
            if c != 0:
                images[n] = images.get(n, Polynomial.zero()) \
                    + Polynomial.var(k).scale(c)
        return Derivation(images, bound=self.bound, name=name)

    def vector(self, d):
        """
        Return the unknowns of D in the order of unknowns().
        """
        lower = [d.lower_coefficients(n) for n in range(self.bound + 1)]
        return [lower[n].get(k, Fraction(0)) for n, k in self.unknowns()]


def problem2_find_derivations(family, ansatz):
    """
    Return a basis of the triangular linear derivations (in the shape of
    ansatz) that kill every polynomial of family. An empty list means
    only the zero derivation does.
    """
    family = list(family)
    if not family:
        raise errors.InvarError('the family is empty')
    for f in family:
        if f.max_index(SEQ2) >= 0:
            raise errors.ArityError('the ansatz acts on one sequence only')
        if f.max_index(SEQ) > ansatz.bound:
            raise errors.SupportError(f.max_index(SEQ), ansatz.bound)

    unknowns = ansatz.unknowns()
    rows = []
    for f in family:
        columns = {}
        for j, (n, k) in enumerate(unknowns):
            piece = Polynomial.var(k) * f.partial(n)
            for mono, c in piece.terms():
                columns.setdefault(mono, {})[j] = c
        for mono in sorted(columns):
            row = stdarray.create_1d(len(unknowns), Fraction(0))
            for j, c in columns[mono].items():
                row[j] = c
            rows.append(row)
    log.debug('indefinite coefficients system',
              extra={'equations': len(rows), 'unknowns': len(unknowns)})

    solution = solve_rational_linear(rows, [0] * len(rows),
                                     cols=len(unknowns))
    basis = []
    for i, vector in enumerate(solution.null_space):
        d = ansatz.instantiate(vector, name='D%d' % (i + 1))
        for f in family:
            if not kernel_membership(d, f):
                raise errors.InvarError('basis derivation %s does not kill %s'
                                        % (d.name, f))
        basis.append(d)
    log.info('derivations found', extra={'dimension': len(basis)})
    return basis

#-----------------------------------------------------------------------

def _main():
    weitz = basic_weitzenbock()
    for k in range(2, 5):
        z = cayley_generator(k)
        print('z%d = %s   D(z%d) = %s' % (k, z, k, weitz(z)))
    print(catalecticant(2))
    print(stdarray.format_2d([[stirling2(n, k) for k in range(n + 1)]
                              for n in range(6)]))
    print(intertwining_solve(weitz, 3))


if __name__ == '__main__':
    _main()

#-----------------------------------------------------------------------

# python -m invar.invariant_kernel
# z2 = x0*x2 - x1^2   D(z2) = 0
# z3 = x0^2*x3 - 3*x0*x1*x2 + 2*x1^3   D(z3) = 0
# z4 = x0^3*x4 - 4*x0^2*x1*x3 + 6*x0*x1^2*x2 - 3*x1^4   D(z4) = 0
# x0*x2*x4 - x1^2*x4 - x0*x3^2 + 2*x1*x2*x3 - x2^3
# 1
# 0 1
# 0 1  1
# 0 1  3  1
# 0 1  7  6  1
# 0 1 15 25 10 1
# 1
# 0 1
# 0 0 1
# 0 0 0 1
