#-----------------------------------------------------------------------
# poly_core.py
#-----------------------------------------------------------------------

"""
Exact sparse multivariate polynomials over the rationals.

A variable is a pair (block, index). Block SEQ holds x0, x1, ... (the
terms a0, a1, ... of a sequence), block SEQ2 holds c0, c1, ... (a second
input sequence), and block PARAM holds the symbolic scalars mu, mu1,
mu2, ... that derivations and substitutions over the sequence variables
never touch. A monomial is a tuple of ((block, index), exponent) pairs
sorted by variable; a Polynomial maps monomials to nonzero Fractions.

The module also holds the dense pieces built on top of polynomials:
PolyMatrix (fraction-free determinants), UnivariatePoly (Sylvester
resultants and discriminants in a formal variable X), the polynomial
text grammar, and an exact rational linear-system solver.
"""

import math
import re
from fractions import Fraction

import attr
import pyparsing as pp

from invar import errors
from stdlib import stdarray

SEQ = 0
SEQ2 = 1
PARAM = -1

_BLOCK_PREFIX = {SEQ: 'x', SEQ2: 'c'}

# Largest exponent the parser accepts after '^'.
MAX_EXPONENT = 4096

#-----------------------------------------------------------------------

def var_key(index, block=SEQ):
    """
    Return the variable key for x<index> (or c<index>, mu<index>).
    An int key always means the SEQ block.
    """
    if isinstance(index, tuple):
        return index
    if index < 0:
        raise ValueError('variable index must be >= 0, got %d' % index)
    return (block, index)


def var_name(var):
    block, index = var
    if block == PARAM:
        return 'mu' if index == 0 else 'mu%d' % index
    return _BLOCK_PREFIX[block] + str(index)

#-----------------------------------------------------------------------
# Monomials

def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for v, e in m2:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def _mono_div(m1, m2):
    # Return m1 / m2, or None if m2 does not divide m1.
    exps = dict(m1)
    for v, e in m2:
        left = exps.get(v, 0) - e
        if left < 0:
            return None
        if left == 0:
            del exps[v]
        else:
            exps[v] = left
    return tuple(sorted(exps.items()))


def _mono_degree(m):
    return sum(e for _, e in m)


# Graded order, then lexicographic with larger variables first. Sorting
# by this key in reverse gives the canonical printing order.
def _order_key(m):
    return (_mono_degree(m), tuple(reversed(m)))


def _mono_str(m):
    parts = []
    for v, e in m:
        parts.append(var_name(v) if e == 1 else '%s^%d' % (var_name(v), e))
    return '*'.join(parts)


def _rational_str(c):
    if c.denominator == 1:
        return str(c.numerator)
    return '%d/%d' % (c.numerator, c.denominator)

#-----------------------------------------------------------------------

def _coerce(x):
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial.constant(x)
    if isinstance(x, str):
        return parse_poly(x)
    raise TypeError('cannot use %r as a polynomial' % (x,))


# A Polynomial object is an immutable element of Q[x0, x1, ..., c0, ...,
# mu, ...]. Two polynomials are equal iff their term mappings are equal.

class Polynomial:

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in dict(terms).items():
                c = Fraction(c)
                if c != 0:
                    clean[tuple(sorted((var_key(v), e)
                                       for v, e in mono if e))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, clean):
        # clean must already be canonical: sorted monomials, no zeros.
        p = cls.__new__(cls)
        p._terms = clean
        p._hash = None
        return p

    # -------------------------------------------------------------------
    # Constructors

    @classmethod
    def zero(cls):
        return cls._wrap({})

    @classmethod
    def one(cls):
        return cls._wrap({(): Fraction(1)})

    @classmethod
    def constant(cls, c):
        c = Fraction(c)
        return cls._wrap({(): c} if c != 0 else {})

    @classmethod
    def var(cls, index, block=SEQ):
        return cls._wrap({((var_key(index, block), 1),): Fraction(1)})

    @classmethod
    def c(cls, index):
        return cls.var(index, SEQ2)

    @classmethod
    def param(cls, j=0):
        return cls.var(j, PARAM)

    # -------------------------------------------------------------------
    # Inspection

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return not self._terms or (len(self._terms) == 1
                                   and () in self._terms)

    def constant_value(self):
        """
        Return the value of a constant polynomial as a Fraction.
        """
        if not self.is_constant():
            raise errors.InvarError('not a constant: ' + str(self))
        return self._terms.get((), Fraction(0))

    def terms(self):
        """
        Return the (monomial, coefficient) pairs in canonical order.
        """
        return sorted(self._terms.items(),
                      key=lambda kv: _order_key(kv[0]), reverse=True)

    def coefficient(self, mono):
        return self._terms.get(tuple(sorted(mono)), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def variables(self):
        return {v for mono in self._terms for v, _ in mono}

    def max_index(self, block=SEQ):
        """
        Return the largest index of a variable of the given block, or -1
        if no such variable occurs.
        """
        return max((v[1] for v in self.variables() if v[0] == block),
                   default=-1)

    def leading_term(self):
        mono = max(self._terms, key=_order_key)
        return mono, self._terms[mono]

    # -------------------------------------------------------------------
    # Ring operations

    def __add__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        result = dict(big)
        for mono, c in small.items():
            s = result.get(mono, 0) + c
            if s == 0:
                result.pop(mono, None)
            else:
                result[mono] = s
        return Polynomial._wrap(result)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        result = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                s = result.get(m, 0) + c1 * c2
                if s == 0:
                    result.pop(m, None)
                else:
                    result[m] = s
        return Polynomial._wrap(result)

    __rmul__ = __mul__

    def scale(self, c):
        c = Fraction(c)
        if c == 0:
            return Polynomial.zero()
        return Polynomial._wrap({m: c * v for m, v in self._terms.items()})

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise errors.NegativeExponentError(k)
        result = Polynomial.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        # Only division by a nonzero rational; see exact_divide.
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -------------------------------------------------------------------
    # Substitution and calculus

    def substitute(self, images):
        """
        Return the simultaneous substitution of images[v] for each
        variable v of self. Keys may be ints (x-variables) or variable
        keys; variables without an image are left unchanged.
        """
        table = {var_key(k): _coerce(p) for k, p in dict(images).items()}
        powers = {}

        def power(v, e):
            key = (v, e)
            if key not in powers:
                powers[key] = table[v] ** e
            return powers[key]

        result = Polynomial.zero()
        for mono, c in self._terms.items():
            kept = []
            term = Polynomial.constant(c)
            for v, e in mono:
                if v in table:
                    term = term * power(v, e)
                else:
                    kept.append((v, e))
            if kept:
                term = term * Polynomial._wrap({tuple(kept): Fraction(1)})
            result = result + term
        return result

    def partial(self, var):
        """
        Return the formal partial derivative of self with respect to the
        given variable (an int means an x-variable).
        """
        v = var_key(var)
        result = {}
        for mono, c in self._terms.items():
            exps = dict(mono)
            e = exps.get(v, 0)
            if e == 0:
                continue
            if e == 1:
                del exps[v]
            else:
                exps[v] = e - 1
            m = tuple(sorted(exps.items()))
            result[m] = result.get(m, 0) + c * e
        return Polynomial._wrap({m: c for m, c in result.items() if c != 0})

    def evaluate(self, values):
        """
        Return the Fraction obtained by giving each variable the value
        values[v]; values is a mapping from variable keys (or ints for
        x-variables) to rationals.
        """
        table = {var_key(k): Fraction(x) for k, x in dict(values).items()}
        total = Fraction(0)
        for mono, c in self._terms.items():
            term = c
            for v, e in mono:
                if v not in table:
                    raise errors.InvarError('no value given for '
                                            + var_name(v))
                term *= table[v] ** e
            total += term
        return total

    def rename_block(self, source, target):
        """
        Return self with every variable of block source moved to the
        same index in block target.
        """
        def move(m):
            return tuple(sorted(((target, v[1]) if v[0] == source else v, e)
                                for v, e in m))
        return Polynomial._wrap({move(m): c for m, c in self._terms.items()})

    # -------------------------------------------------------------------

    def __str__(self):
        return print_poly(self)

    def __repr__(self):
        return 'Polynomial(%r)' % print_poly(self)

#-----------------------------------------------------------------------

def exact_divide(f, g):
    """
    Return q with q * g == f. Raise InexactDivisionError if g does not
    divide f in the polynomial ring.
    """
    f, g = _coerce(f), _coerce(g)
    if g.is_zero():
        raise errors.InexactDivisionError('division by the zero polynomial')
    if g.is_constant():
        return f.scale(Fraction(1) / g.constant_value())

    lead_mono, lead_c = g.leading_term()
    g_terms = list(g._terms.items())
    remainder = dict(f._terms)
    quotient = {}
    while remainder:
        mono = max(remainder, key=_order_key)
        q_mono = _mono_div(mono, lead_mono)
        if q_mono is None:
            raise errors.InexactDivisionError(
                'leading term %s is not a multiple of %s'
                % (_mono_str(mono) or '1', _mono_str(lead_mono)))
        q_c = remainder[mono] / lead_c
        quotient[q_mono] = q_c
        for g_mono, g_c in g_terms:
            m = _mono_mul(q_mono, g_mono)
            s = remainder.get(m, 0) - q_c * g_c
            if s == 0:
                remainder.pop(m, None)
            else:
                remainder[m] = s
    return Polynomial._wrap(quotient)

#-----------------------------------------------------------------------
# Matrices of polynomials

class PolyMatrix:

    # Construct a matrix from a list of equal-length rows. Entries are
    # coerced to Polynomial objects.
    def __init__(self, rows):
        rows = [list(row) for row in rows]
        if rows and any(len(row) != len(rows[0]) for row in rows):
            raise errors.DimensionError('ragged matrix rows')
        self._rows = [[_coerce(x) for x in row] for row in rows]
        self.rows = len(self._rows)
        self.cols = len(self._rows[0]) if self._rows else 0

    @classmethod
    def hankel(cls, entries, n):
        """
        Return the (n+1) x (n+1) Hankel matrix [entries[i+j]].
        """
        a = stdarray.create_2d(n + 1, n + 1)
        for i in range(n + 1):
            for j in range(n + 1):
                a[i][j] = entries[i + j]
        return cls(a)

    @classmethod
    def identity(cls, n):
        a = stdarray.create_2d(n, n, 0)
        for i in range(n):
            a[i][i] = 1
        return cls(a)

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def minor(self, row, col):
        return PolyMatrix([r[:col] + r[col + 1:]
                           for i, r in enumerate(self._rows) if i != row])

    def _require_square(self):
        if self.rows != self.cols:
            raise errors.NonSquareMatrixError(self.rows, self.cols)

    def determinant(self):
        """
        Return the determinant, computed by fraction-free Bareiss
        elimination. Every division is exact.
        """
        self._require_square()
        n = self.rows
        if n == 0:
            return Polynomial.one()
        m = stdarray.copy_2d(self._rows)
        sign = 1
        prev = Polynomial.one()
        for k in range(n - 1):
            if m[k][k].is_zero():
                swap = next((i for i in range(k + 1, n)
                             if not m[i][k].is_zero()), None)
                if swap is None:
                    return Polynomial.zero()
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            pivot = m[k][k]
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = exact_divide(pivot * m[i][j]
                                           - m[i][k] * m[k][j], prev)
            prev = pivot
        return m[n - 1][n - 1] if sign > 0 else -m[n - 1][n - 1]

    def cofactor_determinant(self):
        """
        Return the determinant by cofactor expansion along the first
        row. Exponential time; kept as a reference for determinant().
        """
        self._require_square()
        n = self.rows
        if n == 0:
            return Polynomial.one()
        if n == 1:
            return self._rows[0][0]
        total = Polynomial.zero()
        for j in range(n):
            entry = self._rows[0][j]
            if entry.is_zero():
                continue
            term = entry * self.minor(0, j).cofactor_determinant()
            total = total + term if j % 2 == 0 else total - term
        return total

    def __str__(self):
        return stdarray.format_2d(self._rows)

#-----------------------------------------------------------------------
# Univariate polynomials in a formal variable X

def sylvester_matrix(p, q):
    """
    Return the Sylvester matrix of the coefficient lists p and q
    (leading coefficient first), taken at their formal degrees.
    """
    m, n = len(p) - 1, len(q) - 1
    size = m + n
    a = stdarray.create_2d(size, size, 0)
    for row in range(n):
        for i, c in enumerate(p):
            a[row][row + i] = c
    for row in range(m):
        for i, c in enumerate(q):
            a[n + row][row + i] = c
    return PolyMatrix(a)


def binary_form_coeffs(entries, n, scale=1):
    """
    Return the coefficient list of scale * sum C(n,i) entries[i] X^(n-i),
    leading coefficient first, at formal degree n.
    """
    return [_coerce(entries[i]).scale(Fraction(scale) * math.comb(n, i))
            for i in range(n + 1)]


def formal_resultant(p, q):
    return sylvester_matrix(p, q).determinant()


def formal_discriminant(p):
    """
    Return (-1)^(d(d-1)/2) * Res(p, p') / p[0] for the coefficient list p
    of formal degree d >= 2. The division by p[0] is carried out by
    expanding the Sylvester determinant along its first column, whose
    only nonzero entries are p[0] and d*p[0], so a vanishing leading
    coefficient needs no special case.
    """
    d = len(p) - 1
    if d < 2:
        raise errors.DegreeError('discriminant needs degree >= 2, got %d'
                                 % d)
    dp = [_coerce(c) * (d - i) for i, c in enumerate(p[:-1])]
    s = sylvester_matrix(p, dp)
    reduced = s.minor(0, 0).determinant()
    other = s.minor(d - 1, 0).determinant().scale(d)
    reduced = reduced - other if d % 2 == 0 else reduced + other
    return reduced if (d * (d - 1) // 2) % 2 == 0 else -reduced


# A UnivariatePoly object is c0*X^d + c1*X^(d-1) + ... + cd with
# Polynomial coefficients; c0 is nonzero unless all coefficients are.

class UnivariatePoly:

    def __init__(self, coeffs):
        coeffs = [_coerce(c) for c in coeffs]
        while coeffs and coeffs[0].is_zero():
            coeffs.pop(0)
        self.coeffs = tuple(coeffs)

    @classmethod
    def binary_form(cls, entries, n, scale=1):
        return cls(binary_form_coeffs(entries, n, scale))

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __str__(self):
        d = self.degree()
        parts = ['(%s)*X^%d' % (c, d - i) for i, c in enumerate(self.coeffs)]
        return ' + '.join(parts) if parts else '0'


def resultant(p, q):
    """
    Return the resultant in X of the univariate polynomials p and q: the
    determinant of their Sylvester matrix.
    """
    if p.is_zero() or q.is_zero():
        raise errors.ZeroPolynomialError()
    return formal_resultant(p.coeffs, q.coeffs)


def discriminant(p):
    if p.is_zero():
        raise errors.ZeroPolynomialError()
    return formal_discriminant(p.coeffs)

#-----------------------------------------------------------------------
# Text grammar
#
#   expr     := sign? term (sign term)*
#   term     := factor ('*' factor)*
#   factor   := atom ('^' nat)?
#   atom     := rational | var | '(' expr ')'
#   var      := ('x'|'a') nat | 'c' nat | 'mu' nat?
#   rational := sign? nat ('/' nat)?
#
# Whitespace between tokens is insignificant.

def print_poly(f):
    """
    Return the canonical text of f: graded order with larger variables
    first, variables ascending inside each term.
    """
    if f.is_zero():
        return '0'
    out = []
    for i, (mono, c) in enumerate(f.terms()):
        body = _mono_str(mono)
        size = abs(c)
        if not body:
            text = _rational_str(size)
        elif size == 1:
            text = body
        else:
            text = _rational_str(size) + '*' + body
        if i == 0:
            out.append('-' + text if c < 0 else text)
        else:
            out.append((' - ' if c < 0 else ' + ') + text)
    return ''.join(out)


_VARIABLE = r'mu\d*|[xac]\d+'
_TOKEN = re.compile(r'\s*([A-Za-z_]\w*|\d+|\S)')


def _action_error(s, loc, message):
    return errors.PolynomialSyntaxError(message, pp.lineno(loc, s),
                                        pp.col(loc, s))


def _syntax_message(text, loc):
    match = _TOKEN.match(text, loc)
    if match is None:
        return 'unexpected end of input'
    token = match.group(1)
    if token[0].isalpha() and not re.fullmatch(_VARIABLE, token):
        return 'unknown token %r' % token
    return 'unexpected token %r' % token


def _var_action(tokens):
    name = tokens[0]
    if name.startswith('mu'):
        return Polynomial.param(int(name[2:] or 0))
    if name[0] == 'c':
        return Polynomial.var(int(name[1:]), SEQ2)
    return Polynomial.var(int(name[1:]))


def _rational_action(s, loc, tokens):
    den = int(tokens.get('den', 1))
    if den == 0:
        raise _action_error(s, loc, 'zero denominator')
    value = Fraction(int(tokens['num']), den)
    if tokens.get('sign') == '-':
        value = -value
    return Polynomial.constant(value)


def _factor_action(s, loc, tokens):
    if len(tokens) == 1:
        return tokens[0]
    exponent = int(tokens[2])
    if exponent > MAX_EXPONENT:
        raise _action_error(s, loc, 'exponent overflow')
    return tokens[0] ** exponent


def _term_action(tokens):
    product = tokens[0]
    for factor in tokens[1:]:
        product = product * factor
    return product


def _expr_action(tokens):
    total = Polynomial.zero()
    sign = 1
    for tok in tokens:
        if isinstance(tok, str):
            sign = -1 if tok == '-' else 1
        else:
            total = total + tok if sign > 0 else total - tok
            sign = 1
    return total


def _make_grammar():
    nat = pp.Word(pp.nums)
    sign = pp.one_of('+ -')
    rational = (pp.Optional(sign('sign')) + nat('num')
                + pp.Optional(pp.Suppress('/') - nat('den')))
    rational.set_parse_action(_rational_action)
    variable = pp.Regex(_VARIABLE)
    variable.set_parse_action(_var_action)
    lpar = pp.Suppress('(')
    rpar = pp.Suppress(')')

    # no backtracking past a '-' join
    expr = pp.Forward()
    atom = rational | variable | lpar - expr - rpar
    factor = (atom + pp.Optional(pp.Literal('^') - nat)).set_parse_action(
        _factor_action)
    term = (factor + pp.ZeroOrMore(pp.Suppress('*') - factor))
    term.set_parse_action(_term_action)
    expr <<= (pp.Optional(sign) + term
              + pp.ZeroOrMore(sign - term)).set_parse_action(_expr_action)
    return expr


_GRAMMAR = _make_grammar()


def parse_poly(text):
    """
    Return the Polynomial written in text. Raise PolynomialSyntaxError,
    carrying the line and column, on malformed input.
    """
    if not isinstance(text, str):
        raise TypeError('parse_poly expects a string')
    try:
        return _GRAMMAR.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as e:
        raise errors.PolynomialSyntaxError(_syntax_message(text, e.loc),
                                           e.lineno, e.col) from None

#-----------------------------------------------------------------------
# Rational linear systems

@attr.s(frozen=True)
class LinearSolution:
    """
    Solution set of A x = b: particular + span(null_space), or no
    solution when particular is None.
    """
    particular = attr.ib()
    null_space = attr.ib(converter=tuple)

    @property
    def consistent(self):
        return self.particular is not None

    @property
    def unique(self):
        return self.consistent and not self.null_space


def solve_rational_linear(a, b, cols=None):
    """
    Solve A x = b exactly over the rationals by reduction to row echelon
    form. cols gives the number of unknowns when A has no rows.
    """
    rows = len(a)
    if cols is None:
        if rows == 0:
            raise errors.DimensionError('cols is required when A is empty')
        cols = len(a[0])
    if any(len(row) != cols for row in a):
        raise errors.DimensionError('A is not %d columns wide' % cols)
    if len(b) != rows:
        raise errors.DimensionError('b has %d entries, A has %d rows'
                                    % (len(b), rows))

    m = [[Fraction(x) for x in row] + [Fraction(y)]
         for row, y in zip(a, b)]
    pivots = []
    r = 0
    for col in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][col] != 0:
                factor = m[i][col]
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == rows:
            break

    if any(m[i][cols] != 0 for i in range(r, rows)):
        return LinearSolution(None, ())

    particular = stdarray.create_1d(cols, Fraction(0))
    for i, col in enumerate(pivots):
        particular[col] = m[i][cols]

    free = [col for col in range(cols) if col not in pivots]
    basis = []
    for f in free:
        v = stdarray.create_1d(cols, Fraction(0))
        v[f] = Fraction(1)
        for i, col in enumerate(pivots):
            v[col] = -m[i][f]
        basis.append(tuple(v))
    return LinearSolution(tuple(particular), basis)

#-----------------------------------------------------------------------

def _main():
    f = parse_poly('x0*x2 - x1^2')
    print(f)
    print(f ** 2)
    print(PolyMatrix.hankel([Polynomial.var(i) for i in range(5)], 2)
          .determinant())
    p = UnivariatePoly.binary_form([Polynomial.var(i) for i in range(3)],
                                   2, Fraction(1, 4))
    print(discriminant(p))


if __name__ == '__main__':
    _main()

#-----------------------------------------------------------------------

# python -m invar.poly_core
# x0*x2 - x1^2
# x0^2*x2^2 - 2*x0*x1^2*x2 + x1^4
# x0*x2*x4 - x1^2*x4 - x0*x3^2 + 2*x1*x2*x3 - x2^3
# -1/4*x0*x2 + 1/4*x1^2
