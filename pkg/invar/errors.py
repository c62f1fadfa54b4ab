#-----------------------------------------------------------------------
# errors.py
#-----------------------------------------------------------------------

# Every failure raised by the invar library is an InvarError. The cli
# module is the only place that catches them; it reports the message
# and exits with status 2.

class InvarError(ValueError):
    pass

#-----------------------------------------------------------------------
# poly_core

class NegativeExponentError(InvarError):
    def __init__(self, exponent):
        super().__init__('negative exponent: ' + str(exponent))


class InexactDivisionError(InvarError):
    def __init__(self, detail=''):
        msg = 'inexact division'
        if detail:
            msg += ': ' + detail
        super().__init__(msg)


class NonSquareMatrixError(InvarError):
    def __init__(self, rows, cols):
        super().__init__('non-square matrix: %d x %d' % (rows, cols))


class ZeroPolynomialError(InvarError):
    def __init__(self):
        super().__init__('zero polynomial has no resultant')


class DegreeError(InvarError):
    pass


class DimensionError(InvarError):
    pass


class PolynomialSyntaxError(InvarError):

    # line and column are 1-based, as reported by the parser.
    def __init__(self, message, line=1, column=1):
        self.line = line
        self.column = column
        super().__init__('syntax error at line %d, column %d: %s'
                         % (line, column, message))

#-----------------------------------------------------------------------
# derivations and invariant_kernel

class SupportError(InvarError):
    def __init__(self, index, bound):
        self.index = index
        self.bound = bound
        super().__init__('x%d lies outside the declared support x0..x%d'
                         % (index, bound))


class NilpotencyCapExceeded(InvarError):
    def __init__(self, cap):
        self.cap = cap
        super().__init__('nilpotency cap exceeded (cap=%d)' % cap)


class NotTriangularError(InvarError):
    def __init__(self, index, detail=''):
        self.index = index
        msg = 'not in triangular form at x%d' % index
        if detail:
            msg += ': ' + detail
        super().__init__(msg)


class SymbolicCoefficientError(InvarError):
    def __init__(self, index):
        self.index = index
        super().__init__('D(x%d) has a symbolic coefficient; the intertwining '
                         'solver needs numeric coefficients (give a value, '
                         'e.g. binomial:mu=<value>)' % index)


class SingularSystemError(InvarError):
    def __init__(self, index):
        self.index = index
        super().__init__('intertwining system singular: D(x%d) has no x%d '
                         'term' % (index, index - 1))

#-----------------------------------------------------------------------
# transforms and cli

class InsufficientPrefixError(InvarError):
    def __init__(self, name, required, given):
        self.required = required
        self.given = given
        super().__init__('%s needs a sequence prefix of length %d, got %d'
                         % (name, required, given))


class ArityError(InvarError):
    pass


class UnknownTransformError(InvarError):
    def __init__(self, name, known=()):
        msg = 'unknown transform name: ' + repr(name)
        if known:
            msg += ' (known: ' + ', '.join(known) + ')'
        super().__init__(msg)


class SequenceFormatError(InvarError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = message + ' at line %d' % line
        super().__init__(message)


class ConfigError(InvarError):
    pass
