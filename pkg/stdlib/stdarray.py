"""
stdarray.py

The stdarray module defines functions related to creating and writing
one- and two-dimensional arrays. Elements are usually Fraction or
Polynomial objects, so writing goes through str() and columns are
padded to a common width.
"""


# =======================================================================
# Array creation functions
# =======================================================================

def create_1d(length, value=None):
    """
    Create and return a 1D array containing length elements, each
    initialized to value.
    """
    return [value] * length


# -----------------------------------------------------------------------

def create_2d(row_count, col_count, value=None):
    """
    Create and return a 2D array having row_count rows and col_count
    columns, with each element initialized to value.
    """
    a = [None] * row_count

    for row in range(row_count):
        a[row] = [value] * col_count

    return a


# -----------------------------------------------------------------------

def copy_2d(a):
    """
    Return a row-by-row copy of two-dimensional array a.
    """
    return [row[:] for row in a]


# =======================================================================
# Array writing functions
# =======================================================================

def format_1d(a, sep=', '):
    """
    Return the elements of array a as one line of text.
    """
    return sep.join(str(element) for element in a)


# -----------------------------------------------------------------------

def format_2d(a, blank=''):
    """
    Return two-dimensional array a as right-aligned text columns, one
    line per row. None elements are written as blank; rows may be
    ragged, as they are for triangular tables.
    """
    cells = [[blank if element is None else str(element)
              for element in row] for row in a]
    col_count = max((len(row) for row in cells), default=0)
    widths = [0] * col_count
    for row in cells:
        for col, text in enumerate(row):
            widths[col] = max(widths[col], len(text))

    lines = []
    for row in cells:
        lines.append(' '.join(text.rjust(widths[col])
                              for col, text in enumerate(row)).rstrip())
    return '\n'.join(lines)


# =======================================================================

def _main():
    """
    For testing.
    """
    from fractions import Fraction
    a = create_2d(3, 3, None)
    for row in range(3):
        for col in range(row + 1):
            a[row][col] = Fraction(1, row - col + 1)
    print(format_2d(a))


if __name__ == '__main__':
    _main()

# -----------------------------------------------------------------------

# python -m stdlib.stdarray
#   1
# 1/2   1
# 1/3 1/2 1
