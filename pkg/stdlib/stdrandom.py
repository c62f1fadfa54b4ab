"""
stdrandom.py

The stdrandom module defines functions related to pseudo-random
numbers. Each function draws from an explicit random.Random object, so
independent samples can be generated in any order and still be
reproduced from one master seed.
"""

#-----------------------------------------------------------------------

import random
from fractions import Fraction

#-----------------------------------------------------------------------

def generator(seed, *path):
    """
    Return a random.Random object for the stream named by seed and the
    optional path components (for example a sample number). The same
    seed and path always give the same stream; different paths give
    unrelated streams.
    """
    key = ':'.join(str(part) for part in (seed,) + path)
    return random.Random(key)

#-----------------------------------------------------------------------

def uniform_int(rng, lo, hi):
    """
    Return an integer chosen uniformly from the closed range [lo, hi].
    """
    return rng.randint(lo, hi)

#-----------------------------------------------------------------------

def integer_sequence(rng, length, lo=-9, hi=9):
    """
    Return a list of length Fractions, each an integer drawn uniformly
    from [lo, hi].
    """
    return [Fraction(uniform_int(rng, lo, hi)) for _ in range(length)]

#-----------------------------------------------------------------------

def _main():
    """
    For testing.
    """
    import sys
    seed = int(sys.argv[1]) if len(sys.argv) > 1 else 1
    for sample in range(3):
        rng = generator(seed, sample)
        print(' '.join(str(x) for x in integer_sequence(rng, 6)))

if __name__ == '__main__':
    _main()
