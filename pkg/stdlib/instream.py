"""
instream.py

The instream module defines the InStream class.
"""

# -----------------------------------------------------------------------

import io
import sys


# -----------------------------------------------------------------------

class InStream:
    """
    An InStream object wraps around a text file, a string, or sys.stdin,
    and supports reading from that stream line by line. It keeps the
    number of the last line read, so callers can report where bad input
    was found.
    """

    # -------------------------------------------------------------------

    def __init__(self, file_name=None, text=None):
        """
        Construct self to wrap around a stream. The stream is the file
        whose name is given as file_name, the string text, or sys.stdin
        by default. The file name '-' also means sys.stdin.
        """
        self._buffer = None
        self._line_number = 0
        self._owned = False

        if text is not None:
            self._stream = io.StringIO(text)
        elif file_name is None or file_name == '-':
            self._stream = sys.stdin
        else:
            try:
                self._stream = open(file_name, 'r', encoding='utf-8')
            except OSError:
                raise IOError('No such file: ' + file_name)
            self._owned = True

    # -------------------------------------------------------------------

    def line_number(self):
        """
        Return the 1-based number of the line most recently returned by
        read_line(), or 0 if no line has been read.
        """
        return self._line_number

    # -------------------------------------------------------------------

    def has_next_line(self):
        """
        Return True iff the stream wrapped by self has a next line.
        """
        if self._buffer is None:
            self._buffer = self._stream.readline()
        return self._buffer != ''

    # -------------------------------------------------------------------

    def read_line(self):
        """
        Read and return as a string the next line of the stream wrapped
        by self, without its end-of-line mark. Raise an EOFError if there
        is no next line.
        """
        if not self.has_next_line():
            raise EOFError()
        s = self._buffer
        self._buffer = None
        self._line_number += 1
        return s.rstrip('\r\n')

    # -------------------------------------------------------------------

    def numbered_lines(self):
        """
        Iterate over (line number, line) pairs for the remaining lines.
        """
        while self.has_next_line():
            line = self.read_line()
            yield self._line_number, line

    # -------------------------------------------------------------------

    def close(self):
        """
        Close the stream wrapped by self, unless it is sys.stdin.
        """
        if self._owned:
            self._stream.close()
            self._owned = False

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()
        return False


# =======================================================================
# For Testing
# =======================================================================

def _main():
    """
    For testing. Write each line of the file named by the optional
    command-line argument (standard input by default) with its number.
    """
    file_name = sys.argv[1] if len(sys.argv) > 1 else None
    with InStream(file_name) as stream:
        for number, line in stream.numbered_lines():
            print('%4d  %s' % (number, line))


if __name__ == '__main__':
    _main()
