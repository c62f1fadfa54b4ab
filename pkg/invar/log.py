#-----------------------------------------------------------------------
# log.py
#-----------------------------------------------------------------------

"""
Logging for the invar package. Library modules ask for a child of the
'invar' logger; the command-line front end decides where it goes and
whether records are written as JSON objects or as plain text.
"""

import logging
import sys

from pythonjsonlogger import jsonlogger

ROOT = 'invar'

_PLAIN_FORMAT = '%(levelname)s %(name)s: %(message)s'
_JSON_FORMAT = '%(asctime)s %(levelname)s %(name)s %(message)s'

#-----------------------------------------------------------------------

def get_logger(name):
    """
    Return the logger for module name. Names outside the invar package
    are hung under the 'invar' logger.
    """
    if name == ROOT or name.startswith(ROOT + '.'):
        return logging.getLogger(name)
    return logging.getLogger(ROOT + '.' + name)

#-----------------------------------------------------------------------

def configure(level='WARNING', json_output=False, stream=None):
    """
    Install a single handler on the 'invar' logger writing to stream
    (sys.stderr by default). A second call replaces the first handler.
    """
    logger = logging.getLogger(ROOT)
    for handler in list(logger.handlers):
        if getattr(handler, '_invar_handler', False):
            logger.removeHandler(handler)

    handler = logging.StreamHandler(stream if stream is not None
                                    else sys.stderr)
    if json_output:
        handler.setFormatter(jsonlogger.JsonFormatter(_JSON_FORMAT))
    else:
        handler.setFormatter(logging.Formatter(_PLAIN_FORMAT))
    handler._invar_handler = True

    logger.addHandler(handler)
    logger.setLevel(level.upper() if isinstance(level, str) else level)
    logger.propagate = False
    return logger
