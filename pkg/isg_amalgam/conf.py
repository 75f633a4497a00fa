"""Environment driven defaults."""

import logging
import os

DEBUGLOG = os.environ.get('ISG_DEBUGLOG', 'False') == 'True'
ENUMERATION_BOUND = int(os.environ.get('ISG_ENUMERATION_BOUND', '10000'))
WORKERS = int(os.environ.get('ISG_WORKERS', '4'))
ORACLE_MAX_LENGTH = int(os.environ.get('ISG_ORACLE_MAX_LENGTH', '12'))


def setup_logger(debug=False):
    """Enable debug logging."""

    if DEBUGLOG or debug:
        logging.basicConfig(
            level=logging.DEBUG,
            format='%(asctime)-15s %(levelname)-8s %(name)s %(message)s',
        )
        # Third party parsers are noisy on debug level.
        for name in ['matplotlib', 'sympy']:
            logging.getLogger(name).setLevel(logging.WARNING)
