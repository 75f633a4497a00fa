import os
import random
import sys

import pytest

from isg_amalgam import conf

sys.path.append(
    os.path.join(
        os.path.dirname(os.path.dirname(__file__)),
        'libs',
    ),
)

conf.setup_logger()


@pytest.fixture
def rng():
    """Seeded random source for property checks."""

    return random.Random(20171)


@pytest.fixture
def table_file(tmpdir):
    """Write a Cayley table text into a temporary file."""

    def write(text, name='table.txt'):

        path = tmpdir.join(name)
        path.write(text)
        return str(path)

    return write


@pytest.fixture
def brandt_b2_text():
    """B_2 with elements 0, (1,1), (1,2), (2,1), (2,2)."""

    return '\n'.join([
        '5 zero=0',
        '0 0 0 0 0',
        '0 1 2 0 0',
        '0 0 0 1 2',
        '0 3 4 0 0',
        '0 0 0 3 4',
    ]) + '\n'
