from .engine import Amalgam
from .graph import build_block_graph, decompose
from .reilly import ReillySemigroup
from .semigroup import CayleyTable, validate

__version__ = '0.1.0'

__all__ = ['Amalgam', 'CayleyTable', 'ReillySemigroup', 'build_block_graph',
           'decompose', 'validate']
