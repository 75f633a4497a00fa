"""
Brandt semigroups B_n(G), their 0-direct unions and matrix unit models.

Idempotent labels are global: the blocks of a `BlockSum` own consecutive
label ranges inside `1..N`, so two block sums over the same `N` share the
same idempotents `e_1..e_N`.  An element `(row, g, col)` therefore names its
block through its labels.
"""

import logging
from collections import namedtuple

import numpy
from cached_property import threaded_cached_property

from .exceptions import InfiniteGroupBlock, InvalidPartition, NonTrivialGroup
from .semigroup import CayleyTable, cyclic_group, validate
from .utils import ZERO
from .words import EPSILON

logger = logging.getLogger(__name__)

TRIVIAL = 'trivial'
FINITE = 'finite'
FREE = 'free'


class GroupSpec(object):
    """Group attached to a Brandt block: trivial, a finite table or free."""

    def __init__(self, kind, group=None, rank=0, name=None):

        assert kind in (TRIVIAL, FINITE, FREE), 'Unknown group kind %r' % kind
        self.kind = kind
        self.group = group
        self.rank = rank
        self.name = name

    @classmethod
    def trivial(cls):

        return cls(TRIVIAL)

    @classmethod
    def finite(cls, group, name=None):

        assert group.is_group(), 'Block groups must be groups'
        if group.n == 1:
            return cls.trivial()
        return cls(FINITE, group=group, name=name or 'G%d' % group.n)

    @classmethod
    def cyclic(cls, k):

        if k == 1:
            return cls.trivial()
        return cls(FINITE, group=cyclic_group(k), name='C%d' % k)

    @classmethod
    def free(cls, rank):

        return cls(FREE, rank=rank)

    @property
    def is_finite(self):

        return self.kind != FREE or self.rank == 0

    @property
    def is_trivial(self):

        return self.kind == TRIVIAL or (self.kind == FREE and self.rank == 0)

    @property
    def order(self):

        if self.kind == FINITE:
            return self.group.n
        if self.is_trivial:
            return 1
        return None

    @property
    def identity(self):

        if self.kind == FINITE:
            return self.group.identity
        if self.kind == FREE:
            return EPSILON
        return 0

    def elements(self):

        assert self.is_finite, 'Free groups of positive rank are infinite'
        if self.kind == FINITE:
            return list(range(self.group.n))
        return [self.identity]

    def mul(self, g, h):

        if self.kind == FINITE:
            return self.group.mul(g, h)
        if self.kind == FREE:
            return g * h
        return 0

    def inverse(self, g):

        if self.kind == FINITE:
            return self.group.inverse(g)
        if self.kind == FREE:
            return g.inverse()
        return 0

    def format_element(self, g):

        if self.kind == FINITE:
            return self.group.label(g)
        return str(g)

    @property
    def token(self):
        """Spelling in the block sum text form."""

        if self.kind == FREE:
            return 'F%d' % self.rank
        if self.kind == FINITE:
            return self.name
        return '1'

    def algebra(self, n):
        """Display of the summand M_n(C*(G))."""

        if self.is_trivial:
            return 'M_%d' % n
        if self.kind == FREE:
            if self.rank == 1:
                return 'M_%d(C*(Z))' % n
            return 'M_%d(C*(F_%d))' % (n, self.rank)
        return 'M_%d(C*(%s))' % (n, self.name)

    def __eq__(self, other):

        if not isinstance(other, GroupSpec):
            return False
        if self.is_trivial or other.is_trivial:
            return self.is_trivial and other.is_trivial
        return (self.kind, self.rank, self.group and self.group.carrier) == (
            other.kind, other.rank, other.group and other.group.carrier)

    def __ne__(self, other):

        return not self == other

    def __repr__(self):

        return 'GroupSpec(%s)' % self.token


BrandtElement = namedtuple('BrandtElement', 'row g col')

Block = namedtuple('Block', 'index size group first')


class BlockSum(object):
    """0-direct union of Brandt semigroups B_{n_i}(G_i)."""

    def __init__(self, sizes, groups=None):

        sizes = list(sizes)
        if not sizes or any(not isinstance(size, int) or size < 1
                            for size in sizes):
            raise InvalidPartition(sizes)
        if groups is None:
            groups = [GroupSpec.trivial() for _ in sizes]
        groups = list(groups)
        assert len(groups) == len(sizes), 'One group per block'
        self.blocks = []
        self.block_of_label = {}
        first = 1
        for index, (size, group) in enumerate(zip(sizes, groups)):
            self.blocks.append(Block(index, size, group, first))
            for label in range(first, first + size):
                self.block_of_label[label] = index
            first += size
        self.N = first - 1

    @classmethod
    def brandt(cls, n, group=None):
        """A single Brandt semigroup B_n(G)."""

        return cls([n], [group or GroupSpec.trivial()])

    @property
    def sizes(self):

        return [block.size for block in self.blocks]

    @property
    def groups(self):

        return [block.group for block in self.blocks]

    def block(self, label):

        return self.blocks[self.block_of_label[label]]

    def labels(self, block):

        return range(block.first, block.first + block.size)

    def element(self, row, col, g=None):

        block = self.block(row)
        assert self.block(col) is block, 'Labels lie in different blocks'
        return BrandtElement(row, block.group.identity if g is None else g,
                             col)

    def idempotent(self, label):

        return self.element(label, label)

    def mul(self, x, y):
        """(i,g,j)(k,h,l) = (i,gh,l) if j = k, zero otherwise."""

        if x is ZERO or y is ZERO or x.col != y.row:
            return ZERO
        group = self.block(x.row).group
        return BrandtElement(x.row, group.mul(x.g, y.g), y.col)

    def inverse(self, x):

        if x is ZERO:
            return ZERO
        return BrandtElement(x.col, self.block(x.row).group.inverse(x.g),
                             x.row)

    def elements(self):
        """Zero first, then blocks in order, rows, group, columns."""

        result = [ZERO]
        for block in self.blocks:
            if not block.group.is_finite:
                raise InfiniteGroupBlock(block.index)
            for row in self.labels(block):
                for g in block.group.elements():
                    for col in self.labels(block):
                        result.append(BrandtElement(row, g, col))
        return result

    @threaded_cached_property
    def element_index(self):

        return dict((x, i) for i, x in enumerate(self.elements()))

    def to_finite(self):
        """Cayley table with ids in `elements()` order, validated."""

        elements = self.elements()
        index = self.element_index
        table = [[index[self.mul(x, y)] for y in elements] for x in elements]
        labels = [self.format_element(x) for x in elements]
        logger.debug('Block sum %s realised on %d elements', self.sizes,
                     len(elements))
        return validate(CayleyTable(table, labels=labels))

    def to_matrix_units(self):
        """
        Map every element to an N x N 0/1 matrix: (i,j) goes to the matrix
        unit E_ij, zero to the zero matrix.
        """

        for block in self.blocks:
            if not block.group.is_trivial:
                raise NonTrivialGroup(block.group)
        units = {}
        for x in self.elements():
            matrix = numpy.zeros((self.N, self.N), dtype=numpy.int64)
            if x is not ZERO:
                matrix[x.row - 1, x.col - 1] = 1
            units[x] = matrix
        return units

    def algebra_dimensions(self, contracted=True):

        return algebra_dimensions(self, contracted)

    def format_element(self, x):

        if x is ZERO:
            return '0'
        group = self.block(x.row).group
        if group.is_trivial:
            return '(%d,%d)' % (x.row, x.col)
        return '(%d,%s,%d)' % (x.row, group.format_element(x.g), x.col)

    def format(self):
        """Text form: `blocks = ...` and `groups = ...` lines."""

        lines = ['blocks = %s' % ','.join(str(size) for size in self.sizes)]
        if any(not group.is_trivial for group in self.groups):
            lines.append('groups = %s' % ','.join(group.token
                                                  for group in self.groups))
        return '\n'.join(lines) + '\n'

    def __repr__(self):

        return 'BlockSum(%s)' % ', '.join(
            group.algebra(size) for size, group in zip(self.sizes,
                                                       self.groups))


def brandt_mul(S, x, y):

    return S.mul(x, y)


def to_finite(S):

    return S.to_finite()


def to_matrix_units(S):

    return S.to_matrix_units()


class AlgebraDimensions(object):
    """Summands of the (contracted) semigroup algebra and their sizes."""

    def __init__(self, summands, contracted):

        self.summands = summands
        self.contracted = contracted

    @property
    def total(self):

        return sum(dimension for _, dimension in self.summands)

    @property
    def display(self):

        return ' (+) '.join(name for name, _ in self.summands)

    def __str__(self):

        return '%s, dim %d' % (self.display, self.total)


def algebra_dimensions(S, contracted=True):
    """
    M_{n_i}(C G_i) per block, of dimension n_i^2 |G_i|.  The full algebra
    adds a copy of C for the adjoined unit.
    """

    summands = []
    for block in S.blocks:
        if not block.group.is_finite:
            raise InfiniteGroupBlock(block.index)
        summands.append((block.group.algebra(block.size),
                         block.size ** 2 * block.group.order))
    if not contracted:
        summands.append(('C', 1))
    return AlgebraDimensions(summands, contracted)


def format_matrix(matrix):
    """Dense integer matrix dump, one row per line."""

    return '\n'.join(' '.join(str(int(entry)) for entry in row)
                     for row in numpy.asarray(matrix).tolist()) + '\n'
