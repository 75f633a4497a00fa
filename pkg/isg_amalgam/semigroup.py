"""
Finite inverse semigroups given by Cayley tables.

Element ids are dense integers `0..n-1`.  Names live in an optional label
table and never take part in the arithmetic.
"""

import logging
from collections import deque

import numpy
from cached_property import threaded_cached_property

from .exceptions import (
    IdempotentsDontCommute,
    InvalidTable,
    NoZero,
    NotASubsemigroup,
    NotAssociative,
    NotIdempotent,
    NotRegular,
)
from .utils import DisjointSet

logger = logging.getLogger(__name__)


class CayleyTable(object):
    """Total multiplication table.  Zero and identity are computed."""

    def __init__(self, table, labels=None):

        try:
            table = numpy.array(table, dtype=numpy.int64)
        except (TypeError, ValueError):
            raise InvalidTable('entries must be integers')
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise InvalidTable('table must be square')
        n = table.shape[0]
        if n == 0:
            raise InvalidTable('table is empty')
        if table.min() < 0 or table.max() >= n:
            raise InvalidTable('entries must lie in 0..%d' % (n - 1))
        if labels is not None and len(labels) != n:
            raise InvalidTable('%d labels for %d elements' % (len(labels), n))
        table.setflags(write=False)
        self.table = table
        self.n = n
        self.labels = list(labels) if labels is not None else None

    def mul(self, a, b):

        return int(self.table[a, b])

    def label(self, a):

        if self.labels is None:
            return str(a)
        return self.labels[a]

    @threaded_cached_property
    def zero(self):
        """The element z with za = az = z for all a, if any."""

        for z in range(self.n):
            if (self.table[z] == z).all() and (self.table[:, z] == z).all():
                return z
        return None

    @threaded_cached_property
    def identity(self):

        elements = numpy.arange(self.n)
        for u in range(self.n):
            if ((self.table[u] == elements).all() and
                    (self.table[:, u] == elements).all()):
                return u
        return None

    def __eq__(self, other):

        return (isinstance(other, CayleyTable) and
                numpy.array_equal(self.table, other.table))

    def __ne__(self, other):

        return not self == other

    def __hash__(self):

        return hash(self.table.tobytes())

    def __repr__(self):

        return 'CayleyTable(n=%d)' % self.n


def parse_table(text):
    """
    Read the table text format: a header `n [zero=<id>]`, then `n` rows of
    `n` whitespace separated ids.  `#` starts a comment.
    """

    lines = []
    for line in text.splitlines():
        line = line.split('#', 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise InvalidTable('missing header')
    header = lines[0].split()
    declared_zero = None
    try:
        n = int(header[0])
        for option in header[1:]:
            key, _, value = option.partition('=')
            if key != 'zero':
                raise InvalidTable('unknown header option %r' % option)
            declared_zero = int(value)
    except ValueError:
        raise InvalidTable('malformed header %r' % lines[0])
    rows = lines[1:]
    if len(rows) != n:
        raise InvalidTable('expected %d rows, got %d' % (n, len(rows)))
    try:
        table = [[int(entry) for entry in row.split()] for row in rows]
    except ValueError:
        raise InvalidTable('entries must be integers')
    if any(len(row) != n for row in table):
        raise InvalidTable('every row needs %d entries' % n)
    table = CayleyTable(table)
    if declared_zero is not None and table.zero != declared_zero:
        raise InvalidTable('declared zero %d is not a zero' % declared_zero)
    return table


def format_table(table):

    header = str(table.n)
    if table.zero is not None:
        header += ' zero=%d' % table.zero
    width = len(str(table.n - 1))
    rows = [' '.join(str(entry).rjust(width) for entry in row)
            for row in table.table.tolist()]
    return '\n'.join([header] + rows) + '\n'


def validate(table):
    """
    Check the inverse semigroup axioms and return the validated structure.
    The first violated axiom is reported: associativity, then regularity,
    then commutation of idempotents.
    """

    T = table.table
    n = table.n
    logger.debug('Validating %d element table', n)
    # (ab)c against a(bc), one slab of the cube per a.
    for a in range(n):
        left = T[T[a]]
        right = T[a][T]
        bad = numpy.argwhere(left != right)
        if len(bad):
            b, c = bad[0]
            raise NotAssociative(a, int(b), int(c))
    elements = numpy.arange(n)
    inverses = []
    for a in range(n):
        axa = T[T[a], a]
        xax = T[T[:, a], elements]
        candidates = numpy.flatnonzero((axa == a) & (xax == elements))
        if not len(candidates):
            raise NotRegular(a)
        inverses.append(int(candidates[0]))
    idempotents = [int(e) for e in numpy.flatnonzero(T[elements, elements] ==
                                                     elements)]
    for i, e in enumerate(idempotents):
        for f in idempotents[i + 1:]:
            if T[e, f] != T[f, e]:
                raise IdempotentsDontCommute(e, f)
    return FiniteInverseSemigroup(table, inverses, idempotents)


class FiniteInverseSemigroup(object):
    """Validated inverse semigroup.  Build it with `validate`."""

    def __init__(self, carrier, inverses, idempotents):

        self.carrier = carrier
        self.inv = tuple(inverses)
        self.idempotents = frozenset(idempotents)

    @property
    def n(self):

        return self.carrier.n

    @property
    def table(self):

        return self.carrier.table

    @property
    def zero(self):

        return self.carrier.zero

    @property
    def identity(self):

        return self.carrier.identity

    def elements(self):

        return range(self.n)

    def mul(self, a, b):

        return int(self.carrier.table[a, b])

    def product(self, *elements):

        result = elements[0]
        for element in elements[1:]:
            result = self.mul(result, element)
        return result

    def inverse(self, a):

        return self.inv[a]

    def is_idempotent(self, a):

        return a in self.idempotents

    def is_group(self):

        return len(self.idempotents) == 1

    def label(self, a):

        return self.carrier.label(a)

    # Natural partial order.

    @threaded_cached_property
    def order(self):
        """Boolean matrix: order[a, b] iff a <= b."""

        order = numpy.zeros((self.n, self.n), dtype=bool)
        idempotents = sorted(self.idempotents)
        for b in range(self.n):
            order[self.table[idempotents, b], b] = True
        return order

    def natural_leq(self, a, b):
        """a <= b iff a = eb for some idempotent e."""

        return bool(self.order[a, b])

    def below(self, b):

        return [int(a) for a in numpy.flatnonzero(self.order[:, b])]

    def above(self, a):

        return [int(b) for b in numpy.flatnonzero(self.order[a])]

    # Green's relations.

    def green(self):

        return self.green_data

    @threaded_cached_property
    def green_data(self):

        r_keys = [self.mul(a, self.inv[a]) for a in self.elements()]
        l_keys = [self.mul(self.inv[a], a) for a in self.elements()]
        d = DisjointSet(self.elements())
        for a in self.elements():
            d.union(a, r_keys[a])
            d.union(a, l_keys[a])
        ideals = [self.principal_ideal(a) for a in self.elements()]
        return GreenData(
            r=partition_by(r_keys),
            l=partition_by(l_keys),
            h=partition_by(list(zip(r_keys, l_keys))),
            d=d.groups(),
            j=partition_by(ideals),
        )

    def principal_ideal(self, a):
        """S^1 a S^1 as a frozenset."""

        T = self.table
        left = T[:, a]
        parts = [numpy.array([a]), T[a], left, T[left].ravel()]
        return frozenset(int(x) for x in numpy.unique(numpy.concatenate(parts)))

    # Sigma.

    def sigma_classes(self):

        return self.sigma

    @threaded_cached_property
    def sigma(self):

        classes = DisjointSet(self.elements())
        if self.zero is not None:
            for a in self.elements():
                classes.union(self.zero, a)
        else:
            # Elements sharing a lower bound are identified.
            for c in self.elements():
                above = self.above(c)
                for b in above[1:]:
                    classes.union(above[0], b)
        partition = classes.groups()
        return SigmaQuotient(self, partition)

    def congruence_closure(self, pairs):

        return congruence_closure(self, pairs)

    # Structural predicates.

    def check_subsemigroup(self, subset):
        """Raise NotASubsemigroup unless subset is an inverse subsemigroup."""

        subset = frozenset(subset)
        for a in sorted(subset):
            if self.inv[a] not in subset:
                raise NotASubsemigroup(a)
            for b in sorted(subset):
                if self.mul(a, b) not in subset:
                    raise NotASubsemigroup((a, b))
        return subset

    def is_full(self, subset):

        subset = self.check_subsemigroup(subset)
        return self.idempotents <= subset

    def is_e_unitary(self):
        """Every element above an idempotent is an idempotent."""

        return self.unitary_over(self.idempotents)

    def is_zero_e_star_unitary(self):

        if self.zero is None:
            raise NoZero()
        return self.unitary_over(self.idempotents - {self.zero})

    def unitary_over(self, idempotents):

        for e in idempotents:
            for a in self.above(e):
                if a not in self.idempotents:
                    return False
        return True

    def h_class(self, a):

        key = (self.mul(a, self.inv[a]), self.mul(self.inv[a], a))
        return [b for b in self.elements()
                if (self.mul(b, self.inv[b]), self.mul(self.inv[b], b)) == key]

    def maximal_subgroup(self, e):
        """The H-class of e as a group table labelled by the original ids."""

        if e not in self.idempotents:
            raise NotIdempotent(e)
        members = self.h_class(e)
        index = dict((a, i) for i, a in enumerate(members))
        table = [[index[self.mul(a, b)] for b in members] for a in members]
        group = validate(CayleyTable(table,
                                     labels=[self.label(a) for a in members]))
        assert group.is_group(), 'H-class of an idempotent must be a group'
        return group

    def __repr__(self):

        return 'FiniteInverseSemigroup(n=%d, idempotents=%d)' % (
            self.n, len(self.idempotents))


def natural_leq(S, a, b):

    return S.natural_leq(a, b)


def green(S):

    return S.green()


def sigma_classes(S):

    return S.sigma_classes()


def is_full(S, subset):

    return S.is_full(subset)


def is_e_unitary(S):

    return S.is_e_unitary()


def is_zero_e_star_unitary(S):

    return S.is_zero_e_star_unitary()


def maximal_subgroup(S, e):

    return S.maximal_subgroup(e)


def partition_by(keys):

    classes = {}
    for a, key in enumerate(keys):
        classes.setdefault(key, []).append(a)
    return sorted(classes.values(), key=lambda members: members[0])


class GreenData(object):
    """The five Green partitions, each a list of sorted classes."""

    def __init__(self, r, l, h, d, j):

        self.r = r
        self.l = l
        self.h = h
        self.d = d
        self.j = j

    def class_of(self, relation, a):

        for members in getattr(self, relation):
            if a in members:
                return members
        raise KeyError(a)

    def as_dict(self):

        return {'R': self.r, 'L': self.l, 'H': self.h, 'D': self.d,
                'J': self.j}


class SigmaQuotient(object):
    """
    Classes of the least group congruence and the quotient group.  With a
    zero everything collapses and the quotient is the trivial group.
    """

    def __init__(self, semigroup, classes):

        self.semigroup = semigroup
        self.classes = classes
        self.collapsed_by_zero = semigroup.zero is not None
        self.class_index = {}
        for i, members in enumerate(classes):
            for a in members:
                self.class_index[a] = i
        table = [[self.class_index[semigroup.mul(x[0], y[0])]
                  for y in classes] for x in classes]
        self.quotient = validate(CayleyTable(table))
        assert self.quotient.is_group(), 'Quotient by sigma must be a group'

    def project(self, a):

        return self.class_index[a]

    def __len__(self):

        return len(self.classes)


def congruence_closure(S, pairs):
    """Least congruence containing the given pairs, as a partition."""

    classes = DisjointSet(S.elements())
    pending = deque(pairs)
    T = S.table
    while pending:
        a, b = pending.popleft()
        if classes.union(a, b):
            pending.extend(zip(T[a].tolist(), T[b].tolist()))
            pending.extend(zip(T[:, a].tolist(), T[:, b].tolist()))
    return classes.groups()


def cyclic_group(k):

    assert k >= 1, 'Group order must be positive'
    return validate(CayleyTable([[(a + b) % k for b in range(k)]
                                 for a in range(k)]))


def partial_bijection_monoid(generators, degree):
    """
    Inverse monoid of partial bijections of `0..degree-1` generated by the
    given maps and their inverses.  Maps are tuples with `None` where
    undefined; products compose left to right, `(ab)(x) = b(a(x))`.
    """

    def compose(a, b):

        return tuple(None if a[x] is None else b[a[x]] for x in range(degree))

    def invert(a):

        inverse = [None] * degree
        for x, y in enumerate(a):
            if y is not None:
                inverse[y] = x
        return tuple(inverse)

    generators = [tuple(g) for g in generators]
    for g in generators:
        assert len(g) == degree, 'Map %r has the wrong degree' % (g,)
        defined = [y for y in g if y is not None]
        assert len(defined) == len(set(defined)), 'Map %r is not injective' % (
            g,)
    moves = generators + [invert(g) for g in generators]
    identity = tuple(range(degree))
    empty = (None,) * degree
    elements = [identity]
    index = {identity: 0}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in moves:
            y = compose(x, g)
            if y not in index:
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)
    if empty not in index:
        index[empty] = len(elements)
        elements.append(empty)
    table = [[index[compose(a, b)] for b in elements] for a in elements]
    labels = [format_partial_map(a) for a in elements]
    logger.debug('Partial bijection monoid of degree %d: %d elements',
                 degree, len(elements))
    return validate(CayleyTable(table, labels=labels))


def format_partial_map(a):

    pairs = ['%d>%d' % (x, y) for x, y in enumerate(a) if y is not None]
    return '{%s}' % ','.join(pairs)
