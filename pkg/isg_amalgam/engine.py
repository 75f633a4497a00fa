"""
Exact arithmetic in the amalgam S *_U T of two 0-direct unions of
combinatorial Brandt semigroups over their common idempotents.

Elements are reduced walks in the subdivided block graph: every diagonal
label `j` becomes a midpoint `m_j` joined to its P-block and its Q-block.
A walk is stored as its start midpoint and a tuple of steps `(v, j)`, read
"go through block vertex v to midpoint m_j".  Consecutive steps alternate
sides, since a midpoint has one neighbour on each side.
"""

import logging
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor

from . import conf
from .brandt import BrandtElement
from .exceptions import (
    DifferentBlocks,
    Infinite,
    InvalidLabel,
    MismatchedReport,
    TooLarge,
)
from .graph import LEFT, RIGHT, AmalgamStructure, build_block_graph, decompose
from .semigroup import CayleyTable, validate
from .utils import ZERO
from .words import Alphabet, ReducedWord, format_word

logger = logging.getLogger(__name__)


class AmalgamWalk(object):
    """Reduced walk from midpoint `start`; no steps means idempotent."""

    __slots__ = ('start', 'steps')

    def __init__(self, start, steps=()):

        self.start = start
        self.steps = tuple(steps)

    @property
    def end(self):

        return self.steps[-1][1] if self.steps else self.start

    def is_idempotent(self):

        return not self.steps

    def midpoints(self):

        return [self.start] + [j for _, j in self.steps]

    def __len__(self):

        return len(self.steps)

    def __eq__(self, other):

        return (isinstance(other, AmalgamWalk) and
                (self.start, self.steps) == (other.start, other.steps))

    def __ne__(self, other):

        return not self == other

    def __hash__(self):

        return hash((self.start, self.steps))

    def __repr__(self):

        return 'AmalgamWalk(%d, %r)' % (self.start, self.steps)


def reduce_steps(start, steps):
    """Cancel backtracking.  Returns the reduced step tuple."""

    stack = []
    for vertex, target in steps:
        if stack and stack[-1][0] == vertex:
            # m, v, m', v, m'' shortens to m, v, m''.
            stack.pop()
            current = stack[-1][1] if stack else start
            if target != current:
                stack.append((vertex, target))
        else:
            current = stack[-1][1] if stack else start
            if target != current:
                stack.append((vertex, target))
    return tuple(stack)


NormalForm = namedtuple('NormalForm', 'component row word col')
"""Coordinates in B_k(F_q): `component` counts from 1."""


class Amalgam(object):
    """The amalgam of the left (P) and right (Q) partitions of N."""

    def __init__(self, left, right):

        self.graph = build_block_graph(left, right)
        self.report = decompose(self.graph)

    @property
    def N(self):

        return self.graph.N

    def check_label(self, label):

        if isinstance(label, bool) or not isinstance(label, int) or not (
                1 <= label <= self.N):
            raise InvalidLabel(label, self.N)

    def component(self, label):

        return self.report.component_of_label[label]

    # Elements.

    def idempotent(self, label):

        self.check_label(label)
        return AmalgamWalk(label)

    def embed(self, side, p, q):
        """The generator (p, q) of the given side's Brandt block."""

        self.check_label(p)
        self.check_label(q)
        vertex = self.graph.endpoint(p, side)
        if self.graph.endpoint(q, side) != vertex:
            raise DifferentBlocks(p, q)
        return AmalgamWalk(p, reduce_steps(p, [(vertex, q)]))

    def generators(self):
        """Every embedded generator, P side first, in label order."""

        result = []
        for side in (LEFT, RIGHT):
            for p in range(1, self.N + 1):
                vertex = self.graph.endpoint(p, side)
                for q in range(1, self.N + 1):
                    if self.graph.endpoint(q, side) == vertex:
                        result.append((side, p, q, self.embed(side, p, q)))
        return result

    # Arithmetic.

    def mul(self, x, y):

        if x is ZERO or y is ZERO or x.end != y.start:
            return ZERO
        return AmalgamWalk(x.start, reduce_steps(x.start, x.steps + y.steps))

    def product(self, *elements):

        result = elements[0]
        for element in elements[1:]:
            result = self.mul(result, element)
        return result

    def inv(self, x):

        if x is ZERO:
            return ZERO
        midpoints = x.midpoints()
        steps = [(vertex, midpoints[index])
                 for index, (vertex, _) in enumerate(x.steps)]
        return AmalgamWalk(x.end, reversed(steps))

    # Normal forms.

    def route(self, component, vertex, target, midpoint):
        """Steps along the spanning tree from vertex to target, then on to
        the midpoint."""

        steps = list(component.tree_path(vertex, target))
        steps.append((target, midpoint))
        return steps

    def tree_walk(self, p, q):
        """The walk from m_p to m_q inside the subdivided spanning tree."""

        component = self.component(p)
        if self.component(q) is not component:
            raise DifferentBlocks(p, q)
        steps = self.route(component, self.graph.endpoint(p, LEFT),
                           self.graph.endpoint(q, LEFT), q)
        return AmalgamWalk(p, reduce_steps(p, steps))

    def tree_path(self, p, q):

        return self.tree_walk(p, q)

    def generator_loop(self, component, label):
        """Loop at the base crossing the cut half of non-tree edge once."""

        base = component.base
        steps = self.route(component, self.graph.endpoint(base, LEFT),
                           self.graph.endpoint(label, LEFT), label)
        steps.extend(self.route(component, self.graph.endpoint(label, RIGHT),
                                self.graph.endpoint(base, LEFT), base))
        return AmalgamWalk(base, reduce_steps(base, steps))

    def normal_form(self, x, report=None):
        """
        (component, row, w, col): the word w lists signed crossings of the
        Q-halves of non-tree edges, the halves missing from the subdivided
        spanning tree.
        """

        if report is not None and not report.matches(self.graph.left,
                                                     self.graph.right):
            raise MismatchedReport()
        if x is ZERO:
            return ZERO
        component = self.component(x.start)
        letters = []
        previous = x.start
        for vertex, target in x.steps:
            if (previous in component.generator and
                    self.graph.endpoint(previous, RIGHT) == vertex):
                letters.append((component.generator[previous], 1))
            if (target in component.generator and
                    self.graph.endpoint(target, RIGHT) == vertex):
                letters.append((component.generator[target], -1))
            previous = target
        return NormalForm(component.index + 1, x.start, ReducedWord(letters),
                          x.end)

    def from_normal_form(self, component, row, word, col):
        """The walk with the given normal form."""

        self.check_label(row)
        self.check_label(col)
        owner = self.report.components[component - 1]
        if self.component(row) is not owner or self.component(col) is not owner:
            raise DifferentBlocks(row, col)
        base = owner.base
        result = self.tree_walk(row, base)
        for generator, sign in word.letters:
            assert generator < owner.q, 'Component %d has rank %d' % (
                component, owner.q)
            loop = self.generator_loop(owner, owner.non_tree[generator])
            result = self.mul(result, loop if sign > 0 else self.inv(loop))
        return self.mul(result, self.tree_walk(base, col))

    # Finite case.

    def enumerate_if_finite(self, bound=None, workers=None):
        """
        Full Cayley table when every component is a tree, together with the
        isomorphism onto the predicted 0-direct union of B_{k_i}.
        """

        bound = conf.ENUMERATION_BOUND if bound is None else bound
        cyclic = [c.index + 1 for c in self.report.components if c.q]
        if cyclic:
            raise Infinite(cyclic)
        size = 1 + sum(c.k ** 2 for c in self.report.components)
        if size > bound:
            raise TooLarge(size, bound)
        elements = [ZERO]
        for component in self.report.components:
            for p in component.edges:
                for q in component.edges:
                    elements.append(self.tree_walk(p, q))
        index = dict((x, i) for i, x in enumerate(elements))

        def row(x):

            return [index[self.mul(x, y)] for y in elements]

        with ThreadPoolExecutor(max_workers=workers or conf.WORKERS) as pool:
            table = list(pool.map(row, elements))
        labels = [self.format_element(x) for x in elements]
        semigroup = validate(CayleyTable(table, labels=labels))
        structure = AmalgamStructure(self.report)
        isomorphism = {}
        for x in elements:
            if x is ZERO:
                isomorphism[x] = ZERO
            else:
                isomorphism[x] = BrandtElement(
                    structure.block_label(x.start), ReducedWord(),
                    structure.block_label(x.end))
        for x in elements:
            for y in elements:
                assert isomorphism[self.mul(x, y)] == structure.mul(
                    isomorphism[x], isomorphism[y]), 'Not a homomorphism'
        logger.debug('Enumerated %d element amalgam of %s and %s', size,
                     self.graph.left, self.graph.right)
        return FiniteAmalgam(semigroup, elements, structure, isomorphism)

    # Printing.

    def format_element(self, x):

        if x is ZERO:
            return '0'
        if x.is_idempotent():
            return 'e%d' % x.start
        parts = ['m%d' % x.start]
        for vertex, target in x.steps:
            parts.append(self.graph.vertex_name(vertex))
            parts.append('m%d' % target)
        return '-'.join(parts)

    def generator_alphabet(self, component):
        """Generator g<j> of a component is the loop through label j."""

        owner = self.report.components[component - 1]
        return Alphabet(['g%d' % label for label in owner.non_tree])

    def format_normal_form(self, form):

        if form is ZERO:
            return '0'
        alphabet = self.generator_alphabet(form.component)
        return '(comp=%d, %d, %s, %d)' % (
            form.component, form.row, format_word(form.word, alphabet),
            form.col)

    def __repr__(self):

        return 'Amalgam(%s, %s)' % (self.graph.left, self.graph.right)


class FiniteAmalgam(object):
    """Enumerated amalgam: table, walks by id and the Brandt isomorphism."""

    def __init__(self, semigroup, elements, structure, isomorphism):

        self.semigroup = semigroup
        self.elements = elements
        self.structure = structure
        self.isomorphism = isomorphism

    @property
    def size(self):

        return len(self.elements)

    def isomorphic_table(self):
        """True when the Brandt side, in the same element order, has the
        same Cayley table."""

        predicted = self.structure.to_finite()
        order = [self.structure.element_index[self.isomorphism[x]]
                 for x in self.elements]
        return all(
            order[self.semigroup.mul(a, b)] ==
            predicted.mul(order[a], order[b])
            for a in range(self.size) for b in range(self.size))


def embed(amalgam, side, p, q):

    return amalgam.embed(side, p, q)


def normal_form(amalgam, x, report):

    return amalgam.normal_form(x, report)


def enumerate_if_finite(left, right, bound=None):

    return Amalgam(left, right).enumerate_if_finite(bound)
