"""
Block graphs of amalgams of finite dimensional commutative-diagonal
algebras and their decomposition into matrix blocks over free groups.

For partitions `m` of `N` (the left factor P) and `n` of `N` (the right
factor Q) the block graph has one vertex per summand of each side and one
edge per diagonal matrix unit.  Diagonal position `j` belongs to the block
selected by cumulative sums in the given order.
"""

import logging
from collections import deque
from concurrent.futures import ThreadPoolExecutor

import numpy

from . import conf
from .brandt import BlockSum, GroupSpec
from .exceptions import InvalidPartition, SumMismatch
from .utils import DisjointSet

logger = logging.getLogger(__name__)

LEFT = 'P'
RIGHT = 'Q'


def check_partition(parts):

    parts = list(parts)
    if not parts or any(isinstance(part, bool) or not isinstance(part, int) or
                        part < 1 for part in parts):
        raise InvalidPartition(parts)
    return parts


class BlockGraph(object):
    """
    Bipartite multigraph.  Vertices `0..r-1` are the P-blocks, `r..r+s-1`
    the Q-blocks; edge labels run over `1..N`.
    """

    def __init__(self, left, right):

        self.left = check_partition(left)
        self.right = check_partition(right)
        if sum(self.left) != sum(self.right):
            raise SumMismatch(sum(self.left), sum(self.right))
        self.r = len(self.left)
        self.s = len(self.right)
        self.N = sum(self.left)
        positions = numpy.arange(1, self.N + 1)
        left_blocks = numpy.searchsorted(numpy.cumsum(self.left), positions)
        right_blocks = numpy.searchsorted(numpy.cumsum(self.right), positions)
        # Edge label j is stored at index j - 1.
        self.edges = [(int(p), self.r + int(q))
                      for p, q in zip(left_blocks, right_blocks)]

    @property
    def vertex_count(self):

        return self.r + self.s

    def endpoints(self, label):

        return self.edges[label - 1]

    def endpoint(self, label, side):

        return self.edges[label - 1][0 if side == LEFT else 1]

    def side(self, vertex):

        return LEFT if vertex < self.r else RIGHT

    def vertex_name(self, vertex):

        if vertex < self.r:
            return 'P%d' % (vertex + 1)
        return 'Q%d' % (vertex - self.r + 1)

    def block_labels(self, vertex):
        """Edge labels incident to a vertex, in label order."""

        end = 0 if vertex < self.r else 1
        return [label for label in range(1, self.N + 1)
                if self.edges[label - 1][end] == vertex]

    def incidence_matrix(self):
        """Oriented incidence matrix, P-ends +1 and Q-ends -1."""

        matrix = numpy.zeros((self.vertex_count, self.N), dtype=numpy.int64)
        for index, (p, q) in enumerate(self.edges):
            matrix[p, index] = 1
            matrix[q, index] = -1
        return matrix

    def __repr__(self):

        return 'BlockGraph(%s, %s)' % (self.left, self.right)


def build_block_graph(left, right):

    return BlockGraph(left, right)


def permute_blocks(graph, left_order, right_order=None):
    """
    The block graph with P-blocks taken in `left_order` and Q-blocks in
    `right_order`.  Diagonal positions are renumbered along the new
    P-blocks, so Q-blocks keep their sizes but need not stay contiguous.
    """

    right_order = list(range(graph.s)) if right_order is None else right_order
    assert sorted(left_order) == list(range(graph.r)), 'Not a permutation'
    assert sorted(right_order) == list(range(graph.s)), 'Not a permutation'
    right_rank = dict((old, new) for new, old in enumerate(right_order))
    permuted = BlockGraph([graph.left[p] for p in left_order],
                          [graph.right[q] for q in right_order])
    edges = []
    for new, old in enumerate(left_order):
        for label in graph.block_labels(old):
            q = graph.endpoint(label, RIGHT) - graph.r
            edges.append((new, permuted.r + right_rank[q]))
    permuted.edges = edges
    return permuted


class Component(object):
    """
    One connected component with its BFS spanning tree.  Non-tree edges,
    in label order, are the free generators `x0, x1, ...` of the component.
    """

    def __init__(self, graph, index, vertices, edges):

        self.graph = graph
        self.index = index
        self.vertices = sorted(vertices)
        self.edges = sorted(edges)
        self.root = self.vertices[0]
        # Vertex -> (edge label, parent vertex) along the tree.
        self.parent = {self.root: None}
        self.depth = {self.root: 0}
        tree = []
        queue = deque([self.root])
        while queue:
            vertex = queue.popleft()
            for label in graph.block_labels(vertex):
                p, q = graph.endpoints(label)
                other = q if vertex == p else p
                if other not in self.parent:
                    self.parent[other] = (label, vertex)
                    self.depth[other] = self.depth[vertex] + 1
                    tree.append(label)
                    queue.append(other)
        self.tree = sorted(tree)
        tree_set = set(tree)
        self.non_tree = [label for label in self.edges
                         if label not in tree_set]
        self.generator = dict((label, i)
                              for i, label in enumerate(self.non_tree))

    @property
    def k(self):

        return len(self.edges)

    @property
    def q(self):

        return self.k - (len(self.vertices) - 1)

    @property
    def base(self):
        """Smallest edge label, the base point of the component."""

        return self.edges[0]

    def group(self):

        return GroupSpec.free(self.q)

    def display(self):

        return self.group().algebra(self.k)

    def position(self, label):
        """1-based index of a label among the component's edges."""

        return self.edges.index(label) + 1

    def tree_path(self, source, target):
        """
        Vertex path between two vertices inside the spanning tree, as a
        list of (vertex, edge label into the next vertex) steps.
        """

        up = []
        down = []
        a, b = source, target
        while self.depth[a] > self.depth[b]:
            label, parent = self.parent[a]
            up.append((a, label))
            a = parent
        while self.depth[b] > self.depth[a]:
            label, parent = self.parent[b]
            down.append((parent, label))
            b = parent
        while a != b:
            label, parent = self.parent[a]
            up.append((a, label))
            a = parent
            label, parent = self.parent[b]
            down.append((parent, label))
            b = parent
        return up + list(reversed(down))

    def as_dict(self):

        name = self.graph.vertex_name
        return {
            'k': self.k,
            'q': self.q,
            'vertices': [name(v) for v in self.vertices],
            'edges': list(self.edges),
            'tree': list(self.tree),
        }

    def __repr__(self):

        return 'Component(%d, k=%d, q=%d)' % (self.index, self.k, self.q)


class DecompositionReport(object):
    """Components of the block graph and the resulting K-theory ranks."""

    def __init__(self, graph, components, unital=False):

        self.graph = graph
        self.components = components
        self.unital = unital
        self.component_of_label = {}
        for component in components:
            for label in component.edges:
                self.component_of_label[label] = component

    @property
    def left(self):

        return self.graph.left

    @property
    def right(self):

        return self.graph.right

    @property
    def p(self):

        return len(self.components)

    @property
    def k0_rank(self):

        return self.p

    @property
    def k1_rank(self):

        return sum(component.q for component in self.components)

    @property
    def display(self):

        summands = ' (+) '.join(component.display()
                                for component in self.components)
        if self.unital:
            summands += ' (+) C'
        return summands

    def is_forest(self):

        return self.k1_rank == 0

    def matches(self, left, right):

        return list(left) == self.left and list(right) == self.right

    def as_dict(self):

        return {
            'left': list(self.left),
            'right': list(self.right),
            'components': [c.as_dict() for c in self.components],
            'p': self.p,
            'k0_rank': self.k0_rank,
            'k1_rank': self.k1_rank,
            'display': self.display,
            'unital': self.unital,
        }

    def format(self):

        lines = ['%s' % self.display]
        for component in self.components:
            lines.append(
                '  component %d: k=%d q=%d vertices=%s edges=%s tree=%s' % (
                    component.index + 1, component.k, component.q,
                    ','.join(self.graph.vertex_name(v)
                             for v in component.vertices),
                    ','.join(str(label) for label in component.edges),
                    ','.join(str(label) for label in component.tree)))
        lines.append('K0 = Z^%d' % self.k0_rank)
        lines.append('K1 = Z^%d' % self.k1_rank if self.k1_rank else 'K1 = 0')
        return '\n'.join(lines) + '\n'

    def __repr__(self):

        return 'DecompositionReport(%s)' % self.display


def decompose(graph, unital=False):
    """Split the block graph into components and count excess edges."""

    sets = DisjointSet(range(graph.vertex_count))
    for p, q in graph.edges:
        sets.union(p, q)
    edges = {}
    for label, (p, _) in enumerate(graph.edges, 1):
        edges.setdefault(sets.find(p), []).append(label)
    components = []
    for vertices in sets.groups():
        labels = edges.get(sets.find(vertices[0]))
        assert labels, 'Every block owns at least one diagonal position'
        components.append(Component(graph, len(components), vertices, labels))
    report = DecompositionReport(graph, components, unital)
    assert sum(c.k for c in components) == graph.N
    logger.debug('Decomposed %r: %s', graph, report.display)
    return report


def betti_number(graph):
    """Cycle rank from the rank of the incidence matrix."""

    rank = numpy.linalg.matrix_rank(graph.incidence_matrix().astype(float))
    return graph.N - int(rank)


def decompose_many(pairs, workers=None, unital=False):
    """Decompose independent partition pairs on a thread pool, in order."""

    def job(pair):

        return decompose(build_block_graph(*pair), unital=unital)

    with ThreadPoolExecutor(max_workers=workers or conf.WORKERS) as executor:
        return list(executor.map(job, pairs))


class AmalgamStructure(BlockSum):
    """
    The amalgam as a 0-direct union of B_{k_i}(F_{q_i}).  `relabel` maps an
    idempotent label of the factors to (component, position in component).
    """

    def __init__(self, report):

        components = report.components
        super(AmalgamStructure, self).__init__(
            [c.k for c in components], [c.group() for c in components])
        self.report = report
        self.relabel = {}
        for component in components:
            for label in component.edges:
                self.relabel[label] = (component.index,
                                       component.position(label))

    def block_label(self, label):
        """Global label of the block sum standing for a factor label."""

        index, position = self.relabel[label]
        return self.blocks[index].first + position - 1


def amalgam_semigroup_structure(left, right):

    return AmalgamStructure(decompose(build_block_graph(left, right)))
