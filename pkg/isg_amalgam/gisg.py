"""
Graph inverse semigroups I(G).

Nonzero elements are pairs (p, q) of paths with a common range, standing
for p q*.  Edges are generators of the universal group, numbered in the
order they were declared.
"""

import logging
from itertools import combinations

from .exceptions import ZeroHasNoImage
from .utils import ZERO
from .words import Alphabet, ReducedWord, format_word

logger = logging.getLogger(__name__)


class DirectedGraph(object):
    """Vertices by name, edges as (name, source, range)."""

    def __init__(self, vertices, edges):

        self.vertices = list(vertices)
        vertex_set = set(self.vertices)
        assert len(vertex_set) == len(self.vertices), 'Duplicate vertex'
        self.edges = []
        self.edge_index = {}
        for name, source, target in edges:
            assert name not in self.edge_index, 'Duplicate edge %s' % name
            assert source in vertex_set and target in vertex_set, (
                'Edge %s has an unknown endpoint' % name)
            self.edge_index[name] = len(self.edges)
            self.edges.append((name, source, target))

    def source(self, edge):

        return self.edges[self.edge_index[edge]][1]

    def range(self, edge):

        return self.edges[self.edge_index[edge]][2]

    def outgoing(self, vertex):

        return [name for name, source, _ in self.edges if source == vertex]

    @property
    def alphabet(self):

        return Alphabet([name for name, _, _ in self.edges])

    def vertex_path(self, vertex):

        assert vertex in self.vertices, 'Unknown vertex %s' % vertex
        return Path(vertex, (), vertex)

    def path(self, edges):
        """Path through the named edges, None when not composable."""

        edges = tuple(edges)
        assert edges, 'Use vertex_path for empty paths'
        for first, second in zip(edges, edges[1:]):
            if self.range(first) != self.source(second):
                return None
        return Path(self.source(edges[0]), edges, self.range(edges[-1]))

    def edge(self, name):

        return self.path([name])

    def format(self):

        lines = ['vertex %s' % vertex for vertex in self.vertices]
        lines.extend('edge %s %s %s' % edge for edge in self.edges)
        return '\n'.join(lines) + '\n'

    def __repr__(self):

        return 'DirectedGraph(%d vertices, %d edges)' % (len(self.vertices),
                                                         len(self.edges))


def polycyclic(n):
    """One vertex with n loops a1..an."""

    assert n >= 1, 'Polycyclic monoids need at least one loop'
    return DirectedGraph(['v'], [('a%d' % i, 'v', 'v')
                                 for i in range(1, n + 1)])


class Path(object):
    """Edge sequence from source to target; no edges means a vertex."""

    __slots__ = ('source', 'edges', 'target')

    def __init__(self, source, edges, target):

        self.source = source
        self.edges = tuple(edges)
        self.target = target

    def __len__(self):

        return len(self.edges)

    def is_vertex(self):

        return not self.edges

    def starts_with(self, prefix):
        """The path t with self = prefix t, or None."""

        if prefix.source != self.source:
            return None
        if self.edges[:len(prefix.edges)] != prefix.edges:
            return None
        return Path(prefix.target, self.edges[len(prefix.edges):],
                    self.target)

    def format(self):

        if self.is_vertex():
            return '@%s' % self.source
        return '.'.join(self.edges)

    def __eq__(self, other):

        return (isinstance(other, Path) and
                (self.source, self.edges, self.target) ==
                (other.source, other.edges, other.target))

    def __ne__(self, other):

        return not self == other

    def __hash__(self):

        return hash((self.source, self.edges, self.target))

    def __repr__(self):

        return 'Path(%s)' % self.format()


def compose_paths(a, b):
    """Concatenation, zero unless the first path ends where b starts."""

    if a is ZERO or b is ZERO or a.target != b.source:
        return ZERO
    return Path(a.source, a.edges + b.edges, b.target)


class GraphISGElement(object):
    """Nonzero element p q* of a graph inverse semigroup."""

    __slots__ = ('p', 'q')

    def __init__(self, p, q):

        assert p.target == q.target, 'p and q must share their range'
        self.p = p
        self.q = q

    def is_idempotent(self):

        return self.p == self.q

    def format(self):

        return "%s * %s'" % (self.p.format(), self.q.format())

    def __iter__(self):

        return iter((self.p, self.q))

    def __eq__(self, other):

        return (isinstance(other, GraphISGElement) and
                (self.p, self.q) == (other.p, other.q))

    def __ne__(self, other):

        return not self == other

    def __hash__(self):

        return hash((self.p, self.q))

    def __repr__(self):

        return 'GraphISGElement(%s)' % self.format()


def gisg_mul(x, y):
    """
    (p q*)(r s*): when r = q t the product is (p t) s*, when q = r t it is
    p (s t)*, otherwise zero.
    """

    if x is ZERO or y is ZERO:
        return ZERO
    p, q = x
    r, s = y
    t = r.starts_with(q)
    if t is not None:
        return GraphISGElement(compose_paths(p, t), s)
    t = q.starts_with(r)
    if t is not None:
        return GraphISGElement(p, compose_paths(s, t))
    return ZERO


def gisg_inv(x):

    if x is ZERO:
        return ZERO
    return GraphISGElement(x.q, x.p)


def gisg_product(*elements):

    result = elements[0]
    for element in elements[1:]:
        result = gisg_mul(result, element)
    return result


def natural_leq(x, y):
    """p q* <= r s* iff p = r t and q = s t for one path t."""

    if x is ZERO:
        return True
    if y is ZERO:
        return False
    t = x.p.starts_with(y.p)
    return t is not None and x.q.starts_with(y.q) == t


def max_above(x, graph):
    """Strip the longest common edge suffix of p and q."""

    if x is ZERO:
        return ZERO
    p, q = x.p.edges, x.q.edges
    common = 0
    while (common < min(len(p), len(q)) and
           p[len(p) - common - 1] == q[len(q) - common - 1]):
        common += 1
    return GraphISGElement(strip(x.p, common, graph),
                           strip(x.q, common, graph))


def strip(path, count, graph):
    """Drop the last `count` edges of a path."""

    if not count:
        return path
    kept = path.edges[:len(path.edges) - count]
    if not kept:
        return graph.vertex_path(path.source)
    return graph.path(kept)


def universal_group_image(x, graph):
    """p q^-1 over the edges, in the free group on the edge set."""

    if x is ZERO:
        raise ZeroHasNoImage()
    letters = [(graph.edge_index[edge], 1) for edge in x.p.edges]
    letters.extend((graph.edge_index[edge], -1)
                   for edge in reversed(x.q.edges))
    return ReducedWord(letters)


def munn_action(x, e):
    """
    e -> x e x^-1 on idempotents e = r r* below x^-1 x, that is r = q t.
    Outside that domain the result is zero.
    """

    if x is ZERO or e is ZERO:
        return ZERO
    assert e.is_idempotent(), 'Munn action is defined on idempotents'
    t = e.p.starts_with(x.q)
    if t is None:
        return ZERO
    image = compose_paths(x.p, t)
    return GraphISGElement(image, image)


def paths(graph, length):
    """Every path with at most `length` edges, shortest first."""

    result = [graph.vertex_path(vertex) for vertex in graph.vertices]
    layer = [Path(source, (name,), target)
             for name, source, target in graph.edges]
    for _ in range(length):
        result.extend(layer)
        layer = [Path(path.source, path.edges + (name,), target)
                 for path in layer
                 for name, source, target in graph.edges
                 if source == path.target]
    return result


def elements(graph, length):
    """Nonzero elements p q* with |p|, |q| <= length."""

    by_range = {}
    for path in paths(graph, length):
        by_range.setdefault(path.target, []).append(path)
    return [GraphISGElement(p, q)
            for vertex in graph.vertices
            for p in by_range.get(vertex, [])
            for q in by_range.get(vertex, [])]


class UnitaryCertificate(object):
    """Outcome of the strong E*-unitarity scan."""

    def __init__(self, checked, counterexample=None):

        self.checked = checked
        self.counterexample = counterexample

    @property
    def holds(self):

        return self.counterexample is None

    def __bool__(self):

        return self.holds

    __nonzero__ = __bool__


def verify_strongly_e_star_unitary(graph, length):
    """
    Check that exactly the idempotents p p* map to the identity of the
    universal group, over all elements with paths of length <= `length`.
    """

    checked = 0
    for x in elements(graph, length):
        checked += 1
        trivial = universal_group_image(x, graph).is_identity()
        if trivial != x.is_idempotent():
            return UnitaryCertificate(checked, x)
    logger.debug('Strong E*-unitarity holds on %d elements of %r',
                 checked, graph)
    return UnitaryCertificate(checked)


# Generators and defining relations.

def vertex_element(graph, vertex):

    path = graph.vertex_path(vertex)
    return GraphISGElement(path, path)


def edge_element(graph, edge):
    """e = e r(e)*."""

    return GraphISGElement(graph.edge(edge),
                           graph.vertex_path(graph.range(edge)))


def edge_star(graph, edge):

    return gisg_inv(edge_element(graph, edge))


def relation_audit(graph):
    """
    Check the defining relations on generators: vertices are orthogonal
    idempotents, s(e) e = e r(e) = e, r(e) e* = e* s(e) = e*, e* f = 0
    for e != f, and e* e = r(e).  Returns the list of failures.
    """

    failures = []

    def expect(name, got, wanted):

        if got != wanted:
            failures.append((name, got, wanted))

    vertices = dict((v, vertex_element(graph, v)) for v in graph.vertices)
    for v, w in [(v, w) for v in graph.vertices for w in graph.vertices]:
        expect('%s %s' % (v, w), gisg_mul(vertices[v], vertices[w]),
               vertices[v] if v == w else ZERO)
    for name, source, target in graph.edges:
        e = edge_element(graph, name)
        e_star = edge_star(graph, name)
        expect('s(%s) %s' % (name, name), gisg_mul(vertices[source], e), e)
        expect('%s r(%s)' % (name, name), gisg_mul(e, vertices[target]), e)
        expect('r(%s) %s*' % (name, name),
               gisg_mul(vertices[target], e_star), e_star)
        expect('%s* s(%s)' % (name, name),
               gisg_mul(e_star, vertices[source]), e_star)
        expect('%s* %s' % (name, name), gisg_mul(e_star, e),
               vertices[target])
        for other, _, _ in graph.edges:
            if other != name:
                expect('%s* %s' % (name, other),
                       gisg_mul(e_star, edge_element(graph, other)), ZERO)
    return failures


def toeplitz_family_audit(graph):
    """
    For every vertex v, the range idempotents e e* of the edges leaving v
    are pairwise orthogonal and lie strictly below v.  Returns failures.
    """

    failures = []
    for vertex in graph.vertices:
        v = vertex_element(graph, vertex)
        ranges = []
        for name in graph.outgoing(vertex):
            e = edge_element(graph, name)
            ranges.append((name, gisg_mul(e, gisg_inv(e))))
        for name, projection in ranges:
            if not natural_leq(projection, v) or projection == v:
                failures.append(('%s%s* < %s' % (name, name, vertex),
                                 projection))
        for (first, e), (second, f) in combinations(ranges, 2):
            if gisg_mul(e, f) is not ZERO:
                failures.append(('%s%s* %s%s* = 0' % (first, first, second,
                                                     second), gisg_mul(e, f)))
    return failures


# The one loop case is the bicyclic monoid with a zero adjoined.

def to_bicyclic(x):
    """a^i (a^j)* -> a^-i a^j, as (i, j)."""

    from .reilly import BicyclicElement
    assert x is not ZERO, 'The adjoined zero is not bicyclic'
    return BicyclicElement(len(x.p), len(x.q))


def from_bicyclic(b, graph=None):

    graph = graph or polycyclic(1)
    loop = graph.edges[0][0]
    vertex = graph.vertices[0]

    def power(k):

        if not k:
            return graph.vertex_path(vertex)
        return Path(vertex, (loop,) * k, vertex)

    return GraphISGElement(power(b.i), power(b.j))


class BicyclicBridge(object):
    """P_1 and its zero against the bicyclic monoid with a zero adjoined."""

    def __init__(self):

        self.graph = polycyclic(1)

    def to_bicyclic(self, x):

        return ZERO if x is ZERO else to_bicyclic(x)

    def from_bicyclic(self, b):

        return ZERO if b is ZERO else from_bicyclic(b, self.graph)


def bicyclic_bridge():

    return BicyclicBridge()


def format_image(word, graph):

    return format_word(word, graph.alphabet)
