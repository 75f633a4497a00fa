"""
Free group words, endomorphisms and finitely presented group data.

Generators are dense non-negative integers.  There is no rank attached to a
word, so the same values serve for free groups of finite and of infinite
rank.  Labels are a printing concern handled by `Alphabet`.
"""

import logging
import re
from threading import Lock

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from .exceptions import (
    GeneratorOutOfRange,
    NotInjectiveEvidence,
    UnboundedPreimage,
)

logger = logging.getLogger(__name__)

DEFAULT_LABEL = re.compile(r'^x(\d+)$')


def free_reduce(letters):
    """Cancel adjacent inverse pairs until none is left."""

    stack = []
    for generator, sign in letters:
        assert sign in (1, -1), 'Exponent sign must be +1 or -1'
        assert generator >= 0, 'Generator index must be non-negative'
        if stack and stack[-1] == (generator, -sign):
            stack.pop()
        else:
            stack.append((generator, sign))
    return tuple(stack)


class ReducedWord(object):
    """Freely reduced word.  The empty word is the identity."""

    def __init__(self, letters=()):

        self.letters = free_reduce(letters)

    @classmethod
    def identity(cls):

        return cls()

    @classmethod
    def generator(cls, index, exponent=1):
        """Power of a single generator."""

        sign = 1 if exponent >= 0 else -1
        return cls([(index, sign)] * abs(exponent))

    def __mul__(self, other):

        return ReducedWord(self.letters + other.letters)

    def __pow__(self, exponent):

        if exponent < 0:
            return self.inverse() ** -exponent
        result = ReducedWord()
        for _ in range(exponent):
            result = result * self
        return result

    def inverse(self):

        return ReducedWord(
            (generator, -sign) for generator, sign in reversed(self.letters))

    def is_identity(self):

        return not self.letters

    def max_generator(self):
        """Largest generator index used, -1 for the identity."""

        return max([generator for generator, _ in self.letters] or [-1])

    def exponent_sums(self, rank):
        """Image in the free abelian group of the given rank."""

        sums = [0] * rank
        for generator, sign in self.letters:
            sums[generator] += sign
        return sums

    def __len__(self):

        return len(self.letters)

    def __iter__(self):

        return iter(self.letters)

    def __eq__(self, other):

        return isinstance(other, ReducedWord) and self.letters == other.letters

    def __ne__(self, other):

        return not self == other

    def __hash__(self):

        return hash(self.letters)

    def __repr__(self):

        return 'ReducedWord(%r)' % (format_word(self),)

    def __str__(self):

        return format_word(self)


EPSILON = ReducedWord()


def mul(u, v):
    """Concatenate and cancel."""

    return u * v


def inv(u):

    return u.inverse()


class Alphabet(object):
    """
    Generator labels.  Without explicit labels generator `k` is spelled
    `x<k>`.
    """

    def __init__(self, labels=()):

        self.labels = list(labels)
        self.indices = dict((label, i) for i, label in enumerate(self.labels))

    def label(self, index):

        if index < len(self.labels):
            return self.labels[index]
        return 'x%d' % index

    def index(self, label, extend=False):
        """Generator index of the label.  Optionally learn new labels."""

        if label in self.indices:
            return self.indices[label]
        match = DEFAULT_LABEL.match(label)
        if match and not self.labels:
            return int(match.group(1))
        if not extend:
            raise KeyError(label)
        self.indices[label] = len(self.labels)
        self.labels.append(label)
        return self.indices[label]

    def __len__(self):

        return len(self.labels)


def format_word(word, alphabet=None):
    """Canonical spelling: space separated letters, postfix ' inverts."""

    if word.is_identity():
        return '1'
    alphabet = alphabet or Alphabet()
    return ' '.join(
        alphabet.label(generator) + ("'" if sign < 0 else '')
        for generator, sign in word.letters)


def format_relator(word, alphabet=None):
    """Run-length spelling used in presentations, like `a^3 b^-3`."""

    if word.is_identity():
        return '1'
    alphabet = alphabet or Alphabet()
    runs = []
    for generator, sign in word.letters:
        if runs and runs[-1][0] == generator:
            runs[-1][1] += sign
        else:
            runs.append([generator, sign])
    parts = []
    for generator, exponent in runs:
        label = alphabet.label(generator)
        parts.append(label if exponent == 1 else '%s^%d' % (label, exponent))
    return ' '.join(parts)


class FreeEndomorphism(object):
    """
    Endomorphism of a free group given by generator images.

    `rule` maps a generator index to its image.  `rank` is `None` for the
    free group of countably infinite rank; preimages there are only
    searched when `monotone` promises that the image of x_i uses some
    generator x_j with j >= i.
    """

    def __init__(self, rule, rank=None, declared_injective=False, name=None,
                 monotone=False):

        self.rule = rule
        self.rank = rank
        self.declared_injective = declared_injective
        self.monotone = monotone
        self.name = name or 'alpha'
        # Folded image subgroups, keyed on the generator set used.
        self._folds = {}
        self._lock = Lock()

    @classmethod
    def from_images(cls, images, declared_injective=False, name=None):

        images = tuple(images)
        return cls(images.__getitem__, rank=len(images),
                   declared_injective=declared_injective, name=name)

    @classmethod
    def identity(cls, rank=None):

        return cls(ReducedWord.generator, rank=rank, declared_injective=True,
                   name='identity', monotone=True)

    @classmethod
    def shift(cls):
        """x_i -> x_(i+1) on the free group of infinite rank."""

        return cls(lambda i: ReducedWord.generator(i + 1),
                   declared_injective=True, name='shift', monotone=True)

    @classmethod
    def power(cls, k, rank=None):
        """x_i -> x_i^k."""

        assert k != 0, 'x -> x^0 is not injective'
        return cls(lambda i: ReducedWord.generator(i, k), rank=rank,
                   declared_injective=True, name='power%d' % k, monotone=True)

    def image(self, generator):

        if generator < 0 or (self.rank is not None and generator >= self.rank):
            raise GeneratorOutOfRange(generator, self.rank)
        return self.rule(generator)

    def apply(self, word):

        result = []
        for generator, sign in word.letters:
            image = self.image(generator)
            result.extend(image.letters if sign > 0 else
                          image.inverse().letters)
        return ReducedWord(result)

    def power_apply(self, k, word):

        assert k >= 0, 'Only non-negative powers are defined'
        for _ in range(k):
            word = self.apply(word)
        return word

    def preimage(self, word):
        """
        The unique h with apply(h) == word, or None when the word is
        outside the image subgroup.
        """

        assert self.declared_injective, 'Preimage needs an injective map'
        if word.is_identity():
            return EPSILON
        if self.rank is not None:
            generators = tuple(range(self.rank))
        else:
            generators = tuple(range(word.max_generator() + 1))
            self.check_monotone(generators)
        result = self.folded(generators).read(word)
        if result is not None:
            assert self.apply(result) == word, 'Preimage failed verification'
        return result

    def check_monotone(self, generators):
        """Sources beyond `generators` cannot reach a word over them."""

        if not self.monotone:
            raise UnboundedPreimage(self.name)
        for generator in generators:
            if self.image(generator).max_generator() < generator:
                raise UnboundedPreimage(self.name, generator)

    def folded(self, generators):

        with self._lock:
            if generators not in self._folds:
                self._folds[generators] = ImageGraph(self, generators)
            return self._folds[generators]

    def __repr__(self):

        return 'FreeEndomorphism(%s)' % self.name


def apply(alpha, word):

    return alpha.apply(word)


def power_apply(alpha, k, word):

    return alpha.power_apply(k, word)


def preimage(alpha, word):

    return alpha.preimage(word)


class ImageGraph(object):
    """
    Folded graph of the subgroup generated by the images of some
    generators.

    Every edge carries a source-side label; the labels read along a closed
    path at the base vertex spell a word mapped by the endomorphism onto the
    letters read along that path.  Folding keeps this true by re-gauging the
    vertex it removes.
    """

    base = 0

    def __init__(self, endomorphism, generators):

        self.endomorphism = endomorphism
        self.generators = generators
        # Edge id -> [source, generator, target, label].
        self.edges = {}
        self.vertices = 1
        for generator in generators:
            self.add_loop(generator)
        self.fold()
        self.outgoing = {}
        self.incoming = {}
        for eid, (source, generator, target, _) in self.edges.items():
            self.outgoing[(source, generator)] = eid
            self.incoming[(target, generator)] = eid
        logger.debug('Folded image of %r on %d generators: %d vertices, '
                     '%d edges', endomorphism, len(generators),
                     len(set(e[0] for e in self.edges.values()) |
                         set(e[2] for e in self.edges.values())),
                     len(self.edges))

    def add_loop(self, generator):
        """Spell the image of one generator as a loop at the base."""

        image = self.endomorphism.image(generator)
        if image.is_identity():
            raise NotInjectiveEvidence(ReducedWord.generator(generator),
                                       EPSILON)
        path = [self.base]
        for _ in range(len(image) - 1):
            path.append(self.vertices)
            self.vertices += 1
        path.append(self.base)
        for position, (letter, sign) in enumerate(image.letters):
            if position == 0:
                label = ReducedWord.generator(generator, sign)
            else:
                label = EPSILON
            if sign > 0:
                edge = [path[position], letter, path[position + 1], label]
            else:
                edge = [path[position + 1], letter, path[position], label]
            self.edges[len(self.edges)] = edge

    def fold(self):

        while True:
            pair = self.find_fold()
            if pair is None:
                return
            self.fold_pair(*pair)

    def find_fold(self):

        seen = {}
        for eid in sorted(self.edges):
            source, generator, target, _ = self.edges[eid]
            for key in [('out', source, generator), ('in', target, generator)]:
                if key in seen:
                    return seen[key], eid, key[0]
                seen[key] = eid
        return None

    def fold_pair(self, first, second, direction):

        far = 2 if direction == 'out' else 0
        v1 = self.edges[first][far]
        v2 = self.edges[second][far]
        if v1 == v2:
            # Parallel edges: the labels must agree for an injective map.
            if self.edges[first][3] != self.edges[second][3]:
                raise NotInjectiveEvidence(self.edges[first][3],
                                           self.edges[second][3])
            del self.edges[second]
            return
        if v1 == self.base:
            keep, drop = first, second
        else:
            keep, drop = second, first
        x = self.edges[drop][far]
        y = self.edges[keep][far]
        kept_label = self.edges[keep][3]
        dropped_label = self.edges[drop][3]
        if direction == 'out':
            gauge = dropped_label.inverse() * kept_label
        else:
            gauge = dropped_label * kept_label.inverse()
        for edge in self.edges.values():
            if edge[0] == x and edge[2] == x:
                edge[3] = gauge.inverse() * edge[3] * gauge
            elif edge[0] == x:
                edge[3] = gauge.inverse() * edge[3]
            elif edge[2] == x:
                edge[3] = edge[3] * gauge
        del self.edges[drop]
        for edge in self.edges.values():
            if edge[0] == x:
                edge[0] = y
            if edge[2] == x:
                edge[2] = y

    def read(self, word):
        """Label of the path spelling the word, None unless it closes."""

        vertex = self.base
        label = EPSILON
        for generator, sign in word.letters:
            if sign > 0:
                eid = self.outgoing.get((vertex, generator))
                if eid is None:
                    return None
                vertex = self.edges[eid][2]
                label = label * self.edges[eid][3]
            else:
                eid = self.incoming.get((vertex, generator))
                if eid is None:
                    return None
                vertex = self.edges[eid][0]
                label = label * self.edges[eid][3].inverse()
        if vertex != self.base:
            return None
        return label


class GroupPresentation(object):
    """Generators and relators.  Emitted data, no word problem solved."""

    def __init__(self, generators, relators=()):

        self.alphabet = Alphabet(generators)
        self.relators = []
        for relator in relators:
            if relator.max_generator() >= len(self.alphabet):
                raise GeneratorOutOfRange(relator.max_generator(),
                                          len(self.alphabet))
            self.relators.append(relator)

    @property
    def generators(self):

        return list(self.alphabet.labels)

    @classmethod
    def free(cls, generators):

        return cls(generators)

    @classmethod
    def trivial(cls):

        return cls([])

    def abelianization(self):

        return abelianization(self)

    def __str__(self):

        relators = ', '.join(format_relator(relator, self.alphabet)
                             for relator in self.relators)
        if relators:
            return '<%s | %s>' % (','.join(self.generators), relators)
        return '<%s |>' % ','.join(self.generators)

    def __repr__(self):

        return 'GroupPresentation(%s)' % self


def amalgamate_presentations(first, second, pairs):
    """
    Amalgamated free product: both generator sets side by side, both
    relator sets, and one relator u v^-1 per identified pair.
    """

    offset = len(first.generators)
    labels = list(first.generators)
    taken = set(labels)
    for label in second.generators:
        fresh = label
        suffix = 2
        while fresh in taken:
            fresh = '%s_%d' % (label, suffix)
            suffix += 1
        taken.add(fresh)
        labels.append(fresh)

    def shift(word):

        return ReducedWord((generator + offset, sign)
                           for generator, sign in word.letters)

    relators = list(first.relators)
    relators.extend(shift(relator) for relator in second.relators)
    for u, v in pairs:
        relator = u * shift(v).inverse()
        if not relator.is_identity():
            relators.append(relator)
    return GroupPresentation(labels, relators)


class Abelianization(object):
    """Invariants of the abelianized presentation."""

    def __init__(self, matrix, free_rank, torsion):

        self.matrix = matrix
        self.free_rank = free_rank
        self.torsion = torsion

    def __eq__(self, other):

        return (self.free_rank, self.torsion) == (other.free_rank,
                                                  other.torsion)

    def __ne__(self, other):

        return not self == other

    def __str__(self):

        parts = ['Z'] * self.free_rank
        parts.extend('Z/%d' % d for d in self.torsion)
        return ' (+) '.join(parts) or '0'

    def __repr__(self):

        return 'Abelianization(%s)' % self


def abelianization(presentation):
    """Smith normal form of the exponent-sum relation matrix."""

    rank = len(presentation.generators)
    matrix = [relator.exponent_sums(rank)
              for relator in presentation.relators]
    rows = [row for row in matrix if any(row)]
    if not rows or not rank:
        return Abelianization(matrix, rank, ())
    normal = smith_normal_form(Matrix(rows), domain=ZZ)
    diagonal = [abs(int(normal[i, i]))
                for i in range(min(normal.shape))]
    invariants = [d for d in diagonal if d]
    torsion = tuple(sorted(d for d in invariants if d != 1))
    return Abelianization(matrix, rank - len(invariants), torsion)
