"""
Universal groups of inverse semigroups with zero, the gamma map on words of
special amalgams S *_E S, and the combiner for amalgamated products.

Hosts provide the letter arithmetic.  Copy 1 letters are elements of S,
copy 2 letters stand for their images under the second embedding.
"""

import logging

from .exceptions import NoZero, UnsupportedHost
from .gisg import (
    GraphISGElement,
    elements,
    gisg_mul,
    polycyclic,
    universal_group_image,
)
from .reilly import BicyclicElement, bicyclic_mul
from .utils import ZERO
from .words import (
    GroupPresentation,
    ReducedWord,
    amalgamate_presentations,
)

logger = logging.getLogger(__name__)

FIRST = 1
SECOND = 2


class GraphHost(object):
    """Graph inverse semigroup; letters map to p q^-1 over the edges."""

    def __init__(self, graph, name=None):

        self.graph = graph
        self.name = name or 'graph'

    @property
    def labels(self):

        return [edge for edge, _, _ in self.graph.edges]

    def mul(self, x, y):

        return gisg_mul(x, y)

    def is_idempotent(self, x):

        return x.is_idempotent()

    def image(self, x):

        return universal_group_image(x, self.graph)

    def accepts(self, x):

        return x is ZERO or isinstance(x, GraphISGElement)

    def elements(self, bound):
        """Nonzero elements with paths of length at most `bound`."""

        return elements(self.graph, bound)

    def format_element(self, x):

        return '0' if x is ZERO else x.format()

    def __repr__(self):

        return 'GraphHost(%s)' % self.name


class BicyclicHost(object):
    """Bicyclic monoid with a zero adjoined; a^-i a^j maps to a^(j-i)."""

    name = 'bicyclic'
    labels = ['a']

    def mul(self, x, y):

        if x is ZERO or y is ZERO:
            return ZERO
        return bicyclic_mul(x, y)

    def is_idempotent(self, x):

        return x.i == x.j

    def image(self, x):

        return ReducedWord.generator(0, x.j - x.i)

    def accepts(self, x):

        return x is ZERO or isinstance(x, BicyclicElement)

    def elements(self, bound):

        return [BicyclicElement(i, j) for i in range(bound + 1)
                for j in range(bound + 1)]

    def format_element(self, x):

        return str(x)

    def __repr__(self):

        return 'BicyclicHost()'


def host_by_name(name):
    """`pc:<n>` for the polycyclic monoid P_n, `bicyclic` for B with zero."""

    if name == 'bicyclic':
        return BicyclicHost()
    if name.startswith('pc:'):
        try:
            n = int(name[3:])
        except ValueError:
            raise UnsupportedHost(name)
        if n < 1:
            raise UnsupportedHost(name)
        return GraphHost(polycyclic(n), name)
    raise UnsupportedHost(name)


class AmalgamWord(object):
    """Letters (copy, element) of a word in S *_E S."""

    def __init__(self, letters):

        self.letters = tuple(letters)
        for copy, _ in self.letters:
            assert copy in (FIRST, SECOND), 'Copies are numbered 1 and 2'

    def __mul__(self, other):

        return AmalgamWord(self.letters + other.letters)

    def __len__(self):

        return len(self.letters)

    def __eq__(self, other):

        return isinstance(other, AmalgamWord) and self.letters == other.letters

    def __ne__(self, other):

        return not self == other

    def __hash__(self):

        return hash(self.letters)

    def format(self, host):

        return ' '.join('%d[%s]' % (copy, host.format_element(element))
                        for copy, element in self.letters)

    def __repr__(self):

        return 'AmalgamWord(%r)' % (self.letters,)


def host_product(host, word):
    """Product of all letters in the host, copies forgotten."""

    result = None
    for _, element in word.letters:
        result = element if result is None else host.mul(result, element)
        if result is ZERO:
            return ZERO
    return result


def check_host(host, word):

    if not hasattr(host, 'image'):
        raise UnsupportedHost(host)
    for _, element in word.letters:
        if not host.accepts(element):
            raise UnsupportedHost(host)


def gamma_image(host, word):
    """
    Zero when the interleaved product is zero in the host.  Otherwise the
    product of letter images in the free product of two copies of the
    universal group; copy 2 generators follow the copy 1 ones.
    """

    check_host(host, word)
    if host_product(host, word) is ZERO:
        return ZERO
    offset = len(host.labels)
    letters = []
    for copy, element in word.letters:
        image = host.image(element)
        shift = 0 if copy == FIRST else offset
        letters.extend((generator + shift, sign)
                       for generator, sign in image.letters)
    return ReducedWord(letters)


def normalize(host, word):
    """
    Letter level reduction: merge adjacent letters of the same copy and
    absorb idempotent letters, which both copies share, into a neighbour.
    Returns ZERO when some merged letter is zero.
    """

    check_host(host, word)
    letters = list(word.letters)
    if any(element is ZERO for _, element in letters):
        return ZERO
    changed = True
    while changed and len(letters) > 1:
        changed = False
        for index in range(len(letters) - 1):
            (copy_a, a), (copy_b, b) = letters[index], letters[index + 1]
            if copy_a == copy_b:
                copy = copy_a
            elif host.is_idempotent(a):
                copy = copy_b
            elif host.is_idempotent(b):
                copy = copy_a
            else:
                continue
            product = host.mul(a, b)
            if product is ZERO:
                return ZERO
            letters[index:index + 2] = [(copy, product)]
            changed = True
            break
    return AmalgamWord(letters)


def special_amalgam_letters(host):

    return (['%s_1' % label for label in host.labels] +
            ['%s_2' % label for label in host.labels])


def special_amalgam_group(host, identified=()):
    """
    G(S) *_{G(U)} G(S) for a host with free universal group.  `identified`
    lists words of G(S) generating the image of G(U); the trivial G(E)
    gives the free product.
    """

    first = GroupPresentation(['%s_1' % label for label in host.labels])
    second = GroupPresentation(['%s_2' % label for label in host.labels])
    return combine_universal_groups(first, second,
                                    [(word, word) for word in identified])


def universal_group_presentation(S):
    """
    Generators s<id> for the nonzero elements, one relator a b c^-1 for
    every nonzero product ab = c.
    """

    if S.zero is None:
        raise NoZero()
    nonzero = [a for a in S.elements() if a != S.zero]
    index = dict((a, i) for i, a in enumerate(nonzero))
    relators = []
    for a in nonzero:
        for b in nonzero:
            c = S.mul(a, b)
            if c == S.zero:
                continue
            relator = ReducedWord([(index[a], 1), (index[b], 1),
                                   (index[c], -1)])
            if not relator.is_identity():
                relators.append(relator)
    logger.debug('Universal group presentation: %d generators, %d relators',
                 len(nonzero), len(relators))
    return GroupPresentation(['s%d' % a for a in nonzero], relators)


def maximal_group_image_presentation(S):
    """Presentation of S/sigma read off its quotient table."""

    quotient = S.sigma_classes().quotient
    relators = []
    for a in quotient.elements():
        for b in quotient.elements():
            relator = ReducedWord([(a, 1), (b, 1),
                                   (quotient.mul(a, b), -1)])
            if not relator.is_identity():
                relators.append(relator)
    return GroupPresentation(['c%d' % a for a in quotient.elements()],
                             relators)


def combine_universal_groups(first, second, pairs):
    """G(S) *_{G(U)} G(T) from the images of generators of G(U)."""

    return amalgamate_presentations(first, second, pairs)


class GammaAudit(object):
    """Counts from a randomized check of the gamma map."""

    def __init__(self, words, nonzero, failures):

        self.words = words
        self.nonzero = nonzero
        self.failures = failures

    @property
    def holds(self):

        return not self.failures


def random_word(host, rng, pool, length):

    return AmalgamWord((rng.choice((FIRST, SECOND)), rng.choice(pool))
                       for _ in range(rng.randint(1, length)))


def fold_right(host, word):
    """Host product of the letters, associated from the right."""

    result = None
    for _, element in reversed(word.letters):
        result = element if result is None else host.mul(element, result)
    return result


def gamma_audit(host, rng, count, length=3, bound=1):
    """
    Draw `count` pairs of random words and check that gamma is a
    0-morphism.  gamma(uv) must be zero exactly when the right associated
    host product of uv is, a zero gamma(u) or gamma(v) must make both uv
    and vu vanish, and gamma(uv) = gamma(u) gamma(v) whenever uv survives.
    """

    pool = host.elements(bound)
    failures = []
    nonzero = 0
    for _ in range(count):
        u = random_word(host, rng, pool, length)
        v = random_word(host, rng, pool, length)
        uv = gamma_image(host, u * v)
        first, second = gamma_image(host, u), gamma_image(host, v)
        if (uv is ZERO) != (fold_right(host, u * v) is ZERO):
            failures.append((u, v))
            continue
        if first is ZERO or second is ZERO:
            if uv is not ZERO or gamma_image(host, v * u) is not ZERO:
                failures.append((u, v))
            continue
        if uv is ZERO:
            continue
        nonzero += 1
        if first * second != uv:
            failures.append((u, v))
    logger.debug('Gamma audit on %r: %d words, %d nonzero, %d failures',
                 host, count, nonzero, len(failures))
    return GammaAudit(count, nonzero, failures)
