"""
Reilly semigroups B(G, alpha) over free groups, the bicyclic monoid and
its full unitary submonoids.

Indices start at 0, so the identity of B(G, alpha) is (0, 1, 0) and the
bicyclic element a^-i a^j is (i, j).
"""

import logging
from collections import namedtuple
from math import gcd as _gcd

from .exceptions import InvalidN, NotUnique
from .graph import build_block_graph, decompose
from .words import (
    EPSILON,
    FreeEndomorphism,
    GroupPresentation,
    ReducedWord,
    amalgamate_presentations,
    format_word,
)

logger = logging.getLogger(__name__)


class ReillyElement(namedtuple('ReillyElement', 'i g j')):

    def format(self, alphabet=None):

        return '(%d,%s,%d)' % (self.i, format_word(self.g, alphabet), self.j)

    def __str__(self):

        return self.format()


class ReillySemigroup(object):
    """
    B(G, alpha) with G a free group and alpha an injective endomorphism.

        (i,g,j)(k,h,l) = (i+k-j, alpha^(k-j)(g) h, l)   if k >= j
                         (i, g alpha^(j-k)(h), l+j-k)   if j >= k
    """

    def __init__(self, alpha, alphabet=None):

        assert alpha.declared_injective, 'Reilly semigroups need injective alpha'
        self.alpha = alpha
        self.alphabet = alphabet

    @classmethod
    def bicyclic(cls):
        """Trivial G: the bicyclic monoid."""

        return cls(FreeEndomorphism.identity(rank=0))

    @property
    def identity(self):

        return ReillyElement(0, EPSILON, 0)

    def idempotent(self, i):

        return ReillyElement(i, EPSILON, i)

    def is_idempotent(self, x):

        return x.i == x.j and x.g.is_identity()

    def mul(self, x, y):

        i, g, j = x
        k, h, l = y
        if k >= j:
            return ReillyElement(i + k - j,
                                 self.alpha.power_apply(k - j, g) * h, l)
        return ReillyElement(i, g * self.alpha.power_apply(j - k, h),
                             l + j - k)

    def product(self, *elements):

        result = elements[0]
        for element in elements[1:]:
            result = self.mul(result, element)
        return result

    def inv(self, x):

        return ReillyElement(x.j, x.g.inverse(), x.i)

    def natural_leq(self, x, y):
        """x <= y iff x = (x x^-1) y."""

        return x == self.mul(self.mul(x, self.inv(x)), y)

    def elements_above(self, x):
        """
        (i-k, h, j-k) with alpha^k(h) = g, for every k reachable by
        repeated preimages.  Ordered from x upwards.
        """

        result = [x]
        word = x.g
        for k in range(1, min(x.i, x.j) + 1):
            word = self.alpha.preimage(word)
            if word is None:
                break
            result.append(ReillyElement(x.i - k, word, x.j - k))
        return result

    def max_above(self, x):

        above = self.elements_above(x)
        maxima = [y for y in above
                  if not any(z != y and self.natural_leq(y, z) for z in above)]
        if len(maxima) != 1:
            raise NotUnique(maxima)
        return maxima[0]

    def sigma_equivalent(self, x, y):
        """
        Same image in the maximal group image: equal index differences and
        equal words once both are pushed to the larger left index.
        """

        if x.i - x.j != y.i - y.j:
            return False
        level = max(x.i, y.i)
        return (self.alpha.power_apply(level - x.i, x.g) ==
                self.alpha.power_apply(level - y.i, y.g))

    def format_element(self, x):

        return x.format(self.alphabet)

    def __repr__(self):

        return 'ReillySemigroup(%r)' % self.alpha


def reilly_mul(R, x, y):

    return R.mul(x, y)


def reilly_inv(x):

    return ReillyElement(x.j, x.g.inverse(), x.i)


def elements_above(R, x):

    return R.elements_above(x)


def max_above(R, x):

    return R.max_above(x)


def sigma_equivalent(R, x, y):

    return R.sigma_equivalent(x, y)


# Bicyclic monoid.

class BicyclicElement(namedtuple('BicyclicElement', 'i j')):
    """a^-i a^j."""

    def __str__(self):

        return '(%d,%d)' % (self.i, self.j)


BICYCLIC_IDENTITY = BicyclicElement(0, 0)


def bicyclic_mul(x, y):

    if x.j >= y.i:
        return BicyclicElement(x.i, x.j - y.i + y.j)
    return BicyclicElement(x.i + y.i - x.j, y.j)


def bicyclic_inv(x):

    return BicyclicElement(x.j, x.i)


def to_reilly(x):

    return ReillyElement(x.i, EPSILON, x.j)


def from_reilly(x):

    assert x.g.is_identity(), 'Only trivial words are bicyclic'
    return BicyclicElement(x.i, x.j)


class BicyclicSubmonoid(object):
    """
    Full unitary submonoid of the bicyclic monoid: E(B) for modulus 0, the
    whole of B for modulus 1, otherwise B(n) = {a^-i a^j : i = j mod n}.
    """

    def __init__(self, modulus):

        self.modulus = modulus

    @classmethod
    def idempotents(cls):

        return cls(0)

    @classmethod
    def bn(cls, n):

        if isinstance(n, bool) or not isinstance(n, int) or n < 2:
            raise InvalidN(n)
        return cls(n)

    def __contains__(self, x):

        if self.modulus == 0:
            return x.i == x.j
        return (x.j - x.i) % self.modulus == 0

    @property
    def name(self):

        if self.modulus == 0:
            return 'E(B)'
        if self.modulus == 1:
            return 'B'
        return 'B(%d)' % self.modulus

    def __eq__(self, other):

        return (isinstance(other, BicyclicSubmonoid) and
                self.modulus == other.modulus)

    def __ne__(self, other):

        return not self == other

    def __hash__(self):

        return hash(self.modulus)

    def __repr__(self):

        return self.name


def bn_membership(n, b):

    return b in BicyclicSubmonoid.bn(n)


def bicyclic_closure(sample, box):
    """Submonoid generated by the sample, kept to indices <= box."""

    closure = set([BICYCLIC_IDENTITY])
    closure.update(x for x in sample if max(x) <= box)
    frontier = list(closure)
    while frontier:
        fresh = []
        for x in frontier:
            for y in list(closure):
                for z in (bicyclic_mul(x, y), bicyclic_mul(y, x)):
                    if max(z) <= box and z not in closure:
                        closure.add(z)
                        fresh.append(z)
        frontier = fresh
    return closure


def bn_classifier(sample, box=12):
    """
    Name the listed submonoid generated by the sample: E(B), B(n), B, or
    'other' when the generated closure is not one of them on the inner
    half of the box.
    """

    closure = bicyclic_closure(sample, box)
    modulus = 0
    for x in closure:
        modulus = _gcd(modulus, abs(x.j - x.i))
    candidate = BicyclicSubmonoid(modulus)
    inner = box // 2
    expected = set(BicyclicElement(i, j)
                   for i in range(inner + 1) for j in range(inner + 1)
                   if BicyclicElement(i, j) in candidate)
    found = set(x for x in closure if max(x) <= inner)
    if found != expected:
        logger.debug('Closure of %d elements is not %s', len(closure),
                     candidate.name)
        return 'other'
    return candidate.name


def toeplitz_amalgam_group(u):
    """
    Maximal group image H of B *_u B: the free product Z * Z for E(B),
    and <a,b | a^n b^-n> for B(n).
    """

    first = GroupPresentation(['a'])
    second = GroupPresentation(['b'])
    if u.modulus == 0:
        return amalgamate_presentations(first, second, [])
    return amalgamate_presentations(
        first, second, [(ReducedWord.generator(0, u.modulus),
                         ReducedWord.generator(0, u.modulus))])


def toeplitz_subgroup_rank(u):
    """
    Rank of the free maximal subgroup at the identity of B *_u B: None
    (countably infinite) for E(B), the cycle rank of the n-fold edge for
    B(n).
    """

    if u.modulus == 0:
        return None
    report = decompose(build_block_graph([u.modulus], [u.modulus]))
    return report.k1_rank


def d_class_count(u):
    """Number of D-classes, None when infinite."""

    if u.modulus == 0:
        return None
    return u.modulus


def parse_submonoid(text):
    """`E` or `B:<n>`."""

    text = text.strip()
    if text == 'E':
        return BicyclicSubmonoid.idempotents()
    if text.startswith('B:'):
        try:
            n = int(text[2:])
        except ValueError:
            raise InvalidN(text[2:])
        return BicyclicSubmonoid.bn(n)
    raise InvalidN(text)


def shipped_endomorphism(name, rank=None):
    """Endomorphisms known to the command line by name."""

    if name == 'identity':
        return FreeEndomorphism.identity(rank)
    if name == 'shift':
        return FreeEndomorphism.shift()
    exponent = name[len('power'):]
    if name.startswith('power') and exponent.lstrip('-').isdigit():
        if int(exponent):
            return FreeEndomorphism.power(int(exponent), rank)
    raise KeyError(name)
