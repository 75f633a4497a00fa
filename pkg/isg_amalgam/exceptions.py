"""Errors raised by the amalgam calculators."""


class AmalgamError(Exception):
    """Base class of every error raised by this package."""

    exit_code = 1


class DomainError(AmalgamError):
    """The input is well formed but mathematically invalid."""

    exit_code = 1


class UsageError(AmalgamError):
    """The request itself is malformed."""

    exit_code = 2


# Inverse semigroup axioms.

class InvalidTable(UsageError):

    def __init__(self, reason):

        self.reason = reason
        super(InvalidTable, self).__init__('Invalid Cayley table: %s' % reason)


class NotAssociative(DomainError):

    def __init__(self, a, b, c):

        self.triple = (a, b, c)
        super(NotAssociative, self).__init__(
            'Not associative: (%d*%d)*%d != %d*(%d*%d)' % (a, b, c, a, b, c))


class NotRegular(DomainError):

    def __init__(self, a):

        self.element = a
        super(NotRegular, self).__init__(
            'Element %d has no inverse (not regular)' % a)


class IdempotentsDontCommute(DomainError):

    def __init__(self, e, f):

        self.pair = (e, f)
        super(IdempotentsDontCommute, self).__init__(
            'Idempotents %d and %d do not commute' % (e, f))


class NotASubsemigroup(DomainError):

    def __init__(self, witness):

        self.witness = witness
        super(NotASubsemigroup, self).__init__(
            'Subset is not an inverse subsemigroup: %s escapes it' %
            (witness,))


class NoZero(DomainError):

    def __init__(self):

        super(NoZero, self).__init__('The semigroup has no zero')


class NotIdempotent(DomainError):

    def __init__(self, element):

        self.element = element
        super(NotIdempotent, self).__init__(
            'Element %s is not an idempotent' % (element,))


# Free groups.

class GeneratorOutOfRange(DomainError):

    def __init__(self, generator, rank):

        self.generator = generator
        self.rank = rank
        super(GeneratorOutOfRange, self).__init__(
            'Generator x%d is outside the rank %s universe' %
            (generator, 'inf' if rank is None else rank))


class NotInjectiveEvidence(DomainError):

    def __init__(self, first, second):

        self.reconstructions = (first, second)
        super(NotInjectiveEvidence, self).__init__(
            'Endomorphism declared injective maps %s and %s to the same '
            'word' % (first, second))


class UnboundedPreimage(DomainError):

    def __init__(self, name, generator=None):

        self.generator = generator
        if generator is None:
            reason = 'images may lower generator indices'
        else:
            reason = 'the image of x%d only uses lower generators' % generator
        super(UnboundedPreimage, self).__init__(
            'Cannot search preimages of %s on infinite rank: %s' %
            (name, reason))


# Brandt semigroups and block graphs.

class InfiniteGroupBlock(DomainError):

    def __init__(self, block):

        self.block = block
        super(InfiniteGroupBlock, self).__init__(
            'Block %d has an infinite group' % block)


class NonTrivialGroup(DomainError):

    def __init__(self, group):

        self.group = group
        super(NonTrivialGroup, self).__init__(
            'Matrix units need a trivial group, got %s' % (group,))


class InvalidPartition(UsageError):

    def __init__(self, parts):

        self.parts = parts
        super(InvalidPartition, self).__init__(
            'Partition parts must be positive integers: %r' % (parts,))


class SumMismatch(DomainError):

    def __init__(self, left, right):

        self.sums = (left, right)
        super(SumMismatch, self).__init__(
            'Partition sums differ: %d != %d' % (left, right))


# Amalgam engine.

class InvalidLabel(UsageError):

    def __init__(self, label, size):

        self.label = label
        super(InvalidLabel, self).__init__(
            'Idempotent label %r is outside 1..%d' % (label, size))


class DifferentBlocks(DomainError):

    def __init__(self, p, q):

        self.labels = (p, q)
        super(DifferentBlocks, self).__init__(
            'Labels %d and %d lie in different blocks' % (p, q))


class MismatchedReport(DomainError):

    def __init__(self):

        super(MismatchedReport, self).__init__(
            'Decomposition report was built from other partitions')


class Infinite(DomainError):

    def __init__(self, components):

        self.components = components
        super(Infinite, self).__init__(
            'The amalgam is infinite: components %s have free groups of '
            'positive rank' % (components,))


class TooLarge(DomainError):

    def __init__(self, size, bound):

        self.size = size
        self.bound = bound
        super(TooLarge, self).__init__(
            'The amalgam has %d elements, more than the bound %d' %
            (size, bound))


# Reilly semigroups.

class NotUnique(DomainError):

    def __init__(self, maxima):

        self.maxima = maxima
        super(NotUnique, self).__init__(
            'Several maximal elements above: %s' % (maxima,))


class InvalidN(UsageError):

    def __init__(self, n):

        self.n = n
        super(InvalidN, self).__init__('B(n) needs n >= 2, got %r' % (n,))


# Graph inverse semigroups and universal groups.

class ZeroHasNoImage(DomainError):

    def __init__(self):

        super(ZeroHasNoImage, self).__init__(
            'The zero has no image in the universal group')


class UnsupportedHost(UsageError):

    def __init__(self, host):

        self.host = host
        super(UnsupportedHost, self).__init__(
            'No universal images are computable for host %r' % (host,))


# Parsing.

class ExpressionSyntaxError(UsageError):

    def __init__(self, text, line, col, expected):

        self.text = text
        self.line = line
        self.col = col
        self.expected = expected
        super(ExpressionSyntaxError, self).__init__(
            'Syntax error at line %d, column %d: expected %s' %
            (line, col, expected))
