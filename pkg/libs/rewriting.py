"""
Brute force rewriting in the amalgam of two 0-direct unions of
combinatorial Brandt semigroups over their common idempotents.

Letters are triples `(side, p, q)` for the matrix unit (p, q) of the side
`P` or `Q`; diagonal units of either side become the shared letter
`('E', p, p)`.  Words are tuples of letters, `ZERO_WORD` is the zero.
Two words are equal when rewriting, after at most one expansion of a
letter, reaches a common word.  Nothing here looks at block graphs.
"""

import logging
from bisect import bisect_left
from collections import deque
from itertools import accumulate, product

from isg_amalgam import conf

logger = logging.getLogger(__name__)

ZERO_WORD = 'zero'
SHARED = 'E'


def compositions(n):
    """Ordered partitions of n, one per subset of the n - 1 cut points."""

    for cuts in product([False, True], repeat=n - 1):
        parts = [1]
        for cut in cuts:
            if cut:
                parts.append(1)
            else:
                parts[-1] += 1
        yield parts


def inverse_word(word):

    return tuple((side, q, p) for side, p, q in reversed(word))


class RewritingOracle(object):
    """Word problem of the amalgam of `left` and `right`, by search."""

    def __init__(self, left, right, max_length=None):

        assert sum(left) == sum(right), 'Partitions of different integers'
        self.N = sum(left)
        self.cumulative = {
            'P': list(accumulate(left)),
            'Q': list(accumulate(right)),
        }
        self.max_length = max_length or conf.ORACLE_MAX_LENGTH
        self.cache = {}

    def block(self, side, label):

        return bisect_left(self.cumulative[side], label)

    def block_labels(self, side, label):

        index = self.block(side, label)
        first = self.cumulative[side][index - 1] + 1 if index else 1
        return range(first, self.cumulative[side][index] + 1)

    def letter(self, side, p, q):

        assert self.block(side, p) == self.block(side, q), (
            '%d and %d lie in different %s blocks' % (p, q, side))
        if p == q:
            return (SHARED, p, p)
        return (side, p, q)

    def word(self, letters):

        return tuple(self.letter(*letter) for letter in letters)

    # Rewriting.

    def moves(self, word):
        """Every word one rewriting step away."""

        if word == ZERO_WORD:
            return
        for i in range(len(word) - 1):
            a, b = word[i], word[i + 1]
            if a[2] != b[1]:
                yield ZERO_WORD
            elif a[0] == SHARED:
                yield word[:i] + word[i + 1:]
            elif b[0] == SHARED:
                yield word[:i + 1] + word[i + 2:]
            elif a[0] == b[0]:
                yield word[:i] + (self.letter(a[0], a[1], b[2]),) + word[i + 2:]
        # x x^-1 x = x on subwords.
        for size in range(1, len(word) // 3 + 1):
            for i in range(len(word) - 3 * size + 1):
                x = word[i:i + size]
                if (word[i + size:i + 2 * size] == inverse_word(x) and
                        word[i + 2 * size:i + 3 * size] == x):
                    yield word[:i] + x + word[i + 3 * size:]

    def descendants(self, word):

        if word in self.cache:
            return self.cache[word]
        seen = set([word])
        queue = deque([word])
        while queue:
            for successor in self.moves(queue.popleft()):
                if successor not in seen:
                    seen.add(successor)
                    queue.append(successor)
        self.cache[word] = frozenset(seen)
        logger.debug('Rewrote %r into %d words', word, len(seen))
        return self.cache[word]

    def expansions(self, word):
        """Split one letter (s,p,r) into (s,p,q)(s,q,r) inside its block."""

        result = [word]
        if word == ZERO_WORD or len(word) + 1 > self.max_length:
            return result
        for i, (side, p, r) in enumerate(word):
            sides = ('P', 'Q') if side == SHARED else (side,)
            for split_side in sides:
                for q in self.block_labels(split_side, p):
                    pair = (self.letter(split_side, p, q),
                            self.letter(split_side, q, r))
                    result.append(word[:i] + pair + word[i + 1:])
        return result

    def closure(self, word):

        reached = set()
        for expanded in self.expansions(word):
            reached.update(self.descendants(expanded))
        return reached

    def equal(self, u, v):

        return bool(self.closure(u) & self.closure(v))

    def is_zero(self, word):

        return ZERO_WORD in self.descendants(word)

    def normal_form(self, word):
        """Shortest descendant, `ZERO_WORD` for zero words."""

        found = self.descendants(word)
        if ZERO_WORD in found:
            return ZERO_WORD
        return min(found, key=lambda w: (len(w), w))
