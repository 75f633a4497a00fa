"""
Text grammars for words, Reilly triples, amalgam expressions, graph
inverse semigroup elements, special amalgam words and the input files.

Every parser raises `ExpressionSyntaxError` with line and column on bad
input.
"""

from pyparsing import (
    Forward,
    Group,
    Keyword,
    Literal,
    OneOrMore,
    Optional,
    ParseBaseException,
    Regex,
    Suppress,
    Word,
    ZeroOrMore,
    alphanums,
    col,
    lineno,
    nums,
    oneOf,
    pythonStyleComment,
)

from .brandt import BlockSum, GroupSpec
from .exceptions import ExpressionSyntaxError, UsageError
from .gisg import DirectedGraph, GraphISGElement
from .reilly import BicyclicElement, ReillyElement
from .ugroup import AmalgamWord, BicyclicHost
from .utils import ZERO
from .words import Alphabet, ReducedWord

LABEL = Regex(r"[A-Za-z][A-Za-z0-9]*(?:_[0-9]+)?")
INTEGER = Regex(r'-?[0-9]+')
NATURAL = Word(nums)
NAME = Word(alphanums + '_')
PRIMES = ZeroOrMore(Literal("'"))


def parse(grammar, text):
    """Run a grammar over the whole text, translating parse errors."""

    try:
        return grammar.parseString(text, parseAll=True)
    except ParseBaseException as error:
        raise ExpressionSyntaxError(text, error.lineno, error.col, error.msg)


def fail(text, loc, expected):

    raise ExpressionSyntaxError(text, lineno(loc, text), col(loc, text),
                                expected)


# Words.

class Letter(object):

    def __init__(self, label, exponent, loc):

        self.label = label
        self.exponent = exponent
        self.loc = loc


def letter_action(s, loc, toks):

    primes = list(toks).count("'")
    exponent = int(toks['exponent']) if 'exponent' in toks else 1
    return [Letter(toks[0], -exponent if primes % 2 else exponent, loc)]


LETTER = (LABEL + PRIMES +
          Optional(Suppress('^') + INTEGER('exponent')))
LETTER.setParseAction(letter_action)


class Letters(object):

    def __init__(self, letters):

        self.letters = letters


def word_action(s, loc, toks):

    return [Letters([token for token in toks if isinstance(token, Letter)])]


WORD = (Literal('1') | OneOrMore(LETTER)).setParseAction(word_action)


def build_word(letters, text, alphabet, extend):

    result = []
    for letter in letters:
        try:
            generator = alphabet.index(letter.label, extend=extend)
        except KeyError:
            fail(text, letter.loc, 'a known generator label')
        sign = 1 if letter.exponent >= 0 else -1
        result.extend([(generator, sign)] * abs(letter.exponent))
    return ReducedWord(result)


def parse_word(text, alphabet=None, extend=False):
    """
    Juxtaposed letters, `'` inverts and `^k` raises; `1` is the empty
    word.  Without an alphabet letters are spelled x0, x1, ...  A label is
    a letter followed by letters and digits, so adjacent letters are
    separated by spaces.
    """

    alphabet = alphabet if alphabet is not None else Alphabet()
    tokens = parse(WORD, text)
    return build_word(tokens[0].letters, text, alphabet, extend)


# Reilly triples.

TRIPLE = (Suppress('(') + NATURAL('i') + Suppress(',') + WORD('g') +
          Suppress(',') + NATURAL('j') + Suppress(')'))


def parse_reilly(text, alphabet=None, extend=False):
    """`(i,word,j)`."""

    alphabet = alphabet if alphabet is not None else Alphabet()
    tokens = parse(TRIPLE, text)
    word = build_word(tokens['g'][0].letters, text, alphabet, extend)
    return ReillyElement(int(tokens['i']), word, int(tokens['j']))


BICYCLIC = (Suppress('(') + NATURAL('i') + Suppress(',') + NATURAL('j') +
            Suppress(')'))


def parse_bicyclic(text):
    """`(i,j)` for a^-i a^j, or `0` for the adjoined zero."""

    if text.strip() == '0':
        return ZERO
    tokens = parse(BICYCLIC, text)
    return BicyclicElement(int(tokens['i']), int(tokens['j']))


# Amalgam expressions.  Parse actions build evaluators taking the amalgam.

def idempotent_action(s, loc, toks):

    label = int(toks[0][1:])
    return [lambda amalgam: amalgam.idempotent(label)]


def generator_action(s, loc, toks):

    p, q, side = int(toks[0]), int(toks[1]), toks[2]
    return [lambda amalgam: amalgam.embed(side, p, q)]


def postfix_action(s, loc, toks):

    value = toks[0]
    if (len(toks) - 1) % 2:
        return [lambda amalgam: amalgam.inv(value(amalgam))]
    return [value]


def product_action(s, loc, toks):

    factors = list(toks)
    return [lambda amalgam: amalgam.product(
        *[factor(amalgam) for factor in factors])]


AMALGAM = Forward()
IDEMPOTENT = Regex(r'e[0-9]+').setParseAction(idempotent_action)
GENERATOR = (Suppress('[') + NATURAL + Suppress(',') + NATURAL +
             Suppress(']') + oneOf('P Q')).setParseAction(generator_action)
AMALGAM_ZERO = Literal('0').setParseAction(lambda: [lambda amalgam: ZERO])
ATOM = (IDEMPOTENT | GENERATOR | AMALGAM_ZERO |
        Suppress('(') + AMALGAM + Suppress(')'))
POSTFIX = (ATOM + PRIMES).setParseAction(postfix_action)
AMALGAM <<= (POSTFIX + ZeroOrMore(Suppress('*') + POSTFIX)).setParseAction(
    product_action)


def parse_amalgam(text, amalgam):
    """`e<j>`, `[p,q]P`, `[p,q]Q`, `0`, products with `*`, `'` inverts."""

    tokens = parse(AMALGAM, text)
    return tokens[0](amalgam)


def format_amalgam(amalgam, x):
    """Canonical expression: the generators read along the walk."""

    if x is ZERO:
        return '0'
    if x.is_idempotent():
        return 'e%d' % x.start
    factors = []
    previous = x.start
    for vertex, target in x.steps:
        factors.append('[%d,%d]%s' % (previous, target,
                                      amalgam.graph.side(vertex)))
        previous = target
    return ' * '.join(factors)


# Graph inverse semigroup elements.

class PathSpec(object):

    def __init__(self, loc, names):

        self.loc = loc
        self.names = names


def path_action(s, loc, toks):

    return [PathSpec(loc, list(toks))]


PATH = ((Literal('@') + NAME) |
        (NAME + ZeroOrMore(Suppress('.') + NAME))).setParseAction(path_action)
GISG = (Literal('0') |
        PATH('p') + Suppress('*') + PATH('q') + Suppress("'"))


def build_path(graph, parsed, text):

    loc, names = parsed.loc, parsed.names
    if names[0] == '@':
        if names[1] not in graph.vertices:
            fail(text, loc, 'a vertex of the graph')
        return graph.vertex_path(names[1])
    if any(name not in graph.edge_index for name in names):
        fail(text, loc, 'edges of the graph')
    path = graph.path(names)
    if path is None:
        fail(text, loc, 'a composable path')
    return path


def parse_gisg(text, graph):
    """`p * q'` with dot separated edges or `@v`; `0` for zero."""

    tokens = parse(GISG, text)
    if tokens[0] == '0':
        return ZERO
    p = build_path(graph, tokens['p'][0], text)
    q = build_path(graph, tokens['q'][0], text)
    if p.target != q.target:
        fail(text, tokens['q'][0].loc, 'a path ending where p ends')
    return GraphISGElement(p, q)


def format_gisg(x):

    return '0' if x is ZERO else x.format()


# Special amalgam words.

GAMMA_LETTER = Group(oneOf('1 2')('copy') + Suppress('[') +
                     Regex(r"[^\]]+")('element') + Suppress(']'))
GAMMA_WORD = OneOrMore(GAMMA_LETTER)


def parse_gamma(text, host):
    """`1[x] 2[y] ...`: copy number and a host element per letter."""

    letters = []
    for letter in parse(GAMMA_WORD, text):
        if isinstance(host, BicyclicHost):
            element = parse_bicyclic(letter['element'])
        else:
            element = parse_gisg(letter['element'], host.graph)
        letters.append((int(letter['copy']), element))
    return AmalgamWord(letters)


# Files.

def parse_graph(text):
    """Lines `vertex <name>` and `edge <name> <source> <range>`."""

    vertex = Group(Keyword('vertex') + NAME)
    edge = Group(Keyword('edge') + NAME + NAME + NAME)
    grammar = ZeroOrMore(vertex | edge)
    grammar.ignore(pythonStyleComment)
    vertices = []
    edges = []
    for line in parse(grammar, text):
        if line[0] == 'vertex':
            vertices.append(line[1])
        else:
            edges.append(tuple(line[1:]))
    known = set(vertices)
    for name, source, target in edges:
        if source not in known or target not in known:
            raise UsageError('Edge %s has an undeclared endpoint' % name)
    return DirectedGraph(vertices, edges)


PARTITION = NATURAL + ZeroOrMore(Suppress(',') + NATURAL)


def parse_partition(text):
    """Comma separated positive block sizes."""

    return [int(part) for part in parse(PARTITION, text)]


GROUP_TOKEN = Regex(r'1|F[0-9]+|C[1-9][0-9]*')


def group_spec(token):

    if token == '1':
        return GroupSpec.trivial()
    if token[0] == 'F':
        return GroupSpec.free(int(token[1:]))
    return GroupSpec.cyclic(int(token[1:]))


def parse_block_sum(text):
    """`blocks = 3,3,2` and an optional `groups = 1,F1,C2` line."""

    blocks = Keyword('blocks') + Suppress('=') + Group(PARTITION)('sizes')
    groups = (Keyword('groups') + Suppress('=') +
              Group(GROUP_TOKEN + ZeroOrMore(Suppress(',') +
                                             GROUP_TOKEN))('groups'))
    grammar = blocks + Optional(groups)
    grammar.ignore(pythonStyleComment)
    tokens = parse(grammar, text)
    sizes = [int(size) for size in tokens['sizes']]
    if 'groups' not in tokens:
        return BlockSum(sizes)
    specs = [group_spec(token) for token in tokens['groups']]
    if len(specs) != len(sizes):
        raise UsageError('%d groups for %d blocks' % (len(specs), len(sizes)))
    return BlockSum(sizes, specs)


WORD_TAG = 'word'
REILLY_TAG = 'reilly'
AMALGAM_TAG = 'amalgam'
GISG_TAG = 'gisg'
BICYCLIC_TAG = 'bicyclic'
GAMMA_TAG = 'gamma'


def parse_element_expression(tag, text, context=None):
    """Dispatch on the grammar tag; `context` is the host structure."""

    grammars = {
        WORD_TAG: lambda: parse_word(text, context),
        REILLY_TAG: lambda: parse_reilly(text, context),
        AMALGAM_TAG: lambda: parse_amalgam(text, context),
        GISG_TAG: lambda: parse_gisg(text, context),
        BICYCLIC_TAG: lambda: parse_bicyclic(text),
        GAMMA_TAG: lambda: parse_gamma(text, context),
    }
    if tag not in grammars:
        raise UsageError('Unknown grammar %r' % tag)
    return grammars[tag]()
