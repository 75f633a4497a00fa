import itertools
import time

import pytest
from isg_amalgam.engine import (
    Amalgam,
    AmalgamWalk,
    NormalForm,
    embed,
    enumerate_if_finite,
    normal_form,
)
from isg_amalgam.exceptions import (
    DifferentBlocks,
    Infinite,
    InvalidLabel,
    MismatchedReport,
    TooLarge,
)
from isg_amalgam.graph import LEFT, RIGHT, build_block_graph, decompose
from isg_amalgam.utils import ZERO
from isg_amalgam.words import ReducedWord

from rewriting import SHARED, ZERO_WORD, RewritingOracle, compositions

WORKED_LEFT = [3, 3, 2]
WORKED_RIGHT = [2, 1, 2, 3]


@pytest.fixture
def worked():

    return Amalgam(WORKED_LEFT, WORKED_RIGHT)


@pytest.fixture
def loop(worked):
    """The generator of the first component: out on P1, back on Q1."""

    return worked.mul(worked.embed(LEFT, 1, 2), worked.embed(RIGHT, 2, 1))


def walk_word(amalgam, oracle, x):
    """Spell a walk in the rewriting oracle's letters."""

    if x is ZERO:
        return ZERO_WORD
    if x.is_idempotent():
        return ((SHARED, x.start, x.start),)
    letters = []
    previous = x.start
    for vertex, target in x.steps:
        letters.append(oracle.letter(amalgam.graph.side(vertex), previous,
                                     target))
        previous = target
    return tuple(letters)


def random_product(amalgam, oracle, rng, length):

    generators = amalgam.generators()
    picked = [rng.choice(generators) for _ in range(length)]
    walk = amalgam.product(*[generator[3] for generator in picked])
    word = oracle.word([generator[:3] for generator in picked])
    return walk, word


def test_idempotents_and_generators(worked):
    """Diagonal generators are the shared idempotents."""

    assert worked.embed(LEFT, 4, 4) == worked.idempotent(4)
    assert worked.embed(RIGHT, 4, 4) == worked.idempotent(4)
    assert worked.idempotent(4).is_idempotent()
    assert embed(worked, LEFT, 1, 3) == AmalgamWalk(1, [(0, 3)])


def test_embedding_errors(worked):
    """Labels outside 1..N or in different blocks are rejected."""

    with pytest.raises(DifferentBlocks) as error:
        worked.embed(RIGHT, 1, 3)
    assert error.value.labels == (1, 3)
    with pytest.raises(InvalidLabel):
        worked.idempotent(0)
    with pytest.raises(InvalidLabel):
        worked.embed(LEFT, 1, 9)


def test_brandt_rule_inside_a_factor(worked):
    """(p,q)(q,r) = (p,r); (p,q)(r,s) = 0 when q != r."""

    a = worked.embed(LEFT, 1, 2)
    b = worked.embed(LEFT, 2, 3)
    assert worked.mul(a, b) == worked.embed(LEFT, 1, 3)
    assert worked.mul(a, a) is ZERO
    assert worked.mul(ZERO, a) is ZERO
    assert worked.mul(a, worked.inv(a)) == worked.idempotent(1)


def test_worked_loop(worked, loop):
    """The loop through label 2 is the generator g2 of component 1."""

    assert worked.format_element(loop) == 'm1-P1-m2-Q1-m1'
    form = worked.normal_form(loop)
    assert form == NormalForm(1, 1, ReducedWord.generator(0), 1)
    assert worked.format_normal_form(form) == '(comp=1, 1, g2, 1)'
    assert worked.from_normal_form(*form) == loop


def test_loop_has_infinite_order(worked, loop):
    """Powers of the loop are distinct and cancel against the inverse."""

    powers = [loop]
    for _ in range(4):
        powers.append(worked.mul(powers[-1], loop))
    assert len(set(powers)) == 5
    assert worked.normal_form(powers[-1]).word == ReducedWord.generator(0, 5)
    assert worked.mul(loop, worked.inv(loop)) == worked.idempotent(1)
    assert worked.mul(worked.inv(loop), loop) == worked.idempotent(1)


def test_inverse_axioms(worked, rng):
    """x x^-1 x = x and x^-1 is an involution on random products."""

    oracle = RewritingOracle(WORKED_LEFT, WORKED_RIGHT)
    for _ in range(50):
        x, _ = random_product(worked, oracle, rng, 4)
        if x is ZERO:
            continue
        inverse = worked.inv(x)
        assert worked.inv(inverse) == x
        assert worked.product(x, inverse, x) == x
        assert worked.mul(x, inverse).is_idempotent()


def test_normal_form_round_trip(worked):
    """Walks and normal forms determine each other."""

    second = worked.report.components[1]
    word = ReducedWord([(0, 1), (1, -1), (0, 1)])
    walk = worked.from_normal_form(2, 4, word, 7)
    assert worked.normal_form(walk) == NormalForm(2, 4, word, 7)
    assert worked.format_normal_form(worked.normal_form(walk)) == (
        "(comp=2, 4, g5 g8' g5, 7)")
    assert second.non_tree == [5, 8]
    assert worked.normal_form(worked.tree_path(4, 7)).word.is_identity()
    assert worked.format_normal_form(ZERO) == '0'


def test_normal_forms_are_multiplicative(worked, rng):
    """Words multiply by the Brandt rule in B_k(F_q)."""

    oracle = RewritingOracle(WORKED_LEFT, WORKED_RIGHT)
    for _ in range(100):
        x, _ = random_product(worked, oracle, rng, 3)
        y, _ = random_product(worked, oracle, rng, 3)
        product = worked.mul(x, y)
        if product is ZERO:
            continue
        form = worked.normal_form(product)
        assert form.word == (worked.normal_form(x).word *
                             worked.normal_form(y).word)
        assert form.row == x.start
        assert form.col == y.end


def test_normal_form_checks_the_report(worked, loop):
    """A report of other partitions is refused."""

    assert normal_form(worked, loop, worked.report).row == 1
    other = decompose(build_block_graph([2], [1, 1]))
    with pytest.raises(MismatchedReport):
        normal_form(worked, loop, other)
    assert worked.normal_form(ZERO) is ZERO


def test_different_components(worked):
    """Labels of different components never meet."""

    with pytest.raises(DifferentBlocks):
        worked.tree_path(1, 4)
    with pytest.raises(DifferentBlocks):
        worked.from_normal_form(1, 1, ReducedWord(), 4)
    assert worked.mul(worked.idempotent(1), worked.idempotent(4)) is ZERO


def test_enumerate_tree_amalgam():
    """[2] x [1,1] is B_2."""

    finite = enumerate_if_finite([2], [1, 1])
    assert finite.size == 5
    assert finite.semigroup.n == 5
    assert finite.structure.sizes == [2]
    assert finite.isomorphic_table()
    assert finite.semigroup.green().d == [[0], [1, 2, 3, 4]]
    assert finite.semigroup.label(2) == 'm1-P1-m2'


def test_enumerate_two_components():
    """[1,1] x [1,1] is two copies of B_1 and a zero."""

    finite = Amalgam([1, 1], [1, 1]).enumerate_if_finite(workers=2)
    assert finite.size == 3
    assert finite.isomorphic_table()
    assert len(finite.semigroup.idempotents) == 3


def test_enumerate_refuses_infinite_and_large():
    """Cycles make the amalgam infinite; the bound caps the table."""

    with pytest.raises(Infinite) as error:
        Amalgam(WORKED_LEFT, WORKED_RIGHT).enumerate_if_finite()
    assert error.value.components == [1, 2]
    with pytest.raises(TooLarge) as error:
        Amalgam([3], [1, 1, 1]).enumerate_if_finite(bound=5)
    assert error.value.size == 10


def test_enumeration_matches_prediction_for_small_trees():
    """Every forest amalgam with N <= 4 is the predicted block sum."""

    for n in range(1, 5):
        for left, right in itertools.product(compositions(n), repeat=2):
            amalgam = Amalgam(left, right)
            if not amalgam.report.is_forest():
                continue
            finite = amalgam.enumerate_if_finite()
            assert finite.size == 1 + sum(c.k ** 2
                                          for c in amalgam.report.components)
            assert finite.isomorphic_table()


@pytest.mark.slow
def test_enumeration_matches_prediction_up_to_six():
    """Every forest amalgam with N <= 6, inside ten seconds."""

    started = time.perf_counter()
    forests = 0
    for n in range(1, 7):
        for left, right in itertools.product(compositions(n), repeat=2):
            amalgam = Amalgam(left, right)
            if not amalgam.report.is_forest():
                continue
            forests += 1
            finite = amalgam.enumerate_if_finite()
            assert finite.size == 1 + sum(c.k ** 2
                                          for c in amalgam.report.components)
            assert finite.isomorphic_table()
    assert forests > 0
    assert time.perf_counter() - started < 10


def check_against_oracle(left, right, rng, count):

    amalgam = Amalgam(left, right)
    oracle = RewritingOracle(left, right)
    for _ in range(count):
        x, u = random_product(amalgam, oracle, rng, rng.randint(1, 4))
        assert oracle.normal_form(u) == walk_word(amalgam, oracle, x)
        y, v = random_product(amalgam, oracle, rng, rng.randint(1, 4))
        if x is ZERO or y is ZERO:
            assert oracle.is_zero(u) == (x is ZERO)
            continue
        assert oracle.equal(u, v) == (x == y)


def test_walks_agree_with_rewriting(rng):
    """Walk arithmetic matches brute force rewriting on small amalgams."""

    for left, right in [([2], [1, 1]), ([2], [2]), ([2, 1], [1, 2]),
                        ([3], [1, 2])]:
        check_against_oracle(left, right, rng, 30)


def check_every_product(left, right, length):
    """All products of up to `length` distinct generators against the
    rewriting normal form.  Returns how many were compared."""

    amalgam = Amalgam(left, right)
    oracle = RewritingOracle(left, right)
    generators = [generator for generator in amalgam.generators()
                  if generator[0] == LEFT or generator[1] != generator[2]]
    checked = 0
    for k in range(1, length + 1):
        for picked in itertools.product(generators, repeat=k):
            x = amalgam.product(*[generator[3] for generator in picked])
            u = oracle.word([generator[:3] for generator in picked])
            assert oracle.normal_form(u) == walk_word(amalgam, oracle, x)
            checked += 1
    return checked


def test_every_short_product_agrees_with_rewriting():
    """Exhaustive up to four generators when N <= 2."""

    assert check_every_product([2], [2], 4) == 6 + 6 ** 2 + 6 ** 3 + 6 ** 4
    assert check_every_product([1, 1], [1, 1], 4) == 2 + 4 + 8 + 16
    for left, right in [([1], [1]), ([2], [1, 1]), ([1, 1], [2])]:
        assert check_every_product(left, right, 4)


def test_oracle_identifies_equal_products():
    """Two spellings of the same element are equal for both models."""

    amalgam = Amalgam([2], [2])
    oracle = RewritingOracle([2], [2])
    u = oracle.word([(LEFT, 1, 2), (LEFT, 2, 1)])
    v = oracle.word([(RIGHT, 1, 2), (RIGHT, 2, 1)])
    assert oracle.equal(u, v)
    assert amalgam.mul(amalgam.embed(LEFT, 1, 2),
                       amalgam.embed(LEFT, 2, 1)) == amalgam.mul(
        amalgam.embed(RIGHT, 1, 2), amalgam.embed(RIGHT, 2, 1))
    w = oracle.word([(LEFT, 1, 2), (RIGHT, 2, 1)])
    assert not oracle.equal(u, w)


@pytest.mark.slow
def test_walks_agree_with_rewriting_up_to_five(rng):
    """Sampled products for every partition pair with N = 4 or 5."""

    for n in (4, 5):
        for left, right in itertools.product(compositions(n), repeat=2):
            check_against_oracle(left, right, rng, 10)


@pytest.mark.slow
def test_every_product_agrees_with_rewriting_up_to_three():
    """Exhaustive up to four generators for every pair with N = 3."""

    for left, right in itertools.product(compositions(3), repeat=2):
        assert check_every_product(left, right, 4)
