import functools

import pytest
from isg_amalgam.exceptions import NoZero, UnsupportedHost
from isg_amalgam.gisg import GraphISGElement, gisg_mul
from isg_amalgam.reilly import BicyclicElement
from isg_amalgam.semigroup import (
    CayleyTable,
    cyclic_group,
    parse_table,
    partial_bijection_monoid,
    validate,
)
from isg_amalgam.ugroup import (
    FIRST,
    SECOND,
    AmalgamWord,
    BicyclicHost,
    GraphHost,
    combine_universal_groups,
    gamma_audit,
    gamma_image,
    host_by_name,
    maximal_group_image_presentation,
    normalize,
    random_word,
    special_amalgam_group,
    special_amalgam_letters,
    universal_group_presentation,
)
from isg_amalgam.utils import ZERO
from isg_amalgam.words import GroupPresentation, ReducedWord


def graph_element(host, p, q):

    graph = host.graph

    def path(names):

        return graph.path(names) if names else graph.vertex_path('v')

    return GraphISGElement(path(p), path(q))


def test_hosts_by_name():
    """pc:<n> and bicyclic are known; everything else is refused."""

    host = host_by_name('pc:2')
    assert isinstance(host, GraphHost)
    assert host.labels == ['a1', 'a2']
    assert isinstance(host_by_name('bicyclic'), BicyclicHost)
    for name in ('pc:0', 'pc:x', 'free'):
        with pytest.raises(UnsupportedHost):
            host_by_name(name)


def test_gamma_on_the_bicyclic_monoid():
    """Copy 2 letters use the generator after copy 1's."""

    host = BicyclicHost()
    word = AmalgamWord([(FIRST, BicyclicElement(0, 1)),
                        (SECOND, BicyclicElement(1, 0))])
    assert gamma_image(host, word) == ReducedWord([(0, 1), (1, -1)])
    assert gamma_image(host, AmalgamWord([(FIRST, ZERO)])) is ZERO
    assert special_amalgam_letters(host) == ['a_1', 'a_2']


def test_gamma_on_a_polycyclic_monoid():
    """a1_1 a2_2^-1, and zero when the host product vanishes."""

    host = host_by_name('pc:2')
    word = AmalgamWord([(FIRST, graph_element(host, ['a1'], [])),
                        (SECOND, graph_element(host, [], ['a2']))])
    assert gamma_image(host, word) == ReducedWord([(0, 1), (3, -1)])
    vanishing = AmalgamWord([(FIRST, graph_element(host, [], ['a1'])),
                             (SECOND, graph_element(host, ['a2'], []))])
    assert gamma_image(host, vanishing) is ZERO


def test_gamma_rejects_foreign_letters():
    """Letters must belong to the host."""

    word = AmalgamWord([(FIRST, BicyclicElement(0, 1))])
    with pytest.raises(UnsupportedHost):
        gamma_image(host_by_name('pc:1'), word)


def test_normalize():
    """Same copy letters merge and idempotents join their neighbour."""

    host = BicyclicHost()
    word = AmalgamWord([(FIRST, BicyclicElement(1, 1)),
                        (SECOND, BicyclicElement(0, 1))])
    assert normalize(host, word) == AmalgamWord(
        [(SECOND, BicyclicElement(1, 2))])
    word = AmalgamWord([(FIRST, BicyclicElement(0, 1)),
                        (FIRST, BicyclicElement(1, 0))])
    assert normalize(host, word) == AmalgamWord(
        [(FIRST, BicyclicElement(0, 0))])
    alternating = AmalgamWord([(FIRST, BicyclicElement(0, 1)),
                               (SECOND, BicyclicElement(1, 0))])
    assert normalize(host, alternating) == alternating
    assert normalize(host, AmalgamWord([(FIRST, ZERO)])) is ZERO


def test_normalize_finds_zero():
    """A vanishing merge makes the word zero."""

    host = host_by_name('pc:2')
    word = AmalgamWord([(FIRST, graph_element(host, [], ['a1'])),
                        (FIRST, graph_element(host, ['a2'], []))])
    assert normalize(host, word) is ZERO


def test_gamma_is_a_zero_morphism(rng):
    """A thousand random word pairs over P_2."""

    audit = gamma_audit(host_by_name('pc:2'), rng, 1000)
    assert audit.holds
    assert audit.words == 1000
    assert audit.nonzero > 0


def test_gamma_audit_on_the_bicyclic_host(rng):
    """Without a zero every word survives."""

    audit = gamma_audit(BicyclicHost(), rng, 200, bound=2)
    assert audit.holds
    assert audit.nonzero == 200


def test_gamma_zero_rule_against_a_direct_fold(rng):
    """Zero exactly when the letters multiply to zero in P_2."""

    host = host_by_name('pc:2')
    pool = host.elements(1)
    zeros = 0
    for _ in range(500):
        u = random_word(host, rng, pool, 3)
        v = random_word(host, rng, pool, 3)
        uv = u * v
        product = functools.reduce(
            gisg_mul, [element for _, element in uv.letters])
        assert (gamma_image(host, uv) is ZERO) == (product is ZERO)
        if gamma_image(host, u) is ZERO:
            zeros += 1
            assert gamma_image(host, uv) is ZERO
            assert gamma_image(host, v * u) is ZERO
    assert zeros > 0


def test_zero_propagates_through_gamma():
    """A vanishing factor kills the product on either side."""

    host = host_by_name('pc:2')
    vanishing = AmalgamWord([(FIRST, graph_element(host, [], ['a1'])),
                             (SECOND, graph_element(host, ['a2'], []))])
    other = AmalgamWord([(SECOND, graph_element(host, ['a1'], ['a1']))])
    assert gamma_image(host, other) is not ZERO
    assert gamma_image(host, vanishing * other) is ZERO
    assert gamma_image(host, other * vanishing) is ZERO


def test_special_amalgam_group():
    """Trivial G(E) gives the free product of the two copies."""

    host = host_by_name('pc:2')
    assert str(special_amalgam_group(host)) == '<a1_1,a2_1,a1_2,a2_2 |>'
    identified = special_amalgam_group(host, [ReducedWord.generator(0)])
    assert str(identified) == '<a1_1,a2_1,a1_2,a2_2 | a1_1 a1_2^-1>'
    assert str(identified.abelianization()) == 'Z (+) Z (+) Z'


def test_universal_group_of_b2(brandt_b2_text):
    """B_2 has universal group Z."""

    presentation = universal_group_presentation(
        validate(parse_table(brandt_b2_text)))
    assert presentation.generators == ['s1', 's2', 's3', 's4']
    assert len(presentation.relators) == 8
    abelian = presentation.abelianization()
    assert abelian.free_rank == 1
    assert abelian.torsion == ()


def test_universal_group_of_small_semigroups():
    """A two element semilattice is trivial; a shift gives Z."""

    semilattice = validate(CayleyTable([[0, 0], [0, 1]]))
    presentation = universal_group_presentation(semilattice)
    assert str(presentation) == '<s1 | s1>'
    assert str(presentation.abelianization()) == '0'
    shift = partial_bijection_monoid([(1, None)], 2)
    assert str(universal_group_presentation(shift).abelianization()) == 'Z'
    with pytest.raises(NoZero):
        universal_group_presentation(cyclic_group(2))


def test_maximal_group_image_presentation(brandt_b2_text):
    """Read off the sigma quotient table."""

    assert str(maximal_group_image_presentation(cyclic_group(2))
               .abelianization()) == 'Z/2'
    b2 = validate(parse_table(brandt_b2_text))
    presentation = maximal_group_image_presentation(b2)
    assert str(presentation) == '<c0 | c0>'
    assert str(presentation.abelianization()) == '0'


def test_combine_universal_groups():
    """Identified generator pairs become relators."""

    first = GroupPresentation(['a'])
    second = GroupPresentation(['b'])
    x = ReducedWord.generator(0)
    combined = combine_universal_groups(first, second, [(x ** 2, x ** 3)])
    assert str(combined) == '<a,b | a^2 b^-3>'
    assert str(combined.abelianization()) == 'Z'
