import itertools

import pytest
from isg_amalgam.exceptions import InvalidN, NotUnique
from isg_amalgam.reilly import (
    BicyclicElement,
    BicyclicSubmonoid,
    ReillyElement,
    ReillySemigroup,
    bicyclic_inv,
    bicyclic_mul,
    bn_classifier,
    bn_membership,
    d_class_count,
    elements_above,
    from_reilly,
    max_above,
    parse_submonoid,
    reilly_inv,
    reilly_mul,
    shipped_endomorphism,
    sigma_equivalent,
    to_reilly,
    toeplitz_amalgam_group,
    toeplitz_subgroup_rank,
)
from isg_amalgam.words import EPSILON, FreeEndomorphism, ReducedWord

x0 = ReducedWord.generator(0)
x1 = ReducedWord.generator(1)
x2 = ReducedWord.generator(2)


@pytest.fixture
def shift():

    return ReillySemigroup(FreeEndomorphism.shift())


def random_element(rng):

    letters = [(rng.randrange(3), rng.choice([1, -1]))
               for _ in range(rng.randrange(4))]
    return ReillyElement(rng.randrange(4), ReducedWord(letters),
                         rng.randrange(4))


def check_axioms(R, rng, count):
    """Associativity, x x^-1 x = x and commuting idempotents."""

    for _ in range(count):
        x, y, z = [random_element(rng) for _ in range(3)]
        assert R.mul(R.mul(x, y), z) == R.mul(x, R.mul(y, z))
        assert R.product(x, R.inv(x), x) == x
        e, f = R.mul(x, R.inv(x)), R.mul(R.inv(y), y)
        assert R.is_idempotent(e) and R.is_idempotent(f)
        assert R.mul(e, f) == R.mul(f, e)


def test_multiplication_with_shift(shift):
    """Both branches of the product rule."""

    assert reilly_mul(shift, ReillyElement(1, x0, 2),
                      ReillyElement(2, x0, 1)) == ReillyElement(1, x0 * x0, 1)
    assert shift.mul(ReillyElement(0, x0, 1), ReillyElement(0, x1, 0)) == (
        ReillyElement(0, x0 * x2, 1))
    assert shift.mul(ReillyElement(0, EPSILON, 2), ReillyElement(3, x0, 0)) == (
        ReillyElement(1, x0, 0))


def test_identity_and_inverses(shift, rng):
    """(0,1,0) is the identity and x x^-1 x = x."""

    for _ in range(50):
        x = random_element(rng)
        assert shift.mul(shift.identity, x) == x
        assert shift.mul(x, shift.identity) == x
        inverse = reilly_inv(x)
        assert inverse == shift.inv(x)
        assert shift.product(x, inverse, x) == x
        assert shift.is_idempotent(shift.mul(x, inverse))


def test_inverse_semigroup_axioms(shift, rng):
    """Shift, identity and squaring endomorphisms."""

    check_axioms(shift, rng, 200)
    check_axioms(ReillySemigroup(FreeEndomorphism.identity()), rng, 200)
    check_axioms(ReillySemigroup(FreeEndomorphism.power(2)), rng, 200)


@pytest.mark.slow
def test_axiom_sweep(rng):
    """Ten thousand random triples per endomorphism."""

    for alpha in (FreeEndomorphism.shift(), FreeEndomorphism.identity(),
                  FreeEndomorphism.power(2), FreeEndomorphism.power(-3)):
        check_axioms(ReillySemigroup(alpha), rng, 10000)


def test_elements_above(shift):
    """Climb while the word keeps a preimage."""

    assert elements_above(shift, ReillyElement(1, x1, 1)) == [
        ReillyElement(1, x1, 1), ReillyElement(0, x0, 0)]
    assert elements_above(shift, ReillyElement(1, x0, 1)) == [
        ReillyElement(1, x0, 1)]
    assert elements_above(shift, ReillyElement(0, x2, 5)) == [
        ReillyElement(0, x2, 5)]


def test_elements_above_are_above(shift):
    """Every listed element is above the starting one."""

    x = ReillyElement(3, x2 * x2.inverse() * x2 * x1, 2)
    for y in elements_above(shift, x):
        assert shift.natural_leq(x, y)


def test_chains_above_every_index_pair(shift, rng):
    """For i, j <= 6 the elements above form a chain under one maximum,
    and only idempotents lie above an idempotent."""

    for i, j in itertools.product(range(7), repeat=2):
        words = [EPSILON]
        for _ in range(4):
            letters = [(rng.randrange(3), rng.choice([1, -1]))
                       for _ in range(rng.randrange(1, 4))]
            words.append(shift.alpha.power_apply(rng.randrange(4),
                                                 ReducedWord(letters)))
        for word in words:
            x = ReillyElement(i, word, j)
            above = elements_above(shift, x)
            top = max_above(shift, x)
            assert above[0] == x
            assert top == above[-1]
            for lower, upper in zip(above, above[1:]):
                assert shift.natural_leq(lower, upper)
            for y in above:
                assert shift.natural_leq(x, y)
                assert shift.natural_leq(y, top)
            if shift.is_idempotent(x):
                assert all(shift.is_idempotent(y) for y in above)
                assert len(above) == min(i, j) + 1


def test_max_above(shift):
    """The topmost element of the chain."""

    assert max_above(shift, ReillyElement(2, x1, 3)) == ReillyElement(1, x0, 2)
    assert shift.natural_leq(ReillyElement(2, x1, 3), ReillyElement(1, x0, 2))
    assert max_above(shift, ReillyElement(1, x0, 1)) == ReillyElement(1, x0, 1)


def test_max_above_rejects_several_maxima(shift, monkeypatch):
    """Incomparable elements above leave no unique maximum."""

    incomparable = [ReillyElement(0, x0, 0), ReillyElement(0, x1, 0)]
    monkeypatch.setattr(shift, 'elements_above', lambda x: incomparable)
    with pytest.raises(NotUnique) as error:
        shift.max_above(ReillyElement(1, x1, 1))
    assert error.value.maxima == incomparable


def test_sigma(shift):
    """Equal index difference and equal pushed words."""

    assert sigma_equivalent(shift, ReillyElement(0, x0, 0),
                            ReillyElement(1, x1, 1))
    assert not sigma_equivalent(shift, ReillyElement(0, x0, 0),
                                ReillyElement(1, x0, 1))
    assert not sigma_equivalent(shift, ReillyElement(0, EPSILON, 1),
                                ReillyElement(0, EPSILON, 0))


def test_sigma_relates_elements_above(shift):
    """Elements in one chain share their group image."""

    x = ReillyElement(2, x2 * x1.inverse(), 4)
    for y in elements_above(shift, x):
        assert shift.sigma_equivalent(x, y)


def test_element_printing():
    """(i,word,j) with the canonical word spelling."""

    assert str(ReillyElement(1, x0 * x1.inverse(), 2)) == "(1,x0 x1',2)"
    assert ReillyElement(0, EPSILON, 0).format() == '(0,1,0)'


def test_bicyclic_monoid():
    """a^-i a^j multiplies like the Reilly semigroup over the trivial group."""

    bicyclic = ReillySemigroup.bicyclic()
    box = [BicyclicElement(i, j) for i in range(11) for j in range(11)]
    for x, y in itertools.product(box, repeat=2):
        assert from_reilly(bicyclic.mul(to_reilly(x), to_reilly(y))) == (
            bicyclic_mul(x, y))
    assert bicyclic_mul(BicyclicElement(0, 1), BicyclicElement(1, 0)) == (
        BicyclicElement(0, 0))
    assert bicyclic_mul(BicyclicElement(1, 0), BicyclicElement(0, 1)) == (
        BicyclicElement(1, 1))
    assert bicyclic_inv(BicyclicElement(2, 5)) == BicyclicElement(5, 2)
    assert str(BicyclicElement(2, 5)) == '(2,5)'


def test_bn_membership():
    """B(n) holds a^-i a^j with i = j mod n."""

    assert bn_membership(2, BicyclicElement(1, 3))
    assert not bn_membership(2, BicyclicElement(0, 1))
    assert bn_membership(3, BicyclicElement(4, 1))
    with pytest.raises(InvalidN):
        bn_membership(1, BicyclicElement(0, 0))
    with pytest.raises(InvalidN):
        BicyclicSubmonoid.bn(True)
    assert BicyclicElement(2, 2) in BicyclicSubmonoid.idempotents()
    assert BicyclicElement(1, 2) not in BicyclicSubmonoid.idempotents()


def test_bn_classifier():
    """Generated closures are named, or reported as other."""

    idempotents = [BicyclicElement(i, i) for i in range(13)]
    assert bn_classifier(idempotents) == 'E(B)'
    assert bn_classifier([BicyclicElement(0, 1), BicyclicElement(1, 0)]) == 'B'
    assert bn_classifier([BicyclicElement(0, 2), BicyclicElement(2, 0),
                          BicyclicElement(1, 1)]) == 'B(2)'
    assert bn_classifier([BicyclicElement(0, 2), BicyclicElement(2, 0)]) == (
        'other')


def test_toeplitz_amalgams():
    """Group images, subgroup ranks and D-class counts of B *_U B."""

    b3 = parse_submonoid('B:3')
    assert str(toeplitz_amalgam_group(b3)) == '<a,b | a^3 b^-3>'
    assert str(toeplitz_amalgam_group(b3).abelianization()) == 'Z (+) Z/3'
    assert toeplitz_subgroup_rank(b3) == 2
    assert toeplitz_subgroup_rank(BicyclicSubmonoid.bn(2)) == 1
    assert d_class_count(b3) == 3
    idempotents = parse_submonoid('E')
    assert str(toeplitz_amalgam_group(idempotents)) == '<a,b |>'
    assert toeplitz_subgroup_rank(idempotents) is None
    assert d_class_count(idempotents) is None


def test_parse_submonoid():
    """E or B:n with n >= 2."""

    assert parse_submonoid(' B:4 ').name == 'B(4)'
    assert parse_submonoid('E') == BicyclicSubmonoid.idempotents()
    for text in ('B:1', 'B:x', 'C'):
        with pytest.raises(InvalidN):
            parse_submonoid(text)


def test_shipped_endomorphisms():
    """identity, shift and power<k> for k != 0."""

    assert shipped_endomorphism('shift').apply(x0) == x1
    assert shipped_endomorphism('power-1').apply(x0) == x0.inverse()
    assert shipped_endomorphism('identity', 2).rank == 2
    for name in ('power0', 'power', 'twist'):
        with pytest.raises(KeyError):
            shipped_endomorphism(name)
