import random

import pytest

from quandles.errors import BoundExceededError
from quandles.perms import (
    PermGroup,
    Permutation,
    abelianization_invariants,
    commutator_subgroup,
    group_closure,
    is_free_action,
    normal_closure,
    orbits,
    quotient_is_cyclic,
    word_length,
)


def _random_perm(rng, n):
    images = list(range(n))
    rng.shuffle(images)
    return Permutation(tuple(images))


def test_composition_order():
    # a*b means "apply a, then b"
    a = Permutation((1, 0, 2))
    b = Permutation((0, 2, 1))
    ab = a * b
    assert ab.act(0) == b.act(a.act(0)) == 2
    assert ab.images == (2, 0, 1)
    ba = b * a
    assert ba.images == (1, 2, 0)
    assert ab != ba


def test_composition_order_random():
    rng = random.Random(71)
    for _ in range(200):
        n = rng.randrange(1, 9)
        a, b = _random_perm(rng, n), _random_perm(rng, n)
        for x in range(n):
            assert (a * b).act(x) == b.act(a.act(x))


def test_inverse_and_identity():
    rng = random.Random(72)
    for _ in range(100):
        p = _random_perm(rng, rng.randrange(1, 10))
        assert (p * p.inverse()).is_identity()
        assert (p.inverse() * p).is_identity()
    assert Permutation.identity(4).images == (0, 1, 2, 3)


def test_order():
    assert Permutation((1, 0, 2)).order() == 2
    assert Permutation((1, 2, 0)).order() == 3
    assert Permutation((1, 0, 3, 2)).order() == 2
    assert Permutation((1, 2, 3, 0)).order() == 4
    assert Permutation.identity(5).order() == 1


def test_key_roundtrippable():
    p = Permutation((0, 3, 2, 1))
    assert p.key() == "[0,3,2,1]"


def test_from_mapping():
    p = Permutation.from_mapping({0: 2, 2: 0}, 3)
    assert p.images == (2, 1, 0)
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))


def test_closure_s3():
    a = Permutation((1, 0, 2))
    c = Permutation((1, 2, 0))
    elems = group_closure([("a", a), ("c", c)])
    assert len(elems) == 6
    # closure is BFS order: identity first, then generators
    assert elems[0].is_identity()


def test_closure_bound():
    c = Permutation((1, 2, 3, 4, 5, 6, 0))
    with pytest.raises(BoundExceededError):
        group_closure([("c", c)], bound=3)


def test_perm_group_api():
    g = PermGroup([("t", Permutation((1, 0, 2, 3))), ("c", Permutation((1, 2, 3, 0)))])
    assert g.order == 24
    assert Permutation((3, 2, 1, 0)) in g
    assert Permutation((0, 1, 2)) not in g  # wrong degree


def test_orbits_partition():
    g = PermGroup([("p", Permutation((1, 0, 3, 2, 4)))])
    assert orbits(g, range(5)) == [[0, 1], [2, 3], [4]]
    rng = random.Random(73)
    for _ in range(30):
        n = rng.randrange(2, 8)
        g = PermGroup([(f"g{i}", _random_perm(rng, n)) for i in range(2)])
        parts = orbits(g, range(n))
        seen = sorted(x for part in parts for x in part)
        assert seen == list(range(n))


def test_is_free_action():
    rot = PermGroup([("r", Permutation((1, 2, 3, 0)))])
    assert is_free_action(rot.elements, range(4))
    refl = PermGroup([("s", Permutation((0, 2, 1)))])
    # fixes 0, so not free on the full set
    assert not is_free_action(refl.elements, range(3))


def test_normal_closure_a3():
    a = Permutation((1, 0, 2))
    c = Permutation((1, 2, 0))
    s3 = PermGroup([("a", a), ("c", c)])
    n = normal_closure(s3, c)
    assert n.order == 3
    n2 = normal_closure(s3, a)  # transpositions generate everything
    assert n2.order == 6


def test_commutator_subgroup():
    s3 = PermGroup([("a", Permutation((1, 0, 2))), ("c", Permutation((1, 2, 0)))])
    assert commutator_subgroup(s3).order == 3
    v4 = PermGroup([("x", Permutation((1, 0, 3, 2))), ("y", Permutation((2, 3, 0, 1)))])
    assert commutator_subgroup(v4).order == 1


def test_quotient_is_cyclic():
    s3 = PermGroup([("a", Permutation((1, 0, 2))), ("c", Permutation((1, 2, 0)))])
    a3 = PermGroup([("c", Permutation((1, 2, 0)))])
    ok, order = quotient_is_cyclic(s3, a3)
    assert ok and order == 2
    trivial = PermGroup([("e", Permutation.identity(3))])
    ok, order = quotient_is_cyclic(s3, trivial)
    assert not ok and order == 6


def test_abelianization_invariants():
    s3 = PermGroup([("a", Permutation((1, 0, 2))), ("c", Permutation((1, 2, 0)))])
    assert abelianization_invariants(s3) == [2]
    v4 = PermGroup([("x", Permutation((1, 0, 3, 2))), ("y", Permutation((2, 3, 0, 1)))])
    assert abelianization_invariants(v4) == [2, 2]
    z6 = PermGroup([("c", Permutation((1, 2, 3, 4, 5, 0)))])
    assert abelianization_invariants(z6) == [6]
    d4 = PermGroup([("r", Permutation((1, 2, 3, 0))), ("f", Permutation((0, 3, 2, 1)))])
    assert abelianization_invariants(d4) == [2, 2]


def test_word_length():
    c = Permutation((1, 2, 3, 4, 0))
    gens = [("c", c)]
    assert word_length(gens, Permutation.identity(5), 10) == 0
    assert word_length(gens, c, 10) == 1
    assert word_length(gens, c * c, 10) == 2
    # c^3 = (c^-1)^2 is shorter backwards
    assert word_length(gens, c * c * c, 10) == 2
    assert word_length(gens, Permutation((1, 0, 2, 3, 4)), 4) is None
