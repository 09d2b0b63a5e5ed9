import itertools
import random

import pytest

from monoidkit.elements import (
    EqRel,
    PartialMap,
    Partition,
    element_count,
    embed,
    enumerate_elements,
    eqrel_join,
    pm_profile,
)


def pm(*images):
    return PartialMap(images)


# --- partial map composition and profiles ---------------------------------


def test_compose_pointwise():
    a = pm(2, 2, None)
    b = pm(None, 3, 1)
    assert a * b == pm(3, 3, None)


def test_compose_identity():
    a = pm(2, None, 1)
    assert a * PartialMap.identity(3) == a
    assert PartialMap.identity(3) * a == a


def test_compose_empty_absorbs():
    empty = PartialMap.empty(3)
    for images in itertools.product([None, 1, 2, 3], repeat=3):
        b = PartialMap(images)
        assert empty * b == empty
        assert b * empty == empty


def test_compose_size_mismatch():
    with pytest.raises(ValueError):
        pm(1, 2) * pm(1, 2, 3)


def test_profile_fibers():
    dom, im, ker, kerhat = pm_profile(pm(1, 1, None))
    assert dom == {1, 2}
    assert im == {1}
    assert ker == EqRel([(1, 2)])
    assert kerhat == EqRel([(1, 2), (3,)])


def test_profile_identity():
    dom, im, ker, kerhat = pm_profile(PartialMap.identity(3))
    assert dom == im == {1, 2, 3}
    assert ker == kerhat == EqRel.discrete([1, 2, 3])


def test_profile_nowhere_defined():
    dom, im, ker, kerhat = pm_profile(PartialMap.empty(3))
    assert dom == frozenset()
    assert ker == EqRel([])
    assert kerhat == EqRel([(1, 2, 3)])


def test_profile_monotone_under_composition():
    pt2 = enumerate_elements("PT", 2)
    for a, b in itertools.product(pt2, repeat=2):
        c = a * b
        assert c.dom() <= a.dom()
        assert c.im() <= b.im()


def test_bad_image_rejected():
    with pytest.raises(ValueError):
        PartialMap([1, 4, 2])


# --- partitions ------------------------------------------------------------


def test_partition_square_matches_partial_bijection_view():
    a = Partition(2, [[1, -2], [2], [-1]])  # the diagram of 1 -> 2
    assert a * a == Partition(2, [[1], [2], [-1], [-2]])


def test_partition_identity_is_neutral(P2):
    one = Partition.identity(2)
    for a in P2.elements:
        assert a * one == a
        assert one * a == a


def test_partition_times_own_star():
    a = Partition(2, [[1, -2], [2], [-1]])
    assert a * a.star() == Partition(2, [[1, -1], [2], [-2]])


def test_partition_size_mismatch():
    with pytest.raises(ValueError):
        Partition.identity(2) * Partition.identity(3)


def test_star_swaps_rows():
    a = Partition(2, [[1, -2], [2], [-1]])
    assert a.star() == Partition(2, [[2, -1], [1], [-2]])
    assert Partition.identity(3).star() == Partition.identity(3)


def test_star_laws_exhaustive_p2():
    p2 = enumerate_elements("P", 2)
    assert len(p2) == 15
    for a in p2:
        assert a.star().star() == a
        assert a * a.star() * a == a
    for a, b in itertools.product(p2, repeat=2):
        assert (a * b).star() == b.star() * a.star()


def test_star_laws_sampled_p3():
    rng = random.Random(7)
    p3 = enumerate_elements("P", 3)
    for _ in range(300):
        a, b = rng.choice(p3), rng.choice(p3)
        assert (a * b).star() == b.star() * a.star()
        assert a * a.star() * a == a


def test_associativity_exhaustive():
    for kind, n in (("P", 2), ("PT", 2)):
        els = enumerate_elements(kind, n)
        for a, b, c in itertools.product(els, repeat=3):
            assert (a * b) * c == a * (b * c)


def test_partition_profile_with_transversal():
    a = Partition(2, [[1, 2, -1], [-2]])
    assert a.dom() == {1, 2}
    assert a.codom() == {1}
    assert a.ker() == EqRel([(1, 2)])
    assert a.upper_blocks() == frozenset()
    assert a.lower_blocks() == {frozenset({2})}


def test_partition_profile_identity():
    one = Partition.identity(3)
    assert one.dom() == one.codom() == {1, 2, 3}
    assert one.upper_blocks() == one.lower_blocks() == frozenset()


def test_partition_profile_no_transversals():
    a = Partition(2, [[1], [2], [-1], [-2]])
    assert a.dom() == frozenset()
    assert a.upper_blocks() == {frozenset({1}), frozenset({2})}


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition(2, [[1, 2], [-1]])  # 2' missing
    with pytest.raises(ValueError):
        Partition(2, [[1, 2], [2, -1, -2]])  # 2 repeated


# --- equivalence relations --------------------------------------------------


def test_join_chains_transitively():
    r = EqRel([(1, 2), (3,), (4,)])
    s = EqRel([(2, 3), (1,), (4,)])
    assert r.join(s) == EqRel([(1, 2, 3), (4,)])
    assert r.join(r) == r


def test_join_of_kernels_on_different_carriers():
    r = pm(1, 1, None).ker()
    s = pm(None, 2, 2).ker()
    assert r.carrier == {1, 2} and s.carrier == {2, 3}
    assert eqrel_join(r, s) == EqRel([(1, 2, 3)])


def _random_eqrel(rng, ground):
    carrier = [x for x in ground if rng.random() < 0.8]
    classes = []
    for x in carrier:
        if classes and rng.random() < 0.5:
            rng.choice(classes).append(x)
        else:
            classes.append([x])
    return EqRel(classes)


def test_join_commutative_associative_idempotent():
    rng = random.Random(11)
    ground = range(1, 9)
    for _ in range(200):
        r, s, t = (_random_eqrel(rng, ground) for _ in range(3))
        assert r.join(s) == s.join(r)
        assert r.join(s).join(t) == r.join(s.join(t))
        assert r.join(r) == r


def test_subset_of_matches_pairwise_containment():
    rng = random.Random(13)
    ground = range(1, 7)
    for _ in range(200):
        r, s = _random_eqrel(rng, ground), _random_eqrel(rng, ground)
        assert r.subset_of(s) == (r.pairs() <= s.pairs())


def test_restrict():
    r = EqRel([(1, 2, 3), (4, 5)])
    assert r.restrict({2, 3, 4}) == EqRel([(2, 3), (4,)])


# --- enumeration ------------------------------------------------------------


@pytest.mark.parametrize(
    "kind,n,count",
    [("T", 2, 4), ("PT", 3, 64), ("P", 2, 15), ("I", 3, 34), ("I", 2, 7), ("P", 3, 203)],
)
def test_enumeration_counts(kind, n, count):
    els = enumerate_elements(kind, n)
    assert len(els) == count == element_count(kind, n)
    assert len(set(els)) == count


def test_enumeration_cap():
    with pytest.raises(ValueError):
        enumerate_elements("P", 6)
    assert element_count("P", 6) > 1_000_000


def test_unknown_kind_rejected():
    with pytest.raises(ValueError):
        enumerate_elements("Q", 2)
    with pytest.raises(ValueError):
        element_count("Q", 2)


# --- embeddings --------------------------------------------------------------


def test_embed_sink_construction():
    assert embed("PT->T", pm(2, None)) == pm(2, 3, 3)


def test_embed_partial_bijection_as_partition():
    assert embed("I->P", pm(1, None)) == Partition(2, [[1, -1], [2], [-2]])


def test_embed_inclusion_and_kind_mismatch():
    a = pm(2, None)
    assert embed("I->PT", a) is a
    with pytest.raises(ValueError):
        embed("I->P", pm(1, 1))
    with pytest.raises(ValueError):
        embed("T->P", pm(1, 2))


def test_embed_multiplicative_pt_to_t():
    pt2 = enumerate_elements("PT", 2)
    for a, b in itertools.product(pt2, repeat=2):
        assert embed("PT->T", a * b) == embed("PT->T", a) * embed("PT->T", b)


def test_embed_intertwines_partition_product():
    for n in (2, 3):
        elements = enumerate_elements("I", n)
        for a, b in itertools.product(elements, repeat=2):
            assert embed("I->P", a * b) == embed("I->P", a) * embed("I->P", b)
