import itertools
import random

import pytest

from monoidkit.congruence import (
    FiniteMonoid,
    annihilator,
    close_monoid,
    is_right_congruence,
    kappa,
    rc_close,
    subact_generators,
    y_sequence,
)
from monoidkit.elements import PartialMap
from monoidkit.verify import delta


def pm(*images):
    return PartialMap(images)


ID2 = PartialMap.identity(2)
SWAP = pm(2, 1)
CONST1 = pm(1, 1)
CONST2 = pm(2, 2)


# --- monoid construction -----------------------------------------------------


def test_close_monoid_t2():
    S = close_monoid("T", 2, [SWAP, CONST1])
    assert len(S) == 4
    assert S.elements[0] == ID2
    assert S.generated_by_gens()


def test_close_monoid_trivial():
    S = close_monoid("T", 2, [])
    assert len(S) == 1


def test_close_monoid_pt2():
    S = close_monoid("PT", 2, [SWAP, CONST1, pm(1, None)])
    assert len(S) == 9


def test_close_monoid_rejects_wrong_size():
    with pytest.raises(ValueError):
        close_monoid("T", 2, [PartialMap.identity(3)])


def test_finite_monoid_rejects_non_closed_list():
    S = FiniteMonoid([ID2, SWAP, CONST1])
    with pytest.raises(ValueError):
        S.mul(CONST1, SWAP)  # const2 is missing from the list


def test_finite_monoid_rejects_non_identity_head():
    with pytest.raises(ValueError):
        FiniteMonoid([SWAP, ID2, CONST1, CONST2])


def test_finite_monoid_rejects_duplicates():
    with pytest.raises(ValueError):
        FiniteMonoid([ID2, SWAP, SWAP])


def test_close_monoid_cap():
    with pytest.raises(ValueError):
        close_monoid("T", 2, [SWAP, CONST1], cap=2)


def test_foreign_elements_rejected(T2):
    with pytest.raises(ValueError):
        T2.index_of(pm(1, None))
    with pytest.raises(ValueError):
        rc_close(T2, [(ID2, pm(1, 2, 3))])


def test_opposite_monoid(T2):
    op = T2.opposite()
    assert op.mul(CONST1, SWAP) == T2.mul(SWAP, CONST1)


# --- congruence closure -------------------------------------------------------


def test_rc_close_empty_is_equality(T2):
    rho = rc_close(T2, [])
    assert rho.num_classes == len(T2)
    assert rho.eqrel == delta(T2).eqrel


def test_rc_close_pair_propagation(T2):
    rho = rc_close(T2, [(ID2, CONST1)])
    assert set(map(frozenset, rho.classes_elements())) == {
        frozenset({ID2, CONST1}),
        frozenset({SWAP, CONST2}),
    }


def test_left_congruence_via_opposite_monoid(T2):
    # The same pair closed on the opposite monoid gives the left congruence,
    # which here collapses everything.
    rho = rc_close(T2.opposite(), [(ID2, CONST1)])
    assert rho.num_classes == 1


def test_rc_close_output_is_right_compatible(T3):
    rng = random.Random(5)
    for _ in range(5):
        pairs = [
            (rng.choice(T3.elements), rng.choice(T3.elements))
            for _ in range(rng.randint(1, 3))
        ]
        rho = rc_close(T3, pairs)
        assert is_right_congruence(T3, rho.eqrel)


def test_rc_close_monotone_in_generators(T2, PT2):
    rng = random.Random(17)
    for S in (T2, PT2):
        pool = [(rng.choice(S.elements), rng.choice(S.elements)) for _ in range(4)]
        small = rc_close(S, pool[:2])
        big = rc_close(S, pool)
        assert small.subset_of(big)


# --- witnesses ----------------------------------------------------------------


def test_y_sequence_reflexive_case(T2):
    rho = rc_close(T2, [(ID2, CONST1)])
    seq = y_sequence(rho, SWAP, SWAP)
    assert len(seq) == 0 and seq.validate()


def test_y_sequence_single_step(T2):
    rho = rc_close(T2, [(ID2, CONST1)])
    seq = y_sequence(rho, SWAP, CONST2)
    assert len(seq) == 1
    c, d, t = seq.steps[0]
    assert (c, d) == (ID2, CONST1) and t == SWAP
    assert seq.validate()


def test_y_sequence_none_for_unrelated(T2):
    rho = rc_close(T2, [(ID2, CONST1)])
    assert y_sequence(rho, ID2, SWAP) is None


def test_membership_iff_validating_witness(PT2):
    rng = random.Random(23)
    for _ in range(5):
        pairs = [(rng.choice(PT2.elements), rng.choice(PT2.elements)) for _ in range(2)]
        rho = rc_close(PT2, pairs)
        for a, b in itertools.product(PT2.elements, repeat=2):
            seq = y_sequence(rho, a, b)
            if rho.related(a, b):
                assert seq is not None and seq.validate()
                assert seq.uses_only(rho.pairs)
            else:
                assert seq is None


def test_y_sequence_needs_trace(T2):
    with pytest.raises(ValueError):
        y_sequence(delta(T2), ID2, ID2)
    assert delta(T2).trace is None


def test_trace_records_justify_each_merge(T2):
    rho = rc_close(T2, [(ID2, CONST1)])
    assert rho.trace
    for merged, merged_with, (c, d), t in rho.trace:
        assert c * t == merged and d * t == merged_with


# --- annihilators and power orbits ---------------------------------------------


def test_annihilator_of_identity_is_rho(T2):
    rho = rc_close(T2, [(ID2, CONST1)])
    assert annihilator(T2, rho, ID2).eqrel == rho.eqrel


def test_annihilator_fibers(T2):
    r = annihilator(T2, delta(T2), CONST1)
    assert set(map(frozenset, r.classes_elements())) == {
        frozenset({ID2, CONST1}),
        frozenset({SWAP, CONST2}),
    }


def test_annihilator_under_universal(T2):
    universal = rc_close(T2, [(a, b) for a in T2.elements for b in T2.elements])
    assert universal.num_classes == 1
    assert annihilator(T2, universal, CONST1).num_classes == 1


def test_kappa_identity_is_equality(T2):
    assert kappa(T2, ID2).eqrel == delta(T2).eqrel


def test_kappa_constant(T2):
    k = kappa(T2, CONST1)
    assert set(map(frozenset, k.classes_elements())) == {
        frozenset({ID2, CONST1}),
        frozenset({SWAP, CONST2}),
    }


def test_kappa_equals_closure_pt2(PT2):
    one = PT2.elements[0]
    for s in PT2.elements:
        assert kappa(PT2, s).eqrel == rc_close(PT2, [(one, s)]).eqrel


# --- subact generators ----------------------------------------------------------


def test_subact_generators_principal(PT2):
    a = pm(1, None)
    ideal = [PT2.elements[i] for i in PT2.right_ideal_idx(PT2.index_of(a))]
    gens = subact_generators(PT2, ideal)
    assert len(gens) == 1
    assert PT2.right_ideal_idx(PT2.index_of(gens[0])) == PT2.right_ideal_idx(PT2.index_of(a))


def test_subact_generators_minimal_ideal(PT2):
    empty = PartialMap.empty(2)
    assert subact_generators(PT2, [empty]) == [empty]


def test_subact_generators_two_incomparable(PT2):
    a, b = pm(1, None), pm(None, 2)
    ideal = PT2.right_ideal_idx(PT2.index_of(a)) | PT2.right_ideal_idx(PT2.index_of(b))
    gens = subact_generators(PT2, [PT2.elements[i] for i in ideal])
    assert len(gens) == 2


def test_subact_generators_rejects_non_subact(PT2):
    with pytest.raises(ValueError):
        subact_generators(PT2, [PartialMap.identity(2), pm(1, None)])
