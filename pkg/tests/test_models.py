"""Descriptor, element, membership and atom layer."""

import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import bruteforce
from factorlab import (
    Affine,
    ClosureViolation,
    FinitelyPrimaryValue,
    MalformedDescriptor,
    NotAMember,
    Numerical,
    Pattern,
    Product,
    ShapeMismatch,
    Sumset,
    atoms_dividing,
    cancellative,
    canon,
    check_descriptor,
    descriptor_from_json,
    descriptor_hash,
    descriptor_to_json,
    identity,
    is_atom,
    membership,
    multiply,
    validate,
    weight,
)
from factorlab import models

N23 = Numerical(generators=(2, 3))
AFF = Affine(dim=2, generators=((2, 0), (1, 1), (0, 2), (3, 0), (0, 3)))
FP21 = FinitelyPrimaryValue(rank=2, exponent=1, exceptional=())
FP22 = FinitelyPrimaryValue(
    rank=2,
    exponent=2,
    exceptional=(Pattern(entries=(("exact", 1), ("atLeast", 1))),),
)
SUM = Sumset(generators=((0, 1), (0, 1, 3), (0, 2, 3)))
PROD = Product(factors=(N23, FP21), free_rank=1)

ALL = [N23, AFF, FP21, FP22, SUM, PROD]


# ---------------------------------------------------------------------------
# descriptors


def test_check_descriptor_accepts_all_fixtures():
    for desc in ALL:
        check_descriptor(desc)


def test_numerical_rejects_bad_generators():
    with pytest.raises(MalformedDescriptor):
        check_descriptor(Numerical(generators=()))
    with pytest.raises(MalformedDescriptor):
        check_descriptor(Numerical(generators=(0, 2)))


def test_fp_pattern_needs_small_exact_entry():
    bad = FinitelyPrimaryValue(
        rank=2,
        exponent=2,
        exceptional=(Pattern(entries=(("atLeast", 1), ("atLeast", 1))),),
    )
    with pytest.raises(MalformedDescriptor):
        check_descriptor(bad)
    also_bad = FinitelyPrimaryValue(
        rank=2,
        exponent=2,
        exceptional=(Pattern(entries=(("exact", 2), ("atLeast", 1))),),
    )
    with pytest.raises(MalformedDescriptor):
        check_descriptor(also_bad)


def test_sumset_generators_must_be_canonical():
    with pytest.raises(MalformedDescriptor):
        check_descriptor(Sumset(generators=((0,),)))
    with pytest.raises(MalformedDescriptor):
        check_descriptor(Sumset(generators=((1, 2),)))


def test_product_factors_must_be_base_models():
    nested = Product(factors=(PROD,), free_rank=0)
    with pytest.raises(MalformedDescriptor):
        check_descriptor(nested)


def test_json_roundtrip_and_hash_stability():
    for desc in ALL:
        doc = descriptor_to_json(desc)
        again = descriptor_from_json(json.loads(json.dumps(doc)))
        assert again == desc
        assert descriptor_hash(again) == descriptor_hash(desc)


def test_hash_distinguishes_descriptors():
    assert len({descriptor_hash(d) for d in ALL}) == len(ALL)


def test_cancellative_flags():
    assert cancellative(N23)
    assert cancellative(AFF)
    assert cancellative(FP21)
    assert not cancellative(SUM)
    assert not cancellative(Product(factors=(N23, SUM), free_rank=0))
    assert cancellative(PROD)


# ---------------------------------------------------------------------------
# elements


def test_canon_shapes():
    assert canon(N23, 5) == 5
    assert canon(AFF, [1, 1]) == (1, 1)
    assert canon(SUM, [3, 0, 1, 1]) == (0, 1, 3)
    with pytest.raises(ShapeMismatch):
        canon(N23, (1, 2))
    with pytest.raises(ShapeMismatch):
        canon(AFF, (1, 2, 3))
    with pytest.raises(ShapeMismatch):
        canon(N23, True)
    with pytest.raises(ShapeMismatch):
        canon(SUM, (1, 2))
    with pytest.raises(ShapeMismatch):
        canon(N23, -1)


def test_product_element_forms():
    el = canon(PROD, ((6, (2, 2)), (3,)))
    assert el == ((6, (2, 2)), (3,))
    same = canon(PROD, {"components": [6, [2, 2]], "free": [3]})
    assert same == el


def test_weight_is_additive():
    for desc in ALL:
        a = bruteforce.brute_members(desc, 5)
        for u in a[:8]:
            for v in a[:8]:
                w = weight(desc, multiply(desc, u, v))
                assert w == weight(desc, u) + weight(desc, v)


def test_multiply_commutative_and_associative_on_random_triples():
    bounds = {N23: 16, AFF: 9, FP21: 7, FP22: 9, SUM: 5, PROD: 7}
    rng = random.Random(411)
    for desc in ALL:
        pool = bruteforce.brute_members(desc, bounds[desc])
        assert pool
        for _ in range(1000):
            a, b, c = (rng.choice(pool) for _ in range(3))
            ab = multiply(desc, a, b)
            assert ab == multiply(desc, b, a)
            assert multiply(desc, ab, c) == multiply(desc, a, multiply(desc, b, c))


@given(st.integers(min_value=0, max_value=60))
def test_canon_idempotent_numerical(n):
    assert canon(N23, canon(N23, n)) == canon(N23, n)


@given(st.lists(st.integers(min_value=0, max_value=9), min_size=1, max_size=6))
@settings(max_examples=60)
def test_canon_idempotent_sumset(raw):
    values = sorted(set([0] + raw))
    el = canon(SUM, values)
    assert canon(SUM, el) == el
    assert el[0] == 0


def test_element_literals():
    assert models.parse_element_literal(N23, "12") == 12
    assert models.parse_element_literal(AFF, "3,3") == (3, 3)
    assert models.parse_element_literal(SUM, "{0,1,3}") == (0, 1, 3)
    el = models.parse_element_literal(PROD, "6; 2,2; 3")
    assert el == ((6, (2, 2)), (3,))
    assert models.format_element(PROD, el) == "6;2,2;3"
    assert models.parse_element_literal(PROD, "6;2,2;3") == el


def test_element_json_roundtrip():
    for desc, raw in [
        (N23, 8),
        (AFF, (2, 2)),
        (FP22, (1, 5)),
        (SUM, (0, 1, 3)),
        (PROD, ((6, (2, 2)), (3,))),
    ]:
        el = canon(desc, raw)
        doc = models.element_to_json(desc, el)
        assert models.element_from_json(desc, json.loads(json.dumps(doc))) == el


# ---------------------------------------------------------------------------
# membership


def test_numerical_membership_gaps():
    assert membership(N23, 0)
    assert not membership(N23, 1)
    assert all(membership(N23, n) for n in range(2, 30))


def test_affine_membership():
    assert membership(AFF, (0, 0))
    assert membership(AFF, (1, 1))
    assert not membership(AFF, (1, 0))
    assert membership(AFF, (3, 3))


def test_fp_membership_closed_form():
    assert membership(FP21, (0, 0))
    assert not membership(FP21, (1, 0))
    assert membership(FP21, (1, 7))
    assert membership(FP22, (1, 1))
    assert membership(FP22, (1, 9))
    assert not membership(FP22, (2, 1))
    assert membership(FP22, (2, 2))
    assert not membership(FP22, (0, 3))


def test_sumset_membership():
    assert membership(SUM, (0,))
    assert membership(SUM, (0, 1))
    assert membership(SUM, (0, 1, 2, 3, 4))
    assert not membership(SUM, (0, 4))
    assert membership(SUM, (0, 1, 2))


def test_product_membership():
    assert membership(PROD, canon(PROD, ((0, (0, 0)), (0,))))
    assert membership(PROD, canon(PROD, ((2, (1, 3)), (5,))))
    assert not membership(PROD, canon(PROD, ((1, (1, 1)), (0,))))


def test_membership_matches_bruteforce_universe():
    for desc, bound in [(N23, 12), (AFF, 8), (FP21, 6), (FP22, 8), (SUM, 5)]:
        brute = set(bruteforce.brute_members(desc, bound))
        lib = set(models.canon(desc, e) for e in brute)
        assert lib == brute
        for el in brute:
            assert membership(desc, el)


# ---------------------------------------------------------------------------
# atoms


def test_numerical_atoms():
    assert is_atom(N23, 2)
    assert is_atom(N23, 3)
    assert not is_atom(N23, 4)
    assert not is_atom(N23, 0)


def test_fp22_atom_families():
    for k in range(1, 8):
        assert is_atom(FP22, (1, k))
    for n in range(3, 8):
        assert is_atom(FP22, (n, 2))
    assert not is_atom(FP22, (2, 2))
    assert not is_atom(FP22, (2, 3))
    assert not is_atom(FP22, (3, 3))


def test_atoms_dividing_against_bruteforce():
    cases = [(N23, 12), (AFF, (3, 3)), (FP21, (3, 3)), (FP22, (4, 4)),
             (SUM, (0, 1, 2, 3, 4))]
    for desc, a in cases:
        el = canon(desc, a)
        lib = atoms_dividing(desc, el)
        assert sorted(lib) == sorted(bruteforce.brute_atoms_dividing(desc, el))


def test_atoms_dividing_requires_member():
    with pytest.raises(NotAMember):
        atoms_dividing(N23, 1)


def test_is_atom_agrees_with_bruteforce():
    for desc, bound in [(N23, 10), (AFF, 6), (FP22, 6), (SUM, 4)]:
        for el in bruteforce.brute_members(desc, bound):
            assert is_atom(desc, el) == bruteforce.brute_is_atom(desc, el), (
                desc,
                el,
            )


# ---------------------------------------------------------------------------
# validation


def test_validate_reports_closure_and_minimum():
    report = validate(FP22, 8)
    assert report.valid
    assert report.cancellative
    assert report.strongly_ring_like_candidate is True
    assert report.smallest_value_element == (1, 1)
    assert report.verified_bound == 8


def test_validate_detects_closure_violation():
    broken = FinitelyPrimaryValue(
        rank=2,
        exponent=3,
        exceptional=(Pattern(entries=(("exact", 1), ("atLeast", 1))),),
    )
    with pytest.raises(ClosureViolation) as exc:
        validate(broken, 6)
    assert exc.value.left == (1, 1)
    assert exc.value.right == (1, 1)
    assert exc.value.total == (2, 2)


def test_validate_bound_preconditions():
    with pytest.raises(MalformedDescriptor):
        validate(FP22, 3)
    with pytest.raises(MalformedDescriptor):
        validate(N23, 2)


def test_identity_membership_everywhere():
    for desc in ALL:
        e = identity(desc)
        assert membership(desc, e)
        assert weight(desc, e) == 0
        assert not is_atom(desc, e)
