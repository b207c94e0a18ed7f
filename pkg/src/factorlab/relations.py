"""Equal-length factorization relations and their atoms.

A relation pair for an element a is a pair (x, y) of factorizations of a
with |x| = |y|. Pairs multiply componentwise (concatenation in the free
monoid over a merged atom table), so they form a monoid whose identity is
the empty pair. A pair is an atom when it is not the product of two
non-identity pairs; candidate splittings are sub-multiset pairs (x', y')
of equal length whose products match and whose complements also match.
The complement check matters: without cancellativity it is not implied.

The atomicity test is local to a pair, which keeps relation-atom lists
exact: raising the enumeration bound only adds pairs, never changes a
verdict.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import factor, invariants, models
from .errors import AssertionFailure, NotAMember

Profile = frozenset


@dataclass(frozen=True)
class RelationPair:
    element: models.Element
    left: factor.Factorization
    right: factor.Factorization
    table: factor.AtomTable

    @property
    def equal_length(self) -> bool:
        return self.left.length == self.right.length

    def profile(self):
        """Table-independent identity: element plus atom multisets."""
        def side(z):
            return Profile(
                (self.table.atoms[i], m) for i, m in z.counts
            )

        return (self.element, side(self.left), side(self.right))

    def to_json(self, desc: models.MonoidDescriptor) -> dict:
        def side(z):
            return [
                [models.element_to_json(desc, self.table.atoms[i]), m]
                for i, m in z.counts
            ]

        return {
            "element": models.element_to_json(desc, self.element),
            "length": self.left.length,
            "left": side(self.left),
            "right": side(self.right),
        }


def pair_product(
    desc: models.MonoidDescriptor, p: RelationPair, q: RelationPair
) -> RelationPair:
    """Componentwise product over a merged atom table."""
    element = models.multiply(desc, p.element, q.element)
    merged = sorted(
        set(p.table.atoms) | set(q.table.atoms),
        key=lambda u: models.element_sort_key(desc, u),
    )
    table = factor.AtomTable(desc, tuple(merged))
    index = {u: i for i, u in enumerate(merged)}

    def remap(pair_table, z, acc):
        for i, m in z.counts:
            j = index[pair_table.atoms[i]]
            acc[j] = acc.get(j, 0) + m

    sides = []
    for pick in (lambda r: r.left, lambda r: r.right):
        acc: dict[int, int] = {}
        remap(p.table, pick(p), acc)
        remap(q.table, pick(q), acc)
        sides.append(factor.make_factorization(table, acc.items()))
    return RelationPair(element=element, left=sides[0], right=sides[1], table=table)


# ---------------------------------------------------------------------------
# enumeration


def _default_weight_bound(desc: models.MonoidDescriptor, length_bound: int) -> int:
    top = models.max_generator_weight(desc)
    if top is None:
        raise ValueError(
            "this model has atoms of unbounded weight; pass an explicit "
            "element weight bound"
        )
    return length_bound * top


def enumerate_equal_length_relations(
    desc: models.MonoidDescriptor,
    length_bound: int,
    weight_bound: int | None = None,
    budget: int = factor.DEFAULT_BUDGET,
):
    """All pairs (x, y), |x| = |y| <= length_bound, x <= y canonically.

    Elements come from the weight enumeration; for finitely generated
    models the default bound length_bound * max generator weight reaches
    every element owning a factorization that short. Returns
    (pairs, info dict recording the bounds used).
    """
    if weight_bound is None:
        weight_bound = _default_weight_bound(desc, length_bound)
    pairs: list[RelationPair] = []
    for el in invariants.enumerate_elements(desc, weight_bound):
        fs = factor.factorizations(desc, el, budget)
        for k in fs.lengths:
            if k > length_bound:
                continue
            fiber = fs.by_length(k)
            for x, y in itertools.combinations_with_replacement(fiber, 2):
                pairs.append(
                    RelationPair(element=el, left=x, right=y, table=fs.table)
                )
    info = {"lengthBound": length_bound, "weightBound": weight_bound}
    return pairs, info


# ---------------------------------------------------------------------------
# atoms


def _sub_multisets(z: factor.Factorization):
    """(take, rest, take_length) over all sub-multisets of z."""
    ids = [i for i, _ in z.counts]
    mults = [m for _, m in z.counts]
    for take in itertools.product(*(range(m + 1) for m in mults)):
        taken = tuple(
            (i, t) for i, t in zip(ids, take) if t > 0
        )
        rest = tuple(
            (i, m - t) for i, m, t in zip(ids, mults, take) if m - t > 0
        )
        yield taken, rest, sum(take)


def _product_of(desc, table: factor.AtomTable, counts) -> models.Element:
    out = models.identity(desc)
    for i, m in counts:
        for _ in range(m):
            out = models.multiply(desc, out, table.atoms[i])
    return out


def is_relation_atom(desc: models.MonoidDescriptor, pair: RelationPair) -> bool:
    """No splitting into two non-identity pairs (diagonal parts allowed)."""
    x, y = pair.left, pair.right
    if x.length != y.length or x.length < 1:
        return False
    table = pair.table
    by_length: dict[int, set] = {}
    for taken, rest, k in _sub_multisets(y):
        if 0 < k < y.length:
            by_length.setdefault(k, set()).add(
                (_product_of(desc, table, taken), _product_of(desc, table, rest))
            )
    for taken, rest, k in _sub_multisets(x):
        if not 0 < k < x.length:
            continue
        split = (_product_of(desc, table, taken), _product_of(desc, table, rest))
        if split in by_length.get(k, ()):
            return False
    return True


def relation_atoms(
    desc: models.MonoidDescriptor,
    length_bound: int,
    weight_bound: int | None = None,
    budget: int = factor.DEFAULT_BUDGET,
):
    """Nontrivial (off-diagonal) pairs admitting no splitting.

    Returns (atoms, info). Verdicts are local to each pair, so the list
    only grows with the bounds.
    """
    pairs, info = enumerate_equal_length_relations(
        desc, length_bound, weight_bound, budget
    )
    atoms = [
        p
        for p in pairs
        if p.left != p.right and is_relation_atom(desc, p)
    ]
    return atoms, info


# ---------------------------------------------------------------------------
# bundled verification scenarios


INTERVAL_SCENARIO = models.Sumset(generators=((0, 1), (0, 1, 3), (0, 2, 3)))

_UNIT = (0, 1)
_GEN_A = (0, 1, 3)
_GEN_B = (0, 2, 3)


def _interval(lo: int, hi: int) -> tuple[int, ...]:
    return tuple(range(lo, hi + 1))


def _power(desc, base, k):
    out = models.identity(desc)
    for _ in range(k):
        out = models.multiply(desc, out, base)
    return out


def verify_interval_relations(k_max: int, k_atom_max: int | None = None) -> dict:
    """Checks for the three-generator sumset monoid on {0,1} and two gaps.

    Verified claims, for k up to k_max: the unit generator absorbs either
    gap generator power into the same interval [0, 3k+1]; gap generator
    powers alone are never intervals; 1 separates them. For k up to
    k_atom_max (default 4) the pair of interval factorizations
    (unit + k copies of either gap generator) is an atom of the
    equal-length relation monoid, found by full enumeration.
    """
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    desc = INTERVAL_SCENARIO
    if k_atom_max is None:
        k_atom_max = min(4, k_max)
    if not 1 <= k_atom_max <= k_max:
        raise ValueError("k_atom_max must lie in [1, k_max]")
    checks = []

    def require(ok: bool, label: str, **context):
        checks.append({"check": label, "ok": bool(ok), **context})
        if not ok:
            raise AssertionFailure(f"claim failed: {label}", context)

    for k in range(k_max + 1):
        target = _interval(0, 3 * k + 1)
        via_a = models.multiply(desc, _UNIT, _power(desc, _GEN_A, k))
        via_b = models.multiply(desc, _UNIT, _power(desc, _GEN_B, k))
        require(
            via_a == target and via_b == target,
            "unit-absorbs-either-gap-power-into-interval",
            k=k,
            viaA=list(via_a),
            viaB=list(via_b),
        )
    for k in range(1, k_max + 1):
        pa = _power(desc, _GEN_A, k)
        pb = _power(desc, _GEN_B, k)
        require(
            pa != _interval(0, pa[-1]) and pb != _interval(0, pb[-1]),
            "gap-powers-are-never-intervals",
            k=k,
        )
        require(
            1 in pa and 1 not in pb,
            "one-separates-the-gap-powers",
            k=k,
        )
    atoms, info = relation_atoms(desc, length_bound=k_atom_max + 1)
    profiles = {p.profile() for p in atoms}
    for k in range(1, k_atom_max + 1):
        element = _interval(0, 3 * k + 1)
        want_left = Profile([(_UNIT, 1), (_GEN_A, k)])
        want_right = Profile([(_UNIT, 1), (_GEN_B, k)])
        found = (element, want_left, want_right) in profiles or (
            element,
            want_right,
            want_left,
        ) in profiles
        require(found, "interval-pair-is-a-relation-atom", k=k)
    return {
        "kMax": k_max,
        "kAtomMax": k_atom_max,
        "relationAtoms": len(atoms),
        "enumeration": info,
        "checks": checks,
    }


def verify_unique_representation(
    difference: int = 10,
    k_max: int = 5,
    shifts: tuple[int, int] = (2, 2),
) -> dict:
    """Two structured length sets whose sumset pins its representations.

    For each k the two sets are a progression of step ``difference`` plus
    one or two sporadic tail points. Just above the progressions' top the
    sumset has exactly one representation from each side, and the two
    first coordinates differ by at least k * difference.
    """
    if difference < 4:
        raise ValueError("difference must be at least 4")
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    y1, y2 = shifts
    rows = []
    for k in range(1, k_max + 1):
        top = k * difference
        l1 = invariants.length_set_of(
            [y1 + v * difference for v in range(k + 1)] + [y1 + top + 2]
        )
        l2 = invariants.length_set_of(
            [y2 + v * difference for v in range(k + 1)]
            + [y2 + top + 1, y2 + top + 3]
        )
        total = invariants.length_set_sumset(l1, l2)
        t1 = y1 + y2 + top + 1
        t2 = y1 + y2 + top + 2
        reps1 = invariants.unique_representations(l1, l2, t1)
        reps2 = invariants.unique_representations(l1, l2, t2)
        context = {
            "k": k,
            "L1": list(l1.lengths),
            "L2": list(l2.lengths),
            "targets": [t1, t2],
            "reps": [reps1, reps2],
        }
        if reps1 != [(y1, y2 + top + 1)]:
            raise AssertionFailure("first target is not uniquely represented", context)
        if reps2 != [(y1 + top + 2, y2)]:
            raise AssertionFailure("second target is not uniquely represented", context)
        gap = abs(reps2[0][0] - reps1[0][0])
        if gap < top:
            raise AssertionFailure("representations are not far apart", context)
        rows.append(
            {
                "k": k,
                "L1": l1,
                "L2": l2,
                "sumset": total,
                "targets": (t1, t2),
                "representations": (reps1[0], reps2[0]),
                "separation": gap,
            }
        )
    return {"difference": difference, "kMax": k_max, "shifts": list(shifts), "rows": rows}
