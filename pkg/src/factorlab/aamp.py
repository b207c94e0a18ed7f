"""Almost arithmetic multiprogression (AAMP) detection.

A finite set L is an AAMP with difference d, period D and bound M when,
after shifting by some y in L, it splits as head + middle + tail: the
middle is exactly (D + dZ) restricted to [0, max middle] with min 0, the
head lives in [-M, -1], the tail in max middle + [1, M], and every
element of L is congruent mod d to something in D, where {0, d} is
contained in D, itself contained in [0, d].

``is_aamp`` searches shifts and split points directly; the period is
reconstructed from residues of the middle block plus any residues above
the split that head and tail require. Every candidate witness is re-run
through ``verify_witness``, an independent checker of the definition, so
a returned witness is always valid. Probes aggregate minimal bounds over
enumerated elements or unions of length sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import factor, invariants, models
from .errors import BudgetExceeded


@dataclass(frozen=True)
class AAMPWitness:
    shift: int
    difference: int
    period: tuple[int, ...]
    bound: int
    head: tuple[int, ...]
    middle: tuple[int, ...]
    tail: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "shift": self.shift,
            "difference": self.difference,
            "period": list(self.period),
            "bound": self.bound,
            "head": list(self.head),
            "middle": list(self.middle),
            "tail": list(self.tail),
        }


def _as_sorted(L: Iterable[int] | invariants.LengthSet) -> list[int]:
    if isinstance(L, invariants.LengthSet):
        return list(L.lengths)
    return sorted(set(L))


def verify_witness(
    L: Iterable[int] | invariants.LengthSet, d: int, M: int, w: AAMPWitness
) -> bool:
    """Recheck every clause of the definition against L, independently."""
    ls = _as_sorted(L)
    if not ls or d < 1 or M < 0 or w.difference != d or w.bound != M:
        return False
    period = set(w.period)
    if not {0, d} <= period or not period <= set(range(d + 1)):
        return False
    if not w.middle or w.middle[0] != 0:
        return False
    res = {p % d for p in period}
    top = w.middle[-1]
    if list(w.middle) != [x for x in range(top + 1) if x % d in res]:
        return False
    if any(x < -M or x > -1 for x in w.head):
        return False
    if any(x < top + 1 or x > top + M for x in w.tail):
        return False
    rebuilt = sorted(w.shift + x for x in w.head + w.middle + w.tail)
    if rebuilt != ls:
        return False
    return all((x - w.shift) % d in res for x in ls)


def is_aamp(
    L: Iterable[int] | invariants.LengthSet, d: int, M: int
) -> AAMPWitness | None:
    """First witness in (shift, split) order, or None.

    The search is complete: whenever some period works for a shift and a
    split, the reconstructed one does too, because a residue at or below
    the split that the period admits must already occur in the middle.
    """
    ls = _as_sorted(L)
    if not ls:
        raise ValueError("empty set has no AAMP structure")
    if d < 1:
        raise ValueError("difference must be positive")
    if M < 0:
        raise ValueError("bound must be nonnegative")
    for y in ls:
        if y > ls[0] + M:
            break
        rel = [x - y for x in ls]
        for m in [x for x in rel if x >= 0]:
            middle = tuple(x for x in rel if 0 <= x <= m)
            extra = {x % d for x in rel if x % d > m}
            period = tuple(sorted({0, d} | {x % d for x in middle} | extra))
            w = AAMPWitness(
                shift=y,
                difference=d,
                period=period,
                bound=M,
                head=tuple(x for x in rel if x < 0),
                middle=middle,
                tail=tuple(x for x in rel if x > m),
            )
            if verify_witness(ls, d, M, w):
                return w
    return None


def minimal_bound(L: Iterable[int] | invariants.LengthSet, d: int) -> int:
    """Least M such that L is an AAMP with difference d.

    Always at most max L - min L: shift to the minimum, take {0} as the
    middle and push everything else into the tail.
    """
    ls = _as_sorted(L)
    if not ls:
        raise ValueError("empty set has no AAMP structure")
    if d < 1:
        raise ValueError("difference must be positive")
    span = ls[-1] - ls[0]
    for M in range(span + 1):
        if is_aamp(ls, d, M) is not None:
            return M
    raise AssertionError("unreachable: the span bound always admits a witness")


# ---------------------------------------------------------------------------
# probes


def _probe_worker(args):
    desc, el, budget = args
    try:
        ls = invariants.length_set(factor.factorizations(desc, el, budget))
    except BudgetExceeded as exc:
        return {"element": el, "overflow": exc.limit}
    return {"element": el, "weight": models.weight(desc, el), "lengths": ls}


def structure_probe(
    desc: models.MonoidDescriptor,
    weight_bound: int,
    d_candidates: Iterable[int] | None = None,
    budget: int = factor.DEFAULT_BUDGET,
    jobs: int = 1,
) -> dict:
    """Minimal AAMP bound per element and its running maximum M*.

    Candidate differences default to 1 plus the smallest gap seen in the
    sweep. M* is flagged stabilized when it stopped changing over the
    top half of the weight range.
    """
    elements = invariants.enumerate_elements(desc, weight_bound)
    rows = invariants.parallel_map(
        _probe_worker, [(desc, el, budget) for el in elements], jobs
    )
    warnings = [
        {
            "element": models.element_to_json(desc, r["element"]),
            "error": "budget-exceeded",
            "budget": r["overflow"],
        }
        for r in rows
        if "overflow" in r
    ]
    good = [r for r in rows if "overflow" not in r]
    if d_candidates is None:
        gaps = {g for r in good for g in r["lengths"].delta()}
        ds = (1,) if not gaps else tuple(sorted({1, min(gaps)}))
    else:
        ds = tuple(sorted(set(d_candidates)))
    if not ds or any(d < 1 for d in ds):
        raise ValueError("difference candidates must be positive integers")
    for r in good:
        r["m"], r["d"] = min((minimal_bound(r["lengths"], d), d) for d in ds)
    series = []
    running = 0
    i = 0
    for b in range(weight_bound + 1):
        while i < len(good) and good[i]["weight"] == b:
            running = max(running, good[i]["m"])
            i += 1
        series.append(running)
    return {
        "mStar": running,
        "bound": weight_bound,
        "dCandidates": ds,
        "stabilized": len(set(series[weight_bound // 2:])) == 1,
        "perElement": [
            {
                "element": r["element"],
                "lengths": r["lengths"],
                "m": r["m"],
                "d": r["d"],
            }
            for r in good
        ],
        "warnings": warnings,
    }


def unions_structure_probe(
    desc: models.MonoidDescriptor,
    k_range: Iterable[int],
    weight_bound: int,
    budget: int = factor.DEFAULT_BUDGET,
) -> dict:
    """Fit unions of length sets as AAMPs with difference 1 or min Delta.

    Also tabulates the density |U_k| / k against the slope
    (rho - 1/rho) / min Delta that the density approaches in k, as an
    informational trend only.
    """
    estimates, warnings = invariants.global_estimates(desc, weight_bound, budget)
    by_name = {e.name: e.value for e in estimates}
    delta_set = by_name["delta_set"]
    if not delta_set:
        return {
            "trivial": True,
            "reason": "no length gaps below the bound (half-factorial so far)",
            "bound": weight_bound,
            "rows": [],
            "warnings": warnings,
        }
    dmin = min(delta_set)
    rho = by_name["rho"]
    rows = []
    for k in sorted(set(k_range)):
        if k < 0:
            raise ValueError("union indices must be nonnegative")
        rep, w = invariants.unions_of_lengths(desc, k, weight_bound, budget)
        warnings.extend(w)
        union = rep["union"]
        best_m, best_d = min((minimal_bound(union, d), d) for d in {1, dmin})
        rows.append(
            {
                "k": k,
                "union": union,
                "m": best_m,
                "d": best_d,
                "density": Fraction(len(union.lengths), k) if k else None,
            }
        )
    return {
        "trivial": False,
        "bound": weight_bound,
        "dmin": dmin,
        "densityTarget": (rho - 1 / rho) / dmin,
        "rows": rows,
        "warnings": warnings,
    }
