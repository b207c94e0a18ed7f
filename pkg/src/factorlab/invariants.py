"""Arithmetic invariants computed from complete factorization sets.

Element level: the set of lengths with its distance set and elasticity,
the catenary degree (bottleneck threshold connecting all of Z(a)), its
equal-length and adjacent-length refinements, the monotone catenary
degree, and the successive-distance measures. Global level: truncated
estimates aggregated over every member below a weight bound, unions of
length sets over k, and the sumset arithmetic of length sets.

The catenary degree is the largest edge of a minimum spanning tree of the
complete distance graph on Z(a) (Prim), which equals the smallest N whose
threshold graph is connected. A separate breadth-first oracle certifies
monotone chains without relying on that identity.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import factor, models
from .errors import BudgetExceeded


@dataclass(frozen=True)
class LengthSet:
    lengths: tuple[int, ...]

    def delta(self) -> tuple[int, ...]:
        """Distinct gaps between consecutive lengths."""
        ls = self.lengths
        return tuple(sorted({b - a for a, b in zip(ls, ls[1:])}))

    def rho(self) -> Fraction:
        """max/min elasticity; the length set {0} has elasticity 1."""
        ls = self.lengths
        if not ls:
            raise ValueError("empty length set has no elasticity")
        if ls == (0,):
            return Fraction(1)
        return Fraction(ls[-1], ls[0])

    def __contains__(self, k: int) -> bool:
        return k in self.lengths


def length_set_of(values: Iterable[int]) -> LengthSet:
    return LengthSet(tuple(sorted(set(values))))


def length_set(fs: factor.FactorSet) -> LengthSet:
    return length_set_of(z.length for z in fs.all)


def length_set_sumset(a: LengthSet, b: LengthSet) -> LengthSet:
    return length_set_of(x + y for x in a.lengths for y in b.lengths)


def unique_representations(
    a: LengthSet, b: LengthSet, target: int
) -> list[tuple[int, int]]:
    """All (x, y) with x in a, y in b and x + y = target."""
    bset = set(b.lengths)
    return [(x, target - x) for x in a.lengths if target - x in bset]


# ---------------------------------------------------------------------------
# catenary degrees

_INF = float("inf")


def _bottleneck(zs: tuple[factor.Factorization, ...]) -> int:
    """Largest MST edge of the complete distance graph; 0 for <= 1 node."""
    n = len(zs)
    if n <= 1:
        return 0
    best = [_INF] * n
    best[0] = 0
    done = [False] * n
    worst = 0
    for _ in range(n):
        u = min((i for i in range(n) if not done[i]), key=best.__getitem__)
        done[u] = True
        worst = max(worst, best[u])
        for v in range(n):
            if not done[v]:
                d = factor.distance(zs[u], zs[v])
                if d < best[v]:
                    best[v] = d
    return int(worst)


def catenary(fs: factor.FactorSet) -> int:
    """Smallest N such that any two factorizations join by an N-chain."""
    return _bottleneck(fs.all)


def equal_catenary(fs: factor.FactorSet) -> int:
    """Chains confined to one length fiber; 0 when all fibers are single."""
    return max(
        (_bottleneck(fs.by_length(k)) for k in fs.lengths),
        default=0,
    )


def adjacent_catenary(fs: factor.FactorSet) -> int:
    """Largest set distance between fibers of adjacent lengths."""
    ls = fs.lengths
    return max(
        (
            factor.set_distance(fs.by_length(k), fs.by_length(l))
            for k, l in zip(ls, ls[1:])
        ),
        default=0,
    )


def monotone_catenary(fs: factor.FactorSet) -> int:
    return max(equal_catenary(fs), adjacent_catenary(fs))


def monotone_chain_oracle(
    fs: factor.FactorSet,
    z: factor.Factorization,
    zp: factor.Factorization,
    n: int,
) -> bool:
    """Is there a monotone chain from z to zp with all steps <= n?

    Lengths along a monotone chain towards the longer endpoint never
    exceed it, so a breadth-first search over non-decreasing lengths from
    the shorter endpoint is exhaustive.
    """
    if z.length > zp.length:
        z, zp = zp, z
    if z == zp:
        return True
    seen = {z}
    frontier = [z]
    while frontier:
        nxt = []
        for cur in frontier:
            for y in fs.all:
                if y in seen or y.length < cur.length or y.length > zp.length:
                    continue
                if factor.distance(cur, y) <= n:
                    if y == zp:
                        return True
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return False


# ---------------------------------------------------------------------------
# successive distances


def successive_distance(fs: factor.FactorSet, z: factor.Factorization) -> int:
    """Smallest N reaching each length adjacent to |z| within distance N."""
    ls = fs.lengths
    pos = ls.index(z.length)
    adjacent = [ls[i] for i in (pos - 1, pos + 1) if 0 <= i < len(ls)]
    return max(
        (factor.set_distance([z], fs.by_length(k)) for k in adjacent),
        default=0,
    )


def element_successive_distance(fs: factor.FactorSet) -> int:
    """Worst one-sided distance between fibers of adjacent lengths."""
    ls = fs.lengths
    return max(
        (
            factor.dist_sup(fs.by_length(k), fs.by_length(l))
            for k, l in zip(ls, ls[1:])
        ),
        default=0,
    )


def weak_successive_distance(fs: factor.FactorSet) -> int:
    """Smallest N with d(Z_k, Z_l) <= N * |l - k| for all length pairs."""
    ls = fs.lengths
    best = 0
    for k, l in itertools.combinations(ls, 2):
        d = factor.set_distance(fs.by_length(k), fs.by_length(l))
        best = max(best, -(-d // (l - k)))
    return best


def pair_tables(fs: factor.FactorSet):
    """(set distance, one-sided sup) for every pair of lengths k < l."""
    dists: dict[tuple[int, int], int] = {}
    sups: dict[tuple[int, int], int] = {}
    for k, l in itertools.combinations(fs.lengths, 2):
        zk, zl = fs.by_length(k), fs.by_length(l)
        dists[(k, l)] = factor.set_distance(zk, zl)
        sups[(k, l)] = factor.dist_sup(zk, zl)
    return dists, sups


# ---------------------------------------------------------------------------
# element report


@dataclass(frozen=True)
class InvariantReport:
    element: models.Element
    lengths: LengthSet
    elasticity: Fraction
    c: int
    c_eq: int
    c_adj: int
    c_mon: int
    delta_elem: int
    delta_w: int
    pair_distance: dict
    pair_dist_sup: dict

    def to_json(self, desc: models.MonoidDescriptor) -> dict:
        return {
            "element": models.element_to_json(desc, self.element),
            "lengthSet": list(self.lengths.lengths),
            "delta": list(self.lengths.delta()),
            "rho": str(self.elasticity),
            "c": self.c,
            "cEq": self.c_eq,
            "cAdj": self.c_adj,
            "cMon": self.c_mon,
            "deltaElem": self.delta_elem,
            "deltaW": self.delta_w,
            "pairDistance": {f"{k},{l}": v for (k, l), v in self.pair_distance.items()},
            "pairDistSup": {f"{k},{l}": v for (k, l), v in self.pair_dist_sup.items()},
        }


def element_report(fs: factor.FactorSet) -> InvariantReport:
    ls = length_set(fs)
    dists, sups = pair_tables(fs)
    return InvariantReport(
        element=fs.element,
        lengths=ls,
        elasticity=ls.rho(),
        c=catenary(fs),
        c_eq=equal_catenary(fs),
        c_adj=adjacent_catenary(fs),
        c_mon=monotone_catenary(fs),
        delta_elem=element_successive_distance(fs),
        delta_w=weak_successive_distance(fs),
        pair_distance=dists,
        pair_dist_sup=sups,
    )


# ---------------------------------------------------------------------------
# element enumeration


def enumerate_elements(
    desc: models.MonoidDescriptor, weight_bound: int
) -> list[models.Element]:
    """Every member of weight <= bound, once, weight-then-lex ordered."""
    if weight_bound < 0:
        return []
    if isinstance(desc, models.Numerical):
        out = [n for n in range(weight_bound + 1) if models.membership(desc, n)]
    elif isinstance(desc, models.Affine):
        out = list(_closure(desc, weight_bound))
    elif isinstance(desc, models.FinitelyPrimaryValue):
        out = [
            v
            for v in itertools.product(*(range(weight_bound + 1),) * desc.rank)
            if sum(v) <= weight_bound and models._fp_member(desc, v)
        ]
    elif isinstance(desc, models.Sumset):
        out = list(_closure(desc, weight_bound))
    else:
        out = list(_product_elements(desc, weight_bound))
    out.sort(key=lambda el: models.element_sort_key(desc, el))
    return out


def _closure(desc, weight_bound):
    """Members of a finitely generated model, by saturation."""
    seen = {models.identity(desc)}
    stack = list(seen)
    while stack:
        el = stack.pop()
        for g in desc.generators:
            q = models.multiply(desc, el, g)
            if q not in seen and models.weight(desc, q) <= weight_bound:
                seen.add(q)
                stack.append(q)
    return seen


def _product_elements(desc: models.Product, weight_bound: int):
    factor_lists = [enumerate_elements(f, weight_bound) for f in desc.factors]
    free_vectors = [
        v
        for v in itertools.product(*(range(weight_bound + 1),) * desc.free_rank)
        if sum(v) <= weight_bound
    ] or [()]
    for combo in itertools.product(*factor_lists):
        used = sum(models.weight(f, c) for f, c in zip(desc.factors, combo))
        if used > weight_bound:
            continue
        for fv in free_vectors:
            if used + sum(fv) <= weight_bound:
                yield (tuple(combo), fv)


# ---------------------------------------------------------------------------
# global estimates


@dataclass(frozen=True)
class GlobalEstimate:
    """Lower estimate of a global invariant at a finite weight bound."""

    name: str
    value: object
    bound: int
    stabilized: bool

    def to_json(self) -> dict:
        value = self.value
        if isinstance(value, Fraction):
            value = str(value)
        elif isinstance(value, tuple):
            value = list(value)
        return {
            "name": self.name,
            "value": value,
            "bound": self.bound,
            "stabilized": self.stabilized,
        }


_ESTIMATE_NAMES = ("delta_set", "rho", "c", "c_eq", "c_adj", "c_mon", "delta", "delta_w")


def _summary_worker(args):
    desc, el, budget = args
    try:
        rep = element_report(factor.factorizations(desc, el, budget))
    except BudgetExceeded as exc:
        return {"element": el, "overflow": exc.limit}
    return {
        "element": el,
        "weight": models.weight(desc, el),
        "delta_set": rep.lengths.delta(),
        "rho": rep.elasticity,
        "c": rep.c,
        "c_eq": rep.c_eq,
        "c_adj": rep.c_adj,
        "c_mon": rep.c_mon,
        "delta": rep.delta_elem,
        "delta_w": rep.delta_w,
    }


def parallel_map(fn, items, jobs: int = 1) -> list:
    """Deterministic order-preserving map, forking only when asked to."""
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def global_estimates(
    desc: models.MonoidDescriptor,
    weight_bound: int,
    budget: int = factor.DEFAULT_BUDGET,
    jobs: int = 1,
):
    """Aggregate element invariants below the bound.

    Returns (estimates, warnings). An estimate is flagged stabilized when
    its value did not change over the top half of the bound range; budget
    overflows are recorded per element, never dropped silently.
    """
    elements = enumerate_elements(desc, weight_bound)
    rows = parallel_map(_summary_worker, [(desc, el, budget) for el in elements], jobs)
    warnings = [
        {
            "element": models.element_to_json(desc, r["element"]),
            "error": "budget-exceeded",
            "budget": r["overflow"],
        }
        for r in rows
        if "overflow" in r
    ]
    series: dict[str, list] = {name: [] for name in _ESTIMATE_NAMES}
    delta_acc: set[int] = set()
    acc = {"rho": Fraction(1), "c": 0, "c_eq": 0, "c_adj": 0, "c_mon": 0,
           "delta": 0, "delta_w": 0}
    good = [r for r in rows if "overflow" not in r]
    i = 0
    for b in range(weight_bound + 1):
        while i < len(good) and good[i]["weight"] == b:
            row = good[i]
            delta_acc.update(row["delta_set"])
            for name in acc:
                acc[name] = max(acc[name], row[name])
            i += 1
        series["delta_set"].append(tuple(sorted(delta_acc)))
        for name in acc:
            series[name].append(acc[name])
    half = weight_bound // 2
    estimates = [
        GlobalEstimate(
            name=name,
            value=series[name][-1],
            bound=weight_bound,
            stabilized=len(set(series[name][half:])) == 1,
        )
        for name in _ESTIMATE_NAMES
    ]
    return estimates, warnings


def unions_of_lengths(
    desc: models.MonoidDescriptor,
    k: int,
    weight_bound: int,
    budget: int = factor.DEFAULT_BUDGET,
):
    """Union of all enumerated length sets containing k, always with k itself.

    Returns (report dict, warnings). The k-th power of any atom realizes
    length k, so seeding with {k} keeps the estimate a true lower bound
    even at bounds too small to exhibit any such power.
    """
    union = {k}
    warnings = []
    for el in enumerate_elements(desc, weight_bound):
        try:
            ls = length_set(factor.factorizations(desc, el, budget))
        except BudgetExceeded as exc:
            warnings.append(
                {
                    "element": models.element_to_json(desc, el),
                    "error": "budget-exceeded",
                    "budget": exc.limit,
                }
            )
            continue
        if k in ls:
            union.update(ls.lengths)
    report = {
        "k": k,
        "union": length_set_of(union),
        "rhoK": max(union),
        "bound": weight_bound,
    }
    return report, warnings
