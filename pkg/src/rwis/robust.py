"""Max-min and min-max regret objectives and their exact and (1±ε) solvers.

The exact solvers for discrete scenario sets run a Pareto-frontier dynamic
program over the right-endpoint order: each state is the vector of per-scenario
accumulated weights, and dominated vectors are pruned.  Both robust objectives
are monotone in those vectors, so pruning is lossless.  The scaling schemes
reduce the weight range so the same DP runs in time polynomial in n and 1/ε.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from . import core
from .core import IntervalFamily, check_members, resolve_guard
from .errors import FrontierCapError, GuardError, ValidationError
from .scenarios import DiscreteScenarioSet, IntervalUncertainty, worst_case_scenario

DEFAULT_FRONTIER_CAP = 5_000_000
FRONTIER_CAP_ENV_VAR = "RWIS_FRONTIER_CAP"


def resolve_frontier_cap(cap: int | None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(FRONTIER_CAP_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValidationError(
                f"{FRONTIER_CAP_ENV_VAR} must be an integer, got {env!r}"
            ) from None
    return DEFAULT_FRONTIER_CAP


@dataclass(frozen=True)
class RegretReport:
    """A solution, its maximal regret, and a scenario attaining that regret."""

    solution: tuple[int, ...]
    regret_value: int
    witness_scenario: tuple[int, ...]


@dataclass(frozen=True)
class ParetoFrontier:
    """Pareto-maximal per-scenario weight vectors achievable by independent sets."""

    k: int
    vectors: frozenset[tuple[int, ...]]

    def is_valid(self) -> bool:
        """Check the non-domination invariant (quadratic; for tests)."""
        vecs = list(self.vectors)
        for a in vecs:
            for b in vecs:
                if a != b and all(x <= y for x, y in zip(a, b)):
                    return False
        return True


# ---------------------------------------------------------------------------
# Objective evaluators


def weight_under(members: Iterable[int], scenario: Sequence[int]) -> int:
    """Total weight of the given vertices under one scenario."""
    idx = check_members(len(scenario), members)
    return sum(scenario[i - 1] for i in idx)


@lru_cache(maxsize=8192)
def _opt_weight_cached(fam: IntervalFamily, scenario: tuple[int, ...]) -> int:
    return core.max_weight_is(fam, scenario)[1]


def opt_weight(fam: IntervalFamily, scenario: Iterable[int]) -> int:
    """Weight of a maximum-weight independent set under one scenario."""
    return _opt_weight_cached(fam, tuple(scenario))


def _checked_solution(fam: IntervalFamily, members: Iterable[int]) -> tuple[int, ...]:
    idx = check_members(len(fam), members)
    if not core.is_independent(fam, idx):
        raise ValidationError(f"vertex set {idx} is not independent")
    return idx


def max_min_value(
    fam: IntervalFamily, scen: DiscreteScenarioSet, members: Iterable[int]
) -> int:
    """Worst-case (minimum over scenarios) weight of a fixed solution."""
    _require_same_size(fam, scen.n)
    idx = _checked_solution(fam, members)
    return min(sum(s[i - 1] for i in idx) for s in scen.scenarios)


def max_regret_discrete(
    fam: IntervalFamily, scen: DiscreteScenarioSet, members: Iterable[int]
) -> RegretReport:
    """Maximal regret of a fixed solution over an explicit scenario list.

    The witness is the lowest-index scenario attaining the maximum.
    """
    _require_same_size(fam, scen.n)
    idx = _checked_solution(fam, members)
    best_gap = None
    witness = scen.scenarios[0]
    for s in scen.scenarios:
        gap = opt_weight(fam, s) - sum(s[i - 1] for i in idx)
        if best_gap is None or gap > best_gap:
            best_gap = gap
            witness = s
    return RegretReport(idx, best_gap, witness)


def max_regret_interval(
    fam: IntervalFamily, u: IntervalUncertainty, members: Iterable[int]
) -> RegretReport:
    """Maximal regret of a fixed solution over a Cartesian product of ranges.

    Only one scenario needs checking: members at lower bounds, the rest at
    upper bounds.  That extreme scenario maximizes the regret of the solution
    over the whole product.
    """
    _require_same_size(fam, u.n)
    idx = _checked_solution(fam, members)
    sx = worst_case_scenario(u, idx)
    regret = opt_weight(fam, sx) - sum(sx[i - 1] for i in idx)
    return RegretReport(idx, regret, sx)


def solve_max_min_interval(
    fam: IntervalFamily, u: IntervalUncertainty
) -> tuple[tuple[int, ...], int]:
    """Max-min solution under range uncertainty.

    The worst case of any solution puts every vertex at its lower bound, so
    the problem reduces to one deterministic solve on the lower bounds.
    """
    _require_same_size(fam, u.n)
    return core.max_weight_is(fam, u.lower)


def _require_same_size(fam: IntervalFamily, n: int) -> None:
    if len(fam) != n:
        raise ValidationError(
            f"uncertainty covers {n} vertices, family has {len(fam)}"
        )


# ---------------------------------------------------------------------------
# Pareto-frontier dynamic program

_SKIP = None


def _pareto_max(vectors: Iterable[tuple[int, ...]], k: int) -> list[tuple[int, ...]]:
    """Pareto-maximal subset under component-wise >=."""
    vecs = sorted(set(vectors), reverse=True)
    if k == 1:
        return vecs[:1]
    if k == 2:
        kept: list[tuple[int, ...]] = []
        best_second = -1
        for v in vecs:
            if v[1] > best_second:
                kept.append(v)
                best_second = v[1]
        return kept
    kept = []
    for v in vecs:
        # descending lexicographic order: earlier vectors can never be
        # dominated by later ones, so one pass suffices
        if not any(all(x <= y for x, y in zip(v, u)) for u in kept):
            kept.append(v)
    return kept


def _frontier_levels(
    fam: IntervalFamily,
    columns: Sequence[Sequence[int]],
    cap: int,
    sat: int | None = None,
):
    """Run the frontier DP; keep every level for witness backtracking.

    columns[k][i] is vertex i+1's weight under scenario k+1.  Level i maps
    each Pareto-maximal vector achievable with the first i sorted intervals to
    its provenance: None for "skip interval i", or the parent vector at level
    p(i) for "take interval i".  With `sat` set, additions saturate at that
    value per coordinate.
    """
    order, preds = core._prepared(fam)
    n = len(fam)
    k = len(columns)
    zero = (0,) * k
    levels: list[dict[tuple[int, ...], tuple[int, ...] | None]] = [{zero: _SKIP}]
    for pos in range(1, n + 1):
        orig = order[pos - 1]
        wvec = tuple(col[orig] for col in columns)
        cand: dict[tuple[int, ...], tuple[int, ...] | None] = {
            v: _SKIP for v in levels[pos - 1]
        }
        if sat is None:
            for u in levels[preds[pos - 1]]:
                v = tuple(a + b for a, b in zip(u, wvec))
                if v not in cand:
                    cand[v] = u
        else:
            for u in levels[preds[pos - 1]]:
                v = tuple(min(a + b, sat) for a, b in zip(u, wvec))
                if v not in cand:
                    cand[v] = u
        keep = _pareto_max(cand.keys(), k)
        if len(keep) > cap:
            raise FrontierCapError(
                f"frontier size {len(keep)} exceeds cap {cap} at interval {pos}"
            )
        levels.append({v: cand[v] for v in keep})
    return levels, order, preds


def _backtrack(levels, order, preds, vec: tuple[int, ...]) -> tuple[int, ...]:
    pos = len(levels) - 1
    members: list[int] = []
    while pos > 0:
        parent = levels[pos][vec]
        if parent is _SKIP:
            pos -= 1
        else:
            members.append(order[pos - 1] + 1)
            vec = parent
            pos = preds[pos - 1]
    return tuple(sorted(members))


def pareto_frontier(
    fam: IntervalFamily, scen: DiscreteScenarioSet, cap: int | None = None
) -> ParetoFrontier:
    """All Pareto-maximal vectors (F(X,S_1),...,F(X,S_K)) over independent sets X.

    Recurrence over the right-endpoint order: A[0] = {0}; A[i] is the Pareto
    maximum of A[i-1] together with A[p(i)] shifted by interval i's weight
    vector.  Raises FrontierCapError if a level outgrows the cap (default
    5e6 vectors); the cap is checked against the actual frontier, never
    estimated a priori.
    """
    _require_same_size(fam, scen.n)
    levels, _, _ = _frontier_levels(fam, scen.scenarios, resolve_frontier_cap(cap))
    return ParetoFrontier(k=scen.k, vectors=frozenset(levels[-1]))


def solve_max_min_exact(
    fam: IntervalFamily, scen: DiscreteScenarioSet, cap: int | None = None
) -> tuple[tuple[int, ...], int]:
    """Exact max-min solution via the frontier DP.

    The optimal value is the largest minimum component over frontier vectors;
    a witness set is recovered by backtracking (deterministic: ties on the
    objective pick the lexicographically smallest vector, and equal vectors
    prefer skipping later intervals).
    """
    _require_same_size(fam, scen.n)
    levels, order, preds = _frontier_levels(
        fam, scen.scenarios, resolve_frontier_cap(cap)
    )
    final = sorted(levels[-1])
    best_vec = max(final, key=lambda v: (min(v), tuple(-x for x in v)))
    return _backtrack(levels, order, preds, best_vec), min(best_vec)


def solve_regret_discrete_exact(
    fam: IntervalFamily, scen: DiscreteScenarioSet, cap: int | None = None
) -> RegretReport:
    """Exact min-max regret solution via the frontier DP.

    With c_k the deterministic optimum under scenario k, the regret of a
    frontier vector x is max_k (c_k - x_k), which is non-increasing in every
    coordinate, so restricting attention to Pareto-maximal vectors is sound.
    """
    _require_same_size(fam, scen.n)
    consts = [opt_weight(fam, s) for s in scen.scenarios]
    levels, order, preds = _frontier_levels(
        fam, scen.scenarios, resolve_frontier_cap(cap)
    )
    best_vec = None
    best_regret = None
    for vec in sorted(levels[-1]):
        regret = max(c - x for c, x in zip(consts, vec))
        if best_regret is None or regret < best_regret:
            best_regret = regret
            best_vec = vec
    members = _backtrack(levels, order, preds, best_vec)
    gaps = [c - x for c, x in zip(consts, best_vec)]
    witness = scen.scenarios[gaps.index(best_regret)]
    return RegretReport(members, best_regret, witness)


# ---------------------------------------------------------------------------
# Exhaustive solvers (oracle-grade, guarded)


def _sets_with_sums(
    fam: IntervalFamily, columns: Sequence[Sequence[int]], guard: int | None
) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Yield (members, per-column weight sums) for every independent set.

    Lexicographic member order, empty set first; sums are maintained
    incrementally along the recursion.
    """
    limit = resolve_guard(guard)
    n = len(fam)
    if n > limit:
        raise GuardError(f"family size {n} exceeds enumeration guard {limit}")
    masks = core._conflict_masks(fam)
    k = len(columns)
    sums = [0] * k
    chosen: list[int] = []

    def rec(start: int, blocked: int):
        yield tuple(chosen), tuple(sums)
        for j in range(start, n):
            if not (blocked >> j) & 1:
                chosen.append(j + 1)
                for t in range(k):
                    sums[t] += columns[t][j]
                yield from rec(j + 1, blocked | masks[j])
                for t in range(k):
                    sums[t] -= columns[t][j]
                chosen.pop()

    return rec(0, 0)


def solve_max_min_bruteforce(
    fam: IntervalFamily, scen: DiscreteScenarioSet, guard: int | None = None
) -> tuple[tuple[int, ...], int]:
    """Max-min by full enumeration; returns the lexicographically smallest optimum."""
    _require_same_size(fam, scen.n)
    best_val = None
    best_members: tuple[int, ...] = ()
    for members, sums in _sets_with_sums(fam, scen.scenarios, guard):
        val = min(sums)
        if best_val is None or val > best_val:
            best_val = val
            best_members = members
    return best_members, best_val


def solve_regret_discrete_bruteforce(
    fam: IntervalFamily, scen: DiscreteScenarioSet, guard: int | None = None
) -> RegretReport:
    """Min-max regret by full enumeration; lexicographically smallest optimum."""
    _require_same_size(fam, scen.n)
    consts = [opt_weight(fam, s) for s in scen.scenarios]
    best_regret = None
    best_members: tuple[int, ...] = ()
    for members, sums in _sets_with_sums(fam, scen.scenarios, guard):
        regret = max(c - x for c, x in zip(consts, sums))
        if best_regret is None or regret < best_regret:
            best_regret = regret
            best_members = members
    sums = [sum(s[i - 1] for i in best_members) for s in scen.scenarios]
    gaps = [c - x for c, x in zip(consts, sums)]
    witness = scen.scenarios[gaps.index(best_regret)]
    return RegretReport(best_members, best_regret, witness)


def solve_regret_interval_exact(
    fam: IntervalFamily, u: IntervalUncertainty, guard: int | None = None
) -> RegretReport:
    """Exact min-max regret under range uncertainty by enumerating solutions.

    The problem is NP-hard, so this is a guarded desk-scale solver: every
    independent set is scored by its worst-case extreme scenario (members
    low, others high), which requires one deterministic solve per set.
    """
    _require_same_size(fam, u.n)
    best: RegretReport | None = None
    lower, upper = u.lower, u.upper
    for members in core.enumerate_independent_sets(fam, guard):
        chosen = set(members)
        sx = tuple(
            lower[i] if (i + 1) in chosen else upper[i] for i in range(u.n)
        )
        regret = core.max_weight_is(fam, sx)[1] - sum(lower[i - 1] for i in members)
        if best is None or regret < best.regret_value:
            best = RegretReport(members, regret, sx)
    return best


# ---------------------------------------------------------------------------
# Scaling schemes (1±ε guarantees for constant K)


def _as_positive_fraction(eps) -> Fraction:
    try:
        f = Fraction(eps)
    except (TypeError, ValueError):
        raise ValidationError(f"epsilon must be a positive number, got {eps!r}") from None
    if f <= 0:
        raise ValidationError(f"epsilon must be positive, got {eps!r}")
    return f


def _floor_div(value: int, t: Fraction) -> int:
    return (value * t.denominator) // t.numerator


def _ceil_div(value: int, t: Fraction) -> int:
    return -((-value * t.denominator) // t.numerator)


def fptas_max_min(
    fam: IntervalFamily,
    scen: DiscreteScenarioSet,
    eps,
    cap: int | None = None,
) -> tuple[tuple[int, ...], int]:
    """Max-min solution with value at least opt/(1+eps).

    Runs the frontier DP on floor-scaled weights for a geometric ladder of
    trial bounds V = UB, UB/2, ..., 1 with step t = eps*V/(n(1+eps)), keeping
    per-coordinate sums saturated at C = ceil(2n(1+eps)/eps) so every run
    stays polynomial in n and 1/eps for fixed K.  For the ladder value with
    V <= opt <= 2V the scaled optimum loses at most n*t <= eps*opt/(1+eps) in
    original units, which yields the guarantee; the best exact value over all
    runs is returned.
    """
    _require_same_size(fam, scen.n)
    e = _as_positive_fraction(eps)
    n = len(fam)
    ub = max(opt_weight(fam, s) for s in scen.scenarios)
    best_members: tuple[int, ...] = ()
    best_value = 0
    if ub == 0 or n == 0:
        return best_members, best_value
    sat_num = 2 * n * (1 + e) / e
    sat = -((-sat_num.numerator) // sat_num.denominator)
    cap_val = resolve_frontier_cap(cap)
    trial = ub
    while trial >= 1:
        t = e * trial / (n * (1 + e))
        scaled = [
            [min(_floor_div(w, t), sat) for w in s] for s in scen.scenarios
        ]
        levels, order, preds = _frontier_levels(fam, scaled, cap_val, sat=sat)
        vec = max(sorted(levels[-1]), key=lambda v: (min(v), tuple(-x for x in v)))
        members = _backtrack(levels, order, preds, vec)
        value = min(sum(s[i - 1] for i in members) for s in scen.scenarios)
        if value > best_value:
            best_value = value
            best_members = members
        if trial == 1:
            break
        trial //= 2
    return best_members, best_value


def fptas_regret_discrete(
    fam: IntervalFamily,
    scen: DiscreteScenarioSet,
    eps,
    cap: int | None = None,
) -> RegretReport:
    """Min-max regret solution with regret at most (1+eps)*opt.

    The average-weight approximation bounds the optimum between L = U/K and
    U, where U is its own regret.  Scaling weights by t = eps*L/(n+1) (floors
    for weights, ceilings for the per-scenario deterministic optima) distorts
    any solution's regret by at most t*(n+1) <= eps*L <= eps*opt, so the
    frontier-DP minimizer of the scaled regret meets the guarantee.  Its
    exact regret is reported.
    """
    from .approx import k_approx_regret  # local import to avoid a cycle

    _require_same_size(fam, scen.n)
    e = _as_positive_fraction(eps)
    n = len(fam)
    base = k_approx_regret(fam, scen)
    if base.regret_value == 0 or n == 0:
        return base
    t = e * base.regret_value / (scen.k * (n + 1))
    consts = [
        _ceil_div(opt_weight(fam, s), t) for s in scen.scenarios
    ]
    scaled = [[_floor_div(w, t) for w in s] for s in scen.scenarios]
    levels, order, preds = _frontier_levels(fam, scaled, resolve_frontier_cap(cap))
    best_vec = None
    best_scaled = None
    for vec in sorted(levels[-1]):
        regret = max(c - x for c, x in zip(consts, vec))
        if best_scaled is None or regret < best_scaled:
            best_scaled = regret
            best_vec = vec
    members = _backtrack(levels, order, preds, best_vec)
    return max_regret_discrete(fam, scen, members)
