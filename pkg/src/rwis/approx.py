"""Approximation algorithms with certified worst-case ratios.

Both algorithms collapse the uncertain weights to a single surrogate vector
and solve one deterministic problem.  Sums are used instead of averages or
midpoints: dividing every weight by the same positive constant cannot change
which sets are optimal, and sums keep the arithmetic in exact integers.
"""

from __future__ import annotations

import math
from fractions import Fraction
from . import core, robust
from .core import IntervalFamily
from .errors import ValidationError
from .scenarios import DiscreteScenarioSet, IntervalUncertainty, Uncertainty

TIE_CANONICAL = "canonical"
TIE_ADVERSARIAL = "adversarial"


def _surrogate_discrete(scen: DiscreteScenarioSet) -> tuple[int, ...]:
    return tuple(sum(col) for col in zip(*scen.scenarios))


def _surrogate_interval(u: IntervalUncertainty) -> tuple[int, ...]:
    return tuple(a + b for a, b in zip(u.lower, u.upper))


def _pick(
    fam: IntervalFamily,
    surrogate: tuple[int, ...],
    ties: str,
    guard: int | None,
    score,
) -> tuple[int, ...]:
    if ties == TIE_CANONICAL:
        return core.max_weight_is(fam, surrogate)[0]
    if ties == TIE_ADVERSARIAL:
        optima = core.max_weight_is_all_optima(fam, surrogate, guard)
        return max(optima, key=score)  # first max in lexicographic order wins
    raise ValidationError(f"unknown tie mode {ties!r}")


def k_approx_regret(
    fam: IntervalFamily,
    scen: DiscreteScenarioSet,
    ties: str = TIE_CANONICAL,
    guard: int | None = None,
) -> robust.RegretReport:
    """Average-weight approximation for min-max regret, ratio K.

    Solves the deterministic problem with each vertex weighted by the sum of
    its weights across all K scenarios, then reports that solution's exact
    maximal regret, which is at most K times the optimum.  Runs in
    O(Kn + n log n).  `ties="adversarial"` explores every surrogate optimum
    and returns the worst one (guarded enumeration; used to certify tightness).
    """
    surrogate = _surrogate_discrete(scen)
    members = _pick(
        fam,
        surrogate,
        ties,
        guard,
        lambda m: robust.max_regret_discrete(fam, scen, m).regret_value,
    )
    return robust.max_regret_discrete(fam, scen, members)


def midpoint_approx_regret(
    fam: IntervalFamily,
    u: IntervalUncertainty,
    ties: str = TIE_CANONICAL,
    guard: int | None = None,
) -> robust.RegretReport:
    """Midpoint approximation for min-max regret under ranges, ratio 2.

    Solves the deterministic problem with each vertex weighted by
    lower + upper, then reports that solution's exact maximal regret, which
    is at most twice the optimum.
    """
    surrogate = _surrogate_interval(u)
    members = _pick(
        fam,
        surrogate,
        ties,
        guard,
        lambda m: robust.max_regret_interval(fam, u, m).regret_value,
    )
    return robust.max_regret_interval(fam, u, members)


def adversarial_ratio(
    fam: IntervalFamily,
    uncertainty: Uncertainty,
    algorithm: str | None = None,
    guard: int | None = None,
):
    """Worst regret ratio over every tie-broken output of an approximation.

    Enumerates all optima of the surrogate problem, takes the worst exact
    regret among them, and divides by the exact min-max regret optimum.
    Conventions: 1 when both are zero, math.inf when only the optimum is
    zero, otherwise an exact Fraction.
    """
    if isinstance(uncertainty, DiscreteScenarioSet):
        expected = "kapprox"
        surrogate = _surrogate_discrete(uncertainty)

        def regret_of(m):
            return robust.max_regret_discrete(fam, uncertainty, m).regret_value

        opt = robust.solve_regret_discrete_exact(fam, uncertainty).regret_value
    elif isinstance(uncertainty, IntervalUncertainty):
        expected = "midpoint"
        surrogate = _surrogate_interval(uncertainty)

        def regret_of(m):
            return robust.max_regret_interval(fam, uncertainty, m).regret_value

        opt = robust.solve_regret_interval_exact(fam, uncertainty, guard).regret_value
    else:
        raise ValidationError(f"unknown uncertainty model {uncertainty!r}")
    if algorithm is not None and algorithm != expected:
        raise ValidationError(
            f"algorithm {algorithm!r} does not apply to this uncertainty model"
        )
    worst = max(
        regret_of(m) for m in core.max_weight_is_all_optima(fam, surrogate, guard)
    )
    if opt == 0:
        return Fraction(1) if worst == 0 else math.inf
    return Fraction(worst, opt)

