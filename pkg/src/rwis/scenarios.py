"""Uncertainty models for vertex weights.

Two representations: an explicit list of scenarios (weight vectors), or a
closed integer range per vertex whose Cartesian product is the scenario set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .core import IntervalFamily, check_members, resolve_guard
from .errors import GuardError, ValidationError

DEFAULT_EXTREME_GUARD = 12


def _check_vector(v: Iterable[int], what: str) -> tuple[int, ...]:
    out = tuple(v)
    for x in out:
        if not isinstance(x, int):
            raise ValidationError(f"{what} must contain integers, got {x!r}")
        if x < 0:
            raise ValidationError(f"{what} must be nonnegative, got {x}")
    return out


@dataclass(frozen=True)
class DiscreteScenarioSet:
    """K explicitly given weight vectors over the same n vertices (K >= 1)."""

    scenarios: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not isinstance(self.scenarios, tuple):
            object.__setattr__(self, "scenarios", tuple(self.scenarios))
        if len(self.scenarios) < 1:
            raise ValidationError("a discrete scenario set needs at least one scenario")
        rows = tuple(_check_vector(s, "scenario weights") for s in self.scenarios)
        object.__setattr__(self, "scenarios", rows)
        lengths = {len(s) for s in rows}
        if len(lengths) > 1:
            raise ValidationError(f"scenarios have inconsistent lengths {sorted(lengths)}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "DiscreteScenarioSet":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def k(self) -> int:
        return len(self.scenarios)

    @property
    def n(self) -> int:
        return len(self.scenarios[0])


@dataclass(frozen=True)
class IntervalUncertainty:
    """Per-vertex weight range [lower[i], upper[i]]; 0 <= lower <= upper."""

    lower: tuple[int, ...]
    upper: tuple[int, ...]

    def __post_init__(self) -> None:
        lo = _check_vector(self.lower, "lower bounds")
        up = _check_vector(self.upper, "upper bounds")
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", up)
        if len(lo) != len(up):
            raise ValidationError(
                f"bound vectors have different lengths {len(lo)} and {len(up)}"
            )
        for i, (a, b) in enumerate(zip(lo, up), start=1):
            if a > b:
                raise ValidationError(
                    f"vertex {i}: lower bound {a} exceeds upper bound {b}"
                )

    @classmethod
    def from_ranges(cls, ranges: Iterable[tuple[int, int]]) -> "IntervalUncertainty":
        pairs = list(ranges)
        return cls(tuple(a for a, _ in pairs), tuple(b for _, b in pairs))

    @property
    def n(self) -> int:
        return len(self.lower)


Uncertainty = DiscreteScenarioSet | IntervalUncertainty


@dataclass(frozen=True, eq=True)
class Instance:
    """An interval family bound to one uncertainty model.

    scaling_factor records the global multiplier applied to make all weights
    integral; objective values reported for this instance are in scaled units.
    metadata is free-form (generator name, seed, oracle answers) and must stay
    JSON-serializable.
    """

    family: IntervalFamily
    uncertainty: Uncertainty
    scaling_factor: int = 1
    metadata: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not isinstance(self.scaling_factor, int) or self.scaling_factor < 1:
            raise ValidationError(
                f"scaling factor must be a positive integer, got {self.scaling_factor!r}"
            )
        if self.uncertainty.n != len(self.family):
            raise ValidationError(
                f"uncertainty covers {self.uncertainty.n} vertices, family has {len(self.family)}"
            )

    @property
    def is_discrete(self) -> bool:
        return isinstance(self.uncertainty, DiscreteScenarioSet)


def worst_case_scenario(
    u: IntervalUncertainty, members: Iterable[int]
) -> tuple[int, ...]:
    """The extreme scenario that hurts the given solution the most.

    Members of the solution sit at their lower bound, everything else at its
    upper bound.  This scenario attains the solution's maximal regret.
    """
    chosen = set(check_members(u.n, members))
    return tuple(
        u.lower[i] if (i + 1) in chosen else u.upper[i] for i in range(u.n)
    )


def extreme_scenarios(
    u: IntervalUncertainty, guard: int | None = None
) -> Iterator[tuple[int, ...]]:
    """All distinct scenarios with every coordinate at a bound.

    Degenerate ranges contribute a single value, so the count is 2^d where d
    is the number of non-degenerate coordinates.  Guarded (default 12).
    """
    limit = resolve_guard(guard, default=DEFAULT_EXTREME_GUARD)
    if u.n > limit:
        raise GuardError(f"{u.n} vertices exceed extreme-scenario guard {limit}")
    choices = [
        (lo,) if lo == up else (lo, up) for lo, up in zip(u.lower, u.upper)
    ]
    return (tuple(v) for v in itertools.product(*choices))
