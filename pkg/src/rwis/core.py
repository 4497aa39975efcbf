"""Interval graphs and deterministic maximum-weight independent set solvers.

Vertices are identified by their 1-based position in the interval family.
Weights are nonnegative integers; callers that need rational weights apply a
global scaling factor at instance-construction time and keep everything exact.
"""

from __future__ import annotations

import os
from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import GuardError, ValidationError

DEFAULT_ENUMERATION_GUARD = 20
GUARD_ENV_VAR = "RWIS_GUARD_N"


def resolve_guard(guard: int | None, default: int = DEFAULT_ENUMERATION_GUARD) -> int:
    """Effective enumeration guard: explicit argument, then RWIS_GUARD_N, then default."""
    if guard is not None:
        return guard
    env = os.environ.get(GUARD_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValidationError(
                f"{GUARD_ENV_VAR} must be an integer, got {env!r}"
            ) from None
    return default


@dataclass(frozen=True, order=True)
class Interval:
    """Closed integer interval [lo, hi] on the line."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if not isinstance(self.lo, int) or not isinstance(self.hi, int):
            raise ValidationError(
                f"interval endpoints must be integers, got [{self.lo!r}, {self.hi!r}]"
            )
        if self.lo > self.hi:
            raise ValidationError(f"invalid interval: lo={self.lo} > hi={self.hi}")


def overlaps(a: Interval, b: Interval) -> bool:
    """True when the closed intervals share at least one point.

    Touching endpoints count as an overlap: [2,3] and [3,5] intersect in {3}.
    """
    return max(a.lo, b.lo) <= min(a.hi, b.hi)


@dataclass(frozen=True)
class IntervalFamily:
    """Ordered interval list; position k (1-based) is vertex v_k of the interval graph."""

    intervals: tuple[Interval, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.intervals, tuple):
            object.__setattr__(self, "intervals", tuple(self.intervals))
        for iv in self.intervals:
            if not isinstance(iv, Interval):
                raise ValidationError(f"expected Interval, got {iv!r}")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "IntervalFamily":
        return cls(tuple(Interval(lo, hi) for lo, hi in pairs))

    @property
    def n(self) -> int:
        return len(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def interval(self, index: int) -> Interval:
        """Interval of vertex `index` (1-based)."""
        if not 1 <= index <= len(self.intervals):
            raise ValidationError(
                f"vertex index {index} out of range 1..{len(self.intervals)}"
            )
        return self.intervals[index - 1]


def check_members(n: int, members: Iterable[int]) -> tuple[int, ...]:
    """Validate 1-based vertex indices against a family of size n.

    Returns the indices as a sorted, deduplicated tuple.
    """
    out = tuple(sorted(set(members)))
    for i in out:
        if not isinstance(i, int) or not 1 <= i <= n:
            raise ValidationError(f"vertex index {i!r} out of range 1..{n}")
    return out


def check_weights(n: int, weights: Iterable[int]) -> tuple[int, ...]:
    """Validate a weight vector: length n, nonnegative integers."""
    w = tuple(weights)
    if len(w) != n:
        raise ValidationError(
            f"weight vector has length {len(w)}, family has {n} vertices"
        )
    for x in w:
        if not isinstance(x, int):
            raise ValidationError(f"weights must be integers, got {x!r}")
        if x < 0:
            raise ValidationError(f"negative weight {x} rejected")
    return w


def is_independent(fam: IntervalFamily, members: Iterable[int]) -> bool:
    """True when no two of the given vertices have overlapping intervals."""
    idx = check_members(len(fam), members)
    ivs = sorted(fam.intervals[i - 1] for i in idx)
    return all(ivs[j].hi < ivs[j + 1].lo for j in range(len(ivs) - 1))


@lru_cache(maxsize=256)
def _prepared(fam: IntervalFamily) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Sort positions by right endpoint and precompute predecessor indices.

    order[k] is the 0-based original index of the (k+1)-th interval in sorted
    order; preds[k] counts sorted intervals ending strictly before its start,
    i.e. the DP predecessor p(k+1).
    """
    order = tuple(
        sorted(
            range(len(fam)),
            key=lambda i: (fam.intervals[i].hi, fam.intervals[i].lo, i),
        )
    )
    his = [fam.intervals[i].hi for i in order]
    preds = tuple(bisect_left(his, fam.intervals[i].lo) for i in order)
    return order, preds


@lru_cache(maxsize=256)
def _conflict_masks(fam: IntervalFamily) -> tuple[int, ...]:
    """masks[i] has bit j set (j > i, 0-based) when intervals i and j overlap."""
    n = len(fam)
    masks = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if overlaps(fam.intervals[i], fam.intervals[j]):
                masks[i] |= 1 << j
    return tuple(masks)


def max_weight_is(
    fam: IntervalFamily, weights: Iterable[int]
) -> tuple[tuple[int, ...], int]:
    """Maximum-weight independent set via the classic right-endpoint DP.

    Runs in O(n log n): sort by right endpoint, binary-search each interval's
    predecessor, then D[i] = max(D[i-1], D[p(i)] + w_i).  Ties prefer skipping
    the current interval, so zero-weight vertices are never included and the
    returned set is reproducible.

    Returns (members, value) with members a sorted tuple of 1-based indices.
    """
    w = check_weights(len(fam), weights)
    order, preds = _prepared(fam)
    n = len(fam)
    best = [0] * (n + 1)
    for pos in range(1, n + 1):
        take = best[preds[pos - 1]] + w[order[pos - 1]]
        skip = best[pos - 1]
        best[pos] = take if take > skip else skip
    members = []
    pos = n
    while pos > 0:
        if best[pos] == best[pos - 1]:
            pos -= 1
        else:
            members.append(order[pos - 1] + 1)
            pos = preds[pos - 1]
    return tuple(sorted(members)), best[n]


def enumerate_independent_sets(
    fam: IntervalFamily, guard: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Yield every independent set exactly once, in lexicographic member order.

    The empty set comes first.  Guarded: refuses families larger than the
    enumeration guard (default 20 vertices) since the count can reach 2^n.
    """
    limit = resolve_guard(guard)
    n = len(fam)
    if n > limit:
        raise GuardError(f"family size {n} exceeds enumeration guard {limit}")
    masks = _conflict_masks(fam)

    def rec(start: int, chosen: list[int], blocked: int) -> Iterator[tuple[int, ...]]:
        yield tuple(chosen)
        for j in range(start, n):
            if not (blocked >> j) & 1:
                chosen.append(j + 1)
                yield from rec(j + 1, chosen, blocked | masks[j])
                chosen.pop()

    return rec(0, [], 0)


def max_weight_is_all_optima(
    fam: IntervalFamily, weights: Iterable[int], guard: int | None = None
) -> list[tuple[int, ...]]:
    """All optimal independent sets, in lexicographic order.

    Exhaustive and guarded; intended for tie-break analysis on small
    instances, not as a production solver.  Never empty: the empty set is
    independent, so a zero optimum at least yields ().
    """
    w = check_weights(len(fam), weights)
    best: int | None = None
    out: list[tuple[int, ...]] = []
    for members in enumerate_independent_sets(fam, guard):
        val = sum(w[i - 1] for i in members)
        if best is None or val > best:
            best = val
            out = [members]
        elif val == best:
            out.append(members)
    return out
