"""Instance generators: hardness gadgets with ground-truth oracles, tight-ratio
families for the approximation algorithms, and seeded random instances.

The gadget generators double as test oracles: each one embeds a decision
problem (vertex cover, partition) whose answer pins down the robust optimum
of the emitted instance, so solvers can be checked without trusting any
solver.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .core import Interval, IntervalFamily
from .errors import ValidationError
from .scenarios import DiscreteScenarioSet, Instance, IntervalUncertainty


@dataclass(frozen=True)
class UndirectedGraph:
    """Simple undirected graph on vertices 1..n_vertices, no self-loops."""

    n_vertices: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if not isinstance(self.n_vertices, int) or self.n_vertices < 0:
            raise ValidationError(f"bad vertex count {self.n_vertices!r}")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            if not (1 <= u <= self.n_vertices and 1 <= v <= self.n_vertices):
                raise ValidationError(f"edge {e} outside 1..{self.n_vertices}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n_vertices: int, edges: Iterable[tuple[int, int]]) -> "UndirectedGraph":
        return cls(n_vertices, frozenset((u, v) for u, v in edges))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


@dataclass(frozen=True)
class PartitionInput:
    """A collection of positive integers to split into two equal-sum halves."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.values, tuple):
            object.__setattr__(self, "values", tuple(self.values))
        for a in self.values:
            if not isinstance(a, int) or a < 1:
                raise ValidationError(f"partition values must be positive integers, got {a!r}")


# ---------------------------------------------------------------------------
# Decision-problem oracles (exhaustive / pseudopolynomial; desk scale)


def has_vertex_cover_within(g: UndirectedGraph, budget: int) -> bool:
    """True when some vertex set of size <= budget touches every edge."""
    if budget < 0:
        return not g.edges
    if budget >= g.n_vertices or not g.edges:
        return True
    vertices = range(1, g.n_vertices + 1)
    for cover in combinations(vertices, budget):
        cset = set(cover)
        if all(u in cset or v in cset for u, v in g.edges):
            return True
    return False


def vertex_cover_number(g: UndirectedGraph) -> int:
    for budget in range(g.n_vertices + 1):
        if has_vertex_cover_within(g, budget):
            return budget
    return g.n_vertices


def has_partition(values: Iterable[int]) -> bool:
    """Subset-sum oracle: can the values be split into two equal-sum halves?"""
    vals = list(values)
    total = sum(vals)
    if total % 2:
        return False
    reachable = 1
    for a in vals:
        reachable |= reachable << a
    return bool((reachable >> (total // 2)) & 1)


# ---------------------------------------------------------------------------
# Hardness gadgets


def gen_vertex_cover(g: UndirectedGraph, budget: int) -> Instance:
    """Max-min gadget from a vertex-cover question (graph g, size budget).

    Layout: one interval [2j, 2j+1] per (row i, clique j) for i in 1..n and
    j in 1..budget, so the interval graph is `budget` disjoint n-cliques.
    One scenario per edge (k,l): weight 1 on rows k and l in every clique,
    0 elsewhere.  The emitted instance satisfies: max-min optimum >= 1 iff
    g has a vertex cover of size <= budget.
    """
    if budget < 1:
        raise ValidationError(f"cover budget must be >= 1, got {budget}")
    if not g.edges:
        raise ValidationError("graph has no edges; the scenario set would be empty")
    n = g.n_vertices
    intervals = [
        Interval(2 * j, 2 * j + 1) for j in range(1, budget + 1) for _ in range(n)
    ]
    edges = g.sorted_edges()
    scenarios = []
    for k, l in edges:
        row = [1 if i in (k, l) else 0 for i in range(1, n + 1)]
        scenarios.append(tuple(row * budget))
    return Instance(
        family=IntervalFamily(tuple(intervals)),
        uncertainty=DiscreteScenarioSet(tuple(scenarios)),
        scaling_factor=1,
        metadata={
            "generator": "vertex_cover",
            "n_vertices": n,
            "edges": [list(e) for e in edges],
            "cover_budget": budget,
            "oracle_cover_exists": has_vertex_cover_within(g, budget),
        },
    )


def gen_partition(p: PartitionInput) -> Instance:
    """Min-max regret gadget from a partition question.

    Layout: two identical intervals [2i, 2i+1] per value a_i plus one long
    interval [1, 2n+1] overlapping everything.  Weight ranges (with b half
    the total): first of pair [3b - (3/2)a_i, 3b], second degenerate at
    3b - a_i, long vertex [0, 3nb - b].  All weights are emitted pre-scaled
    by 2 so the halves stay integral; the instance records scaling_factor 2.
    The emitted instance satisfies: regret optimum <= (3/2)b in unscaled
    units (= 3b scaled) iff the values admit a partition.
    """
    values = p.values
    n = len(values)
    total = sum(values)  # 2b, so scaled 3b == 3*total//... kept as 3*total/2
    intervals: list[Interval] = []
    lower: list[int] = []
    upper: list[int] = []
    for i, a in enumerate(values, start=1):
        intervals.append(Interval(2 * i, 2 * i + 1))
        lower.append(3 * total - 3 * a)  # scaled 2*(3b - 3a/2)
        upper.append(3 * total)  # scaled 2*3b
        intervals.append(Interval(2 * i, 2 * i + 1))
        lower.append(3 * total - 2 * a)  # scaled 2*(3b - a), degenerate
        upper.append(3 * total - 2 * a)
    intervals.append(Interval(1, 2 * n + 1))
    lower.append(0)
    upper.append(3 * n * total - total)  # scaled 2*(3nb - b)
    return Instance(
        family=IntervalFamily(tuple(intervals)),
        uncertainty=IntervalUncertainty(tuple(lower), tuple(upper)),
        scaling_factor=2,
        metadata={
            "generator": "partition",
            "values": list(values),
            "total": total,
            "oracle_partition_exists": has_partition(values),
            # regret optimum <= threshold iff partition exists; threshold is
            # 3b = (3/2)*total in scaled units, stored as an exact pair
            "regret_threshold_scaled": [3 * total, 2],
        },
    )


# ---------------------------------------------------------------------------
# Tight families for the approximation ratios


def gen_tight_k(k: int) -> Instance:
    """Discrete instance on which the average-weight algorithm can lose a factor k.

    k disjoint 2-cliques (pairs).  Scenario 1 gives weight 1 to the first
    vertex of every pair; the second vertex of pair i carries weight 1 under
    scenario min(i+1, k).  Every vertex then has the same total weight, so
    all 2^k maximal sets tie under the surrogate; picking every second vertex
    has regret k while the optimum regret is 1.  Certified for k in {2, 3}.
    """
    if k not in (2, 3):
        raise ValidationError(f"tight family certified only for k in {{2, 3}}, got {k}")
    intervals = []
    for i in range(1, k + 1):
        intervals.append(Interval(2 * i, 2 * i + 1))
        intervals.append(Interval(2 * i, 2 * i + 1))
    scenarios = []
    for s in range(1, k + 1):
        row = []
        for i in range(1, k + 1):
            row.append(1 if s == 1 else 0)
            row.append(1 if s == min(i + 1, k) else 0)
        scenarios.append(tuple(row))
    return Instance(
        family=IntervalFamily(tuple(intervals)),
        uncertainty=DiscreteScenarioSet(tuple(scenarios)),
        scaling_factor=1,
        metadata={"generator": "tight_k", "k": k, "worst_tie_ratio": k},
    )


def gen_tight_midpoint() -> Instance:
    """Range instance on which the midpoint algorithm can lose a factor 2.

    A 3-clique with ranges [1,1], [0,2], [0,2]: all midpoints tie, the
    tie-broken choice of a [0,2] vertex has regret 2, and the optimum is 1.
    """
    intervals = (Interval(0, 1), Interval(0, 1), Interval(0, 1))
    return Instance(
        family=IntervalFamily(intervals),
        uncertainty=IntervalUncertainty((1, 0, 0), (1, 2, 2)),
        scaling_factor=1,
        metadata={"generator": "tight_midpoint", "worst_tie_ratio": 2},
    )


# ---------------------------------------------------------------------------
# Random instances


def gen_random(
    n: int,
    model: str,
    w_max: int,
    density: float,
    seed: int,
    k: int | None = None,
) -> Instance:
    """Seeded random instance with integer endpoints in [0, 4n].

    density in [0, 1] steers how likely intervals are to overlap; density 0
    lays the intervals out pairwise disjoint by construction, density 1 packs
    every start at 0.  model "discrete" draws k scenarios of uniform weights
    in [0, w_max]; model "interval" draws a lower <= upper pair per vertex.
    The same arguments always produce the identical instance.
    """
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}")
    if w_max < 1:
        raise ValidationError(f"w_max must be >= 1, got {w_max}")
    if not 0.0 <= density <= 1.0:
        raise ValidationError(f"density must be in [0, 1], got {density}")
    if model not in ("discrete", "interval"):
        raise ValidationError(f"model must be 'discrete' or 'interval', got {model!r}")
    if model == "discrete":
        if k is None or k < 1:
            raise ValidationError(f"discrete model needs k >= 1 scenarios, got {k!r}")
    elif k is not None:
        raise ValidationError("k only applies to the discrete model")
    rng = random.Random(seed)
    span = 4 * n
    intervals = []
    if density == 0.0:
        # one interval per window [4i, 4i+3]; windows never touch
        for i in range(n):
            lo = 4 * i + rng.randint(0, 1)
            hi = lo + rng.randint(0, 1)
            intervals.append(Interval(lo, hi))
    else:
        max_lo = max(0, round((span - 2) * (1.0 - density)))
        max_len = 2 + round(4 * density)
        for _ in range(n):
            lo = rng.randint(0, max_lo)
            hi = min(lo + rng.randint(0, max_len), span)
            intervals.append(Interval(lo, hi))
    if model == "discrete":
        uncertainty: DiscreteScenarioSet | IntervalUncertainty = DiscreteScenarioSet(
            tuple(
                tuple(rng.randint(0, w_max) for _ in range(n)) for _ in range(k)
            )
        )
    else:
        lower = []
        upper = []
        for _ in range(n):
            a = rng.randint(0, w_max)
            b = rng.randint(0, w_max)
            lower.append(min(a, b))
            upper.append(max(a, b))
        uncertainty = IntervalUncertainty(tuple(lower), tuple(upper))
    return Instance(
        family=IntervalFamily(tuple(intervals)),
        uncertainty=uncertainty,
        scaling_factor=1,
        metadata={
            "generator": "random",
            "n": n,
            "model": model,
            "k": k,
            "w_max": w_max,
            "density": density,
            "seed": seed,
        },
    )
