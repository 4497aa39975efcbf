"""Command-line interface: solve, evaluate, generate, bench, selfcheck.

Output is byte-deterministic for fixed inputs and flags; wall-clock timings
are only emitted under --timings so that default runs can be diffed.
Exit codes: 0 success, 10 parse error, 11 validation error, 12 guard
violation, 13 unsupported problem/algorithm combination (argparse itself
exits 2 on bad usage).
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import approx, core, gen, robust
from .errors import (
    GuardError,
    ParseError,
    RwisError,
    UnsupportedCombinationError,
    ValidationError,
)
from .fileformat import parse_instance, write_instance
from .scenarios import DiscreteScenarioSet, Instance, extreme_scenarios

EXIT_OK = 0
EXIT_PARSE = 10
EXIT_VALIDATION = 11
EXIT_GUARD = 12
EXIT_UNSUPPORTED = 13

PROBLEMS = ("det", "maxmin", "regret")
ALGORITHMS = ("exact", "fptas", "bruteforce", "kapprox", "midpoint")


@dataclass
class ResultRecord:
    """One solver invocation: what ran, what it returned."""

    instance_id: str
    problem: str
    algorithm: str
    value: int
    solution: tuple[int, ...]
    witness_scenario: tuple[int, ...] | None
    epsilon: float | None
    scaling_factor: int
    wall_ms: float | None


def _deterministic_vector(instance: Instance) -> tuple[int, ...]:
    u = instance.uncertainty
    if isinstance(u, DiscreteScenarioSet):
        if u.k == 1:
            return u.scenarios[0]
        raise UnsupportedCombinationError(
            f"problem 'det' needs a deterministic instance; this one has {u.k} scenarios"
        )
    if u.lower == u.upper:
        return u.lower
    raise UnsupportedCombinationError(
        "problem 'det' needs a deterministic instance; this one has non-degenerate ranges"
    )


def dispatch_solve(
    instance: Instance,
    problem: str,
    algorithm: str,
    epsilon: float | None = None,
    adversarial_ties: bool = False,
    guard: int | None = None,
) -> tuple[int, tuple[int, ...], tuple[int, ...] | None]:
    """Route a (problem, algorithm) pair to the implementing solver.

    Returns (value, solution, witness_scenario); for regret problems the
    value is the solution's maximal regret and the witness attains it.
    """
    fam = instance.family
    u = instance.uncertainty
    discrete = isinstance(u, DiscreteScenarioSet)
    ties = approx.TIE_ADVERSARIAL if adversarial_ties else approx.TIE_CANONICAL

    def need_epsilon() -> float:
        if epsilon is None:
            raise ValidationError("--epsilon is required for the fptas algorithm")
        return epsilon

    if problem == "det":
        if algorithm != "exact":
            raise UnsupportedCombinationError(
                f"problem 'det' only supports algorithm 'exact', not {algorithm!r}"
            )
        weights = _deterministic_vector(instance)
        members, value = core.max_weight_is(fam, weights)
        return value, members, None

    if problem == "maxmin":
        if algorithm == "exact":
            if discrete:
                members, value = robust.solve_max_min_exact(fam, u)
            else:
                members, value = robust.solve_max_min_interval(fam, u)
            return value, members, None
        if algorithm == "bruteforce":
            scen = u if discrete else DiscreteScenarioSet((u.lower,))
            members, value = robust.solve_max_min_bruteforce(fam, scen, guard)
            return value, members, None
        if algorithm == "fptas":
            if not discrete:
                raise UnsupportedCombinationError(
                    "maxmin/fptas applies to discrete scenario sets only; "
                    "maxmin under ranges is solved exactly in polynomial time"
                )
            members, value = robust.fptas_max_min(fam, u, need_epsilon())
            return value, members, None
        raise UnsupportedCombinationError(
            f"problem 'maxmin' does not support algorithm {algorithm!r}"
        )

    if problem == "regret":
        if algorithm == "exact":
            report = (
                robust.solve_regret_discrete_exact(fam, u)
                if discrete
                else robust.solve_regret_interval_exact(fam, u, guard)
            )
        elif algorithm == "bruteforce":
            report = (
                robust.solve_regret_discrete_bruteforce(fam, u, guard)
                if discrete
                else robust.solve_regret_interval_exact(fam, u, guard)
            )
        elif algorithm == "fptas":
            if not discrete:
                raise UnsupportedCombinationError(
                    "regret/fptas applies to discrete scenario sets only"
                )
            report = robust.fptas_regret_discrete(fam, u, need_epsilon())
        elif algorithm == "kapprox":
            if not discrete:
                raise UnsupportedCombinationError(
                    "regret/kapprox applies to discrete scenario sets only"
                )
            report = approx.k_approx_regret(fam, u, ties=ties, guard=guard)
        elif algorithm == "midpoint":
            if discrete:
                raise UnsupportedCombinationError(
                    "regret/midpoint applies to interval uncertainty only"
                )
            report = approx.midpoint_approx_regret(fam, u, ties=ties, guard=guard)
        else:
            raise UnsupportedCombinationError(
                f"problem 'regret' does not support algorithm {algorithm!r}"
            )
        return report.regret_value, report.solution, report.witness_scenario

    raise UnsupportedCombinationError(f"unknown problem {problem!r}")


# ---------------------------------------------------------------------------
# Rendering


def _fmt_members(members: tuple[int, ...] | None) -> str:
    if members is None or not members:
        return "-"
    return ",".join(str(i) for i in members)


def _fmt_vector(vec: tuple[int, ...] | None) -> str:
    if vec is None:
        return "-"
    return ",".join(str(x) for x in vec)


def render_record(record: ResultRecord, fmt: str, timings: bool) -> str:
    fields = [
        ("instance", record.instance_id),
        ("problem", record.problem),
        ("algorithm", record.algorithm),
        ("value", str(record.value)),
        ("solution", _fmt_members(record.solution)),
        ("witness", _fmt_vector(record.witness_scenario)),
        ("epsilon", "-" if record.epsilon is None else repr(record.epsilon)),
        ("scaling_factor", str(record.scaling_factor)),
    ]
    if timings:
        fields.append(("wall_ms", f"{record.wall_ms:.3f}"))
    if fmt == "delimited":
        header = "\t".join(name for name, _ in fields)
        row = "\t".join(value for _, value in fields)
        return f"{header}\n{row}\n"
    width = max(len(name) for name, _ in fields)
    return "".join(f"{name.ljust(width)}  {value}\n" for name, value in fields)


def _instance_id(path: Path, instance: Instance) -> str:
    meta_id = instance.metadata.get("id")
    return str(meta_id) if meta_id is not None else path.stem


# ---------------------------------------------------------------------------
# Commands


def cmd_solve(args: argparse.Namespace) -> int:
    path = Path(args.instance)
    instance = parse_instance(path)
    start = time.perf_counter()
    value, members, witness = dispatch_solve(
        instance,
        args.problem,
        args.algorithm,
        epsilon=args.epsilon,
        adversarial_ties=args.adversarial_ties,
        guard=args.guard_n,
    )
    wall_ms = (time.perf_counter() - start) * 1000.0
    record = ResultRecord(
        instance_id=_instance_id(path, instance),
        problem=args.problem,
        algorithm=args.algorithm,
        value=value,
        solution=members,
        witness_scenario=witness,
        epsilon=args.epsilon,
        scaling_factor=instance.scaling_factor,
        wall_ms=wall_ms,
    )
    sys.stdout.write(render_record(record, args.format, args.timings))
    return EXIT_OK


def _parse_solution_arg(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text or text == "-":
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValidationError(f"bad solution list {text!r}; expected e.g. '1,3,5'") from None


def cmd_evaluate(args: argparse.Namespace) -> int:
    path = Path(args.instance)
    instance = parse_instance(path)
    members = _parse_solution_arg(args.solution)
    fam = instance.family
    u = instance.uncertainty
    witness: tuple[int, ...] | None = None
    if args.problem == "det":
        weights = _deterministic_vector(instance)
        if not core.is_independent(fam, members):
            raise ValidationError(f"vertex set {members} is not independent")
        value = robust.weight_under(members, weights)
    elif args.problem == "maxmin":
        if isinstance(u, DiscreteScenarioSet):
            value = robust.max_min_value(fam, u, members)
        else:
            if not core.is_independent(fam, members):
                raise ValidationError(f"vertex set {members} is not independent")
            value = robust.weight_under(members, u.lower)
    else:
        report = (
            robust.max_regret_discrete(fam, u, members)
            if isinstance(u, DiscreteScenarioSet)
            else robust.max_regret_interval(fam, u, members)
        )
        value, witness = report.regret_value, report.witness_scenario
    record = ResultRecord(
        instance_id=_instance_id(path, instance),
        problem=args.problem,
        algorithm="evaluate",
        value=value,
        solution=members,
        witness_scenario=witness,
        epsilon=None,
        scaling_factor=instance.scaling_factor,
        wall_ms=0.0,
    )
    sys.stdout.write(render_record(record, args.format, timings=False))
    return EXIT_OK


def _parse_edges_arg(text: str) -> list[tuple[int, int]]:
    edges = []
    text = text.strip()
    if not text:
        return edges
    for part in text.split(","):
        try:
            u, v = part.split("-")
            edges.append((int(u), int(v)))
        except ValueError:
            raise ValidationError(
                f"bad edge {part!r}; expected 'u-v' pairs like '1-2,2-3'"
            ) from None
    return edges


def cmd_generate(args: argparse.Namespace) -> int:
    if args.kind == "vertex-cover":
        if args.n_vertices is None or args.edges is None or args.cover_size is None:
            raise ValidationError(
                "vertex-cover needs --n-vertices, --edges and --cover-size"
            )
        graph = gen.UndirectedGraph.from_edges(args.n_vertices, _parse_edges_arg(args.edges))
        instance = gen.gen_vertex_cover(graph, args.cover_size)
    elif args.kind == "partition":
        if args.values is None:
            raise ValidationError("partition needs --values")
        try:
            values = tuple(int(v) for v in args.values.split(","))
        except ValueError:
            raise ValidationError(f"bad values list {args.values!r}") from None
        instance = gen.gen_partition(gen.PartitionInput(values))
    elif args.kind == "tight-k":
        if args.k is None:
            raise ValidationError("tight-k needs --k")
        instance = gen.gen_tight_k(args.k)
    elif args.kind == "tight-midpoint":
        instance = gen.gen_tight_midpoint()
    elif args.kind == "random":
        if args.n is None or args.model is None:
            raise ValidationError("random needs --n and --model")
        instance = gen.gen_random(
            n=args.n,
            model=args.model,
            w_max=args.w_max,
            density=args.density,
            seed=args.seed,
            k=args.k if args.model == "discrete" else None,
        )
    else:
        raise ValidationError(f"unknown kind {args.kind!r}")
    write_instance(instance, args.out)
    sys.stdout.write(f"{args.out}\n")
    return EXIT_OK


def _oracle_optimum(instance: Instance, problem: str, guard: int | None) -> int | None:
    """Exact optimum for the ratio column, or None when infeasible."""
    fam = instance.family
    u = instance.uncertainty
    try:
        if problem == "det":
            return core.max_weight_is(fam, _deterministic_vector(instance))[1]
        if problem == "maxmin":
            if isinstance(u, DiscreteScenarioSet):
                return robust.solve_max_min_exact(fam, u)[1]
            return robust.solve_max_min_interval(fam, u)[1]
        if isinstance(u, DiscreteScenarioSet):
            return robust.solve_regret_discrete_exact(fam, u).regret_value
        return robust.solve_regret_interval_exact(fam, u, guard).regret_value
    except (GuardError, UnsupportedCombinationError):
        return None


def _ratio_cell(value: int | None, opt: int | None) -> str:
    if value is None or opt is None:
        return "-"
    if opt == 0:
        return "1.000" if value == 0 else "inf"
    return f"{value / opt:.3f}"


def cmd_bench(args: argparse.Namespace) -> int:
    directory = Path(args.instances)
    if not directory.is_dir():
        raise ValidationError(f"{directory} is not a directory")
    algorithms = [a.strip() for a in args.algorithms.split(",") if a.strip()]
    for a in algorithms:
        if a not in ALGORITHMS:
            raise ValidationError(f"unknown algorithm {a!r}")
    paths = sorted(directory.glob("*.json"))
    entries = []
    for path in paths:
        instance = parse_instance(path)
        entries.append((_instance_id(path, instance), instance))
    entries.sort(key=lambda pair: pair[0])
    header = ["instance", "problem", "algorithm", "value", "opt", "ratio", "wall_ms"]
    rows = []
    for instance_id, instance in entries:
        opt = _oracle_optimum(instance, args.problem, args.guard_n)
        for algorithm in algorithms:
            start = time.perf_counter()
            try:
                value, _, _ = dispatch_solve(
                    instance,
                    args.problem,
                    algorithm,
                    epsilon=args.epsilon,
                    adversarial_ties=args.adversarial_ties,
                    guard=args.guard_n,
                )
            except (UnsupportedCombinationError, GuardError):
                value = None
            wall_ms = (time.perf_counter() - start) * 1000.0
            rows.append(
                [
                    instance_id,
                    args.problem,
                    algorithm,
                    "-" if value is None else str(value),
                    "-" if opt is None else str(opt),
                    _ratio_cell(value, opt),
                    f"{wall_ms:.3f}" if args.timings else "-",
                ]
            )
    table = [header] + rows
    if args.out:
        machine = "".join("\t".join(row) + "\n" for row in table)
        Path(args.out).write_text(machine, encoding="utf-8")
    widths = [max(len(row[c]) for row in table) for c in range(len(header))]
    for row in table:
        line = "  ".join(cell.ljust(widths[c]) for c, cell in enumerate(row)).rstrip()
        sys.stdout.write(line + "\n")
    return EXIT_OK


def _selfcheck_deterministic(rng: random.Random, rounds: int) -> bool:
    ok = True
    for _ in range(rounds):
        instance = gen.gen_random(
            n=rng.randint(1, 10),
            model="discrete",
            k=1,
            w_max=10,
            density=rng.choice([0.0, 0.3, 0.6, 0.9]),
            seed=rng.randrange(1 << 30),
        )
        fam = instance.family
        scen = instance.uncertainty
        _, dp = core.max_weight_is(fam, scen.scenarios[0])
        _, brute = robust.solve_max_min_bruteforce(fam, scen)
        ok = ok and dp == brute
    return ok


def _selfcheck_frontier(rng: random.Random, rounds: int) -> bool:
    ok = True
    for _ in range(rounds):
        instance = gen.gen_random(
            n=rng.randint(1, 9),
            model="discrete",
            k=rng.randint(1, 3),
            w_max=6,
            density=rng.choice([0.2, 0.5, 0.8]),
            seed=rng.randrange(1 << 30),
        )
        fam = instance.family
        scen = instance.uncertainty
        ok = ok and (
            robust.solve_max_min_exact(fam, scen)[1]
            == robust.solve_max_min_bruteforce(fam, scen)[1]
        )
        ok = ok and (
            robust.solve_regret_discrete_exact(fam, scen).regret_value
            == robust.solve_regret_discrete_bruteforce(fam, scen).regret_value
        )
    return ok


def _selfcheck_interval_regret(rng: random.Random, rounds: int) -> bool:
    ok = True
    for _ in range(rounds):
        instance = gen.gen_random(
            n=rng.randint(1, 8),
            model="interval",
            w_max=6,
            density=rng.choice([0.2, 0.5, 0.8]),
            seed=rng.randrange(1 << 30),
        )
        fam = instance.family
        u = instance.uncertainty
        extremes = list(extreme_scenarios(u))
        for members in core.enumerate_independent_sets(fam):
            direct = robust.max_regret_interval(fam, u, members).regret_value
            oracle = max(
                robust.opt_weight(fam, s) - robust.weight_under(members, s)
                for s in extremes
            )
            ok = ok and direct == oracle
    return ok


def _selfcheck_guarantees(rng: random.Random, rounds: int) -> bool:
    ok = True
    for k in (2, 3):
        ratio = approx.adversarial_ratio(
            gen.gen_tight_k(k).family, gen.gen_tight_k(k).uncertainty
        )
        ok = ok and ratio == k
    tight = gen.gen_tight_midpoint()
    ok = ok and approx.adversarial_ratio(tight.family, tight.uncertainty) == 2
    for _ in range(rounds):
        instance = gen.gen_random(
            n=rng.randint(1, 10),
            model="discrete",
            k=rng.randint(1, 3),
            w_max=8,
            density=rng.choice([0.2, 0.5, 0.8]),
            seed=rng.randrange(1 << 30),
        )
        fam = instance.family
        scen = instance.uncertainty
        got = approx.k_approx_regret(fam, scen).regret_value
        opt = robust.solve_regret_discrete_exact(fam, scen).regret_value
        ok = ok and got <= scen.k * opt
    return ok


def cmd_selfcheck(args: argparse.Namespace) -> int:
    rng = random.Random(20240 if args.seed is None else args.seed)
    checks = [
        ("deterministic core vs enumeration", _selfcheck_deterministic(rng, 40)),
        ("frontier DP vs enumeration", _selfcheck_frontier(rng, 25)),
        ("interval regret vs extreme scenarios", _selfcheck_interval_regret(rng, 15)),
        ("approximation guarantees and tight ratios", _selfcheck_guarantees(rng, 25)),
    ]
    failed = False
    for name, passed in checks:
        sys.stdout.write(f"selfcheck: {name}: {'ok' if passed else 'FAILED'}\n")
        failed = failed or not passed
    return 1 if failed else EXIT_OK


# ---------------------------------------------------------------------------
# Argument parsing


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=("table", "delimited"), default="table",
        help="output layout (default: table)",
    )
    parser.add_argument(
        "--guard-n", type=int, default=None,
        help="enumeration guard override (also via RWIS_GUARD_N)",
    )
    parser.add_argument(
        "--timings", action="store_true",
        help="include wall-clock columns (breaks byte-for-byte reproducibility)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rwis",
        description="Robust maximum-weight independent set solvers on interval graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve one instance file")
    p_solve.add_argument("instance", help="path to an instance file")
    p_solve.add_argument("--problem", choices=PROBLEMS, required=True)
    p_solve.add_argument("--algorithm", choices=ALGORITHMS, required=True)
    p_solve.add_argument("--epsilon", type=float, default=None,
                         help="accuracy parameter for fptas")
    p_solve.add_argument("--adversarial-ties", action="store_true",
                         help="explore surrogate ties and report the worst one")
    _add_common_flags(p_solve)
    p_solve.set_defaults(func=cmd_solve)

    p_eval = sub.add_parser("evaluate", help="evaluate a given solution on an instance")
    p_eval.add_argument("instance")
    p_eval.add_argument("--problem", choices=PROBLEMS, required=True)
    p_eval.add_argument("--solution", required=True,
                        help="comma-separated 1-based vertex indices; '-' for the empty set")
    _add_common_flags(p_eval)
    p_eval.set_defaults(func=cmd_evaluate)

    p_gen = sub.add_parser("generate", help="write an instance file")
    p_gen.add_argument("--kind", required=True,
                       choices=("vertex-cover", "partition", "tight-k", "tight-midpoint", "random"))
    p_gen.add_argument("--out", required=True)
    p_gen.add_argument("--n-vertices", type=int, default=None, help="vertex-cover: graph size")
    p_gen.add_argument("--edges", default=None, help="vertex-cover: e.g. '1-2,2-3,1-3'")
    p_gen.add_argument("--cover-size", type=int, default=None, help="vertex-cover: budget")
    p_gen.add_argument("--values", default=None, help="partition: e.g. '2,2,1,3'")
    p_gen.add_argument("--k", type=int, default=None, help="tight-k ratio / random scenario count")
    p_gen.add_argument("--n", type=int, default=None, help="random: vertex count")
    p_gen.add_argument("--model", choices=("discrete", "interval"), default=None)
    p_gen.add_argument("--w-max", type=int, default=10)
    p_gen.add_argument("--density", type=float, default=0.5)
    p_gen.add_argument("--seed", type=int, default=0)
    _add_common_flags(p_gen)
    p_gen.set_defaults(func=cmd_generate)

    p_bench = sub.add_parser("bench", help="run algorithms over a directory of instances")
    p_bench.add_argument("instances", help="directory of *.json instance files")
    p_bench.add_argument("--problem", choices=PROBLEMS, required=True)
    p_bench.add_argument("--algorithms", required=True,
                         help="comma-separated algorithm names")
    p_bench.add_argument("--epsilon", type=float, default=None)
    p_bench.add_argument("--adversarial-ties", action="store_true")
    p_bench.add_argument("--out", default=None, help="also write a tab-delimited file")
    _add_common_flags(p_bench)
    p_bench.set_defaults(func=cmd_bench)

    p_check = sub.add_parser("selfcheck", help="run the built-in oracle-equivalence suite")
    p_check.add_argument("--seed", type=int, default=None)
    _add_common_flags(p_check)
    p_check.set_defaults(func=cmd_selfcheck)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UnsupportedCombinationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except GuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ValidationError, RwisError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
