"""End-to-end acceptance suite.

Each test checks one contract at its stated tolerance (exact equality unless
noted) and prints a [PASS] line; run with `pytest -s tests/test_acceptance.py`
to see them.  One check, test_cover_gadget_value_range_clause, encodes a
requirement that is mathematically unattainable and fails by design; its
docstring carries the counterexample.
"""

import random
import time
from fractions import Fraction

import pytest

import golden_defs
import oracles
from rwis import (
    UndirectedGraph,
    adversarial_ratio,
    dumps_instance,
    fptas_max_min,
    fptas_regret_discrete,
    gen_partition,
    gen_random,
    gen_tight_k,
    gen_tight_midpoint,
    gen_vertex_cover,
    has_partition,
    has_vertex_cover_within,
    is_independent,
    k_approx_regret,
    max_regret_interval,
    max_weight_is,
    midpoint_approx_regret,
    opt_weight,
    parse_instance,
    solve_max_min_bruteforce,
    solve_max_min_exact,
    solve_regret_discrete_exact,
    solve_regret_interval_exact,
    weight_under,
    PartitionInput,
)
from rwis.cli import main


def _random_discrete(rng, max_n, max_k, w_max):
    return gen_random(
        n=rng.randint(1, max_n),
        model="discrete",
        k=rng.randint(1, max_k),
        w_max=w_max,
        density=rng.choice([0.0, 0.25, 0.5, 0.75, 1.0]),
        seed=rng.randrange(1 << 30),
    )


def _random_interval(rng, max_n, w_max):
    return gen_random(
        n=rng.randint(1, max_n),
        model="interval",
        w_max=w_max,
        density=rng.choice([0.0, 0.25, 0.5, 0.75, 1.0]),
        seed=rng.randrange(1 << 30),
    )


# --------------------------------------------------------------------------
# 1. deterministic core vs exhaustive enumeration


def test_deterministic_core_oracle_equivalence():
    rng = random.Random(101)
    start = time.perf_counter()
    for _ in range(500):
        inst = _random_discrete(rng, max_n=12, max_k=1, w_max=10)
        fam = inst.family
        weights = inst.uncertainty.scenarios[0]
        members, value = max_weight_is(fam, weights)
        assert value == oracles.brute_opt(fam, weights)
        assert is_independent(fam, members)
        assert sum(weights[i - 1] for i in members) == value
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0
    print(
        f"\n[PASS] deterministic solver == exhaustive optimum on 500 instances "
        f"(exact, {elapsed:.1f}s)"
    )


# --------------------------------------------------------------------------
# 2. single worst-case scenario == max over all extreme scenarios


def test_extreme_scenario_characterization():
    np = pytest.importorskip("numpy")
    rng = random.Random(202)
    checked = 0
    for _ in range(200):
        inst = _random_interval(rng, max_n=10, w_max=10)
        fam, u = inst.family, inst.uncertainty
        extremes = [()]
        for lo, up in zip(u.lower, u.upper):
            opts = sorted({lo, up})
            extremes = [e + (v,) for e in extremes for v in opts]
        ext = np.array(extremes, dtype=np.int64)
        fstar = np.array([opt_weight(fam, s) for s in extremes], dtype=np.int64)
        for mask in oracles.independent_masks(fam):
            members = oracles.mask_to_members(mask)
            direct = max_regret_interval(fam, u, members).regret_value
            if members:
                cols = [i - 1 for i in members]
                best = int((fstar - ext[:, cols].sum(axis=1)).max())
            else:
                best = int(fstar.max())
            assert direct == best
            checked += 1
    print(
        f"\n[PASS] worst-case-scenario regret == max over extreme scenarios "
        f"for every independent set ({checked} sets, exact)"
    )


# --------------------------------------------------------------------------
# 3. cover gadget: an independent set of worst-case weight >= 1 exists iff a
#    small-enough cover exists


@pytest.fixture(scope="module")
def cover_sweep():
    nx = pytest.importorskip("networkx")
    graphs = []
    for g in nx.graph_atlas_g():
        if 1 <= g.number_of_nodes() <= 6 and g.number_of_edges() >= 1:
            graphs.append(
                UndirectedGraph.from_edges(
                    g.number_of_nodes(), [(u + 1, v + 1) for u, v in g.edges()]
                )
            )
    start = time.perf_counter()
    results = []
    for graph in graphs:
        for budget in (1, 2, 3, 4):
            inst = gen_vertex_cover(graph, budget)
            opt1 = solve_max_min_bruteforce(
                inst.family, inst.uncertainty, guard=len(inst.family)
            )[1]
            results.append(
                (graph, budget, has_vertex_cover_within(graph, budget), opt1)
            )
    return results, time.perf_counter() - start


def test_cover_gadget_iff_property(cover_sweep):
    results, elapsed = cover_sweep
    for graph, budget, cover_exists, opt1 in results:
        assert (opt1 >= 1) == cover_exists, (graph, budget)
    assert elapsed < 60.0
    print(
        f"\n[PASS] cover gadget: optimum >= 1 iff a cover of the budget size "
        f"exists, all {len(results)} gadgets (every graph on <= 6 vertices, "
        f"budgets 1..4, sweep {elapsed:.1f}s)"
    )


def test_cover_gadget_value_range_clause(cover_sweep):
    """Gadget optima are claimed to stay in {0, 1}; that claim is false.

    When the budget is at least twice the minimum cover size, an independent
    set can pick every cover row twice and give each scenario weight >= 2:
    the single-edge graph with budget 2 already reaches optimum 2 (choose row
    1 in both cliques).  The iff property above is unaffected.  This check
    states the {0, 1} claim literally and is expected to fail; see
    /root/notes/decisions.md for the analysis.
    """
    results, _ = cover_sweep
    violations = [
        (graph.n_vertices, sorted(graph.edges), budget, opt1)
        for graph, budget, _, opt1 in results
        if opt1 not in (0, 1)
    ]
    if violations:
        print(
            f"\n[FAIL] cover gadget value range: {len(violations)} gadgets have "
            f"optimum outside {{0,1}}, e.g. {violations[0]} (known impossibility)"
        )
    assert violations == [], (
        f"{len(violations)} gadgets have max-min optimum outside {{0,1}}; "
        f"smallest: graph={violations[0][1]}, budget={violations[0][2]}, "
        f"optimum={violations[0][3]}"
    )


# --------------------------------------------------------------------------
# 4. partition gadget iff property, with exact threshold equality on yes-instances


def test_partition_gadget_iff_property():
    rng = random.Random(404)
    yes = no = 0
    for _ in range(100):
        n = rng.randint(1, 10)
        values = [rng.randint(1, 12) for _ in range(n)]
        if rng.random() < 0.5 and n >= 2 and sum(values) % 2:
            values[-1] = min(12, values[-1] + 1)  # bias toward even totals
        values = tuple(values)
        inst = gen_partition(PartitionInput(values))
        total = sum(values)
        opt2 = solve_regret_interval_exact(
            inst.family, inst.uncertainty, guard=len(inst.family)
        ).regret_value
        expected = has_partition(values)
        # scaled threshold is 3*total/2; compare in integers
        assert (2 * opt2 <= 3 * total) == expected, values
        if expected:
            assert 2 * opt2 == 3 * total, values
            yes += 1
        else:
            no += 1
    assert yes >= 10 and no >= 10
    print(
        f"\n[PASS] partition gadget: regret optimum <= 3b/2 iff a partition "
        f"exists, equality on yes-instances (100 multisets: {yes} yes, {no} no)"
    )


# --------------------------------------------------------------------------
# 5. average-weight approximation: guarantee and tight ratio


def test_average_weight_guarantee_and_tightness():
    rng = random.Random(505)
    for _ in range(300):
        inst = _random_discrete(rng, max_n=14, max_k=4, w_max=8)
        fam, scen = inst.family, inst.uncertainty
        got = k_approx_regret(fam, scen).regret_value
        opt = solve_regret_discrete_exact(fam, scen).regret_value
        assert got <= scen.k * opt, inst.metadata
    for k in (2, 3):
        inst = gen_tight_k(k)
        assert adversarial_ratio(inst.family, inst.uncertainty) == Fraction(k)
    print(
        "\n[PASS] average-weight algorithm within factor K on 300 instances; "
        "tight families reach ratio exactly 2 and 3"
    )


# --------------------------------------------------------------------------
# 6. midpoint approximation: guarantee and tight ratio


def test_midpoint_guarantee_and_tightness():
    rng = random.Random(606)
    for _ in range(300):
        inst = _random_interval(rng, max_n=12, w_max=8)
        fam, u = inst.family, inst.uncertainty
        got = midpoint_approx_regret(fam, u).regret_value
        opt = solve_regret_interval_exact(fam, u).regret_value
        assert got <= 2 * opt, inst.metadata
    tight = gen_tight_midpoint()
    fam, u = tight.family, tight.uncertainty
    assert adversarial_ratio(fam, u) == Fraction(2)
    assert midpoint_approx_regret(fam, u, ties="adversarial").regret_value == 2
    assert solve_regret_interval_exact(fam, u).regret_value == 1
    print(
        "\n[PASS] midpoint algorithm within factor 2 on 300 instances; tight "
        "3-clique reaches ratio exactly 2 (worst tie regret 2, optimum 1)"
    )


# --------------------------------------------------------------------------
# 7. frontier DP == exhaustive enumeration on both robust objectives


def test_frontier_dp_matches_bruteforce():
    rng = random.Random(101)  # same stream shape as the deterministic check, K <= 3
    for _ in range(500):
        inst = _random_discrete(rng, max_n=12, max_k=3, w_max=10)
        fam, scen = inst.family, inst.uncertainty
        members, value = solve_max_min_exact(fam, scen)
        assert value == oracles.brute_max_min(fam, scen.scenarios)
        assert min(weight_under(members, s) for s in scen.scenarios) == value
        report = solve_regret_discrete_exact(fam, scen)
        assert report.regret_value == oracles.brute_regret_discrete(
            fam, scen.scenarios
        )
    print(
        "\n[PASS] frontier DP equals exhaustive enumeration for max-min and "
        "min-max regret on 500 instances (exact)"
    )


# --------------------------------------------------------------------------
# 8. scaling schemes meet their (1 +/- eps) contracts


def test_scaling_schemes_meet_bounds():
    rng = random.Random(808)
    instances = [
        gen_random(
            n=rng.randint(1, 12),
            model="discrete",
            k=2,
            w_max=10,
            density=rng.choice([0.0, 0.25, 0.5, 0.75, 1.0]),
            seed=rng.randrange(1 << 30),
        )
        for _ in range(100)
    ]
    runtimes = {}
    for eps in (1.0, 0.5, 0.1):
        e = Fraction(eps)
        start = time.perf_counter()
        for inst in instances:
            fam, scen = inst.family, inst.uncertainty
            opt1 = solve_max_min_exact(fam, scen)[1]
            got1 = fptas_max_min(fam, scen, eps)[1]
            assert Fraction(got1) * (1 + e) >= opt1, (inst.metadata, eps)
            opt2 = solve_regret_discrete_exact(fam, scen).regret_value
            got2 = fptas_regret_discrete(fam, scen, eps).regret_value
            assert Fraction(got2) <= (1 + e) * opt2, (inst.metadata, eps)
        runtimes[eps] = time.perf_counter() - start
    timing = ", ".join(f"eps={eps}: {t:.2f}s" for eps, t in runtimes.items())
    print(
        f"\n[PASS] scaling schemes: value >= opt/(1+eps) and regret <= "
        f"(1+eps)*opt for eps in {{1.0, 0.5, 0.1}} on 100 instances ({timing})"
    )


# --------------------------------------------------------------------------
# 9. no-instances of the cover gadget have optimum exactly 0


def test_cover_gadget_no_instances_have_zero_optimum(cover_sweep):
    results, _ = cover_sweep
    no_instances = [row for row in results if not row[2]]
    assert no_instances, "sweep must contain no-instances"
    for graph, budget, _, opt1 in no_instances:
        assert opt1 == 0, (graph, budget)
    print(
        f"\n[PASS] every cover-gadget no-instance has max-min optimum exactly 0 "
        f"({len(no_instances)} gadgets), so any multiplicative guarantee is vacuous"
    )


# --------------------------------------------------------------------------
# 10. round-trip identity and byte determinism


def test_roundtrip_and_determinism(capsys, tmp_path):
    for path in sorted(golden_defs.GOLDEN_DIR.glob("*.json")):
        instance = parse_instance(path)
        assert dumps_instance(instance) == path.read_text(encoding="utf-8")

    def run(*argv):
        code = main(list(argv))
        out = capsys.readouterr().out
        assert code == 0
        return out

    golden = golden_defs.GOLDEN_DIR
    solve_args = (
        "solve", str(golden / "vc_5v6e_L3.json"),
        "--problem", "regret", "--algorithm", "fptas", "--epsilon", "0.1",
    )
    assert run(*solve_args) == run(*solve_args)
    gen_a = tmp_path / "a.json"
    gen_b = tmp_path / "b.json"
    base = (
        "generate", "--kind", "random", "--n", "10", "--model", "interval",
        "--w-max", "6", "--density", "0.5", "--seed", "99",
    )
    run(*base, "--out", str(gen_a))
    run(*base, "--out", str(gen_b))
    assert gen_a.read_bytes() == gen_b.read_bytes()
    bench_dir = tmp_path / "suite"
    bench_dir.mkdir()
    (bench_dir / "t2.json").write_text((golden / "tight_k2.json").read_text())
    bench_args = ("bench", str(bench_dir), "--problem", "regret", "--algorithms", "exact,kapprox")
    assert run(*bench_args) == run(*bench_args)
    print(
        "\n[PASS] golden files round-trip byte-identically; solve, generate and "
        "bench produce identical bytes across repeated runs"
    )
