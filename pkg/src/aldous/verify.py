"""Named verification suites behind `aldous verify` and the acceptance tests.

Each suite replays one block of claims: exact formulas against the numeric
eigensolver, character identities, the decomposition oracle, the bound
lemmas, duality, or the order engine's internal consistency. Suites return
a SuiteResult whose checks list one dict per claim instance; the CLI turns
a failed suite into exit code 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import factorial

import numpy as np

from .characters import (
    character_from_rep,
    class_size,
    mn_hook_character,
    verify_hook_wedge_iso,
    wedge_character,
)
from .game import game_winner
from .graphs import quasi_complete_graph, random_graph, star_graph
from .order import (
    check_invariant_vector_bound,
    check_matching_bound,
    check_onestar_bound,
    check_pair,
    check_weightedstar_bound,
    hook,
    recheck_witness,
    scan,
    SCAN_FAMILIES,
)
from .partitions import (
    Partition,
    conjugate,
    content_sum,
    lex_compare,
    num_standard_tableaux,
    partitions_of,
)
from .spectral import (
    hook_spectrum,
    laplacian_gap,
    multiset_distance,
    quasi_complete_spectrum,
    remark_weights,
    spectrum,
    star_spectrum,
)
from .symrep import delta_matrix, regular_delta


@dataclass
class SuiteResult:
    suite: str
    passed: bool = True
    checks: list = field(default_factory=list)

    def add(self, name: str, ok: bool, **detail) -> None:
        self.checks.append({"name": name, "ok": bool(ok), **detail})
        self.passed = self.passed and bool(ok)

    def failures(self) -> list:
        return [c for c in self.checks if not c["ok"]]


def suite_lemma9(n: int, tol: float = 1e-8) -> SuiteResult:
    """Star spectra from the tableau formula against the eigensolver."""
    result = SuiteResult("lemma9")
    for size in range(4, n + 1):
        for shape in partitions_of(size):
            for k in range(2, size + 1):
                exact = star_spectrum(shape, k).as_spectrum()
                numeric = spectrum(delta_matrix(shape, star_graph(size, k)))
                dist = multiset_distance(exact.values, numeric.values)
                result.add(f"lemma9 n={size} shape={shape} k={k}", dist < tol,
                           distance=dist)
    return result


def suite_qc(n: int, samples: int = 50, seed: int = 0, tol: float = 1e-8) -> SuiteResult:
    """Nested-star formula against the eigensolver, and the exact
    lexicographic separation by fast-decaying weights."""
    result = SuiteResult("qc")
    rng = np.random.default_rng(seed)
    for size in range(3, min(n, 6) + 1):
        for _ in range(samples):
            a = rng.random(size - 1)
            worst = 0.0
            for shape in partitions_of(size):
                formula = quasi_complete_spectrum(shape, list(a))
                numeric = spectrum(delta_matrix(shape, quasi_complete_graph(size, a)))
                worst = max(worst, multiset_distance(formula.values, numeric.values))
            result.add(f"qc formula n={size}", worst < tol, distance=worst)
    for size in range(2, min(n, 7) + 1):
        weights = remark_weights(size)
        lam1 = {
            p: quasi_complete_spectrum(p, weights, exact=True).lambda1
            for p in partitions_of(size)
        }
        bad = [
            (str(alpha), str(beta))
            for alpha in partitions_of(size)
            for beta in partitions_of(size)
            if alpha != beta and lex_compare(alpha, beta) < 0
            and not lam1[alpha] > lam1[beta]
        ]
        result.add(f"qc lex separation n={size}", not bad, failing_pairs=bad)
    return result


def suite_hooks(n: int, graphs: int = 20, seed: int = 0, tol: float = 1e-6) -> SuiteResult:
    """Subset-sum hook spectra against the eigensolver."""
    result = SuiteResult("hooks")
    for size in range(3, n + 1):
        for g in range(graphs):
            graph = random_graph(size, seed + 1000 * size + g)
            worst = 0.0
            for k in range(size):
                expected = hook_spectrum(graph, k)
                numeric = spectrum(delta_matrix(hook(size, k), graph))
                worst = max(worst, multiset_distance(expected.values, numeric.values))
            result.add(f"hooks n={size} graph={g}", worst < tol, distance=worst)
    return result


def suite_characters(n: int) -> SuiteResult:
    """Hook/wedge character identities and the matrix-trace oracle."""
    result = SuiteResult("characters")
    for size in range(2, n + 1):
        iso = verify_hook_wedge_iso(size)
        result.add(f"hook wedge iso n={size}", iso["ok"],
                   failing=[str(key) for key, ok in iso["results"].items() if not ok])
        recursion_ok = True
        for k in range(1, size):
            lhs = mn_hook_character(size, k) + mn_hook_character(size, k - 1)
            if lhs != wedge_character(size, k):
                recursion_ok = False
        result.add(f"wedge recursion n={size}", recursion_ok)
    for size in range(2, min(n, 8) + 1):
        trace_ok = all(
            character_from_rep(hook(size, k)) == mn_hook_character(size, k)
            for k in range(size)
        )
        result.add(f"hook trace oracle n={size}", trace_ok)
    for size in range(2, min(n, 7) + 1):
        chars = [character_from_rep(p) for p in partitions_of(size)]
        ortho_ok = all(
            chars[i].inner(chars[j]) == (1 if i == j else 0)
            for i in range(len(chars))
            for j in range(i, len(chars))
        )
        sizes_ok = sum(class_size(c) for c in partitions_of(size)) == factorial(size)
        result.add(f"orthonormality n={size}", ortho_ok)
        result.add(f"class sizes n={size}", sizes_ok)
    return result


def suite_oracle(n: int, graphs: int = 10, seed: int = 0, tol: float = 1e-7) -> SuiteResult:
    """Regular-representation spectrum against the per-irreducible union."""
    result = SuiteResult("oracle")
    for size in range(3, min(n, 5) + 1):
        for g in range(graphs):
            graph = random_graph(size, seed + 100 * size + g)
            full = spectrum(regular_delta(graph))
            expected: list[float] = []
            for shape in partitions_of(size):
                dim = num_standard_tableaux(shape)
                values = spectrum(delta_matrix(shape, graph)).values
                expected.extend(list(values) * dim)
            dist = multiset_distance(full.values, expected)
            result.add(f"oracle n={size} graph={g}", dist < tol, distance=dist)
    return result


def _random_row_class_shape(rng, size: int, k: int) -> Partition:
    choices = [p for p in partitions_of(size) if p.parts[0] >= size - k]
    return choices[int(rng.integers(0, len(choices)))]


def suite_bounds(n: int, trials: int = 1000, seed: int = 0,
                 tol: float = 1e-9) -> SuiteResult:
    """Randomized instances of the four bound lemmas."""
    result = SuiteResult("bounds")
    rng = np.random.default_rng(seed)
    analytic_max = min(n, 12)
    numeric_max = min(n, 8)

    failures = 0
    worst = 0.0
    for _ in range(trials):
        size = int(rng.integers(5, analytic_max + 1))
        k = int(rng.integers(1, min(4, size - 1) + 1))
        sigma = _random_row_class_shape(rng, size, k)
        l = int(rng.integers(1, size))
        report = check_onestar_bound(sigma, k, l)
        failures += 0 if report.ok else 1
        worst = max(worst, report.worst - report.bound)
    result.add("onestar bound", failures == 0, violations=failures, worst_excess=worst)

    failures = 0
    for _ in range(trials):
        k = int(rng.integers(1, max(1, numeric_max // 4) + 1))
        size = int(rng.integers(4 * k, numeric_max + 1))
        sigma = _random_row_class_shape(rng, size, k)
        report = check_matching_bound(sigma, k, trials=1, tol=tol,
                                      seed=int(rng.integers(0, 2**31)))
        failures += 0 if report.ok else 1
    result.add("matching bound", failures == 0, violations=failures)

    failures = 0
    for _ in range(trials):
        size = int(rng.integers(4, numeric_max + 1))
        k = int(rng.integers(1, (3 if size <= 6 else 2) + 1))
        sigma = _random_row_class_shape(rng, size, k)
        a = sorted((float(x) for x in rng.random(size - 1)), reverse=True)
        report = check_weightedstar_bound(sigma, k, a, tol=tol)
        failures += 0 if report.ok else 1
    result.add("weightedstar bound", failures == 0, violations=failures)

    failures = 0
    for _ in range(trials):
        size = int(rng.integers(4, numeric_max + 1))
        k = int(rng.integers(1, 3))
        sigma = _random_row_class_shape(rng, size, k)
        graph = random_graph(size, int(rng.integers(0, 2**31)))
        vertices = [int(v) + 1 for v in rng.choice(size, size=k, replace=False)]
        report = check_invariant_vector_bound(sigma, k, graph, vertices, tol=tol)
        failures += 0 if report.ok else 1
    result.add("invariant vector bound", failures == 0, violations=failures)
    return result


def suite_dual(n: int, graphs: int = 50, seed: int = 0, tol: float = 1e-8,
               triv_tol: float = 1e-9) -> SuiteResult:
    """Duality with the conjugate shape and the 2wt ceiling."""
    result = SuiteResult("dual")
    for size in range(2, n + 1):
        worst_dual = 0.0
        worst_triv = -float("inf")
        for g in range(graphs):
            graph = random_graph(size, seed + 997 * size + g)
            spectra = {
                shape: spectrum(delta_matrix(shape, graph))
                for shape in partitions_of(size)
            }
            for shape in partitions_of(size):
                lam_max = spectra[shape].lambda_max
                lam1_conj = spectra[conjugate(shape)].lambda1
                worst_dual = max(worst_dual,
                                 abs(lam_max - (2 * graph.wt - lam1_conj)))
                worst_triv = max(worst_triv, lam_max - 2 * graph.wt)
        result.add(f"duality n={size}", worst_dual < tol, distance=worst_dual)
        result.add(f"trivial bound n={size}", worst_triv <= triv_tol,
                   excess=worst_triv)
    return result


def suite_consistency(n: int, budget: int = 200, seed: int = 0,
                      graphs: int = 100, tol: float = 1e-9) -> SuiteResult:
    """Order-engine self checks: scan audit, witness soundness, the
    incomparable two-column chain, the even-split remark and the spot
    check that the standard representation attains the gap."""
    result = SuiteResult("consistency")

    ledger, report = scan(n, SCAN_FAMILIES, budget=budget, seed=seed, tol=tol)
    result.add(f"scan audit n={n}", report.consistent,
               contradictions=report.contradictions,
               graphs=report.graphs_tried,
               unknown=len(ledger.unknown_pairs()))
    bad = []
    for pair in ledger.refuted_pairs():
        entry = ledger.entry(*pair)
        try:
            recheck_witness(entry, tol=tol)
        except Exception as exc:  # noqa: BLE001 - failure detail wanted
            bad.append({"pair": (str(pair[0]), str(pair[1])), "error": str(exc)})
    result.add(f"witness soundness n={n}", not bad, failures=bad)

    chain = [Partition([2] * i + [1] * (n - 2 * i)) for i in range(1, n // 2 + 1)]
    star = star_graph(n, n)
    chain_ok = True
    for i, j in combinations(range(len(chain)), 2):
        high, low = chain[j], chain[i]  # more 2-rows vs fewer
        if check_pair(high, low, star) is None:
            chain_ok = False
        if content_sum(high) <= content_sum(low):
            chain_ok = False
    result.add(f"incomparable chain n={n}", chain_ok, length=len(chain))

    if n % 2 == 0 and n >= 4:
        m = n // 2
        rng = np.random.default_rng(seed)
        worst = -float("inf")
        for _ in range(25):
            a = [float(x) for x in rng.random(n - 1)]
            wide = quasi_complete_spectrum(Partition([m + 1, m - 1]), a).lambda1
            even = quasi_complete_spectrum(Partition([m, m]), a).lambda1
            worst = max(worst, wide - even)
        result.add(f"even split remark n={n}", worst <= tol, excess=worst)

    rng = np.random.default_rng(seed + 1)
    worst_gap = 0.0
    argmin_ok = True
    for g in range(graphs):
        size = int(rng.integers(3, min(n, 7) + 1))
        graph = random_graph(size, int(rng.integers(0, 2**31)))
        lam_std = spectrum(delta_matrix(Partition([size - 1, 1]), graph)).lambda1
        for shape in partitions_of(size):
            if shape == Partition([size]):
                continue
            lam = spectrum(delta_matrix(shape, graph)).lambda1
            if lam < lam_std - tol:
                argmin_ok = False
        worst_gap = max(worst_gap, abs(lam_std - laplacian_gap(graph)))
    result.add("gap attained at standard rep", argmin_ok and worst_gap < tol,
               worst_gap=worst_gap)
    return result


def game_consistency_run(n: int, samples: int = 1000, seed: int = 0) -> SuiteResult:
    """Game outcomes against exact nested-star comparisons for all ordered
    pairs of each size up to n, sharing the sampled spectra across pairs."""
    from .game import _sample_weight_vectors

    result = SuiteResult("game")
    for size in range(2, n + 1):
        parts = partitions_of(size)
        vectors = _sample_weight_vectors(size, samples, seed + size)
        lam1 = {
            p: [quasi_complete_spectrum(p, a, exact=True).lambda1 for a in vectors]
            for p in parts
        }
        bad = []
        for sigma in parts:
            for tau in parts:
                if not game_winner(sigma, tau):
                    continue
                for idx in range(len(vectors)):
                    if lam1[sigma][idx] > lam1[tau][idx]:
                        bad.append({"sigma": str(sigma), "tau": str(tau),
                                    "sample": idx})
                        break
        result.add(f"game consistency n={size}", not bad,
                   samples=len(vectors), inconsistencies=bad)
    return result


SUITES = {
    "lemma9": suite_lemma9,
    "qc": suite_qc,
    "hooks": suite_hooks,
    "characters": suite_characters,
    "oracle": suite_oracle,
    "bounds": suite_bounds,
    "dual": suite_dual,
    "consistency": suite_consistency,
}


def run_suite(name: str, n: int, **params) -> SuiteResult:
    import inspect

    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    fn = SUITES[name]
    accepted = set(inspect.signature(fn).parameters)
    return fn(n, **{k: v for k, v in params.items() if k in accepted})
