"""Randomized cross-check harness.

Generates reproducible strongly stable ideals and runs every
inter-formula identity the library promises, reporting pass/fail/skip
counts per property plus the first counterexample of each failing one.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from . import core, decompose, duality, homology, polarize


@dataclass(frozen=True)
class CorpusSpec:
    seed: int = 0
    trials: int = 100
    n_range: tuple[int, int] = (1, 3)
    d_range: tuple[int, int] = (1, 3)
    gens_range: tuple[int, int] = (1, 4)

    def __post_init__(self):
        for lo, hi in (self.n_range, self.d_range, self.gens_range):
            if lo < 1 or hi < lo:
                raise ValueError("empty range")


def random_borel(spec: CorpusSpec):
    """Deterministic stream of strongly stable ideals: Borel closures of a
    few uniformly sampled monomials of degree <= d."""
    rng = random.Random(spec.seed)
    for _ in range(spec.trials):
        n = rng.randint(*spec.n_range)
        d = rng.randint(*spec.d_range)
        seeds = []
        for _ in range(rng.randint(*spec.gens_range)):
            deg = rng.randint(1, d)
            word = sorted(rng.randint(1, n) for _ in range(deg))
            seeds.append(core.monomial_from_word(word, n))
        yield core.borel_closure(seeds, n)


@dataclass
class PropertyResult:
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    first_counterexample: str | None = None


@dataclass
class VerifyReport:
    spec: CorpusSpec
    results: dict[str, PropertyResult] = field(default_factory=dict)

    @property
    def total_failures(self) -> int:
        return sum(r.failed for r in self.results.values())

    def record(self, prop: str, ok: bool, ideal) -> None:
        r = self.results.setdefault(prop, PropertyResult())
        if ok:
            r.passed += 1
        else:
            r.failed += 1
            if r.first_counterexample is None:
                r.first_counterexample = str(ideal)

    def skip(self, prop: str) -> None:
        self.results.setdefault(prop, PropertyResult()).skipped += 1

    def to_json(self) -> str:
        payload = {
            "seed": self.spec.seed,
            "trials": self.spec.trials,
            "n_range": list(self.spec.n_range),
            "d_range": list(self.spec.d_range),
            "gens_range": list(self.spec.gens_range),
            "failures": self.total_failures,
            "properties": {
                name: {
                    "passed": r.passed,
                    "failed": r.failed,
                    "skipped": r.skipped,
                    "first_counterexample": r.first_counterexample,
                }
                for name, r in sorted(self.results.items())
            },
        }
        return json.dumps(payload, indent=2, sort_keys=True)


PROPERTY_NAMES = [
    "decompose_borel_vs_oracle",
    "bpol_decomposition_vs_oracle",
    "grid_dual_identity",
    "star_dual_involution",
    "sigma_dual_compatibility",
    "sigma_decomposition_vs_oracle",
    "ek_vs_homology_oracle",
    "betti_preserved_by_bpol",
    "lc_three_way_agreement",
    "euler_consistency",
    "cm_via_dual_vs_direct",
    "deg_crosscheck",
    "colon_decomposition_identity",
    "grid_staircase_condition",
    "right_shift_equivalence",
    "adeg_top_shortcut",
]


def run_suite(spec: CorpusSpec) -> VerifyReport:
    report = VerifyReport(spec)
    for name in PROPERTY_NAMES:
        report.results[name] = PropertyResult()
    for I in random_borel(spec):
        _check_ideal(I, report)
    return report


def check_corpus(ideals) -> VerifyReport:
    """Run the same property battery over a fixed list of ideals."""
    ideals = list(ideals)
    report = VerifyReport(CorpusSpec(trials=len(ideals)))
    for I in ideals:
        _check_ideal(I, report)
    return report


def _check_ideal(I: core.MonomialIdeal, report: VerifyReport) -> None:
    n = I.n
    d = max(I.max_degree, 1)
    E = decompose.decompose_strongly_stable(I)

    oracle = decompose.decompose_oracle(I)
    as_general = sorted(
        (decompose.general_from_initial(a) for a in E), key=lambda c: sorted(c.items())
    )
    report.record("decompose_borel_vs_oracle", oracle == as_general, I)

    grid = polarize.bpol_ideal(I, d)
    psi_comps = decompose.bpol_decomposition(E)
    try:
        grid_comps = decompose.grid_components_oracle(grid)
        report.record("grid_staircase_condition", True, I)
        report.record("bpol_decomposition_vs_oracle", grid_comps == psi_comps, I)
    except decompose.GridConditionError:
        report.record("grid_staircase_condition", False, I)
        report.skip("bpol_decomposition_vs_oracle")
        grid_comps = psi_comps

    star = duality.star_dual(I, d)
    lhs = polarize.bpol_ideal(star, n)
    rhs = polarize.transpose(duality.alexander_dual(grid))
    report.record("grid_dual_identity", lhs == rhs, I)
    report.record(
        "star_dual_involution", duality.ideal_equiv(duality.star_dual(star, n), I), I
    )

    sig = duality.sigma_ideal(I, d)
    report.record(
        "sigma_dual_compatibility",
        duality.ideal_equiv(duality.alexander_dual(sig), duality.sigma_ideal(star, n)),
        I,
    )
    report.record(
        "sigma_decomposition_vs_oracle",
        duality.sigma_decomposition(E) == decompose.decompose_oracle(sig),
        I,
    )

    ek = homology.ek_betti(I)
    try:
        report.record("ek_vs_homology_oracle", homology.betti_oracle(I) == ek, I)
        report.record("betti_preserved_by_bpol", homology.betti_oracle(grid) == ek, I)
    except homology.OracleSizeError:
        report.skip("ek_vs_homology_oracle")
        report.skip("betti_preserved_by_bpol")

    via_dual = homology.lc_series_via_dual(I, d)
    via_comp = homology.lc_series_via_components(E, n)
    via_gamma = homology.lc_series_via_gamma(grid_comps, n)
    report.record(
        "lc_three_way_agreement", via_dual == via_comp == via_gamma, I
    )
    report.record("euler_consistency", homology.euler_consistency(I), I)
    report.record(
        "cm_via_dual_vs_direct",
        homology.is_cm_via_dual(I, d) == core.is_cohen_macaulay(I),
        I,
    )

    ad = homology.adeg(E, n)
    series = core.hilbert_series_quotient(I)
    report.record(
        "deg_crosscheck",
        series.denom_power == n - core.height(I)
        and series.numerator_at_one() == ad.deg,
        I,
    )
    report.record(
        "adeg_top_shortcut",
        ad.as_dict().get(n - I.nu(), 0) == homology.adeg_top_from_generators(I),
        I,
    )

    expected_colon = sorted(
        {a for a in E if len(a) < n}
        | {a[:-1] + (a[-1] - 1,) for a in E if len(a) == n and a[-1] >= 2},
        key=decompose.component_sort_key,
    )
    colon = core.colon_variable(I, n)
    if colon.is_unit:
        report.record("colon_decomposition_identity", not expected_colon, I)
    else:
        report.record(
            "colon_decomposition_identity",
            decompose.decompose_strongly_stable(colon) == expected_colon,
            I,
        )

    report.record("right_shift_equivalence", decompose.right_shift_check(E, n), I)
