"""
Verification Suites

Named groups of verifications, each run against one RunConfig. Every suite
returns its CheckResults in a fixed order; randomness comes from the single
seeded generator handed in by the caller.
"""

import random
from typing import Callable, Dict, List

from ..combinatorics import Partition, enumerate_box
from ..engine.performance import ParallelProcessor
from ..geometry import (
    kapranov_collection,
    verify_anchors,
    verify_beilinson,
    verify_dot_action_agreement,
    verify_dual_window,
    verify_serre_duality,
    verify_strong_exceptionality,
    verify_window_fixed_point
)
from ..kernel import (
    verify_bimodule_maps,
    verify_homomorphism,
    verify_ideal_identity,
    verify_koszul_resolution,
    verify_pinch_character,
    verify_quotient_map
)
from ..sod import (
    OGenerator,
    ds_staircase,
    orthogonality_cell,
    rank_accounting,
    verify_ds_euler,
    verify_generation,
    verify_orthogonality
)
from ..utils.check_result import CheckResult
from ..utils.config import RunConfig

Suite = Callable[[RunConfig, ParallelProcessor, random.Random], List[CheckResult]]


def negative_control(name: str, inner: CheckResult) -> CheckResult:
    """A control passes exactly when the inner check detects the planted defect."""
    details = {"detected": not inner.passed, "inner_failure": inner.first_failure}
    if inner.passed:
        return CheckResult.failure(name, inner.params, {"reason": "planted defect was not detected"}, details)
    return CheckResult(name, inner.params, details=details)


def window_suite(cfg: RunConfig, processor: ParallelProcessor, rng: random.Random) -> List[CheckResult]:
    """Fixed point for every Kapranov member, plus a member just outside the box."""
    members = kapranov_collection(cfg.d, cfg.m).members
    results = processor.map_ordered(
        lambda alpha: verify_window_fixed_point(alpha, cfg.d, cfg.m, cfg.mprime, cfg.cutoff),
        members
    )
    outside = Partition.of(cfg.m - cfg.d + 1)
    results.append(negative_control(
        "window_negative_control",
        verify_window_fixed_point(outside, cfg.d, cfg.m, cfg.mprime, cfg.cutoff)
    ))
    return results


def strong_suite(cfg: RunConfig, processor: ParallelProcessor, rng: random.Random) -> List[CheckResult]:
    return [
        verify_strong_exceptionality(cfg.d, cfg.m, processor),
        verify_beilinson(cfg.m),
        verify_dual_window(cfg.d, cfg.mprime)
    ]


def anchors_suite(cfg: RunConfig, processor: ParallelProcessor, rng: random.Random) -> List[CheckResult]:
    return [
        verify_anchors(),
        verify_serre_duality(cfg.d, cfg.m),
        verify_dot_action_agreement(cfg.d)
    ]


def sod_suite(cfg: RunConfig, processor: ParallelProcessor, rng: random.Random) -> List[CheckResult]:
    """Rank accounting, staircase Euler identities and a mutated staircase."""
    cfg.require_flip()
    results = [rank_accounting(cfg.d, cfg.m, cfg.mprime)]
    deltas = enumerate_box(2, cfg.d - 1)
    results.extend(processor.map_ordered(
        lambda delta: verify_ds_euler(delta, cfg.d, cfg.m, cfg.mprime, cfg.cutoff),
        deltas
    ))
    mutated = ds_staircase(Partition(()), cfg.d, cfg.mprime).with_shifted_term(1, 1)
    results.append(negative_control(
        "ds_euler_negative_control",
        verify_ds_euler(Partition(()), cfg.d, cfg.m, cfg.mprime, cfg.cutoff, complex_spec=mutated)
    ))
    return results


def orth_suite(cfg: RunConfig, processor: ParallelProcessor, rng: random.Random) -> List[CheckResult]:
    """Orthogonality, plus one generator twisted one step past its range."""
    cfg.require_flip()
    results = [verify_orthogonality(cfg.d, cfg.m, cfg.mprime, cfg.cutoff, processor)]
    cell = orthogonality_cell(
        Partition.of(cfg.mprime - cfg.d), OGenerator(Partition(()), 0),
        cfg.d, cfg.m, cfg.mprime, cfg.cutoff, det_twist=-1
    )
    params = {"d": cfg.d, "m": cfg.m, "mprime": cfg.mprime, "cutoff": cfg.cutoff}
    if cell.brute_force_zero:
        results.append(CheckResult.failure(
            "orthogonality_negative_control", params,
            {"reason": "planted defect was not detected"}, {"cell": cell.to_dict()}
        ))
    else:
        results.append(CheckResult("orthogonality_negative_control", params, details={"cell": cell.to_dict()}))
    return results


def koszul_suite(cfg: RunConfig, processor: ParallelProcessor, rng: random.Random) -> List[CheckResult]:
    return [verify_koszul_resolution(cfg.d, cfg.m, cfg.mprime, cfg.cutoff)]


def kernel_suite(cfg: RunConfig, processor: ParallelProcessor, rng: random.Random) -> List[CheckResult]:
    args = (cfg.d, cfg.m, cfg.mprime, cfg.trials, rng)
    return [
        verify_ideal_identity(*args),
        verify_bimodule_maps(*args),
        verify_quotient_map(*args),
        verify_homomorphism(*args)
    ]


def pinch_suite(cfg: RunConfig, processor: ParallelProcessor, rng: random.Random) -> List[CheckResult]:
    return [verify_pinch_character(cfg.d, cfg.cutoff)]


def generation_suite(cfg: RunConfig, processor: ParallelProcessor, rng: random.Random) -> List[CheckResult]:
    cfg.require_flip()
    return [verify_generation(cfg.d, cfg.m, cfg.mprime, cfg.cutoff)]


SUITES: Dict[str, Suite] = {
    "window": window_suite,
    "strong": strong_suite,
    "anchors": anchors_suite,
    "sod": sod_suite,
    "orth": orth_suite,
    "koszul": koszul_suite,
    "kernel-idents": kernel_suite,
    "pinch": pinch_suite,
    "generation": generation_suite
}

ALL_SUITE = "all"
SUITE_NAMES = list(SUITES) + [ALL_SUITE]


def run_suite(
    name: str,
    cfg: RunConfig,
    processor: ParallelProcessor,
    rng: random.Random,
    on_skip: Callable[[str, Exception], None] = lambda suite, error: None,
    on_start: Callable[[str], None] = lambda suite: None
) -> List[CheckResult]:
    """
    Run one suite, or every suite in registry order for "all".

    Under "all", a suite whose preconditions reject the config is skipped and
    reported through on_skip; a single named suite propagates the ValueError.
    on_start is called with each suite name before the suite runs.

    Raises:
        ValueError: Unknown suite name or rejected preconditions
    """
    if name == ALL_SUITE:
        results: List[CheckResult] = []
        for suite_name, suite in SUITES.items():
            on_start(suite_name)
            try:
                results.extend(suite(cfg, processor, rng))
            except ValueError as e:
                on_skip(suite_name, e)
        return results
    if name not in SUITES:
        raise ValueError(f"unknown suite '{name}' (expected one of {', '.join(SUITE_NAMES)})")
    on_start(name)
    return SUITES[name](cfg, processor, rng)
