"""Entrypoints behind the CLI: simulate, check, opt and sweep."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from functools import partial
import logging

import numpy as np
from tqdm import tqdm

from rentmin.delay import simulate_with_delay, strip_delay
from rentmin.diagnostics import (
    CHECK_BATCH_SHAPE,
    CHECK_COST_IDENTITY,
    CHECK_DELAY_MISMATCH,
    CHECK_HALL_VIOLATION,
    CHECK_ORACLE_MISMATCH,
    CHECK_SCHEDULE_INVALID,
    CHECK_UNASSIGNED_JOB,
    INVARIANT_ONLINE_INFEASIBLE,
    SWEEP_COST_IDENTITY,
    SWEEP_PREFIX_GROWTH,
    SWEEP_RATIO_VIOLATION,
    SWEEP_SEMI_OVER_OPT,
    SWEEP_STRIPPED_OPT_BOUND,
    SWEEP_TIE_BREAK_DEPENDENCE,
    SWEEP_TWO_APPROX_BOUND,
    Diagnostic,
    InvariantBreach,
    collect_diagnostics,
    has_errors,
)
from rentmin.feasibility import active_units_many, hall_feasible
from rentmin.model import (
    Instance,
    OnlineTrace,
    ParsedTrace,
    RentSet,
    instance_diagnostics,
    instance_digest,
    serialize_trace,
    validate_instance,
)
from rentmin.offline import (
    OptMethod,
    brute_force_opt,
    density_lower_bound,
    offline_two_approx,
)
from rentmin.online import BATCH_SIZE, BatchRent, competitive_ratio, simulate_online
from rentmin.oracle import (
    OracleStrategy,
    prefix_growth_breaks,
    semi_online,
    semi_online_incremental,
    tie_break_counterexample,
)
from rentmin.pipeline.options import OptAlgorithm, SweepOptions
from rentmin.pipeline.results import (
    CheckRunResult,
    OptRunResult,
    RatioReport,
    RatioRow,
    SimulateRunResult,
    SweepRunResult,
)

logger = logging.getLogger(__name__)


def run_simulate(
    inst: Instance,
    *,
    strategy: OracleStrategy = OracleStrategy.MATCHING,
) -> SimulateRunResult:
    """Run the online algorithm; λ > 0 goes through the delay reduction."""
    validate_instance(inst)
    if inst.lam > 0:
        delay = simulate_with_delay(inst, strategy=strategy)
        return SimulateRunResult(instance=inst, trace=delay.inner, delay=delay)
    return SimulateRunResult(instance=inst, trace=simulate_online(inst, strategy=strategy))


def simulate_document(result: SimulateRunResult) -> bytes:
    """Trace file bytes for a simulate run."""
    if result.delay is None:
        return serialize_trace(result.trace)
    return serialize_trace(result.trace, lam=result.delay.lam, shifted_rents=result.delay.shifted_rents)


def run_check(
    inst: Instance,
    parsed: ParsedTrace,
    *,
    strategy: OracleStrategy = OracleStrategy.MATCHING,
) -> CheckRunResult:
    """Verify a trace against its instance; every failed check becomes a diagnostic."""
    diagnostics = instance_diagnostics(inst)
    if diagnostics:
        return CheckRunResult(diagnostics=diagnostics, has_errors=has_errors(diagnostics))

    trace = parsed.trace
    inner = strip_delay(inst) if inst.lam > 0 else inst
    rents = trace.rent_set()
    witness = hall_feasible(inner.jobs, rents)
    hall: list[Diagnostic] = []
    if witness is not True:
        hall.append(Diagnostic.from_spec(CHECK_HALL_VIOLATION, witness.render()))
    diagnostics = collect_diagnostics(
        _cost_identity_diagnostics(trace, rents),
        _batch_shape_diagnostics(trace, inst.T),
        _oracle_diagnostics(trace, inner, strategy),
        hall,
        _delay_diagnostics(inst, parsed, rents),
        _slot_diagnostics(trace, inner, rents),
    )
    logger.debug("check: %d diagnostics for %d jobs", len(diagnostics), inst.n)
    return CheckRunResult(diagnostics=diagnostics, has_errors=has_errors(diagnostics))


def _cost_identity_diagnostics(trace: OnlineTrace, rents: RentSet) -> list[Diagnostic]:
    diagnostics: list[Diagnostic] = []
    if trace.total_rents != BATCH_SIZE * trace.total_batches:
        diagnostics.append(
            Diagnostic.from_spec(
                CHECK_COST_IDENTITY,
                f"total_rents={trace.total_rents}, total_batches={trace.total_batches}.",
            )
        )
    deltas = sum(step.delta for step in trace.steps)
    if deltas != trace.total_batches:
        diagnostics.append(
            Diagnostic.from_spec(
                CHECK_COST_IDENTITY, f"Step deltas sum to {deltas}, total_batches={trace.total_batches}."
            )
        )
    if len(rents) != trace.total_rents:
        diagnostics.append(
            Diagnostic.from_spec(
                CHECK_COST_IDENTITY, f"Steps hold {len(rents)} rents, total_rents={trace.total_rents}."
            )
        )
    return diagnostics


def _batch_shape_diagnostics(trace: OnlineTrace, T: int) -> list[Diagnostic]:
    diagnostics: list[Diagnostic] = []
    for step in trace.steps:
        expected = Counter(BatchRent.at(step.t, T).intervals * step.delta)
        if Counter(step.rents) != expected:
            diagnostics.append(
                Diagnostic.from_spec(
                    CHECK_BATCH_SHAPE,
                    f"t={step.t}: expected {step.delta} batch(es) of 4×[t, t+T) + 2×[t+T, t+2T).",
                )
            )
    return diagnostics


def _oracle_diagnostics(trace: OnlineTrace, inner: Instance, strategy: OracleStrategy) -> list[Diagnostic]:
    oracle = semi_online_incremental(inner.jobs, inner.T, strategy=strategy)
    if len(oracle) != trace.total_batches:
        return [
            Diagnostic.from_spec(
                CHECK_ORACLE_MISMATCH,
                f"Semi-online placed {len(oracle)} rents, trace has {trace.total_batches} batches.",
            )
        ]
    # each oracle rent [t − T, t + 2T) is answered by one batch at t
    expected_times = sorted(rent.s + inner.T for rent in oracle)
    if sorted(trace.batch_times()) != expected_times:
        return [
            Diagnostic.from_spec(
                CHECK_ORACLE_MISMATCH,
                f"Batch times {sorted(trace.batch_times())} differ from oracle times {expected_times}.",
            )
        ]
    return []


def _delay_diagnostics(inst: Instance, parsed: ParsedTrace, rents: RentSet) -> list[Diagnostic]:
    if parsed.lam != inst.lam:
        return [Diagnostic.from_spec(CHECK_DELAY_MISMATCH, f"Trace λ={parsed.lam}, instance λ={inst.lam}.")]
    if inst.lam == 0:
        return []
    shifted = rents.shift(inst.lam)
    if parsed.shifted_rents is not None and parsed.shifted_rents != shifted:
        return [Diagnostic.from_spec(CHECK_DELAY_MISMATCH, f"Shifted rents are not the rents moved by {inst.lam}.")]
    witness = hall_feasible(inst.jobs, shifted)
    if witness is not True:
        return [Diagnostic.from_spec(CHECK_HALL_VIOLATION, f"After the λ shift: {witness.render()}")]
    return []


def _slot_diagnostics(trace: OnlineTrace, inner: Instance, rents: RentSet) -> list[Diagnostic]:
    diagnostics: list[Diagnostic] = []
    slots = trace.slots()
    jobs = inner.job_by_id()
    for job in inner.jobs:
        slot = slots.get(job.id)
        if slot is None:
            diagnostics.append(Diagnostic.from_spec(CHECK_UNASSIGNED_JOB, job_id=job.id))
        elif not job.r <= slot <= job.d - 1:
            diagnostics.append(
                Diagnostic.from_spec(
                    CHECK_SCHEDULE_INVALID, f"Slot {slot} outside window [{job.r}, {job.d}).", job_id=job.id
                )
            )
    for job_id in sorted(set(slots) - set(jobs)):
        diagnostics.append(
            Diagnostic.from_spec(CHECK_SCHEDULE_INVALID, "Trace assigns an unknown job.", job_id=job_id)
        )
    for step in trace.steps:
        for job_id, slot in step.assigned:
            if slot < step.t:
                diagnostics.append(
                    Diagnostic.from_spec(
                        CHECK_SCHEDULE_INVALID, f"Slot {slot} precedes its step at t={step.t}.", job_id=job_id
                    )
                )

    load = Counter(slots.values())
    if load:
        points = np.fromiter(sorted(load), dtype=np.int64, count=len(load))
        capacity = active_units_many(rents, points)
        for t, units in zip(points.tolist(), capacity.tolist(), strict=True):
            if load[t] > units:
                diagnostics.append(
                    Diagnostic.from_spec(
                        CHECK_SCHEDULE_INVALID, f"Slot {t} runs {load[t]} jobs on {units} active units."
                    )
                )
    return diagnostics


def run_opt(
    inst: Instance,
    algorithm: OptAlgorithm = OptAlgorithm.BRUTE,
    *,
    k_max: int | None = None,
) -> OptRunResult:
    """OPT (or a bound on it); offline rents need no lead time, so λ plays no part."""
    validate_instance(inst)
    jobs = inst.jobs
    match algorithm:
        case OptAlgorithm.BRUTE:
            result = brute_force_opt(jobs, inst.T, k_max)
            return OptRunResult(algorithm, result.count, result.method, result.rents)
        case OptAlgorithm.DENSITY:
            return OptRunResult(algorithm, density_lower_bound(jobs, inst.T), OptMethod.LOWER_BOUND)
        case OptAlgorithm.TWO_APPROX:
            rents = offline_two_approx(jobs, inst.T)
            return OptRunResult(algorithm, len(rents), OptMethod.UPPER_BOUND, rents)


def evaluate_instance(inst: Instance, options: SweepOptions) -> RatioRow:
    """One sweep row: online cost, oracle count and OPT (exact where the grid is small)."""
    validate_instance(inst)
    inner = strip_delay(inst) if inst.lam > 0 else inst
    if inst.lam > 0:
        delay = simulate_with_delay(inst, strategy=options.strategy)
        trace = delay.inner
        witness = hall_feasible(inst.jobs, delay.shifted_rents)
        if witness is not True:
            raise InvariantBreach.from_spec(INVARIANT_ONLINE_INFEASIBLE, witness.render())
    else:
        trace = simulate_online(inst, strategy=options.strategy)

    semi_count = trace.oracle_count
    cost_identity_failed = (
        trace.total_rents != BATCH_SIZE * trace.total_batches or trace.total_batches != semi_count
    )
    low, high = inst.horizon()
    small = inst.n <= options.max_brute_jobs and high - low <= options.max_brute_horizon
    if small and options.cross_check and len(semi_online(inner.jobs, inner.T)) != semi_count:
        cost_identity_failed = True

    two_approx: int | None = None
    opt_stripped: int | None = None
    prefix_breaks = 0
    if small:
        result = brute_force_opt(inst.jobs, inst.T, options.k_max)
        opt, method = result.count, result.method
        two_approx = len(offline_two_approx(inst.jobs, inst.T))
        if inst.lam > 0:
            stripped = brute_force_opt(inner.jobs, inner.T, options.k_max)
            opt_stripped = stripped.count if stripped.exact else None
        if options.cross_check:
            prefix_breaks = len(prefix_growth_breaks(inner.jobs, inner.T))
    else:
        opt, method = density_lower_bound(inst.jobs, inst.T), OptMethod.LOWER_BOUND

    tie_break_mismatch = (
        options.tie_break_study and small and tie_break_counterexample(inner.jobs, inner.T) is not None
    )
    return RatioRow(
        instance_digest=instance_digest(inst),
        n=inst.n,
        T=inst.T,
        lam=inst.lam,
        online_rents=trace.total_rents,
        semi_count=semi_count,
        opt=opt,
        opt_method=method,
        ratio=competitive_ratio(trace, opt) if opt > 0 else None,
        semi_over_opt=inst.lam == 0 and method is OptMethod.EXACT and semi_count > opt,
        cost_identity_failed=cost_identity_failed,
        tie_break_mismatch=tie_break_mismatch,
        two_approx=two_approx,
        opt_stripped=opt_stripped,
        prefix_breaks=prefix_breaks,
    )


def run_sweep(instances: Iterable[Instance], options: SweepOptions | None = None) -> SweepRunResult:
    """Evaluate every instance, in worker processes when `options.workers` > 1."""
    resolved = options if options is not None else SweepOptions()
    batch = list(instances)
    evaluate = partial(evaluate_instance, options=resolved)
    progress = partial(tqdm, total=len(batch), desc="sweep", unit="inst", disable=not resolved.show_progress)
    if resolved.workers > 1:
        with ProcessPoolExecutor(max_workers=resolved.workers) as pool:
            chunksize = max(1, len(batch) // (resolved.workers * 16))
            rows = list(progress(pool.map(evaluate, batch, chunksize=chunksize)))
    else:
        rows = [evaluate(inst) for inst in progress(batch)]

    report = RatioReport(rows=rows)
    diagnostics = _sweep_diagnostics(report)
    logger.info(
        "sweep: %d instances, %d exact, max ratio %s, %d violations",
        len(rows),
        report.exact_rows,
        report.max_ratio,
        report.violations,
    )
    return SweepRunResult(report=report, diagnostics=diagnostics, has_errors=has_errors(diagnostics))


def _sweep_diagnostics(report: RatioReport) -> list[Diagnostic]:
    diagnostics: list[Diagnostic] = []
    for row in report.rows:
        where = f"instance {row.instance_digest}"
        if row.violates:
            diagnostics.append(
                Diagnostic.from_spec(SWEEP_RATIO_VIOLATION, f"{where}: {row.online_rents}/{row.opt} > {row.bound}.")
            )
        if row.semi_over_opt:
            diagnostics.append(
                Diagnostic.from_spec(SWEEP_SEMI_OVER_OPT, f"{where}: {row.semi_count} > {row.opt}.")
            )
        if row.cost_identity_failed:
            diagnostics.append(Diagnostic.from_spec(SWEEP_COST_IDENTITY, where))
        if row.tie_break_mismatch:
            diagnostics.append(Diagnostic.from_spec(SWEEP_TIE_BREAK_DEPENDENCE, where))
        if row.two_approx_exceeded:
            diagnostics.append(
                Diagnostic.from_spec(SWEEP_TWO_APPROX_BOUND, f"{where}: {row.two_approx} > 2 × {row.opt}.")
            )
        if row.stripped_opt_exceeded:
            diagnostics.append(
                Diagnostic.from_spec(
                    SWEEP_STRIPPED_OPT_BOUND, f"{where}: {row.opt_stripped} > {row.lam + 1} × {row.opt}."
                )
            )
        if row.prefix_breaks:
            diagnostics.append(
                Diagnostic.from_spec(SWEEP_PREFIX_GROWTH, f"{where}: {row.prefix_breaks} event(s).")
            )
    return diagnostics
