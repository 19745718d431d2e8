"""Random test instances and batch benchmarks.

Instances follow the usual approximate-GCD protocol: a monic GCD of
degree ``d`` times monic prime parts, plus noise rescaled to a fixed
2-norm.  A batch runs the full pipeline on ``trials`` independent
instances and averages over the converged ones.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
import csv
import io
import json
import time

import numpy as np

from .linalg import RankDeficiencyError
from .optimizer import NonConvergenceError, OptimizerConfig, Problem, run
from .poly import Poly
from .recovery import RecoveryError, recover_gcd

CSV_FIELDS = [
    "m", "n", "d", "e_F", "e_G", "trials",
    "mean_error", "mean_iterations", "mean_time_s", "convergence_rate",
]


@dataclass(frozen=True)
class InstanceParams:
    m: int
    n: int
    d: int
    e_F: float = 0.1
    e_G: float = 0.1
    coeff_range: float = 10.0
    seed: int = 0
    complex_coeffs: bool = True

    def __post_init__(self):
        if not (self.m >= self.n > self.d > 0):
            raise ValueError(
                f"need m >= n > d > 0, got m={self.m}, n={self.n}, d={self.d}")
        if self.e_F < 0 or self.e_G < 0:
            raise ValueError("noise norms must be non-negative")
        if not self.coeff_range > 0:
            raise ValueError("coeff_range must be positive")


@dataclass
class Instance:
    F: Poly
    G: Poly
    F0: Poly
    G0: Poly
    H0: Poly


@dataclass
class TrialResult:
    index: int
    converged: bool
    error: float = np.nan
    iterations: int = 0
    time_s: float = np.nan
    constraint_inf: float = np.nan
    x_inf: float = np.nan
    cofactor_norm_dev: float = np.nan
    correction_gap: float = np.nan
    failure: str = ""
    result: object = field(default=None, repr=False)


@dataclass
class ExperimentRecord:
    params: InstanceParams
    trials: int
    mean_error: float
    mean_iterations: float
    mean_time_seconds: float
    convergence_rate: float
    details: list = field(default_factory=list, repr=False)

    def row(self):
        p = self.params
        return {
            "m": p.m, "n": p.n, "d": p.d, "e_F": p.e_F, "e_G": p.e_G,
            "trials": self.trials,
            "mean_error": self.mean_error,
            "mean_iterations": self.mean_iterations,
            "mean_time_s": self.mean_time_seconds,
            "convergence_rate": self.convergence_rate,
        }

    def to_json(self):
        return json.dumps(self.row())

    def to_csv(self):
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
        w.writeheader()
        w.writerow(self.row())
        return buf.getvalue()


def trial_seed(seed, index):
    """Independent per-trial seed derived from the master seed."""
    return np.random.SeedSequence([int(seed) & 0xFFFFFFFFFFFFFFFF, int(index)])


def _random_coeffs(rng, k, lim, complex_coeffs):
    c = rng.uniform(-lim, lim, k)
    if complex_coeffs:
        c = c + 1j * rng.uniform(-lim, lim, k)
    return c


def _monic(rng, deg, lim, complex_coeffs):
    return Poly(np.append(_random_coeffs(rng, deg, lim, complex_coeffs), 1.0))


def generate_instance(params, rng=None):
    """Draw ``(F, G)`` with a planted degree-``d`` GCD plus scaled noise.

    ``rng`` defaults to a generator seeded from ``params.seed``.
    """
    p = params
    rng = np.random.default_rng(p.seed) if rng is None else rng
    lim, cx = p.coeff_range, p.complex_coeffs
    H0 = _monic(rng, p.d, lim, cx)
    F0 = H0 * _monic(rng, p.m - p.d, lim, cx)
    G0 = H0 * _monic(rng, p.n - p.d, lim, cx)
    FN = Poly(_random_coeffs(rng, p.m, lim, cx))
    GN = Poly(_random_coeffs(rng, p.n, lim, cx))
    F = F0 + FN * (p.e_F / FN.norm())
    G = G0 + GN * (p.e_G / GN.norm())
    return Instance(F=F, G=G, F0=F0, G0=G0, H0=H0)


def run_trial(params, index, config=None, keep_result=False):
    """Generate instance ``index`` of a batch and solve it."""
    config = config or OptimizerConfig()
    rng = np.random.default_rng(trial_seed(params.seed, index))
    inst = generate_instance(params, rng)
    problem = Problem(inst.F, inst.G, params.d)
    t0 = time.perf_counter()
    try:
        state = run(problem, config)
        res = recover_gcd(state.x, problem, iterations=state.iteration)
    except (NonConvergenceError, RankDeficiencyError, RecoveryError) as err:
        return TrialResult(index=index, converged=False, time_s=time.perf_counter() - t0,
                           failure=f"{type(err).__name__}: {err}")
    elapsed = time.perf_counter() - t0

    x = state.x
    v = problem.cofactor_vector(x)
    f_pre, g_pre, _, _ = problem.unpack(x)
    gap = max(np.max(np.abs(res.F_tilde.coeffs - f_pre.coeffs)),
              np.max(np.abs(res.G_tilde.coeffs - g_pre.coeffs)))
    return TrialResult(
        index=index, converged=True, error=res.perturbation,
        iterations=state.iteration, time_s=elapsed,
        constraint_inf=float(np.max(np.abs(problem.constraint(x)))),
        x_inf=float(np.max(np.abs(x))),
        cofactor_norm_dev=abs(float(v @ v) - 1.0),
        correction_gap=float(gap),
        result=(res, inst) if keep_result else None,
    )


def _run_trial_args(args):
    return run_trial(*args)


def run_batch(params, trials, config=None, workers=1, keep_results=False):
    """Run ``trials`` instances and aggregate a Table-1 style record.

    Means are taken over converged trials only; ``convergence_rate`` is
    over all trials.  Results are merged by trial index, so the record
    (apart from timings) does not depend on ``workers``.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    config = config or OptimizerConfig()
    jobs = [(params, i, config, keep_results) for i in range(trials)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            details = list(ex.map(_run_trial_args, jobs))
    else:
        details = [run_trial(*j) for j in jobs]
    details.sort(key=lambda t: t.index)

    ok = [t for t in details if t.converged]
    if ok:
        mean_err = float(np.mean([t.error for t in ok]))
        mean_it = float(np.mean([t.iterations for t in ok]))
        mean_t = float(np.mean([t.time_s for t in ok]))
    else:
        mean_err = mean_it = mean_t = float("nan")
    return ExperimentRecord(
        params=params, trials=trials, mean_error=mean_err,
        mean_iterations=mean_it, mean_time_seconds=mean_t,
        convergence_rate=len(ok) / trials, details=details,
    )


def record_from_row(row):
    """Rebuild a record (without per-trial details) from a CSV/JSON row."""
    p = InstanceParams(int(row["m"]), int(row["n"]), int(row["d"]),
                       float(row["e_F"]), float(row["e_G"]))
    return ExperimentRecord(
        params=p, trials=int(row["trials"]),
        mean_error=float(row["mean_error"]),
        mean_iterations=float(row["mean_iterations"]),
        mean_time_seconds=float(row["mean_time_s"]),
        convergence_rate=float(row["convergence_rate"]),
    )


__all__ = [
    "CSV_FIELDS", "InstanceParams", "Instance", "TrialResult", "ExperimentRecord",
    "generate_instance", "run_trial", "run_batch", "trial_seed", "record_from_row",
]
