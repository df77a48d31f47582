"""Parameter sweeps over one or two model fields.

A sweep walks a row-major grid, rebuilds the model at each point and records
the requested quantities.  Points that are not valid models, or that fall
outside the chosen solver's regime, come back as ``skipped`` rows with the
reason instead of raising.
"""

from __future__ import annotations

import dataclasses
import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .closed_form import refpoint_threshold, riskfree_threshold, solve_closed_form
from .errors import AssumptionViolated, InvalidModel, PTSolverError
from .market import MarketScenario, SensingDistribution
from .oracle import OracleConfig, maximize_utility, verify
from .prospect import ReferencePoint, RiskProfile

SCENARIO_AXES = {"pi": "price", "c_l": "leasing_cost", "c_s": "sensing_cost", "demand": "demand"}
PROFILE_AXES = {"lambda": "lam", "beta": "beta", "gamma": "gamma", "mu": "mu"}
AXIS_NAMES = tuple(SCENARIO_AXES) + tuple(PROFILE_AXES) + ("p1",)

SOLVER_QUANTITIES = ("b_s_star", "utility", "expected_profit", "min_possible", "max_possible")
QUANTITIES = SOLVER_QUANTITIES + ("threshold_r",)
SOLVERS = ("closed", "oracle", "both")


def sensing_threshold(p1: float, profile: RiskProfile, rp: ReferencePoint) -> float:
    """Cost ratio c_l/c_s at which the binary {0, 1} operator switches to B_s = D.

    Under the risk-free reference the operator senses everything when the
    ratio strictly exceeds r; under the high reference when it reaches r.
    """
    if not 0 < p1 < 1:
        raise InvalidModel(f"p1 must lie in (0, 1), got {p1}")
    if rp.kind == "risk_free":
        return riskfree_threshold(p1, profile)
    if rp.kind == "high":
        return refpoint_threshold(p1, profile)
    raise AssumptionViolated(f"sensing threshold defined for risk_free/high references, not {rp.kind}")


@dataclass(frozen=True)
class Axis:
    name: str
    start: float
    stop: float
    steps: int

    def __post_init__(self):
        if self.name not in AXIS_NAMES:
            raise InvalidModel(f"unknown axis {self.name!r}; expected one of {', '.join(AXIS_NAMES)}")
        if self.steps < 2:
            raise InvalidModel(f"axis {self.name!r} needs steps >= 2, got {self.steps}")
        if not self.start < self.stop:
            raise InvalidModel(f"axis {self.name!r} needs from < to, got {self.start} >= {self.stop}")

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.steps)


@dataclass(frozen=True)
class SweepSpec:
    scenario: MarketScenario
    dist: SensingDistribution
    profile: RiskProfile
    rp: ReferencePoint
    axes: tuple[Axis, ...]
    solver: str = "closed"
    outputs: tuple[str, ...] = ("b_s_star",)
    oracle: OracleConfig = field(default_factory=OracleConfig)

    def __post_init__(self):
        object.__setattr__(self, "axes", tuple(self.axes))
        object.__setattr__(self, "outputs", tuple(self.outputs))
        if not 1 <= len(self.axes) <= 2:
            raise InvalidModel(f"a sweep takes 1 or 2 axes, got {len(self.axes)}")
        names = [a.name for a in self.axes]
        if len(set(names)) != len(names):
            raise InvalidModel("axis names must be distinct")
        if self.solver not in SOLVERS:
            raise InvalidModel(f"solver must be one of {SOLVERS}, got {self.solver!r}")
        if not self.outputs:
            raise InvalidModel("at least one output quantity is required")
        for q in self.outputs:
            if q not in QUANTITIES:
                raise InvalidModel(f"unknown output {q!r}; expected one of {', '.join(QUANTITIES)}")
        if "p1" in names and not self.dist.is_binary:
            raise InvalidModel("axis p1 needs the binary {0, 1} distribution")

    @property
    def columns(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.axes) + self.outputs + ("status",)


@dataclass
class SweepTable:
    columns: tuple[str, ...]
    rows: list[tuple]
    metadata: dict = field(default_factory=dict)

    def column(self, name: str) -> list:
        k = self.columns.index(name)
        return [r[k] for r in self.rows]

    def ok_rows(self) -> list[dict]:
        return [dict(zip(self.columns, r)) for r in self.rows if r[-1] == "ok"]


def _model_at(spec: SweepSpec, point: dict):
    sc_kw = {SCENARIO_AXES[k]: v for k, v in point.items() if k in SCENARIO_AXES}
    pr_kw = {PROFILE_AXES[k]: v for k, v in point.items() if k in PROFILE_AXES}
    scenario = dataclasses.replace(spec.scenario, **sc_kw) if sc_kw else spec.scenario
    profile = dataclasses.replace(spec.profile, **pr_kw) if pr_kw else spec.profile
    dist = SensingDistribution.binary(point["p1"]) if "p1" in point else spec.dist
    return scenario, dist, profile


def _solve(spec, scenario, dist, profile):
    rp = spec.rp
    if spec.solver == "oracle":
        return maximize_utility(scenario, dist, profile, rp, spec.oracle), "ok"
    closed = solve_closed_form(scenario, dist, profile, rp)
    if spec.solver == "closed":
        return closed, "ok"
    oracle = maximize_utility(scenario, dist, profile, rp, spec.oracle)
    step, _ = spec.oracle.resolved(scenario)
    report = verify(closed, oracle, tol_bs=2 * step)
    return closed, "ok" if report.passed else "mismatch"


def evaluate_point(spec: SweepSpec, values: tuple[float, ...]) -> tuple:
    """One table row: axis values, requested quantities, status."""
    point = {a.name: float(v) for a, v in zip(spec.axes, values)}
    blank = tuple(math.nan for _ in spec.outputs)
    head = tuple(point[a.name] for a in spec.axes)
    try:
        scenario, dist, profile = _model_at(spec, point)
        found = {}
        if "threshold_r" in spec.outputs:
            if not dist.is_binary:
                raise AssumptionViolated("threshold_r needs the binary {0, 1} distribution")
            found["threshold_r"] = sensing_threshold(dist.probs[0], profile, spec.rp)
        status = "ok"
        if any(q in SOLVER_QUANTITIES for q in spec.outputs):
            res, status = _solve(spec, scenario, dist, profile)
            found.update(
                b_s_star=res.b_s_star,
                utility=res.utility,
                expected_profit=res.expected_profit,
                min_possible=res.min_possible_profit,
                max_possible=res.max_possible_profit,
            )
    except (PTSolverError, ValueError) as exc:
        reason = str(exc).replace("\n", " ").replace(",", ";")
        return head + blank + (f"skipped: {type(exc).__name__}: {reason}",)
    return head + tuple(float(found[q]) for q in spec.outputs) + (status,)


def _evaluate_chunk(args):
    spec, points = args
    return [evaluate_point(spec, p) for p in points]


def run_sweep(spec: SweepSpec, workers: int = 1) -> SweepTable:
    """Evaluate every grid point; row order is row-major whatever ``workers`` is."""
    points = list(itertools.product(*(a.values() for a in spec.axes)))
    if workers <= 1 or len(points) < 2:
        rows = [evaluate_point(spec, p) for p in points]
    else:
        size = math.ceil(len(points) / workers)
        chunks = [(spec, points[i:i + size]) for i in range(0, len(points), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = [row for chunk in pool.map(_evaluate_chunk, chunks) for row in chunk]
    metadata = {
        "solver": spec.solver,
        "reference": spec.rp.kind if spec.rp.value is None else f"{spec.rp.kind}:{spec.rp.value!r}",
        "distribution": [[a, p] for a, p in spec.dist.pairs()],
        "axes": [[a.name, a.start, a.stop, a.steps] for a in spec.axes],
    }
    return SweepTable(spec.columns, rows, metadata)
