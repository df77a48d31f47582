"""Sensing/leasing investment under prospect theory: closed forms and a numeric oracle."""

from .closed_form import (
    DecisionIndicators,
    decision_indicators,
    find_pivot_index,
    g,
    g_root,
    refpoint_threshold,
    riskfree_threshold,
    solve_binary_refpoint,
    solve_binary_riskfree,
    solve_closed_form,
    solve_eut,
    solve_pt_riskfree,
)
from .docfile import ScenarioDocument, dump_document, load_document, parse_document
from .errors import (
    AssumptionViolated,
    DegenerateThreshold,
    DocumentError,
    InputMismatch,
    InvalidModel,
    NoSignChange,
    PivotOutOfRange,
    PTSolverError,
)
from .market import (
    MarketScenario,
    OutcomeDecision,
    Provenance,
    SensingDistribution,
    SolveResult,
    optimal_leasing,
    profit,
    profit_after_leasing,
    tradeoff_metrics,
)
from .oracle import OracleConfig, VerificationReport, maximize_utility, verify
from .prospect import ReferencePoint, RiskProfile, pt_utility, utility_curve, value, weight
from .sweep import Axis, SweepSpec, SweepTable, run_sweep, sensing_threshold

__version__ = "0.1.0"

__all__ = [
    "AssumptionViolated",
    "Axis",
    "DecisionIndicators",
    "DegenerateThreshold",
    "DocumentError",
    "InputMismatch",
    "InvalidModel",
    "MarketScenario",
    "NoSignChange",
    "OracleConfig",
    "OutcomeDecision",
    "PTSolverError",
    "PivotOutOfRange",
    "Provenance",
    "ReferencePoint",
    "RiskProfile",
    "ScenarioDocument",
    "SensingDistribution",
    "SolveResult",
    "SweepSpec",
    "SweepTable",
    "VerificationReport",
    "decision_indicators",
    "dump_document",
    "find_pivot_index",
    "g",
    "g_root",
    "load_document",
    "maximize_utility",
    "optimal_leasing",
    "parse_document",
    "profit",
    "profit_after_leasing",
    "pt_utility",
    "refpoint_threshold",
    "riskfree_threshold",
    "run_sweep",
    "sensing_threshold",
    "solve_binary_refpoint",
    "solve_binary_riskfree",
    "solve_closed_form",
    "solve_eut",
    "solve_pt_riskfree",
    "tradeoff_metrics",
    "utility_curve",
    "value",
    "verify",
    "weight",
]
