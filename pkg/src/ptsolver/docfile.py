"""Plain-text scenario and sweep documents.

A document is a list of ``[section]`` headers followed by ``key = value``
lines.  ``#`` and ``;`` start comments.  The ``[distribution]`` section is the
only one where a key repeats::

    [scenario]
    pi = 8
    c_l = 5
    c_s = 2
    demand = 10

    [distribution]
    outcome = 0.0, 0.5
    outcome = 1.0, 0.5

    [profile]
    lambda = 1
    beta = 1
    gamma = 1
    mu = 1

    [reference]
    kind = risk_free

Sweep documents add a ``[sweep]`` section (``solver``, ``outputs`` and one or
two ``axis = name, from, to, steps`` lines) and may carry an ``[oracle]``
section (``grid_step``, ``refine_iters``, ``search_upper``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import DocumentError, InvalidModel
from .market import MarketScenario, SensingDistribution
from .oracle import OracleConfig
from .prospect import ReferencePoint, RiskProfile
from .sweep import Axis, SweepSpec

SECTIONS = {
    "scenario": ("pi", "c_l", "c_s", "demand"),
    "distribution": ("outcome",),
    "profile": ("lambda", "beta", "gamma", "mu"),
    "reference": ("kind", "value"),
    "sweep": ("solver", "outputs", "axis"),
    "oracle": ("grid_step", "refine_iters", "search_upper"),
}
REPEATABLE = {("distribution", "outcome"), ("sweep", "axis")}


@dataclass(frozen=True)
class ScenarioDocument:
    scenario: MarketScenario
    dist: SensingDistribution
    profile: RiskProfile
    rp: ReferencePoint
    oracle: OracleConfig = field(default_factory=OracleConfig)
    sweep: SweepSpec | None = None


def _number(text, lineno, what):
    try:
        val = float(text)
    except ValueError:
        raise DocumentError(f"{what}: expected a number, got {text!r}", lineno) from None
    if not math.isfinite(val):
        raise DocumentError(f"{what}: value must be finite", lineno)
    return val


def _tokenize(text: str):
    """Yield (section, key, value, lineno); checks structure only."""
    section = None
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].split(";", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise DocumentError(f"malformed section header {raw.strip()!r}", lineno)
            section = line[1:-1].strip().lower()
            if section not in SECTIONS:
                raise DocumentError(f"unknown section [{section}]", lineno)
            if section in {s for s, _ in seen if _ is None}:
                raise DocumentError(f"duplicate section [{section}]", lineno)
            seen.add((section, None))
            yield section, None, None, lineno
            continue
        if "=" not in line:
            raise DocumentError(f"expected 'key = value', got {raw.strip()!r}", lineno)
        if section is None:
            raise DocumentError("key outside of any section", lineno)
        key, val = (part.strip() for part in line.split("=", 1))
        key = key.lower()
        if key not in SECTIONS[section]:
            raise DocumentError(f"unknown key {key!r} in [{section}]", lineno)
        if (section, key) in seen and (section, key) not in REPEATABLE:
            raise DocumentError(f"duplicate key {key!r} in [{section}]", lineno)
        seen.add((section, key))
        yield section, key, val, lineno


def parse_document(text: str) -> ScenarioDocument:
    """Parse a document; every failure is a :class:`DocumentError` with a line number."""
    data = {name: {} for name in SECTIONS}
    headers = {}
    outcomes, axes = [], []
    last_line = 0
    for section, key, val, lineno in _tokenize(text):
        last_line = lineno
        if key is None:
            headers[section] = lineno
        elif (section, key) == ("distribution", "outcome"):
            outcomes.append((val, lineno))
        elif (section, key) == ("sweep", "axis"):
            axes.append((val, lineno))
        else:
            data[section][key] = (val, lineno)

    for required in ("scenario", "distribution"):
        if required not in headers:
            raise DocumentError(f"missing section [{required}]", last_line or None)

    sc = data["scenario"]
    for key in SECTIONS["scenario"]:
        if key not in sc:
            raise DocumentError(f"[scenario] is missing {key!r}", headers["scenario"])
    nums = {k: _number(v, ln, k) for k, (v, ln) in sc.items()}
    try:
        scenario = MarketScenario(nums["c_s"], nums["c_l"], nums["pi"], nums["demand"])
    except InvalidModel as exc:
        raise DocumentError(str(exc), headers["scenario"]) from None

    if not outcomes:
        raise DocumentError("[distribution] has no outcome lines", headers["distribution"])
    pairs = []
    for val, ln in outcomes:
        parts = [p.strip() for p in val.split(",")]
        if len(parts) != 2:
            raise DocumentError(f"outcome needs '<alpha>, <prob>', got {val!r}", ln)
        alpha, prob = _number(parts[0], ln, "alpha"), _number(parts[1], ln, "probability")
        if not 0.0 <= alpha <= 1.0:
            raise DocumentError(f"alpha out of [0,1]: {alpha!r}", ln)
        if not 0.0 < prob <= 1.0:
            raise DocumentError(f"probability out of (0,1]: {prob!r}", ln)
        if pairs and alpha <= pairs[-1][0]:
            raise DocumentError("alphas must be strictly increasing", ln)
        pairs.append((alpha, prob))
    try:
        dist = SensingDistribution.from_pairs(pairs)
    except InvalidModel as exc:
        raise DocumentError(str(exc), outcomes[-1][1]) from None

    pr = data["profile"]
    pnums = {k: _number(v, ln, k) for k, (v, ln) in pr.items()}
    try:
        profile = RiskProfile(
            lam=pnums.get("lambda", 1.0), beta=pnums.get("beta", 1.0),
            gamma=pnums.get("gamma", 1.0), mu=pnums.get("mu", 1.0),
        )
    except InvalidModel as exc:
        raise DocumentError(str(exc), headers.get("profile")) from None

    ref = data["reference"]
    kind, kind_line = ref.get("kind", ("risk_free", headers.get("reference")))
    rvalue = None
    if "value" in ref:
        rvalue = _number(ref["value"][0], ref["value"][1], "value")
    try:
        rp = ReferencePoint(kind.strip().lower(), rvalue)
    except InvalidModel as exc:
        raise DocumentError(str(exc), kind_line) from None

    orc = data["oracle"]
    try:
        oracle = OracleConfig(
            grid_step=_number(*orc["grid_step"], "grid_step") if "grid_step" in orc else None,
            refine_iters=int(_number(*orc["refine_iters"], "refine_iters")) if "refine_iters" in orc else 60,
            search_upper=_number(*orc["search_upper"], "search_upper") if "search_upper" in orc else None,
        )
    except ValueError as exc:
        raise DocumentError(str(exc), headers.get("oracle")) from None

    sweep = None
    if "sweep" in headers:
        sweep = _parse_sweep(data["sweep"], axes, headers["sweep"], scenario, dist, profile, rp, oracle)
    return ScenarioDocument(scenario, dist, profile, rp, oracle, sweep)


def _parse_sweep(sw, axes, header_line, scenario, dist, profile, rp, oracle):
    parsed = []
    for val, ln in axes:
        parts = [p.strip() for p in val.split(",")]
        if len(parts) != 4:
            raise DocumentError(f"axis needs 'name, from, to, steps', got {val!r}", ln)
        steps = _number(parts[3], ln, "steps")
        if steps != int(steps):
            raise DocumentError(f"steps must be an integer, got {parts[3]!r}", ln)
        try:
            parsed.append(Axis(parts[0].lower(), _number(parts[1], ln, "from"),
                               _number(parts[2], ln, "to"), int(steps)))
        except InvalidModel as exc:
            raise DocumentError(str(exc), ln) from None
    solver = sw.get("solver", ("closed", header_line))
    outputs = sw.get("outputs", ("b_s_star", header_line))
    try:
        return SweepSpec(
            scenario, dist, profile, rp, tuple(parsed),
            solver=solver[0].strip().lower(),
            outputs=tuple(o.strip() for o in outputs[0].split(",") if o.strip()),
            oracle=oracle,
        )
    except InvalidModel as exc:
        raise DocumentError(str(exc), header_line) from None


def load_document(source: str | Path) -> ScenarioDocument:
    """Load from a path, or from a bundled preset name such as ``fig3a``."""
    path = Path(source)
    if path.exists():
        return parse_document(path.read_text())
    preset = resources.files("ptsolver") / "presets" / f"{source}.ini"
    if preset.is_file():
        return parse_document(preset.read_text())
    raise DocumentError(f"no such file or preset: {source}")


def preset_names() -> list[str]:
    folder = resources.files("ptsolver") / "presets"
    return sorted(p.name[:-4] for p in folder.iterdir() if p.name.endswith(".ini"))


def dump_document(doc: ScenarioDocument) -> str:
    """Canonical text form; reparses to identical model values."""
    s, p = doc.scenario, doc.profile
    lines = [
        "[scenario]",
        f"pi = {s.price!r}",
        f"c_l = {s.leasing_cost!r}",
        f"c_s = {s.sensing_cost!r}",
        f"demand = {s.demand!r}",
        "",
        "[distribution]",
        *(f"outcome = {a!r}, {q!r}" for a, q in doc.dist.pairs()),
        "",
        "[profile]",
        f"lambda = {p.lam!r}",
        f"beta = {p.beta!r}",
        f"gamma = {p.gamma!r}",
        f"mu = {p.mu!r}",
        "",
        "[reference]",
        f"kind = {doc.rp.kind}",
    ]
    if doc.rp.value is not None:
        lines.append(f"value = {doc.rp.value!r}")
    o = doc.oracle
    if o != OracleConfig():
        lines += ["", "[oracle]"]
        if o.grid_step is not None:
            lines.append(f"grid_step = {o.grid_step!r}")
        lines.append(f"refine_iters = {o.refine_iters}")
        if o.search_upper is not None:
            lines.append(f"search_upper = {o.search_upper!r}")
    if doc.sweep is not None:
        sw = doc.sweep
        lines += ["", "[sweep]", f"solver = {sw.solver}", f"outputs = {', '.join(sw.outputs)}"]
        lines += [f"axis = {a.name}, {a.start!r}, {a.stop!r}, {a.steps}" for a in sw.axes]
    return "\n".join(lines) + "\n"
