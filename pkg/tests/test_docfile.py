import pytest

from ptsolver.docfile import dump_document, load_document, parse_document, preset_names
from ptsolver.errors import DocumentError

GOOD = """\
# comment line
[scenario]
pi = 8
c_l = 5      ; inline comment
c_s = 2
demand = 10

[distribution]
outcome = 0.2, 0.5
outcome = 0.8, 0.5

[profile]
lambda = 2.25
beta = 0.5
gamma = 0.8
mu = 0.7

[reference]
kind = custom
value = 12.5
"""


def test_parse_good():
    doc = parse_document(GOOD)
    assert doc.scenario.leasing_cost == 5.0
    assert doc.dist.alphas == (0.2, 0.8)
    assert doc.profile.lam == 2.25 and doc.profile.mu == 0.7
    assert doc.rp.kind == "custom" and doc.rp.value == 12.5
    assert doc.sweep is None


def test_defaults():
    text = GOOD.split("[profile]")[0]
    doc = parse_document(text)
    assert doc.profile.is_eut and doc.rp.kind == "risk_free"


@pytest.mark.parametrize("bad, line, fragment", [
    (GOOD.replace("outcome = 0.8, 0.5", "outcome = 1.2, 0.5"), 10, "alpha out of [0,1]"),
    (GOOD.replace("c_s = 2", "c_s = two"), 5, "expected a number"),
    (GOOD.replace("c_s = 2", "c_s = 7"), 2, "c_s"),
    (GOOD.replace("mu = 0.7", "mu = 0.7\nmu = 0.8"), 17, "duplicate key"),
    (GOOD.replace("[reference]", "[refrence]"), 18, "unknown section"),
    (GOOD.replace("pi = 8", "pi 8"), 3, "key = value"),
])
def test_line_numbered_errors(bad, line, fragment):
    with pytest.raises(DocumentError) as info:
        parse_document(bad)
    assert info.value.lineno == line
    assert fragment in str(info.value)
    assert str(info.value).startswith(f"line {line}: ")


def test_round_trip_exact():
    text = GOOD.replace("lambda = 2.25", "lambda = 1.1000000000000001").replace("pi = 8", "pi = 8.123456789012345")
    doc = parse_document(text)
    again = parse_document(dump_document(doc))
    assert again == doc
    assert dump_document(again) == dump_document(doc)


@pytest.mark.parametrize("name", preset_names())
def test_presets_round_trip(name):
    doc = load_document(name)
    assert parse_document(dump_document(doc)) == doc


def test_sweep_section():
    doc = load_document("fig4")
    assert [a.name for a in doc.sweep.axes] == ["p1", "mu"]
    assert doc.sweep.outputs == ("threshold_r",)
    bad = dump_document(doc).replace("mu, 0.4, 1.0, 3", "mu, 0.4, 1.0, 1")
    with pytest.raises(DocumentError, match="steps >= 2"):
        parse_document(bad)


def test_missing_source():
    with pytest.raises(DocumentError):
        load_document("no-such-preset")
