import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import CATALOG
from liecomplete import catalog
from liecomplete.certificate import Certificate
from liecomplete.errors import AxiomError, ParseError
from liecomplete.fields import GF, QQ, Field
from liecomplete.forms import killing_form
from liecomplete.io import Report, algebra_from_json, algebra_to_json, parse_algebra_file, write_algebra_file

FIXTURES = __import__("pathlib").Path(__file__).parent / "fixtures"


# -- fields ---------------------------------------------------------------

def test_field_parsing():
    assert QQ.parse("3/2") == Fraction(3, 2)
    assert QQ.parse("-2") == -2
    assert GF(5).parse("7") == 2
    assert GF(5).parse("-1") == 4
    assert GF(5).format(GF(5)(12)) == "2"
    assert QQ.format(Fraction(-3, 4)) == "-3/4"


def test_field_rejects_inexact():
    with pytest.raises(TypeError):
        QQ(0.5)
    with pytest.raises(TypeError):
        QQ(True)
    with pytest.raises(ValueError):
        GF(4)


def test_field_json_round_trip():
    for F in (QQ, GF(2), GF(7)):
        assert Field.from_json(F.to_json()) == F


@given(st.integers(1, 10**6), st.sampled_from([2, 3, 5, 7, 101]))
def test_inverse_mod_p(x, p):
    F = GF(p)
    a = F(x)
    if a:
        assert F.norm(a * F.inv(a)) == 1


# -- algebra files --------------------------------------------------------

def test_sl2_fixture():
    L, form = parse_algebra_file(FIXTURES / "sl2.json")
    assert L == catalog.sl(2)
    assert form.gram == killing_form(L).gram


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_json_round_trip(name):
    L = CATALOG[name]
    back, form = algebra_from_json(json.loads(json.dumps(algebra_to_json(L))))
    assert back == L and back.labels == L.labels and form is None


def _sl2_data():
    return algebra_to_json(catalog.sl(2))


def test_index_out_of_range():
    data = _sl2_data()
    data["table"][0]["coeffs"].append([9, "1"])
    with pytest.raises(ParseError, match=r"k=9") as info:
        algebra_from_json(data)
    assert "$.table[0].coeffs" in str(info.value)


def test_broken_jacobi_has_witness():
    # [e,f] = e instead of h breaks Jacobi
    data = _sl2_data()
    for entry in data["table"]:
        if (entry["i"], entry["j"]) == (0, 1):
            entry["coeffs"] = [[0, "1"]]
    with pytest.raises(AxiomError) as info:
        algebra_from_json(data)
    assert info.value.witness is not None and len(info.value.witness) == 3


@pytest.mark.parametrize("mutate, where", [
    (lambda d: d.pop("dim"), "$"),
    (lambda d: d.update(dim=-1), "$.dim"),
    (lambda d: d.update(basis=["a"]), "$.basis"),
    (lambda d: d["table"][0].update(i=2, j=1), "$.table[0]"),
    (lambda d: d["table"][0]["coeffs"][0].__setitem__(1, 1.5), "$.table[0].coeffs[0]"),
    (lambda d: d["table"][0]["coeffs"][0].__setitem__(1, "1/0"), "$.table[0].coeffs[0]"),
    (lambda d: d.update(field={"kind": "prime", "p": 6}), "$.field"),
    (lambda d: d.update(form=[["1"]]), "$.form"),
])
def test_parse_errors_are_located(mutate, where):
    data = _sl2_data()
    mutate(data)
    with pytest.raises(ParseError) as info:
        algebra_from_json(data)
    assert where in str(info.value)


def test_io_and_syntax_errors_are_distinct(tmp_path):
    with pytest.raises(ParseError, match="cannot read"):
        parse_algebra_file(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 3,\n  "field": }')
    with pytest.raises(ParseError, match=r"invalid JSON") as info:
        parse_algebra_file(bad)
    assert "bad.json:2:" in str(info.value)


def test_write_then_parse(tmp_path):
    L = catalog.current_sl2(2, GF(5))
    path = tmp_path / "c.json"
    write_algebra_file(path, L)
    assert parse_algebra_file(path)[0] == L


# -- reports and certificates ---------------------------------------------

def test_report_round_trip():
    cert = Certificate("x")
    cert.add("a", True, witness=(Fraction(1, 2), 3), dim=4)
    cert.add("b", False, informational=True)
    rep = Report(["verify", "f.json"], "abc", {"certificate": cert.to_json()}, cert.verdict)
    back = Report.from_json(json.loads(rep.dumps()))
    assert back == rep
    assert Certificate.from_json(back.results["certificate"]).verdict == cert.verdict == "true"


def test_certificate_verdicts():
    cert = Certificate("x")
    cert.add("a", True)
    assert cert.verdict == "true"
    cert.add("b", False)
    assert cert.verdict == "false" and not cert
    cert.applicable = False
    assert cert.verdict == "not_applicable"
