import json

import pytest

from mulholland import io
from mulholland.youngfn import (AnalyticCharacteristic, Power, build_example_omega,
                                build_interpolation_young)

OMEGA_SPEC = {"kind": "piecewise", "L": 0.6931471805599453,
              "slope_rule": {"type": "geometric", "limit": 2.0, "deficit": 1.0, "ratio": 0.5}}


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return p


def test_parse_examples():
    assert io.parse_young(OMEGA_SPEC)(4.0) == build_example_omega()(4.0)
    assert io.parse_young({"kind": "power", "c": 0.25, "p": 3}) == Power(0.25, 3.0)
    assert io.parse_young({"kind": "analytic", "name": "sinh"}) == AnalyticCharacteristic("sinh")


def test_list_rule_appends_limit():
    phi = io.parse_young({"kind": "piecewise",
                          "slope_rule": {"type": "list", "values": [1, 1.5], "limit": 2}})
    assert phi.chi.slopes.values == (1.0, 1.5, 2.0)
    with pytest.raises(io.SpecError, match="below the last slope"):
        io.parse_young({"kind": "piecewise",
                        "slope_rule": {"type": "list", "values": [1, 3], "limit": 2}})


@pytest.mark.parametrize("phi", [build_example_omega(), build_interpolation_young(2.5),
                                 Power(0.5, 2.5), AnalyticCharacteristic("log1p")], ids=repr)
def test_dump_parse_roundtrip(phi):
    assert io.parse_young(json.loads(json.dumps(io.dump_young(phi)))) == phi


def test_field_errors_name_field_and_line(tmp_path):
    p = write(tmp_path, "bad.json", '{"kind": "power",\n "c": 0.25,\n "p": "x"}')
    with pytest.raises(io.SpecError, match=r"bad.json:3: field 'p'"):
        io.load_young(p)
    p = write(tmp_path, "bad2.json", '{"kind": "piecewise",\n "slope_rule": {"type": "geometric",'
                                     '\n "limit": 2, "deficit": 1, "ratio": 1.5}}')
    with pytest.raises(io.SpecError, match="slope_rule"):
        io.load_young(p)


def test_syntax_errors_report_line_and_column(tmp_path):
    p = write(tmp_path, "s.json", '{"kind": "power",\n "c": 0.25\n "p": 3}')
    with pytest.raises(io.SpecError, match=r"s.json:3:2"):
        io.load_young(p)


def test_unknown_kind_and_missing_file(tmp_path):
    with pytest.raises(io.SpecError, match="kind"):
        io.parse_young({"kind": "spline"})
    with pytest.raises(io.SpecError, match="cannot read"):
        io.load_young(tmp_path / "nope.json")


def test_measure_csv(tmp_path):
    p = write(tmp_path, "m.csv", "weight,value\n1,2\n0.5,-3\n")
    mu, funcs = io.load_measure(p)
    assert mu.weights == (1.0, 0.5) and funcs[0].values == (2.0, -3.0)
    p = write(tmp_path, "pair.csv", "1,2,3\n# comment\n0.5,0,1\n")
    mu, (f, g) = io.load_measure(p)
    assert f.values == (2.0, 0.0) and g.values == (3.0, 1.0)
    p = write(tmp_path, "neg.csv", "1,2\n-1,3\n")
    with pytest.raises(io.SpecError, match="neg.csv:2"):
        io.load_measure(p)
    p = write(tmp_path, "ragged.csv", "1,2\n1,3,4\n")
    with pytest.raises(io.SpecError, match="columns"):
        io.load_measure(p)


def test_sequences(tmp_path):
    assert io.parse_sequence("1, 0.5,0 ,2") == [1.0, 0.5, 0.0, 2.0]
    with pytest.raises(io.SpecError):
        io.parse_sequence("1,a")
    assert io.load_sequence(write(tmp_path, "s.csv", "3,4,5\n")) == [3.0, 4.0, 5.0]


def test_ladders(tmp_path):
    assert io.load_ladder("interpolation")[2] == build_interpolation_young(2 + 2 / 3)
    p = write(tmp_path, "c.json", json.dumps({"ladder": "constant", "young": OMEGA_SPEC}))
    assert io.load_ladder(p)[7](4.0) == build_example_omega()(4.0)
    p = write(tmp_path, "l.json", json.dumps({"levels": [{"kind": "power", "c": 1, "p": 2},
                                                         {"kind": "power", "c": 1, "p": 3}]}))
    ladder = io.load_ladder(p)
    assert ladder[1] == Power(1.0, 2.0) and ladder[2] == ladder[9] == Power(1.0, 3.0)
    with pytest.raises(io.SpecError):
        io.load_ladder("no-such-ladder")
