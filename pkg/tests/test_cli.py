import json
import subprocess
import sys

import jsonschema
import pytest

from corpus import BLOWUP, P2
from toric_sections.cli import run
from toric_sections.formats import RESULT_SCHEMA
from toric_sections.series import EhrhartSeries


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj), encoding="utf-8")
    return str(path)


def fan_obj(fan):
    return {"rank": fan.rank, "rays": [list(r) for r in fan.rays],
            "max_cones": [list(c) for c in fan.max_cones]}


@pytest.fixture
def files(tmp_path):
    f = {
        "p2": write(tmp_path, "p2.json", fan_obj(P2)),
        "blowup": write(tmp_path, "blowup.json", fan_obj(BLOWUP)),
        "single": write(tmp_path, "single.json",
                        {"rank": 2, "rays": [[1, 0], [0, 1], [-1, -1]], "max_cones": [[0, 1]]}),
        "nonprim": write(tmp_path, "nonprim.json",
                         {"rank": 2, "rays": [[2, 0], [0, 1]], "max_cones": [[0, 1]]}),
        "qcone": write(tmp_path, "qcone.json",
                       {"rank": 2, "rays": [[1, 0], [1, 2]], "max_cones": [[0, 1]]}),
        "o1": write(tmp_path, "o1.json", {"coefficients": [1, 0, 0]}),
        "zero": write(tmp_path, "zero.json", {"coefficients": [0, 0, 0]}),
        "bad01": write(tmp_path, "d01.json", {"coefficients": [0, 1]}),
        "pt": write(tmp_path, "pt.json", {"coefficients": [0, 0, 0, 1]}),
        "empty": write(tmp_path, "empty.json", {"coefficients": [0, 0, 0, -1]}),
        "segment": write(tmp_path, "segment.json",
                         {"rank": 1, "constraints": [{"normal": [1], "rhs": 0},
                                                     {"normal": [-2], "rhs": -1}]}),
    }
    return f


def run_json(*argv):
    code, out, err = run(list(argv) + ["--format", "json"])
    obj = json.loads(out)
    jsonschema.validate(obj, RESULT_SCHEMA)
    return code, obj


def test_validate(files):
    code, out, _ = run(["validate", files["p2"]])
    assert code == 0 and out.strip().endswith("valid, complete")
    code, out, _ = run(["validate", files["single"]])
    assert code == 2 and out.strip().endswith("incomplete")
    code, out, _ = run(["validate", files["nonprim"]])
    assert code == 1 and "non-primitive ray 0" in out
    code, obj = run_json("validate", files["p2"])
    assert obj["result"]["checks"] == {"indices": True, "primitive_rays": True,
                                       "strong_convexity": True, "face_intersections": True,
                                       "completeness": True}


def test_cartier(files):
    code, obj = run_json("cartier", files["p2"], files["o1"])
    assert code == 0
    assert [row["m"] for row in obj["result"]["cones"]] == [[-1, 0], [0, 0], [-1, 1]]
    code, obj = run_json("cartier", files["p2"], files["zero"])
    assert [row["m"] for row in obj["result"]["cones"]] == [[0, 0]] * 3
    code, out, _ = run(["cartier", files["qcone"], files["bad01"]])
    assert code == 2 and "cone 0 [0, 1]" in out and "-1/2" in out
    code, obj = run_json("cartier", files["qcone"], files["bad01"])
    assert obj["result"] == {"cartier": False, "cone_index": 0, "cone": [0, 1],
                             "witness": ["0", "-1/2"]}


def test_count_upto_equals_individual(files):
    code, obj = run_json("count", files["p2"], files["o1"], "--upto", "6")
    assert code == 0
    upto = [row["dim"] for row in obj["result"]["counts"]]
    single = [run_json("count", files["p2"], files["o1"], "--n", str(n))[1]["result"]["counts"][0]["dim"]
              for n in range(7)]
    assert upto == single == [(n + 1) * (n + 2) // 2 for n in range(7)]


def test_polytope(files):
    code, obj = run_json("polytope", files["p2"], files["o1"], "--n", "1")
    r = obj["result"]
    assert code == 0 and r["dim"] == 2
    assert r["vertices"] == [["-1", "0"], ["-1", "1"], ["0", "0"]]
    assert r["lattice_points"] == [[-1, 0], [-1, 1], [0, 0]]
    assert r["h_representation"]["constraints"][0] == {"normal": [1, 0], "rhs": -1}
    code, obj = run_json("polytope", "--polytope", files["segment"], "--n", "1")
    assert obj["result"]["vertices"] == [["0"], ["1/2"]]


def test_generators(files):
    code, out, _ = run(["generators", files["p2"], files["o1"]])
    assert code == 0 and out.startswith("3 generators")
    code, obj = run_json("generators", files["p2"], files["o1"])
    assert [g["degree"] for g in obj["result"]["generators"]] == [1, 1, 1]
    code, obj = run_json("generators", files["blowup"], files["pt"])
    assert obj["result"]["generators"] == [{"point": [0, 0], "degree": 1}]
    code, out, _ = run(["generators", files["blowup"], files["empty"]])
    assert code == 0 and out.strip() == "R = K (no positive-degree sections)"


def test_series(files):
    code, obj = run_json("series", files["p2"], files["o1"])
    s = obj["result"]["series"]
    assert (s["numerator"], s["period"], s["pole_order"]) == ([1], 1, 3)
    code, obj = run_json("series", "--polytope", files["segment"])
    s = obj["result"]["series"]
    assert (s["numerator"], s["period"], s["pole_order"]) == ([1, 1], 2, 2)
    assert obj["result"]["quasi_polynomial"]["coefficients"] == [["1", "1/2"], ["1/2", "1/2"]]
    # round trip: the serialized series expands to the counts
    series = EhrhartSeries(tuple(s["numerator"]), s["period"], s["pole_order"])
    assert series.expand(10) == [n // 2 + 1 for n in range(11)]
    code, obj = run_json("series", files["blowup"], files["empty"])
    assert obj["result"]["series"]["numerator"] == [1]
    assert obj["result"]["series"]["pole_order"] == 0


def test_json_is_deterministic(files):
    for argv in (["series", files["p2"], files["o1"]],
                 ["generators", files["blowup"], files["pt"]],
                 ["polytope", files["p2"], files["o1"], "--n", "3"]):
        outs = {run(argv + ["--format", "json"])[1] for _ in range(3)}
        assert len(outs) == 1


def test_input_digest_ignores_whitespace(tmp_path, files):
    spaced = tmp_path / "spaced.json"
    spaced.write_text(json.dumps(fan_obj(P2), indent=4), encoding="utf-8")
    a = run_json("validate", files["p2"])[1]["inputs"]["fan"]
    b = run_json("validate", str(spaced))[1]["inputs"]["fan"]
    assert a == b


def test_invalid_inputs(tmp_path, files):
    code, _, _ = run(["series", files["p2"], write(tmp_path, "short.json", {"coefficients": [1]})])
    assert code == 1
    code, _, _ = run(["count", files["p2"], write(tmp_path, "flt.json", {"coefficients": [1.5, 0, 0]}),
                      "--n", "1"])
    assert code == 1
    code, _, _ = run(["series", files["p2"], files["o1"], "--polytope", files["segment"]])
    assert code == 1
    code, _, _ = run(["series", "--polytope",
                      write(tmp_path, "ray.json", {"rank": 1, "constraints": [{"normal": [1], "rhs": 0}]})])
    assert code == 1
    code, _, _ = run(["validate", str(tmp_path / "missing.json")])
    assert code == 1
    code, _, _ = run(["count", files["single"], files["o1"], "--n", "1"])
    assert code == 2


def test_non_cartier_warning(tmp_path):
    wp = write(tmp_path, "wp.json", {"rank": 2, "rays": [[1, 0], [0, 1], [-1, -2]],
                                     "max_cones": [[0, 1], [1, 2], [2, 0]]})
    d = write(tmp_path, "d.json", {"coefficients": [0, 0, 1]})
    code, out, err = run(["generators", wp, d, "--format", "json"])
    obj = json.loads(out)
    assert code == 0 and "not Cartier" in err
    assert obj["result"]["cartier"] is False and obj["warnings"]
    assert [g["degree"] for g in obj["result"]["generators"]] == [1, 1, 2]


def test_height_cap(monkeypatch, tmp_path):
    seg = write(tmp_path, "s7.json", {"rank": 1, "constraints": [{"normal": [1], "rhs": 0},
                                                                {"normal": [-7], "rhs": -1}]})
    monkeypatch.setenv("TORIC_MAX_HEIGHT", "3")
    code, out, _ = run(["generators", "--polytope", seg])
    assert code == 3 and "TORIC_MAX_HEIGHT=7" in out
    monkeypatch.setenv("TORIC_MAX_HEIGHT", "7")
    code, out, _ = run(["generators", "--polytope", seg])
    assert code == 0 and "degree 7  [1]" in out


def test_console_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "toric_sections", "validate", files["p2"]],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "valid, complete" in proc.stdout
