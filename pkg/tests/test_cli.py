import io
import json

import jsonschema
import pytest

from drgkit.cli import run
from drgkit.graph import read_edge_list
from drgkit.schemas import SCHEMAS

from . import oracles


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def structured(*argv):
    code, out, err = call(*argv, "--format", "structured")
    assert code == 0, err
    return json.loads(out)


def human_fields(text):
    fields = {}
    for line in text.splitlines():
        key, _, val = line.partition(": ")
        fields[key] = val
    return fields


def expected_human(doc, prefix=""):
    """Independent flattening of a structured document."""
    out = {}
    if isinstance(doc, dict):
        if not doc and prefix:
            out[prefix] = "{}"
        for k, v in doc.items():
            out.update(expected_human(v, f"{prefix}.{k}" if prefix else k))
    elif isinstance(doc, list) and any(isinstance(v, (dict, list)) for v in doc):
        for i, v in enumerate(doc):
            out.update(expected_human(v, f"{prefix}[{i}]"))
        if not doc:
            out[prefix] = "[]"
    elif isinstance(doc, list):
        out[prefix] = ", ".join(_fmt(v) for v in doc)
    else:
        out[prefix] = _fmt(doc)
    return out


def _fmt(v):
    if v is None:
        return "n/a"
    if v is True:
        return "yes"
    if v is False:
        return "no"
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)


# --- examples ---------------------------------------------------------------

def test_geometry_triangular_25():
    doc = structured("geometry", "--family", "triangular:25")
    assert doc["clique_count"] == 25
    assert doc["order_histogram"] == {"24": 25}
    assert doc["membership_histogram"] == {"2": 300}
    assert doc["max_membership"] == 2
    assert doc["delsarte_ratios"] == [1.0] and doc["all_delsarte"] is True


def test_bounds_params_example():
    doc = structured("bounds", "--params", "300,46,23,4")
    lb = doc["entries"]["lambda_bound"]
    assert lb["holds"] is True
    assert lb["margin"] == pytest.approx(73.98, abs=0.01)
    assert lb["case"] == "case-1"


def test_scan_400_lists_t25():
    doc = structured("scan", "--nmax", "400")
    assert [300, 46, 23, 4] in [r["params"] for r in doc["main_satisfiers"]]
    assert doc["filters_active"] == ["identity", "multiplicities"]
    assert doc["unmatched"] == [] and doc["min_unmatched_n"] is None


# --- exit codes -------------------------------------------------------------

@pytest.mark.parametrize(
    "argv, code",
    [
        (["analyze", "--family", "paley:13"], 0),
        (["geometry", "--family", "paley:13"], 1),
        (["geometry", "--family", "lattice:3"], 1),
        (["spectra", "--params", "10,4,1,2"], 1),
        (["generate", "--family", "bogus:3"], 2),
        (["generate"], 2),
        (["bounds"], 2),
        (["analyze", "--family", "hamming:2,3", "--graph", "x"], 2),
        (["bounds", "--params", "1,2,3"], 2),
        (["scan", "--nmax", "10", "--extra-filters", "nope"], 2),
        (["scan", "--nmax", "6000"], 2),
        (["analyze", "--graph", "/nonexistent/file"], 2),
        ([], 2),
    ],
)
def test_exit_codes(argv, code):
    got, out, err = call(*argv)
    assert got == code, err
    if code:
        assert err and not out


def test_scan_bad_table_exits_1(tmp_path):
    path = tmp_path / "t.csv"
    path.write_text("10,4,1,2,exists\n")
    code, _, err = call("scan", "--nmax", "20", "--table", str(path))
    assert code == 1 and "line 1" in err


def test_analyze_irregular_graph_exits_1(tmp_path):
    path = tmp_path / "star.txt"
    path.write_text("n 4\n0 1\n0 2\n0 3\n")
    assert call("analyze", "--graph", str(path))[0] == 1


# --- schemas ----------------------------------------------------------------

SCHEMA_CASES = [
    ("generate", ["--family", "hamming:2,3"]),
    ("generate", ["--family", "sts:7"]),
    ("analyze", ["--family", "triangular:7"]),
    ("analyze", ["--family", "hamming:3,3"]),
    ("analyze", ["--family", "paley:13"]),
    ("geometry", ["--family", "hamming:2,9"]),
    ("geometry", ["--family", "triangular:25", "--t-mode", "corollary"]),
    ("geometry", ["--family", "cliques:3,5"]),
    ("bounds", ["--params", "300,46,23,4"]),
    ("bounds", ["--family", "paley:13"]),
    ("bounds", ["--family", "hamming:3,4"]),
    ("spectra", ["--params", "13,6,2,3"]),
    ("spectra", ["--family", "hamming:3,4"]),
    ("spectra", ["--family", "lattice:5"]),
    ("scan", ["--nmax", "60"]),
    ("scan", ["--nmax", "60", "--extra-filters", "krein,absolute"]),
]


@pytest.mark.parametrize("cmd, args", SCHEMA_CASES)
def test_structured_output_matches_schema(cmd, args):
    doc = structured(cmd, *args)
    jsonschema.validate(doc, SCHEMAS[cmd])


@pytest.mark.parametrize("cmd, args", [c for c in SCHEMA_CASES if c[0] != "generate"])
def test_human_matches_structured(cmd, args):
    doc = structured(cmd, *args)
    code, out, _ = call(cmd, *args)
    assert code == 0
    assert human_fields(out) == expected_human(doc)


@pytest.mark.parametrize("cmd, args", SCHEMA_CASES[:10])
def test_output_is_byte_stable(cmd, args):
    first = call(cmd, *args, "--format", "structured")
    assert call(cmd, *args, "--format", "structured") == first


# --- graph input ------------------------------------------------------------

def test_generate_round_trip(tmp_path):
    code, text, _ = call("generate", "--family", "johnson:6,2")
    assert code == 0
    g = read_edge_list(io.StringIO(text))
    assert (g.n, g.edge_count) == (15, 15 * 8 // 2)
    path = tmp_path / "j62.txt"
    path.write_text(text)
    from_file = structured("analyze", "--graph", str(path))
    from_family = structured("analyze", "--family", "johnson:6,2")
    from_family.pop("family")
    assert from_file.pop("family") is None
    assert from_file == from_family


def test_generate_structured_counts():
    doc = structured("generate", "--family", "hamming:2,3")
    assert doc["vertex_count"] == 9 and doc["edge_count"] == 18 == len(doc["edges"])
    assert doc["expected"] == {"n": 9, "k": 4, "lambda": 1, "mu": 2}


def test_petersen_from_file(tmp_path):
    adj = oracles.petersen_adj()
    edges = sorted({(min(u, v), max(u, v)) for u in range(10) for v in adj[u]})
    path = tmp_path / "petersen.txt"
    path.write_text("n 10\n" + "".join(f"{u} {v}\n" for u, v in edges))
    doc = structured("analyze", "--graph", str(path))
    assert doc["params"] == {"n": 10, "k": 3, "lambda": 0, "mu": 1, "mu_exact": True}
    assert doc["intersection_array"] == {"b": [3, 2], "c": [1, 1]}
    assert doc["claw"]["found"] is True and doc["claw"]["size"] == 3
    spec = structured("spectra", "--graph", str(path))
    seq = spec["standard_sequences"][2]
    assert seq["values"] == [1, "-2/3", "1/6"] and seq["sign_changes"] == 2
