import json
import pathlib

import jsonschema
import pytest

import stardmp

SCHEMA = json.loads((pathlib.Path(__file__).parents[2] / "docs" / "report.schema.json").read_text())

RING = {"kind": "gaussian-rational-matrix", "n": 2, "involution": "transpose"}
A = {"ring": RING, "value": [["i", "0"], ["0", "0"]]}
B = {"ring": RING, "value": [["0", "0"], ["-1", "0"]]}
S = {"ring": RING, "value": [["i", "0"], ["-1", "0"]]}
Z = {"ring": {"kind": "zn", "n": 12}, "value": 8}


@pytest.mark.parametrize(
    "call",
    [
        lambda: stardmp.inverse(A, "pseudo-core"),
        lambda: stardmp.inverse(S, "mp"),
        lambda: stardmp.inverse(Z, "core"),
        lambda: stardmp.classify(A),
        lambda: stardmp.classify(Z),
        lambda: stardmp.decompose(A),
        lambda: stardmp.decompose(S),
        lambda: stardmp.decompose(A, "core-nilpotent"),
        lambda: stardmp.order(A, B),
        lambda: stardmp.order(Z, Z, "core"),
        lambda: stardmp.verify(ids=["E2.17", "T2.7", "T4.2"], universes=["fixture", "zp:2:2"]),
    ],
)
def test_reports_match_schema(call):
    _, report = call()
    jsonschema.validate(report, SCHEMA)
