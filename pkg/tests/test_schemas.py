"""JSON outputs validate against their declared schemas."""

import json

import jsonschema
import pytest

from cupcalc import diagrams as D
from cupcalc import tableaux as T
from cupcalc.cli import run

DIAGRAM_SCHEMA = {
    "type": "object",
    "properties": {
        "k": {"type": "integer", "minimum": 1},
        "cups": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "from": {"type": "integer"},
                    "to": {"type": "integer"},
                    "dotted": {"type": "boolean"},
                },
                "required": ["from", "to", "dotted"],
                "additionalProperties": False,
            },
        },
        "rays": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "at": {"type": "integer"},
                    "dotted": {"type": "boolean"},
                },
                "required": ["at", "dotted"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["k", "cups", "rays"],
    "additionalProperties": False,
}

TABLEAU_SCHEMA = {
    "type": "object",
    "properties": {
        "shape": {
            "type": "array",
            "items": {"type": "integer", "minimum": 0},
            "minItems": 2,
            "maxItems": 2,
        },
        "dominoes": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "label": {"type": "integer", "minimum": 1},
                    "cells": {
                        "type": "array",
                        "items": {
                            "type": "array",
                            "items": {"type": "integer", "minimum": 1},
                            "minItems": 2,
                            "maxItems": 2,
                        },
                        "minItems": 2,
                        "maxItems": 2,
                    },
                    "sign": {"enum": ["+", "-", None]},
                },
                "required": ["label", "cells", "sign"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["shape", "dominoes"],
    "additionalProperties": False,
}

TABLE_SCHEMA = {
    "type": "object",
    "properties": {
        "k": {"type": "integer"},
        "parity": {"enum": ["even", "odd"]},
        "diagrams": {"type": "array", "items": {"type": "string"}},
        "table": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {
                    "type": "array",
                    "items": {"type": "string", "pattern": "^[v^]+$"},
                },
            },
        },
    },
    "required": ["k", "parity", "diagrams", "table"],
    "additionalProperties": False,
}


@pytest.mark.parametrize("k", range(1, 6))
def test_diagram_json_schema(k):
    for d in D.enumerate_diagrams(k, "any", "all"):
        jsonschema.validate(json.loads(D.render(d, "json")), DIAGRAM_SCHEMA)


def test_tableau_json_schema():
    for shape in [(3, 3), (4, 4), (5, 3)]:
        for t in T.enumerate_signed(shape):
            jsonschema.validate(T.tableau_to_json_dict(t), TABLEAU_SCHEMA)
        for S in T.enumerate_dt(shape):
            jsonschema.validate(T.tableau_to_json_dict(S), TABLEAU_SCHEMA)


def test_intersect_json_schema(capsys):
    assert run(["intersect", "--k", "5", "--parity", "even"]) == 0
    obj = json.loads(capsys.readouterr().out)
    jsonschema.validate(obj, TABLE_SCHEMA)


def test_cohomology_json_graded_entries(capsys):
    assert run(["cohomology", "centre", "--k", "4", "--format", "json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    for half in ("even", "odd"):
        for entry in obj[half]["graded"]:
            assert set(entry) == {"degree", "dim"}
