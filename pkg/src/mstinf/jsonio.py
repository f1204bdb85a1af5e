"""JSON space/tree files. Exact values are written as strings ("3", "1/2")."""

from __future__ import annotations

import json
import os
from fractions import Fraction
from pathlib import Path

from .metric_core import MetricFormatError, MetricSpace, normalize_number
from .tree_core import Tree, TreeError

NUMERIC_ENV = "MSTINF_NUMERIC"
NUMERIC_MODES = ("rational", "float")


def numeric_mode(explicit=None) -> str:
    mode = explicit or os.environ.get(NUMERIC_ENV) or "rational"
    if mode not in NUMERIC_MODES:
        raise ValueError(f"numeric mode must be one of {NUMERIC_MODES}, got {mode!r}")
    return mode


def parse_number(x, mode: str = "rational"):
    if isinstance(x, bool):
        raise MetricFormatError(f"boolean is not a number: {x!r}")
    if isinstance(x, str):
        try:
            value = Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise MetricFormatError(f"cannot parse number {x!r}") from exc
    elif isinstance(x, int):
        value = Fraction(x)
    elif isinstance(x, float):
        if x != x:
            raise MetricFormatError("NaN entry")
        if mode == "float":
            return x
        # the decimal literal, not the binary expansion
        value = Fraction(repr(x))
    else:
        raise MetricFormatError(f"not a number: {x!r}")
    return float(value) if mode == "float" else normalize_number(value)


def format_number(x):
    if isinstance(x, float):
        return x
    return str(normalize_number(x))


def space_to_dict(space: MetricSpace) -> dict:
    return {
        "n": space.n,
        "labels": [space.label(i) for i in range(space.n)],
        "dist": [[format_number(x) for x in row] for row in space.dist],
        "numeric": space.numeric,
    }


def space_from_dict(doc: dict, mode: str = "rational", validate: bool = True) -> MetricSpace:
    if not isinstance(doc, dict) or "dist" not in doc:
        raise MetricFormatError("space file needs a 'dist' table")
    rows = doc["dist"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise MetricFormatError("'dist' must be a list of lists")
    table = [[parse_number(x, mode) for x in r] for r in rows]
    if "n" in doc and doc["n"] != len(table):
        raise MetricFormatError(f"'n' is {doc['n']} but the table has {len(table)} rows")
    return MetricSpace(tuple(map(tuple, table)), doc.get("labels"), validate=validate)


def tree_to_dict(T: Tree) -> dict:
    return {"n": T.n, "edges": [list(e) for e in T.sorted_edges()]}


def tree_from_dict(doc: dict) -> Tree:
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise TreeError("tree file needs 'n' and 'edges'")
    try:
        edges = [(int(u), int(v)) for u, v in doc["edges"]]
    except (TypeError, ValueError) as exc:
        raise TreeError("'edges' must be a list of vertex pairs") from exc
    return Tree(int(doc["n"]), frozenset(edges))


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def read_json(path):
    with open(path) as fh:
        return json.load(fh)


def write_json(path, doc):
    Path(path).write_text(dumps(doc))


def load_space(path, mode: str = "rational", validate: bool = True) -> MetricSpace:
    return space_from_dict(read_json(path), mode, validate)


def load_tree(path) -> Tree:
    return tree_from_dict(read_json(path))
