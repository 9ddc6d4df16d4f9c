"""JSON and DOT serialization of graphs.

JSON documents look like ``{"n":6,"chords":[[0,2],[0,3],[0,4]]}``: 0-based
vertices, each chord as ``[u, v]`` with ``u < v``, chords sorted, no whitespace.
``tcl`` and ``ears`` follow when metadata is requested. The schema ships as
``chordspan/schema/graph.schema.json``.
"""

from __future__ import annotations

import json
import math
from functools import lru_cache
from importlib import resources
from typing import Optional

import jsonschema

from chordspan.errors import ParseError
from chordspan.graph_core import MopGraph, count_ears, tcl, validate


@lru_cache(maxsize=1)
def graph_schema() -> dict:
    text = resources.files("chordspan").joinpath("schema/graph.schema.json").read_text()
    return json.loads(text)


def to_document(g: MopGraph, include_metadata: bool = False, name: Optional[str] = None) -> dict:
    doc = {"n": g.n, "chords": [list(c) for c in g.chords]}
    if name is not None:
        doc["name"] = name
    if include_metadata:
        doc["tcl"] = tcl(g)
        doc["ears"] = count_ears(g)
    return doc


def to_json(g: MopGraph, include_metadata: bool = False, name: Optional[str] = None) -> str:
    return json.dumps(to_document(g, include_metadata, name), separators=(",", ":"))


def from_document(doc) -> MopGraph:
    try:
        jsonschema.validate(doc, graph_schema())
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ParseError(f"schema violation at {where}: {exc.message}") from exc
    g = validate(doc["n"], doc["chords"])
    if "tcl" in doc and doc["tcl"] != tcl(g):
        raise ParseError(f"document says tcl={doc['tcl']} but the chords give {tcl(g)}")
    if "ears" in doc and doc["ears"] != count_ears(g):
        raise ParseError(f"document says ears={doc['ears']} but the chords give {count_ears(g)}")
    return g


def from_json(text: str) -> MopGraph:
    """Parse and validate a graph document. Validation errors propagate unchanged."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return from_document(doc)


def _fmt(x: float) -> str:
    return f"{round(x, 3) + 0.0:.3f}"


def to_dot(g: MopGraph, name: str = "mop") -> str:
    """Graphviz text with pinned circle positions (vertex 0 on top, clockwise).

    Render with ``neato -n`` or ``neato`` (positions carry ``!``).
    """
    n = g.n
    radius = max(1.5, n / 6)
    lines = [
        f"graph {name} {{",
        "  layout=neato;",
        "  node [shape=circle, fixedsize=true, width=0.35, fontsize=10];",
    ]
    for i in range(n):
        theta = math.pi / 2 - 2 * math.pi * i / n
        x, y = radius * math.cos(theta), radius * math.sin(theta)
        lines.append(f'  {i} [pos="{_fmt(x)},{_fmt(y)}!"];')
    for i in range(n):
        lines.append(f"  {i} -- {(i + 1) % n} [style=solid, penwidth=2];")
    for u, v in g.chords:
        d = v - u
        lines.append(f'  {u} -- {v} [style=dashed, color="#1f77b4", label="{min(d, n - d)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
