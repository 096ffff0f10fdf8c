"""JSON documents for graphs, matroids, polynomials and length maps.

The kind of a document is read off its top-level keys:
graph {"vertices", "edges"}, matroid {"rank", "ground", "rows"},
polynomial {"vars", "terms"}.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import InputError, MatroidError
from .matroid import Graph, LengthMap, RegularMatroid, incidence_matroid
from .polynomial import MultilinearPoly

KINDS = {
    "graph": {"vertices", "edges"},
    "matroid": {"rank", "ground", "rows"},
    "poly": {"vars", "terms"},
}


def loads(text: str, source: str = "<input>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def read_json(path):
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text, str(path))


def detect_kind(doc) -> str:
    if not isinstance(doc, dict):
        raise InputError("top level must be a JSON object")
    keys = set(doc)
    hits = [k for k, req in KINDS.items() if req <= keys]
    if len(hits) > 1:
        raise InputError(f"ambiguous document: keys match {', '.join(hits)}")
    if not hits:
        raise InputError(f"unrecognised document with keys {sorted(keys)}")
    extra = keys - KINDS[hits[0]]
    if extra:
        raise InputError(f"{hits[0]} document has unexpected keys {sorted(extra)}")
    return hits[0]


def graph_to_json(g: Graph) -> dict:
    return {"vertices": g.vertex_count, "edges": [[lab, u, v] for lab, (u, v) in zip(g.labels, g.edges)]}


def graph_from_json(doc) -> Graph:
    v = doc["vertices"]
    if isinstance(v, bool) or not isinstance(v, int):
        raise InputError("vertices: expected an integer")
    if not isinstance(doc["edges"], list):
        raise InputError("edges: expected a list")
    labels, edges = [], []
    for i, e in enumerate(doc["edges"]):
        if not (isinstance(e, list) and len(e) == 3 and isinstance(e[0], str)
                and all(isinstance(x, int) and not isinstance(x, bool) for x in e[1:])):
            raise InputError(f"edges[{i}]: expected [label, u, v]")
        labels.append(e[0])
        edges.append((e[1], e[2]))
    try:
        return Graph(v, tuple(edges), tuple(labels))
    except MatroidError as exc:
        raise InputError(f"graph: {exc}") from None


def matroid_to_json(m: RegularMatroid) -> dict:
    return {"rank": m.rank, "ground": list(m.ground), "rows": [list(r) for r in m.matrix]}


def matroid_from_json(doc) -> RegularMatroid:
    r, ground, rows = doc["rank"], doc["ground"], doc["rows"]
    if isinstance(r, bool) or not isinstance(r, int):
        raise InputError("rank: expected an integer")
    if not isinstance(ground, list) or not all(isinstance(g, str) for g in ground):
        raise InputError("ground: expected a list of strings")
    if not isinstance(rows, list) or len(rows) != r:
        raise InputError(f"rows: expected {r} rows")
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != len(ground):
            raise InputError(f"rows[{i}]: expected {len(ground)} entries")
        for j, x in enumerate(row):
            if isinstance(x, bool) or x not in (-1, 0, 1):
                raise InputError(f"rows[{i}][{j}]: entry must be -1, 0 or 1")
    try:
        return RegularMatroid(tuple(map(tuple, rows)), tuple(ground))
    except MatroidError as exc:
        raise InputError(f"matroid: {exc}") from None


def parse_document(doc):
    """(kind, object) for a decoded document."""
    kind = detect_kind(doc)
    if kind == "graph":
        return kind, graph_from_json(doc)
    if kind == "matroid":
        return kind, matroid_from_json(doc)
    return kind, MultilinearPoly.from_json(doc)


def load_input(path):
    return parse_document(read_json(path))


def as_matroid(kind, obj) -> RegularMatroid:
    if kind == "graph":
        return incidence_matroid(obj)
    if kind == "matroid":
        return obj
    raise InputError("a graph or matroid is required here, not a polynomial")


def parse_lengths(text_or_path) -> LengthMap:
    """LengthMap from inline JSON or from a file holding it."""
    s = str(text_or_path).strip()
    doc = loads(s, "--lengths") if s.startswith("{") else read_json(s)
    if not isinstance(doc, dict):
        raise InputError("length map must be a JSON object")
    for k, v in doc.items():
        if isinstance(v, bool) or not isinstance(v, int) or v < 1:
            raise InputError(f"{k}: length must be a positive integer")
    return LengthMap(doc)


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
