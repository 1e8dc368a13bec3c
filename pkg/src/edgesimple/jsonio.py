"""JSON ingestion and export.

Rationals always travel as strings ``"p/q"`` or ``"p"``.  Two input schemas
exist: geometric polytopes (``vertices``) and combinatorial ones (``facets``).
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .errors import ParseError


def parse_rat(s) -> Fraction:
    if isinstance(s, bool):
        raise ParseError(f"not a rational: {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise ParseError(f"rationals must be strings 'p/q', got {s!r}")
    try:
        q = Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational: {s!r}") from exc
    if "." in s or "e" in s.lower():
        raise ParseError(f"decimal input is not accepted: {s!r}")
    return q


def fmt_rat(q) -> str:
    return str(Fraction(q))


def polytope_to_json(p) -> dict:
    from .geometry import CombPolytope

    if isinstance(p, CombPolytope):
        return {
            "dim": p.dim,
            "label": p.label,
            "n_vertices": p.n_vertices,
            "facets": [sorted(f) for f in p.facet_vertex_sets],
        }
    return {
        "dim": p.dim,
        "label": p.label,
        "vertices": [[fmt_rat(x) for x in v] for v in p.vertices],
    }


def polytope_from_json(data: dict):
    from .geometry import CombPolytope, facets_from_vertices

    try:
        dim = int(data["dim"])
        label = str(data.get("label", ""))
        if "facets" in data:
            return CombPolytope(
                dim=dim,
                n_vertices=int(data["n_vertices"]),
                facet_vertex_sets=tuple(frozenset(int(i) for i in f) for f in data["facets"]),
                label=label,
            )
        vertices = [[parse_rat(x) for x in v] for v in data["vertices"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed polytope JSON: {exc}") from exc
    if any(len(v) != dim for v in vertices):
        raise ParseError("vertex length does not match dim")
    return facets_from_vertices(vertices, dim, label=label)


def load_polytope(path) -> object:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    return polytope_from_json(data)


def dump_json(obj, path=None) -> str:
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text
