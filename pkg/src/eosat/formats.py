"""Text formats: the .eog interchange format, JSON export, DOT export.

.eog layout::

    eog <n> <m>
    u v l1[.l2[.l3]]     (m lines, signed integer label components)

Blank lines and lines starting with '#' are ignored.
"""

from __future__ import annotations

import json
from typing import TextIO

from .core import EdgeOrderedGraph, InvalidGraphError, Label


class FormatError(ValueError):
    """Raised on malformed .eog input."""


def parse_label(text: str) -> Label:
    try:
        return Label(tuple(int(p) for p in text.split(".")))
    except ValueError as exc:
        raise FormatError(f"bad label {text!r}") from exc


def loads(text: str) -> EdgeOrderedGraph:
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise FormatError("empty .eog input")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "eog":
        raise FormatError(f"bad header {lines[0]!r}, expected 'eog <n> <m>'")
    try:
        n, m = int(head[1]), int(head[2])
    except ValueError as exc:
        raise FormatError(f"bad header counts in {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise FormatError(f"header declares {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise FormatError(f"bad edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise FormatError(f"bad endpoints in {ln!r}") from exc
        edges.append((u, v, parse_label(parts[2])))
    try:
        return EdgeOrderedGraph(n, edges)
    except InvalidGraphError as exc:
        raise FormatError(str(exc)) from exc


def dumps(g: EdgeOrderedGraph) -> str:
    out = [f"eog {g.n} {g.m}"]
    for e in g.edges_by_rank:
        out.append(f"{e.u} {e.v} {e.label}")
    return "\n".join(out) + "\n"


def load(fp: TextIO | str) -> EdgeOrderedGraph:
    if isinstance(fp, str):
        with open(fp, encoding="utf-8") as fh:
            return loads(fh.read())
    return loads(fp.read())


def dump(g: EdgeOrderedGraph, fp: TextIO | str) -> None:
    if isinstance(fp, str):
        with open(fp, "w", encoding="utf-8") as fh:
            fh.write(dumps(g))
        return
    fp.write(dumps(g))


def to_json_obj(g: EdgeOrderedGraph) -> dict:
    return {
        "n": g.n,
        "m": g.m,
        "edges": [
            {"u": e.u, "v": e.v, "label": list(e.label.parts)} for e in g.edges_by_rank
        ],
    }


def from_json_obj(obj: dict) -> EdgeOrderedGraph:
    return EdgeOrderedGraph(
        obj["n"], [(e["u"], e["v"], tuple(e["label"])) for e in obj["edges"]]
    )


def to_json(g: EdgeOrderedGraph) -> str:
    return json.dumps(to_json_obj(g), indent=2)


def to_dot(g: EdgeOrderedGraph, name: str = "eog") -> str:
    """DOT graph with label ranks as edge attributes."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for r, e in enumerate(g.edges_by_rank):
        lines.append(f'  {e.u} -- {e.v} [label="{r}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
