"""Freeness, saturation and semisaturation verdicts.

Modes fix which labels the hypothetical new edge ranges over: MINIMAL pins it
below every existing label, EVERY quantifies over all m+1 insertion gaps,
SOME asks for one gap that works.  Saturation requires a copy of the pattern
after the insertion; semisaturation requires a copy through the new edge.
Failing verdicts carry the lexicographically least failing (non-edge, gap)
so they replay deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .containment import contains, contains_through_edge
from .core import Edge, EdgeOrderedGraph, Label, trusted_graph


class SaturationMode(Enum):
    MINIMAL = "minimal"
    SOME = "some"
    EVERY = "every"

    @classmethod
    def parse(cls, text: "str | SaturationMode") -> "SaturationMode":
        if isinstance(text, SaturationMode):
            return text
        try:
            return cls(text.lower())
        except ValueError:
            raise ValueError(f"unknown mode {text!r}; use minimal|some|every") from None


@dataclass(frozen=True)
class Witness:
    non_edge: tuple[int, int] | None
    gap_index: int | None
    reason: str

    def as_json_obj(self) -> dict:
        return {
            "non_edge": list(self.non_edge) if self.non_edge else None,
            "gap_index": self.gap_index,
            "reason": self.reason,
        }


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: Witness | None = None

    def __bool__(self) -> bool:
        return self.ok

    def as_json_obj(self) -> dict:
        return {"ok": self.ok, "witness": self.witness.as_json_obj() if self.witness else None}


VERDICT_OK = Verdict(True, None)


def insertion_positions(h: EdgeOrderedGraph, mode: SaturationMode) -> list[int]:
    """Gap indices the mode quantifies over: 0 = below all, m = above all."""
    if mode is SaturationMode.MINIMAL:
        return [0]
    return list(range(h.m + 1))


def add_edge_at(h: EdgeOrderedGraph, u: int, v: int, gap: int) -> EdgeOrderedGraph:
    """Insert the non-edge uv with a label strictly inside the given gap.

    Existing edges keep their relative order (their labels are re-issued as
    even ranks; the new edge takes the odd value inside the gap).
    """
    if u == v:
        raise ValueError("cannot add a loop")
    if not (0 <= u < h.n and 0 <= v < h.n):
        raise ValueError(f"vertices {u},{v} outside 0..{h.n - 1}")
    if h.has_edge(u, v):
        raise ValueError(f"{(u, v)} is already an edge")
    if not (0 <= gap <= h.m):
        raise ValueError(f"gap {gap} outside 0..{h.m}")
    new = Edge(u, v, Label((2 * gap - 1,)))
    return trusted_graph(h.n, h.doubled_edges + (new,))


def is_free(h: EdgeOrderedGraph, g: EdgeOrderedGraph) -> bool:
    """True iff the host avoids the pattern."""
    return contains(h, g) is None


def _norm_pairs(
    h: EdgeOrderedGraph, pairs: Iterable[Sequence[int]] | None
) -> list[tuple[int, int]]:
    if pairs is None:
        return h.non_edges()
    out = []
    for p in pairs:
        u, v = p
        pr = (u, v) if u < v else (v, u)
        if h.has_edge(*pr):
            raise ValueError(f"{pr} is an edge, not a candidate non-edge")
        out.append(pr)
    return sorted(set(out))


def _quantify(
    h: EdgeOrderedGraph,
    g: EdgeOrderedGraph,
    mode: SaturationMode,
    pairs: Iterable[Sequence[int]] | None,
    through_new_edge: bool,
) -> Verdict:
    mode = SaturationMode.parse(mode)
    gaps = insertion_positions(h, mode)
    for u, v in _norm_pairs(h, pairs):
        if mode is SaturationMode.SOME:
            hit = False
            for gap in gaps:
                h2 = add_edge_at(h, u, v, gap)
                found = (
                    contains_through_edge(h2, g, (u, v))
                    if through_new_edge
                    else contains(h2, g)
                )
                if found is not None:
                    hit = True
                    break
            if not hit:
                return Verdict(False, Witness((u, v), None, "no gap creates a copy"))
        else:
            for gap in gaps:
                h2 = add_edge_at(h, u, v, gap)
                found = (
                    contains_through_edge(h2, g, (u, v))
                    if through_new_edge
                    else contains(h2, g)
                )
                if found is None:
                    reason = (
                        "no copy through the new edge" if through_new_edge else "no copy created"
                    )
                    return Verdict(False, Witness((u, v), gap, reason))
    return VERDICT_OK


def saturates(
    h: EdgeOrderedGraph,
    g: EdgeOrderedGraph,
    mode: SaturationMode,
    pairs: Iterable[Sequence[int]] | None = None,
) -> Verdict:
    """Does every candidate insertion create a copy of g?

    `pairs` restricts the scanned non-edges (constructions guarantee their
    property on the independent set only); default is all non-edges.
    """
    return _quantify(h, g, mode, pairs, through_new_edge=False)


def semisaturates(
    h: EdgeOrderedGraph,
    g: EdgeOrderedGraph,
    mode: SaturationMode,
    pairs: Iterable[Sequence[int]] | None = None,
) -> Verdict:
    """Like saturates, but the created copy must use the new edge."""
    return _quantify(h, g, mode, pairs, through_new_edge=True)


def is_saturated(
    h: EdgeOrderedGraph,
    g: EdgeOrderedGraph,
    mode: SaturationMode,
    pairs: Iterable[Sequence[int]] | None = None,
) -> Verdict:
    """Freeness plus saturation."""
    if contains(h, g) is not None:
        return Verdict(False, Witness(None, None, "host contains the pattern"))
    return saturates(h, g, mode, pairs)


def exact_ex(n: int, g: EdgeOrderedGraph, cap_n: int = 6) -> int:
    """Maximum edges of a g-free edge-ordered host on n vertices (exhaustive)."""
    from .oracle import exact_ex as _exact_ex

    return _exact_ex(n, g, cap_n=cap_n)
