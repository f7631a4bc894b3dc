"""Structural classifiers for host-construction hypotheses, plus the
bipartite-covering capacity bound.

classify() computes every flag from the graph alone and lists only the
bounds the detected classes actually carry; an unrecognized graph gets the
general semisaturation bound and nothing else.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import log2
from typing import Iterable, Sequence

from .core import EdgeOrderedGraph
from .verify import Verdict, Witness


def has_crossing_pair(g: EdgeOrderedGraph, e: tuple[int, int]) -> bool:
    """Do two common neighbors of e's endpoints carry inverted label orders?

    Equivalently: sorting the common neighborhood by the a-side labels leaves
    the b-side labels unsorted.
    """
    a, b = e
    pair = (a, b) if a < b else (b, a)
    if pair not in g.rank_of:
        raise ValueError(f"{pair} is not an edge")
    common = g.neighbors[a] & g.neighbors[b]
    ranks = sorted(
        (g.rank_of[(min(a, w), max(a, w))], g.rank_of[(min(b, w), max(b, w))])
        for w in common
    )
    b_side = [rb for _, rb in ranks]
    return b_side != sorted(b_side)


def _connected_after(g: EdgeOrderedGraph, drop: set[int]) -> bool:
    rest = g.delete_vertices(drop)
    return rest.is_connected()


def _remainder_without_e0(g: EdgeOrderedGraph) -> EdgeOrderedGraph | None:
    """The pattern minus its isolated-minimal-edge component, or None."""
    if g.m == 0:
        return None
    e0 = g.e0
    if g.degree(e0.u) != 1 or g.degree(e0.v) != 1:
        return None
    return g.delete_vertices({e0.u, e0.v})


def _is_a_b_graph(r: EdgeOrderedGraph) -> bool:
    if r.m == 0 or not r.is_connected():
        return False
    e1 = r.e0
    comps = r.delete_edge(e1.u, e1.v).components()
    if len(comps) != 2:
        return False
    return not any(e1.u in c and e1.v in c for c in comps)


def _no_two_vertex_separator(r: EdgeOrderedGraph) -> bool:
    if r.m == 0 or not r.is_connected():
        return False
    for u in range(r.n):
        if not _connected_after(r, {u}):
            return False
    for u in range(r.n):
        for v in range(u + 1, r.n):
            if not _connected_after(r, {u, v}):
                return False
    return True


def _degree_dominant(r: EdgeOrderedGraph) -> bool:
    if r.m == 0 or not r.is_connected():
        return False
    e1 = r.e0
    a, b = e1.u, e1.v
    if r.degree(a) < r.degree(b):
        a, b = b, a
    return all(r.degree(v) < r.degree(b) for v in range(r.n) if v not in (a, b))


def _find_peak(r: EdgeOrderedGraph) -> tuple[int, int] | None:
    """A vertex whose incident edges carry exactly the smallest labels, of
    degree other than 0 or 2, with a connected remainder."""
    if r.m == 0:
        return None
    from .core import normalize

    rn = normalize(r)
    for v in range(rn.n):
        d = rn.degree(v)
        if d in (0, 2):
            continue
        if sorted(rank for rank, _ in rn.incident[v]) != list(range(d)):
            continue
        if rn.n > 1 and not rn.delete_vertices({v}).is_connected():
            continue
        return (v, d)
    return None


def _is_monotone_forest(r: EdgeOrderedGraph) -> bool:
    if r.n != r.m + len(r.components()):
        return False  # has a cycle
    spans = []
    for comp in r.components():
        ranks = [
            r.rank_of[e.pair()] for e in r.edges if e.u in comp and e.v in comp
        ]
        if ranks:
            spans.append((min(ranks), max(ranks)))
    spans.sort()
    return all(prev[1] < nxt[0] for prev, nxt in zip(spans, spans[1:]))


def _interval_hypothesis(g: EdgeOrderedGraph) -> bool:
    """Is there a cut structure on the common neighborhood of the minimal
    edge's endpoints whose groups are a-below-b label intervals?  Tried in
    both orientations; groups are found by dynamic programming over prefixes.
    """
    if g.m == 0:
        return False
    e0 = g.e0
    for a, b in ((e0.u, e0.v), (e0.v, e0.u)):
        common = sorted(
            g.neighbors[a] & g.neighbors[b],
            key=lambda u: g.rank_of[(min(a, u), max(a, u))],
        )
        k = len(common)
        if k == 0:
            continue
        a_ranks = [g.rank_of[(min(a, u), max(a, u))] for u in common]
        b_ranks = [g.rank_of[(min(b, u), max(b, u))] for u in common]
        if b_ranks != sorted(b_ranks):
            continue

        def group_ok(lo: int, hi: int) -> bool:
            sub_a, sub_b = a_ranks[lo:hi], b_ranks[lo:hi]
            if max(sub_a) >= min(sub_b):
                return False
            return max(sub_b) - min(sub_a) + 1 == 2 * (hi - lo)

        reach = [False] * (k + 1)
        reach[0] = True
        for hi in range(1, k + 1):
            reach[hi] = any(reach[lo] and group_ok(lo, hi) for lo in range(hi))
        if reach[k]:
            return True
    return False


@dataclass(frozen=True)
class ClassReport:
    isolated_e0: bool
    crossing_pair: bool
    disjoint_neighborhood: bool
    closed_neighborhood_equal: bool
    bipartite_minus_e0: bool
    a_b_graph: bool
    no_two_vertex_separator: bool
    degree_dominant_min_edge: bool
    peak: tuple[int, int] | None
    monotone_forest: bool
    interval_hypothesis: bool
    implied_bounds: tuple[tuple[str, str], ...] = field(default_factory=tuple)

    def flags(self) -> dict[str, bool]:
        out = {
            k: getattr(self, k)
            for k in (
                "isolated_e0",
                "crossing_pair",
                "disjoint_neighborhood",
                "closed_neighborhood_equal",
                "bipartite_minus_e0",
                "a_b_graph",
                "no_two_vertex_separator",
                "degree_dominant_min_edge",
                "monotone_forest",
                "interval_hypothesis",
            )
        }
        out["peak"] = self.peak is not None
        return out

    def as_json_obj(self) -> dict:
        obj = self.flags()
        obj["peak"] = list(self.peak) if self.peak else None
        obj["implied_bounds"] = [list(x) for x in self.implied_bounds]
        return obj


def classify(g: EdgeOrderedGraph) -> ClassReport:
    """All hypothesis flags for g, with the bounds they carry."""
    if g.m == 0:
        return ClassReport(
            isolated_e0=False,
            crossing_pair=False,
            disjoint_neighborhood=False,
            closed_neighborhood_equal=False,
            bipartite_minus_e0=False,
            a_b_graph=False,
            no_two_vertex_separator=False,
            degree_dominant_min_edge=False,
            peak=None,
            monotone_forest=False,
            interval_hypothesis=False,
        )
    e0 = g.e0
    a, b = e0.u, e0.v
    isolated = g.degree(a) == 1 and g.degree(b) == 1
    crossing = has_crossing_pair(g, (a, b))
    disjoint_nbhd = (
        not (g.neighbors[a] & g.neighbors[b])
        and max(g.degree(a), g.degree(b)) >= 2
    )
    closed_equal = (g.neighbors[a] | {a}) == (g.neighbors[b] | {b})
    bip_minus = g.delete_edge(a, b).is_bipartite()
    remainder = _remainder_without_e0(g)
    a_b = _is_a_b_graph(remainder) if remainder is not None else False
    no_sep = _no_two_vertex_separator(remainder) if remainder is not None else False
    dom = _degree_dominant(remainder) if remainder is not None else False
    peak = _find_peak(remainder) if remainder is not None else None
    mono_forest = _is_monotone_forest(remainder) if remainder is not None else False
    intervals = _interval_hypothesis(g)

    bounds: list[tuple[str, str]] = []
    if crossing:
        bounds.append(("Omega(n sqrt(log n)) sat_m+ssat_m", "crossing-pair-lower-bound"))
    if isolated:
        bounds.append(("O(1) ssat_m", "isolated-min-edge-semisaturation"))
        bounds.append(("O(1) or Theta(n) sat_m", "isolated-min-edge-dichotomy"))
    else:
        bounds.append(("Omega(n) sat_m+ssat_m", "non-isolated-min-edge"))
    if a_b:
        bounds.append(("O(1) sat_m", "a-b-split-host"))
    if no_sep:
        bounds.append(("O(1) sat_m", "separator-free-host"))
    if dom:
        bounds.append(("O(1) sat_m", "degree-dominant-host"))
    if peak is not None:
        bounds.append(("O(1) sat_m", "peak-host"))
    if mono_forest:
        bounds.append(("O(1) sat_m", "monotone-forest-host"))
    if disjoint_nbhd:
        bounds.append(("Theta(n) ssat_m", "disjoint-neighborhood-host"))
    if intervals:
        bounds.append(("Theta(n) ssat_m", "interval-group-host"))
    if closed_equal and bip_minus and not isolated:
        bounds.append(("O(n log n) sat_m", "bipartite-closed-twin-host"))
    bounds.append(("O(n log n) ssat_m", "general-semisaturation-host"))

    return ClassReport(
        isolated_e0=isolated,
        crossing_pair=crossing,
        disjoint_neighborhood=disjoint_nbhd,
        closed_neighborhood_equal=closed_equal,
        bipartite_minus_e0=bip_minus,
        a_b_graph=a_b,
        no_two_vertex_separator=no_sep,
        degree_dominant_min_edge=dom,
        peak=peak,
        monotone_forest=mono_forest,
        interval_hypothesis=intervals,
        implied_bounds=tuple(bounds),
    )


# -- bipartite coverings -------------------------------------------------------


def validate_covering(
    g: EdgeOrderedGraph, parts: Sequence[tuple[Iterable[int], Iterable[int]]]
) -> Verdict:
    """Every edge must cross at least one bipartition; sides must be disjoint."""
    sides = []
    for i, (x, y) in enumerate(parts):
        xs, ys = set(x), set(y)
        if xs & ys:
            return Verdict(False, Witness(None, i, f"part {i} sides overlap"))
        sides.append((xs, ys))
    for e in g.edges:
        if not any(
            (e.u in xs and e.v in ys) or (e.u in ys and e.v in xs) for xs, ys in sides
        ):
            return Verdict(False, Witness(e.pair(), None, "edge not covered"))
    return Verdict(True, None)


def covering_capacity(parts: Sequence[tuple[Iterable[int], Iterable[int]]]) -> int:
    """Total vertex count over the bipartite parts."""
    return sum(len(set(x)) + len(set(y)) for x, y in parts)


def covering_lower_bound(degrees: Sequence[int], n: int) -> float:
    """sum(log2 n - log2(n - d_i)); a full-degree vertex contributes log2 n."""
    total = 0.0
    for d in degrees:
        if d < 0 or n - d <= 0:
            raise ValueError(f"degree {d} out of range for n={n}")
        total += log2(n) - log2(n - d)
    return total


def binary_digit_covering(n: int) -> list[tuple[set[int], set[int]]]:
    """log2(n) full bipartitions of 0..n-1 by binary digit; crosses every pair.

    Exact tightness witness for the capacity bound when n is a power of two.
    """
    if n < 2 or n & (n - 1):
        raise ValueError("n must be a power of two, at least 2")
    k = n.bit_length() - 1
    return [
        (
            {v for v in range(n) if not (v >> i) & 1},
            {v for v in range(n) if (v >> i) & 1},
        )
        for i in range(k)
    ]
