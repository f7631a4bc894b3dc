"""Data model for edge-ordered graphs: labels, graphs, and the basic operations.

A label is a short tuple of signed integers compared lexicographically after
padding with zeros, so (2,) and (2, 0) denote the same position while
(2,) > (2, -1).  Only the induced order matters anywhere in this package;
``normalize`` collapses labels to dense single-component ranks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class InvalidGraphError(ValueError):
    """Raised when edge data violates the edge-ordered graph invariants."""


def _strip(parts: tuple[int, ...]) -> tuple[int, ...]:
    # canonical form: drop trailing zeros, keep at least one component
    end = len(parts)
    while end > 1 and parts[end - 1] == 0:
        end -= 1
    return parts[:end]


@dataclass(frozen=True)
class Label:
    """Composite integer label, ordered lexicographically with zero padding."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] | int):
        if isinstance(parts, int):
            parts = (parts,)
        parts = tuple(int(p) for p in parts)
        if not parts:
            raise ValueError("label needs at least one component")
        object.__setattr__(self, "parts", _strip(parts))

    def _padded(self, width: int) -> tuple[int, ...]:
        return self.parts + (0,) * (width - len(self.parts))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Label):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __lt__(self, other: "Label") -> bool:
        width = max(len(self.parts), len(other.parts))
        return self._padded(width) < other._padded(width)

    def __le__(self, other: "Label") -> bool:
        return self == other or self < other

    def __gt__(self, other: "Label") -> bool:
        return other < self

    def __ge__(self, other: "Label") -> bool:
        return other <= self

    def __str__(self) -> str:
        return ".".join(str(p) for p in self.parts)

    def __repr__(self) -> str:
        return f"Label({self})"


def as_label(value: "Label | int | Iterable[int]") -> Label:
    if isinstance(value, Label):
        return value
    return Label(value)


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    label: Label

    def pair(self) -> tuple[int, int]:
        return (self.u, self.v) if self.u < self.v else (self.v, self.u)

    def __iter__(self):
        return iter((self.u, self.v, self.label))


@dataclass(frozen=True)
class EdgeOrderedGraph:
    """Simple graph on vertices 0..n-1 whose edges carry pairwise distinct labels."""

    n: int
    edges: tuple[Edge, ...]

    def __init__(self, n: int, edges: Iterable[tuple | Edge] = ()):
        norm: list[Edge] = []
        for e in edges:
            if isinstance(e, Edge):
                norm.append(e)
            else:
                u, v, lab = e
                norm.append(Edge(int(u), int(v), as_label(lab)))
        if n < 0:
            raise InvalidGraphError("negative vertex count")
        seen_pairs: set[tuple[int, int]] = set()
        seen_labels: set[Label] = set()
        for e in norm:
            if e.u == e.v:
                raise InvalidGraphError(f"loop at vertex {e.u}")
            if not (0 <= e.u < n and 0 <= e.v < n):
                raise InvalidGraphError(f"edge {e.u}-{e.v} outside 0..{n - 1}")
            p = e.pair()
            if p in seen_pairs:
                raise InvalidGraphError(f"duplicate edge {p}")
            seen_pairs.add(p)
            if e.label in seen_labels:
                raise InvalidGraphError(f"duplicate label {e.label}")
            seen_labels.add(e.label)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(norm))

    # -- basic accessors ---------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def doubled_edges(self) -> tuple[Edge, ...]:
        """Edges relabeled to even ranks 0,2,4,.. (rank order); odd values are
        free insertion slots, which lets add_edge_at avoid renormalizing."""
        return tuple(
            Edge(e.u, e.v, Label((2 * r,))) for r, e in enumerate(self.edges_by_rank)
        )

    @cached_property
    def edges_by_rank(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges, key=lambda e: e.label))

    @cached_property
    def rank_of(self) -> dict[tuple[int, int], int]:
        return {e.pair(): r for r, e in enumerate(self.edges_by_rank)}

    @cached_property
    def pair_by_rank(self) -> tuple[tuple[int, int], ...]:
        return tuple(e.pair() for e in self.edges_by_rank)

    @cached_property
    def incident(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex: (rank, neighbor) pairs sorted by rank."""
        inc: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for r, e in enumerate(self.edges_by_rank):
            inc[e.u].append((r, e.v))
            inc[e.v].append((r, e.u))
        return tuple(tuple(sorted(x)) for x in inc)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(o for _, o in inc) for inc in self.incident)

    def degree(self, v: int) -> int:
        return len(self.incident[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.rank_of

    def label_of(self, u: int, v: int) -> Label:
        r = self.rank_of[(min(u, v), max(u, v))]
        return self.edges_by_rank[r].label

    @property
    def e0(self) -> Edge:
        """Minimum-label edge."""
        if not self.edges:
            raise InvalidGraphError("graph has no edges")
        return self.edges_by_rank[0]

    @property
    def e_max(self) -> Edge:
        if not self.edges:
            raise InvalidGraphError("graph has no edges")
        return self.edges_by_rank[-1]

    def non_edges(self) -> list[tuple[int, int]]:
        """Missing pairs in lexicographic (u, v) order, u < v."""
        out = []
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if (u, v) not in self.rank_of:
                    out.append((u, v))
        return out

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.incident[v]]

    # -- derived graphs ----------------------------------------------------

    def with_ranks(self) -> "EdgeOrderedGraph":
        return normalize(self)

    def delete_vertices(self, drop: Iterable[int], keep_ids: bool = False) -> "EdgeOrderedGraph":
        """Remove vertices and incident edges.  Without keep_ids the remaining
        vertices are renumbered densely in increasing order."""
        dropset = set(drop)
        if keep_ids:
            keep_edges = [e for e in self.edges if e.u not in dropset and e.v not in dropset]
            return EdgeOrderedGraph(self.n, keep_edges)
        remap = {}
        for v in range(self.n):
            if v not in dropset:
                remap[v] = len(remap)
        keep_edges = [
            (remap[e.u], remap[e.v], e.label)
            for e in self.edges
            if e.u not in dropset and e.v not in dropset
        ]
        return EdgeOrderedGraph(len(remap), keep_edges)

    def delete_edge(self, u: int, v: int) -> "EdgeOrderedGraph":
        pair = (min(u, v), max(u, v))
        if pair not in self.rank_of:
            raise InvalidGraphError(f"no edge {pair}")
        return EdgeOrderedGraph(self.n, [e for e in self.edges if e.pair() != pair])

    def relabel_vertices(self, perm: Sequence[int]) -> "EdgeOrderedGraph":
        return EdgeOrderedGraph(self.n, [(perm[e.u], perm[e.v], e.label) for e in self.edges])

    def add_isolated(self, count: int) -> "EdgeOrderedGraph":
        return EdgeOrderedGraph(self.n + count, self.edges)

    # -- structure queries ---------------------------------------------------

    def components(self) -> list[set[int]]:
        seen = [False] * self.n
        comps = []
        for start in range(self.n):
            if seen[start]:
                continue
            stack, comp = [start], set()
            seen[start] = True
            while stack:
                x = stack.pop()
                comp.add(x)
                for y in self.neighbors[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return len(self.components()) == 1

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def bipartition(self) -> tuple[set[int], set[int]] | None:
        color = [-1] * self.n
        for start in range(self.n):
            if color[start] != -1:
                continue
            color[start] = 0
            stack = [start]
            while stack:
                x = stack.pop()
                for y in self.neighbors[x]:
                    if color[y] == -1:
                        color[y] = 1 - color[x]
                        stack.append(y)
                    elif color[y] == color[x]:
                        return None
        return ({v for v in range(self.n) if color[v] != 1},
                {v for v in range(self.n) if color[v] == 1})


# -- operations --------------------------------------------------------------


def trusted_graph(n: int, edges: tuple[Edge, ...]) -> EdgeOrderedGraph:
    """Build a graph from already-validated Edge tuples, skipping invariant
    checks.  Internal fast path for verifier loops."""
    g = object.__new__(EdgeOrderedGraph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "edges", edges)
    return g


def normalize(g: EdgeOrderedGraph) -> EdgeOrderedGraph:
    """Replace labels by their ranks 0..m-1.  Order-preserving and idempotent."""
    return EdgeOrderedGraph(
        g.n, [(e.u, e.v, (r,)) for r, e in enumerate(g.edges_by_rank)]
    )


def reverse(g: EdgeOrderedGraph) -> EdgeOrderedGraph:
    """Same underlying graph with the edge order reversed."""
    m = g.m
    return EdgeOrderedGraph(
        g.n, [(e.u, e.v, (m - 1 - r,)) for r, e in enumerate(g.edges_by_rank)]
    )


def disjoint_union(
    a: EdgeOrderedGraph,
    b: EdgeOrderedGraph,
    order: str | Sequence[int] = "a_below_b",
) -> EdgeOrderedGraph:
    """Vertex-disjoint union; b's vertices are shifted by a.n.

    order="a_below_b" puts every a-label before every b-label.  Otherwise
    `order` must assign merged ranks to the m_a + m_b edges (a's edges in rank
    order first, then b's) as a bijection onto 0..m_a+m_b-1.
    """
    total = a.m + b.m
    if isinstance(order, str):
        if order != "a_below_b":
            raise ValueError(f"unknown union order {order!r}")
        ranks = list(range(total))
    else:
        ranks = [int(r) for r in order]
        if sorted(ranks) != list(range(total)):
            raise ValueError("interleave map is not a bijection onto 0..m_a+m_b-1")
    edges = []
    for i, e in enumerate(a.edges_by_rank):
        edges.append((e.u, e.v, (ranks[i],)))
    for i, e in enumerate(b.edges_by_rank):
        edges.append((e.u + a.n, e.v + a.n, (ranks[a.m + i],)))
    return EdgeOrderedGraph(a.n + b.n, edges)


def isomorphic(a: EdgeOrderedGraph, b: EdgeOrderedGraph) -> bool:
    """Order-preserving isomorphism test.

    Edges must match rank by rank, so the search only branches on the two
    orientations of each edge, with vertex consistency enforced.
    """
    if a.n != b.n or a.m != b.m:
        return False
    degs_a = sorted(len(x) for x in a.incident)
    degs_b = sorted(len(x) for x in b.incident)
    if degs_a != degs_b:
        return False

    pairs_a = a.pair_by_rank
    pairs_b = b.pair_by_rank

    fwd: dict[int, int] = {}
    used: set[int] = set()

    def place(x: int, y: int) -> bool:
        if x in fwd:
            return fwd[x] == y
        if y in used:
            return False
        fwd[x] = y
        used.add(y)
        return True

    def undo(snapshot: int) -> None:
        while len(fwd) > snapshot:
            x, y = fwd.popitem()
            used.discard(y)

    def match(i: int) -> bool:
        if i == len(pairs_a):
            return True
        (u, v), (x, y) = pairs_a[i], pairs_b[i]
        for xx, yy in ((x, y), (y, x)):
            snap = len(fwd)
            if place(u, xx) and place(v, yy):
                if match(i + 1):
                    return True
            undo(snap)
        return False

    return match(0)
