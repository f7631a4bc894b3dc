"""Order-preserving subgraph containment.

An embedding maps pattern vertices injectively into the host so that every
pattern edge lands on a host edge and host ranks realize the pattern's edge
order.  The search assigns host edges to pattern edges under rank windows
(an edge of pattern rank p must map between the images of its rank
neighbors, with room for the p edges below and m-p-1 above).  At each step
it expands the pattern edge with the fewest remaining candidates, which
keeps the search shallow on the skewed-degree hosts the constructions
produce; candidates are tried in ascending host rank, so results are
deterministic.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass

from .core import Edge, EdgeOrderedGraph


@dataclass(frozen=True)
class Embedding:
    """Witness for containment: pattern vertex/edge maps into the host."""

    vertex_map: dict[int, int]
    edge_map: dict[tuple[int, int], tuple[int, int]]


def _solve(
    host: EdgeOrderedGraph,
    pattern: EdgeOrderedGraph,
    pin: tuple[int, int] | None,
) -> Embedding | None:
    mG, mH = pattern.m, host.m
    if mG > mH or pattern.n > host.n:
        return None

    pat_pairs = pattern.pair_by_rank
    pdeg = [pattern.degree(v) for v in range(pattern.n)]
    hdeg = [host.degree(v) for v in range(host.n)]
    incident = host.incident
    rank_of = host.rank_of
    host_pairs = host.pair_by_rank
    big = host.n  # sentinel above any neighbor id in (rank, neighbor) tuples

    assigned = [-1] * mG
    vmap: dict[int, int] = {}
    used: set[int] = set()

    def window(p: int) -> tuple[int, int]:
        # exclusive bounds for the host rank of pattern position p
        lo = p - 1
        for q in range(p):
            if assigned[q] > lo:
                lo = assigned[q]
        hi = mH - mG + p + 1
        for q in range(p + 1, mG):
            r = assigned[q]
            if r != -1 and r < hi:
                hi = r
        return lo, hi

    def cost(p: int) -> int:
        x, y = pat_pairs[p]
        lo, hi = window(p)
        if hi - lo <= 1:
            return 0
        mx, my = vmap.get(x), vmap.get(y)
        if mx is not None and my is not None:
            return 1
        if mx is None and my is None:
            return hi - lo - 1
        anchor = mx if mx is not None else my
        inc = incident[anchor]
        return bisect_left(inc, (hi, -1)) - bisect_right(inc, (lo, big))

    def candidates(p: int):
        x, y = pat_pairs[p]
        lo, hi = window(p)
        mx, my = vmap.get(x), vmap.get(y)
        if mx is not None and my is not None:
            pr = (mx, my) if mx < my else (my, mx)
            r = rank_of.get(pr)
            if r is not None and lo < r < hi:
                yield r, ()
            return
        if mx is None and my is None:
            for r in range(lo + 1, hi):
                hu, hv = host_pairs[r]
                if hu in used or hv in used:
                    continue
                if hdeg[hu] >= pdeg[x] and hdeg[hv] >= pdeg[y]:
                    yield r, ((x, hu), (y, hv))
                if hdeg[hv] >= pdeg[x] and hdeg[hu] >= pdeg[y]:
                    yield r, ((x, hv), (y, hu))
            return
        if mx is None:
            x, y = y, x
            mx = my
        inc = incident[mx]
        i = bisect_right(inc, (lo, big))
        need = pdeg[y]
        while i < len(inc):
            r, other = inc[i]
            if r >= hi:
                break
            if other not in used and hdeg[other] >= need:
                yield r, ((y, other),)
            i += 1

    n_assigned = 0

    def backtrack() -> Embedding | None:
        nonlocal n_assigned
        if n_assigned == mG:
            return _finish()
        best, best_cost = -1, None
        for p in range(mG):
            if assigned[p] != -1:
                continue
            c = cost(p)
            if best_cost is None or c < best_cost:
                best, best_cost = p, c
                if c == 0:
                    break
        for r, newmaps in candidates(best):
            assigned[best] = r
            for pv, hv in newmaps:
                vmap[pv] = hv
                used.add(hv)
            n_assigned += 1
            emb = backtrack()
            if emb is not None:
                return emb
            n_assigned -= 1
            assigned[best] = -1
            for pv, hv in newmaps:
                del vmap[pv]
                used.discard(hv)
        return None

    def _finish() -> Embedding:
        spare = (v for v in range(host.n) if v not in used)
        full = dict(vmap)
        for pv in range(pattern.n):
            if pv not in full:
                full[pv] = next(spare)
        emap = {}
        for p, (x, y) in enumerate(pat_pairs):
            pr = (x, y) if x < y else (y, x)
            emap[pr] = host_pairs[assigned[p]]
        return Embedding(full, emap)

    if mG == 0:
        return _finish()

    if pin is None:
        return backtrack()

    p, r = pin
    if not (p <= r <= mH - mG + p):
        return None
    hu, hv = host_pairs[r]
    x, y = pat_pairs[p]
    for a, b in ((hu, hv), (hv, hu)):
        if hdeg[a] < pdeg[x] or hdeg[b] < pdeg[y]:
            continue
        assigned[p] = r
        vmap[x], vmap[y] = a, b
        used.update((a, b))
        n_assigned = 1
        emb = backtrack()
        if emb is not None:
            return emb
        assigned[p] = -1
        vmap.clear()
        used.clear()
        n_assigned = 0
    return None


def contains(host: EdgeOrderedGraph, pattern: EdgeOrderedGraph) -> Embedding | None:
    """First embedding of pattern in host in deterministic search order, or None."""
    return _solve(host, pattern, None)


def contains_through_edge(
    host: EdgeOrderedGraph,
    pattern: EdgeOrderedGraph,
    e: tuple[int, int] | Edge,
) -> Embedding | None:
    """Embedding whose image uses the host edge e, or None.

    Raises ValueError if e is not an edge of the host.
    """
    if isinstance(e, Edge):
        u, v = e.u, e.v
    else:
        u, v = e
    pair = (u, v) if u < v else (v, u)
    if pair not in host.rank_of:
        raise ValueError(f"{pair} is not an edge of the host")
    r = host.rank_of[pair]
    for p in range(pattern.m):
        emb = _solve(host, pattern, (p, r))
        if emb is not None:
            return emb
    return None


def contains_pinned(
    host: EdgeOrderedGraph, pattern: EdgeOrderedGraph, position: int, host_rank: int
) -> Embedding | None:
    """Embedding with the pattern edge at the given rank position mapped to the
    host edge of the given rank.  Used by incremental enumerators that only
    need to detect copies through the newest (maximal) edge."""
    return _solve(host, pattern, (position, host_rank))


def embedding_ok(
    host: EdgeOrderedGraph, pattern: EdgeOrderedGraph, emb: Embedding
) -> bool:
    """Validate an embedding: injective, incidence-preserving, order-preserving."""
    vm = emb.vertex_map
    if len(vm) != pattern.n or len(set(vm.values())) != pattern.n:
        return False
    if any(not (0 <= h < host.n) for h in vm.values()):
        return False
    got_ranks = []
    for e in pattern.edges_by_rank:
        pr = e.pair()
        if pr not in emb.edge_map:
            return False
        hu, hv = emb.edge_map[pr]
        if {vm[e.u], vm[e.v]} != {hu, hv}:
            return False
        if (hu, hv) not in host.rank_of:
            return False
        got_ranks.append(host.rank_of[(hu, hv)])
    return got_ranks == sorted(got_ranks) and len(set(got_ranks)) == len(got_ranks)
