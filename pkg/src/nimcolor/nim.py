"""Monochromatic-copy detection and NIM-edge computation.

An edge of an edge-colored K_n is *NIM* for a pattern H when no
monochromatic copy of H contains it.  Since a copy containing an edge of
color i is monochromatic iff it lies inside color class i, the whole
computation reduces to anchored subgraph-embedding queries within single
color classes.

Two implementations are provided and must agree:

* `nim_edges` (primary) walks each color class in canonical edge order and
  keeps a cover mask: every embedding found marks *all* edges it uses, an
  edge already marked is skipped, and a class whose edges are all marked is
  done.  Edges whose anchored search exhausts without a witness are NIM.
* `nim_edges_anchored` (reference oracle) answers one independent anchored
  query per edge with a separately coded, unoptimized search.

The primary engine maps pattern vertices in a DFS order (components rooted
at a max-degree vertex) so partial embeddings stay connected, prunes by
host degree, and collapses twin candidates (vertices with identical
adjacency outside the pair), which is sound for existence queries.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .errors import ResourceLimitError
from .graphs import EdgeColoring, SimpleGraph, components, edge_index
from .patterns import PatternGraph, _as_graph

DEFAULT_MAX_N = 64
DEFAULT_MAX_PATTERN = 16


@dataclass(frozen=True)
class NimReport:
    n: int
    k: int
    pattern: str
    nim_edges: tuple[int, ...]
    count: int
    per_color: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "pattern": self.pattern,
            "count": self.count,
            "nim_edges": list(self.nim_edges),
            "per_color": list(self.per_color),
        }


# -- embedding plans ----------------------------------------------------


@dataclass(frozen=True)
class _Plan:
    order: tuple[int, ...]  # pattern vertices in mapping order
    prev: tuple[tuple[int, ...], ...]  # earlier positions adjacent in the pattern
    degrees: tuple[int, ...]  # pattern degree at each position
    edges: tuple[tuple[int, int], ...]  # pattern edges as position pairs


def _plan_from_order(g: SimpleGraph, order: list[int]) -> _Plan:
    pos = {v: p for p, v in enumerate(order)}
    prev = tuple(
        tuple(pos[w] for w in g.neighbors(v) if pos[w] < p) for p, v in enumerate(order)
    )
    degrees = tuple(g.degree(v) for v in order)
    edges = tuple((pos[u], pos[v]) for u, v in g.edges())
    return _Plan(tuple(order), prev, degrees, edges)


def _dfs_extend(g: SimpleGraph, order: list[int], seen: set[int]) -> None:
    """Grow `order` by DFS until the current component set is exhausted."""
    stack = list(order)
    while stack:
        v = stack[-1]
        nxt = None
        for w in sorted(g.neighbors(v), key=lambda x: (-g.degree(x), x)):
            if w not in seen:
                nxt = w
                break
        if nxt is None:
            stack.pop()
        else:
            seen.add(nxt)
            order.append(nxt)
            stack.append(nxt)


def _component_order(g: SimpleGraph, skip: set[int]) -> list[list[int]]:
    """Remaining components, largest first, each DFS-ordered from a max-degree root."""
    out = []
    for comp in components(g):
        rest = [v for v in comp if v not in skip]
        if not rest:
            continue
        root = max(rest, key=lambda v: (g.degree(v), -v))
        order = [root]
        seen = set(skip) | {root}
        _dfs_extend(g, order, seen)
        out.append([v for v in order if v not in skip])
    out.sort(key=len, reverse=True)
    return out


@lru_cache(maxsize=None)
def _unanchored_plan(g: SimpleGraph) -> _Plan:
    order: list[int] = []
    for chunk in _component_order(g, set()):
        order.extend(chunk)
    return _plan_from_order(g, order)


@lru_cache(maxsize=None)
def _anchor_plans(g: SimpleGraph) -> tuple[_Plan, ...]:
    """One plan per (pattern edge, orientation): positions 0 and 1 are the anchor."""
    plans = []
    for x, y in g.edges():
        for a, b in ((x, y), (y, x)):
            order = [a, b]
            seen = {a, b}
            _dfs_extend(g, order, seen)
            anchored_comp = list(order)
            for chunk in _component_order(g, set(anchored_comp)):
                order.extend(chunk)
            plans.append(_plan_from_order(g, order))
    return tuple(plans)


# -- core search --------------------------------------------------------


def _search(adj: Sequence[int], full: int, plan: _Plan, img: list[int], used: int, pos: int) -> bool:
    order, prev, degrees = plan.order, plan.prev, plan.degrees
    h = len(order)
    if pos == h:
        return True
    nbrs = prev[pos]
    if nbrs:
        cand = adj[img[nbrs[0]]]
        for q in nbrs[1:]:
            cand &= adj[img[q]]
        cand &= ~used
    else:
        cand = full & ~used
    need = degrees[pos]
    kept: list[int] = []
    while cand:
        b = cand & -cand
        cand ^= b
        w = b.bit_length() - 1
        aw = adj[w]
        if aw.bit_count() < need:
            continue
        twin = False
        for r in kept:
            if not (aw ^ adj[r]) & ~(b | (1 << r)):
                twin = True
                break
        if twin:
            continue
        kept.append(w)
        img[pos] = w
        if _search(adj, full, plan, img, used | b, pos + 1):
            return True
    return False


def _find_unanchored(adj: Sequence[int], n: int, pattern: SimpleGraph) -> Optional[list[int]]:
    if pattern.n > n:
        return None
    plan = _unanchored_plan(pattern)
    img = [0] * pattern.n
    if _search(adj, (1 << n) - 1, plan, img, 0, 0):
        return [img[p] for p in _inverse_positions(plan)]
    return None


def _find_through(adj: Sequence[int], n: int, pattern: SimpleGraph, u: int, v: int):
    """Witness edge list (canonical indices) for a copy through host edge (u, v)."""
    if pattern.n > n:
        return None
    full = (1 << n) - 1
    bu, bv = 1 << u, 1 << v
    du, dv = adj[u].bit_count(), adj[v].bit_count()
    img = [0] * pattern.n
    for plan in _anchor_plans(pattern):
        if du < plan.degrees[0] or dv < plan.degrees[1]:
            continue
        img[0], img[1] = u, v
        if _search(adj, full, plan, img, bu | bv, 2):
            return [edge_index(img[p], img[q], n) for p, q in plan.edges]
    return None


def _inverse_positions(plan: _Plan) -> list[int]:
    inv = [0] * len(plan.order)
    for p, vtx in enumerate(plan.order):
        inv[vtx] = p
    return inv


# -- public operations ---------------------------------------------------


def contains(g: SimpleGraph, h) -> bool:
    """True iff g has a (not necessarily induced) subgraph isomorphic to h."""
    pattern = _as_graph(h)
    if pattern.edge_count == 0:
        return pattern.n <= g.n
    return _find_unanchored(g.adj, g.n, pattern) is not None


def contains_through_edge(g: SimpleGraph, h, e: tuple[int, int]) -> bool:
    """True iff some embedding of h into g maps a pattern edge onto e."""
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) not in graph")
    pattern = _as_graph(h)
    return _find_through(g.adj, g.n, pattern, u, v) is not None


def _guard(n: int, pattern: SimpleGraph, max_n: int, max_pattern: int) -> None:
    if n > max_n:
        raise ResourceLimitError(f"n={n} exceeds limit {max_n}")
    if pattern.n > max_pattern:
        raise ResourceLimitError(f"pattern order {pattern.n} exceeds limit {max_pattern}")


def nim_edges(
    coloring: EdgeColoring,
    h,
    *,
    max_n: int = DEFAULT_MAX_N,
    max_pattern: int = DEFAULT_MAX_PATTERN,
) -> NimReport:
    """All edges of the colored K_n in no monochromatic copy of the pattern."""
    pattern = _as_graph(h)
    if pattern.n < 2:
        raise ValueError("pattern needs at least 2 vertices")
    _guard(coloring.n, pattern, max_n, max_pattern)
    n, k = coloring.n, coloring.k
    spec = h.spec if isinstance(h, PatternGraph) else f"custom:{pattern.n}v{pattern.edge_count}e"
    pairs = _pairs_table(n)

    nim: list[int] = []
    per_color = []
    for i in range(k):
        adj = [0] * n
        class_edges = []
        for e, c in enumerate(coloring.colors):
            if c == i:
                u, v = pairs[e]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                class_edges.append(e)
        covered = 0
        hits = 0
        for e in class_edges:
            if (covered >> e) & 1:
                continue
            u, v = pairs[e]
            witness = _find_through(adj, n, pattern, u, v)
            if witness is None:
                nim.append(e)
                hits += 1
            else:
                for f in witness:
                    covered |= 1 << f
        per_color.append(hits)
    nim.sort()
    return NimReport(n, k, spec, tuple(nim), len(nim), tuple(per_color))


@lru_cache(maxsize=None)
def _pairs_table(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((u, v) for u in range(n) for v in range(u + 1, n))


# -- reference implementation (test oracle) ------------------------------
#
# Deliberately separate machinery: set-based adjacency, BFS vertex order
# seeded at the anchored edge, no degree pruning, no twin collapsing, no
# cover reuse between edges.


def nim_edges_anchored(coloring: EdgeColoring, h, *, max_n: int = 12) -> NimReport:
    pattern = _as_graph(h)
    if pattern.n < 2:
        raise ValueError("pattern needs at least 2 vertices")
    if coloring.n > max_n:
        raise ResourceLimitError(f"reference NIM oracle limited to n <= {max_n}")
    n, k = coloring.n, coloring.k
    spec = h.spec if isinstance(h, PatternGraph) else f"custom:{pattern.n}v{pattern.edge_count}e"
    pairs = _pairs_table(n)
    adj_sets: list[list[set[int]]] = [[set() for _ in range(n)] for _ in range(k)]
    for e, c in enumerate(coloring.colors):
        u, v = pairs[e]
        adj_sets[c][u].add(v)
        adj_sets[c][v].add(u)

    nim = []
    per_color = [0] * k
    for e, c in enumerate(coloring.colors):
        u, v = pairs[e]
        if not _mono_copy_through(adj_sets[c], n, pattern, u, v):
            nim.append(e)
            per_color[c] += 1
    return NimReport(n, k, spec, tuple(nim), len(nim), tuple(per_color))


def _mono_copy_through(adj: list[set[int]], n: int, pattern: SimpleGraph, u: int, v: int) -> bool:
    pat_nbrs = [pattern.neighbors(x) for x in range(pattern.n)]
    for x in range(pattern.n):
        for y in pat_nbrs[x]:
            order = _bfs_order(pattern, x, y)
            if _place(adj, n, pat_nbrs, order, {x: u, y: v}, {u, v}, 2):
                return True
    return False


def _bfs_order(pattern: SimpleGraph, x: int, y: int) -> list[int]:
    order = [x, y]
    seen = {x, y}
    head = 0
    while head < len(order):
        for w in pattern.neighbors(order[head]):
            if w not in seen:
                seen.add(w)
                order.append(w)
        head += 1
    for root in range(pattern.n):
        if root in seen:
            continue
        seen.add(root)
        order.append(root)
        head = len(order) - 1
        while head < len(order):
            for w in pattern.neighbors(order[head]):
                if w not in seen:
                    seen.add(w)
                    order.append(w)
            head += 1
    return order


def _place(adj, n, pat_nbrs, order, image, used, i) -> bool:
    if i == len(order):
        return True
    p = order[i]
    mapped = [image[q] for q in pat_nbrs[p] if q in image]
    for w in range(n):
        if w in used:
            continue
        if all(w in adj[q] for q in mapped):
            image[p] = w
            used.add(w)
            if _place(adj, n, pat_nbrs, order, image, used, i + 1):
                return True
            used.discard(w)
            del image[p]
    return False
