"""Bitset-backed simple graphs and edge colorings of complete graphs.

Vertices are 0-based contiguous integers.  Every module in this package
shares one canonical edge order: the unordered pair {u, v} with u < v has
rank ``u*n - u*(u+1)//2 + (v - u - 1)``, i.e. pairs (u, v) sorted
lexicographically.  Python's unbounded ints serve as bitsets, so there is
no hard vertex limit; everything here works for n well beyond 4096.

Both `SimpleGraph` and `EdgeColoring` are frozen: safe to share across
workers, hashable, usable as cache keys.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import isqrt
from typing import Iterable, Iterator


def edge_index(u: int, v: int, n: int) -> int:
    """Canonical rank of the unordered pair {u, v} among the edges of K_n."""
    if u == v or not (0 <= u < n) or not (0 <= v < n):
        raise ValueError(f"invalid edge ({u}, {v}) for n={n}")
    if u > v:
        u, v = v, u
    return u * n - u * (u + 1) // 2 + (v - u - 1)


def edge_unindex(idx: int, n: int) -> tuple[int, int]:
    """Inverse of `edge_index`: the pair (u, v) with u < v at canonical rank idx."""
    m = n * (n - 1) // 2
    if not (0 <= idx < m):
        raise ValueError(f"edge index {idx} out of range for n={n}")
    d = (2 * n - 1) ** 2 - 8 * idx
    u = (2 * n - 1 - isqrt(d)) // 2
    # isqrt truncation can land one row off; fix up.
    while _row_start(u, n) > idx:
        u -= 1
    while _row_start(u + 1, n) <= idx:
        u += 1
    v = idx - _row_start(u, n) + u + 1
    return u, v


def _row_start(u: int, n: int) -> int:
    return u * n - u * (u + 1) // 2


def complete_edge_count(n: int) -> int:
    return n * (n - 1) // 2


def all_pairs(n: int) -> list[tuple[int, int]]:
    """All edges of K_n in canonical order."""
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        mask ^= b
        out.append(b.bit_length() - 1)
    return out


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices 0..n-1 with bitset adjacency."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency length {len(self.adj)} != n={self.n}")
        for v, row in enumerate(self.adj):
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")

    # -- constructors -------------------------------------------------

    @staticmethod
    def empty(n: int) -> "SimpleGraph":
        return SimpleGraph(n, (0,) * n)

    @staticmethod
    def complete(n: int) -> "SimpleGraph":
        full = (1 << n) - 1
        return SimpleGraph(n, tuple(full ^ (1 << v) for v in range(n)))

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        adj = [0] * n
        for u, v in edges:
            if u == v or not (0 <= u < n) or not (0 <= v < n):
                raise ValueError(f"invalid edge ({u}, {v}) for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return SimpleGraph(n, tuple(adj))

    @staticmethod
    def from_edge_indices(n: int, idxs: Iterable[int]) -> "SimpleGraph":
        return SimpleGraph.from_edges(n, (edge_unindex(i, n) for i in idxs))

    # -- queries ------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1) if u != v else False

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    yield (u, v)
                rest >>= 1
                v += 1

    def edge_indices(self) -> list[int]:
        return [edge_index(u, v, self.n) for u, v in self.edges()]

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((row.bit_count() for row in self.adj), reverse=True))

    def validate(self) -> None:
        """Full symmetry check; constructors already guarantee this."""
        for u in range(self.n):
            for v in _bits(self.adj[u]):
                if not (self.adj[v] >> u) & 1:
                    raise ValueError(f"asymmetric adjacency at ({u}, {v})")

    def with_edge(self, u: int, v: int) -> "SimpleGraph":
        if u == v:
            raise ValueError("loop")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return SimpleGraph(self.n, tuple(adj))

    def permuted(self, perm: list[int]) -> "SimpleGraph":
        """Relabel: vertex v becomes perm[v]."""
        adj = [0] * self.n
        for u, v in self.edges():
            adj[perm[u]] |= 1 << perm[v]
            adj[perm[v]] |= 1 << perm[u]
        return SimpleGraph(self.n, tuple(adj))


# -- graph operations ------------------------------------------------


def disjoint_union(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    n = g.n + h.n
    adj = list(g.adj) + [row << g.n for row in h.adj]
    return SimpleGraph(n, tuple(adj))


def join(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    """Disjoint union plus all edges between the two vertex sets."""
    n = g.n + h.n
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    adj = [row | hmask for row in g.adj]
    adj += [(row << g.n) | gmask for row in h.adj]
    return SimpleGraph(n, tuple(adj))


def complement(g: SimpleGraph) -> SimpleGraph:
    full = (1 << g.n) - 1
    return SimpleGraph(g.n, tuple((full ^ row) & ~(1 << v) for v, row in enumerate(g.adj)))


def components(g: SimpleGraph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            w = frontier
            while w:
                b = w & -w
                w ^= b
                nxt |= g.adj[b.bit_length() - 1]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(_bits(comp))
    return out


def induced_subgraph(g: SimpleGraph, vertices: list[int]) -> SimpleGraph:
    pos = {v: i for i, v in enumerate(vertices)}
    edges = []
    vset = set(vertices)
    for u in vertices:
        for w in _bits(g.adj[u]):
            if w > u and w in vset:
                edges.append((pos[u], pos[w]))
    return SimpleGraph.from_edges(len(vertices), edges)


def is_isomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    """Isomorphism test: invariant filtering plus backtracking.

    Meant for test-sized graphs (tens of vertices); refines vertex classes by
    iterated degree profiles before searching, no canonical forms involved.
    """
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False

    def refine(graph: SimpleGraph) -> list[int]:
        colors = [graph.degree(v) for v in range(graph.n)]
        for _ in range(graph.n):
            keys = [
                (colors[v], tuple(sorted(colors[w] for w in _bits(graph.adj[v]))))
                for v in range(graph.n)
            ]
            lut = {key: i for i, key in enumerate(sorted(set(keys)))}
            new = [lut[k] for k in keys]
            if new == colors:
                break
            colors = new
        return colors

    gc, hc = refine(g), refine(h)
    if sorted(gc) != sorted(hc):
        return False
    # map most-constrained g-vertices first
    order = sorted(range(g.n), key=lambda v: (gc.count(gc[v]), -g.degree(v)))
    image = [-1] * g.n
    used = [False] * h.n

    def place(i: int) -> bool:
        if i == g.n:
            return True
        u = order[i]
        for w in range(h.n):
            if used[w] or hc[w] != gc[u]:
                continue
            ok = True
            for q in order[:i]:
                if g.has_edge(u, q) != h.has_edge(w, image[q]):
                    ok = False
                    break
            if ok:
                image[u] = w
                used[w] = True
                if place(i + 1):
                    return True
                used[w] = False
        return False

    return place(0)


# -- edge colorings ---------------------------------------------------


@dataclass(frozen=True)
class EdgeColoring:
    """A k-coloring of E(K_n): flat color array in canonical edge order."""

    n: int
    k: int
    colors: tuple[int, ...]

    def __post_init__(self):
        m = complete_edge_count(self.n)
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if len(self.colors) != m:
            raise ValueError(f"colors length {len(self.colors)} != {m}")
        for i, c in enumerate(self.colors):
            if not (0 <= c < self.k):
                raise ValueError(f"color {c} at edge {i} not in 0..{self.k - 1}")

    @staticmethod
    def monochromatic(n: int, k: int = 1, color: int = 0) -> "EdgeColoring":
        return EdgeColoring(n, k, (color,) * complete_edge_count(n))

    @staticmethod
    def random(n: int, k: int, rng) -> "EdgeColoring":
        """Uniform color per edge in canonical order, drawn via rng.randrange(k)."""
        return EdgeColoring(n, k, tuple(rng.randrange(k) for _ in range(complete_edge_count(n))))

    def color_of(self, u: int, v: int) -> int:
        return self.colors[edge_index(u, v, self.n)]

    def class_edge_indices(self, i: int) -> list[int]:
        if not (0 <= i < self.k):
            raise ValueError(f"color {i} not in 0..{self.k - 1}")
        return [e for e, c in enumerate(self.colors) if c == i]

    def color_class(self, i: int) -> SimpleGraph:
        """The graph on 0..n-1 whose edges carry color i."""
        if not (0 <= i < self.k):
            raise ValueError(f"color {i} not in 0..{self.k - 1}")
        adj = [0] * self.n
        idx = 0
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if self.colors[idx] == i:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
                idx += 1
        return SimpleGraph(self.n, tuple(adj))

    def recolored(self, idx: int, color: int) -> "EdgeColoring":
        if not (0 <= color < self.k):
            raise ValueError(f"color {color} not in 0..{self.k - 1}")
        colors = list(self.colors)
        colors[idx] = color
        return EdgeColoring(self.n, self.k, tuple(colors))

    def with_colors(self, k: int) -> "EdgeColoring":
        """Same assignment viewed with a larger palette."""
        if k < self.k:
            raise ValueError("cannot shrink palette")
        return EdgeColoring(self.n, k, self.colors)

    def permuted(self, perm: list[int]) -> "EdgeColoring":
        """Apply a vertex permutation; edge {u,v} takes the old color of {u,v}."""
        colors = [0] * len(self.colors)
        for u in range(self.n):
            for v in range(u + 1, self.n):
                colors[edge_index(perm[u], perm[v], self.n)] = self.color_of(u, v)
        return EdgeColoring(self.n, self.k, tuple(colors))

    def relabel_colors(self, sigma: list[int]) -> "EdgeColoring":
        return EdgeColoring(self.n, self.k, tuple(sigma[c] for c in self.colors))

    # -- bit-exact JSON schema ----------------------------------------

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "colors": list(self.colors)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @staticmethod
    def from_dict(payload: dict) -> "EdgeColoring":
        for field in ("n", "k", "colors"):
            if field not in payload:
                raise ValueError(f"coloring JSON missing field '{field}'")
        return EdgeColoring(int(payload["n"]), int(payload["k"]), tuple(payload["colors"]))

    @staticmethod
    def from_json(text: str) -> "EdgeColoring":
        return EdgeColoring.from_dict(json.loads(text))


# -- DOT export --------------------------------------------------------


def to_dot(g: SimpleGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if g.degree(v) == 0:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines)


def color_class_dot(coloring: EdgeColoring, i: int) -> str:
    return to_dot(coloring.color_class(i), name=f"color_{i}")
