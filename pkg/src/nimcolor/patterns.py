"""Generators, classifiers and a small text DSL for the pattern graphs H.

Supported families: paths, stars, spiders (t paths sharing one end vertex),
double brooms (a path with leaves appended to both ends), double stars
(the two-vertex double broom with equal leaf counts), disjoint unions of
those, and custom graphs loaded from edge data.

Each generated pattern carries derived metadata used elsewhere: its
bipartition (when bipartite), all tails (paths v0-v1-v2 with deg(v2)=1,
deg(v1)=2), whether every component is a balanced tree, and whether the
forest has a perfect matching.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import NotBipartiteError
from .graphs import SimpleGraph, components, disjoint_union

FAMILIES = ("path", "star", "spider", "double_broom", "double_star", "union", "custom")


@dataclass(frozen=True)
class PatternGraph:
    graph: SimpleGraph
    family: str
    spec: str
    bipartition: Optional[tuple[tuple[int, ...], tuple[int, ...]]]
    tails: tuple[tuple[int, int, int], ...]
    balanced: bool
    has_perfect_matching: bool

    @property
    def vertex_count(self) -> int:
        return self.graph.n

    @property
    def edge_count(self) -> int:
        return self.graph.edge_count


def _as_graph(h) -> SimpleGraph:
    return h.graph if isinstance(h, PatternGraph) else h


def _annotate(graph: SimpleGraph, family: str, spec: str) -> PatternGraph:
    try:
        bip = bipartition(graph)
    except NotBipartiteError:
        bip = None
    forest = is_forest(graph)
    return PatternGraph(
        graph=graph,
        family=family,
        spec=spec,
        bipartition=bip,
        tails=tuple(find_tails(graph)),
        balanced=is_balanced(graph) if forest else False,
        has_perfect_matching=has_perfect_matching_forest(graph) if forest else False,
    )


# -- generators --------------------------------------------------------


def make_path(length: int) -> PatternGraph:
    """Path on `length` vertices (so length-1 edges)."""
    if length < 1:
        raise ValueError("path needs at least one vertex")
    g = SimpleGraph.from_edges(length, [(i, i + 1) for i in range(length - 1)])
    return _annotate(g, "path", f"path:{length}")


def make_star(leaves: int) -> PatternGraph:
    """Star with `leaves` leaves attached to center 0."""
    if leaves < 0:
        raise ValueError("leaf count must be >= 0")
    g = SimpleGraph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
    return _annotate(g, "star", f"star:{leaves}")


def make_spider(lengths: list[int]) -> PatternGraph:
    """Spider: paths of the given edge-lengths sharing the common vertex 0."""
    if not lengths:
        raise ValueError("spider needs at least one branch")
    if any(l < 1 for l in lengths):
        raise ValueError("branch lengths must be >= 1")
    edges = []
    nxt = 1
    for l in lengths:
        prev = 0
        for _ in range(l):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    g = SimpleGraph.from_edges(nxt, edges)
    return _annotate(g, "spider", "spider:" + ",".join(str(l) for l in lengths))


def make_double_broom(t: int, s1: int, s2: int) -> PatternGraph:
    """Path on t vertices with s1 leaves on one end and s2 on the other."""
    if t < 2:
        raise ValueError("double broom needs a path of at least 2 vertices")
    if s1 < 1 or s2 < 1:
        raise ValueError("leaf counts must be >= 1")
    edges = [(i, i + 1) for i in range(t - 1)]
    nxt = t
    for _ in range(s1):
        edges.append((0, nxt))
        nxt += 1
    for _ in range(s2):
        edges.append((t - 1, nxt))
        nxt += 1
    g = SimpleGraph.from_edges(nxt, edges)
    return _annotate(g, "double_broom", f"dbroom:{t},{s1},{s2}")


def make_double_star(a: int) -> PatternGraph:
    """Two adjacent centers with a-1 leaves each: a balanced tree on 2a vertices."""
    if a < 2:
        raise ValueError("double star needs a >= 2")
    broom = make_double_broom(2, a - 1, a - 1)
    return _annotate(broom.graph, "double_star", f"dstar:{a}")


def forest_union(h1: PatternGraph, h2: PatternGraph) -> PatternGraph:
    """Disjoint union of two acyclic patterns."""
    if not is_forest(h1.graph) or not is_forest(h2.graph):
        raise ValueError("forest_union requires acyclic inputs")
    g = disjoint_union(h1.graph, h2.graph)
    return _annotate(g, "union", f"{h1.spec}+{h2.spec}")


def custom_pattern(graph: SimpleGraph, spec: str | None = None) -> PatternGraph:
    """Wrap an arbitrary graph for NIM counting; no structure is assumed."""
    return _annotate(graph, "custom", spec or f"custom:{graph.n}v{graph.edge_count}e")


def custom_pattern_from_json(text: str) -> PatternGraph:
    """Load a custom pattern from JSON of the form {"n": int, "edges": [[u, v], ...]}."""
    import json

    payload = json.loads(text)
    for field in ("n", "edges"):
        if field not in payload:
            raise ValueError(f"pattern JSON missing field {field!r}")
    g = SimpleGraph.from_edges(int(payload["n"]), [tuple(e) for e in payload["edges"]])
    return custom_pattern(g)


# -- classifiers -------------------------------------------------------


def find_tails(h) -> list[tuple[int, int, int]]:
    """All triples (v0, v1, v2) with deg(v2)=1, deg(v1)=2 and N(v1)={v0, v2}."""
    g = _as_graph(h)
    out = []
    for v1 in range(g.n):
        if g.degree(v1) != 2:
            continue
        a, b = g.neighbors(v1)
        if g.degree(b) == 1:
            out.append((a, v1, b))
        if g.degree(a) == 1:
            out.append((b, v1, a))
    return sorted(out)


def bipartition(h) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """2-coloring by BFS per component, returned with |A| <= |B|.

    Per component the side containing its lowest-indexed vertex goes to A;
    the sides are swapped as a whole only if that leaves A larger.  Ties
    keep vertex 0 in A.  Raises NotBipartiteError on an odd cycle.
    """
    g = _as_graph(h)
    side = [-1] * g.n
    for comp in components(g):
        root = comp[0]
        side[root] = 0
        queue = [root]
        while queue:
            v = queue.pop(0)
            for w in g.neighbors(v):
                if side[w] == -1:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    raise NotBipartiteError(f"odd cycle through edge ({v}, {w})")
    a = tuple(v for v in range(g.n) if side[v] == 0)
    b = tuple(v for v in range(g.n) if side[v] == 1)
    if len(a) > len(b):
        a, b = b, a
    return a, b


def is_forest(h) -> bool:
    g = _as_graph(h)
    return g.edge_count == g.n - len(components(g))


def has_perfect_matching_forest(h) -> bool:
    """Greedy leaf-matching: exact and linear for forests.

    Repeatedly match a leaf to its neighbor and delete both; the forest has
    a perfect matching iff nothing is left over.
    """
    g = _as_graph(h)
    if not is_forest(g):
        raise ValueError("perfect-matching test is implemented for forests only")
    if g.n % 2 == 1:
        return False
    adj = list(g.adj)
    alive = (1 << g.n) - 1
    leaves = [v for v in range(g.n) if adj[v].bit_count() == 1]
    matched = 0
    while leaves:
        v = leaves.pop()
        if not (alive >> v) & 1 or adj[v].bit_count() != 1:
            continue
        u = adj[v].bit_length() - 1
        for x in (u, v):
            alive &= ~(1 << x)
        for w in range(g.n):
            if (adj[w] >> u) & 1 or (adj[w] >> v) & 1:
                adj[w] &= ~((1 << u) | (1 << v))
                if (alive >> w) & 1 and adj[w].bit_count() == 1:
                    leaves.append(w)
        adj[u] = adj[v] = 0
        matched += 2
    return matched == g.n


def is_balanced(h) -> bool:
    """True iff every component is a tree with equal bipartition classes."""
    g = _as_graph(h)
    if not is_forest(g):
        raise ValueError("balance test is implemented for forests only")
    for comp in components(g):
        sub_side = {comp[0]: 0}
        queue = [comp[0]]
        while queue:
            v = queue.pop(0)
            for w in g.neighbors(v):
                if w not in sub_side:
                    sub_side[w] = 1 - sub_side[v]
                    queue.append(w)
        sizes = [sum(1 for s in sub_side.values() if s == i) for i in (0, 1)]
        if sizes[0] != sizes[1]:
            return False
    return True


# -- text DSL ----------------------------------------------------------
#
#   pattern := atom ("+" atom)*          (disjoint union, left-assoc)
#   atom    := "path:"INT | "star:"INT | "spider:"INT(","INT)*
#            | "dbroom:"INT","INT","INT | "dstar:"INT


class PatternSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def parse_pattern(text: str) -> PatternGraph:
    """Parse the pattern DSL; raises PatternSyntaxError with an offset."""
    if not text:
        raise PatternSyntaxError("empty pattern", 0)
    parts = []
    offset = 0
    for chunk in text.split("+"):
        parts.append(_parse_atom(chunk, offset))
        offset += len(chunk) + 1
    result = parts[0]
    for part in parts[1:]:
        result = forest_union(result, part)
    return result


def _parse_atom(chunk: str, offset: int) -> PatternGraph:
    if ":" not in chunk:
        raise PatternSyntaxError(f"expected 'family:args', got {chunk!r}", offset)
    name, _, args = chunk.partition(":")
    try:
        values = [int(x) for x in args.split(",")] if args else []
    except ValueError:
        raise PatternSyntaxError(f"non-integer argument in {args!r}", offset + len(name) + 1)
    try:
        if name == "path":
            _expect(values, 1, name, offset)
            return make_path(values[0])
        if name == "star":
            _expect(values, 1, name, offset)
            return make_star(values[0])
        if name == "spider":
            if not values:
                raise PatternSyntaxError("spider needs at least one length", offset)
            return make_spider(values)
        if name == "dbroom":
            _expect(values, 3, name, offset)
            return make_double_broom(*values)
        if name == "dstar":
            _expect(values, 1, name, offset)
            return make_double_star(values[0])
    except ValueError as exc:
        if isinstance(exc, PatternSyntaxError):
            raise
        raise PatternSyntaxError(str(exc), offset)
    raise PatternSyntaxError(f"unknown family {name!r}", offset)


def _expect(values: list[int], count: int, name: str, offset: int) -> None:
    if len(values) != count:
        raise PatternSyntaxError(f"{name} takes {count} argument(s), got {len(values)}", offset)
