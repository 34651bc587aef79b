"""Exact Turan numbers: closed forms where known, brute-force oracle otherwise.

`ex_path` evaluates the path formula ex(n, P_l) = a*C(l-1,2) + C(b,2) for
n = a(l-1) + b, 0 <= b <= l-2, together with the extremal-graph recipe
(disjoint (l-1)-cliques, optionally one clique joined to independent
vertices).  `ex_balanced_forest` evaluates the balanced-forest formula for
patterns with at least two components.  `turan_oracle` maximizes edges over
all pattern-free graphs by a depth-first search over the canonical edge
order and serves as an independent cross-check on both formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from .errors import ResourceLimitError, TuranUnavailableError
from .graphs import (
    SimpleGraph,
    all_pairs,
    complete_edge_count,
    components,
    disjoint_union,
    join,
)
from .nim import _find_through, contains
from .patterns import PatternGraph, _as_graph, is_balanced, is_forest

ORACLE_MAX_N = 10
ORACLE_MAX_PATTERN = 12


@dataclass(frozen=True)
class TuranResult:
    n: int
    pattern: str
    value: int
    method: str  # faudree_schelp | bushaw_kettle | oracle
    recipe: Optional[dict] = None
    witness: Optional[SimpleGraph] = None
    below_threshold: bool = False

    def to_dict(self) -> dict:
        payload = {
            "n": self.n,
            "pattern": self.pattern,
            "value": self.value,
            "method": self.method,
            "recipe": self.recipe,
            "below_threshold": self.below_threshold,
        }
        if self.witness is not None:
            payload["witness_edges"] = sorted(self.witness.edges())
        return payload


# -- paths ---------------------------------------------------------------


def ex_path(n: int, length: int) -> TuranResult:
    """Maximum edges of an n-vertex graph with no path on `length` vertices."""
    if length < 2:
        raise ValueError("path length must be >= 2 vertices")
    if n < 0:
        raise ValueError("n must be >= 0")
    a, b = divmod(n, length - 1)
    value = a * comb(length - 1, 2) + comb(b, 2)
    recipe = {"a": a, "b": b, "t_range": list(path_extremal_t_range(n, length))}
    return TuranResult(n, f"path:{length}", value, "faudree_schelp", recipe)


def path_extremal_t_range(n: int, length: int) -> range:
    """Valid t for `extremal_path_graph`: 0..a in the even split cases, else just a."""
    a, b = divmod(n, length - 1)
    if length % 2 == 0 and b in (length // 2, length // 2 - 1):
        return range(0, a + 1)
    return range(a, a + 1)


def extremal_path_graph(n: int, length: int, t: int) -> SimpleGraph:
    """An n-vertex graph with ex(n, P_length) edges and no path on `length` vertices.

    With t maximal this is t disjoint (length-1)-cliques plus one b-clique;
    for even `length` and the two remainder values that allow it, smaller t
    replaces leftover cliques with a (length/2-1)-clique joined to
    independent vertices.  Edge count and path-freeness are asserted.
    """
    a, b = divmod(n, length - 1)
    valid = path_extremal_t_range(n, length)
    if t not in valid:
        raise ValueError(
            f"t={t} invalid for n={n}, length={length}: "
            f"allowed t in {list(valid)} (a={a}, b={b})"
        )
    g = SimpleGraph.empty(0)
    for _ in range(t):
        g = disjoint_union(g, SimpleGraph.complete(length - 1))
    rest = n - t * (length - 1)
    if t == a:
        g = disjoint_union(g, SimpleGraph.complete(b))
    else:
        half = length // 2
        g = disjoint_union(g, join(SimpleGraph.complete(half - 1), SimpleGraph.empty(rest - half + 1)))
    expected = ex_path(n, length).value
    if g.edge_count != expected:
        raise AssertionError(f"extremal graph has {g.edge_count} edges, expected {expected}")
    if n <= 64 and contains(g, make_path_graph(length)):
        raise AssertionError("extremal graph contains the forbidden path")
    return g


def near_extremal_path_graph(n: int, k: int, t: int) -> SimpleGraph:
    """The t-clique family for even paths P_2k at arbitrary n (not always extremal).

    Defined whenever n - t(2k-1) - (k-1) >= 0; its edge count is within
    C(k,2) of ex(n, P_2k) for every n, with equality of the deficit exactly
    at n divisible by 2k-1.
    """
    rest = n - t * (2 * k - 1) - (k - 1)
    if k < 2 or t < 0 or rest < 0:
        raise ValueError(f"invalid near-extremal parameters n={n}, k={k}, t={t}")
    g = SimpleGraph.empty(0)
    for _ in range(t):
        g = disjoint_union(g, SimpleGraph.complete(2 * k - 1))
    return disjoint_union(g, join(SimpleGraph.complete(k - 1), SimpleGraph.empty(rest)))


def make_path_graph(length: int) -> SimpleGraph:
    return SimpleGraph.from_edges(length, [(i, i + 1) for i in range(length - 1)])


# -- balanced forests ------------------------------------------------------


def ex_balanced_forest(n: int, h: PatternGraph) -> TuranResult:
    """Turan number of a balanced forest with >= 2 components, order 2m.

    Value is C(m-1,2) + (m-1)(n-m+1) when the forest has a perfect
    matching and (m-1)(n-m+1) otherwise.  The formula is certified only
    for n past a threshold that is astronomically large at these sizes;
    below it the result carries `below_threshold=True`.
    """
    g = h.graph
    if not is_forest(g):
        raise ValueError("pattern must be a forest")
    if len(components(g)) < 2:
        raise ValueError("pattern must have at least two components")
    if g.n % 2 == 1:
        raise ValueError("pattern must have even order")
    if not is_balanced(g):
        raise ValueError("pattern must be balanced (equal classes per component)")
    m = g.n // 2
    base = (m - 1) * (n - m + 1)
    value = base + (comb(m - 1, 2) if h.has_perfect_matching else 0)
    threshold = 3 * m * m + 32 * m * m * comb(2 * m, m)
    return TuranResult(
        n,
        h.spec,
        value,
        "bushaw_kettle",
        recipe={"half_order": m, "perfect_matching": h.has_perfect_matching},
        below_threshold=n < threshold,
    )


# -- brute-force oracle ------------------------------------------------------


def turan_oracle(
    n: int,
    h,
    *,
    max_n: int = ORACLE_MAX_N,
    max_pattern: int = ORACLE_MAX_PATTERN,
) -> TuranResult:
    """Exact maximum edges over all pattern-free n-vertex graphs, by search.

    Depth-first over the canonical edge order; each edge is included (when
    that creates no copy of the pattern through it) or excluded.  Prunes
    when the remaining undecided edges cannot beat the best found, and
    restricts to graphs with non-increasing degree order (every graph has
    such a relabeling, so the maximum is unaffected).  Attaches a witness.
    """
    pattern = _as_graph(h)
    if n > max_n:
        raise ResourceLimitError(f"oracle limited to n <= {max_n}, got {n}")
    if pattern.n > max_pattern:
        raise ResourceLimitError(f"oracle limited to pattern order <= {max_pattern}")
    if pattern.edge_count == 0:
        raise ValueError("pattern needs at least one edge")

    m = complete_edge_count(n)
    pairs = all_pairs(n)
    adj = [0] * n
    best = -1
    best_adj: tuple[int, ...] = tuple(adj)

    def rec(idx: int, count: int) -> None:
        nonlocal best, best_adj
        if count + (m - idx) <= best:
            return
        if idx == m:
            if n >= 2 and adj[n - 1].bit_count() > adj[n - 2].bit_count():
                return
            if n >= 3 and adj[n - 2].bit_count() > adj[n - 3].bit_count():
                return
            best = count
            best_adj = tuple(adj)
            return
        u, v = pairs[idx]
        if v == u + 1 and u >= 2:
            # row u is starting, so deg(u-1) is final: enforce sortedness
            if adj[u - 1].bit_count() > adj[u - 2].bit_count():
                return
        # include first so good solutions tighten the bound early
        bu, bv = 1 << u, 1 << v
        if u == 0 or adj[u].bit_count() < adj[u - 1].bit_count():
            adj[u] |= bv
            adj[v] |= bu
            if _find_through(adj, n, pattern, u, v) is None:
                rec(idx + 1, count + 1)
            adj[u] &= ~bv
            adj[v] &= ~bu
        rec(idx + 1, count)

    rec(0, 0)
    witness = SimpleGraph(n, best_adj)
    if contains(witness, pattern):
        raise AssertionError("oracle witness contains the pattern")
    if witness.edge_count != best:
        raise AssertionError("oracle witness edge count mismatch")
    spec = h.spec if isinstance(h, PatternGraph) else f"custom:{pattern.n}v{pattern.edge_count}e"
    return TuranResult(n, spec, best, "oracle", witness=witness)


# -- shift inequality for the path formula -----------------------------------


def lemma_gap(n1: int, n2: int, c: int, length: int) -> tuple[int, int]:
    """Both sides of the strict inequality
    ex(n1,P) + ex(n2,P) < ex(n1-c,P) + ex(n2+c+length,P)."""
    if min(n1, n2, c) < 0 or n1 - c < 0:
        raise ValueError("arguments must be >= 0 with n1 - c >= 0")
    if length < 2:
        raise ValueError("path length must be >= 2")
    lhs = ex_path(n1, length).value + ex_path(n2, length).value
    rhs = ex_path(n1 - c, length).value + ex_path(n2 + c + length, length).value
    return lhs, rhs


# -- dispatcher ---------------------------------------------------------------


def turan_value(n: int, h: PatternGraph, *, allow_oracle: bool = True) -> TuranResult:
    """Best available Turan value for a pattern: formula if known, else oracle."""
    if h.family == "path":
        return ex_path(n, h.vertex_count)
    if (
        is_forest(h.graph)
        and len(components(h.graph)) >= 2
        and h.vertex_count % 2 == 0
        and h.balanced
    ):
        return ex_balanced_forest(n, h)
    if allow_oracle and n <= ORACLE_MAX_N and h.vertex_count <= ORACLE_MAX_PATTERN:
        return turan_oracle(n, h)
    raise TuranUnavailableError(f"no Turan value available for {h.spec} at n={n}")
