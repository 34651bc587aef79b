"""Exact and heuristic maximization of the NIM count over all k-colorings.

`exhaustive_f` enumerates every k-coloring of E(K_n) with the color of the
first edge pinned to 0 (color permutations preserve the NIM count, so this
loses nothing for the maximum) and reports the true maximum.  A sound
branch-and-bound cut tracks edges already provably covered by a
monochromatic copy among the colored prefix: classes only grow along a
branch, so covered edges stay covered, and a branch whose uncovered budget
cannot beat the best is dropped.  Leaves are scored by the real NIM
counter.

`hill_climb_f` is the heuristic companion for sizes enumeration cannot
reach: steepest-ascent single-edge recoloring with fully deterministic
tie-breaking, restarted from seeded random colorings or from a
construction.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Optional

from .errors import ResourceLimitError
from .graphs import EdgeColoring, all_pairs, complete_edge_count
from .nim import _find_through, nim_edges
from .patterns import PatternGraph
from .turan import TuranResult, turan_value

DEFAULT_LEAF_BUDGET = 1 << 20
HILL_MAX_N = 40


@dataclass(frozen=True)
class SearchResult:
    n: int
    k: int
    pattern: str
    best_count: int
    witness: EdgeColoring
    method: str  # exhaustive | hill_climb
    exhaustive: bool
    colorings_examined: int
    elapsed: float

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "pattern": self.pattern,
            "best_count": self.best_count,
            "method": self.method,
            "exhaustive": self.exhaustive,
            "colorings_examined": self.colorings_examined,
            "elapsed": self.elapsed,
            "witness": self.witness.to_dict(),
        }


def exhaustive_f(
    n: int,
    k: int,
    h: PatternGraph,
    *,
    budget: int = DEFAULT_LEAF_BUDGET,
    prefix: tuple[int, ...] = (),
) -> SearchResult:
    """Exact maximum NIM count over all k-colorings of E(K_n).

    A non-empty `prefix` pins the colors of the first len(prefix) edges,
    turning the call into one shard of the full search; `merge_shards`
    combines shard results.  Shards over every prefix extension of (0,)
    jointly cover the same space the unsharded call does.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    m = complete_edge_count(n)
    if len(prefix) > m or any(not 0 <= c < k for c in prefix):
        raise ValueError("prefix does not fit the edge list")
    free = m - max(len(prefix), 1 if k > 1 else 0)
    if free >= 0 and k**free > budget:
        raise ResourceLimitError(
            f"{k}^{free} colorings exceed budget {budget}; try hill_climb_f"
        )
    started = time.perf_counter()
    pairs = all_pairs(n)
    pattern = h.graph
    colors = [0] * m
    class_adj = [[0] * n for _ in range(k)]
    best = -1
    best_colors: tuple[int, ...] = tuple(colors)
    leaves = 0

    def rec(idx: int, covered: int) -> None:
        nonlocal best, best_colors, leaves
        if m - covered.bit_count() <= best:
            return
        if idx == m:
            leaves += 1
            report = nim_edges(EdgeColoring(n, k, tuple(colors)), h)
            if report.count > best:
                best = report.count
                best_colors = tuple(colors)
            return
        u, v = pairs[idx]
        bu, bv = 1 << u, 1 << v
        if idx < len(prefix):
            choices: range | tuple[int, ...] = (prefix[idx],)
        elif idx == 0 and k > 1:
            choices = (0,)  # color permutations preserve the count
        else:
            choices = range(k)
        for c in choices:
            colors[idx] = c
            adj = class_adj[c]
            adj[u] |= bv
            adj[v] |= bu
            witness = _find_through(adj, n, pattern, u, v)
            new_covered = covered
            if witness is not None:
                for f in witness:
                    new_covered |= 1 << f
            rec(idx + 1, new_covered)
            adj[u] &= ~bv
            adj[v] &= ~bu
        colors[idx] = 0

    rec(0, 0)
    witness_coloring = EdgeColoring(n, k, best_colors)
    elapsed = time.perf_counter() - started
    return SearchResult(
        n, k, h.spec, best, witness_coloring, "exhaustive", not prefix, leaves, elapsed
    )


def merge_shards(shards: list[SearchResult]) -> SearchResult:
    """Monotone max-merge of shard results; ties keep the earliest shard."""
    if not shards:
        raise ValueError("nothing to merge")
    winner = max(shards, key=lambda r: r.best_count)  # max keeps the first on ties
    return SearchResult(
        winner.n,
        winner.k,
        winner.pattern,
        winner.best_count,
        winner.witness,
        "exhaustive",
        True,
        sum(r.colorings_examined for r in shards),
        sum(r.elapsed for r in shards),
    )


def hill_climb_f(
    n: int,
    k: int,
    h: PatternGraph,
    *,
    seed: int = 0,
    iterations: int = 50,
    restarts: int = 1,
    seed_coloring: Optional[EdgeColoring] = None,
) -> SearchResult:
    """Steepest-ascent local search over single-edge recolorings.

    Start 0 uses `seed_coloring` when given (a construction seed), all other
    starts draw random colorings from random.Random(seed).  Each step picks
    the recoloring with the largest NIM gain, ties broken by lowest edge
    index then lowest color, and stops at a local optimum or after
    `iterations` steps.  Fully deterministic for fixed arguments.
    """
    if n > HILL_MAX_N:
        raise ResourceLimitError(f"hill climb limited to n <= {HILL_MAX_N}")
    if restarts < 1:
        raise ValueError("need at least one start")
    if seed_coloring is not None and (seed_coloring.n != n or seed_coloring.k != k):
        raise ValueError("seed coloring does not match n, k")
    started = time.perf_counter()
    rng = random.Random(seed)
    m = complete_edge_count(n)
    best = -1
    best_witness: Optional[EdgeColoring] = None
    examined = 0

    for r in range(restarts):
        if r == 0 and seed_coloring is not None:
            current = seed_coloring
        else:
            current = EdgeColoring.random(n, k, rng)
        score = nim_edges(current, h).count
        examined += 1
        for _ in range(iterations):
            move = None  # (gain, edge, color, coloring, score)
            for e in range(m):
                old = current.colors[e]
                for c in range(k):
                    if c == old:
                        continue
                    cand = current.recolored(e, c)
                    cand_score = nim_edges(cand, h).count
                    examined += 1
                    if cand_score > score and (move is None or cand_score > move[0]):
                        move = (cand_score, e, c, cand)
            if move is None:
                break
            score, current = move[0], move[3]
        if score > best:
            best = score
            best_witness = current

    elapsed = time.perf_counter() - started
    assert best_witness is not None
    return SearchResult(
        n, k, h.spec, best, best_witness, "hill_climb", False, examined, elapsed
    )


def compare_to_turan(result: SearchResult, h: PatternGraph) -> dict:
    """Gap between a search result and (k-1) times the Turan value.

    The scale k-1 matches the overlay-style lower bound for k-colorings
    (for 2 colorings it is just the Turan number itself).  Desk-scale n is
    far below where the asymptotic theorems apply, so the gap is labeled
    as observed, not guaranteed.
    """
    ex: TuranResult = turan_value(result.n, h)
    scale = result.k - 1
    reference = scale * ex.value
    return {
        "n": result.n,
        "k": result.k,
        "pattern": result.pattern,
        "best_count": result.best_count,
        "ex_value": ex.value,
        "ex_method": ex.method,
        "ex_below_threshold": ex.below_threshold,
        "scale": scale,
        "reference": reference,
        "gap": result.best_count - reference,
        "note": f"observed at n={result.n}; theorems are asymptotic",
    }
