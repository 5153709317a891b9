"""Exact solver parameterised by the cycle-space dimension.

Take a feedback edge set F (the non-tree edges of a spanning forest). Every
optimal colouring restricts to some assignment of {0,1,2} to F; for each of
the 3^|F| assignments, colours used on F are forbidden at their endpoints in
the residual forest and the forest solver fills in the rest.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product

from .errors import OracleRefused, PreconditionError
from .forest import FULL, solve_forest
from .graph import EdgeColoring, Graph
from .solution import Solution

MAX_FEEDBACK = 20


@dataclass(frozen=True)
class FeedbackEdgeSet:
    edges: tuple[int, ...]  # F, ascending edge indices
    forest: tuple[int, ...]  # G - F, ascending edge indices

    @property
    def dimension(self) -> int:
        return len(self.edges)


def feedback_edge_set(g: Graph) -> FeedbackEdgeSet:
    """Non-tree edges of the spanning forest built greedily in edge-index order."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree, back = [], []
    for i, (u, v) in enumerate(g.edges):
        ru, rv = find(u), find(v)
        if ru == rv:
            back.append(i)
        else:
            parent[ru] = rv
            tree.append(i)
    return FeedbackEdgeSet(tuple(back), tuple(tree))


def guess_allowance(g: Graph, fes: FeedbackEdgeSet, guess) -> list[int] | None:
    """Vertex allowances induced by colouring F with ``guess``; None if improper.

    A colour used on an F-edge is removed from both endpoints. A vertex that
    sees both true colours on F therefore ends with allowance {0}, which is the
    same as deleting it from the forest.
    """
    w = [FULL] * g.n
    for e, c in zip(fes.edges, guess):
        if not c:
            continue
        bit = 1 << c
        for x in g.edges[e]:
            if not w[x] & bit:
                return None  # two F-edges of colour c meet at x
            w[x] &= ~bit
    return w


def solve_guess(g: Graph, fes: FeedbackEdgeSet, forest: Graph, guess) -> Solution | None:
    """Best colouring of ``g`` that agrees with ``guess`` on F."""
    w = guess_allowance(g, fes, guess)
    if w is None:
        return None
    inner = solve_forest(forest, w)
    colors = [0] * g.m
    for j, e in enumerate(fes.forest):
        colors[e] = inner.coloring[j]
    for e, c in zip(fes.edges, guess):
        colors[e] = c
    value = inner.value + sum(1 for c in guess if c)
    return Solution(value, EdgeColoring(colors), "cyclespace")


def _scan(g, fes, forest, guesses):
    best, best_idx, feasible, visited = None, -1, 0, 0
    for idx, guess in guesses:
        visited += 1
        sol = solve_guess(g, fes, forest, guess)
        if sol is None:
            continue
        feasible += 1
        if best is None or sol.value > best.value:
            best, best_idx = sol, idx
    return best, best_idx, feasible, visited


def solve_cyclespace(
    g: Graph, *, max_feedback: int = MAX_FEEDBACK, threads: int = 1, engine: str = "cyclespace"
) -> Solution:
    """Exact nu_2 by enumerating colourings of a feedback edge set.

    Guesses are visited in base-3 counter order over F sorted by edge index
    (first F-edge most significant); ties go to the earliest guess, also when
    ``threads > 1`` splits the counter range.
    """
    fes = feedback_edge_set(g)
    k = fes.dimension
    if k > max_feedback:
        raise OracleRefused(
            f"feedback edge set has {k} > {max_feedback} edges; use the branchdp engine"
        )
    forest, _ = g.edge_subgraph(fes.forest)
    total = 3**k
    if threads <= 1 or total < 2 * threads:
        best, _, feasible, visited = _scan(g, fes, forest, enumerate(product(range(3), repeat=k)))
    else:
        bounds = [total * t // threads for t in range(threads + 1)]

        def chunk(t):
            lo, hi = bounds[t], bounds[t + 1]
            return _scan(g, fes, forest, ((i, _digits(i, k)) for i in range(lo, hi)))

        with ThreadPoolExecutor(threads) as pool:
            parts = list(pool.map(chunk, range(threads)))
        feasible = sum(p[2] for p in parts)
        visited = sum(p[3] for p in parts)
        best = None
        for sol, _, _, _ in parts:  # chunks are in counter order; strict > keeps the earliest
            if sol is not None and (best is None or sol.value > best.value):
                best = sol
    assert best is not None  # the all-zero guess is always proper
    stats = {"feedback": k, "guesses": visited, "feasible_guesses": feasible}
    return Solution(best.value, best.coloring, engine, stats)


def _digits(i: int, k: int) -> tuple[int, ...]:
    out = [0] * k
    for pos in range(k - 1, -1, -1):
        i, out[pos] = divmod(i, 3)
    return tuple(out)


def logedge_bound(g: Graph) -> float:
    return g.n + (math.log2(g.n) if g.n > 0 else 0.0)


def solve_logedge(g: Graph) -> Solution:
    """Polynomial case: connected graphs with m <= n + log2(n).

    At most log2(n) non-tree edges, so at most n^log2(3) guesses.
    """
    if len(g.components()) > 1:
        raise PreconditionError("solve_logedge needs a connected graph")
    if g.m > logedge_bound(g):
        raise PreconditionError(f"m={g.m} exceeds n + log2(n) = {logedge_bound(g):.3f}")
    return solve_cyclespace(g, max_feedback=g.m, engine="logedge")
