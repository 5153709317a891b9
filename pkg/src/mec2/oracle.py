"""Brute-force ground truth.

Everything here is deliberately naive: subsets are scanned from the largest
size down and the first feasible one wins. Inputs above the size guards are
refused with `OracleRefused` instead of running for hours.
"""

from __future__ import annotations

from itertools import combinations

from .errors import OracleRefused, PreconditionError
from .graph import EdgeColoring, Graph, edges_2ec_feasible, two_coloring
from .solution import Solution

MAX_EDGES_K2 = 20
MAX_EDGES_KN = 16
MAX_EDGES_DELETION = 18
MAX_VERTICES_DELETION = 12


def _k_edge_colorable(n: int, edges: list[tuple[int, int]], k: int) -> list[int] | None:
    """Backtracking proper k-edge-colouring with colours ``1..k``."""
    used = [0] * n  # bitmask of colours at each vertex
    colors = [0] * len(edges)
    order = sorted(range(len(edges)), key=lambda i: edges[i])

    def go(pos, top):
        if pos == len(order):
            return True
        i = order[pos]
        u, v = edges[i]
        busy = used[u] | used[v]
        # symmetry: a fresh colour is only tried once (the lowest unused so far)
        for c in range(1, min(k, top + 1) + 1):
            bit = 1 << c
            if busy & bit:
                continue
            used[u] |= bit
            used[v] |= bit
            colors[i] = c
            if go(pos + 1, max(top, c)):
                return True
            used[u] &= ~bit
            used[v] &= ~bit
        colors[i] = 0
        return False

    return list(colors) if go(0, 0) else None


def nu_k_brute(g: Graph, k: int, *, max_edges: int | None = None) -> tuple[int, tuple[int, ...]]:
    """Maximum number of edges of a k-edge-colourable subgraph, with a witness.

    The witness assigns colours ``1..k`` (``0`` = unused) per edge index. For
    ``k = 2`` subset feasibility is the degree/odd-cycle test; for larger ``k``
    it is exhaustive backtracking.
    """
    if k < 1:
        raise PreconditionError("k must be at least 1")
    limit = max_edges if max_edges is not None else (MAX_EDGES_K2 if k == 2 else MAX_EDGES_KN)
    if g.m > limit:
        raise OracleRefused(f"oracle limited to m <= {limit} for k={k}, got m={g.m}")
    edges = list(g.edges)
    # each colour class is a matching, so no k-colourable subgraph exceeds k*n/2 edges
    top = min(g.m, (k * g.n) // 2)
    for size in range(top, -1, -1):
        for subset in combinations(range(g.m), size):
            chosen = [edges[i] for i in subset]
            if k == 2:
                if not edges_2ec_feasible(g.n, chosen):
                    continue
                witness = two_coloring(g, subset)
            else:
                cols = _k_edge_colorable(g.n, chosen, k)
                if cols is None:
                    continue
                witness = [0] * g.m
                for i, c in zip(subset, cols):
                    witness[i] = c
            return size, tuple(witness)
    raise AssertionError("the empty subgraph is always colourable")


def solve_brute(g: Graph, *, max_edges: int | None = None) -> Solution:
    value, witness = nu_k_brute(g, 2, max_edges=max_edges)
    return Solution(value, EdgeColoring(witness), "brute")


def min_edge_deletion_brute(g: Graph) -> int:
    """Fewest edges whose removal leaves a 2-edge-colourable graph."""
    if g.m > MAX_EDGES_DELETION:
        raise OracleRefused(f"edge-deletion oracle limited to m <= {MAX_EDGES_DELETION}")
    edges = list(g.edges)
    for size in range(g.m + 1):
        for drop in combinations(range(g.m), size):
            d = set(drop)
            if edges_2ec_feasible(g.n, [e for i, e in enumerate(edges) if i not in d]):
                return size
    raise AssertionError("deleting every edge always works")


def min_vertex_deletion_brute(g: Graph) -> int:
    """Fewest vertices whose removal leaves a 2-edge-colourable graph."""
    if g.n > MAX_VERTICES_DELETION:
        raise OracleRefused(f"vertex-deletion oracle limited to n <= {MAX_VERTICES_DELETION}")
    for size in range(g.n + 1):
        for drop in combinations(range(g.n), size):
            d = set(drop)
            rest = [(u, v) for u, v in g.edges if u not in d and v not in d]
            if edges_2ec_feasible(g.n, rest):
                return size
    raise AssertionError("deleting every vertex always works")


def check_cubic_inequality(g: Graph, *, max_edges: int = 21) -> bool:
    """Check nu_2(g) <= (n + 2 nu_3(g)) / 4 on a cubic graph.

    The guard defaults to 21 edges so cubic graphs up to 14 vertices fit.
    """
    if not g.is_cubic():
        raise PreconditionError("check_cubic_inequality needs a cubic graph")
    nu2, _ = nu_k_brute(g, 2, max_edges=max_edges)
    nu3, _ = nu_k_brute(g, 3, max_edges=max_edges)
    return 4 * nu2 <= g.n + 2 * nu3


def allowance_brute(g: Graph, allowance, *, max_edges: int = 16) -> int:
    """Best proper assignment from {0,1,2}^m with colour c on uv only if c is allowed at u and v.

    Exhaustive over all assignments; branches are cut as soon as a prefix is
    improper or breaks an allowance, which does not skip any valid assignment.
    Works for any graph, not just forests.
    """
    if g.m > max_edges:
        raise OracleRefused(f"allowance oracle limited to {max_edges} edges, got {g.m}")
    used = [0] * g.n
    best = 0

    def go(i: int, val: int) -> None:
        nonlocal best
        if val + (g.m - i) <= best:
            return
        if i == g.m:
            best = val
            return
        u, v = g.edges[i]
        for c in (1, 2):
            bit = 1 << c
            if allowance[u] & allowance[v] & bit and not (used[u] | used[v]) & bit:
                used[u] |= bit
                used[v] |= bit
                go(i + 1, val + 1)
                used[u] &= ~bit
                used[v] &= ~bit
        go(i + 1, val)

    go(0, 0)
    return best
