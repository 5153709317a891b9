"""Dense graphs, the decision version, and the engine dispatcher.

When the minimum degree is at least n/2 a Hamiltonian cycle exists and is
optimal (minus one edge for odd n); otherwise m <= 4(n - δ)^2 and brute force
is bounded in n - δ.
"""

from __future__ import annotations

from .branchdp import solve_branchdp
from .cyclespace import feedback_edge_set, logedge_bound, solve_cyclespace, solve_logedge
from .errors import OracleRefused, PreconditionError
from .graph import EdgeColoring, Graph, max_matching
from .oracle import MAX_EDGES_K2, solve_brute
from .solution import Solution

CYCLESPACE_THRESHOLD = 18


def ore_hamiltonian_cycle(g: Graph) -> list[int]:
    """Hamiltonian cycle of a graph with n >= 3 and δ >= n/2.

    Start from the identity ordering read cyclically. While some consecutive
    pair (c0, c1) is non-adjacent, find j with c0 ~ c_j and c1 ~ c_{j+1} and
    reverse c1..c_j; each exchange removes at least one gap, so at most n
    exchanges of O(n) each are needed.
    """
    n = g.n
    if n < 3 or 2 * g.min_degree() < n:
        raise PreconditionError("Ore construction needs n >= 3 and min degree >= n/2")
    adj = [set(g.neighbours(v)) for v in range(n)]
    cyc = list(range(n))
    while True:
        gap = next((i for i in range(n) if cyc[(i + 1) % n] not in adj[cyc[i]]), None)
        if gap is None:
            return cyc
        cyc = cyc[gap:] + cyc[:gap]  # gap now sits between cyc[0] and cyc[1]
        a, b = cyc[0], cyc[1]
        j = next(
            (j for j in range(2, n - 1) if cyc[j] in adj[a] and cyc[j + 1] in adj[b]),
            None,
        )
        if j is None:  # impossible under the degree condition
            raise AssertionError("no Ore exchange found")
        cyc[1 : j + 1] = reversed(cyc[1 : j + 1])


def _small(g: Graph) -> Solution:
    colors = [1 if i == 0 else 0 for i in range(g.m)]
    return Solution(sum(colors), EdgeColoring(colors), "dense")


def solve_dense(g: Graph, *, max_edges: int = MAX_EDGES_K2) -> Solution:
    """Hamiltonian-cycle case when δ >= n/2, brute force otherwise."""
    n = g.n
    if n <= 2:
        return _small(g)
    if 2 * g.min_degree() >= n:
        cyc = ore_hamiltonian_cycle(g)
        colors = [0] * g.m
        stop = n if n % 2 == 0 else n - 1
        for i in range(stop):
            colors[g.edge_index(cyc[i], cyc[(i + 1) % n])] = 1 + i % 2
        return Solution(stop, EdgeColoring(colors), "dense", {"branch": "hamiltonian"})
    if g.m > max_edges:
        raise OracleRefused(
            f"sparse branch needs brute force on m={g.m} > {max_edges}; use cyclespace or branchdp"
        )
    sol = solve_brute(g, max_edges=max_edges)
    return Solution(sol.value, sol.coloring, "dense", {"branch": "brute"})


def _choose(comp: Graph, threshold: int) -> str:
    if comp.m <= logedge_bound(comp):
        return "logedge"
    if comp.n >= 3 and 2 * comp.min_degree() >= comp.n:
        return "dense"
    if feedback_edge_set(comp).dimension <= threshold:
        return "cyclespace"
    return "branchdp"


def dispatch(g: Graph, *, threshold: int = CYCLESPACE_THRESHOLD, threads: int = 1) -> Solution:
    """Solve each component with the cheapest applicable exact engine.

    Per component: logedge if m <= n + log2(n), dense if δ >= n/2, cyclespace
    if the feedback edge set has at most ``threshold`` edges, else branchdp.
    Isolated vertices are skipped. ``stats["components"]`` lists the engine
    used per non-trivial component.
    """
    colors = [0] * g.m
    tags = []
    total = 0
    for vs in g.components():
        comp, back = g.relabel(vs)
        if comp.m == 0:
            continue
        tag = _choose(comp, threshold)
        if tag == "logedge":
            sol = solve_logedge(comp)
        elif tag == "dense":
            sol = solve_dense(comp)
        elif tag == "cyclespace":
            sol = solve_cyclespace(comp, max_feedback=threshold, threads=threads)
        else:
            sol = solve_branchdp(comp)
        total += sol.value
        tags.append(tag)
        for j, c in enumerate(sol.coloring):
            colors[back[j]] = c
    engine = "+".join(sorted(set(tags))) or "trivial"
    return Solution(total, EdgeColoring(colors), engine, {"components": tags})


def decide_nu2_at_least(g: Graph, t: int) -> bool:
    """Decide nu_2(g) >= t.

    A matching of size >= t settles it at once. Otherwise nu < t, so nu_2 <
    2t, and the exact dispatcher runs on an instance bounded by the parameter.
    """
    if t < 0:
        raise PreconditionError("t must be non-negative")
    if t == 0:
        return True
    nu = len(max_matching(g))
    if nu >= t:
        return True
    if t > min(g.m, g.n, 2 * nu):
        return False
    return dispatch(g).value >= t
