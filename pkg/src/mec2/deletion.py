"""Deleting few edges or vertices to reach a 2-edge-colourable graph.

Both problems are solved by iterative compression: edges (vertices) are
added in index order while a solution of size <= k is maintained; when it
grows to k+1, every split of that set into a kept-deleted part Z and an
undeletable part W is tried, and the "disjoint" subproblem is solved around
the fixed colouring of W.

Edge version: the disjoint subproblem reduces to colour-constrained paths and
cycles (`solve_constrained_paths`), solved by a conflict scan.

Vertex version: edges leaving W become pendant constraints on the remaining
graph (`PendantInstance`), solved by guessing roots of multi-edge pendants
and a dynamic program along the resulting paths and cycles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable

from .errors import PreconditionError
from .graph import (
    EdgeColoring,
    Graph,
    coloring_violation,
    edges_2ec_feasible,
    is_2ec_feasible,
    two_coloring,
    walk_components,
)


@dataclass(frozen=True)
class ConstrainedPathInstance:
    """Host graph of maximum degree two; edges in ``ones`` (``twos``) must get
    colour 1 (2) unless deleted."""

    host: Graph
    ones: frozenset[int] = frozenset()
    twos: frozenset[int] = frozenset()


@dataclass(frozen=True)
class Pendant:
    """An outside vertex joined to ``roots``; all its edges must get ``color``."""

    color: int
    roots: tuple[int, ...]


@dataclass(frozen=True)
class PendantInstance:
    core: Graph
    pendants: tuple[Pendant, ...] = ()


@dataclass(frozen=True)
class DeletionCertificate:
    """Removed edges or vertices plus a total proper colouring of what is left.

    ``witness`` is indexed by the edges of the original graph; it is 0 exactly
    on removed edges (or edges touching removed vertices).
    """

    kind: str  # "edges" or "vertices"
    removed: frozenset[int]
    witness: EdgeColoring
    stats: dict = field(default_factory=dict, compare=False)

    def residual_edges(self, g: Graph) -> list[int]:
        if self.kind == "edges":
            return [i for i in range(g.m) if i not in self.removed]
        return [i for i, (u, v) in enumerate(g.edges) if u not in self.removed and v not in self.removed]

    def check(self, g: Graph, budget: int | None = None) -> bool:
        if budget is not None and len(self.removed) > budget:
            return False
        keep = set(self.residual_edges(g))
        if coloring_violation(g, self.witness) is not None:
            return False
        if any((self.witness[i] != 0) != (i in keep) for i in range(g.m)):
            return False
        return edges_2ec_feasible(g.n, [g.edges[i] for i in keep])


# -- constrained paths and cycles ------------------------------------------


def _implied(p: int, c: int, q: int) -> int:
    """Colour forced at position q by colour c at position p on an alternating run."""
    return c if (q - p) % 2 == 0 else 3 - c


def _conflict(a: tuple[int, int], b: tuple[int, int], dist: int | None = None) -> bool:
    (p, c), (q, d) = a, b
    if dist is None:
        dist = q - p
    return _implied(0, c, dist) != d


def _scan_path(cons: list[tuple[int, int]]) -> list[int]:
    """Greedy left-to-right: on each conflict delete the right constrained edge.

    Deleting it also cuts the path, so the next constrained edge starts fresh.
    """
    dels = []
    prev = None
    for item in cons:
        if prev is not None and _conflict(prev, item):
            dels.append(item[0])
            prev = None
        else:
            prev = item
    return dels


def _scan_cycle(cons: list[tuple[int, int]], length: int) -> list[int]:
    r = len(cons)
    if r == 0:
        return [0] if length % 2 else []
    for j in range(r):
        a, b = cons[j], cons[(j + 1) % r]
        dist = (b[0] - a[0]) % length or length
        if not _conflict(a, b, dist):
            # open the cycle into the path from b round to a, leaving out the gap
            start = b[0]
            rotated = [((p - start) % length, c) for p, c in cons[(j + 1) % r :] + cons[: (j + 1) % r]]
            return [(p + start) % length for p in _scan_path(rotated)]
    # every consecutive pair conflicts: delete every second constrained edge
    picks = list(range(1, r, 2))
    if r % 2:
        picks.append(r - 1)
    return [cons[i][0] for i in picks]


def _color_walk(length: int, cyc: bool, dels: set[int], req: dict[int, int]) -> list[int]:
    """Alternate colours along the runs left after deleting positions ``dels``."""
    out = [0] * length
    if cyc and dels:
        s = min(dels)
        order = [(s + 1 + t) % length for t in range(length - 1)]
    else:
        order = list(range(length))
    runs, cur = [], []
    for p in order:
        if p in dels:
            if cur:
                runs.append(cur)
            cur = []
        else:
            cur.append(p)
    if cur:
        runs.append(cur)
    for run in runs:
        anchor = next((t for t, p in enumerate(run) if p in req), None)
        base = req[run[anchor]] if anchor is not None else 1
        a = anchor or 0
        for t, p in enumerate(run):
            out[p] = _implied(a, base, t)
    return out


def solve_constrained_paths(inst: ConstrainedPathInstance) -> tuple[frozenset[int], list[int]]:
    """Smallest X such that host - X has a proper 2-colouring meeting the constraints.

    Edges in both ``ones`` and ``twos`` are deleted up front. Returns X and a
    colouring of the host edges (0 on X).
    """
    h = inst.host
    if h.max_degree() > 2:
        raise PreconditionError("constrained-path instances need maximum degree <= 2")
    forced = set(inst.ones) & set(inst.twos)
    req = {e: 1 for e in inst.ones if e not in forced}
    req.update({e: 2 for e in inst.twos if e not in forced})
    X = set(forced)
    colors = [0] * h.m
    for _, es, cyc in walk_components(h, [i for i in range(h.m) if i not in forced]):
        cons = [(p, req[e]) for p, e in enumerate(es) if e in req]
        dels = _scan_cycle(cons, len(es)) if cyc else _scan_path(cons)
        X.update(es[p] for p in dels)
        local_req = {p: req[e] for p, e in enumerate(es) if e in req}
        for p, c in enumerate(_color_walk(len(es), cyc, set(dels), local_req)):
            colors[es[p]] = c
    for e in X:
        colors[e] = 0
    return frozenset(X), colors


# -- edge deletion ---------------------------------------------------------


def _colorings_of(g: Graph, ids: Iterable[int]):
    """All proper total 2-colourings of the edges ``ids`` (max degree two, no odd cycle)."""
    walks = [es for _, es, cyc in walk_components(g, ids)]
    for flips in product((0, 1), repeat=len(walks)):
        colors = {}
        for flip, es in zip(flips, walks):
            for j, e in enumerate(es):
                colors[e] = 1 + (j + flip) % 2
        yield colors


def solve_disjoint_edges(g: Graph, W: Iterable[int], k: int) -> DeletionCertificate | None:
    """Find X disjoint from W, |X| <= k, with g - X 2-edge-colourable.

    Requires g - W to be 2-edge-colourable already.
    """
    W = frozenset(W)
    rest = [i for i in range(g.m) if i not in W]
    if not edges_2ec_feasible(g.n, [g.edges[i] for i in rest]):
        raise PreconditionError("g - W must be 2-edge-colourable")
    if k < 0:
        return None
    if not edges_2ec_feasible(g.n, [g.edges[i] for i in W]):
        return None
    host, back = g.edge_subgraph(rest)
    for f_w in _colorings_of(g, W):
        at = [0] * g.n  # colour bits present at each vertex from W
        for e, c in f_w.items():
            u, v = g.edges[e]
            at[u] |= 1 << c
            at[v] |= 1 << c
        ones, twos, forced = set(), set(), set()
        for j, e in enumerate(back):
            u, v = g.edges[e]
            seen = at[u] | at[v]
            if seen == 0b110:
                forced.add(j)
            elif seen == 0b100:
                ones.add(j)
            elif seen == 0b010:
                twos.add(j)
        if len(forced) > k:
            continue
        # forced edges go in both sets, which the path solver deletes first
        X, hcol = solve_constrained_paths(
            ConstrainedPathInstance(host, frozenset(ones | forced), frozenset(twos | forced))
        )
        if len(X) > k:
            continue
        colors = [0] * g.m
        for e, c in f_w.items():
            colors[e] = c
        for j, e in enumerate(back):
            colors[e] = hcol[j]
        return DeletionCertificate("edges", frozenset(back[j] for j in X), EdgeColoring(colors))
    return None


def solve_edge_deletion(g: Graph, k: int) -> DeletionCertificate | None:
    """Iterative compression for deleting at most k edges (3^k * poly)."""
    if k < 0:
        raise PreconditionError("budget must be non-negative")
    X: set[int] = set()
    compressions = disjoint_calls = 0
    for i in range(g.m):
        if edges_2ec_feasible(g.n, [g.edges[j] for j in range(i + 1) if j not in X]):
            continue
        grown = X | {i}
        if len(grown) <= k:
            X = grown
            continue
        compressions += 1
        gi, _ = g.edge_subgraph(range(i + 1))  # prefix: indices are unchanged
        found = None
        for z in range(k + 1):
            for Z in combinations(sorted(grown), z):
                h, back = gi.without_edges(Z)
                pos = {e: j for j, e in enumerate(back)}
                disjoint_calls += 1
                cert = solve_disjoint_edges(h, [pos[e] for e in grown - set(Z)], k - z)
                if cert is not None:
                    found = set(Z) | {back[j] for j in cert.removed}
                    break
            if found is not None:
                break
        if found is None:
            return None
        X = found
    colors = two_coloring(g, [i for i in range(g.m) if i not in X])
    assert colors is not None
    stats = {"compressions": compressions, "disjoint_calls": disjoint_calls}
    return DeletionCertificate("edges", frozenset(X), EdgeColoring(colors), stats)


# -- vertex deletion -------------------------------------------------------


def _chain_dp(verts, es, cyc, avail, bad, core: Graph):
    """Minimum deletions along one path or cycle of the core.

    ``avail[x]`` is the mask of true colours still free at x after its pendant
    edges; ``bad[x]`` marks vertices whose pendants alone are improper.
    State: (x deleted, colour of edge arriving at x, first vertex deleted,
    colour of first edge); the last two matter only for cycles.
    """
    L = len(verts)
    INF = float("inf")
    layers = []
    start = {}
    start[(1, 0, 1, 0)] = (1, None, 0)
    if not bad[verts[0]]:
        start[(0, 0, 0, 0)] = (0, None, 0)
    layers.append(start)
    for i in range(1, L):
        x_prev, x = verts[i - 1], verts[i]
        nxt: dict = {}
        for st, (cost, _, _) in layers[-1].items():
            d, col, d0, f0 = st
            for dn in (0, 1):
                if dn == 0 and bad[x]:
                    continue
                opts = []
                if d == 0 and dn == 0:
                    for c in (1, 2):
                        if c != col and avail[x_prev] >> c & 1 and avail[x] >> c & 1:
                            opts.append(c)
                    if not opts:
                        continue
                else:
                    opts = [0]
                for c in opts:
                    new = (dn, c, d0, c if i == 1 else f0)
                    val = cost + dn
                    if val < nxt.get(new, (INF,))[0]:
                        nxt[new] = (val, st, c)
        layers.append(nxt)
    best, best_state, closing = INF, None, 0
    for st, (cost, _, _) in layers[-1].items():
        d, col, d0, f0 = st
        c_close = 0
        if cyc and d == 0 and d0 == 0:
            a, b = verts[-1], verts[0]
            opts = [c for c in (1, 2) if c not in (col, f0) and avail[a] >> c & 1 and avail[b] >> c & 1]
            if not opts:
                continue
            c_close = opts[0]
        if cost < best:
            best, best_state, closing = cost, st, c_close
    deleted, colors = [], {}
    st = best_state
    for i in range(L - 1, -1, -1):
        cost, prev, c = layers[i][st]
        if st[0]:
            deleted.append(verts[i])
        if i > 0 and c:
            colors[es[i - 1]] = c
        st = prev
    if cyc and closing:
        colors[es[-1]] = closing
    return deleted, colors


def solve_pendant_paths(inst: PendantInstance) -> tuple[frozenset[int], list[int]]:
    """Minimum core-vertex deletion when every pendant has at most one root.

    Returns the deleted set and a colouring of the core edges (0 on edges at
    deleted vertices); pendant edges at surviving roots carry their own colour.
    """
    core = inst.core
    if core.max_degree() > 2:
        raise PreconditionError("pendant instances need a core of maximum degree <= 2")
    at: list[list[int]] = [[] for _ in range(core.n)]
    for p in inst.pendants:
        if len(p.roots) > 1:
            raise PreconditionError("solve_pendant_paths takes single-root pendants only")
        if p.color not in (1, 2):
            raise PreconditionError("pendant colours must be 1 or 2")
        for x in p.roots:
            at[x].append(p.color)
    bad = [len(cs) != len(set(cs)) for cs in at]
    avail = [0b110 & ~sum(1 << c for c in set(cs)) for cs in at]
    J: set[int] = set()
    colors = [0] * core.m
    covered = set()
    for verts, es, cyc in walk_components(core):
        covered.update(verts)
        dels, cols = _chain_dp(verts, es, cyc, avail, bad, core)
        J.update(dels)
        for e, c in cols.items():
            colors[e] = c
    for x in range(core.n):
        if x not in covered and bad[x]:
            J.add(x)
    return frozenset(J), colors


def solve_pendant_general(inst: PendantInstance, k: int) -> frozenset[int] | None:
    """Delete at most k core vertices so the pendant constraints can be met."""
    res = _pendant_general(inst, k)
    return None if res is None else res[0]


def _pendant_general(inst: PendantInstance, k: int) -> tuple[frozenset[int], list[int]] | None:
    """`solve_pendant_general` that also returns a colouring of the core edges.

    A pendant with r >= 2 roots needs r - 1 of them deleted, so one with more
    than k + 1 roots is a no-instance. Several pendants may share roots, so
    their number alone does not bound the deletions. Every subset R of at
    most k multi-pendant roots leaving each pendant with <= 1 root is tried
    and the rest is solved exactly.
    """
    if k < 0:
        return None
    multi = [p for p in inst.pendants if len(p.roots) >= 2]
    if any(len(p.roots) > k + 1 for p in multi):
        return None
    pool = sorted(set().union(*(p.roots for p in multi))) if multi else []
    for r in range(min(k, len(pool)) + 1):
        for R in combinations(pool, r):
            Rs = set(R)
            if any(len(set(p.roots) - Rs) > 1 for p in multi):
                continue
            core, back = inst.core.without_vertices(Rs)
            pend = tuple(
                Pendant(p.color, tuple(x for x in p.roots if x not in Rs)) for p in inst.pendants
            )
            J, sub_colors = solve_pendant_paths(PendantInstance(core, pend))
            if len(J) + r <= k:
                colors = [0] * inst.core.m
                for j, e in enumerate(back):
                    colors[e] = sub_colors[j]
                return frozenset(J | Rs), colors
    return None


def _free_choices(xs: list[int], k: int):
    """Ways a vertex of W with no W-edges keeps at most one edge per colour.

    Yields ``(kept, dropped)`` where kept maps colour -> neighbour.
    """
    opts = [None] + xs
    for a in opts:
        for b in opts:
            if a is not None and a == b:
                continue
            kept = {c: x for c, x in ((1, a), (2, b)) if x is not None}
            dropped = [x for x in xs if x not in kept.values()]
            if len(dropped) <= k:
                yield kept, dropped


def solve_disjoint_vertices(g: Graph, W: Iterable[int], k: int) -> DeletionCertificate | None:
    """Find X disjoint from W, |X| <= k, with g - X 2-edge-colourable.

    Requires g - W to be 2-edge-colourable already. For every colouring of
    g[W], edges from W to the rest become pendant constraints: a W-vertex
    with both colours present forces its outside neighbours out, one with a
    single colour c becomes a pendant of colour 3 - c, and one with no W-edges
    keeps at most one outside edge per colour (all choices are tried).
    """
    W = frozenset(W)
    core, core_back = g.without_vertices(W)
    if not is_2ec_feasible(core):
        raise PreconditionError("g - W must be 2-edge-colourable")
    if k < 0:
        return None
    inner = [i for i, (u, v) in enumerate(g.edges) if u in W and v in W]
    if not edges_2ec_feasible(g.n, [g.edges[i] for i in inner]):
        return None
    cross: dict[int, list[int]] = {w: [] for w in sorted(W)}
    for u, v in g.edges:
        if (u in W) != (v in W):
            w, x = (u, v) if u in W else (v, u)
            cross[w].append(x)
    for f_w in _colorings_of(g, inner):
        at = {w: 0 for w in W}
        for e, c in f_w.items():
            for x in g.edges[e]:
                at[x] |= 1 << c
        forced: set[int] = set()
        fixed: list[tuple[int, Pendant]] = []
        free: list[int] = []
        for w, xs in cross.items():
            if not xs:
                continue
            if at[w] == 0b110:
                forced.update(xs)
            elif at[w]:
                colour = 2 if at[w] == 0b010 else 1
                fixed.append((w, Pendant(colour, tuple(xs))))
            else:
                free.append(w)
        if len(forced) > k:
            continue
        for picks in product(*(list(_free_choices(cross[w], k)) for w in free)):
            drop = set(forced)
            pend = list(fixed)
            for w, (kept, dropped) in zip(free, picks):
                drop.update(dropped)
                pend.extend((w, Pendant(c, (x,))) for c, x in kept.items())
            if len(drop) > k:
                continue
            kcore, kback = core.without_vertices(drop)
            inst = PendantInstance(
                kcore,
                tuple(Pendant(p.color, tuple(x for x in p.roots if x not in drop)) for _, p in pend),
            )
            res = _pendant_general(inst, k - len(drop))
            if res is None:
                continue
            J, kcol = res
            removed = frozenset(drop | J)
            colors = [0] * g.m
            for e, c in f_w.items():
                colors[e] = c
            for j, e in enumerate(kback):
                colors[core_back[e]] = kcol[j]
            for w, p in pend:
                for x in p.roots:
                    if x not in removed:
                        colors[g.edge_index(w, x)] = p.color
            return DeletionCertificate("vertices", removed, EdgeColoring(colors))
    return None


def solve_vertex_deletion(g: Graph, k: int) -> DeletionCertificate | None:
    """Iterative compression for deleting at most k vertices."""
    if k < 0:
        raise PreconditionError("budget must be non-negative")
    X: set[int] = set()
    compressions = disjoint_calls = 0
    for i in range(g.n):
        gi, _ = g.induced(range(i + 1))
        if is_2ec_feasible(gi.without_vertices(X)[0]):
            continue
        grown = X | {i}
        if len(grown) <= k:
            X = grown
            continue
        compressions += 1
        found = None
        for z in range(k + 1):
            for Z in combinations(sorted(grown), z):
                h, _ = gi.without_vertices(Z)
                disjoint_calls += 1
                cert = solve_disjoint_vertices(h, grown - set(Z), k - z)
                if cert is not None:
                    found = set(Z) | cert.removed
                    break
            if found is not None:
                break
        if found is None:
            return None
        X = found
    rest, back = g.without_vertices(X)
    sub = two_coloring(rest)
    assert sub is not None
    colors = [0] * g.m
    for j, e in enumerate(back):
        colors[e] = sub[j]
    stats = {"compressions": compressions, "disjoint_calls": disjoint_calls}
    return DeletionCertificate("vertices", frozenset(X), EdgeColoring(colors), stats)


def _minimise(solve, g: Graph, upper: int) -> DeletionCertificate:
    """Smallest budget that succeeds: doubling, then binary search."""
    lo, hi = -1, 1
    best = solve(g, 0)
    if best is not None:
        return best
    lo = 0
    while True:
        hi = min(hi, upper)
        cert = solve(g, hi)
        if cert is not None:
            best = cert
            break
        lo = hi
        hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        cert = solve(g, mid)
        if cert is not None:
            best, hi = cert, mid
        else:
            lo = mid
    return best


def minimum_edge_deletion(g: Graph) -> DeletionCertificate:
    return _minimise(solve_edge_deletion, g, g.m)


def minimum_vertex_deletion(g: Graph) -> DeletionCertificate:
    return _minimise(solve_vertex_deletion, g, g.n)
