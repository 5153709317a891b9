"""Simple undirected graphs, 2-edge-colourability and matchings.

Vertices are the integers ``0..n-1``. Edges are stored as a sorted tuple of
pairs ``(u, v)`` with ``u < v``; the position of a pair in that tuple is its
edge index, and every solver reports colourings indexed that way.

Colour ``0`` marks an edge that is left out (the dummy slot); ``1`` and ``2``
are the two true colours.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx

from .errors import GraphError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        edges = tuple(tuple(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        prev = None
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not 0 <= u < v < self.n:
                raise GraphError(f"edge ({u}, {v}) is not canonical for n={self.n}")
            if prev is not None and (u, v) <= prev:
                raise GraphError("edges must be sorted and free of duplicates")
            prev = (u, v)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph from pairs in any order and orientation.

        Loops and repeated pairs are rejected rather than silently dropped.
        """
        seen = set()
        for a, b in edges:
            if a == b:
                raise GraphError(f"self-loop at vertex {a}")
            e = (a, b) if a < b else (b, a)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, tuple(sorted(seen)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """``adjacency[u]`` lists ``(neighbour, edge_index)`` in ascending order."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            adj[u].append((v, i))
            adj[v].append((u, i))
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def _index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def edge_index(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        try:
            return self._index[(u, v)]
        except KeyError:
            raise KeyError(f"no edge ({u}, {v})") from None

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._index

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def neighbours(self, u: int) -> list[int]:
        return [v for v, _ in self.adjacency[u]]

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by least vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                u = stack.pop()
                comp.append(u)
                for v, _ in self.adjacency[u]:
                    if not seen[v]:
                        seen[v] = True
                        stack.append(v)
            comps.append(sorted(comp))
        return comps

    def is_cubic(self) -> bool:
        return self.n > 0 and all(d == 3 for d in self.degrees())

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())

    # -- derived graphs -------------------------------------------------

    def edge_subgraph(self, ids: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Keep only the given edges; returns the subgraph and new->old indices."""
        keep = tuple(sorted(set(ids)))
        return Graph(self.n, tuple(self.edges[i] for i in keep)), keep

    def without_edges(self, ids: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        drop = set(ids)
        return self.edge_subgraph(i for i in range(self.m) if i not in drop)

    def without_vertices(self, xs: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Delete all edges touching ``xs``; vertex numbering is unchanged."""
        xs = set(xs)
        return self.edge_subgraph(
            i for i, (u, v) in enumerate(self.edges) if u not in xs and v not in xs
        )

    def induced(self, vs: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Edges with both ends in ``vs``; vertex numbering is unchanged."""
        vs = set(vs)
        return self.edge_subgraph(
            i for i, (u, v) in enumerate(self.edges) if u in vs and v in vs
        )

    def relabel(self, vertices: Sequence[int]) -> tuple["Graph", tuple[int, ...]]:
        """Compact subgraph induced by ``vertices`` (renumbered in the given order).

        Returns the new graph and, for each of its edges, the index of the
        corresponding edge in ``self``.
        """
        pos = {v: i for i, v in enumerate(vertices)}
        pairs = []
        for i, (u, v) in enumerate(self.edges):
            if u in pos and v in pos:
                a, b = pos[u], pos[v]
                pairs.append(((a, b) if a < b else (b, a), i))
        pairs.sort()
        return Graph(len(vertices), tuple(p for p, _ in pairs)), tuple(i for _, i in pairs)

    def to_networkx(self) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from(self.edges)
        return h


@dataclass(frozen=True)
class EdgeColoring:
    """Per-edge colours in ``{0, 1, 2}``; ``value`` counts the coloured edges."""

    colors: tuple[int, ...]

    def __post_init__(self):
        colors = tuple(int(c) for c in self.colors)
        if any(c not in (0, 1, 2) for c in colors):
            raise GraphError("colours must lie in {0, 1, 2}")
        object.__setattr__(self, "colors", colors)

    def __len__(self):
        return len(self.colors)

    def __getitem__(self, i):
        return self.colors[i]

    def value(self) -> int:
        return sum(1 for c in self.colors if c)

    @classmethod
    def empty(cls, m: int) -> "EdgeColoring":
        return cls((0,) * m)


# -- structural queries --------------------------------------------------


def components(g: Graph) -> list[list[int]]:
    return g.components()


def degrees(g: Graph) -> tuple[int, ...]:
    return g.degrees()


def is_cubic(g: Graph) -> bool:
    return g.is_cubic()


def _component_shapes(n: int, edges: Sequence[Edge]):
    """Yield ``(vertices, is_cycle)`` for each non-trivial component.

    Assumes maximum degree at most two.
    """
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, list[int]] = {}
    for u in range(n):
        if deg[u]:
            groups.setdefault(find(u), []).append(u)
    for vs in groups.values():
        yield vs, all(deg[u] == 2 for u in vs)


def is_2ec_feasible(g: Graph) -> bool:
    """True iff every edge of ``g`` can get colour 1 or 2 properly.

    Equivalent to: maximum degree at most two and no component is an odd cycle.
    """
    if g.max_degree() > 2:
        return False
    return not any(cyc and len(vs) % 2 for vs, cyc in _component_shapes(g.n, g.edges))


def edges_2ec_feasible(n: int, edges: Sequence[Edge]) -> bool:
    """`is_2ec_feasible` on a raw edge list, skipping Graph construction."""
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        if deg[u] > 2 or deg[v] > 2:
            return False
    return not any(cyc and len(vs) % 2 for vs, cyc in _component_shapes(n, edges))


def walk_components(g: Graph, ids: Iterable[int] | None = None):
    """Decompose a max-degree-two edge set into ordered walks.

    Yields ``(vertex_sequence, edge_sequence, is_cycle)``. For a path the
    vertex sequence has one more entry than the edge sequence and starts at
    the lower-numbered end; for a cycle it starts at the least vertex and
    follows the lower-indexed edge first, and ``edge_sequence[i]`` joins
    ``vertex_sequence[i]`` to ``vertex_sequence[(i+1) % len]``.
    """
    ids = range(g.m) if ids is None else sorted(set(ids))
    inc: dict[int, list[int]] = {}
    for i in ids:
        u, v = g.edges[i]
        inc.setdefault(u, []).append(i)
        inc.setdefault(v, []).append(i)
    if any(len(es) > 2 for es in inc.values()):
        raise GraphError("walk decomposition needs maximum degree at most two")
    used: set[int] = set()

    def follow(start, first_edge):
        verts, es = [start], []
        cur, e = start, first_edge
        while e is not None and e not in used:
            used.add(e)
            es.append(e)
            a, b = g.edges[e]
            cur = b if a == cur else a
            verts.append(cur)
            nxt = [f for f in inc[cur] if f not in used]
            e = nxt[0] if nxt else None
        return verts, es

    for s in sorted(inc):
        if len(inc[s]) == 1 and inc[s][0] not in used:
            verts, es = follow(s, inc[s][0])
            yield verts, es, False
    for s in sorted(inc):
        if any(e not in used for e in inc[s]):
            verts, es = follow(s, min(inc[s]))
            yield verts[:-1], es, True


def two_coloring(g: Graph, ids: Iterable[int] | None = None) -> list[int] | None:
    """Colour the edges ``ids`` (default: all) alternately with 1 and 2.

    Returns a full-length colour list (0 outside ``ids``), or ``None`` when the
    selected edges are not 2-edge-colourable.
    """
    colors = [0] * g.m
    try:
        walks = list(walk_components(g, ids))
    except GraphError:
        return None
    for _, es, cyc in walks:
        if cyc and len(es) % 2:
            return None
        for j, e in enumerate(es):
            colors[e] = 1 + (j % 2)
    return colors


def coloring_violation(g: Graph, c: EdgeColoring | Sequence[int]) -> str | None:
    """Describe the first properness violation, or return ``None``."""
    colors = c.colors if isinstance(c, EdgeColoring) else tuple(c)
    if len(colors) != g.m:
        raise ValueError(f"coloring has {len(colors)} entries but graph has {g.m} edges")
    for u in range(g.n):
        seen: dict[int, int] = {}
        for _, i in g.adjacency[u]:
            col = colors[i]
            if col not in (0, 1, 2):
                return f"edge {i} has colour {col} outside {{0,1,2}}"
            if col == 0:
                continue
            if col in seen:
                return f"vertex {u}: edges {seen[col]} and {i} both have colour {col}"
            seen[col] = i
    return None


def validate_coloring(g: Graph, c: EdgeColoring | Sequence[int]) -> bool:
    """True iff ``c`` is a proper partial 2-edge-colouring of ``g``.

    Raises ``ValueError`` when the length does not match ``g.m``.
    """
    return coloring_violation(g, c) is None


def max_matching(g: Graph) -> set[int]:
    """Edge indices of a maximum-cardinality matching (Edmonds via networkx)."""
    mate = nx.max_weight_matching(g.to_networkx(), maxcardinality=True)
    return {g.edge_index(u, v) for u, v in mate}
