"""Branch and tree decompositions: containers, validation, heuristics, conversion."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .errors import DecompositionError
from .graph import Graph

TreeEdge = tuple[int, int]


def _tree_check(num_nodes: int, tree_edges: Iterable[TreeEdge]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(num_nodes)]
    seen_pairs = set()
    for a, b in tree_edges:
        if not (0 <= a < num_nodes and 0 <= b < num_nodes):
            raise DecompositionError(f"tree edge ({a}, {b}) refers to a missing node")
        if a == b:
            raise DecompositionError(f"tree loop at node {a}")
        key = (min(a, b), max(a, b))
        if key in seen_pairs:
            raise DecompositionError(f"duplicate tree edge {key}")
        seen_pairs.add(key)
        adj[a].append(b)
        adj[b].append(a)
    if num_nodes == 0:
        return adj
    if len(seen_pairs) != num_nodes - 1:
        raise DecompositionError("tree must have exactly num_nodes - 1 edges")
    seen = {0}
    stack = [0]
    while stack:
        for y in adj[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != num_nodes:
        raise DecompositionError("tree is not connected")
    return adj


@dataclass(frozen=True)
class BranchDecomposition:
    """Ternary tree whose leaves are in bijection with the graph's edges.

    ``leaves`` holds ``(node, edge_index)`` pairs. ``width`` is the declared
    width; `validate` checks it against the graph.
    """

    num_nodes: int
    tree_edges: tuple[TreeEdge, ...]
    leaves: tuple[tuple[int, int], ...]
    width: int | None = None

    @property
    def leaf_of_edge(self) -> dict[int, int]:
        return {e: node for node, e in self.leaves}

    @property
    def edge_of_leaf(self) -> dict[int, int]:
        return dict(self.leaves)

    def adjacency(self) -> list[list[int]]:
        return _tree_check(self.num_nodes, self.tree_edges)

    def check_structure(self) -> None:
        """Graph-independent invariants: tree shape, degrees, leaf bijection."""
        if self.num_nodes < 1:
            raise DecompositionError("a branch decomposition has at least one node")
        adj = self.adjacency()
        nodes = [n for n, _ in self.leaves]
        edges = sorted(e for _, e in self.leaves)
        if len(set(nodes)) != len(nodes):
            raise DecompositionError("a node carries two edges")
        if edges != list(range(len(edges))):
            raise DecompositionError("leaf labels are not a bijection onto edges 0..m-1")
        labelled = set(nodes)
        for x in range(self.num_nodes):
            d = len(adj[x])
            if x in labelled:
                if d > 1:
                    raise DecompositionError(f"leaf node {x} has degree {d}")
            elif d != 3:
                raise DecompositionError(f"internal node {x} has degree {d}, expected 3")

    def borders(self, g: Graph) -> dict[TreeEdge, frozenset[int]]:
        """Border of every tree edge, keyed by ``(min, max)`` node pair."""
        adj = self.adjacency()
        label = self.edge_of_leaf
        deg = g.degrees()
        parent = [-1] * self.num_nodes
        order = [0]
        seen = [False] * self.num_nodes
        seen[0] = True
        for x in order:
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    order.append(y)
        counts: list[dict[int, int]] = [dict() for _ in range(self.num_nodes)]
        out = {}
        for x in reversed(order):
            cnt = counts[x]
            if x in label:
                for v in g.edges[label[x]]:
                    cnt[v] = cnt.get(v, 0) + 1
            if parent[x] >= 0:
                out[(min(x, parent[x]), max(x, parent[x]))] = frozenset(
                    v for v, c in cnt.items() if c < deg[v]
                )
                pc = counts[parent[x]]
                for v, c in cnt.items():
                    pc[v] = pc.get(v, 0) + c
        return out

    def compute_width(self, g: Graph) -> int:
        return max((len(b) for b in self.borders(g).values()), default=0)

    def validate(self, g: Graph) -> None:
        """Raise `DecompositionError` naming the first violated invariant."""
        self.check_structure()
        if len(self.leaves) != g.m:
            raise DecompositionError(f"{len(self.leaves)} leaves but graph has {g.m} edges")
        if self.width is not None:
            actual = self.compute_width(g)
            if actual != self.width:
                raise DecompositionError(f"declared width {self.width} but actual width {actual}")

    def with_width(self, g: Graph) -> "BranchDecomposition":
        return BranchDecomposition(self.num_nodes, self.tree_edges, self.leaves, self.compute_width(g))


@dataclass(frozen=True)
class TreeDecomposition:
    bags: tuple[frozenset[int], ...]
    tree_edges: tuple[TreeEdge, ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def validate(self, g: Graph) -> None:
        """The three tree-decomposition conditions, plus tree shape."""
        if not self.bags:
            raise DecompositionError("a tree decomposition needs at least one bag")
        adj = _tree_check(len(self.bags), self.tree_edges)
        covered = set().union(*self.bags)
        for v in range(g.n):
            if v not in covered:
                raise DecompositionError(f"vertex {v} is in no bag")
        for v in covered:
            if not 0 <= v < g.n:
                raise DecompositionError(f"bag vertex {v} is out of range")
        for u, v in g.edges:
            if not any(u in b and v in b for b in self.bags):
                raise DecompositionError(f"edge ({u}, {v}) is in no bag")
        for v in covered:
            holders = {i for i, b in enumerate(self.bags) if v in b}
            start = min(holders)
            seen, stack = {start}, [start]
            while stack:
                for y in adj[stack.pop()]:
                    if y in holders and y not in seen:
                        seen.add(y)
                        stack.append(y)
            if seen != holders:
                raise DecompositionError(f"bags containing vertex {v} are not connected")


# -- building branch decompositions from labelled trees ------------------


def _normalise(adj: dict[int, set[int]], label: dict[int, int], g: Graph) -> BranchDecomposition:
    """Turn a tree with edge-labelled leaves into a valid branch decomposition.

    Unlabelled nodes of degree <= 1 are pruned, unlabelled degree-2 nodes are
    suppressed and unlabelled nodes of degree > 3 are split into chains.
    """
    adj = {x: set(ys) for x, ys in adj.items()}
    changed = True
    while changed:
        changed = False
        for x in sorted(adj):
            if x in label or x not in adj:
                continue
            d = len(adj[x])
            if d <= 1 and len(adj) > 1:
                for y in adj[x]:
                    adj[y].discard(x)
                del adj[x]
                changed = True
            elif d == 2:
                a, b = sorted(adj[x])
                adj[a].discard(x)
                adj[b].discard(x)
                adj[a].add(b)
                adj[b].add(a)
                del adj[x]
                changed = True
    fresh = max(adj, default=-1) + 1
    for x in sorted(adj):
        if x in label or len(adj[x]) <= 3:
            continue
        nbrs = sorted(adj[x])
        for y in nbrs:
            adj[y].discard(x)
        del adj[x]
        chain = list(range(fresh, fresh + len(nbrs) - 2))
        fresh += len(chain)
        for c in chain:
            adj[c] = set()

        def link(a, b):
            adj[a].add(b)
            adj[b].add(a)

        link(chain[0], nbrs[0])
        link(chain[0], nbrs[1])
        for i, c in enumerate(chain[1:], start=1):
            link(chain[i - 1], c)
            link(c, nbrs[i + 1])
        link(chain[-1], nbrs[-1])
    ids = {x: i for i, x in enumerate(sorted(adj))}
    tree_edges = tuple(sorted({(min(ids[x], ids[y]), max(ids[x], ids[y])) for x in adj for y in adj[x]}))
    leaves = tuple(sorted((ids[x], e) for x, e in label.items()))
    bd = BranchDecomposition(len(ids), tree_edges, leaves)
    bd.check_structure()
    return bd.with_width(g)


def _require_edges(g: Graph) -> None:
    if g.m == 0:
        raise DecompositionError("a branch decomposition needs at least one edge")


def bisection_branch_decomposition(g: Graph) -> BranchDecomposition:
    """Recursive balanced edge bisection, growing each half greedily.

    A half is grown from its least edge by repeatedly adding the adjacent edge
    that keeps the border (with respect to the whole graph) smallest.
    """
    _require_edges(g)
    deg = g.degrees()
    adj: dict[int, set[int]] = {}
    label: dict[int, int] = {}
    counter = [0]

    def new_node():
        counter[0] += 1
        adj[counter[0]] = set()
        return counter[0]

    def link(a, b):
        adj[a].add(b)
        adj[b].add(a)

    def split(ids: list[int]) -> int:
        node = new_node()
        if len(ids) == 1:
            label[node] = ids[0]
            return node
        target = len(ids) // 2
        pool = set(ids)
        cnt: dict[int, int] = {}
        part: list[int] = []

        def delta(e):
            d = 0
            for x in g.edges[e]:
                c = cnt.get(x, 0)
                was = 0 < c < deg[x]
                now = 0 < c + 1 < deg[x]
                d += now - was
            return d

        while len(part) < target:
            touched = {x for e in part for x in g.edges[e]}
            cands = [e for e in pool if touched & set(g.edges[e])] or list(pool)
            e = min(cands, key=lambda f: (delta(f), f))
            for x in g.edges[e]:
                cnt[x] = cnt.get(x, 0) + 1
            part.append(e)
            pool.discard(e)
        link(node, split(sorted(part)))
        link(node, split(sorted(pool)))
        return node

    split(list(range(g.m)))
    return _normalise(adj, label, g)


def _elimination(g: Graph, pick) -> TreeDecomposition:
    """Eliminate vertices in the order chosen by ``pick(alive, nb)``."""
    nb = [set(g.neighbours(v)) for v in range(g.n)]
    alive = set(range(g.n))
    order, bags = [], []
    while alive:
        v = pick(alive, nb)
        bags.append(frozenset({v} | nb[v]))
        order.append(v)
        for a in nb[v]:
            nb[a] |= nb[v] - {a}
            nb[a].discard(v)
        alive.discard(v)
    pos = {v: i for i, v in enumerate(order)}
    tree_edges = []
    for i, v in enumerate(order[:-1]):
        later = [pos[u] for u in bags[i] if u != v]
        parent = min(later) if later else i + 1
        tree_edges.append((i, parent))
    if not bags:
        bags = [frozenset()]
    return TreeDecomposition(tuple(bags), tuple(tree_edges))


def min_degree_tree_decomposition(g: Graph) -> TreeDecomposition:
    """Tree decomposition from the min-degree elimination ordering."""
    return _elimination(g, lambda alive, nb: min(alive, key=lambda x: (len(nb[x]), x)))


def elimination_tree_decomposition(g: Graph, order) -> TreeDecomposition:
    """Tree decomposition from a fixed elimination order (a permutation of the vertices)."""
    order = list(order)
    if sorted(order) != list(range(g.n)):
        raise DecompositionError("order must be a permutation of the vertices")
    rank = {v: i for i, v in enumerate(order)}
    return _elimination(g, lambda alive, nb: min(alive, key=rank.__getitem__))


def treedecomp_to_branchdecomp(td: TreeDecomposition, g: Graph) -> BranchDecomposition:
    """Branch decomposition of width at most ``td.width + 1``.

    Each edge hangs as a leaf off the first bag holding both endpoints; the
    bag tree is then pruned and made ternary. Every border lies inside one bag.
    """
    td.validate(g)
    _require_edges(g)
    nb = len(td.bags)
    adj: dict[int, set[int]] = {i: set() for i in range(nb)}
    for a, b in td.tree_edges:
        adj[a].add(b)
        adj[b].add(a)
    label = {}
    for e, (u, v) in enumerate(g.edges):
        home = next(i for i, bag in enumerate(td.bags) if u in bag and v in bag)
        leaf = nb + e
        adj[leaf] = {home}
        adj[home].add(leaf)
        label[leaf] = e
    return _normalise(adj, label, g)


def tree_decomposition_branchdecomp(g: Graph) -> BranchDecomposition:
    return treedecomp_to_branchdecomp(min_degree_tree_decomposition(g), g)


def heuristic_branch_decomposition(g: Graph) -> BranchDecomposition:
    """Narrower of the bisection and min-degree-elimination decompositions."""
    _require_edges(g)
    a = bisection_branch_decomposition(g)
    b = tree_decomposition_branchdecomp(g)
    return b if b.width < a.width else a


def random_branch_decomposition(g: Graph, seed: int) -> BranchDecomposition:
    """Uniformly random merge tree over the edges (valid, usually wide)."""
    _require_edges(g)
    rng = random.Random(seed)
    adj: dict[int, set[int]] = {}
    label = {}
    roots = []
    for e in range(g.m):
        adj[e] = set()
        label[e] = e
        roots.append(e)
    nxt = g.m
    while len(roots) > 1:
        i, j = sorted(rng.sample(range(len(roots)), 2))
        b = roots.pop(j)
        a = roots.pop(i)
        adj[nxt] = {a, b}
        adj[a].add(nxt)
        adj[b].add(nxt)
        roots.append(nxt)
        nxt += 1
    return _normalise(adj, label, g)


def caterpillar_branch_decomposition(g: Graph, order: Iterable[int] | None = None) -> BranchDecomposition:
    """Linear (caterpillar) decomposition following ``order`` (default: index order)."""
    _require_edges(g)
    order = list(range(g.m)) if order is None else list(order)
    if sorted(order) != list(range(g.m)):
        raise DecompositionError("order must be a permutation of the edge indices")
    adj: dict[int, set[int]] = {e: set() for e in range(g.m)}
    label = {e: e for e in range(g.m)}
    prev = order[0]
    nxt = g.m
    for e in order[1:]:
        adj[nxt] = {prev, e}
        adj[prev].add(nxt)
        adj[e].add(nxt)
        prev = nxt
        nxt += 1
    return _normalise(adj, label, g)
