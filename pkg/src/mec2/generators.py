"""Instance generators.

All randomness goes through ``random.Random(seed)`` (Mersenne Twister,
identical across CPython platforms), so an ``(args, seed)`` pair always
produces the same graph.
"""

from __future__ import annotations

import random
import re
from itertools import combinations

from .errors import Mec2Error, PreconditionError
from .graph import Graph


def complete(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise PreconditionError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path on ``n`` vertices (``n - 1`` edges)."""
    if n < 1:
        raise PreconditionError("a path needs at least one vertex")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def empty(n: int) -> Graph:
    return Graph(n)


def wheel(spokes: int) -> Graph:
    """Hub 0 joined to every vertex of the cycle 1..spokes."""
    if spokes < 3:
        raise PreconditionError("a wheel needs at least 3 spokes")
    rim = [(i, i + 1) for i in range(1, spokes)] + [(1, spokes)]
    return Graph.from_edges(spokes + 1, rim + [(0, i) for i in range(1, spokes + 1)])


def grid(rows: int, cols: int) -> Graph:
    edges = []
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j
            if j + 1 < cols:
                edges.append((v, v + 1))
            if i + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges)


_FIXED = {
    "petersen": petersen,
    "k4": lambda: complete(4),
    "k5": lambda: complete(5),
    "k33": lambda: complete_bipartite(3, 3),
}
_SIZED = {"cycle": cycle, "path": path, "star": star, "complete": complete, "empty": empty, "wheel": wheel}


def gen_named(name: str, size: int | None = None) -> Graph:
    """Named graph: ``petersen``, ``k4``, ``k5``, ``k33``, or a sized family.

    Sized families (``cycle``, ``path``, ``star``, ``complete``, ``empty``, ``wheel``)
    take ``size`` either as the argument or inline, e.g. ``"cycle(5)"``.
    """
    key = name.strip().lower()
    m = re.fullmatch(r"([a-z_0-9]+)\s*\(\s*(\d+)\s*\)", key)
    if m:
        key, size = m.group(1), int(m.group(2))
    if key in _FIXED:
        return _FIXED[key]()
    if key in _SIZED:
        if size is None:
            raise PreconditionError(f"{key} needs a size")
        return _SIZED[key](size)
    raise Mec2Error(f"unknown graph name {name!r}")


def universal_join(g: Graph) -> Graph:
    """Add a vertex ``n`` adjacent to every vertex of ``g`` (radius becomes 1)."""
    z = g.n
    return Graph.from_edges(g.n + 1, list(g.edges) + [(v, z) for v in range(g.n)])


def disjoint_copies(g: Graph, copies: int) -> Graph:
    if copies < 1:
        raise PreconditionError("need at least one copy")
    edges = [(u + c * g.n, v + c * g.n) for c in range(copies) for u, v in g.edges]
    return Graph(g.n * copies, tuple(edges))


def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p): each pair ``u < v`` in lexicographic order kept with probability p."""
    if not 0.0 <= p <= 1.0:
        raise PreconditionError("p must lie in [0, 1]")
    rng = random.Random(seed)
    return Graph(n, tuple(e for e in combinations(range(n), 2) if rng.random() < p))


def random_gnm(n: int, m: int, seed: int) -> Graph:
    """Uniform graph with exactly ``m`` edges."""
    pairs = list(combinations(range(n), 2))
    if m > len(pairs):
        raise PreconditionError(f"at most {len(pairs)} edges on {n} vertices")
    rng = random.Random(seed)
    return Graph(n, tuple(sorted(rng.sample(pairs, m))))


def random_cubic(n: int, seed: int, *, retries: int = 1000) -> Graph:
    """Simple 3-regular graph from the pairing model, rejecting loops and multi-edges."""
    if n < 4 or n % 2:
        raise PreconditionError("cubic graphs need an even n >= 4")
    rng = random.Random(seed)
    points = [v for v in range(n) for _ in range(3)]
    for _ in range(retries):
        rng.shuffle(points)
        pairs = set()
        for a, b in zip(points[::2], points[1::2]):
            e = (a, b) if a < b else (b, a)
            if a == b or e in pairs:
                break
            pairs.add(e)
        else:
            return Graph(n, tuple(sorted(pairs)))
    raise Mec2Error(f"no simple cubic graph after {retries} pairings")


def random_forest(n: int, seed: int, *, p_edge: float = 0.8) -> Graph:
    """Random forest: each vertex ``v > 0`` joins a random earlier vertex with prob. p_edge."""
    rng = random.Random(seed)
    edges = []
    for v in range(1, n):
        if rng.random() < p_edge:
            edges.append((rng.randrange(v), v))
    return Graph.from_edges(n, edges)
