"""Maximum constrained 2-edge-colourable subgraph of a forest.

Each vertex ``u`` carries an allowance ``W(u)``: a 3-bit mask over colours
``{0, 1, 2}`` (bit ``c`` set means colour ``c`` may touch ``u``). The dummy
colour 0 is always allowed. The solver maximises the number of edges with a
true colour subject to properness and the allowances, in linear time.

Tables are indexed by the set ``A`` of colours already present at a vertex
from the edges to the children processed so far (all 8 masks; infeasible
entries are ``NEG``). Children are merged one at a time.
"""

from __future__ import annotations

from typing import Sequence

from .errors import PreconditionError
from .graph import EdgeColoring, Graph
from .solution import Solution

FULL = 0b111
NEG = -(1 << 30)
TRUE_BITS = 0b110


def allowance_mask(colors) -> int:
    """Mask for an iterable of allowed colours; colour 0 is always added."""
    mask = 1
    for c in colors:
        if c not in (0, 1, 2):
            raise ValueError(f"colour {c} outside {{0,1,2}}")
        mask |= 1 << c
    return mask


def _child_best(f_v: list[int], w_v: int) -> list[tuple[int, int]]:
    """For each edge colour c, best f(v, C) over C compatible with c, and that C."""
    out = []
    for c in range(3):
        bit = 1 << c
        if not w_v & bit:
            out.append((NEG, -1))
            continue
        best, arg = NEG, -1
        for C in range(8):
            if c and C & bit:
                continue
            # the edge to the parent adds c at v, which must fit W(v)
            if (C | bit) & ~w_v:
                continue
            if f_v[C] > best:
                best, arg = f_v[C], C
        out.append((best, arg))
    return out


def solve_forest(g: Graph, allowance: Sequence[int] | None = None) -> Solution:
    """Largest properly 2-edge-coloured subgraph of forest ``g`` within allowances.

    ``allowance[u]`` is a mask as produced by `allowance_mask`; the default is
    all colours everywhere. Roots are the least vertex of each component and
    children are merged in ascending order, so the output is deterministic.
    """
    n = g.n
    w = [FULL] * n if allowance is None else [int(a) for a in allowance]
    if len(w) != n:
        raise PreconditionError("allowance must have one mask per vertex")
    if any(not (a & 1) or a & ~FULL for a in w):
        raise PreconditionError("every allowance must contain colour 0 and lie in {0,1,2}")
    if not g.is_forest():
        raise PreconditionError("solve_forest needs an acyclic graph")

    parent = [-1] * n
    parent_edge = [-1] * n
    order: list[int] = []  # preorder over all components
    seen = [False] * n
    for r in range(n):
        if seen[r]:
            continue
        seen[r] = True
        stack = [r]
        while stack:
            u = stack.pop()
            order.append(u)
            for v, e in reversed(g.adjacency[u]):
                if not seen[v]:
                    seen[v] = True
                    parent[v], parent_edge[v] = u, e
                    stack.append(v)
    children: list[list[int]] = [[] for _ in range(n)]
    for u in order:
        if parent[u] >= 0:
            children[parent[u]].append(u)
    for ch in children:
        ch.sort()

    f: list[list[int] | None] = [None] * n
    # back[u][i][A] = (previous A, colour on edge to child i, child's C)
    back: list[list[list[tuple[int, int, int] | None]]] = [[] for _ in range(n)]
    merges = 0
    for u in reversed(order):
        h = [NEG] * 8
        h[0] = 0
        for v in children[u]:
            best = _child_best(f[v], w[v])
            nh = [NEG] * 8
            bk: list[tuple[int, int, int] | None] = [None] * 8
            for B in range(8):
                if h[B] == NEG:
                    continue
                for c in range(3):
                    bit = 1 << c
                    if not w[u] & bit or (c and B & bit):
                        continue
                    val_c, C = best[c]
                    if val_c == NEG:
                        continue
                    A = B | bit
                    val = h[B] + val_c + (1 if c else 0)
                    merges += 1
                    if val > nh[A]:
                        nh[A] = val
                        bk[A] = (B, c, C)
            h = nh
            back[u].append(bk)
        f[u] = h

    colors = [0] * g.m
    value = 0
    for r in order:
        if parent[r] != -1:
            continue
        A = max(range(8), key=lambda a: (f[r][a], -a))
        value += f[r][A]
        stack = [(r, A)]
        while stack:
            u, A = stack.pop()
            for i in range(len(children[u]) - 1, -1, -1):
                B, c, C = back[u][i][A]
                v = children[u][i]
                colors[parent_edge[v]] = c
                stack.append((v, C))
                A = B
    return Solution(value, EdgeColoring(colors), "forest", {"merges": merges})


def respects_allowance(g: Graph, colors: Sequence[int], allowance: Sequence[int]) -> bool:
    for i, (u, v) in enumerate(g.edges):
        bit = 1 << colors[i]
        if not (allowance[u] & bit and allowance[v] & bit):
            return False
    return True
