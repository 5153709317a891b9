"""Dynamic programming over a branch decomposition.

The decomposition is rooted by subdividing its lexicographically smallest
tree edge. For a node ``i`` with edge set ``E_i`` and border ``δ(E_i)``, the
table maps an assignment ``A: border -> nonempty subset of {0,1,2}`` (the
colours the edges of ``E_i`` put on each border vertex, as 3-bit masks in
sorted border order) to the best number of truly coloured edges in ``E_i``.
All seven nonempty masks are allowed, so a table never exceeds 7^|border|
entries.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decomposition import BranchDecomposition, heuristic_branch_decomposition
from .graph import EdgeColoring, Graph
from .solution import Solution

TRUE_BITS = 0b110


@dataclass
class RootedBranchForm:
    """Rooted binary working form of a branch decomposition."""

    root: int
    children: dict[int, tuple[int, int]]  # internal node -> (left, right)
    edge_at: dict[int, int]  # leaf node -> graph edge index
    border: dict[int, tuple[int, ...]]  # node -> sorted border vertices
    postorder: list[int]


def root_decomposition(g: Graph, bd: BranchDecomposition) -> RootedBranchForm:
    adj = bd.adjacency()
    label = bd.edge_of_leaf
    if bd.num_nodes == 1:
        root = 0
        children: dict[int, tuple[int, int]] = {}
        postorder = [0]
    else:
        a, b = min((min(x, y), max(x, y)) for x, y in bd.tree_edges)
        root = bd.num_nodes
        nbrs = {x: list(adj[x]) for x in range(bd.num_nodes)}
        nbrs[a].remove(b)
        nbrs[b].remove(a)
        nbrs[root] = [a, b]
        children = {}
        postorder = []
        stack = [(root, -1, False)]
        while stack:
            x, par, done = stack.pop()
            if done:
                postorder.append(x)
                continue
            kids = sorted(y for y in nbrs[x] if y != par)
            if kids:
                children[x] = (kids[0], kids[1])
            stack.append((x, par, True))
            for y in reversed(kids):
                stack.append((y, x, False))
    deg = g.degrees()
    counts: dict[int, dict[int, int]] = {}
    border: dict[int, tuple[int, ...]] = {}
    for x in postorder:
        if x in children:
            l, r = children[x]
            cnt = dict(counts.pop(l))
            for v, c in counts.pop(r).items():
                cnt[v] = cnt.get(v, 0) + c
        else:
            cnt = {}
            for v in g.edges[label[x]]:
                cnt[v] = 1
        counts[x] = cnt
        border[x] = tuple(sorted(v for v, c in cnt.items() if c < deg[v]))
    return RootedBranchForm(root, children, label, border, postorder)


def _leaf_table(g: Graph, e: int, border: tuple[int, ...]):
    table, back = {}, {}
    for c in (0, 1, 2):
        key = tuple(1 << c for _ in border)
        val = 1 if c else 0
        if val > table.get(key, -1):
            table[key] = val
            back[key] = c
    return table, back


def _project(table, keep_pos):
    """Max over the coordinates not in ``keep_pos``; remembers the argmax key."""
    out: dict[tuple, tuple[int, tuple]] = {}
    for key, val in table.items():
        sub = tuple(key[p] for p in keep_pos)
        cur = out.get(sub)
        if cur is None or val > cur[0]:
            out[sub] = (val, key)
    return out


def _merge(bj, tj, bk, tk, bi):
    """Combine child tables under the four merge constraints.

    Shared border vertices must not see the same true colour from both sides;
    a surviving shared vertex gets the union of both sides' colours, other
    surviving vertices inherit their own side's colours.
    """
    sj, sk = set(bj), set(bk)
    shared = sorted(sj & sk)
    j_only = [v for v in bi if v in sj and v not in sk]
    k_only = [v for v in bi if v in sk and v not in sj]
    pj = {v: p for p, v in enumerate(bj)}
    pk = {v: p for p, v in enumerate(bk)}
    surv = [s for s, v in enumerate(shared) if v in set(bi)]

    rj = _project(tj, [pj[v] for v in shared] + [pj[v] for v in j_only])
    rk = _project(tk, [pk[v] for v in shared] + [pk[v] for v in k_only])
    ns = len(shared)
    gj: dict[tuple, list] = {}
    for sub, (val, key) in rj.items():
        gj.setdefault(sub[:ns], []).append((sub[ns:], val, key))
    gk: dict[tuple, list] = {}
    for sub, (val, key) in rk.items():
        gk.setdefault(sub[:ns], []).append((sub[ns:], val, key))

    # where each border vertex of i reads its mask from
    src = []
    for v in bi:
        if v in sj and v in sk:
            src.append((0, surv.index(shared.index(v))))
        elif v in sj:
            src.append((1, j_only.index(v)))
        else:
            src.append((2, k_only.index(v)))

    table: dict[tuple, int] = {}
    back: dict[tuple, tuple] = {}
    pairs = 0
    for s_j, items_j in gj.items():
        for s_k, items_k in gk.items():
            if any(a & b & TRUE_BITS for a, b in zip(s_j, s_k)):
                continue
            union = tuple(s_j[s] | s_k[s] for s in surv)
            for rest_j, vj, key_j in items_j:
                for rest_k, vk, key_k in items_k:
                    pairs += 1
                    parts = (union, rest_j, rest_k)
                    key = tuple(parts[w][p] for w, p in src)
                    val = vj + vk
                    if val > table.get(key, -1):
                        table[key] = val
                        back[key] = (key_j, key_k)
    return table, back, pairs


def solve_branchdp(g: Graph, bd: BranchDecomposition | None = None) -> Solution:
    """Exact nu_2 by DP over ``bd`` (a heuristic decomposition if omitted).

    Runs in O(7^(2w) * m) for width ``w``.
    """
    if g.m == 0:
        return Solution(0, EdgeColoring(()), "branchdp", {"width": 0, "max_table": 0})
    if bd is None:
        bd = heuristic_branch_decomposition(g)
    bd.validate(g)
    rf = root_decomposition(g, bd)
    tables: dict[int, dict] = {}
    backs: dict[int, dict] = {}
    max_table = 0
    bound_ok = True
    pairs = 0
    for x in rf.postorder:
        if x in rf.children:
            l, r = rf.children[x]
            t, b, p = _merge(rf.border[l], tables[l], rf.border[r], tables[r], rf.border[x])
            pairs += p
        else:
            t, b = _leaf_table(g, rf.edge_at[x], rf.border[x])
        tables[x], backs[x] = t, b
        max_table = max(max_table, len(t))
        bound_ok &= len(t) <= 7 ** len(rf.border[x])

    root_table = tables[rf.root]
    assert list(root_table) == [()], "root border must be empty"
    colors = [0] * g.m
    stack = [(rf.root, ())]
    while stack:
        x, key = stack.pop()
        if x in rf.children:
            kj, kk = backs[x][key]
            l, r = rf.children[x]
            stack.append((l, kj))
            stack.append((r, kk))
        else:
            colors[rf.edge_at[x]] = backs[x][key]
    stats = {
        "width": bd.compute_width(g) if bd.width is None else bd.width,
        "max_table": max_table,
        "table_sizes": {x: len(t) for x, t in tables.items()},
        "borders": {x: len(b) for x, b in rf.border.items()},
        "table_bound_ok": bound_ok,
        "merge_pairs": pairs,
    }
    return Solution(root_table[()], EdgeColoring(colors), "branchdp", stats)
