"""Line-oriented text formats for graphs, colourings, decompositions and task instances.

All indices are 0-based, tokens are whitespace separated, and lines starting
with ``#`` (after optional whitespace) are comments. Every parse error carries
the 1-based line number it refers to.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from pathlib import Path

from .decomposition import BranchDecomposition, TreeDecomposition
from .errors import DecompositionError, FormatError, GraphError, UnsupportedInstance
from .graph import EdgeColoring, Graph


def _lines(text: str):
    """Yield ``(lineno, tokens)`` for non-blank, non-comment lines."""
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line.split()


def _ints(tokens: list[str], count: int | None, no: int) -> list[int]:
    if count is not None and len(tokens) != count:
        raise FormatError(f"expected {count} integer(s) after '{tokens and tokens[0]}'", no)
    try:
        return [int(t) for t in tokens[1:]]
    except ValueError:
        raise FormatError(f"non-integer token in '{' '.join(tokens)}'", no) from None


def _header(text: str, tag: str, arity: int):
    it = _lines(text)
    first = next(it, None)
    if first is None:
        raise FormatError(f"empty input; expected '{tag}' header")
    no, tok = first
    if tok[0] != tag:
        raise FormatError(f"expected '{tag}' header, got '{tok[0]}'", no)
    vals = _ints(tok, arity + 1, no)
    if any(v < 0 for v in vals):
        raise FormatError("header values must be non-negative", no)
    return vals, it


# -- graphs ----------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    (n, m), it = _header(text, "p", 2)
    seen: dict[tuple[int, int], int] = {}
    for no, tok in it:
        if tok[0] != "e":
            raise FormatError(f"unknown line type '{tok[0]}'", no)
        u, v = _ints(tok, 3, no)
        if u == v:
            raise FormatError(f"loop edge at vertex {u}", no)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"endpoint out of range 0..{n - 1}", no)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"duplicate edge {key} (first on line {seen[key]})", no)
        seen[key] = no
    if len(seen) != m:
        raise FormatError(f"header declares {m} edges but {len(seen)} were given")
    return Graph(n, tuple(sorted(seen)))


def emit_graph(g: Graph) -> str:
    return "".join([f"p {g.n} {g.m}\n"] + [f"e {u} {v}\n" for u, v in g.edges])


# -- colourings ------------------------------------------------------------


def parse_coloring(text: str, m: int | None = None) -> EdgeColoring:
    """Parse ``c <edge> <colour>`` lines and a final ``v <value>`` line.

    With ``m`` given, the indices must be exactly 0..m-1.
    """
    colors: dict[int, int] = {}
    value = None
    value_line = None
    for no, tok in _lines(text):
        if value is not None:
            raise FormatError("content after the 'v' line", no)
        if tok[0] == "c":
            e, c = _ints(tok, 3, no)
            if c not in (0, 1, 2):
                raise FormatError(f"colour {c} not in {{0,1,2}}", no)
            if e < 0 or (m is not None and e >= m):
                raise FormatError(f"edge index {e} out of range", no)
            if e in colors:
                raise FormatError(f"edge {e} coloured twice", no)
            colors[e] = c
        elif tok[0] == "v":
            (value,) = _ints(tok, 2, no)
            value_line = no
        else:
            raise FormatError(f"unknown line type '{tok[0]}'", no)
    if value is None:
        raise FormatError("missing 'v <value>' line")
    size = len(colors) if m is None else m
    missing = [e for e in range(size) if e not in colors]
    if missing or len(colors) != size:
        raise FormatError(f"edge indices must be exactly 0..{size - 1}; missing {missing[:5]}")
    col = EdgeColoring(tuple(colors[e] for e in range(size)))
    if col.value() != value:
        raise FormatError(f"declared value {value} but {col.value()} edges are coloured", value_line)
    return col


def emit_coloring(c: EdgeColoring) -> str:
    return "".join([f"c {i} {x}\n" for i, x in enumerate(c)] + [f"v {c.value()}\n"])


# -- deletion certificates -------------------------------------------------


def emit_certificate(removed, witness: EdgeColoring) -> str:
    return "X: " + " ".join(str(x) for x in sorted(removed)) + "\n" + emit_coloring(witness)


def parse_certificate(text: str, m: int | None = None) -> tuple[frozenset[int], EdgeColoring]:
    lines = text.splitlines()
    for i, line in enumerate(lines):
        if line.strip().startswith("X:"):
            try:
                removed = frozenset(int(t) for t in line.split(":", 1)[1].split())
            except ValueError:
                raise FormatError("non-integer in 'X:' line", i + 1) from None
            rest = "\n".join("" if j <= i else l for j, l in enumerate(lines))
            return removed, parse_coloring(rest, m)
    raise FormatError("missing 'X:' line")


# -- decompositions --------------------------------------------------------


def parse_bd(text: str) -> BranchDecomposition:
    """Parse a branch decomposition and check its graph-independent invariants."""
    (nodes, width), it = _header(text, "bd", 2)
    tree, leaves = [], []
    for no, tok in it:
        if tok[0] == "t":
            a, b = _ints(tok, 3, no)
            if not (0 <= a < nodes and 0 <= b < nodes):
                raise FormatError(f"tree node out of range 0..{nodes - 1}", no)
            tree.append((min(a, b), max(a, b)))
        elif tok[0] == "l":
            x, e = _ints(tok, 3, no)
            if not 0 <= x < nodes:
                raise FormatError(f"leaf node {x} out of range", no)
            if e < 0:
                raise FormatError(f"negative edge index {e}", no)
            leaves.append((x, e))
        else:
            raise FormatError(f"unknown line type '{tok[0]}'", no)
    bd = BranchDecomposition(nodes, tuple(sorted(tree)), tuple(sorted(leaves)), width)
    try:
        bd.check_structure()
    except DecompositionError as exc:
        raise FormatError(str(exc)) from None
    return bd


def emit_bd(bd: BranchDecomposition) -> str:
    if bd.width is None:
        raise DecompositionError("emit_bd needs a declared width; call with_width(g) first")
    out = [f"bd {bd.num_nodes} {bd.width}\n"]
    out += [f"t {a} {b}\n" for a, b in bd.tree_edges]
    out += [f"l {x} {e}\n" for x, e in bd.leaves]
    return "".join(out)


def parse_td(text: str) -> TreeDecomposition:
    """Parse a tree decomposition; graph conditions are checked by `TreeDecomposition.validate`."""
    (nbags, width), it = _header(text, "td", 2)
    bags: dict[int, frozenset[int]] = {}
    tree = []
    for no, tok in it:
        if tok[0] == "b":
            if len(tok) < 2:
                raise FormatError("bag line needs an id", no)
            vals = _ints(tok, None, no)
            bid, vs = vals[0], vals[1:]
            if not 0 <= bid < nbags:
                raise FormatError(f"bag id {bid} out of range", no)
            if bid in bags:
                raise FormatError(f"bag {bid} given twice", no)
            if any(v < 0 for v in vs):
                raise FormatError("negative vertex in bag", no)
            bags[bid] = frozenset(vs)
        elif tok[0] == "t":
            a, b = _ints(tok, 3, no)
            if not (0 <= a < nbags and 0 <= b < nbags):
                raise FormatError("tree edge refers to a missing bag", no)
            tree.append((min(a, b), max(a, b)))
        else:
            raise FormatError(f"unknown line type '{tok[0]}'", no)
    if len(bags) != nbags:
        raise FormatError(f"header declares {nbags} bags but {len(bags)} were given")
    td = TreeDecomposition(tuple(bags[i] for i in range(nbags)), tuple(sorted(tree)))
    if td.width != width:
        raise FormatError(f"declared width {width} but largest bag gives {td.width}")
    return td


def emit_td(td: TreeDecomposition) -> str:
    out = [f"td {len(td.bags)} {td.width}\n"]
    out += [f"b {i}" + "".join(f" {v}" for v in sorted(bag)) + "\n" for i, bag in enumerate(td.bags)]
    out += [f"t {a} {b}\n" for a, b in td.tree_edges]
    return "".join(out)


# -- task assignment -------------------------------------------------------


@dataclass(frozen=True)
class T2ATCInstance:
    """Two-agent tasks to be scheduled in k = 2 time slots."""

    n_agents: int
    tasks: tuple[tuple[int, int], ...]
    k: int = 2


@dataclass(frozen=True)
class WelfareReport:
    tasks_executed: int
    social_welfare: int


def parse_t2atc(text: str) -> T2ATCInstance:
    (n, t, k), it = _header(text, "tasks", 3)
    if k != 2:
        raise UnsupportedInstance(f"only k = 2 is supported, got k = {k}", 1)
    seen: dict[tuple[int, int], int] = {}
    for no, tok in it:
        if tok[0] != "task":
            raise FormatError(f"unknown line type '{tok[0]}'", no)
        if len(tok) != 3:
            raise UnsupportedInstance("only tasks with exactly two agents are supported", no)
        a, b = _ints(tok, 3, no)
        if a == b:
            raise UnsupportedInstance("a task needs two distinct agents", no)
        if not (0 <= a < n and 0 <= b < n):
            raise FormatError(f"agent out of range 0..{n - 1}", no)
        key = (min(a, b), max(a, b))
        if key in seen:
            raise FormatError(f"duplicate task {key}", no)
        seen[key] = no
    if len(seen) != t:
        raise FormatError(f"header declares {t} tasks but {len(seen)} were given")
    return T2ATCInstance(n, tuple(sorted(seen)), k)


def emit_t2atc(inst: T2ATCInstance) -> str:
    out = [f"tasks {inst.n_agents} {len(inst.tasks)} {inst.k}\n"]
    return "".join(out + [f"task {a} {b}\n" for a, b in inst.tasks])


def t2atc_to_graph(inst: T2ATCInstance) -> Graph:
    """Agents become vertices and tasks edges; a slot is a colour."""
    if inst.k != 2:
        raise UnsupportedInstance(f"only k = 2 is supported, got k = {inst.k}")
    try:
        return Graph.from_edges(inst.n_agents, inst.tasks)
    except GraphError as exc:
        raise UnsupportedInstance(str(exc)) from None


def sw_report(value: int) -> WelfareReport:
    """Each executed two-agent task gives utility 1 to both of its agents."""
    return WelfareReport(value, 2 * value)


def sniff(text: str) -> str:
    """Format tag of ``text`` from its first meaningful token."""
    first = next(_lines(text), None)
    tags = {"p": "graph", "tasks": "t2atc", "bd": "bd", "td": "td", "c": "coloring", "v": "coloring"}
    if first is None or first[1][0] not in tags:
        raise FormatError("cannot recognise input format", first[0] if first else None)
    return tags[first[1][0]]


def load_graph(text: str) -> tuple[Graph, T2ATCInstance | None]:
    """Graph from either a graph file or a task-assignment file."""
    if sniff(text) == "t2atc":
        inst = parse_t2atc(text)
        return t2atc_to_graph(inst), inst
    return parse_graph(text), None


# -- files -----------------------------------------------------------------


def read_text(path: str | Path) -> str:
    """Read a file, or standard input when ``path`` is ``-``."""
    if str(path) == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def write_text(path: str | Path, text: str) -> None:
    if str(path) == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)
