import pytest
from hypothesis import given
from hypothesis import strategies as st

from mec2 import formats
from mec2.decomposition import heuristic_branch_decomposition, min_degree_tree_decomposition
from mec2.errors import FormatError, UnsupportedInstance
from mec2.generators import cycle
from mec2.graph import EdgeColoring, Graph
from strategies import graphs


def test_triangle():
    g = formats.parse_graph("p 3 3\ne 0 1\ne 1 2\ne 0 2\n")
    assert g == cycle(3)
    assert formats.parse_graph(formats.emit_graph(g)) == g


def test_comments_and_order():
    g = formats.parse_graph("# hi\np 3 2\n  # inner\ne 2 1\n\ne 1 0\n")
    assert g.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize(
    "text,line",
    [
        ("p 3 1\ne 0 0\n", 2),
        ("p 3 2\ne 0 1\ne 1 0\n", 3),
        ("p 3 1\ne 0 3\n", 2),
        ("p 3 1\ne 0 x\n", 2),
        ("p 3 1\nq 0 1\n", 2),
        ("e 0 1\n", 1),
        ("p 3\n", 1),
    ],
)
def test_graph_errors_cite_line(text, line):
    with pytest.raises(FormatError) as info:
        formats.parse_graph(text)
    assert info.value.lineno == line
    assert str(info.value).startswith(f"line {line}:")


def test_loop_message():
    with pytest.raises(FormatError, match="loop"):
        formats.parse_graph("p 3 1\ne 0 0\n")


def test_edge_count_mismatch():
    with pytest.raises(FormatError, match="declares 2"):
        formats.parse_graph("p 3 2\ne 0 1\n")


def test_coloring_checks():
    assert formats.parse_coloring("c 0 1\nc 1 2\nv 2\n") == EdgeColoring((1, 2))
    with pytest.raises(FormatError, match="declared value"):
        formats.parse_coloring("c 0 1\nc 1 2\nv 1\n")
    with pytest.raises(FormatError, match="twice"):
        formats.parse_coloring("c 0 1\nc 0 2\nv 2\n")
    with pytest.raises(FormatError, match="missing"):
        formats.parse_coloring("c 0 1\nv 1\n", m=2)
    with pytest.raises(FormatError) as info:
        formats.parse_coloring("c 0 3\nv 1\n")
    assert info.value.lineno == 1


def test_certificate_round_trip():
    text = formats.emit_certificate({3, 1}, EdgeColoring((1, 0, 2, 0)))
    assert text.startswith("X: 1 3\n")
    assert formats.parse_certificate(text, 4) == (frozenset({1, 3}), EdgeColoring((1, 0, 2, 0)))


@given(graphs())
def test_graph_round_trip(g):
    assert formats.parse_graph(formats.emit_graph(g)) == g


@given(st.lists(st.integers(0, 2), max_size=20))
def test_coloring_round_trip(cols):
    c = EdgeColoring(tuple(cols))
    assert formats.parse_coloring(formats.emit_coloring(c), len(cols)) == c


@given(graphs(min_n=2))
def test_decomposition_round_trips(g):
    td = min_degree_tree_decomposition(g)
    assert formats.parse_td(formats.emit_td(td)) == td
    if g.m:
        bd = heuristic_branch_decomposition(g)
        back = formats.parse_bd(formats.emit_bd(bd))
        assert back == bd
        back.validate(g)


def test_bd_structure_rejected():
    with pytest.raises(FormatError):
        formats.parse_bd("bd 3 1\nt 0 1\nt 0 2\nl 1 0\nl 2 1\n")


def test_td_width_must_match():
    with pytest.raises(FormatError, match="declared width"):
        formats.parse_td("td 1 5\nb 0 0 1\n")


@st.composite
def t2atc(draw):
    n = draw(st.integers(2, 7))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    tasks = draw(st.lists(st.sampled_from(pairs), unique=True))
    return formats.T2ATCInstance(n, tuple(sorted(tasks)))


@given(t2atc())
def test_t2atc_round_trip(inst):
    assert formats.parse_t2atc(formats.emit_t2atc(inst)) == inst
    assert formats.t2atc_to_graph(inst).m == len(inst.tasks)


def test_t2atc_triangle():
    inst = formats.parse_t2atc("tasks 3 3 2\ntask 0 1\ntask 1 2\ntask 0 2\n")
    assert formats.t2atc_to_graph(inst) == cycle(3)
    rep = formats.sw_report(2)
    assert (rep.tasks_executed, rep.social_welfare) == (2, 4)


def test_t2atc_two_edges():
    inst = formats.parse_t2atc("tasks 4 2 2\ntask 0 1\ntask 2 3\n")
    assert formats.t2atc_to_graph(inst) == Graph(4, ((0, 1), (2, 3)))


@pytest.mark.parametrize(
    "text", ["tasks 3 1 3\ntask 0 1\n", "tasks 3 1 2\ntask 0 1 2\n", "tasks 3 1 2\ntask 1 1\n"]
)
def test_t2atc_unsupported(text):
    with pytest.raises(UnsupportedInstance):
        formats.parse_t2atc(text)


def test_sniff():
    assert formats.sniff("# c\np 1 0\n") == "graph"
    assert formats.sniff("tasks 2 0 2\n") == "t2atc"
    with pytest.raises(FormatError):
        formats.sniff("zzz\n")
