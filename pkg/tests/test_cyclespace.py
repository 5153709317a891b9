import pytest
from hypothesis import given
from hypothesis import strategies as st

from mec2.cyclespace import (
    feedback_edge_set,
    guess_allowance,
    logedge_bound,
    solve_cyclespace,
    solve_guess,
    solve_logedge,
)
from mec2.errors import OracleRefused, PreconditionError
from mec2.generators import complete, cycle, path, petersen
from mec2.graph import Graph, validate_coloring
from mec2.oracle import nu_k_brute
from strategies import graphs


def test_petersen_feedback_dimension():
    fes = feedback_edge_set(petersen())
    assert fes.dimension == 15 - 10 + 1
    assert Graph.from_edges(10, [petersen().edges[i] for i in fes.forest]).is_forest()


def test_petersen_value_and_guess_count():
    sol = solve_cyclespace(petersen())
    assert sol.value == 9
    assert sol.stats["guesses"] == 3**6
    assert validate_coloring(petersen(), sol.coloring)


def test_theta_graph():
    theta = Graph.from_edges(5, [(0, 1), (1, 4), (0, 2), (2, 4), (0, 3), (3, 4)])
    assert solve_cyclespace(theta).value == nu_k_brute(theta, 2)[0] == 4


def test_conflicting_guess_rejected():
    g = cycle(3)
    fes = feedback_edge_set(g)
    assert fes.dimension == 1
    assert guess_allowance(g, fes, (1,)) is not None
    # both colours at one vertex leave only colour 0 there
    g2 = complete(4)
    fes2 = feedback_edge_set(g2)
    w = guess_allowance(g2, fes2, (1, 2, 0))
    shared = set(g2.edges[fes2.edges[0]]) & set(g2.edges[fes2.edges[1]])
    for x in shared:
        assert w[x] == 1


def test_guard():
    with pytest.raises(OracleRefused):
        solve_cyclespace(complete(8), max_feedback=10)


def test_threads_deterministic():
    a = solve_cyclespace(petersen(), threads=1)
    b = solve_cyclespace(petersen(), threads=4)
    assert a.coloring == b.coloring and a.stats == b.stats


def test_logedge_preconditions():
    assert solve_logedge(path(5)).value == 4
    with pytest.raises(PreconditionError):
        solve_logedge(Graph(4, ((0, 1), (2, 3))))
    with pytest.raises(PreconditionError):
        solve_logedge(complete(5))
    assert logedge_bound(Graph(1, ())) == 1


@given(graphs(max_n=8, max_m=11))
def test_matches_oracle(g):
    sol = solve_cyclespace(g)
    assert sol.value == nu_k_brute(g, 2)[0]
    assert validate_coloring(g, sol.coloring)
    assert sol.stats["guesses"] == 3 ** feedback_edge_set(g).dimension


@given(graphs(max_n=7, max_m=9), st.data())
def test_every_guess_respects_it(g, data):
    fes = feedback_edge_set(g)
    forest, _ = g.edge_subgraph(fes.forest)
    guess = tuple(data.draw(st.integers(0, 2)) for _ in range(fes.dimension))
    sol = solve_guess(g, fes, forest, guess)
    if sol is not None:
        assert validate_coloring(g, sol.coloring)
        assert tuple(sol.coloring[e] for e in fes.edges) == guess
