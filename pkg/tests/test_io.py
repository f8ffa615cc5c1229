import io

import pytest
from hypothesis import given, settings

from inflata.errors import GraphFormatError
from inflata.graph import complete_graph
from inflata.inflation import inflate
from inflata.io import (
    format_graph, format_vertex_map, parse_graph, parse_vertex_map, read_graph, write_graph,
    write_inflated,
)

from conftest import graphs


def test_parse_with_comments():
    G = parse_graph(["c triangle", "p edge 3 3", "e 1 2", "e 2 3", "", "e 3 1"])
    assert G.edges == complete_graph(3).edges


@pytest.mark.parametrize("lines,lineno", [
    (["p edge 3 1", "e 0 1"], 2),
    (["p edge 3 1", "e 1 1"], 2),
    (["e 1 2"], 1),
    (["p edge 3 2", "e 1 2"], 2),
    (["p edge 3 1", "x 1 2"], 2),
    (["p edge 3 1", "e 1 b"], 2),
    (["p col 3 1"], 1),
    ([], 0),
])
def test_parse_errors_carry_line(lines, lineno):
    with pytest.raises(GraphFormatError) as info:
        parse_graph(lines)
    assert info.value.line == lineno


@settings(max_examples=50)
@given(graphs(max_n=9))
def test_round_trip(G):
    buf = io.StringIO()
    write_graph(G, buf)
    assert parse_graph(buf.getvalue().splitlines()) == G


def test_inflated_files(tmp_path):
    GI = inflate(complete_graph(4))
    gpath, mpath = tmp_path / "k4i.col", tmp_path / "k4i.map"
    write_inflated(GI, gpath, mpath)
    H = read_graph(gpath)
    assert H.n == 12 and H.m == 12 + 6
    vmap = parse_vertex_map(mpath.read_text().splitlines())
    assert vmap == list(GI.vertices)
    assert format_vertex_map(GI).splitlines()[0] == "v 1 1 2"


def test_format_graph_header():
    assert format_graph(2, [(0, 1)]).splitlines() == ["p edge 2 1", "e 1 2"]
