import itertools

from hypothesis import strategies as st

from inflata.graph import graph_from_edge_list


@st.composite
def graphs(draw, min_n=2, max_n=8, connected=False, min_degree=0):
    """Random simple graphs; ``connected`` adds a spanning path first."""
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    edges = set(chosen)
    if connected:
        perm = draw(st.permutations(range(n)))
        edges |= {tuple(sorted(p)) for p in zip(perm, perm[1:])}
    G = graph_from_edge_list(n, edges)
    # top up low-degree vertices deterministically
    while G.min_degree < min_degree:
        v = min(G.vertices, key=lambda x: (G.degree(x), x))
        w = next(x for x in G.vertices if x != v and not G.has_edge(v, x))
        G = graph_from_edge_list(n, list(G.edges) + [(v, w)])
    return G


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
