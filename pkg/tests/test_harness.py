import json

import pytest
from hypothesis import given, settings

from inflata.errors import InputError
from inflata.domination import bounds, brute_force_min_ktds
from inflata.graph import complete_graph, glue_at_vertex
from inflata.inflation import inflate
from inflata.harness import canonical_json, run_suite, solve_report

from conftest import graphs


def test_bounds_suite_flags_refined_bound_on_bowtie():
    (res,) = run_suite("bounds")
    assert len(res.reports) == 20
    [(label, k, d)] = res.discrepancies
    assert k == 2 and d.claim == "upper bound delta_refinement"
    assert (d.expected, d.observed) == ("<= 11", 12)


def test_bowtie_needs_whole_inflation():
    bowtie = glue_at_vertex(complete_graph(3), complete_graph(3))
    GI = inflate(bowtie)
    assert brute_force_min_ktds(GI, 2).gamma == 12 == GI.n
    assert bounds(bowtie, 2).best_upper == 11


def test_characterization_suite_clean():
    (res,) = run_suite("characterization")
    assert res.discrepancies == []


def test_families_suite_flags_known_disagreements():
    (res,) = run_suite("families")
    flagged = {(i, k, d.expected, d.observed) for i, k, d in res.discrepancies}
    assert flagged == {("kpq:2,3", 2, 11, 12), ("kpq:2,4", 2, 13, 16), ("gpg:6,3", 2, 26, 24)}
    assert res.findings == []


def test_composition_suite_flags_glued_complete_graphs():
    (res,) = run_suite("composition")
    flagged = {(i, d.expected, d.observed) for i, k, d in res.discrepancies}
    assert flagged == {("K4 . K4", 16, 14), ("K4 . K4 . K4", 24, 20)}


def test_unknown_suite():
    with pytest.raises(InputError):
        run_suite("everything")


@settings(max_examples=25, deadline=None)
@given(graphs(min_n=3, max_n=6, connected=True, min_degree=2))
def test_report_consistency_and_round_trip(G):
    rep = solve_report(G, 2, "random")
    assert rep.bounds.best_lower <= rep.gamma <= G.n * 3 - 1
    # only the refined degree bound may be undercut
    assert all(d.claim == "upper bound delta_refinement" for d in rep.discrepancies)
    lo, hi = rep.prediction.interval or (rep.prediction.value,) * 2
    assert lo <= rep.gamma <= hi
    text = canonical_json(rep.to_dict())
    assert canonical_json(json.loads(text)) == text
    assert "." not in json.dumps([rep.nodes, rep.timing_ms, rep.gamma])


def test_capacity_report_has_interval():
    rep = solve_report(complete_graph(7), 4, "kn:7", budget_nodes=5)
    assert rep.gamma is None and rep.interval[0] == 28
