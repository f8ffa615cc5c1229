import pytest
from hypothesis import given, settings

from inflata.decomposition import (
    HLCertificate, TwoFactor, circulant_factor, find_certificate, find_two_factor,
    ktds_from_certificate, predict_gamma, union_of_matchings,
)
from inflata.domination import is_ktds, solve_inflated
from inflata.errors import CapacityError, InputError
from inflata.graph import complete_graph, complete_multipartite, cycle_graph, harary_graph, petersen_graph
from inflata.inflation import inflate

from conftest import graphs


def test_circulant_factor_splits_by_gcd():
    f = circulant_factor(8, 2)
    assert len(f.cycles) == 2 and sorted(map(len, f.cycles)) == [4, 4]
    assert len(circulant_factor(7, 3).cycles) == 1
    with pytest.raises(InputError):
        circulant_factor(8, 4)


def test_two_factor_validation():
    C5 = cycle_graph(5)
    TwoFactor(((0, 1, 2, 3, 4),)).validate(C5)
    with pytest.raises(InputError):
        TwoFactor(((0, 2, 1, 3, 4),)).validate(C5)
    with pytest.raises(InputError):
        TwoFactor(((0, 1, 2),)).validate(C5)


def test_certificate_rejects_overlap_and_bad_matching():
    K5 = complete_graph(5)
    f = circulant_factor(5, 1)
    with pytest.raises(InputError):
        HLCertificate((f, f), None, "HLD", K5)
    with pytest.raises(InputError):
        HLCertificate((f,), frozenset({(0, 1)}), "HLMM", K5)
    with pytest.raises(InputError):
        HLCertificate((f,), frozenset({(0, 2)}), "HLPM", K5)


def test_union_of_matchings():
    f = union_of_matchings(4, {(0, 1), (2, 3)}, {(1, 2), (0, 3)})
    assert f.edges == set(cycle_graph(4).edges)
    with pytest.raises(InputError):
        union_of_matchings(4, {(0, 1), (2, 3)}, {(0, 1), (2, 3)})


def test_find_two_factor_bipartite_and_caps():
    assert find_two_factor(complete_multipartite([2, 3])) is None
    assert find_two_factor(complete_multipartite([3, 3])) is not None
    with pytest.raises(CapacityError):
        find_two_factor(cycle_graph(20))


def test_k5_odd_order_certificate():
    cert = find_certificate(complete_graph(5), 3)
    assert cert.kind == "HLMM" and cert.r == 1 and cert.k == 3
    S = ktds_from_certificate(inflate(complete_graph(5)), cert, 3)
    assert len(S) == 16


def test_certificate_must_fit_k():
    K6 = complete_graph(6)
    cert = find_certificate(K6, 2)
    with pytest.raises(InputError):
        ktds_from_certificate(inflate(K6), cert, 4)
    with pytest.raises(InputError):
        find_certificate(cycle_graph(6), 3)


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=3, max_n=7, connected=True, min_degree=2))
def test_certificate_invariants(G):
    GI = inflate(G)
    for k in range(2, G.min_degree + 1):
        cert = find_certificate(G, k)
        if cert is None:
            continue
        used = set()
        for f in cert.factors:
            f.validate(G)
            assert not used & f.edges
            used |= f.edges
            assert all(sum(v in e for e in f.edges) == 2 for v in G.vertices)
        if cert.matching is not None:
            assert not used & set(cert.matching)
        S = ktds_from_certificate(GI, cert, k)
        assert is_ktds(GI, S, k)
        assert len(S) == solve_inflated(G, k).gamma


def test_predictions():
    assert predict_gamma(complete_graph(4), 2).to_dict() == {"basis": "T4", "value": 8}
    assert predict_gamma(complete_graph(4), 3).to_dict() == {"basis": "T5", "value": 12}
    assert predict_gamma(complete_graph(5), 3).to_dict() == {"basis": "T8", "value": 16}
    p = predict_gamma(complete_multipartite([2, 3]), 2)
    assert p.basis == "T7" and p.interval[0] >= 11
    big = predict_gamma(harary_graph(4, 14), 2)
    assert big.basis == "T1" and big.interval == (28, 41)


def test_inner_matching_plus_spokes_cover_a_diameter_petersen_graph():
    # outer cycle perfect matching + spokes + inner edges: one 12-cycle
    G = petersen_graph(6, 3)
    cycle = (0, 6, 9, 3, 2, 8, 11, 5, 4, 10, 7, 1)
    f = TwoFactor((cycle,))
    f.validate(G)
    cert = HLCertificate((f,), None, "HLD", G)
    S = ktds_from_certificate(inflate(G), cert, 2)
    assert len(S) == 24 == solve_inflated(G, 2).gamma


def test_glued_complete_graphs_have_two_factor():
    from inflata.graph import glue_at_vertex
    F = glue_at_vertex(complete_graph(4), complete_graph(4))
    cert = find_certificate(F, 2)
    assert cert is not None
    assert len(ktds_from_certificate(inflate(F), cert, 2)) == 14
