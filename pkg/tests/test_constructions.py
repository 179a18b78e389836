import pytest

from outerturan import constructions as C
from outerturan.doublestar import S22, S23, DoubleStarSpec, is_double_star_free
from outerturan.extremal import enumerate_mops
from outerturan.graph import Graph, canonical_form, is_connected
from outerturan.planarity import is_maximal_outerplanar, is_outerplanar

import oracles as O


def iso(a, b):
    return canonical_form(a) == canonical_form(b)


@pytest.mark.parametrize("n, value", [(6, 7), (10, 13), (13, 18), (2, 1), (1, 0)])
def test_h_formula(n, value):
    assert C.h_formula(n) == value


@pytest.mark.parametrize("n, value", [(12, 19), (7, 10), (9, 13), (6, 9)])
def test_f_formula(n, value):
    assert C.f_formula(n) == value


def test_f_formula_domain():
    with pytest.raises(C.DomainError):
        C.f_formula(5)


def test_f_formula_matches_chain_edge_counts():
    # f(6t+i) is the edge count of the chain construction, computed independently
    per_tail = {0: -1, 1: 0, 2: 1, 3: 3, 4: 5, 5: 7}
    for t in range(1, 8):
        for i in range(6):
            assert C.f_formula(6 * t + i) == 10 * t + per_tail[i]


def test_fan_mop():
    assert C.fan_mop(2) == Graph.complete(2)
    assert C.fan_mop(4).num_edges == 5
    m5 = C.fan_mop(5)
    assert m5.num_edges == 7 and is_maximal_outerplanar(m5)
    assert len(list(enumerate_mops(5))) == 1 and iso(next(enumerate_mops(5)), m5)


@pytest.mark.parametrize("n, edges", [(12, 16), (13, 18), (7, 9)])
def test_construct_Gn_examples(n, edges):
    g = C.construct_Gn(n)
    assert (g.n, g.num_edges) == (n, edges)


def test_construct_Gn_properties():
    for n in range(6, 31):
        g = C.construct_Gn(n)
        assert g.n == n and g.num_edges == C.h_formula(n)
        assert is_connected(g) and is_outerplanar(g) and is_double_star_free(g, S22)
        assert sum(d >= 3 for d in g.degrees()) == 1


def test_two_M5():
    g = C.construct_two_M5()
    assert g.num_edges == 14 and len(g.components()) == 2
    assert is_double_star_free(g, S22) and is_outerplanar(g)


def test_construct_Tn():
    t8 = C.construct_Tn(8)
    assert t8.num_edges == 13 and is_double_star_free(t8, DoubleStarSpec(3, 3))
    assert C.construct_Tn(3) == Graph.complete(3)


def test_construct_On_examples():
    g = C.construct_On(14)
    assert g.num_edges == 25 and g.max_degree() == 4
    assert iso(C.construct_On(5), C.fan_mop(5))
    with pytest.raises(C.DomainError):
        C.construct_On(4)


def test_Tn_On_properties():
    for n in range(5, 31):
        o, t = C.construct_On(n), C.construct_Tn(n)
        for g in (o, t):
            assert is_maximal_outerplanar(g) and g.num_edges == 2 * n - 3
        assert o.max_degree() == 4
        assert sum(d >= 4 for d in t.degrees()) == 1


def test_H_basics():
    h = C.construct_H()
    assert h.num_edges == 9 and is_double_star_free(h, S23)
    assert sorted(h.degrees()).count(2) == 2
    assert iso(h, C.construct_On(6))
    u, v = C.ports(h)
    assert u < v and h.degree(u) == h.degree(v) == 2


def test_H_uniqueness_among_hexagon_triangulations():
    hexes = O.dedupe_by_brute_iso([O.triangulation_graph(6, t) for t in O.all_triangulations(6)])
    deg4 = [g for g in hexes if g.max_degree() == 4]
    # two classes reach max degree 4; only one has exactly two degree-2 vertices
    assert len(deg4) == 2
    serp = [g for g in deg4 if g.degrees().count(2) == 2]
    assert len(serp) == 1 and O.brute_isomorphic(serp[0], C.construct_H())


@pytest.mark.parametrize("t, i, n, edges", [(3, 0, 18, 29), (2, 1, 13, 20), (2, 5, 17, 27)])
def test_Hprime_examples(t, i, n, edges):
    g = C.construct_Hprime(t, i)
    assert (g.n, g.num_edges) == (n, edges)
    assert is_double_star_free(g, S23)


def test_Hprime_properties():
    for t in range(1, 5):
        for i in range(6):
            g = C.construct_Hprime(t, i)
            assert g.n == 6 * t + i and g.num_edges == C.f_formula(6 * t + i)
            assert is_connected(g) and is_outerplanar(g) and is_double_star_free(g, S23)
        assert C.construct_Hprime(t, 0).degrees().count(2) == 2


def test_Hprime_domain():
    with pytest.raises(C.DomainError):
        C.construct_Hprime(1, 6)
    with pytest.raises(C.DomainError):
        C.construct_Hprime(0, 1)


@pytest.mark.parametrize("args, kind, value", [
    ((10, 2, 2, "general"), "exact", 14),
    ((10, 2, 2, "connected"), "exact", 13),
    ((8, 2, 4, "general"), "exact", 13),
    ((7, 2, 3, "general"), "lower_bound", 10),
    ((6, 2, 3, "general"), "exact", 9),
    ((5, 2, 2, "general"), "exact", 7),
])
def test_turan_formula(args, kind, value):
    tv = C.turan_formula(*args)
    assert (tv.kind, tv.value) == (kind, value)
    assert tv.source and tv.hypothesis


def test_turan_formula_unknown_outside_hypotheses():
    assert C.turan_formula(9, 1, 3).kind == "unknown"
