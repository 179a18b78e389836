import json
from itertools import combinations

import pytest

from outerturan import constructions as C
from outerturan.doublestar import S22, S23, DoubleStarSpec, is_double_star_free, \
    shared_neighbor_holds
from outerturan.extremal import (ExtremalResult, ResourceGuardError, ResultCache,
                                 TriangulationCode, dihedral_canon, enumerate_connected_outerplanar,
                                 enumerate_mops, ex_connected, ex_general, max_free_subgraph,
                                 probe_conjecture, verify_theorems)
from outerturan.graph import Graph, canonical_form, graph6_decode, is_connected
from outerturan.planarity import is_maximal_outerplanar, is_outerplanar

import oracles as O


@pytest.mark.parametrize("n, count", [(3, 1), (4, 1), (5, 1), (6, 3), (7, 4)])
def test_mop_counts(n, count):
    assert len(list(enumerate_mops(n))) == count


def test_mop_enumeration_soundness():
    for n in range(3, 12):
        mops = list(enumerate_mops(n))
        keys = [canonical_form(g) for g in mops]
        assert len(set(keys)) == len(keys)
        if n <= 10:
            assert all(is_maximal_outerplanar(g) for g in mops)


def test_mop_counts_match_brute_dedupe():
    for n in (6, 7, 8):
        brute = O.dedupe_by_brute_iso(
            [O.triangulation_graph(n, t) for t in O.all_triangulations(n)])
        assert len(list(enumerate_mops(n))) == len(brute)


def test_dihedral_canon_is_invariant():
    chords = [(0, 2), (2, 5), (5, 3)]
    rot = [((a + 1) % 6, (b + 1) % 6) for a, b in chords]
    ref = [((-a) % 6, (-b) % 6) for a, b in chords]
    assert dihedral_canon(6, chords) == dihedral_canon(6, rot) == dihedral_canon(6, ref)
    assert TriangulationCode(6, tuple(chords)).to_graph().num_edges == 9


def test_mop_guard():
    with pytest.raises(ResourceGuardError):
        next(enumerate_mops(15))
    with pytest.raises(ResourceGuardError):
        ex_connected(13, S22)


def test_max_free_subgraph_examples():
    assert max_free_subgraph(C.fan_mop(5), S22)[0] == 7
    assert max_free_subgraph(C.fan_mop(5), S22, require_connected=True)[0] == 7
    assert max_free_subgraph(C.construct_Tn(8), DoubleStarSpec(3, 3), True)[0] == 13
    for mop in enumerate_mops(6):
        value, g = max_free_subgraph(mop, S22, require_connected=True)
        assert value <= 7 and is_connected(g) and is_double_star_free(g, S22)
    assert max_free_subgraph(C.fan_mop(5), S22, lower_bound_hint=8) is None


@pytest.mark.parametrize("n, value", [(6, 7), (10, 13), (5, 7)])
def test_ex_connected_examples(n, value):
    res = ex_connected(n, S22)
    assert res.value == value
    res.validate()


def test_ex_general_examples():
    res = ex_general(10, S22)
    assert res.value == 14
    assert canonical_form(res.witness) == canonical_form(C.construct_two_M5())
    assert ex_general(8, DoubleStarSpec(2, 4)).value == 13
    assert ex_general(7, S23).value >= 10


def _labelled_brute_force(n, spec, connected):
    pairs = list(combinations(range(n), 2))
    best = -1
    for bits in range(1 << len(pairs)):
        g = Graph(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])
        if g.num_edges <= best or (connected and not is_connected(g)):
            continue
        if is_outerplanar(g) and is_double_star_free(g, spec):
            best = g.num_edges
    return best


@pytest.mark.parametrize("spec", [S22, S23, DoubleStarSpec(1, 2)])
def test_search_matches_all_labelled_graphs_up_to_6(spec):
    for n in range(1, 7):
        assert ex_connected(n, spec).value == _labelled_brute_force(n, spec, True)
        assert ex_general(n, spec).value == _labelled_brute_force(n, spec, False)


@pytest.mark.parametrize("spec", [S22, S23, DoubleStarSpec(1, 1), DoubleStarSpec(3, 3)])
def test_search_matches_corpus_filter_up_to_7(spec):
    for n in range(1, 8):
        corpus = [g for g in enumerate_connected_outerplanar(n)
                  if is_double_star_free(g, spec)]
        assert ex_connected(n, spec).value == max(g.num_edges for g in corpus)


def test_monotone_and_bounded():
    for p, q in [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3), (2, 4)]:
        spec = DoubleStarSpec(p, q)
        prev = None
        for n in range(1, 11):
            c, g = ex_connected(n, spec), ex_general(n, spec)
            assert g.value >= c.value
            assert g.value <= max(0, 2 * n - 3)
            if prev is not None:
                assert g.value >= prev
            prev = g.value
            c.validate()
            g.validate()


def test_verify_examples():
    rows = verify_theorems(10, specs=[(2, 2)])
    assert all(r.status == "MATCH" for r in rows if r.n >= 1)
    values = {(r.mode, r.n): r.computed for r in rows}
    assert [values["connected", n] for n in range(6, 11)] == [7, 9, 10, 12, 13]
    assert [values["general", n] for n in range(6, 11)] == [7, 9, 10, 12, 14]
    for spec in [(2, 2), (2, 3), (1, 3), (3, 3)]:
        rows = verify_theorems(5, specs=[spec])
        assert all(r.status == "MATCH" for r in rows)
    rows = verify_theorems(9, specs=[(3, 3)], n_min=8)
    assert {r.computed for r in rows if r.n == 8} == {13}
    assert {r.computed for r in rows if r.n == 9} == {15}
    assert all(r.status == "MATCH" for r in rows)


def test_probe_examples():
    rows = {r.n: r for r in probe_conjecture(6, 11)}
    assert rows[6].connected == rows[6].general == 9
    assert rows[7].connected >= 10 and rows[7].general >= 10
    assert rows[11].f_n == 17 and rows[11].meets_lower_bound is not None


def test_corpus_examples():
    assert len(enumerate_connected_outerplanar(3)) == 2
    four = enumerate_connected_outerplanar(4)
    assert len(four) == 5
    # direct filter over all labelled graphs on 4 vertices
    pairs = list(combinations(range(4), 2))
    direct = set()
    for bits in range(1 << 6):
        g = Graph(4, [pairs[i] for i in range(6) if bits >> i & 1])
        if is_connected(g) and is_outerplanar(g):
            direct.add(canonical_form(g))
    assert {canonical_form(g) for g in four} == direct
    assert all(shared_neighbor_holds(g) for g in enumerate_connected_outerplanar(6, S22))
    with pytest.raises(ResourceGuardError):
        enumerate_connected_outerplanar(9)


def test_cache_round_trip_and_field_order(tmp_path):
    path = tmp_path / "cache.jsonl"
    cache = ResultCache(path)
    first = ex_connected(8, S22, cache=cache)
    line = path.read_text().splitlines()[0]
    assert list(json.loads(line)) == list(ExtremalResult.RECORD_FIELDS)
    again = ResultCache(path).get(8, S22, "connected")
    assert again.identity() == first.identity()


def test_cache_ignores_other_versions(tmp_path):
    path = tmp_path / "cache.jsonl"
    rec = ex_connected(7, S22).to_record()
    rec["code_version"] = "0.0.0-old"
    rec["value"] = 999
    path.write_text(json.dumps(rec) + "\n")
    cache = ResultCache(path)
    assert cache.get(7, S22, "connected") is None
    assert ex_connected(7, S22, cache=cache).value == 9


def test_witnesses_are_canonical_and_sorted():
    res = ex_connected(9, S22)
    assert res.witnesses == sorted(res.witnesses)
    for w in res.witnesses:
        assert canonical_form(graph6_decode(w)) == w
