"""The compiled kernels against their plain-Python source, and the env-flag fallback."""

import json
import os
import subprocess
import sys

import numpy as np
import pytest

from outerturan import _kernels as K
from outerturan.doublestar import DoubleStarSpec, is_double_star_free
from outerturan.extremal import enumerate_mops
from outerturan.graph import Graph, is_connected
from outerturan.planarity import is_two_connected

import oracles as O


def _brute(n, edges, p, q, mode):
    """Largest admissible edge subset by trying all of them."""
    best, best_mask = -1, 0
    spec = DoubleStarSpec(p, q)
    for mask in range(1 << len(edges)):
        g = Graph(n, [e for k, e in enumerate(edges) if mask >> k & 1])
        if mode == K.CONN_CONNECTED and not is_connected(g):
            continue
        if mode == K.CONN_BICONNECTED and not is_two_connected(g):
            continue
        if g.num_edges > best and is_double_star_free(g, spec):
            best, best_mask = g.num_edges, mask
    return best, best_mask


@pytest.mark.parametrize("mode", [K.CONN_NONE, K.CONN_CONNECTED, K.CONN_BICONNECTED])
def test_max_free_search_matches_exhaustive(mode):
    rng = O.seeded(20 + mode)
    for _ in range(40):
        n = rng.randint(3, 7)
        g = O.random_near_outerplanar(n, rng)
        edges = g.edges()
        if not edges:
            continue
        p = rng.randint(1, 2)
        q = rng.randint(p, 3)
        eu, ev = K.edge_arrays(edges)
        best, mask, _ = K.max_free_search(n, eu, ev, p, q, mode, 0)
        want, _ = _brute(n, edges, p, q, mode)
        assert best == want
        if best >= 0:
            w = Graph(n, [e for k, e in enumerate(edges) if mask >> k & 1])
            assert w.num_edges == best and is_double_star_free(w, DoubleStarSpec(p, q))


def test_hint_never_changes_an_attained_optimum():
    rng = O.seeded(23)
    for _ in range(60):
        g = rng.choice(list(enumerate_mops(rng.randint(6, 9))))
        eu, ev = K.edge_arrays(g.edges())
        best, mask, _ = K.max_free_search(g.n, eu, ev, 2, 2, 1, 0)
        for hint in range(0, best + 1, 2):
            assert K.max_free_search(g.n, eu, ev, 2, 2, 1, hint)[:2] == (best, mask)
        assert K.max_free_search(g.n, eu, ev, 2, 2, 1, best + 1)[0] < 0


@pytest.mark.skipif(not K.JIT, reason="numba unavailable")
def test_compiled_and_python_agree():
    py_search, py_enum = K.py_kernels()
    for n in (6, 7, 8):
        for g in list(enumerate_mops(n))[:6]:
            eu, ev = K.edge_arrays(g.edges())
            for mode in (0, 1, 2):
                a = K.max_free_search(n, eu, ev, 2, 2, mode, 0)
                b = py_search(n, eu, ev, 2, 2, mode, 0)
                assert (int(a[0]), int(a[1]), int(a[2])) == (int(b[0]), int(b[1]), int(b[2]))
            if n <= 7:
                assert np.array_equal(K.enumerate_subsets(n, eu, ev, 2, 2, True, 1),
                                      py_enum(n, eu, ev, 2, 2, True, 1))


def _run(env_flag, code):
    env = dict(os.environ, OUTERTURAN_NO_JIT=env_flag)
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True)
    return json.loads(out.stdout)


def test_env_flag_selects_fallback_with_identical_results():
    code = ("import json; from outerturan import _kernels as K, ex_connected, ex_general;"
            "from outerturan.doublestar import S22, S23;"
            "r=[ex_connected(n,S22).identity() for n in range(3,9)];"
            "r+=[ex_general(8,S23).identity()];"
            "print(json.dumps({'jit':K.JIT,'r':r}))")
    plain = _run("1", code)
    fast = _run("0", code)
    assert plain["jit"] is False
    assert plain["r"] == fast["r"]
