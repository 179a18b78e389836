"""Hot loops of the extremal search.

The same source runs either compiled by numba or as plain Python over numpy
arrays. Set ``OUTERTURAN_NO_JIT=1`` to force the uncompiled path (also used
automatically when numba is not importable). Graphs enter as edge lists
``eu, ev`` (int64 arrays); edge subsets are int64 bitmasks, so at most 62
edges and 32 vertices are supported here.
"""

import os

import numpy as np

MAX_KERNEL_EDGES = 62
MAX_KERNEL_VERTICES = 32

CONN_NONE = 0
CONN_CONNECTED = 1
CONN_BICONNECTED = 2

_want_jit = os.environ.get("OUTERTURAN_NO_JIT", "") in ("", "0")
try:
    if not _want_jit:
        raise ImportError
    from numba import njit

    JIT = True
except ImportError:  # pragma: no cover - exercised via env flag
    JIT = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _lowest_index(x):
    i = 0
    while not (x >> i) & 1:
        i += 1
    return i


@njit(cache=True)
def _fill_adjacency(n, eu, ev, present, adj):
    for v in range(n):
        adj[v] = 0
    for e in range(eu.shape[0]):
        if (present >> e) & 1:
            adj[eu[e]] |= 1 << ev[e]
            adj[ev[e]] |= 1 << eu[e]


@njit(cache=True)
def _spans(n, adj, skip):
    """Whether the graph minus vertex ``skip`` (-1 for none) is connected."""
    full = (1 << n) - 1
    if skip >= 0:
        full &= ~(1 << skip)
    if full == 0:
        return True
    start = _lowest_index(full)
    comp = 1 << start
    frontier = comp
    while frontier:
        nxt = 0
        for v in range(n):
            if (frontier >> v) & 1:
                nxt |= adj[v]
        frontier = nxt & full & ~comp
        comp |= frontier
    return comp == full


@njit(cache=True)
def _meets_connectivity(n, adj, conn_mode):
    if conn_mode == 0:
        return True
    if not _spans(n, adj, -1):
        return False
    if conn_mode == 2:
        if n < 3:
            return False
        for v in range(n):
            if not _spans(n, adj, v):
                return False
    return True


@njit(cache=True)
def _hosts(adj, u, v, p, q):
    a = adj[u] & ~(1 << v)
    b = adj[v] & ~(1 << u)
    return _popcount(a) >= p and _popcount(b) >= q and _popcount(a | b) >= p + q


@njit(cache=True)
def _first_violation(eu, ev, present, adj, p, q):
    """Index of the lowest present edge centring an S_{p,q} (either orientation), or -1."""
    for e in range(eu.shape[0]):
        if (present >> e) & 1:
            u = eu[e]
            v = ev[e]
            if _hosts(adj, u, v, p, q) or _hosts(adj, v, u, p, q):
                return e
    return -1


@njit(cache=True)
def max_free_search(n, eu, ev, p, q, conn_mode, hint):
    """Largest S_{p,q}-free spanning subgraph of the given edge set.

    Depth-first branch-and-bound over edge subsets. A node is a pair
    (present, kept) of edge masks: present edges are kept or still
    undecided. If the present graph hosts a double star centred on some
    edge uv, the lowest undecided edge incident to u or v is branched on
    (removal explored first); if every such edge is already kept the node
    is infeasible. The bound is the number of present edges, minus one
    when a violation is present. Connectivity requirements are monotone
    under edge removal and are checked at every node.

    Only subgraphs with at least ``hint`` edges are reported. The first
    leaf in DFS order attaining the optimum is returned, whatever the hint,
    as long as the hint does not exceed the optimum.

    Returns:
        (best, best_mask, nodes): ``best == -1`` when nothing reaches ``hint``.
    """
    m = eu.shape[0]
    inc = np.zeros(n, dtype=np.int64)
    for e in range(m):
        inc[eu[e]] |= 1 << e
        inc[ev[e]] |= 1 << e
    adj = np.zeros(n, dtype=np.int64)
    cap = 2 * m + 4
    st_present = np.zeros(cap, dtype=np.int64)
    st_kept = np.zeros(cap, dtype=np.int64)
    full = (1 << m) - 1
    st_present[0] = full
    st_kept[0] = 0
    top = 1
    best = -1
    best_mask = 0
    nodes = 0
    while top > 0:
        top -= 1
        present = st_present[top]
        kept = st_kept[top]
        nodes += 1
        target = hint
        if best + 1 > target:
            target = best + 1
        cnt = _popcount(present)
        if cnt < target:
            continue
        _fill_adjacency(n, eu, ev, present, adj)
        if not _meets_connectivity(n, adj, conn_mode):
            continue
        e = _first_violation(eu, ev, present, adj, p, q)
        if e < 0:
            best = cnt
            best_mask = present
            continue
        if cnt - 1 < target:
            continue
        cand = present & ~kept & (inc[eu[e]] | inc[ev[e]])
        if cand == 0:
            continue
        b = _lowest_index(cand)
        bit = 1 << b
        # keep-branch pushed first so the removal branch is explored first
        st_present[top] = present
        st_kept[top] = kept | bit
        top += 1
        st_present[top] = present & ~bit
        st_kept[top] = kept
        top += 1
    return best, best_mask, nodes


@njit(cache=True)
def enumerate_subsets(n, eu, ev, p, q, check_free, conn_mode):
    """All edge subsets meeting the connectivity mode (and S_{p,q}-freeness
    when ``check_free``), as an int64 array of masks in increasing order."""
    m = eu.shape[0]
    total = 1 << m
    out = np.empty(total, dtype=np.int64)
    adj = np.zeros(n, dtype=np.int64)
    k = 0
    for mask in range(total):
        _fill_adjacency(n, eu, ev, mask, adj)
        if not _meets_connectivity(n, adj, conn_mode):
            continue
        if check_free and _first_violation(eu, ev, mask, adj, p, q) >= 0:
            continue
        out[k] = mask
        k += 1
    return out[:k]


def py_kernels():
    """The uncompiled versions, for comparisons and benchmarks."""
    if JIT:
        return max_free_search.py_func, enumerate_subsets.py_func
    return max_free_search, enumerate_subsets


def edge_arrays(edges):
    arr = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    return np.ascontiguousarray(arr[:, 0]), np.ascontiguousarray(arr[:, 1])
