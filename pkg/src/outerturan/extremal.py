"""Exact outerplanar Turán numbers of double stars for small n.

Search space. Every outerplanar graph on n >= 3 vertices extends, by adding
edges, to a maximal outerplanar graph (MOP) on the same vertex set. So the
maximum number of edges of a (connected) S_{p,q}-free outerplanar graph on
n vertices is the maximum, over one representative of each isomorphism
class of MOPs, of the largest (connected) S_{p,q}-free spanning subgraph of
that MOP. Disconnected optima are assembled from connected ones by a
dynamic program over component sizes, since S_{p,q} is connected.

MOPs are triangulated polygons. For n >= 3 the boundary cycle of a MOP is
its unique Hamilton cycle, so two triangulations give isomorphic graphs
exactly when they differ by a rotation or reflection of the polygon; the
enumeration dedupes by the least chord list over those 2n symmetries.
"""

from __future__ import annotations

import json
import logging
import multiprocessing as mp
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from . import __version__, _kernels
from .constructions import construction_seed, f_formula, turan_formula
from .doublestar import DoubleStarSpec, is_double_star_free
from .graph import (Edge, Graph, GraphError, canonical_form, graph6_decode, graph6_encode,
                    is_connected)
from .planarity import is_outerplanar

log = logging.getLogger(__name__)

MOP_CAP = 14
DEFAULT_CAP = 12
WITNESS_CAP = 8
CONNECTED_OUTERPLANAR_CAP = 8


class ResourceGuardError(GraphError):
    """Requested size is above the configured cap."""


def _guard(n: int, cap: int, allow_over_cap: bool, what: str) -> None:
    if n > cap:
        if not allow_over_cap:
            raise ResourceGuardError(
                f"{what} with n={n} exceeds the cap n <= {cap}; pass an override to run anyway")
        log.warning("%s with n=%d exceeds the cap %d; running anyway", what, n, cap)


# ---------------------------------------------------------------------------
# Triangulations
# ---------------------------------------------------------------------------

Chords = Tuple[Edge, ...]


def _normal(chords) -> Chords:
    return tuple(sorted((min(a, b), max(a, b)) for a, b in chords))


def dihedral_canon(n: int, chords: Sequence[Edge]) -> Chords:
    """Least sorted chord list over the 2n rotations and reflections of the n-gon."""
    best = None
    for r in range(n):
        for flip in (False, True):
            if flip:
                img = _normal(((r - a) % n, (r - b) % n) for a, b in chords)
            else:
                img = _normal(((a + r) % n, (b + r) % n) for a, b in chords)
            if best is None or img < best:
                best = img
    return best


@dataclass(frozen=True)
class TriangulationCode:
    """A triangulated n-gon: boundary ``0..n-1`` plus ``n - 3`` chords."""

    n: int
    chords: Chords

    @property
    def canon(self) -> Chords:
        return dihedral_canon(self.n, self.chords)

    def to_graph(self) -> Graph:
        ring = [(i, (i + 1) % self.n) for i in range(self.n)] if self.n >= 3 else []
        if self.n == 2:
            ring = [(0, 1)]
        return Graph(self.n, ring + list(self.chords))


def _insert_ear(n: int, chords: Chords, i: int) -> Chords:
    """Add a vertex on boundary edge (i, i+1) of an n-gon triangulation."""
    shift = [v if v <= i else v + 1 for v in range(n)]
    out = [(shift[a], shift[b]) for a, b in chords]
    out.append((i, (i + 2) % (n + 1)) if i < n - 1 else (0, n - 1))
    return _normal(out)


@lru_cache(maxsize=None)
def _mop_codes(n: int) -> Tuple[Chords, ...]:
    if n <= 3:
        return ((),)
    classes = set()
    for chords in _mop_codes(n - 1):
        for i in range(n - 1):
            classes.add(dihedral_canon(n, _insert_ear(n - 1, chords, i)))
    return tuple(sorted(classes))


def enumerate_mops(n: int, cap: int = MOP_CAP) -> Iterator[Graph]:
    """One maximal outerplanar graph per isomorphism class on ``n`` vertices.

    Built by repeatedly inserting ears (every MOP on n >= 4 vertices has a
    degree-2 vertex whose removal leaves a MOP), deduped by dihedral
    canonical chord lists and yielded in increasing canonical order.

    Raises:
        ResourceGuardError: if ``n > cap``.
    """
    if n < 1:
        raise GraphError("n must be positive")
    if n > cap:
        raise ResourceGuardError(f"MOP enumeration capped at n <= {cap}, got {n}")
    if n < 3:
        yield Graph.complete(n)
        return
    for chords in _mop_codes(n):
        yield TriangulationCode(n, chords).to_graph()


def mop_count(n: int) -> int:
    return sum(1 for _ in enumerate_mops(n))


# ---------------------------------------------------------------------------
# Branch and bound
# ---------------------------------------------------------------------------

def _conn_mode(require_connected: bool, require_two_connected: bool) -> int:
    if require_two_connected:
        return _kernels.CONN_BICONNECTED
    return _kernels.CONN_CONNECTED if require_connected else _kernels.CONN_NONE


def _run_search(n: int, edges: Sequence[Edge], p: int, q: int, conn_mode: int,
                hint: int) -> Tuple[int, int]:
    if len(edges) > _kernels.MAX_KERNEL_EDGES or n > _kernels.MAX_KERNEL_VERTICES:
        raise ResourceGuardError("graph too large for the search kernel")
    if not edges:
        # no edges: the empty graph is the only candidate
        ok = conn_mode == 0 or n <= 1
        return (0, 0) if ok and hint <= 0 else (-1, 0)
    eu, ev = _kernels.edge_arrays(edges)
    best, mask, _ = _kernels.max_free_search(n, eu, ev, p, q, conn_mode, hint)
    return int(best), int(mask)


def _mask_graph(n: int, edges: Sequence[Edge], mask: int) -> Graph:
    return Graph(n, [e for k, e in enumerate(edges) if mask >> k & 1])


def max_free_subgraph(mop: Graph, spec: DoubleStarSpec, require_connected: bool = False,
                      lower_bound_hint: int = 0, require_two_connected: bool = False
                      ) -> Optional[Tuple[int, Graph]]:
    """Largest S_{p,q}-free spanning subgraph of ``mop``.

    Args:
        mop: host graph, normally maximal outerplanar.
        require_connected: only connected subgraphs count.
        lower_bound_hint: value known to be achievable elsewhere; subgraphs
            with fewer edges are pruned.
        require_two_connected: only 2-connected subgraphs count.

    Returns:
        ``(edges, witness)`` for the optimum, or ``None`` if no admissible
        subgraph has at least ``lower_bound_hint`` edges.
    """
    edges = mop.edges()
    mode = _conn_mode(require_connected, require_two_connected)
    best, mask = _run_search(mop.n, edges, spec.p, spec.q, mode, lower_bound_hint)
    if best < 0:
        return None
    return best, _mask_graph(mop.n, edges, mask)


# -- parallel driver ---------------------------------------------------------

_shared_incumbent = None


def _init_worker(value) -> None:
    global _shared_incumbent
    _shared_incumbent = value


def _solve_one(task) -> Tuple[int, int, int]:
    index, n, edges, p, q, mode, floor = task
    value = _shared_incumbent
    hint = max(floor, value.value)
    best, mask = _run_search(n, edges, p, q, mode, hint)
    if best >= 0:
        with value.get_lock():
            if best > value.value:
                value.value = best
    return index, best, mask


def _warm_up() -> None:
    # compile once in the parent so forked workers inherit the machine code
    eu, ev = _kernels.edge_arrays([(0, 1), (1, 2), (0, 2)])
    _kernels.max_free_search(3, eu, ev, 1, 1, 1, 0)


def _search_all(n: int, hosts: List[Graph], spec: DoubleStarSpec, mode: int, seed: int,
                workers: int) -> Tuple[int, List[Graph]]:
    """Maximum over hosts and the optimum witnesses (one per optimal host, host order)."""
    tasks = [(i, n, h.edges(), spec.p, spec.q, mode, seed) for i, h in enumerate(hosts)]
    incumbent = mp.get_context("fork").Value("q", seed)
    if workers <= 1 or len(tasks) <= 1:
        _init_worker(incumbent)
        results = [_solve_one(t) for t in tasks]
    else:
        _warm_up()
        with ProcessPoolExecutor(max_workers=workers, mp_context=mp.get_context("fork"),
                                 initializer=_init_worker, initargs=(incumbent,)) as pool:
            results = list(pool.map(_solve_one, tasks, chunksize=1))
    results.sort()
    value = max((best for _, best, _ in results), default=-1)
    witnesses = [_mask_graph(n, tasks[i][2], mask) for i, best, mask in results
                 if best == value and best >= 0]
    return value, witnesses


# ---------------------------------------------------------------------------
# Results and cache
# ---------------------------------------------------------------------------

@dataclass
class ExtremalResult:
    """Exact value of ex_OP (mode ``general``) or ex^c_OP (mode ``connected``).

    ``witnesses`` are canonical graph6 strings of optimum graphs, distinct
    up to isomorphism, sorted, at most ``WITNESS_CAP`` of them.
    """

    n: int
    p: int
    q: int
    mode: str
    value: int
    witnesses: List[str]
    mop_count: int
    code_version: str = __version__
    elapsed: float = 0.0
    provenance: str = "search"

    RECORD_FIELDS = ("n", "p", "q", "mode", "value", "witnesses", "mop_count", "code_version")

    @property
    def witness(self) -> Graph:
        return graph6_decode(self.witnesses[0])

    def to_record(self) -> Dict:
        return {k: getattr(self, k) for k in self.RECORD_FIELDS}

    def identity(self) -> Tuple:
        """Everything except timing and provenance."""
        return tuple(self.to_record().values())

    def validate(self) -> None:
        spec = DoubleStarSpec(self.p, self.q)
        assert self.value <= max(0, 2 * self.n - 3)
        for text in self.witnesses:
            g = graph6_decode(text)
            assert g.n == self.n and g.num_edges == self.value, text
            assert is_outerplanar(g) and is_double_star_free(g, spec), text
            if self.mode == "connected":
                assert is_connected(g), text


class ResultCache:
    """(n, p, q, mode) -> ExtremalResult, optionally persisted as JSON lines.

    Each line holds one record with fields in ``ExtremalResult.RECORD_FIELDS``
    order. Records written by another code version are ignored.
    """

    def __init__(self, path: Optional[os.PathLike] = None):
        self.path = Path(path) if path else None
        self._data: Dict[Tuple[int, int, int, str], ExtremalResult] = {}
        if self.path and self.path.exists():
            for line in self.path.read_text().splitlines():
                if not line.strip():
                    continue
                try:
                    rec = json.loads(line)
                except json.JSONDecodeError:
                    log.warning("skipping unreadable cache line in %s", self.path)
                    continue
                if rec.get("code_version") != __version__:
                    continue
                res = ExtremalResult(**rec, provenance="cache")
                self._data[(res.n, res.p, res.q, res.mode)] = res

    def get(self, n: int, spec: DoubleStarSpec, mode: str) -> Optional[ExtremalResult]:
        return self._data.get((n, spec.p, spec.q, mode))

    def put(self, res: ExtremalResult) -> None:
        self._data[(res.n, res.p, res.q, res.mode)] = res
        if self.path:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a") as fh:
                fh.write(json.dumps(res.to_record()) + "\n")

    def __len__(self) -> int:
        return len(self._data)


def default_cache() -> ResultCache:
    """Cache at ``$OUTERTURAN_CACHE`` if set, else in memory only."""
    return ResultCache(os.environ.get("OUTERTURAN_CACHE") or None)


# ---------------------------------------------------------------------------
# Exact values
# ---------------------------------------------------------------------------

def _seed_value(n: int, spec: DoubleStarSpec) -> int:
    g = construction_seed(n, spec)
    if g is None or g.n != n:
        return 0
    if is_connected(g) and is_outerplanar(g) and is_double_star_free(g, spec):
        return g.num_edges
    log.warning("construction for n=%d, %s failed verification; not seeding", n, spec)
    return 0


def _canonical_witnesses(graphs: Sequence[Graph]) -> List[str]:
    return sorted({canonical_form(g) for g in graphs})[:WITNESS_CAP]


def ex_connected(n: int, spec: DoubleStarSpec, workers: int = 1,
                 cache: Optional[ResultCache] = None, cap: int = DEFAULT_CAP,
                 allow_over_cap: bool = False) -> ExtremalResult:
    """Maximum edges of a connected S_{p,q}-free outerplanar graph on n vertices.

    Maximises over all MOP classes on n vertices, seeding the incumbent
    with the matching family construction when it verifies.
    """
    if n < 1:
        raise GraphError("n must be positive")
    _guard(n, cap, allow_over_cap, "ex_connected")
    if cache is not None:
        hit = cache.get(n, spec, "connected")
        if hit is not None:
            return hit
    start = time.perf_counter()
    if n <= 2:
        g = Graph.complete(n)
        res = ExtremalResult(n, spec.p, spec.q, "connected", g.num_edges, [canonical_form(g)],
                             1, elapsed=time.perf_counter() - start, provenance="direct")
    else:
        hosts = list(enumerate_mops(n, cap=max(MOP_CAP, n)))
        value, graphs = _search_all(n, hosts, spec, _kernels.CONN_CONNECTED,
                                    _seed_value(n, spec), workers)
        res = ExtremalResult(n, spec.p, spec.q, "connected", value, _canonical_witnesses(graphs),
                             len(hosts), elapsed=time.perf_counter() - start)
    if cache is not None:
        cache.put(res)
    return res


def ex_general(n: int, spec: DoubleStarSpec, workers: int = 1,
               cache: Optional[ResultCache] = None, cap: int = DEFAULT_CAP,
               allow_over_cap: bool = False) -> ExtremalResult:
    """Maximum edges of an S_{p,q}-free outerplanar graph on n vertices.

    ex(n) = max(ex_c(n), max_{1<=k<n} ex_c(k) + ex(n-k)). Ties prefer fewer
    components, then larger components first; the witness is the disjoint
    union of the connected witnesses.
    """
    if n < 1:
        raise GraphError("n must be positive")
    _guard(n, cap, allow_over_cap, "ex_general")
    if cache is not None:
        hit = cache.get(n, spec, "general")
        if hit is not None:
            return hit
    start = time.perf_counter()
    conn = {k: ex_connected(k, spec, workers, cache, cap=max(cap, n), allow_over_cap=True)
            for k in range(1, n + 1)}
    # best[k] = (value, -components, parts)
    best: Dict[int, Tuple[int, int, Tuple[int, ...]]] = {0: (0, 0, ())}
    for size in range(1, n + 1):
        options = []
        for k in range(size, 0, -1):
            rest = best[size - k]
            parts = tuple(sorted((k,) + rest[2], reverse=True))
            options.append((conn[k].value + rest[0], -len(parts), parts))
        best[size] = max(options)
    value, _, parts = best[n]
    witness = None
    for k in parts:
        g = conn[k].witness
        witness = g if witness is None else witness.disjoint_union(g)
    res = ExtremalResult(n, spec.p, spec.q, "general", value, [canonical_form(witness)],
                         sum(conn[k].mop_count for k in range(1, n + 1)),
                         elapsed=time.perf_counter() - start, provenance="dp")
    if cache is not None:
        cache.put(res)
    return res


def ex_value(n: int, spec: DoubleStarSpec, mode: str, **kwargs) -> ExtremalResult:
    if mode == "connected":
        return ex_connected(n, spec, **kwargs)
    if mode == "general":
        return ex_general(n, spec, **kwargs)
    raise ValueError(f"unknown mode {mode!r}")


def max_two_connected_free(n: int, spec: DoubleStarSpec, cap: int = MOP_CAP
                           ) -> Tuple[int, Optional[Graph]]:
    """Largest 2-connected S_{p,q}-free outerplanar graph on n >= 3 vertices.

    Returns ``(-1, None)`` if none exists.
    """
    hosts = list(enumerate_mops(n, cap=cap))
    value, graphs = _search_all(n, hosts, spec, _kernels.CONN_BICONNECTED, 0, 1)
    if value < 0:
        return -1, None
    return value, graphs[0]


# ---------------------------------------------------------------------------
# Corpus of small connected outerplanar graphs
# ---------------------------------------------------------------------------

def enumerate_connected_outerplanar(n: int, spec: Optional[DoubleStarSpec] = None
                                    ) -> List[Graph]:
    """One graph per isomorphism class of connected outerplanar graphs on n vertices,
    optionally only the S_{p,q}-free ones; sorted by canonical form.

    Raises:
        ResourceGuardError: for n > 8.
    """
    if n > CONNECTED_OUTERPLANAR_CAP:
        raise ResourceGuardError(f"connected outerplanar corpus capped at n <= "
                                 f"{CONNECTED_OUTERPLANAR_CAP}")
    if n < 1:
        raise GraphError("n must be positive")
    if n <= 2:
        return [Graph.complete(n)]
    found: Dict[str, Graph] = {}
    seen_labelled = set()
    p, q = (spec.p, spec.q) if spec else (1, 1)
    for mop in enumerate_mops(n):
        edges = mop.edges()
        eu, ev = _kernels.edge_arrays(edges)
        masks = _kernels.enumerate_subsets(n, eu, ev, p, q, spec is not None,
                                           _kernels.CONN_CONNECTED)
        for mask in masks.tolist():
            g = _mask_graph(n, edges, mask)
            if g.masks in seen_labelled:
                continue
            seen_labelled.add(g.masks)
            key = canonical_form(g)
            if key not in found:
                found[key] = graph6_decode(key)
    return [found[k] for k in sorted(found)]


# ---------------------------------------------------------------------------
# Verification and probing
# ---------------------------------------------------------------------------

DEFAULT_VERIFY_SPECS = ((2, 2), (2, 3), (3, 3), (2, 4), (3, 4), (2, 5))


@dataclass
class VerifyRow:
    n: int
    p: int
    q: int
    mode: str
    computed: int
    kind: str
    predicted: Optional[int]
    status: str
    source: str
    hypothesis: str
    witness: str

    FIELDS = ("n", "p", "q", "mode", "computed", "kind", "predicted", "status", "source",
              "hypothesis", "witness")


def compare(computed: int, n: int, spec: DoubleStarSpec, mode: str) -> Tuple[str, object]:
    known = turan_formula(n, spec.p, spec.q, mode)
    if known.kind == "exact":
        status = "MATCH" if computed == known.value else "MISMATCH"
    elif known.kind == "lower_bound":
        status = "BOUND" if computed >= known.value else "MISMATCH"
    else:
        status = "NA"
    return status, known


def verify_theorems(n_max: int, specs: Sequence[Tuple[int, int]] = DEFAULT_VERIFY_SPECS,
                    modes: Sequence[str] = ("connected", "general"), n_min: int = 1,
                    workers: int = 1, cache: Optional[ResultCache] = None,
                    cap: int = 11, allow_over_cap: bool = False) -> List[VerifyRow]:
    """Search every (n, p, q, mode) with n_min <= n <= n_max and compare with the
    closed forms. A row's status is MATCH/MISMATCH for exact formulas, BOUND
    when a lower bound holds, NA when no formula applies."""
    _guard(n_max, cap, allow_over_cap, "verify")
    cache = cache if cache is not None else ResultCache()
    rows = []
    for p, q in specs:
        spec = DoubleStarSpec(p, q)
        for n in range(n_min, n_max + 1):
            for mode in modes:
                res = ex_value(n, spec, mode, workers=workers, cache=cache,
                               cap=max(cap, n_max), allow_over_cap=True)
                status, known = compare(res.value, n, spec, mode)
                rows.append(VerifyRow(n, p, q, mode, res.value, known.kind, known.value, status,
                                      known.source, known.hypothesis, res.witnesses[0]))
    return rows


@dataclass
class ProbeRow:
    n: int
    connected: int
    general: int
    f_n: Optional[int]
    equal: bool
    meets_lower_bound: Optional[bool]
    connected_witness: str
    general_witness: str

    FIELDS = ("n", "connected", "general", "f_n", "equal", "meets_lower_bound",
              "connected_witness", "general_witness")


def probe_conjecture(n_from: int, n_to: int, workers: int = 1,
                     cache: Optional[ResultCache] = None, cap: int = DEFAULT_CAP,
                     allow_over_cap: bool = False) -> List[ProbeRow]:
    """Exact connected and general values for S_{2,3} over a range of n.

    Records whether the two coincide and whether they reach f(n) (n >= 7);
    never asserts that they coincide.
    """
    _guard(n_to, cap, allow_over_cap, "probe")
    cache = cache if cache is not None else ResultCache()
    rows = []
    for n in range(n_from, n_to + 1):
        c = ex_connected(n, DoubleStarSpec(2, 3), workers, cache, cap=max(cap, n_to),
                         allow_over_cap=True)
        g = ex_general(n, DoubleStarSpec(2, 3), workers, cache, cap=max(cap, n_to),
                       allow_over_cap=True)
        fn = f_formula(n) if n >= 6 else None
        meets = (c.value >= fn and g.value >= fn) if n >= 7 else None
        rows.append(ProbeRow(n, c.value, g.value, fn, c.value == g.value, meets,
                             c.witnesses[0], g.witnesses[0]))
    return rows


def rows_as_dicts(rows) -> List[Dict]:
    return [{k: getattr(r, k) for k in r.FIELDS} for r in rows]
