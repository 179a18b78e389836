"""Outerplanarity recognition, outer Hamilton cycles and maximality.

A 2-connected graph is outerplanar exactly when it has a Hamilton cycle
whose remaining edges (chords) pairwise do not cross with respect to the
cyclic order. Recognition works block by block: look for such a cycle by
backtracking, which stays cheap because an outerplanar block on k vertices
has at most 2k - 3 edges and larger blocks are rejected up front.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from .graph import (ContractViolation, Edge, Graph, block_decomposition, is_connected,
                    iter_bits, popcount)

DEBUG = os.environ.get("OUTERTURAN_DEBUG", "") not in ("", "0")


@dataclass(frozen=True)
class OuterCycle:
    """Boundary cycle of a 2-connected outerplanar graph.

    ``order`` starts at the least vertex and continues towards its smaller
    cycle neighbour. ``chords`` are the non-cycle edges, as sorted pairs.
    """

    order: Tuple[int, ...]
    chords: Tuple[Edge, ...]

    def cycle_edges(self) -> List[Edge]:
        k = len(self.order)
        return sorted(tuple(sorted((self.order[i], self.order[(i + 1) % k]))) for i in range(k))


def chords_cross(order: Sequence[int], chords: Sequence[Edge]) -> bool:
    """True if two chords interleave along the cyclic ``order``."""
    pos = {v: i for i, v in enumerate(order)}
    spans = sorted((min(pos[a], pos[b]), -max(pos[a], pos[b])) for a, b in chords)
    # chords nest or are disjoint iff the spans form a laminar family
    stack: List[int] = []
    for a, negb in spans:
        b = -negb
        while stack and stack[-1] <= a:
            stack.pop()
        if stack and stack[-1] < b:
            return True
        stack.append(b)
    return False


def _hamilton_cycles(masks: Sequence[int], verts: Sequence[int]) -> Iterator[List[int]]:
    """Yield each Hamilton cycle of the graph induced on ``verts`` once.

    Cycles start at ``min(verts)`` and are reported in the direction whose
    second vertex is smaller than the last.
    """
    vmask = 0
    for v in verts:
        vmask |= 1 << v
    adj = {v: masks[v] & vmask for v in verts}
    k = len(verts)
    start = min(verts)
    path = [start]

    def dead_end(visited: int, tip: int) -> bool:
        # every unvisited vertex needs two usable neighbours (unvisited, tip or start)
        usable = (vmask & ~visited) | 1 << tip | 1 << start
        for w in iter_bits(vmask & ~visited):
            if popcount(adj[w] & usable) < 2:
                return True
        return False

    def extend(visited: int) -> Iterator[List[int]]:
        tip = path[-1]
        if len(path) == k:
            if adj[tip] >> start & 1 and path[1] < path[-1]:
                yield list(path)
            return
        for w in iter_bits(adj[tip] & ~visited):
            nv = visited | 1 << w
            if len(path) + 1 < k and dead_end(nv, w):
                continue
            path.append(w)
            yield from extend(nv)
            path.pop()

    if k >= 3:
        yield from extend(1 << start)


def _block_outer_cycle(g: Graph, verts: Sequence[int]) -> Optional[List[int]]:
    """Outer cycle of a 2-connected block, or None if it is not outerplanar."""
    k = len(verts)
    vset = set(verts)
    edges = [(u, v) for u, v in g.edges() if u in vset and v in vset]
    if len(edges) > 2 * k - 3:
        return None
    for cyc in _hamilton_cycles(g.masks, verts):
        ring = {tuple(sorted((cyc[i], cyc[(i + 1) % k]))) for i in range(k)}
        chords = [e for e in edges if e not in ring]
        if not chords_cross(cyc, chords):
            return cyc
    return None


def is_two_connected(g: Graph) -> bool:
    """At least 3 vertices, connected, and no cut vertex."""
    if g.n < 3 or not is_connected(g):
        return False
    return not block_decomposition(g).cut_vertices


def is_outerplanar(g: Graph) -> bool:
    """Decide outerplanarity; graphs on at most two vertices are outerplanar."""
    if g.n <= 2:
        return True
    if g.num_edges > 2 * g.n - 3:
        return False
    for comp in g.components():
        if len(comp) < 3:
            continue
        sub = g.induced(comp)
        for block in block_decomposition(sub).blocks:
            if len(block) >= 3 and _block_outer_cycle(sub, block) is None:
                return False
    return True


def outer_cycle(g: Graph, debug: bool = DEBUG) -> OuterCycle:
    """The unique Hamilton cycle of a 2-connected outerplanar graph.

    Args:
        g: 2-connected outerplanar graph, ``n >= 3``.
        debug: also search for a second Hamilton cycle and fail if one
            exists (outerplanar blocks have exactly one).

    Raises:
        ContractViolation: if ``g`` is not 2-connected or not outerplanar.
    """
    if not is_two_connected(g):
        raise ContractViolation("outer_cycle needs a 2-connected graph on at least 3 vertices")
    cyc = _block_outer_cycle(g, list(range(g.n)))
    if cyc is None:
        raise ContractViolation("graph is not outerplanar")
    if debug:
        count = sum(1 for _ in _hamilton_cycles(g.masks, list(range(g.n))))
        if count != 1:
            raise AssertionError(f"expected a unique Hamilton cycle, found {count}")
    if cyc[1] > cyc[-1]:
        cyc = [cyc[0]] + cyc[:0:-1]
    ring = {tuple(sorted((cyc[i], cyc[(i + 1) % g.n]))) for i in range(g.n)}
    chords = tuple(e for e in g.edges() if e not in ring)
    return OuterCycle(tuple(cyc), chords)


def is_maximal_outerplanar(g: Graph) -> bool:
    """Outerplanar with no addable edge.

    For ``n >= 3`` this is outerplanar with exactly 2n - 3 edges; on one or
    two vertices it means complete.
    """
    if g.n <= 2:
        return g.num_edges == g.n * (g.n - 1) // 2
    return g.num_edges == 2 * g.n - 3 and is_outerplanar(g)
