"""Double stars S_{p,q}: containment, witnesses and related edge predicates.

``S_{p,q}`` is an edge ``xy`` with ``p`` pendant leaves on ``x`` and ``q`` on
``y``. A host edge ``uv`` carries a copy centred on ``(u, v)`` exactly when

    deg(u) - 1 >= p,  deg(v) - 1 >= q,  |(N(u) | N(v)) - {u, v}| >= p + q,

because the leaves may be drawn first from the private neighbours of each
side and only then from the common ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .graph import ContractViolation, Graph, GraphError, iter_bits, popcount


@dataclass(frozen=True)
class DoubleStarSpec:
    """Leaf counts ``(p, q)`` with ``q >= p >= 1``."""

    p: int
    q: int

    def __post_init__(self):
        if not 1 <= self.p <= self.q:
            raise GraphError(f"double star needs q >= p >= 1, got p={self.p}, q={self.q}")

    @property
    def order(self) -> int:
        return self.p + self.q + 2

    def as_graph(self) -> Graph:
        """S_{p,q} with centres 0 (p leaves) and 1 (q leaves)."""
        p, q = self.p, self.q
        edges = [(0, 1)] + [(0, 2 + i) for i in range(p)] + [(1, 2 + p + j) for j in range(q)]
        return Graph(self.order, edges)

    def __str__(self) -> str:
        return f"S_{{{self.p},{self.q}}}"


S22 = DoubleStarSpec(2, 2)
S23 = DoubleStarSpec(2, 3)


@dataclass(frozen=True)
class DoubleStarWitness:
    """An embedded S_{p,q}: centre ``x`` with leaves ``X``, centre ``y`` with ``Y``."""

    x: int
    y: int
    X: Tuple[int, ...]
    Y: Tuple[int, ...]

    def validate(self, g: Graph, spec: DoubleStarSpec) -> None:
        """Raise AssertionError unless this is a genuine copy of ``spec`` in ``g``."""
        x, y, X, Y = self.x, self.y, set(self.X), set(self.Y)
        assert g.has_edge(x, y), "centres not adjacent"
        assert len(X) == len(self.X) == spec.p and len(Y) == len(self.Y) == spec.q
        assert not X & Y and not (X | Y) & {x, y}
        assert X <= g.neighbors(x) and Y <= g.neighbors(y)

    def as_edges(self):
        return ([(self.x, self.y)] + [(self.x, a) for a in self.X]
                + [(self.y, b) for b in self.Y])


def _hosts(masks, u: int, v: int, p: int, q: int) -> bool:
    bu, bv = 1 << u, 1 << v
    a = masks[u] & ~bv
    b = masks[v] & ~bu
    return popcount(a) >= p and popcount(b) >= q and popcount(a | b) >= p + q


def edge_hosts_double_star(g: Graph, u: int, v: int, spec: DoubleStarSpec) -> bool:
    """Whether some S_{p,q} has centre ``u`` (p leaves) and centre ``v`` (q leaves).

    Raises:
        ContractViolation: if ``uv`` is not an edge of ``g``.
    """
    if not (0 <= u < g.n and 0 <= v < g.n and g.has_edge(u, v)):
        raise ContractViolation(f"({u}, {v}) is not an edge")
    return _hosts(g.masks, u, v, spec.p, spec.q)


def _greedy_witness(masks, u: int, v: int, p: int, q: int) -> DoubleStarWitness:
    a = masks[u] & ~(1 << v)
    b = masks[v] & ~(1 << u)
    common = a & b
    X = (list(iter_bits(a & ~common)) + list(iter_bits(common)))[:p]
    taken = 0
    for w in X:
        taken |= 1 << w
    Y = (list(iter_bits(b & ~common)) + list(iter_bits(common & ~taken)))[:q]
    return DoubleStarWitness(u, v, tuple(sorted(X)), tuple(sorted(Y)))


def contains_double_star(g: Graph, spec: DoubleStarSpec) -> Optional[DoubleStarWitness]:
    """First copy of S_{p,q} found, or None if ``g`` is S_{p,q}-free.

    Edges are scanned in lexicographic order, each tried as ``(u, v)`` and
    then ``(v, u)``; leaves are the lowest-labelled ones available.
    """
    if g.n < spec.order:
        return None
    masks = g.masks
    for u, v in g.edges():
        for x, y in ((u, v), (v, u)):
            if _hosts(masks, x, y, spec.p, spec.q):
                return _greedy_witness(masks, x, y, spec.p, spec.q)
    return None


def is_double_star_free(g: Graph, spec: DoubleStarSpec) -> bool:
    return contains_double_star(g, spec) is None


def shared_neighbor_holds(g: Graph) -> bool:
    """Every edge between two vertices of degree >= 3 lies in a triangle."""
    masks = g.masks
    deg = g.degrees()
    return all(masks[u] & masks[v] for u, v in g.edges() if deg[u] >= 3 and deg[v] >= 3)


def every_34_edge_shares_neighbor(g: Graph) -> bool:
    """Every edge with endpoint degrees exactly {3, 4} has a common neighbour."""
    masks = g.masks
    deg = g.degrees()
    return all(masks[u] & masks[v] for u, v in g.edges() if {deg[u], deg[v]} == {3, 4})
