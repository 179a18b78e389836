"""Extremal families and closed-form edge counts.

Every constructor returns a deterministic labelled :class:`Graph`. Where a
family is only pinned down up to a choice (which maximal outerplanar graph
of maximum degree 4, which port of the 6-vertex block, which low-degree
vertex of a small fan to attach), the choice is fixed here and the
resulting graph's properties are re-checked by callers and tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .doublestar import DoubleStarSpec
from .graph import Edge, Graph, GraphError


class DomainError(GraphError):
    """Parameter outside the family's domain."""


# ---------------------------------------------------------------------------
# Formulas
# ---------------------------------------------------------------------------

def h_formula(n: int) -> int:
    """floor(3(n-1)/2): 3n/2 - 2 for even n, 3(n-1)/2 for odd n."""
    if n < 1:
        raise DomainError("h(n) needs n >= 1")
    return 3 * (n - 1) // 2


def f_formula(n: int) -> int:
    """Edge count of the 6-block chains on n = 6t + i vertices.

    (5n-3)/3 for i = 0, (5n-5)/3 for i = 1, (5n+i-9)/3 for i in 2..5.
    """
    if n < 6:
        raise DomainError("f(n) needs n >= 6")
    i = n % 6
    if i == 0:
        num = 5 * n - 3
    elif i == 1:
        num = 5 * n - 5
    else:
        num = 5 * n + i - 9
    assert num % 3 == 0
    return num // 3


def small_n_formula(n: int) -> int:
    """max{0, 2n - 3}: edges of a maximal outerplanar graph on n vertices."""
    return max(0, 2 * n - 3)


@dataclass(frozen=True)
class TuranValue:
    """Closed-form knowledge about ex_OP for one ``(n, p, q, mode)``.

    ``kind`` is ``"exact"``, ``"lower_bound"`` or ``"unknown"``;
    ``hypothesis`` states the condition that was (or was not) met.
    """

    kind: str
    value: Optional[int]
    source: str
    hypothesis: str


def turan_formula(n: int, p: int, q: int, mode: str = "general") -> TuranValue:
    """Known value or bound of the (connected) outerplanar Turán number of S_{p,q}.

    Args:
        mode: ``"connected"`` or ``"general"``.
    """
    DoubleStarSpec(p, q)
    if mode not in ("connected", "general"):
        raise ValueError(f"unknown mode {mode!r}")
    if n < 1:
        raise DomainError("n must be positive")
    if n <= p + q + 1:
        return TuranValue("exact", small_n_formula(n), "small-n",
                          f"n <= p+q+1 = {p + q + 1}: every maximal outerplanar graph is free")
    if (p, q) == (2, 2):
        if n >= 6:
            if mode == "general" and n == 10:
                return TuranValue("exact", 14, "S22-general", "n = 10: two disjoint 5-vertex fans")
            src = "S22-connected" if mode == "connected" else "S22-general"
            return TuranValue("exact", h_formula(n), src, "n >= 6: floor(3(n-1)/2)")
        return TuranValue("unknown", None, "none", "S_{2,2} formula requires n >= 6")
    if p >= 2 and (p >= 3 or q >= 4):
        # n >= p+q+2 already holds here
        return TuranValue("exact", 2 * n - 3, "2n-3",
                          f"n >= p+q+2 = {p + q + 2}, q >= p >= 2, p >= 3 or q >= 4")
    if (p, q) == (2, 3):
        return TuranValue("lower_bound", f_formula(n), "S23-lower",
                          "n >= 7: chain of 6-vertex blocks gives f(n)")
    return TuranValue("unknown", None, "none",
                      "no closed form: 2n-3 requires q >= p >= 2 and (p >= 3 or q >= 4)")


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------

def fan_mop(k: int) -> Graph:
    """The fan K_1 + P_{k-1}: apex 0 over the path 1..k-1."""
    if k < 1:
        raise DomainError("fan needs k >= 1")
    edges = [(0, v) for v in range(1, k)] + [(v, v + 1) for v in range(1, k - 1)]
    return Graph(k, edges)


def construct_Gn(n: int) -> Graph:
    """Apex 0 joined to floor((n-1)/2) disjoint edges, plus one more leaf if n is even."""
    if n < 6:
        raise DomainError("G_n is defined for n >= 6")
    edges: List[Edge] = [(0, v) for v in range(1, n)]
    edges += [(v, v + 1) for v in range(1, n - 1, 2)]
    return Graph(n, edges)


def construct_two_M5() -> Graph:
    """Two disjoint 5-vertex fans."""
    return fan_mop(5).disjoint_union(fan_mop(5))


def construct_Tn(n: int) -> Graph:
    """K_1 + P_{n-1}, the fan on n vertices."""
    if n < 3:
        raise DomainError("T_n is defined for n >= 3")
    return fan_mop(n)


def _serpentine_chords(n: int) -> List[Edge]:
    # 1-based cycle v_1..v_n; chord walk v1, v3, vn, v4, v_{n-1}, v5, ...
    seq = [1, 3]
    front, back = 4, n
    take_back = True
    while len(seq) < n - 2:
        if take_back:
            seq.append(back)
            back -= 1
        else:
            seq.append(front)
            front += 1
        take_back = not take_back
    return [(a - 1, b - 1) for a, b in zip(seq, seq[1:])]


def construct_On(n: int) -> Graph:
    """Zigzag ("serpentine") triangulation of the n-gon 0..n-1; maximum degree 4.

    Raises:
        DomainError: for n < 5, where maximum degree 4 cannot occur.
    """
    if n < 5:
        raise DomainError("O_n needs n >= 5 (maximum degree 4)")
    ring = [(i, (i + 1) % n) for i in range(n)]
    g = Graph(n, ring + _serpentine_chords(n))
    assert g.num_edges == 2 * n - 3 and g.max_degree() == 4
    return g


def construct_H() -> Graph:
    """6-vertex maximal outerplanar graph with maximum degree 4 and two degree-2 vertices."""
    return construct_On(6)


def ports(g: Graph) -> Tuple[int, int]:
    """The two degree-2 vertices of a copy of H, smaller label first."""
    low = [v for v in range(g.n) if g.degree(v) == 2]
    if len(low) != 2:
        raise DomainError(f"expected exactly two degree-2 vertices, found {len(low)}")
    return low[0], low[1]


def construct_Hprime(t: int, i: int) -> Graph:
    """Chain of ``t`` copies of H, plus a fan on ``i`` vertices hung off the end.

    Copy ``k`` occupies labels ``6k..6k+5``; its port ``v`` is joined to the
    next copy's port ``u``. For ``i >= 1`` the lowest-labelled vertex of
    degree at most 2 in ``fan_mop(i)`` (labels ``6t..6t+i-1``) is joined to
    the last copy's ``v``. The result has ``6t + i`` vertices and
    ``f(6t + i)`` edges.
    """
    if t < 1:
        raise DomainError("H'_i needs t >= 1")
    if i not in range(6):
        raise DomainError("i must lie in 0..5")
    h = construct_H()
    u, v = ports(h)
    edges: List[Edge] = []
    for k in range(t):
        off = 6 * k
        edges += [(a + off, b + off) for a, b in h.edges()]
        if k:
            edges.append((6 * (k - 1) + v, off + u))
    n = 6 * t + i
    if i:
        fan = fan_mop(i)
        attach = min(w for w in range(i) if fan.degree(w) <= 2)
        off = 6 * t
        edges += [(a + off, b + off) for a, b in fan.edges()]
        edges.append((6 * (t - 1) + v, off + attach))
    return Graph(n, edges)


FAMILIES = ("Mk", "Gn", "2M5", "Tn", "On", "H", "Hprime")


def construction_seed(n: int, spec: DoubleStarSpec) -> Optional[Graph]:
    """A connected family member on ``n`` vertices worth trying as an incumbent.

    The returned graph is only a candidate: callers verify freeness and
    outerplanarity before trusting its edge count.
    """
    p, q = spec.p, spec.q
    if n <= p + q + 1 and n >= 1:
        return fan_mop(n)
    if (p, q) == (2, 2) and n >= 6:
        return construct_Gn(n)
    if (p, q) == (2, 3) and n >= 6:
        return construct_Hprime(n // 6, n % 6)
    if p >= 3 and q == 3 and n >= 3:
        return construct_Tn(n)
    if q >= 4 and n >= 5:
        return construct_On(n)
    return None
