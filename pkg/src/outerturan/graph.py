"""Small-graph kernel.

Graphs here are simple, undirected and immutable, on vertex labels
``0..n-1`` with ``n <= 64``. Adjacency is stored as one integer bitmask per
vertex, which makes neighbourhood algebra (unions, intersections, degree
counts) cheap in the double-star checks and the search code.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

MAX_VERTICES = 64

Edge = Tuple[int, int]


class GraphError(ValueError):
    """Base class for invalid graph input or violated preconditions."""


class ContractViolation(GraphError):
    """Raised when an operation is called outside its precondition."""


class Graph6Error(GraphError):
    """Malformed graph6 text.

    Attributes:
        offset: byte offset in the input where parsing failed.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


def popcount(x: int) -> int:
    return bin(x).count("1")


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Args:
        n: number of vertices.
        edges: iterable of vertex pairs. Duplicates are ignored; loops are
            rejected.

    Example:
        >>> g = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        >>> g.num_edges, g.degree(0)
        (4, 2)
    """

    __slots__ = ("_n", "_masks", "_m")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if not 0 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self._init(n, tuple(masks))

    def _init(self, n: int, masks: Tuple[int, ...]) -> None:
        self._n = n
        self._masks = masks
        total = 0
        for v, mask in enumerate(masks):
            if mask >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            if mask >> n:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            for w in iter_bits(mask):
                if not masks[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")
            total += popcount(mask)
        self._m = total // 2

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        """Build a graph from per-vertex neighbour bitmasks (validated)."""
        g = cls.__new__(cls)
        if len(masks) > MAX_VERTICES:
            raise GraphError(f"vertex count {len(masks)} exceeds {MAX_VERTICES}")
        g._init(len(masks), tuple(int(m) for m in masks))
        return g

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, combinations(range(n), 2))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n)

    # -- basic access -----------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def masks(self) -> Tuple[int, ...]:
        return self._masks

    @property
    def num_edges(self) -> int:
        return self._m

    def neighbors(self, v: int) -> FrozenSet[int]:
        return frozenset(iter_bits(self._masks[v]))

    def degree(self, v: int) -> int:
        return popcount(self._masks[v])

    def degrees(self) -> List[int]:
        return [popcount(m) for m in self._masks]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._masks[u] >> v & 1)

    def edges(self) -> List[Edge]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        out = []
        for u, mask in enumerate(self._masks):
            for v in iter_bits(mask >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def non_edges(self) -> List[Edge]:
        return [(u, v) for u, v in combinations(range(self._n), 2) if not self.has_edge(u, v)]

    # -- derived graphs ---------------------------------------------------

    def add_edges(self, edges: Iterable[Edge]) -> "Graph":
        return Graph(self._n, list(self.edges()) + list(edges))

    def remove_edges(self, edges: Iterable[Edge]) -> "Graph":
        drop = {(min(u, v), max(u, v)) for u, v in edges}
        return Graph(self._n, [e for e in self.edges() if e not in drop])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self._n)):
            raise GraphError("relabelling must be a permutation of 0..n-1")
        return Graph(self._n, [(perm[u], perm[v]) for u, v in self.edges()])

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, vertices renumbered in increasing label order."""
        verts = sorted(set(vertices))
        index = {v: i for i, v in enumerate(verts)}
        return Graph(len(verts), [(index[u], index[v]) for u, v in self.edges()
                                  if u in index and v in index])

    def disjoint_union(self, other: "Graph") -> "Graph":
        k = self._n
        return Graph(k + other.n, self.edges() + [(u + k, v + k) for u, v in other.edges()])

    def components(self) -> List[List[int]]:
        """Vertex sets of the connected components, ordered by least vertex."""
        seen = 0
        out = []
        for s in range(self._n):
            if seen >> s & 1:
                continue
            comp = _component_mask(self._masks, s)
            seen |= comp
            out.append(list(iter_bits(comp)))
        return out

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._masks == other._masks

    def __hash__(self) -> int:
        return hash(self._masks)

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"


def _component_mask(masks: Sequence[int], start: int) -> int:
    comp = 1 << start
    frontier = comp
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= masks[v]
        frontier = nxt & ~comp
        comp |= frontier
    return comp


def is_connected(g: Graph) -> bool:
    """True iff ``g`` has at most one component (K_0 and K_1 count)."""
    if g.n <= 1:
        return True
    return _component_mask(g.masks, 0) == (1 << g.n) - 1


# ---------------------------------------------------------------------------
# Blocks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks and cut vertices of a connected graph.

    ``blocks`` are sorted vertex tuples, listed in sorted order;
    ``block_adjacency`` holds index pairs ``(i, j)``, ``i < j``, of blocks
    sharing a (cut) vertex.
    """

    blocks: Tuple[Tuple[int, ...], ...]
    cut_vertices: FrozenSet[int]
    block_adjacency: Tuple[Tuple[int, int], ...]

    def endblocks(self) -> List[int]:
        if len(self.blocks) == 1:
            return [0]
        return [i for i, b in enumerate(self.blocks)
                if sum(1 for v in b if v in self.cut_vertices) <= 1]

    def blocks_at(self, v: int) -> List[int]:
        return [i for i, b in enumerate(self.blocks) if v in b]

    def neighbours_of_block(self, i: int) -> List[int]:
        out = []
        for a, b in self.block_adjacency:
            if a == i:
                out.append(b)
            elif b == i:
                out.append(a)
        return sorted(out)


def _biconnected_vertex_sets(g: Graph) -> Tuple[List[FrozenSet[int]], set]:
    """Lowpoint DFS (iterative) over all components.

    Returns the vertex sets of blocks with at least one edge and the set of
    cut vertices.
    """
    n = g.n
    adj = [sorted(g.neighbors(v)) for v in range(n)]
    disc = [-1] * n
    low = [0] * n
    blocks: List[FrozenSet[int]] = []
    cuts = set()
    clock = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        root_children = 0
        edge_stack: List[Edge] = []
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(adj[w])))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != root:
                    cuts.add(parent)
                comp = set()
                while True:
                    a, b = edge_stack.pop()
                    comp.update((a, b))
                    if (a, b) == (parent, v):
                        break
                blocks.append(frozenset(comp))
        if root_children > 1:
            cuts.add(root)
    return blocks, cuts


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Blocks (maximal nonseparable subgraphs) of a connected graph.

    A single vertex forms one trivial block. Blocks are sorted by their
    vertex lists so the result is deterministic.

    Raises:
        ContractViolation: if ``g`` is empty or disconnected.
    """
    if g.n == 0 or not is_connected(g):
        raise ContractViolation("connected graph required")
    if g.n == 1:
        return BlockDecomposition(((0,),), frozenset(), ())
    sets, cuts = _biconnected_vertex_sets(g)
    blocks = tuple(sorted(tuple(sorted(b)) for b in sets))
    adjacency = []
    for i, j in combinations(range(len(blocks)), 2):
        if set(blocks[i]) & set(blocks[j]):
            adjacency.append((i, j))
    return BlockDecomposition(blocks, frozenset(cuts), tuple(adjacency))


# ---------------------------------------------------------------------------
# Canonical labelling
# ---------------------------------------------------------------------------

def _refine(masks: Sequence[int], cells: List[List[int]]) -> List[List[int]]:
    """Refine an ordered partition to the coarsest equitable refinement.

    Cells split by neighbour count into a splitter cell, smaller counts
    first; the splitting order depends only on cell positions, so the
    procedure commutes with relabelling.
    """
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        for s in range(len(cells)):
            smask = 0
            for v in cells[s]:
                smask |= 1 << v
            out: List[List[int]] = []
            split = False
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: Dict[int, List[int]] = {}
                for v in cell:
                    groups.setdefault(popcount(masks[v] & smask), []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    split = True
                    out.extend(groups[k] for k in sorted(groups))
            if split:
                cells = out
                changed = True
                break
    return cells


def _certificate(masks: Sequence[int], order: Sequence[int]) -> Tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    cert = []
    for v in order:
        row = 0
        for w in iter_bits(masks[v]):
            row |= 1 << pos[w]
        cert.append(row)
    return tuple(cert)


class _Orbits:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def canonical_order(g: Graph) -> List[int]:
    """A canonical vertex ordering of ``g``.

    Individualisation-refinement with pruning by automorphisms discovered
    at equal leaves. ``canonical_order(g)[i]`` is the vertex placed at
    position ``i``.
    """
    n = g.n
    if n == 0:
        return []
    masks = g.masks
    best: List[Optional[Tuple[int, ...]]] = [None]
    best_order: List[List[int]] = [[]]
    automorphisms: List[List[int]] = []
    # swapping two twins (same neighbourhood apart from each other) is an automorphism
    twin_classes: Dict[int, List[int]] = {}
    for v in range(n):
        twin_classes.setdefault(masks[v] & ~(1 << v), []).append(v)
        twin_classes.setdefault(masks[v] | 1 << v, []).append(v)
    for cls in twin_classes.values():
        for a, b in zip(cls, cls[1:]):
            perm = list(range(n))
            perm[a], perm[b] = b, a
            automorphisms.append(perm)

    degree_cells: Dict[int, List[int]] = {}
    for v in range(n):
        degree_cells.setdefault(popcount(masks[v]), []).append(v)
    start = _refine(masks, [degree_cells[d] for d in sorted(degree_cells)])

    def visit(cells: List[List[int]], prefix: List[int]) -> None:
        if len(cells) == n:
            order = [c[0] for c in cells]
            cert = _certificate(masks, order)
            if best[0] is None or cert > best[0]:
                best[0] = cert
                best_order[0] = order
            elif cert == best[0]:
                perm = [0] * n
                for a, b in zip(best_order[0], order):
                    perm[a] = b
                automorphisms.append(perm)
            return
        size = min(len(c) for c in cells if len(c) > 1)
        t = next(i for i, c in enumerate(cells) if len(c) == size)
        target = cells[t]
        explored: List[int] = []
        orbits = _Orbits(n)
        absorbed = 0
        for v in sorted(target):
            if explored:
                # only automorphisms fixing the prefix pointwise may merge subtrees
                for perm in automorphisms[absorbed:]:
                    if all(perm[x] == x for x in prefix):
                        for x in range(n):
                            orbits.union(x, perm[x])
                absorbed = len(automorphisms)
                rv = orbits.find(v)
                if any(orbits.find(u) == rv for u in explored):
                    continue
            rest = [w for w in target if w != v]
            new_cells = cells[:t] + [[v], rest] + cells[t + 1:]
            visit(_refine(masks, new_cells), prefix + [v])
            explored.append(v)

    visit(start, [])
    return best_order[0]


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of the isomorphism class of ``g``."""
    order = canonical_order(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm)


def canonical_form(g: Graph) -> str:
    """Canonical label: graph6 text of the canonical representative.

    Equal for two graphs iff they are isomorphic.
    """
    return graph6_encode(canonical_graph(g))


# ---------------------------------------------------------------------------
# Subgraph containment (oracle utility)
# ---------------------------------------------------------------------------

def contains_subgraph(g: Graph, pattern: Graph) -> Optional[Dict[int, int]]:
    """Find an injective map embedding ``pattern`` as a (not necessarily
    induced) subgraph of ``g``.

    Pattern vertices are matched in a connected, degree-descending order;
    a host vertex is a candidate only if its degree is large enough and it
    is adjacent to the images of all already-placed pattern neighbours.

    Returns:
        ``{pattern_vertex: host_vertex}`` or ``None``.
    """
    k = pattern.n
    if k > g.n or pattern.num_edges > g.num_edges:
        return None
    if k == 0:
        return {}
    pdeg = pattern.degrees()
    hdeg = g.degrees()
    # the i-th largest pattern degree needs an i-th largest host degree as big
    if any(a > b for a, b in zip(sorted(pdeg, reverse=True), sorted(hdeg, reverse=True))):
        return None

    order: List[int] = []
    placed = 0
    while len(order) < k:
        frontier = [v for v in range(k) if not placed >> v & 1 and pattern.masks[v] & placed]
        pool = frontier or [v for v in range(k) if not placed >> v & 1]
        v = max(pool, key=lambda x: (popcount(pattern.masks[x] & placed), pdeg[x], -x))
        order.append(v)
        placed |= 1 << v

    back = [[w for w in order[:i] if pattern.has_edge(order[i], w)] for i in range(k)]
    image: Dict[int, int] = {}
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == k:
            return True
        v = order[i]
        cand = ((1 << g.n) - 1) & ~used
        for w in back[i]:
            cand &= g.masks[image[w]]
        for x in iter_bits(cand):
            if hdeg[x] < pdeg[v]:
                continue
            image[v] = x
            used |= 1 << x
            if extend(i + 1):
                return True
            used &= ~(1 << x)
            del image[v]
        return False

    return dict(sorted(image.items())) if extend(0) else None


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def graph6_encode(g: Graph) -> str:
    """Encode ``g`` as header-free graph6 text (no trailing newline)."""
    n = g.n
    if n <= 62:
        out = [chr(63 + n)]
    else:
        out = ["~", chr(63 + (n >> 12 & 63)), chr(63 + (n >> 6 & 63)), chr(63 + (n & 63))]
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.masks[i] >> j & 1 else 0)
    bits.extend([0] * (-len(bits) % 6))
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(chr(63 + val))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    """Parse one graph6 line. A ``>>graph6<<`` header is tolerated.

    Raises:
        Graph6Error: with the byte offset of the first problem.
    """
    data = text.rstrip("\r\n")
    base = 0
    if data.startswith(">>graph6<<"):
        base = 10
        data = data[10:]
    if not data:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid graph6 character {ch!r}", base + i)
    if data[0] != "~":
        n, pos = ord(data[0]) - 63, 1
    else:
        if len(data) < 4 or data[1] == "~":
            raise Graph6Error("unsupported or truncated vertex-count field", base + 1)
        n = (ord(data[1]) - 63) << 12 | (ord(data[2]) - 63) << 6 | (ord(data[3]) - 63)
        pos = 4
        if n <= 62:
            raise Graph6Error("non-minimal vertex-count field", base + 1)
    if n > MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} exceeds {MAX_VERTICES}", base)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} adjacency bytes, got {len(body)}",
                          base + pos + min(len(body), need))
    masks = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (ord(body[k // 6]) - 63) >> (5 - k % 6) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            k += 1
    if need and (ord(body[-1]) - 63) & ((1 << (need * 6 - nbits)) - 1):
        raise Graph6Error("non-zero padding bits", base + pos + need - 1)
    return Graph.from_masks(masks)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Tuple[int, object]]:
    """Yield ``(line_number, Graph | Graph6Error)`` for each non-blank line."""
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        try:
            yield lineno, graph6_decode(line)
        except Graph6Error as exc:
            yield lineno, exc
