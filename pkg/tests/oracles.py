"""Brute-force reference implementations used only by the tests.

Each one deliberately avoids the code path it checks.
"""

from functools import lru_cache
from itertools import combinations, permutations
import random

from outerturan.graph import Graph, canonical_form, contains_subgraph


def naive_embedding(g, pattern):
    """First injective map (by enumeration of all k-permutations) or None."""
    pe = pattern.edges()
    for image in permutations(range(g.n), pattern.n):
        if all(g.has_edge(image[a], image[b]) for a, b in pe):
            return dict(enumerate(image))
    return None


def double_star_by_subsets(g, u, v, p, q):
    """Disjoint leaf sets X of u, Y of v by trying every subset pair."""
    A = sorted(g.neighbors(u) - {v})
    B = sorted(g.neighbors(v) - {u})
    for X in combinations(A, p):
        rest = [b for b in B if b not in X]
        for Y in combinations(rest, q):
            return X, Y
    return None


def brute_isomorphic(g, h):
    """Degree-respecting backtracking over all vertex bijections."""
    if g.n != h.n or g.num_edges != h.num_edges or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    n = g.n
    gd, hd = g.degrees(), h.degrees()
    image = [-1] * n
    used = [False] * n

    def go(i):
        if i == n:
            return True
        for x in range(n):
            if used[x] or gd[i] != hd[x]:
                continue
            if all(g.has_edge(i, j) == h.has_edge(x, image[j]) for j in range(i)):
                image[i] = x
                used[x] = True
                if go(i + 1):
                    return True
                used[x] = False
        return False

    return go(0)


def dedupe_by_brute_iso(graphs):
    reps = []
    for g in graphs:
        if not any(brute_isomorphic(g, r) for r in reps):
            reps.append(g)
    return reps


def all_triangulations(n):
    """Every triangulation of the convex n-gon 0..n-1 as a chord list (Catalan(n-2) of them)."""

    def tri(poly):
        if len(poly) < 3:
            yield []
            return
        a, b = poly[0], poly[-1]
        for k in range(1, len(poly) - 1):
            c = poly[k]
            extra = []
            if k > 1:
                extra.append((a, c))
            if k < len(poly) - 2:
                extra.append((c, b))
            for left in tri(poly[:k + 1]):
                for right in tri(poly[k:]):
                    yield extra + left + right

    return list(tri(list(range(n))))


def triangulation_graph(n, chords):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)] + list(chords))


def hamilton_cycles_by_permutation(g):
    """All Hamilton cycles as edge frozensets, from every vertex permutation."""
    n = g.n
    found = set()
    for perm in permutations(range(1, n)):
        cyc = (0,) + perm
        if all(g.has_edge(cyc[i], cyc[(i + 1) % n]) for i in range(n)):
            found.add(frozenset(frozenset((cyc[i], cyc[(i + 1) % n])) for i in range(n)))
    return found


K4 = Graph.complete(4)
K23 = Graph(5, [(a, b) for a in (0, 1) for b in (2, 3, 4)])


def contract(g, u, v):
    """Contract edge uv: v merges into u; labels above v shift down."""
    keep = [w for w in range(g.n) if w != v]
    index = {w: i for i, w in enumerate(keep)}
    edges = set()
    for a, b in g.edges():
        a2 = u if a == v else a
        b2 = u if b == v else b
        if a2 != b2:
            edges.add((min(index[a2], index[b2]), max(index[a2], index[b2])))
    return Graph(g.n - 1, edges)


@lru_cache(maxsize=None)
def _minor_by_class(key):
    from outerturan.graph import graph6_decode
    g = graph6_decode(key)
    if g.n < 4:
        return False
    if contains_subgraph(g, K4) is not None or contains_subgraph(g, K23) is not None:
        return True
    return any(_minor_by_class(canonical_form(contract(g, u, v))) for u, v in g.edges())


def has_forbidden_minor(g):
    """K_4 or K_{2,3} minor, via every sequence of edge contractions."""
    return _minor_by_class(canonical_form(g))


def random_graph(n, p, rng):
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_connected_graph(n, p, rng):
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    edges |= {e for e in combinations(range(n), 2) if rng.random() < p}
    return Graph(n, edges)


def random_near_outerplanar(n, rng):
    """A random subgraph of a random triangulated n-gon plus up to two random edges,
    randomly relabelled."""
    tris = all_triangulations(n) if n <= 8 else None
    chords = rng.choice(tris)
    base = triangulation_graph(n, chords)
    edges = [e for e in base.edges() if rng.random() < 0.85]
    for _ in range(rng.randrange(3)):
        a, b = rng.sample(range(n), 2)
        edges.append((min(a, b), max(a, b)))
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph(n, set(edges)).relabel(perm)


def seeded(seed=12345):
    return random.Random(seed)
