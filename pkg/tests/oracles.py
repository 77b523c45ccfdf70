"""Independent reference implementations the tests check the library against.

Everything here is written straight from definitions, on purpose: validity of
a strong-edge set is the neighborhood-clique condition, optima come from
enumerating all labelings, ordering existence from searching permutations.
None of it shares code with the package.
"""

import random
from itertools import combinations

from stcsolve import Graph


def strong_set_valid(g: Graph, strong) -> bool:
    """A strong set is valid when every vertex's strong neighbors are
    pairwise adjacent."""
    nbrs = {v: set() for v in g.vertices}
    for u, v in strong:
        nbrs[u].add(v)
        nbrs[v].add(u)
    for sn in nbrs.values():
        for a, b in combinations(sorted(sn), 2):
            if not g.has_edge(a, b):
                return False
    return True


def enumerate_optimum(g: Graph) -> int:
    """Best strong weight over all 2^m labelings. Small graphs only."""
    edges = sorted(g.edges)
    best = 0
    for bits in range(1 << len(edges)):
        strong = [e for i, e in enumerate(edges) if (bits >> i) & 1]
        if strong_set_valid(g, strong):
            best = max(best, sum(g.edge_weight(u, v) for u, v in strong))
    return best


def umbrella_exists(g: Graph) -> bool:
    """Search all orderings, pruning prefixes that already break the
    umbrella condition (a violation never heals by appending)."""
    vs = list(g.vertices)

    def ok_with_last(prefix) -> bool:
        k = len(prefix) - 1
        for i in range(k - 1):
            if g.has_edge(prefix[i], prefix[k]):
                for j in range(i + 1, k):
                    if not g.has_edge(prefix[i], prefix[j]) or not g.has_edge(
                        prefix[j], prefix[k]
                    ):
                        return False
        return True

    def extend(prefix, rest) -> bool:
        if not rest:
            return True
        for v in rest:
            prefix.append(v)
            if ok_with_last(prefix) and extend(prefix, rest - {v}):
                return True
            prefix.pop()
        return False

    return extend([], set(vs))


def max_set_packing(triplets) -> int:
    """Largest pairwise-disjoint subfamily, by checking every subfamily."""
    fam = list(triplets)
    best = 0
    for bits in range(1 << len(fam)):
        chosen = [fam[i] for i in range(len(fam)) if (bits >> i) & 1]
        if all(not (a & b) for a, b in combinations(chosen, 2)):
            best = max(best, len(chosen))
    return best


def find_induced_p4(nodes, adj) -> tuple | None:
    """An induced 4-vertex path in an arbitrary adjacency structure, or None.

    Checks every 4-subset for the degree pattern of a path: exactly three
    edges and no vertex seeing all the others.
    """
    items = sorted(nodes)
    for quad in combinations(items, 4):
        inside = [
            (u, v) for u, v in combinations(quad, 2) if v in adj[u]
        ]
        if len(inside) != 3:
            continue
        deg = {v: 0 for v in quad}
        for u, v in inside:
            deg[u] += 1
            deg[v] += 1
        if sorted(deg.values()) == [1, 1, 2, 2]:
            ends = [v for v in quad if deg[v] == 1]
            if ends[1] not in adj[ends[0]]:
                return quad
    return None


def random_graph(n: int, m: int, seed: int) -> Graph:
    rng = random.Random(seed)
    labels = [f"v{i}" for i in range(n)]
    pairs = list(combinations(labels, 2))
    chosen = rng.sample(pairs, min(m, len(pairs)))
    return Graph(labels, chosen)


def random_bipartite(n: int, seed: int) -> Graph:
    rng = random.Random(seed)
    labels = [f"v{i}" for i in range(n)]
    left = set(rng.sample(labels, rng.randint(0, n)))
    cross = [
        (u, v)
        for u, v in combinations(labels, 2)
        if (u in left) != (v in left) and rng.random() < 0.5
    ]
    return Graph(labels, cross)


def planted_twin_graph(seed: int, max_total: int = 9) -> tuple[Graph, list[list[str]]]:
    """A graph built by blowing base vertices up into clique classes.

    Members of a class share a closed neighborhood by construction, so the
    planted classes are true twins (possibly merged further when base
    vertices happen to be twins themselves).
    """
    rng = random.Random(seed)
    base_n = rng.randint(2, 4)
    base = [f"b{i}" for i in range(base_n)]
    base_edges = [(u, v) for u, v in combinations(base, 2) if rng.random() < 0.5]
    sizes = [rng.randint(1, 3) for _ in base]
    while sum(sizes) > max_total:
        sizes[sizes.index(max(sizes))] -= 1
    classes = [[f"{b}x{j}" for j in range(sz)] for b, sz in zip(base, sizes)]
    vertices = [v for cls in classes for v in cls]
    edges = []
    for cls in classes:
        edges.extend(combinations(cls, 2))
    for (u, v) in base_edges:
        cu, cv = classes[base.index(u)], classes[base.index(v)]
        edges.extend((a, b) for a in cu for b in cv)
    return Graph(vertices, edges), classes
