"""Proper interval (umbrella) orderings: recognition and verification.

An ordering v_0 .. v_{n-1} has the umbrella property when for every i < j < k
with v_i v_k an edge, both v_i v_j and v_j v_k are edges. A graph admits such
an ordering exactly when it is a proper interval graph. Recognition runs
multi-sweep lexicographic BFS and then always verifies the candidate, so
correctness rests on the verification, not on the sweep heuristic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph


@dataclass(frozen=True)
class ProperIntervalOrdering:
    """A verified umbrella ordering with per-position neighborhood reaches.

    left_reach[i] / right_reach[i] are the smallest / largest positions
    adjacent to position i (i itself when it has no neighbor on that side).
    """

    order: tuple[str, ...]
    left_reach: tuple[int, ...]
    right_reach: tuple[int, ...]

    def position(self, v: str) -> int:
        return self.order.index(v)


def verify_umbrella(g: Graph, order: Sequence[str]) -> tuple[str, str, str] | None:
    """Return None if `order` has the umbrella property, else a violating
    triple (x, y, z) with x before y before z, xz an edge and xy or yz not.

    Raises ValueError when `order` is not a permutation of g's vertices.
    """
    order = tuple(order)
    if len(order) != g.n or set(order) != set(g.vertices):
        raise ValueError("order is not a permutation of the vertex set")
    pos = {v: i for i, v in enumerate(order)}
    n = len(order)
    for i, v in enumerate(order):
        right = [pos[u] for u in g.neighbors(v) if pos[u] > i]
        if right:
            k = max(right)
            rset = set(right)
            for j in range(i + 1, k):
                if j not in rset:
                    return (v, order[j], order[k])
        left = [pos[u] for u in g.neighbors(v) if pos[u] < i]
        if left:
            l = min(left)
            lset = set(left)
            for j in range(l + 1, i):
                if j not in lset:
                    return (order[l], order[j], v)
    return None


def _reaches(g: Graph, order: tuple[str, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    pos = {v: i for i, v in enumerate(order)}
    left, right = [], []
    for i, v in enumerate(order):
        ps = [pos[u] for u in g.neighbors(v)]
        left.append(min(ps + [i]))
        right.append(max(ps + [i]))
    return tuple(left), tuple(right)


def _lexbfs(g: Graph, vertices: list[str], prev: list[str] | None = None) -> list[str]:
    """One LexBFS sweep over `vertices`.

    Ties inside the first label group break lexicographically on the first
    sweep, and by latest position in the previous sweep afterwards (the
    classic plus-rule). Groups keep their internal priority order across
    splits, so the whole sweep is deterministic.
    """
    if prev is None:
        groups = [sorted(vertices)]
    else:
        rank = {v: i for i, v in enumerate(prev)}
        groups = [sorted(vertices, key=lambda v: -rank[v])]
    out: list[str] = []
    while groups:
        head = groups[0]
        v = head.pop(0)
        if not head:
            groups.pop(0)
        out.append(v)
        nv = g.neighbors(v)
        split: list[list[str]] = []
        for grp in groups:
            ins = [x for x in grp if x in nv]
            outs = [x for x in grp if x not in nv]
            if ins:
                split.append(ins)
            if outs:
                split.append(outs)
        groups = split
    return out


def candidate_order(g: Graph) -> tuple[str, ...]:
    """The ordering the recognition sweeps propose, unverified.

    Three LexBFS sweeps per connected component (the last two with the
    plus-rule); components are laid out consecutively in smallest-label
    order. On a proper interval graph the result is an umbrella ordering;
    on anything else it violates the umbrella property somewhere, which
    makes it a useful counterexample carrier.
    """
    full: list[str] = []
    for comp in g.connected_components():
        vs = list(comp.vertices)
        s1 = _lexbfs(comp, vs)
        s2 = _lexbfs(comp, vs, prev=s1)
        s3 = _lexbfs(comp, vs, prev=s2)
        full.extend(s3)
    return tuple(full)


def recognize(g: Graph) -> ProperIntervalOrdering | None:
    """Produce a verified umbrella ordering, or None when there is none.

    A failed verification certifies the graph is not proper interval only
    because the sweep candidate is guaranteed to be an umbrella ordering
    whenever one exists.
    """
    order = candidate_order(g)
    if verify_umbrella(g, order) is not None:
        return None
    left, right = _reaches(g, order)
    return ProperIntervalOrdering(order, left, right)


def reverse(o: ProperIntervalOrdering) -> ProperIntervalOrdering:
    """Reverse of an umbrella ordering; the reaches mirror accordingly."""
    n = len(o.order)
    order = tuple(reversed(o.order))
    left = tuple(n - 1 - o.right_reach[n - 1 - i] for i in range(n))
    right = tuple(n - 1 - o.left_reach[n - 1 - i] for i in range(n))
    return ProperIntervalOrdering(order, left, right)
