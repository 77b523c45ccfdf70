"""Exact solvers for maximum strong triadic closure.

Every solver returns the optimal number of strong edges (unit-weight terms)
together with a witness labeling that is re-validated before it is returned.
The brute-force oracle works on any graph whose conflict graph fits under the
node cap; the class solvers are polynomial on proper interval, trivially
perfect, and bipartite inputs respectively, and refuse anything else.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import NamedTuple

from .graph import Edge, Graph, canon_edge, contract_twins
from .incompat import (
    IncompatGraph,
    StrongWeakLabeling,
    build_incompat,
    expand_labeling,
    labeling_from_independent_set,
    validate_stc,
)
from .ordering import recognize

DEFAULT_ORACLE_CAP = 34


class WrongClassError(ValueError):
    """A solver was forced onto a graph outside its class."""


class UnsupportedInstanceError(ValueError):
    """No available solver applies to the instance."""


class OracleCapError(UnsupportedInstanceError):
    """The conflict graph exceeds the brute-force node cap."""


class CographContradictionError(RuntimeError):
    """The conflict graph of a trivially perfect input failed to decompose.

    This cannot happen when the rest of the pipeline is correct, so it is
    surfaced loudly instead of being worked around.
    """


@dataclass(frozen=True)
class SolveResult:
    value: int
    labeling: StrongWeakLabeling
    solver: str
    stats: dict = field(default_factory=dict)
    certificate: dict = field(default_factory=dict)


def _finish(g: Graph, strong, solver: str, stats: dict, certificate: dict) -> SolveResult:
    lab = StrongWeakLabeling.from_strong(g, strong)
    witness = validate_stc(g, lab)
    if witness is not None:
        raise RuntimeError(f"{solver} produced an invalid labeling, wedge {witness}")
    return SolveResult(lab.value, lab, solver, stats, certificate)


# ---------------------------------------------------------------------------
# brute-force maximum weighted independent set
# ---------------------------------------------------------------------------


class _BitGraph:
    """Bitmask view of a conflict graph, ordered for branch and bound.

    Internal node order is by descending conflict degree (label-lexicographic
    on ties) so the branching pivot is always the lowest set bit. A greedy
    clique cover computed once per instance supplies the upper bound: each
    cover clique contributes at most its heaviest remaining member.
    """

    def __init__(self, h: IncompatGraph):
        nodes = list(h.nodes)
        idx = {e: i for i, e in enumerate(nodes)}
        deg = [0] * len(nodes)
        adj = [0] * len(nodes)
        for a, b in h.conflicts:
            ia, ib = idx[a], idx[b]
            adj[ia] |= 1 << ib
            adj[ib] |= 1 << ia
            deg[ia] += 1
            deg[ib] += 1
        order = sorted(range(len(nodes)), key=lambda i: (-deg[i], nodes[i]))
        self.nodes = [nodes[i] for i in order]
        self.weight = [h.node_weight[nodes[i]] for i in order]
        remap = {old: new for new, old in enumerate(order)}
        self.adj = [0] * len(nodes)
        for new, old in enumerate(order):
            m = adj[old]
            acc = 0
            while m:
                low = m & -m
                acc |= 1 << remap[low.bit_length() - 1]
                m ^= low
            self.adj[new] = acc
        self.n = len(nodes)
        # lexicographic scan order over internal indices
        self.lex = sorted(range(self.n), key=lambda i: self.nodes[i])
        self.cover = self._clique_cover()

    def _clique_cover(self) -> list[tuple[int, list[int]]]:
        cliques: list[list[int]] = []
        masks: list[int] = []
        for i in range(self.n):
            ai = self.adj[i]
            for c, cm in enumerate(masks):
                if cm & ~ai == 0:  # i conflicts with every member
                    cliques[c].append(i)
                    masks[c] |= 1 << i
                    break
            else:
                cliques.append([i])
                masks.append(1 << i)
        out = []
        for c, cm in zip(cliques, masks):
            members = sorted(c, key=lambda i: -self.weight[i])
            out.append((cm, members))
        return out

    def bound_reaches(self, rest: int, needed: int) -> bool:
        """True when the clique-cover bound on `rest` is at least `needed`."""
        acc = 0
        for cm, members in self.cover:
            if cm & rest:
                for i in members:
                    if (rest >> i) & 1:
                        acc += self.weight[i]
                        break
                if acc >= needed:
                    return True
        return False

    def greedy(self) -> int:
        best = 0
        for key in (lambda i: (self.adj[i].bit_count(), -self.weight[i]),
                    lambda i: -self.weight[i]):
            rest = (1 << self.n) - 1
            total = 0
            for i in sorted(range(self.n), key=key):
                if (rest >> i) & 1:
                    total += self.weight[i]
                    rest &= ~(self.adj[i] | (1 << i))
            best = max(best, total)
        return best


def _bb_max(bg: _BitGraph, counters: dict) -> int:
    best = bg.greedy()
    full = (1 << bg.n) - 1

    def dfs(rest: int, cur: int) -> None:
        nonlocal best
        counters["bb_states"] += 1
        while rest:
            v = (rest & -rest).bit_length() - 1
            if bg.adj[v] & rest == 0:  # conflict-free: always take
                cur += bg.weight[v]
                rest &= ~(1 << v)
            else:
                break
        if not rest:
            if cur > best:
                best = cur
            return
        if not bg.bound_reaches(rest, best + 1 - cur):
            return
        v = (rest & -rest).bit_length() - 1
        dfs(rest & ~(bg.adj[v] | (1 << v)), cur + bg.weight[v])
        dfs(rest & ~(1 << v), cur)

    if bg.n:
        dfs(full, 0)
    return best


def _bb_reaches(bg: _BitGraph, rest: int, cur: int, target: int, counters: dict) -> bool:
    """Decision variant: can `cur` plus an independent set inside `rest`
    reach `target`?"""
    counters["bb_states"] += 1
    while rest:
        v = (rest & -rest).bit_length() - 1
        if bg.adj[v] & rest == 0:
            cur += bg.weight[v]
            rest &= ~(1 << v)
        else:
            break
    if cur >= target:
        return True
    if not rest or not bg.bound_reaches(rest, target - cur):
        return False
    v = (rest & -rest).bit_length() - 1
    if _bb_reaches(bg, rest & ~(bg.adj[v] | (1 << v)), cur + bg.weight[v], target, counters):
        return True
    return _bb_reaches(bg, rest & ~(1 << v), cur, target, counters)


def mwis_value(h: IncompatGraph, counters: dict | None = None) -> int:
    """Exact maximum weight of an independent set, value only."""
    counters = counters if counters is not None else {"bb_states": 0}
    counters.setdefault("bb_states", 0)
    if not h.nodes:
        return 0
    return _bb_max(_BitGraph(h), counters)


def brute_mwis(
    h: IncompatGraph,
    cap: int = DEFAULT_ORACLE_CAP,
    force: bool = False,
    counters: dict | None = None,
) -> tuple[int, frozenset[Edge]]:
    """Exact maximum weighted independent set of a conflict graph.

    Among all optima the lexicographically smallest node set is returned:
    after the value is known, nodes are committed in label order whenever an
    optimum containing the committed prefix still exists. Refuses graphs with
    more than `cap` nodes unless `force` is set.
    """
    if len(h.nodes) > cap and not force:
        raise OracleCapError(
            f"conflict graph has {len(h.nodes)} nodes, cap is {cap}"
        )
    if counters is None:
        counters = {"bb_states": 0}
    counters.setdefault("bb_states", 0)
    if not h.nodes:
        return 0, frozenset()
    bg = _BitGraph(h)
    best = _bb_max(bg, counters)
    chosen: list[Edge] = []
    cur = 0
    rest = (1 << bg.n) - 1
    for i in bg.lex:
        if not (rest >> i) & 1:
            continue
        taken = rest & ~(bg.adj[i] | (1 << i))
        if _bb_reaches(bg, taken, cur + bg.weight[i], best, counters):
            chosen.append(bg.nodes[i])
            cur += bg.weight[i]
            rest = taken
        else:
            rest &= ~(1 << i)
    if cur != best:
        raise RuntimeError("witness extraction lost the optimum")
    return best, frozenset(chosen)


def solve_oracle(
    g: Graph, cap: int = DEFAULT_ORACLE_CAP, force: bool = False
) -> SolveResult:
    """Brute-force solve via the conflict graph. Works on any graph whose
    edge count fits under the cap."""
    t0 = time.perf_counter()
    h = build_incompat(g)
    counters = {"bb_states": 0}
    value, sset = brute_mwis(h, cap, force, counters)
    lab = labeling_from_independent_set(g, h, sset)
    assert lab.value == value
    stats = {
        "nodes": len(h.nodes),
        "conflicts": len(h.conflicts),
        "bb_states": counters["bb_states"],
        "time_ms": (time.perf_counter() - t0) * 1000.0,
    }
    cert = {"independent_set": sorted(sset)}
    return _finish(g, lab.strong, "oracle", stats, cert)


# ---------------------------------------------------------------------------
# proper interval graphs: prefix-clique dynamic program
# ---------------------------------------------------------------------------


class DpState(NamedTuple):
    """Positions are into the umbrella ordering of the contracted graph.

    The active prefix {a..b} is a clique whose internal edges are committed
    strong; no strong edge may leave the prefix for a position past r.
    """

    a: int
    b: int
    r: int


def _pig_dp(order, weights, right) -> tuple[int, list[tuple[int, int]]]:
    """Optimal strong-edge weight over an umbrella ordering, plus the chosen
    strong pairs as position tuples.

    Peeling the head of the prefix maximizes over how far the head's strong
    edges extend (the consecutive-strong form: a head is strong to a prefix
    of its right neighborhood). Closing a prefix at b == r commits all its
    internal edges and restarts cleanly after it.
    """
    n = len(order)
    pref = [0] * (n + 1)
    prefsq = [0] * (n + 1)
    for i, w in enumerate(weights):
        pref[i + 1] = pref[i] + w
        prefsq[i + 1] = prefsq[i] + w * w

    def head_edges(a: int, j: int) -> int:
        return weights[a] * (pref[j + 1] - pref[a + 1])

    def clique_value(a: int, b: int) -> int:
        s = pref[b + 1] - pref[a]
        sq = prefsq[b + 1] - prefsq[a]
        return (s * s - sq) // 2

    memo: dict[DpState, tuple[int, int | None]] = {}

    def fresh(p: int) -> int:
        if p >= n:
            return 0
        return solve(DpState(p, p, right[p]))

    def solve(st: DpState) -> int:
        got = memo.get(st)
        if got is not None:
            return got[0]
        a, b, r = st
        if b < r:
            best = -1
            bestj: int | None = None
            for j in range(b, r + 1):
                sub = fresh(a + 1) if j == a else solve(DpState(a + 1, j, r))
                val = sub + head_edges(a, j)
                if val > best:
                    best, bestj = val, j
            memo[st] = (best, bestj)
        elif r < n - 1:
            memo[st] = (fresh(r + 1) + clique_value(a, b), None)
        else:
            memo[st] = (clique_value(a, b), None)
        return memo[st][0]

    if n == 0:
        return 0, []
    total = fresh(0)

    strong: list[tuple[int, int]] = []
    st: DpState | None = DpState(0, 0, right[0])
    while st is not None:
        a, b, r = st
        _, j = memo[st]
        if b < r:
            assert j is not None
            strong.extend((a, t) for t in range(a + 1, j + 1))
            if j == a:
                st = DpState(a + 1, a + 1, right[a + 1]) if a + 1 < n else None
            else:
                st = DpState(a + 1, j, r)
        else:
            strong.extend(
                (s, t) for s in range(a, b + 1) for t in range(s + 1, b + 1)
            )
            nxt = b + 1
            st = DpState(nxt, nxt, right[nxt]) if nxt < n else None
    return total, strong


def solve_pig_dp(g: Graph) -> SolveResult:
    """Polynomial solve for proper interval graphs.

    Contract true twins, recognize an umbrella ordering of the contracted
    graph, run the prefix-clique DP over it, then expand the contracted
    labeling back to the input.
    """
    if not g.is_unit_weight():
        raise ValueError("solve_pig_dp expects a unit-weight graph")
    t0 = time.perf_counter()
    cg, tp, intra = contract_twins(g)
    o = recognize(cg)
    if o is None:
        raise WrongClassError("not a proper interval graph")
    wts = [cg.weights[v] for v in o.order]
    value_c, strong_pos = _pig_dp(o.order, wts, o.right_reach)
    strong_c = {canon_edge(o.order[s], o.order[t]) for s, t in strong_pos}
    lab_c = StrongWeakLabeling.from_strong(cg, strong_c)
    lab = expand_labeling(g, tp, lab_c, intra)
    stats = {
        "contracted_n": cg.n,
        "contracted_m": cg.m,
        "intra_twin_value": intra,
        "time_ms": (time.perf_counter() - t0) * 1000.0,
    }
    cert = {
        "ordering": list(o.order),
        "contracted_strong": sorted(strong_c),
        "intra_twin_value": intra,
        "twin_classes": [sorted(c) for c in tp.classes],
    }
    result = _finish(g, lab.strong, "pig-dp", stats, cert)
    assert result.value == value_c + intra
    return result


# ---------------------------------------------------------------------------
# trivially perfect graphs: the conflict graph is a cograph
# ---------------------------------------------------------------------------


def find_p4_or_c4(g: Graph) -> tuple[str, tuple[str, str, str, str]] | None:
    """First induced P4 or C4 (as ("P4"|"C4", (a, b, c, d)) along the path),
    or None. Scans middles: an edge bc with a in N(b)-N[c] and d in N(c)-N[b]
    always yields one of the two patterns on {a, b, c, d}."""
    for b, c in sorted(g.edges):
        nb, nc = g.neighbors(b), g.neighbors(c)
        left = sorted(nb - nc - {c})
        right = sorted(nc - nb - {b})
        for a in left:
            for d in right:
                if a == d:
                    continue
                kind = "C4" if g.has_edge(a, d) else "P4"
                return (kind, (a, b, c, d))
    return None


def _components_of(nodes: list, adj: dict) -> list[list]:
    seen = set()
    comps = []
    for start in sorted(nodes):
        if start in seen:
            continue
        comp = {start}
        queue = [start]
        while queue:
            x = queue.pop()
            for y in adj[x]:
                if y in comp or y not in nodes:
                    continue
                comp.add(y)
                queue.append(y)
        seen |= comp
        comps.append(sorted(comp))
    return comps


def _cograph_mwis(h: IncompatGraph) -> tuple[int, frozenset[Edge]]:
    """Maximum weighted independent set of a cograph by modular recursion:
    sum over components, maximum over join parts. Raises
    CographContradictionError on a subgraph that is neither."""
    adj = h.adjacency()

    def rec(nodes: list[Edge]) -> tuple[int, frozenset[Edge]]:
        if len(nodes) == 1:
            return h.node_weight[nodes[0]], frozenset(nodes)
        nodeset = set(nodes)
        comps = _components_of(nodeset, adj)
        if len(comps) > 1:
            val = 0
            out: set[Edge] = set()
            for comp in comps:
                v, s = rec(comp)
                val += v
                out |= s
            return val, frozenset(out)
        # connected: split along the complement
        co_adj = {
            x: (nodeset - adj[x]) - {x}
            for x in nodes
        }
        cocomps = _components_of(nodeset, co_adj)
        if len(cocomps) == 1:
            raise CographContradictionError(
                "conflict graph is not a cograph; the trivially-perfect "
                "pipeline guarantee is broken"
            )
        best: tuple[int, frozenset[Edge]] | None = None
        for part in cocomps:
            v, s = rec(part)
            if best is None or v > best[0]:
                best = (v, s)
        assert best is not None
        return best

    if not h.nodes:
        return 0, frozenset()
    return rec(sorted(h.nodes))


def solve_trivially_perfect(g: Graph) -> SolveResult:
    """Polynomial solve for trivially perfect ((P4, C4)-free) graphs."""
    if not g.is_unit_weight():
        raise ValueError("solve_trivially_perfect expects a unit-weight graph")
    found = find_p4_or_c4(g)
    if found is not None:
        kind, quad = found
        raise WrongClassError(f"not trivially perfect: induced {kind} on {quad}")
    t0 = time.perf_counter()
    cg, tp, intra = contract_twins(g)
    h = build_incompat(cg)
    value_c, sset = _cograph_mwis(h)
    lab_c = labeling_from_independent_set(cg, h, sset)
    lab = expand_labeling(g, tp, lab_c, intra)
    stats = {
        "contracted_n": cg.n,
        "conflict_nodes": len(h.nodes),
        "intra_twin_value": intra,
        "time_ms": (time.perf_counter() - t0) * 1000.0,
    }
    cert = {
        "independent_set": sorted(sset),
        "intra_twin_value": intra,
        "twin_classes": [sorted(c) for c in tp.classes],
    }
    result = _finish(g, lab.strong, "trivially-perfect", stats, cert)
    assert result.value == value_c + intra
    return result


# ---------------------------------------------------------------------------
# bipartite graphs: maximum matching
# ---------------------------------------------------------------------------


def two_coloring(g: Graph) -> dict[str, int] | None:
    """A proper 2-coloring, or None when some component has an odd cycle."""
    colors: dict[str, int] = {}
    for v in g.vertices:
        if v in colors:
            continue
        colors[v] = 0
        queue = [v]
        while queue:
            x = queue.pop(0)
            for y in sorted(g.neighbors(x)):
                if y not in colors:
                    colors[y] = 1 - colors[x]
                    queue.append(y)
                elif colors[y] == colors[x]:
                    return None
    return colors


def find_odd_cycle(g: Graph) -> list[str] | None:
    """Vertices of an odd cycle when the graph is not bipartite."""
    colors: dict[str, int] = {}
    parent: dict[str, str | None] = {}
    for v in g.vertices:
        if v in colors:
            continue
        colors[v] = 0
        parent[v] = None
        queue = [v]
        while queue:
            x = queue.pop(0)
            for y in sorted(g.neighbors(x)):
                if y not in colors:
                    colors[y] = 1 - colors[x]
                    parent[y] = x
                    queue.append(y)
                elif colors[y] == colors[x]:
                    # walk both ancestries to the meeting point
                    up_x, up_y = [x], [y]
                    ax, ay = x, y
                    while ax != ay:
                        ax = parent[ax]  # type: ignore[assignment]
                        ay = parent[ay]  # type: ignore[assignment]
                        up_x.append(ax)
                        up_y.append(ay)
                    cycle = up_x + list(reversed(up_y[:-1]))
                    return cycle
    return None


def maximum_matching(g: Graph, colors: dict[str, int]) -> frozenset[Edge]:
    """Maximum matching of a 2-colored graph via augmenting paths."""
    match: dict[str, str] = {}

    def augment(u: str, seen: set[str]) -> bool:
        for v in sorted(g.neighbors(u)):
            if v in seen:
                continue
            seen.add(v)
            if v not in match or augment(match[v], seen):
                match[v] = u
                return True
        return False

    for u in sorted(v for v in g.vertices if colors[v] == 0):
        augment(u, set())
    return frozenset(canon_edge(u, v) for v, u in match.items())


def solve_bipartite(g: Graph) -> SolveResult:
    """Polynomial solve for bipartite graphs: the optimum is a maximum
    matching (no triangles means any two adjacent strong edges conflict)."""
    if not g.is_unit_weight():
        raise ValueError("solve_bipartite expects a unit-weight graph")
    t0 = time.perf_counter()
    colors = two_coloring(g)
    if colors is None:
        raise WrongClassError("not bipartite")
    matching = maximum_matching(g, colors)
    stats = {
        "matching_size": len(matching),
        "time_ms": (time.perf_counter() - t0) * 1000.0,
    }
    cert = {
        "coloring": {v: colors[v] for v in g.vertices},
        "matching": sorted(matching),
    }
    return _finish(g, matching, "bipartite-matching", stats, cert)


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


def solve_auto(g: Graph, oracle_cap: int = DEFAULT_ORACLE_CAP) -> SolveResult:
    """Pick a solver: trivially perfect (checked on the whole graph; the class
    is closed under disjoint union), then per component proper interval,
    bipartite, and finally the brute-force oracle under its cap."""
    if not g.is_unit_weight():
        raise ValueError("solve_auto expects a unit-weight graph")
    if find_p4_or_c4(g) is None:
        return solve_trivially_perfect(g)
    t0 = time.perf_counter()
    strong: set[Edge] = set()
    tags: list[str] = []
    per_comp: dict[str, str] = {}
    for comp in g.connected_components():
        if recognize(comp) is not None:
            res = solve_pig_dp(comp)
        elif two_coloring(comp) is not None:
            res = solve_bipartite(comp)
        elif comp.m <= oracle_cap:
            res = solve_oracle(comp, cap=oracle_cap)
        else:
            raise UnsupportedInstanceError(
                f"component with {comp.m} edges fits no class and exceeds the "
                f"oracle cap {oracle_cap}"
            )
        strong |= res.labeling.strong
        tags.append(res.solver)
        per_comp[comp.vertices[0]] = res.solver
    solver = tags[0] if len(set(tags)) == 1 else "mixed"
    stats = {
        "components": len(per_comp),
        "component_solvers": per_comp,
        "time_ms": (time.perf_counter() - t0) * 1000.0,
    }
    return _finish(g, strong, solver, stats, {"dispatch": per_comp})
