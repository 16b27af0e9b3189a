"""Independent reference implementations used only by the tests.

Nothing here imports the trigraph or solver code: red edges are recomputed
from vertex partitions of the input graph, which determine every trigraph
reachable by contractions (two parts are joined black when fully adjacent,
red when partly adjacent).  Graphs are given as ``(n, edges)``.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

import networkx as nx


def adjacency(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def part_colours(adj, parts):
    """``{(i, j): 'black' | 'red'}`` for the quotient trigraph on ``parts``."""
    out = {}
    for i, j in itertools.combinations(range(len(parts)), 2):
        hits = sum(1 for x in parts[i] for y in parts[j] if y in adj[x])
        if hits == 0:
            continue
        out[(i, j)] = "black" if hits == len(parts[i]) * len(parts[j]) else "red"
    return out


def max_red(adj, parts):
    deg = [0] * len(parts)
    for (i, j), c in part_colours(adj, parts).items():
        if c == "red":
            deg[i] += 1
            deg[j] += 1
    return max(deg, default=0)


def naive_width(n, edges, seq):
    """Width of a full or partial sequence, replayed on explicit vertex sets."""
    adj = adjacency(n, edges)
    parts = {v: {v} for v in range(n)}
    width = max_red(adj, list(parts.values()))
    for a, b in seq:
        if a == b or a not in parts or b not in parts:
            raise ValueError(f"bad step {(a, b)}")
        parts[a] |= parts.pop(b)
        width = max(width, max_red(adj, list(parts.values())))
    return width


def brute_tww(n, edges):
    """Exact twin-width by exhaustive search over vertex partitions."""
    if n <= 1:
        return 0
    adj = adjacency(n, edges)

    @lru_cache(maxsize=None)
    def best(state):
        parts = [set(p) for p in state]
        if len(parts) == 1:
            return 0
        result = None
        for i, j in itertools.combinations(range(len(parts)), 2):
            nxt = [p for k, p in enumerate(parts) if k not in (i, j)] + [parts[i] | parts[j]]
            here = max_red(adj, nxt)
            if result is not None and here >= result:
                continue
            key = tuple(sorted(tuple(sorted(p)) for p in nxt))
            val = max(here, best(key))
            if result is None or val < result:
                result = val
        return result

    return best(tuple((v,) for v in range(n)))


def all_sequences_tww(n, edges):
    """Exact twin-width by enumerating every labelled (survivor, absorbed) order."""
    best = None
    live0 = tuple(range(n))

    def rec(live, seq):
        nonlocal best
        if len(live) == 1:
            w = naive_width(n, edges, seq)
            best = w if best is None else min(best, w)
            return
        for a in live:
            for b in live:
                if a != b:
                    rec(tuple(x for x in live if x != b), seq + [(a, b)])

    rec(live0, [])
    return best if best is not None else 0


def to_nx(n, edges):
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return g


def isomorphic(n1, e1, n2, e2):
    return nx.is_isomorphic(to_nx(n1, e1), to_nx(n2, e2))


def _dedupe(graphs):
    buckets = {}
    out = []
    for n, edges in graphs:
        g = to_nx(n, edges)
        key = (n, len(edges), nx.weisfeiler_lehman_graph_hash(g, iterations=3),
               tuple(sorted(d for _, d in g.degree())))
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(g, other) for other in bucket):
            continue
        bucket.append(g)
        out.append((n, tuple(sorted(edges))))
    return out


@lru_cache(maxsize=None)
def connected_graphs(n):
    """All connected graphs on ``n`` vertices up to isomorphism.

    Every connected graph has a vertex whose removal keeps it connected, so
    adding a vertex joined to a non-empty subset of a smaller connected graph
    reaches all of them.
    """
    if n == 1:
        return ((1, ()),)
    cands = []
    for m, edges in connected_graphs(n - 1):
        for r in range(1, m + 1):
            for subset in itertools.combinations(range(m), r):
                cands.append((n, tuple(edges) + tuple((u, m) for u in subset)))
    return tuple(_dedupe(cands))


@lru_cache(maxsize=None)
def all_graphs(n):
    """All graphs on ``n`` vertices up to isomorphism (small n only)."""
    pairs = list(itertools.combinations(range(n), 2))
    cands = [(n, tuple(p for p, bit in zip(pairs, bits) if bit))
             for bits in itertools.product((0, 1), repeat=len(pairs))]
    return tuple(_dedupe(cands))
