"""Colour-aware canonical certificates for small trigraphs.

Colour refinement followed by individualisation of the smallest non-singleton
cell, keeping the lexicographically least leaf certificate.  There is no
automorphism pruning, so highly symmetric inputs can blow up; ``leaf_limit``
bounds the work and ``None`` is returned when it is hit.  Callers must fall
back to a labelled key in that case.
"""
from __future__ import annotations


class _LeafLimit(Exception):
    pass


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _refine(black_adj, red_adj, colours):
    ncls = len(set(colours))
    while True:
        sigs = [(colours[v],
                 tuple(sorted(colours[w] for w in black_adj[v])),
                 tuple(sorted(colours[w] for w in red_adj[v])))
                for v in range(len(colours))]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == ncls:
            return new
        colours, ncls = new, len(rank)


def certificate(black, red, colours=None, leaf_limit: int = 256):
    """Canonical certificate of a trigraph on local vertices ``0..m-1``.

    ``black`` and ``red`` are per-vertex neighbour bitsets.  Two inputs get
    equal certificates iff some colour-preserving bijection carries one onto
    the other.
    """
    m = len(black)
    black_adj = [list(_bits(b)) for b in black]
    red_adj = [list(_bits(r)) for r in red]
    init = list(colours) if colours is not None else [0] * m
    leaves = [0]

    def leaf(col):
        order = sorted(range(m), key=col.__getitem__)
        pos = [0] * m
        for p, v in enumerate(order):
            pos[v] = p
        rows = []
        for v in order:
            bm = 0
            for w in black_adj[v]:
                bm |= 1 << pos[w]
            rm = 0
            for w in red_adj[v]:
                rm |= 1 << pos[w]
            rows.append((init[v], bm, rm))
        return tuple(rows)

    def search(col):
        col = _refine(black_adj, red_adj, col)
        counts = {}
        for c in col:
            counts[c] = counts.get(c, 0) + 1
        if len(counts) == m:
            leaves[0] += 1
            if leaves[0] > leaf_limit:
                raise _LeafLimit
            return leaf(col)
        size, target = min((k, c) for c, k in counts.items() if k > 1)
        best = None
        for v in range(m):
            if col[v] != target:
                continue
            nxt = [2 * c for c in col]
            nxt[v] -= 1
            cert = search(nxt)
            if best is None or cert < best:
                best = cert
        return best

    try:
        return (m, search(init))
    except _LeafLimit:
        return None


def orbits(black, red, leaf_limit: int = 256):
    """Vertex orbits under colour-preserving automorphisms, or None if too costly."""
    m = len(black)
    groups: dict = {}
    for v in range(m):
        col = [0] * m
        col[v] = 1
        cert = certificate(black, red, col, leaf_limit)
        if cert is None:
            return None
        groups.setdefault(cert, []).append(v)
    return sorted(groups.values())
