"""Contraction sequences for product graphs built from factor sequences.

Every generator takes explicit factor sequences, builds the product, emits a
full sequence for it and measures that sequence.  ``claimed_bound`` is the
product bound evaluated with the measured factor widths in place of
twin-width, so ``verified_width <= claimed_bound`` is a checkable instance of
the bound.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import products
from .errors import InvalidSequenceError, NotIsomorphicError, ParameterError
from .graph import (ContractionSequence, Graph, Trigraph, apply_sequence, as_trigraph,
                    sequence_width)


@dataclass(frozen=True)
class GeneratedSequence:
    sequence: ContractionSequence
    claimed_bound: int
    verified_width: int
    graph: Graph

    @property
    def holds(self) -> bool:
        return self.verified_width <= self.claimed_bound

    def to_dict(self) -> dict:
        return {"claimed_bound": self.claimed_bound, "verified_width": self.verified_width}


def _seq(seq) -> ContractionSequence:
    return seq if isinstance(seq, ContractionSequence) else ContractionSequence(seq)


def _checked(g: Graph, seq, what: str) -> tuple[ContractionSequence, int, int]:
    """Validate a full factor sequence; return it, its width and its last vertex."""
    seq = _seq(seq)
    try:
        width = sequence_width(g, seq)
    except InvalidSequenceError as exc:
        raise InvalidSequenceError(f"{what}: {exc}") from None
    return seq, width, seq.final_vertex(range(g.n))


def _finish(graph: Graph, steps, bound: int) -> GeneratedSequence:
    seq = ContractionSequence(steps)
    return GeneratedSequence(seq, bound, sequence_width(graph, seq), graph)


def lift_over_trigraph(t: Trigraph, h: Graph, seq_h, correspondence,
                       strict: bool = True) -> ContractionSequence:
    """Replay a sequence of ``h`` on a trigraph whose underlying graph is ``h``.

    ``correspondence[i]`` is the trigraph vertex playing ``i``.  The replayed
    sequence has width at most ``width(seq_h) + Δ(h)``.  With ``strict=False``
    the underlying graph may be any spanning subgraph of ``h``; the same
    bound holds since red parts of the replay are still adjacent in ``h``.
    """
    corr = [correspondence[i] for i in range(h.n)]
    if sorted(corr) != sorted(t.vertices) or len(set(corr)) != len(corr):
        raise NotIsomorphicError("correspondence is not a bijection onto the live vertices")
    index = {x: i for i, x in enumerate(corr)}
    mapped = sorted(tuple(sorted((index[a], index[b]))) for a, b in t.underlying_edges())
    if strict and mapped != list(h.edges):
        raise NotIsomorphicError("the trigraph's underlying graph differs from h under this map")
    if not strict and not set(mapped) <= set(h.edges):
        raise NotIsomorphicError("the trigraph's underlying graph is not a subgraph of h under this map")
    _seq(seq_h).check(range(h.n))
    return _seq(seq_h).relabel(corr)


def spider_bound(t, s: Iterable[int]) -> int:
    t = as_trigraph(t)
    s = set(s)
    return sum(len(t.neighbors(x) - s) for x in s)


def spider_contract(t, s: Iterable[int]) -> ContractionSequence:
    """Collapse ``s`` to one vertex, always merging its two lowest live labels.

    Every member of ``s`` needs a neighbour outside ``s``; the red degree stays
    within ``spider_bound(t, s)`` throughout.
    """
    t = as_trigraph(t)
    members = sorted(set(s))
    for x in members:
        if x not in t:
            raise ParameterError(f"vertex {x} is not live")
        if not t.neighbors(x) - set(members):
            raise ParameterError(f"vertex {x} has no neighbour outside the set")
    # contracting inside s never changes which labels are live there
    return ContractionSequence((members[0], x) for x in members[1:])


def _layered(g, seq_g, h, seq_h, graph):
    """Shared scheme: one G-step per copy round robin, then lift seq_h."""
    seq_g, wg, rg = _checked(g, seq_g, "seq_g")
    seq_h, wh, _ = _checked(h, seq_h, "seq_h")
    nh = h.n
    steps = [(a * nh + i, b * nh + i) for a, b in seq_g for i in range(nh)]
    t = apply_sequence(graph, steps)
    # for the tensor product an edgeless g leaves no edges at all
    steps += lift_over_trigraph(t, h, seq_h, [rg * nh + i for i in range(nh)],
                                strict=False).steps
    return steps, wg, wh


def cartesian_sequence(g: Graph, seq_g, h: Graph, seq_h) -> GeneratedSequence:
    graph = products.cartesian(g, h)
    steps, wg, wh = _layered(g, seq_g, h, seq_h, graph)
    dh = h.max_degree()
    return _finish(graph, steps, max(wg + 2 * dh, wh + dh))


def tensor_sequence(g: Graph, seq_g, h: Graph, seq_h) -> GeneratedSequence:
    graph = products.tensor(g, h)
    steps, wg, wh = _layered(g, seq_g, h, seq_h, graph)
    dh = h.max_degree()
    return _finish(graph, steps, max((wg + 2) * dh, wh + dh))


def strong_sequence(g: Graph, seq_g, h: Graph, seq_h) -> GeneratedSequence:
    graph = products.strong(g, h)
    steps, wg, wh = _layered(g, seq_g, h, seq_h, graph)
    dh = h.max_degree()
    return _finish(graph, steps, max(wg * (dh + 1) + dh, wh) + dh)


def lex_sequence(g: Graph, seq_g, h: Graph, seq_h) -> GeneratedSequence:
    seq_g, wg, _ = _checked(g, seq_g, "seq_g")
    seq_h, wh, rh = _checked(h, seq_h, "seq_h")
    graph = products.lexicographic(g, h)
    nh = h.n
    steps = [(u * nh + a, u * nh + b) for u in range(g.n) for a, b in seq_h]
    steps += [(a * nh + rh, b * nh + rh) for a, b in seq_g]
    return _finish(graph, steps, max(wg, wh))


def _corona_steps(g: Graph, seq_g, h: Graph, seq_h, rg: int, rh: int):
    idx = products.product_index("corona", g, h)
    steps = []
    for u in range(g.n):
        steps += [(idx.encode(u, a), idx.encode(u, b)) for a, b in seq_h]
    for a, b in seq_g:
        steps.append((idx.encode(a, rh), idx.encode(b, rh)))
        steps.append((idx.encode(a, None), idx.encode(b, None)))
    steps.append((idx.encode(rg, None), idx.encode(rg, rh)))
    return steps


def corona_sequence(g: Graph, seq_g, h: Graph, seq_h) -> GeneratedSequence:
    if h.n < 1:
        raise ParameterError("corona needs a non-empty second factor")
    seq_g, wg, rg = _checked(g, seq_g, "seq_g")
    seq_h, wh, rh = _checked(h, seq_h, "seq_h")
    graph = products.corona(g, h)
    return _finish(graph, _corona_steps(g, seq_g, h, seq_h, rg, rh), max(wg + 1, wh, 2))


def l_corona_sequence(g: Graph, seq_g, h: Graph, seq_h, ell: int) -> GeneratedSequence:
    if ell < 1:
        raise ParameterError(f"corona power must be >= 1, got {ell}")
    _, wg, _ = _checked(g, seq_g, "seq_g")
    _, wh, _ = _checked(h, seq_h, "seq_h")
    graph, seq = g, _seq(seq_g)
    for _ in range(ell):
        step = corona_sequence(graph, seq, h, seq_h)
        graph, seq = step.graph, step.sequence
    return _finish(graph, seq.steps, max(wg + ell, wh + ell - 1, ell + 1))


def rooted_remainder(h: Graph, root: int) -> Graph:
    """``h - root`` relabelled densely; vertex ``j`` stands for ``j + (j >= root)``."""
    if not 0 <= root < h.n:
        raise ParameterError(f"root {root} is not a vertex of h")
    return h.induced_subgraph(v for v in range(h.n) if v != root)


def rooted_sequence(g: Graph, seq_g, h: Graph, root: int, seq_rest) -> GeneratedSequence:
    """``seq_rest`` is a full sequence for ``rooted_remainder(h, root)``."""
    if not 0 <= root < h.n:
        raise ParameterError(f"root {root} is not a vertex of h")
    seq_g, wg, rg = _checked(g, seq_g, "seq_g")
    graph = products.rooted(g, h, root)
    nh = h.n
    if nh == 1:
        return _finish(graph, seq_g.steps, wg)
    rest = rooted_remainder(h, root)
    seq_rest, wr, rr = _checked(rest, seq_rest, "seq_rest")
    up = [j + (j >= root) for j in range(rest.n)]
    leaf = up[rr]
    steps = []
    for u in range(g.n):
        steps += [(u * nh + up[a], u * nh + up[b]) for a, b in seq_rest]
    for a, b in seq_g:
        steps.append((a * nh + leaf, b * nh + leaf))
        steps.append((a * nh + root, b * nh + root))
    steps.append((rg * nh + root, rg * nh + leaf))
    return _finish(graph, steps, max(wr + 1, h.degree(root), wg + 1, 2))


def replacement_sequence(g: Graph, seq_g, h: Graph, rot_g=None, rot_h=None) -> GeneratedSequence:
    seq_g, wg, _ = _checked(g, seq_g, "seq_g")
    graph = products.replacement(g, h, rot_g, rot_h)
    d = g.max_degree()
    t = Trigraph.from_graph(graph)
    steps = []
    for v in range(g.n):
        cloud = spider_contract(t, range(v * d, (v + 1) * d))
        t = apply_sequence(t, cloud)
        steps += cloud.steps
    steps += lift_over_trigraph(t, g, seq_g, [v * d for v in range(g.n)]).steps
    return _finish(graph, steps, wg + d)


def zigzag_cloud_rounds(g: Graph, h: Graph) -> list[list[tuple[int, int]]]:
    """Round-robin cloud contractions: round i merges one pair in every cloud."""
    d = g.max_degree()
    live = [list(range(v * d, (v + 1) * d)) for v in range(g.n)]
    rounds = []
    for _ in range(d - 1):
        this = []
        for v in range(g.n):
            a, b = live[v][0], live[v][1]
            this.append((a, b))
            live[v].pop(1)
        rounds.append(this)
    return rounds


def zigzag_sequence(g: Graph, seq_g, h: Graph, rot_g=None, rot_h=None) -> GeneratedSequence:
    seq_g, wg, _ = _checked(g, seq_g, "seq_g")
    graph = products.zigzag(g, h, rot_g, rot_h)
    d, delta = g.max_degree(), h.max_degree()
    steps = [p for rnd in zigzag_cloud_rounds(g, h) for p in rnd]
    t = apply_sequence(graph, steps)
    steps += lift_over_trigraph(t, g, seq_g, [v * d for v in range(g.n)]).steps
    return _finish(graph, steps, max(delta ** 2 * (d - delta + 1), wg + d))


def tensor_star_sequence(g: Graph, seq_g, n: int) -> GeneratedSequence:
    """``g × K_{1,n}``: fold the leaf fibres together by twin contractions, then
    treat the result as ``g × K_2``."""
    if n < 1:
        raise ParameterError(f"star needs n >= 1 leaves, got {n}")
    seq_g, wg, rg = _checked(g, seq_g, "seq_g")
    from .families import star
    graph = products.tensor(g, star(n))
    f = n + 1
    steps = [(u * f + 1, u * f + j) for j in range(2, n + 1) for u in range(g.n)]
    steps += [(a * f + i, b * f + i) for a, b in seq_g for i in (0, 1)]
    steps.append((rg * f, rg * f + 1))
    return _finish(graph, steps, wg + 2)


def leaf_fold_steps(g: Graph, n: int) -> list[tuple[int, int]]:
    """The twin contractions that reduce ``g × K_{1,n}`` to ``g × K_2``."""
    f = n + 1
    return [(u * f + 1, u * f + j) for j in range(2, n + 1) for u in range(g.n)]
