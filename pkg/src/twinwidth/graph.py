"""Graphs, trigraphs and contraction sequences.

A trigraph carries two disjoint edge sets, black and red.  Contracting
``survivor`` and ``absorbed`` merges them into a single vertex that keeps the
label ``survivor``: every vertex in the symmetric difference of the two
neighbourhoods becomes a red neighbour, a common neighbour stays black only if
both old connections were black, and every other edge is untouched.

The width of a contraction sequence is the largest red degree seen in any
trigraph along the way; the twin-width of a graph is the least width over all
of its sequences.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InvalidContractionError, InvalidSequenceError, ParameterError

BLACK = 0
RED = 1


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on the dense vertex set ``0..n-1``."""

    __slots__ = ("n", "_adj", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ParameterError(f"vertex count must be non-negative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        seen = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u}, {v}) outside 0..{n - 1}")
            e = _pair(u, v)
            if e in seen:
                raise ParameterError(f"duplicate edge {e}")
            seen.add(e)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(frozenset(a) for a in adj)
        self._edges = tuple(sorted(seen))

    @classmethod
    def from_edges_dedup(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, silently collapsing parallel edges (loops still rejected)."""
        return cls(n, {_pair(u, v) for u, v in edges})

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def vertices(self) -> range:
        return range(self.n)

    def num_edges(self) -> int:
        return len(self._edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def masks(self) -> list[int]:
        """Neighbourhoods as integer bitsets."""
        out = []
        for a in self._adj:
            m = 0
            for w in a:
                m |= 1 << w
            out.append(m)
        return out

    def complement(self) -> "Graph":
        n = self.n
        return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)
                         if v not in self._adj[u]))

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled densely in increasing vertex order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        for v in keep:
            if not 0 <= v < self.n:
                raise ParameterError(f"vertex {v} not in graph")
        return Graph(len(keep), ((index[u], index[v]) for u, v in self._edges
                                 if u in index and v in index))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ParameterError("relabelling must be a permutation of the vertices")
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self._edges))

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for w in self._adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self._edges == other._edges

    def __hash__(self):
        return hash((self.n, self._edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self._edges)})"


@dataclass(frozen=True)
class ContractionSequence:
    """Ordered ``(survivor, absorbed)`` pairs; a full sequence has ``n - 1`` steps."""

    steps: tuple[tuple[int, int], ...] = ()

    def __init__(self, steps: Iterable[tuple[int, int]] = ()):
        object.__setattr__(self, "steps", tuple((int(a), int(b)) for a, b in steps))

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __add__(self, other: "ContractionSequence") -> "ContractionSequence":
        return ContractionSequence(self.steps + tuple(other))

    def relabel(self, mapping) -> "ContractionSequence":
        return ContractionSequence((mapping[a], mapping[b]) for a, b in self.steps)

    def final_vertex(self, vertices: Iterable[int]) -> int:
        """The vertex left live once the sequence runs over ``vertices``."""
        live = set(vertices)
        for _, b in self.steps:
            live.discard(b)
        if len(live) != 1:
            raise InvalidSequenceError(f"sequence leaves {len(live)} vertices live")
        return next(iter(live))

    def check(self, vertices: Iterable[int], full: bool = True) -> None:
        live = set(vertices)
        for k, (a, b) in enumerate(self.steps):
            if a == b:
                raise InvalidSequenceError(f"step {k}: contracts {a} with itself")
            if a not in live or b not in live:
                raise InvalidSequenceError(f"step {k}: ({a}, {b}) touches a dead vertex")
            live.discard(b)
        if full and len(live) > 1:
            raise InvalidSequenceError(f"sequence leaves {len(live)} vertices live")


class Trigraph:
    """Vertex set with disjoint black and red edge sets.

    Adjacency is a dict of dicts ``v -> {w: colour}``.  ``contract`` returns
    a new trigraph and shares every inner dict it does not touch, so a single
    contraction costs O(deg(u) + deg(v)) plus a shallow copy of the outer
    dict.
    """

    __slots__ = ("_adj",)

    def __init__(self, vertices: Iterable[int] = (), black: Iterable = (), red: Iterable = ()):
        adj: dict[int, dict[int, int]] = {int(v): {} for v in vertices}
        for colour, edges in ((BLACK, black), (RED, red)):
            for u, v in edges:
                if u == v:
                    raise ParameterError(f"self-loop at {u}")
                if u not in adj or v not in adj:
                    raise ParameterError(f"edge ({u}, {v}) has a vertex outside the trigraph")
                if v in adj[u]:
                    raise ParameterError(f"edge ({u}, {v}) given twice")
                adj[u][v] = colour
                adj[v][u] = colour
        self._adj = adj

    @classmethod
    def from_graph(cls, g: Graph) -> "Trigraph":
        t = cls.__new__(cls)
        t._adj = {v: dict.fromkeys(g.neighbors(v), BLACK) for v in range(g.n)}
        return t

    @classmethod
    def _wrap(cls, adj) -> "Trigraph":
        t = cls.__new__(cls)
        t._adj = adj
        return t

    def copy(self) -> "Trigraph":
        return Trigraph._wrap({v: dict(nb) for v, nb in self._adj.items()})

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self._adj))

    def __len__(self):
        return len(self._adj)

    def __contains__(self, v):
        return v in self._adj

    def _edges(self, colour):
        return tuple(sorted((u, w) for u, nb in self._adj.items() for w, c in nb.items()
                            if u < w and c == colour))

    @property
    def black(self) -> tuple[tuple[int, int], ...]:
        return self._edges(BLACK)

    @property
    def red(self) -> tuple[tuple[int, int], ...]:
        return self._edges(RED)

    def colour(self, u: int, v: int):
        """``BLACK``, ``RED`` or ``None`` for a non-edge."""
        return self._adj[u].get(v)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(self._adj[v])

    def red_neighbors(self, v: int) -> frozenset[int]:
        return frozenset(w for w, c in self._adj[v].items() if c == RED)

    def red_degree(self, v: int) -> int:
        return sum(1 for c in self._adj[v].values() if c == RED)

    def max_red_degree(self) -> int:
        return max((sum(1 for c in nb.values() if c == RED) for nb in self._adj.values()),
                   default=0)

    def underlying_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted((u, w) for u, nb in self._adj.items() for w in nb if u < w))

    def _check_pair(self, survivor, absorbed):
        if survivor == absorbed:
            raise InvalidContractionError(f"cannot contract {survivor} with itself")
        for v in (survivor, absorbed):
            if v not in self._adj:
                raise InvalidContractionError(f"vertex {v} is not live")

    def contract(self, survivor: int, absorbed: int) -> "Trigraph":
        self._check_pair(survivor, absorbed)
        adj = dict(self._adj)
        touched = set(adj[survivor]) | set(adj[absorbed])
        for x in touched:
            adj[x] = dict(adj[x])
        adj[survivor] = dict(adj[survivor])
        t = Trigraph._wrap(adj)
        t._merge(survivor, absorbed)
        return t

    def contract_inplace(self, survivor: int, absorbed: int) -> None:
        """Mutating contraction; only for trigraphs the caller owns exclusively."""
        self._check_pair(survivor, absorbed)
        self._merge(survivor, absorbed)

    def _merge(self, u: int, v: int) -> None:
        adj = self._adj
        nu = adj[u]
        nv = adj.pop(v)
        nu.pop(v, None)
        for x, cv in nv.items():
            if x == u:
                continue
            del adj[x][v]
            cu = nu.get(x)
            c = BLACK if (cu == BLACK and cv == BLACK) else RED
            nu[x] = c
            adj[x][u] = c
        for x, cu in nu.items():
            if cu == BLACK and x not in nv:
                nu[x] = RED
                adj[x][u] = RED

    def induced(self, vertices: Iterable[int]) -> "Trigraph":
        keep = set(vertices)
        for v in keep:
            if v not in self._adj:
                raise ParameterError(f"vertex {v} is not live")
        return Trigraph._wrap({v: {w: c for w, c in self._adj[v].items() if w in keep}
                               for v in keep})

    def __eq__(self, other):
        return (isinstance(other, Trigraph) and self.vertices == other.vertices
                and self.black == other.black and self.red == other.red)

    def __repr__(self):
        return (f"Trigraph(n={len(self._adj)}, black={len(self.black)}, "
                f"red={len(self.red)})")


def as_trigraph(t) -> Trigraph:
    return Trigraph.from_graph(t) if isinstance(t, Graph) else t


def contract(t: Trigraph, survivor: int, absorbed: int) -> Trigraph:
    return t.contract(survivor, absorbed)


def max_red_degree(t: Trigraph) -> int:
    return t.max_red_degree()


def induced_subtrigraph(t: Trigraph, vertices: Iterable[int]) -> Trigraph:
    return t.induced(vertices)


def replay(g, seq: Iterable[tuple[int, int]]) -> Iterator[Trigraph]:
    """Yield the trigraph after each contraction of ``seq`` applied to ``g``."""
    t = as_trigraph(g)
    for k, (a, b) in enumerate(seq):
        try:
            t = t.contract(a, b)
        except InvalidContractionError as exc:
            raise InvalidSequenceError(f"step {k}: {exc}") from None
        yield t


def sequence_width(g, seq, full: bool = True) -> int:
    """Largest red degree over the start trigraph and every contraction of ``seq``.

    ``g`` may be a Graph or a Trigraph.  With ``full`` the sequence must reduce
    ``g`` to one vertex.
    """
    t = as_trigraph(g).copy()
    width = t.max_red_degree()
    for k, (a, b) in enumerate(seq):
        try:
            t.contract_inplace(a, b)
        except InvalidContractionError as exc:
            raise InvalidSequenceError(f"step {k}: {exc}") from None
        adj = t._adj
        # only the merged vertex and its neighbours can have gained red edges
        for x in (a, *adj[a]):
            r = sum(1 for c in adj[x].values() if c == RED)
            if r > width:
                width = r
    if full and len(t) > 1:
        raise InvalidSequenceError(f"sequence leaves {len(t)} vertices live")
    return width


def apply_sequence(g, seq) -> Trigraph:
    t = as_trigraph(g).copy()
    for k, (a, b) in enumerate(seq):
        try:
            t.contract_inplace(a, b)
        except InvalidContractionError as exc:
            raise InvalidSequenceError(f"step {k}: {exc}") from None
    return t
