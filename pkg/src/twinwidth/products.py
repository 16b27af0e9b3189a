"""The nine graph products and rotation maps.

Product vertices ``(u, i)`` are flattened to ``u * fibre + i`` where ``fibre``
is the size of the second coordinate's range.  The corona product uses the
fibre ``{inf} ∪ V(H)``, with ``inf`` at position 0 and ``i`` at ``i + 1``.
Replacement and zig-zag products put cloud ``C(v) = {(v, k)}`` at
``v * d .. v * d + d - 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DimensionError, ParameterError, RegularityError
from .graph import Graph

INF = None  # the extra corona coordinate


@dataclass(frozen=True)
class ProductVertexIndex:
    """Bijection between coordinate pairs and flat product labels."""

    kind: str
    n_left: int
    n_right: int
    with_infinity: bool = False

    @property
    def fibre(self) -> int:
        return self.n_right + (1 if self.with_infinity else 0)

    @property
    def size(self) -> int:
        return self.n_left * self.fibre

    def encode(self, u: int, i: Optional[int]) -> int:
        if not 0 <= u < self.n_left:
            raise ParameterError(f"left coordinate {u} out of range")
        if i is INF:
            if not self.with_infinity:
                raise ParameterError("this product has no infinity coordinate")
            return u * self.fibre
        if not 0 <= i < self.n_right:
            raise ParameterError(f"right coordinate {i} out of range")
        return u * self.fibre + i + (1 if self.with_infinity else 0)

    def decode(self, x: int) -> tuple[int, Optional[int]]:
        if not 0 <= x < self.size:
            raise ParameterError(f"label {x} out of range")
        u, r = divmod(x, self.fibre)
        if self.with_infinity:
            return u, (INF if r == 0 else r - 1)
        return u, r

    def fibre_of(self, u: int) -> list[int]:
        return list(range(u * self.fibre, (u + 1) * self.fibre))

    def layer(self, i: Optional[int]) -> list[int]:
        return [self.encode(u, i) for u in range(self.n_left)]


def product_index(kind: str, g: Graph, h: Graph) -> ProductVertexIndex:
    return ProductVertexIndex(kind, g.n, h.n, with_infinity=(kind == "corona"))


def _pairwise(g: Graph, h: Graph, kind: str, adjacent) -> Graph:
    idx = product_index(kind, g, h)
    nh = h.n
    verts = [(u, i) for u in range(g.n) for i in range(nh)]
    edges = []
    for a in range(len(verts)):
        u, i = verts[a]
        for b in range(a + 1, len(verts)):
            v, j = verts[b]
            if adjacent(u, i, v, j):
                edges.append((a, b))
    return Graph(idx.size, edges)


def cartesian(g: Graph, h: Graph) -> Graph:
    nh = h.n
    edges = [(u * nh + i, u * nh + j) for u in range(g.n) for i, j in h.edges]
    edges += [(u * nh + i, v * nh + i) for u, v in g.edges for i in range(nh)]
    return Graph(g.n * nh, edges)


def _tensor_edges(g: Graph, h: Graph):
    nh = h.n
    for u, v in g.edges:
        for i, j in h.edges:
            yield u * nh + i, v * nh + j
            yield u * nh + j, v * nh + i


def tensor(g: Graph, h: Graph) -> Graph:
    return Graph(g.n * h.n, _tensor_edges(g, h))


def strong(g: Graph, h: Graph) -> Graph:
    return Graph(g.n * h.n, list(cartesian(g, h).edges) + list(_tensor_edges(g, h)))


def lexicographic(g: Graph, h: Graph) -> Graph:
    nh = h.n
    edges = [(u * nh + i, u * nh + j) for u in range(g.n) for i, j in h.edges]
    edges += [(u * nh + i, v * nh + j) for u, v in g.edges for i in range(nh) for j in range(nh)]
    return Graph(g.n * nh, edges)


def modular(g: Graph, h: Graph) -> Graph:
    return _pairwise(g, h, "modular", lambda u, i, v, j: u != v and i != j and
                     g.has_edge(u, v) == h.has_edge(i, j))


def corona(g: Graph, h: Graph) -> Graph:
    idx = product_index("corona", g, h)
    edges = [(idx.encode(u, INF), idx.encode(v, INF)) for u, v in g.edges]
    for u in range(g.n):
        edges += [(idx.encode(u, i), idx.encode(u, j)) for i, j in h.edges]
        edges += [(idx.encode(u, INF), idx.encode(u, i)) for i in range(h.n)]
    return Graph(idx.size, edges)


def l_corona(g: Graph, h: Graph, ell: int) -> Graph:
    """``G ○^ℓ H = (G ○^{ℓ-1} H) ○ H``."""
    if ell < 1:
        raise ParameterError(f"corona power must be >= 1, got {ell}")
    out = g
    for _ in range(ell):
        out = corona(out, h)
    return out


def rooted(g: Graph, h: Graph, root: int) -> Graph:
    if not 0 <= root < h.n:
        raise ParameterError(f"root {root} is not a vertex of H (0..{h.n - 1})")
    nh = h.n
    edges = [(u * nh + root, v * nh + root) for u, v in g.edges]
    edges += [(u * nh + i, u * nh + j) for u in range(g.n) for i, j in h.edges]
    return Graph(g.n * nh, edges)


class RotationMap:
    """Edge-end labelling ``rot(v, i) = (w, j)`` of a d-regular (multi)graph.

    Labels run over ``1..d``.  The table must be an involution; for the maps
    built from a simple graph the labels at ``v`` also cover ``N(v)`` exactly.
    """

    def __init__(self, n: int, d: int, table: dict):
        self.n = n
        self.d = d
        self.table = dict(table)
        for v in range(n):
            for i in range(1, d + 1):
                if (v, i) not in self.table:
                    raise ParameterError(f"rotation map has no entry for ({v}, {i})")
        if len(self.table) != n * d:
            raise ParameterError("rotation map has entries outside [n] x [d]")
        for key, val in self.table.items():
            if self.table.get(val) != key:
                raise ParameterError(f"rotation map is not an involution at {key}")

    def __call__(self, v: int, i: int) -> tuple[int, int]:
        return self.table[(v, i)]

    def __eq__(self, other):
        return isinstance(other, RotationMap) and self.table == other.table

    @classmethod
    def from_neighbour_orders(cls, g: Graph, orders: Sequence[Sequence[int]]) -> "RotationMap":
        """Map whose i-th edge at v runs to ``orders[v][i-1]``."""
        if not g.is_regular():
            raise RegularityError("rotation maps need a regular graph")
        d = g.max_degree()
        pos = {}
        for v in range(g.n):
            order = list(orders[v])
            if sorted(order) != sorted(g.neighbors(v)):
                raise ParameterError(f"order at {v} is not a listing of N({v})")
            for i, w in enumerate(order, start=1):
                pos[(v, w)] = i
        table = {(v, pos[(v, w)]): (w, pos[(w, v)]) for v in range(g.n) for w in g.neighbors(v)}
        return cls(g.n, d, table)

    def edge_ends(self):
        """Sorted ``(v, i, w, j)`` quadruples."""
        return sorted((v, i, w, j) for (v, i), (w, j) in self.table.items())

    @classmethod
    def from_edge_ends(cls, quads) -> "RotationMap":
        table = {}
        for v, i, w, j in quads:
            if (v, i) in table:
                raise ParameterError(f"duplicate entry for ({v}, {i})")
            table[(v, i)] = (w, j)
        if not table:
            return cls(0, 0, {})
        n = max(v for v, _ in table) + 1
        d = max(i for _, i in table)
        return cls(n, d, table)

    def agrees_with(self, g: Graph) -> bool:
        if self.n != g.n:
            return False
        for v in range(g.n):
            ends = [self.table[(v, i)][0] for i in range(1, self.d + 1)]
            if len(set(ends)) != len(ends) or set(ends) != set(g.neighbors(v)):
                return False
        return True

    def multigraph_edges(self) -> list[tuple[int, int]]:
        """One entry per edge of the underlying multigraph (loops included)."""
        out = []
        for (v, i), (w, j) in self.table.items():
            if (v, i) <= (w, j):
                out.append((v, w) if v <= w else (w, v))
        return sorted(out)

    def __repr__(self):
        return f"RotationMap(n={self.n}, d={self.d})"


def build_rotation_map(g: Graph) -> RotationMap:
    """Default labelling: the i-th edge at v leads to v's i-th smallest neighbour."""
    return RotationMap.from_neighbour_orders(g, [sorted(g.neighbors(v)) for v in range(g.n)])


def _check_pair(g: Graph, h: Graph, rot_g, rot_h, need_edges_in_h=False):
    if not g.is_regular():
        raise RegularityError("outer graph must be regular")
    if not h.is_regular():
        raise RegularityError("inner graph must be regular")
    d = g.max_degree()
    if g.n == 0 or d == 0:
        raise DimensionError("outer graph must have positive degree")
    if h.n != d:
        raise DimensionError(f"inner graph has {h.n} vertices but outer degree is {d}")
    if need_edges_in_h and h.max_degree() == 0:
        raise DimensionError("inner graph must have positive degree")
    rot_g = build_rotation_map(g) if rot_g is None else rot_g
    rot_h = build_rotation_map(h) if rot_h is None else rot_h
    if not rot_g.agrees_with(g):
        raise ParameterError("rotation map does not describe the outer graph")
    if not rot_h.agrees_with(h):
        raise ParameterError("rotation map does not describe the inner graph")
    return d, h.max_degree(), rot_g, rot_h


def replacement_rotation(g: Graph, h: Graph, rot_g=None, rot_h=None) -> RotationMap:
    d, delta, rot_g, rot_h = _check_pair(g, h, rot_g, rot_h)
    table = {}
    for v in range(g.n):
        for k in range(d):
            for i in range(1, delta + 1):
                m, j = rot_h(k, i)
                table[(v * d + k, i)] = (v * d + m, j)
            w, j = rot_g(v, k + 1)
            table[(v * d + k, delta + 1)] = (w * d + j - 1, delta + 1)
    return RotationMap(g.n * d, delta + 1, table)


def replacement(g: Graph, h: Graph, rot_g=None, rot_h=None) -> Graph:
    rot = replacement_rotation(g, h, rot_g, rot_h)
    return Graph(rot.n, rot.multigraph_edges())


def zigzag_label(i: int, j: int, delta: int) -> int:
    """Identify ``(i, j)`` in ``[δ]^2`` with ``(i - 1)·δ + j`` in ``[δ^2]``."""
    return (i - 1) * delta + j


def zigzag_rotation(g: Graph, h: Graph, rot_g=None, rot_h=None) -> RotationMap:
    """The δ²-regular rotation relation of the zig-zag product (may repeat edges)."""
    d, delta, rot_g, rot_h = _check_pair(g, h, rot_g, rot_h, need_edges_in_h=True)
    table = {}
    for v in range(g.n):
        for k in range(d):
            for i in range(1, delta + 1):
                k2, i2 = rot_h(k, i)
                w, l2 = rot_g(v, k2 + 1)
                for j in range(1, delta + 1):
                    l, j2 = rot_h(l2 - 1, j)
                    table[(v * d + k, zigzag_label(i, j, delta))] = (
                        w * d + l, zigzag_label(j2, i2, delta))
    return RotationMap(g.n * d, delta * delta, table)


def zigzag(g: Graph, h: Graph, rot_g=None, rot_h=None) -> Graph:
    """Simple graph underlying the zig-zag relation (parallel edges merged)."""
    rot = zigzag_rotation(g, h, rot_g, rot_h)
    edges = {e for e in rot.multigraph_edges() if e[0] != e[1]}
    return Graph(rot.n, edges)


PRODUCTS = {
    "cartesian": cartesian,
    "tensor": tensor,
    "strong": strong,
    "lexicographic": lexicographic,
    "modular": modular,
    "corona": corona,
}
