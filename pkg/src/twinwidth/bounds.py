"""Closed-form twin-width bounds and exact values for the standard families."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .errors import ParameterError
from .graph import Graph


class Unbounded:
    """Marker for a product whose twin-width admits no bound in the factor parameters."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNBOUNDED"

    def __str__(self):
        return "unbounded"


UNBOUNDED = Unbounded()


def symdiff_sizes(g: Graph):
    """Yield ``(u, v, |N(u) △ N(v) \\ {u, v}|)`` for every pair ``u < v``."""
    masks = g.masks()
    for u in range(g.n):
        mu = masks[u]
        for v in range(u + 1, g.n):
            sd = (mu ^ masks[v]) & ~((1 << u) | (1 << v))
            yield u, v, sd.bit_count()


def lower_bound_symdiff(g: Graph) -> int:
    """min over distinct pairs of ``|N(u) △ N(v) \\ {u, v}|``; valid for graphs only."""
    if g.n < 2:
        raise ParameterError("the symmetric-difference bound needs at least two vertices")
    return min(s for _, _, s in symdiff_sizes(g))


PRODUCT_KINDS = ("cartesian", "tensor", "strong", "lexicographic", "modular", "corona",
                 "l_corona", "rooted", "replacement", "zigzag")


def product_upper_formula(kind: str, tww_g: int = 0, tww_h: int = 0, delta_g: int = 0,
                          delta_h: int = 0, extras=None):
    """Upper bound on ``tww(G ⋆ H)`` from the factor parameters.

    ``rooted`` takes ``extras = (tww(H - r), deg_H(r))``; ``l_corona`` takes
    ``extras = ℓ``.  ``modular`` returns ``UNBOUNDED``.
    """
    if kind == "cartesian":
        return max(tww_g + delta_h, tww_h) + delta_h
    if kind == "tensor":
        return max(tww_g * delta_h + delta_h, tww_h) + delta_h
    if kind == "strong":
        return max(tww_g * (delta_h + 1) + delta_h, tww_h) + delta_h
    if kind == "lexicographic":
        return max(tww_g, tww_h)
    if kind == "modular":
        return UNBOUNDED
    if kind == "corona":
        return max(tww_g + 1, tww_h, 2)
    if kind == "l_corona":
        ell = int(extras)
        if ell < 1:
            raise ParameterError("corona power must be >= 1")
        return max(tww_g + ell, tww_h + ell - 1, ell + 1)
    if kind == "rooted":
        if extras is None:
            raise ParameterError("rooted bound needs extras = (tww(H - r), deg_H(r))")
        tww_rest, root_degree = extras
        return max(tww_rest + 1, root_degree, tww_g + 1, 2)
    if kind == "replacement":
        return tww_g + delta_g
    if kind == "zigzag":
        return max(delta_h ** 2 * (delta_g - delta_h + 1), tww_g + delta_g)
    raise ParameterError(f"unknown product kind {kind!r}")


def _ceil_sqrt(x: int) -> int:
    r = math.isqrt(x)
    return r if r * r == x else r + 1


def replacement_lower(delta_h: int, tww_h: int) -> int:
    if delta_h < 0:
        raise ParameterError("degree must be non-negative")
    return max(_ceil_sqrt(2 * delta_h), tww_h)


def hypercube_tensor_bounds(c: int, d: int) -> tuple[int, int]:
    """(lower, upper) for ``tww(H(c,2) × H(d,2))``; no construction is provided."""
    if c < 2 or d < 2:
        raise ParameterError("hypercube tensor bounds need c, d >= 2")
    big = max(c, d)
    return 2 * c * d - 4 * big, 2 * c * d - 2 * big


def _rook(n, m):
    if n < 1 or m < 1:
        raise ParameterError("rook graph needs n, m >= 1")
    if (n == 2 and m == 2) or min(n, m) == 1:
        return 0
    return 2 * (min(n, m) - 1)


def _hamming(d, k):
    if d < 1 or k < 1:
        raise ParameterError("hamming needs d, k >= 1")
    if d == 1 or k == 1:
        return 0
    if k == 2:
        return 2 * (k - 1) * (d - 2)
    return 2 * (k - 1) * (d - 1)


def _weak_power(d, k):
    if d < 1 or k < 1:
        raise ParameterError("weak power needs d, k >= 1")
    if d == 1 or k <= 2:
        return 0
    return 2 * (k - 1) ** (d - 1)


def _strong_hypercubes(c, d):
    if c < 2 or d < 2:
        raise ParameterError("strong hypercube formula needs c, d >= 2")
    return 2 * c * d + 2 * min(c - d, d - c) - 4


def _paley(q):
    if q < 5 or q % 4 != 1:
        raise ParameterError("Paley graph needs q = 1 mod 4")
    return (q - 1) // 2


def _reported(table, name):
    def value(*params):
        key = tuple(params)
        if key not in table:
            raise ParameterError(f"no reported value for {name}{key}")
        return table[key]
    return value


CLOSED_FORM = "closed form"
REPORTED = "reported computation"

_FAMILIES = {
    "rook": (_rook, CLOSED_FORM),
    "rook_complement": (_rook, CLOSED_FORM),
    "hamming": (_hamming, CLOSED_FORM),
    "weak_power": (_weak_power, CLOSED_FORM),
    "strong_hypercubes": (_strong_hypercubes, CLOSED_FORM),
    "paley": (_paley, CLOSED_FORM),
    "modular_paths": (_reported({(6,): 9}, "modular_paths"), REPORTED),
    "corona_k3_k1": (_reported({(): 2}, "corona_k3_k1"), REPORTED),
    "corona_paley9_k1": (_reported({(): 5}, "corona_paley9_k1"), REPORTED),
    "rooted_c3_p2": (_reported({(): 2}, "rooted_c3_p2"), REPORTED),
}


def family_exact(name: str, *params: int) -> int:
    if name not in _FAMILIES:
        raise ParameterError(f"no exact value known for family {name!r}")
    return _FAMILIES[name][0](*params)


def family_exact_source(name: str) -> str:
    if name not in _FAMILIES:
        raise ParameterError(f"no exact value known for family {name!r}")
    return _FAMILIES[name][1]


@dataclass
class BoundReport:
    graph_id: str
    lower_symdiff: Optional[int]
    formula_bounds: list = field(default_factory=list)   # [(source, value)]
    sequence_width: Optional[int] = None
    exact: Optional[int] = None

    @property
    def consistent(self) -> bool:
        uppers = [v for _, v in self.formula_bounds if not isinstance(v, Unbounded)]
        if self.sequence_width is not None:
            uppers.append(self.sequence_width)
        lo = self.lower_symdiff if self.lower_symdiff is not None else 0
        if self.exact is None:
            return all(lo <= u for u in uppers)
        return lo <= self.exact and all(self.exact <= u for u in uppers)

    def to_dict(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "lower_symdiff": self.lower_symdiff,
            "formula_bounds": [{"source": s, "value": (str(v) if isinstance(v, Unbounded) else v)}
                               for s, v in self.formula_bounds],
            "sequence_width": self.sequence_width,
            "exact": self.exact,
            "consistent": self.consistent,
        }


def bound_report(g: Graph, graph_id: str = "g", formula_bounds=(), sequence_width=None,
                 exact=None) -> BoundReport:
    lower = lower_bound_symdiff(g) if g.n >= 2 else None
    return BoundReport(graph_id, lower, list(formula_bounds), sequence_width, exact)
