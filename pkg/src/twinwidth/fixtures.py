"""Named reproduction fixtures grouped in tiers, as run by ``tww reproduce``.

Each fixture computes one integer and compares it with an expected value
under ``=``, ``<=`` or ``>=``.  Solver fixtures use node budgets only, so a
run is deterministic apart from the recorded runtimes.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import bounds, families, products, sequences, solver
from .graph import Graph

TIERS = ("quick", "full", "optional")
NODES = {"quick": 2_000_000, "full": 20_000_000, "optional": 500_000_000}


@dataclass(frozen=True)
class Fixture:
    name: str
    tier: str
    reference: str
    relation: str       # "=", "<=" or ">="
    expected: int
    kind: str           # key into _COMPUTE
    graph: str          # key into _GRAPHS
    arg: int = 0


_K = families.complete
_GRAPHS = {
    "C4": lambda: families.cycle(4),
    **{f"P{n}": (lambda n=n: families.path(n)) for n in range(4, 9)},
    "K3cK3": lambda: products.cartesian(_K(3), _K(3)),
    "K3xK3": lambda: products.tensor(_K(3), _K(3)),
    "K3cK4": lambda: products.cartesian(_K(3), _K(4)),
    "K4cK4": lambda: products.cartesian(_K(4), _K(4)),
    "K3xK4": lambda: products.tensor(_K(3), _K(4)),
    "Q3": lambda: families.hamming(3, 2),
    "Q4": lambda: families.hamming(4, 2),
    "H33": lambda: families.hamming(3, 3),
    "T33": lambda: families.weak_power(3, 3),
    "C3rP2": lambda: products.rooted(_K(3), families.path(2), 0),
    "K3oK1": lambda: products.corona(_K(3), _K(1)),
    "paley9": lambda: families.paley(9),
    "paley13": lambda: families.paley(13),
    "P6mP6": lambda: products.modular(families.path(6), families.path(6)),
    "C4sC4": lambda: products.strong(families.cycle(4), families.cycle(4)),
    "C5lP4": lambda: products.lexicographic(families.cycle(5), families.path(4)),
    "P9oK1": lambda: products.corona(families.paley(9), _K(1)),
    "K6rP5": lambda: products.replacement(_K(6), families.paley(5)),
}


def _budget(tier):
    return solver.SearchBudget(max_nodes=NODES[tier])


def _exact(fx: Fixture):
    res = solver.tww_exact(_GRAPHS[fx.graph](), _budget(fx.tier))
    if res.status != solver.EXACT:
        return None, res.status
    return res.lower, None


def _decide(fx: Fixture):
    """``tww <= d`` fails at ``d - 1`` and holds at ``d``; reports ``d`` on success."""
    g = _GRAPHS[fx.graph]()
    d = fx.arg
    below = solver.tww_le(g, d - 1, _budget(fx.tier))
    at = solver.tww_le(g, d, _budget(fx.tier))
    if solver.TIMEOUT in (below.answer, at.answer):
        return None, solver.TIMEOUT
    if below.answer == solver.YES:
        return d - 1, None
    if at.answer == solver.NO:
        return d + 1, None
    return d, None


def _symdiff(fx: Fixture):
    return bounds.lower_bound_symdiff(_GRAPHS[fx.graph]()), None


def _greedy(g):
    return solver.greedy_upper(g)[1]


def _sequence(fx: Fixture):
    k3, c4, k1 = _K(3), families.cycle(4), _K(1)
    if fx.graph == "K3cK3":
        r = sequences.cartesian_sequence(k3, _greedy(k3), k3, _greedy(k3))
    elif fx.graph == "K3xK3":
        r = sequences.tensor_sequence(k3, _greedy(k3), k3, _greedy(k3))
    elif fx.graph == "C4sC4":
        r = sequences.strong_sequence(c4, _greedy(c4), c4, _greedy(c4))
    elif fx.graph == "K3oK1":
        r = sequences.corona_sequence(k3, _greedy(k3), k1, _greedy(k1))
    elif fx.graph == "C3rP2":
        r = sequences.rooted_sequence(k3, _greedy(k3), families.path(2), 0, [])
    elif fx.graph == "K6rP5":
        k6 = _K(6)
        r = sequences.replacement_sequence(k6, _greedy(k6), families.paley(5))
    else:
        raise KeyError(fx.graph)
    return r.verified_width, None


def _replacement_lower(fx: Fixture):
    h = families.paley(5)
    return bounds.replacement_lower(h.max_degree(), int(_exact_of(h))), None


def _exact_of(g: Graph):
    return solver.tww_exact(g).lower


def _cloud_iso(fx: Fixture):
    """1 when the graph induced on the first cloud of K6 r paley(5) equals paley(5)."""
    g = _GRAPHS["K6rP5"]()
    cloud = g.induced_subgraph(range(5))
    return int(cloud == families.paley(5)), None


_COMPUTE = {
    "exact": _exact,
    "decide": _decide,
    "symdiff": _symdiff,
    "sequence": _sequence,
    "replacement_lower": _replacement_lower,
    "cloud_iso": _cloud_iso,
}


def _q(name, ref, rel, exp, kind, graph, arg=0):
    return Fixture(name, "quick", ref, rel, exp, kind, graph, arg)


def _f(name, ref, rel, exp, kind, graph, arg=0):
    return Fixture(name, "full", ref, rel, exp, kind, graph, arg)


FIXTURES = [
    _q("tww(C4)", "C4 is a cograph", "=", 0, "exact", "C4"),
    *[_q(f"tww(P{n})", "paths have twin-width at most one and are not cographs", "=", 1,
         "exact", f"P{n}") for n in range(4, 9)],
    _q("tww(K3 □ K3)", "rook graphs 2(min{n,m}-1)", "=", 4, "decide", "K3cK3", 4),
    _q("tww(K3 × K3)", "rook complements 2(min{n,m}-1)", "=", 4, "decide", "K3xK3", 4),
    _q("tww(H(3,2))", "Hamming graphs 2(k-1)(d-2) for k = 2", "=", 2, "exact", "Q3"),
    _q("tww(C3 ♯ P2)", "rooted product example", "=", 2, "exact", "C3rP2"),
    _q("tww(K3 ○ K1)", "corona example", "=", 2, "exact", "K3oK1"),
    _q("tww(P(9))", "Paley graph example", "=", 4, "exact", "paley9"),
    _q("symdiff(K3 □ K3)", "symmetric-difference lower bound", "=", 4, "symdiff", "K3cK3"),
    _q("symdiff(T(3,3))", "weak powers 2(k-1)^(d-1)", "=", 8, "symdiff", "T33"),
    _q("symdiff(P6 ◇ P6)", "modular products of paths n+1", ">=", 7, "symdiff", "P6mP6"),
    _q("replacement_lower(K6 ⓡ P(5))", "max{ceil(sqrt(2Δ(H))), tww(H)}", "=", 2,
       "replacement_lower", "K6rP5"),
    _q("replacement_sequence(K6 ⓡ P(5))", "tww(G) + Δ(G)", "<=", 5, "sequence", "K6rP5"),
    _q("cloud of K6 ⓡ P(5) induces P(5)", "induced subgraph monotonicity", "=", 1,
       "cloud_iso", "K6rP5"),
    _q("cartesian_sequence(K3, K3)", "max{w_G + 2Δ(H), w_H + Δ(H)}", "=", 4, "sequence", "K3cK3"),
    _q("tensor_sequence(K3, K3)", "max{(w_G + 2)Δ(H), w_H + Δ(H)}", "=", 4, "sequence", "K3xK3"),
    _q("corona_sequence(K3, K1)", "max{w_G + 1, w_H, 2}", "=", 2, "sequence", "K3oK1"),
    _q("rooted_sequence(K3, P2)", "max{w_H' + 1, d_H(r), w_G + 1, 2}", "=", 2, "sequence", "C3rP2"),
    _f("tww(C4 ⊠ C4)", "strong hypercubes 2cd + 2min{c-d, d-c} - 4", "=", 4, "exact", "C4sC4"),
    _f("strong_sequence(C4, C4)", "layered strong-product sequence", "=", 4, "sequence", "C4sC4"),
    _f("tww(C5[P4])", "lexicographic equality max{tww(G), tww(H)}", "=", 2, "exact", "C5lP4"),
    _f("tww(K3 □ K4)", "rook graphs 2(min{n,m}-1)", "=", 4, "exact", "K3cK4"),
    _f("tww(K4 □ K4)", "rook graphs 2(min{n,m}-1)", "=", 6, "exact", "K4cK4"),
    _f("tww(K3 × K4)", "rook complements 2(min{n,m}-1)", "=", 4, "exact", "K3xK4"),
    _f("tww(H(4,2))", "Hamming graphs 2(k-1)(d-2) for k = 2", "=", 4, "exact", "Q4"),
    _f("tww(H(3,3))", "Hamming graphs 2(k-1)(d-1)", "=", 8, "exact", "H33"),
    _f("tww(T(3,3))", "weak powers 2(k-1)^(d-1)", "=", 8, "exact", "T33"),
    _f("tww(P(13))", "Paley graphs (q-1)/2", "=", 6, "exact", "paley13"),
    Fixture("tww(P6 ◇ P6)", "optional", "reported computation", "=", 9, "exact", "P6mP6"),
    Fixture("tww(P(9) ○ K1)", "optional", "corona example", "=", 5, "exact", "P9oK1"),
]


def select(tier: str) -> list[Fixture]:
    """``quick``; ``full`` adds to quick; ``optional`` runs only the optional fixtures."""
    if tier not in TIERS:
        raise ValueError(f"unknown tier {tier!r}")
    wanted = {"quick": ("quick",), "full": ("quick", "full"), "optional": ("optional",)}[tier]
    return [fx for fx in FIXTURES if fx.tier in wanted]


def _holds(rel, computed, expected):
    if computed is None:
        return False
    return {"=": computed == expected, "<=": computed <= expected,
            ">=": computed >= expected}[rel]


def run_fixture(fx: Fixture) -> dict:
    start = time.monotonic()
    computed, note = _COMPUTE[fx.kind](fx)
    ok = _holds(fx.relation, computed, fx.expected)
    rec = {
        "name": fx.name,
        "reference": fx.reference,
        "relation": fx.relation,
        "expected": fx.expected,
        "computed": computed,
        "status": "pass" if ok else "fail",
        "runtime": round(time.monotonic() - start, 3),
    }
    if note:
        rec["note"] = note
    return rec


def reproduce(tier: str, jobs: int = 1, timestamps: bool = True) -> dict:
    chosen = select(tier)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(run_fixture, chosen))
    else:
        records = [run_fixture(fx) for fx in chosen]
    if not timestamps:
        for rec in records:
            rec.pop("runtime")
    return {
        "tier": tier,
        "fixtures": records,
        "passed": sum(r["status"] == "pass" for r in records),
        "failed": sum(r["status"] == "fail" for r in records),
        "pass": all(r["status"] == "pass" for r in records),
    }
