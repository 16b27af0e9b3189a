"""Exact twin-width of small graphs by branch and bound.

The search state is a trigraph held as per-vertex black/red neighbour bitsets
together with the part of the original vertex set each live vertex stands
for.  A trigraph reached by contractions is determined by that partition (an
edge between two parts is black when complete, absent when empty, red
otherwise), so the sorted tuple of parts is an exact memo key.  Canonical
certificates additionally merge isomorphic states.

Reductions used inside a branch:

* a child whose red degree would exceed ``d`` is never entered;
* perfect twins (same black and same red neighbourhood apart from each other)
  are contracted without branching: the result is the induced subtrigraph on
  the other vertices, so neither direction of the equivalence changes;
* with at most ``d + 1`` live vertices any completion works;
* at the first branching node only pairs containing an orbit representative
  are tried.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from . import canon
from .bounds import lower_bound_symdiff
from .errors import ParameterError
from .graph import ContractionSequence, Graph

EXACT = "exact"
LOWER_ONLY = "lower-only"
TIMEOUT = "timeout"

YES = "yes"
NO = "no"


@dataclass(frozen=True)
class SearchBudget:
    max_time: Optional[float] = None
    max_nodes: Optional[int] = 10_000_000
    target: Optional[int] = None

    def __post_init__(self):
        if self.max_time is None and self.max_nodes is None:
            raise ParameterError("a search budget needs a time or node limit")


@dataclass
class SolveResult:
    status: str
    lower: int
    upper: int
    witness: Optional[ContractionSequence]
    nodes: int = 0
    elapsed: float = 0.0

    @property
    def value(self) -> Optional[int]:
        return self.lower if self.status == EXACT else None

    def to_dict(self, timestamps: bool = True) -> dict:
        out = {
            "status": self.status,
            "value": self.value,
            "interval": [self.lower, self.upper],
            "nodes": self.nodes,
            "witness": [list(s) for s in self.witness] if self.witness is not None else None,
        }
        if timestamps:
            out["elapsed"] = round(self.elapsed, 6)
        return out


@dataclass
class Decision:
    answer: str
    witness: Optional[ContractionSequence] = None
    nodes: int = 0


class _Timeout(Exception):
    pass


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass
class _Options:
    memo: str = "canonical"       # "canonical", "exact" or "off"
    twins: bool = True
    symmetry: bool = True
    assume_transitive: bool = False
    leaf_limit: int = 64


class _State:
    """Mutable bitset trigraph with an undo log."""

    def __init__(self, g: Graph):
        n = g.n
        self.n = n
        self.black = g.masks()
        self.red = [0] * n
        self.part = [1 << v for v in range(n)]
        self.live = (1 << n) - 1
        self.count = n

    def contract(self, u: int, v: int):
        black, red = self.black, self.red
        bu, bv = 1 << u, 1 << v
        excl = bu | bv
        bu_, ru_, bv_, rv_ = black[u], red[u], black[v], red[v]
        nb = bu_ & bv_ & ~excl
        nr = (bu_ | ru_ | bv_ | rv_) & ~excl & ~nb
        touched = (bu_ | ru_ | bv_ | rv_) & ~excl
        saved = []
        keep = ~excl
        for x in _bits(touched):
            bx, rx = black[x], red[x]
            saved.append((x, bx, rx))
            if nb >> x & 1:
                black[x] = (bx & keep) | bu
                red[x] = rx & keep
            else:
                black[x] = bx & keep
                red[x] = (rx & keep) | bu
        undo = (u, v, bu_, ru_, bv_, rv_, self.part[u], saved)
        black[u], red[u] = nb, nr
        black[v] = red[v] = 0
        self.part[u] |= self.part[v]
        self.live &= ~bv
        self.count -= 1
        return undo

    def undo(self, rec) -> None:
        u, v, bu_, ru_, bv_, rv_, pu, saved = rec
        black, red = self.black, self.red
        for x, bx, rx in saved:
            black[x], red[x] = bx, rx
        black[u], red[u], black[v], red[v] = bu_, ru_, bv_, rv_
        self.part[u] = pu
        self.live |= 1 << v
        self.count += 1

    def live_list(self) -> list[int]:
        return list(_bits(self.live))

    def max_red(self) -> int:
        return max((self.red[x].bit_count() for x in _bits(self.live)), default=0)

    def find_twins(self):
        black, red = self.black, self.red
        vs = self.live_list()
        seen = {}
        # twins that are non-adjacent have literally equal rows
        for v in vs:
            key = (black[v], red[v])
            if key in seen:
                return seen[key], v
            seen[key] = v
        for i, u in enumerate(vs):
            bu, ru = black[u], red[u]
            for v in vs[i + 1:]:
                if (bu | ru) >> v & 1:
                    mask = ~((1 << u) | (1 << v))
                    if bu & mask == black[v] & mask and ru & mask == red[v] & mask:
                        return u, v
        return None

    def partition_key(self):
        part = self.part
        return tuple(sorted(part[x] for x in _bits(self.live)))

    def local(self):
        vs = self.live_list()
        pos = {v: i for i, v in enumerate(vs)}

        def remap(mask):
            out = 0
            for w in _bits(mask):
                out |= 1 << pos[w]
            return out

        return vs, [remap(self.black[v]) for v in vs], [remap(self.red[v]) for v in vs]

    def scored_candidates(self, d: int, pairs=None):
        """``(resulting max red degree, merged red degree, u, v)`` for every pair
        whose contraction keeps all red degrees <= d."""
        black, red = self.black, self.red
        vs = self.live_list()
        cnt = {x: red[x].bit_count() for x in vs}
        ranked = sorted(vs, key=lambda x: -cnt[x])
        out = []
        if pairs is None:
            pairs = ((u, v) for i, u in enumerate(vs) for v in vs[i + 1:])
        for u, v in pairs:
            excl = (1 << u) | (1 << v)
            bu, ru, bv, rv = black[u], red[u], black[v], red[v]
            nu, nv = bu | ru, bv | rv
            if (((nu ^ nv) & ~excl).bit_count()) > d:
                continue
            nb = bu & bv & ~excl
            nr = (nu | nv) & ~excl & ~nb
            r = nr.bit_count()
            if r > d:
                continue
            worst = r
            gained = nr & ~(ru | rv)
            ok = True
            for x in _bits(gained):
                c = cnt[x] + 1
                if c > d:
                    ok = False
                    break
                if c > worst:
                    worst = c
            if not ok:
                continue
            changed = (ru | rv) & ~excl
            for x in _bits(changed):
                c = cnt[x] - (ru >> x & 1) - (rv >> x & 1) + (nr >> x & 1)
                if c > worst:
                    worst = c
            around = excl | gained | changed
            for x in ranked:
                if not around >> x & 1:
                    if cnt[x] > worst:
                        worst = cnt[x]
                    break
            out.append((worst, r, u, v))
        return out

    def candidates(self, d: int, pairs=None):
        """Pairs whose contraction keeps every red degree <= d, best first."""
        return [(u, v) for _, _, u, v in sorted(self.scored_candidates(d, pairs))]


def _finish(state: _State) -> list:
    vs = state.live_list()
    return [(vs[0], w) for w in vs[1:]]


class _Search:
    def __init__(self, g: Graph, budget: SearchBudget, opts: _Options):
        self.g = g
        self.state = _State(g)
        self.budget = budget
        self.opts = opts
        self.fail: dict = {}
        self.nodes = 0
        self.start = time.monotonic()
        self.root_pairs_cache = {}

    def _tick(self):
        self.nodes += 1
        b = self.budget
        if b.max_nodes is not None and self.nodes > b.max_nodes:
            raise _Timeout
        if b.max_time is not None and (self.nodes & 63) == 0 \
                and time.monotonic() - self.start > b.max_time:
            raise _Timeout

    def _key(self):
        st = self.state
        if self.opts.memo == "canonical":
            _, black, red = st.local()
            cert = canon.certificate(black, red, leaf_limit=self.opts.leaf_limit)
            if cert is not None:
                return ("c", cert)
        return ("p", st.partition_key())

    def _root_pairs(self):
        """Pairs through an orbit representative of the current trigraph."""
        st = self.state
        if not self.opts.symmetry:
            return None
        vs, black, red = st.local()
        if self.opts.assume_transitive:
            groups = [vs]
        else:
            orb = canon.orbits(black, red, leaf_limit=self.opts.leaf_limit)
            if orb is None or len(orb) == len(vs):
                return None
            groups = [[vs[i] for i in o] for o in orb]
        reps = {grp[0] for grp in groups}
        pairs = set()
        for r in reps:
            for w in vs:
                if w != r:
                    pairs.add((min(r, w), max(r, w)))
        return sorted(pairs)

    def decide(self, d: int):
        st = self.state
        self._branched = False
        return self._dfs(d)

    def _dfs(self, d: int):
        self._tick()
        st = self.state
        forced = []
        result = None
        try:
            while st.count > d + 1 and self.opts.twins:
                pair = st.find_twins()
                if pair is None:
                    break
                forced.append((pair, st.contract(*pair)))
            if st.count <= d + 1:
                result = _finish(st)
            else:
                key = self._key() if self.opts.memo != "off" else None
                if key is not None and self.fail.get(key, -1) >= d:
                    return None
                pairs = None
                if not self._branched:
                    self._branched = True
                    pairs = self._root_pairs()
                for u, v in st.candidates(d, pairs):
                    rec = st.contract(u, v)
                    try:
                        sub = self._dfs(d)
                    finally:
                        st.undo(rec)
                    if sub is not None:
                        result = [(u, v)] + sub
                        break
                if result is None and key is not None:
                    if self.fail.get(key, -1) < d:
                        self.fail[key] = d
            if result is None:
                return None
            return [p for p, _ in forced] + result
        finally:
            for _, rec in reversed(forced):
                st.undo(rec)


def _options(memo="canonical", twins=True, symmetry=True, assume_transitive=False):
    if memo not in ("canonical", "exact", "off"):
        raise ParameterError(f"unknown memo mode {memo!r}")
    return _Options(memo=memo, twins=twins, symmetry=symmetry,
                    assume_transitive=assume_transitive)


def tww_le(g: Graph, d: Optional[int] = None, budget: Optional[SearchBudget] = None,
           **options) -> Decision:
    """Does ``g`` admit a contraction sequence of width at most ``d``?"""
    budget = budget or SearchBudget()
    if d is None:
        d = budget.target
    if d is None or d < 0:
        raise ParameterError("decision mode needs a target d >= 0")
    search = _Search(g, budget, _options(**options))
    try:
        res = search.decide(d)
    except _Timeout:
        return Decision(TIMEOUT, None, search.nodes)
    if res is None:
        return Decision(NO, None, search.nodes)
    return Decision(YES, ContractionSequence(res), search.nodes)


def greedy_upper(g: Graph) -> tuple[int, ContractionSequence]:
    """Contract the pair with the smallest resulting max red degree, ties by pair order."""
    st = _State(g)
    steps = []
    width = 0
    big = g.n
    while st.count > 1:
        m, u, v = min((w, u, v) for w, _, u, v in st.scored_candidates(big))
        st.contract(u, v)
        steps.append((u, v))
        width = max(width, m)
    return width, ContractionSequence(steps)


def tww_exact(g: Graph, budget: Optional[SearchBudget] = None, **options) -> SolveResult:
    """Iterative deepening from the symmetric-difference bound up to the greedy width."""
    budget = budget or SearchBudget()
    start = time.monotonic()
    if g.n <= 1:
        return SolveResult(EXACT, 0, 0, ContractionSequence(), 0, 0.0)
    lower = lower_bound_symdiff(g)
    upper, witness = greedy_upper(g)
    search = _Search(g, budget, _options(**options))
    d = lower
    try:
        while d < upper:
            res = search.decide(d)
            if res is not None:
                upper, witness = d, ContractionSequence(res)
                break
            d += 1
    except _Timeout:
        status = LOWER_ONLY if d > lower else TIMEOUT
        return SolveResult(status, d, upper, witness, search.nodes, time.monotonic() - start)
    return SolveResult(EXACT, upper, upper, witness, search.nodes, time.monotonic() - start)
