"""Deterministic generators for the named graph families."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .errors import ParameterError, RetryExhaustedError
from .graph import Graph


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ParameterError(msg)


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return Graph(n, itertools.combinations(range(n), 2))


def empty(n: int) -> Graph:
    _need(n >= 1, "empty graph needs n >= 1")
    return Graph(n)


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def star(n: int) -> Graph:
    """K_{1,n}: centre 0, leaves 1..n."""
    _need(n >= 1, "star needs n >= 1 leaves")
    return Graph(n + 1, ((0, i) for i in range(1, n + 1)))


def complete_bipartite(n: int, m: int) -> Graph:
    _need(n >= 1 and m >= 1, "complete bipartite graph needs n, m >= 1")
    return Graph(n + m, ((i, n + j) for i in range(n) for j in range(m)))


def grid(n: int, m: int) -> Graph:
    """P_n □ P_m with vertex (r, c) at index r*m + c."""
    _need(n >= 1 and m >= 1, "grid needs n, m >= 1")
    edges = []
    for r in range(n):
        for c in range(m):
            v = r * m + c
            if c + 1 < m:
                edges.append((v, v + 1))
            if r + 1 < n:
                edges.append((v, v + m))
    return Graph(n * m, edges)


def _words(d: int, k: int):
    # first coordinate most significant, so index = sum(x_i * k**(d-1-i))
    return list(itertools.product(range(k), repeat=d))


def hamming(d: int, k: int) -> Graph:
    """Strings in {0..k-1}^d, adjacent iff they differ in exactly one coordinate."""
    _need(d >= 1 and k >= 1, "hamming needs d, k >= 1")
    words = _words(d, k)
    index = {w: i for i, w in enumerate(words)}
    edges = []
    for w in words:
        i = index[w]
        for pos in range(d):
            for s in range(w[pos] + 1, k):
                x = w[:pos] + (s,) + w[pos + 1:]
                edges.append((i, index[x]))
    return Graph(len(words), edges)


def hypercube(d: int) -> Graph:
    return hamming(d, 2)


def weak_power(d: int, k: int) -> Graph:
    """d-fold tensor power of K_k: strings adjacent iff they differ everywhere."""
    _need(d >= 1 and k >= 1, "weak power needs d, k >= 1")
    words = _words(d, k)
    edges = [(i, j) for i, j in itertools.combinations(range(len(words)), 2)
             if all(a != b for a, b in zip(words[i], words[j]))]
    return Graph(len(words), edges)


def _prime_power(q: int):
    for p in range(2, q + 1):
        if q % p == 0:
            e, r = 0, q
            while r % p == 0:
                r //= p
                e += 1
            return (p, e) if r == 1 else None
    return None


class FiniteField:
    """GF(p) or GF(p^2).

    Elements are integers ``a + b*p`` standing for ``a + b*x`` where
    ``x^2 = nonresidue``; the smallest quadratic non-residue mod p fixes the
    irreducible polynomial ``x^2 - c``.
    """

    def __init__(self, q: int):
        pe = _prime_power(q) if q >= 2 else None
        _need(pe is not None, f"{q} is not a prime power")
        p, e = pe
        _need(e <= 2, f"GF({q}) needs extension degree {e}; only degrees 1 and 2 are built in")
        self.q, self.p, self.e = q, p, e
        if e == 2:
            squares = {(a * a) % p for a in range(1, p)}
            self.c = next(a for a in range(1, p) if a not in squares) if p > 2 else 1
        else:
            self.c = None

    def elements(self) -> range:
        return range(self.q)

    def _split(self, a: int):
        return a % self.p, a // self.p

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        a0, a1 = self._split(a)
        b0, b1 = self._split(b)
        return (a0 + b0) % self.p + ((a1 + b1) % self.p) * self.p

    def neg(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        a0, a1 = self._split(a)
        return (-a0) % self.p + ((-a1) % self.p) * self.p

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        p = self.p
        if self.e == 1:
            return (a * b) % p
        a0, a1 = self._split(a)
        b0, b1 = self._split(b)
        if p == 2:
            # x^2 = x + 1 over GF(2)
            c0 = (a0 * b0 + a1 * b1) % 2
            c1 = (a0 * b1 + a1 * b0 + a1 * b1) % 2
        else:
            c0 = (a0 * b0 + self.c * a1 * b1) % p
            c1 = (a0 * b1 + a1 * b0) % p
        return c0 + c1 * p

    def nonzero_squares(self) -> frozenset[int]:
        return frozenset(self.mul(a, a) for a in range(1, self.q))


def paley(q: int) -> Graph:
    """Paley graph on GF(q), q = 1 mod 4: a ~ b iff a - b is a nonzero square."""
    _need(q >= 5 and q % 4 == 1, f"Paley graph needs a prime power q = 1 mod 4, got {q}")
    field = FiniteField(q)
    squares = field.nonzero_squares()
    edges = [(a, b) for a in range(q) for b in range(a + 1, q) if field.sub(a, b) in squares]
    return Graph(q, edges)


def random_regular(n: int, d: int, seed=None, max_tries: int = 2000) -> Graph:
    """Simple d-regular graph from random stub pairings.

    Each round shuffles the open stubs, keeps every pair that forms a new
    simple edge and re-pairs the rest; a round that can make no progress
    restarts from scratch.  Dense degrees are built as the complement of a
    sparse regular graph.
    """
    _need(n >= 1 and d >= 0, "random_regular needs n >= 1, d >= 0")
    _need(d < n, f"degree {d} must be below vertex count {n}")
    _need((n * d) % 2 == 0, f"n*d = {n * d} is odd; no {d}-regular graph on {n} vertices")
    if 2 * d > n - 1:
        return random_regular(n, n - 1 - d, seed, max_tries).complement()
    rng = random.Random(seed)
    for _ in range(max_tries):
        edges = _pair_stubs(n, d, rng)
        if edges is not None:
            return Graph(n, edges)
    raise RetryExhaustedError(f"no simple {d}-regular graph on {n} vertices after {max_tries} tries")


def _pair_stubs(n, d, rng):
    edges = set()
    stubs = [v for v in range(n) for _ in range(d)]
    for _ in range(100 * (d + 1)):
        if not stubs:
            return edges
        rng.shuffle(stubs)
        left = []
        for a, b in zip(stubs[::2], stubs[1::2]):
            e = (a, b) if a < b else (b, a)
            if a != b and e not in edges:
                edges.add(e)
            else:
                left += [a, b]
        if left:
            open_ = sorted(set(left))
            if not any((a, b) not in edges for a, b in itertools.combinations(open_, 2)):
                return None
        stubs = left
    return None if stubs else edges


_GENERATORS = {
    "complete": (complete, ("n",)),
    "empty": (empty, ("n",)),
    "path": (path, ("n",)),
    "cycle": (cycle, ("n",)),
    "star": (star, ("n",)),
    "complete_bipartite": (complete_bipartite, ("n", "m")),
    "grid": (grid, ("n", "m")),
    "hypercube": (hypercube, ("d",)),
    "hamming": (hamming, ("d", "k")),
    "weak_power": (weak_power, ("d", "k")),
    "paley": (paley, ("q",)),
    "random_regular": (random_regular, ("n", "d")),
}

FAMILY_NAMES = tuple(_GENERATORS)


def family_parameters(name: str) -> tuple[str, ...]:
    if name not in _GENERATORS:
        raise ParameterError(f"unknown family {name!r}")
    return _GENERATORS[name][1]


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: dict = field(default_factory=dict)
    seed: int | None = None


def generate(spec: FamilySpec) -> Graph:
    names = family_parameters(spec.name)
    fn = _GENERATORS[spec.name][0]
    missing = [p for p in names if p not in spec.params]
    if missing:
        raise ParameterError(f"{spec.name} needs parameters {', '.join(missing)}")
    args = [int(spec.params[p]) for p in names]
    if spec.name == "random_regular":
        return fn(*args, seed=spec.seed)
    return fn(*args)
