import random

import pytest

import oracle
from conftest import random_graph, random_sequence
from twinwidth import sequences as S
from twinwidth.errors import InvalidSequenceError, NotIsomorphicError, ParameterError
from twinwidth.families import complete, cycle, empty, hypercube, paley, path, random_regular, star
from twinwidth.graph import Graph, Trigraph, apply_sequence, replay, sequence_width
from twinwidth.products import build_rotation_map, zigzag
from twinwidth.solver import greedy_upper

K1, K2, K3 = complete(1), complete(2), complete(3)


def best(g):
    return greedy_upper(g)[1]


def test_cartesian_examples():
    r = S.cartesian_sequence(K3, best(K3), K3, best(K3))
    assert (r.verified_width, r.claimed_bound) == (4, 4)
    p4 = path(4)
    r = S.cartesian_sequence(p4, best(p4), K2, best(K2))
    assert r.claimed_bound == 3 and r.verified_width <= 3


def test_cartesian_with_single_copy_is_seq_h():
    h, seq = path(5), best(path(5))
    r = S.cartesian_sequence(K1, [], h, seq)
    assert r.sequence == seq and r.verified_width == sequence_width(h, seq)


def test_tensor_examples():
    r = S.tensor_sequence(K3, best(K3), K3, best(K3))
    assert (r.verified_width, r.claimed_bound) == (4, 4)
    p3 = path(3)
    seq_p3 = [(1, 0), (1, 2)]          # a width-1 sequence for P3
    r = S.tensor_sequence(p3, seq_p3, K2, best(K2))
    assert r.claimed_bound == 3 and r.holds


def test_tensor_stage_one_keeps_h_layers_red_free():
    rng = random.Random(11)
    for _ in range(40):
        g, h = random_graph(rng, 2, 5), random_graph(rng, 1, 4)
        seq_g = random_sequence(rng, g.n)
        r = S.tensor_sequence(g, seq_g, h, random_sequence(rng, h.n))
        stage1 = r.sequence.steps[: len(seq_g) * h.n]
        for t in replay(r.graph, stage1):
            assert all(x % h.n != y % h.n for x, y in t.red)


def test_strong_examples():
    r = S.strong_sequence(K2, best(K2), K2, best(K2))
    assert r.verified_width == 0 and r.claimed_bound == 2
    c4 = cycle(4)
    r = S.strong_sequence(c4, best(c4), c4, best(c4))
    assert (r.verified_width, r.claimed_bound) == (4, 4)
    q3 = hypercube(3)
    seq = best(q3)
    assert sequence_width(q3, seq) == 2
    r = S.strong_sequence(q3, seq, c4, best(c4))
    # max{2*3 + 2, 0} + 2 with Δ(C4) = 2
    assert r.claimed_bound == 10 and r.holds


def test_lex_examples():
    r = S.lex_sequence(K3, best(K3), cycle(4), best(cycle(4)))
    assert r.verified_width == 0
    r = S.lex_sequence(path(4), best(path(4)), K3, best(K3))
    assert r.claimed_bound == 1 and r.verified_width == 1
    h = path(5)
    assert S.lex_sequence(K1, [], h, best(h)).sequence == best(h)


def test_lex_stage_one_red_edges_stay_in_copies():
    rng = random.Random(12)
    for _ in range(40):
        g, h = random_graph(rng, 1, 4), random_graph(rng, 2, 4)
        r = S.lex_sequence(g, random_sequence(rng, g.n), h, random_sequence(rng, h.n))
        stage1 = r.sequence.steps[: g.n * (h.n - 1)]
        for t in replay(r.graph, stage1):
            assert all(x // h.n == y // h.n for x, y in t.red)


def test_corona_examples():
    r = S.corona_sequence(K3, best(K3), K1, [])
    assert r.verified_width == 2 and r.claimed_bound == 2
    h = path(4)
    r = S.corona_sequence(K1, [], h, best(h))
    assert r.verified_width <= max(1, sequence_width(h, best(h)), 2)


def test_corona_on_paley9_with_width_four_input():
    g = paley(9)
    seq = best(g)
    assert sequence_width(g, seq) == 4
    r = S.corona_sequence(g, seq, K1, [])
    assert r.claimed_bound == 5 and r.verified_width == 5


def test_l_corona():
    r = S.l_corona_sequence(K3, best(K3), K1, [], 2)
    assert r.claimed_bound == 3 and r.holds
    r = S.l_corona_sequence(K1, [], K1, [], 2)
    assert r.graph.n == 4 and r.verified_width <= 3
    one = S.l_corona_sequence(K3, best(K3), K1, [], 1)
    assert one.sequence == S.corona_sequence(K3, best(K3), K1, []).sequence
    with pytest.raises(ParameterError):
        S.l_corona_sequence(K3, best(K3), K1, [], 0)


def test_rooted_examples():
    r = S.rooted_sequence(K3, best(K3), path(2), 0, [])
    assert r.verified_width == 2
    r = S.rooted_sequence(K2, best(K2), star(3), 0, best(empty(3)))
    assert r.claimed_bound == 3 and r.holds
    g = path(5)
    r = S.rooted_sequence(g, best(g), K1, 0, [])
    assert r.sequence == best(g) and r.verified_width == 1
    with pytest.raises(ParameterError):
        S.rooted_sequence(K3, best(K3), path(2), 5, [])


def test_rooted_remainder_relabels_densely():
    h = path(4)
    assert S.rooted_remainder(h, 1).edges == ((1, 2),)


def test_spider_examples():
    g = star(3)
    seq = S.spider_contract(g, [1, 2, 3])
    assert len(seq) == 2 and S.spider_bound(g, [1, 2, 3]) == 3
    assert sequence_width(g, seq, full=False) <= 3
    assert len(S.spider_contract(g, [2])) == 0
    with pytest.raises(ParameterError):
        S.spider_contract(path(3), [0, 1, 2])


def test_spider_degree_chain():
    rng = random.Random(13)
    for _ in range(60):
        g = random_graph(rng, 3, 8)
        s = [v for v in range(g.n) if rng.random() < 0.5]
        if not s or any(not (g.neighbors(v) - set(s)) for v in s):
            continue
        bound = S.spider_bound(g, s)
        t = Trigraph.from_graph(g)
        for a, b in S.spider_contract(g, s):
            t = t.contract(a, b)
            for v in set(s) & set(t.vertices):
                assert len(t.neighbors(v)) <= bound


def test_lift_examples():
    h = path(3)
    seq = [(1, 0), (1, 2)]
    black = Trigraph.from_graph(h)
    assert sequence_width(black, S.lift_over_trigraph(black, h, seq, [0, 1, 2])) == 1
    red = Trigraph([5, 6, 7], red=[(5, 6), (6, 7)])
    lifted = S.lift_over_trigraph(red, h, seq, [5, 6, 7])
    assert lifted.steps == ((6, 5), (6, 7))
    assert sequence_width(red, lifted) <= 1 + 2
    with pytest.raises(NotIsomorphicError):
        S.lift_over_trigraph(red, h, seq, [6, 5, 7])
    with pytest.raises(NotIsomorphicError):
        S.lift_over_trigraph(red, h, seq, [5, 6, 8])


def test_lift_after_cartesian_stage_one():
    rng = random.Random(14)
    for _ in range(30):
        g, h = random_graph(rng, 1, 4), random_graph(rng, 1, 4)
        seq_g, seq_h = random_sequence(rng, g.n), random_sequence(rng, h.n)
        r = S.cartesian_sequence(g, seq_g, h, seq_h)
        cut = len(seq_g) * h.n
        t = apply_sequence(r.graph, r.sequence.steps[:cut])
        rest = sequence_width(t, r.sequence.steps[cut:])
        assert rest <= sequence_width(h, seq_h) + h.max_degree()


def test_replacement_examples():
    r = S.replacement_sequence(complete(4), best(complete(4)), cycle(3))
    assert r.claimed_bound == 3 and r.holds
    k6 = complete(6)
    r = S.replacement_sequence(k6, best(k6), paley(5))
    assert r.claimed_bound == 5 and r.verified_width <= 5
    with pytest.raises(ParameterError):
        S.replacement_sequence(k6, best(k6), cycle(4))


def test_replacement_clouds_collapse_to_g():
    rng = random.Random(15)
    for _ in range(20):
        d = rng.choice([2, 3, 4])
        n = rng.choice([m for m in range(d + 1, 10) if m * d % 2 == 0])
        g = random_regular(n, d, seed=rng.randrange(10**6))
        h = random_regular(d, rng.choice([k for k in range(d) if d * k % 2 == 0]),
                           seed=rng.randrange(10**6))
        r = S.replacement_sequence(g, best(g), h)
        cut = n * (d - 1)
        t = Trigraph.from_graph(r.graph)
        peak = 0
        for a, b in r.sequence.steps[:cut]:
            t = t.contract(a, b)
            peak = max(peak, t.max_red_degree())
        assert peak <= d
        index = {v * d: v for v in range(n)}
        assert sorted(tuple(sorted((index[a], index[b]))) for a, b in t.underlying_edges()) \
            == list(g.edges)


def test_zigzag_example():
    k5, c4 = complete(5), cycle(4)
    r = S.zigzag_sequence(k5, best(k5), c4)
    assert r.claimed_bound == 12 and r.verified_width <= 12


def test_zigzag_round_degree_bound():
    rng = random.Random(16)
    for _ in range(30):
        d = rng.choice([2, 3, 4, 5])
        n = rng.choice([m for m in range(d + 1, 11) if m * d % 2 == 0])
        delta = rng.choice([k for k in range(1, d) if d * k % 2 == 0] or [None])
        if delta is None:
            continue
        g = random_regular(n, d, seed=rng.randrange(10**6))
        h = random_regular(d, delta, seed=rng.randrange(10**6))
        t = Trigraph.from_graph(zigzag(g, h))
        for i, rnd in enumerate(S.zigzag_cloud_rounds(g, h), start=1):
            for a, b in rnd:
                t = t.contract(a, b)
                assert max(len(t.neighbors(x)) for x in t.vertices) <= \
                    max(i * delta ** 2, i * delta * (d - i + 1))


def test_zigzag_dimension_error():
    with pytest.raises(ParameterError):
        S.zigzag_sequence(complete(5), best(complete(5)), cycle(3))


def test_tensor_star():
    p4 = path(4)
    r = S.tensor_star_sequence(p4, best(p4), 3)
    assert r.claimed_bound == 3 and r.verified_width <= 3
    assert S.leaf_fold_steps(p4, 1) == []
    with pytest.raises(ParameterError):
        S.tensor_star_sequence(p4, best(p4), 0)


def test_tensor_star_leaf_fold_is_red_free():
    rng = random.Random(17)
    for _ in range(40):
        g = random_graph(rng, 1, 5)
        n = rng.randint(1, 5)
        r = S.tensor_star_sequence(g, random_sequence(rng, g.n), n)
        fold = S.leaf_fold_steps(g, n)
        assert list(r.sequence.steps[: len(fold)]) == fold
        assert sequence_width(r.graph, fold, full=False) == 0


@pytest.mark.parametrize("gen", [S.cartesian_sequence, S.tensor_sequence, S.strong_sequence,
                                 S.lex_sequence, S.corona_sequence])
def test_malformed_inputs(gen):
    with pytest.raises(InvalidSequenceError):
        gen(path(3), [(0, 1)], K2, [(0, 1)])
    with pytest.raises(InvalidSequenceError):
        gen(path(3), [(0, 1), (0, 2)], K2, [(0, 0)])


def test_generated_sequences_are_full_and_agree_with_oracle():
    rng = random.Random(18)
    for _ in range(20):
        g, h = random_graph(rng, 1, 3), random_graph(rng, 1, 3)
        r = S.strong_sequence(g, random_sequence(rng, g.n), h, random_sequence(rng, h.n))
        assert len(r.sequence) == r.graph.n - 1
        assert r.verified_width == oracle.naive_width(r.graph.n, r.graph.edges, r.sequence)
