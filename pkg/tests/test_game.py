import json
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import locdim as L

from oracles import sweep_loc_decide


def test_spread_is_union_of_closed_neighborhoods():
    P = L.petersen()
    assert L.spread(P, frozenset({0, 1})) == frozenset({0, 1, 5, 6, 7, 8, 9})
    for B in ({0}, {0, 1, 2}, set(range(10))):
        expect = set()
        for v in B:
            expect |= P.closed_neighborhood(v)
        assert L.spread(P, frozenset(B)) == frozenset(expect)


def test_probe_partition_petersen_single_cop():
    P = L.petersen()
    parts = L.probe_partition(P, (0,), frozenset(range(10)))
    assert parts[(0,)] == frozenset({0})
    assert parts[(1,)] == P.neighbors(0)
    assert parts[(2,)] == P.second_neighborhood(0)


def test_probe_partition_is_a_partition():
    G = L.kneser_graph(2, 6)
    parts = L.probe_partition(G, (0, 3, 7), frozenset(range(G.n)))
    seen = set()
    for vec, cls in parts.items():
        assert len(vec) == 3
        assert not seen & cls
        seen |= cls
    assert seen == set(range(G.n))


def test_loc_decide_small_graphs():
    C5 = L.cycle_graph(5)
    assert L.loc_decide(C5, 1).result == "robber-win"
    assert L.loc_decide(C5, 2).result == "cop-win"
    P = L.petersen()
    assert L.loc_decide(P, 1).result == "robber-win"
    assert L.loc_decide(P, 2).result == "robber-win"
    d = L.loc_decide(P, 3)
    assert d.result == "cop-win"
    assert d.strategy  # a winning placement map comes with the win


def test_loc_decide_matches_sweep_oracle():
    cases = [(L.cycle_graph(n), k) for n in (4, 5, 6, 7) for k in (1, 2)]
    cases += [(L.petersen(), k) for k in (1, 2, 3)]
    cases += [(L.er_polarity_graph(2).graph, k) for k in (1, 2)]
    for G, k in cases:
        assert L.loc_decide(G, k).result == sweep_loc_decide(G, k)


def test_loc_decide_symmetry_pruning_changes_nothing():
    for G in (L.cycle_graph(6), L.petersen()):
        for k in (1, 2, 3):
            a = L.loc_decide(G, k, use_symmetry=True)
            b = L.loc_decide(G, k, use_symmetry=False)
            assert a.result == b.result
            assert a.placements <= b.placements


def test_loc_decide_monotone_in_cops():
    for G in (L.cycle_graph(5), L.er_polarity_graph(2).graph):
        results = [L.loc_decide(G, k).result for k in range(1, 5)]
        first_win = results.index("cop-win")
        assert all(r == "cop-win" for r in results[first_win:])


def test_loc_decide_trivia():
    assert L.loc_decide(L.Graph(1, []), 0).result == "cop-win"
    assert L.loc_decide(L.petersen(), 0).result == "robber-win"
    with pytest.raises(ValueError):
        L.loc_decide(L.Graph(0, []), 1)


def test_loc_decide_default_scope_guard():
    G = L.kneser_graph(2, 6)  # 15 vertices, above the default n cap
    d = L.loc_decide(G, 2)
    assert d.result == "unknown"
    assert "default scope" in d.reason
    d = L.loc_decide(G, 2, budget=L.Budget(max_nodes=10**8))
    assert d.result == "robber-win"


def test_loc_decide_budget_exhaustion():
    d = L.loc_decide(L.petersen(), 3, budget=L.Budget(max_nodes=50))
    assert d.result == "unknown"
    assert "budget" in d.reason


def test_zeta_of_kneser_2_6_is_three():
    G = L.kneser_graph(2, 6)
    budget = L.Budget(max_nodes=10**9)
    assert L.loc_decide(G, 2, budget=budget).result == "robber-win"
    assert L.loc_decide(G, 3, budget=budget).result == "cop-win"
    # strictly below the metric dimension, which is 4
    assert L.metric_dimension(G).value == 4


def test_localization_number_small():
    assert L.localization_number(L.cycle_graph(5)).value == 2
    res = L.localization_number(L.petersen())
    assert res.value == 3 and res.exact
    assert res.decisions == ((1, "robber-win"), (2, "robber-win"),
                             (3, "cop-win"))
    assert L.localization_number(L.Graph(1, [])).value == 0
    assert L.localization_number(L.Graph(2, [(0, 1)])).value == 1
    assert L.localization_number(L.er_polarity_graph(2).graph).value == 2


def test_localization_number_moore_range():
    res = L.localization_number(L.hoffman_singleton())
    assert not res.exact
    assert (res.lower, res.upper) == (6, 7)
    assert res.method == "moore-range"
    assert res.value is None


def test_localization_number_budget_interval():
    res = L.localization_number(L.kneser_graph(2, 6))  # beyond default scope
    assert not res.exact
    assert res.method == "budget"
    assert res.lower <= 3 <= res.upper  # the true value from the test above


def test_zeta_never_exceeds_beta():
    for G in (L.cycle_graph(5), L.cycle_graph(6), L.petersen(),
              L.er_polarity_graph(2).graph):
        z = L.localization_number(G)
        b = L.metric_dimension(G)
        assert z.value <= b.value


# -- the staged Moore strategy ---------------------------------------------------


def test_moore_strategy_requires_large_moore_graph():
    with pytest.raises(ValueError):
        L.MooreStrategy(L.cycle_graph(5))
    with pytest.raises(ValueError):
        L.MooreStrategy(L.petersen())  # k = 3 < 5
    with pytest.raises(ValueError):
        L.MooreStrategy(L.kneser_graph(2, 6))


def test_moore_strategy_opening_shape():
    HS = L.hoffman_singleton()
    strat = L.moore_strategy(HS)
    P, tag = strat.decide(None)
    assert tag == "init"
    assert len(P) == 7
    nbrs = sorted(HS.neighbors(0))
    assert set(nbrs[1:]) <= set(P)  # all of N(0) except the spared y
    assert nbrs[0] not in P


def test_moore_strategy_captures_on_hoffman_singleton():
    HS = L.hoffman_singleton()
    report = L.verify_strategy(HS, L.moore_strategy(HS), 7)
    assert report.outcome == "captured"
    assert report.captured_max_rounds == 4
    assert report.classes_explored == 1513
    assert report.stage_tags == ("init", "init2", "middle-alpha2",
                                 "middle-alpha4")
    json.dumps(report.to_json_dict())


def test_moore_strategy_endgame_always_locates():
    # two non-adjacent candidates under one common neighbor: the endgame
    # placement must split every vertex of the spread into its own class
    HS = L.hoffman_singleton()
    strat = L.moore_strategy(HS)
    for u in (0, 17, 42):
        nbrs = sorted(HS.neighbors(u))
        for a1, a2 in combinations(nbrs, 2):
            assert not HS.adjacent(a1, a2)  # neighborhoods are independent
            C = frozenset({a1, a2})
            P, tag = strat.decide(C)
            assert tag == "endgame"
            assert len(P) == 7
            for x, y in combinations(P, 2):
                assert not HS.adjacent(x, y)
            parts = L.probe_partition(HS, P, L.spread(HS, C))
            assert all(len(cls) == 1 for cls in parts.values())


def test_moore_strategy_middle_stage_shrinks_classes():
    HS = L.hoffman_singleton()
    strat = L.moore_strategy(HS)
    u = 5
    nbrs = sorted(HS.neighbors(u))
    for size in (3, 4, 5, 6):
        A = frozenset(nbrs[:size])
        P, tag = strat.decide(A)
        assert tag == f"middle-alpha{7 - size}"
        assert len(P) == 7
        parts = L.probe_partition(HS, P, L.spread(HS, A))
        for cls in parts.values():
            if len(cls) > 1:
                assert len(cls) < size
                owners = [w for w in range(HS.n) if cls <= HS.neighbors(w)]
                assert len(owners) == 1  # next round stays in strategy form


def test_moore_strategy_rejects_singleton_query():
    strat = L.moore_strategy(L.hoffman_singleton())
    with pytest.raises(ValueError):
        strat.decide(frozenset({3}))


def test_unhandled_belief_error_carries_the_belief():
    err = L.UnhandledBeliefError({3, 1, 2})
    assert err.belief == frozenset({1, 2, 3})
    assert "1, 2, 3" in str(err)


# -- the adversarial verifier ----------------------------------------------------


def test_verify_static_resolving_set_captures_in_one_round():
    P = L.petersen()
    report = L.verify_strategy(P, L.ConstantStrategy((0, 1, 2)), 3)
    assert report.outcome == "captured"
    assert report.captured_max_rounds == 1


def test_verify_detects_cycles():
    P = L.petersen()
    report = L.verify_strategy(P, L.ConstantStrategy((0, 1)), 2)
    assert report.outcome == "evaded"
    assert "repeats" in report.reason
    assert report.trace  # the offending play is in the artifact


def test_verify_round_limit():
    HS = L.hoffman_singleton()
    strat = L.moore_strategy(HS)
    report = L.verify_strategy(HS, strat, 7, max_rounds=3)
    assert report.outcome == "evaded"
    assert report.reason == "round limit exceeded"
    assert L.verify_strategy(HS, strat, 7, max_rounds=4).outcome == "captured"


def test_verify_surfaces_unhandled_beliefs():
    class OpeningOnly:
        def decide(self, prev_class=None):
            if prev_class is None:
                return (0, 1), "init"  # two cops never resolve the Petersen graph
            raise L.UnhandledBeliefError(prev_class)

    P = L.petersen()
    report = L.verify_strategy(P, OpeningOnly(), 2)
    assert report.outcome == "evaded"
    assert report.reason.startswith("unhandled belief")


def test_verify_rejects_invalid_placements():
    class TooMany:
        def decide(self, prev_class=None):
            return (0, 1, 2, 3), "bad"

    with pytest.raises(ValueError):
        L.verify_strategy(L.petersen(), TooMany(), 3)


def test_verifier_agrees_with_solver_strategy():
    # a winning placement exists for 2 cops on C5; replay the solver's own
    # choice for the opening through the verifier
    C5 = L.cycle_graph(5)
    d = L.loc_decide(C5, 2)
    opening = d.strategy[frozenset(range(5))]
    report = L.verify_strategy(C5, L.ConstantStrategy(opening), 2)
    assert report.outcome == "captured"
    assert report.captured_max_rounds == 1


@st.composite
def connected_graphs(draw):
    n = draw(st.integers(min_value=2, max_value=6))
    extra = draw(st.sets(st.sampled_from(list(combinations(range(n), 2)))))
    path = {(i, i + 1) for i in range(n - 1)}
    return L.Graph(n, sorted(path | extra))


@settings(max_examples=25, deadline=None)
@given(connected_graphs())
def test_full_placement_always_wins(G):
    d = L.loc_decide(G, G.n, budget=L.Budget(max_nodes=10**7))
    assert d.result == "cop-win"


@settings(max_examples=25, deadline=None)
@given(connected_graphs())
def test_spread_is_monotone(G):
    full = frozenset(range(G.n))
    assert L.spread(G, full) == full
    half = frozenset(range(G.n // 2 + 1))
    assert L.spread(G, half) <= full
    assert half <= L.spread(G, half)
