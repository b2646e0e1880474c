"""Belief-state semantics of the localization game.

A belief is the set of vertices consistent with every probe so far. Each
round the cops place, the observed distance vector refines the belief to one
observation class, and (if that class is not a singleton) the robber moves,
spreading the class to the union of its closed neighborhoods. Capture means
a refined class is a singleton.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .budget import Budget, BudgetExceededError
from .graphs import Graph, graph_hash, is_moore_diam2
from .resolving import greedy_resolving

DEFAULT_LOC_BUDGET = 5 * 10**7  # distance lookups during partition evaluation

# Default scope of the exact decision; larger instances return "unknown"
# unless the caller supplies an explicit budget.
DEFAULT_MAX_N = 12
DEFAULT_MAX_K = 4


def spread(G: Graph, B) -> frozenset:
    """Union of closed neighborhoods: where the robber may be after moving."""
    out = set()
    for v in B:
        out.add(v)
        out.update(G.neighbors(v))
    return frozenset(out)


def probe_partition(G: Graph, P, B) -> dict[tuple[int, ...], frozenset]:
    """Partition of the belief by the distance vector each candidate would
    produce against the placement."""
    placement = tuple(P)
    parts: dict[tuple[int, ...], set] = {}
    rows = [G.distance_row(p) for p in placement]
    for v in B:
        vec = tuple(row[v] for row in rows)
        parts.setdefault(vec, set()).add(v)
    return {vec: frozenset(vs) for vec, vs in parts.items()}


@dataclass(frozen=True)
class LocDecision:
    result: str  # "cop-win" | "robber-win" | "unknown"
    k: int
    strategy: dict | None = None
    beliefs: int = 0
    placements: int = 0
    reason: str | None = None


def loc_decide(G: Graph, k: int, budget: Budget | None = None,
               use_symmetry: bool = True) -> LocDecision:
    """Least-fixed-point decision of the k-cop localization game from the
    all-vertices belief. A belief wins iff some placement makes every
    observation class a singleton or a class whose spread wins.

    Winning beliefs are downward closed, so placements of size exactly
    min(k, n) lose no generality. With symmetry enabled, beliefs are
    canonicalized under the graph's attached automorphism list and placements
    are deduplicated under each belief's stabilizer; pruning only removes
    isomorphic branches, so the outcome is schedule-independent.
    """
    n = G.n
    if n == 0:
        raise ValueError("empty graph")
    if n == 1:
        return LocDecision("cop-win", k, strategy={frozenset({0}): ()})
    if k < 1:
        return LocDecision("robber-win", k)
    if budget is None:
        if n > DEFAULT_MAX_N or k > DEFAULT_MAX_K:
            return LocDecision(
                "unknown", k,
                reason=f"instance beyond default scope (n <= {DEFAULT_MAX_N}, "
                       f"k <= {DEFAULT_MAX_K}); pass a budget to extend")
        budget = Budget(max_nodes=DEFAULT_LOC_BUDGET)
    size = min(k, n)

    autos = G.automorphisms if use_symmetry else None
    canon_cache: dict[frozenset, frozenset] = {}

    def canon(b: frozenset) -> frozenset:
        if not autos:
            return b
        hit = canon_cache.get(b)
        if hit is None:
            hit = frozenset(min(tuple(sorted(sig[v] for v in b)) for sig in autos))
            canon_cache[b] = hit
        return hit

    all_placements = list(combinations(range(n), size))

    def placements_for(B: frozenset):
        if not autos:
            return all_placements
        stab = [sig for sig in autos if all(sig[v] in B for v in B)]
        if len(stab) <= 1:
            return all_placements
        seen, out = set(), []
        for P in all_placements:
            key = min(tuple(sorted(sig[p] for p in P)) for sig in stab)
            if key not in seen:
                seen.add(key)
                out.append(key)
        return out

    start = canon(frozenset(range(n)))
    # AND-OR reachability: per belief, each placement option lists the
    # canonical successor beliefs that must all be winning.
    options: dict[frozenset, list[tuple[tuple[int, ...], frozenset]]] = {}
    placements_evaluated = 0
    try:
        frontier = [start]
        while frontier:
            B = frontier.pop()
            if B in options:
                continue
            opts = []
            for P in placements_for(B):
                budget.spend(len(B) * size)
                placements_evaluated += 1
                parts = probe_partition(G, P, B)
                nexts = set()
                for cls in parts.values():
                    if len(cls) > 1:
                        nexts.add(canon(spread(G, cls)))
                opts.append((P, frozenset(nexts)))
                for nc in nexts:
                    if nc not in options:
                        frontier.append(nc)
            options[B] = opts
    except BudgetExceededError:
        return LocDecision("unknown", k, beliefs=len(options),
                           placements=placements_evaluated,
                           reason="budget exhausted during belief expansion")

    # Propagate wins: an option fires once all its successors are winning.
    pending: dict[tuple[frozenset, int], int] = {}
    dependents: dict[frozenset, list[tuple[frozenset, int]]] = {}
    winning: dict[frozenset, tuple[int, ...]] = {}
    queue = []
    for B, opts in options.items():
        for i, (P, nexts) in enumerate(opts):
            if not nexts:
                if B not in winning:
                    winning[B] = P
                    queue.append(B)
                break
            pending[(B, i)] = len(nexts)
            for nc in nexts:
                dependents.setdefault(nc, []).append((B, i))
    while queue:
        ready = queue.pop()
        for B, i in dependents.get(ready, ()):
            if B in winning:
                continue
            pending[(B, i)] -= 1
            if pending[(B, i)] == 0:
                winning[B] = options[B][i][0]
                queue.append(B)

    if start in winning:
        return LocDecision("cop-win", k, strategy=dict(winning),
                           beliefs=len(options), placements=placements_evaluated)
    return LocDecision("robber-win", k, beliefs=len(options),
                       placements=placements_evaluated)


@dataclass(frozen=True)
class LocNumberResult:
    lower: int
    upper: int
    exact: bool
    method: str
    decisions: tuple[tuple[int, str], ...] = ()

    @property
    def value(self) -> int | None:
        return self.lower if self.exact else None


def localization_number(G: Graph, budget: Budget | None = None) -> LocNumberResult:
    """Least k with a cop win; scans loc_decide upward. Diameter-2 Moore
    graphs with k >= 5 are answered from the structural range [k-1, k]
    without attempting the (infeasible) decision."""
    mk = is_moore_diam2(G)
    if mk is not None and mk >= 5:
        return LocNumberResult(mk - 1, mk, False, "moore-range")
    decisions = []
    start = 0 if G.n == 1 else 1
    for k in range(start, G.n + 1):
        d = loc_decide(G, k, budget=budget)
        decisions.append((k, d.result))
        if d.result == "cop-win":
            return LocNumberResult(k, k, True, "decided", tuple(decisions))
        if d.result == "unknown":
            upper = len(greedy_resolving(G))  # one-round win with beta cops
            return LocNumberResult(k, upper, False, "budget", tuple(decisions))
    raise AssertionError("k = n cops always win; unreachable")


# -- strategies -----------------------------------------------------------------


class UnhandledBeliefError(Exception):
    """A strategy met a belief outside its enumerated case forms."""

    def __init__(self, belief) -> None:
        self.belief = frozenset(belief)
        super().__init__(f"no strategy case covers belief {sorted(self.belief)}")


class ConstantStrategy:
    """Places the same cops every round; baseline for the verifier."""

    def __init__(self, placement, tag: str = "static") -> None:
        self.placement = tuple(sorted(placement))
        self.tag = tag

    def decide(self, prev_class=None):
        return self.placement, self.tag


class MooreStrategy:
    """Staged k-cop strategy for k-regular diameter-2 Moore graphs, k >= 5.

    The placement depends only on the previous round's refined class, whose
    form the girth-5 structure pins down: the opening probe, the echo of the
    opening around a spared neighbor ("init2"), the inductive middle game on
    a class A inside one neighborhood, and the two-candidate endgame. All
    free choices are resolved by least vertex index so traces are
    reproducible. Any class outside these forms raises UnhandledBeliefError,
    which the verifier surfaces verbatim.
    """

    def __init__(self, G: Graph) -> None:
        k = is_moore_diam2(G)
        if k is None:
            raise ValueError("strategy applies to diameter-2 Moore graphs only")
        if k < 5:
            raise ValueError(f"strategy needs regularity k >= 5, got k={k}")
        self.G = G
        self.k = k

    def decide(self, prev_class=None) -> tuple[tuple[int, ...], str]:
        if prev_class is None:
            return self._opening()
        C = frozenset(prev_class)
        if len(C) <= 1:
            raise ValueError("strategy queried after the robber was located")
        G, k = self.G, self.k
        u = next((x for x in range(G.n) if C <= G.neighbors(x)), None)
        if u is not None:
            if len(C) == 2:
                a1, a2 = sorted(C)
                return self._endgame(u, a1, a2)
            if 3 <= len(C) <= k - 1:
                return self._middle(u, C)
            raise UnhandledBeliefError(C)
        for y in sorted(C):
            if C - {y} <= G.neighbors(y) and G.neighbors(y) - C:
                return self._init2(y, C)
        raise UnhandledBeliefError(C)

    def _opening(self):
        G, k = self.G, self.k
        x = 0
        nbrs = sorted(G.neighbors(x))
        y, z = nbrs[0], nbrs[1]
        w = min(G.neighbors(z) - {x})
        P = tuple(sorted((G.neighbors(x) - {y}) | {w}))
        assert len(P) == k  # w is at distance 2 from x, so it is a fresh cop
        return P, "init"

    def _init2(self, y: int, C: frozenset):
        # The robber is on y or on C - {y} inside N(y); one neighbor of y is
        # known clean, so replay the opening centered at y sparing it.
        G, k = self.G, self.k
        u0 = min(G.neighbors(y) - C)
        z2 = min(G.neighbors(y) - {u0})
        w2 = min(G.neighbors(z2) - {y})
        P = tuple(sorted((G.neighbors(y) - {u0}) | {w2}))
        assert len(P) == k
        return P, "init2"

    def _middle(self, u: int, A: frozenset):
        # Stage alpha = k - |A|: cops on A minus its least vertex v, plus
        # alpha+1 marks in N(v); every class this produces is strictly
        # smaller, driving the induction toward the endgame.
        G, k = self.G, self.k
        alpha = k - len(A)
        v = min(A)
        marks = sorted(G.neighbors(v) - {u})[: alpha + 1]
        P = tuple(sorted((A - {v}) | set(marks)))
        assert len(P) == k  # N(u) and N(v) are disjoint for adjacent u, v
        return P, f"middle-alpha{alpha}"

    def _endgame(self, u: int, a1: int, a2: int):
        G, k = self.G, self.k
        c1, c2 = sorted(G.neighbors(a1) - {u})[:2]
        far = sorted(G.neighbors(a2) - {u})
        marked = [x for x in far if G.adjacent(x, c1) or G.adjacent(x, c2)]
        assert len(marked) == 2  # each of c1, c2 marks exactly one vertex
        cops2 = [x for x in far if x not in marked]
        P = tuple(sorted([u, c1, c2] + cops2))
        assert len(P) == k
        for a, b in combinations(P, 2):  # the no-adjacent-cops clause
            assert not G.adjacent(a, b)
        return P, "endgame"


def moore_strategy(G: Graph) -> MooreStrategy:
    return MooreStrategy(G)


# -- exhaustive adversarial verification ------------------------------------------


@dataclass
class VerificationReport:
    outcome: str  # "captured" | "evaded"
    k: int
    graph_hash: str
    max_rounds_allowed: int
    captured_max_rounds: int | None = None
    classes_explored: int = 0
    reason: str | None = None
    trace: list = field(default_factory=list)
    stage_tags: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        return {
            "outcome": self.outcome,
            "k": self.k,
            "graph_hash": self.graph_hash,
            "max_rounds_allowed": self.max_rounds_allowed,
            "captured_max_rounds": self.captured_max_rounds,
            "classes_explored": self.classes_explored,
            "reason": self.reason,
            "stage_tags": sorted(self.stage_tags),
            "trace": self.trace,
        }


class _Evasion(Exception):
    def __init__(self, reason: str) -> None:
        self.reason = reason
        super().__init__(reason)


def verify_strategy(G: Graph, strategy, k: int,
                    max_rounds: int | None = None) -> VerificationReport:
    """Explores every observation class at every reachable refined belief.

    Captured means every adversarial play ends with a singleton class within
    max_rounds probes; the report carries the worst-case round count.
    Evaded carries the offending trace: a repeated belief along a play (the
    robber loops forever), an unhandled belief, or the round limit.
    """
    if max_rounds is None:
        max_rounds = 2 * G.n + 4
    memo: dict[frozenset, int] = {}
    onstack: set[frozenset] = set()
    path: list[dict] = []
    tags: set[str] = set()
    report = VerificationReport("evaded", k, graph_hash(G), max_rounds)

    def place(prev):
        placement, tag = strategy.decide(prev)
        P = tuple(sorted(placement))
        if len(P) > k or len(set(P)) != len(P) \
                or any(not 0 <= p < G.n for p in P):
            raise ValueError(f"strategy returned invalid placement {placement}")
        tags.add(tag)
        return P, tag

    def step_record(round_no, belief, P, tag, obs, cls) -> dict:
        return {
            "round": round_no,
            "belief": sorted(belief),
            "placement": list(P),
            "stage": tag,
            "observation": list(obs),
            "refined": sorted(cls),
        }

    def explore(C: frozenset, depth: int) -> int:
        # height: max further probes needed once the robber is pinned to C
        if len(C) == 1:
            return 0
        if C in onstack:
            raise _Evasion("cycle: the same refined belief repeats along a play")
        cached = memo.get(C)
        if cached is not None:
            if depth + cached > max_rounds:
                raise _Evasion("round limit exceeded")
            return cached
        if depth >= max_rounds:
            raise _Evasion("round limit exceeded")
        try:
            P, tag = place(C)
        except UnhandledBeliefError as exc:
            raise _Evasion(f"unhandled belief {sorted(exc.belief)}") from exc
        belief = spread(G, C)
        parts = probe_partition(G, P, belief)
        onstack.add(C)
        worst = 0
        for obs in sorted(parts):
            cls = parts[obs]
            report.classes_explored += 1
            path.append(step_record(depth + 1, belief, P, tag, obs, cls))
            worst = max(worst, explore(cls, depth + 1))
            path.pop()
        onstack.discard(C)
        memo[C] = worst + 1
        return worst + 1

    try:
        P0, tag0 = place(None)
        belief0 = frozenset(range(G.n))
        parts0 = probe_partition(G, P0, belief0)
        worst = 0
        for obs in sorted(parts0):
            cls = parts0[obs]
            report.classes_explored += 1
            path.append(step_record(1, belief0, P0, tag0, obs, cls))
            worst = max(worst, explore(cls, 1))
            path.pop()
    except _Evasion as ev:
        report.outcome = "evaded"
        report.reason = ev.reason
        report.trace = list(path)
        report.stage_tags = tuple(sorted(tags))
        return report
    report.outcome = "captured"
    report.captured_max_rounds = 1 + worst
    report.stage_tags = tuple(sorted(tags))
    return report
