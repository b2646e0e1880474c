"""Detection vectors, detectability, Berge girth, and the gadget machinery.

Hypergraph vertices are the integers 1..n (matching the subset labels of
Kneser vertices, which is what the conversion operations trade in). Edges
keep their construction order so detection vectors stay aligned with them;
duplicate edges are representable but flagged.
"""

from __future__ import annotations

import enum
import json
import math
import os
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .budget import Budget, BudgetExceededError
from .graphs import Graph, graph_girth, kneser_vertex_index

DEFAULT_DETECT_BUDGET = 10**8  # vector-entry comparisons


class Detection(enum.IntEnum):
    """Per-hyperedge outcome of probing a vertex set."""

    ZERO = 0   # the probe set misses the hyperedge
    ONE = 1    # partial intersection
    FULL = 2   # the probe set contains all k vertices of the hyperedge


class Hypergraph:
    """Vertex set {1..n} plus an ordered list of nonempty hyperedges."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        clean = []
        for e in edges:
            seq = tuple(e)
            t = tuple(sorted(set(seq)))
            if not t:
                raise ValueError("hyperedges must be nonempty")
            if len(t) != len(seq):
                raise ValueError(f"hyperedge {seq} repeats a vertex")
            if t[0] < 1 or t[-1] > n:
                raise ValueError(f"hyperedge {t} outside 1..{n}")
            clean.append(t)
        self.n = n
        self.edges = tuple(clean)

    @classmethod
    def from_graph(cls, G: Graph) -> "Hypergraph":
        """The 2-uniform hypergraph of a graph's edge set, shifted to 1-based."""
        return cls(G.n, [(u + 1, v + 1) for u, v in G.edges])

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_duplicate_edges(self) -> bool:
        return len(set(self.edges)) != len(self.edges)

    def max_edge_cardinality(self) -> int:
        return max((len(e) for e in self.edges), default=0)

    def uniformity(self) -> int | None:
        """The common edge cardinality for uniform hypergraphs, else None."""
        sizes = {len(e) for e in self.edges}
        if len(sizes) == 1:
            return sizes.pop()
        return None

    def degree(self, u: int) -> int:
        """Hyperedge-degree: the number of edges containing u."""
        return sum(1 for e in self.edges if u in e)

    def degrees(self) -> tuple[int, ...]:
        counts = [0] * (self.n + 1)
        for e in self.edges:
            for u in e:
                counts[u] += 1
        return tuple(counts[1:])

    def regularity(self) -> int | None:
        degs = set(self.degrees())
        if len(degs) == 1:
            return degs.pop()
        return None

    def canonical_edges(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(self.edges))

    def to_json_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.canonical_edges()]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Hypergraph":
        return cls(data["n"], [tuple(e) for e in data["edges"]])

    def __repr__(self) -> str:
        return f"<hypergraph: {self.n} vertices, {len(self.edges)} edges>"


# -- detection ----------------------------------------------------------------


def detection_vector(H: Hypergraph, B) -> tuple[Detection, ...]:
    """Per-edge ZERO/ONE/FULL record of how the probe set B meets each edge.

    FULL means the intersection has the full uniform cardinality (the largest
    edge size), so it can only appear when |B| reaches that size.
    """
    bset = frozenset(B)
    if not all(1 <= v <= H.n for v in bset):
        raise ValueError(f"probe set {sorted(bset)} outside 1..{H.n}")
    k_max = H.max_edge_cardinality()
    out = []
    for e in H.edges:
        hits = len(bset.intersection(e))
        if hits == 0:
            out.append(Detection.ZERO)
        elif hits == k_max:
            out.append(Detection.FULL)
        else:
            out.append(Detection.ONE)
    return tuple(out)


@dataclass(frozen=True)
class DetectResult:
    """Outcome of a brute-force detectability check."""

    detectable: bool
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None
    sets_checked: int

    def __bool__(self) -> bool:
        return self.detectable


def is_detectable(H: Hypergraph, kprime: int, budget: Budget | None = None) -> DetectResult:
    """True iff all k'-subsets of vertices have pairwise distinct detection
    vectors; on failure carries the first colliding pair in lexicographic
    order. Raises BudgetExceededError when the enumeration would exceed the
    budget, signalling the caller to fall back to certify_detectable."""
    if kprime < 0:
        raise ValueError("k' must be non-negative")
    if budget is None:
        budget = Budget(max_nodes=DEFAULT_DETECT_BUDGET)
    cost = max(1, len(H.edges))
    seen: dict[tuple, tuple[int, ...]] = {}
    checked = 0
    for B in combinations(range(1, H.n + 1), kprime):
        budget.spend(cost)
        checked += 1
        vec = detection_vector(H, B)
        prior = seen.get(vec)
        if prior is not None:
            return DetectResult(False, (prior, B), checked)
        seen[vec] = B
    return DetectResult(True, None, checked)


# -- Berge girth ---------------------------------------------------------------


def berge_girth(H: Hypergraph) -> int | float:
    """Length of the shortest Berge cycle: distinct vertices v1..vl and
    pairwise-distinct hyperedges e1..el with {vi, vi+1} in ei, cyclically,
    l >= 2. Computed as half the girth of the vertex/edge incidence graph;
    math.inf when acyclic."""
    n, g = H.n, len(H.edges)
    incidence = []
    for i, e in enumerate(H.edges):
        for v in e:
            incidence.append((v - 1, n + i))
    inc_graph = Graph(n + g, incidence)
    girth = graph_girth(inc_graph)
    return girth if girth == math.inf else girth // 2


def certify_detectable(H: Hypergraph, kprime: int) -> bool:
    """Sound one-sided certificate: a k-uniform hypergraph with minimum
    hyperedge-degree at least k'/2 + 1 and Berge girth at least 5 is
    k'-detectable. False is inconclusive."""
    k = H.uniformity()
    if k is None:
        raise ValueError("certificate requires a uniform hypergraph")
    if kprime > k:
        raise ValueError(f"k'={kprime} exceeds the uniform cardinality {k}")
    min_degree = min(H.degrees(), default=0) if H.n else 0
    if 2 * min_degree < kprime + 2:  # integer form of degree >= k'/2 + 1
        return False
    return berge_girth(H) >= 5


# -- degree-sum necessary conditions --------------------------------------------


@dataclass(frozen=True)
class DegreeViolation:
    u: int
    v: int
    adjacent: bool
    degree_sum: int
    required: int


@dataclass(frozen=True)
class DegreeCheckReport:
    k: int
    violations: tuple[DegreeViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_degree_properties(H: Hypergraph, k: int) -> DegreeCheckReport:
    """Necessary conditions for k-detectability: every non-adjacent vertex
    pair needs hyperedge-degree sum >= k, every adjacent pair >= k + 2
    (adjacent means sharing a hyperedge)."""
    if any(len(e) == 1 for e in H.edges):
        raise ValueError("singleton hyperedges are not supported here")
    if H.n < 3 * k:
        raise ValueError(f"conditions require n >= 3k, got n={H.n}, k={k}")
    deg = (0,) + H.degrees()
    adjacent = set()
    for e in H.edges:
        for a, b in combinations(e, 2):
            adjacent.add((a, b))
    violations = []
    for u in range(1, H.n + 1):
        for v in range(u + 1, H.n + 1):
            adj = (u, v) in adjacent
            required = k + 2 if adj else k
            s = deg[u] + deg[v]
            if s < required:
                violations.append(DegreeViolation(u, v, adj, s, required))
    return DegreeCheckReport(k=k, violations=tuple(violations))


# -- conversions between detectable hypergraphs and Kneser resolving sets -------


def hypergraph_to_resolving(H: Hypergraph, k: int, n: int) -> tuple[int, ...]:
    """Read each hyperedge as a K(k,n) vertex; a k-detectable k-uniform
    hypergraph on [n] becomes a resolving set of the same cardinality."""
    if n < 3 * k:
        raise ValueError(f"conversion requires n >= 3k, got n={n}, k={k}")
    if H.n != n:
        raise ValueError(f"hypergraph is on {H.n} vertices, expected {n}")
    if H.uniformity() != k:
        raise ValueError(f"hypergraph must be {k}-uniform")
    return tuple(sorted(kneser_vertex_index(e, k, n) for e in set(H.edges)))


def resolving_to_hypergraph(S, k: int, n: int) -> Hypergraph:
    """Read each K(k,n) landmark's label as a hyperedge on [n]."""
    if n < 3 * k:
        raise ValueError(f"conversion requires n >= 3k, got n={n}, k={k}")
    subsets = list(combinations(range(1, n + 1), k))
    edges = []
    for s in S:
        if not 0 <= s < len(subsets):
            raise ValueError(f"{s} is not a K({k},{n}) vertex index")
        edges.append(subsets[s])
    return Hypergraph(n, sorted(edges))


# -- girth-5 gadget search -------------------------------------------------------


def default_regularity(k: int) -> int:
    """ceil(k/2 + 1), the hyperedge-degree the cover construction needs."""
    return (k + 1) // 2 + 1


@dataclass(frozen=True)
class GadgetSearchResult:
    gadget: Hypergraph | None
    complete: bool  # True when the whole space up to max_vertices was refuted

    def __bool__(self) -> bool:
        return self.gadget is not None


def _default_cache_dir() -> str:
    env = os.environ.get("LOCDIM_CACHE_DIR")
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "locdim")


def _gadget_cache_path(cache_dir: str, k: int, regularity: int) -> str:
    return os.path.join(cache_dir, f"gadget-k{k}-r{regularity}.json")


def _load_cached_gadget(path: str, k: int, regularity: int,
                        max_vertices: int) -> Hypergraph | None:
    try:
        with open(path, encoding="ascii") as fh:
            data = json.load(fh)
        H = Hypergraph(data["m"], [tuple(e) for e in data["edges"]])
    except (OSError, ValueError, KeyError, TypeError):
        return None
    if H.n > max_vertices or data.get("k") != k or data.get("regularity") != regularity:
        return None
    # Never trust a stale file: re-establish the full certificate.
    if H.uniformity() != k or H.regularity() != regularity:
        return None
    if not certify_detectable(H, k):
        return None
    return H


def _store_gadget(path: str, H: Hypergraph, k: int, regularity: int) -> None:
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    doc = {"k": k, "m": H.n, "regularity": regularity,
           "edges": [list(e) for e in H.canonical_edges()]}
    with open(path, "w", encoding="ascii") as fh:
        json.dump(doc, fh, sort_keys=True, indent=2)
        fh.write("\n")


def search_girth5_gadget(
    k: int,
    max_vertices: int = 12,
    regularity: int | None = None,
    budget: Budget | None = None,
    cache_dir: str | None = None,
) -> GadgetSearchResult:
    """Backtracking search for a k-uniform, regularity-regular hypergraph of
    Berge girth at least 5 on at most max_vertices vertices.

    The default regularity is ceil(k/2 + 1). Found gadgets are cached to disk
    keyed by (k, regularity) and re-verified on load. Absence is a value:
    complete=True means the whole space was exhausted, not just the budget.
    """
    if k < 2:
        raise ValueError("gadgets need k >= 2")
    r = default_regularity(k) if regularity is None else regularity
    if r < 1:
        raise ValueError("regularity must be positive")
    if budget is None:
        budget = Budget(max_nodes=10**7)
    cache_dir = cache_dir if cache_dir is not None else _default_cache_dir()
    cache_path = _gadget_cache_path(cache_dir, k, r)
    cached = _load_cached_gadget(cache_path, k, r, max_vertices)
    if cached is not None:
        return GadgetSearchResult(cached, complete=True)

    # Any vertex lies in r edges that pairwise share only that vertex.
    min_m = max(k, 1 + r * (k - 1))
    for m in range(min_m, max_vertices + 1):
        if (m * r) % k != 0:
            continue
        try:
            found = _gadget_backtrack(k, r, m, budget)
        except BudgetExceededError:
            return GadgetSearchResult(None, complete=False)
        if found is not None:
            H = Hypergraph(m, found)
            # Independent verification of what the incremental pruning promised.
            assert H.uniformity() == k and H.regularity() == r
            assert berge_girth(H) >= 5
            _store_gadget(cache_path, H, k, r)
            return GadgetSearchResult(H, complete=True)
    return GadgetSearchResult(None, complete=True)


def _gadget_backtrack(k: int, r: int, m: int, budget: Budget):
    """Depth-first construction over [m]; every edge is added at the least
    vertex still short of degree r. Girth is maintained incrementally: a new
    edge may not repeat a covered pair, and its internal pairs must be at
    Berge distance >= 4 in the section graph built so far."""
    target_edges = m * r // k
    deg = [0] * (m + 1)
    section: dict[int, set[int]] = {v: set() for v in range(1, m + 1)}
    covered: set[tuple[int, int]] = set()
    edges: list[tuple[int, ...]] = []

    def within_three(a: int, b: int) -> bool:
        # BFS in the section graph, depth-capped at 3.
        if a == b:
            return True
        seen = {a}
        frontier = [a]
        for _ in range(3):
            nxt = []
            for x in frontier:
                for y in section[x]:
                    if y == b:
                        return True
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return False

    def candidate_ok(edge: tuple[int, ...]) -> bool:
        pairs = list(combinations(edge, 2))
        for a, b in pairs:
            if (a, b) in covered:
                return False
        for a, b in pairs:
            if within_three(a, b):
                return False
        return True

    def apply(edge: tuple[int, ...]):
        edges.append(edge)
        for a, b in combinations(edge, 2):
            covered.add((a, b))
            section[a].add(b)
            section[b].add(a)
        for v in edge:
            deg[v] += 1

    def unapply(edge: tuple[int, ...]):
        edges.pop()
        for a, b in combinations(edge, 2):
            covered.discard((a, b))
            section[a].discard(b)
            section[b].discard(a)
        for v in edge:
            deg[v] -= 1

    def extend() -> bool:
        if len(edges) == target_edges:
            return all(deg[v] == r for v in range(1, m + 1))
        u = next((v for v in range(1, m + 1) if deg[v] < r), None)
        if u is None:
            return False
        eligible = [v for v in range(u + 1, m + 1) if deg[v] < r]
        unused = [v for v in eligible if deg[v] == 0]
        for combo in combinations(eligible, k - 1):
            budget.spend()
            picked_unused = [v for v in combo if deg[v] == 0]
            # Untouched vertices are interchangeable: only the least ones count.
            if picked_unused != unused[: len(picked_unused)]:
                continue
            edge = (u,) + combo
            if not candidate_ok(edge):
                continue
            apply(edge)
            if extend():
                return True
            unapply(edge)
        return False

    return list(edges) if extend() else None


# -- cover construction -----------------------------------------------------------


def kneser_resolving_cover(k: int, n: int, gadget: Hypergraph) -> tuple[int, ...]:
    """Tile [n] with copies of a certified gadget (parts of size m, the last
    part overlapping backward over already-covered elements) and convert the
    union to a resolving set of K(k,n)."""
    if n < 3 * k:
        raise ValueError(f"cover construction requires n >= 3k, got n={n}, k={k}")
    if gadget.uniformity() != k:
        raise ValueError(f"gadget must be {k}-uniform")
    m = gadget.n
    if m > n:
        raise ValueError(f"gadget on {m} vertices cannot tile [{n}]")
    if not certify_detectable(gadget, k):
        raise ValueError("gadget fails the girth-5/min-degree certificate")
    parts = []
    r = math.ceil(n / m)
    for i in range(r - 1):
        parts.append(list(range(i * m + 1, (i + 1) * m + 1)))
    parts.append(list(range(n - m + 1, n + 1)))
    union: set[tuple[int, ...]] = set()
    for part in parts:
        for e in gadget.edges:
            union.add(tuple(sorted(part[x - 1] for x in e)))
    cover = Hypergraph(n, sorted(union))
    return hypergraph_to_resolving(cover, k, n)
