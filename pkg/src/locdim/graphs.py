"""Immutable graphs with precomputed all-pairs distances, plus named families.

Vertices are always the dense integers 0..n-1. Families with natural vertex
names (k-subsets for Kneser graphs, pentagon/pentagram coordinates for the
Hoffman-Singleton graph) carry them in ``labels``; adjacency logic never
looks at labels, so one engine serves every family.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import math
from collections import deque
from dataclasses import dataclass

UNREACHABLE = -1  # dist() sentinel for disconnected pairs


@dataclass(frozen=True)
class KneserLabel:
    """A sorted k-subset of {1..n}, the vertex name in K(k,n)."""

    elements: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        elems = self.elements
        if len(set(elems)) != len(elems) or tuple(sorted(elems)) != elems:
            raise ValueError(f"label must be strictly increasing, got {elems}")
        if not elems or elems[0] < 1 or elems[-1] > self.n:
            raise ValueError(f"label elements must lie in 1..{self.n}, got {elems}")

    def __str__(self) -> str:
        # Single digits concatenate unambiguously; beyond 9 use a separator.
        if self.n <= 9:
            return "".join(str(e) for e in self.elements)
        return "-".join(str(e) for e in self.elements)


class Graph:
    """Simple undirected graph; distances are computed eagerly by BFS."""

    __slots__ = ("n", "edges", "labels", "name", "automorphisms", "_adj", "_dist")

    def __init__(
        self,
        n: int,
        edges,
        labels=None,
        name: str | None = None,
        automorphisms=None,
    ) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        canon = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            canon.add((min(u, v), max(u, v)))
        self.n = n
        self.edges = tuple(sorted(canon))
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ValueError("labels must cover every vertex")
        self.labels = labels
        self.name = name
        self.automorphisms = tuple(tuple(p) for p in automorphisms) if automorphisms else None

        adj = [set() for _ in range(n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(s) for s in adj)
        self._dist = tuple(self._bfs(s) for s in range(n))

    def _bfs(self, source: int) -> tuple[int, ...]:
        dist = [UNREACHABLE] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for v in self._adj[u]:
                if dist[v] == UNREACHABLE:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        return tuple(dist)

    # -- distance and neighborhood views -------------------------------------

    def dist(self, u: int, v: int) -> int:
        return self._dist[u][v]

    def distance_row(self, u: int) -> tuple[int, ...]:
        return self._dist[u]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def neighbors(self, u: int) -> frozenset:
        return self._adj[u]

    def closed_neighborhood(self, u: int) -> frozenset:
        return self._adj[u] | {u}

    def second_neighborhood(self, u: int) -> frozenset:
        return frozenset(v for v in range(self.n) if self._dist[u][v] == 2)

    def degree(self, u: int) -> int:
        return len(self._adj[u])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self._adj)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def is_connected(self) -> bool:
        return self.n <= 1 or UNREACHABLE not in self._dist[0]

    def diameter(self) -> int | float:
        """Largest finite distance; math.inf when disconnected."""
        if self.n <= 1:
            return 0
        best = 0
        for row in self._dist:
            for d in row:
                if d == UNREACHABLE:
                    return math.inf
                if d > best:
                    best = d
        return best

    def regularity(self) -> int | None:
        """The common degree when the graph is regular, else None."""
        degs = set(self.degrees())
        if len(degs) == 1:
            return degs.pop()
        return None

    def label_of(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def vertex_by_label(self, text: str) -> int:
        """Resolve a CLI-style vertex spec: a label if present, else an index."""
        if self.labels is not None and text in self.labels:
            return self.labels.index(text)
        v = int(text)
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {text} outside 0..{self.n - 1}")
        return v

    def __repr__(self) -> str:
        name = self.name or "graph"
        return f"<{name}: {self.n} vertices, {len(self.edges)} edges>"


# -- serialization ------------------------------------------------------------


def graph_to_json_dict(G: Graph) -> dict:
    out: dict = {"n": G.n, "edges": [list(e) for e in G.edges]}
    if G.labels is not None:
        out["labels"] = list(G.labels)
    return out


def graph_from_json_dict(data: dict, name: str | None = None) -> Graph:
    return Graph(data["n"], [tuple(e) for e in data["edges"]],
                 labels=data.get("labels"), name=name)


def graph_hash(G: Graph) -> str:
    """Structural hash (vertex count + canonical edge list); labels excluded."""
    payload = json.dumps({"n": G.n, "edges": [list(e) for e in G.edges]},
                         sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode("ascii")).hexdigest()


def graph_to_dot(G: Graph) -> str:
    lines = ["graph G {"]
    for v in range(G.n):
        lines.append(f'  v{v} [label="{G.label_of(v)}"];')
    for u, v in G.edges:
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- structural predicates -----------------------------------------------------


def graph_girth(G: Graph) -> int | float:
    """Length of the shortest cycle; math.inf for forests.

    For each edge uv, the shortest cycle through uv is 1 plus the u-v
    distance with that edge removed; the minimum over edges is the girth.
    """
    best = math.inf
    for u, v in G.edges:
        d = _distance_avoiding_edge(G, u, v, cutoff=best - 1)
        if d is not None and d + 1 < best:
            best = d + 1
            if best == 3:
                return 3
    return best


def _distance_avoiding_edge(G: Graph, source: int, target: int, cutoff) -> int | None:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if dist[u] >= cutoff:
            return None
        for w in G.neighbors(u):
            if u == source and w == target:
                continue  # the removed edge; BFS stops at target so the
                # reverse direction can never be traversed
            if w not in dist:
                dist[w] = dist[u] + 1
                if w == target:
                    return dist[w]
                queue.append(w)
    return None


def has_c4(G: Graph) -> bool:
    """True iff some pair of vertices has at least two common neighbors."""
    masks = [0] * G.n
    for v in range(G.n):
        m = 0
        for w in G.neighbors(v):
            m |= 1 << w
        masks[v] = m
    for u in range(G.n):
        for v in range(u + 1, G.n):
            if (masks[u] & masks[v]).bit_count() >= 2:
                return True
    return False


def is_moore_diam2(G: Graph) -> int | None:
    """The degree k when G is k-regular of diameter 2, girth 5, order k^2+1."""
    k = G.regularity()
    if k is None or k < 2:
        return None
    if G.n != k * k + 1:
        return None
    if G.diameter() != 2:
        return None
    if graph_girth(G) != 5:
        return None
    return k


# -- generators ----------------------------------------------------------------


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return Graph(n, edges, name=f"C{n}", automorphisms=_dihedral_perms(n))


def _dihedral_perms(n: int) -> list[tuple[int, ...]]:
    perms = []
    for s in range(n):
        perms.append(tuple((i + s) % n for i in range(n)))
        perms.append(tuple((s - i) % n for i in range(n)))
    return perms


# Attaching the full S_n action is only worthwhile while the permutation list
# stays small enough for belief canonicalization to be a win.
_KNESER_AUTOMORPHISM_MAX_N = 7


def kneser_graph(k: int, n: int) -> Graph:
    """Vertices are the k-subsets of {1..n} in lexicographic order; edges join
    disjoint subsets."""
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    if k >= n:
        raise ValueError(f"need k < n, got k={k}, n={n}")
    subsets = list(itertools.combinations(range(1, n + 1), k))
    index = {s: i for i, s in enumerate(subsets)}
    edges = []
    for i, a in enumerate(subsets):
        sa = set(a)
        for j in range(i + 1, len(subsets)):
            if sa.isdisjoint(subsets[j]):
                edges.append((i, j))
    labels = [str(KneserLabel(s, n)) for s in subsets]
    autos = None
    if n <= _KNESER_AUTOMORPHISM_MAX_N:
        autos = []
        for perm in itertools.permutations(range(1, n + 1)):
            mapping = tuple(index[tuple(sorted(perm[e - 1] for e in s))] for s in subsets)
            autos.append(mapping)
    return Graph(len(subsets), edges, labels=labels, name=f"K({k},{n})",
                 automorphisms=autos)


def kneser_vertex_subsets(k: int, n: int) -> list[tuple[int, ...]]:
    """The vertex labels of K(k,n) as subsets, in vertex-index order."""
    return list(itertools.combinations(range(1, n + 1), k))


def kneser_vertex_index(subset, k: int, n: int) -> int:
    """Lexicographic rank of a k-subset of {1..n} among all k-subsets."""
    s = tuple(sorted(subset))
    if len(s) != k or len(set(s)) != k or s[0] < 1 or s[-1] > n:
        raise ValueError(f"{subset} is not a k-subset of 1..{n}")
    rank = 0
    prev = 0
    for pos, value in enumerate(s):
        for skipped in range(prev + 1, value):
            rank += math.comb(n - skipped, k - pos - 1)
        prev = value
    return rank


def petersen() -> Graph:
    """The Petersen graph in its Kneser K(2,5) layout."""
    G = kneser_graph(2, 5)
    return Graph(G.n, G.edges, labels=G.labels, name="petersen",
                 automorphisms=G.automorphisms)


def hoffman_singleton() -> Graph:
    """Pentagon/pentagram construction: pentagons P_h (j ~ j+-1), pentagrams
    Q_i (j ~ j+-2), and P_h vertex j joined to Q_i vertex h*i+j (mod 5)."""
    def p(h, j):
        return 5 * h + j

    def q(i, j):
        return 25 + 5 * i + j

    edges = []
    labels = [""] * 50
    for h in range(5):
        for j in range(5):
            labels[p(h, j)] = f"P{h}.{j}"
            labels[q(h, j)] = f"Q{h}.{j}"
            edges.append((p(h, j), p(h, (j + 1) % 5)))
            edges.append((q(h, j), q(h, (j + 2) % 5)))
    for h in range(5):
        for i in range(5):
            for j in range(5):
                edges.append((p(h, j), q(i, (h * i + j) % 5)))
    return Graph(50, edges, labels=labels, name="hoffman-singleton")
