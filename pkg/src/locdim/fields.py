"""GF(q) arithmetic, projective points of PG(2,q), and polarity graphs.

Field elements are integers 0..q-1. For prime q the integer is the residue
itself; for prime powers it encodes the coefficient vector of the residue
polynomial in base p (little-endian), reduced by a fixed irreducible
polynomial. Full addition/multiplication tables are precomputed, so all
arithmetic is table lookups.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .graphs import Graph

# Irreducible monic polynomials x^d + ... used for the supported prime powers,
# given as low-order coefficient tuples (c0, c1, ..., c_{d-1}).
_IRREDUCIBLE = {
    4: (2, (1, 1)),        # x^2 + x + 1 over GF(2)
    8: (2, (1, 1, 0)),     # x^3 + x + 1 over GF(2)
    9: (3, (1, 0)),        # x^2 + 1 over GF(3)
    16: (2, (1, 1, 0, 0)),  # x^4 + x + 1 over GF(2)
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            m = n
            while m % p == 0:
                m //= p
            return m == 1
        p += 1
    return True  # n itself is prime


class Field:
    """GF(q) with exhaustive arithmetic tables; construct via gf(q)."""

    def __init__(self, q: int) -> None:
        if _is_prime(q):
            p, deg = q, 1
            poly = None
        elif q in _IRREDUCIBLE:
            p, coeffs = _IRREDUCIBLE[q]
            deg = len(coeffs)
            poly = coeffs
        else:
            raise ValueError(
                f"unsupported field order {q}: must be prime or one of "
                f"{sorted(_IRREDUCIBLE)}"
            )
        self.q = q
        self.p = p
        self.deg = deg

        def to_vec(i: int) -> list[int]:
            vec = []
            for _ in range(deg):
                vec.append(i % p)
                i //= p
            return vec

        def from_vec(vec) -> int:
            out = 0
            for c in reversed(vec):
                out = out * p + c
            return out

        def mul_vec(a, b):
            prod = [0] * (2 * deg - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        prod[i + j] = (prod[i + j] + ai * bj) % p
            # reduce by x^deg = -(poly), repeatedly folding the top term down
            for top in range(2 * deg - 2, deg - 1, -1):
                c = prod[top]
                if c:
                    prod[top] = 0
                    for j, pj in enumerate(poly):
                        prod[top - deg + j] = (prod[top - deg + j] - c * pj) % p
            return prod[:deg]

        if deg == 1:
            self.add_table = tuple(tuple((a + b) % p for b in range(q)) for a in range(q))
            self.mul_table = tuple(tuple((a * b) % p for b in range(q)) for a in range(q))
        else:
            vecs = [to_vec(i) for i in range(q)]
            self.add_table = tuple(
                tuple(from_vec([(x + y) % p for x, y in zip(vecs[a], vecs[b])])
                      for b in range(q))
                for a in range(q)
            )
            self.mul_table = tuple(
                tuple(from_vec(mul_vec(vecs[a], vecs[b])) for b in range(q))
                for a in range(q)
            )
        self.neg_table = tuple(next(b for b in range(q) if self.add_table[a][b] == 0)
                               for a in range(q))
        self.inv_table = {a: next(b for b in range(q) if self.mul_table[a][b] == 1)
                          for a in range(1, q)}

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.inv_table[a]

    def element(self, value: int) -> "FieldElement":
        if not 0 <= value < self.q:
            raise ValueError(f"{value} outside GF({self.q})")
        return FieldElement(self, value)

    def dot3(self, u, v) -> int:
        """Dot product of coordinate triples, as a table-level operation."""
        acc = 0
        for a, b in zip(u, v):
            acc = self.add_table[acc][self.mul_table[a][b]]
        return acc

    def __repr__(self) -> str:
        return f"GF({self.q})"


@functools.lru_cache(maxsize=None)
def gf(q: int) -> Field:
    """The field context for GF(q); cached so contexts compare by identity."""
    return Field(q)


@dataclass(frozen=True)
class FieldElement:
    """A GF(q) value wrapped with operator sugar on top of the field tables."""

    field: Field
    value: int

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, self.field.add(self.value, other.value))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, self.field.mul(self.value, other.value))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, self.field.neg(self.value))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return self + (-other)

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other) -> bool:
        return (isinstance(other, FieldElement)
                and self.field is other.field and self.value == other.value)

    def __hash__(self) -> int:
        return hash((id(self.field), self.value))

    def __repr__(self) -> str:
        return f"{self.value}@GF({self.field.q})"


@dataclass(frozen=True)
class ProjectivePoint:
    """A point of PG(2,q): coordinate triple scaled so the first nonzero
    coordinate is 1. Equality on normalized coordinates."""

    field: Field
    coords: tuple[int, int, int]

    @classmethod
    def make(cls, field: Field, coords) -> "ProjectivePoint":
        return cls(field, normalize_point(field, tuple(coords)))

    def dot(self, other: "ProjectivePoint") -> int:
        return self.field.dot3(self.coords, other.coords)

    def is_absolute(self) -> bool:
        return self.dot(self) == 0

    def __str__(self) -> str:
        return "(" + ":".join(str(c) for c in self.coords) + ")"


def normalize_point(field: Field, coords: tuple[int, int, int]) -> tuple[int, int, int]:
    if all(c == 0 for c in coords):
        raise ValueError("the zero triple is not a projective point")
    lead = next(c for c in coords if c != 0)
    scale = field.inv(lead)
    return tuple(field.mul(scale, c) for c in coords)


def projective_points(field: Field) -> list[tuple[int, int, int]]:
    """All points of PG(2,q) as normalized triples, in lexicographic order."""
    q = field.q
    pts = [(0, 0, 1)]
    pts.extend((0, 1, b) for b in range(q))
    pts.extend((1, a, b) for a in range(q) for b in range(q))
    return sorted(pts)


@dataclass(frozen=True)
class PolarityGraph:
    """ER(q): projective points with u ~ v iff their dot product vanishes."""

    graph: Graph
    q: int
    absolute: frozenset
    points: tuple[tuple[int, int, int], ...]


def er_polarity_graph(q: int) -> PolarityGraph:
    """The orthogonal-polarity graph on the q^2+q+1 points of PG(2,q)."""
    field = gf(q)
    points = projective_points(field)
    n = len(points)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if field.dot3(points[i], points[j]) == 0:
                edges.append((i, j))
    absolute = frozenset(i for i in range(n)
                         if field.dot3(points[i], points[i]) == 0)
    labels = ["(" + ":".join(str(c) for c in pt) + ")" for pt in points]
    graph = Graph(n, edges, labels=labels, name=f"ER({q})")
    return PolarityGraph(graph=graph, q=q, absolute=absolute, points=tuple(points))
