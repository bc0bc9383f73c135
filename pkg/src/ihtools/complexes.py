"""Finite abstract simplicial complexes and the constructions used on them."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .linalg import MatrixF2

Simplex = tuple[int, ...]

__all__ = [
    "Simplex",
    "SimplicialComplex",
    "PseudomanifoldReport",
    "build_complex",
    "validate_pseudomanifold",
    "link",
    "barycentric_subdivision",
    "cone",
    "suspension",
    "euler_characteristic",
    "relabel",
]


def _normalize_simplex(vertices: Iterable[int]) -> Simplex:
    vs = list(vertices)
    if not vs:
        raise ValueError("empty simplex")
    for v in vs:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ValueError(f"vertex ids must be non-negative integers, got {v!r}")
    s = tuple(sorted(vs))
    if len(set(s)) != len(s):
        raise ValueError(f"repeated vertex in simplex {list(vs)}")
    return s


class SimplicialComplex:
    """Face closure of a set of facets, with canonical per-dimension ordering.

    ``simplices(i)`` lists the i-simplices sorted lexicographically; positions
    in that list index the coordinates of i-chains.
    """

    def __init__(self, facets: Iterable[Simplex] = ()):
        facets = {tuple(f) for f in facets}
        # drop non-maximal facets
        by_size = sorted(facets, key=len, reverse=True)
        faces: set[Simplex] = set()
        maximal = []
        for f in by_size:
            if f in faces:
                continue
            maximal.append(f)
            for k in range(1, len(f) + 1):
                faces.update(combinations(f, k))
        self.facets: tuple[Simplex, ...] = tuple(sorted(maximal))
        dim = max((len(s) for s in faces), default=0) - 1
        levels: list[list[Simplex]] = [[] for _ in range(dim + 1)]
        for s in faces:
            levels[len(s) - 1].append(s)
        self._simplices = tuple(tuple(sorted(level)) for level in levels)
        self._index = [{s: j for j, s in enumerate(level)} for level in self._simplices]
        self._boundary_cache: dict[int, list[int]] = {}

    @property
    def dim(self) -> int:
        """Dimension; -1 for the empty complex."""
        return len(self._simplices) - 1

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(s[0] for s in self.simplices(0))

    def simplices(self, i: int) -> tuple[Simplex, ...]:
        if 0 <= i < len(self._simplices):
            return self._simplices[i]
        return ()

    def all_simplices(self) -> list[Simplex]:
        return [s for level in self._simplices for s in level]

    def count(self, i: int) -> int:
        return len(self.simplices(i))

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self._simplices)

    def index(self, s: Sequence[int]) -> int:
        s = tuple(s)
        try:
            return self._index[len(s) - 1][s]
        except (IndexError, KeyError):
            raise KeyError(f"simplex {list(s)} not in complex") from None

    def __contains__(self, s) -> bool:
        s = tuple(s)
        return 0 < len(s) <= len(self._index) and s in self._index[len(s) - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self) -> int:
        return hash(self.facets)

    def __repr__(self) -> str:
        return f"SimplicialComplex(dim={self.dim}, f_vector={self.f_vector()})"

    def boundary_columns(self, i: int) -> list[int]:
        """Packed boundary of each i-simplex over the (i-1)-simplex index.

        ``boundary_columns(0)`` is all zeros (unaugmented complex).
        """
        cached = self._boundary_cache.get(i)
        if cached is not None:
            return cached
        if i <= 0:
            cols = [0] * self.count(i)
        else:
            idx = self._index[i - 1]
            cols = []
            for s in self.simplices(i):
                col = 0
                for k in range(len(s)):
                    col |= 1 << idx[s[:k] + s[k + 1:]]
                cols.append(col)
        self._boundary_cache[i] = cols
        return cols

    def boundary_matrix(self, i: int) -> MatrixF2:
        """Matrix of the boundary map from i-chains to (i-1)-chains."""
        return MatrixF2.from_columns(self.boundary_columns(i), self.count(i - 1) if i > 0 else 0)

    def chain(self, i: int, simplices: Iterable[Sequence[int]]) -> int:
        """Packed i-chain that is the mod-2 sum of the given simplices."""
        bits = 0
        for s in simplices:
            bits ^= 1 << self.index(tuple(sorted(s)))
        return bits

    def support(self, i: int, chain: int) -> list[Simplex]:
        level = self.simplices(i)
        out = []
        j = 0
        while chain:
            if chain & 1:
                out.append(level[j])
            chain >>= 1
            j += 1
        return out

    def full_subcomplex(self, vertices: Iterable[int]) -> "SimplicialComplex":
        vs = set(vertices)
        return SimplicialComplex(s for s in self.all_simplices() if vs.issuperset(s))


def build_complex(facets: Iterable[Sequence[int]]) -> SimplicialComplex:
    """Build a complex from facet vertex lists, validating each facet."""
    normalized = [_normalize_simplex(f) for f in facets]
    if not normalized:
        raise ValueError("empty facet list")
    return SimplicialComplex(normalized)


@dataclass
class PseudomanifoldReport:
    is_pure: bool
    kind: str  # "closed", "with_boundary" or "not_pseudomanifold"
    dimension: int
    boundary_facets: list[Simplex] = field(default_factory=list)
    offending_simplices: list[Simplex] = field(default_factory=list)

    @property
    def is_closed(self) -> bool:
        return self.kind == "closed"


def validate_pseudomanifold(K: SimplicialComplex) -> PseudomanifoldReport:
    """Classify ``K`` as a closed pseudomanifold, one with boundary, or neither.

    Purity: every simplex is a face of some top simplex.  Each codimension-one
    simplex must lie in exactly two top simplices (closed) or in one or two
    (with boundary).  A 0-dimensional complex is closed vacuously.
    """
    a = K.dim
    non_maximal = [f for f in K.facets if len(f) - 1 < a]
    is_pure = a >= 0 and not non_maximal
    if not is_pure:
        return PseudomanifoldReport(False, "not_pseudomanifold", a, offending_simplices=non_maximal)
    if a == 0:
        return PseudomanifoldReport(True, "closed", a)
    counts = Counter()
    for top in K.simplices(a):
        for k in range(len(top)):
            counts[top[:k] + top[k + 1:]] += 1
    boundary = [s for s in K.simplices(a - 1) if counts[s] == 1]
    bad = [s for s in K.simplices(a - 1) if counts[s] > 2]
    if bad:
        kind = "not_pseudomanifold"
    elif boundary:
        kind = "with_boundary"
    else:
        kind = "closed"
    return PseudomanifoldReport(True, kind, a, boundary_facets=boundary, offending_simplices=bad)


def link(K: SimplicialComplex, sigma: Sequence[int]) -> SimplicialComplex:
    """The simplices disjoint from ``sigma`` whose join with it lies in ``K``.

    Vertex ids are kept; the link of a facet is the empty complex.
    """
    sigma = tuple(sorted(sigma))
    if sigma not in K:
        raise KeyError(f"simplex {list(sigma)} not in complex")
    s = set(sigma)
    faces = []
    for f in K.facets:
        if s.issubset(f):
            rest = tuple(v for v in f if v not in s)
            if rest:
                faces.append(rest)
    return SimplicialComplex(faces)


def barycentric_subdivision(K: SimplicialComplex) -> tuple[SimplicialComplex, dict[int, Simplex]]:
    """First barycentric subdivision.

    The vertex of the subdivision with id ``j`` is the barycenter of the
    ``j``-th simplex of ``K`` in canonical order (by dimension, then
    lexicographic).  Returns the subdivision and the map from new vertex ids
    to the simplices of ``K`` they came from.
    """
    origin = dict(enumerate(K.all_simplices()))
    ids = {s: j for j, s in origin.items()}
    facets = set()
    for f in K.facets:
        for perm in permutations(f):
            facets.add(tuple(sorted(ids[tuple(sorted(perm[: k + 1]))] for k in range(len(perm)))))
    return SimplicialComplex(facets), origin


def _fresh(K: SimplicialComplex) -> int:
    return max(K.vertices, default=-1) + 1


def cone(K: SimplicialComplex, apex: int | None = None) -> SimplicialComplex:
    """Join ``K`` with one new vertex (by default one more than the largest id)."""
    if K.dim < 0:
        raise ValueError("cannot cone the empty complex")
    apex = _fresh(K) if apex is None else apex
    if apex in K.vertices:
        raise ValueError(f"apex {apex} already a vertex")
    return SimplicialComplex(tuple(sorted(f + (apex,))) for f in K.facets)


def suspension(K: SimplicialComplex, apexes: tuple[int, int] | None = None) -> SimplicialComplex:
    """Join ``K`` with two new, mutually unjoined vertices."""
    if K.dim < 0:
        raise ValueError("cannot suspend the empty complex")
    if apexes is None:
        n = _fresh(K)
        apexes = (n, n + 1)
    facets = [tuple(sorted(f + (p,))) for p in apexes for f in K.facets]
    return SimplicialComplex(facets)


def euler_characteristic(K: SimplicialComplex) -> int:
    return sum((-1) ** i * n for i, n in enumerate(K.f_vector()))


def relabel(K: SimplicialComplex, mapping: dict[int, int] | None = None) -> tuple[SimplicialComplex, dict[int, int]]:
    """Relabel vertices; by default onto 0..n-1 in increasing order."""
    if mapping is None:
        mapping = {v: j for j, v in enumerate(K.vertices)}
    return SimplicialComplex(tuple(sorted(mapping[v] for v in f)) for f in K.facets), mapping
