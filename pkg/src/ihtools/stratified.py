"""Perversities, filtered complexes, allowable chains and strata.

A filtration is given by nested vertex sets ``V_0 ⊆ V_1 ⊆ ... ⊆ V_{a-2}``;
the closed skeleton ``X_k`` is the full subcomplex spanned by ``V_k``.  With
full skeleta, the largest face of a simplex lying in ``X_k`` is spanned by
the simplex's vertices in ``V_k``, which makes allowability a vertex count.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .complexes import Simplex, SimplicialComplex, barycentric_subdivision, cone, link, suspension
from .linalg import BitVectorF2, bit_indices, kernel_of_columns

__all__ = [
    "Perversity",
    "PerversityError",
    "FiltrationError",
    "StratumLinkError",
    "FilteredComplex",
    "StratumInfo",
    "make_perversity",
    "builtin_perversity",
    "parse_perversity",
    "build_filtration",
    "trivial_filtration",
    "simplex_allowable",
    "allowable_simplices",
    "ic_basis",
    "ic_basis_bits",
    "strata",
    "stratum_link",
    "suspend_filtered",
    "cone_filtered",
    "subdivide_filtered",
]


class PerversityError(ValueError):
    def __init__(self, message: str, codim: int | None = None):
        super().__init__(message)
        self.codim = codim


class FiltrationError(ValueError):
    def __init__(self, message: str, witness: Simplex | None = None):
        super().__init__(message)
        self.witness = witness


class StratumLinkError(ValueError):
    pass


@dataclass(frozen=True)
class Perversity:
    """Values ``p(2), p(3), ...`` of a perversity, indexed by codimension."""

    values: tuple[int, ...]
    name: str | None = None

    @property
    def max_codim(self) -> int:
        return len(self.values) + 1

    def __call__(self, c: int) -> int:
        if not 2 <= c <= self.max_codim:
            raise PerversityError(f"perversity defined for codimensions 2..{self.max_codim}, not {c}", c)
        return self.values[c - 2]

    def __le__(self, other: "Perversity") -> bool:
        n = min(len(self.values), len(other.values))
        return all(x <= y for x, y in zip(self.values[:n], other.values[:n]))

    def __str__(self) -> str:
        return self.name or ",".join(map(str, self.values))


def make_perversity(values: Sequence[int], name: str | None = None) -> Perversity:
    """Validate ``values`` = (p(2), p(3), ...) against the perversity axioms."""
    values = tuple(int(v) for v in values)
    if values and values[0] != 0:
        raise PerversityError(f"p(2) must be 0, got {values[0]}", 2)
    for j in range(1, len(values)):
        step = values[j] - values[j - 1]
        if step not in (0, 1):
            c = j + 2
            raise PerversityError(f"growth violation at c={c}: p({c}) - p({c - 1}) = {step}, must be 0 or 1", c)
    return Perversity(values, name)


_BUILTINS = {
    "zero": lambda c: 0,
    "total": lambda c: c - 2,
    "lower_middle": lambda c: (c - 2) // 2,
    "upper_middle": lambda c: (c - 1) // 2,
}
_ALIASES = {"0": "zero", "t": "total", "m": "lower_middle", "n": "upper_middle"}
_SHORT = {v: k for k, v in _ALIASES.items()}


def builtin_perversity(kind: str, max_codim: int) -> Perversity:
    """One of ``zero``, ``total``, ``lower_middle``, ``upper_middle`` (or 0/t/m/n)."""
    kind = _ALIASES.get(kind, kind)
    if kind not in _BUILTINS:
        raise PerversityError(f"unknown perversity {kind!r}; choose from {sorted(_BUILTINS)}")
    f = _BUILTINS[kind]
    return Perversity(tuple(f(c) for c in range(2, max(max_codim, 1) + 1)), _SHORT[kind])


def parse_perversity(spec: str, max_codim: int) -> Perversity:
    """Parse a named perversity or a comma list of values for c = 2, 3, ..."""
    spec = spec.strip()
    if spec in _ALIASES or spec in _BUILTINS:
        return builtin_perversity(spec, max_codim)
    try:
        values = [int(x) for x in spec.split(",") if x.strip()]
    except ValueError:
        raise PerversityError(f"cannot parse perversity {spec!r}") from None
    p = make_perversity(values)
    if p.max_codim < max_codim:
        raise PerversityError(f"perversity gives values up to c={p.max_codim}, need c={max_codim}", p.max_codim + 1)
    return p


class FilteredComplex:
    """A pure complex of dimension ``a`` with full skeleta ``X_0 ⊆ ... ⊆ X_{a-2}``."""

    def __init__(self, complex: SimplicialComplex, skeleta: Sequence[frozenset[int]]):
        self.complex = complex
        self.skeleta = tuple(frozenset(s) for s in skeleta)

    @property
    def dim(self) -> int:
        return self.complex.dim

    def skeleton_vertices(self, k: int) -> frozenset[int]:
        a = self.dim
        if k < 0:
            return frozenset()
        if k >= a:
            return frozenset(self.complex.vertices)
        if k >= len(self.skeleta):
            return self.skeleta[-1] if self.skeleta else frozenset()
        return self.skeleta[k]

    def skeleton(self, k: int) -> SimplicialComplex:
        return self.complex.full_subcomplex(self.skeleton_vertices(k))

    @property
    def singular_vertices(self) -> frozenset[int]:
        return self.skeleton_vertices(self.dim - 2)

    @property
    def is_trivial(self) -> bool:
        return not self.singular_vertices

    def skeleta_dict(self) -> dict[int, list[int]]:
        """Skeleta with distinct, nonempty vertex sets, keyed by dimension."""
        out = {}
        prev: frozenset[int] = frozenset()
        for k, vs in enumerate(self.skeleta):
            if vs and vs != prev:
                out[k] = sorted(vs)
            prev = vs
        return out

    def __repr__(self) -> str:
        return f"FilteredComplex(dim={self.dim}, skeleta={self.skeleta_dict()})"


def build_filtration(
    K: SimplicialComplex,
    skeleta: Mapping[int, Iterable[int]] | Sequence[Iterable[int]] = (),
    declared_simplices: Mapping[int, Iterable[Sequence[int]]] | None = None,
) -> FilteredComplex:
    """Validate and build a filtration from skeleton vertex sets.

    ``skeleta`` maps a skeleton dimension k (0 <= k <= a-2) to the vertex set
    of ``X_k``; a sequence is read as k = 0, 1, ....  Dimensions not given
    inherit the next lower skeleton.  ``declared_simplices`` optionally gives
    the intended simplices of some skeleta, which must then span the full
    subcomplex on their vertices.
    """
    a = K.dim
    if a >= 0 and any(len(f) - 1 < a for f in K.facets):
        raise FiltrationError("complex is not pure")
    items = skeleta.items() if isinstance(skeleta, Mapping) else enumerate(skeleta)
    given = {int(k): frozenset(vs) for k, vs in items}
    verts = set(K.vertices)
    for k, vs in given.items():
        if not 0 <= k <= a - 2:
            raise FiltrationError(f"skeleton dimension {k} outside 0..{a - 2}")
        missing = set(vs) - verts
        if missing:
            raise FiltrationError(f"skeleton X_{k} uses unknown vertices {sorted(missing)}")
    levels: list[frozenset[int]] = []
    current: frozenset[int] = frozenset()
    for k in range(max(a - 1, 0)):
        if k in given:
            nxt = frozenset(given[k])
            if not current <= nxt:
                raise FiltrationError(f"skeleta not nested: X_{k} misses vertices {sorted(current - nxt)}")
            current = nxt
        levels.append(current)

    for k, vs in enumerate(levels):
        for s in K.simplices(k + 1):
            if vs.issuperset(s):
                raise FiltrationError(f"skeleton X_{k} has dimension > {k}", witness=s)

    for k, simplices in (declared_simplices or {}).items():
        vs = levels[k] if 0 <= k < len(levels) else frozenset()
        declared = SimplicialComplex(tuple(sorted(s)) for s in simplices)
        for s in K.full_subcomplex(vs).all_simplices():
            if s not in declared:
                raise FiltrationError(
                    f"skeleton X_{k} is not a full subcomplex; subdivide first", witness=s
                )

    if a >= 1:
        sing = levels[-1] if levels else frozenset()
        cofaces = Counter()
        for top in K.simplices(a):
            for j in range(len(top)):
                cofaces[top[:j] + top[j + 1:]] += 1
        for s in K.simplices(a - 1):
            if cofaces[s] > 2 and not sing.issuperset(s):
                raise FiltrationError("codimension-one stratum detected", witness=s)

    return FilteredComplex(K, levels)


def trivial_filtration(K: SimplicialComplex) -> FilteredComplex:
    return build_filtration(K, {})


def _check_perversity(X: FilteredComplex, p: Perversity) -> None:
    if X.dim >= 2 and p.max_codim < X.dim:
        raise PerversityError(f"perversity {p} defined up to c={p.max_codim}, complex needs c={X.dim}", p.max_codim + 1)


def _allowable(X: FilteredComplex, p: Perversity, i: int, sigma: Simplex) -> bool:
    a = X.dim
    for c in range(2, a + 1):
        vs = X.skeleton_vertices(a - c)
        if not vs:
            continue
        d = sum(1 for v in sigma if v in vs) - 1
        if d >= 0 and d > i - c + p(c):
            return False
    return True


def simplex_allowable(X: FilteredComplex, p: Perversity, i: int, sigma: Sequence[int]) -> bool:
    """Whether the i-simplex meets each ``X_{a-c}`` in dimension <= i - c + p(c).

    An empty intersection has dimension -infinity and always passes.
    """
    sigma = tuple(sorted(sigma))
    if len(sigma) - 1 != i:
        raise ValueError(f"simplex {list(sigma)} has dimension {len(sigma) - 1}, expected {i}")
    _check_perversity(X, p)
    return _allowable(X, p, i, sigma)


def _allowable_mask(X: FilteredComplex, p: Perversity, i: int) -> int:
    mask = 0
    for j, s in enumerate(X.complex.simplices(i)):
        if _allowable(X, p, i, s):
            mask |= 1 << j
    return mask


def allowable_simplices(X: FilteredComplex, p: Perversity, i: int) -> list[Simplex]:
    _check_perversity(X, p)
    return [s for s in X.complex.simplices(i) if _allowable(X, p, i, s)]


def ic_basis_bits(X: FilteredComplex, p: Perversity, i: int) -> list[int]:
    """Packed basis of the intersection i-chains.

    These are the chains on allowable i-simplices whose boundary vanishes on
    every non-allowable (i-1)-simplex: the kernel of the boundary followed by
    projection onto the non-allowable coordinates.
    """
    _check_perversity(X, p)
    K = X.complex
    allowed = bit_indices(_allowable_mask(X, p, i))
    if i == 0:
        return [1 << j for j in allowed]
    n_prev = K.count(i - 1)
    forbidden = ((1 << n_prev) - 1) & ~_allowable_mask(X, p, i - 1)
    cols = K.boundary_columns(i)
    kernel = kernel_of_columns([cols[j] & forbidden for j in allowed])
    basis = []
    for combo in kernel:
        chain = 0
        for t in bit_indices(combo):
            chain |= 1 << allowed[t]
        basis.append(chain)
    return basis


def ic_basis(X: FilteredComplex, p: Perversity, i: int) -> list[BitVectorF2]:
    n = X.complex.count(i)
    return [BitVectorF2(n, b) for b in ic_basis_bits(X, p, i)]


@dataclass
class StratumInfo:
    index: int
    dimension: int
    codimension: int
    components: list[list[Simplex]]
    representatives: list[Simplex | None]

    @property
    def is_singular(self) -> bool:
        return self.codimension >= 2


def _components(simplices: list[Simplex]) -> list[list[Simplex]]:
    members = set(simplices)
    parent = {s: s for s in simplices}

    def find(s):
        while parent[s] != s:
            parent[s] = parent[parent[s]]
            s = parent[s]
        return s

    for s in simplices:
        for j in range(len(s)):
            f = s[:j] + s[j + 1:]
            if f in members:
                ra, rb = find(s), find(f)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    groups: dict[Simplex, list[Simplex]] = {}
    for s in sorted(simplices, key=lambda t: (len(t), t)):
        groups.setdefault(find(s), []).append(s)
    return sorted(groups.values(), key=lambda g: (len(g[0]), g[0]))


def strata(X: FilteredComplex) -> list[StratumInfo]:
    """Strata ``X_k - X_{k-1}`` (nonempty ones) followed by the regular stratum."""
    a = X.dim
    K = X.complex
    out = []
    for k in list(range(a - 1)) + [a]:
        if k == a:
            top, below = frozenset(K.vertices), X.skeleton_vertices(a - 2)
        else:
            top, below = X.skeleton_vertices(k), X.skeleton_vertices(k - 1)
        diff = [s for s in K.all_simplices() if top.issuperset(s) and not below.issuperset(s)]
        if not diff:
            continue
        comps = _components(diff)
        reps = []
        for comp in comps:
            rep = None
            for s in comp:
                if len(s) - 1 == k and _open_star_misses(K, s, below):
                    rep = s
                    break
            reps.append(rep)
        out.append(StratumInfo(k, k, a - k, comps, reps))
    return out


def _open_star_misses(K: SimplicialComplex, sigma: Simplex, below: frozenset[int]) -> bool:
    s = set(sigma)
    return not any(s.issubset(f) and below.issuperset(f) for f in K.all_simplices())


def stratum_link(X: FilteredComplex, stratum: StratumInfo, component: int = 0) -> FilteredComplex:
    """Link of the stratum component's representative simplex, with induced skeleta."""
    rep = stratum.representatives[component]
    if rep is None:
        raise StratumLinkError(
            f"stratum X_{stratum.index} component {component} has no {stratum.index}-simplex "
            "with clean open star; apply barycentric subdivision"
        )
    L = link(X.complex, rep)
    k = stratum.index
    lv = set(L.vertices)
    induced = {j: X.skeleton_vertices(k + 1 + j) & lv for j in range(max(L.dim - 1, 0))}
    return build_filtration(L, {j: vs for j, vs in induced.items() if vs})


def suspend_filtered(X: FilteredComplex) -> FilteredComplex:
    """Suspension with the apexes as 0-strata and each skeleton suspended."""
    K = X.complex
    n = max(K.vertices) + 1
    apexes = {n, n + 1}
    S = suspension(K, (n, n + 1))
    skel = {0: apexes}
    for k in range(X.dim - 1):
        skel[k + 1] = set(X.skeleton_vertices(k)) | apexes
    return build_filtration(S, skel)


def cone_filtered(X: FilteredComplex) -> FilteredComplex:
    """Cone with the apex as a 0-stratum and each skeleton coned."""
    K = X.complex
    apex = max(K.vertices) + 1
    C = cone(K, apex)
    skel = {0: {apex}}
    for k in range(X.dim - 1):
        skel[k + 1] = set(X.skeleton_vertices(k)) | {apex}
    return build_filtration(C, skel)


def subdivide_filtered(X: FilteredComplex, times: int = 1) -> FilteredComplex:
    """Barycentric subdivision; ``X'_k`` is spanned by barycenters of simplices of ``X_k``."""
    for _ in range(times):
        K2, origin = barycentric_subdivision(X.complex)
        skel = {}
        for k in range(X.dim - 1):
            vs = X.skeleton_vertices(k)
            skel[k] = {v for v, s in origin.items() if vs.issuperset(s)}
        X = build_filtration(K2, skel)
    return X
