"""Homology of GF(2) chain complexes: ordinary, intersection, and the checks built on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .complexes import SimplicialComplex, validate_pseudomanifold
from .linalg import (
    BitVectorF2,
    MatrixF2,
    SpanReducer,
    bit_indices,
    express_in_basis,
    kernel_of_columns,
    rank_of_bits,
)
from .stratified import (
    FilteredComplex,
    Perversity,
    builtin_perversity,
    ic_basis_bits,
    stratum_link,
    strata,
)

__all__ = [
    "BoundarySquareError",
    "NotClosedError",
    "ChainComplexF2",
    "HomologyResult",
    "WittEntry",
    "WittReport",
    "DualityReport",
    "simplicial_chain_complex",
    "ic_chain_complex",
    "homology",
    "simplicial_homology",
    "ih",
    "ih_cohomology_ranks",
    "omega_rank",
    "witt_check",
    "duality_check",
]


class BoundarySquareError(ValueError):
    pass


class NotClosedError(ValueError):
    pass


def _apply(columns: Sequence[int], chain: int) -> int:
    out = 0
    for j in bit_indices(chain):
        out ^= columns[j]
    return out


@dataclass
class ChainComplexF2:
    """Finite GF(2) chain complex in degrees ``0..len(dims)-1``.

    ``boundaries[i]`` holds the packed image of each degree-i basis element in
    the degree-(i-1) basis (all zeros for i = 0).  ``embedding``, if set, gives
    each basis element as a packed chain of an ambient complex.
    """

    dims: list[int]
    boundaries: list[list[int]]
    embedding: list[list[int]] | None = None
    ambient_dims: list[int] | None = None
    labels: list[list] | None = None

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    def boundary_matrix(self, i: int) -> MatrixF2:
        nrows = self.dims[i - 1] if i > 0 else 0
        return MatrixF2.from_columns(self.boundaries[i], nrows)

    def check(self) -> None:
        for i in range(2, len(self.dims)):
            for j, col in enumerate(self.boundaries[i]):
                if _apply(self.boundaries[i - 1], col):
                    raise BoundarySquareError(f"boundary of boundary nonzero at degree {i}, basis element {j}")


@dataclass
class HomologyResult:
    ranks: tuple[int, ...]
    generators: list[list[BitVectorF2]] | None = None

    def rank(self, i: int) -> int:
        return self.ranks[i] if 0 <= i < len(self.ranks) else 0

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** i * r for i, r in enumerate(self.ranks))


def simplicial_chain_complex(K: SimplicialComplex) -> ChainComplexF2:
    dims = list(K.f_vector())
    return ChainComplexF2(
        dims=dims,
        boundaries=[K.boundary_columns(i) for i in range(len(dims))],
        labels=[list(K.simplices(i)) for i in range(len(dims))],
    )


def ic_chain_complex(X: FilteredComplex, p: Perversity) -> ChainComplexF2:
    """The intersection chain subcomplex, with boundaries written in its own bases."""
    K = X.complex
    bases = [ic_basis_bits(X, p, i) for i in range(K.dim + 1)]
    boundaries = []
    for i, basis in enumerate(bases):
        if i == 0:
            boundaries.append([0] * len(basis))
            continue
        cols = K.boundary_columns(i)
        images = [_apply(cols, b) for b in basis]
        boundaries.append(express_in_basis(bases[i - 1], images))
    return ChainComplexF2(
        dims=[len(b) for b in bases],
        boundaries=boundaries,
        embedding=bases,
        ambient_dims=list(K.f_vector()),
    )


def homology(C: ChainComplexF2, generators: bool = False) -> HomologyResult:
    """Ranks (and optionally representative cycles) of the homology of ``C``.

    Generators are expressed in the ambient chains when ``C.embedding`` is
    set, otherwise in ``C``'s own bases.
    """
    C.check()
    n = len(C.dims)
    ranks_d = [rank_of_bits(C.boundaries[i]) for i in range(n)] + [0]
    ranks = tuple(C.dims[i] - ranks_d[i] - ranks_d[i + 1] for i in range(n))
    gens = None
    if generators:
        gens = []
        for i in range(n):
            cycles = kernel_of_columns(C.boundaries[i])
            bounds = SpanReducer(C.boundaries[i + 1] if i + 1 < n else ())
            chosen = [z for z in cycles if bounds.add(z)]
            length = C.dims[i]
            if C.embedding is not None:
                chosen = [_apply(C.embedding[i], z) for z in chosen]
                length = C.ambient_dims[i]
            gens.append([BitVectorF2(length, z) for z in chosen])
    return HomologyResult(ranks, gens)


def simplicial_homology(K: SimplicialComplex, generators: bool = False) -> HomologyResult:
    return homology(simplicial_chain_complex(K), generators)


def ih(X: FilteredComplex, p: Perversity, generators: bool = False) -> HomologyResult:
    """Intersection homology ranks of ``X`` for perversity ``p``."""
    return homology(ic_chain_complex(X, p), generators)


def ih_cohomology_ranks(X: FilteredComplex, p: Perversity) -> tuple[int, ...]:
    """Ranks of intersection cohomology in degrees 0..a, read off through the
    cap-product isomorphism with intersection homology in degree a - j."""
    ranks = ih(X, p).ranks
    return tuple(reversed(ranks))


def omega_rank(X: FilteredComplex, p: Perversity, i: int) -> tuple[int, int, int]:
    """(rank IH_i, rank H_i, rank of IH_i -> H_i induced by inclusion)."""
    K = X.complex
    basis = ic_basis_bits(X, p, i)
    cols = K.boundary_columns(i)
    ic_cycles = [_apply(basis, combo) for combo in kernel_of_columns([_apply(cols, b) for b in basis])]
    ic_bounds = [_apply(K.boundary_columns(i + 1), b) for b in ic_basis_bits(X, p, i + 1)] if i < K.dim else []
    all_bounds = K.boundary_columns(i + 1) if i < K.dim else []

    b = rank_of_bits(all_bounds)
    ih_rank = len(ic_cycles) - rank_of_bits(ic_bounds)
    h_rank = len(kernel_of_columns(cols)) - b
    # dim(Z_IC + B) - dim B
    image = rank_of_bits(ic_cycles + list(all_bounds)) - b
    return ih_rank, h_rank, image


@dataclass
class WittEntry:
    stratum_index: int
    codimension: int
    component: int
    representative: tuple[int, ...]
    degree: int
    link_rank: int
    link_f_vector: tuple[int, ...]


@dataclass
class WittReport:
    is_witt: bool
    entries: list[WittEntry] = field(default_factory=list)

    @property
    def failures(self) -> list[WittEntry]:
        return [e for e in self.entries if e.link_rank != 0]


def witt_check(X: FilteredComplex) -> WittReport:
    """Check that every odd-codimension stratum link L has IH_k(L) = 0 for
    the upper middle perversity, where the codimension is 2k + 1."""
    entries = []
    for s in strata(X):
        c = s.codimension
        if c < 3 or c % 2 == 0:
            continue
        k = (c - 1) // 2
        for comp in range(len(s.components)):
            L = stratum_link(X, s, comp)
            n = builtin_perversity("n", max(L.dim, 2))
            r = ih(L, n).rank(k)
            entries.append(WittEntry(s.index, c, comp, s.representatives[comp], k, r, L.complex.f_vector()))
    return WittReport(all(e.link_rank == 0 for e in entries), entries)


@dataclass
class DualityReport:
    lower_ranks: tuple[int, ...]
    upper_ranks: tuple[int, ...]
    duality_pairs: list[tuple[int, int, int]]
    symmetric: bool
    middle_agreement: bool

    @property
    def passed(self) -> bool:
        return self.symmetric and self.middle_agreement

    @property
    def asymmetries(self) -> list[tuple[int, int, int]]:
        return [t for t in self.duality_pairs if t[1] != t[2]]


def duality_check(X: FilteredComplex) -> DualityReport:
    """Rank symmetry of lower-middle IH and agreement of the two middle perversities."""
    if not validate_pseudomanifold(X.complex).is_closed:
        raise NotClosedError("duality check needs a closed pseudomanifold")
    a = X.dim
    lower = ih(X, builtin_perversity("m", max(a, 2))).ranks
    upper = ih(X, builtin_perversity("n", max(a, 2))).ranks
    pairs = [(i, lower[i], lower[a - i]) for i in range(a + 1)]
    return DualityReport(
        lower_ranks=lower,
        upper_ranks=upper,
        duality_pairs=pairs,
        symmetric=all(x == y for _, x, y in pairs),
        middle_agreement=lower == upper,
    )
