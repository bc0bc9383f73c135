"""Fundamental class and mod-2 Stiefel-Whitney homology data of closed triangulated manifolds.

The i-th Stiefel-Whitney homology class of a closed triangulated manifold is
represented by the sum of all i-simplices of its first barycentric
subdivision.  The top Stiefel-Whitney number is the Euler characteristic
mod 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import SimplicialComplex, barycentric_subdivision, euler_characteristic, validate_pseudomanifold
from .homology import NotClosedError
from .linalg import BitVectorF2, SpanReducer

__all__ = [
    "FundamentalClass",
    "SWClassSet",
    "BordismShadowReport",
    "fundamental_class",
    "sw_homology_classes",
    "top_sw_number",
    "bordism_shadow_report",
]


def _boundary_of(K: SimplicialComplex, i: int, chain: int) -> int:
    cols = K.boundary_columns(i)
    out = 0
    j = 0
    while chain:
        if chain & 1:
            out ^= cols[j]
        chain >>= 1
        j += 1
    return out


def _require_closed(K: SimplicialComplex) -> None:
    report = validate_pseudomanifold(K)
    if not report.is_closed:
        raise NotClosedError(f"complex is not a closed pseudomanifold (kind={report.kind})")


@dataclass
class FundamentalClass:
    complex: SimplicialComplex
    chain: BitVectorF2

    @property
    def is_cycle(self) -> bool:
        return _boundary_of(self.complex, self.complex.dim, self.chain.bits) == 0


def fundamental_class(K: SimplicialComplex) -> FundamentalClass:
    """Sum of all top simplices; a mod-2 cycle for closed pseudomanifolds."""
    _require_closed(K)
    n = K.count(K.dim)
    return FundamentalClass(K, BitVectorF2(n, (1 << n) - 1))


@dataclass
class SWClassSet:
    """Classes ``w_i`` (i = 0..a) as chains of the subdivision ``ambient``."""

    ambient: SimplicialComplex
    classes: list[BitVectorF2]
    is_cycle: list[bool]
    vanishing: list[bool]

    @property
    def dim(self) -> int:
        return len(self.classes) - 1

    @property
    def non_cycles(self) -> list[int]:
        return [i for i, ok in enumerate(self.is_cycle) if not ok]


def sw_homology_classes(K: SimplicialComplex) -> SWClassSet:
    """Combinatorial Stiefel-Whitney homology classes of ``K``.

    Only meaningful for closed manifolds; for other closed pseudomanifolds a
    ``w_i`` may fail to be a cycle, which is reported in ``is_cycle``.
    ``vanishing[i]`` is True when ``w_i`` is a boundary in the subdivision
    (always False for a non-cycle).
    """
    _require_closed(K)
    K2, _ = barycentric_subdivision(K)
    a = K2.dim
    classes, cycles, vanishing = [], [], []
    for i in range(a + 1):
        n = K2.count(i)
        w = (1 << n) - 1
        is_cycle = i == 0 or _boundary_of(K2, i, w) == 0
        bounds = SpanReducer(K2.boundary_columns(i + 1)) if i < a else SpanReducer()
        classes.append(BitVectorF2(n, w))
        cycles.append(is_cycle)
        vanishing.append(is_cycle and bounds.contains(w))
    return SWClassSet(K2, classes, cycles, vanishing)


def top_sw_number(K: SimplicialComplex) -> int:
    """The number <w^a, [K]>, equal to the Euler characteristic mod 2."""
    _require_closed(K)
    return euler_characteristic(K) % 2


@dataclass
class BordismShadowReport:
    """Obstruction data for ``K`` bounding a compact manifold.

    ``obstructed`` is a one-way claim: True means ``K`` cannot bound.  False
    means only that no obstruction was found among the computed data.
    """

    top_number: int
    class_vanishing: list[bool]
    non_cycles: list[int] = field(default_factory=list)

    @property
    def obstructed(self) -> bool:
        return self.top_number == 1

    @property
    def verdict(self) -> str:
        return "cannot bound" if self.obstructed else "no obstruction found"


def bordism_shadow_report(K: SimplicialComplex) -> BordismShadowReport:
    """Stiefel-Whitney data of a closed manifold relevant to bounding.

    ``class_vanishing`` covers degrees 0..a-1; the degree-a class is the
    fundamental class and never vanishes.  A non-vanishing class in a single
    degree is not by itself an obstruction (only numbers are), so the verdict
    rests on the top number.
    """
    classes = sw_homology_classes(K)
    return BordismShadowReport(
        top_number=top_sw_number(K),
        class_vanishing=classes.vanishing[:-1],
        non_cycles=classes.non_cycles,
    )
