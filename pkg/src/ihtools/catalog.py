"""Built-in example spaces with documented expected invariants.

Each entry's metadata carries ``expected`` values and a ``provenance`` note
per value; ``selftest`` in the command line tool checks them all.
"""

from __future__ import annotations

from typing import Callable

from .complexes import SimplicialComplex, build_complex
from .spacefile import SpaceFile, space_file_from
from .stratified import FilteredComplex, build_filtration, suspend_filtered, trivial_filtration

__all__ = ["CATALOG_NAMES", "catalog", "catalog_filtration", "circle", "octahedron", "torus7", "rp2_6", "klein_bottle"]


def circle() -> SimplicialComplex:
    return build_complex([[0, 1], [0, 2], [1, 2]])


def octahedron() -> SimplicialComplex:
    # antipodal pairs (0,1), (2,3), (4,5)
    return build_complex([[a, b, c] for a in (0, 1) for b in (2, 3) for c in (4, 5)])


def torus7() -> SimplicialComplex:
    """Seven-vertex torus."""
    facets = []
    for i in range(7):
        facets.append([i, (i + 1) % 7, (i + 3) % 7])
        facets.append([i, (i + 2) % 7, (i + 3) % 7])
    return build_complex(facets)


def rp2_6() -> SimplicialComplex:
    """Six-vertex real projective plane (the hemi-icosahedron)."""
    return build_complex([
        [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5],
        [1, 2, 4], [1, 3, 4], [1, 3, 5], [2, 3, 5], [2, 4, 5],
    ])


def klein_bottle(m: int = 3, n: int = 3) -> SimplicialComplex:
    """Triangulated m x n grid, glued straight in one direction and with a flip in the other."""

    def v(i: int, j: int) -> int:
        if j >= n:
            i, j = -i, j - n
        return (i % m) * n + j

    facets = []
    for i in range(m):
        for j in range(n):
            a, b, c, d = v(i, j), v(i + 1, j), v(i, j + 1), v(i + 1, j + 1)
            facets += [[a, b, d], [a, c, d]]
    return build_complex(facets)


def pinched_torus() -> FilteredComplex:
    """A sphere with its two poles identified into one pinch vertex 0.

    Vertices 1-3 form the upper ring, 4-6 the lower ring; both rings are
    coned to vertex 0 and joined to each other by a band.
    """
    up, lo = [1, 2, 3], [4, 5, 6]
    facets = []
    for k in range(3):
        a0, a1 = up[k], up[(k + 1) % 3]
        b0, b1 = lo[k], lo[(k + 1) % 3]
        facets += [[0, a0, a1], [0, b0, b1], [a0, a1, b0], [a1, b0, b1]]
    return build_filtration(build_complex(facets), {0: [0]})


def disk_cone() -> FilteredComplex:
    """Cone on the triangle circle, apex 3 declared as a 0-stratum."""
    return build_filtration(build_complex([[0, 1, 3], [0, 2, 3], [1, 2, 3]]), {0: [3]})


_Recipe = Callable[[], FilteredComplex]

_RECIPES: dict[str, tuple[_Recipe, str, dict, dict]] = {
    "circle": (
        lambda: trivial_filtration(circle()),
        "boundary of a triangle",
        {"kind": "closed", "euler": 0, "homology": [1, 1], "ih": {"m": [1, 1], "n": [1, 1]}, "witt": True},
        {"homology": "trivial: circle", "ih": "trivial: no singular strata, IC = C"},
    ),
    "sphere2": (
        lambda: trivial_filtration(octahedron()),
        "octahedron",
        {"kind": "closed", "euler": 2, "homology": [1, 0, 1], "ih": {"m": [1, 0, 1], "n": [1, 0, 1]}, "witt": True},
        {"homology": "trivial: 2-sphere", "euler": "derived: 6 - 12 + 8"},
    ),
    "torus7": (
        lambda: trivial_filtration(torus7()),
        "seven-vertex torus",
        {"kind": "closed", "euler": 0, "homology": [1, 2, 1], "witt": True, "top_sw": 0},
        {"homology": "derived: H(T^2; F2)", "euler": "derived: 7 - 21 + 14", "top_sw": "derived: euler mod 2"},
    ),
    "rp2_6": (
        lambda: trivial_filtration(rp2_6()),
        "six-vertex real projective plane",
        {"kind": "closed", "euler": 1, "homology": [1, 1, 1], "witt": True, "top_sw": 1},
        {"homology": "derived: H(RP^2; F2)", "euler": "derived: 6 - 15 + 10", "top_sw": "derived: euler mod 2"},
    ),
    "klein": (
        lambda: trivial_filtration(klein_bottle()),
        "Klein bottle from a 3x3 grid",
        {"kind": "closed", "euler": 0, "homology": [1, 2, 1], "witt": True, "top_sw": 0},
        {"homology": "derived: H(K; F2)", "euler": "derived: 9 - 27 + 18"},
    ),
    "disk_cone": (
        disk_cone,
        "cone on a circle with the apex as a 0-stratum",
        {"kind": "with_boundary", "euler": 1, "homology": [1, 0, 0], "ih": {"0": [1, 0, 0]}, "witt": True},
        {"ih": "derived: rim circle bounds the sum of all triangles", "witt": "trivial: only codimension 2"},
    ),
    "pinched_torus": (
        pinched_torus,
        "torus with a meridian pinched (sphere with two points identified)",
        {
            "kind": "closed", "euler": 1, "homology": [1, 1, 1],
            "ih": {"m": [1, 0, 1], "n": [1, 0, 1]}, "witt": True, "duality": True,
        },
        {
            "homology": "derived: S^2 v S^1",
            "ih": "derived: 1-cycles avoid the pinch and bound; agrees with the normalization S^2",
            "witt": "trivial: only codimension 2",
        },
    ),
    "susp_torus": (
        lambda: suspend_filtered(trivial_filtration(torus7())),
        "suspension of the seven-vertex torus, apexes singular",
        {
            "kind": "closed", "euler": 2, "homology": [1, 0, 2, 1],
            "ih": {"m": [1, 2, 0, 1], "n": [1, 0, 2, 1]}, "witt": False, "witt_link_rank": 2, "duality": False,
        },
        {
            "ih": "derived: lower middle forbids apex contact below degree 3; upper middle cones off 1-cycles",
            "witt_link_rank": "derived: H_1(T^2; F2) = 2",
        },
    ),
    "susp_sphere2": (
        lambda: suspend_filtered(trivial_filtration(octahedron())),
        "suspension of the octahedron, apexes singular",
        {
            "kind": "closed", "euler": 0, "homology": [1, 0, 0, 1],
            "ih": {"m": [1, 0, 0, 1], "n": [1, 0, 0, 1]}, "witt": True, "witt_link_rank": 0, "duality": True,
        },
        {"witt_link_rank": "derived: H_1(S^2) = 0", "ih": "derived: stratified 3-sphere"},
    ),
    "susp_rp2": (
        lambda: suspend_filtered(trivial_filtration(rp2_6())),
        "suspension of the six-vertex projective plane, apexes singular",
        {
            "kind": "closed", "euler": 1, "homology": [1, 0, 1, 1],
            "ih": {"m": [1, 1, 0, 1], "n": [1, 0, 1, 1]}, "witt": False, "witt_link_rank": 1, "duality": False,
        },
        {"witt_link_rank": "derived: H_1(RP^2; F2) = 1", "homology": "derived: shifted reduced homology of RP^2"},
    ),
}

CATALOG_NAMES = tuple(_RECIPES)


def catalog_filtration(name: str) -> FilteredComplex:
    if name not in _RECIPES:
        raise KeyError(f"unknown catalog space {name!r}; available: {', '.join(CATALOG_NAMES)}")
    return _RECIPES[name][0]()


def catalog(name: str) -> SpaceFile:
    """The catalog entry as a space file, with expected values in its metadata."""
    X = catalog_filtration(name)
    _, description, expected, provenance = _RECIPES[name]
    meta = {"description": description, "expected": expected, "provenance": provenance}
    return space_file_from(name, X, meta)
