"""Intersection homology of filtered simplicial pseudomanifolds over GF(2)."""

from .catalog import CATALOG_NAMES, catalog, catalog_filtration
from .characteristic import bordism_shadow_report, fundamental_class, sw_homology_classes, top_sw_number
from .complexes import (
    SimplicialComplex,
    barycentric_subdivision,
    build_complex,
    cone,
    euler_characteristic,
    link,
    suspension,
    validate_pseudomanifold,
)
from .homology import duality_check, homology, ih, omega_rank, simplicial_homology, witt_check
from .linalg import BitVectorF2, MatrixF2, in_span, intersect_dim, nullspace_basis, rank
from .spacefile import SpaceFile, parse_space_file
from .stratified import (
    FilteredComplex,
    Perversity,
    allowable_simplices,
    build_filtration,
    builtin_perversity,
    cone_filtered,
    ic_basis,
    make_perversity,
    simplex_allowable,
    strata,
    stratum_link,
    subdivide_filtered,
    suspend_filtered,
    trivial_filtration,
)

__version__ = "0.1.0"
