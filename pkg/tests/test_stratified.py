import pytest

from ihtools.catalog import catalog_filtration, circle, octahedron, torus7
from ihtools.complexes import build_complex, link, relabel, validate_pseudomanifold
from ihtools.linalg import in_span
from ihtools.stratified import (
    FiltrationError,
    PerversityError,
    StratumLinkError,
    allowable_simplices,
    build_filtration,
    builtin_perversity,
    cone_filtered,
    ic_basis,
    make_perversity,
    parse_perversity,
    simplex_allowable,
    strata,
    stratum_link,
    subdivide_filtered,
    suspend_filtered,
    trivial_filtration,
)
from oracles import brute_force_ic


def test_builtin_perversities():
    assert builtin_perversity("lower_middle", 5).values == (0, 0, 1, 1)
    assert builtin_perversity("upper_middle", 5).values == (0, 1, 1, 2)
    assert builtin_perversity("zero", 5).values == (0, 0, 0, 0)
    assert builtin_perversity("total", 5).values == (0, 1, 2, 3)


def test_perversity_growth_violation():
    with pytest.raises(PerversityError) as exc:
        make_perversity([0, 0, 2])
    assert exc.value.codim == 4
    with pytest.raises(PerversityError) as exc:
        make_perversity([1, 1])
    assert exc.value.codim == 2
    with pytest.raises(PerversityError):
        make_perversity([0, 1, 0])


def test_parse_perversity():
    assert parse_perversity("m", 4).values == (0, 0, 1)
    assert parse_perversity("0,1,1", 4).values == (0, 1, 1)
    with pytest.raises(PerversityError):
        parse_perversity("0,1", 4)
    with pytest.raises(PerversityError):
        parse_perversity("x", 4)


@pytest.mark.parametrize("kind", ["zero", "total", "lower_middle", "upper_middle"])
def test_builtins_between_zero_and_total(kind):
    p = builtin_perversity(kind, 12)
    assert builtin_perversity("zero", 12) <= p <= builtin_perversity("total", 12)
    assert make_perversity(p.values).values == p.values


def test_filtration_examples():
    X = trivial_filtration(circle())
    assert X.is_trivial
    ST = suspend_filtered(trivial_filtration(torus7()))
    sing = [s for s in strata(ST) if s.is_singular]
    assert [(s.index, s.codimension, len(s.components)) for s in sing] == [(0, 3, 2)]
    P = catalog_filtration("pinched_torus")
    assert [(s.index, s.codimension) for s in strata(P) if s.is_singular] == [(0, 2)]


def test_filtration_errors():
    T = torus7()
    with pytest.raises(FiltrationError) as exc:
        build_filtration(T, {0: [0, 1]})
    assert exc.value.witness == (0, 1)
    with pytest.raises(FiltrationError, match="outside"):
        build_filtration(T, {1: [0]})
    S = suspend_filtered(trivial_filtration(octahedron())).complex
    with pytest.raises(FiltrationError, match="nested"):
        build_filtration(S, {0: [6], 1: [7]})
    with pytest.raises(FiltrationError, match="unknown"):
        build_filtration(T, {0: [99]})
    book = build_complex([[0, 1, 2], [0, 1, 3], [0, 1, 4]])
    with pytest.raises(FiltrationError, match="codimension-one") as exc:
        build_filtration(book, {})
    assert exc.value.witness == (0, 1)
    with pytest.raises(FiltrationError, match="pure"):
        build_filtration(build_complex([[0, 1, 2], [2, 3]]), {})


def test_declared_simplices_must_be_full():
    S = suspend_filtered(trivial_filtration(octahedron())).complex
    # 0 and 1 are antipodal, so the full subcomplex on {0, 1, 6} is the path 0-6-1
    with pytest.raises(FiltrationError, match="full") as exc:
        build_filtration(S, {1: [0, 1, 6]}, declared_simplices={1: [[0, 6], [1]]})
    assert exc.value.witness == (1, 6)
    X = build_filtration(S, {1: [0, 1, 6]}, declared_simplices={1: [[0, 6], [1, 6]]})
    assert X.skeleton(1).f_vector() == (3, 2)


def test_allowability_examples():
    D = catalog_filtration("disk_cone")
    zero = builtin_perversity("zero", 2)
    assert not simplex_allowable(D, zero, 1, (0, 3))
    assert simplex_allowable(D, zero, 1, (0, 1))
    assert simplex_allowable(D, zero, 2, (0, 1, 3))
    with pytest.raises(ValueError):
        simplex_allowable(D, zero, 2, (0, 1))


def test_allowable_simplices_examples():
    X = trivial_filtration(torus7())
    assert allowable_simplices(X, builtin_perversity("m", 2), 1) == list(X.complex.simplices(1))
    D = catalog_filtration("disk_cone")
    assert allowable_simplices(D, builtin_perversity("0", 2), 1) == [(0, 1), (0, 2), (1, 2)]
    ST = catalog_filtration("susp_torus")
    apexes = {7, 8}
    edges = allowable_simplices(ST, builtin_perversity("m", 3), 1)
    assert edges == [e for e in ST.complex.simplices(1) if not apexes & set(e)]


def test_ic_basis_trivial_filtration():
    X = trivial_filtration(torus7())
    for i in range(3):
        assert len(ic_basis(X, builtin_perversity("t", 2), i)) == X.complex.count(i)


@pytest.mark.parametrize("i, size", [(0, 3), (1, 3), (2, 1)])
def test_ic_basis_disk_cone(i, size):
    D = catalog_filtration("disk_cone")
    zero = builtin_perversity("0", 2)
    _, chains = brute_force_ic(D.complex.facets, {0: {3}}, zero, i)
    assert len(chains) == 2 ** size
    basis = ic_basis(D, zero, i)
    assert len(basis) == size
    if i == 2:
        assert basis[0].bits == 0b111


def test_ic_basis_matches_enumeration_pinched():
    P = catalog_filtration("pinched_torus")
    m = builtin_perversity("m", 2)
    for i in range(3):
        levels, chains = brute_force_ic(P.complex.facets, {0: {0}}, m, i)
        basis = ic_basis(P, m, i)
        assert 2 ** len(basis) == len(chains)
        index = {s: j for j, s in enumerate(levels[i])}
        for ch in chains[:200]:
            v = sum(1 << index[s] for s in ch)
            assert in_span(type(basis[0])(len(levels[i]), v), basis) if basis else v == 0


@pytest.mark.parametrize("name", ["disk_cone", "pinched_torus", "susp_torus", "susp_rp2"])
def test_ic_monotone_in_perversity(name):
    X = catalog_filtration(name)
    a = max(X.dim, 2)
    chain = [builtin_perversity(k, a) for k in ("0", "m", "n", "t")]
    for lo, hi in zip(chain, chain[1:]):
        for i in range(X.dim + 1):
            big = ic_basis(X, hi, i)
            assert all(in_span(v, big) for v in ic_basis(X, lo, i))


@pytest.mark.parametrize("name", ["disk_cone", "pinched_torus", "susp_torus", "susp_sphere2"])
def test_ic_is_subcomplex(name):
    X = catalog_filtration(name)
    K = X.complex
    p = builtin_perversity("m", max(X.dim, 2))
    for i in range(1, X.dim + 1):
        lower = ic_basis(X, p, i - 1)
        d = K.boundary_matrix(i)
        for xi in ic_basis(X, p, i):
            assert in_span(d.matvec(xi), lower)


def test_allowable_span_no_cancellation():
    X = catalog_filtration("susp_torus")
    p = builtin_perversity("n", 3)
    allowed = set(allowable_simplices(X, p, 2))
    for xi in ic_basis(X, p, 2):
        assert set(X.complex.support(2, xi.bits)) <= allowed


def test_stratum_links():
    ST = catalog_filtration("susp_torus")
    s0 = next(s for s in strata(ST) if s.index == 0)
    L = stratum_link(ST, s0, 0)
    assert relabel(L.complex)[0] == relabel(torus7())[0]
    assert L.is_trivial and L.dim == 3 - 0 - 1

    P = catalog_filtration("pinched_torus")
    sp = next(s for s in strata(P) if s.index == 0)
    LP = stratum_link(P, sp, 0)
    assert validate_pseudomanifold(LP.complex).kind == "closed"
    assert LP.complex.f_vector() == (6, 6)  # two disjoint triangles

    M = trivial_filtration(torus7())
    assert [s.codimension for s in strata(M)] == [0]


def test_stratum_without_representative():
    # X_1 is a lone vertex: that stratum has no 1-simplex
    S = suspend_filtered(trivial_filtration(octahedron()))
    X = build_filtration(S.complex, {1: [0]})
    s1 = next(s for s in strata(X) if s.index == 1)
    assert None in s1.representatives
    with pytest.raises(StratumLinkError, match="subdivision"):
        stratum_link(X, s1, s1.representatives.index(None))


def test_suspend_and_cone_filtered():
    S3 = suspend_filtered(trivial_filtration(octahedron()))
    assert S3.skeleta_dict() == {0: [6, 7]}
    assert validate_pseudomanifold(S3.complex).kind == "closed"
    C = cone_filtered(catalog_filtration("pinched_torus"))
    assert C.dim == 3
    assert C.skeleta_dict() == {0: [7], 1: [0, 7]}
    assert C.skeleton(1).dim == 1


def test_subdivide_filtered_induces_skeleta():
    P = catalog_filtration("pinched_torus")
    P2 = subdivide_filtered(P)
    assert len(P2.singular_vertices) == 1
    assert P2.complex.count(2) == 6 * P.complex.count(2)
    assert link(P2.complex, sorted(P2.singular_vertices)).count(0) == 12
