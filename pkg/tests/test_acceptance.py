"""Acceptance criteria 1-10, each checked at its stated tolerance.

Run with ``pytest tests/test_acceptance.py -s`` to see one PASS/FAIL line
per criterion.
"""

import random
import time

import pytest

from ihtools.catalog import CATALOG_NAMES, catalog_filtration, rp2_6, torus7
from ihtools.characteristic import bordism_shadow_report, sw_homology_classes, top_sw_number
from ihtools.complexes import validate_pseudomanifold
from ihtools.homology import duality_check, ih, omega_rank, simplicial_homology, witt_check
from ihtools.linalg import MatrixF2, nullspace_basis, rank, span_dim
from ihtools.stratified import allowable_simplices, builtin_perversity, ic_basis, subdivide_filtered, trivial_filtration

pytestmark = pytest.mark.acceptance


def verdict(number, title, failures, elapsed=None, limit=None):
    if limit is not None and elapsed >= limit:
        failures.append(f"took {elapsed:.2f} s, limit {limit} s")
    timing = f" ({elapsed:.2f} s)" if elapsed is not None else ""
    state = "PASS" if not failures else "FAIL"
    print(f"\n[{state}] criterion {number}: {title}{timing}" + "".join(f"\n    {f}" for f in failures))
    assert not failures, failures


def expect(failures, label, got, want):
    if got != want:
        failures.append(f"{label}: expected {want!r}, got {got!r}")


def test_criterion_01_validation():
    failures = []
    t0 = time.perf_counter()
    for name in CATALOG_NAMES:
        want = "with_boundary" if name == "disk_cone" else "closed"
        expect(failures, name, validate_pseudomanifold(catalog_filtration(name).complex).kind, want)
    verdict(1, "pseudomanifold validation", failures, time.perf_counter() - t0, 1.0)


def test_criterion_02_ordinary_homology():
    failures = []
    t0 = time.perf_counter()
    for name, want in [("torus7", (1, 2, 1)), ("rp2_6", (1, 1, 1)), ("klein", (1, 2, 1)), ("sphere2", (1, 0, 1))]:
        expect(failures, name, simplicial_homology(catalog_filtration(name).complex).ranks, want)
    verdict(2, "ordinary homology over F2", failures, time.perf_counter() - t0, 1.0)


def test_criterion_03_allowability_core():
    failures = []
    D = catalog_filtration("disk_cone")
    zero = builtin_perversity("0", 2)
    apex = 3
    rim = [e for e in D.complex.simplices(1) if apex not in e]
    expect(failures, "allowable 1-simplices", allowable_simplices(D, zero, 1), rim)
    basis = ic_basis(D, zero, 2)
    expect(failures, "IC_2 basis size", len(basis), 1)
    n2 = D.complex.count(2)
    if basis:
        expect(failures, "IC_2 generator", basis[0].bits, (1 << n2) - 1)
    verdict(3, "allowability core on disk_cone", failures)


def test_criterion_04_intersection_homology():
    failures = []
    t0 = time.perf_counter()
    expect(failures, "pinched_torus m", ih(catalog_filtration("pinched_torus"), builtin_perversity("m", 2)).ranks, (1, 0, 1))
    ST = catalog_filtration("susp_torus")
    m = ih(ST, builtin_perversity("m", 3)).ranks
    expect(failures, "susp_torus m degrees 1,2", (m[1], m[2]), (2, 0))
    expect(failures, "susp_torus n degree 1", ih(ST, builtin_perversity("n", 3)).ranks[1], 0)
    verdict(4, "intersection homology", failures, time.perf_counter() - t0, 5.0)


def test_criterion_05_witt():
    failures = []
    for name in ("pinched_torus", "susp_sphere2"):
        expect(failures, f"{name} is_witt", witt_check(catalog_filtration(name)).is_witt, True)
    for name, r in (("susp_torus", 2), ("susp_rp2", 1)):
        w = witt_check(catalog_filtration(name))
        expect(failures, f"{name} is_witt", w.is_witt, False)
        expect(failures, f"{name} link ranks", sorted({e.link_rank for e in w.failures}), [r])
    verdict(5, "Witt verifier", failures)


def test_criterion_06_duality():
    failures = []
    for name in CATALOG_NAMES:
        X = catalog_filtration(name)
        if not validate_pseudomanifold(X.complex).is_closed or not witt_check(X).is_witt:
            continue
        d = duality_check(X)
        expect(failures, f"{name} duality", d.passed, True)
        expect(failures, f"{name} m/n agreement", d.middle_agreement, True)
    bad = duality_check(catalog_filtration("susp_torus"))
    expect(failures, "susp_torus passes", bad.passed, False)
    expect(failures, "susp_torus asymmetry at 1/2", (1, 2, 0) in bad.asymmetries, True)
    verdict(6, "duality property suite", failures)


def test_criterion_07_subdivision_invariance():
    failures = []
    t0 = time.perf_counter()
    for name in CATALOG_NAMES:
        X = catalog_filtration(name)
        X2 = subdivide_filtered(X)
        for kind in ("0", "m", "n", "t"):
            p = builtin_perversity(kind, max(X.dim, 2))
            expect(failures, f"{name} {kind}", ih(X2, p).ranks, ih(X, p).ranks)
    verdict(7, "subdivision invariance", failures, time.perf_counter() - t0, 60.0)


def test_criterion_08_omega():
    failures = []
    P = catalog_filtration("pinched_torus")
    m = builtin_perversity("m", 2)
    expect(failures, "pinched degree 1", omega_rank(P, m, 1), (0, 1, 0))
    expect(failures, "pinched degree 2", omega_rank(P, m, 2), (1, 1, 1))
    for name in ("sphere2", "torus7", "rp2_6", "klein"):
        X = catalog_filtration(name)
        h = simplicial_homology(X.complex).ranks
        for i in range(X.dim + 1):
            expect(failures, f"{name} degree {i}", omega_rank(X, m, i), (h[i], h[i], h[i]))
    verdict(8, "omega-map ranks", failures)


def test_criterion_09_bordism_shadow():
    failures = []
    expect(failures, "top number RP2", top_sw_number(rp2_6()), 1)
    expect(failures, "RP2 obstructed", bordism_shadow_report(rp2_6()).obstructed, True)
    expect(failures, "top number T2", top_sw_number(torus7()), 0)
    expect(failures, "T2 classes vanish", all(bordism_shadow_report(torus7()).class_vanishing), True)
    r = sw_homology_classes(rp2_6())
    expect(failures, "w1(RP2) cycle", r.is_cycle[1], True)
    expect(failures, "w1(RP2) boundary", r.vanishing[1], False)
    expect(failures, "w1(T2) boundary", sw_homology_classes(torus7()).vanishing[1], True)
    verdict(9, "bordism shadow", failures)


def _random_matrices(seed, count=500, max_size=200):
    rnd = random.Random(seed)
    for _ in range(count):
        r, c = rnd.randint(0, max_size), rnd.randint(0, max_size)
        density = rnd.random()
        rows = tuple(
            sum(1 << j for j in range(c) if rnd.random() < density) for _ in range(r)
        )
        yield MatrixF2(r, c, rows)


def test_criterion_10_linear_algebra():
    failures = []
    results = []
    for k, M in enumerate(_random_matrices(2024)):
        basis = nullspace_basis(M)
        r = rank(M)
        results.append((r, tuple(v.bits for v in basis)))
        if r + len(basis) != M.ncols:
            failures.append(f"matrix {k}: rank-nullity fails")
        if span_dim(basis) != len(basis):
            failures.append(f"matrix {k}: dependent nullspace basis")
        if any(M.matvec(v) for v in basis):
            failures.append(f"matrix {k}: basis vector not in kernel")
    again = [(rank(M), tuple(v.bits for v in nullspace_basis(M))) for M in _random_matrices(2024)]
    if again != results:
        failures.append("outputs differ between runs")
    verdict(10, "linear-algebra kernel properties (500 matrices)", failures)
