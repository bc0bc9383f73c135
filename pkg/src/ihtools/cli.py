"""Command line interface: ``ihtools <command> --space <name|path> ...``.

Exit codes: 0 ok/pass, 1 check failed, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, TextIO

from .catalog import CATALOG_NAMES, catalog
from .characteristic import bordism_shadow_report, sw_homology_classes
from .complexes import euler_characteristic, validate_pseudomanifold
from .homology import duality_check, ih, omega_rank, simplicial_homology, witt_check
from .spacefile import SpaceFile, parse_space_file, space_file_from
from .stratified import FilteredComplex, builtin_perversity, parse_perversity, subdivide_filtered

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

COMMANDS = ("validate", "homology", "ih", "witt", "duality", "sw", "subdivide", "catalog", "selftest")


class InputError(Exception):
    pass


def load_space(spec: str, lenient: bool = False) -> SpaceFile:
    if spec in CATALOG_NAMES:
        return catalog(spec)
    path = Path(spec)
    if not path.exists():
        raise InputError(f"{spec!r} is neither a catalog name ({', '.join(CATALOG_NAMES)}) nor a file")
    return parse_space_file(path.read_bytes(), lenient=lenient)


def _space(args) -> tuple[SpaceFile, FilteredComplex]:
    if not args.space:
        raise InputError("--space is required")
    sf = load_space(args.space, args.lenient)
    X = sf.filtration()
    if args.subdivide:
        X = subdivide_filtered(X, args.subdivide)
    return sf, X


def _emit(out: TextIO, args, report: dict[str, Any], lines: list[str]) -> None:
    if args.json:
        out.write(json.dumps(report, indent=1) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def cmd_validate(args, out) -> int:
    sf, X = _space(args)
    K = X.complex
    r = validate_pseudomanifold(K)
    report = {
        "name": sf.name, "kind": r.kind, "pure": r.is_pure, "f_vector": list(K.f_vector()),
        "euler": euler_characteristic(K), "boundary_facets": [list(s) for s in r.boundary_facets],
        "offending": [list(s) for s in r.offending_simplices], "skeleta": X.skeleta_dict(),
    }
    _emit(out, args, report, [
        f"space: {sf.name}",
        f"kind: {r.kind}",
        f"f-vector: {list(K.f_vector())}",
        f"euler characteristic: {report['euler']}",
        f"boundary facets: {len(r.boundary_facets)}",
    ])
    return EXIT_OK if r.kind != "not_pseudomanifold" else EXIT_FAIL


def cmd_homology(args, out) -> int:
    sf, X = _space(args)
    h = simplicial_homology(X.complex)
    report = {"name": sf.name, "ranks": list(h.ranks), "euler": euler_characteristic(X.complex)}
    _emit(out, args, report, [f"space: {sf.name}", f"H ranks: {list(h.ranks)}", f"euler characteristic: {report['euler']}"])
    return EXIT_OK


def cmd_ih(args, out) -> int:
    spec = args.perversity or "m"
    parse_perversity(spec, 0)
    sf, X = _space(args)
    p = parse_perversity(spec, max(X.dim, 2))
    h = ih(X, p)
    report = {"name": sf.name, "perversity": str(p), "perversity_values": list(p.values), "ranks": list(h.ranks)}
    lines = [f"space: {sf.name}", f"perversity: {p} {list(p.values)}", f"IH ranks: {list(h.ranks)}"]
    if args.degree is not None:
        if not 0 <= args.degree <= X.dim:
            raise InputError(f"--degree must be in 0..{X.dim}")
        ir, hr, mr = omega_rank(X, p, args.degree)
        report["omega"] = {"degree": args.degree, "ih_rank": ir, "h_rank": hr, "map_rank": mr}
        lines.append(f"omega map in degree {args.degree}: IH rank {ir}, H rank {hr}, image rank {mr}")
    _emit(out, args, report, lines)
    return EXIT_OK


def cmd_witt(args, out) -> int:
    sf, X = _space(args)
    w = witt_check(X)
    report = {
        "name": sf.name,
        "is_witt": w.is_witt,
        "entries": [
            {"stratum": e.stratum_index, "codimension": e.codimension, "component": e.component,
             "representative": list(e.representative), "degree": e.degree, "link_rank": e.link_rank,
             "link_f_vector": list(e.link_f_vector)}
            for e in w.entries
        ],
    }
    lines = [f"space: {sf.name}", f"witt: {'yes' if w.is_witt else 'no'}"]
    for e in w.entries:
        lines.append(
            f"  stratum X_{e.stratum_index} component {e.component} (codim {e.codimension}): "
            f"link rank IH_{e.degree}^n = {e.link_rank}"
        )
    if not w.entries:
        lines.append("  no odd-codimension strata")
    _emit(out, args, report, lines)
    return EXIT_FAIL if args.expect_witt and not w.is_witt else EXIT_OK


def cmd_duality(args, out) -> int:
    sf, X = _space(args)
    d = duality_check(X)
    report = {
        "name": sf.name, "pass": d.passed, "symmetric": d.symmetric, "middle_agreement": d.middle_agreement,
        "lower_middle_ranks": list(d.lower_ranks), "upper_middle_ranks": list(d.upper_ranks),
        "duality_pairs": [list(t) for t in d.duality_pairs],
    }
    lines = [
        f"space: {sf.name}",
        f"IH ranks (m): {list(d.lower_ranks)}",
        f"IH ranks (n): {list(d.upper_ranks)}",
        f"symmetric: {d.symmetric}",
        f"m/n agreement: {d.middle_agreement}",
        f"duality: {'pass' if d.passed else 'fail'}",
    ]
    for i, x, y in d.asymmetries:
        lines.append(f"  degree {i}: rank {x} vs degree {X.dim - i}: rank {y}")
    _emit(out, args, report, lines)
    return EXIT_OK if d.passed else EXIT_FAIL


def cmd_sw(args, out) -> int:
    sf, X = _space(args)
    K = X.complex
    classes = sw_homology_classes(K)
    b = bordism_shadow_report(K)
    report = {
        "name": sf.name, "top_number": b.top_number, "is_cycle": classes.is_cycle,
        "vanishing": classes.vanishing, "obstructed": b.obstructed, "verdict": b.verdict,
    }
    lines = [f"space: {sf.name}", f"top Stiefel-Whitney number: {b.top_number}"]
    for i, (cyc, van) in enumerate(zip(classes.is_cycle, classes.vanishing)):
        state = "not a cycle" if not cyc else ("boundary" if van else "nonzero")
        lines.append(f"  w_{i}: {state}")
    lines.append(f"verdict: {b.verdict}")
    _emit(out, args, report, lines)
    return EXIT_OK if not classes.non_cycles else EXIT_FAIL


def cmd_subdivide(args, out) -> int:
    n = args.subdivide or 1
    args.subdivide = 0
    sf, X = _space(args)
    X = subdivide_filtered(X, n)
    out.write(space_file_from(f"{sf.name}_sd{n}", X).to_json())
    return EXIT_OK


def cmd_catalog(args, out) -> int:
    name = args.name or args.space
    if not name:
        out.write("\n".join(CATALOG_NAMES) + "\n")
        return EXIT_OK
    try:
        out.write(catalog(name).to_json())
    except KeyError as exc:
        raise InputError(exc.args[0]) from None
    return EXIT_OK


def selftest_entry(name: str) -> list[str]:
    """Compare a catalog entry against its expected metadata; return mismatches."""
    sf = catalog(name)
    X = sf.filtration()
    K = X.complex
    exp = sf.metadata["expected"]
    a = max(K.dim, 2)
    got: dict[str, Any] = {
        "kind": validate_pseudomanifold(K).kind,
        "euler": euler_characteristic(K),
        "homology": list(simplicial_homology(K).ranks),
    }
    if "ih" in exp:
        got["ih"] = {p: list(ih(X, builtin_perversity(p, a)).ranks) for p in exp["ih"]}
    if "witt" in exp or "witt_link_rank" in exp:
        w = witt_check(X)
        got["witt"] = w.is_witt
        if "witt_link_rank" in exp:
            got["witt_link_rank"] = max((e.link_rank for e in w.entries), default=0)
    if "duality" in exp:
        got["duality"] = duality_check(X).passed
    if "top_sw" in exp:
        got["top_sw"] = euler_characteristic(K) % 2
    return [f"{name}.{k}: expected {v!r}, got {got.get(k)!r}" for k, v in exp.items() if got.get(k) != v]


def cmd_selftest(args, out) -> int:
    failures = []
    for name in CATALOG_NAMES:
        bad = selftest_entry(name)
        failures += bad
        if not args.json:
            out.write(f"{name}: {'ok' if not bad else 'FAIL'}\n")
    if args.json:
        out.write(json.dumps({"pass": not failures, "failures": failures}, indent=1) + "\n")
    else:
        for f in failures:
            out.write(f"  {f}\n")
        out.write(f"selftest: {'pass' if not failures else 'FAIL'}\n")
    return EXIT_OK if not failures else EXIT_FAIL


_HANDLERS = {
    "validate": cmd_validate, "homology": cmd_homology, "ih": cmd_ih, "witt": cmd_witt,
    "duality": cmd_duality, "sw": cmd_sw, "subdivide": cmd_subdivide, "catalog": cmd_catalog,
    "selftest": cmd_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ihtools", description="Intersection homology over GF(2).")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("name", nargs="?", help="catalog entry name (catalog command only)")
    parser.add_argument("--space", help="catalog name or path to a JSON space file")
    parser.add_argument("--perversity", help="0, t, m, n or comma list p(2),p(3),...")
    parser.add_argument("--degree", type=int)
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--subdivide", type=int, default=0, metavar="N")
    parser.add_argument("--expect-witt", action="store_true")
    parser.add_argument("--lenient", action="store_true", help="warn on unknown file fields instead of failing")
    return parser


def run(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.subdivide < 0:
        err.write("error: --subdivide must be non-negative\n")
        return EXIT_INPUT
    try:
        return _HANDLERS[args.command](args, out)
    except (InputError, ValueError, KeyError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        witness = getattr(exc, "witness", None)
        if witness is not None:
            msg += f" (witness simplex {list(witness)})"
        err.write(f"error: {msg}\n")
        return EXIT_INPUT


def main() -> None:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    sys.exit(run())


if __name__ == "__main__":
    main()
