"""JSON space files: a named complex with optional skeleta and metadata."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from typing import Any

import jsonschema

from .complexes import SimplicialComplex, build_complex
from .stratified import FilteredComplex, build_filtration

__all__ = ["FORMAT_VERSION", "SpaceFile", "SpaceFileError", "parse_space_file", "space_file_from"]

log = logging.getLogger(__name__)

FORMAT_VERSION = 1

_KNOWN_FIELDS = {"format", "name", "dimension", "facets", "skeleta", "metadata"}

SCHEMA = {
    "type": "object",
    "required": ["name", "dimension", "facets"],
    "properties": {
        "format": {"const": FORMAT_VERSION},
        "name": {"type": "string"},
        "dimension": {"type": "integer", "minimum": 0},
        "facets": {
            "type": "array",
            "minItems": 1,
            "items": {"type": "array", "minItems": 1, "items": {"type": "integer", "minimum": 0}},
        },
        "skeleta": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["dim", "vertices"],
                "additionalProperties": False,
                "properties": {
                    "dim": {"type": "integer", "minimum": 0},
                    "vertices": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                },
            },
        },
        "metadata": {"type": "object"},
    },
}


class SpaceFileError(ValueError):
    pass


@dataclass
class SpaceFile:
    name: str
    dimension: int
    facets: list[list[int]]
    skeleta: list[dict[str, Any]] | None = None
    metadata: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "format": FORMAT_VERSION,
            "name": self.name,
            "dimension": self.dimension,
            "facets": self.facets,
        }
        if self.skeleta is not None:
            out["skeleta"] = self.skeleta
        if self.metadata:
            out["metadata"] = self.metadata
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1, sort_keys=False) + "\n"

    def complex(self) -> SimplicialComplex:
        return build_complex(self.facets)

    def filtration(self) -> FilteredComplex:
        """The declared filtration; trivial when no skeleta are given."""
        K = self.complex()
        return build_filtration(K, {s["dim"]: s["vertices"] for s in self.skeleta or []})


def _path(err: jsonschema.ValidationError) -> str:
    parts = "".join(f"[{p}]" if isinstance(p, int) else f".{p}" for p in err.absolute_path)
    return "$" + parts


def parse_space_file(data: bytes | str, lenient: bool = False) -> SpaceFile:
    """Parse and validate a space file.

    Facets are canonicalized (sorted within and across).  Unknown top-level
    fields are an error unless ``lenient``, in which case they are dropped
    with a warning.  Raises SpaceFileError on any schema or content problem;
    filtration problems surface as FiltrationError from ``filtration()``.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SpaceFileError(f"space file is not UTF-8: {exc}") from None
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise SpaceFileError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise SpaceFileError("$: expected a JSON object")
    unknown = sorted(set(doc) - _KNOWN_FIELDS)
    if unknown:
        if not lenient:
            raise SpaceFileError(f"$: unknown fields {unknown}")
        log.warning("ignoring unknown fields %s", unknown)
        doc = {k: v for k, v in doc.items() if k in _KNOWN_FIELDS}
    try:
        jsonschema.validate(doc, SCHEMA)
    except jsonschema.ValidationError as exc:
        raise SpaceFileError(f"{_path(exc)}: {exc.message}") from None

    facets = []
    for j, f in enumerate(doc["facets"]):
        if len(set(f)) != len(f):
            raise SpaceFileError(f"$.facets[{j}]: repeated vertex in {f}")
        facets.append(sorted(f))
    facets.sort()

    skeleta = doc.get("skeleta")
    if skeleta is not None:
        dims = [s["dim"] for s in skeleta]
        if any(b <= a for a, b in zip(dims, dims[1:])):
            raise SpaceFileError("$.skeleta: dims must be strictly increasing")
        if dims and dims[-1] > doc["dimension"] - 2:
            raise SpaceFileError(f"$.skeleta: dim {dims[-1]} exceeds dimension - 2 = {doc['dimension'] - 2}")
        skeleta = [{"dim": s["dim"], "vertices": sorted(set(s["vertices"]))} for s in skeleta]

    sf = SpaceFile(doc["name"], doc["dimension"], facets, skeleta, doc.get("metadata", {}))
    actual = sf.complex().dim
    if actual != sf.dimension:
        raise SpaceFileError(f"$.dimension: declared {sf.dimension}, facets give {actual}")
    return sf


def space_file_from(name: str, X: FilteredComplex | SimplicialComplex, metadata: dict | None = None) -> SpaceFile:
    if isinstance(X, SimplicialComplex):
        K, skel = X, None
    else:
        K = X.complex
        skel = [{"dim": k, "vertices": vs} for k, vs in X.skeleta_dict().items()]
    return SpaceFile(name, K.dim, [list(f) for f in K.facets], skel, dict(metadata or {}))
