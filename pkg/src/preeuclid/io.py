"""Problem files in, deterministic JSON reports out.

A problem file is a JSON object::

    {
      "schema": 1,
      "field": "rational" | "gaussian_rational",
      "basis": ["e1", "e2", ...],
      "gram": [[...], ...],          # gram[i][j] = <basis[i], basis[j]>
      "operator": [[...], ...],      # operator[r][c] = coeff of basis[r] in f(basis[c])
      "new_basis": {                 # optional, used by `compare`
        "labels": ["w1", ...],
        "transition": [[...], ...]   # column c = new vector c in old coordinates
      }
    }

Scalars are strings ``"INT"`` or ``"INT/POSINT"``; Gaussian rationals are
objects ``{"re": "...", "im": "..."}``.  Numbers are never read as JSON
numbers, so no float can sneak in.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping

import jsonschema

from .decompose import Component, Decomposition, VerificationReport
from .equivalence import ComparisonReport
from .errors import DomainError, InputError, JSONSyntaxError, ScalarParseError, SchemaError
from .graph import AssocGraph, Partition
from .matrix import Matrix
from .scalar import Field, scalar_format, scalar_parse
from .structure import StructureSpec, load_space

SCHEMA_VERSION = 1

_SCALAR = {
    "oneOf": [
        {"type": "string"},
        {"type": "object",
         "properties": {"re": {"type": "string"}, "im": {"type": "string"}},
         "additionalProperties": False},
    ]
}
_MATRIX = {"type": "array", "items": {"type": "array", "items": _SCALAR}}
_LABELS = {"type": "array", "minItems": 1, "items": {"type": "string", "minLength": 1}}

PROBLEM_SCHEMA = {
    "type": "object",
    "required": ["field", "basis", "gram", "operator"],
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "description": {"type": "string"},
        "field": {"enum": [f.value for f in Field]},
        "basis": _LABELS,
        "gram": _MATRIX,
        "operator": _MATRIX,
        "new_basis": {
            "type": "object",
            "required": ["labels", "transition"],
            "properties": {"labels": _LABELS, "transition": _MATRIX},
            "additionalProperties": False,
        },
    },
    "additionalProperties": False,
}


@dataclass(frozen=True)
class BasisChange:
    labels: tuple[str, ...]
    transition: Matrix


def _path(parts) -> str:
    out = ""
    for p in parts:
        out += f"[{p}]" if isinstance(p, int) else (f".{p}" if out else str(p))
    return out


def _parse_matrix(rows: list, n: int, field: Field, name: str) -> Matrix:
    if len(rows) != n:
        raise SchemaError(name, f"expected {n} rows to match the basis, got {len(rows)}")
    entries = []
    for r, row in enumerate(rows):
        if len(row) != n:
            raise SchemaError(f"{name}[{r}]", f"expected {n} entries, got {len(row)}")
        for c, lit in enumerate(row):
            where = f"{name}[{r}][{c}]"
            try:
                entries.append(scalar_parse(lit, field))
            except ScalarParseError as exc:
                raise ScalarParseError(exc.text, exc.offset, exc.reason, where) from None
            except DomainError as exc:
                raise DomainError(f"{where}: {exc}") from None
    return Matrix(n, n, entries, field)


def parse_problem_data(data: Any) -> tuple[StructureSpec, BasisChange | None]:
    try:
        jsonschema.validate(data, PROBLEM_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise SchemaError(_path(exc.absolute_path), exc.message) from None
    field = Field(data["field"])
    n = len(data["basis"])
    gram = _parse_matrix(data["gram"], n, field, "gram")
    op = _parse_matrix(data["operator"], n, field, "operator")
    spec = load_space({"field": field, "basis": data["basis"], "gram": gram, "operator": op})
    change = None
    if "new_basis" in data:
        nb = data["new_basis"]
        if len(nb["labels"]) != n:
            raise SchemaError("new_basis.labels", f"expected {n} labels, got {len(nb['labels'])}")
        if len(set(nb["labels"])) != n:
            raise SchemaError("new_basis.labels", "labels must be distinct")
        change = BasisChange(tuple(nb["labels"]),
                             _parse_matrix(nb["transition"], n, field, "new_basis.transition"))
    return spec, change


def parse_problem(path: str | Path) -> tuple[StructureSpec, BasisChange | None]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise JSONSyntaxError(str(path), exc.lineno, exc.colno, exc.msg) from None
    return parse_problem_data(data)


def matrix_to_json(m: Matrix) -> list[list[Any]]:
    return [[scalar_format(e) for e in row] for row in m]


def problem_to_json(spec: StructureSpec, change: BasisChange | None = None,
                    description: str | None = None) -> dict[str, Any]:
    out: dict[str, Any] = {
        "schema": SCHEMA_VERSION,
        "field": spec.field.value,
        "basis": list(spec.labels),
        "gram": matrix_to_json(spec.gram),
        "operator": matrix_to_json(spec.op),
    }
    if description:
        out["description"] = description
    if change is not None:
        out["new_basis"] = {"labels": list(change.labels),
                            "transition": matrix_to_json(change.transition)}
    return out


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def graph_to_json(g: AssocGraph, components: Partition, connected: bool) -> dict[str, Any]:
    return {
        "basis": list(g.labels),
        "edges": [{"source": g.labels[i], "target": g.labels[j], "provenance": p.value}
                  for (i, j), p in g.provenance.items()],
        "edge_count": len(g.edges),
        "components": components.labelled(g.labels),
        "connected": connected,
    }


def verification_to_json(report: VerificationReport) -> dict[str, Any]:
    return {
        "passed": report.passed,
        "checks": [{"name": c.name, "passed": c.passed, "witness": c.witness}
                   for c in report.checks],
    }


def decomposition_to_json(d: Decomposition) -> dict[str, Any]:
    return {
        "field": d.source.field.value,
        "basis": list(d.source.labels),
        "components": [
            {
                "basis": list(c.labels),
                "indices": list(c.index_set),
                "gram": matrix_to_json(c.block_gram),
                "operator": matrix_to_json(c.block_op),
                "summand": matrix_to_json(c.summand),
            }
            for c in d.components
        ],
    }


def decomposition_from_json(spec: StructureSpec, data: Mapping[str, Any]) -> Decomposition:
    """Rebuild a :class:`Decomposition` from its report, entries taken verbatim."""
    comps = []
    for k, c in enumerate(data["components"]):
        idx = tuple(spec.index(lab) for lab in c["basis"])
        size = len(idx)
        where = f"components[{k}]"
        comps.append(Component(
            idx, tuple(c["basis"]),
            _parse_matrix(c["gram"], size, spec.field, f"{where}.gram"),
            _parse_matrix(c["operator"], size, spec.field, f"{where}.operator"),
            _parse_matrix(c["summand"], spec.n, spec.field, f"{where}.summand"),
        ))
    return Decomposition(tuple(comps), spec)


def _mapping(seq, src: StructureSpec, dst: StructureSpec) -> dict[str, str] | None:
    if seq is None:
        return None
    return {src.labels[i]: dst.labels[j] for i, j in enumerate(seq)}


def comparison_to_json(r: ComparisonReport) -> dict[str, Any]:
    return {
        "old_basis": list(r.old.labels),
        "new_basis": list(r.new.labels),
        "new_gram": matrix_to_json(r.new.gram),
        "new_operator": matrix_to_json(r.new.op),
        "graphs_isomorphic": r.graphs_isomorphic,
        "isomorphism": _mapping(r.isomorphism, r.old, r.new),
        "f_equivalence": _mapping(r.f_equivalence, r.old, r.new),
        "witness_matrix": None if r.witness_matrix is None else matrix_to_json(r.witness_matrix),
        "component_map": None if r.component_map is None else list(r.component_map),
        "signatures": {"old": list(r.signature_old), "new": list(r.signature_new)},
        "verdict": r.verdict.value,
    }
