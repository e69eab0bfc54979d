"""Serialization of algebras and degree-2 cochains.

The algebra file is a JSON document:

    {"name": str, "kind": "lie"|"assoc-comm", "field": "Q"|"Qi",
     "dim": int, "basis": [labels...],      # optional
     "constants": [[i, j, k, coeff], ...]}

with 1-based indices, only i < j rows for Lie kind (i <= j for
assoc-comm), coefficients "p/q" over Q and {"re": "p/q", "im": "p/q"}
over Qi.  Emission is canonical: sorted keys, sorted index triples,
lowest-terms coefficients, two-space indent, trailing newline; parsing a
canonical file and emitting it again reproduces it byte for byte.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Union

from . import scalars
from .algebra import ASSOC_COMM, KINDS, LIE, Algebra
from .cohomology import ChevalleyCochain

Source = Union[str, Path]


class AlgebraFileError(ValueError):
    """Schema violation with a location-carrying message."""


def _fail(where: str, msg: str):
    raise AlgebraFileError(f"{where}: {msg}")


def _read_document(source) -> tuple[str, str]:
    if hasattr(source, "read"):
        return source.read(), getattr(source, "name", "<stream>")
    if source == "-":
        return sys.stdin.read(), "<stdin>"
    path = Path(source)
    try:
        return path.read_text(), str(path)
    except OSError as exc:
        raise AlgebraFileError(f"{path}: {exc}") from exc


def algebra_from_dict(doc, where: str = "<doc>") -> Algebra:
    if not isinstance(doc, dict):
        _fail(where, "top-level JSON value must be an object")
    unknown = set(doc) - {"name", "kind", "field", "dim", "basis", "constants"}
    if unknown:
        _fail(where, f"unknown keys {sorted(unknown)}")
    for key in ("name", "kind", "field", "dim", "constants"):
        if key not in doc:
            _fail(where, f"missing key {key!r}")
    name, kind, field, dim = doc["name"], doc["kind"], doc["field"], doc["dim"]
    if not isinstance(name, str):
        _fail(f"{where}.name", "must be a string")
    if kind not in KINDS:
        _fail(f"{where}.kind", f"must be one of {list(KINDS)}")
    if field not in scalars.FIELDS:
        _fail(f"{where}.field", f"must be one of {list(scalars.FIELDS)}")
    if not isinstance(dim, int) or dim < 1:
        _fail(f"{where}.dim", "must be a positive integer")
    basis = doc.get("basis")
    if basis is not None:
        if (not isinstance(basis, list) or len(basis) != dim
                or not all(isinstance(b, str) for b in basis)):
            _fail(f"{where}.basis", f"must be a list of {dim} labels")
    if not isinstance(doc["constants"], list):
        _fail(f"{where}.constants", "must be a list")

    products: dict = {}
    seen = set()
    for pos, row in enumerate(doc["constants"]):
        loc = f"{where}.constants[{pos}]"
        if not isinstance(row, list) or len(row) != 4:
            _fail(loc, "each entry must be [i, j, k, coeff]")
        i, j, k, coeff = row
        for label, idx in (("i", i), ("j", j), ("k", k)):
            if not isinstance(idx, int) or not 1 <= idx <= dim:
                _fail(loc, f"index {label}={idx!r} out of range 1..{dim}")
        if kind == LIE and i >= j:
            _fail(loc, f"lower-triangular entry ({i},{j}) not permitted for lie")
        if kind == ASSOC_COMM and i > j:
            _fail(loc, f"entry ({i},{j}) must have i <= j for assoc-comm")
        if (i, j, k) in seen:
            _fail(loc, f"duplicate key ({i},{j},{k})")
        seen.add((i, j, k))
        try:
            value = scalars.scalar_from_json(field, coeff)
        except scalars.ScalarError as exc:
            _fail(loc, str(exc))
        vec = products.setdefault((i, j), [scalars.zero(field)] * dim)
        vec[k - 1] = value
    return Algebra(name, kind, field, dim,
                   {key: tuple(vec) for key, vec in products.items()},
                   basis_labels=basis)


def algebra_to_dict(alg: Algebra, basis=None) -> dict:
    constants = []
    for (i, j), vec in sorted(alg.table.items()):
        for k, c in enumerate(vec, start=1):
            if c != 0:
                constants.append([i, j, k, scalars.scalar_to_json(alg.field, c)])
    doc = {
        "name": alg.name,
        "kind": alg.kind,
        "field": alg.field,
        "dim": alg.dim,
        "constants": constants,
    }
    if basis is None:
        basis = alg.basis_labels
    if basis is not None:
        doc["basis"] = list(basis)
    return doc


def emit_algebra(alg: Algebra, basis=None) -> str:
    return json.dumps(algebra_to_dict(alg, basis), indent=2, sort_keys=True) + "\n"


def parse_algebra_file(source) -> Algebra:
    text, where = _read_document(source)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraFileError(f"{where}: invalid JSON ({exc})") from exc
    return algebra_from_dict(doc, where)


def write_algebra_file(alg: Algebra, target, basis=None) -> None:
    text = emit_algebra(alg, basis)
    if hasattr(target, "write"):
        target.write(text)
    elif target == "-":
        sys.stdout.write(text)
    else:
        Path(target).write_text(text)


# -- degree-2 cochain files (used by the deform command) --------------------

def cochain_from_dict(doc, where: str = "<doc>") -> ChevalleyCochain:
    if not isinstance(doc, dict):
        _fail(where, "top-level JSON value must be an object")
    unknown = set(doc) - {"name", "field", "dim", "degree", "entries"}
    if unknown:
        _fail(where, f"unknown keys {sorted(unknown)}")
    for key in ("field", "dim", "entries"):
        if key not in doc:
            _fail(where, f"missing key {key!r}")
    field, dim = doc["field"], doc["dim"]
    if field not in scalars.FIELDS:
        _fail(f"{where}.field", f"must be one of {list(scalars.FIELDS)}")
    if not isinstance(dim, int) or dim < 1:
        _fail(f"{where}.dim", "must be a positive integer")
    if doc.get("degree", 2) != 2:
        _fail(f"{where}.degree", "only degree-2 cochains are supported")
    data: dict = {}
    for pos, row in enumerate(doc["entries"]):
        loc = f"{where}.entries[{pos}]"
        if not isinstance(row, list) or len(row) != 4:
            _fail(loc, "each entry must be [i, j, k, coeff]")
        i, j, k, coeff = row
        for label, idx in (("i", i), ("j", j), ("k", k)):
            if not isinstance(idx, int) or not 1 <= idx <= dim:
                _fail(loc, f"index {label}={idx!r} out of range 1..{dim}")
        if i >= j:
            _fail(loc, f"entry ({i},{j}) must have i < j (alternating cochain)")
        try:
            value = scalars.scalar_from_json(field, coeff)
        except scalars.ScalarError as exc:
            _fail(loc, str(exc))
        vec = data.setdefault((i, j), [scalars.zero(field)] * dim)
        if vec[k - 1] != 0:
            _fail(loc, f"duplicate key ({i},{j},{k})")
        vec[k - 1] = value
    return ChevalleyCochain(2, dim, {k: tuple(v) for k, v in data.items()})


def parse_cochain_file(source) -> ChevalleyCochain:
    text, where = _read_document(source)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraFileError(f"{where}: invalid JSON ({exc})") from exc
    return cochain_from_dict(doc, where)
