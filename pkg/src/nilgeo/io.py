"""Algebra files (JSON, UTF-8).

Format::

    {"dim_v": 6, "dim_z": 3,
     "j": [[["0", "1/2", ...], ...], ...],          # m row-major n x n matrices
     "lattice": {"M_scale": ["1", ...], "L_scale": ["1/2", ...]},   # optional
     "name": "..."}                                  # optional

Instead of ``"j"`` a file may give ``"brackets": [{"a": 0, "b": 1, "z": [...]}]``
(indices into the ``v`` basis); exactly one of the two keys must be present.
Rationals are strings ``"p"`` or ``"p/q"``; plain JSON integers are accepted too.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .algebra import AlgebraError, MetricTwoStepAlgebra, NonSkewError, from_structure_constants
from .exact import Matrix, fmt_q, parse_rational

_TOP_KEYS = {"dim_v", "dim_z", "j", "brackets", "lattice", "name", "v_labels", "z_labels"}


class SchemaError(ValueError):
    """Invalid algebra document; ``path`` is a JSON path like ``$.j[1][0][2]``."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message


def _int(doc, key: str, path: str) -> int:
    if key not in doc:
        raise SchemaError(path, f"missing required key {key!r}")
    value = doc[key]
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise SchemaError(f"{path}.{key}", "expected a non-negative integer")
    return value


def _rational(value: Any, path: str):
    if isinstance(value, bool):
        raise SchemaError(path, "expected a rational string 'p' or 'p/q'")
    if isinstance(value, int):
        return parse_rational(str(value))
    if not isinstance(value, str):
        raise SchemaError(path, "expected a rational string 'p' or 'p/q'")
    try:
        return parse_rational(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(path, f"invalid rational {value!r}: {exc}") from None


def _list(value: Any, path: str, length: int | None = None) -> list:
    if not isinstance(value, list):
        raise SchemaError(path, "expected an array")
    if length is not None and len(value) != length:
        raise SchemaError(path, f"expected {length} entries, got {len(value)}")
    return value


def _labels(doc, key: str, count: int):
    if key not in doc:
        return None
    items = _list(doc[key], f"$.{key}", count)
    for i, s in enumerate(items):
        if not isinstance(s, str):
            raise SchemaError(f"$.{key}[{i}]", "expected a string")
    return items


def algebra_from_dict(doc: Any, name: str | None = None) -> MetricTwoStepAlgebra:
    if not isinstance(doc, dict):
        raise SchemaError("$", "expected a JSON object")
    unknown = sorted(set(doc) - _TOP_KEYS)
    if unknown:
        raise SchemaError(f"$.{unknown[0]}", "unknown key")
    n = _int(doc, "dim_v", "$")
    m = _int(doc, "dim_z", "$")
    has_j, has_b = "j" in doc, "brackets" in doc
    if has_j == has_b:
        raise SchemaError("$", "exactly one of 'j' and 'brackets' must be present")
    name = doc.get("name", name)
    labels = {"v_labels": _labels(doc, "v_labels", n), "z_labels": _labels(doc, "z_labels", m)}
    if has_j:
        mats = []
        for k, mat in enumerate(_list(doc["j"], "$.j", m)):
            rows = _list(mat, f"$.j[{k}]", n)
            mats.append(Matrix(
                [[_rational(x, f"$.j[{k}][{a}][{b}]") for b, x in enumerate(_list(r, f"$.j[{k}][{a}]", n))]
                 for a, r in enumerate(rows)],
                n,
            ))
        try:
            return MetricTwoStepAlgebra(n, m, mats, name, **labels)
        except NonSkewError as exc:
            a, b = exc.entry
            raise SchemaError(f"$.j[{exc.index}][{a}][{b}]", str(exc)) from None
    triples = []
    for i, item in enumerate(_list(doc["brackets"], "$.brackets")):
        path = f"$.brackets[{i}]"
        if not isinstance(item, dict):
            raise SchemaError(path, "expected an object with keys 'a', 'b', 'z'")
        a, b = _int(item, "a", path), _int(item, "b", path)
        for key, idx in (("a", a), ("b", b)):
            if idx >= n:
                raise SchemaError(f"{path}.{key}", f"index {idx} out of range for dim_v={n}")
        if "z" not in item:
            raise SchemaError(path, "missing required key 'z'")
        z = [_rational(x, f"{path}.z[{t}]") for t, x in enumerate(_list(item["z"], f"{path}.z", m))]
        triples.append((a, b, z))
    try:
        return from_structure_constants(n, m, triples, name, **labels)
    except AlgebraError as exc:
        raise SchemaError("$.brackets", str(exc)) from None


def lattice_scales_from_dict(doc: Any, n: int, m: int) -> tuple[list | None, list | None]:
    """``(M_scale, L_scale)`` from the optional ``lattice`` key."""
    if not isinstance(doc, dict) or "lattice" not in doc:
        return None, None
    lat = doc["lattice"]
    if not isinstance(lat, dict):
        raise SchemaError("$.lattice", "expected an object")
    out = []
    for key, size in (("M_scale", n), ("L_scale", m)):
        if key not in lat:
            out.append(None)
            continue
        vals = [_rational(x, f"$.lattice.{key}[{i}]")
                for i, x in enumerate(_list(lat[key], f"$.lattice.{key}", size))]
        for i, v in enumerate(vals):
            if v == 0:
                raise SchemaError(f"$.lattice.{key}[{i}]", "scale must be nonzero")
        out.append(vals)
    return out[0], out[1]


def load_document(path: str | Path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SchemaError("$", f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def load_algebra(path: str | Path) -> MetricTwoStepAlgebra:
    return algebra_from_dict(load_document(path), Path(path).stem)


def algebra_to_dict(A: MetricTwoStepAlgebra, M_scale=None, L_scale=None) -> dict:
    doc: dict = {
        "dim_v": A.n,
        "dim_z": A.m,
        "j": [[[fmt_q(x) for x in row] for row in P.rows] for P in A.j_maps],
    }
    if A.name:
        doc["name"] = A.name
    doc["v_labels"], doc["z_labels"] = list(A.v_labels), list(A.z_labels)
    if M_scale is not None or L_scale is not None:
        doc["lattice"] = {}
        if M_scale is not None:
            doc["lattice"]["M_scale"] = [fmt_q(x) for x in M_scale]
        if L_scale is not None:
            doc["lattice"]["L_scale"] = [fmt_q(x) for x in L_scale]
    return doc


def save_algebra(A: MetricTwoStepAlgebra, path: str | Path, **lattice) -> None:
    Path(path).write_text(json.dumps(algebra_to_dict(A, **lattice), indent=2) + "\n", encoding="utf-8")
