"""JSON code-definition documents and deterministic report serialization.

Document layout::

    {"name": str, "n": int, "stabilizers": [str],
     "logical_pairs": [{"x": str, "z": str}],
     "expected": {"k": int, "d": int, "m": int}?, "metadata": {}?}
"""

from __future__ import annotations

import json
import math
from typing import Any

from .code import CodeParameters, StabilizerCode, build_code
from .errors import CodeFileError, GenusCodesError, PauliParseError
from .pauli import format_pauli, parse_pauli


def export_document(code: StabilizerCode) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "name": code.name,
        "n": code.n,
        "stabilizers": [format_pauli(g) for g in code.generators],
        "logical_pairs": [
            {"x": format_pauli(p.x_bar), "z": format_pauli(p.z_bar)} for p in code.logical_pairs
        ],
    }
    metadata = dict(code.metadata)
    if code.expected is not None:
        expected = {"k": code.expected.k, "d": code.expected.d}
        m = code.expected.m if code.expected.m is not None else code.ancilla_count
        if m is not None:
            expected["m"] = m
        if code.expected.p is not None:
            metadata["family_index"] = code.expected.p
        doc["expected"] = expected
    elif code.ancilla_count is not None:
        metadata["ancilla_count"] = code.ancilla_count
    if code.genus is not None:
        metadata = {"genus": code.genus, **metadata}
    if code.allow_anticommuting:
        metadata["allow_anticommuting"] = True
    if metadata:
        doc["metadata"] = metadata
    return doc


def export_code(code: StabilizerCode) -> str:
    return dumps(export_document(code))


def _require(doc: dict, key: str, kind: type | tuple[type, ...]) -> Any:
    if key not in doc:
        raise CodeFileError(f"missing field {key!r}")
    value = doc[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise CodeFileError(f"field {key!r} has wrong type {type(value).__name__}")
    return value


def import_document(doc: Any) -> StabilizerCode:
    if not isinstance(doc, dict):
        raise CodeFileError("document must be a JSON object")
    name = _require(doc, "name", str)
    n = _require(doc, "n", int)
    if n <= 0:
        raise CodeFileError(f"field 'n' must be positive, got {n}")
    stabs = _require(doc, "stabilizers", list)
    generators = []
    for i, text in enumerate(stabs):
        if not isinstance(text, str):
            raise CodeFileError(f"stabilizers[{i}] is not a string")
        try:
            generators.append(parse_pauli(text, n))
        except PauliParseError as exc:
            raise CodeFileError(f"stabilizers[{i}] ({text!r}): {exc}") from exc
    pairs = []
    for i, entry in enumerate(doc.get("logical_pairs", [])):
        if not isinstance(entry, dict) or set(entry) != {"x", "z"}:
            raise CodeFileError(f"logical_pairs[{i}] must be an object with keys 'x' and 'z'")
        try:
            pairs.append((parse_pauli(entry["x"], n), parse_pauli(entry["z"], n)))
        except (PauliParseError, TypeError) as exc:
            raise CodeFileError(f"logical_pairs[{i}]: {exc}") from exc
    metadata = dict(doc.get("metadata") or {})
    genus = metadata.pop("genus", None)
    ancilla_count = metadata.pop("ancilla_count", None)
    family_index = metadata.pop("family_index", None)
    allow_anticommuting = bool(metadata.pop("allow_anticommuting", False))
    expected = None
    if doc.get("expected") is not None:
        exp = doc["expected"]
        if not isinstance(exp, dict):
            raise CodeFileError("field 'expected' must be an object")
        try:
            expected = CodeParameters(
                n, _require(exp, "k", int), _require(exp, "d", int), exp.get("m"), family_index
            )
        except ValueError as exc:
            raise CodeFileError(f"expected: {exc}") from exc
        ancilla_count = exp.get("m")
    try:
        return build_code(
            name,
            n,
            generators,
            pairs,
            expected,
            ancilla_count=ancilla_count,
            genus=genus,
            metadata=metadata,
            allow_anticommuting=allow_anticommuting,
        )
    except GenusCodesError as exc:
        # keep the original class so callers can tell semantic failures apart
        exc.args = (f"{name}: {exc}",)
        raise


def import_code(text: str) -> StabilizerCode:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CodeFileError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return import_document(doc)


def _format_float(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        raise ValueError(f"cannot serialize {x} as JSON")
    text = format(x, ".17g")
    if "." not in text and "e" not in text and "n" not in text:
        text += ".0"
    return text


def _encode(obj: Any, indent: int, level: int) -> str:
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _format_float(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k), ensure_ascii=False)}: {_encode(v, indent, level + 1)}"
                 for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [pad + _encode(v, indent, level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if hasattr(obj, "item"):  # numpy scalars
        return _encode(obj.item(), indent, level)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any, indent: int = 2) -> str:
    """JSON text with floats at 17 significant digits; output is byte-stable."""
    return _encode(obj, indent, 0) + "\n"
