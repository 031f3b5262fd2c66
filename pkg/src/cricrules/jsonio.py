"""Canonical JSON encoding.

Identical payloads must serialize to identical bytes no matter which entry
point produced them, so this module emits JSON with sorted object keys and
floats formatted to 12 significant digits.
"""

from __future__ import annotations

import json
import math
from pathlib import Path


def format_float(value: float) -> str:
    if math.isnan(value) or math.isinf(value):
        raise ValueError("non-finite float in canonical JSON payload")
    return format(float(value), ".12g")


def _emit(value, out: list[str]) -> None:
    if value is None:
        out.append("null")
    elif value is True:
        out.append("true")
    elif value is False:
        out.append("false")
    elif isinstance(value, int):
        out.append(str(value))
    elif isinstance(value, float):
        out.append(format_float(value))
    elif isinstance(value, str):
        out.append(json.dumps(value, ensure_ascii=True))
    elif isinstance(value, (list, tuple)):
        out.append("[")
        for i, item in enumerate(value):
            if i:
                out.append(", ")
            _emit(item, out)
        out.append("]")
    elif isinstance(value, dict):
        out.append("{")
        for i, key in enumerate(sorted(value)):
            if not isinstance(key, str):
                raise TypeError(f"non-string object key {key!r}")
            if i:
                out.append(", ")
            out.append(json.dumps(key, ensure_ascii=True))
            out.append(": ")
            _emit(value[key], out)
        out.append("}")
    else:
        raise TypeError(f"unsupported type {type(value).__name__} in JSON payload")


def dumps_canonical(payload) -> str:
    out: list[str] = []
    _emit(payload, out)
    return "".join(out)


def canonical_bytes(payload) -> bytes:
    """Serialized payload plus trailing newline, as written to files and HTTP bodies."""
    return (dumps_canonical(payload) + "\n").encode("utf-8")


def write_canonical(path: str | Path, payload) -> None:
    Path(path).write_bytes(canonical_bytes(payload))
