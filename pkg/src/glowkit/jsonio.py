"""Deterministic JSON emission shared by the report writers and the CLI.

Floats are rendered by ``repr`` (shortest round-trip form), so identical
inputs always produce byte-identical documents. Non-finite floats are not
valid strict JSON; they are emitted as the strings "inf", "-inf", "nan".
"""

from __future__ import annotations

import json
import math
from typing import Any


def sanitize(obj: Any) -> Any:
    """Recursively replace non-finite floats with their string spellings."""
    if isinstance(obj, float):
        if math.isfinite(obj):
            return obj
        if math.isnan(obj):
            return "nan"
        return "inf" if obj > 0 else "-inf"
    if isinstance(obj, dict):
        return {key: sanitize(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [sanitize(item) for item in obj]
    return obj


def dumps(obj: Any) -> str:
    """Serialize with a fixed layout; key order follows insertion order."""
    return json.dumps(sanitize(obj), indent=2, allow_nan=False) + "\n"


def parse_float(value: Any) -> float:
    """Inverse of :func:`sanitize` for scalar floats."""
    if isinstance(value, str):
        return float(value)
    return float(value)
