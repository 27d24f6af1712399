"""Stable serialization helpers for the command line interface.

JSON output is canonical: keys sorted, two-space indent, non-finite
floats replaced by None before encoding.  Parsing a canonical string
and re-encoding it reproduces it byte for byte.  CSV output always
uses '.' as the decimal separator via Python float repr.
"""

import json
import math

__all__ = ["canonical_json", "clean", "csv_text"]


def clean(obj):
    """Recursively replace non-finite floats by None for JSON transport."""
    if type(obj).__module__ == "numpy":
        obj = obj.item()
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else None
    if isinstance(obj, dict):
        return {k: clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [clean(v) for v in obj]
    return obj


def canonical_json(payload):
    return json.dumps(clean(payload), sort_keys=True, indent=2, allow_nan=False)


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(float(value))
    return str(value)


def csv_text(header, rows):
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_cell(v) for v in row))
    return "\n".join(lines)
