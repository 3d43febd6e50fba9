"""Check reports and the fixed-format JSON writer used for every report."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np


@dataclass(frozen=True)
class CheckReport:
    passed: bool
    max_deviation: float
    argmax_xi: float | None
    params: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed

    def to_dict(self) -> dict:
        return {
            "pass": bool(self.passed),
            "max_deviation": float(self.max_deviation),
            "argmax_xi": None if self.argmax_xi is None else float(self.argmax_xi),
            "params": dict(self.params),
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())


def argmax_first(dev) -> int:
    """Index of the maximum, taking the earliest entry among rounding-level ties."""
    dev = np.asarray(dev)
    top = float(np.max(dev))
    return int(np.flatnonzero(dev >= top - 64 * np.finfo(float).eps * max(top, 1.0))[0])


def format_float(x: float) -> str:
    x = float(x)
    if math.isnan(x) or math.isinf(x):
        # not representable in strict JSON
        return "null"
    if x == 0.0:
        return "0.0" if math.copysign(1.0, x) > 0 else "-0.0"
    return "%.17g" % x


def dumps(obj: Any, indent: int = 2, _level: int = 0) -> str:
    """Serialize to JSON with floats fixed at 17 significant digits.

    Dict keys keep insertion order, so equal inputs give byte-identical text.
    Lists of scalars are written on one line to keep coefficient tables
    readable.
    """
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if obj is None:
        return "null"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        seq = list(obj)
        if not seq:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple, np.ndarray)) for v in seq):
            return "[" + ", ".join(dumps(v, indent, _level + 1) for v in seq) + "]"
        rows = [f"{pad}{dumps(v, indent, _level + 1)}" for v in seq]
        return "[\n" + ",\n".join(rows) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")
