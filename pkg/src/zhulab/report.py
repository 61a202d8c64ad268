"""Deterministic report emission.

Rationals become "p/q" strings, keys are sorted and tuples become lists, so
two runs with the same configuration produce identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import List

from .linalg import Q, fmt_rational

SCHEMA_VERSION = 1


def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(x) for x in obj]
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, (Q, Fraction)):
        return fmt_rational(obj)
    if hasattr(obj, "as_dict"):
        return _plain(obj.as_dict())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def to_json(report: dict) -> str:
    body = dict(report)
    body.setdefault("schema", SCHEMA_VERSION)
    return json.dumps(_plain(body), sort_keys=True, indent=2) + "\n"


def dimension_rows(report: dict) -> List[List]:
    """Flatten every ``caps`` table (and ``*_by_weight`` list) into CSV rows.

    Plain graded dimension lists have no cap; their K column is left empty.
    """
    rows: List[List] = []

    def walk(node, path):
        if isinstance(node, dict):
            if "caps" in node and isinstance(node["caps"], list):
                for entry in node["caps"]:
                    for k, d in enumerate(entry["dims"]):
                        rows.append([path or "quotient", entry["K"], k, d])
            for key in sorted(node):
                val = node[key]
                if key.endswith("_by_weight") and isinstance(val, list) and all(isinstance(d, int) for d in val):
                    rows.extend([f"{path}.{key}" if path else key, "", k, d] for k, d in enumerate(val))
                    continue
                walk(val, f"{path}.{key}" if path else key)
        elif isinstance(node, list):
            for i, x in enumerate(node):
                walk(x, f"{path}[{i}]")

    walk(_plain(report), "")
    return rows


def to_csv(report: dict) -> str:
    rows = dimension_rows(report)
    if not rows:
        raise ValueError("report has no dimension table; CSV is limited to dimension tables")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["table", "K", "k", "dim"])
    w.writerows(rows)
    return buf.getvalue()


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return to_json(report)
    if fmt == "csv":
        return to_csv(report)
    raise ValueError(f"unknown format {fmt!r}")
