"""Report serialization: JSON, CSV (RFC 4180), and human-readable text.

Output is deterministic for a fixed payload: field order is fixed by the
dataclasses, floats are rounded to 15 significant digits, and timing can be
replaced by a stable placeholder for byte-for-byte comparisons.
"""

from __future__ import annotations

import csv
import dataclasses
import enum
import io
import json
from typing import Any

from .bounds import CrossoverResult, Verdict
from .conjectures import ConjectureReport, DWitness, TrendRow
from .exponent_solver import ExponentSolution
from .gaps import GapRecord
from .panaitopol import CoefficientTable, PiApproxResult

TIMING_PLACEHOLDER = 0.0


def _round15(v: float) -> float:
    return float(f"{v:.15g}")


def to_jsonable(obj: Any) -> Any:
    if isinstance(obj, float):
        return _round15(obj)
    if isinstance(obj, enum.Enum):
        return obj.value
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {
            f.name: to_jsonable(getattr(obj, f.name))
            for f in dataclasses.fields(obj)
        }
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return obj


def strip_timing(payload: Any) -> Any:
    if isinstance(payload, ConjectureReport):
        payload = dataclasses.replace(payload, duration=TIMING_PLACEHOLDER)
    return payload


def to_json(payload: Any) -> str:
    return json.dumps(to_jsonable(payload), indent=2) + "\n"


_CSV_VIOLATION_HEADER = [
    "conjecture_id", "range", "checked_count", "skipped_count",
    "status", "duration", "witness",
]


def to_csv(payload: Any) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if isinstance(payload, ConjectureReport):
        w.writerow(_CSV_VIOLATION_HEADER)
        base = [
            payload.conjecture_id, payload.range, payload.checked_count,
            payload.skipped_count, payload.status.value,
            _round15(payload.duration),
        ]
        if payload.violations:
            for v in payload.violations:
                w.writerow(base + [" ".join(str(x) for x in v)])
        else:
            w.writerow(base + [""])
    elif isinstance(payload, list) and payload and isinstance(payload[0], PiApproxResult):
        w.writerow(["x", "terms", "approx", "exact", "rel_error"])
        for r in payload:
            w.writerow([r.x, r.terms, _round15(r.approx), r.exact,
                        _round15(r.rel_error)])
    elif isinstance(payload, list) and payload and isinstance(payload[0], TrendRow):
        w.writerow(["window_index", "first_n", "last_n", "mean", "min", "max"])
        for r in payload:
            w.writerow([r.window_index, r.first_n, r.last_n,
                        _round15(r.mean), _round15(r.min), _round15(r.max)])
    elif isinstance(payload, CrossoverResult):
        w.writerow(["predicate_id", "threshold", "verified_through",
                    "pre_threshold_failure"])
        w.writerow([payload.predicate_id, payload.threshold,
                    payload.verified_through,
                    "" if payload.pre_threshold_failure is None
                    else payload.pre_threshold_failure])
    elif isinstance(payload, ExponentSolution):
        w.writerow(["p", "q", "x", "residual", "iterations"])
        w.writerow([payload.p, payload.q, _round15(payload.x),
                    _round15(payload.residual), payload.iterations])
    elif isinstance(payload, CoefficientTable):
        w.writerow(["index", "k"])
        for i, k in enumerate(payload.k, start=1):
            w.writerow([i, k])
    elif isinstance(payload, Verdict):
        w.writerow(["status", "margin", "precision_used", "witness"])
        w.writerow([payload.status.value, _round15(payload.margin),
                    payload.precision_used.value,
                    "" if payload.witness is None
                    else " ".join(str(x) for x in payload.witness)])
    elif isinstance(payload, DWitness):
        w.writerow(["n", "p", "q", "value", "threshold"])
        w.writerow([payload.n, payload.p, payload.q, _round15(payload.value),
                    _round15(payload.threshold)])
    else:
        raise TypeError(f"no CSV layout for {type(payload).__name__}")
    return buf.getvalue()


def to_text(payload: Any) -> str:
    lines: list[str] = []
    if isinstance(payload, ConjectureReport):
        lines.append(f"{payload.conjecture_id}: {payload.status.value}")
        lines.append(f"  range:   {payload.range}")
        lines.append(f"  checked: {payload.checked_count}"
                     + (f" (skipped {payload.skipped_count})"
                        if payload.skipped_count else ""))
        for v in payload.violations[:20]:
            lines.append(f"  violation: {v}")
        if len(payload.violations) > 20:
            lines.append(f"  ... {len(payload.violations) - 20} more")
        for key, val in payload.extremes.items():
            if isinstance(val, GapRecord):
                val = f"(n={val.n}, p={val.p}, q={val.q})"
            lines.append(f"  {key}: {val}")
        lines.append(f"  duration: {_round15(payload.duration):.6g} s")
    elif isinstance(payload, CrossoverResult):
        lines.append(f"{payload.predicate_id}: holds from "
                     f"{payload.threshold} through {payload.verified_through}")
        if payload.pre_threshold_failure is not None:
            lines.append(f"  last failure below threshold: "
                         f"{payload.pre_threshold_failure}")
    elif isinstance(payload, ExponentSolution):
        lines.append(f"pair ({payload.p}, {payload.q}): "
                     f"x = {_round15(payload.x):.15g} "
                     f"(residual {payload.residual:.3g}, "
                     f"{payload.iterations} iterations)")
    elif isinstance(payload, CoefficientTable):
        for i, k in enumerate(payload.k, start=1):
            lines.append(f"k_{i} = {k}")
    elif isinstance(payload, Verdict):
        lines.append(f"{payload.status.value} "
                     f"(margin {_round15(payload.margin):.15g}, "
                     f"{payload.precision_used.value} precision)")
        if payload.witness is not None:
            lines.append(f"  witness: {payload.witness}")
    elif isinstance(payload, DWitness):
        lines.append(f"counterexample at n = {payload.n}: pair "
                     f"({payload.p}, {payload.q}), value "
                     f"{_round15(payload.value):.15g} >= 1/{payload.n}")
    elif isinstance(payload, list):
        for row in payload:
            lines.append(json.dumps(to_jsonable(row)))
    else:
        lines.append(str(to_jsonable(payload)))
    return "\n".join(lines) + "\n"


def serialize(payload: Any, fmt: str, no_timing: bool = False) -> str:
    if no_timing:
        payload = strip_timing(payload)
    if fmt == "json":
        return to_json(payload)
    if fmt == "csv":
        return to_csv(payload)
    if fmt == "text":
        return to_text(payload)
    raise ValueError(f"unknown format {fmt!r}")
