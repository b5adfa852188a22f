"""Reading and writing the on-disk formats: Young-function specs, CSV data.

A Young-function spec is a JSON object, e.g.::

    {"kind": "piecewise", "L": 0.6931471805599453,
     "slope_rule": {"type": "geometric", "limit": 2.0, "deficit": 1.0, "ratio": 0.5}}
    {"kind": "power", "c": 0.25, "p": 3}
    {"kind": "analytic", "name": "sinh"}

Slope lists are written ``{"type": "list", "values": [...], "limit": M}``.
"""

import csv
import json
import math
from pathlib import Path

from .dirlimit import YoungLadder, constant_ladder, default_ladder
from .orlicz import DiscreteMeasure, SampledFunction
from .youngfn import (
    LN2,
    AnalyticCharacteristic,
    GeometricSlopes,
    ListSlopes,
    MulhollandPiecewise,
    PiecewiseCharacteristic,
    Power,
)

__all__ = [
    "SpecError",
    "parse_young",
    "load_young",
    "dump_young",
    "load_measure",
    "parse_sequence",
    "load_sequence",
    "load_ladder",
    "write_csv",
]


class SpecError(ValueError):
    """Malformed input file; the message names the file, field and line."""


def _where(source, path, line=None):
    loc = f"{source}" if source else "<spec>"
    if line is not None:
        loc += f":{line}"
    return f"{loc}: field '{path}'" if path else loc


def _number(obj, key, path, source, positive=False):
    path = f"{path}.{key}" if path else key
    if key not in obj:
        raise SpecError(f"{_where(source, path)}: missing")
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
        raise SpecError(f"{_where(source, path)}: expected a finite number, got {v!r}")
    if positive and not v > 0:
        raise SpecError(f"{_where(source, path)}: must be positive, got {v!r}")
    return float(v)


def _slopes(rule, source):
    if not isinstance(rule, dict):
        raise SpecError(f"{_where(source, 'slope_rule')}: expected an object")
    kind = rule.get("type")
    if kind == "geometric":
        args = [_number(rule, k, "slope_rule", source) for k in ("limit", "deficit", "ratio")]
        try:
            return GeometricSlopes(*args)
        except ValueError as exc:
            raise SpecError(f"{_where(source, 'slope_rule')}: {exc}") from None
    if kind == "list":
        vals = rule.get("values")
        if not isinstance(vals, list) or not vals:
            raise SpecError(f"{_where(source, 'slope_rule.values')}: expected a non-empty list")
        for i, v in enumerate(vals):
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise SpecError(f"{_where(source, f'slope_rule.values[{i}]')}: not a number: {v!r}")
        vals = list(vals)
        if "limit" in rule:
            limit = _number(rule, "limit", "slope_rule", source)
            if limit < vals[-1]:
                raise SpecError(f"{_where(source, 'slope_rule.limit')}: "
                                f"limit {limit} is below the last slope {vals[-1]}")
            if limit != vals[-1]:
                vals.append(limit)
        try:
            return ListSlopes(tuple(vals))
        except ValueError as exc:
            raise SpecError(f"{_where(source, 'slope_rule.values')}: {exc}") from None
    raise SpecError(f"{_where(source, 'slope_rule.type')}: "
                    f"expected 'geometric' or 'list', got {kind!r}")


def parse_young(obj, source=None):
    """Build a Young function from an already-decoded spec object."""
    if not isinstance(obj, dict):
        raise SpecError(f"{_where(source, '')}: top level must be an object")
    kind = obj.get("kind")
    if kind == "piecewise":
        length = _number(obj, "L", "", source, positive=True) if "L" in obj else LN2
        return MulhollandPiecewise(PiecewiseCharacteristic(_slopes(obj.get("slope_rule"), source),
                                                           length))
    if kind == "power":
        c = _number(obj, "c", "", source, positive=True)
        p = _number(obj, "p", "", source)
        if p < 1.0:
            raise SpecError(f"{_where(source, 'p')}: exponent must be >= 1, got {p}")
        return Power(c, p)
    if kind == "analytic":
        try:
            return AnalyticCharacteristic(str(obj.get("name")))
        except ValueError as exc:
            raise SpecError(f"{_where(source, 'name')}: {exc}") from None
    raise SpecError(f"{_where(source, 'kind')}: expected 'piecewise', 'power' or 'analytic', "
                    f"got {kind!r}")


def load_young(path):
    """Read a spec file; JSON syntax errors report their line and column."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SpecError(f"{path}: cannot read ({exc.strerror})") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    try:
        return parse_young(obj, source=str(path))
    except SpecError as exc:
        raise SpecError(_with_line(str(exc), str(path), text)) from None


def _with_line(msg, source, text):
    # point at the first line mentioning the offending key
    prefix = f"{source}: field '"
    if not msg.startswith(prefix):
        return msg
    field_path = msg[len(prefix):msg.index("'", len(prefix))]
    key = field_path.split(".")[-1].split("[")[0]
    for lineno, line in enumerate(text.splitlines(), start=1):
        if f'"{key}"' in line:
            return f"{source}:{lineno}: field '{msg[len(prefix):]}"
    return msg


def dump_young(phi):
    """Inverse of :func:`parse_young` for the types it produces."""
    if isinstance(phi, Power):
        return {"kind": "power", "c": phi.c, "p": phi.p}
    if isinstance(phi, AnalyticCharacteristic):
        return {"kind": "analytic", "name": phi.name}
    if isinstance(phi, MulhollandPiecewise):
        rule = phi.chi.slopes
        if isinstance(rule, GeometricSlopes):
            body = {"type": "geometric", "limit": rule.limit, "deficit": rule.deficit,
                    "ratio": rule.ratio}
        elif isinstance(rule, ListSlopes):
            body = {"type": "list", "values": list(rule.values), "limit": rule.limit}
        else:
            raise TypeError("callable slope rules have no file form")
        return {"kind": "piecewise", "L": phi.chi.segment_length, "slope_rule": body}
    raise TypeError(f"cannot serialise {type(phi).__name__}")


def _rows(path):
    path = Path(path)
    try:
        with path.open(newline="") as fh:
            rows = list(csv.reader(fh))
    except OSError as exc:
        raise SpecError(f"{path}: cannot read ({exc.strerror})") from None
    out = []
    for lineno, row in enumerate(rows, start=1):
        cells = [c.strip() for c in row]
        if not any(cells) or cells[0].startswith("#"):
            continue
        try:
            out.append((lineno, [float(c) for c in cells]))
        except ValueError:
            if not out and lineno == 1:
                continue  # header
            raise SpecError(f"{path}:{lineno}: non-numeric cell in {row!r}") from None
    return out


def load_measure(path):
    """Read ``weight,value`` rows, or ``weight,f,g`` rows for a pair of functions.

    Returns ``(measure, [functions])`` with one or two functions.
    """
    rows = _rows(path)
    if not rows:
        raise SpecError(f"{path}: no data rows")
    width = len(rows[0][1])
    if width not in (2, 3):
        raise SpecError(f"{path}:{rows[0][0]}: expected 2 or 3 columns, got {width}")
    for lineno, r in rows:
        if len(r) != width:
            raise SpecError(f"{path}:{lineno}: expected {width} columns, got {len(r)}")
        if not (r[0] > 0.0 and math.isfinite(r[0])):
            raise SpecError(f"{path}:{lineno}: weight must be positive and finite, got {r[0]}")
    mu = DiscreteMeasure(tuple(r[0] for _, r in rows))
    funcs = [SampledFunction(tuple(r[j] for _, r in rows)) for j in range(1, width)]
    return mu, funcs


def parse_sequence(text):
    """Inline list such as ``"1, 0.5, 0, 2"``."""
    try:
        vals = [float(c) for c in text.replace(";", ",").split(",") if c.strip()]
    except ValueError:
        raise SpecError(f"sequence {text!r}: entries must be numbers") from None
    if not vals:
        raise SpecError("sequence is empty")
    return vals


def load_sequence(path):
    """First data row of a CSV file."""
    rows = _rows(path)
    if not rows:
        raise SpecError(f"{path}: no data rows")
    return rows[0][1]


def load_ladder(name_or_path):
    """``"interpolation"`` (default), or a JSON file.

    The file holds ``{"ladder": "interpolation"}``, ``{"ladder": "constant",
    "young": <spec>}``, or ``{"levels": [<spec>, ...]}`` whose last level repeats.
    """
    if name_or_path in (None, "interpolation", "default"):
        return default_ladder()
    path = Path(name_or_path)
    if not path.exists():
        raise SpecError(f"unknown ladder {name_or_path!r}: not a ladder name or a file")
    try:
        obj = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(obj, dict):
        raise SpecError(f"{path}: top level must be an object")
    if "levels" in obj:
        levels = obj["levels"]
        if not isinstance(levels, list) or not levels:
            raise SpecError(f"{_where(path, 'levels')}: expected a non-empty list")
        phis = [parse_young(spec, source=f"{path} levels[{i}]") for i, spec in enumerate(levels)]
        return YoungLadder(lambda r: phis[min(r, len(phis)) - 1], name=str(path))
    kind = obj.get("ladder")
    if kind == "interpolation":
        return default_ladder()
    if kind == "constant":
        return constant_ladder(parse_young(obj.get("young"), source=f"{path} young"))
    raise SpecError(f"{_where(path, 'ladder')}: expected 'interpolation' or 'constant', got {kind!r}")


def write_csv(path, header, rows):
    """Write rows with full float precision (``repr``)."""
    with Path(path).open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        for row in rows:
            w.writerow([repr(float(v)) for v in row])
