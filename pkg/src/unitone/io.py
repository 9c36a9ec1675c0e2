"""On-disk formats: JSON field containers, CSV exports, record sidecars.

The field container is plain JSON: grid metadata plus the complex values as
a flat row-major list of (re, im) pairs.  CSV exports carry one sample per
row with columns (x, omega_or_t, re, im, abs).  Bound-profile CSVs spell
empty-column sentinels as "+inf" / "-inf".
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .errors import ConfigError
from .evolve import ModelSpec, SimRecord
from .fields import AxisGrid, SpaceFreqField, SpaceTimeField
from .support import BoundProfile

_FIELD_FORMAT = "field-container-v1"
_RECORD_FORMAT = "sim-record-v1"


def _grid_doc(g: AxisGrid) -> dict:
    return {"origin": g.origin, "step": g.step, "count": g.count}


def _grid_from(doc: dict) -> AxisGrid:
    return AxisGrid(float(doc["origin"]), float(doc["step"]), int(doc["count"]))


def _values_doc(values: np.ndarray) -> list:
    flat = values.ravel()
    out = np.empty(2 * flat.size)
    out[0::2] = flat.real
    out[1::2] = flat.imag
    return out.tolist()


def _values_from(doc: list, shape: tuple[int, int]) -> np.ndarray:
    arr = np.asarray(doc, dtype=float)
    return (arr[0::2] + 1j * arr[1::2]).reshape(shape)


def field_to_doc(f: SpaceTimeField | SpaceFreqField) -> dict:
    if isinstance(f, SpaceTimeField):
        kind, axis = "space_time", "tgrid"
        second = f.tgrid
    else:
        kind, axis = "space_freq", "wgrid"
        second = f.wgrid
    return {
        "format": _FIELD_FORMAT,
        "kind": kind,
        "xgrid": _grid_doc(f.xgrid),
        axis: _grid_doc(second),
        "values_re_im": _values_doc(f.values),
    }


def field_from_doc(doc: dict) -> SpaceTimeField | SpaceFreqField:
    if doc.get("format") != _FIELD_FORMAT:
        raise ConfigError(f"not a field container: format={doc.get('format')!r}")
    xg = _grid_from(doc["xgrid"])
    if doc["kind"] == "space_time":
        tg = _grid_from(doc["tgrid"])
        return SpaceTimeField(xg, tg, _values_from(doc["values_re_im"], (xg.count, tg.count)))
    if doc["kind"] == "space_freq":
        wg = _grid_from(doc["wgrid"])
        return SpaceFreqField(xg, wg, _values_from(doc["values_re_im"], (xg.count, wg.count)))
    raise ConfigError(f"unknown field kind {doc['kind']!r}")


def save_field(f: SpaceTimeField | SpaceFreqField, path: str | Path):
    Path(path).write_text(json.dumps(field_to_doc(f)))


def load_field(path: str | Path) -> SpaceTimeField | SpaceFreqField:
    return field_from_doc(json.loads(Path(path).read_text()))


def field_to_csv(f: SpaceTimeField | SpaceFreqField, path: str | Path):
    second = f.tgrid if isinstance(f, SpaceTimeField) else f.wgrid
    label = "t" if isinstance(f, SpaceTimeField) else "omega"
    xs = f.xgrid.coordinates
    ys = second.coordinates
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["x", label, "re", "im", "abs"])
        for i in range(f.xgrid.count):
            for j in range(second.count):
                v = f.values[i, j]
                w.writerow(
                    [
                        repr(float(xs[i])),
                        repr(float(ys[j])),
                        repr(float(v.real)),
                        repr(float(v.imag)),
                        repr(float(abs(v))),
                    ]
                )


def profile_to_csv(p: BoundProfile, path: str | Path):
    xs = p.xgrid.coordinates
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["x", "value"])
        for i in range(p.xgrid.count):
            v = p.values[i]
            if np.isposinf(v):
                cell = "+inf"
            elif np.isneginf(v):
                cell = "-inf"
            else:
                cell = repr(float(v))
            w.writerow([repr(float(xs[i])), cell])


def _model_doc(model: ModelSpec) -> dict:
    from . import config  # deferred: config imports this module

    return config.model_to_doc(model)


def save_record(record: SimRecord, path: str | Path) -> Path:
    """Write the snapshot field container plus a sidecar with the invariant
    trace.  `path` is the container path; the sidecar sits next to it with
    the suffix .invariants.json.  Returns the sidecar path."""
    path = Path(path)
    doc = {
        "format": _RECORD_FORMAT,
        "model": _model_doc(record.model),
        "field": field_to_doc(record.snapshots),
        "snapshot_times": record.snapshot_times.tolist(),
    }
    path.write_text(json.dumps(doc))
    sidecar = path.with_suffix(".invariants.json")
    sidecar.write_text(
        json.dumps(
            {
                "invariant": record.invariant_name,
                "times": record.snapshot_times.tolist(),
                "trace": record.invariant_trace.tolist(),
            }
        )
    )
    return sidecar


def load_record(path: str | Path) -> SimRecord:
    from . import config

    path = Path(path)
    doc = json.loads(path.read_text())
    if doc.get("format") != _RECORD_FORMAT:
        raise ConfigError(f"not a simulation record: format={doc.get('format')!r}")
    field = field_from_doc(doc["field"])
    model = config.model_from_doc(doc["model"])
    sidecar = path.with_suffix(".invariants.json")
    side = json.loads(sidecar.read_text())
    return SimRecord(
        model=model,
        snapshots=field,
        snapshot_times=np.asarray(doc["snapshot_times"]),
        invariant_name=side["invariant"],
        invariant_trace=np.asarray(side["trace"]),
    )
