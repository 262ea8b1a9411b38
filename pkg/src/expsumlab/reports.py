"""Deterministic report emission.

JSON documents are split into a "meta" section (timestamp, artifact version,
anything run-dependent) and a "payload" section that is a pure function of
the configuration and seed, so re-runs can be compared byte for byte on the
payload alone.  CSV bodies carry no timestamps; when written to a file they
get a sibling <name>.meta.json with the same meta document.
"""

from __future__ import annotations

import dataclasses
import json
import sys
from datetime import datetime, timezone
from fractions import Fraction

import numpy as np

from ._version import __version__


def jsonable(obj):
    """Recursively convert report objects into JSON-serializable values."""
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, float):
        return obj
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.complexfloating):
        return {"re": float(obj.real), "im": float(obj.imag)}
    if isinstance(obj, np.ndarray):
        return [jsonable(v) for v in obj.tolist()]
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {
            f.name: jsonable(getattr(obj, f.name))
            for f in dataclasses.fields(obj)
        }
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return repr(obj)


def payload_text(payload):
    """Canonical byte-stable rendering of a payload (determinism checks)."""
    return json.dumps(jsonable(payload), sort_keys=True, indent=2)


def make_meta(extra=None):
    meta = {
        "generated_at": datetime.now(timezone.utc).isoformat(),
        "artifact_version": __version__,
    }
    if extra:
        meta.update(extra)
    return meta


def render_json(payload, meta_extra=None):
    doc = {"meta": make_meta(meta_extra), "payload": jsonable(payload)}
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def emit_json(payload, out=None, meta_extra=None):
    text = render_json(payload, meta_extra)
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)
    return text


def render_csv(header, rows):
    return "\n".join([header, *rows]) + "\n"


def emit_csv(header, rows, out=None, meta_extra=None):
    text = render_csv(header, rows)
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)
        with open(str(out) + ".meta.json", "w") as fh:
            json.dump(make_meta(meta_extra), fh, sort_keys=True, indent=2)
            fh.write("\n")
    return text
