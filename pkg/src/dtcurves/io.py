"""Canonical JSON files with schema tags.

Writers sort keys and use a fixed layout so equal inputs give equal bytes.
Readers reject a schema tag they do not know; a missing tag is accepted and
read as the expected kind.
"""
from __future__ import annotations

import json
import os
from fractions import Fraction
from pathlib import Path

from .dt_coords import DTVector
from .intersection_map import IV_SCHEMA, IntersectionVector
from .pl_cones import COMPLEX_SCHEMA
from .surface_datum import DATUM_SCHEMA, CoordinateDatum, generate_standard_datum

DT_SCHEMA = "dtcurves.dt/1"
CONES_SCHEMA = "dtcurves.cones/1"
REPORT_SCHEMA = "dtcurves.report/1"
CENSUS_SCHEMA = "dtcurves.census/1"
PRODUCT_SCHEMA = "dtcurves.product/1"

KNOWN = {DATUM_SCHEMA, DT_SCHEMA, IV_SCHEMA, CONES_SCHEMA, COMPLEX_SCHEMA, REPORT_SCHEMA, CENSUS_SCHEMA,
         PRODUCT_SCHEMA}


class SchemaError(ValueError):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, default=_default) + "\n"


def _default(x):
    if isinstance(x, Fraction):
        return str(x)
    if hasattr(x, "item"):  # numpy scalars
        return x.item()
    raise TypeError(f"cannot serialize {type(x).__name__}")


def check_schema(obj, expected: str):
    tag = obj.get("schema", expected) if isinstance(obj, dict) else None
    if tag is None:
        raise SchemaError(f"expected a JSON object tagged {expected!r}")
    if tag != expected:
        hint = "unknown schema" if tag not in KNOWN else f"expected {expected!r}"
        raise SchemaError(f"{hint}: {tag!r}")
    return obj


def read_json(source: str):
    """Parse a file path, or inline JSON when ``source`` starts with '{'."""
    text = source if source.lstrip().startswith("{") else Path(source).read_text()
    return json.loads(text)


def write_text(path, text: str):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    return path


def output_dir(explicit=None) -> Path:
    """DTCURVES_OUT wins over the command-line value, which wins over cwd."""
    return Path(os.environ.get("DTCURVES_OUT") or explicit or ".")


def _enc(xs):
    return [x if isinstance(x, int) else str(x) for x in xs]


def dt_to_json_obj(v: DTVector) -> dict:
    return {"schema": DT_SCHEMA, "n": _enc(v.n), "t": _enc(v.t)}


def dt_from_json_obj(o) -> DTVector:
    check_schema(o, DT_SCHEMA)
    return DTVector(tuple(o["n"]), tuple(o["t"]))


def iota_from_json_obj(o) -> IntersectionVector:
    check_schema(o, IV_SCHEMA)
    return IntersectionVector(tuple(o["n"]), tuple(o["nprime"]), tuple(o["ndprime"]))


def datum_from_json_obj(o) -> CoordinateDatum:
    check_schema(o, DATUM_SCHEMA)
    return CoordinateDatum.from_pants(o["genus"], [tuple(p) for p in o["pants"]])


def load_datum(spec: str) -> CoordinateDatum:
    """``chain:2`` / ``handles:3`` generate a standard datum; anything else is a file."""
    if ":" in spec and not Path(spec).exists():
        style, genus = spec.split(":", 1)
        return generate_standard_datum(int(genus), style)
    return datum_from_json_obj(read_json(spec))
