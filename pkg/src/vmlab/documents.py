"""JSON document shapes shared by the HTTP API, renderer, and export bundle.

Rationals are serialized as ``{"num": ..., "den": ...}`` objects, never as
floats.  Template documents are byte-stable: building one twice yields the
same bytes, so they can carry a strong cache validator.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict
from fractions import Fraction
from functools import lru_cache
from typing import Any

from vmlab.instruments import (
    Mark,
    decompose,
    geometry_template,
    moving_transform,
    reading_text,
    revolution_transform,
)
from vmlab.model import (
    ALL_KINDS,
    InstrumentKind,
    InstrumentSpec,
    TickPosition,
    decimal_string,
    default_spec,
    format_value,
)


def rational_doc(value: Fraction) -> dict[str, int]:
    return {"num": value.numerator, "den": value.denominator}


def mark_doc(mark: Mark) -> dict[str, Any]:
    return {
        "scale": mark.scale,
        "axis_pos": {"num": mark.axis_pos_num, "den": mark.axis_pos_den},
        "tier": mark.tier,
        "label": mark.label,
    }


def spec_doc(spec: InstrumentSpec) -> dict[str, Any]:
    return {
        "kind": spec.kind.value,
        "display_name": spec.kind.display_name,
        "dimension": spec.dimension,
        "least_count": rational_doc(spec.least_count),
        "least_count_display": rational_doc(spec.least_count_display),
        "range_max_ticks": spec.range_max_ticks,
        "main_division_ticks": spec.main_division_ticks,
        "display_unit": spec.display_unit.value,
        "display_decimals": spec.display_decimals,
        "vernier_divisions": spec.vernier_divisions,
        "divisions_per_revolution": spec.divisions_per_revolution,
    }


def template_doc(spec: InstrumentSpec) -> dict[str, Any]:
    geo = geometry_template(spec)
    return {
        "kind": spec.kind.value,
        "layout": geo.layout,
        "fixed_marks": [mark_doc(m) for m in geo.fixed_marks],
        "moving_marks": [mark_doc(m) for m in geo.moving_marks],
        "pointer": [mark_doc(m) for m in geo.pointer],
        "metadata": spec_doc(spec),
    }


def dump_bytes(doc: Any) -> bytes:
    """Canonical byte serialization used wherever stability matters."""
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=False).encode("utf-8")


@lru_cache(maxsize=None)
def template_bytes(kind: InstrumentKind) -> bytes:
    return dump_bytes(template_doc(default_spec(kind)))


@lru_cache(maxsize=None)
def template_etag(kind: InstrumentKind) -> str:
    return '"' + hashlib.sha256(template_bytes(kind)).hexdigest() + '"'


def reading_doc(spec: InstrumentSpec, ticks: TickPosition) -> dict[str, Any]:
    return {
        "kind": spec.kind.value,
        "ticks": ticks,
        "reading": asdict(decompose(spec, ticks)),
        "display_value": format_value(spec, ticks),
        "text": reading_text(spec, ticks),
    }


def pose_doc(spec: InstrumentSpec, ticks: TickPosition) -> dict[str, Any]:
    """Transform(s) placing the moving parts for a position.

    Contains the slide translation or main-hand rotation; for the dial it
    also carries the revolution-counter hand's rotation.
    """
    t = moving_transform(spec, ticks)
    unit = "degree" if t.kind == "rotation" else spec.display_unit.value
    doc: dict[str, Any] = {
        "kind": t.kind,
        "unit": unit,
        "amount": {"num": t.amount_num, "den": t.amount_den},
    }
    if spec.kind is InstrumentKind.DIAL_INDICATOR:
        r = revolution_transform(spec, ticks)
        doc["revolution_amount"] = {"num": r.amount_num, "den": r.amount_den}
    return doc


def catalog_doc() -> list[dict[str, Any]]:
    entries = []
    for kind in ALL_KINDS:
        spec = default_spec(kind)
        entries.append(
            {
                "kind": kind.value,
                "display_name": kind.display_name,
                "least_count": f"{decimal_string(spec.least_count_display)} {spec.display_unit.value}",
                "display_unit": spec.display_unit.value,
                "range_max_ticks": spec.range_max_ticks,
            }
        )
    return entries
