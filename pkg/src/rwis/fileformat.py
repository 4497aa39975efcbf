"""Versioned JSON instance files.

One file holds one instance.  The schema is documented in docs/format.md and
frozen by golden-file tests; the writer is canonical (sorted keys, two-space
indent, trailing newline) so identical instances serialize to identical bytes.
"""

from __future__ import annotations

import json
from pathlib import Path

from .core import IntervalFamily
from .errors import ParseError, ValidationError
from .scenarios import DiscreteScenarioSet, Instance, IntervalUncertainty

FORMAT_VERSION = 1

_TOP_LEVEL_FIELDS = {
    "format_version",
    "scaling_factor",
    "intervals",
    "uncertainty",
    "metadata",
}


def _require_int(value, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValidationError(f"{what} must be an integer, got {value!r}")
    return value


def _require_int_list(value, what: str) -> list[int]:
    if not isinstance(value, list):
        raise ValidationError(f"{what} must be a list, got {type(value).__name__}")
    return [_require_int(x, f"{what} entry") for x in value]


def instance_to_dict(instance: Instance) -> dict:
    """Plain-data form of an instance, ready for json.dump."""
    doc: dict = {
        "format_version": FORMAT_VERSION,
        "scaling_factor": instance.scaling_factor,
        "intervals": [[iv.lo, iv.hi] for iv in instance.family.intervals],
    }
    if isinstance(instance.uncertainty, DiscreteScenarioSet):
        doc["uncertainty"] = {
            "type": "discrete",
            "scenarios": [list(s) for s in instance.uncertainty.scenarios],
        }
    else:
        doc["uncertainty"] = {
            "type": "interval",
            "lower": list(instance.uncertainty.lower),
            "upper": list(instance.uncertainty.upper),
        }
    if instance.metadata:
        doc["metadata"] = instance.metadata
    return doc


def instance_from_dict(doc: dict) -> Instance:
    """Validate a plain-data document and build the instance it describes."""
    if not isinstance(doc, dict):
        raise ValidationError(f"instance document must be an object, got {type(doc).__name__}")
    unknown = set(doc) - _TOP_LEVEL_FIELDS
    if unknown:
        raise ValidationError(f"unknown top-level fields: {sorted(unknown)}")
    for required in ("format_version", "scaling_factor", "intervals", "uncertainty"):
        if required not in doc:
            raise ValidationError(f"missing required field {required!r}")
    version = _require_int(doc["format_version"], "format_version")
    if version != FORMAT_VERSION:
        raise ValidationError(f"unsupported format_version {version}, expected {FORMAT_VERSION}")
    scaling = _require_int(doc["scaling_factor"], "scaling_factor")
    if scaling < 1:
        raise ValidationError(f"scaling_factor must be a positive integer, got {scaling}")
    raw_intervals = doc["intervals"]
    if not isinstance(raw_intervals, list):
        raise ValidationError("intervals must be a list of [lo, hi] pairs")
    pairs = []
    for idx, item in enumerate(raw_intervals, start=1):
        entry = _require_int_list(item, f"interval {idx}")
        if len(entry) != 2:
            raise ValidationError(f"interval {idx} must be a [lo, hi] pair, got {item!r}")
        pairs.append((entry[0], entry[1]))
    family = IntervalFamily.from_pairs(pairs)
    unc = doc["uncertainty"]
    if not isinstance(unc, dict) or "type" not in unc:
        raise ValidationError("uncertainty must be an object with a 'type' field")
    kind = unc["type"]
    if kind == "discrete":
        extra = set(unc) - {"type", "scenarios"}
        if extra:
            raise ValidationError(f"unknown uncertainty fields: {sorted(extra)}")
        rows = unc.get("scenarios")
        if not isinstance(rows, list) or not rows:
            raise ValidationError("discrete uncertainty needs a non-empty scenarios list")
        uncertainty: DiscreteScenarioSet | IntervalUncertainty = DiscreteScenarioSet(
            tuple(tuple(_require_int_list(r, "scenario")) for r in rows)
        )
    elif kind == "interval":
        extra = set(unc) - {"type", "lower", "upper"}
        if extra:
            raise ValidationError(f"unknown uncertainty fields: {sorted(extra)}")
        if "lower" not in unc or "upper" not in unc:
            raise ValidationError("interval uncertainty needs 'lower' and 'upper' lists")
        uncertainty = IntervalUncertainty(
            tuple(_require_int_list(unc["lower"], "lower")),
            tuple(_require_int_list(unc["upper"], "upper")),
        )
    else:
        raise ValidationError(f"unknown uncertainty type {kind!r}")
    metadata = doc.get("metadata", {})
    if not isinstance(metadata, dict):
        raise ValidationError("metadata must be an object")
    return Instance(
        family=family,
        uncertainty=uncertainty,
        scaling_factor=scaling,
        metadata=metadata,
    )


def parse_instance_text(text: str, source: str = "<string>") -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    return instance_from_dict(doc)


def parse_instance(path: str | Path) -> Instance:
    """Read and validate an instance file."""
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {p}: {exc}") from None
    return parse_instance_text(text, source=str(p))


def dumps_instance(instance: Instance) -> str:
    """Canonical byte-stable serialization."""
    return json.dumps(instance_to_dict(instance), indent=2, sort_keys=True) + "\n"


def write_instance(instance: Instance, path: str | Path) -> None:
    Path(path).write_text(dumps_instance(instance), encoding="utf-8")
