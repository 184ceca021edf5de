"""Versioned JSON schemas for configurations and artifacts, plus the diagram cache.

Every document carries a ``schema`` tag. Unknown fields are rejected.
Rationals are written as strings (``"3/2"``) so round trips are exact.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable

from .errors import ConfigError
from .lattice import BlowupPoint, Fan, ToricModel
from .scattering import ScatteringDiagram, Wall
from .series import SeriesContext, TruncatedSeries

CACHE_VERSION = 1

SCHEMAS = {
    "toric-model/1": {
        "required": {"fan", "divisor_areas"},
        "optional": {"blowups", "sphere_units", "ray_labels", "stop", "order_cap"},
    },
    "diagram/1": {"required": {"order_cap", "labels", "walls"}, "optional": {"weights"}},
    "fixed-data/1": {"required": {"skew_form", "d"}, "optional": set()},
    "dp5-params/1": {
        "required": set(),
        "optional": {"a", "b", "c", "a_prime", "b_prime", "a_dprime", "b_dprime", "t_numeric", "chamber", "order_cap"},
    },
    "tropical-chain/1": {"required": {"fano_fan", "chain", "points"}, "optional": {"stop", "max_leaves"}},
    "broken-lines/1": {"required": {"labels", "lines"}, "optional": {"stop"}},
}


def q(x) -> Fraction:
    """Parse an int, a decimal string or an ``"a/b"`` string as an exact rational."""
    if isinstance(x, bool):
        raise ConfigError(f"expected a number, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x).limit_denominator(10**12)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except ValueError:
            raise ConfigError(f"not a rational number: {x!r}") from None
    raise ConfigError(f"expected a number, got {x!r}")


def qs(x: Fraction) -> str:
    return str(Fraction(x))


def loads(text: str, source: str = "<input>") -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"{source}:{e.lineno}:{e.colno}: {e.msg}") from None
    if not isinstance(doc, dict):
        raise ConfigError(f"{source}: top level must be an object")
    return doc


def load(path: str | Path) -> dict:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read {p}: {e.strerror}") from None
    return loads(text, str(p))


def check_schema(doc: dict, expected: str | None = None) -> str:
    tag = doc.get("schema")
    if tag not in SCHEMAS:
        raise ConfigError(f"unknown or missing schema tag {tag!r}; known: {sorted(SCHEMAS)}")
    if expected is not None and tag != expected:
        raise ConfigError(f"expected schema {expected!r}, got {tag!r}")
    rules = SCHEMAS[tag]
    keys = set(doc) - {"schema"}
    missing = rules["required"] - keys
    if missing:
        raise ConfigError(f"{tag}: missing field(s) {sorted(missing)}")
    extra = keys - rules["required"] - rules["optional"]
    if extra:
        raise ConfigError(f"{tag}: unknown field(s) {sorted(extra)}")
    return tag


def dumps(doc: Any) -> str:
    """Canonical JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=1, separators=(",", ": "), ensure_ascii=True) + "\n"


# --------------------------------------------------------------- toric model


def model_from_doc(doc: dict) -> ToricModel:
    check_schema(doc, "toric-model/1")
    try:
        fan = Fan(tuple((int(a), int(b)) for a, b in doc["fan"]))
        areas = tuple(q(a) for a in doc["divisor_areas"])
        blowups = []
        for bp in doc.get("blowups", []):
            extra = set(bp) - {"ray", "position", "multiplicity", "label"}
            if extra:
                raise ConfigError(f"blowup: unknown field(s) {sorted(extra)}")
            blowups.append(BlowupPoint(int(bp["ray"]), q(bp["position"]), int(bp.get("multiplicity", 1)), str(bp["label"])))
        units = tuple((int(i), str(s)) for i, s in doc.get("sphere_units", []))
        labels = doc.get("ray_labels")
        return ToricModel(fan, areas, tuple(blowups), sphere_units=units, ray_labels=tuple(labels) if labels else ())
    except (KeyError, TypeError) as e:
        raise ConfigError(f"toric-model/1: malformed field ({e})") from None


def model_to_doc(model: ToricModel) -> dict:
    return {
        "schema": "toric-model/1",
        "fan": [list(v) for v in model.fan.rays],
        "divisor_areas": [qs(a) for a in model.divisor_areas],
        "blowups": [
            {"ray": p.ray_index, "position": qs(p.position), "multiplicity": p.multiplicity, "label": p.class_label}
            for p in model.blowup_points
        ],
        "sphere_units": [[i, s] for i, s in model.sphere_units],
        "ray_labels": list(model.ray_labels),
    }


# --------------------------------------------------------------- diagrams


def diagram_to_doc(d: ScatteringDiagram) -> dict:
    return {
        "schema": "diagram/1",
        "order_cap": d.order_cap,
        "labels": list(d.context.labels),
        "weights": list(d.context.weights),
        "walls": [
            {
                "base": [qs(w.base[0]), qs(w.base[1])],
                "direction": list(w.direction),
                "line": w.is_line,
                "origin": w.origin,
                "function": w.function.to_data(),
            }
            for w in d.sorted_walls()
        ],
    }


def diagram_from_doc(doc: dict) -> ScatteringDiagram:
    check_schema(doc, "diagram/1")
    try:
        cap = int(doc["order_cap"])
        if cap < 1:
            raise ConfigError("order_cap must be at least 1")
        ctx = SeriesContext.make(tuple(doc["labels"]), cap, doc.get("weights"))
        walls = []
        for w in doc["walls"]:
            extra = set(w) - {"base", "direction", "line", "origin", "function"}
            if extra:
                raise ConfigError(f"wall: unknown field(s) {sorted(extra)}")
            f = TruncatedSeries.from_data(ctx, w["function"])
            walls.append(Wall((q(w["base"][0]), q(w["base"][1])), tuple(w["direction"]), bool(w["line"]), f, w.get("origin", "initial")))
        return ScatteringDiagram(tuple(walls), cap, ctx)
    except (KeyError, TypeError, IndexError) as e:
        raise ConfigError(f"diagram/1: malformed field ({e})") from None


def fixed_data_from_doc(doc: dict):
    from .cluster import FixedData

    check_schema(doc, "fixed-data/1")
    return FixedData(tuple(tuple(q(x) for x in row) for row in doc["skew_form"]), tuple(int(x) for x in doc["d"]))


def dp5_params_from_doc(doc: dict, t_numeric: float | None = None):
    from .dp5 import Dp5Params

    check_schema(doc, "dp5-params/1")
    kw = {k: q(doc[k]) for k in ("a", "b", "c", "a_prime", "b_prime", "a_dprime", "b_dprime") if k in doc}
    if "t_numeric" in doc:
        kw["t_numeric"] = float(doc["t_numeric"])
    if t_numeric is not None:
        kw["t_numeric"] = float(t_numeric)
    return Dp5Params(**kw)


def lines_to_doc(lines, labels, stop=None) -> dict:
    return {
        "schema": "broken-lines/1",
        "labels": list(labels),
        "stop": None if stop is None else [qs(stop[0]), qs(stop[1])],
        "lines": [
            {
                "source": bl.source_index,
                "final": bl.as_text(labels).rsplit("final=", 1)[1],
                "points": [[qs(p[0]), qs(p[1])] for p in bl.polyline()],
            }
            for bl in lines
        ],
    }


# --------------------------------------------------------------- cache


def input_hash(doc: dict, order_cap: int) -> str:
    h = hashlib.sha256()
    h.update(dumps(doc).encode())
    h.update(f"|order_cap={order_cap}|v={CACHE_VERSION}".encode())
    return h.hexdigest()[:32]


def cached(cache_dir: str | Path | None, key: str, compute: Callable[[], dict]) -> tuple[dict, bool]:
    """Return ``(payload, hit)``. A file with another cache version is recomputed and replaced."""
    if cache_dir is None:
        return compute(), False
    root = Path(cache_dir)
    path = root / f"{key}.json"
    if path.exists():
        try:
            stored = json.loads(path.read_text(encoding="utf-8"))
            if stored.get("cache_version") == CACHE_VERSION:
                return stored["payload"], True
        except (json.JSONDecodeError, KeyError, AttributeError):
            pass
    payload = compute()
    root.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(dumps({"cache_version": CACHE_VERSION, "payload": payload}), encoding="utf-8")
    tmp.replace(path)
    return payload, False


__all__ = [
    "CACHE_VERSION",
    "SCHEMAS",
    "q",
    "loads",
    "load",
    "dumps",
    "check_schema",
    "model_from_doc",
    "model_to_doc",
    "diagram_to_doc",
    "diagram_from_doc",
    "fixed_data_from_doc",
    "dp5_params_from_doc",
    "lines_to_doc",
    "input_hash",
    "cached",
]
