"""JSON/CSV readers and writers for distributions, measures, spectra and sets.

Formats::

    distribution  {"atoms": [{"value": v, "prob": p}, ...]}   or CSV, one sample per line
    measure       {"atoms": [{"alpha": a, "mass": m}, ...]}
    spectral      {"pieces": [{"from": f, "level": l}, ...]}
    set           {"measures": [measure, ...]}  or  {"spectra": [spectral, ...]}
    space         {"probs": [...], "p_hat": p}
"""
from __future__ import annotations

import csv
import io
import json
import math
import numbers
from pathlib import Path
from typing import Any

from .distribution import DiscreteDistribution, build, from_samples
from .errors import KusuokaError
from .regularity import AtomicSpace
from .transform import SpectralStep, UnitMeasure


class FormatError(KusuokaError):
    """Input file that cannot be parsed into the expected object."""


def _read(path: str | Path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def _json(text: str, path) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc


def distribution_from_obj(obj: Any) -> DiscreteDistribution:
    try:
        return build((float(a["value"]), float(a["prob"])) for a in obj["atoms"])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed distribution: {exc!r}") from exc


def measure_from_obj(obj: Any) -> UnitMeasure:
    try:
        return UnitMeasure.from_pairs((float(a["alpha"]), float(a["mass"])) for a in obj["atoms"])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed measure: {exc!r}") from exc


def spectral_from_obj(obj: Any) -> SpectralStep:
    try:
        return SpectralStep.from_pieces((float(p["from"]), float(p["level"])) for p in obj["pieces"])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed spectral function: {exc!r}") from exc


def load_distribution(path: str | Path) -> DiscreteDistribution:
    text = _read(path)
    if str(path).lower().endswith(".csv"):
        samples = []
        for row in csv.reader(io.StringIO(text)):
            if not row or not row[0].strip():
                continue
            try:
                samples.append(float(row[0]))
            except ValueError as exc:
                raise FormatError(f"{path}: bad sample {row[0]!r}") from exc
        return from_samples(samples)
    return distribution_from_obj(_json(text, path))


def load_measure(path: str | Path) -> UnitMeasure:
    return measure_from_obj(_json(_read(path), path))


def load_spectral(path: str | Path) -> SpectralStep:
    return spectral_from_obj(_json(_read(path), path))


def load_set(path: str | Path) -> tuple[str, list]:
    """Return ``("measures", [...])`` or ``("spectra", [...])``."""
    obj = _json(_read(path), path)
    if isinstance(obj, dict) and "measures" in obj:
        return "measures", [measure_from_obj(m) for m in obj["measures"]]
    if isinstance(obj, dict) and "spectra" in obj:
        return "spectra", [spectral_from_obj(s) for s in obj["spectra"]]
    raise FormatError(f"{path}: expected a 'measures' or 'spectra' list")


def load_space(path: str | Path) -> AtomicSpace:
    obj = _json(_read(path), path)
    try:
        return AtomicSpace(tuple(float(p) for p in obj["probs"]), float(obj["p_hat"]))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed space: {exc!r}") from exc


def distribution_to_obj(d: DiscreteDistribution) -> dict:
    return {"atoms": [{"value": v, "prob": p} for v, p in d.pairs()]}


def measure_to_obj(mu: UnitMeasure) -> dict:
    return {"atoms": [{"alpha": a, "mass": m} for a, m in mu.pairs()]}


def spectral_to_obj(sigma: SpectralStep) -> dict:
    return {"pieces": [{"from": a, "level": v} for a, v in sigma.pairs()]}


def _encode(obj: Any) -> str:
    if obj is None or isinstance(obj, bool):
        return json.dumps(obj)
    if isinstance(obj, numbers.Integral):
        return str(int(obj))
    if isinstance(obj, numbers.Real):
        obj = float(obj)
        return format(obj, ".17g") if math.isfinite(obj) else "null"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        items = sorted(obj.items())
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_encode(v)}" for k, v in items) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_encode(v) for v in obj) + "]"
    raise TypeError(f"cannot encode {type(obj).__name__}")


def dumps(obj: Any) -> str:
    """Deterministic JSON: sorted keys, floats at 17 significant digits."""
    return _encode(obj)
