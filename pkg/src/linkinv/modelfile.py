"""JSON model files.

Layout (all top-level keys except ``metadata`` and ``witnesses`` required)::

    {
      "metadata": {"description": "...", "seed": 1},
      "plus_double_points": [{"sign": 1, "n": 2}, ...],
      "minus_double_points": [{"sign": -1, "n": 0}, ...],
      "disks": [{"n": 2, "points": [1, 0]}],
      "witnesses": [
        {"n": 2, "q": "0:1, 1:1", "u": "0:1",
         "handles": [{"m_bit": 1, "pair_count": 1, "pair_bits": [[1, 0]]}]}
      ]
    }

Polynomials use the ``exponent:coefficient`` text form.  Unknown keys are
rejected.  :func:`emit_model` writes the canonical form, so
``emit_model(parse_model(x))`` is stable under a second round trip.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .errors import ParseError, SchemaError
from .laurent import format_poly, parse_poly
from .linkmap import ConstructedDiskWitness, DoublePoint, Handle, LinkMapModel, WhitneyDiskDatum

__all__ = ["ModelFile", "parse_model", "emit_model", "load_model"]

_TOP_KEYS = {"metadata", "plus_double_points", "minus_double_points", "disks", "witnesses"}
_REQUIRED = ("plus_double_points", "minus_double_points", "disks")


@dataclass
class ModelFile:
    model: LinkMapModel
    disks: tuple[WhitneyDiskDatum, ...] = ()
    witnesses: tuple[ConstructedDiskWitness, ...] | None = None
    metadata: dict[str, Any] = field(default_factory=dict)


def _int(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(name, f"{name}: expected an integer, got {value!r}")
    return value


def _list(value, name: str) -> list:
    if not isinstance(value, list):
        raise SchemaError(name, f"{name}: expected a list, got {type(value).__name__}")
    return value


def _obj(value, name: str, keys: set[str], required: set[str]) -> dict:
    if not isinstance(value, dict):
        raise SchemaError(name, f"{name}: expected an object, got {type(value).__name__}")
    extra = sorted(set(value) - keys)
    if extra:
        raise SchemaError(extra[0], f"{name}: unknown field {extra[0]!r}")
    missing = sorted(required - set(value))
    if missing:
        raise SchemaError(missing[0], f"{name}: missing field {missing[0]!r}")
    return value


def _double_point(raw, where: str) -> DoublePoint:
    raw = _obj(raw, where, {"sign", "n"}, {"sign", "n"})
    sign = _int(raw["sign"], "sign")
    if sign not in (1, -1):
        raise SchemaError("sign", f"{where}: sign must be 1 or -1, got {sign}")
    return DoublePoint(sign, _int(raw["n"], "n"))


def _bit(value, name: str) -> int:
    value = _int(value, name)
    if value not in (0, 1):
        raise SchemaError(name, f"{name}: expected 0 or 1, got {value}")
    return value


def _disk(raw, where: str) -> WhitneyDiskDatum:
    raw = _obj(raw, where, {"n", "points"}, {"n", "points"})
    n = _int(raw["n"], "n")
    if n < 0:
        raise SchemaError("n", f"{where}: n must be non-negative")
    pts = tuple(_bit(m, "points") for m in _list(raw["points"], "points"))
    return WhitneyDiskDatum(n, pts)


def _poly(raw, name: str):
    if not isinstance(raw, str):
        raise SchemaError(name, f"{name}: expected polynomial text, got {raw!r}")
    try:
        return parse_poly(raw)
    except ParseError as exc:
        raise SchemaError(name, f"{name}: {exc}") from None


def _handle(raw, where: str) -> Handle:
    keys = {"m_bit", "pair_count", "pair_bits"}
    raw = _obj(raw, where, keys, keys)
    pairs = []
    for pair in _list(raw["pair_bits"], "pair_bits"):
        pair = _list(pair, "pair_bits")
        if len(pair) != 2:
            raise SchemaError("pair_bits", f"{where}: each pair must have two bits")
        pairs.append((_bit(pair[0], "pair_bits"), _bit(pair[1], "pair_bits")))
    count = _int(raw["pair_count"], "pair_count")
    if count < 0:
        raise SchemaError("pair_count", f"{where}: pair_count must be non-negative")
    return Handle(_bit(raw["m_bit"], "m_bit"), count, tuple(pairs))


def _witness(raw, where: str) -> ConstructedDiskWitness:
    keys = {"n", "q", "u", "handles"}
    raw = _obj(raw, where, keys, keys)
    n = _int(raw["n"], "n")
    if n < 0:
        raise SchemaError("n", f"{where}: n must be non-negative")
    handles = tuple(_handle(h, f"{where}.handles[{j}]")
                    for j, h in enumerate(_list(raw["handles"], "handles")))
    return ConstructedDiskWitness(n, handles, _poly(raw["u"], "u"), _poly(raw["q"], "q"))


def parse_model(text: str | bytes) -> ModelFile:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc.reason}", exc.start) from None
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{exc.msg} (line {exc.lineno}, column {exc.colno})", exc.pos) from None
    raw = _obj(raw, "model", _TOP_KEYS, set(_REQUIRED))
    metadata = raw.get("metadata", {})
    if not isinstance(metadata, dict):
        raise SchemaError("metadata", "metadata must be an object")
    plus = tuple(_double_point(p, f"plus_double_points[{i}]")
                 for i, p in enumerate(_list(raw["plus_double_points"], "plus_double_points")))
    minus = tuple(_double_point(p, f"minus_double_points[{i}]")
                  for i, p in enumerate(_list(raw["minus_double_points"], "minus_double_points")))
    disks = tuple(_disk(d, f"disks[{i}]") for i, d in enumerate(_list(raw["disks"], "disks")))
    witnesses = None
    if "witnesses" in raw and raw["witnesses"] is not None:
        witnesses = tuple(_witness(w, f"witnesses[{i}]")
                          for i, w in enumerate(_list(raw["witnesses"], "witnesses")))
    return ModelFile(LinkMapModel(plus, minus), disks, witnesses, metadata)


def load_model(path) -> ModelFile:
    with open(path, "rb") as fh:
        return parse_model(fh.read())


def _witness_dict(w: ConstructedDiskWitness) -> dict:
    return {
        "n": w.n,
        "q": format_poly(w.q),
        "u": format_poly(w.u),
        "handles": [
            {"m_bit": h.m_bit, "pair_count": h.pair_count,
             "pair_bits": [list(p) for p in h.pair_bits]}
            for h in w.handles
        ],
    }


def _sorted_keys(value):
    if isinstance(value, dict):
        return {k: _sorted_keys(value[k]) for k in sorted(value)}
    if isinstance(value, list):
        return [_sorted_keys(v) for v in value]
    return value


def to_dict(mf: ModelFile) -> dict:
    out: dict[str, Any] = {"metadata": _sorted_keys(mf.metadata)}
    out["plus_double_points"] = [{"sign": p.sign, "n": p.n} for p in mf.model.plus_points]
    out["minus_double_points"] = [{"sign": p.sign, "n": p.n} for p in mf.model.minus_points]
    out["disks"] = [{"n": d.n, "points": list(d.points)} for d in mf.disks]
    if mf.witnesses is not None:
        out["witnesses"] = [_witness_dict(w) for w in mf.witnesses]
    return out


def emit_model(mf: ModelFile) -> str:
    """Canonical JSON text: fixed key order, two-space indent, trailing newline."""
    return json.dumps(to_dict(mf), indent=2, ensure_ascii=False) + "\n"
