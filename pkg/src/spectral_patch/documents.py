"""JSON document schemas for the command-line interface.

Matrix document (the --input payload of classify/spectral/monodromy/sample/
roundtrip):

    {
      "rank": 2,
      "entries": [[E, E], [E, E]],        # r x r grid
      "config": {                          # optional overrides
        "eq_tol": 1e-9,
        "cluster_tol": 1e-7,
        "max_iter": 200,
        "loop_nodes": 256
      }
    }

where each entry E is a list of coefficient pairs [re, im], ascending degree,
and [] is the zero polynomial. Base document (the --input payload of the
section command): a bare JSON list of r such coefficient lists.

Unknown keys are rejected, as are NaN or infinite numbers. Serialization
uses the shortest float form that parses back to the identical double, so a
serialize/parse round trip is exact and output is byte-stable.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .config import NumericConfig
from .errors import DocumentError
from .matrix import MAX_RANK, CharData, ConstMatrix, PolyMatrix
from .poly import Poly

_MATRIX_KEYS = {"rank", "entries", "config"}
_CONFIG_KEYS = {"eq_tol", "cluster_tol", "max_iter", "loop_nodes"}

DEFAULT_LOOP_NODES = 256
MIN_LOOP_NODES = 8
MAX_LOOP_NODES = 65536


@dataclass(frozen=True)
class ParsedDocument:
    matrix: PolyMatrix
    config: NumericConfig
    loop_nodes: int


def _reject_constant(value):
    raise DocumentError("non-finite number %r in document" % (value,))


def load_json(text: str):
    """Parse JSON, rejecting NaN/Infinity literals."""
    try:
        return json.loads(text, parse_constant=_reject_constant)
    except DocumentError:
        raise
    except json.JSONDecodeError as exc:
        raise DocumentError("invalid JSON: %s" % (exc,)) from exc


def _number(obj, where) -> float:
    if isinstance(obj, bool) or not isinstance(obj, (int, float)):
        raise DocumentError("%s must be a number, got %r" % (where, obj))
    value = float(obj)
    if not math.isfinite(value):
        raise DocumentError("%s must be finite, got %r" % (where, obj))
    return value


def parse_pair(obj, where) -> complex:
    if not isinstance(obj, list) or len(obj) != 2:
        raise DocumentError("%s must be a [re, im] pair" % where)
    return complex(_number(obj[0], where + "[0]"), _number(obj[1], where + "[1]"))


def parse_poly(obj, where) -> Poly:
    if not isinstance(obj, list):
        raise DocumentError("%s must be a list of coefficient pairs" % where)
    return Poly([parse_pair(item, "%s[%d]" % (where, k)) for k, item in enumerate(obj)])


def _parse_config(obj) -> tuple[NumericConfig, int]:
    if not isinstance(obj, dict):
        raise DocumentError("config must be an object")
    unknown = sorted(set(obj) - _CONFIG_KEYS)
    if unknown:
        raise DocumentError("unknown config keys: %s" % ", ".join(unknown))
    kwargs = {}
    for key in ("eq_tol", "cluster_tol"):
        if key in obj:
            kwargs[key] = _number(obj[key], "config.%s" % key)
    if "max_iter" in obj:
        if isinstance(obj["max_iter"], bool) or not isinstance(obj["max_iter"], int):
            raise DocumentError("config.max_iter must be an integer")
        kwargs["max_iter"] = obj["max_iter"]
    try:
        cfg = NumericConfig(**kwargs)
    except ValueError as exc:
        raise DocumentError("bad config: %s" % (exc,)) from exc
    loop_nodes = DEFAULT_LOOP_NODES
    if "loop_nodes" in obj:
        value = obj["loop_nodes"]
        if isinstance(value, bool) or not isinstance(value, int):
            raise DocumentError("config.loop_nodes must be an integer")
        if not (MIN_LOOP_NODES <= value <= MAX_LOOP_NODES):
            raise DocumentError(
                "config.loop_nodes must lie in %d..%d" % (MIN_LOOP_NODES, MAX_LOOP_NODES)
            )
        loop_nodes = value
    return cfg, loop_nodes


def parse_matrix_document(obj) -> ParsedDocument:
    """Validate a matrix document and build the PolyMatrix."""
    if not isinstance(obj, dict):
        raise DocumentError("document root must be an object")
    unknown = sorted(set(obj) - _MATRIX_KEYS)
    if unknown:
        raise DocumentError("unknown document keys: %s" % ", ".join(unknown))
    for key in ("rank", "entries"):
        if key not in obj:
            raise DocumentError("missing required key %r" % key)
    rank = obj["rank"]
    if isinstance(rank, bool) or not isinstance(rank, int):
        raise DocumentError("rank must be an integer")
    if not (1 <= rank <= MAX_RANK):
        raise DocumentError("rank must lie in 1..%d, got %d" % (MAX_RANK, rank))
    entries = obj["entries"]
    if not isinstance(entries, list) or len(entries) != rank:
        raise DocumentError("entries must be a %d x %d grid" % (rank, rank))
    rows = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != rank:
            raise DocumentError("entries[%d] must hold %d entries" % (i, rank))
        rows.append(
            tuple(
                parse_poly(cell, "entries[%d][%d]" % (i, j))
                for j, cell in enumerate(row)
            )
        )
    cfg, loop_nodes = (
        _parse_config(obj["config"]) if "config" in obj else (NumericConfig(), DEFAULT_LOOP_NODES)
    )
    try:
        m = PolyMatrix(tuple(rows))
    except Exception as exc:
        raise DocumentError("bad matrix: %s" % (exc,)) from exc
    return ParsedDocument(matrix=m, config=cfg, loop_nodes=loop_nodes)


def parse_base_document(obj, rank: int | None) -> CharData:
    """Validate a base document (list of coefficient lists) for the section
    command. When a rank is supplied it must match the list length."""
    if not isinstance(obj, list):
        raise DocumentError("base document must be a list of coefficient lists")
    count = len(obj)
    if rank is not None and rank != count:
        raise DocumentError(
            "rank flag %d does not match %d coefficient lists" % (rank, count)
        )
    if not (1 <= count <= MAX_RANK):
        raise DocumentError("base needs 1..%d coefficient lists, got %d" % (MAX_RANK, count))
    coeffs = tuple(parse_poly(item, "base[%d]" % k) for k, item in enumerate(obj))
    try:
        return CharData(rank=count, coeffs=coeffs)
    except Exception as exc:
        raise DocumentError("bad base: %s" % (exc,)) from exc


def pair(value: complex) -> list[float]:
    return [float(value.real), float(value.imag)]


def poly_pairs(p: Poly) -> list[list[float]]:
    return [pair(c) for c in p.coeffs]


def const_entries(m: ConstMatrix) -> list[list[list[float]]]:
    return [[[float(v.real), float(v.imag)] for v in row] for row in m.entries]


def polymatrix_entries(m: PolyMatrix) -> list[list[list[list[float]]]]:
    return [[poly_pairs(p) for p in row] for row in m.entries]


def report_dict(command: str, status: str, payload, diagnostics) -> dict:
    return {
        "command": command,
        "status": status,
        "payload": payload,
        "diagnostics": list(diagnostics),
    }


def dump_report(report: dict) -> str:
    """Deterministic, round-trip exact JSON text."""
    return json.dumps(report, indent=2, sort_keys=False)
