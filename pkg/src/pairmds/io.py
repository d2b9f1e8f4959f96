"""JSON code files and report dumps.

A code file looks like::

    {"field": {"p": 5, "m": 1, "modulus": [0, 1]}, "n": 20, "k": 16,
     "generator": [[...], ...], "parity": [[...], ...], "provenance": {...}}

Elements are canonical decimal indices; ``parity`` is optional.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .code import LinearCode
from .errors import MalformedCodeFile, PairMdsError
from .gf import field_new
from .linalg import FMatrix, mat_mul, rank


def code_to_dict(C: LinearCode) -> dict:
    d = {
        "field": C.field.to_dict(),
        "n": C.n,
        "k": C.k,
        "generator": C.G.to_lists(),
    }
    if C.H is not None:
        d["parity"] = C.H.to_lists()
    d["provenance"] = C.provenance
    return d


def _matrix(f, rows, name: str, ncols: int) -> FMatrix:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise MalformedCodeFile(f"{name} must be a list of rows")
    if any(len(r) != ncols for r in rows):
        raise MalformedCodeFile(f"every {name} row must have n = {ncols} entries")
    try:
        arr = np.array(rows, dtype=np.int64).reshape(len(rows), ncols)
    except (TypeError, ValueError) as exc:
        raise MalformedCodeFile(f"{name} entries must be integers: {exc}") from exc
    if arr.size and (arr.min() < 0 or arr.max() >= f.q):
        raise MalformedCodeFile(f"{name} entries must be element indices in [0, {f.q})")
    return FMatrix(f, arr)


def code_from_dict(d: dict) -> LinearCode:
    """Validate and rebuild a code; every inconsistency raises MalformedCodeFile."""
    if not isinstance(d, dict):
        raise MalformedCodeFile("code file must hold a JSON object")
    for key in ("field", "n", "k", "generator"):
        if key not in d:
            raise MalformedCodeFile(f"missing key {key!r}")
    fd = d["field"]
    try:
        f = field_new(int(fd["p"]), int(fd.get("m", 1)), fd.get("modulus"))
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedCodeFile(f"bad field description {fd!r}: {exc}") from exc
    n, k = d["n"], d["k"]
    if not isinstance(n, int) or not isinstance(k, int) or n < 1 or not 0 <= k <= n:
        raise MalformedCodeFile(f"need integers 0 <= k <= n and n >= 1, got n={n!r} k={k!r}")
    G = _matrix(f, d["generator"], "generator", n)
    if G.rows != k:
        raise MalformedCodeFile(f"generator has {G.rows} rows but k = {k}")
    if rank(G) != k:
        raise MalformedCodeFile(f"generator has rank {rank(G)} < k = {k}")
    H = None
    if d.get("parity") is not None:
        H = _matrix(f, d["parity"], "parity", n)
        if H.rows != n - k:
            raise MalformedCodeFile(f"parity has {H.rows} rows but n - k = {n - k}")
        if rank(H) != n - k:
            raise MalformedCodeFile(f"parity has rank {rank(H)} < n - k = {n - k}")
        if k and H.rows and not mat_mul(G, H.T).is_zero():
            raise MalformedCodeFile("generator rows are not orthogonal to the parity matrix")
    prov = d.get("provenance") or {}
    if not isinstance(prov, dict):
        raise MalformedCodeFile("provenance must be an object")
    return LinearCode(f, n, k, G, H, prov)


def save_code(C: LinearCode, path) -> None:
    Path(path).write_text(json.dumps(code_to_dict(C), indent=1) + "\n", encoding="utf-8")


def load_code(path) -> LinearCode:
    try:
        d = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise MalformedCodeFile(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedCodeFile(f"{path} is not valid JSON: {exc}") from exc
    try:
        return code_from_dict(d)
    except MalformedCodeFile:
        raise
    except PairMdsError as exc:
        raise MalformedCodeFile(str(exc)) from exc


def write_json(obj, path) -> None:
    Path(path).write_text(json.dumps(obj, indent=1, default=_jsonable) + "\n", encoding="utf-8")


def _jsonable(x):
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.ndarray):
        return x.tolist()
    if isinstance(x, tuple):
        return list(x)
    raise TypeError(f"cannot serialize {type(x).__name__}")
