"""JSON interchange for algebras and extension data.

Indices are 1-based throughout (matching the e1, e2, e3 conventions of the
reports); omitted products are zero.  Rationals travel as {"num", "den"}
objects in algebra files and as [num, den] pairs inside matrices/vectors.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .algebra import Algebra
from .extensions import BimoduleAction, Cocycle2, ExtensionData
from .linalg import QMatrix


class JsonFormatError(ValueError):
    """Input JSON does not match the documented schema."""


def _frac_from_obj(obj: Any, where: str) -> Fraction:
    if isinstance(obj, dict):
        try:
            return Fraction(int(obj["num"]), int(obj.get("den", 1)))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as err:
            raise JsonFormatError(f"bad rational at {where}: {obj!r}") from err
    if isinstance(obj, (list, tuple)) and len(obj) == 2:
        try:
            return Fraction(int(obj[0]), int(obj[1]))
        except (TypeError, ValueError, ZeroDivisionError) as err:
            raise JsonFormatError(f"bad rational pair at {where}: {obj!r}") from err
    if isinstance(obj, int):
        return Fraction(obj)
    raise JsonFormatError(f"bad rational at {where}: {obj!r}")


def _frac_to_obj(f: Fraction) -> dict:
    return {"num": f.numerator, "den": f.denominator}


def algebra_to_dict(a: Algebra) -> dict:
    products = [
        {"i": i, "j": j, "k": k, "num": v.numerator, "den": v.denominator}
        for (i, j, k, v) in a.nonzero_products()
    ]
    out: dict = {"dim": a.dim, "products": products}
    if a.name:
        out["name"] = a.name
    if a.params:
        out["params"] = {k: _frac_to_obj(v) for k, v in a.params}
    return out


def algebra_from_dict(data: Any) -> Algebra:
    if not isinstance(data, dict):
        raise JsonFormatError("algebra must be a JSON object")
    try:
        dim = int(data["dim"])
    except (KeyError, TypeError, ValueError) as err:
        raise JsonFormatError("algebra requires an integer 'dim'") from err
    if dim < 1:
        raise JsonFormatError("'dim' must be positive")
    entries: dict[tuple[int, int, int], Fraction] = {}
    for pos, product in enumerate(data.get("products", [])):
        if not isinstance(product, dict):
            raise JsonFormatError(f"products[{pos}] must be an object")
        try:
            i, j, k = int(product["i"]), int(product["j"]), int(product["k"])
        except (KeyError, TypeError, ValueError) as err:
            raise JsonFormatError(f"products[{pos}] requires integer i, j, k") from err
        try:
            value = Fraction(int(product.get("num", 0)), int(product.get("den", 1)))
        except (TypeError, ValueError, ZeroDivisionError) as err:
            raise JsonFormatError(f"products[{pos}] has a bad num/den") from err
        if not (1 <= i <= dim and 1 <= j <= dim and 1 <= k <= dim):
            raise JsonFormatError(f"products[{pos}] index out of range for dim={dim}")
        entries[(i, j, k)] = entries.get((i, j, k), Fraction(0)) + value
    params = {
        key: _frac_from_obj(val, f"params.{key}")
        for key, val in (data.get("params") or {}).items()
    }
    return Algebra.from_entries(dim, entries, name=data.get("name", ""), params=params)


def matrix_to_rows(m: QMatrix) -> list:
    return [[[x.numerator, x.denominator] for x in row] for row in m.rows]


def matrix_from_rows(data: Any, where: str) -> QMatrix:
    if not isinstance(data, list) or not data:
        raise JsonFormatError(f"{where} must be a non-empty list of rows")
    return QMatrix(
        [
            [_frac_from_obj(cell, f"{where}[{r}][{c}]") for c, cell in enumerate(row)]
            for r, row in enumerate(data)
        ]
    )


def extension_to_dict(d: ExtensionData) -> dict:
    return {
        "K": algebra_to_dict(d.k),
        "V": algebra_to_dict(d.v),
        "lambda": [matrix_to_rows(m) for m in d.action.lam],
        "rho": [matrix_to_rows(m) for m in d.action.rho],
        "g": [
            [[[x.numerator, x.denominator] for x in cell] for cell in row]
            for row in d.g.values
        ],
    }


def extension_from_dict(data: Any, require_g: bool = True) -> ExtensionData:
    if not isinstance(data, dict):
        raise JsonFormatError("extension data must be a JSON object")
    for key in ("K", "V", "lambda", "rho"):
        if key not in data:
            raise JsonFormatError(f"extension data requires '{key}'")
    k = algebra_from_dict(data["K"])
    v = algebra_from_dict(data["V"])
    lam = tuple(
        matrix_from_rows(m, f"lambda[{i}]") for i, m in enumerate(data["lambda"])
    )
    rho = tuple(matrix_from_rows(m, f"rho[{i}]") for i, m in enumerate(data["rho"]))
    if len(lam) != k.dim or len(rho) != k.dim:
        raise JsonFormatError("lambda/rho must list one matrix per K basis vector")
    action = BimoduleAction(k, v.dim, lam, rho)
    if "g" in data and data["g"] is not None:
        raw = data["g"]
        if not isinstance(raw, list) or len(raw) != k.dim:
            raise JsonFormatError("g must be a k_dim x k_dim array of vectors")
        rows = []
        for i, row in enumerate(raw):
            if not isinstance(row, list) or len(row) != k.dim:
                raise JsonFormatError(f"g[{i}] must list k_dim vectors")
            cells = []
            for j, cell in enumerate(row):
                if not isinstance(cell, list) or len(cell) != v.dim:
                    raise JsonFormatError(f"g[{i}][{j}] must be a vector of length v_dim")
                cells.append(
                    tuple(_frac_from_obj(x, f"g[{i}][{j}][{m}]") for m, x in enumerate(cell))
                )
            rows.append(tuple(cells))
        g = Cocycle2(tuple(rows))
    elif require_g:
        raise JsonFormatError("extension data requires 'g'")
    else:
        g = Cocycle2.zero(k.dim, v.dim)
    return ExtensionData(k, v, action, g)


def load_json_file(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise JsonFormatError(
            f"malformed JSON at line {err.lineno}, column {err.colno}: {err.msg}"
        ) from err


def dumps_sorted(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)
