"""JSON interchange for complexes, morphisms, cells and cylinders.

Complex::

    {"basis": {"0": [...], "1": [...]}, "d": {name: {gen: int}},
     "e": {name: int}, "mode": "basis" | "relaxed"}

Morphism::

    {"source": <complex or path>, "target": <complex or path>,
     "map": {name: {gen: int}}}

Cell: ``{"ambient": <complex or path>, "minus": [chain, ...], "plus": [...]}``.
Cylinder: ``{"ambient": ..., "x": cell rows, "y": cell rows,
"alpha_minus": [cell rows], "alpha_plus": [cell rows]}`` where "cell rows"
means ``{"minus": [...], "plus": [...]}``.

Relative paths are resolved against the directory of the file that mentions
them.  Output uses sorted keys so equal values serialize to equal bytes.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .cells import CellTable, make_cell
from .chains import Chain
from .complex import BASIS, Complex, ComplexError
from .cylinders import Cylinder
from .morphisms import Morphism, MorphismError


class FormatError(ValueError):
    """Unreadable or malformed input file."""


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _read_json(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from None


def _chain_doc(x: Chain) -> dict[str, int]:
    return dict(x.items())


def _coeffs(doc: Any, where: str) -> dict[str, int]:
    if not isinstance(doc, dict):
        raise FormatError(f"{where}: a chain must be an object {{generator: integer}}")
    for k, v in doc.items():
        if not isinstance(v, int) or isinstance(v, bool):
            raise FormatError(f"{where}: coefficient of {k!r} is not an integer")
    return doc


# -- complexes ----------------------------------------------------------------


def complex_to_doc(K: Complex) -> dict:
    return {
        "basis": {str(n): list(layer) for n, layer in enumerate(K.basis)},
        "d": {b: _chain_doc(K.boundary_of(b)) for n in range(1, K.dim + 1) for b in K.basis_in(n)},
        "e": dict(K.augmentations),
        "mode": K.mode,
    }


def complex_from_doc(doc: Any) -> Complex:
    if not isinstance(doc, dict):
        raise FormatError("a complex must be a JSON object")
    unknown = set(doc) - {"basis", "d", "e", "mode"}
    if unknown:
        raise FormatError(f"unknown complex fields: {sorted(unknown)}")
    basis = doc.get("basis", {})
    if not isinstance(basis, dict):
        raise FormatError("'basis' must map degrees to lists of names")
    layers = {}
    for key, names in basis.items():
        try:
            n = int(key)
        except ValueError:
            raise FormatError(f"basis degree {key!r} is not an integer") from None
        if n < 0 or not isinstance(names, list):
            raise FormatError(f"basis degree {key!r} must be >= 0 with a list of names")
        layers[n] = names
    d = doc.get("d", {})
    e = doc.get("e", {})
    if not isinstance(d, dict) or not isinstance(e, dict):
        raise FormatError("'d' and 'e' must be objects")
    d = {name: _coeffs(ch, f"d[{name}]") for name, ch in d.items()}
    try:
        return Complex(layers, d, e, doc.get("mode", BASIS))
    except (ComplexError, TypeError) as exc:
        raise FormatError(str(exc)) from None


def save_complex(K: Complex, path: str | Path) -> None:
    Path(path).write_text(dumps(complex_to_doc(K)), encoding="utf-8")


def load_complex(path: str | Path) -> Complex:
    return complex_from_doc(_read_json(path))


def _complex_ref(ref: Any, base: Path) -> Complex:
    if isinstance(ref, str):
        return load_complex(base / ref)
    return complex_from_doc(ref)


# -- morphisms ----------------------------------------------------------------


def morphism_to_doc(f: Morphism) -> dict:
    return {
        "source": complex_to_doc(f.source),
        "target": complex_to_doc(f.target),
        "map": {b: _chain_doc(f.image(b)) for b in f.source.names()},
    }


def morphism_from_doc(doc: Any, base: Path = Path(".")) -> Morphism:
    if not isinstance(doc, dict) or not {"source", "target"} <= set(doc):
        raise FormatError("a morphism needs 'source' and 'target'")
    K = _complex_ref(doc["source"], base)
    L = _complex_ref(doc["target"], base)
    mapping = doc.get("map", {})
    if not isinstance(mapping, dict):
        raise FormatError("'map' must be an object")
    try:
        return Morphism(K, L, {b: _coeffs(img, f"map[{b}]") for b, img in mapping.items()})
    except (MorphismError, ValueError) as exc:
        raise FormatError(str(exc)) from None


def save_morphism(f: Morphism, path: str | Path) -> None:
    Path(path).write_text(dumps(morphism_to_doc(f)), encoding="utf-8")


def load_morphism(path: str | Path) -> Morphism:
    return morphism_from_doc(_read_json(path), Path(path).parent)


# -- cells and cylinders ------------------------------------------------------


def _rows_doc(c: CellTable) -> dict:
    return {"minus": [_chain_doc(x) for x in c.minus], "plus": [_chain_doc(x) for x in c.plus]}


def _rows_from(doc: Any, K: Complex, where: str) -> CellTable:
    if not isinstance(doc, dict) or not isinstance(doc.get("minus"), list) or not isinstance(doc.get("plus"), list):
        raise FormatError(f"{where}: a cell needs 'minus' and 'plus' lists")
    try:
        minus = [_coeffs(x, where) for x in doc["minus"]]
        plus = [_coeffs(x, where) for x in doc["plus"]]
        return make_cell(K, minus, plus)
    except (ComplexError, ValueError) as exc:
        raise FormatError(f"{where}: {exc}") from None


def cell_to_doc(c: CellTable) -> dict:
    return {"ambient": complex_to_doc(c.ambient), **_rows_doc(c)}


def cell_from_doc(doc: Any, base: Path = Path(".")) -> CellTable:
    if not isinstance(doc, dict) or "ambient" not in doc:
        raise FormatError("a cell needs an 'ambient' complex")
    return _rows_from(doc, _complex_ref(doc["ambient"], base), "cell")


def load_cell(path: str | Path) -> CellTable:
    return cell_from_doc(_read_json(path), Path(path).parent)


def cylinder_to_doc(c: Cylinder) -> dict:
    return {
        "ambient": complex_to_doc(c.ambient),
        "x": _rows_doc(c.x),
        "y": _rows_doc(c.y),
        "alpha_minus": [_rows_doc(a) for a in c.minus],
        "alpha_plus": [_rows_doc(a) for a in c.plus],
    }


def cylinder_from_doc(doc: Any, base: Path = Path(".")) -> Cylinder:
    fields = {"ambient", "x", "y", "alpha_minus", "alpha_plus"}
    if not isinstance(doc, dict) or not fields <= set(doc):
        raise FormatError(f"a cylinder needs the fields {sorted(fields)}")
    K = _complex_ref(doc["ambient"], base)
    if not isinstance(doc["alpha_minus"], list) or not isinstance(doc["alpha_plus"], list):
        raise FormatError("'alpha_minus' and 'alpha_plus' must be lists of cells")
    return Cylinder(
        K,
        _rows_from(doc["x"], K, "x"),
        _rows_from(doc["y"], K, "y"),
        tuple(_rows_from(a, K, f"alpha_minus[{k}]") for k, a in enumerate(doc["alpha_minus"])),
        tuple(_rows_from(a, K, f"alpha_plus[{k}]") for k, a in enumerate(doc["alpha_plus"])),
    )


def save_cylinder(c: Cylinder, path: str | Path) -> None:
    Path(path).write_text(dumps(cylinder_to_doc(c)), encoding="utf-8")


def load_cylinder(path: str | Path) -> Cylinder:
    return cylinder_from_doc(_read_json(path), Path(path).parent)
