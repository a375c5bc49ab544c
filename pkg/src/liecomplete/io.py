"""JSON file formats for algebras and reports.

Algebra file::

    {
      "field": {"kind": "rational"} | {"kind": "prime", "p": 5},
      "dim": 3,
      "basis": ["e", "f", "h"],
      "table": [{"i": 0, "j": 1, "coeffs": [[2, "1"]]}, ...],
      "form": [["0", "4", "0"], ...],          # optional gram matrix
      "name": "sl_2"                            # optional
    }

Indices are 0-based, pairs must satisfy i < j, omitted pairs bracket to
zero, and coefficients are exact strings ("3", "-2", "3/2").
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .algebra import LieAlgebra, checked
from .errors import AxiomError, LieError, ParseError
from .fields import Field
from .forms import BilinearForm


def _coeff(F: Field, raw: Any, where: str):
    if isinstance(raw, bool) or not isinstance(raw, (str, int)):
        raise ParseError(f"coefficient must be a string or integer, got {raw!r}", where)
    try:
        return F(raw)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ParseError(str(exc), where) from exc


def algebra_to_json(L: LieAlgebra, form: BilinearForm | None = None) -> dict:
    F = L.field
    table = []
    for (i, j), v in sorted(L.table.items()):
        table.append({"i": i, "j": j, "coeffs": [[k, F.format(c)] for k, c in enumerate(v) if c]})
    out = {"field": F.to_json(), "dim": L.dim, "basis": list(L.labels), "table": table}
    if L.name:
        out["name"] = L.name
    if form is not None:
        out["form"] = [[F.format(x) for x in row] for row in form.gram]
    return out


def algebra_from_json(data: Any, validate: bool = True) -> tuple[LieAlgebra, BilinearForm | None]:
    if not isinstance(data, dict):
        raise ParseError("top level must be an object", "$")
    for key in ("field", "dim", "table"):
        if key not in data:
            raise ParseError(f"missing key {key!r}", "$")
    try:
        F = Field.from_json(data["field"])
    except (ValueError, TypeError) as exc:
        raise ParseError(str(exc), "$.field") from exc
    dim = data["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
        raise ParseError(f"dim must be a nonnegative integer, got {dim!r}", "$.dim")
    labels = data.get("basis")
    if labels is None:
        labels = [f"e{i + 1}" for i in range(dim)]
    if not isinstance(labels, list) or len(labels) != dim or not all(isinstance(s, str) for s in labels):
        raise ParseError(f"basis must be a list of {dim} strings", "$.basis")
    if not isinstance(data["table"], list):
        raise ParseError("table must be a list", "$.table")
    brackets: dict[tuple[int, int], list] = {}
    for t, entry in enumerate(data["table"]):
        where = f"$.table[{t}]"
        if not isinstance(entry, dict) or not {"i", "j", "coeffs"} <= set(entry):
            raise ParseError("entry needs keys i, j, coeffs", where)
        i, j = entry["i"], entry["j"]
        for name, idx in (("i", i), ("j", j)):
            if isinstance(idx, bool) or not isinstance(idx, int) or not 0 <= idx < dim:
                raise ParseError(f"index {name}={idx!r} out of range for dim {dim}", f"{where}.{name}")
        if i >= j:
            raise ParseError(f"pairs must satisfy i < j, got ({i}, {j})", where)
        if (i, j) in brackets:
            raise ParseError(f"pair ({i}, {j}) listed twice", where)
        vec = [F.zero] * dim
        if not isinstance(entry["coeffs"], list):
            raise ParseError("coeffs must be a list", f"{where}.coeffs")
        for c, item in enumerate(entry["coeffs"]):
            cw = f"{where}.coeffs[{c}]"
            if not isinstance(item, list) or len(item) != 2:
                raise ParseError("coefficient entry must be [k, value]", cw)
            k, raw = item
            if isinstance(k, bool) or not isinstance(k, int) or not 0 <= k < dim:
                raise ParseError(f"index k={k!r} out of range for dim {dim}", cw)
            vec[k] = F.norm(vec[k] + _coeff(F, raw, cw))
        brackets[(i, j)] = vec
    L = LieAlgebra(F, dim, brackets, labels, name=data.get("name"))
    if validate:
        checked(L)
    form = None
    if data.get("form") is not None:
        g = data["form"]
        if not isinstance(g, list) or len(g) != dim or any(not isinstance(r, list) or len(r) != dim for r in g):
            raise ParseError(f"form must be a {dim}x{dim} matrix", "$.form")
        gram = tuple(tuple(_coeff(F, x, f"$.form[{r}][{c}]") for c, x in enumerate(row))
                     for r, row in enumerate(g))
        try:
            form = BilinearForm(L, gram)
        except LieError as exc:
            raise ParseError(str(exc), "$.form") from exc
    return L, form


def read_json(path: str | Path) -> tuple[Any, bytes]:
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc.strerror}", str(path)) from exc
    try:
        return json.loads(raw), raw
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", f"{path}:{exc.lineno}:{exc.colno}") from exc


def parse_algebra_file(path: str | Path, validate: bool = True) -> tuple[LieAlgebra, BilinearForm | None]:
    """Load an algebra file; errors carry the file name and a JSON path."""
    data, _ = read_json(path)
    try:
        return algebra_from_json(data, validate)
    except ParseError as exc:
        raise ParseError(str(exc), str(path), exc.witness) from exc
    except AxiomError as exc:
        raise AxiomError(f"{path}: {exc}", exc.witness) from exc


def write_algebra_file(path: str | Path, L: LieAlgebra, form: BilinearForm | None = None) -> None:
    Path(path).write_text(json.dumps(algebra_to_json(L, form), indent=2) + "\n")


def digest(raw: bytes) -> str:
    return hashlib.sha256(raw).hexdigest()


@dataclass
class Report:
    command: list[str]
    input_digest: str | None
    results: dict = field(default_factory=dict)
    verdict: str = "true"

    def to_json(self) -> dict:
        return {"command": list(self.command), "input_digest": self.input_digest,
                "results": self.results, "verdict": self.verdict}

    @classmethod
    def from_json(cls, d: dict) -> "Report":
        return cls(list(d["command"]), d.get("input_digest"), d.get("results", {}), d["verdict"])

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def write(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps() + "\n")
