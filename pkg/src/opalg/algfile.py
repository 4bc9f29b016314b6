"""Algebra file format: JSON text with sparse structure constants.

Layout:
  dimension    required positive int
  basis_names  optional list of dimension strings
  bracket      optional sparse list of [i, j, k, "p/q"]  (coefficient of e_k in [e_i,e_j])
  triple       optional sparse list of [i, j, k, l, "p/q"]
  operators    optional map name -> dense row-major matrix of scalar strings

Indices are 0-based; scalar strings must be in canonical reduced form ("p" or
"p/q" with q > 1).  Rendering is canonical (sorted keys and entries), so
parse(render(f)) round-trips byte-for-byte.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from .core import BilinearStructure, Operator, TrilinearStructure, WorkbenchError
from .scalars import ScalarError, parse_scalar, render_scalar


class ParseError(WorkbenchError):
    pass


_TOP_KEYS = {"dimension", "basis_names", "bracket", "triple", "operators"}


@dataclass
class AlgebraFile:
    dimension: int
    basis_names: tuple | None = None
    bracket: BilinearStructure | None = None
    triple: TrilinearStructure | None = None
    operators: dict = field(default_factory=dict)

    def require_bracket(self) -> BilinearStructure:
        if self.bracket is None:
            raise ParseError("input has no bracket section")
        return self.bracket

    def require_triple(self) -> TrilinearStructure:
        if self.triple is None:
            raise ParseError("input has no triple section")
        return self.triple

    def require_operator(self, name: str) -> Operator:
        if name not in self.operators:
            raise ParseError(f"input has no operator named {name!r}")
        return self.operators[name]


def _parse_index(value, dim, where):
    if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value < dim:
        raise ParseError(f"{where}: index {value!r} out of range for dimension {dim}")
    return value


def _parse_scalar(value, where):
    if not isinstance(value, str):
        raise ParseError(f"{where}: scalar must be a string, got {value!r}")
    try:
        return parse_scalar(value)
    except ScalarError as exc:
        raise ParseError(f"{where}: {exc}") from None


def parse_algebra_file(text: str) -> AlgebraFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise ParseError("top level must be an object")
    unknown = set(data) - _TOP_KEYS
    if unknown:
        raise ParseError(f"unknown top-level fields: {sorted(unknown)}")
    dim = data.get("dimension")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ParseError("dimension must be a positive integer")

    names = None
    if "basis_names" in data:
        raw = data["basis_names"]
        if not isinstance(raw, list) or len(raw) != dim or not all(isinstance(s, str) for s in raw):
            raise ParseError(f"basis_names must be a list of {dim} strings")
        names = tuple(raw)

    bracket = None
    if "bracket" in data:
        rows = data["bracket"]
        if not isinstance(rows, list):
            raise ParseError("bracket must be a list")
        quads = []
        seen = set()
        for pos, row in enumerate(rows):
            where = f"bracket[{pos}]"
            if not isinstance(row, list) or len(row) != 4:
                raise ParseError(f"{where}: expected [i, j, k, scalar]")
            i, j, k = (_parse_index(v, dim, where) for v in row[:3])
            if (i, j, k) in seen:
                raise ParseError(f"{where}: duplicate entry ({i}, {j}, {k})")
            seen.add((i, j, k))
            quads.append((i, j, k, _parse_scalar(row[3], where)))
        bracket = BilinearStructure.from_rows(dim, quads)

    triple = None
    if "triple" in data:
        rows = data["triple"]
        if not isinstance(rows, list):
            raise ParseError("triple must be a list")
        quints = []
        seen = set()
        for pos, row in enumerate(rows):
            where = f"triple[{pos}]"
            if not isinstance(row, list) or len(row) != 5:
                raise ParseError(f"{where}: expected [i, j, k, l, scalar]")
            i, j, k, l = (_parse_index(v, dim, where) for v in row[:4])
            if (i, j, k, l) in seen:
                raise ParseError(f"{where}: duplicate entry ({i}, {j}, {k}, {l})")
            seen.add((i, j, k, l))
            quints.append((i, j, k, l, _parse_scalar(row[4], where)))
        triple = TrilinearStructure.from_rows(dim, quints)

    operators = {}
    if "operators" in data:
        raw = data["operators"]
        if not isinstance(raw, dict):
            raise ParseError("operators must be an object")
        for name, matrix in raw.items():
            where = f"operators[{name!r}]"
            if (
                not isinstance(matrix, list)
                or len(matrix) != dim
                or any(not isinstance(row, list) or len(row) != dim for row in matrix)
            ):
                raise ParseError(f"{where}: expected a {dim}x{dim} matrix")
            operators[name] = Operator(
                tuple(
                    tuple(_parse_scalar(x, f"{where}[{r}][{c}]") for c, x in enumerate(row))
                    for r, row in enumerate(matrix)
                )
            )

    return AlgebraFile(dim, names, bracket, triple, operators)


def algebra_file_to_dict(af: AlgebraFile) -> dict:
    """Canonical plain-dict form (sorted sparse entries, canonical scalars)."""
    out: dict = {"dimension": af.dimension}
    if af.basis_names is not None:
        out["basis_names"] = list(af.basis_names)
    if af.bracket is not None:
        out["bracket"] = [
            [i, j, k, render_scalar(s)] for i, j, k, s in af.bracket.sorted_rows()
        ]
    if af.triple is not None:
        out["triple"] = [
            [i, j, k, l, render_scalar(s)] for i, j, k, l, s in af.triple.sorted_rows()
        ]
    if af.operators:
        out["operators"] = {
            name: [[render_scalar(x) for x in row] for row in op.rows]
            for name, op in sorted(af.operators.items())
        }
    return out


def render_algebra_file(af: AlgebraFile) -> str:
    return json.dumps(algebra_file_to_dict(af), sort_keys=True, indent=2) + "\n"


def algebra_file_digest(af: AlgebraFile) -> str:
    return hashlib.sha256(render_algebra_file(af).encode()).hexdigest()


def entry_to_algebra_file(entry) -> AlgebraFile:
    """Export a catalog entry (structures plus named operators)."""
    return AlgebraFile(
        dimension=entry.dim,
        basis_names=None,
        bracket=entry.bracket,
        triple=entry.triple,
        operators=dict(entry.operators),
    )
