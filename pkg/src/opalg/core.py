"""Exact structure-constant core.

Coordinate vectors are sparse dicts {index: scalar} with no stored zeros.
Operators are dense square matrices acting on coordinates; bilinear and
trilinear products are sparse structure-constant tensors.  Everything is
immutable after construction and safe to share; identity checkers scan
basis tuples in lexicographic order, so the first failure found is the
lexicographically smallest witness and reports are deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .scalars import Scalar, as_scalar, render_scalar


class WorkbenchError(Exception):
    """Base class for workbench errors."""


class DimensionMismatchError(WorkbenchError):
    pass


class DimensionGuardError(WorkbenchError):
    """An exhaustive scan would exceed the desk-scale guard."""


class PreconditionError(WorkbenchError):
    """A checked operation was called outside its stated precondition."""


# Guards keep dim^4 / dim^5 scans at desk scale unless explicitly forced.
_SCAN_GUARDS = {4: 12, 5: 8}


def guard_scan(dim: int, arity: int, force: bool = False) -> None:
    limit = _SCAN_GUARDS.get(arity)
    if not force and limit is not None and dim > limit:
        raise DimensionGuardError(
            f"dim^{arity} scan at dim={dim} exceeds guard (limit {limit}); "
            f"set the force flag to run it anyway"
        )


# ---------------------------------------------------------------------------
# sparse coordinate vectors


def vec_iadd(acc: dict, v: dict, coeff: Scalar = 1) -> dict:
    """acc += coeff * v in place, never leaving stored zeros."""
    if not coeff:
        return acc
    for k, s in v.items():
        t = acc.get(k, 0) + coeff * s
        if t:
            acc[k] = t
        else:
            del acc[k]
    return acc


def vec_scale(v: dict, coeff: Scalar) -> dict:
    if not coeff:
        return {}
    return {k: coeff * s for k, s in v.items()}


def vec_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    return vec_iadd(out, b, -1)


def vec_dense(v: dict, dim: int) -> tuple:
    return tuple(v.get(i, 0) for i in range(dim))


def vec_from_dense(seq) -> dict:
    return {i: s for i, s in enumerate(map(as_scalar, seq)) if s}


def basis_vec(i: int) -> dict:
    return {i: 1}


_EMPTY: dict = {}


# ---------------------------------------------------------------------------
# operators


class Operator:
    """Square matrix of scalars acting on coordinates, y_r = sum_c M[r][c] x_c."""

    __slots__ = ("dim", "rows", "_cols", "_hash")

    def __init__(self, rows):
        rows = tuple(tuple(as_scalar(x) for x in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise DimensionMismatchError("operator matrix must be square and nonempty")
        object.__setattr__(self, "dim", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_cols", None)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Operator is immutable")

    @classmethod
    def identity(cls, dim: int) -> "Operator":
        return cls(tuple(tuple(1 if r == c else 0 for c in range(dim)) for r in range(dim)))

    @classmethod
    def zero(cls, dim: int) -> "Operator":
        return cls(tuple((0,) * dim for _ in range(dim)))

    @classmethod
    def diagonal(cls, entries) -> "Operator":
        entries = tuple(map(as_scalar, entries))
        n = len(entries)
        return cls(tuple(tuple(entries[r] if r == c else 0 for c in range(n)) for r in range(n)))

    def column(self, c: int) -> dict:
        """Sparse image of the c-th basis vector.  Treat as read-only."""
        cols = self._cols
        if cols is None:
            cols = [
                {r: self.rows[r][c] for r in range(self.dim) if self.rows[r][c]}
                for c in range(self.dim)
            ]
            object.__setattr__(self, "_cols", cols)
        return cols[c]

    def apply(self, v: dict) -> dict:
        acc: dict = {}
        for c, xc in v.items():
            vec_iadd(acc, self.column(c), xc)
        return acc

    def __matmul__(self, other: "Operator") -> "Operator":
        if self.dim != other.dim:
            raise DimensionMismatchError("operator dims differ")
        n = self.dim
        out = []
        for r in range(n):
            row = [0] * n
            for k in range(n):
                a = self.rows[r][k]
                if a:
                    brow = other.rows[k]
                    for c in range(n):
                        b = brow[c]
                        if b:
                            row[c] += a * b
            out.append(row)
        return Operator(out)

    def __add__(self, other: "Operator") -> "Operator":
        if self.dim != other.dim:
            raise DimensionMismatchError("operator dims differ")
        return Operator(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            )
        )

    def __sub__(self, other: "Operator") -> "Operator":
        if self.dim != other.dim:
            raise DimensionMismatchError("operator dims differ")
        return Operator(
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            )
        )

    def __neg__(self) -> "Operator":
        return self.scale(-1)

    def scale(self, coeff: Scalar) -> "Operator":
        coeff = as_scalar(coeff)
        return Operator(tuple(tuple(coeff * a for a in row) for row in self.rows))

    def __pow__(self, exponent: int) -> "Operator":
        if exponent < 0:
            raise ValueError("negative operator powers are not defined here")
        out = Operator.identity(self.dim)
        for _ in range(exponent):
            out = out @ self
        return out

    def is_identity(self) -> bool:
        return self == Operator.identity(self.dim)

    def __eq__(self, other) -> bool:
        return isinstance(other, Operator) and self.rows == other.rows

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(self.rows)
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"Operator({[[render_scalar(a) for a in row] for row in self.rows]})"


def op_polynomial(coeffs, R: Operator) -> Operator:
    """f(R) = sum coeffs[k] * R^k, with R^0 the identity (Horner form)."""
    out = Operator.zero(R.dim)
    ident = Operator.identity(R.dim)
    for c in reversed([as_scalar(c) for c in coeffs]):
        out = out @ R + ident.scale(c)
    return out


# ---------------------------------------------------------------------------
# structure tensors


def _clean_entries(dim: int, entries, arity: int) -> dict:
    clean: dict = {}
    for key, vec in entries.items():
        key = tuple(key)
        if len(key) != arity or not all(0 <= k < dim for k in key):
            raise DimensionMismatchError(f"bad index tuple {key} for dim {dim}")
        v = {}
        for k, s in vec.items():
            if not 0 <= k < dim:
                raise DimensionMismatchError(f"component index {k} out of range")
            s = as_scalar(s)
            if s:
                v[k] = s
        if v:
            clean[key] = v
    return clean


class BilinearStructure:
    """Structure constants of a bilinear product: (i, j) -> vector [e_i, e_j]."""

    __slots__ = ("dim", "_c", "_hash")

    def __init__(self, dim: int, entries=None):
        if dim < 1:
            raise DimensionMismatchError("dimension must be positive")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "_c", _clean_entries(dim, entries or {}, 2))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("BilinearStructure is immutable")

    @classmethod
    def from_rows(cls, dim: int, quads) -> "BilinearStructure":
        """Build from sparse rows [i, j, k, scalar]; duplicate (i,j,k) is an error."""
        entries: dict = {}
        seen = set()
        for i, j, k, s in quads:
            if (i, j, k) in seen:
                raise WorkbenchError(f"duplicate bracket entry ({i}, {j}, {k})")
            seen.add((i, j, k))
            entries.setdefault((i, j), {})[k] = as_scalar(s)
        return cls(dim, entries)

    def value(self, i: int, j: int) -> dict:
        """[e_i, e_j] as a sparse vector.  Treat as read-only."""
        return self._c.get((i, j), _EMPTY)

    def apply(self, x: dict, y: dict) -> dict:
        acc: dict = {}
        if len(x) * len(y) <= len(self._c):
            for i, xi in x.items():
                for j, yj in y.items():
                    vec = self._c.get((i, j))
                    if vec:
                        vec_iadd(acc, vec, xi * yj)
        else:
            for (i, j), vec in self._c.items():
                xi = x.get(i)
                if xi:
                    yj = y.get(j)
                    if yj:
                        vec_iadd(acc, vec, xi * yj)
        return acc

    def apply_first(self, w: dict, j: int) -> dict:
        """[w, e_j] for a sparse vector w."""
        acc: dict = {}
        for a, wa in w.items():
            vec = self._c.get((a, j))
            if vec:
                vec_iadd(acc, vec, wa)
        return acc

    def apply_second(self, i: int, w: dict) -> dict:
        acc: dict = {}
        for b, wb in w.items():
            vec = self._c.get((i, b))
            if vec:
                vec_iadd(acc, vec, wb)
        return acc

    def support(self):
        return self._c.keys()

    def sorted_rows(self):
        """Canonical sparse listing [(i, j, k, scalar)] sorted by index."""
        out = []
        for (i, j) in sorted(self._c):
            vec = self._c[(i, j)]
            for k in sorted(vec):
                out.append((i, j, k, vec[k]))
        return out

    def _key(self):
        return tuple((ij, tuple(sorted(vec.items()))) for ij, vec in sorted(self._c.items()))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BilinearStructure)
            and self.dim == other.dim
            and self._c == other._c
        )

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.dim, self._key()))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"BilinearStructure(dim={self.dim}, entries={len(self._c)})"


class TrilinearStructure:
    """Structure constants of a trilinear product: (i, j, k) -> <e_i, e_j, e_k>."""

    __slots__ = ("dim", "_t", "_hash", "_by_first", "_by_middle", "_by_last")

    def __init__(self, dim: int, entries=None):
        if dim < 1:
            raise DimensionMismatchError("dimension must be positive")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "_t", _clean_entries(dim, entries or {}, 3))
        object.__setattr__(self, "_hash", None)
        object.__setattr__(self, "_by_first", None)
        object.__setattr__(self, "_by_middle", None)
        object.__setattr__(self, "_by_last", None)

    def __setattr__(self, name, value):
        raise AttributeError("TrilinearStructure is immutable")

    @classmethod
    def from_rows(cls, dim: int, rows) -> "TrilinearStructure":
        entries: dict = {}
        seen = set()
        for i, j, k, l, s in rows:
            if (i, j, k, l) in seen:
                raise WorkbenchError(f"duplicate triple entry ({i}, {j}, {k}, {l})")
            seen.add((i, j, k, l))
            entries.setdefault((i, j, k), {})[l] = as_scalar(s)
        return cls(dim, entries)

    def value(self, i: int, j: int, k: int) -> dict:
        return self._t.get((i, j, k), _EMPTY)

    def apply(self, x: dict, y: dict, z: dict) -> dict:
        acc: dict = {}
        for (i, j, k), vec in self._t.items():
            xi = x.get(i)
            if not xi:
                continue
            yj = y.get(j)
            if not yj:
                continue
            zk = z.get(k)
            if zk:
                vec_iadd(acc, vec, xi * yj * zk)
        return acc

    def apply_first(self, w: dict, j: int, k: int) -> dict:
        acc: dict = {}
        for a, wa in w.items():
            vec = self._t.get((a, j, k))
            if vec:
                vec_iadd(acc, vec, wa)
        return acc

    def apply_middle(self, i: int, w: dict, k: int) -> dict:
        acc: dict = {}
        for b, wb in w.items():
            vec = self._t.get((i, b, k))
            if vec:
                vec_iadd(acc, vec, wb)
        return acc

    def apply_last(self, i: int, j: int, w: dict) -> dict:
        acc: dict = {}
        for c, wc in w.items():
            vec = self._t.get((i, j, c))
            if vec:
                vec_iadd(acc, vec, wc)
        return acc

    def _index(self, slot: str) -> dict:
        cache = getattr(self, "_by_" + slot)
        if cache is None:
            cache = {}
            pos = {"first": 0, "middle": 1, "last": 2}[slot]
            for key, vec in self._t.items():
                cache.setdefault(key[pos], []).append((key, vec))
            object.__setattr__(self, "_by_" + slot, cache)
        return cache

    def apply_first_middle(self, u: dict, v: dict, k: int) -> dict:
        """<u, v, e_k> via the slice of keys with last index k."""
        acc: dict = {}
        for (a, b, _), vec in self._index("last").get(k, ()):
            ua = u.get(a)
            if ua:
                vb = v.get(b)
                if vb:
                    vec_iadd(acc, vec, ua * vb)
        return acc

    def apply_first_last(self, u: dict, j: int, w: dict) -> dict:
        acc: dict = {}
        for (a, _, c), vec in self._index("middle").get(j, ()):
            ua = u.get(a)
            if ua:
                wc = w.get(c)
                if wc:
                    vec_iadd(acc, vec, ua * wc)
        return acc

    def apply_middle_last(self, i: int, v: dict, w: dict) -> dict:
        acc: dict = {}
        for (_, b, c), vec in self._index("first").get(i, ()):
            vb = v.get(b)
            if vb:
                wc = w.get(c)
                if wc:
                    vec_iadd(acc, vec, vb * wc)
        return acc

    def support(self):
        return self._t.keys()

    def sorted_rows(self):
        out = []
        for (i, j, k) in sorted(self._t):
            vec = self._t[(i, j, k)]
            for l in sorted(vec):
                out.append((i, j, k, l, vec[l]))
        return out

    def _key(self):
        return tuple((ijk, tuple(sorted(vec.items()))) for ijk, vec in sorted(self._t.items()))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TrilinearStructure)
            and self.dim == other.dim
            and self._t == other._t
        )

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.dim, self._key()))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"TrilinearStructure(dim={self.dim}, entries={len(self._t)})"


def apply_bilinear(b: BilinearStructure, x, y) -> dict:
    """Evaluate the bilinear product on sparse coordinate vectors."""
    x = x if isinstance(x, dict) else vec_from_dense(x)
    y = y if isinstance(y, dict) else vec_from_dense(y)
    if any(i >= b.dim for i in x) or any(j >= b.dim for j in y):
        raise DimensionMismatchError("vector index out of range")
    return b.apply(x, y)


def apply_trilinear(t: TrilinearStructure, x, y, z) -> dict:
    x = x if isinstance(x, dict) else vec_from_dense(x)
    y = y if isinstance(y, dict) else vec_from_dense(y)
    z = z if isinstance(z, dict) else vec_from_dense(z)
    if any(i >= t.dim for i in (*x, *y, *z)):
        raise DimensionMismatchError("vector index out of range")
    return t.apply(x, y, z)


# ---------------------------------------------------------------------------
# check reports


@dataclass(frozen=True)
class Witness:
    """Lexicographically smallest failing basis tuple plus its residual."""

    indices: tuple
    residual: tuple

    def to_dict(self) -> dict:
        return {
            "indices": list(self.indices),
            "residual": [render_scalar(s) for s in self.residual],
        }


@dataclass(frozen=True)
class CheckReport:
    name: str
    passed: bool
    witness: Witness | None = None
    tuples_evaluated: int = 0
    informational: bool = False
    notes: tuple = ()
    subchecks: tuple = ()

    def sub(self, name: str) -> "CheckReport":
        for s in self.subchecks:
            if s.name == name:
                return s
        raise KeyError(f"no sub-check named {name!r} in {self.name!r}")

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "informational": self.informational,
            "witness": self.witness.to_dict() if self.witness else None,
            "tuples_evaluated": self.tuples_evaluated,
            "notes": list(self.notes),
            "subchecks": [s.to_dict() for s in self.subchecks],
        }


def aggregate_report(name: str, subchecks, notes=(), informational=False) -> CheckReport:
    """Combine sub-checks; informational subs never affect the verdict."""
    subchecks = tuple(subchecks)
    asserted = [s for s in subchecks if not s.informational]
    passed = all(s.passed for s in asserted)
    witness = None
    for s in asserted:
        if not s.passed and s.witness is not None:
            witness = s.witness
            break
    return CheckReport(
        name=name,
        passed=passed,
        witness=witness,
        tuples_evaluated=sum(s.tuples_evaluated for s in subchecks),
        informational=informational,
        notes=tuple(notes),
        subchecks=subchecks,
    )


def scan_tuples(name, dim, arity, residual, notes=(), informational=False) -> CheckReport:
    """Exhaustive lex-order scan; stops at the first (hence smallest) failure."""
    count = 0
    for idx in itertools.product(range(dim), repeat=arity):
        count += 1
        r = residual(*idx)
        if r:
            return CheckReport(
                name,
                False,
                Witness(idx, vec_dense(r, dim)),
                count,
                informational=informational,
                notes=tuple(notes),
            )
    return CheckReport(name, True, None, count, informational=informational, notes=tuple(notes))


def tensors_equal_report(name, a, b, notes=(), informational=False) -> CheckReport:
    """Exact tensor equality with the lex-smallest differing key as witness."""
    if a.dim != b.dim:
        raise DimensionMismatchError("tensor dims differ")
    keys = sorted(set(a.support()) | set(b.support()))
    count = 0
    for key in keys:
        count += 1
        diff = vec_sub(a.value(*key), b.value(*key))
        if diff:
            return CheckReport(
                name,
                False,
                Witness(key, vec_dense(diff, a.dim)),
                count,
                informational=informational,
                notes=tuple(notes),
            )
    return CheckReport(name, True, None, count, informational=informational, notes=tuple(notes))


def operators_equal_report(name, a: Operator, b: Operator, notes=(), informational=False) -> CheckReport:
    """Exact operator equality, witnessed column-wise on basis vectors."""
    if a.dim != b.dim:
        raise DimensionMismatchError("operator dims differ")

    def residual(j):
        return vec_sub(a.column(j), b.column(j))

    return scan_tuples(name, a.dim, 1, residual, notes=notes, informational=informational)


# ---------------------------------------------------------------------------
# base structure checks

VARIANT_JACOBSON = "jacobson"
VARIANT_ALTERNATE = "alternate"
JTS_VARIANTS = (VARIANT_JACOBSON, VARIANT_ALTERNATE)


def check_antisymmetry(b: BilinearStructure) -> CheckReport:
    def residual(i, j):
        acc = dict(b.value(i, j))
        return vec_iadd(acc, b.value(j, i))

    return scan_tuples("antisymmetry", b.dim, 2, residual)


def check_jacobi(b: BilinearStructure) -> CheckReport:
    def residual(i, j, k):
        acc = b.apply_first(b.value(i, j), k)
        vec_iadd(acc, b.apply_first(b.value(j, k), i))
        vec_iadd(acc, b.apply_first(b.value(k, i), j))
        return acc

    return scan_tuples("jacobi", b.dim, 3, residual)


_jts_cache: dict = {}


def check_jts_identity(t: TrilinearStructure, variant: str, force: bool = False) -> CheckReport:
    """Five-variable triple-system identity, scanned over all dim^5 tuples.

    variant="jacobson": <a,b,<x,y,z>> = <<a,b,x>,y,z> - <x,<b,a,y>,z> + <x,y,<a,b,z>>,
    scanned in variable order (a, b, x, y, z).

    variant="alternate": <x,<a,z,b>,y> = <<x,a,y>,b,z> + <<y,a,z>,b,x> - <<x,b,y>,a,z>,
    scanned in variable order (x, a, z, b, y).

    Reports are cached per (tensor, variant); a cached report is returned
    without consulting the dimension guard, since it costs nothing to reuse.
    """
    if variant not in JTS_VARIANTS:
        raise ValueError(f"unknown triple-system identity variant: {variant!r}")
    cached = _jts_cache.get((t, variant))
    if cached is not None:
        return cached
    guard_scan(t.dim, 5, force)

    if variant == VARIANT_JACOBSON:

        def residual(a, b, x, y, z):
            acc = t.apply_last(a, b, t.value(x, y, z))
            vec_iadd(acc, t.apply_first(t.value(a, b, x), y, z), -1)
            vec_iadd(acc, t.apply_middle(x, t.value(b, a, y), z))
            vec_iadd(acc, t.apply_last(x, y, t.value(a, b, z)), -1)
            return acc

    else:

        def residual(x, a, z, b, y):
            acc = t.apply_middle(x, t.value(a, z, b), y)
            vec_iadd(acc, t.apply_first(t.value(x, a, y), b, z), -1)
            vec_iadd(acc, t.apply_first(t.value(y, a, z), b, x), -1)
            vec_iadd(acc, t.apply_first(t.value(x, b, y), a, z))
            return acc

    report = scan_tuples(f"jts-{variant}", t.dim, 5, residual)
    _jts_cache[(t, variant)] = report
    return report


_lie_cache: dict = {}


def check_lie(b: BilinearStructure) -> CheckReport:
    """Antisymmetry plus Jacobi, cached per tensor (used by constructors)."""
    cached = _lie_cache.get(b)
    if cached is not None:
        return cached
    report = aggregate_report("lie", (check_antisymmetry(b), check_jacobi(b)))
    _lie_cache[b] = report
    return report
