"""Concrete algebras: skew-symmetric and full matrix algebras with their
operator families, plus matrix-level tensor builders used as oracles.

Every entry self-validates its base structures (Lie bracket, and the triple
against the jacobson identity) at construction.  Operator properties are
advertised as expectations and always re-checked by callers, never assumed.
"""

from __future__ import annotations

import functools
import random
import re
from dataclasses import dataclass, field, replace

from .core import (
    BilinearStructure,
    Operator,
    TrilinearStructure,
    VARIANT_JACOBSON,
    WorkbenchError,
    check_jts_identity,
    check_lie,
)
from .oracles import (
    mat,
    mat_add,
    mat_commutator,
    mat_det3,
    mat_diag,
    mat_identity,
    mat_is_symmetric,
    mat_mul,
    mat_scale,
    mat_sub,
    mat_unit,
    mat_zero,
)
from .sampling import random_matrix, random_symmetric_matrix
from .scalars import as_scalar, parse_scalar


class CatalogError(WorkbenchError):
    pass


@dataclass(frozen=True, eq=False)
class CatalogEntry:
    """A named algebra: basis matrices, structure tensors, named operators."""

    name: str
    family: str  # "gl" or "so"
    n: int  # size of the underlying matrices
    dim: int
    basis: tuple
    lead_positions: tuple
    bracket: BilinearStructure
    triple: TrilinearStructure | None = None
    operators: dict = field(default_factory=dict)
    note: str = ""
    expectations: tuple = ()
    extra_triples: dict = field(default_factory=dict)
    q: tuple | None = None
    form: tuple | None = None

    def expand(self, M) -> dict:
        """Coordinates of a matrix in the entry's basis; errors if outside the span."""
        coords = {}
        for i, (r, c) in enumerate(self.lead_positions):
            v = as_scalar(M[r][c])
            if v:
                coords[i] = v
        recon = mat_zero(self.n)
        for i, ci in coords.items():
            recon = mat_add(recon, mat_scale(self.basis[i], ci))
        if recon != mat(M):
            raise CatalogError("matrix does not lie in the basis span")
        return coords

    def operator_from_matrix_map(self, fn) -> Operator:
        """Operator matrix of a map basis-matrix -> matrix, read off column-wise."""
        cols = [self.expand(fn(b)) for b in self.basis]
        rows = tuple(
            tuple(cols[c].get(r, 0) for c in range(self.dim)) for r in range(self.dim)
        )
        return Operator(rows)

    def bilinear_tensor_from_matrices(self, fn) -> BilinearStructure:
        """Structure tensor of a bilinear matrix expression (oracle-side builder)."""
        entries = {}
        for i, bi in enumerate(self.basis):
            for j, bj in enumerate(self.basis):
                vec = self.expand(fn(bi, bj))
                if vec:
                    entries[(i, j)] = vec
        return BilinearStructure(self.dim, entries)

    def trilinear_tensor_from_matrices(self, fn) -> TrilinearStructure:
        entries = {}
        for i, bi in enumerate(self.basis):
            for j, bj in enumerate(self.basis):
                for k, bk in enumerate(self.basis):
                    vec = self.expand(fn(bi, bj, bk))
                    if vec:
                        entries[(i, j, k)] = vec
        return TrilinearStructure(self.dim, entries)


def _validated(entry: CatalogEntry, validate_triple: bool = True) -> CatalogEntry:
    lie = check_lie(entry.bracket)
    if not lie.passed:
        raise CatalogError(f"{entry.name}: base bracket fails Lie validation")
    if validate_triple and entry.triple is not None:
        jts = check_jts_identity(entry.triple, VARIANT_JACOBSON, force=True)
        if not jts.passed:
            raise CatalogError(f"{entry.name}: base triple fails the jacobson identity")
    return entry


@functools.lru_cache(maxsize=None)
def so_n(n: int) -> CatalogEntry:
    """Skew-symmetric n x n matrices under the commutator.

    Basis is E_ab - E_ba for a < b in lex order, except n = 3 where the
    cross-product-normalized basis ([e1,e2] = e3 cyclically) is used.
    """
    if n < 2:
        raise CatalogError("so(n) requires n >= 2")
    if n == 3:
        basis = (
            mat_sub(mat_unit(3, 2, 1), mat_unit(3, 1, 2)),
            mat_sub(mat_unit(3, 0, 2), mat_unit(3, 2, 0)),
            mat_sub(mat_unit(3, 1, 0), mat_unit(3, 0, 1)),
        )
        positions = ((2, 1), (0, 2), (1, 0))
    else:
        pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
        basis = tuple(mat_sub(mat_unit(n, a, b), mat_unit(n, b, a)) for a, b in pairs)
        positions = tuple(pairs)
    entry = CatalogEntry(
        name=f"so{n}",
        family="so",
        n=n,
        dim=len(basis),
        basis=basis,
        lead_positions=positions,
        bracket=None,  # filled below
        note=f"skew-symmetric {n}x{n} matrices with the commutator bracket",
    )
    bracket = entry.bilinear_tensor_from_matrices(mat_commutator)
    entry = replace(entry, bracket=bracket)
    return _validated(entry)


@functools.lru_cache(maxsize=None)
def gl_assoc(n: int) -> CatalogEntry:
    """Full n x n matrix algebra: commutator bracket and the triple XYZ + ZYX."""
    if n < 1:
        raise CatalogError("gl(n) requires n >= 1")
    positions = tuple((i, j) for i in range(n) for j in range(n))
    basis = tuple(mat_unit(n, i, j) for i, j in positions)
    entry = CatalogEntry(
        name=f"gl{n}",
        family="gl",
        n=n,
        dim=n * n,
        basis=basis,
        lead_positions=positions,
        bracket=None,
        note=f"full {n}x{n} matrix algebra: commutator bracket, triple XYZ+ZYX",
    )
    bracket = entry.bilinear_tensor_from_matrices(mat_commutator)
    triple = entry.trilinear_tensor_from_matrices(
        lambda x, y, z: mat_add(mat_mul(mat_mul(x, y), z), mat_mul(mat_mul(z, y), x))
    )
    entry = replace(entry, bracket=bracket, triple=triple)
    return _validated(entry)


def mult_operators(entry: CatalogEntry, Q) -> dict:
    """Multiplication operators attached to a matrix Q.

    gl entries: R1 (X -> XQ), R2 (X -> QX), their difference xi = R2 - R1,
    the sum R (X -> QX + XQ) and rho (X -> QXQ).
    so entries: Q must be symmetric (left/right multiplication alone does not
    preserve skew-symmetry); only R and rho are emitted.
    """
    Q = mat(Q)
    if len(Q) != entry.n or any(len(row) != entry.n for row in Q):
        raise CatalogError(f"Q must be {entry.n}x{entry.n} for {entry.name}")
    if entry.family == "so":
        if not mat_is_symmetric(Q):
            raise CatalogError("Q must be symmetric for skew-symmetric targets")
        return {
            "R": entry.operator_from_matrix_map(lambda x: mat_add(mat_mul(Q, x), mat_mul(x, Q))),
            "rho": entry.operator_from_matrix_map(lambda x: mat_mul(mat_mul(Q, x), Q)),
        }
    right = entry.operator_from_matrix_map(lambda x: mat_mul(x, Q))
    left = entry.operator_from_matrix_map(lambda x: mat_mul(Q, x))
    return {
        "R1": right,
        "R2": left,
        "xi": left - right,
        "R": left + right,
        "rho": entry.operator_from_matrix_map(lambda x: mat_mul(mat_mul(Q, x), Q)),
    }


def example1_candidates(x0=None, form=None) -> CatalogEntry:
    """so(3) with a symmetric bilinear form: both candidate triples and operators.

    Triples: two-term F(X,Y)Z + F(Y,Z)X and the standard three-term
    F(X,Y)Z + F(Y,Z)X - F(X,Z)Y (the latter is the validated JTS).
    Operator candidates: Ra X = F(X0,X) X0 (form projection) and
    Rb X = [X0, X] (bracket multiplication).
    """
    base = so_n(3)
    form = mat(form) if form is not None else mat_identity(3)
    if not mat_is_symmetric(form):
        raise CatalogError("form must be symmetric")
    if not mat_det3(form):
        raise CatalogError("form must be nondegenerate")
    x0 = tuple(map(as_scalar, x0)) if x0 is not None else (0, 0, 1)
    if len(x0) != 3:
        raise CatalogError("x0 must be a 3-vector of coordinates")

    def f_pair(i, j):
        return form[i][j]

    dim = 3
    two_entries = {}
    three_entries = {}
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                vec: dict = {}
                fij = f_pair(i, j)
                if fij:
                    vec[k] = vec.get(k, 0) + fij
                fjk = f_pair(j, k)
                if fjk:
                    vec[i] = vec.get(i, 0) + fjk
                vec = {a: s for a, s in vec.items() if s}
                if vec:
                    two_entries[(i, j, k)] = dict(vec)
                fik = f_pair(i, k)
                if fik:
                    vec = dict(vec)
                    t = vec.get(j, 0) - fik
                    if t:
                        vec[j] = t
                    else:
                        vec.pop(j, None)
                if vec:
                    three_entries[(i, j, k)] = vec
    two_term = TrilinearStructure(dim, two_entries)
    three_term = TrilinearStructure(dim, three_entries)

    x0_vec = {i: c for i, c in enumerate(x0) if c}
    fx0 = tuple(sum(x0[r] * form[r][c] for r in range(3)) for c in range(3))
    ra_rows = tuple(tuple(x0[r] * fx0[c] for c in range(3)) for r in range(3))
    rb_cols = [base.bracket.apply_first(x0_vec, c) for c in range(3)]
    rb_rows = tuple(tuple(rb_cols[c].get(r, 0) for c in range(3)) for r in range(3))

    entry = replace(
        base,
        name="example1-so3",
        triple=three_term,
        extra_triples={"two-term": two_term},
        operators={"Ra": Operator(ra_rows), "Rb": Operator(rb_rows)},
        form=form,
        note=(
            "so(3) with a symmetric form: candidate operator readings Ra (form "
            "projection onto X0) and Rb (bracket with X0); triples two-term "
            "F(X,Y)Z+F(Y,Z)X and standard three-term F(X,Y)Z+F(Y,Z)X-F(X,Z)Y"
        ),
        expectations=("three-term triple is a JTS (jacobson)",),
    )
    return _validated(entry)


# ---------------------------------------------------------------------------
# named parametrized entries


def _default_q(n: int):
    return mat_diag(range(1, n + 1))


def _parse_q(spec: str, n: int, symmetric: bool):
    if spec == "id":
        return mat_identity(n)
    if spec.startswith("diag:"):
        entries = [parse_scalar(x) for x in spec[len("diag:"):].split(",")]
        if len(entries) != n:
            raise CatalogError(f"diag spec needs {n} entries")
        return mat_diag(entries)
    if spec.startswith("seed:"):
        rng = random.Random(int(spec[len("seed:"):]))
        return random_symmetric_matrix(rng, n) if symmetric else random_matrix(rng, n)
    raise CatalogError(f"unsupported q spec: {spec!r}")


def example2_gl(n: int, Q=None) -> CatalogEntry:
    """Matrix algebra with the right/left multiplication operator pair."""
    base = gl_assoc(n)
    Q = mat(Q) if Q is not None else _default_q(n)
    entry = replace(
        base,
        name=f"example2-gl{n}",
        operators=mult_operators(base, Q),
        q=Q,
        note="matrix-algebra commutator with right/left multiplication operators",
        expectations=("bi-myb", "even-tempered", "derived brackets equal XQY-YQX"),
    )
    return entry


def example3_gl(n: int, Q=None) -> CatalogEntry:
    entry = example2_gl(n, Q)
    return replace(
        entry,
        name=f"example3-gl{n}",
        note="matrix-algebra triple XYZ+ZYX with right/left multiplication operators",
        expectations=(
            "triple-bi-myb core",
            "normal",
            "even-tempered",
            "rho-identity with rho X = QXQ",
        ),
    )


def example4_so(n: int, Q=None) -> CatalogEntry:
    """Skew matrices with R X = QX + XQ and rho X = QXQ for symmetric Q."""
    base = so_n(n)
    Q = mat(Q) if Q is not None else _default_q(n)
    entry = replace(
        base,
        name=f"example4-so{n}",
        operators=mult_operators(base, Q),
        q=Q,
        note="skew matrices with the symmetric-Q operator pair (QX+XQ, QXQ)",
        expectations=("rrho identities",),
    )
    return entry


_NAME_RE = re.compile(r"(?P<kind>so|gl|example1-so|example2-gl|example3-gl|example4-so)(?P<n>\d+)\Z")


def catalog_names() -> list:
    return [
        "gl<n>",
        "so<n>",
        "example1-so3",
        "example2-gl<n>[?q=diag:...|seed:<int>|id]",
        "example3-gl<n>[?q=...]",
        "example4-so<n>[?q=...]",
    ]


def build_entry(spec: str) -> CatalogEntry:
    """Resolve a catalog name with optional ?key=value parameters."""
    name, _, query = spec.partition("?")
    params = {}
    if query:
        for item in query.split("&"):
            key, _, value = item.partition("=")
            if not value:
                raise CatalogError(f"malformed catalog parameter: {item!r}")
            params[key] = value
    m = _NAME_RE.match(name)
    if not m:
        raise CatalogError(f"unknown catalog entry: {name!r}")
    kind, n = m.group("kind"), int(m.group("n"))
    symmetric = kind.endswith("so")
    q = _parse_q(params.pop("q"), n, symmetric) if "q" in params else None
    triple_choice = params.pop("triple", None)
    if params:
        raise CatalogError(f"unsupported catalog parameters: {sorted(params)}")
    if kind == "so":
        entry = so_n(n)
    elif kind == "gl":
        entry = gl_assoc(n)
    elif kind == "example1-so":
        if n != 3:
            raise CatalogError("example1 is defined on so(3)")
        entry = example1_candidates()
    elif kind == "example2-gl":
        entry = example2_gl(n, q)
    elif kind == "example3-gl":
        entry = example3_gl(n, q)
    else:
        entry = example4_so(n, q)
    if triple_choice:
        if triple_choice not in entry.extra_triples:
            raise CatalogError(f"no alternate triple named {triple_choice!r}")
        entry = replace(entry, triple=entry.extra_triples[triple_choice])
    return entry
