"""Lie algebras with an (R, rho) operator pair and quadratic bunches of brackets.

An (R, rho) pair defines the quadratic bracket
  [X,Y]_rho = [rhoX,Y] + [X,rhoY] - rho[X,Y] + [RX,RY] - R[X,Y]_R
and must satisfy
  (1) rho[X,Y]_rho = [rhoX, rhoY]
  (2) R[X,Y]_rho + rho[X,Y]_R = [RX,rhoY] + [rhoX,RY].
Regularity adds R[X,Y]_R = 2([rhoX,Y] + [X,rhoY]).

These identities are exactly the degree-3 and degree-4 coefficients of the
homomorphism condition R_l [X,Y]_l = [R_l X, R_l Y] for the quadratic family
R_l = 1 + l R + l^2 rho, [.,.]_l = [.,.] + l [.,.]_R + l^2 [.,.]_rho, which is
how the two-way correspondence with quadratic bunches is checked here.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .core import (
    BilinearStructure,
    CheckReport,
    DimensionMismatchError,
    Operator,
    PreconditionError,
    WorkbenchError,
    aggregate_report,
    check_antisymmetry,
    check_lie,
    scan_tuples,
    vec_iadd,
)
from .lie import LieBiOperator, check_bi_myb, check_even_tempered, derived_bracket


class CoefficientMismatchError(WorkbenchError):
    """A bunch's coefficient tensors disagree with the extracted operators."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def _require_lie(bracket: BilinearStructure) -> None:
    report = check_lie(bracket)
    if not report.passed:
        raise ValueError("bracket is not a Lie bracket")


@dataclass(frozen=True)
class RRhoAlgebra:
    """Lie bracket with an (R, rho) operator pair; the pair identities are checked predicates."""

    bracket: BilinearStructure
    R: Operator
    rho: Operator

    def __post_init__(self):
        _require_lie(self.bracket)
        if self.R.dim != self.bracket.dim or self.rho.dim != self.bracket.dim:
            raise DimensionMismatchError("operator dimension differs from bracket dimension")


@dataclass(frozen=True)
class QuadraticBunch:
    """Coefficients of [.,.]_l = b0 + l b1 + l^2 b2 and R_l = r0 + l r1 + l^2 r2."""

    b0: BilinearStructure
    b1: BilinearStructure
    b2: BilinearStructure
    r0: Operator
    r1: Operator
    r2: Operator

    def __post_init__(self):
        _require_lie(self.b0)
        dims = {self.b0.dim, self.b1.dim, self.b2.dim, self.r0.dim, self.r1.dim, self.r2.dim}
        if len(dims) != 1:
            raise DimensionMismatchError("bunch coefficients have mixed dimensions")

    @property
    def dim(self) -> int:
        return self.b0.dim

    def brackets(self):
        return (self.b0, self.b1, self.b2)

    def operators(self):
        return (self.r0, self.r1, self.r2)

    def bracket_at(self, lam) -> BilinearStructure:
        """[.,.]_l at a concrete parameter value."""
        from .scalars import as_scalar

        lam = as_scalar(lam)
        entries: dict = {}
        for b, coeff in zip(self.brackets(), (1, lam, lam * lam)):
            for (i, j) in b.support():
                acc = entries.setdefault((i, j), {})
                vec_iadd(acc, b.value(i, j), coeff)
        return BilinearStructure(self.dim, entries)


def bracket_rho(a: RRhoAlgebra) -> BilinearStructure:
    """Structure tensor of the quadratic bracket [X,Y]_rho."""
    bracket, R, rho = a.bracket, a.R, a.rho
    br = derived_bracket(bracket, R)
    entries = {}
    for i in range(bracket.dim):
        ri = rho.column(i)
        ui = R.column(i)
        for j in range(bracket.dim):
            vec = bracket.apply_first(ri, j)
            vec_iadd(vec, bracket.apply_second(i, rho.column(j)))
            vec_iadd(vec, rho.apply(bracket.value(i, j)), -1)
            vec_iadd(vec, bracket.apply(ui, R.column(j)))
            vec_iadd(vec, R.apply(br.value(i, j)), -1)
            if vec:
                entries[(i, j)] = vec
    return BilinearStructure(bracket.dim, entries)


def check_rrho(a: RRhoAlgebra) -> CheckReport:
    """Both defining identities, plus the regularity identity as an informational flag."""
    bracket, R, rho = a.bracket, a.R, a.rho
    br = derived_bracket(bracket, R)
    brho = bracket_rho(a)

    def first_residual(i, j):
        acc = rho.apply(brho.value(i, j))
        vec_iadd(acc, bracket.apply(rho.column(i), rho.column(j)), -1)
        return acc

    def second_residual(i, j):
        acc = R.apply(brho.value(i, j))
        vec_iadd(acc, rho.apply(br.value(i, j)))
        vec_iadd(acc, bracket.apply(R.column(i), rho.column(j)), -1)
        vec_iadd(acc, bracket.apply(rho.column(i), R.column(j)), -1)
        return acc

    def regular_residual(i, j):
        acc = R.apply(br.value(i, j))
        vec_iadd(acc, bracket.apply_first(rho.column(i), j), -2)
        vec_iadd(acc, bracket.apply_second(i, rho.column(j)), -2)
        return acc

    subs = (
        scan_tuples("rho-bracket-homomorphism", bracket.dim, 2, first_residual),
        scan_tuples("mixed-bracket-compatibility", bracket.dim, 2, second_residual),
        scan_tuples("regular", bracket.dim, 2, regular_residual, informational=True),
    )
    return aggregate_report("rrho", subs)


def from_bi_myb(g: LieBiOperator) -> RRhoAlgebra:
    """Even-tempered bi-mYB pair -> (R, rho) = (R1 + R2, R1 R2)."""
    if not check_bi_myb(g).passed:
        raise PreconditionError("bi-mYB conditions fail; cannot build the operator pair")
    if not check_even_tempered(g).passed:
        raise PreconditionError("even-tempered identities fail; cannot build the operator pair")
    return RRhoAlgebra(g.bracket, g.R1 + g.R2, g.R1 @ g.R2)


def build_bunch(a: RRhoAlgebra) -> QuadraticBunch:
    """Quadratic bunch with b1, b2 the derived and quadratic brackets of (R, rho)."""
    return QuadraticBunch(
        b0=a.bracket,
        b1=derived_bracket(a.bracket, a.R),
        b2=bracket_rho(a),
        r0=Operator.identity(a.bracket.dim),
        r1=a.R,
        r2=a.rho,
    )


def check_gamma_bunch(q: QuadraticBunch) -> CheckReport:
    """Homomorphism and Jacobi conditions of the family, coefficient-wise in l.

    Homomorphism degree d: sum_{p+q=d} r_p b_q(X,Y) = sum_{p+q=d} [r_p X, r_q Y],
    for d = 0..4.  Degree 1 is the derived-bracket definition, degree 2 the
    quadratic-bracket definition, degrees 3 and 4 the two (R, rho) identities.
    The Jacobiator of [.,.]_l is also checked per degree, plus antisymmetry of
    the coefficient brackets.
    """
    brackets = q.brackets()
    ops = q.operators()
    dim = q.dim
    subs = []
    for d, b in enumerate(brackets):
        rep = check_antisymmetry(b)
        subs.append(replace(rep, name=f"antisymmetry-deg{d}"))

    for d in range(5):
        terms = [(p, d - p) for p in range(3) if 0 <= d - p <= 2]

        def residual(i, j, terms=terms):
            acc: dict = {}
            for p, qq in terms:
                vec_iadd(acc, ops[p].apply(brackets[qq].value(i, j)))
                vec_iadd(acc, q.b0.apply(ops[p].column(i), ops[qq].column(j)), -1)
            return acc

        subs.append(scan_tuples(f"homomorphism-deg{d}", dim, 2, residual))

    for d in range(5):
        terms = [(p, d - p) for p in range(3) if 0 <= d - p <= 2]

        def jac_residual(i, j, k, terms=terms):
            acc: dict = {}
            for p, qq in terms:
                bp, bq = brackets[p], brackets[qq]
                vec_iadd(acc, bq.apply_first(bp.value(i, j), k))
                vec_iadd(acc, bq.apply_first(bp.value(j, k), i))
                vec_iadd(acc, bq.apply_first(bp.value(k, i), j))
            return acc

        subs.append(scan_tuples(f"jacobi-deg{d}", dim, 3, jac_residual))

    return aggregate_report("gamma-bunch", subs)


def extract_rrho(q: QuadraticBunch) -> RRhoAlgebra:
    """Inverse direction: read (R, rho) off the family coefficients r1, r2.

    Requires r0 = identity and a passing gamma-bunch check; verifies that the
    b1 and b2 coefficients coincide with the derived and quadratic brackets
    rebuilt from the extracted operators.
    """
    if not q.r0.is_identity():
        raise PreconditionError("bunch extraction requires r0 = identity")
    gamma = check_gamma_bunch(q)
    if not gamma.passed:
        bad = next(s for s in gamma.subchecks if not s.passed and not s.informational)
        raise PreconditionError(
            f"bunch fails the gamma-bunch conditions ({bad.name} at {bad.witness.indices})"
        )
    a = RRhoAlgebra(q.b0, q.r1, q.r2)
    from .core import tensors_equal_report

    b1_check = tensors_equal_report("b1-matches-derived-bracket", q.b1, derived_bracket(q.b0, q.r1))
    if not b1_check.passed:
        raise CoefficientMismatchError(
            "b1 does not match the derived bracket of r1", b1_check.witness
        )
    b2_check = tensors_equal_report("b2-matches-quadratic-bracket", q.b2, bracket_rho(a))
    if not b2_check.passed:
        raise CoefficientMismatchError(
            "b2 does not match the quadratic bracket of (r1, r2)", b2_check.witness
        )
    return a
