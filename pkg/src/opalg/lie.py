"""Lie algebras with one or two operators: mYB identity and derived structures.

The mYB identity is R[RX,Y] + R[X,RY] = [RX,RY] + R^2[X,Y]; it coincides with
the modified classical Yang-Baxter equation when R^2 = 1.  Constructors here
validate only Lie-ness of the base bracket, never any operator condition, so
failing candidates can always be checked and reported.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    BilinearStructure,
    CheckReport,
    DimensionMismatchError,
    Operator,
    PreconditionError,
    aggregate_report,
    check_lie,
    operators_equal_report,
    scan_tuples,
    tensors_equal_report,
    vec_iadd,
)


def _require_lie(bracket: BilinearStructure) -> None:
    report = check_lie(bracket)
    if not report.passed:
        bad = next(s for s in report.subchecks if not s.passed)
        raise ValueError(
            f"bracket is not a Lie bracket: {bad.name} fails at {bad.witness.indices}"
        )


def _require_dim(bracket: BilinearStructure, *operators: Operator) -> None:
    for op in operators:
        if op.dim != bracket.dim:
            raise DimensionMismatchError("operator dimension differs from bracket dimension")


@dataclass(frozen=True)
class LieWithOperator:
    """A Lie bracket together with one operator acting on it."""

    bracket: BilinearStructure
    R: Operator

    def __post_init__(self):
        _require_lie(self.bracket)
        _require_dim(self.bracket, self.R)


@dataclass(frozen=True)
class LieBiOperator:
    """A Lie bracket with two operators; their conditions are checked, not assumed."""

    bracket: BilinearStructure
    R1: Operator
    R2: Operator

    def __post_init__(self):
        _require_lie(self.bracket)
        _require_dim(self.bracket, self.R1, self.R2)


# ---------------------------------------------------------------------------
# single-operator checks

_myb_cache: dict = {}


def check_myb_raw(bracket: BilinearStructure, R: Operator, name: str = "myb") -> CheckReport:
    """mYB identity scan on a raw (bracket, operator) pair."""
    cached = _myb_cache.get((bracket, R, name))
    if cached is not None:
        return cached
    rsq = R @ R

    def residual(i, j):
        u = R.column(i)
        v = R.column(j)
        s = bracket.apply_first(u, j)
        vec_iadd(s, bracket.apply_second(i, v))
        acc = R.apply(s)
        vec_iadd(acc, bracket.apply(u, v), -1)
        vec_iadd(acc, rsq.apply(bracket.value(i, j)), -1)
        return acc

    report = scan_tuples(name, bracket.dim, 2, residual)
    _myb_cache[(bracket, R, name)] = report
    return report


def check_myb(g: LieWithOperator) -> CheckReport:
    return check_myb_raw(g.bracket, g.R)


def derived_bracket(bracket: BilinearStructure, R: Operator) -> BilinearStructure:
    """Structure tensor of [X,Y]_R = [RX,Y] + [X,RY] - R[X,Y].

    Makes no Lie-ness claim; callers check the result.
    """
    _require_dim(bracket, R)
    entries = {}
    for i in range(bracket.dim):
        u = R.column(i)
        for j in range(bracket.dim):
            vec = bracket.apply_first(u, j)
            vec_iadd(vec, bracket.apply_second(i, R.column(j)))
            vec_iadd(vec, R.apply(bracket.value(i, j)), -1)
            if vec:
                entries[(i, j)] = vec
    return BilinearStructure(bracket.dim, entries)


def bracket_r(g: LieWithOperator) -> BilinearStructure:
    return derived_bracket(g.bracket, g.R)


def check_polynomial_closure(g: LieWithOperator, coeffs) -> CheckReport:
    """mYB check for (g, f(R)); requires that (g, R) itself passes."""
    base = check_myb(g)
    if not base.passed:
        raise PreconditionError(
            f"polynomial closure requires the mYB identity for R; it fails at "
            f"{base.witness.indices}"
        )
    from .core import op_polynomial

    fr = op_polynomial(coeffs, g.R)
    inner = check_myb_raw(g.bracket, fr)
    return CheckReport(
        name="polynomial-closure",
        passed=inner.passed,
        witness=inner.witness,
        tuples_evaluated=inner.tuples_evaluated,
        subchecks=(inner,),
    )


# ---------------------------------------------------------------------------
# two-operator checks


def check_bi_myb(g: LieBiOperator) -> CheckReport:
    """Commuting operators, both mYB, with identical derived brackets."""
    subs = [
        operators_equal_report("operators-commute", g.R1 @ g.R2, g.R2 @ g.R1),
        check_myb_raw(g.bracket, g.R1, "myb-r1"),
        check_myb_raw(g.bracket, g.R2, "myb-r2"),
        tensors_equal_report(
            "derived-brackets-coincide",
            derived_bracket(g.bracket, g.R1),
            derived_bracket(g.bracket, g.R2),
        ),
    ]
    return aggregate_report("bi-myb", subs)


def _even_tempered_residual(bracket, R1, R2, Rsq):
    """[R1X,R2Y] + [R2X,R1Y] - R1R2[X,Y]  minus  [Rsq X,Y] + [X,Rsq Y] - Rsq[X,Y]."""
    r1r2 = R1 @ R2

    def residual(i, j):
        u1, u2 = R1.column(i), R2.column(i)
        v1, v2 = R1.column(j), R2.column(j)
        acc = bracket.apply(u1, v2)
        vec_iadd(acc, bracket.apply(u2, v1))
        base = bracket.value(i, j)
        vec_iadd(acc, r1r2.apply(base), -1)
        vec_iadd(acc, bracket.apply_first(Rsq.column(i), j), -1)
        vec_iadd(acc, bracket.apply_second(i, Rsq.column(j)), -1)
        vec_iadd(acc, Rsq.apply(base))
        return acc

    return residual


def check_even_tempered(g: LieBiOperator) -> CheckReport:
    """Both mixed second-order identities of an even-tempered pair."""
    subs = [
        scan_tuples(
            "even-tempered-r1",
            g.bracket.dim,
            2,
            _even_tempered_residual(g.bracket, g.R1, g.R2, g.R1 @ g.R1),
        ),
        scan_tuples(
            "even-tempered-r2",
            g.bracket.dim,
            2,
            _even_tempered_residual(g.bracket, g.R1, g.R2, g.R2 @ g.R2),
        ),
    ]
    return aggregate_report("even-tempered", subs)


def _derivation_residual(bracket, xi):
    def residual(i, j):
        acc = xi.apply(bracket.value(i, j))
        vec_iadd(acc, bracket.apply_first(xi.column(i), j), -1)
        vec_iadd(acc, bracket.apply_second(i, xi.column(j)), -1)
        return acc

    return residual


def check_xi_characterization(g: LieWithOperator, xi: Operator) -> CheckReport:
    """Derivation xi commuting with R with [xiX,xiY] = [SX,Y]+[X,SY]-S[X,Y], S = R xi.

    Also verifies that (bracket, R, R+xi) is bi-mYB and that xi is a
    derivation of the derived bracket.
    """
    _require_dim(g.bracket, xi)
    bracket, R = g.bracket, g.R
    S = R @ xi

    def pair_residual(i, j):
        acc = bracket.apply(xi.column(i), xi.column(j))
        vec_iadd(acc, bracket.apply_first(S.column(i), j), -1)
        vec_iadd(acc, bracket.apply_second(i, S.column(j)), -1)
        vec_iadd(acc, S.apply(bracket.value(i, j)))
        return acc

    br = derived_bracket(bracket, R)
    subs = [
        scan_tuples("xi-derivation", bracket.dim, 2, _derivation_residual(bracket, xi)),
        operators_equal_report("xi-commutes-with-r", R @ xi, xi @ R),
        scan_tuples("xi-pair-identity", bracket.dim, 2, pair_residual),
        check_bi_myb(LieBiOperator(bracket, R, R + xi)),
        scan_tuples(
            "xi-derivation-derived-bracket",
            bracket.dim,
            2,
            _derivation_residual(br, xi),
        ),
    ]
    return aggregate_report("xi-characterization", subs)


def check_even_tempered_xi(g: LieWithOperator, xi: Operator) -> CheckReport:
    """[RX,xiY] + [xiX,RY] - R xi [X,Y] = [R^2 X,Y] - 2[RX,RY] + [X,R^2 Y]."""
    _require_dim(g.bracket, xi)
    bracket, R = g.bracket, g.R
    rxi = R @ xi
    rsq = R @ R

    def residual(i, j):
        u, v = R.column(i), R.column(j)
        acc = bracket.apply(u, xi.column(j))
        vec_iadd(acc, bracket.apply(xi.column(i), v))
        vec_iadd(acc, rxi.apply(bracket.value(i, j)), -1)
        vec_iadd(acc, bracket.apply_first(rsq.column(i), j), -1)
        vec_iadd(acc, bracket.apply(u, v), 2)
        vec_iadd(acc, bracket.apply_second(i, rsq.column(j)), -1)
        return acc

    return scan_tuples("even-tempered-xi", bracket.dim, 2, residual)


def probe_r0(g: LieBiOperator) -> CheckReport:
    """Midpoint operator R0 = (R1+R2)/2: bracket coincidence plus an mYB probe.

    The derived bracket of R0 must coincide with the common derived bracket
    (asserted); whether (bracket, R0) satisfies mYB is reported informationally.
    """
    base = check_bi_myb(g)
    if not base.passed:
        raise PreconditionError("midpoint probe requires a bi-mYB instance")
    from .scalars import scalar

    r0 = (g.R1 + g.R2).scale(scalar(1, 2))
    coincide = tensors_equal_report(
        "midpoint-bracket-coincidence",
        derived_bracket(g.bracket, r0),
        derived_bracket(g.bracket, g.R1),
    )
    myb = check_myb_raw(g.bracket, r0, "midpoint-myb")
    subs = (
        coincide,
        CheckReport(
            name=myb.name,
            passed=myb.passed,
            witness=myb.witness,
            tuples_evaluated=myb.tuples_evaluated,
            informational=True,
        ),
    )
    return aggregate_report("midpoint-probe", subs)


def convert_params(R1: Operator, R2: Operator) -> tuple:
    """(R1, R2) -> (R, xi) with R = R1 and xi = R2 - R1."""
    if R1.dim != R2.dim:
        raise DimensionMismatchError("operator dims differ")
    return R1, R2 - R1


def convert_params_inverse(R: Operator, xi: Operator) -> tuple:
    """(R, xi) -> (R1, R2) with R1 = R and R2 = R + xi."""
    if R.dim != xi.dim:
        raise DimensionMismatchError("operator dims differ")
    return R, R + xi
