"""Jordan triple systems with operators: triple mYB identity, derived triples,
two-operator systems with normal/even-tempered classification, rho-identity.

The triple mYB identity is R<RX,Y,Z> + R<X,Y,RZ> = <RX,Y,RZ> + R^2<X,Y,Z>.
The derived triple <.,.,.>_R exists in a full seven-term form and, whenever
the triple mYB identity holds, in the three-term reduced form
<RX,RY,Z> + <X,RY,RZ> - R<X,RY,Z>.
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass

from .core import (
    BilinearStructure,
    CheckReport,
    DimensionMismatchError,
    Operator,
    PreconditionError,
    TrilinearStructure,
    VARIANT_JACOBSON,
    aggregate_report,
    check_jts_identity,
    check_lie,
    guard_scan,
    operators_equal_report,
    scan_tuples,
    tensors_equal_report,
    vec_iadd,
)
from .scalars import scalar

BASE_UNVERIFIED_NOTE = "base-JTS-unverified"


@dataclass(frozen=True)
class TripleWithOperator:
    """A triple system with one operator, validated against a named JTS variant.

    Constructing with a failing (or guard-exceeding) triple requires
    unchecked=True; downstream reports then carry a base-JTS-unverified note.
    """

    triple: TrilinearStructure
    R: Operator
    jts_variant: str = VARIANT_JACOBSON
    base_unverified: bool = False
    unchecked: InitVar[bool] = False
    force: InitVar[bool] = False

    def __post_init__(self, unchecked, force):
        if self.R.dim != self.triple.dim:
            raise DimensionMismatchError("operator dimension differs from triple dimension")
        if unchecked:
            object.__setattr__(self, "base_unverified", True)
            return
        report = check_jts_identity(self.triple, self.jts_variant, force=force)
        if not report.passed:
            raise ValueError(
                f"triple fails the {self.jts_variant} identity at "
                f"{report.witness.indices}; pass unchecked=True to proceed"
            )

    @property
    def notes(self) -> tuple:
        return (BASE_UNVERIFIED_NOTE,) if self.base_unverified else ()


@dataclass(frozen=True)
class DesignCandidate:
    """A Lie bracket plus a candidate triple; design conditions are checked, not assumed."""

    bracket: BilinearStructure
    triple: TrilinearStructure
    jts_variant: str = VARIANT_JACOBSON

    def __post_init__(self):
        if self.bracket.dim != self.triple.dim:
            raise DimensionMismatchError("bracket and triple dimensions differ")
        lie = check_lie(self.bracket)
        if not lie.passed:
            raise ValueError("bracket component is not a Lie bracket")


# ---------------------------------------------------------------------------
# equivariance and designs


def check_equivariance(
    bracket: BilinearStructure, triple: TrilinearStructure, force: bool = False
) -> CheckReport:
    """ad_A as a derivation of the triple:
    [A,<X,Y,Z>] = <[A,X],Y,Z> + <X,[A,Y],Z> + <X,Y,[A,Z]>, scanned over (a,x,y,z).
    """
    if bracket.dim != triple.dim:
        raise DimensionMismatchError("bracket and triple dimensions differ")
    guard_scan(bracket.dim, 4, force)

    def residual(a, x, y, z):
        acc = bracket.apply_second(a, triple.value(x, y, z))
        vec_iadd(acc, triple.apply_first(bracket.value(a, x), y, z), -1)
        vec_iadd(acc, triple.apply_middle(x, bracket.value(a, y), z), -1)
        vec_iadd(acc, triple.apply_last(x, y, bracket.value(a, z)), -1)
        return acc

    return scan_tuples("equivariance", bracket.dim, 4, residual)


def _polarized_design_residual(bracket, triple):
    """Full polarization of [A,<X,A,X>] + [X,<A,X,A>] over (a1,a2,x1,x2).

    The expression has multidegree (2,2) in (A,X); its symmetrized 4-linear
    form vanishes on all basis tuples iff the original vanishes identically
    over the rationals.
    """
    quarter = scalar(1, 4)

    def residual(a1, a2, x1, x2):
        acc: dict = {}
        for ap, aq in ((a1, a2), (a2, a1)):
            for xr, xs in ((x1, x2), (x2, x1)):
                vec_iadd(acc, bracket.apply_second(ap, triple.value(xr, aq, xs)))
                vec_iadd(acc, bracket.apply_second(xr, triple.value(ap, xs, aq)))
        return {k: quarter * v for k, v in acc.items()}

    return residual


def check_design(d: DesignCandidate, force: bool = False) -> CheckReport:
    """JTS identity + equivariance + polarized quadratic bracket condition."""
    guard_scan(d.bracket.dim, 4, force)
    subs = [
        check_jts_identity(d.triple, d.jts_variant, force=force),
        check_equivariance(d.bracket, d.triple, force=force),
        scan_tuples(
            "polarized-bracket-condition",
            d.bracket.dim,
            4,
            _polarized_design_residual(d.bracket, d.triple),
        ),
    ]
    return aggregate_report("design", subs)


# ---------------------------------------------------------------------------
# triple mYB and derived triples

_triple_myb_cache: dict = {}


def check_triple_myb_raw(
    triple: TrilinearStructure, R: Operator, name: str = "triple-myb", notes=()
) -> CheckReport:
    cached = _triple_myb_cache.get((triple, R, name, tuple(notes)))
    if cached is not None:
        return cached
    rsq = R @ R

    def residual(i, j, k):
        u = R.column(i)
        w = R.column(k)
        s = triple.apply_first(u, j, k)
        vec_iadd(s, triple.apply_last(i, j, w))
        acc = R.apply(s)
        vec_iadd(acc, triple.apply_first_last(u, j, w), -1)
        vec_iadd(acc, rsq.apply(triple.value(i, j, k)), -1)
        return acc

    report = scan_tuples(name, triple.dim, 3, residual, notes=notes)
    _triple_myb_cache[(triple, R, name, tuple(notes))] = report
    return report


def check_triple_myb(s: TripleWithOperator) -> CheckReport:
    return check_triple_myb_raw(s.triple, s.R, notes=s.notes)


MODE_FULL = "full"
MODE_REDUCED = "reduced"


def derived_triple(triple: TrilinearStructure, R: Operator, mode: str = MODE_REDUCED) -> TrilinearStructure:
    """Raw derived-triple tensor in the requested form.

    full:    <X,RY,RZ> + <RX,Y,RZ> + <RX,RY,Z>
             - R<RX,Y,Z> - R<X,RY,Z> - R<X,Y,RZ> + R^2<X,Y,Z>
    reduced: <RX,RY,Z> + <X,RY,RZ> - R<X,RY,Z>

    The two agree exactly when the triple mYB identity holds; this function
    enforces nothing (see triple_r for the checked wrapper).
    """
    if R.dim != triple.dim:
        raise DimensionMismatchError("operator dimension differs from triple dimension")
    if mode not in (MODE_FULL, MODE_REDUCED):
        raise ValueError(f"unknown derived-triple mode: {mode!r}")
    dim = triple.dim
    rsq = R @ R if mode == MODE_FULL else None
    entries = {}
    for j in range(dim):
        v = R.column(j)
        for i in range(dim):
            u = R.column(i)
            for k in range(dim):
                w = R.column(k)
                if mode == MODE_REDUCED:
                    vec = triple.apply_first_middle(u, v, k)
                    vec_iadd(vec, triple.apply_middle_last(i, v, w))
                    vec_iadd(vec, R.apply(triple.apply_middle(i, v, k)), -1)
                else:
                    vec = triple.apply_middle_last(i, v, w)
                    vec_iadd(vec, triple.apply_first_last(u, j, w))
                    vec_iadd(vec, triple.apply_first_middle(u, v, k))
                    s = triple.apply_first(u, j, k)
                    vec_iadd(s, triple.apply_middle(i, v, k))
                    vec_iadd(s, triple.apply_last(i, j, w))
                    vec_iadd(vec, R.apply(s), -1)
                    vec_iadd(vec, rsq.apply(triple.value(i, j, k)))
                if vec:
                    entries[(i, j, k)] = vec
    return TrilinearStructure(dim, entries)


def triple_r(s: TripleWithOperator, mode: str = MODE_REDUCED) -> TrilinearStructure:
    """Derived triple of a triple-with-operator; reduced mode requires triple mYB."""
    if mode == MODE_REDUCED:
        report = check_triple_myb(s)
        if not report.passed:
            raise PreconditionError(
                f"reduced derived triple requires the triple mYB identity; it "
                f"fails at {report.witness.indices}"
            )
    return derived_triple(s.triple, s.R, mode)


def check_triple_r_homomorphism(s: TripleWithOperator) -> CheckReport:
    """R<X,Y,Z>_R = <RX,RY,RZ>: R maps the derived triple onto R-images."""
    base = check_triple_myb(s)
    if not base.passed:
        raise PreconditionError("the transport identity presupposes the triple mYB identity")
    derived = derived_triple(s.triple, s.R, MODE_REDUCED)
    R = s.R

    def residual(i, j, k):
        acc = R.apply(derived.value(i, j, k))
        vec_iadd(acc, s.triple.apply(R.column(i), R.column(j), R.column(k)), -1)
        return acc

    return scan_tuples("triple-r-homomorphism", s.triple.dim, 3, residual, notes=s.notes)


# ---------------------------------------------------------------------------
# two-operator triple systems


def check_triple_bi_myb(
    triple: TrilinearStructure, R1: Operator, R2: Operator, notes=()
) -> CheckReport:
    """Core two-operator conditions plus normal / even-tempered classification.

    Core (asserted): R1 and R2 commute, both are triple-mYB, and the two full
    derived triples coincide.  Classification (informational): the normal
    chain <X,rhoY,Z> = <R1X,Y,R2Z>+<R2X,Y,R1Z>-rho<X,Y,Z> = reduced(R1) =
    reduced(R2) with rho = R1R2, the even-tempered chain, the concise
    middle-rho form of the normal chain, and their consistency.
    """
    if R1.dim != triple.dim or R2.dim != triple.dim:
        raise DimensionMismatchError("operator dimension differs from triple dimension")
    dim = triple.dim
    rho = R1 @ R2

    def reduced_residual(R):
        def value(i, j, k):
            v = R.column(j)
            vec = triple.apply_first_middle(R.column(i), v, k)
            vec_iadd(vec, triple.apply_middle_last(i, v, R.column(k)))
            vec_iadd(vec, R.apply(triple.apply_middle(i, v, k)), -1)
            return vec

        return value

    def middle_rho_value(i, j, k):
        return triple.apply_middle(i, rho.column(j), k)

    def outer_pair_value(i, j, k):
        vec = triple.apply_first_last(R1.column(i), j, R2.column(k))
        vec_iadd(vec, triple.apply_first_last(R2.column(i), j, R1.column(k)))
        vec_iadd(vec, rho.apply(triple.value(i, j, k)), -1)
        return vec

    reduced1 = reduced_residual(R1)
    reduced2 = reduced_residual(R2)

    def diff_scan(name, value_a, value_b, informational=False):
        def residual(i, j, k):
            acc = value_a(i, j, k)
            vec_iadd(acc, value_b(i, j, k), -1)
            return acc

        return scan_tuples(name, dim, 3, residual, notes=notes, informational=informational)

    normal = aggregate_report(
        "normal",
        (
            diff_scan("normal-outer-pair", middle_rho_value, outer_pair_value),
            diff_scan("normal-reduced-r1", middle_rho_value, reduced1),
            diff_scan("normal-reduced-r2", middle_rho_value, reduced2),
        ),
        informational=True,
    )

    def sym_lhs(i, j, k):
        m = rho.column(j)
        vec = triple.apply(R1.column(i), m, R2.column(k))
        vec_iadd(vec, triple.apply(R2.column(i), m, R1.column(k)))
        vec_iadd(vec, rho.apply(triple.apply_middle(i, m, k)), -1)
        return vec

    def printed_lhs(i, j, k):
        m = rho.column(j)
        vec = triple.apply(R1.column(i), m, R2.column(k))
        vec_iadd(vec, triple.apply(R2.column(i), m, R2.column(k)))
        vec_iadd(vec, rho.apply(triple.apply_middle(i, m, k)), -1)
        return vec

    def squared_reduced(R):
        rsq = R @ R

        def value(i, j, k):
            v = rsq.column(j)
            vec = triple.apply_first_middle(rsq.column(i), v, k)
            vec_iadd(vec, triple.apply_middle_last(i, v, rsq.column(k)))
            vec_iadd(vec, rsq.apply(triple.apply_middle(i, v, k)), -1)
            return vec

        return value

    sq1 = squared_reduced(R1)
    sq2 = squared_reduced(R2)
    even = aggregate_report(
        "even-tempered",
        (
            diff_scan("even-tempered-r1", sym_lhs, sq1),
            diff_scan("even-tempered-r2", sym_lhs, sq2),
        ),
        informational=True,
    )
    printed = diff_scan("even-tempered-as-printed", printed_lhs, sq1, informational=True)

    derived_full_1 = derived_triple(triple, R1, MODE_FULL)
    middle_rho_tensor_entries = {}
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                vec = middle_rho_value(i, j, k)
                if vec:
                    middle_rho_tensor_entries[(i, j, k)] = vec
    middle_rho_tensor = TrilinearStructure(dim, middle_rho_tensor_entries)
    middle_rho_form = tensors_equal_report(
        "middle-rho-form", derived_full_1, middle_rho_tensor, informational=True
    )
    consistency = CheckReport(
        name="middle-rho-consistency",
        passed=normal.passed == middle_rho_form.passed,
        informational=True,
    )

    subs = [
        operators_equal_report("operators-commute", R1 @ R2, R2 @ R1),
        check_triple_myb_raw(triple, R1, "triple-myb-r1", notes=notes),
        check_triple_myb_raw(triple, R2, "triple-myb-r2", notes=notes),
        tensors_equal_report(
            "derived-triples-coincide",
            derived_full_1,
            derived_triple(triple, R2, MODE_FULL),
        ),
        normal,
        even,
        printed,
        middle_rho_form,
        consistency,
    ]
    return aggregate_report("triple-bi-myb", subs, notes=notes)


def check_rho_identity(
    triple: TrilinearStructure, rho: Operator, derived: TrilinearStructure | None = None
) -> CheckReport:
    """<rhoX,Y,rhoZ> = rho<X,rhoY,Z>; optionally also rho<X,Y,Z>' = <rhoX,Y,rhoZ>
    against a supplied derived-triple tensor <.,.,.>'.
    """
    if rho.dim != triple.dim:
        raise DimensionMismatchError("operator dimension differs from triple dimension")

    def residual(i, j, k):
        acc = triple.apply_first_last(rho.column(i), j, rho.column(k))
        vec_iadd(acc, rho.apply(triple.apply_middle(i, rho.column(j), k)), -1)
        return acc

    subs = [scan_tuples("rho-exchange", triple.dim, 3, residual)]
    if derived is not None:
        if derived.dim != triple.dim:
            raise DimensionMismatchError("derived triple dimension differs")

        def transport_residual(i, j, k):
            acc = rho.apply(derived.value(i, j, k))
            vec_iadd(acc, triple.apply_first_last(rho.column(i), j, rho.column(k)), -1)
            return acc

        subs.append(scan_tuples("rho-derived-transport", triple.dim, 3, transport_residual))
    return aggregate_report("rho-identity", subs)
