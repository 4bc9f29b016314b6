"""Named check suites over algebra files, with deterministic run reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import __version__
from .algfile import AlgebraFile, ParseError, algebra_file_digest, entry_to_algebra_file, parse_algebra_file
from .scalars import render_scalar
from .bunch import RRhoAlgebra, build_bunch, check_gamma_bunch, check_rrho, extract_rrho
from .catalog import build_entry
from .core import (
    CheckReport,
    JTS_VARIANTS,
    VARIANT_JACOBSON,
    WorkbenchError,
    check_antisymmetry,
    check_jacobi,
    check_jts_identity,
)
from .jordan import (
    DesignCandidate,
    MODE_REDUCED,
    check_design,
    check_equivariance,
    check_rho_identity,
    check_triple_bi_myb,
    check_triple_myb_raw,
    derived_triple,
)
from .lie import (
    LieBiOperator,
    LieWithOperator,
    check_bi_myb,
    check_even_tempered,
    check_even_tempered_xi,
    check_myb_raw,
    check_xi_characterization,
    probe_r0,
)


class UnknownSuiteError(WorkbenchError):
    pass


TOOL = f"opalg {__version__}"


@dataclass
class RunReport:
    source: str
    input_digest: str
    suite: str
    options: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    findings: list = field(default_factory=list)
    tool: str = TOOL

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if not c.informational)

    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_dict(self) -> dict:
        return {
            "tool": self.tool,
            "source": self.source,
            "input_digest": self.input_digest,
            "suite": self.suite,
            "options": {k: str(v) for k, v in sorted(self.options.items())},
            "checks": [c.to_dict() for c in self.checks],
            "findings": self.findings,
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        lines = [
            f"{self.tool}",
            f"source: {self.source}",
            f"suite: {self.suite}",
            f"input digest: {self.input_digest}",
        ]

        def emit(check, depth):
            flag = "PASS" if check.passed else "FAIL"
            if check.informational:
                flag = f"info:{flag.lower()}"
            line = f"{'  ' * depth}{flag} {check.name} (tuples={check.tuples_evaluated})"
            if check.witness is not None:
                residual = [render_scalar(s) for s in check.witness.residual]
                line += f" witness={check.witness.indices} residual={residual}"
            if check.notes:
                line += f" notes={list(check.notes)}"
            lines.append(line)
            for sub in check.subchecks:
                emit(sub, depth + 1)

        for check in self.checks:
            emit(check, 0)
        for item in self.findings:
            lines.append(f"finding: {json.dumps(item, sort_keys=True)}")
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"


def load_input(spec: str) -> tuple:
    """Resolve 'catalog:NAME[?params]' or a file path to an AlgebraFile."""
    if spec.startswith("catalog:"):
        entry = build_entry(spec[len("catalog:"):])
        return entry_to_algebra_file(entry), spec
    try:
        with open(spec, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read input {spec!r}: {exc}") from None
    return parse_algebra_file(text), spec


def _lie_base_checks(af: AlgebraFile) -> list:
    bracket = af.require_bracket()
    return [check_antisymmetry(bracket), check_jacobi(bracket)]


def _suite_lie_base(af, opts):
    return _lie_base_checks(af), []


def _suite_myb(af, opts):
    checks = _lie_base_checks(af)
    if all(c.passed for c in checks):
        checks.append(check_myb_raw(af.require_bracket(), af.require_operator(opts.get("operator", "R"))))
    return checks, []


def _bi_operator(af, opts) -> LieBiOperator:
    return LieBiOperator(
        af.require_bracket(),
        af.require_operator(opts.get("operator", "R1")),
        af.require_operator(opts.get("operator2", "R2")),
    )


def _suite_bi_myb(af, opts):
    checks = _lie_base_checks(af)
    if all(c.passed for c in checks):
        checks.append(check_bi_myb(_bi_operator(af, opts)))
    return checks, []


def _suite_even_tempered(af, opts):
    checks = _lie_base_checks(af)
    if all(c.passed for c in checks):
        g = _bi_operator(af, opts)
        checks.append(check_bi_myb(g))
        checks.append(check_even_tempered(g))
    return checks, []


def _suite_xi(af, opts):
    checks = _lie_base_checks(af)
    if all(c.passed for c in checks):
        g = LieWithOperator(af.require_bracket(), af.require_operator(opts.get("operator", "R")))
        xi = af.require_operator(opts.get("operator2", "xi"))
        checks.append(check_xi_characterization(g, xi))
        checks.append(check_even_tempered_xi(g, xi))
    return checks, []


def _suite_r0_probe(af, opts):
    checks = _lie_base_checks(af)
    findings = []
    if all(c.passed for c in checks):
        g = _bi_operator(af, opts)
        bi = check_bi_myb(g)
        checks.append(bi)
        if bi.passed:
            probe = probe_r0(g)
            checks.append(probe)
            myb = probe.sub("midpoint-myb")
            findings.append(
                {
                    "kind": "midpoint-myb-outcome",
                    "passed": myb.passed,
                    "witness": myb.witness.to_dict() if myb.witness else None,
                }
            )
    return checks, findings


def _variant(opts) -> str:
    variant = opts.get("variant", VARIANT_JACOBSON)
    if variant not in JTS_VARIANTS:
        raise UnknownSuiteError(f"unknown triple-system identity variant: {variant!r}")
    return variant


def _suite_jordan_base(af, opts):
    triple = af.require_triple()
    variant = _variant(opts)
    force = bool(opts.get("force"))
    other = next(v for v in JTS_VARIANTS if v != variant)
    checks = [check_jts_identity(triple, variant, force=force)]
    info = check_jts_identity(triple, other, force=force)
    checks.append(
        CheckReport(
            name=info.name,
            passed=info.passed,
            witness=info.witness,
            tuples_evaluated=info.tuples_evaluated,
            informational=True,
        )
    )
    return checks, []


def _suite_triple_myb(af, opts):
    triple = af.require_triple()
    force = bool(opts.get("force"))
    checks = [check_jts_identity(triple, _variant(opts), force=force)]
    if checks[0].passed:
        checks.append(check_triple_myb_raw(triple, af.require_operator(opts.get("operator", "R"))))
    return checks, []


def _suite_triple_bi_myb(af, opts):
    triple = af.require_triple()
    force = bool(opts.get("force"))
    checks = [check_jts_identity(triple, _variant(opts), force=force)]
    if checks[0].passed:
        checks.append(
            check_triple_bi_myb(
                triple,
                af.require_operator(opts.get("operator", "R1")),
                af.require_operator(opts.get("operator2", "R2")),
            )
        )
    return checks, []


def _suite_design(af, opts):
    checks = _lie_base_checks(af)
    if all(c.passed for c in checks):
        candidate = DesignCandidate(af.require_bracket(), af.require_triple(), _variant(opts))
        checks.append(check_design(candidate, force=bool(opts.get("force"))))
    return checks, []


def _suite_equivariance(af, opts):
    checks = _lie_base_checks(af)
    if all(c.passed for c in checks):
        checks.append(
            check_equivariance(af.require_bracket(), af.require_triple(), force=bool(opts.get("force")))
        )
    return checks, []


def _suite_rho(af, opts):
    triple = af.require_triple()
    rho = af.require_operator(opts.get("operator", "rho"))
    derived = None
    if "operator2" in opts:
        derived = derived_triple(triple, af.require_operator(opts["operator2"]), MODE_REDUCED)
    return [check_rho_identity(triple, rho, derived)], []


def _rrho_algebra(af, opts) -> RRhoAlgebra:
    return RRhoAlgebra(
        af.require_bracket(),
        af.require_operator(opts.get("operator", "R")),
        af.require_operator(opts.get("operator2", "rho")),
    )


def _suite_rrho(af, opts):
    checks = _lie_base_checks(af)
    if all(c.passed for c in checks):
        checks.append(check_rrho(_rrho_algebra(af, opts)))
    return checks, []


def _suite_rrho_bunch(af, opts):
    checks = _lie_base_checks(af)
    findings = []
    if all(c.passed for c in checks):
        a = _rrho_algebra(af, opts)
        checks.append(check_rrho(a))
        bunch = build_bunch(a)
        gamma = check_gamma_bunch(bunch)
        checks.append(gamma)
        if gamma.passed:
            back = extract_rrho(bunch)
            checks.append(
                CheckReport(name="extraction-round-trip", passed=back == a, tuples_evaluated=1)
            )
    return checks, findings


SUITES = {
    "lie-base": _suite_lie_base,
    "myb": _suite_myb,
    "bi-myb": _suite_bi_myb,
    "even-tempered": _suite_even_tempered,
    "xi": _suite_xi,
    "r0-probe": _suite_r0_probe,
    "jordan-base": _suite_jordan_base,
    "triple-myb": _suite_triple_myb,
    "triple-bi-myb": _suite_triple_bi_myb,
    "design": _suite_design,
    "equivariance": _suite_equivariance,
    "rho": _suite_rho,
    "rrho": _suite_rrho,
    "rrho+bunch": _suite_rrho_bunch,
}


def run_suite(input_spec, suite: str, options: dict | None = None) -> RunReport:
    """Run a named suite against a file path, catalog name, or AlgebraFile."""
    options = dict(options or {})
    if suite not in SUITES:
        raise UnknownSuiteError(f"unknown suite {suite!r}; known: {sorted(SUITES)}")
    if isinstance(input_spec, AlgebraFile):
        af, source = input_spec, options.pop("source", "<memory>")
    else:
        af, source = load_input(input_spec)
    checks, findings = SUITES[suite](af, options)
    return RunReport(
        source=source,
        input_digest=algebra_file_digest(af),
        suite=suite,
        options=options,
        checks=checks,
        findings=findings,
    )
