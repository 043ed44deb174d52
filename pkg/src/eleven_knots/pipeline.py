"""End-to-end compilation of a Schubert form into a validated diagram report."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any

from .attach import Diagram, construct_diagram
from .bridge import Involution, bridge_sequence, search_conventions
from .core import SchubertForm
from .diagram import ChordDiagram, EmbeddingReport, count_alpha_beta, realize, validate_embedding
from .errors import FormulaInconsistencyError, OracleFailureError, PipelineError
from .invariants import (
    AlexanderPolynomial,
    CMForm,
    HSForm,
    IntersectionNumbers,
    RasmussenForm,
    alexander_polynomial,
    hs_form,
    intersection_numbers,
    theorem_case,
    to_cm,
    to_rasmussen,
)
from .tracks import LITERAL, Convention, FoldedMeasure, classify_track, folded_measure

SCHEMA_VERSION = 1
OK = "ok"

log = logging.getLogger("eleven_knots")


@dataclass
class PipelineReport:
    """Everything one compilation produced, up to the first failing stage."""

    form: SchubertForm
    convention: str = LITERAL.name
    status: str = OK
    error: dict | None = None
    folded: FoldedMeasure | None = None
    phi: Involution | None = None
    psi: Involution | None = None
    bridge: tuple | None = None
    diagram: Diagram | None = None
    chords: ChordDiagram | None = None
    oracle: EmbeddingReport | None = None
    stage_reports: list = field(default_factory=list)
    alpha_beta: int | None = None
    alexander: AlexanderPolynomial | None = None
    inums: IntersectionNumbers | None = None
    hs_case: str | None = None
    track: str | None = None
    hs: HSForm | None = None
    rasmussen: RasmussenForm | None = None
    cm: CMForm | None = None
    include_stages: bool = False
    exit_code: int = 0

    @property
    def ok(self) -> bool:
        return self.status == OK

    def to_dict(self, tables: bool = True) -> dict[str, Any]:
        """JSON-ready dict; positions appear doubled under ``_x2`` keys.

        ``tables=False`` leaves out the phi and psi transposition lists.
        """
        out: dict[str, Any] = {"schema_version": SCHEMA_VERSION,
                               "schubert": list(self.form.as_tuple()),
                               "convention": self.convention,
                               "status": self.status}
        if self.error is not None:
            out["error"] = self.error
        if self.folded is not None:
            fm = self.folded
            out["folded"] = {"case": fm.descriptor.variant, "weights": list(fm.weights),
                             "centers": list(fm.center_names), "centers_x2": [2 * p for p in fm.centers],
                             "n": fm.n}
            bp = fm.basepoints
            out["basepoints_x2"] = [2 * p for p in bp.as_tuple()]
            out["L"] = bp.L
        if tables and self.phi is not None:
            out["phi_x2"] = [list(p) for p in self.phi.pairs2]
        if tables and self.psi is not None:
            out["psi_x2"] = [list(p) for p in self.psi.pairs2]
        if self.bridge is not None:
            out["bridge_x2"] = [2 * v for v in self.bridge]
        if self.diagram is not None:
            d = self.diagram
            out["alpha_x2"] = d.alpha.twice_value
            out["beta_x2"] = list(d.beta.terms)
            if self.include_stages and d.stages:
                out["stages_x2"] = [list(s.terms) for s in d.stages]
        if self.oracle is not None:
            out["oracle"] = self.oracle.to_dict()
        if self.stage_reports:
            out["stage_oracle"] = [r.passed for r in self.stage_reports]
        if self.alpha_beta is not None:
            out["alpha_beta"] = self.alpha_beta
        if self.alexander is not None:
            out["alexander"] = self.alexander.as_pairs()
        if self.inums is not None:
            out["inums"] = list(self.inums.as_tuple())
        if self.hs_case is not None:
            out["hs_case"] = self.hs_case
        if self.track is not None:
            out["track"] = self.track
        if self.hs is not None:
            out["hs"] = list(self.hs.as_tuple())
        if self.rasmussen is not None:
            out["rasmussen"] = list(self.rasmussen.as_tuple())
        if self.cm is not None:
            out["cm"] = list(self.cm.as_tuple())
        return out


def resolve_convention(calibrated: bool) -> Convention:
    return search_conventions() if calibrated else LITERAL


def compile_form(form: SchubertForm, convention: Convention = LITERAL, stages: bool = False,
                 check_stages: bool = False) -> PipelineReport:
    """Run every stage; a typed failure is recorded in the report, not raised."""
    report = PipelineReport(form, convention=convention.name, include_stages=stages)
    try:
        _run(report, convention, keep_stages=stages or check_stages, check_stages=check_stages)
    except PipelineError as exc:
        report.status = exc.code
        report.error = exc.to_dict()
        report.exit_code = exc.exit_code
        log.info("%s: %s", form, exc.message)
    return report


def _run(rep: PipelineReport, convention: Convention, keep_stages: bool, check_stages: bool) -> None:
    form = rep.form
    rep.folded = folded_measure(form, convention)
    bridge = bridge_sequence(form, convention, fm=rep.folded)
    rep.phi, rep.psi = bridge.phi, bridge.psi
    rep.bridge = bridge.odd_terms
    d = construct_diagram(form, convention, keep_stages=keep_stages, bridge=bridge)
    rep.diagram = d
    if check_stages:
        for i in range(len(d.stages)):
            cd_i = realize(d, stage=i)
            r_i = validate_embedding(cd_i, d, stage=i)
            rep.stage_reports.append(r_i)
            if not r_i.passed:
                raise OracleFailureError(f"stage {i}: " + "; ".join(r_i.failures()), stage=i)
    cd = realize(d)
    rep.chords = cd
    rep.oracle = validate_embedding(cd, d)
    if not rep.oracle.passed:
        raise OracleFailureError("; ".join(rep.oracle.failures()), oracle=rep.oracle.to_dict())
    rep.alpha_beta = count_alpha_beta(cd)
    rep.alexander = alexander_polynomial(d, cd)
    rep.inums = intersection_numbers(d.beta, d.basepoints)
    rep.hs_case = theorem_case(form, rep.inums) or None
    if not form.trivial_candidate:
        try:
            rep.track = str(classify_track(form, rep.inums))
        except PipelineError:
            rep.track = None
    rep.hs = hs_form(form, rep.inums)
    if rep.hs.intersection_count != rep.alpha_beta:
        raise FormulaInconsistencyError(
            f"{rep.hs} predicts {rep.hs.intersection_count} alpha-beta points, the oracle counts {rep.alpha_beta}",
            hs=list(rep.hs.as_tuple()), alpha_beta=rep.alpha_beta)
    rep.rasmussen = to_rasmussen(rep.hs)
    rep.cm = to_cm(rep.hs)
