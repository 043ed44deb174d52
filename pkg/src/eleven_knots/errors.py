"""Typed diagnostics raised by the pipeline.

Every error carries a short machine-readable ``code`` (used as the record
status in sweep catalogs) and a ``category`` that the CLI maps to an exit
code: invalid input, structural diagnostic, or internal inconsistency.
"""

from __future__ import annotations

from typing import Any

INVALID_INPUT = "invalid-input"
STRUCTURAL = "structural"
INTERNAL = "internal"

EXIT_CODES = {INVALID_INPUT: 2, STRUCTURAL: 3, INTERNAL: 4}


class PipelineError(Exception):
    """Base class. ``details`` holds JSON-serializable context."""

    code = "pipeline-error"
    category = INTERNAL

    def __init__(self, message: str, **details: Any) -> None:
        super().__init__(message)
        self.message = message
        self.details = details

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.category]

    def to_dict(self) -> dict:
        return {"code": self.code, "message": self.message, "details": self.details}


class InvalidInputError(PipelineError, ValueError):
    code = "invalid-input"
    category = INVALID_INPUT


class PreconditionError(PipelineError, ValueError):
    code = "precondition"
    category = INVALID_INPUT


class MeasureNotCarriedError(PipelineError, ValueError):
    code = "measure-not-carried"
    category = INVALID_INPUT


class StructuralInconsistencyError(PipelineError):
    """Basepoint ordering violated."""

    code = "structural-inconsistency"
    category = STRUCTURAL


class CaseInconsistencyError(PipelineError):
    """A folded-measure case produced a negative weight."""

    code = "case-inconsistency"
    category = STRUCTURAL


class InvolutionConflictError(PipelineError):
    """Two transpositions of a claimed involution share a point."""

    code = "involution-conflict"
    category = STRUCTURAL


class LinkOrConventionMismatchError(PipelineError):
    """The bridge walk does not trace a single arc through all of supp(phi)."""

    code = "link-or-convention-mismatch"
    category = STRUCTURAL


class DegenerateCurveError(PipelineError):
    code = "degenerate-curve"
    category = STRUCTURAL


class UnsupportedInputError(PipelineError):
    """Trivial form, or no case of the HS classification applies."""

    code = "trivial-or-unsupported"
    category = STRUCTURAL


class ClassificationFailureError(PipelineError):
    code = "classification-failure"
    category = STRUCTURAL


class DegenerateModulusError(PipelineError):
    code = "degenerate-modulus"
    category = STRUCTURAL


class DegenerateError(PipelineError, ValueError):
    code = "degenerate"
    category = INVALID_INPUT


class RealizationError(PipelineError):
    """The attaching sequence admits no consistent non-crossing chord model."""

    code = "realization-failure"
    category = INTERNAL


class OracleFailureError(PipelineError):
    """An embedding, closure, homology or count check failed."""

    code = "oracle-failure"
    category = INTERNAL


class FormulaInconsistencyError(PipelineError):
    """Closed-form outputs disagree with each other or with validation."""

    code = "formula-inconsistency"
    category = INTERNAL


class NormalizationError(PipelineError):
    code = "normalization-failure"
    category = INTERNAL
