"""Compile Schubert normal forms of (1,1) knots into doubly-pointed genus-1 Heegaard diagrams."""

from __future__ import annotations

from .attach import AttachingSequence, Diagram, construct_diagram, finger_move, reduce
from .bridge import BridgeSequence, Involution, arc_involution, bridge_sequence, gluing_involution
from .core import Basepoints, HSForm, IntersectionNumbers, Position, SchubertForm, basepoints
from .diagram import count_alpha_beta, realize, validate_embedding
from .errors import PipelineError
from .invariants import alexander_polynomial, hs_form, intersection_numbers, to_cm, to_rasmussen
from .pipeline import PipelineReport, compile_form
from .tracks import LITERAL, Convention, folded_measure, schubert_measure

__version__ = "0.1.0"
