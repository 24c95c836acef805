"""Betti numbers of square-free monomial ideals attached to uniform clutters.

Hochster-formula Betti tables over ℚ and GF(p), integral homology, simplicial
removal sequences, chordality searches and the closed-form Betti predictions
they support, each checked against the homology oracle.
"""

from .betti import (
    BettiTable,
    FieldCertificate,
    StabilityVerdict,
    betti_table,
    field_independence_certificate,
    has_linear_resolution,
    hochster_betti,
    regularity_by_components,
    theorem1_stability_check,
)
from .clutter import (
    UniformClutter,
    circuit_ideal_of_complement,
    clique_complex,
    closed_neighborhood,
    clutter_of_complex,
    clutter_of_ideal,
    complement,
    complete_clutter,
    deletion,
    is_clique,
    is_simplicial,
    maximal_subcircuits,
    simplicial_elements,
)
from .codec import decode_clutter, decode_table, encode_clutter, encode_table
from .complexes import (
    SimplicialComplex,
    boundary_complex,
    face_deletion,
    full_skeleton,
    induced_subcomplex,
    join,
    simplex,
    skeleton,
)
from .config import DEFAULT_CONFIG, EngineConfig
from .diagnostics import DiagnosticsReport, resolution_diagnostics
from .errors import (
    EXIT_OK,
    EXIT_REFUTED,
    EXIT_UNKNOWN,
    EXIT_USAGE,
    ClutterError,
    GuardExceeded,
    InvalidCircuits,
    InvalidStep,
    ParseError,
    PreconditionError,
    RemovalError,
    VerificationFailed,
)
from .faces import Face
from .formulas import (
    Prop24Verdict,
    Prop44Report,
    SplittingVerdict,
    StrandPrediction,
    predicted_delta,
    predicted_linear_strand,
    proposition24_check,
    proposition44_check,
    splitting_check,
)
from .homology import FieldSpec, GF2, GF3, QQ, ZZ, collapse_search, free_faces, homology_profile
from .ideals import (
    SquarefreeMonomialIdeal,
    colon_ideal,
    component_ideal,
    ideal_intersection,
    ideal_sum,
    stanley_reisner_complex,
    stanley_reisner_ideal,
)
from .quotients import extends_linear_quotients, is_linear_quotient_order, linear_quotients_search
from .reduction import (
    ChordalityMode,
    RemovalSequence,
    RemovalStep,
    apply_removal_step,
    chordality_search,
    collapse_from_simplicial_order,
    replay_removal_sequence,
    subclutter_search,
    verify_removal_sequence,
)
from .search import SearchOutcome, SearchResult
from .stable import ek_betti, is_squarefree_stable, stable_to_sequence
from .verify import (
    VERIFIER_NAMES,
    VerificationReport,
    hunt_separating_clutter,
    run_random,
    verify_instance,
    verify_prop44,
)

__all__ = [
    # Core combinatorics
    "Face",
    "UniformClutter",
    "SimplicialComplex",
    "SquarefreeMonomialIdeal",
    "complete_clutter",
    "complement",
    "deletion",
    "closed_neighborhood",
    "is_clique",
    "maximal_subcircuits",
    "simplicial_elements",
    "is_simplicial",
    "circuit_ideal_of_complement",
    "clutter_of_ideal",
    "clique_complex",
    "clutter_of_complex",
    "induced_subcomplex",
    "skeleton",
    "full_skeleton",
    "join",
    "simplex",
    "boundary_complex",
    "face_deletion",
    "stanley_reisner_complex",
    "stanley_reisner_ideal",
    "colon_ideal",
    "component_ideal",
    "ideal_sum",
    "ideal_intersection",
    # Homology
    "FieldSpec",
    "QQ",
    "GF2",
    "GF3",
    "ZZ",
    "homology_profile",
    "free_faces",
    "collapse_search",
    # Betti engine
    "BettiTable",
    "betti_table",
    "hochster_betti",
    "has_linear_resolution",
    "regularity_by_components",
    "field_independence_certificate",
    "FieldCertificate",
    "theorem1_stability_check",
    "StabilityVerdict",
    "linear_quotients_search",
    "is_linear_quotient_order",
    "extends_linear_quotients",
    "resolution_diagnostics",
    "DiagnosticsReport",
    # Reduction engine
    "RemovalStep",
    "RemovalSequence",
    "apply_removal_step",
    "replay_removal_sequence",
    "verify_removal_sequence",
    "subclutter_search",
    "chordality_search",
    "ChordalityMode",
    "collapse_from_simplicial_order",
    "predicted_delta",
    "splitting_check",
    "SplittingVerdict",
    "predicted_linear_strand",
    "StrandPrediction",
    "proposition24_check",
    "Prop24Verdict",
    "proposition44_check",
    "Prop44Report",
    "is_squarefree_stable",
    "stable_to_sequence",
    "ek_betti",
    "VerificationReport",
    "run_random",
    "verify_instance",
    "verify_prop44",
    "VERIFIER_NAMES",
    "hunt_separating_clutter",
    # Searches
    "SearchOutcome",
    "SearchResult",
    # Encoding
    "encode_table",
    "decode_table",
    "encode_clutter",
    "decode_clutter",
    # Configuration and errors
    "EngineConfig",
    "DEFAULT_CONFIG",
    "ClutterError",
    "ParseError",
    "PreconditionError",
    "GuardExceeded",
    "RemovalError",
    "InvalidStep",
    "InvalidCircuits",
    "VerificationFailed",
    "EXIT_OK",
    "EXIT_REFUTED",
    "EXIT_USAGE",
    "EXIT_UNKNOWN",
]

__version__ = "0.1.0"
