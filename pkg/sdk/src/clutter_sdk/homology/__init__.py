"""Exact reduced simplicial homology over ℚ, GF(p) and ℤ."""

from .base import GF2, GF3, QQ, ZZ, FieldKind, FieldSpec, RankBackend, backend_for
from .chains import (
    HomologyProfile,
    boundary_matrix,
    homology_profile,
    integral_homology,
    reduced_homology_rank,
    reduced_ranks,
)
from .collapse import CollapseStep, collapse_search, free_faces, replay_collapses, simple_collapse
from .integers import SmithNormalForm
from .modular import PrimeFieldRank
from .rationals import RationalRank

__all__ = [
    # Coefficients
    "FieldKind",
    "FieldSpec",
    "QQ",
    "GF2",
    "GF3",
    "ZZ",
    # Rank backends
    "RankBackend",
    "RationalRank",
    "PrimeFieldRank",
    "SmithNormalForm",
    "backend_for",
    # Chains and homology
    "boundary_matrix",
    "reduced_ranks",
    "reduced_homology_rank",
    "integral_homology",
    "homology_profile",
    "HomologyProfile",
    # Collapses
    "free_faces",
    "simple_collapse",
    "collapse_search",
    "replay_collapses",
    "CollapseStep",
]
