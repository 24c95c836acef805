"""Augmented oriented chain complexes and reduced homology."""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from ..complexes import SimplicialComplex
from ..errors import PreconditionError
from ..faces import vertices_of
from .base import QQ, ZZ, FieldKind, FieldSpec, backend_for

logger = logging.getLogger("clutter_sdk.homology")

Levels = Dict[int, List[int]]


def boundary(rows: List[int], cols: List[int]) -> np.ndarray:
    """∂ from the faces ``cols`` to the faces ``rows`` (sorted vertex signs)."""
    index = {f: k for k, f in enumerate(rows)}
    out = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for j, f in enumerate(cols):
        for pos, v in enumerate(vertices_of(f)):
            out[index[f & ~(1 << (v - 1))], j] = -1 if pos % 2 else 1
    return out


def boundary_matrix(D: SimplicialComplex, i: int) -> np.ndarray:
    """∂_i: rows are the (i-1)-faces, columns the i-faces, both in lex order.

    ∂_0 is the augmentation (an all-ones row over the vertices). Dimensions
    outside the complex give empty matrices.
    """
    return boundary(D.faces(i - 1), D.faces(i))


def reduced_ranks(levels: Levels, dims: Iterable[int], field: FieldSpec) -> Dict[int, int]:
    """dim H̃_k over ``field`` for each requested k, reusing boundary ranks."""
    backend = backend_for(field)
    ranks: Dict[int, int] = {}

    def rank_of(i: int) -> int:
        if i not in ranks:
            rows, cols = levels.get(i - 1, []), levels.get(i, [])
            ranks[i] = backend.rank(boundary(rows, cols)) if rows and cols else 0
        return ranks[i]

    return {k: len(levels.get(k, [])) - rank_of(k) - rank_of(k + 1) for k in dims}


def reduced_homology_rank(D: SimplicialComplex, i: int, field: FieldSpec = QQ) -> int:
    """Rank of H̃_i(D; field) computed from the augmented chain complex.

    Raises:
        PreconditionError: For integer coefficients (use integral_homology)
    """
    if not field.is_field:
        raise PreconditionError("integer homology is computed by integral_homology")
    return reduced_ranks(D.faces_by_dim, [i], field)[i]


def integral_torsion(levels: Levels, i: int) -> Tuple[int, List[int]]:
    """(free rank, torsion coefficients) of H̃_i with integer coefficients."""
    snf = backend_for(ZZ)
    rows, cols = levels.get(i, []), levels.get(i + 1, [])
    factors = snf.invariant_factors(boundary(rows, cols)) if rows and cols else []
    free = reduced_ranks(levels, [i], QQ)[i]
    return free, [f for f in factors if f > 1]


def integral_homology(D: SimplicialComplex, i: int) -> Tuple[int, List[int]]:
    """Free rank and torsion coefficients of H̃_i(D; ℤ) via Smith normal form."""
    return integral_torsion(D.faces_by_dim, i)


@dataclass
class HomologyProfile:
    """Reduced homology of one complex in every dimension -1..dim."""

    field: str
    ranks: Dict[int, int]
    torsion: Optional[Dict[int, List[int]]] = None

    @property
    def is_acyclic(self) -> bool:
        no_torsion = not self.torsion or not any(self.torsion.values())
        return not any(self.ranks.values()) and no_torsion

    def as_dict(self) -> dict:
        out = {"field": self.field, "ranks": {str(k): v for k, v in self.ranks.items()}}
        if self.torsion is not None:
            out["torsion"] = {str(k): v for k, v in self.torsion.items()}
        return out


def homology_profile(D: SimplicialComplex, field: FieldSpec = QQ) -> HomologyProfile:
    dims = list(range(-1, D.dim + 1))
    levels = D.faces_by_dim
    if field.kind is FieldKind.INTEGERS:
        ranks, torsion = {}, {}
        for k in dims:
            ranks[k], torsion[k] = integral_torsion(levels, k)
        return HomologyProfile(str(field), ranks, torsion)
    return HomologyProfile(str(field), reduced_ranks(levels, dims, field))
