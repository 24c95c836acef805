"""Square-free monomial ideals and the Stanley–Reisner correspondence."""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from .complexes import SimplicialComplex, full_skeleton
from .errors import PreconditionError
from .faces import (
    Face,
    as_mask,
    ground_mask,
    is_subset,
    maximalize,
    minimalize,
    sort_masks,
    subsets_of_size,
    vertices_of,
)

logger = logging.getLogger("clutter_sdk.ideals")


@dataclass(frozen=True)
class SquarefreeMonomialIdeal:
    """Ideal of S = K[x_1..x_n] generated by the monomials x_G, G in ``generators``.

    ``generators`` holds the minimal generators as masks; the zero ideal has
    none and the unit ideal is the single generator ∅.
    """

    n: int
    generators: frozenset

    def __post_init__(self):
        full = ground_mask(self.n)
        for g in self.generators:
            if g & ~full:
                raise PreconditionError(
                    f"generator {vertices_of(g)} leaves the ground set [1..{self.n}]"
                )
        if minimalize(self.generators) != self.generators:
            raise PreconditionError("generators must form an antichain")

    @classmethod
    def from_generators(cls, n: int, generators) -> "SquarefreeMonomialIdeal":
        """Ideal generated by arbitrary square-free monomials (minimalized)."""
        return cls(n, minimalize(as_mask(g) for g in generators))

    @classmethod
    def zero(cls, n: int) -> "SquarefreeMonomialIdeal":
        return cls(n, frozenset())

    @classmethod
    def principal(cls, n: int, F) -> "SquarefreeMonomialIdeal":
        return cls(n, frozenset({as_mask(F)}))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return 0 in self.generators

    @property
    def degrees(self) -> frozenset:
        return frozenset(g.bit_count() for g in self.generators)

    @property
    def is_equigenerated(self) -> bool:
        return len(self.degrees) == 1

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def degree(self) -> int:
        """Common degree of the generators.

        Raises:
            PreconditionError: If the ideal is zero or not equigenerated
        """
        if not self.is_equigenerated:
            raise PreconditionError("ideal is not equigenerated")
        return next(iter(self.degrees))

    def contains(self, face) -> bool:
        m = as_mask(face)
        return any(is_subset(g, m) for g in self.generators)

    def __contains__(self, face) -> bool:
        return self.contains(face)

    def __len__(self) -> int:
        return len(self.generators)

    @property
    def generator_faces(self) -> List[Face]:
        return [Face(g) for g in sort_masks(self.generators)]

    def __str__(self):
        if self.is_zero:
            return "(0)"
        terms = ["".join(f"x{v}" for v in vertices_of(g)) or "1" for g in sort_masks(self.generators)]
        return "(" + ", ".join(terms) + ")"


def colon_ideal(I: SquarefreeMonomialIdeal, F) -> SquarefreeMonomialIdeal:
    """I : x_F, generated by the minimalized G ∖ F over generators G."""
    f = as_mask(F)
    return SquarefreeMonomialIdeal(I.n, minimalize(g & ~f for g in I.generators))


def ideal_sum(I: SquarefreeMonomialIdeal, J: SquarefreeMonomialIdeal) -> SquarefreeMonomialIdeal:
    n = max(I.n, J.n)
    return SquarefreeMonomialIdeal(n, minimalize(I.generators | J.generators))


def ideal_intersection(
    I: SquarefreeMonomialIdeal, J: SquarefreeMonomialIdeal
) -> SquarefreeMonomialIdeal:
    """I ∩ J, generated by the pairwise lcms (unions) of generators."""
    n = max(I.n, J.n)
    return SquarefreeMonomialIdeal(
        n, minimalize(a | b for a in I.generators for b in J.generators)
    )


def face_levels(n: int, generators: frozenset, support: int = -1) -> Dict[int, List[int]]:
    """Subsets of ``support`` (default [n]) containing no generator, by dimension."""
    by_vertex = {v: [g for g in generators if g >> v & 1] for v in range(n)}
    levels: Dict[int, List[int]] = {-1: [0]}
    current = [0]
    k = 0
    while current:
        nxt = []
        for f in current:
            for v in range(f.bit_length(), n):
                if not support >> v & 1:
                    continue
                g = f | (1 << v)
                if not any(h & ~g == 0 for h in by_vertex[v]):
                    nxt.append(g)
        if nxt:
            levels[k] = nxt
        current = nxt
        k += 1
    return levels


@lru_cache(maxsize=512)
def stanley_reisner_complex(I: SquarefreeMonomialIdeal) -> SimplicialComplex:
    """The complex Δ with I_Δ = I: subsets of [n] containing no generator.

    Raises:
        PreconditionError: For the unit ideal
    """
    if I.is_unit:
        raise PreconditionError("the unit ideal has no Stanley-Reisner complex")
    levels = face_levels(I.n, I.generators)
    logger.debug(f"Stanley-Reisner complex of {len(I)} generators on [{I.n}]: "
                 f"f-vector {[len(levels[k]) for k in sorted(levels)]}")
    return SimplicialComplex.from_levels(I.n, levels)


def stanley_reisner_ideal(D: SimplicialComplex) -> SquarefreeMonomialIdeal:
    """Minimal non-faces of ``D``; the void complex gives the unit ideal."""
    if D.is_void:
        return SquarefreeMonomialIdeal(D.n, frozenset({0}))
    faces = {f for level in D.faces_by_dim.values() for f in level}
    minimal = set()
    for f in faces:
        for v in range(D.n):
            g = f | (1 << v)
            if g == f or g in faces or g in minimal:
                continue
            if all(g & ~(1 << (w - 1)) in faces for w in vertices_of(g)):
                minimal.add(g)
    return SquarefreeMonomialIdeal(D.n, frozenset(minimal))


def component_ideal(
    I: SquarefreeMonomialIdeal, t: int
) -> Tuple[SquarefreeMonomialIdeal, SimplicialComplex]:
    """The degree-t component ideal I_[t] and its complex Δ_t = Δ ∪ ⟨[n]⟩^{[t-2]}.

    Args:
        I: A square-free monomial ideal with largest generator degree d
        t: Target degree, at least d

    Returns:
        (I_[t], Δ_t), where I_[t] is generated by every degree-t superset of a
        generator and Δ_t is its Stanley–Reisner complex.

    Raises:
        PreconditionError: If t < d
    """
    d = I.max_degree
    if t < d:
        raise PreconditionError(f"component degree {t} is below the generator degree {d}")
    full = ground_mask(I.n)
    gens = set()
    for g in I.generators:
        for extra in subsets_of_size(full & ~g, t - g.bit_count()):
            gens.add(g | extra)
    component = SquarefreeMonomialIdeal(I.n, frozenset(gens))

    base = SimplicialComplex.void(I.n) if I.is_unit else stanley_reisner_complex(I)
    delta_t = SimplicialComplex(
        I.n, maximalize(base.facets | full_skeleton(I.n, t - 2).facets)
    )
    return component, delta_t
