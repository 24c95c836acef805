"""Uniform clutters and the set-theoretic operations on them."""

import logging
from dataclasses import dataclass
from typing import Iterable, List

from .complexes import SimplicialComplex
from .config import DEFAULT_CONFIG, EngineConfig
from .errors import GuardExceeded, PreconditionError
from .faces import (
    Face,
    as_mask,
    ground_mask,
    sort_masks,
    subsets_of_size,
    vertices_of,
)
from .ideals import SquarefreeMonomialIdeal, face_levels

logger = logging.getLogger("clutter_sdk.clutter")


@dataclass(frozen=True)
class UniformClutter:
    """A d-uniform clutter on [n]: a duplicate-free set of d-subsets (circuits).

    ``masks`` holds the circuits as bitmasks; ``circuits`` gives them as
    sorted Faces.
    """

    n: int
    d: int
    masks: frozenset

    def __post_init__(self):
        if self.n < 1 or self.d < 1:
            raise PreconditionError("clutters need n >= 1 and d >= 1")
        full = ground_mask(self.n)
        for c in self.masks:
            if c.bit_count() != self.d:
                raise PreconditionError(
                    f"circuit {vertices_of(c)} does not have {self.d} vertices"
                )
            if c & ~full:
                raise PreconditionError(
                    f"circuit {vertices_of(c)} leaves the ground set [1..{self.n}]"
                )
        # distinct sets of equal size never contain one another

    @classmethod
    def from_circuits(cls, n: int, d: int, circuits: Iterable) -> "UniformClutter":
        """Build from Faces or vertex iterables, rejecting duplicates."""
        masks = [as_mask(c) for c in circuits]
        if len(set(masks)) != len(masks):
            raise PreconditionError("duplicate circuit")
        return cls(n, d, frozenset(masks))

    @classmethod
    def empty(cls, n: int, d: int) -> "UniformClutter":
        return cls(n, d, frozenset())

    @property
    def circuits(self) -> List[Face]:
        return [Face(c) for c in sort_masks(self.masks)]

    def with_masks(self, masks) -> "UniformClutter":
        return UniformClutter(self.n, self.d, frozenset(masks))

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self):
        return iter(self.circuits)

    def __contains__(self, face) -> bool:
        return as_mask(face) in self.masks

    def issubclutter(self, other: "UniformClutter") -> bool:
        return self.n == other.n and self.d == other.d and self.masks <= other.masks

    def __str__(self):
        body = ", ".join(str(c) for c in self.circuits)
        return f"C(n={self.n}, d={self.d}): {{{body}}}"


def complete_clutter(n: int, d: int) -> UniformClutter:
    """C_{n,d}; empty when n < d."""
    if n < 1 or d < 1:
        raise PreconditionError("complete clutters need n >= 1 and d >= 1")
    return UniformClutter(n, d, frozenset(subsets_of_size(ground_mask(n), d)))


def complement(C: UniformClutter) -> UniformClutter:
    return UniformClutter(C.n, C.d, complete_clutter(C.n, C.d).masks - C.masks)


def deletion(C: UniformClutter, e) -> UniformClutter:
    """C ∖ e: drop every circuit containing ``e``."""
    m = as_mask(e)
    if m.bit_count() > C.d:
        raise PreconditionError(f"deleted set has more than d={C.d} vertices")
    return C.with_masks(c for c in C.masks if m & ~c)


def _neighborhood(masks: Iterable[int], e: int) -> int:
    out = e
    for c in masks:
        if e & ~c == 0:
            out |= c
    return out


def _is_clique(masks: frozenset, d: int, f: int) -> bool:
    if f.bit_count() < d:
        return True
    return all(s in masks for s in subsets_of_size(f, d))


def _is_simplicial(masks: frozenset, d: int, e: int) -> bool:
    return _is_clique(masks, d, _neighborhood(masks, e))


def _check_subcircuit_size(C: UniformClutter, e: int) -> None:
    if e.bit_count() != C.d - 1:
        raise PreconditionError(
            f"{Face(e)} has {e.bit_count()} vertices; neighborhoods need d-1 = {C.d - 1}"
        )


def closed_neighborhood(C: UniformClutter, e) -> Face:
    """N_C[e] = e ∪ {c : e ∪ {c} ∈ C} for a (d-1)-set e.

    Raises:
        PreconditionError: If |e| != d-1
    """
    m = as_mask(e)
    _check_subcircuit_size(C, m)
    return Face(_neighborhood(C.masks, m))


def is_clique(C: UniformClutter, F) -> bool:
    return _is_clique(C.masks, C.d, as_mask(F))


def maximal_subcircuits(C: UniformClutter) -> frozenset:
    """SC(C): the (d-1)-sets contained in some circuit."""
    out = set()
    for c in C.masks:
        out.update(subsets_of_size(c, C.d - 1))
    return frozenset(Face(m) for m in out)


def simplicial_elements(C: UniformClutter) -> frozenset:
    """Simp(C): the (d-1)-subsets e of [n] whose closed neighborhood is a clique."""
    return frozenset(
        Face(e)
        for e in subsets_of_size(ground_mask(C.n), C.d - 1)
        if _is_simplicial(C.masks, C.d, e)
    )


def is_simplicial(C: UniformClutter, e) -> bool:
    m = as_mask(e)
    _check_subcircuit_size(C, m)
    return _is_simplicial(C.masks, C.d, m)


def circuit_ideal_of_complement(C: UniformClutter) -> SquarefreeMonomialIdeal:
    """I(C̄): generated by the d-subsets of [n] that are not circuits."""
    return SquarefreeMonomialIdeal(C.n, complement(C).masks)


def clutter_of_ideal(I: SquarefreeMonomialIdeal, d: int) -> UniformClutter:
    """The clutter C with I(C̄) = I.

    Raises:
        PreconditionError: If a generator does not have degree ``d``
    """
    if any(g.bit_count() != d for g in I.generators):
        raise PreconditionError(f"ideal {I} is not generated in degree {d}")
    return UniformClutter(I.n, d, complete_clutter(I.n, d).masks - I.generators)


def clique_complex(C: UniformClutter, config: EngineConfig = DEFAULT_CONFIG) -> SimplicialComplex:
    """Δ(C), the complex of cliques; its Stanley–Reisner ideal is I(C̄).

    Raises:
        GuardExceeded: If n is above ``config.clique_guard``
    """
    if C.n > config.clique_guard:
        raise GuardExceeded(
            f"clique enumeration on n={C.n} exceeds the guard {config.clique_guard}"
        )
    levels = face_levels(C.n, complement(C).masks)
    logger.debug(f"clique complex on [{C.n}] with {len(C)} circuits: "
                 f"dim {max(levels)}")
    return SimplicialComplex.from_levels(C.n, levels)


def clutter_of_complex(D: SimplicialComplex) -> UniformClutter:
    """C_D: the facets of a pure complex read as circuits."""
    if D.is_void or D.dim < 0 or not D.is_pure:
        raise PreconditionError("C_D needs a pure complex of dimension >= 0")
    return UniformClutter(D.n, D.dim + 1, D.facets)

