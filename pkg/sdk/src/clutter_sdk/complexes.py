"""Facet-presented simplicial complexes and their set-theoretic operations."""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Callable, Dict, Iterable, List

from .errors import PreconditionError
from .faces import (
    Face,
    as_mask,
    ground_mask,
    is_subset,
    mask_of,
    maximalize,
    sort_masks,
    submasks,
    vertices_of,
)


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on [n] given by its facets.

    The void complex has no facets; the empty complex has the single facet
    ∅ (mask 0). Both are valid values and they differ in homology.
    """

    n: int
    facets: frozenset

    def __post_init__(self):
        full = ground_mask(self.n)
        for f in self.facets:
            if f & ~full:
                raise PreconditionError(
                    f"facet {vertices_of(f)} leaves the ground set [1..{self.n}]"
                )
        if maximalize(self.facets) != self.facets:
            raise PreconditionError("facets must form an antichain")

    @classmethod
    def from_faces(cls, n: int, faces: Iterable) -> "SimplicialComplex":
        """Complex generated by arbitrary faces (maximal ones become facets)."""
        return cls(n, maximalize(as_mask(f) for f in faces))

    @classmethod
    def void(cls, n: int) -> "SimplicialComplex":
        return cls(n, frozenset())

    @classmethod
    def empty(cls, n: int) -> "SimplicialComplex":
        return cls(n, frozenset({0}))

    @classmethod
    def from_levels(cls, n: int, levels: Dict[int, List[int]]) -> "SimplicialComplex":
        """Build from a complete face enumeration grouped by dimension."""
        covered = set()
        for k, faces in levels.items():
            if k < 0:
                continue
            for f in faces:
                for v in vertices_of(f):
                    covered.add(f & ~(1 << (v - 1)))
        facets = frozenset(f for faces in levels.values() for f in faces if f not in covered)
        complex_ = cls(n, facets)
        complex_.__dict__["faces_by_dim"] = {
            k: sort_masks(v) for k, v in sorted(levels.items()) if v
        }
        return complex_

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty_complex(self) -> bool:
        return self.facets == frozenset({0})

    @property
    def dim(self) -> int:
        """Dimension; -1 for the empty complex and -2 for the void complex."""
        if not self.facets:
            return -2
        return max(f.bit_count() for f in self.facets) - 1

    @property
    def vertex_mask(self) -> int:
        out = 0
        for f in self.facets:
            out |= f
        return out

    @property
    def is_pure(self) -> bool:
        return len({f.bit_count() for f in self.facets}) <= 1

    @cached_property
    def faces_by_dim(self) -> Dict[int, List[int]]:
        seen = set()
        for f in self.facets:
            seen.update(submasks(f))
        levels: Dict[int, List[int]] = {}
        for f in seen:
            levels.setdefault(f.bit_count() - 1, []).append(f)
        return {k: sort_masks(v) for k, v in sorted(levels.items())}

    def faces(self, dim: int) -> List[int]:
        return self.faces_by_dim.get(dim, [])

    @property
    def f_vector(self) -> List[int]:
        return [len(self.faces(k)) for k in range(-1, self.dim + 1)]

    def contains(self, face) -> bool:
        m = as_mask(face)
        return any(is_subset(m, f) for f in self.facets)

    def __contains__(self, face) -> bool:
        return self.contains(face)

    @property
    def facet_faces(self) -> List[Face]:
        return [Face(f) for f in sort_masks(self.facets)]

    def __str__(self):
        body = ", ".join(str(f) for f in self.facet_faces)
        return f"<{body}> on [{self.n}]"


def induced_subcomplex(D: SimplicialComplex, W) -> SimplicialComplex:
    """Faces of ``D`` contained in ``W``."""
    w = as_mask(W)
    if w & ~ground_mask(D.n):
        raise PreconditionError("W must be a subset of the ground set")
    if D.is_void:
        return D
    return SimplicialComplex(D.n, maximalize(f & w for f in D.facets))


def skeleton(D: SimplicialComplex, i: int, pure: bool = False) -> SimplicialComplex:
    """The i-skeleton, or with ``pure`` the complex generated by the i-faces."""
    if i < -1 or i > D.dim:
        raise PreconditionError(f"skeleton dimension {i} outside -1..{D.dim}")
    top = D.faces(i)
    if pure:
        return SimplicialComplex(D.n, frozenset(top))
    lower = [f for f in D.facets if f.bit_count() - 1 < i]
    return SimplicialComplex(D.n, maximalize(list(top) + lower))


def join(D1: SimplicialComplex, D2: SimplicialComplex) -> SimplicialComplex:
    """Faces F ∪ G with F in D1 and G in D2 (vertex sets must be disjoint)."""
    if D1.vertex_mask & D2.vertex_mask:
        raise PreconditionError("join needs disjoint vertex sets")
    n = max(D1.n, D2.n)
    return SimplicialComplex(n, frozenset(a | b for a in D1.facets for b in D2.facets))


def simplex(n: int, W) -> SimplicialComplex:
    """⟨W⟩; for W = ∅ this is the empty complex."""
    return SimplicialComplex(n, frozenset({as_mask(W)}))


def boundary_complex(n: int, W) -> SimplicialComplex:
    """Proper faces of the simplex on W (∂W); ∂ of a vertex is the empty complex."""
    w = as_mask(W)
    if w == 0:
        return SimplicialComplex.void(n)
    return SimplicialComplex(n, frozenset(w & ~(1 << (v - 1)) for v in vertices_of(w)))


def full_skeleton(n: int, i: int) -> SimplicialComplex:
    """⟨[n]⟩^{[i]}: every subset of [n] with at most i+1 elements."""
    if i < -1:
        return SimplicialComplex.void(n)
    k = min(i + 1, n)
    return SimplicialComplex(n, frozenset(mask_of(c) for c in combinations(range(1, n + 1), k)))


def face_deletion(D: SimplicialComplex, sigma) -> SimplicialComplex:
    """D minus every face containing ``sigma``."""
    s = as_mask(sigma)
    kept = []
    for f in D.facets:
        if is_subset(s, f):
            kept.extend(f & ~(1 << (v - 1)) for v in vertices_of(s))
        else:
            kept.append(f)
    return SimplicialComplex(D.n, maximalize(kept))


def within_skeleton(k: int) -> Callable[[SimplicialComplex], bool]:
    """Stop predicate: every face has dimension at most ``k``."""

    def check(D: SimplicialComplex) -> bool:
        return D.dim <= k

    check.__name__ = f"within_{k}_skeleton"
    return check


def is_empty_complex(D: SimplicialComplex) -> bool:
    return D.is_empty_complex
