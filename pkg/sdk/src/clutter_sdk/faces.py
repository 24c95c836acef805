"""Faces of the ground set [n], stored as bitmasks (vertex v is bit v-1)."""

from functools import total_ordering
from itertools import combinations
from typing import Iterable, Iterator, Tuple

from .errors import PreconditionError

MAX_VERTEX = 64


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def vertices_of(mask: int) -> Tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def ground_mask(n: int) -> int:
    return (1 << n) - 1


def max_vertex(mask: int) -> int:
    """Largest vertex of a nonempty mask (m(u) for the monomial x_u)."""
    return mask.bit_length()


def subsets_of_size(mask: int, k: int) -> Iterator[int]:
    for combo in combinations(vertices_of(mask), k):
        yield mask_of(combo)


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask``, the empty set included."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def minimalize(masks: Iterable[int]) -> frozenset:
    """Inclusion-minimal members of a family of masks."""
    kept = []
    for m in sorted(set(masks), key=lambda x: (x.bit_count(), vertices_of(x))):
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    return frozenset(kept)


def maximalize(masks: Iterable[int]) -> frozenset:
    """Inclusion-maximal members of a family of masks."""
    kept = []
    for m in sorted(set(masks), key=lambda x: -x.bit_count()):
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return frozenset(kept)


def sort_masks(masks: Iterable[int]) -> list:
    """Lexicographic order of the vertex tuples."""
    return sorted(masks, key=vertices_of)


def format_mask(mask: int) -> str:
    return "{" + ",".join(str(v) for v in vertices_of(mask)) + "}"


@total_ordering
class Face:
    """A subset of [n] with strictly increasing vertices.

    Also used as a square-free multidegree. Equality is by vertex set;
    ordering is lexicographic on the vertex tuple.
    """

    __slots__ = ("mask",)

    def __init__(self, mask: int = 0):
        if mask < 0:
            raise PreconditionError("face mask must be nonnegative")
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, name, value):
        raise AttributeError("Face is immutable")

    @classmethod
    def of(cls, *vertices: int) -> "Face":
        return cls.from_vertices(vertices)

    @classmethod
    def from_vertices(cls, vertices: Iterable[int]) -> "Face":
        vertices = list(vertices)
        for v in vertices:
            if not isinstance(v, int) or isinstance(v, bool) or v < 1 or v > MAX_VERTEX:
                raise PreconditionError(f"vertex {v!r} out of range 1..{MAX_VERTEX}")
        if len(set(vertices)) != len(vertices):
            raise PreconditionError(f"repeated vertex in {vertices}")
        return cls(mask_of(vertices))

    @property
    def vertices(self) -> Tuple[int, ...]:
        return vertices_of(self.mask)

    @property
    def max_vertex(self) -> int:
        return max_vertex(self.mask)

    def issubset(self, other: "Face") -> bool:
        return self.mask & ~other.mask == 0

    def union(self, other: "Face") -> "Face":
        return Face(self.mask | other.mask)

    def difference(self, other: "Face") -> "Face":
        return Face(self.mask & ~other.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, v: int) -> bool:
        return v >= 1 and bool(self.mask >> (v - 1) & 1)

    def __eq__(self, other):
        if not isinstance(other, Face):
            return NotImplemented
        return self.mask == other.mask

    def __lt__(self, other: "Face"):
        if not isinstance(other, Face):
            return NotImplemented
        return self.vertices < other.vertices

    def __hash__(self):
        return hash(self.mask)

    def __reduce__(self):
        return (Face, (self.mask,))

    def __repr__(self):
        return f"Face({', '.join(map(str, self.vertices))})"

    def __str__(self):
        return format_mask(self.mask)


def as_mask(face) -> int:
    """Accept a Face, a mask or an iterable of vertices."""
    if isinstance(face, Face):
        return face.mask
    if isinstance(face, int):
        return face
    return Face.from_vertices(face).mask
