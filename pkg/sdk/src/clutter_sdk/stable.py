"""Square-free stable ideals and the removal sequences they induce."""

import logging
from math import comb
from typing import List

from .clutter import complete_clutter
from .errors import PreconditionError
from .faces import Face, max_vertex
from .ideals import SquarefreeMonomialIdeal
from .reduction import RemovalSequence, RemovalStep

logger = logging.getLogger("clutter_sdk.stable")


def _degree(I: SquarefreeMonomialIdeal) -> int:
    if I.is_zero or not I.is_equigenerated:
        raise PreconditionError(f"{I} is not a nonzero equigenerated ideal")
    return I.degree()


def exchange_failures(I: SquarefreeMonomialIdeal) -> List[Face]:
    """Monomials x_j u / x_{m(u)}, j < m(u), missing from I (u a generator)."""
    _degree(I)
    missing = set()
    for u in I.generators:
        top = 1 << (max_vertex(u) - 1)
        for j in range(max_vertex(u) - 1):
            if u >> j & 1:
                continue
            w = (u & ~top) | (1 << j)
            if w not in I.generators:
                missing.add(w)
    return sorted(Face(w) for w in missing)


def is_squarefree_stable(I: SquarefreeMonomialIdeal) -> bool:
    """Whether x_j u / x_{m(u)} ∈ I for every generator u and j < m(u) with x_j ∤ u.

    Raises:
        PreconditionError: If I is zero or not equigenerated
    """
    return not exchange_failures(I)


def stable_order(I: SquarefreeMonomialIdeal) -> List[Face]:
    """Generators sorted lexicographically with x_1 < ... < x_n (largest variable first)."""
    return sorted(
        (Face(g) for g in I.generators),
        key=lambda F: tuple(reversed(F.vertices)),
    )


def stable_to_sequence(I: SquarefreeMonomialIdeal) -> RemovalSequence:
    """Steps (F_k minus its largest vertex, {F_k}) from C_{n,d}, in stable order.

    Raises:
        PreconditionError: If I is not square-free stable
    """
    d = _degree(I)
    missing = exchange_failures(I)
    if missing:
        raise PreconditionError(f"{I} is not square-free stable: missing {missing[0]}")
    steps = tuple(
        RemovalStep(F.difference(Face.of(F.max_vertex)), frozenset({F}))
        for F in stable_order(I)
    )
    logger.debug(f"stable sequence of {len(steps)} steps for {I}")
    return RemovalSequence(complete_clutter(I.n, d), steps)


def ek_betti(I: SquarefreeMonomialIdeal) -> List[int]:
    """β_{i,i+d}(I) = Σ_u C(m(u) - d, i) over the generators u.

    Raises:
        PreconditionError: If I is not square-free stable
    """
    d = _degree(I)
    if not is_squarefree_stable(I):
        raise PreconditionError(f"{I} is not square-free stable")
    shifts = [max_vertex(u) - d for u in I.generators]
    strand = [sum(comb(m, i) for m in shifts) for i in range(max(shifts) + 1)]
    logger.debug(f"m(u) - d over generators: {sorted(shifts)}")
    return strand
