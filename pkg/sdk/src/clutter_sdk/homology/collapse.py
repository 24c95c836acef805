"""Free faces and searches for sequences of simple collapses."""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from ..complexes import SimplicialComplex, face_deletion
from ..config import DEFAULT_CONFIG, EngineConfig
from ..errors import PreconditionError
from ..faces import Face, submasks, vertices_of
from ..search import SearchResult, found, refuted, unknown

Stop = Callable[[SimplicialComplex], bool]


def _free_face_map(facets: frozenset) -> Dict[int, int]:
    """Nonempty faces lying properly in exactly one facet, mapped to that facet."""
    count: Dict[int, int] = {}
    owner: Dict[int, int] = {}
    for tau in facets:
        for sigma in submasks(tau):
            if sigma == 0 or sigma == tau:
                continue
            count[sigma] = count.get(sigma, 0) + 1
            owner[sigma] = tau
    # a face that is itself a facet lies in no other facet
    return {s: owner[s] for s, c in count.items() if c == 1 and s not in facets}


def free_faces(D: SimplicialComplex) -> frozenset:
    """Faces properly contained in exactly one facet (∅ is never free)."""
    return frozenset(Face(s) for s in _free_face_map(D.facets))


@dataclass
class CollapseStep:
    """Removal of ``face`` and every face containing it; ``facet`` is the unique coface."""

    face: Face
    facet: Face

    def __str__(self):
        return f"{self.face} in {self.facet}"


def simple_collapse(D: SimplicialComplex, face) -> Tuple[SimplicialComplex, CollapseStep]:
    """Apply one simple collapse at a free face.

    Raises:
        PreconditionError: If ``face`` is not free in ``D``
    """
    sigma = face.mask if isinstance(face, Face) else int(face)
    free = _free_face_map(D.facets)
    if sigma not in free:
        raise PreconditionError(f"{Face(sigma)} is not a free face")
    return face_deletion(D, sigma), CollapseStep(Face(sigma), Face(free[sigma]))


class CollapseSearch:
    """Depth-first search over simple collapses with a memoized visited set.

    Moves are tried greedily (largest facet first, then largest free face);
    the search backtracks on dead ends. A lone vertex may collapse to the
    empty complex {∅} as a terminal move.
    """

    def __init__(self, stop: Stop, budget: int):
        self.stop = stop
        self.budget = budget
        self.logger = logging.getLogger(f"clutter_sdk.{self.__class__.__name__}")

    def _moves(self, D: SimplicialComplex) -> Iterator[Tuple[CollapseStep, SimplicialComplex]]:
        if len(D.facets) == 1:
            (only,) = D.facets
            if only.bit_count() == 1:
                yield CollapseStep(Face(0), Face(only)), SimplicialComplex.empty(D.n)
                return
        free = _free_face_map(D.facets)
        order = sorted(
            free.items(),
            key=lambda item: (-item[1].bit_count(), -item[0].bit_count(), vertices_of(item[0])),
        )
        for sigma, tau in order:
            yield CollapseStep(Face(sigma), Face(tau)), face_deletion(D, sigma)

    def run(self, D: SimplicialComplex) -> SearchResult:
        name = getattr(self.stop, "__name__", "stop")
        self.logger.debug(f"→ collapse search on {len(D.facets)} facets, stop={name}")
        if self.stop(D):
            return found({"steps": [], "final": D}, 1)
        visited = {D.facets}
        stack = [self._moves(D)]
        path: List[CollapseStep] = []
        while stack:
            move = next(stack[-1], None)
            if move is None:
                stack.pop()
                if path:
                    path.pop()
                continue
            step, nxt = move
            if nxt.facets in visited:
                continue
            if len(visited) >= self.budget:
                self.logger.warning(f"collapse search budget {self.budget} exhausted")
                return unknown(len(visited))
            visited.add(nxt.facets)
            path.append(step)
            if self.stop(nxt):
                self.logger.info(f"← collapse sequence of length {len(path)} found")
                return found({"steps": list(path), "final": nxt}, len(visited))
            stack.append(self._moves(nxt))
        reason = "no free face" if len(visited) == 1 else "every collapse sequence dead-ends"
        self.logger.info(f"← collapse impossible after {len(visited)} states ({reason})")
        return refuted(reason, len(visited))


def collapse_search(
    D: SimplicialComplex, stop: Stop, config: EngineConfig = DEFAULT_CONFIG
) -> SearchResult:
    """Search for simple collapses from ``D`` to a complex satisfying ``stop``.

    Returns:
        FOUND with witness ``{"steps": [CollapseStep, ...], "final": complex}``,
        REFUTED when no sequence exists, or UNKNOWN when the budget runs out
    """
    return CollapseSearch(stop, config.collapse_budget).run(D)


def replay_collapses(D: SimplicialComplex, steps: List[CollapseStep]) -> Optional[SimplicialComplex]:
    """Re-apply a collapse sequence; None if some step is not a simple collapse."""
    current = D
    for step in steps:
        if step.face.mask == 0:
            if len(current.facets) != 1 or current.facets != frozenset({step.facet.mask}):
                return None
            current = SimplicialComplex.empty(D.n)
            continue
        try:
            current, _ = simple_collapse(current, step.face)
        except PreconditionError:
            return None
    return current
