"""Linear quotients: orderings whose successive colon ideals are variable-generated."""

import logging
from typing import List, Sequence

from .config import DEFAULT_CONFIG, EngineConfig
from .faces import Face, as_mask, minimalize, sort_masks
from .ideals import SquarefreeMonomialIdeal
from .search import SearchResult, found, refuted, unknown


def colon_violation(previous: Sequence[int], u: int) -> int:
    """Largest degree minus one among the generators of (previous) : x_u."""
    colon = minimalize(g & ~u for g in previous)
    return max((g.bit_count() for g in colon), default=1) - 1


def is_linear_quotient_order(order: Sequence) -> bool:
    masks = [as_mask(u) for u in order]
    return all(colon_violation(masks[:k], masks[k]) <= 0 for k in range(1, len(masks)))


def extends_linear_quotients(order: Sequence, F) -> bool:
    """Whether appending x_F to a linear-quotients order keeps linear quotients."""
    return is_linear_quotient_order(list(order) + [F])


class LinearQuotientsSearch:
    """Backtracking search for a linear-quotients order of the minimal generators.

    The colon condition for the next generator depends only on the set of
    generators already placed, so failed sets are memoized.
    """

    def __init__(self, budget: int):
        self.budget = budget
        self.logger = logging.getLogger(f"clutter_sdk.{self.__class__.__name__}")

    def run(self, I: SquarefreeMonomialIdeal) -> SearchResult:
        gens = sort_masks(I.generators)
        if len(gens) <= 1:
            return found([Face(g) for g in gens], 1)
        full = (1 << len(gens)) - 1
        failed = set()
        visited = 0

        def candidates(used: int) -> List[int]:
            placed = [gens[k] for k in range(len(gens)) if used >> k & 1]
            ranked = []
            for k in range(len(gens)):
                if used >> k & 1 or used | (1 << k) in failed:
                    continue
                violation = colon_violation(placed, gens[k]) if placed else 0
                ranked.append((violation, k))
            ranked.sort()
            return [k for violation, k in ranked if violation == 0]

        stack = [(0, iter(candidates(0)))]
        path: List[int] = []
        while stack:
            used, options = stack[-1]
            k = next(options, None)
            if k is None:
                stack.pop()
                failed.add(used)
                if path:
                    path.pop()
                continue
            nxt = used | (1 << k)
            if nxt in failed:
                continue
            visited += 1
            if visited > self.budget:
                self.logger.warning(f"linear quotients budget {self.budget} exhausted")
                return unknown(visited)
            path.append(k)
            if nxt == full:
                order = [Face(gens[j]) for j in path]
                self.logger.debug(f"← linear quotients order {[str(u) for u in order]}")
                return found(order, visited)
            stack.append((nxt, iter(candidates(nxt))))
        self.logger.debug(f"← no linear quotients order after {visited} states")
        return refuted("no generator ordering has linear quotients", visited)


def linear_quotients_search(
    I: SquarefreeMonomialIdeal, config: EngineConfig = DEFAULT_CONFIG
) -> SearchResult:
    """Find an ordering of the minimal generators with linear quotients.

    Returns:
        FOUND with the ordering as a list of Faces, REFUTED if none exists,
        UNKNOWN if ``config.search_budget`` runs out
    """
    return LinearQuotientsSearch(config.search_budget).run(I)
