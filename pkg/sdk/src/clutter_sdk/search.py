"""Outcome types shared by the budgeted searches."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Hashable, Iterable, List, Optional, Tuple

from .errors import EXIT_OK, EXIT_REFUTED, EXIT_UNKNOWN


class SearchOutcome(Enum):
    FOUND = "found"
    REFUTED = "refuted"
    UNKNOWN = "unknown"

    @property
    def exit_code(self) -> int:
        return {
            SearchOutcome.FOUND: EXIT_OK,
            SearchOutcome.REFUTED: EXIT_REFUTED,
            SearchOutcome.UNKNOWN: EXIT_UNKNOWN,
        }[self]


@dataclass
class SearchResult:
    """Verdict of a budgeted search.

    ``witness`` is set only for FOUND. REFUTED means the whole state space was
    exhausted; UNKNOWN means the budget ran out first.
    """

    outcome: SearchOutcome
    witness: Any = None
    reason: str = ""
    states: int = 0
    extra: dict = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.outcome is SearchOutcome.FOUND

    @property
    def refuted(self) -> bool:
        return self.outcome is SearchOutcome.REFUTED

    @property
    def unknown(self) -> bool:
        return self.outcome is SearchOutcome.UNKNOWN

    def __bool__(self) -> bool:
        return self.found


def found(witness: Any, states: int = 0, reason: str = "") -> SearchResult:
    return SearchResult(SearchOutcome.FOUND, witness, reason, states)


def refuted(reason: str, states: int = 0) -> SearchResult:
    return SearchResult(SearchOutcome.REFUTED, None, reason, states)


def unknown(states: int, reason: Optional[str] = None) -> SearchResult:
    return SearchResult(
        SearchOutcome.UNKNOWN, None, reason or f"budget exhausted after {states} states", states
    )


def depth_first(
    start: Any,
    moves: Callable[[Any], Iterable[Tuple[Any, Any]]],
    is_goal: Callable[[Any], bool],
    budget: int,
    key: Callable[[Any], Hashable] = lambda state: state,
) -> SearchResult:
    """Budgeted depth-first search with memoized dead states.

    Args:
        start: Initial state
        moves: Yields (label, next state) pairs in the order to try them
        is_goal: Goal predicate
        budget: Maximum number of states to expand
        key: Hashable identity of a state for the memo

    Returns:
        FOUND with the list of move labels as witness (the goal state is in
        ``extra["final"]``), REFUTED after exhausting every state, or UNKNOWN
    """
    if is_goal(start):
        result = found([], 1)
        result.extra["final"] = start
        return result
    dead = set()
    stack = [iter(moves(start))]
    states = [start]
    path: List[Any] = []
    expanded = 1
    while stack:
        move = next(stack[-1], None)
        if move is None:
            stack.pop()
            dead.add(key(states.pop()))
            if path:
                path.pop()
            continue
        label, nxt = move
        if key(nxt) in dead:
            continue
        expanded += 1
        if expanded > budget:
            return unknown(expanded)
        path.append(label)
        if is_goal(nxt):
            result = found(list(path), expanded)
            result.extra["final"] = nxt
            return result
        stack.append(iter(moves(nxt)))
        states.append(nxt)
    return refuted("state space exhausted", expanded)
