"""Simplicial subclutters: removal steps, their replay, and the witness searches."""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, List, Sequence, Tuple

from .clutter import (
    UniformClutter,
    closed_neighborhood,
    clique_complex,
    deletion,
    is_simplicial,
    maximal_subcircuits,
)
from .complexes import SimplicialComplex
from .config import DEFAULT_CONFIG, EngineConfig
from .errors import InvalidCircuits, InvalidStep, PreconditionError, RemovalError
from .faces import Face, as_mask, sort_masks, subsets_of_size
from .homology.collapse import CollapseStep, simple_collapse
from .search import SearchOutcome, SearchResult, depth_first

logger = logging.getLogger("clutter_sdk.reduction")


@dataclass(frozen=True)
class RemovalStep:
    """Removal of the circuits ``circuits`` (the set A) through the (d-1)-set ``e``."""

    e: Face
    circuits: frozenset

    @classmethod
    def of(cls, e, circuits: Iterable) -> "RemovalStep":
        return cls(Face(as_mask(e)), frozenset(Face(as_mask(c)) for c in circuits))

    @property
    def sorted_circuits(self) -> List[Face]:
        return sorted(self.circuits)

    def as_dict(self) -> dict:
        return {
            "e": list(self.e.vertices),
            "A": [list(c.vertices) for c in self.sorted_circuits],
        }

    def __str__(self):
        body = ", ".join(str(c) for c in self.sorted_circuits)
        return f"e={self.e} A={{{body}}}"


@dataclass(frozen=True)
class RemovalSequence:
    """Steps (e_1, A_1), ..., (e_t, A_t) applied in order to ``base``."""

    base: UniformClutter
    steps: Tuple[RemovalStep, ...] = ()

    @classmethod
    def from_pairs(cls, base: UniformClutter, pairs: Iterable) -> "RemovalSequence":
        return cls(base, tuple(RemovalStep.of(e, A) for e, A in pairs))

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[RemovalStep]:
        return iter(self.steps)

    def singletons(self) -> "RemovalSequence":
        """Every grouped step split into single-circuit steps, A in lexicographic order."""
        return RemovalSequence(
            self.base,
            tuple(
                RemovalStep(step.e, frozenset({c}))
                for step in self.steps
                for c in step.sorted_circuits
            ),
        )

    def as_dict(self) -> dict:
        return {
            "n": self.base.n,
            "d": self.base.d,
            "steps": [step.as_dict() for step in self.steps],
        }


@dataclass
class StepRecord:
    """Bookkeeping of one replayed step.

    ``s`` counts the variables x_v with x_v x_e in the base ideal I(C̄);
    ``t`` counts the circuits removed earlier that contain e.
    """

    index: int
    e: Face
    circuits: List[Face]
    s: int
    t: int

    def as_dict(self) -> dict:
        return {
            "index": self.index,
            "e": list(self.e.vertices),
            "A": [list(c.vertices) for c in self.circuits],
            "s": self.s,
            "t": self.t,
        }


@dataclass
class ReplayResult:
    """Final clutter of a replay, per-step records, and every intermediate clutter.

    ``stages[0]`` is the base and ``stages[k]`` the clutter after step k.
    """

    final: UniformClutter
    records: List[StepRecord]
    stages: List[UniformClutter]


def apply_removal_step(C: UniformClutter, step: RemovalStep) -> UniformClutter:
    """C minus the circuits of ``step``.

    Raises:
        InvalidStep: If e is not a simplicial (d-1)-set of C
        InvalidCircuits: If A is empty, or holds a set that is not a circuit
            of C containing e
    """
    e = step.e.mask
    if e.bit_count() != C.d - 1:
        raise InvalidStep(f"{step.e} has {e.bit_count()} vertices, expected d-1 = {C.d - 1}")
    if not is_simplicial(C, e):
        raise InvalidStep(f"{step.e} is not simplicial: N[e] = {closed_neighborhood(C, e)} is not a clique")
    if not step.circuits:
        raise InvalidCircuits(f"no circuits to remove through {step.e}")
    for F in step.sorted_circuits:
        if F.mask not in C.masks:
            raise InvalidCircuits(f"{F} is not a circuit of the current clutter")
        if e & ~F.mask:
            raise InvalidCircuits(f"{F} does not contain {step.e}")
    return C.with_masks(C.masks - {F.mask for F in step.circuits})


def _outside_count(base: UniformClutter, e: int) -> int:
    """Vertices v outside e with e ∪ {v} not a circuit of ``base``."""
    return sum(
        1
        for v in range(base.n)
        if not e >> v & 1 and (e | 1 << v) not in base.masks
    )


def replay_removal_sequence(seq: RemovalSequence) -> ReplayResult:
    """Replay every step from the base, recording s_k and t_k.

    Raises:
        RemovalError: At the first invalid step, with its 1-based ``step_index``
    """
    current = seq.base
    stages = [current]
    records: List[StepRecord] = []
    removed: List[int] = []
    for k, step in enumerate(seq.steps, 1):
        try:
            current = apply_removal_step(current, step)
        except RemovalError as exc:
            logger.debug(f"✗ step {k} rejected: {exc.message}")
            raise exc.at_step(k) from exc
        e = step.e.mask
        t = sum(1 for F in removed if e & ~F == 0)
        s = _outside_count(seq.base, e)
        records.append(StepRecord(k, step.e, step.sorted_circuits, s, t))
        removed.extend(F.mask for F in step.circuits)
        stages.append(current)
        logger.debug(f"→ step {k} {step}: s={s} t={t}, {len(current)} circuits left")
    return ReplayResult(current, records, stages)


def verify_removal_sequence(seq: RemovalSequence) -> UniformClutter:
    """Replay ``seq`` and return the clutter it ends at.

    Raises:
        RemovalError: At the first invalid step, with its 1-based ``step_index``
    """
    return replay_removal_sequence(seq).final


def _simplicial_subcircuit(C: UniformClutter, F: int):
    """Lexicographically first (d-1)-subset of F that is simplicial over C, or None."""
    for e in sort_masks(subsets_of_size(F, C.d - 1)):
        if is_simplicial(C, e):
            return e
    return None


class SubclutterSearch:
    """Decide whether D is a simplicial subclutter of C.

    Only single-circuit steps are explored: a grouped step splits into
    singletons through the same e, and conversely. A state is the set of
    circuits removed so far; dead states are memoized.
    """

    def __init__(self, budget: int):
        self.budget = budget
        self.logger = logging.getLogger(f"clutter_sdk.{self.__class__.__name__}")

    def run(self, C: UniformClutter, D: UniformClutter) -> SearchResult:
        if not D.issubclutter(C):
            raise PreconditionError("the target must be a subclutter of the base with the same n and d")
        targets = sort_masks(C.masks - D.masks)
        self.logger.debug(f"→ subclutter search: {len(targets)} circuits to remove")

        def moves(removed: frozenset):
            current = C.with_masks(C.masks - removed)
            for F in targets:
                if F in removed:
                    continue
                e = _simplicial_subcircuit(current, F)
                if e is not None:
                    yield RemovalStep(Face(e), frozenset({Face(F)})), removed | {F}

        result = depth_first(
            frozenset(), moves, lambda removed: len(removed) == len(targets), self.budget
        )
        if result.outcome is SearchOutcome.FOUND:
            result.witness = RemovalSequence(C, tuple(result.witness))
            result.extra.pop("final", None)
            self.logger.info(f"← subclutter witness with {len(result.witness)} steps")
        elif result.outcome is SearchOutcome.REFUTED:
            result.reason = (
                "no circuit of C minus D can be removed through a simplicial element"
                if result.states == 1
                else "every removal order dead-ends"
            )
            self.logger.info(f"← REFUTED after {result.states} states: {result.reason}")
        else:
            self.logger.warning(f"subclutter search budget {self.budget} exhausted")
        return result


def subclutter_search(
    C: UniformClutter, D: UniformClutter, config: EngineConfig = DEFAULT_CONFIG
) -> SearchResult:
    """Search for a removal sequence from C down to D.

    Returns:
        FOUND with a single-circuit RemovalSequence, REFUTED when D is
        provably not a simplicial subclutter, UNKNOWN on budget exhaustion

    Raises:
        PreconditionError: If D is not a subclutter of C with equal n and d
    """
    return SubclutterSearch(config.search_budget).run(C, D)


class ChordalityMode(str, Enum):
    DELETION = "deletion"
    EMPTY_SUBCLUTTER = "empty-subclutter"


class ChordalitySearch:
    """Search for a simplicial order: deletions at simplicial maximal subcircuits down to ∅.

    Candidates are tried lexicographically, so the first descent is the
    greedy order; the search then backtracks over memoized dead clutters.
    """

    def __init__(self, budget: int):
        self.budget = budget
        self.logger = logging.getLogger(f"clutter_sdk.{self.__class__.__name__}")

    def run(self, C: UniformClutter) -> SearchResult:
        def moves(masks: frozenset):
            current = C.with_masks(masks)
            for sub in sorted(maximal_subcircuits(current)):
                if is_simplicial(current, sub):
                    A = frozenset(Face(c) for c in masks if sub.mask & ~c == 0)
                    yield RemovalStep(sub, A), deletion(current, sub).masks

        self.logger.debug(f"→ chordality search on {len(C)} circuits")
        result = depth_first(C.masks, moves, lambda masks: not masks, self.budget)
        if result.outcome is SearchOutcome.FOUND:
            seq = RemovalSequence(C, tuple(result.witness))
            result.witness = seq
            result.extra.pop("final", None)
            result.extra["order"] = [step.e for step in seq]
            self.logger.info(f"← simplicial order of length {len(seq)}")
        elif result.outcome is SearchOutcome.REFUTED:
            result.reason = (
                "no simplicial maximal subcircuit at step 0"
                if result.states == 1
                else "every simplicial order dead-ends"
            )
            self.logger.info(f"← REFUTED after {result.states} states: {result.reason}")
        else:
            self.logger.warning(f"chordality search budget {self.budget} exhausted")
        return result


def chordality_search(
    C: UniformClutter,
    mode: ChordalityMode = ChordalityMode.DELETION,
    config: EngineConfig = DEFAULT_CONFIG,
) -> SearchResult:
    """Chordality of C, either by simplicial orders or as "∅ is a simplicial subclutter".

    The two predicates are kept apart; whether they always agree is not assumed.
    """
    mode = ChordalityMode(mode)
    if mode is ChordalityMode.EMPTY_SUBCLUTTER:
        return subclutter_search(C, UniformClutter.empty(C.n, C.d), config)
    return ChordalitySearch(config.search_budget).run(C)


def collapse_from_simplicial_order(
    C: UniformClutter, order: Sequence, config: EngineConfig = DEFAULT_CONFIG
) -> Tuple[SimplicialComplex, List[CollapseStep]]:
    """Collapse Δ(C) along a simplicial order e_1, ..., e_t.

    Each e_k must be a free face of the current complex whose only facet is
    N[e_k] in the current clutter. A full order ends at the (d-2)-skeleton of
    the simplex on [n] with e_1, ..., e_t removed.

    Raises:
        InvalidStep: With the 1-based index of the first e_k that is not
            simplicial or whose collapse is not simple
    """
    complex_ = clique_complex(C, config)
    clutter = C
    steps: List[CollapseStep] = []
    for k, e in enumerate(order, 1):
        m = as_mask(e)
        if m.bit_count() != C.d - 1 or not is_simplicial(clutter, m):
            raise InvalidStep(f"{Face(m)} is not simplicial", k)
        try:
            complex_, step = simple_collapse(complex_, m)
        except PreconditionError as exc:
            raise InvalidStep(f"{Face(m)} is not a free face", k) from exc
        expected = closed_neighborhood(clutter, m)
        if step.facet != expected:
            raise InvalidStep(f"{Face(m)} lies in {step.facet}, not in N[e] = {expected}", k)
        clutter = deletion(clutter, m)
        steps.append(step)
    logger.debug(f"collapsed {len(steps)} faces, {len(complex_.facets)} facets remain")
    return complex_, steps
