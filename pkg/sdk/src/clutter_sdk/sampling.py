"""Seeded random instances for the verification sweeps."""

import random
from typing import List, Optional, Tuple

from .clutter import (
    UniformClutter,
    circuit_ideal_of_complement,
    complete_clutter,
    deletion,
    is_simplicial,
    maximal_subcircuits,
)
from .faces import Face, ground_mask, max_vertex, minimalize, sort_masks, subsets_of_size
from .ideals import SquarefreeMonomialIdeal
from .reduction import RemovalSequence, RemovalStep

Removal = Tuple[UniformClutter, Face, Face]


def pick_size(rng: random.Random, d: int, n_max: int) -> int:
    """A ground-set size in d+1..n_max (n_max itself when that range is empty)."""
    return rng.randint(d + 1, n_max) if n_max > d + 1 else max(n_max, d)


def random_clutter(rng: random.Random, n: int, d: int, density: float = 0.6) -> UniformClutter:
    """Each d-subset of [n] becomes a circuit with probability ``density``."""
    candidates = sort_masks(subsets_of_size(ground_mask(n), d))
    return UniformClutter(n, d, frozenset(c for c in candidates if rng.random() < density))


def removal_candidates(C: UniformClutter) -> List[Tuple[Face, Face]]:
    """Every (e, F) with e a simplicial maximal subcircuit and F a circuit containing it."""
    pairs = []
    for e in sorted(maximal_subcircuits(C)):
        if not is_simplicial(C, e):
            continue
        pairs.extend((e, F) for F in C.circuits if e.issubset(F))
    return pairs


def random_removal(rng: random.Random, n: int, d: int, tries: int = 50) -> Removal:
    """A clutter with a valid single removal (e, F); falls back to C_{n,d}."""
    for _ in range(tries):
        C = random_clutter(rng, n, d, rng.choice((0.4, 0.6, 0.8)))
        pairs = removal_candidates(C)
        if pairs:
            e, F = rng.choice(pairs)
            return C, e, F
    C = complete_clutter(n, d)
    e, F = rng.choice(removal_candidates(C))
    return C, e, F


def random_removal_sequence(
    rng: random.Random, base: UniformClutter, max_steps: Optional[int] = None
) -> RemovalSequence:
    """Random valid grouped steps from ``base`` until nothing is removable or ``max_steps``."""
    current = base
    steps: List[RemovalStep] = []
    while max_steps is None or len(steps) < max_steps:
        simplicial = [e for e in sorted(maximal_subcircuits(current)) if is_simplicial(current, e)]
        if not simplicial:
            break
        e = rng.choice(simplicial)
        containing = [F for F in current.circuits if e.issubset(F)]
        A = frozenset(rng.sample(containing, rng.randint(1, len(containing))))
        steps.append(RemovalStep(e, A))
        current = current.with_masks(current.masks - {F.mask for F in A})
        if max_steps is None and rng.random() < 0.15:
            break
    return RemovalSequence(base, tuple(steps))


def random_simplicial_order(rng: random.Random, C: UniformClutter) -> List[Face]:
    """Random deletions at simplicial maximal subcircuits until stuck or empty."""
    order = []
    while len(C):
        simplicial = [e for e in sorted(maximal_subcircuits(C)) if is_simplicial(C, e)]
        if not simplicial:
            break
        e = rng.choice(simplicial)
        order.append(e)
        C = deletion(C, e)
    return order


def random_stable_ideal(rng: random.Random, n: int, d: int, seeds: int = 2) -> SquarefreeMonomialIdeal:
    """Closure of a few random d-sets under u -> x_j u / x_{m(u)}, j < m(u)."""
    pool = sort_masks(subsets_of_size(ground_mask(n), d))
    generators = set(rng.sample(pool, min(seeds, len(pool))))
    frontier = list(generators)
    while frontier:
        u = frontier.pop()
        top = 1 << (max_vertex(u) - 1)
        for j in range(max_vertex(u) - 1):
            if u >> j & 1:
                continue
            w = (u & ~top) | (1 << j)
            if w not in generators:
                generators.add(w)
                frontier.append(w)
    return SquarefreeMonomialIdeal(n, frozenset(generators))


def random_ideal(rng: random.Random, n: int, max_degree: int = 3, count: int = 4) -> SquarefreeMonomialIdeal:
    """A nonzero proper ideal, with generators of mixed degree whenever possible."""
    while True:
        faces = []
        for _ in range(count):
            k = rng.randint(1, min(max_degree, n))
            faces.append(sum(1 << v for v in rng.sample(range(n), k)))
        I = SquarefreeMonomialIdeal(n, minimalize(faces))
        if not I.is_equigenerated or min(max_degree, n) == 1:
            return I


def random_colon_pair(rng: random.Random, n: int, d: int) -> Tuple[SquarefreeMonomialIdeal, Face]:
    """A nonzero ideal generated in degree d and a d-set F with x_F outside it."""
    while True:
        C = random_clutter(rng, n, d, rng.choice((0.3, 0.5, 0.7)))
        I = circuit_ideal_of_complement(C)
        if len(C) and not I.is_zero:
            break
    return I, rng.choice(C.circuits)
