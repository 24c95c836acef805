import logging
import random
from itertools import combinations

import pytest

from clutter_sdk import (
    EngineConfig,
    Face,
    GuardExceeded,
    PreconditionError,
    UniformClutter,
    circuit_ideal_of_complement,
    clique_complex,
    closed_neighborhood,
    clutter_of_complex,
    clutter_of_ideal,
    complement,
    complete_clutter,
    deletion,
    is_clique,
    is_simplicial,
    maximal_subcircuits,
    simplicial_elements,
    stanley_reisner_ideal,
)
from clutter_sdk.faces import ground_mask, sort_masks, subsets_of_size
from clutter_sdk.sampling import random_clutter
from conftest import clutter, ideal, slow

log = logging.getLogger("test.clutter")


def test_complete_and_complement(figure1_c):
    log.info("=== Starting test_complete_and_complement ===")
    assert len(complete_clutter(4, 3)) == 4
    assert len(complete_clutter(2, 3)) == 0
    assert len(complement(figure1_c)) == 20 - 8
    assert complement(complement(figure1_c)) == figure1_c
    assert circuit_ideal_of_complement(complete_clutter(4, 3)).is_zero
    log.info("✓ test_complete_and_complement passed")


def test_clutter_validation():
    log.info("=== Starting test_clutter_validation ===")
    with pytest.raises(PreconditionError):
        clutter(4, 3, 123, 123)
    with pytest.raises(PreconditionError):
        clutter(4, 3, 12)
    with pytest.raises(PreconditionError):
        clutter(3, 2, 14)
    log.info("✓ test_clutter_validation passed")


def test_deletion(figure1_c):
    log.info("=== Starting test_deletion ===")
    smaller = deletion(figure1_c, Face.of(1, 3))
    assert smaller == clutter(6, 3, 124, 234, 125, 126, 156, 256)
    with pytest.raises(PreconditionError):
        deletion(figure1_c, Face.of(1, 2, 3, 4))
    log.info("✓ test_deletion passed")


def test_neighborhoods_and_simplicial_elements(figure1_c, figure1_d):
    log.info("=== Starting test_neighborhoods_and_simplicial_elements ===")
    assert closed_neighborhood(figure1_c, Face.of(1, 3)) == Face.of(1, 2, 3, 4)
    assert is_simplicial(figure1_c, Face.of(1, 3))
    assert not is_simplicial(figure1_c, Face.of(1, 2))
    assert closed_neighborhood(figure1_d, Face.of(3, 4)) == Face.of(1, 3, 4, 5)
    assert not is_simplicial(figure1_d, Face.of(3, 4))
    # only {1,5} lies in no circuit of D, and it is trivially simplicial
    assert simplicial_elements(figure1_d) == frozenset({Face.of(1, 5)})
    assert Face.of(1, 5) not in maximal_subcircuits(figure1_d)
    with pytest.raises(PreconditionError):
        closed_neighborhood(figure1_c, Face.of(1))
    log.info("✓ test_neighborhoods_and_simplicial_elements passed")


def test_cliques():
    log.info("=== Starting test_cliques ===")
    full = complete_clutter(4, 3)
    assert is_clique(full, Face.of(1, 2, 3, 4))
    assert is_clique(clutter(4, 3, 123), Face.of(1, 2))
    assert not is_clique(clutter(4, 3, 123), Face.of(1, 2, 4))
    assert len(maximal_subcircuits(full)) == 6
    log.info("✓ test_cliques passed")


def test_clique_complex(figure1_c):
    log.info("=== Starting test_clique_complex ===")
    delta = clique_complex(figure1_c)
    expected = {Face.of(*f) for f in [(1, 2, 3, 4), (1, 2, 5, 6), (3, 5), (3, 6), (4, 5), (4, 6)]}
    assert set(delta.facet_faces) == expected
    with pytest.raises(GuardExceeded):
        clique_complex(figure1_c, EngineConfig(clique_guard=5))
    log.info("✓ test_clique_complex passed")


def test_ideal_clutter_round_trip(figure1_c, example1_ideal):
    log.info("=== Starting test_ideal_clutter_round_trip ===")
    I = circuit_ideal_of_complement(figure1_c)
    assert len(I) == 12
    assert clutter_of_ideal(I, 3) == figure1_c
    with pytest.raises(PreconditionError):
        clutter_of_ideal(ideal(4, 12, 134), 2)
    assert clutter_of_ideal(example1_ideal, 3).masks.isdisjoint(example1_ideal.generators)
    log.info("✓ test_ideal_clutter_round_trip passed")


def test_clutter_of_complex(dunce_hat):
    log.info("=== Starting test_clutter_of_complex ===")
    C = clutter_of_complex(dunce_hat)
    assert (C.n, C.d, len(C)) == (8, 3, 17)
    assert isinstance(C, UniformClutter)
    log.info("✓ test_clutter_of_complex passed")


def every_clutter(n, d):
    """All d-uniform clutters on [n], the empty one included."""
    candidates = sort_masks(subsets_of_size(ground_mask(n), d))
    for chosen in range(1 << len(candidates)):
        yield UniformClutter(n, d, frozenset(c for k, c in enumerate(candidates) if chosen >> k & 1))


def sampled_clutters(n, d, count, seed):
    rng = random.Random(seed)
    for _ in range(count):
        yield random_clutter(rng, n, d, rng.choice((0.3, 0.5, 0.7, 0.9)))


def check_local_properties(C):
    """Simplicial elements, the clique-complex round trip and removal of circuits through e."""
    I = circuit_ideal_of_complement(C)
    # e is simplicial iff no generator of I(C̄) fits inside N_C[e]
    neighborhoods = {
        Face(e): closed_neighborhood(C, Face(e)).mask
        for e in subsets_of_size(ground_mask(C.n), C.d - 1)
    }
    separated = {e for e, N in neighborhoods.items() if all(g & ~N for g in I.generators)}
    assert simplicial_elements(C) == separated, C

    assert stanley_reisner_ideal(clique_complex(C)) == I, C

    for e in simplicial_elements(C):
        through = [c for c in C.masks if e.mask & ~c == 0]
        for k in range(1, len(through) + 1):
            for A in combinations(through, k):
                assert is_simplicial(C.with_masks(C.masks - set(A)), e), (C, e, A)


@pytest.mark.parametrize("n,d", [(4, 3), (5, 2), (5, 3)])
def test_local_properties_exhaustive(n, d):
    log.info(f"=== Starting test_local_properties_exhaustive[{n}-{d}] ===")
    count = 0
    for C in every_clutter(n, d):
        check_local_properties(C)
        count += 1
    log.info(f"checked {count} clutters on [{n}] with d={d}")
    assert count == 2 ** len(complete_clutter(n, d))
    log.info(f"✓ test_local_properties_exhaustive[{n}-{d}] passed")


@slow
def test_local_properties_exhaustive_six_vertices():
    log.info("=== Starting test_local_properties_exhaustive_six_vertices ===")
    for C in every_clutter(6, 2):
        check_local_properties(C)
    log.info("✓ test_local_properties_exhaustive_six_vertices passed")


@slow
@pytest.mark.parametrize("d", [2, 3])
def test_local_properties_seven_vertices(d):
    log.info(f"=== Starting test_local_properties_seven_vertices[{d}] ===")
    for C in sampled_clutters(7, d, 300, seed=70 + d):
        check_local_properties(C)
    log.info(f"✓ test_local_properties_seven_vertices[{d}] passed")
