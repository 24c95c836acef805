import logging
import random

import pytest

from clutter_sdk import (
    EngineConfig,
    Face,
    SearchOutcome,
    circuit_ideal_of_complement,
    complete_clutter,
    deletion,
    extends_linear_quotients,
    is_linear_quotient_order,
    linear_quotients_search,
    verify_removal_sequence,
)
from clutter_sdk.sampling import random_removal_sequence
from conftest import digits, ideal

log = logging.getLogger("test.quotients")


def test_bowtie_complement_has_linear_quotients(bowtie):
    log.info("=== Starting test_bowtie_complement_has_linear_quotients ===")
    I = circuit_ideal_of_complement(bowtie)
    assert sorted(digits(g) for g in I.generator_faces) == ["14", "15", "24", "25"]
    result = linear_quotients_search(I)
    assert result.outcome is SearchOutcome.FOUND
    assert is_linear_quotient_order(result.witness)
    assert is_linear_quotient_order([Face.of(1, 4), Face.of(1, 5), Face.of(2, 4), Face.of(2, 5)])
    log.info("✓ test_bowtie_complement_has_linear_quotients passed")


def test_bowtie_edge_ideal_refuted():
    log.info("=== Starting test_bowtie_edge_ideal_refuted ===")
    result = linear_quotients_search(ideal(5, 12, 13, 23, 34, 35, 45))
    assert result.outcome is SearchOutcome.REFUTED
    assert result.outcome.exit_code == 1
    assert result.witness is None
    log.info("✓ test_bowtie_edge_ideal_refuted passed")


def test_order_checks(example1_ideal):
    log.info("=== Starting test_order_checks ===")
    assert not is_linear_quotient_order(sorted(example1_ideal.generator_faces))
    assert extends_linear_quotients([Face.of(3, 4, 5), Face.of(1, 4, 5)], Face.of(2, 3, 5))
    assert not extends_linear_quotients([Face.of(1, 4, 5)], Face.of(2, 3, 5))
    assert is_linear_quotient_order([Face.of(1, 2)])
    log.info("✓ test_order_checks passed")


def test_stable_and_principal(stable5):
    log.info("=== Starting test_stable_and_principal ===")
    result = linear_quotients_search(stable5)
    assert result.found
    assert sorted(result.witness) == sorted(stable5.generator_faces)
    single = linear_quotients_search(ideal(4, 123))
    assert single.found and single.witness == [Face.of(1, 2, 3)]
    log.info("✓ test_stable_and_principal passed")


def test_budget_gives_unknown():
    log.info("=== Starting test_budget_gives_unknown ===")
    I = ideal(6, 12, 23, 34, 45, 56, 16)
    result = linear_quotients_search(I, EngineConfig(search_budget=1))
    assert result.outcome is SearchOutcome.UNKNOWN
    assert result.outcome.exit_code == 3
    log.info("✓ test_budget_gives_unknown passed")


def test_deleting_figure1_order_keeps_linear_quotients(figure1_c, figure1_order):
    log.info("=== Starting test_deleting_figure1_order_keeps_linear_quotients ===")
    result = linear_quotients_search(circuit_ideal_of_complement(figure1_c))
    assert result.found
    order = list(result.witness)
    C = figure1_c
    for e in figure1_order:
        removed = [F for F in C.circuits if Face.of(*e).issubset(F)]
        assert removed
        for F in removed:
            assert extends_linear_quotients(order, F), (e, F)
            order.append(F)
        C = deletion(C, Face.of(*e))
    assert len(C) == 0
    assert is_linear_quotient_order(order)
    assert sorted(order) == sorted(circuit_ideal_of_complement(C).generator_faces)
    log.info("✓ test_deleting_figure1_order_keeps_linear_quotients passed")


@pytest.mark.parametrize("n,d,seed", [(5, 2, 1), (6, 3, 2), (6, 2, 3)])
def test_random_sequences_keep_linear_quotients(n, d, seed):
    log.info(f"=== Starting test_random_sequences_keep_linear_quotients[{n}-{d}] ===")
    rng = random.Random(seed)
    for _ in range(5):
        seq = random_removal_sequence(rng, complete_clutter(n, d))
        # I of the complete clutter is zero, so the order starts empty
        order = []
        for step in seq.singletons():
            (F,) = step.circuits
            assert extends_linear_quotients(order, F), str(step)
            order.append(F)
        final = verify_removal_sequence(seq.singletons())
        assert final == verify_removal_sequence(seq)
        assert sorted(order) == sorted(circuit_ideal_of_complement(final).generator_faces)
        assert is_linear_quotient_order(order)
    log.info(f"✓ test_random_sequences_keep_linear_quotients[{n}-{d}] passed")
