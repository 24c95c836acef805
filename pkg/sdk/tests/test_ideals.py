import logging

import pytest

from clutter_sdk import (
    Face,
    PreconditionError,
    SquarefreeMonomialIdeal,
    colon_ideal,
    component_ideal,
    full_skeleton,
    ideal_intersection,
    ideal_sum,
    stanley_reisner_complex,
    stanley_reisner_ideal,
)
from conftest import ideal

log = logging.getLogger("test.ideals")


def test_generators_are_minimalized():
    log.info("=== Starting test_generators_are_minimalized ===")
    I = ideal(4, 12, 123, 34)
    assert I == ideal(4, 12, 34)
    assert str(I) == "(x1x2, x3x4)"
    assert I.is_equigenerated and I.degree() == 2
    assert I.contains(Face.of(1, 2, 4)) and not I.contains(Face.of(1, 3))
    assert str(SquarefreeMonomialIdeal.zero(3)) == "(0)"
    with pytest.raises(PreconditionError):
        ideal(3, 1, 23).degree()
    log.info("✓ test_generators_are_minimalized passed")


def test_colon_of_example1(example1_ideal):
    log.info("=== Starting test_colon_of_example1 ===")
    colon = colon_ideal(example1_ideal, Face.of(3, 4, 5))
    assert colon == ideal(5, 1, 2)
    log.info("✓ test_colon_of_example1 passed")


def test_sum_and_intersection():
    log.info("=== Starting test_sum_and_intersection ===")
    assert ideal_intersection(ideal(3, 12), ideal(3, 23)) == ideal(3, 123)
    assert ideal_sum(ideal(3, 12), ideal(3, 1)) == ideal(3, 1)
    assert ideal_intersection(ideal(3, 12), SquarefreeMonomialIdeal.zero(3)).is_zero
    log.info("✓ test_sum_and_intersection passed")


def test_stanley_reisner_round_trip(example1_ideal):
    log.info("=== Starting test_stanley_reisner_round_trip ===")
    delta = stanley_reisner_complex(ideal(3, 12))
    assert set(delta.facet_faces) == {Face.of(1, 3), Face.of(2, 3)}
    assert stanley_reisner_ideal(stanley_reisner_complex(example1_ideal)) == example1_ideal
    with pytest.raises(PreconditionError):
        stanley_reisner_complex(SquarefreeMonomialIdeal(3, frozenset({0})))
    log.info("✓ test_stanley_reisner_round_trip passed")


def test_component_ideal():
    log.info("=== Starting test_component_ideal ===")
    I = ideal(3, 1, 23)
    component, delta_t = component_ideal(I, 2)
    assert component == ideal(3, 12, 13, 23)
    assert stanley_reisner_complex(component) == delta_t
    with pytest.raises(PreconditionError):
        component_ideal(I, 1)
    top, delta_n = component_ideal(ideal(4, 12, 34), 4)
    assert top == ideal(4, 1234)
    assert delta_n == full_skeleton(4, 2)
    log.info("✓ test_component_ideal passed")
