import logging
import pickle

import pytest

from clutter_sdk import Face, PreconditionError
from clutter_sdk.faces import as_mask, format_mask, maximalize, minimalize, sort_masks, submasks

log = logging.getLogger("test.faces")


def test_face_is_canonical():
    log.info("=== Starting test_face_is_canonical ===")
    face = Face.of(3, 1, 2)
    assert face.vertices == (1, 2, 3)
    assert face == Face.from_vertices([1, 2, 3])
    assert str(face) == "{1,2,3}"
    assert repr(face) == "Face(1, 2, 3)"
    assert len(face) == 3 and 2 in face and 4 not in face
    assert face.max_vertex == 3
    log.info("✓ test_face_is_canonical passed")


def test_face_rejects_bad_vertices():
    log.info("=== Starting test_face_rejects_bad_vertices ===")
    with pytest.raises(PreconditionError):
        Face.of(1, 1)
    with pytest.raises(PreconditionError):
        Face.of(0, 2)
    with pytest.raises(PreconditionError):
        Face.of(65)
    log.info("✓ test_face_rejects_bad_vertices passed")


def test_face_order_is_lexicographic():
    log.info("=== Starting test_face_order_is_lexicographic ===")
    faces = [Face.of(2), Face.of(1, 3), Face.of(1, 2)]
    assert sorted(faces) == [Face.of(1, 2), Face.of(1, 3), Face.of(2)]
    assert sort_masks([0b10, 0b101, 0b11]) == [0b11, 0b101, 0b10]
    log.info("✓ test_face_order_is_lexicographic passed")


def test_face_set_operations():
    log.info("=== Starting test_face_set_operations ===")
    a, b = Face.of(1, 2), Face.of(2, 3)
    assert a.union(b) == Face.of(1, 2, 3)
    assert a.difference(b) == Face.of(1)
    assert Face.of(2).issubset(a)
    assert not a.issubset(b)
    with pytest.raises(AttributeError):
        a.mask = 7
    log.info("✓ test_face_set_operations passed")


def test_face_pickles():
    log.info("=== Starting test_face_pickles ===")
    face = Face.of(1, 4)
    assert pickle.loads(pickle.dumps(face)) == face
    log.info("✓ test_face_pickles passed")


def test_mask_helpers():
    log.info("=== Starting test_mask_helpers ===")
    assert as_mask([1, 3]) == 0b101
    assert as_mask(Face.of(2)) == 0b10
    assert as_mask(6) == 6
    assert format_mask(0) == "{}"
    assert minimalize({0b11, 0b111, 0b100}) == frozenset({0b11, 0b100})
    assert maximalize({0b11, 0b111, 0b100}) == frozenset({0b111})
    assert sorted(submasks(0b101)) == [0, 0b1, 0b100, 0b101]
    log.info("✓ test_mask_helpers passed")
