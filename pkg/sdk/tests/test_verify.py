import logging
import random
from itertools import permutations

import pytest

from clutter_sdk import (
    GF3,
    ChordalityMode,
    Face,
    PreconditionError,
    SimplicialComplex,
    UniformClutter,
    chordality_search,
    hunt_separating_clutter,
    run_random,
    verify_instance,
    verify_prop44,
)
from clutter_sdk.faces import ground_mask, sort_masks, subsets_of_size, vertices_of
from clutter_sdk.sampling import removal_candidates
from clutter_sdk.verify import RANDOM_VERIFIERS, VerificationReport, check_theorem2

from conftest import ideal, slow

log = logging.getLogger("test.verify")


@pytest.mark.parametrize("name", sorted(RANDOM_VERIFIERS))
def test_random_verifier_passes(name):
    log.info(f"=== Starting test_random_verifier_passes[{name}] ===")
    report = run_random(name, seed=11, trials=3, n=5)
    log.info(f"{name}: {report.as_dict()}")
    assert report.trials >= 1
    assert report.ok, report.failures
    log.info(f"✓ test_random_verifier_passes[{name}] passed")


def test_theorem2_with_other_field():
    log.info("=== Starting test_theorem2_with_other_field ===")
    report = run_random("theorem2", seed=3, trials=2, n=5, d=2, field_spec=GF3)
    assert report.ok, report.failures
    log.info("✓ test_theorem2_with_other_field passed")


def test_same_seed_same_report():
    log.info("=== Starting test_same_seed_same_report ===")
    first = run_random("strand", seed=5, trials=2, n=5)
    second = run_random("strand", seed=5, trials=2, n=5)
    assert first.as_dict() == second.as_dict()
    log.info("✓ test_same_seed_same_report passed")


def test_prop44_verifier(dunce_hat):
    log.info("=== Starting test_prop44_verifier ===")
    assert verify_prop44([("dunce-hat", dunce_hat)]).ok
    simplex = SimplicialComplex.from_faces(3, [(1, 2, 3)])
    report = verify_prop44([("simplex", simplex)])
    assert not report.ok
    assert report.failures == ["simplex: hypotheses not met"]
    log.info("✓ test_prop44_verifier passed")


def test_report_records_failures():
    log.info("=== Starting test_report_records_failures ===")
    report = VerificationReport("demo", trials=1)
    assert report.ok
    report.fail("broken")
    assert report.as_dict() == {"name": "demo", "trials": 1, "ok": False, "failures": ["broken"]}
    log.info("✓ test_report_records_failures passed")


def test_hunt_returns_separating_clutter_or_none():
    log.info("=== Starting test_hunt_returns_separating_clutter_or_none ===")
    found = hunt_separating_clutter(random.Random(2), 5, 3, 4)
    if found is not None:
        deletion_mode = chordality_search(found, ChordalityMode.DELETION).outcome
        empty_mode = chordality_search(found, ChordalityMode.EMPTY_SUBCLUTTER).outcome
        assert deletion_mode is not empty_mode
    log.info("✓ test_hunt_returns_separating_clutter_or_none passed")


def test_verify_instance(figure1_c, example1_ideal, stable5, dunce_hat):
    log.info("=== Starting test_verify_instance ===")
    e, F = Face.of(1, 3), Face.of(1, 2, 3)
    for name in ("theorem2", "splitting"):
        report = verify_instance(name, figure1_c, e, F)
        assert report.ok and report.trials == 1, report.failures
    assert verify_instance("prop24", figure1_c, e).ok
    assert verify_instance("strand", figure1_c).ok
    assert verify_instance("theorem1", example1_ideal, F=Face.of(3, 4, 5)).ok
    assert verify_instance("component", example1_ideal).ok
    assert verify_instance("stable", stable5).ok
    assert verify_instance("prop44", dunce_hat).ok
    assert not verify_instance("stable", ideal(5, 12, 23, 34, 45, 15)).ok
    log.info("✓ test_verify_instance passed")


def test_verify_instance_preconditions(figure1_c, example1_ideal):
    with pytest.raises(PreconditionError, match="needs an ideal"):
        verify_instance("component", figure1_c)
    with pytest.raises(PreconditionError, match="needs a clutter"):
        verify_instance("splitting", example1_ideal)
    with pytest.raises(PreconditionError, match="needs the removal"):
        verify_instance("theorem2", figure1_c, e=Face.of(1, 3))
    with pytest.raises(PreconditionError, match="needs the monomial"):
        verify_instance("theorem1", example1_ideal)
    with pytest.raises(PreconditionError, match="needs a complex"):
        verify_instance("prop44", figure1_c)


def relabeling_classes(n, d):
    """One d-uniform clutter on [n] from each class under relabeling of the vertices."""
    candidates = sort_masks(subsets_of_size(ground_mask(n), d))
    index = {c: k for k, c in enumerate(candidates)}
    images = [
        [index[sum(1 << p[v - 1] for v in vertices_of(c))] for c in candidates]
        for p in permutations(range(n))
    ]
    seen = set()
    for chosen in range(1 << len(candidates)):
        if chosen in seen:
            continue
        members = [k for k in range(len(candidates)) if chosen >> k & 1]
        seen.update(sum(1 << image[k] for k in members) for image in images)
        yield UniformClutter(n, d, frozenset(candidates[k] for k in members))


def check_every_removal(n, d):
    # relabeling vertices permutes both sides of the removal identity alike
    report = VerificationReport("theorem2")
    classes = 0
    for C in relabeling_classes(n, d):
        classes += 1
        for e, F in removal_candidates(C):
            check_theorem2(report, C, e, F)
    log.info(f"n={n} d={d}: {classes} classes, {report.trials} removals")
    return report


@pytest.mark.parametrize("d", [2, 3])
def test_every_removal_on_four_vertices(d):
    log.info(f"=== Starting test_every_removal_on_four_vertices[{d}] ===")
    report = check_every_removal(4, d)
    assert report.trials > 0
    assert report.ok, report.failures
    log.info(f"✓ test_every_removal_on_four_vertices[{d}] passed")


@slow
@pytest.mark.parametrize("n,d", [(5, 2), (5, 3), (6, 2)])
def test_every_removal_exhaustive(n, d):
    log.info(f"=== Starting test_every_removal_exhaustive[{n}-{d}] ===")
    report = check_every_removal(n, d)
    assert report.trials > 0
    assert report.ok, report.failures[:5]
    log.info(f"✓ test_every_removal_exhaustive[{n}-{d}] passed")


# strand: 70 sequences, 50 from C_{n,d} and 20 from random clutters
@slow
@pytest.mark.parametrize(
    "name,trials,n",
    [
        ("theorem2", 200, 7),
        ("splitting", 200, 7),
        ("strand", 70, 7),
        ("prop24", 100, 7),
        ("component", 50, 7),
        ("stable", 50, 8),
        ("theorem1", 100, 7),
    ],
)
def test_random_verifier_full_sweep(name, trials, n):
    log.info(f"=== Starting test_random_verifier_full_sweep[{name}] ===")
    report = run_random(name, seed=2024, trials=trials, n=n)
    log.info(f"{name}: {report.trials} trials")
    assert report.trials == trials
    assert report.ok, report.failures[:5]
    log.info(f"✓ test_random_verifier_full_sweep[{name}] passed")
