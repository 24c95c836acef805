"""Named verifiers comparing every closed-form prediction with the Hochster oracle."""

import logging
import random
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .betti import BettiTable, betti_table, regularity_by_components, theorem1_stability_check
from .clutter import (
    UniformClutter,
    circuit_ideal_of_complement,
    complete_clutter,
)
from .complexes import SimplicialComplex
from .config import DEFAULT_CONFIG, EngineConfig
from .errors import PreconditionError
from .faces import Face
from .formulas import (
    predicted_delta,
    predicted_linear_strand,
    proposition24_check,
    proposition44_check,
    splitting_check,
)
from .homology.base import GF2, QQ, FieldSpec
from .ideals import SquarefreeMonomialIdeal, component_ideal, ideal_sum, stanley_reisner_complex
from .reduction import ChordalityMode, RemovalSequence, chordality_search, replay_removal_sequence
from .sampling import (
    pick_size,
    random_clutter,
    random_colon_pair,
    random_ideal,
    random_removal,
    random_removal_sequence,
    random_stable_ideal,
)
from .search import SearchOutcome
from .stable import ek_betti, is_squarefree_stable, stable_to_sequence

logger = logging.getLogger("clutter_sdk.verify")


@dataclass
class VerificationReport:
    """Outcome of one verifier: how many instances were tried and what failed."""

    name: str
    trials: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        logger.warning(f"{self.name}: {message}")
        self.failures.append(message)

    def as_dict(self) -> dict:
        return {"name": self.name, "trials": self.trials, "ok": self.ok, "failures": self.failures}


def _dimension(rng: random.Random, d: Optional[int]) -> int:
    return d if d is not None else rng.choice((2, 3))


def _removal_label(C: UniformClutter, e: Face, F: Face) -> str:
    return f"n={C.n} d={C.d} |C|={len(C)} e={e} F={F}"


def _compare_stages(report: VerificationReport, label: str, d: int, before: BettiTable, after: BettiTable) -> None:
    """Nonlinear strands, reg and linearity must survive a simplicial removal."""
    if before.nonlinear(d) != after.nonlinear(d):
        report.fail(f"{label}: nonlinear strands differ")
    if before.is_empty or after.is_empty:
        return
    if after.reg != max(d, before.reg):
        report.fail(f"{label}: reg {after.reg} != max(d, {before.reg})")
    if (before.reg == d) != (after.reg == d):
        report.fail(f"{label}: linearity changed")

def check_theorem2(
    report: VerificationReport,
    C: UniformClutter,
    e: Face,
    F: Face,
    fields: Sequence[FieldSpec] = (QQ, GF2),
    config: EngineConfig = DEFAULT_CONFIG,
) -> None:
    """β(I + (x_F)) = β(I) + predicted delta, plus the stage comparison, for one removal."""
    I = circuit_ideal_of_complement(C)
    J = ideal_sum(I, SquarefreeMonomialIdeal.principal(I.n, F.mask))
    delta = predicted_delta(I, e, F)
    label = _removal_label(C, e, F)
    for spec in fields:
        before, after = betti_table(I, spec, config), betti_table(J, spec, config)
        diff = before.plus(delta).differences(after)
        if diff:
            report.fail(f"{label} over {spec}: first mismatch {diff[0]}")
        _compare_stages(report, f"{label} over {spec}", C.d, before, after)
    report.trials += 1


def check_splitting(
    report: VerificationReport,
    C: UniformClutter,
    e: Face,
    F: Face,
    field_spec: FieldSpec = QQ,
    config: EngineConfig = DEFAULT_CONFIG,
) -> None:
    verdict = splitting_check(circuit_ideal_of_complement(C), e, F, field_spec, config)
    if not verdict.ok:
        report.fail(f"{_removal_label(C, e, F)}: parts {verdict.failed_parts} failed")
    report.trials += 1


def check_prop24(
    report: VerificationReport,
    C: UniformClutter,
    e: Face,
    F: Optional[Face] = None,
    field_spec: FieldSpec = QQ,
    config: EngineConfig = DEFAULT_CONFIG,
) -> None:
    verdict = proposition24_check(C, e, F, field_spec, config)
    for part, dim, lhs, rhs in verdict.failures:
        report.fail(f"{_removal_label(C, e, F)}: part ({part}) in dimension {dim}: {lhs} != {rhs}")
    report.trials += 1


def check_strand(
    report: VerificationReport,
    seq: RemovalSequence,
    field_spec: FieldSpec = QQ,
    config: EngineConfig = DEFAULT_CONFIG,
) -> None:
    """Predicted strand and pd of the final ideal, and the comparison at every stage."""
    d = seq.base.d
    replay = replay_removal_sequence(seq)
    tables = [betti_table(circuit_ideal_of_complement(C), field_spec, config) for C in replay.stages]
    prediction = predicted_linear_strand(seq, tables[0])
    label = f"n={seq.base.n} d={d} base |C|={len(seq.base)} steps={len(seq)}"
    if prediction.strand != tables[-1].linear_strand(d):
        report.fail(f"{label}: strand {prediction.strand} != {tables[-1].linear_strand(d)}")
    if prediction.pd != tables[-1].pd:
        report.fail(f"{label}: pd {prediction.pd} != {tables[-1].pd}")
    for k in range(1, len(tables)):
        _compare_stages(report, f"{label} stage {k}", d, tables[k - 1], tables[k])
    report.trials += 1


def check_theorem1(
    report: VerificationReport,
    I: SquarefreeMonomialIdeal,
    F: Face,
    field_spec: FieldSpec = QQ,
    config: EngineConfig = DEFAULT_CONFIG,
) -> None:
    verdict = theorem1_stability_check(I, F, field_spec, config)
    if not verdict.ok:
        report.fail(f"{I} + x_{F}: r={verdict.r}, changed cells {verdict.violations[:3]}")
    report.trials += 1


def check_component(
    report: VerificationReport,
    I: SquarefreeMonomialIdeal,
    field_spec: FieldSpec = QQ,
    config: EngineConfig = DEFAULT_CONFIG,
) -> None:
    """reg by components, reg(I_[t]) = max(t, reg I), Δ_t and β above the t-strand."""
    table = betti_table(I, field_spec, config)
    reg = regularity_by_components(I, field_spec, config)
    if reg != table.reg:
        report.fail(f"{I}: reg by components {reg} != {table.reg}")
    for t in range(I.max_degree, I.n + 1):
        component, delta_t = component_ideal(I, t)
        if stanley_reisner_complex(component) != delta_t:
            report.fail(f"{I}: complex of I_[{t}] is not Δ ∪ skeleton")
        ctable = betti_table(component, field_spec, config)
        if ctable.reg != max(t, table.reg):
            report.fail(f"{I}: reg(I_[{t}]) = {ctable.reg} != max({t}, {table.reg})")
        for i, w in set(table.entries) | set(ctable.entries):
            if w.bit_count() > i + t and table.entries.get((i, w), 0) != ctable.entries.get((i, w), 0):
                report.fail(f"{I}: β_{i},{Face(w)} differs from I_[{t}]")
    report.trials += 1


def check_stable(
    report: VerificationReport,
    I: SquarefreeMonomialIdeal,
    field_spec: FieldSpec = QQ,
    config: EngineConfig = DEFAULT_CONFIG,
) -> None:
    """Sequence replay, and ek_betti = oracle strand = predicted strand."""
    report.trials += 1
    if not is_squarefree_stable(I):
        report.fail(f"{I}: not square-free stable")
        return
    d = I.degree()
    seq = stable_to_sequence(I)
    final = replay_removal_sequence(seq).final
    if circuit_ideal_of_complement(final) != I:
        report.fail(f"{I}: sequence ends at {final}")
    ek = ek_betti(I)
    oracle = betti_table(I, field_spec, config).linear_strand(d)
    predicted = predicted_linear_strand(seq, BettiTable(I.n, str(field_spec))).strand
    if not ek == oracle == predicted:
        report.fail(f"{I}: ek {ek}, oracle {oracle}, predicted {predicted}")


def verify_theorem2(
    rng: random.Random,
    trials: int,
    n: int = 7,
    d: Optional[int] = None,
    fields: Sequence[FieldSpec] = (QQ, GF2),
    config: EngineConfig = DEFAULT_CONFIG,
) -> VerificationReport:
    """β(I + (x_F)) = β(I) + predicted delta for random single removals."""
    report = VerificationReport("theorem2")
    for _ in range(trials):
        dd = _dimension(rng, d)
        C, e, F = random_removal(rng, pick_size(rng, dd, n), dd)
        check_theorem2(report, C, e, F, fields, config)
    return report


def verify_splitting(
    rng: random.Random,
    trials: int,
    n: int = 7,
    d: Optional[int] = None,
    field_spec: FieldSpec = QQ,
    config: EngineConfig = DEFAULT_CONFIG,
) -> VerificationReport:
    """Colon structure, intersection identity, Betti splitting and splitting function."""
    report = VerificationReport("splitting")
    for _ in range(trials):
        dd = _dimension(rng, d)
        C, e, F = random_removal(rng, pick_size(rng, dd, n), dd)
        check_splitting(report, C, e, F, field_spec, config)
    return report


def verify_prop24(
    rng: random.Random,
    trials: int,
    n: int = 7,
    d: Optional[int] = None,
    field_spec: FieldSpec = QQ,
    config: EngineConfig = DEFAULT_CONFIG,
) -> VerificationReport:
    """Homology relations of Δ, Δ*, Δ′ and the link join on random removals."""
    report = VerificationReport("prop24")
    for _ in range(trials):
        dd = _dimension(rng, d)
        C, e, F = random_removal(rng, pick_size(rng, dd, n), dd)
        check_prop24(report, C, e, F, field_spec, config)
    return report


def verify_strand(
    rng: random.Random,
    trials: int,
    n: int = 7,
    d: Optional[int] = None,
    field_spec: FieldSpec = QQ,
    config: EngineConfig = DEFAULT_CONFIG,
) -> VerificationReport:
    """Predicted linear strand and pd against the oracle, stage by stage.

    Five of every seven sequences start at C_{n,d}; the rest at a random clutter.
    """
    report = VerificationReport("strand")
    for trial in range(trials):
        dd = _dimension(rng, d)
        size = pick_size(rng, dd, n)
        base = complete_clutter(size, dd) if trial % 7 < 5 else random_clutter(rng, size, dd)
        check_strand(report, random_removal_sequence(rng, base), field_spec, config)
    return report


def verify_theorem1(
    rng: random.Random,
    trials: int,
    n: int = 7,
    d: Optional[int] = None,
    field_spec: FieldSpec = QQ,
    config: EngineConfig = DEFAULT_CONFIG,
) -> VerificationReport:
    """β_{i,W}(I + (x_F)) = β_{i,W}(I) whenever |W| > d + i + reg(I : x_F)."""
    report = VerificationReport("theorem1")
    for _ in range(trials):
        dd = _dimension(rng, d)
        I, F = random_colon_pair(rng, pick_size(rng, dd, n), dd)
        check_theorem1(report, I, F, field_spec, config)
    return report


def verify_component(
    rng: random.Random,
    trials: int,
    n: int = 7,
    d: Optional[int] = None,
    field_spec: FieldSpec = QQ,
    config: EngineConfig = DEFAULT_CONFIG,
) -> VerificationReport:
    """Component ideals of random non-equigenerated ideals.

    ``d`` bounds the generator degree of the random ideals (default 3).
    """
    report = VerificationReport("component")
    for _ in range(trials):
        size = rng.randint(3, max(n, 3))
        check_component(report, random_ideal(rng, size, d or 3), field_spec, config)
    return report


def verify_stable(
    rng: random.Random,
    trials: int,
    n: int = 8,
    d: Optional[int] = None,
    field_spec: FieldSpec = QQ,
    config: EngineConfig = DEFAULT_CONFIG,
) -> VerificationReport:
    """Random square-free stable ideals through the whole stable pipeline."""
    report = VerificationReport("stable")
    for _ in range(trials):
        dd = _dimension(rng, d)
        I = random_stable_ideal(rng, pick_size(rng, dd, n), dd, rng.randint(1, 3))
        check_stable(report, I, field_spec, config)
    return report


def verify_prop44(
    complexes: Iterable[Tuple[str, SimplicialComplex]], config: EngineConfig = DEFAULT_CONFIG
) -> VerificationReport:
    """Each named complex must meet the hypotheses and reach every conclusion."""
    report = VerificationReport("prop44")
    for name, D in complexes:
        result = proposition44_check(D, config)
        if not result.hypotheses_met:
            report.fail(f"{name}: hypotheses not met")
        elif not result.conclusions_hold:
            report.fail(f"{name}: conclusions fail: {result.as_dict()['conclusions']}")
        report.trials += 1
    return report


RandomVerifier = Callable[..., VerificationReport]

RANDOM_VERIFIERS: Dict[str, RandomVerifier] = {
    "theorem2": verify_theorem2,
    "splitting": verify_splitting,
    "prop24": verify_prop24,
    "strand": verify_strand,
    "theorem1": verify_theorem1,
    "component": verify_component,
    "stable": verify_stable,
}

REMOVAL_VERIFIERS = ("theorem2", "splitting", "prop24")

VERIFIER_NAMES = tuple(RANDOM_VERIFIERS) + ("prop44",)


def _fields_with_gf2(field_spec: FieldSpec) -> Tuple[FieldSpec, ...]:
    return (field_spec,) if field_spec == GF2 else (field_spec, GF2)


def run_random(
    name: str,
    seed: int,
    trials: int,
    n: int,
    d: Optional[int] = None,
    field_spec: FieldSpec = QQ,
    config: EngineConfig = DEFAULT_CONFIG,
) -> VerificationReport:
    """Run a named randomized verifier with a fixed seed.

    theorem2 checks ``field_spec`` together with GF(2).
    """
    verifier = RANDOM_VERIFIERS[name]
    rng = random.Random(seed)
    if name == "theorem2":
        report = verifier(rng, trials, n, d, _fields_with_gf2(field_spec), config)
    else:
        report = verifier(rng, trials, n, d, field_spec, config)
    logger.info(f"{name}: {report.trials} trials, {len(report.failures)} failures (seed {seed})")
    return report


def verify_instance(
    name: str,
    subject,
    e: Optional[Face] = None,
    F: Optional[Face] = None,
    sequence: Optional[RemovalSequence] = None,
    field_spec: FieldSpec = QQ,
    config: EngineConfig = DEFAULT_CONFIG,
) -> VerificationReport:
    """Run a named verifier on one given instance.

    Args:
        name: One of ``VERIFIER_NAMES``
        subject: A clutter (theorem2, splitting, prop24, strand), an ideal
            (theorem1, component, stable) or a complex (prop44)
        e: The simplicial (d-1)-set of a removal
        F: The removed circuit (theorem1: the monomial x_F added to I)
        sequence: Removal sequence for ``strand``; defaults to the chordality
            witness of the clutter

    Raises:
        PreconditionError: If the subject has the wrong kind or e/F is missing
    """
    report = VerificationReport(name)
    if name == "prop44":
        if not isinstance(subject, SimplicialComplex):
            raise PreconditionError("prop44 needs a complex")
        return verify_prop44([("input", subject)], config)

    if name in REMOVAL_VERIFIERS or name == "strand":
        if not isinstance(subject, UniformClutter):
            raise PreconditionError(f"{name} needs a clutter")
    elif not isinstance(subject, SquarefreeMonomialIdeal):
        raise PreconditionError(f"{name} needs an ideal")

    if name in REMOVAL_VERIFIERS:
        if e is None or (F is None and name != "prop24"):
            raise PreconditionError(f"{name} needs the removal (e, F)")
        if name == "theorem2":
            check_theorem2(report, subject, e, F, _fields_with_gf2(field_spec), config)
        elif name == "splitting":
            check_splitting(report, subject, e, F, field_spec, config)
        else:
            check_prop24(report, subject, e, F, field_spec, config)
    elif name == "strand":
        if sequence is None:
            result = chordality_search(subject, ChordalityMode.DELETION, config)
            if not result.found:
                raise PreconditionError(f"no removal sequence given and chordality search: {result.reason}")
            sequence = result.witness
        check_strand(report, sequence, field_spec, config)
    elif name == "theorem1":
        if F is None:
            raise PreconditionError("theorem1 needs the monomial x_F")
        check_theorem1(report, subject, F, field_spec, config)
    elif name == "component":
        check_component(report, subject, field_spec, config)
    elif name == "stable":
        check_stable(report, subject, field_spec, config)
    else:
        raise PreconditionError(f"unknown verifier {name!r}")
    logger.info(f"{name} on one instance: {len(report.failures)} failures")
    return report


def hunt_separating_clutter(
    rng: random.Random,
    n: int,
    d: int,
    trials: int,
    config: EngineConfig = DEFAULT_CONFIG,
) -> Optional[UniformClutter]:
    """Random clutter on which deletion chordality and the empty-subclutter test disagree."""
    for trial in range(trials):
        C = random_clutter(rng, n, d, rng.choice((0.3, 0.5, 0.7, 0.9)))
        deletion_mode = chordality_search(C, ChordalityMode.DELETION, config).outcome
        empty_mode = chordality_search(C, ChordalityMode.EMPTY_SUBCLUTTER, config).outcome
        if SearchOutcome.UNKNOWN in (deletion_mode, empty_mode):
            continue
        if deletion_mode is not empty_mode:
            logger.info(f"trial {trial}: {deletion_mode.value} vs {empty_mode.value} on {C}")
            return C
    logger.info(f"no separating clutter in {trials} trials")
    return None
