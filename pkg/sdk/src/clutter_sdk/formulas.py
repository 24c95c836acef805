"""Closed-form Betti predictions for simplicial removals and their homological checks."""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Tuple

from .betti import BettiTable, Cell, betti_table, field_independence_certificate, has_linear_resolution
from .clutter import (
    UniformClutter,
    circuit_ideal_of_complement,
    clique_complex,
    closed_neighborhood,
    clutter_of_complex,
    clutter_of_ideal,
    is_simplicial,
)
from .complexes import SimplicialComplex, boundary_complex, face_deletion, join, simplex
from .config import DEFAULT_CONFIG, EngineConfig
from .errors import PreconditionError
from .faces import Face, as_mask, ground_mask, subsets_of_size, vertices_of
from .homology.base import GF2, GF3, QQ, ZZ, FieldSpec
from .homology.chains import homology_profile
from .homology.collapse import free_faces
from .ideals import SquarefreeMonomialIdeal, colon_ideal, ideal_intersection, ideal_sum
from .reduction import ChordalityMode, RemovalSequence, StepRecord, chordality_search, replay_removal_sequence
from .search import SearchOutcome

logger = logging.getLogger("clutter_sdk.formulas")


def _check_removal(I: SquarefreeMonomialIdeal, e, F) -> Tuple[int, int, UniformClutter]:
    """Validate a single removal (e, F) against the clutter C with I = I(C̄)."""
    e, F = as_mask(e), as_mask(F)
    d = F.bit_count()
    C = clutter_of_ideal(I, d)
    if e.bit_count() != d - 1 or e & ~F:
        raise PreconditionError(f"{Face(e)} is not a (d-1)-subset of {Face(F)}")
    if F not in C.masks:
        raise PreconditionError(f"{Face(F)} is not a circuit: x_F already lies in {I}")
    if not is_simplicial(C, e):
        raise PreconditionError(f"{Face(e)} is not simplicial over the clutter of {I}")
    return e, F, C


def _colon_variables(I: SquarefreeMonomialIdeal, F: int) -> List[int]:
    """Vertices j (0-based) with x_j ∈ I : x_F."""
    return [g.bit_length() - 1 for g in colon_ideal(I, F).generators if g.bit_count() == 1]


def predicted_delta(I: SquarefreeMonomialIdeal, e, F) -> Dict[Cell, int]:
    """β(I + (x_F)) - β(I) for a circuit F removed through the simplicial set e.

    The difference is +1 at every (i, W) with |W| = d + i, F ⊆ W and each
    variable of W ∖ F lying in I : x_F, and zero elsewhere.

    Raises:
        PreconditionError: If e is not simplicial, F does not contain e, or
            F is not a circuit of the clutter of I
    """
    _, f, _ = _check_removal(I, e, F)
    variables = _colon_variables(I, f)
    delta: Dict[Cell, int] = {}
    for k in range(len(variables) + 1):
        for chosen in combinations(variables, k):
            w = f
            for j in chosen:
                w |= 1 << j
            delta[(k, w)] = 1
    return delta


@dataclass
class SplittingVerdict:
    """Which parts of the splitting of I + (x_F) hold, keyed by part name.

    Parts: ``colon`` (I : x_F is generated by the x_i with x_i x_e ∈ I),
    ``intersection`` (I ∩ (x_F) = x_F (I : x_F)), ``betti`` (the Betti
    splitting equation at every cell) and ``splitting-function``.
    """

    failures: Dict[str, List[str]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(self.failures.values())

    @property
    def failed_parts(self) -> List[str]:
        return [part for part, found in self.failures.items() if found]

    def as_dict(self) -> dict:
        return {"ok": self.ok, "failures": self.failures}


def _splitting_function_failures(e: int, F: int, intersection: SquarefreeMonomialIdeal, I: SquarefreeMonomialIdeal) -> List[str]:
    """Check φ(x_i x_F) = x_i x_e and ψ = x_F as a splitting function pair."""
    failures = []
    gens = sorted(intersection.generators)
    phi = {}
    for w in gens:
        extra = w & ~F
        phi[w] = extra | e
        if phi[w] not in I.generators:
            failures.append(f"φ({Face(w)}) = {Face(phi[w])} is not a generator of I")
        if phi[w] | F != w:
            failures.append(f"lcm(φ, ψ) of {Face(w)} differs from it")
    for k in range(1, len(gens) + 1):
        for subset in combinations(gens, k):
            lcm = lcm_phi = 0
            for w in subset:
                lcm |= w
                lcm_phi |= phi[w]
            if lcm_phi == lcm or lcm_phi & ~lcm:
                failures.append(f"lcm φ of {[str(Face(w)) for w in subset]} does not strictly divide {Face(lcm)}")
            if F == lcm or F & ~lcm:
                failures.append(f"lcm ψ of {[str(Face(w)) for w in subset]} does not strictly divide {Face(lcm)}")
    return failures


def splitting_check(
    I: SquarefreeMonomialIdeal,
    e,
    F,
    field: FieldSpec = QQ,
    config: EngineConfig = DEFAULT_CONFIG,
) -> SplittingVerdict:
    """Verify that J = I + (x_F) is a Betti splitting of I and (x_F).

    Raises:
        PreconditionError: Under the same conditions as predicted_delta
    """
    e, f, _ = _check_removal(I, e, F)
    K = SquarefreeMonomialIdeal.principal(I.n, f)
    verdict = SplittingVerdict({"colon": [], "intersection": [], "betti": [], "splitting-function": []})

    colon = colon_ideal(I, f)
    expected = frozenset(
        1 << v for v in range(I.n) if not e >> v & 1 and (e | 1 << v) in I.generators
    )
    if colon.generators != expected:
        verdict.failures["colon"].append(
            f"I : x_F = {colon}, expected {SquarefreeMonomialIdeal(I.n, expected)}"
        )

    intersection = ideal_intersection(I, K)
    scaled = frozenset(g | f for g in colon.generators)
    if intersection.generators != scaled:
        verdict.failures["intersection"].append(
            f"I ∩ (x_F) = {intersection}, expected {SquarefreeMonomialIdeal(I.n, scaled)}"
        )

    J = ideal_sum(I, K)
    tJ, tI, tK, tX = (betti_table(X, field, config) for X in (J, I, K, intersection))
    cells = set(tJ.entries) | set(tI.entries) | set(tK.entries)
    cells |= {(i + 1, w) for i, w in tX.entries}
    for i, w in sorted(cells, key=lambda c: (c[0], vertices_of(c[1]))):
        lhs = tJ.entries.get((i, w), 0)
        rhs = tI.entries.get((i, w), 0) + tK.entries.get((i, w), 0) + tX.entries.get((i - 1, w), 0)
        if lhs != rhs:
            verdict.failures["betti"].append(f"β_{i},{Face(w)}: {lhs} != {rhs}")

    verdict.failures["splitting-function"] = _splitting_function_failures(e, f, intersection, I)
    logger.debug(f"splitting of {I} + (x_{Face(f)}) over {field}: failed parts {verdict.failed_parts}")
    return verdict


@dataclass
class StrandPrediction:
    """Predicted linear strand β_{i,i+d} of the final ideal and pd of its quotient."""

    strand: List[int]
    pd: int
    records: List[StepRecord]

    def as_dict(self) -> dict:
        return {
            "strand": self.strand,
            "pd": self.pd,
            "steps": [record.as_dict() for record in self.records],
        }


def predicted_linear_strand(seq: RemovalSequence, base_table: BettiTable) -> StrandPrediction:
    """Linear strand and pd of S/J after ``seq``, from the base table and s_k, t_k.

    β_{i,i+d}(J) = β_{i,i+d}(I) + Σ_k Σ_{j<|A_k|} C(t_k + s_k + j, i) and
    pd(S/J) = max(pd(S/I), max_k t_k + s_k + |A_k|).

    Raises:
        RemovalError: If the sequence does not replay
    """
    d = seq.base.d
    records = replay_removal_sequence(seq).records
    strand = list(base_table.linear_strand(d))
    pd = base_table.pd
    for record in records:
        size = len(record.circuits)
        for j in range(size):
            top = record.t + record.s + j
            if len(strand) <= top:
                strand.extend([0] * (top + 1 - len(strand)))
            for i in range(top + 1):
                strand[i] += comb(top, i)
        pd = max(pd, record.t + record.s + size)
    while strand and strand[-1] == 0:
        strand.pop()
    return StrandPrediction(strand, pd, records)


@dataclass
class Prop24Verdict:
    """Homology comparisons of Δ, Δ* (e deleted), Δ′ (F deleted) and ∂e * ⟨N[e] ∖ e⟩.

    Each failure is (part, dimension, left rank, right rank).
    """

    d: int
    failures: List[Tuple[str, int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {"ok": self.ok, "failures": [list(f) for f in self.failures]}


def proposition24_check(
    C: UniformClutter,
    e,
    F=None,
    field: FieldSpec = QQ,
    config: EngineConfig = DEFAULT_CONFIG,
) -> Prop24Verdict:
    """Check the homology relations between Δ(C) and its deletions at e and F.

    With F omitted, Δ′ = Δ.

    Raises:
        PreconditionError: If d < 2, e is not simplicial, or F is not e plus
            a vertex of N[e]
    """
    if C.d < 2:
        raise PreconditionError("the e-deletion relations need d >= 2")
    e = as_mask(e)
    if e.bit_count() != C.d - 1 or not is_simplicial(C, e):
        raise PreconditionError(f"{Face(e)} is not a simplicial (d-1)-set")
    N = closed_neighborhood(C, e).mask
    if F is not None:
        F = as_mask(F)
        if F not in C.masks or e & ~F:
            raise PreconditionError(f"{Face(F)} is not e plus a vertex of N[e]")

    delta = clique_complex(C, config)
    star = face_deletion(delta, e)
    prime = face_deletion(delta, F) if F is not None else delta
    link = join(boundary_complex(C.n, e), simplex(C.n, N & ~e))
    h = {
        name: homology_profile(D, field).ranks
        for name, D in (("delta", delta), ("star", star), ("prime", prime), ("join", link))
    }
    top = max(delta.dim, 0) + 1
    d = C.d
    verdict = Prop24Verdict(d)

    def rank(name: str, i: int) -> int:
        return h[name].get(i, 0)

    for i in range(d - 1, top + 1):
        if rank("delta", i) != rank("star", i):
            verdict.failures.append(("a", i, rank("delta", i), rank("star", i)))
    for i in range(-1, top + 1):
        if i != d - 2 and rank("delta", i) != rank("prime", i):
            verdict.failures.append(("b", i, rank("delta", i), rank("prime", i)))
    alternating = (
        rank("star", d - 2) - rank("delta", d - 2) + rank("join", d - 3) - rank("star", d - 3)
    )
    if alternating != 0:
        verdict.failures.append(("c", d - 2, alternating, 0))
    logger.debug(f"e={Face(e)}: {len(verdict.failures)} homology mismatches over {field}")
    return verdict


@dataclass
class Prop44Report:
    """Hypotheses and conclusions for a pure complex D and its clutter C_D.

    Conclusions are only evaluated when every hypothesis holds; contractibility
    is only tested through trivial integral homology.
    """

    d: int
    acyclic: bool
    free_faces: List[Face]
    extra_cliques: List[Face]
    chordality: Optional[str] = None
    linear: Dict[str, bool] = field(default_factory=dict)
    certified: Optional[bool] = None

    @property
    def hypotheses_met(self) -> bool:
        return self.acyclic and not self.free_faces and not self.extra_cliques

    @property
    def conclusions_hold(self) -> bool:
        return (
            self.hypotheses_met
            and self.chordality == SearchOutcome.REFUTED.value
            and bool(self.linear)
            and all(self.linear.values())
            and bool(self.certified)
        )

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "hypotheses": {
                "integrally_acyclic": self.acyclic,
                "free_faces": [list(f.vertices) for f in self.free_faces],
                "extra_cliques": [list(f.vertices) for f in self.extra_cliques],
                "met": self.hypotheses_met,
            },
            "conclusions": {
                "chordality": self.chordality,
                "linear": self.linear,
                "certified": self.certified,
                "hold": self.conclusions_hold,
            },
        }


def proposition44_check(D: SimplicialComplex, config: EngineConfig = DEFAULT_CONFIG) -> Prop44Report:
    """Check a pure complex against the non-chordal yet linear criterion.

    Raises:
        PreconditionError: If D is not pure of dimension >= 0
    """
    C = clutter_of_complex(D)
    d = C.d
    profile = homology_profile(D, ZZ)
    extra = [
        Face(g)
        for g in subsets_of_size(ground_mask(D.n), d + 1)
        if all(s in C.masks for s in subsets_of_size(g, d))
    ]
    report = Prop44Report(d, profile.is_acyclic, sorted(free_faces(D)), sorted(extra))
    if not report.hypotheses_met:
        logger.info(f"hypotheses not met for {len(D.facets)} facets: acyclic={report.acyclic}, "
                    f"{len(report.free_faces)} free faces, {len(extra)} extra cliques")
        return report

    report.chordality = chordality_search(C, ChordalityMode.DELETION, config).outcome.value
    I = circuit_ideal_of_complement(C)
    for spec in (QQ, GF2, GF3):
        report.linear[str(spec)] = has_linear_resolution(I, spec, config)
    report.certified = field_independence_certificate(I, config).certified
    logger.info(f"conclusions for {len(D.facets)} facets: chordality {report.chordality}, "
                f"linear {report.linear}, certified {report.certified}")
    return report
