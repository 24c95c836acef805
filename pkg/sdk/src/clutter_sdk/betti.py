"""Multigraded Betti tables from Hochster's formula, and what they determine."""

import dataclasses
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from .config import DEFAULT_CONFIG, EngineConfig
from .errors import GuardExceeded, PreconditionError
from .faces import Face, as_mask, is_subset, vertices_of
from .homology.base import QQ, ZZ, FieldSpec, backend_for, prime_factors
from .homology.chains import boundary, reduced_ranks
from .ideals import (
    SquarefreeMonomialIdeal,
    colon_ideal,
    component_ideal,
    face_levels,
    ideal_sum,
)

logger = logging.getLogger("clutter_sdk.betti")

# Square-free multidegrees are vertex subsets
MultiDegree = Face

Cell = Tuple[int, int]  # (homological index i, mask of W)


@dataclass
class BettiTable:
    """Multigraded Betti numbers β_{i,W}(I) of a square-free monomial ideal.

    ``entries`` keeps only nonzero counts, keyed by (i, mask of W). Indices
    refer to the ideal I; β_{i,W}(I) = β_{i+1,W}(S/I), and ``pd``,
    ``t_vector`` and ``r_vector`` are reported for S/I.
    """

    n: int
    field: str
    entries: Dict[Cell, int] = dataclasses.field(default_factory=dict)

    def entry(self, i: int, W) -> int:
        return self.entries.get((i, as_mask(W)), 0)

    @property
    def is_empty(self) -> bool:
        return not self.entries

    @property
    def max_index(self) -> int:
        """Largest i with β_i(I) != 0, or -1 for the zero ideal."""
        return max((i for i, _ in self.entries), default=-1)

    def graded(self) -> Dict[Tuple[int, int], int]:
        out: Dict[Tuple[int, int], int] = {}
        for (i, w), count in self.entries.items():
            key = (i, w.bit_count())
            out[key] = out.get(key, 0) + count
        return dict(sorted(out.items()))

    @property
    def reg(self) -> Optional[int]:
        """reg(I) = max{j - i : β_{i,j}(I) != 0}; None for the zero ideal."""
        if not self.entries:
            return None
        return max(w.bit_count() - i for i, w in self.entries)

    @property
    def pd(self) -> int:
        """Projective dimension of S/I."""
        return self.max_index + 1

    def t_vector(self) -> List[int]:
        """t_i = max{j : β_{i,j}(S/I) != 0} for 0 <= i <= pd(S/I)."""
        out = [0] + [-1] * (self.pd)
        for (i, w) in self.entries:
            out[i + 1] = max(out[i + 1], w.bit_count())
        return out

    def r_vector(self) -> List[int]:
        return [t - i for i, t in enumerate(self.t_vector())]

    def linear_strand(self, d: int) -> List[int]:
        """β_{i,i+d}(I) for i = 0..max_index (trailing zeros trimmed)."""
        graded = self.graded()
        strand = [graded.get((i, i + d), 0) for i in range(self.max_index + 1)]
        while strand and strand[-1] == 0:
            strand.pop()
        return strand

    def nonlinear(self, d: int) -> Dict[Cell, int]:
        """Entries off the d-linear strand (|W| - i > d)."""
        return {k: v for k, v in self.entries.items() if k[1].bit_count() - k[0] > d}

    def plus(self, delta: Dict[Cell, int]) -> "BettiTable":
        merged = dict(self.entries)
        for key, value in delta.items():
            merged[key] = merged.get(key, 0) + value
        return BettiTable(self.n, self.field, {k: v for k, v in merged.items() if v})

    def differences(self, other: "BettiTable") -> List[Tuple[int, Face, int, int]]:
        """Cells where the tables disagree, as (i, W, self count, other count)."""
        keys = set(self.entries) | set(other.entries)
        out = []
        for i, w in sorted(keys, key=lambda k: (k[0], vertices_of(k[1]))):
            a, b = self.entries.get((i, w), 0), other.entries.get((i, w), 0)
            if a != b:
                out.append((i, Face(w), a, b))
        return out

    def triples(self) -> List[Tuple[int, Tuple[int, ...], int]]:
        """(i, W, count) triples in (i, lexicographic W) order."""
        keys = sorted(self.entries, key=lambda k: (k[0], vertices_of(k[1])))
        return [(i, vertices_of(w), self.entries[(i, w)]) for i, w in keys]


def _require_field(field: FieldSpec) -> None:
    if not field.is_field:
        raise PreconditionError("Betti numbers need field coefficients (q or gf:p)")


def hochster_betti(I: SquarefreeMonomialIdeal, i: int, W, field: FieldSpec = QQ) -> int:
    """β_{i,W}(I) = dim H̃_{|W|-i-2}(Δ_W), Δ the Stanley–Reisner complex of I."""
    _require_field(field)
    if I.is_unit:
        raise PreconditionError("the unit ideal has no Stanley-Reisner complex")
    w = as_mask(W)
    k = w.bit_count() - i - 2
    levels = face_levels(I.n, I.generators, w)
    return reduced_ranks(levels, [k], field)[k]


def _is_generator_union(generators: Iterable[int], w: int) -> bool:
    covered = 0
    for g in generators:
        if is_subset(g, w):
            covered |= g
    return covered == w


def relevant_subsets(I: SquarefreeMonomialIdeal) -> List[int]:
    """W ⊆ [n] that can carry Betti numbers.

    Δ_W is a cone, hence acyclic, unless W is a union of generators inside W;
    this also skips every W with |W| < d.
    """
    return [w for w in range(1, 1 << I.n) if _is_generator_union(I.generators, w)]


def _cells(n: int, generators: frozenset, masks: List[int], d_min: int, field: FieldSpec):
    out = []
    for w in masks:
        size = w.bit_count()
        levels = face_levels(n, generators, w)
        ranks = reduced_ranks(levels, range(d_min - 2, size - 1), field)
        out.extend(((size - k - 2, w), r) for k, r in ranks.items() if r)
    return out


def betti_table(
    I: SquarefreeMonomialIdeal, field: FieldSpec = QQ, config: EngineConfig = DEFAULT_CONFIG
) -> BettiTable:
    """Full multigraded table by Hochster's formula over every relevant W.

    Raises:
        GuardExceeded: If n is above ``config.max_n``
        PreconditionError: For the unit ideal or integer coefficients
    """
    _require_field(field)
    if I.n > config.max_n:
        raise GuardExceeded(f"Betti table on n={I.n} exceeds --max-n {config.max_n}")
    if I.is_unit:
        raise PreconditionError("the unit ideal has no Stanley-Reisner complex")
    if I.is_zero:
        return BettiTable(I.n, str(field))

    masks = relevant_subsets(I)
    d_min = I.min_degree
    if config.workers > 1 and len(masks) > 256:
        chunks = [masks[k :: config.workers] for k in range(config.workers)]
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            parts = pool.map(
                _cells,
                [I.n] * len(chunks),
                [I.generators] * len(chunks),
                chunks,
                [d_min] * len(chunks),
                [field] * len(chunks),
            )
            cells = [cell for part in parts for cell in part]
    else:
        cells = _cells(I.n, I.generators, masks, d_min, field)

    table = BettiTable(I.n, str(field), dict(cells))
    logger.debug(
        f"Betti table of {len(I)} generators on [{I.n}] over {field}: "
        f"{len(masks)} subsets, {len(table.entries)} nonzero cells"
    )
    return table


def _equigenerated_degree(I: SquarefreeMonomialIdeal) -> int:
    if I.is_zero or not I.is_equigenerated:
        raise PreconditionError(f"{I} is not a nonzero equigenerated ideal")
    return I.degree()


def has_linear_resolution(
    I: SquarefreeMonomialIdeal, field: FieldSpec = QQ, config: EngineConfig = DEFAULT_CONFIG
) -> bool:
    """Whether an ideal generated in degree d has a d-linear resolution.

    Raises:
        PreconditionError: If I is zero or not equigenerated
    """
    d = _equigenerated_degree(I)
    table = betti_table(I, field, config)
    return all(w.bit_count() - i == d for i, w in table.entries)


def regularity_by_components(
    I: SquarefreeMonomialIdeal, field: FieldSpec = QQ, config: EngineConfig = DEFAULT_CONFIG
) -> int:
    """reg(I) = min{t >= d : I_[t] has a t-linear resolution}, d the top generator degree."""
    if I.is_zero or I.is_unit:
        raise PreconditionError("regularity by components needs a nonzero proper ideal")
    for t in range(I.max_degree, I.n + 1):
        component, _ = component_ideal(I, t)
        if has_linear_resolution(component, field, config):
            logger.debug(f"I_[{t}] is {t}-linear: reg = {t}")
            return t
        logger.debug(f"I_[{t}] is not {t}-linear")
    # I_[n] is principal, so the loop always returns
    raise AssertionError("no linear component found")


@dataclass
class FieldCertificate:
    """Outcome of the integral torsion scan over all induced subcomplexes.

    ``witnesses`` lists (W, dimension, torsion coefficients) for every torsion
    group found.
    """

    certified: bool
    torsion_primes: List[int]
    witnesses: List[Tuple[Face, int, List[int]]]

    def as_dict(self) -> dict:
        return {
            "certified": self.certified,
            "torsion_primes": self.torsion_primes,
            "witnesses": [[list(w.vertices), k, t] for w, k, t in self.witnesses],
        }


def field_independence_certificate(
    I: SquarefreeMonomialIdeal, config: EngineConfig = DEFAULT_CONFIG
) -> FieldCertificate:
    """Certify that the Betti numbers of I do not depend on the field.

    Scans H̃(Δ_W; ℤ) for every W; torsion-free everywhere means the table is
    the same over every field. Otherwise the primes dividing some torsion
    coefficient are reported.

    Raises:
        GuardExceeded: If n is above ``config.max_n``
    """
    if I.n > config.max_n:
        raise GuardExceeded(f"certificate on n={I.n} exceeds --max-n {config.max_n}")
    if I.is_zero:
        return FieldCertificate(True, [], [])
    if I.is_unit:
        raise PreconditionError("the unit ideal has no Stanley-Reisner complex")

    snf = backend_for(ZZ)
    primes = set()
    witnesses = []
    for w in relevant_subsets(I):
        levels = face_levels(I.n, I.generators, w)
        for k in range(max(0, I.min_degree - 2), w.bit_count() - 1):
            rows, cols = levels.get(k, []), levels.get(k + 1, [])
            if not rows or not cols:
                continue
            torsion = [f for f in snf.invariant_factors(boundary(rows, cols)) if f > 1]
            if torsion:
                witnesses.append((Face(w), k, torsion))
                for f in torsion:
                    primes.update(prime_factors(f))
    certificate = FieldCertificate(not witnesses, sorted(primes), witnesses)
    verdict = "certified" if certificate.certified else f"torsion primes {sorted(primes)}"
    logger.info(f"field certificate for {len(I)} generators on [{I.n}]: {verdict}")
    return certificate


@dataclass
class StabilityVerdict:
    """Comparison of β(I) and β(I + (x_F)) around the bound |W| = d + i + r."""

    r: int
    violations: List[Tuple[int, Face]]
    boundary_differences: List[Tuple[int, Face]]

    @property
    def ok(self) -> bool:
        return not self.violations


def theorem1_stability_check(
    I: SquarefreeMonomialIdeal,
    F,
    field: FieldSpec = QQ,
    config: EngineConfig = DEFAULT_CONFIG,
) -> StabilityVerdict:
    """Check β_{i,W}(I + (x_F)) = β_{i,W}(I) whenever |W| > d + i + r, r = reg(I : x_F).

    Raises:
        PreconditionError: If I is zero, is not generated in degree |F|, or x_F ∈ I
    """
    f = as_mask(F)
    d = f.bit_count()
    if I.is_zero:
        raise PreconditionError("the stability check needs a nonzero ideal")
    if any(g.bit_count() != d for g in I.generators):
        raise PreconditionError(f"{I} is not generated in degree {d}")
    if I.contains(f):
        raise PreconditionError(f"x_{Face(f)} already lies in the ideal")

    colon = colon_ideal(I, f)
    r = betti_table(colon, field, config).reg
    J = ideal_sum(I, SquarefreeMonomialIdeal.principal(I.n, f))
    before = betti_table(I, field, config)
    after = betti_table(J, field, config)

    violations, boundary_differences = [], []
    for i, W, _, _ in before.differences(after):
        if len(W) > d + i + r:
            violations.append((i, W))
        elif len(W) == d + i + r:
            boundary_differences.append((i, W))
    logger.debug(
        f"stability check for x_{Face(f)}: r={r}, {len(violations)} violations, "
        f"{len(boundary_differences)} differences on the bound"
    )
    return StabilityVerdict(r, violations, boundary_differences)

