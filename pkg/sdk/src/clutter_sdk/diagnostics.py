"""Subadditivity and special-shape checks on the Betti diagram of S/I."""

import logging
from dataclasses import dataclass, field
from typing import List, Tuple

from .betti import BettiTable, betti_table
from .config import DEFAULT_CONFIG, EngineConfig
from .errors import PreconditionError
from .homology.base import QQ, FieldSpec
from .ideals import SquarefreeMonomialIdeal

logger = logging.getLogger("clutter_sdk.diagnostics")


@dataclass
class DiagnosticsReport:
    """Maximal shifts of S/I and the two shape verdicts.

    ``g`` is the smallest index with r_g = reg(S/I). Failures list the
    offending (i, j) pairs for subadditivity and the indices k with a wrong
    step r_k -> r_{k+1} for the special shape.
    """

    t_vector: List[int]
    r_vector: List[int]
    pd: int
    reg: int
    g: int
    subadditivity_failures: List[Tuple[int, int]] = field(default_factory=list)
    special_shape_failures: List[int] = field(default_factory=list)

    @property
    def subadditive(self) -> bool:
        return not self.subadditivity_failures

    @property
    def special_shape(self) -> bool:
        return not self.special_shape_failures

    def as_dict(self) -> dict:
        return {
            "t_vector": self.t_vector,
            "r_vector": self.r_vector,
            "pd": self.pd,
            "reg": self.reg,
            "g": self.g,
            "subadditive": self.subadditive,
            "subadditivity_failures": [list(p) for p in self.subadditivity_failures],
            "special_shape": self.special_shape,
            "special_shape_failures": self.special_shape_failures,
        }


def diagnose_table(table: BettiTable) -> DiagnosticsReport:
    if table.is_empty:
        raise PreconditionError("diagnostics need a nonzero ideal")
    t = table.t_vector()
    r = table.r_vector()
    pd = table.pd
    c = max(r)
    g = r.index(c)

    subadditivity = [
        (i, j)
        for i in range(1, pd + 1)
        for j in range(i, pd + 1 - i)
        if t[i + j] > t[i] + t[j]
    ]
    shape = [k for k in range(g) if r[k + 1] < r[k]]
    shape += [k for k in range(g, pd) if r[k + 1] > r[k]]
    return DiagnosticsReport(t, r, pd, c, g, subadditivity, shape)


def resolution_diagnostics(
    I: SquarefreeMonomialIdeal, field: FieldSpec = QQ, config: EngineConfig = DEFAULT_CONFIG
) -> DiagnosticsReport:
    """t/r vectors of S/I with the subadditivity and special-shape verdicts.

    Raises:
        PreconditionError: For the zero ideal
    """
    if I.is_zero:
        raise PreconditionError("diagnostics need a nonzero ideal")
    report = diagnose_table(betti_table(I, field, config))
    logger.debug(
        f"diagnostics for {I}: t={report.t_vector} r={report.r_vector} "
        f"subadditive={report.subadditive} special={report.special_shape}"
    )
    return report
