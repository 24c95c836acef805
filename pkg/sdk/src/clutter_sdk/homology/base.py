"""Coefficient specifications and the abstract rank backend."""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import List, Optional

import numpy as np

from ..errors import ParseError, PreconditionError

# Products of two residues must fit in int64
MAX_PRIME = 2**31


class FieldKind(Enum):
    RATIONALS = "q"
    PRIME = "gf"
    INTEGERS = "z"


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def prime_factors(value: int) -> List[int]:
    value = abs(value)
    out = []
    k = 2
    while k * k <= value:
        if value % k == 0:
            out.append(k)
            while value % k == 0:
                value //= k
        k += 1
    if value > 1:
        out.append(value)
    return out


@dataclass(frozen=True)
class FieldSpec:
    """Coefficients for homology: ℚ, GF(p) or ℤ."""

    kind: FieldKind
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind is FieldKind.PRIME:
            if self.p is None or not is_prime(self.p):
                raise PreconditionError(f"GF(p) needs a prime p, got {self.p}")
            if self.p >= MAX_PRIME:
                raise PreconditionError(f"p must be below {MAX_PRIME}")
        elif self.p is not None:
            raise PreconditionError(f"{self.kind.value} takes no characteristic")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(FieldKind.RATIONALS)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(FieldKind.PRIME, p)

    @classmethod
    def integers(cls) -> "FieldSpec":
        return cls(FieldKind.INTEGERS)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``q``, ``gf:p`` or ``z``."""
        value = text.strip().lower()
        if value == "q":
            return cls.rationals()
        if value == "z":
            return cls.integers()
        if value.startswith("gf:"):
            try:
                p = int(value[3:])
            except ValueError:
                raise ParseError(f"bad characteristic in field {text!r}")
            try:
                return cls.prime(p)
            except PreconditionError as e:
                raise ParseError(e.message)
        raise ParseError(f"unknown field {text!r} (expected q, gf:p or z)")

    @property
    def is_field(self) -> bool:
        return self.kind is not FieldKind.INTEGERS

    @property
    def characteristic(self) -> int:
        return self.p if self.kind is FieldKind.PRIME else 0

    def backend(self) -> "RankBackend":
        return backend_for(self)

    def __str__(self):
        if self.kind is FieldKind.PRIME:
            return f"gf:{self.p}"
        return self.kind.value


QQ = FieldSpec.rationals()
GF2 = FieldSpec.prime(2)
GF3 = FieldSpec.prime(3)
ZZ = FieldSpec.integers()


class RankBackend(ABC):
    """Exact rank of integer matrices over one coefficient ring.

    Subclasses implement the elimination; callers pass dense integer
    matrices with small entries (boundary matrices).
    """

    def __init__(self):
        self.logger = logging.getLogger(f"clutter_sdk.{self.__class__.__name__}")

    @abstractmethod
    def rank(self, matrix: np.ndarray) -> int:
        """Rank of ``matrix`` over the backend's coefficients.

        Args:
            matrix: 2-D integer array; empty shapes are allowed

        Returns:
            The rank, 0 for empty matrices
        """
        pass


@lru_cache(maxsize=None)
def backend_for(field: FieldSpec) -> RankBackend:
    from .integers import SmithNormalForm
    from .modular import PrimeFieldRank
    from .rationals import RationalRank

    if field.kind is FieldKind.RATIONALS:
        return RationalRank()
    if field.kind is FieldKind.PRIME:
        return PrimeFieldRank(field.p)
    return SmithNormalForm()
