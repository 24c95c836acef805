"""Integral Smith normal form, used for torsion detection."""

from math import gcd
from typing import List

import numpy as np

from .base import RankBackend


def _divisibility_chain(values: List[int]) -> List[int]:
    """Rewrite a diagonal so each entry divides the next (same group)."""
    d = sorted(values)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            d[i], d[j] = g, d[i] * d[j] // g
    return d


class SmithNormalForm(RankBackend):
    """Diagonalizes integer matrices by unimodular row and column operations."""

    def invariant_factors(self, matrix: np.ndarray) -> List[int]:
        """Nonzero diagonal of the Smith normal form.

        Args:
            matrix: 2-D integer array

        Returns:
            Positive invariant factors d_1 | d_2 | ..., one per unit of rank
        """
        rows, cols = matrix.shape
        if rows == 0 or cols == 0:
            return []
        a = np.array(matrix, dtype=object)
        diagonal = []
        t = 0
        while t < min(rows, cols):
            nz = np.argwhere(a[t:, t:] != 0)
            if len(nz) == 0:
                break
            # smallest magnitude pivot first
            sizes = [abs(a[t + i, t + j]) for i, j in nz]
            i, j = nz[int(np.argmin(sizes))]
            self._swap_into_place(a, t, t + int(i), t + int(j))
            while True:
                pivot = a[t, t]
                if t + 1 < rows:
                    q = a[t + 1 :, t] // pivot
                    a[t + 1 :, t:] -= np.outer(q, a[t, t:])
                if t + 1 < cols:
                    q = a[t, t + 1 :] // pivot
                    a[t:, t + 1 :] -= np.outer(a[t:, t], q)
                rest = [(t + 1 + k, t) for k in np.flatnonzero(a[t + 1 :, t] != 0)]
                rest += [(t, t + 1 + k) for k in np.flatnonzero(a[t, t + 1 :] != 0)]
                if not rest:
                    break
                r, c = min(rest, key=lambda rc: abs(a[rc[0], rc[1]]))
                self._swap_into_place(a, t, int(r), int(c))
            diagonal.append(abs(a[t, t]))
            t += 1
        factors = _divisibility_chain(diagonal)
        self.logger.debug(f"SNF {rows}x{cols}: invariant factors {factors}")
        return factors

    @staticmethod
    def _swap_into_place(a: np.ndarray, t: int, r: int, c: int) -> None:
        if r != t:
            a[[t, r], :] = a[[r, t], :]
        if c != t:
            a[:, [t, c]] = a[:, [c, t]]

    def rank(self, matrix: np.ndarray) -> int:
        return len(self.invariant_factors(matrix))
