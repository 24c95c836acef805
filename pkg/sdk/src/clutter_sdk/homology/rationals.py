"""Rank over ℚ by fraction-free (Bareiss) elimination on Python integers."""

import numpy as np

from .base import RankBackend


class RationalRank(RankBackend):
    """Exact rank over ℚ.

    Every intermediate entry is a minor of the input, so each division by
    the previous pivot is exact and no fractions appear.
    """

    def rank(self, matrix: np.ndarray) -> int:
        rows, cols = matrix.shape
        if rows == 0 or cols == 0:
            return 0
        a = np.array(matrix, dtype=object)
        r = 0
        prev = 1
        for c in range(cols):
            if r == rows:
                break
            nz = np.flatnonzero(a[r:, c] != 0)
            if len(nz) == 0:
                continue
            pivot_row = r + int(nz[0])
            if pivot_row != r:
                a[[r, pivot_row], :] = a[[pivot_row, r], :]
            pivot = a[r, c]
            if r + 1 < rows and c + 1 < cols:
                a[r + 1 :, c + 1 :] = (
                    pivot * a[r + 1 :, c + 1 :] - np.outer(a[r + 1 :, c], a[r, c + 1 :])
                ) // prev
            a[r + 1 :, c] = 0
            prev = pivot
            r += 1
        return r
