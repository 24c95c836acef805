"""Rank over GF(p) by modular Gaussian elimination."""

import numpy as np

from .base import RankBackend


class PrimeFieldRank(RankBackend):
    """Exact rank over GF(p) using int64 arithmetic (p < 2^31)."""

    def __init__(self, p: int):
        super().__init__()
        self.p = p

    def rank(self, matrix: np.ndarray) -> int:
        p = self.p
        rows, cols = matrix.shape
        if rows == 0 or cols == 0:
            return 0
        a = np.array(matrix, dtype=np.int64) % p
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = np.flatnonzero(a[r:, c])
            if len(nz) == 0:
                continue
            pivot_row = r + int(nz[0])
            if pivot_row != r:
                a[[r, pivot_row], :] = a[[pivot_row, r], :]
            inv = pow(int(a[r, c]), -1, p)
            a[r, :] = (a[r, :] * inv) % p
            factors = a[r + 1 :, c].copy()
            a[r + 1 :, :] = (a[r + 1 :, :] - np.outer(factors, a[r, :])) % p
            r += 1
        return r
