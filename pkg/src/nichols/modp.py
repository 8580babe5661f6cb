"""Dense row reduction modulo a small prime, vectorized with numpy.

Entries are kept as float64 integers in [0, p).  With p < 2^21 every
product of two entries is below 2^42, so a reduction step summing up to
2^11 such products stays below 2^53 and is exact in double precision;
longer sums are split into chunks.
"""

from __future__ import annotations

import numpy as np

DEFAULT_PRIME = 2097143
_CHUNK = 2048


def _matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    out = np.zeros((a.shape[0], b.shape[1]))
    for k in range(0, a.shape[1], _CHUNK):
        out = np.fmod(out + a[:, k:k + _CHUNK] @ b[k:k + _CHUNK], p)
    return out


class ModPEchelon:
    """Reduced row echelon form over GF(p), grown by batches of rows."""

    def __init__(self, width: int, p: int = DEFAULT_PRIME):
        if p >= 2**21:
            raise ValueError("prime too large for exact float64 reduction")
        self.p = p
        self.width = width
        self.rows = np.zeros((0, width))
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _inverse(self, a: int) -> int:
        return pow(int(a), self.p - 2, self.p)

    def add_rows(self, batch: np.ndarray) -> list[int]:
        """Insert rows in order; return the indices of those independent of all earlier ones."""
        p = self.p
        C = np.fmod(np.asarray(batch, dtype=float), p)
        C[C < 0] += p
        if self.pivots:
            C = np.fmod(C - _matmul_mod(C[:, self.pivots], self.rows, p) + p, p)
        accepted = []
        new_rows = []
        new_piv = []
        for i in range(C.shape[0]):
            row = C[i]
            nz = np.flatnonzero(row)
            if not nz.size:
                continue
            c = int(nz[0])
            row = np.fmod(row * self._inverse(row[c]), p)
            C[i] = row
            # clear column c in the remaining candidates and earlier new rows
            below = C[i + 1:, c]
            idx = np.flatnonzero(below)
            if idx.size:
                C[i + 1 + idx] = np.fmod(C[i + 1 + idx] - np.outer(below[idx], row) + p * p, p)
            for j, r in enumerate(new_rows):
                f = r[c]
                if f:
                    new_rows[j] = np.fmod(r - f * row + p * p, p)
            new_rows.append(row)
            new_piv.append(c)
            accepted.append(i)
        if new_rows:
            N = np.array(new_rows)
            if self.pivots:
                self.rows = np.fmod(self.rows - _matmul_mod(self.rows[:, new_piv], N, p) + p, p)
            self.rows = np.vstack([self.rows, N])
            self.pivots.extend(new_piv)
        return accepted


def rank_mod_p(rows, p: int = DEFAULT_PRIME) -> int:
    rows = np.asarray(rows, dtype=float)
    if rows.size == 0:
        return 0
    ech = ModPEchelon(rows.shape[1], p)
    ech.add_rows(rows)
    return ech.rank
