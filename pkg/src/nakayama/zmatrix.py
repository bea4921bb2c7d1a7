"""Exact integer linear algebra for Cartan matrices.

Everything runs on Python ints; matrices are sequences of rows.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .errors import NonSquare

Matrix = Sequence[Sequence[int]]


def _copy(M: Matrix) -> list[list[int]]:
    return [list(map(int, row)) for row in M]


def determinant(M: Matrix) -> int:
    """Bareiss fraction-free elimination."""
    A = _copy(M)
    n = len(A)
    if any(len(row) != n for row in A):
        raise NonSquare(f"{n} rows but row lengths {[len(r) for r in A]}")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is the Bareiss invariant
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def rank(M: Matrix) -> int:
    return len(smith_normal_form(M).invariant_factors)


def minor(M: Matrix, drop_row: int, drop_col: int) -> list[list[int]]:
    """Delete one row and one column (0-based positions)."""
    return [[x for j, x in enumerate(row) if j != drop_col]
            for i, row in enumerate(M) if i != drop_row]


@dataclass(frozen=True)
class SmithForm:
    invariant_factors: tuple[int, ...]
    free_rank: int

    @property
    def torsion(self) -> tuple[int, ...]:
        """Invariant factors different from 1: the torsion part of the cokernel."""
        return tuple(d for d in self.invariant_factors if d != 1)

    def cokernel(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion] + ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "0"


def smith_normal_form(M: Matrix) -> SmithForm:
    """Invariant factors d_1 | d_2 | ... of M and the free rank of Cok M.

    M is read as a map Z^cols -> Z^rows, so Cok M = Z^rows / image.
    """
    A = _copy(M)
    rows = len(A)
    cols = len(A[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if A[i][j] and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        done = True
        p = A[t][t]
        for i in range(t + 1, rows):
            q = A[i][t] // p
            if q:
                A[i] = [x - q * y for x, y in zip(A[i], A[t])]
            if A[i][t]:
                done = False
        for j in range(t + 1, cols):
            q = A[t][j] // p
            if q:
                for row in A:
                    row[j] -= q * row[t]
            if A[t][j]:
                done = False
        if not done:
            # a remainder smaller than the pivot survived; pick a new pivot
            continue
        bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                    if A[i][j] % p), None)
        if bad is not None:
            # fold the offending row into row t so the next pass shrinks the pivot
            A[t] = [x + y for x, y in zip(A[t], A[bad[0]])]
            continue
        diag.append(abs(p))
        t += 1
    # the elimination already yields a divisibility chain; normalise via gcd to be safe
    factors = _divisibility_chain(diag)
    return SmithForm(tuple(factors), rows - len(factors))


def _divisibility_chain(diag: list[int]) -> list[int]:
    d = list(diag)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            d[i], d[j] = g, d[i] * d[j] // g
    return d
