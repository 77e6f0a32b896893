"""Integer matrices, Smith normal form and finite quotients of Z^k.

Matrices are plain lists of rows of Python ints, so entries never overflow.
Relations are rows: the quotient of interest is Z^k / rowspan(A).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce
from typing import Sequence

Matrix = list[list[int]]


class InfiniteQuotientError(ValueError):
    pass


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    if A and len(A[0]) != len(B):
        raise ValueError("inner dimensions differ")
    cols = len(B[0]) if B else 0
    return [[sum(a * B[k][j] for k, a in enumerate(row)) for j in range(cols)] for row in A]


def vecmat(v: Sequence[int], A: Sequence[Sequence[int]]) -> list[int]:
    cols = len(A[0]) if A else 0
    return [sum(v[i] * A[i][j] for i in range(len(A))) for j in range(cols)]


def _check(A: Sequence[Sequence[int]]) -> Matrix:
    rows = [list(map(int, r)) for r in A]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("matrix is not rectangular")
    return rows


@dataclass(frozen=True)
class SnfDecomposition:
    """``U @ A @ V == D`` with U, V unimodular and D diagonal, d1 | d2 | ..."""

    A: Matrix
    U: Matrix
    D: Matrix
    V: Matrix

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0))]


def smith_normal_form(A: Sequence[Sequence[int]]) -> SnfDecomposition:
    """Smith normal form by repeated pivoting on the smallest nonzero entry.

    The pivot is the entry of minimal absolute value in the remaining block,
    ties broken by row-major position, so output is deterministic.
    """
    A = _check(A)
    m = len(A)
    n = len(A[0]) if m else 0
    D = [r[:] for r in A]
    U = identity(m)
    V = identity(n)

    def swap_rows(i: int, j: int) -> None:
        if i != j:
            D[i], D[j] = D[j], D[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i: int, j: int) -> None:
        if i != j:
            for M in (D, V):
                for r in M:
                    r[i], r[j] = r[j], r[i]

    def add_row(dst: int, src: int, k: int) -> None:
        # row_dst += k * row_src
        for M in (D, U):
            rs, rd = M[src], M[dst]
            for j in range(len(rd)):
                rd[j] += k * rs[j]

    def add_col(dst: int, src: int, k: int) -> None:
        for M in (D, V):
            for r in M:
                r[dst] += k * r[src]

    for t in range(min(m, n)):
        while True:
            pivot = None
            for i in range(t, m):
                for j in range(t, n):
                    x = D[i][j]
                    if x and (pivot is None or abs(x) < pivot[0]):
                        pivot = (abs(x), i, j)
            if pivot is None:
                break
            _, pi, pj = pivot
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = D[t][t]
            clean = True
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
                    clean = clean and D[i][t] == 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
                    clean = clean and D[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            for M in (D, U):
                M[t] = [-x for x in M[t]]
        if pivot is None:
            break
    return SnfDecomposition(A, U, D, V)


def det(A: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    M = _check(A)
    n = len(M)
    if any(len(r) != n for r in M):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[-1][-1]


@dataclass(frozen=True)
class PicardGroup:
    """Z^k / rowspan(relations), recorded by invariant factors (zeros mark free rank)."""

    invariant_factors: tuple[int, ...]
    generator: tuple[int, ...] | None = None
    generator_order: int | None = None
    relations: tuple[tuple[int, ...], ...] = field(default=(), compare=False)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d != 1)

    @property
    def is_finite(self) -> bool:
        return 0 not in self.invariant_factors

    @property
    def order(self) -> int | None:
        if not self.is_finite:
            return None
        return math.prod(self.invariant_factors)

    @property
    def is_cyclic(self) -> bool:
        return len(self.torsion) <= 1

    @property
    def generates(self) -> bool:
        return self.generator_order is not None and self.generator_order == self.order

    def describe(self) -> str:
        if not self.torsion:
            return "trivial"
        return " + ".join("Z" if d == 0 else f"Z/{d}" for d in self.torsion)


def quotient_structure(relations: Sequence[Sequence[int]]) -> PicardGroup:
    """Invariant factors of Z^k / rowspan(relations); raises if the quotient is infinite."""
    A = _check(relations)
    if not A:
        raise InfiniteQuotientError("no relations: quotient is free")
    snf = smith_normal_form(A)
    k = len(A[0])
    diag = snf.diagonal
    factors = tuple(diag[i] if i < len(diag) else 0 for i in range(k))
    if 0 in factors:
        raise InfiniteQuotientError(f"relations {A} have rank < {k}")
    return PicardGroup(factors, relations=tuple(map(tuple, A)))


def element_order(v: Sequence[int], relations: Sequence[Sequence[int]]) -> int:
    """Least a >= 1 with a*v in rowspan(relations)."""
    A = _check(relations)
    v = [int(x) for x in v]
    if not any(v):
        raise ValueError("the zero vector has no meaningful order")
    if not A or len(v) != len(A[0]):
        raise ValueError("vector length does not match the lattice")
    snf = smith_normal_form(A)
    y = vecmat(v, snf.V)
    diag = snf.diagonal
    order = 1
    for i, yi in enumerate(y):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if yi:
                raise InfiniteQuotientError(f"{v} has infinite order")
            continue
        order = math.lcm(order, d // math.gcd(d, yi))
    return order


def solve_in_lattice(v: Sequence[int], relations: Sequence[Sequence[int]]) -> list[int] | None:
    """Integer x with x @ relations == v, or None if v is outside the row lattice."""
    A = _check(relations)
    v = [int(x) for x in v]
    snf = smith_normal_form(A)
    y = vecmat(v, snf.V)
    diag = snf.diagonal
    z = [0] * len(A)
    for i, yi in enumerate(y):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if yi:
                return None
        elif yi % d:
            return None
        else:
            z[i] = yi // d
    x = vecmat(z, snf.U)
    assert vecmat(x, A) == v
    return x


def gcd_all(values: Sequence[int]) -> int:
    return reduce(math.gcd, values, 0)
