"""Exact linear algebra for lower-triangular rational matrices.

Two independent inversion algorithms are provided on purpose.
`invert_forward` is plain forward substitution and is the default
everywhere.  `invert_cofactor` computes every inverse entry from the
determinant formula

    inv[i][j] = (-1)^(i-j) D_{i,j} / (a_{j,j} a_{j+1,j+1} ... a_{i,i})

where D_{i,j} is the minor built from rows j+1..i and columns j..i-1
(1-indexed), with D_{i,j} = a_{i,j} when i = j+1.  Agreement of the two
algorithms on the same input is used as a machine check throughout the
test suite; `det_Dij` exposes the minors themselves through a third
route (fraction-free elimination) so the shared recurrence below is
cross-checked as well.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .coeffs import GENERAL, LOWER_TRIANGULAR, CoeffMatrix
from .errors import SingularMatrixError


def _require_triangular_shape(M: CoeffMatrix) -> None:
    if M.shape_tag == LOWER_TRIANGULAR:
        return
    if M.rows != M.cols:
        raise ValueError("matrix must be square")
    for i, row in enumerate(M.entries):
        if any(x != 0 for x in row[i + 1:]):
            raise ValueError("matrix must be lower triangular")


def _require_invertible_triangular(M: CoeffMatrix) -> None:
    """Reject inputs outside this module's contract.

    A matrix already tagged lower_triangular was validated on
    construction; anything else is scanned here.  Structural problems
    are ValueError, a zero diagonal is the more specific
    SingularMatrixError.
    """
    if M.shape_tag == LOWER_TRIANGULAR:
        return
    _require_triangular_shape(M)
    for i in range(M.rows):
        if M.entries[i][i] == 0:
            raise SingularMatrixError(f"zero diagonal entry at position {i + 1}")


def invert_forward(M: CoeffMatrix) -> CoeffMatrix:
    """Exact inverse of a lower-triangular matrix by forward substitution.

    Column j of the inverse solves M x = e_j top to bottom; the result
    is lower triangular with diagonal 1/a_{i,i}.
    """
    _require_invertible_triangular(M)
    n = M.rows
    a = M.entries
    inv = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        inv[j][j] = Fraction(1) / a[j][j]
        for i in range(j + 1, n):
            acc = Fraction(0)
            for k in range(j, i):
                if a[i][k]:
                    acc += a[i][k] * inv[k][j]
            inv[i][j] = -acc / a[i][i]
    return CoeffMatrix.from_rows(inv, shape_tag=LOWER_TRIANGULAR)


def invert_cofactor(M: CoeffMatrix) -> CoeffMatrix:
    """Exact inverse via the cofactor-determinant formula.

    Naively each D_{i,j} is an (i-j)x(i-j) determinant, which is far
    too slow entrywise.  Expanding D_{j+k,j} along its last row gives a
    recurrence in k that reuses the smaller minors of the same column:

        d_k = sum_{c=1}^{k} (-1)^(k+c) a_{j+k,j+c-1} * d_{c-1}
              * a_{j+c,j+c} a_{j+c+1,j+c+1} ... a_{j+k-1,j+k-1}

    with d_0 = 1.  The trailing diagonal products are maintained
    incrementally (each step multiplies all previous ones by a single
    new diagonal entry), so a full inverse costs O(n^3) like forward
    substitution.  The recurrence itself is cross-checked against
    `det_Dij`, which evaluates the same minors by elimination.
    """
    _require_invertible_triangular(M)
    n = M.rows
    a = M.entries
    inv = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        inv[j][j] = Fraction(1) / a[j][j]
        # d[k] = D_{j+k,j}; u[c-1] = d_{c-1} * prod of diag entries j+c..j+k-1
        d = [Fraction(1)]
        u: list[Fraction] = []
        denom = Fraction(a[j][j])
        for k in range(1, n - j):
            if u:
                grown = a[j + k - 1][j + k - 1]
                u = [x * grown for x in u]
            u.append(d[k - 1])
            acc = Fraction(0)
            row = a[j + k]
            for c in range(1, k + 1):
                e = row[j + c - 1]
                if e:
                    acc += e * u[c - 1] if (k + c) % 2 == 0 else -e * u[c - 1]
            d.append(acc)
            denom *= a[j + k][j + k]
            inv[j + k][j] = (d[k] if k % 2 == 0 else -d[k]) / denom
    return CoeffMatrix.from_rows(inv, shape_tag=LOWER_TRIANGULAR)


def det_Dij(M: CoeffMatrix, i: int, j: int) -> Fraction:
    """The minor D_{i,j} of the cofactor formula, for 1-indexed i > j.

    Extracts rows j+1..i and columns j..i-1 and evaluates the
    determinant by fraction-free (Bareiss) elimination after clearing
    denominators, with row swaps when a pivot vanishes.  For i = j+1
    this degenerates to the single entry a_{i,j}.
    """
    _require_triangular_shape(M)
    if not (1 <= j < i <= M.rows):
        raise ValueError("require 1 <= j < i <= n")
    size = i - j
    scale = Fraction(1)
    block: list[list[int]] = []
    for r in range(j, i):
        raw = [M.entries[r][col] for col in range(j - 1, i - 1)]
        den = lcm(*(x.denominator for x in raw))
        scale /= den
        block.append([int(x * den) for x in raw])
    return scale * _bareiss_det(block, size)


def _bareiss_det(m: list[list[int]], n: int) -> int:
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(k + 1, n):
            for c in range(k + 1, n):
                m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]) // prev
            m[r][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def mat_mul(P: CoeffMatrix, Q: CoeffMatrix) -> CoeffMatrix:
    """Exact matrix product; triangularity propagates when both have it."""
    if P.cols != Q.rows:
        raise ValueError(
            f"dimension mismatch: {P.rows}x{P.cols} times {Q.rows}x{Q.cols}"
        )
    qt = list(zip(*Q.entries))
    rows = [
        [sum((x * y for x, y in zip(prow, qcol) if x), Fraction(0)) for qcol in qt]
        for prow in P.entries
    ]
    both_lt = P.shape_tag == LOWER_TRIANGULAR and Q.shape_tag == LOWER_TRIANGULAR
    # product of triangular matrices keeps a nonzero diagonal, so the
    # tagged constructor validation cannot fail here
    return CoeffMatrix.from_rows(rows, shape_tag=LOWER_TRIANGULAR if both_lt else GENERAL)


def row_sums(M: CoeffMatrix) -> tuple[Fraction, ...]:
    """Per-row entry sums; (1, 0, ..., 0) for the inverses built here."""
    return tuple(sum(row, Fraction(0)) for row in M.entries)
