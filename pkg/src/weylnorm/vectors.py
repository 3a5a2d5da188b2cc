"""Exact rational vectors and the small amount of linear algebra we need.

Everything is done over Fraction tuples; no floats anywhere.  Half-integer
coordinates (F4, E6/E7/E8 half-roots) make exact arithmetic mandatory.
"""

from __future__ import annotations

from fractions import Fraction as Q
from typing import Iterable, Sequence

Vector = tuple[Q, ...]
Matrix = tuple[tuple[Q, ...], ...]


def vec(items: Iterable) -> Vector:
    return tuple(Q(x) for x in items)


def dot(x: Vector, y: Vector) -> Q:
    if len(x) != len(y):
        raise ValueError("dimension mismatch: %d vs %d" % (len(x), len(y)))
    return sum((a * b for a, b in zip(x, y)), Q(0))


def add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def scale(c, x: Vector) -> Vector:
    c = Q(c)
    return tuple(c * a for a in x)


def zero(n: int) -> Vector:
    return tuple(Q(0) for _ in range(n))


def lincomb(coeffs: Sequence, vecs: Sequence[Vector]) -> Vector:
    out = zero(len(vecs[0]))
    for c, v in zip(coeffs, vecs):
        if c:
            out = add(out, scale(c, v))
    return out


def solve_exact(columns: Sequence[Vector], target: Vector) -> tuple[Q, ...]:
    """Solve sum_j c_j * columns[j] == target exactly.

    The system may be overdetermined but must be consistent; raises
    ValueError otherwise.  Used to express ambient vectors in a simple-root
    basis.
    """
    m = len(columns)
    n = len(target)
    rows = [[columns[j][i] for j in range(m)] + [target[i]] for i in range(n)]
    piv_cols: list[int] = []
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, n) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = Q(1) / rows[r][c]
        rows[r] = [a * inv for a in rows[r]]
        for i in range(n):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
        if r == n:
            break
    for i in range(r, n):
        if rows[i][m]:
            raise ValueError("inconsistent linear system")
    sol = [Q(0)] * m
    for i, c in enumerate(piv_cols):
        sol[c] = rows[i][m]
    if len(piv_cols) < m:
        raise ValueError("columns are linearly dependent")
    return tuple(sol)


def invert(mat: Matrix) -> Matrix:
    """Exact inverse of a small square matrix (Gauss-Jordan)."""
    n = len(mat)
    a = [list(row) + [Q(1) if i == j else Q(0) for j in range(n)]
         for i, row in enumerate(mat)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[c], a[piv] = a[piv], a[c]
        inv = Q(1) / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return tuple(tuple(row[n:]) for row in a)


def mat_vec(mat: Matrix, x: Vector) -> Vector:
    return tuple(dot(row, x) for row in mat)


def format_rational(q: Q) -> str:
    return str(q.numerator) if q.denominator == 1 else "%d/%d" % (q.numerator, q.denominator)


def parse_rational(s: str) -> Q:
    return Q(s.strip())


def format_vector(x: Vector) -> str:
    return ",".join(format_rational(q) for q in x)


def parse_vector(s: str) -> Vector:
    return tuple(Q(tok) for tok in s.split(","))
