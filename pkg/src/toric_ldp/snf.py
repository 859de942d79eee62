"""Smith normal form of small integer matrices."""

from __future__ import annotations

from itertools import combinations
from math import gcd


def smith_normal_form(matrix) -> list[int]:
    """Invariant factors ``d_1 | d_2 | ... | d_r`` of an integer matrix of
    full row rank ``r``.

    >>> smith_normal_form([[1, 7, -8], [0, 9, -9]])
    [1, 9]
    """
    a = [list(map(int, row)) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    factors = []
    for t in range(rows):
        # move a nonzero entry of least absolute value to (t, t)
        while True:
            nz = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
            if not nz:
                raise ValueError("matrix does not have full row rank")
            _, i, j = min(nz)
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
            piv = a[t][t]
            done = True
            for i in range(t + 1, rows):
                k = a[i][t] // piv
                if k:
                    a[i] = [x - k * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, cols):
                k = a[t][j] // piv
                if k:
                    for row in a:
                        row[j] -= k * row[t]
                if a[t][j]:
                    done = False
            if not done:
                continue
            # pivot must divide the rest of the matrix
            bad = next(
                ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % piv),
                None,
            )
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
        factors.append(abs(a[t][t]))
    return factors


def determinantal_factors(matrix) -> list[int]:
    """Invariant factors from gcds of k x k minors. Slow but independent."""
    rows = len(matrix)
    cols = len(matrix[0])
    prev = 1
    out = []
    for k in range(1, rows + 1):
        g = 0
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                g = gcd(g, _det([[matrix[i][j] for j in cs] for i in rs]))
        if g == 0:
            raise ValueError("matrix does not have full row rank")
        out.append(g // prev)
        prev = g
    return out


def _det(m) -> int:
    if len(m) == 1:
        return m[0][0]
    return sum(
        (-1) ** j * m[0][j] * _det([row[:j] + row[j + 1 :] for row in m[1:]])
        for j in range(len(m))
    )
