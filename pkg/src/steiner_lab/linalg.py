"""Exact integer Smith normal form, for presenting finitely generated
abelian groups by generators and relations."""

from __future__ import annotations


def smith_normal_form(rows, ncols):
    """Invariant factors (d_1 | d_2 | ...) of an integer matrix.

    Plain elementary-operation reduction with smallest-pivot selection;
    Python integers keep everything exact.  Returns the nonzero diagonal
    entries, each positive, in divisibility order.
    """
    A = [list(r) for r in rows]
    nrows = len(A)
    for r in A:
        if len(r) != ncols:
            raise ValueError("ragged matrix")
    t = 0
    factors = []
    while t < nrows and t < ncols:
        # locate the smallest nonzero entry in the remaining block
        pivot = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                v = A[i][j]
                if v and (pivot is None or abs(v) < abs(pivot[2])):
                    pivot = (i, j, v)
        if pivot is None:
            break
        pi, pj, _ = pivot
        A[t], A[pi] = A[pi], A[t]
        for row in A:
            row[t], row[pj] = row[pj], row[t]
        while True:
            # clear the pivot column
            dirty = False
            for i in range(t + 1, nrows):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    if q:
                        A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                    if A[i][t]:
                        A[t], A[i] = A[i], A[t]
                        dirty = True
            # clear the pivot row
            for j in range(t + 1, ncols):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    if q:
                        for row in A:
                            row[j] -= q * row[t]
                    if A[t][j]:
                        for row in A:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
            if not dirty:
                break
        # enforce divisibility towards the rest of the block
        d = abs(A[t][t])
        adjusted = False
        for i in range(t + 1, nrows):
            for j in range(t + 1, ncols):
                if A[i][j] % d:
                    A[t] = [a + b for a, b in zip(A[t], A[i])]
                    adjusted = True
                    break
            if adjusted:
                break
        if adjusted:
            continue
        factors.append(d)
        t += 1
    return factors


def abelian_invariants(num_generators, relation_rows):
    """(free rank, torsion factors > 1) of <g_1..g_n | rows = 0>."""
    factors = smith_normal_form(relation_rows, num_generators)
    rank = num_generators - len(factors)
    torsion = tuple(d for d in factors if d > 1)
    return rank, torsion
