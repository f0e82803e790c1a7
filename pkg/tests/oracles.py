"""Independent reference implementations used to cross-check the library.

Everything here is deliberately naive and shares no code with the package
internals: plain rational Gauss-Jordan with a different pivot rule, and
window systems assembled from unit-sequence residuals instead of the
library's matrix constructor.
"""

from fractions import Fraction


def naive_rref(matrix):
    """Reduced row echelon form over Fractions; returns (rows, pivot cols).

    Pivots by largest absolute value in the column, unlike the library's
    first-nonzero rule, so agreement is not an artifact of shared choices.
    """
    rows = [[Fraction(v) for v in row] for row in matrix]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    top = 0
    for col in range(ncols):
        candidates = [i for i in range(top, len(rows)) if rows[i][col] != 0]
        if not candidates:
            continue
        best = max(candidates, key=lambda i: abs(rows[i][col]))
        rows[top], rows[best] = rows[best], rows[top]
        pv = rows[top][col]
        rows[top] = [v / pv for v in rows[top]]
        for j in range(len(rows)):
            if j != top and rows[j][col] != 0:
                f = rows[j][col]
                rows[j] = [a - f * b for a, b in zip(rows[j], rows[top])]
        pivots.append(col)
        top += 1
        if top == len(rows):
            break
    return rows, pivots


def naive_rank_nullspace(matrix):
    """(rank, nullspace basis) straight from the reduced echelon form."""
    rows, pivots = naive_rref(matrix)
    ncols = len(rows[0]) if rows else 0
    pivot_set = set(pivots)
    basis = []
    for free in (c for c in range(ncols) if c not in pivot_set):
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -rows[i][free]
        basis.append(tuple(v))
    return len(pivots), basis


def unit_residual(op, m, n):
    """Residual at n of the sequence that is 1 at index m and 0 elsewhere."""
    total = Fraction(0)
    for k in range(op.order + 1):
        if n + k == m:
            total += op.coeffs[k].value_at(n)
    return total


def support_confined_system(op, lo, hi):
    """All equations a support-confined solution on [lo, hi] must satisfy."""
    r = op.order
    return [
        [unit_residual(op, m, n) for m in range(lo, hi + 1)]
        for n in range(lo - r, hi + 1)
    ]


def free_boundary_system(op, lo, hi):
    """Only the equations whose terms all fall inside [lo, hi]."""
    return [
        [unit_residual(op, m, n) for m in range(lo, hi + 1)]
        for n in range(lo, hi - op.order + 1)
    ]


def support_confined_nullity(op, lo, hi):
    rank, _ = naive_rank_nullspace(support_confined_system(op, lo, hi))
    return hi - lo + 1 - rank


def matrix_times_vector(matrix, vector):
    return [sum((Fraction(a) * b for a, b in zip(row, vector)), Fraction(0)) for row in matrix]


def spans_equal(basis_a, basis_b, ncols):
    """Whether two vector lists span the same subspace of QQ^ncols."""
    if not basis_a and not basis_b:
        return True
    rank_a, _ = naive_rank_nullspace([list(v) for v in basis_a]) if basis_a else (0, [])
    rank_b, _ = naive_rank_nullspace([list(v) for v in basis_b]) if basis_b else (0, [])
    stacked = [list(v) for v in basis_a] + [list(v) for v in basis_b]
    rank_ab, _ = naive_rank_nullspace(stacked)
    return rank_a == rank_b == rank_ab
