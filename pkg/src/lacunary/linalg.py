"""Exact rational rank and nullspace computation, and the kernels built on it.

Elimination is fraction-free: rows are first scaled to integers, pivoting
is deterministic (leftmost column, first nonzero row), updates use integer
cross-multiplication, and each updated row is divided by its content to
control coefficient growth.  Row scaling never changes rank or nullspace,
so the echelon form supports exact back-substitution over Fractions.

The banded path tracks each row's nonzero span so elimination work stays
proportional to the band; the dense path runs the same pivot sequence
without spans and must produce identical output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .operators import (
    MODE_FREE_BOUNDARY,
    MODE_SUPPORT_CONFINED,
    FiniteSolution,
    OperatorSpec,
    is_global_solution_finite,
    vector_to_finite_solution,
    window_matrix,
)
from .sequences import Window

__all__ = [
    "KernelBasis",
    "VerificationFailure",
    "WindowTooSmall",
    "finite_support_kernel",
    "free_kernel_dim",
    "projection_dims",
    "rank_and_nullspace",
]


class VerificationFailure(Exception):
    """A computed nullspace vector failed residual re-verification.

    This signals an internal elimination bug; it must never be swallowed.
    """


class WindowTooSmall(Exception):
    """The window cannot hold a single full equation of the operator."""


Matrix = Sequence[Sequence[Fraction]]


def _integer_rows(matrix: Matrix) -> list[list[int]]:
    rows = []
    for row in matrix:
        fracs = [Fraction(v) for v in row]
        scale = math.lcm(*(f.denominator for f in fracs)) if fracs else 1
        rows.append([int(f * scale) for f in fracs])
    return rows


def _reduce_content(row: list[int], lo: int, hi: int) -> None:
    g = 0
    for c in range(lo, hi):
        g = math.gcd(g, row[c])
        if g == 1:
            return
    if g > 1:
        for c in range(lo, hi):
            row[c] //= g


def _echelon(rows: list[list[int]], banded: bool) -> tuple[list[int], list[list[int]]]:
    """In-place forward elimination; returns (pivot columns, echelon rows)."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    if banded:
        spans = []
        for row in rows:
            nz = [c for c, v in enumerate(row) if v != 0]
            spans.append((nz[0], nz[-1] + 1) if nz else (0, 0))
    pivot_cols: list[int] = []
    top = 0
    for col in range(ncols):
        pivot = next(
            (i for i in range(top, nrows) if rows[i][col] != 0),
            None,
        )
        if pivot is None:
            continue
        rows[top], rows[pivot] = rows[pivot], rows[top]
        if banded:
            spans[top], spans[pivot] = spans[pivot], spans[top]
            p_lo, p_hi = spans[top]
        p = rows[top][col]
        prow = rows[top]
        for i in range(top + 1, nrows):
            f = rows[i][col]
            if f == 0:
                continue
            row = rows[i]
            if banded:
                lo = min(spans[i][0], p_lo)
                hi = max(spans[i][1], p_hi)
            else:
                lo, hi = 0, ncols
            for c in range(lo, hi):
                row[c] = p * row[c] - f * prow[c]
            _reduce_content(row, lo, hi)
            if banded:
                nz = [c for c in range(lo, hi) if row[c] != 0]
                spans[i] = (nz[0], nz[-1] + 1) if nz else (0, 0)
        pivot_cols.append(col)
        top += 1
        if top == nrows:
            break
    return pivot_cols, rows


def _normalize(vector: list[Fraction]) -> tuple[Fraction, ...]:
    # Integer entries, content 1, first nonzero entry positive.
    scale = math.lcm(*(v.denominator for v in vector))
    ints = [int(v * scale) for v in vector]
    g = math.gcd(*ints)
    if g:
        ints = [v // g for v in ints]
    lead = next((v for v in ints if v != 0), 0)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(Fraction(v) for v in ints)


def rank_and_nullspace(
    matrix: Matrix, mode: str = "banded"
) -> tuple[int, list[tuple[Fraction, ...]]]:
    """Exact rank and a canonical nullspace basis of a rational matrix.

    Basis vectors are integral with content 1 and positive leading entry,
    one per free column in ascending column order, so equal matrices give
    byte-identical serialized certificates.  Each returned vector is
    asserted to satisfy M v = 0 exactly.
    """
    if mode not in ("banded", "dense"):
        raise ValueError(f"unknown elimination mode: {mode!r}")
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    if any(len(row) != ncols for row in matrix):
        raise ValueError("ragged matrix")
    if ncols == 0:
        return 0, []

    rows = _integer_rows(matrix)
    pivot_cols, echelon = _echelon(rows, banded=(mode == "banded"))
    rank = len(pivot_cols)
    pivot_set = set(pivot_cols)
    free_cols = [c for c in range(ncols) if c not in pivot_set]

    basis: list[tuple[Fraction, ...]] = []
    for free in free_cols:
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i in reversed(range(rank)):
            c = pivot_cols[i]
            row = echelon[i]
            s = sum((Fraction(row[j]) * v[j] for j in range(c + 1, ncols) if row[j]), Fraction(0))
            v[c] = -s / row[c]
        basis.append(_normalize(v))

    for v in basis:
        for row in matrix:
            acc = Fraction(0)
            for a, b in zip(row, v):
                if a and b:
                    acc += Fraction(a) * b
            assert acc == 0, "nullspace vector fails exact M v = 0 check"
    assert rank + len(basis) == ncols
    return rank, basis


@dataclass(frozen=True)
class KernelBasis:
    """Basis of the global solutions supported inside a window."""

    window: Window
    vectors: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if any(len(v) != self.window.size for v in self.vectors):
            raise ValueError("basis vector length does not match window size")

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def solutions(self) -> tuple[FiniteSolution, ...]:
        out = []
        for v in self.vectors:
            fs = vector_to_finite_solution(self.window, v)
            if fs is None:
                raise ValueError("zero vector in kernel basis")
            out.append(fs)
        return tuple(out)


def finite_support_kernel(op: OperatorSpec, w: Window) -> KernelBasis:
    """Basis of the space of global solutions whose support lies inside w.

    Every basis vector is re-verified against the operator by a complete
    residual check before being returned; a failure aborts the computation
    rather than returning an unsound certificate.
    """
    m = window_matrix(op, w, MODE_SUPPORT_CONFINED)
    _, basis = rank_and_nullspace(m.rows)
    kb = KernelBasis(w, tuple(basis))
    for fs in kb.solutions():
        if not is_global_solution_finite(op, fs):
            raise VerificationFailure(
                f"kernel vector anchored at {fs.anchor} fails residual re-verification"
            )
    return kb


def free_kernel_dim(op: OperatorSpec, w: Window) -> int:
    """Dimension of window solutions with no constraint outside the window."""
    if w.hi - w.lo < op.order:
        raise WindowTooSmall(
            f"window [{w.lo}, {w.hi}] is shorter than operator order {op.order}"
        )
    m = window_matrix(op, w, MODE_FREE_BOUNDARY)
    if not m.rows:
        return m.ncols
    rank, _ = rank_and_nullspace(m.rows)
    return m.ncols - rank


def projection_dims(
    op: OperatorSpec, ray_start: int, i_max: int, budget_len: int
) -> list[int]:
    """Budgeted dimensions of leading-coordinate projections.

    For each i in [1, i_max]: the dimension of the projection onto the
    coordinates [ray_start, ray_start + i - 1] of the space of global
    solutions supported in [ray_start, ray_start + budget_len - 1].  These
    are upper approximations that are non-increasing in the budget; no
    stabilization is claimed.
    """
    if i_max < 1:
        raise ValueError("i_max must be at least 1")
    if budget_len < i_max:
        raise ValueError("budget length must be at least i_max")
    w = Window(ray_start, ray_start + budget_len - 1)
    kb = finite_support_kernel(op, w)
    dims = []
    for i in range(1, i_max + 1):
        truncated = [v[:i] for v in kb.vectors]
        if not truncated:
            dims.append(0)
            continue
        rank, _ = rank_and_nullspace(truncated)
        dims.append(rank)
    return dims
