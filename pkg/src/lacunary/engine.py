"""Budgeted constructive witnesses for infinite-dimensional solution spaces.

Three procedures, all exact and all budget-bounded:

* :func:`certify_dimension` proves dim >= k by exhibiting k verified
  finite-support solutions with pairwise disjoint supports;
* :func:`split_lacunary` cuts a solution with long zero runs into
  independent finite-support solutions, the route from a lacunary solution
  to an infinite-dimensional solution space;
* :func:`build_lacunary` assembles a solution with ever-growing support
  gaps out of finite-support blocks, the reverse route.

Each can also return :class:`Inconclusive`: the budget ran out without a
witness.  That is never a claim that the solution space is
finite-dimensional; these are semi-algorithms by nature.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .linalg import (
    KernelBasis,
    VerificationFailure,
    finite_support_kernel,
    rank_and_nullspace,
)
from .operators import (
    FiniteSolution,
    OperatorSpec,
    is_global_solution_finite,
    residual,
)
from .sequences import FiniteTable, SequenceSpec, Window, support_in_window

__all__ = [
    "DimensionCertificate",
    "Inconclusive",
    "NotASolutionOnWindow",
    "PartialLacunarySolution",
    "RAY_NEGATIVE",
    "RAY_POSITIVE",
    "build_lacunary",
    "certify_dimension",
    "split_lacunary",
    "verify_dimension_certificate",
    "verify_kernel_basis",
    "verify_partial_lacunary",
    "windowed_residual_check",
]

RAY_POSITIVE = "positive"
RAY_NEGATIVE = "negative"


class NotASolutionOnWindow(Exception):
    """The sequence fails the equation at some fully-windowed index."""

    def __init__(self, n: int, value: Fraction) -> None:
        super().__init__(f"residual at n={n} is {value}, not 0")
        self.n = n
        self.value = value


@dataclass(frozen=True)
class Inconclusive:
    """Budget exhausted without a witness; not a negative answer."""

    reason: str
    best_kernel_dim: Optional[int] = None
    best_gap: Optional[int] = None


@dataclass(frozen=True)
class DimensionCertificate:
    """k verified finite-support solutions with pairwise disjoint supports.

    Disjoint supports make the solutions linearly independent, so a valid
    certificate proves the solution space has dimension at least k.  All
    structural invariants are enforced here; the residual checks against a
    concrete operator live in verify_dimension_certificate.
    """

    k: int
    window: Window
    solutions: tuple[FiniteSolution, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "solutions", tuple(self.solutions))
        if self.k < 1:
            raise ValueError("a dimension certificate needs k >= 1")
        if len(self.solutions) != self.k:
            raise ValueError("certificate must contain exactly k solutions")
        seen: set[int] = set()
        for s in self.solutions:
            if s.min_support < self.window.lo or s.max_support > self.window.hi:
                raise ValueError("solution support leaves the certificate window")
            supp = s.support_set()
            if seen & supp:
                raise ValueError("solution supports are not pairwise disjoint")
            seen |= supp


@dataclass(frozen=True)
class PartialLacunarySolution:
    """Finite-support blocks with strictly growing gaps along one ray.

    Blocks are listed in construction order: ascending supports on the
    positive ray, descending on the negative ray.  gap_profile[i] is the
    distance from block i to block i+1 measured along the ray, so the zero
    run between them has length gap_profile[i] - 1; the construction keeps
    gap_profile[i] >= i + 2.  The assembled sum is a single solution whose
    support gaps reach the profile's maximum, a finite prefix of a
    lacunary solution.
    """

    blocks: tuple[FiniteSolution, ...]
    gap_profile: tuple[int, ...]
    ray: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "blocks", tuple(self.blocks))
        object.__setattr__(self, "gap_profile", tuple(self.gap_profile))
        if self.ray not in (RAY_POSITIVE, RAY_NEGATIVE):
            raise ValueError(f"unknown ray: {self.ray!r}")
        if not self.blocks:
            raise ValueError("need at least one block")
        if len(self.gap_profile) != len(self.blocks) - 1:
            raise ValueError("gap profile length must be block count minus 1")
        for i, gap in enumerate(self.gap_profile):
            prev, nxt = self.blocks[i], self.blocks[i + 1]
            if self.ray == RAY_POSITIVE:
                actual = nxt.min_support - prev.max_support
            else:
                actual = prev.min_support - nxt.max_support
            if gap != actual:
                raise ValueError(f"gap_profile[{i}] = {gap} but blocks are {actual} apart")
            if gap < i + 2:
                raise ValueError(f"gap_profile[{i}] = {gap} violates the i + 2 lower bound")

    @property
    def max_gap(self) -> int:
        return max(self.gap_profile, default=0)

    def covered_window(self) -> Window:
        lo = min(b.min_support for b in self.blocks)
        hi = max(b.max_support for b in self.blocks)
        return Window(lo, hi)

    def assembled(self) -> FiniteTable:
        """The sum of all blocks as one finite table (default 0 outside)."""
        w = self.covered_window()
        values = [Fraction(0)] * w.size
        for b in self.blocks:
            for i, v in enumerate(b.values):
                values[b.anchor + i - w.lo] += v
        return FiniteTable(w.lo, tuple(values))


def windowed_residual_check(op: OperatorSpec, x: SequenceSpec, w: Window) -> None:
    """Verify the equation at every index whose terms all lie inside w.

    Checks residual(op, x, n) = 0 for n in [w.lo, w.hi - r], the equations
    that read x only on [w.lo, w.hi]; nothing is assumed about x outside
    the window.  Raises NotASolutionOnWindow at the first failure.
    """
    for n in range(w.lo, w.hi - op.order + 1):
        value = residual(op, x, n)
        if value != 0:
            raise NotASolutionOnWindow(n, value)


def certify_dimension(
    op: OperatorSpec, k: int, budget: int
) -> Union[DimensionCertificate, Inconclusive]:
    """Search growing symmetric windows for k disjoint-support solutions.

    Window half-widths run r+1, 2(r+1), 4(r+1), ... up to the budget.  On
    each window the finite-support kernel basis is scanned leftmost-first
    and vectors whose supports overlap anything already taken are skipped;
    greedy disjoint extraction is enough because disjointness is only
    needed for linear independence.  A returned certificate is
    unconditionally sound: dim >= k.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if budget < 1:
        raise ValueError("budget must be positive")
    best_dim = 0
    half = op.order + 1
    while half <= budget:
        w = Window(-half, half)
        kb = finite_support_kernel(op, w)
        best_dim = max(best_dim, kb.dimension)
        if kb.dimension >= k:
            candidates = sorted(
                kb.solutions(),
                key=lambda s: (s.min_support, s.max_support, s.values),
            )
            taken: list[FiniteSolution] = []
            used: set[int] = set()
            for s in candidates:
                supp = s.support_set()
                if used & supp:
                    continue
                taken.append(s)
                used |= supp
                if len(taken) == k:
                    return DimensionCertificate(k, w, tuple(taken))
        half *= 2
    return Inconclusive(
        reason=f"no {k} disjoint solutions within budget {budget}",
        best_kernel_dim=best_dim,
    )


def split_lacunary(
    op: OperatorSpec,
    x: SequenceSpec,
    w: Window,
    max_pieces: Optional[int] = None,
) -> list[FiniteSolution]:
    """Cut a windowed solution at its long zero runs into verified pieces.

    After the windowed residual check passes, the support of x inside w is
    segmented at maximal zero runs of length >= r+1.  A segment qualifies
    as a piece only if it has at least r+1 verified zeros on both sides
    inside the window (segments flush against a window edge are dropped:
    their completeness cannot be checked).  Qualifying pieces are genuine
    global solutions with pairwise disjoint supports, returned leftmost
    first, at most max_pieces of them (None means no cap).  An empty list
    means no cut qualified, which is not an error.
    """
    if max_pieces is not None and max_pieces < 1:
        raise ValueError("max_pieces must be positive")
    r = op.order
    windowed_residual_check(op, x, w)
    support = support_in_window(x, w).indices
    if not support:
        return []

    segments: list[tuple[int, int]] = []
    start = support[0]
    prev = support[0]
    for s in support[1:]:
        if s - prev >= r + 2:  # zero run of length >= r+1 between prev and s
            segments.append((start, prev))
            start = s
        prev = s
    segments.append((start, prev))

    pieces = []
    for i, (lo, hi) in enumerate(segments):
        left_ok = i > 0 or lo - w.lo >= r + 1
        right_ok = i < len(segments) - 1 or w.hi - hi >= r + 1
        if not (left_ok and right_ok):
            continue
        piece = FiniteSolution(lo, tuple(x.value_at(n) for n in range(lo, hi + 1)))
        if not is_global_solution_finite(op, piece):
            raise VerificationFailure(
                f"piece anchored at {lo} fails residual re-verification"
            )
        pieces.append(piece)
        if max_pieces is not None and len(pieces) == max_pieces:
            break
    return pieces


def _pick_block(
    solutions: tuple[FiniteSolution, ...], ray: str
) -> FiniteSolution:
    # Deterministic choice: the block that ends earliest along the ray,
    # keeping later windows as close as the gap schedule allows.
    if ray == RAY_POSITIVE:
        return min(solutions, key=lambda s: (s.max_support, s.min_support, s.values))
    return min(solutions, key=lambda s: (-s.min_support, -s.max_support, s.values))


def _grow_block_windows(ray: str, edge: int, width_base: int, budget: int):
    # Doubling windows anchored at `edge`, clipped to [-budget, budget].
    width = width_base
    while True:
        if ray == RAY_POSITIVE:
            lo, hi = edge, min(edge + width - 1, budget)
        else:
            lo, hi = max(edge - width + 1, -budget), edge
        clipped = (hi - lo + 1) < width
        yield Window(lo, hi), clipped
        if clipped:
            return
        width *= 2


def build_lacunary(
    op: OperatorSpec, min_gap: int, budget: int
) -> Union[PartialLacunarySolution, Inconclusive]:
    """Assemble blocks with strictly growing gaps until one reaches min_gap.

    Each ray is tried in turn (positive first).  Block i+1 is searched for
    in doubling windows that start a target distance beyond block i, where
    the target at step i is max(i + 2, twice the previous gap): at least
    the i + 2 ramp the gap profile must dominate, but accelerating so a
    requested gap is reached in logarithmically many blocks instead of
    linearly many indices.  All windows stay inside [-budget, budget]; if
    neither ray produces the requested gap the outcome is Inconclusive.
    """
    if min_gap < 1:
        raise ValueError("min_gap must be positive")
    if budget < 1:
        raise ValueError("budget must be positive")
    width_base = op.order + 1
    best_gap = 0

    for ray in (RAY_POSITIVE, RAY_NEGATIVE):
        blocks: list[FiniteSolution] = []
        gaps: list[int] = []
        while True:
            if not blocks:
                edge = 0
            else:
                i = len(gaps)
                target = max(i + 2, 2 * gaps[-1] if gaps else 0)
                if ray == RAY_POSITIVE:
                    edge = blocks[-1].max_support + target
                else:
                    edge = blocks[-1].min_support - target
            if abs(edge) > budget:
                break
            found = None
            for w, _ in _grow_block_windows(ray, edge, width_base, budget):
                kb = finite_support_kernel(op, w)
                if kb.dimension:
                    found = _pick_block(kb.solutions(), ray)
                    break
            if found is None:
                break
            if blocks:
                if ray == RAY_POSITIVE:
                    gaps.append(found.min_support - blocks[-1].max_support)
                else:
                    gaps.append(blocks[-1].min_support - found.max_support)
                best_gap = max(best_gap, gaps[-1])
            blocks.append(found)
            if gaps and gaps[-1] >= min_gap:
                result = PartialLacunarySolution(tuple(blocks), tuple(gaps), ray)
                cw = result.covered_window()
                check = Window(cw.lo - op.order, cw.hi + op.order)
                try:
                    windowed_residual_check(op, result.assembled(), check)
                except NotASolutionOnWindow as exc:
                    raise VerificationFailure(
                        f"assembled prefix fails the equation at n={exc.n}"
                    ) from exc
                return result
    return Inconclusive(
        reason=f"no gap of {min_gap} reached within budget {budget} on either ray",
        best_gap=best_gap if best_gap else None,
    )


def verify_dimension_certificate(op: OperatorSpec, cert: DimensionCertificate) -> bool:
    """Re-check a certificate against an operator from first principles."""
    return all(is_global_solution_finite(op, s) for s in cert.solutions)


def verify_partial_lacunary(op: OperatorSpec, partial: PartialLacunarySolution) -> bool:
    """Re-check every block and the assembled sum against an operator."""
    if not all(is_global_solution_finite(op, b) for b in partial.blocks):
        return False
    cw = partial.covered_window()
    try:
        windowed_residual_check(
            op, partial.assembled(), Window(cw.lo - op.order, cw.hi + op.order)
        )
    except NotASolutionOnWindow:
        return False
    return True


def verify_kernel_basis(op: OperatorSpec, basis: KernelBasis) -> bool:
    """Re-check a kernel basis: genuine solutions, linearly independent."""
    try:
        sols = basis.solutions()
    except ValueError:
        return False
    if not all(is_global_solution_finite(op, s) for s in sols):
        return False
    if basis.vectors:
        rank, _ = rank_and_nullspace(basis.vectors)
        if rank != basis.dimension:
            return False
    return True
