"""Linear difference operators with sequence coefficients.

An operator of order r acts on a bi-infinite sequence x by

    (L x)(n) = sum_{k=0}^{r} a_k(n) * x(n + k)

where each coefficient a_k is itself a finitely described sequence.  The
leading and trailing coefficients may vanish at individual points; nothing
here assumes them invertible.  This module evaluates residuals, verifies
finite-support global solutions by a complete finite check, builds the
finite linear systems that a window of unknowns must satisfy, and issues
residue-class disjointness certificates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .sequences import (
    ZERO,
    FiniteTable,
    GeometricSupport,
    Periodic,
    ResiduePolynomial,
    SequenceSpec,
    SupportProfile,
    Window,
    as_fraction,
)

__all__ = [
    "FiniteSolution",
    "MODE_FREE_BOUNDARY",
    "MODE_SUPPORT_CONFINED",
    "MaskViolation",
    "OperatorSpec",
    "ResidueCertificate",
    "ResidueMask",
    "WindowMatrix",
    "is_global_solution_finite",
    "residual",
    "residue_certificate",
    "vector_to_finite_solution",
    "window_matrix",
]


@dataclass(frozen=True)
class OperatorSpec:
    """Difference operator given by its coefficient sequences a_0 .. a_r."""

    coeffs: tuple[SequenceSpec, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise ValueError("an operator needs at least one coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class FiniteSolution:
    """Finite-support sequence as a tightly anchored value table.

    The table must start and end with a nonzero entry, so support bounds
    are read off directly and equal sequences are structurally equal.  The
    identically zero sequence is not a FiniteSolution.
    """

    anchor: int
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(as_fraction(v) for v in self.values))
        if not self.values:
            raise ValueError("empty value table")
        if self.values[0] == 0 or self.values[-1] == 0:
            raise ValueError("value table must be trimmed to its support")

    @classmethod
    def from_values(
        cls, anchor: int, values: Iterable[Fraction]
    ) -> Optional["FiniteSolution"]:
        """Trim boundary zeros; None if every value is zero."""
        vals = [as_fraction(v) for v in values]
        lo = 0
        while lo < len(vals) and vals[lo] == 0:
            lo += 1
        if lo == len(vals):
            return None
        hi = len(vals)
        while vals[hi - 1] == 0:
            hi -= 1
        return cls(anchor + lo, tuple(vals[lo:hi]))

    @property
    def min_support(self) -> int:
        return self.anchor

    @property
    def max_support(self) -> int:
        return self.anchor + len(self.values) - 1

    def value_at(self, n: int) -> Fraction:
        i = n - self.anchor
        if 0 <= i < len(self.values):
            return self.values[i]
        return ZERO

    def support_set(self) -> frozenset[int]:
        return frozenset(
            self.anchor + i for i, v in enumerate(self.values) if v != 0
        )

    def support(self) -> SupportProfile:
        return SupportProfile.from_indices(sorted(self.support_set()))


def vector_to_finite_solution(
    window: Window, vector: Sequence[Fraction]
) -> Optional[FiniteSolution]:
    """Read a window-indexed coordinate vector as a FiniteSolution."""
    if len(vector) != window.size:
        raise ValueError("vector length does not match window size")
    return FiniteSolution.from_values(window.lo, vector)


def residual(op: OperatorSpec, x: SequenceSpec | FiniteSolution, n: int) -> Fraction:
    """(L x)(n), evaluated exactly."""
    acc = ZERO
    for k, a_k in enumerate(op.coeffs):
        xv = x.value_at(n + k)
        if xv != 0:
            acc += a_k.value_at(n) * xv
    return acc


def is_global_solution_finite(op: OperatorSpec, x: FiniteSolution) -> bool:
    """Whether L x = 0 at every integer, checked finitely.

    Outside [min_support - r, max_support] every term of (L x)(n) touches
    only zeros of x, so the residual vanishes identically there and the
    finite check is complete for all of ZZ.
    """
    r = op.order
    return all(
        residual(op, x, n) == 0 for n in range(x.min_support - r, x.max_support + 1)
    )


MODE_SUPPORT_CONFINED = "support_confined"
MODE_FREE_BOUNDARY = "free_boundary"


@dataclass(frozen=True)
class WindowMatrix:
    """Linear system satisfied by the unknowns x(w.lo) .. x(w.hi).

    Row for equation index n has entry eval(a_{m-n}, n) in the column of
    x(m) when 0 <= m - n <= r, zero otherwise, so the matrix is banded
    with bandwidth r + 1.
    """

    window: Window
    mode: str
    row_indices: tuple[int, ...]
    rows: tuple[tuple[Fraction, ...], ...]

    @property
    def ncols(self) -> int:
        return self.window.size

    @property
    def nrows(self) -> int:
        return len(self.rows)


def window_matrix(op: OperatorSpec, w: Window, mode: str) -> WindowMatrix:
    """Finite linearization of the equation on a window of unknowns.

    SupportConfined takes every equation index n in [w.lo - r, w.hi] and
    treats x outside the window as zero; nullspace vectors are then genuine
    global solutions supported inside w.  FreeBoundary keeps only the
    equations n in [w.lo, w.hi - r] whose terms all fall inside the window,
    assuming nothing about x elsewhere.
    """
    r = op.order
    if mode == MODE_SUPPORT_CONFINED:
        n_indices = range(w.lo - r, w.hi + 1)
    elif mode == MODE_FREE_BOUNDARY:
        n_indices = range(w.lo, w.hi - r + 1)
    else:
        raise ValueError(f"unknown window matrix mode: {mode!r}")
    rows = []
    for n in n_indices:
        row = [ZERO] * w.size
        for k in range(r + 1):
            m = n + k
            if w.lo <= m <= w.hi:
                row[m - w.lo] = op.coeffs[k].value_at(n)
        rows.append(tuple(row))
    return WindowMatrix(w, mode, tuple(n_indices), tuple(rows))


class MaskViolation(Exception):
    """A sampled coefficient value contradicts its claimed residue mask."""

    def __init__(self, k: int, n: int) -> None:
        super().__init__(
            f"coefficient {k} is nonzero at n={n}, outside its claimed residue mask"
        )
        self.k = k
        self.n = n


@dataclass(frozen=True)
class ResidueMask:
    """Residue classes mod `modulus` on which a sequence may be nonzero.

    An empty `allowed` set denotes the identically zero sequence.
    """

    modulus: int
    allowed: frozenset[int]

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        allowed = frozenset(int(a) for a in self.allowed)
        if any(not (0 <= a < self.modulus) for a in allowed):
            raise ValueError("allowed residues must lie in [0, modulus)")
        object.__setattr__(self, "allowed", allowed)

    def lifted(self, target_modulus: int) -> frozenset[int]:
        if target_modulus % self.modulus != 0:
            raise ValueError("target modulus must be a multiple of the mask modulus")
        reps = target_modulus // self.modulus
        return frozenset(a + j * self.modulus for a in self.allowed for j in range(reps))

    def admits(self, n: int) -> bool:
        return n % self.modulus in self.allowed


@dataclass(frozen=True)
class ResidueCertificate:
    """Outcome of residue-class disjointness certification.

    `certified` True means: for every coefficient index k there is no pair
    of a residue where a_k may be nonzero and a residue where the solution
    class may be nonzero that line up as n and n + k.  Every product
    a_k(n) x(n+k) is then identically zero, so L x = 0 on all of ZZ for
    every x supported inside the solution mask.  `conflicts` lists the
    offending (k, coefficient residue, solution residue) triples mod
    `modulus` otherwise.
    """

    certified: bool
    modulus: int
    conflicts: tuple[tuple[int, int, int], ...]


def _natural_period(spec: SequenceSpec) -> int:
    if isinstance(spec, Periodic):
        return spec.period
    if isinstance(spec, ResiduePolynomial):
        return spec.modulus
    return 1


def _mask_sample_indices(op: OperatorSpec, period: int) -> list[int]:
    # Two full common periods around 0, plus the aperiodic parts of any
    # coefficient: tabulated ranges and an initial stretch of doubling
    # support points.
    samples = set(range(-period, period))
    for a in op.coeffs:
        if isinstance(a, FiniteTable):
            samples.update(range(a.anchor - 1, a.anchor + len(a.values) + 1))
        elif isinstance(a, GeometricSupport):
            step = a.scale
            for _ in range(12):
                samples.add(step + a.shift)
                step *= 2
            if a.allow_negative_m:
                d = a.scale
                while d % 2 == 0:
                    d //= 2
                    samples.add(d + a.shift)
    return sorted(samples)


def residue_certificate(
    op: OperatorSpec,
    coeff_masks: Sequence[ResidueMask],
    sol_mask: ResidueMask,
) -> ResidueCertificate:
    """Certify L x = 0 for all x supported inside `sol_mask`, by disjointness.

    The claimed coefficient masks are spot-checked on a sample window
    covering two full common periods and the aperiodic coefficient parts;
    a contradiction raises MaskViolation and no certificate is issued.
    Certification itself is symbolic: lift all masks to the lcm modulus and
    look for a coefficient residue rho and solution residue tau with
    rho + k = tau, which is exactly a product term the masks fail to kill.
    """
    r = op.order
    if len(coeff_masks) != r + 1:
        raise ValueError(f"need {r + 1} coefficient masks, got {len(coeff_masks)}")

    lifted_modulus = math.lcm(sol_mask.modulus, *(m.modulus for m in coeff_masks))
    sample_period = math.lcm(
        lifted_modulus, *(_natural_period(a) for a in op.coeffs)
    )
    for n in _mask_sample_indices(op, sample_period):
        for k, a_k in enumerate(op.coeffs):
            if a_k.value_at(n) != 0 and not coeff_masks[k].admits(n):
                raise MaskViolation(k, n)

    sol_lifted = sorted(sol_mask.lifted(lifted_modulus))
    conflicts = []
    for k, mask in enumerate(coeff_masks):
        for rho in sorted(mask.lifted(lifted_modulus)):
            for tau in sol_lifted:
                if (rho + k) % lifted_modulus == tau:
                    conflicts.append((k, rho, tau))
    return ResidueCertificate(not conflicts, lifted_modulus, tuple(conflicts))
