"""Canonical JSON forms for every object that crosses the tool boundary.

Rationals travel as strings "p/q" with q > 0 and gcd(p, q) = 1 ("0/1" for
zero), sequence specs carry a "kind" discriminator, and dumps_canonical
fixes key order and indentation so identical inputs give byte-identical
output files.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .engine import (
    DimensionCertificate,
    Inconclusive,
    PartialLacunarySolution,
)
from .linalg import KernelBasis
from .operators import FiniteSolution, OperatorSpec
from .sequences import (
    FiniteTable,
    GeometricSupport,
    Periodic,
    ResiduePolynomial,
    SequenceSpec,
    Window,
)

__all__ = [
    "dumps_canonical",
    "finite_solution_from_json",
    "finite_solution_to_json",
    "format_rational",
    "kernel_basis_from_json",
    "kernel_basis_to_json",
    "object_from_json",
    "object_to_json",
    "operator_from_json",
    "operator_to_json",
    "parse_rational",
    "sequence_from_json",
    "sequence_to_json",
]


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: Any) -> Fraction:
    if isinstance(text, str):
        return Fraction(text)
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    raise ValueError(f"expected a rational string 'p/q', got {text!r}")


def _int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{what} must be an integer, got {value!r}")
    return value


def _window_to_json(w: Window) -> list[int]:
    return [w.lo, w.hi]


def _window_from_json(data: Any) -> Window:
    if not (isinstance(data, list) and len(data) == 2):
        raise ValueError(f"window must be [lo, hi], got {data!r}")
    return Window(_int(data[0], "window lo"), _int(data[1], "window hi"))


def sequence_to_json(spec: SequenceSpec) -> dict:
    if isinstance(spec, FiniteTable):
        return {
            "kind": "finite_table",
            "anchor": spec.anchor,
            "values": [format_rational(v) for v in spec.values],
            "default": format_rational(spec.default),
        }
    if isinstance(spec, Periodic):
        return {
            "kind": "periodic",
            "period": spec.period,
            "values": [format_rational(v) for v in spec.values],
            "offset": spec.offset,
        }
    if isinstance(spec, ResiduePolynomial):
        return {
            "kind": "residue_poly",
            "modulus": spec.modulus,
            "per_class": {
                str(residue): [format_rational(c) for c in poly]
                for residue, poly in sorted(spec.per_class.items())
            },
        }
    if isinstance(spec, GeometricSupport):
        return {
            "kind": "geometric_support",
            "scale": spec.scale,
            "shift": spec.shift,
            "value": format_rational(spec.value),
            "allow_negative_m": spec.allow_negative_m,
        }
    raise ValueError(f"not a sequence spec: {spec!r}")


def sequence_from_json(data: Any) -> SequenceSpec:
    if not isinstance(data, dict):
        raise ValueError(f"sequence spec must be a JSON object, got {data!r}")
    kind = data.get("kind")
    if kind == "finite_table":
        return FiniteTable(
            anchor=_int(data["anchor"], "anchor"),
            values=tuple(parse_rational(v) for v in data["values"]),
            default=parse_rational(data.get("default", "0/1")),
        )
    if kind == "periodic":
        return Periodic(
            period=_int(data["period"], "period"),
            values=tuple(parse_rational(v) for v in data["values"]),
            offset=_int(data.get("offset", 0), "offset"),
        )
    if kind == "residue_poly":
        per_class = {
            int(residue): tuple(parse_rational(c) for c in poly)
            for residue, poly in data["per_class"].items()
        }
        return ResiduePolynomial(modulus=_int(data["modulus"], "modulus"), per_class=per_class)
    if kind == "geometric_support":
        return GeometricSupport(
            scale=_int(data["scale"], "scale"),
            shift=_int(data.get("shift", 0), "shift"),
            value=parse_rational(data.get("value", "1/1")),
            allow_negative_m=bool(data.get("allow_negative_m", False)),
        )
    raise ValueError(f"unknown sequence kind: {kind!r}")


def operator_to_json(op: OperatorSpec) -> dict:
    return {
        "order": op.order,
        "coeffs": [sequence_to_json(a) for a in op.coeffs],
    }


def operator_from_json(data: Any) -> OperatorSpec:
    if not isinstance(data, dict) or "coeffs" not in data:
        raise ValueError("operator JSON must be an object with a 'coeffs' list")
    coeffs = tuple(sequence_from_json(c) for c in data["coeffs"])
    op = OperatorSpec(coeffs)
    declared = data.get("order")
    if declared is not None and _int(declared, "order") != op.order:
        raise ValueError(
            f"declared order {declared} does not match {len(coeffs)} coefficients"
        )
    return op


def finite_solution_to_json(x: FiniteSolution) -> dict:
    return {
        "anchor": x.anchor,
        "values": [format_rational(v) for v in x.values],
    }


def finite_solution_from_json(data: Any) -> FiniteSolution:
    if not isinstance(data, dict):
        raise ValueError("finite solution JSON must be an object")
    return FiniteSolution(
        anchor=_int(data["anchor"], "anchor"),
        values=tuple(parse_rational(v) for v in data["values"]),
    )


def kernel_basis_to_json(kb: KernelBasis) -> dict:
    return {
        "window": _window_to_json(kb.window),
        "vectors": [[format_rational(v) for v in vec] for vec in kb.vectors],
    }


def kernel_basis_from_json(data: Any) -> KernelBasis:
    return KernelBasis(
        window=_window_from_json(data["window"]),
        vectors=tuple(
            tuple(parse_rational(v) for v in vec) for vec in data["vectors"]
        ),
    )


def dimension_certificate_to_json(cert: DimensionCertificate) -> dict:
    return {
        "kind": "dimension_certificate",
        "k": cert.k,
        "window": _window_to_json(cert.window),
        "solutions": [finite_solution_to_json(s) for s in cert.solutions],
    }


def dimension_certificate_from_json(data: Any) -> DimensionCertificate:
    return DimensionCertificate(
        k=_int(data["k"], "k"),
        window=_window_from_json(data["window"]),
        solutions=tuple(finite_solution_from_json(s) for s in data["solutions"]),
    )


def partial_lacunary_to_json(partial: PartialLacunarySolution) -> dict:
    return {
        "kind": "partial_lacunary",
        "ray": partial.ray,
        "blocks": [finite_solution_to_json(b) for b in partial.blocks],
        "gap_profile": list(partial.gap_profile),
    }


def partial_lacunary_from_json(data: Any) -> PartialLacunarySolution:
    return PartialLacunarySolution(
        blocks=tuple(finite_solution_from_json(b) for b in data["blocks"]),
        gap_profile=tuple(_int(g, "gap") for g in data["gap_profile"]),
        ray=data["ray"],
    )


def inconclusive_to_json(outcome: Inconclusive) -> dict:
    out: dict[str, Any] = {"kind": "inconclusive", "reason": outcome.reason}
    if outcome.best_kernel_dim is not None:
        out["best_kernel_dim"] = outcome.best_kernel_dim
    if outcome.best_gap is not None:
        out["best_gap"] = outcome.best_gap
    return out


def object_to_json(obj: Any) -> dict:
    """Serialize any certificate-like object by type dispatch."""
    if isinstance(obj, DimensionCertificate):
        return dimension_certificate_to_json(obj)
    if isinstance(obj, PartialLacunarySolution):
        return partial_lacunary_to_json(obj)
    if isinstance(obj, KernelBasis):
        return kernel_basis_to_json(obj)
    if isinstance(obj, Inconclusive):
        return inconclusive_to_json(obj)
    if isinstance(obj, FiniteSolution):
        return finite_solution_to_json(obj)
    if isinstance(obj, OperatorSpec):
        return operator_to_json(obj)
    raise ValueError(f"no JSON form for {type(obj).__name__}")


def object_from_json(data: Any) -> Any:
    """Parse a certificate-like object, dispatching on 'kind' or shape.

    A kernel basis serializes without a 'kind' tag (its two-field shape is
    its signature), so shape detection keeps round trips working.
    """
    if not isinstance(data, dict):
        raise ValueError("expected a JSON object")
    kind = data.get("kind")
    if kind == "dimension_certificate":
        return dimension_certificate_from_json(data)
    if kind == "partial_lacunary":
        return partial_lacunary_from_json(data)
    if kind is not None:
        raise ValueError(f"unknown certificate kind: {kind!r}")
    if "vectors" in data and "window" in data:
        return kernel_basis_from_json(data)
    raise ValueError("unrecognized certificate JSON shape")


def dumps_canonical(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"
