"""Round trips and canonical forms for the file formats."""

from fractions import Fraction

import pytest
from hypothesis import given, settings

from lacunary import (
    DimensionCertificate,
    FiniteSolution,
    FiniteTable,
    GeometricSupport,
    Inconclusive,
    PartialLacunarySolution,
    Periodic,
    ResiduePolynomial,
    Window,
    build_lacunary,
    certify_dimension,
    finite_support_kernel,
)
from lacunary.corpus import fibonacci_operator, vanish_on_multiples_operator
from lacunary.jsonio import (
    dumps_canonical,
    finite_solution_from_json,
    finite_solution_to_json,
    format_rational,
    kernel_basis_from_json,
    kernel_basis_to_json,
    object_from_json,
    object_to_json,
    operator_from_json,
    operator_to_json,
    parse_rational,
    sequence_from_json,
    sequence_to_json,
)

from .strategies import sequence_specs


def test_format_rational_canonical():
    assert format_rational(Fraction(0)) == "0/1"
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(Fraction(5)) == "5/1"
    assert format_rational(Fraction(2, -4)) == "-1/2"


def test_parse_rational():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-7") == Fraction(-7)
    assert parse_rational(5) == Fraction(5)
    with pytest.raises(ValueError):
        parse_rational(True)
    with pytest.raises(ValueError):
        parse_rational(0.5)
    with pytest.raises(ValueError):
        parse_rational(None)


def test_sequence_round_trips_by_hand():
    specs = [
        FiniteTable(-3, (Fraction(1), Fraction(0), Fraction(-2, 3))),
        FiniteTable(0, (Fraction(1),), default=Fraction(7)),
        Periodic(3, (Fraction(1), Fraction(0), Fraction(2)), offset=1),
        ResiduePolynomial(4, {1: (Fraction(1), Fraction(1, 2)), 3: (Fraction(-1),)}),
        GeometricSupport(3, 1, Fraction(1)),
        GeometricSupport(12, 0, Fraction(2, 5), allow_negative_m=True),
    ]
    for spec in specs:
        data = sequence_to_json(spec)
        assert sequence_from_json(data) == spec
        # canonical text is stable across a decode/encode cycle
        assert dumps_canonical(sequence_to_json(sequence_from_json(data))) == (
            dumps_canonical(data)
        )


def test_sequence_json_defaults():
    table = sequence_from_json(
        {"kind": "finite_table", "anchor": 0, "values": ["1/1"]}
    )
    assert table.default == 0
    geo = sequence_from_json({"kind": "geometric_support", "scale": 2})
    assert geo.shift == 0 and geo.value == 1 and not geo.allow_negative_m
    with pytest.raises(ValueError):
        sequence_from_json({"kind": "mystery"})
    with pytest.raises(ValueError):
        sequence_from_json(["finite_table"])


@settings(max_examples=60, deadline=None)
@given(sequence_specs)
def test_sequence_round_trip_property(spec):
    assert sequence_from_json(sequence_to_json(spec)) == spec


def test_operator_round_trip_and_order_check():
    op = vanish_on_multiples_operator(2)
    data = operator_to_json(op)
    assert data["order"] == 2
    assert operator_from_json(data) == op
    data["order"] = 3
    with pytest.raises(ValueError):
        operator_from_json(data)
    del data["order"]
    assert operator_from_json(data) == op
    with pytest.raises(ValueError):
        operator_from_json({"order": 2})


def test_finite_solution_round_trip():
    x = FiniteSolution(-4, (Fraction(1), Fraction(0), Fraction(-3, 7)))
    assert finite_solution_from_json(finite_solution_to_json(x)) == x
    with pytest.raises(ValueError):
        finite_solution_from_json({"anchor": 0, "values": ["0/1"]})


def test_kernel_basis_round_trip():
    kb = finite_support_kernel(vanish_on_multiples_operator(2), Window(0, 12))
    data = kernel_basis_to_json(kb)
    assert data["window"] == [0, 12]
    back = kernel_basis_from_json(data)
    assert back == kb
    assert object_from_json(data) == kb


def test_certificate_round_trip():
    cert = certify_dimension(vanish_on_multiples_operator(2), 5, 100)
    assert isinstance(cert, DimensionCertificate)
    data = object_to_json(cert)
    assert data["kind"] == "dimension_certificate"
    assert object_from_json(data) == cert


def test_partial_lacunary_round_trip():
    out = build_lacunary(vanish_on_multiples_operator(2), 10, 200)
    assert isinstance(out, PartialLacunarySolution)
    data = object_to_json(out)
    assert data["kind"] == "partial_lacunary"
    assert object_from_json(data) == out


def test_inconclusive_to_json_fields():
    out = certify_dimension(fibonacci_operator(), 1, 50)
    assert isinstance(out, Inconclusive)
    data = object_to_json(out)
    assert data["kind"] == "inconclusive"
    assert data["best_kernel_dim"] == 0
    assert "best_gap" not in data
    assert isinstance(data["reason"], str) and data["reason"]


def test_object_from_json_rejections():
    with pytest.raises(ValueError):
        object_from_json({"kind": "wat"})
    with pytest.raises(ValueError):
        object_from_json({"window": [0, 1]})
    with pytest.raises(ValueError):
        object_from_json(7)


def test_object_to_json_rejects_unknown():
    with pytest.raises(ValueError):
        object_to_json(Window(0, 1))


def test_dumps_canonical_is_byte_stable():
    a = dumps_canonical({"b": 1, "a": [1, 2]})
    b = dumps_canonical({"a": [1, 2], "b": 1})
    assert a == b
    assert a.endswith("\n")
    assert a == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'
