"""Cutting one lacunary solution into many independent finite pieces.

Run as: python3 demos/03_splitting_lacunary_solutions.py
"""

from lacunary import (
    DimensionCertificate,
    Window,
    split_lacunary,
    verify_dimension_certificate,
)
from lacunary.corpus import geometric_lacunary_sequence, vanish_on_multiples_operator

op = vanish_on_multiples_operator(2)
lac = geometric_lacunary_sequence(2)

# The sequence is 1 on the doubling set 3 * 2^m + 1 and solves the
# equation globally.  Wherever it stays zero for at least order + 1
# consecutive indices, the equation cannot couple the two sides, so
# cutting there produces independent solutions.
w = Window(0, 1000)
pieces = split_lacunary(op, lac, w)
print(len(pieces), "pieces on [0, 1000]:")
for p in pieces:
    print("  support", sorted(p.support_set()))

# Disjoint supports make the pieces linearly independent, which is
# exactly what a dimension certificate packages.
cert = DimensionCertificate(len(pieces), w, tuple(pieces))
print("pieces form a valid certificate:", verify_dimension_certificate(op, cert))

# A solution without long zero runs in the window yields no cuts.
from fractions import Fraction

from lacunary import FiniteTable
from lacunary.corpus import fibonacci_operator

fib_start = FiniteTable(0, tuple(Fraction(v) for v in (1, 1, 2, 3, 5, 8, 13, 21)))
print("fibonacci pieces:", split_lacunary(fibonacci_operator(), fib_start, Window(0, 7)))
