#!/usr/bin/env python3
"""Corner maps, the dimension-0 minimal-dimension table, and the gluing
identities behind the lower bound for corner maps.

In dimension 0 the minimal dimension of a map of sets is infinity for a
bijection, 1 for a surjection and 0 otherwise; the corner maps of the two
generating inclusions realize the additive lower bound exactly.  One level
up, products of one-input complexes split into triangle gluings.
"""

from precats import (Window, cell, discrete, iso_windowed, min_dim_map0,
                     point, pushout_product, square_decomposition)
from precats.suite import run_suite

# The two generating inclusions of dimension 0: nothing into the point and
# two points onto one.
a = cell(0, 0).inclusion
b = cell(1, 0).inclusion
print("m(a) =", min_dim_map0(a).value, " m(b) =", min_dim_map0(b).value)

for name, f, g in [("a^a", a, a), ("a^b", a, b), ("b^a", b, a), ("b^b", b, b)]:
    corner = pushout_product(f, g)
    print(f"m({name}) =", min_dim_map0(corner.map).value)

# The square: a product of two one-input complexes is two triangles glued
# along the diagonal edge labelled by the product.
lhs, rhs = square_decomposition(discrete(0, (0, 1)), point(0))
print("square splits?", iso_windowed(lhs, rhs, Window(3)) is not None)

# Off-by-one indexing of the edge labels (kept as a negative control)
# breaks the same identity by a plain cell count.
bad_lhs, bad_rhs = square_decomposition(discrete(0, (0, 1)), point(0),
                                        legacy=True)
print("legacy square fails?", iso_windowed(bad_lhs, bad_rhs, Window(3)) is None)

# The whole identity suite in one call (same entries the CLI runs).
result = run_suite(2)
for entry in result.entries:
    print(f"{'PASS' if entry.passed else 'FAIL'} {entry.name:18s}"
          f" {entry.seconds:6.2f}s")
