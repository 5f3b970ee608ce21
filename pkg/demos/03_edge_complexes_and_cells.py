#!/usr/bin/env python3
"""Edge complexes on a simplex of morphism objects, their faces, and the
cell/boundary tower built from them.

The complex on inputs E1..Ek has objects 0..k and carries the product
E_{i+1} x ... x E_j along the edge i -> j; the cell tower iterates the
one-input complex starting from the point.
"""

from precats import (Window, cell, discrete, dump_json, hom_precat,
                     is_cofibration, iso_windowed, nerve, object_of, point,
                     upsilon, upsilon_face, FiniteCategory)

W = Window(2)

# The one-input complex on the point is the interval nerve.
U = upsilon([point(0)])
print("complex on the point == interval nerve?",
      iso_windowed(U, nerve(FiniteCategory.interval(), 1), Window(3)) is not None)

# Two inputs: the long edge carries the product.
E = discrete(0, ("e1", "e2"))
F = discrete(0, ("f1", "f2", "f3"))
U2 = upsilon([E, F])
print("cells over the long edge 0->2:",
      len(hom_precat(U2, 1, (0, 2)).cells(object_of(0, []))))

# Faces: drop an end vertex, or merge two edges into their product.
for which in ("drop_last", "drop_first", ("merge", 1)):
    face = upsilon_face([E, F], which)
    print(f"face {which}: cofibration?", is_cofibration(face, W),
          " natural?", not face.naturality_violations(W))

# The cell tower: cell i is the i-fold complex on the point; its boundary
# iterates the complex on the empty presheaf.
for i, n in [(0, 2), (1, 2), (2, 2)]:
    data = cell(i, n)
    print(f"cell {i} in dim {n}: level (1) ->",
          data.total.size(object_of(n, [1])),
          "| boundary ->", data.boundary.size(object_of(n, [1])))

# Everything serializes to a canonical windowed dump (stable byte-for-byte).
print("dump preview:", dump_json(U, Window(1))[:120], "...")
