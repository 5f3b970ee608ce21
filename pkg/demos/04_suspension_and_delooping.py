#!/usr/bin/env python3
"""Suspension, free monoidal generators, and the wedge delooping.

The suspension collapses the marked edge of the one-input complex to a
point, leaving a single object whose morphism object is the input.  The
free k-fold generator is the k-cell with its boundary collapsed; suspending
it gives the next one.  The wedge delooping is built independently and is
isomorphic to the suspension level by level.
"""

from precats import (PointedPrecat, Window, delooping, discrete, iso_windowed,
                     nerve, object_of, sigma_free, suspension,
                     FiniteCategory)

W = Window(2)

# sigma^0 is two points; each sigma^{k+1} is the suspension of sigma^k.
s0 = sigma_free(0, 1)
print("sigma0 objects:", len(s0.space.cells(object_of(1, []))))
for k in (0, 1, 2):
    susp = suspension(sigma_free(k, k + 1))
    target = sigma_free(k + 1, k + 2)
    iso = iso_windowed(susp.precat, target.space, W)
    print(f"suspend(sigma{k}) == sigma{k + 1}?", iso is not None)

# The suspension has one object; its endomorphism object receives the input.
A = PointedPrecat(nerve(FiniteCategory.interval(), 1), 0)
S = suspension(A)
print("suspension objects:", len(S.precat.cells(object_of(2, []))))
print("loops map natural?", not S.loops.naturality_violations(W))

# The wedge delooping: level p is p copies of the input glued at the base
# point.  Built directly, then compared against the suspension pushout.
for name, pointed in [("two points", PointedPrecat(discrete(1, (0, 1)), 0)),
                      ("interval nerve", A),
                      ("sigma1", sigma_free(1, 1))]:
    X = delooping(pointed)
    print(f"delooping({name}) == suspension?",
          iso_windowed(X, suspension(pointed).precat, W) is not None)

X = delooping(PointedPrecat(discrete(1, (0, 1)), 0))
print("wedge sizes at (p):",
      [X.size(object_of(2, [p])) for p in (1, 2)])
