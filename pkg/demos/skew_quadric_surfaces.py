"""Quadric quotients of plus-minus-one skew algebras in four variables.

Quotienting a 4-dimensional skew polynomial algebra with commutation signs
+-1 by the sum of squares gives a graded quadric hypersurface algebra.  Its
point variety comes out of the 4-minors of the second differential of the
quotient resolution: a smooth quadric surface in the commutative case, two
points plus two plane conics in a mixed-sign case, and twelve reduced points
in the all-minus-one case.  All cases are semi-standard and point-exact.
"""

from quadralg import (QQ, Ideal, ProjPoint, QuadraticPresentation, check_g1,
                      check_point_exact, intersect_all, is_semi_standard,
                      linear_resolution, opposite_element, point_variety,
                      shamash, sigma_at, variety_equal)
from quadralg.resolutions import FreeComplex


def quadric_quotient(q, length=6):
    A = QuadraticPresentation.skew(QQ, ["x1", "x2", "x3", "x4"], q)
    f = None
    for i in range(4):
        g = A.generator(i)
        f = g * g if f is None else f + g * g
    T, _ = shamash(A, linear_resolution(A, "right", length), f,
                   length=length)
    op = A.opposite()
    T0, _ = shamash(op, linear_resolution(op, "right", length),
                    opposite_element(f), length=length)
    left = FreeComplex(T0.presentation, "left", T0.maps, T0.meta)
    return A, T.presentation, {"right": T, "left": left}


print("--- all signs +1: the commutative quadric surface ---")
_, B, res = quadric_quotient([[1] * 4 for _ in range(4)])
pv = point_variety(B, "right", res)
print("point variety:", [str(g) for g in pv.ideal.gens])
print("semi-standard:", is_semi_standard(B, res))
rep_r, rep_l = check_point_exact(B, "both", 3, res)
print("point-exact up to 3 (right/left):", rep_r.ok, rep_l.ok)

print("\n--- mixed signs: two points and two conics ---")
q2 = [[1, -1, -1, 1], [-1, 1, -1, -1], [-1, -1, 1, -1], [1, -1, -1, 1]]
_, B2, res2 = quadric_quotient(q2, length=4)
pv2 = point_variety(B2, "right", res2)
print("number of distinct normalized 4-minors:", len(pv2.ideal.gens))
ring = pv2.ideal.ring
x1, x2, x3, x4 = ring.gens()
components = [Ideal(ring, [x1, x4, x2 - x3]),
              Ideal(ring, [x1, x4, x2 + x3]),
              Ideal(ring, [x2, -x1**2 + x3**2 - x4**2]),
              Ideal(ring, [x3, -x1**2 + x2**2 - x4**2])]
union = intersect_all(components)
print("equals two points + two plane conics:",
      variety_equal(pv2.ideal, union))

print("\n--- all off-diagonal signs -1: twelve points ---")
q3 = [[1 if i == j else -1 for j in range(4)] for i in range(4)]
_, B3, res3 = quadric_quotient(q3)
pv3 = point_variety(B3, "right", res3)
points = [(1, 0, 0, 1), (1, 0, 0, -1), (0, 1, 0, 1), (0, 1, 0, -1),
          (0, 0, 1, 1), (0, 0, 1, -1), (1, 0, 1, 0), (1, 0, -1, 0),
          (0, 1, 1, 0), (0, 1, -1, 0), (1, 1, 0, 0), (1, -1, 0, 0)]
print("all twelve points lie on the variety:",
      all(pv3.contains_point(ProjPoint(p)) for p in points))
pair = check_g1(B3, res3)
print("(G1) holds:", pair is not None)
orbit = [ProjPoint([1, 0, 0, 1])]
for _ in range(3):
    orbit.append(sigma_at(pair, orbit[-1]))
print("a sigma orbit:", " -> ".join(str(p) for p in orbit))
print("semi-standard:", is_semi_standard(B3, res3))
rep_r, rep_l = check_point_exact(B3, "both", 3, res3)
print("point-exact up to 3 (right/left):", rep_r.ok, rep_l.ok)
