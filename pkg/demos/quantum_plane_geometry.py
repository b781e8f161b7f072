"""The 2-dimensional quantum plane, end to end.

k<x,y>/(xy - 2yx) is the simplest noncommutative quadratic algebra with good
homological behaviour: its trivial module has a length-2 linear resolution on
each side, both point varieties are all of P^1, and the point-variety graph
is the graph of the diagonal automorphism (p1 : p2) -> (p1 : 2 p2).
"""

from quadralg import (QQ, ProjPoint, QuadraticPresentation, check_g1,
                      check_point_exact, is_semi_standard, linear_resolution,
                      point_variety, pointwise_complex_exact, sigma_at,
                      vr_membership)

A = QuadraticPresentation.create(QQ, ["x", "y"], [{(0, 1): 1, (1, 0): -2}])
print("algebra:", A)
print("graded dimensions:", [A.dim(d) for d in range(7)])

right = linear_resolution(A, "right", 3)
left = linear_resolution(A, "left", 3)
print("\nright resolution ranks:", right.ranks())
print("second differential (a column of linear forms):")
print(right.geometric_matrix(2))
print("left-side matrix of forms:")
print(left.geometric_matrix(2))
print("verification:", right.meta["verification"].summary())

print("\npoint varieties:")
for side in ("right", "left"):
    pv = point_variety(A, side)
    desc = "all of P^1 (zero ideal)" if pv.ideal.is_zero_ideal() else \
        [str(g) for g in pv.ideal.gens]
    print(f"  {side}: {desc}")
print("semi-standard:", is_semi_standard(A))

pair = check_g1(A)
print("\n(G1) condition holds:", pair is not None)
for coords in [(1, 1), (1, 0), (0, 1), (3, 5)]:
    p = ProjPoint(coords)
    q = sigma_at(pair, p)
    print(f"  sigma{p} = {q};  pairing vanishes at (p, sigma p):",
          vr_membership(A, p, q))

print("\npoint-exactness up to degree 2:")
rep_r, rep_l = check_point_exact(A, "both", 2)
print("  right:", rep_r.ok, " left:", rep_l.ok)
print("pointwise scalar complex exact at (1:1):",
      pointwise_complex_exact(A, pair, ProjPoint([1, 1]), 3))
