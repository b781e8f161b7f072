"""Quotienting by a non-normal element destroys semi-standardness.

The 3-dimensional algebra with relations xy + yx + 2z^2, yz + zy + 2x^2,
zx + xz + 2y^2 behaves like a polynomial ring homologically.  The element
f = xy is regular but NOT normal; the quotient B = A/(f) still has linear
second differentials on both sides, but their 3-minor loci differ: the point
(1 : 0 : -1) lies on the right point variety and not on the left one.
"""

from quadralg import (QQ, ProjPoint, QuadraticPresentation, is_normal,
                      is_regular_up_to, is_semi_standard, linear_resolution,
                      point_variety, radical_member)

A = QuadraticPresentation.create(QQ, ["x", "y", "z"], [
    {(0, 1): 1, (1, 0): 1, (2, 2): 2},
    {(1, 2): 1, (2, 1): 1, (0, 0): 2},
    {(2, 0): 1, (0, 2): 1, (1, 1): 2},
])
print("ambient algebra dims:", [A.dim(d) for d in range(5)])
x, y = A.generator(0), A.generator(1)
f = x * y
print("f = x*y regular up to degree 4:", is_regular_up_to(f, 4))
print("f = x*y normal:", is_normal(f) is not None)

B = A.quotient(f)
print("\nquotient B = A/(x*y):", B)
print("B dims:", [B.dim(d) for d in range(5)])

res = {side: linear_resolution(B, side, 2, check="report")
       for side in ("right", "left")}
right = point_variety(B, "right", res)
left = point_variety(B, "left", res)
print("\nright point variety (3-minor ideal):")
for g in right.ideal.gens:
    print("  ", g)
print("left point variety:")
for g in left.ideal.gens:
    print("  ", g)

ring = right.ideal.ring
xx, yy, zz = ring.gens()
cubic = 10 * xx * yy * zz - 2 * (yy ** 3 + xx ** 3 + zz ** 3)
print("\nthe symmetric cubic lies in both radicals:",
      radical_member(cubic, right.ideal) and
      radical_member(cubic, left.ideal))

w = ProjPoint([1, 0, -1])
print(f"\nwitness {w}:")
print("  rank of the right matrix there:", right.matrix.rank_at(w),
      "(drops below 3: on the right variety)")
print("  rank of the left matrix there:", left.matrix.rank_at(w),
      "(full: off the left variety)")
print("semi-standard:", is_semi_standard(B, res))
