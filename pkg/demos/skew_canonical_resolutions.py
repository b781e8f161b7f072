"""Canonical resolutions of skew polynomial algebras by iterated cones.

Adjoining a variable to a skew polynomial algebra extends its resolution by
a mapping cone; the extension map is the new variable times an invertible
diagonal whose scalars follow a simple recursion over the commutation
matrix.  Iterating from one variable yields a resolution with monomial
entries, chain-isomorphic over scalars to the one computed degree by degree.
"""

from fractions import Fraction
from math import comb

from quadralg import (QQ, QuadraticPresentation, canonical_skew_resolution,
                      cone_extension, extension_scalars, linear_resolution,
                      scalar_chain_isomorphism)
from quadralg.resolutions import FreeComplex, FreeModuleMap

print("--- one variable, extended by q = 5 ---")
base_pres = QuadraticPresentation.skew(QQ, ["x1"], [[1]])
d1 = FreeModuleMap(base_pres, (0,), (1,), [[base_pres.generator(0)]])
base = FreeComplex(base_pres, "right", [d1], {"skew_canonical": True})
cone = cone_extension(base, [Fraction(5)], new_name="x2")
print("extension scalars per level:", extension_scalars([[1]], [Fraction(5)]))
for i, m in enumerate(cone.maps, 1):
    print(f"  d{i} =", [[str(e) for e in row] for row in m.entries])

print("\n--- three variables with parameters 2, 3, 5 ---")
q = [[1, 2, 3], [Fraction(1, 2), 1, 5], [Fraction(1, 3), Fraction(1, 5), 1]]
A = QuadraticPresentation.skew(QQ, ["x1", "x2", "x3"], q)
canon = canonical_skew_resolution(A, length=4)
print("ranks:", canon.ranks(), " (binomials:",
      [comb(3, i) for i in range(5)], ")")
print("every entry is a scalar times one variable:",
      all(len(e.coords) <= 1
          for m in canon.maps for row in m.entries for e in row))
for i, m in enumerate(canon.maps[:3], 1):
    print(f"  d{i} =", [[str(e) for e in row] for row in m.entries])

lin = linear_resolution(A, "right", 4)
phis = scalar_chain_isomorphism(canon, lin)
print("chain-isomorphic to the degree-by-degree resolution:",
      phis is not None)

print("\n--- all parameters 1: the alternating-sign pattern ---")
C = QuadraticPresentation.commutative(QQ, ["x1", "x2", "x3", "x4"])
koszul = canonical_skew_resolution(C)
print("ranks:", koszul.ranks())
signs = {str(c) for m in koszul.maps for row in m.entries for e in row
         for c in e.coords.values()}
print("entry coefficients:", sorted(signs))
