from fractions import Fraction
from itertools import combinations

import pytest

from quadralg.groebner import (Ideal, groebner, intersect, intersect_all,
                               projective_empty, radical_member,
                               variety_equal)
from quadralg.polynomials import PolyRing
from quadralg.scalars import QQ, GF


@pytest.fixture
def rxy():
    return PolyRing(QQ, ["x", "y"])


@pytest.fixture
def rxyz():
    return PolyRing(QQ, ["x", "y", "z"])


def sec5_right_generators(ring):
    x, y, z = ring.gens()
    return [10 * x * y * z - 2 * (y ** 3 + x ** 3 + z ** 3),
            y * (x * y - 2 * z * z),
            y * (z * x - 2 * y * y),
            y * (x * x - 4 * y * z)]


def test_already_reduced_bases(rxy):
    x, y = rxy.gens()
    gb = groebner([x * x, x * y])
    assert {frozenset(p.terms.items()) for p in gb.polys} == \
        {frozenset((x * x).terms.items()), frozenset((x * y).terms.items())}
    gb2 = groebner([x - y, y * y])
    assert len(gb2) == 2


def test_buchberger_closure_property(rxyz):
    """Every S-polynomial of basis pairs reduces to zero, and the original
    generators reduce to zero (full Buchberger criterion, checked directly)."""
    gens = sec5_right_generators(rxyz)
    gb = groebner(gens)
    assert not gb.contains_one()
    for g in gens:
        assert gb.reduces_to_zero(g)
    polys = gb.polys
    for f, g in combinations(polys, 2):
        lmf, lmg = f.lead_monomial(), g.lead_monomial()
        lcm = tuple(max(a, b) for a, b in zip(lmf, lmg))
        mf = rxyz.monomial(tuple(a - b for a, b in zip(lcm, lmf)))
        mg = rxyz.monomial(tuple(a - b for a, b in zip(lcm, lmg)))
        s = mf * f.monic() - mg * g.monic()
        assert gb.reduces_to_zero(s)


def test_groebner_idempotent(rxyz):
    gens = sec5_right_generators(rxyz)
    gb = groebner(gens)
    again = groebner(list(gb.polys))
    assert [p.terms for p in gb.polys] == [p.terms for p in again.polys]


def test_groebner_over_prime_field():
    ring = PolyRing(GF(13), ["x", "y"])
    x, y = ring.gens()
    gb = groebner([x * x - y, y * y - x])
    assert not gb.contains_one()
    assert gb.reduces_to_zero(x ** 4 - x)


def test_radical_membership_basics(rxy):
    x, y = rxy.gens()
    sq = Ideal(rxy, [x * x])
    assert radical_member(x, sq)
    assert not radical_member(y, sq)
    assert radical_member(rxy.zero(), sq)


def test_radical_member_implied_by_membership(rxyz):
    gens = sec5_right_generators(rxyz)
    ideal = Ideal(rxyz, gens)
    gb = ideal.groebner()
    f = gens[0] * rxyz.var(0) + gens[2]
    assert gb.reduces_to_zero(f)
    assert radical_member(f, ideal)


def test_variety_equal_basics(rxy):
    x, y = rxy.gens()
    assert variety_equal(Ideal(rxy, [x]), Ideal(rxy, [x * x]))
    assert not variety_equal(Ideal(rxy, [x]), Ideal(rxy, [y]))
    zero = Ideal(rxy, [])
    assert variety_equal(zero, zero)
    assert not variety_equal(zero, Ideal(rxy, [x]))


def test_projective_empty():
    ring = PolyRing(QQ, ["x1", "x2"])
    a, b = ring.gens()
    assert projective_empty(Ideal(ring, [a, b]))
    assert not projective_empty(Ideal(ring, []))
    # x1^2 + x2^2 has the zero (1 : i) over the algebraic closure
    conic = Ideal(ring, [a * a + b * b])
    assert not projective_empty(conic)
    # evaluation oracle over Gaussian rationals: (1, i) really is a zero
    val = 1 ** 2 + 1j ** 2
    assert val == 0
    with pytest.raises(ValueError):
        projective_empty(Ideal(ring, [a + ring.one()]))


def test_intersection_contains_products(rxy):
    x, y = rxy.gens()
    I = Ideal(rxy, [x])
    J = Ideal(rxy, [y])
    K = intersect(I, J)
    gbK = K.groebner()
    assert gbK.reduces_to_zero(x * y)
    # x alone is not in the intersection
    assert not gbK.reduces_to_zero(x)
    for g in K.gens:
        assert I.groebner().reduces_to_zero(g)
        assert J.groebner().reduces_to_zero(g)


def test_intersection_of_point_ideals():
    ring = PolyRing(QQ, ["x", "y", "z"])
    x, y, z = ring.gens()
    p1 = Ideal(ring, [y, z])          # point (1:0:0)
    p2 = Ideal(ring, [x, z])          # point (0:1:0)
    both = intersect_all([p1, p2])
    for g in both.gens:
        assert g.evaluate([QQ(1), QQ(0), QQ(0)]) == 0
        assert g.evaluate([QQ(0), QQ(1), QQ(0)]) == 0
    # the line through the points is cut out: z vanishes on both
    assert both.groebner().reduces_to_zero(z)
    assert not both.groebner().reduces_to_zero(x)


def test_cached_basis_reused(rxy):
    x, y = rxy.gens()
    ideal = Ideal(rxy, [x * x - y])
    gb1 = ideal.groebner()
    gb2 = ideal.groebner()
    assert gb1 is gb2


def test_zero_ideal_basis_is_empty(rxy):
    assert len(Ideal(rxy, []).groebner()) == 0


def test_groebner_matches_independent_oracle(rxyz):
    """Reduced bases agree with sympy's, up to scalar normalization."""
    sympy = pytest.importorskip("sympy")
    x, y, z = rxyz.gens()
    systems = [
        sec5_right_generators(rxyz),
        [x * x + y * y - z * z, x * y - z * z],
        [x * x - y, y * y - z, x * z - 1],
    ]
    sym_vars = sympy.symbols("x y z")

    def to_sympy(p):
        expr = sympy.Integer(0)
        for e, c in p.terms.items():
            term = sympy.Rational(c)
            for v, k in zip(sym_vars, e):
                term *= v ** k
            expr += term
        return expr

    def to_mine(expr):
        poly = sympy.Poly(expr, *sym_vars)
        return rxyz.from_terms(
            (tuple(mono), Fraction(str(coeff)))
            for mono, coeff in poly.terms()).primitive()

    for gens in systems:
        gb = groebner(gens)
        sgb = sympy.groebner([to_sympy(g) for g in gens], *sym_vars,
                             order="grevlex")
        mine = {frozenset(p.primitive().terms.items()) for p in gb.polys}
        theirs = {frozenset(to_mine(e).terms.items()) for e in sgb.exprs}
        assert mine == theirs


def test_configurable_order():
    from quadralg.polynomials import LEX, DEGREVLEX
    ring = PolyRing(QQ, ["x", "y"])
    x, y = ring.gens()
    gens = [x * x - y, x * y - 1]
    lex_gb = groebner(gens, order=LEX)
    drl_gb = groebner(gens, order=DEGREVLEX)
    # lex eliminates x: some basis element only involves y
    assert any(all(e[0] == 0 for e in p.terms) for p in lex_gb.polys)
    # both bases generate the same ideal (cross-reduction)
    for p in lex_gb.polys:
        assert drl_gb.reduces_to_zero(p)
    for p in drl_gb.polys:
        assert lex_gb.reduces_to_zero(p)
    # idempotence per order
    assert [q.terms for q in groebner(list(lex_gb.polys), order=LEX).polys] \
        == [q.terms for q in lex_gb.polys]
