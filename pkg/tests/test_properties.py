"""Cross-module invariant properties on seeded random instances."""

import random
from fractions import Fraction

import pytest
from math import comb

from quadralg.algebra import QuadraticPresentation, is_normal
from quadralg.exactlinalg import exact_rank
from quadralg.groebner import Ideal, groebner, radical_member, variety_equal
from quadralg.linearforms import LinearFormMatrix
from quadralg.polynomials import PolyRing
from quadralg.resolutions import linear_resolution
from quadralg.scalars import QQ
from conftest import sum_of_squares


def random_skew(rng, n, names=None):
    q = [[Fraction(1)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            num = rng.randint(1, 3)
            den = rng.randint(1, 3)
            q[i][j] = Fraction(num, den)
            q[j][i] = Fraction(den, num)
    return QuadraticPresentation.skew(
        QQ, names or [f"x{k+1}" for k in range(n)], q)


def test_random_skew_hilbert_dims():
    rng = random.Random(101)
    for _ in range(6):
        n = rng.randint(2, 3)
        pres = random_skew(rng, n)
        for d in range(7):
            assert pres.dim(d) == comb(n + d - 1, d)


def test_random_skew_resolutions_verify():
    rng = random.Random(55)
    for _ in range(3):
        pres = random_skew(rng, 3)
        L = linear_resolution(pres, "right", 4)
        assert L.ranks()[:5] == [comb(3, i) for i in range(5)]
        assert L.meta["verification"].is_exact()
        assert L.meta["verification"].minimal


def test_groebner_random_consistency():
    """Ideal membership implies radical membership; the reduced basis
    reduces its own generators to zero."""
    rng = random.Random(77)
    ring = PolyRing(QQ, ["x", "y", "z"])
    gens_pool = ring.gens()
    for _ in range(8):
        gens = []
        for _ in range(2):
            f = ring.zero()
            for _ in range(2):
                mono = ring.one()
                for _ in range(rng.randint(1, 2)):
                    mono = mono * gens_pool[rng.randrange(3)]
                f = f + mono.scale(rng.randint(-2, 2))
            if f:
                gens.append(f)
        if not gens:
            continue
        ideal = Ideal(ring, gens)
        gb = ideal.groebner()
        for g in gens:
            assert gb.reduces_to_zero(g)
        combo = gens[0] * gens_pool[rng.randrange(3)]
        assert radical_member(combo, ideal)


def test_variety_equal_is_reflexive_and_symmetric():
    ring = PolyRing(QQ, ["x", "y"])
    x, y = ring.gens()
    ideals = [Ideal(ring, [x]), Ideal(ring, [x * x]),
              Ideal(ring, [x * y]), Ideal(ring, [])]
    for I in ideals:
        assert variety_equal(I, I)
    for I in ideals:
        for J in ideals:
            assert variety_equal(I, J) == variety_equal(J, I)


def test_normalizing_identity_on_random_skew_monomials():
    rng = random.Random(13)
    for _ in range(4):
        pres = random_skew(rng, 3)
        i, j = rng.randrange(3), rng.randrange(3)
        f = pres.generator(i) * pres.generator(j)
        sigma = is_normal(f)
        assert sigma is not None
        for _ in range(3):
            a = pres.generator(rng.randrange(3)) * \
                pres.generator(rng.randrange(3))
            assert f * a == sigma(a) * f


def test_determinantal_rank_consistency_random():
    rng = random.Random(21)
    ring = PolyRing(QQ, ["x", "y", "z"])
    for _ in range(10):
        s, r = rng.randint(2, 3), rng.randint(2, 3)
        M = LinearFormMatrix(ring, [[(rng.randint(-2, 2), rng.randint(-2, 2),
                                      rng.randint(-2, 2)) for _ in range(r)]
                                    for _ in range(s)])
        p = [QQ(rng.randint(-2, 2)) for _ in range(3)]
        if not any(p):
            continue
        rank = exact_rank(M.eval_at(p))
        t = min(s, r)
        minors = M.minors(t)
        vanish = all(m.evaluate(p) == 0 for m in minors)
        assert vanish == (rank < t)


def test_quotient_dims_bounded_random():
    rng = random.Random(33)
    for _ in range(3):
        pres = random_skew(rng, 3)
        f = sum_of_squares(pres)
        if not f:
            continue
        B = pres.quotient(f)
        for d in range(6):
            assert B.dim(d) <= pres.dim(d)
        assert B.dim(0) == 1 and B.dim(1) == pres.n


def test_groebner_multi_order_fuzz_against_oracle():
    """Random ideals under all three orders against the sympy oracle."""
    sympy = pytest.importorskip("sympy")
    from quadralg.polynomials import DEGREVLEX, DEGLEX, LEX
    rng = random.Random(2024)
    sym_vars = sympy.symbols("x y z")
    pairs = [(DEGREVLEX, "grevlex"), (DEGLEX, "grlex"), (LEX, "lex")]
    runs = 0
    for trial in range(45):
        nvars = rng.randint(2, 3)
        vars_here = sym_vars[:nvars]
        my_order, sym_order = pairs[trial % 3]
        ring = PolyRing(QQ, ["x", "y", "z"][:nvars], my_order)
        gens = []
        for _ in range(rng.randint(1, 3)):
            f = ring.zero()
            for _ in range(rng.randint(1, 3)):
                exps = tuple(rng.randint(0, 2) for _ in range(nvars))
                c = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
                if c:
                    f = f + ring.monomial(exps, c)
            if f:
                gens.append(f)
        if not gens:
            continue
        runs += 1
        gb = groebner(gens)

        def to_sympy(p):
            e = sympy.Integer(0)
            for exps, c in p.terms.items():
                t = sympy.Rational(c)
                for v, k in zip(vars_here, exps):
                    t *= v ** k
                e += t
            return e

        def to_mine(expr):
            poly = sympy.Poly(expr, *vars_here)
            return ring.from_terms((tuple(m), Fraction(str(c)))
                                   for m, c in poly.terms()).primitive()

        sgb = sympy.groebner([to_sympy(g) for g in gens], *vars_here,
                             order=sym_order)
        mine = {frozenset(p.primitive().terms.items()) for p in gb.polys}
        theirs = {frozenset(to_mine(e).terms.items()) for e in sgb.exprs}
        assert mine == theirs
    assert runs >= 40


def test_whole_pipeline_fuzz_skew_monomial_quadrics():
    """Random skew algebras, random normal monomial quadric: quotient
    resolution ranks/minimality, tower identities, semi-standardness,
    point-exactness and the geometric pair all hold."""
    from math import comb as _comb
    from quadralg.algebra import is_normal as _is_normal
    from quadralg.geometry import (check_g1, check_point_exact,
                                   is_semi_standard, sigma_at,
                                   vr_membership, _small_points_on)
    from quadralg.resolutions import geometry_ring
    from conftest import quotient_resolutions
    rng = random.Random(31337)
    for trial in range(6):
        n = rng.randint(2, 3)
        q = [[Fraction(1)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                v = Fraction(rng.randint(1, 5), rng.randint(1, 5))
                q[i][j] = v
                q[j][i] = 1 / v
        pres = QuadraticPresentation.skew(
            QQ, [f"fz{trial}v{k}" for k in range(n)], q)
        i, j = rng.randrange(n), rng.randrange(n)
        f = pres.generator(i) * pres.generator(j)
        assert _is_normal(f) is not None
        res, towers = quotient_resolutions(pres, f, length=4, internal_cap=6)
        T = res["right"]
        expect = [sum(_comb(n, a - 2 * b) for b in range(a // 2 + 1))
                  for a in range(5)]
        assert T.ranks() == expect
        assert T.meta["verification"].minimal
        for tow in towers.values():
            for k in (1, 2):
                for l in range(0, 4 - 2 * k + 1):
                    assert tow.splitting_identity_holds(k, l)
        B = T.presentation
        assert is_semi_standard(B, res)
        assert check_point_exact(B, "right", 2, res).ok
        assert check_point_exact(B, "left", 2, res).ok
        pair = check_g1(B, res)
        assert pair is not None
        ring = geometry_ring(B)
        for p in _small_points_on(pair.ideal, ring, 1)[:3]:
            image = sigma_at(pair, p)
            assert vr_membership(B, p, image)


def test_sign_pattern_quadric_quotients():
    """Random +-1 sign patterns in four variables: the sum-of-squares
    quotient is always semi-standard, satisfies (G1) and is point-exact."""
    from quadralg.geometry import (check_g1, check_point_exact,
                                   is_semi_standard)
    from conftest import quotient_resolutions
    rng = random.Random(99)
    for trial in range(3):
        q = [[1] * 4 for _ in range(4)]
        for i in range(4):
            for j in range(i + 1, 4):
                s = rng.choice([1, -1])
                q[i][j] = s
                q[j][i] = s
        pres = QuadraticPresentation.skew(
            QQ, [f"s{trial}x{k}" for k in range(4)], q)
        f = sum_of_squares(pres)
        res, _ = quotient_resolutions(pres, f, length=5, internal_cap=7)
        B = res["right"].presentation
        assert is_semi_standard(B, res)
        assert check_g1(B, res) is not None
        assert check_point_exact(B, "right", 2, res).ok
        assert check_point_exact(B, "left", 2, res).ok


def test_opposite_involution_random():
    rng = random.Random(44)
    words = [(u, v) for u in range(3) for v in range(3)]
    for _ in range(6):
        rels = []
        for w in rng.sample(words, 3):
            rel = {w: QQ(1)}
            w2 = rng.choice(words)
            if w2 != w:
                rel[w2] = QQ(rng.randint(-2, 2))
            rels.append(rel)
        pres = QuadraticPresentation.create(QQ, ["x", "y", "z"], rels)
        assert pres.opposite().opposite() is pres
