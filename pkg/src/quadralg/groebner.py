"""Buchberger engine, ideals, and the radical/variety decision procedures.

The reduction core works on integer-coefficient polynomials (fraction-free
pseudo-reduction with content stripping) over QQ, or on residues over F_p;
the public layer speaks CommPoly.  Pair pruning follows the Gebauer-Moeller
update, pair selection is the normal strategy (smallest lcm first).
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd

from .polynomials import CommPoly, EliminateLast
from .scalars import QQ


def _tuple_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _sub_exps(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add_exps(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _int_terms(poly):
    """CommPoly over QQ -> primitive integer term dict (sign preserved)."""
    den = 1
    for c in poly.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    terms = {e: int(c * den) for e, c in poly.terms.items()}
    return _strip_content(terms)


def _strip_content(terms):
    g = 0
    for v in terms.values():
        g = gcd(g, v)
        if g == 1:
            return terms
    if g > 1:
        return {e: v // g for e, v in terms.items()}
    return terms


def _mod_terms(poly, p):
    out = {}
    for e, c in poly.terms.items():
        if isinstance(c, Fraction):
            den = c.denominator % p
            if den == 0:
                raise ZeroDivisionError("denominator divisible by p")
            v = c.numerator * pow(den, -1, p) % p
        else:
            v = c.val % p
        if v:
            out[e] = v
    return out


class _Entry:
    """A basis element: cached lead data plus the term dict."""

    __slots__ = ("lm", "lc", "terms")

    def __init__(self, lm, lc, terms):
        self.lm = lm
        self.lc = lc
        self.terms = terms


def _make_entry(terms, key):
    lm = max(terms, key=key)
    return _Entry(lm, terms[lm], terms)


def _normal_form(terms, basis, key, p):
    """Full normal form; fraction-free over ZZ, monic-style over F_p.

    Over ZZ the result is correct up to a positive scalar (content is
    stripped), which is all the zero-tests and canonical comparisons need.
    """
    work = dict(terms)
    rem = {}
    steps = 0
    while work:
        steps += 1
        if not p and steps % 64 == 0:
            g = 0
            for v in work.values():
                g = gcd(g, v)
                if g == 1:
                    break
            else:
                for v in rem.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
            if g > 1:
                work = {e: v // g for e, v in work.items()}
                rem = {e: v // g for e, v in rem.items()}
        m = max(work, key=key)
        c = work.pop(m)
        if not c:
            continue
        reducer = None
        for g in basis:
            if _divides(g.lm, m):
                reducer = g
                break
        if reducer is None:
            rem[m] = c
            continue
        shift = _sub_exps(m, reducer.lm)
        if p:
            factor = c * pow(reducer.lc, -1, p) % p
            for e, v in reducer.terms.items():
                if e == reducer.lm:
                    continue
                t = _add_exps(e, shift)
                acc = (work.get(t, 0) - factor * v) % p
                if acc:
                    work[t] = acc
                else:
                    work.pop(t, None)
        else:
            g0 = gcd(c, reducer.lc)
            a = abs(reducer.lc // g0)
            if reducer.lc < 0:
                a = -a
            b = c // g0
            if a != 1:
                if a < 0:
                    a = -a
                    b = -b
                for d in (work, rem):
                    for e in d:
                        d[e] *= a
            for e, v in reducer.terms.items():
                if e == reducer.lm:
                    continue
                t = _add_exps(e, shift)
                acc = work.get(t, 0) - b * v
                if acc:
                    work[t] = acc
                else:
                    work.pop(t, None)
    if p:
        return {e: v % p for e, v in rem.items() if v % p}
    return _strip_content(rem)


def _spair(f, g, key, p):
    lcm = _tuple_lcm(f.lm, g.lm)
    sf = _sub_exps(lcm, f.lm)
    sg = _sub_exps(lcm, g.lm)
    if p:
        inv_f = pow(f.lc, -1, p)
        inv_g = pow(g.lc, -1, p)
        out = {}
        for e, v in f.terms.items():
            out[_add_exps(e, sf)] = v * inv_f % p
        for e, v in g.terms.items():
            t = _add_exps(e, sg)
            acc = (out.get(t, 0) - v * inv_g) % p
            if acc:
                out[t] = acc
            else:
                out.pop(t, None)
        return out
    g0 = gcd(f.lc, g.lc)
    cf = g.lc // g0
    cg = f.lc // g0
    out = {}
    for e, v in f.terms.items():
        out[_add_exps(e, sf)] = v * cf
    for e, v in g.terms.items():
        t = _add_exps(e, sg)
        acc = out.get(t, 0) - v * cg
        if acc:
            out[t] = acc
        else:
            out.pop(t, None)
    return _strip_content(out)


def _gm_update(G, pairs, new_index, key):
    """Gebauer-Moeller pair update after appending G[new_index]."""
    t = new_index
    lmh = G[t].lm
    cand = []
    for i in range(t):
        cand.append((i, _tuple_lcm(lmh, G[i].lm)))
    kept = []
    for pos, (i, lcm_i) in enumerate(cand):
        if _coprime(lmh, G[i].lm):
            kept.append((i, lcm_i, True))
            continue
        dominated = False
        for pos2, (j, lcm_j) in enumerate(cand):
            if pos2 == pos or j == i:
                continue
            if lcm_j != lcm_i and _divides(lcm_j, lcm_i):
                dominated = True
                break
            if lcm_j == lcm_i and pos2 < pos:
                dominated = True
                break
        if not dominated:
            kept.append((i, lcm_i, False))
    surviving = []
    for (i, j, lcm_ij) in pairs:
        if not _divides(lmh, lcm_ij):
            surviving.append((i, j, lcm_ij))
            continue
        if _tuple_lcm(G[i].lm, lmh) == lcm_ij or _tuple_lcm(lmh, G[j].lm) == lcm_ij:
            surviving.append((i, j, lcm_ij))
    for i, lcm_i, coprime_flag in kept:
        if not coprime_flag:
            surviving.append((i, t, lcm_i))
    return surviving


def _buchberger(int_polys, key, p):
    G = []
    pairs = []
    for terms in sorted((t for t in int_polys if t),
                        key=lambda t: key(max(t, key=key))):
        nf = _normal_form(terms, G, key, p)
        if nf:
            G.append(_make_entry(nf, key))
            pairs = _gm_update(G, pairs, len(G) - 1, key)
    heap = [(key(lcm), i, j) for (i, j, lcm) in pairs]
    heapq.heapify(heap)
    pairset = {(i, j) for (i, j, _) in pairs}
    while heap:
        _, i, j = heapq.heappop(heap)
        if (i, j) not in pairset:
            continue
        pairset.discard((i, j))
        s = _spair(G[i], G[j], key, p)
        nf = _normal_form(s, G, key, p)
        if nf:
            G.append(_make_entry(nf, key))
            new_pairs = _gm_update(G, [(a, b, _tuple_lcm(G[a].lm, G[b].lm))
                                       for (a, b) in pairset], len(G) - 1, key)
            pairset = set()
            heap = []
            for (a, b, lcm) in new_pairs:
                pairset.add((a, b))
                heap.append((key(lcm), a, b))
            heapq.heapify(heap)
    return _reduce_basis(G, key, p)


def _reduce_basis(G, key, p):
    # minimal: drop entries whose lead is divisible by another lead
    keep = []
    for idx, g in enumerate(G):
        lm = g.lm
        redundant = False
        for jdx, h in enumerate(G):
            if jdx == idx:
                continue
            if _divides(h.lm, lm) and (h.lm != lm or jdx < idx):
                redundant = True
                break
        if not redundant:
            keep.append(g)
    # fully reduce each against the others
    out = []
    for idx, g in enumerate(keep):
        others = keep[:idx] + keep[idx + 1:]
        nf = _normal_form(g.terms, others, key, p)
        out.append(_make_entry(nf, key))
    out.sort(key=lambda e: key(e.lm))
    return out


class GroebnerBasis:
    """A reduced Groebner basis; carries both CommPoly and internal forms."""

    __slots__ = ("ring", "order", "polys", "_entries", "_p", "_key")

    def __init__(self, ring, order, entries, p):
        self.ring = ring
        self.order = order
        self._entries = entries
        self._p = p
        self._key = order.key
        field = ring.field
        polys = []
        for e in entries:
            if p:
                inv = pow(e.lc, -1, p)
                terms = {m: field(v * inv % p) for m, v in e.terms.items()}
            else:
                lc = Fraction(e.lc)
                terms = {m: Fraction(v) / lc for m, v in e.terms.items()}
            polys.append(CommPoly(ring, terms))
        self.polys = polys

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def normal_form(self, poly):
        """Canonical-up-to-positive-scalar remainder (primitive form)."""
        if poly.ring != self.ring:
            raise ValueError("polynomial from another ring")
        if self._p:
            terms = _mod_terms(poly, self._p)
        else:
            terms = _int_terms(poly)
        nf = _normal_form(terms, self._entries, self._key, self._p)
        return CommPoly(self.ring, {e: self.ring.field(v)
                                    for e, v in nf.items()}).primitive()

    def reduces_to_zero(self, poly):
        if poly.ring != self.ring:
            raise ValueError("polynomial from another ring")
        if not poly.terms:
            return True
        if self._p:
            terms = _mod_terms(poly, self._p)
        else:
            terms = _int_terms(poly)
        return not _normal_form(terms, self._entries, self._key, self._p)

    def contains_one(self):
        return len(self._entries) == 1 and sum(self._entries[0].lm) == 0


def groebner(polys_or_ideal, order=None):
    """Reduced Groebner basis of the given generators (or Ideal)."""
    if isinstance(polys_or_ideal, Ideal):
        return polys_or_ideal.groebner(order)
    polys = [p for p in polys_or_ideal if p]
    if not polys:
        raise ValueError("need at least one polynomial (or use an Ideal)")
    ring = polys[0].ring
    order = order or ring.order
    return _groebner_of(ring, polys, order)


def _groebner_of(ring, polys, order):
    p = 0 if ring.field == QQ else ring.field.p
    if p:
        ints = [_mod_terms(f, p) for f in polys if f]
    else:
        ints = [_int_terms(f) for f in polys if f]
    entries = _buchberger(ints, order.key, p)
    return GroebnerBasis(ring, order, entries, p)


class Ideal:
    """An ideal given by generators, with cached reduced Groebner bases."""

    __slots__ = ("ring", "gens", "_gb_cache")

    def __init__(self, ring, gens):
        self.ring = ring
        cleaned = []
        for g in gens:
            if g.ring != ring:
                raise ValueError("generator from another ring")
            if g:
                cleaned.append(g)
        self.gens = tuple(cleaned)
        self._gb_cache = {}

    def is_zero_ideal(self):
        return not self.gens

    def groebner(self, order=None):
        order = order or self.ring.order
        cached = self._gb_cache.get(order.name)
        if cached is None:
            if not self.gens:
                cached = GroebnerBasis(self.ring, order, [],
                                       0 if self.ring.field == QQ
                                       else self.ring.field.p)
            else:
                cached = _groebner_of(self.ring, list(self.gens), order)
            self._gb_cache[order.name] = cached
        return cached

    def __add__(self, other):
        if isinstance(other, Ideal):
            if other.ring != self.ring:
                raise ValueError("ideals from different rings")
            return Ideal(self.ring, self.gens + other.gens)
        return Ideal(self.ring, self.gens + tuple(other))

    def __repr__(self):
        if not self.gens:
            return "Ideal(0)"
        return "Ideal(" + ", ".join(str(g) for g in self.gens) + ")"


def radical_member(f, ideal, _gb=None):
    """f in sqrt(ideal)?  Rabinowitsch: 1 in ideal + (1 - t f)."""
    if not f:
        return True
    if ideal.is_zero_ideal():
        return False
    gb = _gb or ideal.groebner()
    if gb.reduces_to_zero(f):
        return True
    ring = ideal.ring
    tname = ring.fresh_name("t")
    big = ring.extend([tname])
    t = big.var(big.nvars - 1)
    gens = [g.lift(big) for g in gb.polys]
    gens.append(big.one() - t * f.lift(big))
    return _groebner_of(big, gens, big.order).contains_one()


class RadicalTester:
    """Batch radical-membership against one ideal, with saturation.

    Every certified member is folded into the working basis, so later
    normal-form checks short-circuit; this never changes the radical.
    """

    __slots__ = ("ideal", "_gb")

    def __init__(self, ideal):
        self.ideal = ideal
        self._gb = ideal.groebner()

    def contains(self, f):
        if not f:
            return True
        if self.ideal.is_zero_ideal():
            return False
        if self._gb.reduces_to_zero(f):
            return True
        ok = radical_member(f, self.ideal, _gb=self._gb)
        if ok:
            self._gb = _groebner_of(self.ideal.ring,
                                    list(self._gb.polys) + [f],
                                    self._gb.order)
        return ok


def variety_equal(ideal_a, ideal_b):
    """sqrt(I) == sqrt(J), by two-sided radical membership of generators."""
    if ideal_a.ring != ideal_b.ring:
        raise ValueError("ideals from different rings")
    tester_b = RadicalTester(ideal_b)
    for g in ideal_a.gens:
        if not tester_b.contains(g):
            return False
    tester_a = RadicalTester(ideal_a)
    for g in ideal_b.gens:
        if not tester_a.contains(g):
            return False
    return True


def projective_empty(ideal):
    """Z(ideal) empty in projective space?  Requires homogeneous generators."""
    for g in ideal.gens:
        if not g.is_homogeneous():
            raise ValueError(f"non-homogeneous generator: {g}")
    tester = RadicalTester(ideal)
    return all(tester.contains(ideal.ring.var(i))
               for i in range(ideal.ring.nvars))


def intersect(ideal_a, ideal_b):
    """I cap J via the t-trick with an elimination order."""
    ring = ideal_a.ring
    if ideal_b.ring != ring:
        raise ValueError("ideals from different rings")
    if ideal_a.is_zero_ideal() or ideal_b.is_zero_ideal():
        return Ideal(ring, [])
    tname = ring.fresh_name("t")
    big = ring.extend([tname], order=EliminateLast(ring.order))
    t = big.var(big.nvars - 1)
    gens = [t * f.lift(big) for f in ideal_a.gens]
    gens += [(big.one() - t) * g.lift(big) for g in ideal_b.gens]
    gb = _groebner_of(big, gens, big.order)
    out = []
    for poly in gb.polys:
        if all(e[-1] == 0 for e in poly.terms):
            out.append(poly.drop_last_vars(ring).primitive())
    return Ideal(ring, out)


def intersect_all(ideals):
    out = ideals[0]
    for nxt in ideals[1:]:
        out = intersect(out, nxt)
    return out
