"""Quotient resolutions via homotopy towers.

Given a minimal resolution P of the trivial module over A and a regular
normal element f with normalizing automorphism sigma (tau = sigma^{-1}),
multiplication by f is a null-homotopic chain map; lifting it gives c^1, and
iterating zeta^n = -sum_{0<i<n} c^i (tau^i . c^{n-i}) gives the whole tower
c^n.  The block upper-triangular differentials assembled from the tower,
with entries reduced into B = A/(f), resolve the trivial B-module; for
Koszul A and deg f >= 2 the result is minimal.

Each lift solves an exact linear system degree by degree; the deterministic
choice is the echelon particular solution with free parameters zero.
"""

from __future__ import annotations

from .algebra import AlgebraElement, convert_element, is_normal, \
    is_regular_up_to
from .exactlinalg import solve_batch
from .resolutions import (FreeComplex, FreeModuleMap, verify_complex,
                          zero_map)


class NotNormalError(ValueError):
    pass


class NotRegularError(ValueError):
    pass


class HomotopyLiftError(RuntimeError):
    """The lifting system was inconsistent: the input was not a chain map
    over zero (an upstream invariant is broken)."""


class InvariantBreach(RuntimeError):
    """A property the construction guarantees failed to verify; internal error."""


def _shifted(fmap, s):
    if s == 0:
        return fmap
    return FreeModuleMap(fmap.presentation,
                         tuple(t + s for t in fmap.target_shifts),
                         tuple(t + s for t in fmap.source_shifts),
                         fmap.entries)


def _diag_map(presentation, shifts, element):
    """element * identity on a free module with the given shifts."""
    m = element.degree
    rows = []
    for k, t in enumerate(shifts):
        row = []
        for j, s in enumerate(shifts):
            if k == j:
                row.append(element)
            else:
                row.append(presentation.zero_element(m))
        rows.append(row)
    return FreeModuleMap(presentation, shifts,
                         tuple(s + m for s in shifts), rows)


def lift_against(d_next, rhs):
    """Solve d_next o X = rhs for X (echelon particular solution).

    X has target generators of d_next's source and rhs's source generators;
    raises HomotopyLiftError when inconsistent.
    """
    pres = d_next.presentation
    field = pres.field
    tgt = d_next.source_shifts
    src = rhs.source_shifts
    if d_next.target_shifts != rhs.target_shifts:
        raise ValueError("shapes do not match")
    by_degree = {}
    for j, s in enumerate(src):
        by_degree.setdefault(s, []).append(j)
    entries = [[None] * len(src) for _ in tgt]
    for e, col_idx in by_degree.items():
        cols, nrows, labels = d_next.degree_columns(e)
        rows = {}
        for cidx, col in enumerate(cols):
            for r, v in col.items():
                rows.setdefault(r, {})[cidx] = v
        # rhs vectors in the same row indexing
        row_offsets = []
        total = 0
        for t in d_next.target_shifts:
            row_offsets.append(total)
            d = e - t
            total += pres.dim(d) if d >= 0 else 0
        rhs_vecs = []
        for j in col_idx:
            vec = {}
            for k in range(rhs.nrows):
                ent = rhs.entries[k][j]
                if not ent:
                    continue
                off = row_offsets[k]
                for t, c in ent.coords.items():
                    vec[off + t] = c
            rhs_vecs.append(vec)
        eq_rows = [rows.get(r, {}) for r in range(total)]
        sols = solve_batch(eq_rows, len(cols), rhs_vecs, field)
        for j, sol in zip(col_idx, sols):
            if sol is None:
                raise HomotopyLiftError(
                    "inconsistent lifting system: not null-homotopic")
            per_gen = {}
            for cidx, v in sol.items():
                t, w = labels[cidx]
                per_gen.setdefault(t, {})[w] = v
            for t in range(len(tgt)):
                entries[t][j] = AlgebraElement(pres, max(e - tgt[t], 0),
                                               per_gen.get(t, {}))
    for t, trow in enumerate(entries):
        for j, cell in enumerate(trow):
            if cell is None:
                trow[j] = pres.zero_element(max(src[j] - tgt[t], 0))
    return FreeModuleMap(pres, tgt, src, entries)


class HomotopyTower:
    """The family c^0 = d, c^1, ..., c^K with the twist tau and element f."""

    __slots__ = ("P", "f", "m", "sigma", "tau", "cmaps", "max_k",
                 "solved_length", "_tau_powers")

    def __init__(self, P, f, sigma, max_k):
        self.P = P
        self.f = f
        self.m = f.degree
        self.sigma = sigma
        self.tau = sigma.inverse()
        self.cmaps = {}
        self.max_k = max_k
        self.solved_length = 0
        self._tau_powers = {0: None}

    def tau_power(self, k):
        if k not in self._tau_powers:
            self._tau_powers[k] = self.tau.power(k)
        return self._tau_powers[k]

    def _twist(self, fmap, k):
        if k == 0:
            return fmap
        return fmap.twist(self.tau_power(k))

    def c(self, k, l):
        """c^k_l as a graded map P_l(-k m) -> P_{l+2k-1}; c^0 = d."""
        P = self.P
        if k == 0:
            return P.differential(l)
        got = self.cmaps.get((k, l))
        if got is not None:
            return got
        if l >= 0 and k <= self.max_k and \
                l > self.solved_length - 2 * k + 1:
            raise ValueError(
                f"homotopy component c^{k}_{l} lies beyond the solved "
                f"range (length {self.solved_length})")
        return zero_map(P.presentation, P.shifts(l + 2 * k - 1),
                        tuple(s + k * self.m for s in P.shifts(l)))

    def zeta(self, n, l):
        """zeta^n_l: f*I for n = 1, else -sum_{0<i<n} c^i (tau^i . c^{n-i})."""
        P = self.P
        if n == 1:
            return _diag_map(P.presentation, P.shifts(l), self.f)
        total = None
        for i in range(1, n):
            inner = _shifted(self._twist(self.c(n - i, l), i), i * self.m)
            outer = self.c(i, l + 2 * (n - i) - 1)
            term = outer.compose(inner)
            total = term if total is None else total.add(term)
        return total.negate()

    def solve(self, length):
        """Fill c^k_l for 2k <= length + 1, l in the solvable range."""
        P = self.P
        self.solved_length = length
        for k in range(1, self.max_k + 1):
            for l in range(0, length - 2 * k + 2):
                z = self.zeta(k, l)
                rhs = z
                if l >= 1:
                    prev = self.c(k, l - 1)
                    inner = _shifted(self._twist(P.differential(l), k),
                                     k * self.m)
                    rhs = z.sub(prev.compose(inner))
                d_next = P.differential(l + 2 * k - 1)
                self.cmaps[(k, l)] = lift_against(d_next, rhs)

    def homotopy_identity_holds(self, k, l):
        """zeta^k_l == c^k_{l-1} (tau^k . d_l) + d_{l+2k-1} c^k_l."""
        z = self.zeta(k, l)
        total = self.P.differential(l + 2 * k - 1).compose(self.c(k, l))
        if l >= 1:
            inner = _shifted(self._twist(self.P.differential(l), k),
                             k * self.m)
            total = total.add(self.c(k, l - 1).compose(inner))
        return z.sub(total).is_zero()

    def splitting_sum(self, n, l):
        """sum_{0<=i<=n} c^i (tau^i . c^{n-i}) at index l (0 for n >= 2,
        zeta^1 for n = 1)."""
        total = None
        for i in range(0, n + 1):
            inner = _shifted(self._twist(self.c(n - i, l), i), i * self.m)
            outer = self.c(i, l + 2 * (n - i) - 1)
            term = outer.compose(inner)
            total = term if total is None else total.add(term)
        return total

    def splitting_identity_holds(self, n, l):
        s = self.splitting_sum(n, l)
        if n == 1:
            return s.sub(self.zeta(1, l)).is_zero()
        return s.is_zero()


def shamash(presentation, P, f, length=None, internal_cap=None,
            regularity_cap=None, check=True):
    """Free resolution of the trivial module over B = A/(f) from one over A.

    Returns (complex over B, homotopy tower).  Verifies composite-zero and
    exactness up to the internal cap; raises InvariantBreach if they fail,
    NotNormalError / NotRegularError when f does not qualify.
    """
    if f.presentation is not presentation or P.presentation is not presentation:
        raise ValueError("presentation mismatch")
    if not f:
        raise ValueError("zero element")
    m = f.degree
    if m > 2:
        raise NotImplementedError(
            "quotients by elements of degree > 2 leave the quadratic "
            "presentation layer")
    sigma = is_normal(f)
    if sigma is None:
        raise NotNormalError("element is not normal (no normalizing "
                             "automorphism exists)")
    cap = internal_cap or presentation.degree_cap
    if regularity_cap is None:
        regularity_cap = max(cap - m, 0)
    if not is_regular_up_to(f, regularity_cap):
        raise NotRegularError(
            f"element is a zero divisor within degree {regularity_cap}")
    L = length or P.length
    tower = HomotopyTower(P, f, sigma, max_k=L // 2)
    tower.solve(L)
    if m == 2:
        B = presentation.quotient(f)
        linmap = None
    else:
        B, linmap = presentation.quotient_by_linear(f)

    def to_b(e):
        return convert_element(e, B, linmap)

    maps = []
    for i in range(1, L + 1):
        col_blocks = list(range(0, i // 2 + 1))
        row_blocks = list(range(0, (i - 1) // 2 + 1))
        tgt = []
        for l2 in row_blocks:
            tgt.extend(s + l2 * m for s in P.shifts(i - 1 - 2 * l2))
        src = []
        for l1 in col_blocks:
            src.extend(s + l1 * m for s in P.shifts(i - 2 * l1))
        entries = [[None] * len(src) for _ in tgt]
        r_off = 0
        for l2 in row_blocks:
            rows_here = len(P.shifts(i - 1 - 2 * l2))
            c_off = 0
            for l1 in col_blocks:
                cols_here = len(P.shifts(i - 2 * l1))
                if l1 >= l2:
                    block = tower.c(l1 - l2, i - 2 * l1)
                    block = _shifted(tower._twist(block, l2), l2 * m)
                    for k in range(rows_here):
                        for j in range(cols_here):
                            entries[r_off + k][c_off + j] = \
                                to_b(block.entries[k][j])
                else:
                    for k in range(rows_here):
                        for j in range(cols_here):
                            deg = src[c_off + j] - tgt[r_off + k]
                            entries[r_off + k][c_off + j] = \
                                B.zero_element(max(deg, 0))
                c_off += cols_here
            r_off += rows_here
        maps.append(FreeModuleMap(B, tuple(tgt), tuple(src), entries))
    out = FreeComplex(B, P.side, maps, {"tower": tower,
                                        "quotient_of": presentation})
    if check:
        report = verify_complex(out, cap)
        out.meta["verification"] = report
        if not report.all_composites_zero:
            raise InvariantBreach("quotient complex has a nonzero composite")
        bad = [key for key, dim in report.homology.items() if dim]
        bad += [e for e, ok in report.augmentation.items() if not ok]
        if bad:
            raise InvariantBreach(
                f"quotient complex not exact at truncation: {bad[:3]}")
        p_report = P.meta.get("verification")
        if (m >= 2 and p_report is not None and p_report.is_exact()
                and not report.minimal):
            raise InvariantBreach("expected a minimal resolution for a "
                                  "Koszul base and deg f >= 2")
    return out, tower
