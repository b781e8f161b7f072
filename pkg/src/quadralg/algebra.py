"""Quadratic graded algebras T(V)/(R): presentations, graded components,
elements, multiplication, normal/regular elements, automorphisms, quotients.

A graded component A_d is built iteratively as a quotient of A_{d-1} (x) V by
the image of A_{d-2} (x) R; its basis is the set of "normal words" (tensor
monomials avoiding the reduced-row-echelon pivots), which reproduces the
direct RREF complement of R_d inside V^(x)d with lex-ordered monomials.  The
per-letter multiplication tables that fall out of the echelon rows drive all
products, automorphism actions and conversions.
"""

from __future__ import annotations

import os

from .exactlinalg import (RowSpace, invert_matrix, mat_mul, modular_rank,
                          rank_of_columns, solve_batch)
from .scalars import QQ, field_descriptor

DEFAULT_DEGREE_CAP = int(os.environ.get("QUADRALG_DEGREE_CAP", "8"))


class DegreeCapExceeded(RuntimeError):
    pass


_INTERN = {}


class GradedComponent:
    """Basis and multiplication data for one graded piece A_d."""

    __slots__ = ("degree", "words", "index", "step")

    def __init__(self, degree, words, step):
        self.degree = degree
        self.words = words
        self.index = {w: i for i, w in enumerate(words)}
        self.step = step  # (index in A_{d-1}, letter) -> {index in A_d: scalar}

    @property
    def dim(self):
        return len(self.words)


class QuadraticPresentation:
    """T(V)/(R) with deg x_i = 1 and R a subspace of V (x) V.

    Relations are stored as the canonical reduced row echelon basis of R in
    the (u, v) word coordinates, so equal subspaces give equal (interned)
    presentations.
    """

    __slots__ = ("field", "names", "rel_rows", "degree_cap", "_components",
                 "_rel_space", "_cache")

    def __new__(cls, field, names, relation_rows, degree_cap=None):
        key = (field_descriptor(field), tuple(names),
               tuple(tuple(sorted(r.items())) for r in relation_rows))
        hit = _INTERN.get(key)
        if hit is not None:
            if degree_cap is not None:
                hit.degree_cap = max(hit.degree_cap, degree_cap)
            return hit
        self = object.__new__(cls)
        _INTERN[key] = self
        self.field = field
        self.names = tuple(names)
        self.rel_rows = tuple(dict(r) for r in relation_rows)
        self.degree_cap = degree_cap or DEFAULT_DEGREE_CAP
        self._components = {}
        self._cache = {}
        space = RowSpace(field)
        for r in relation_rows:
            space.add(dict(r))
        self._rel_space = space
        return self

    @classmethod
    def create(cls, field, names, relations, degree_cap=None):
        """Build from relation tensors: n x n coefficient matrices or sparse
        {(u, v): coeff} dicts (f = sum a_uv x_u (x) x_v)."""
        n = len(names)
        space = RowSpace(field)
        for rel in relations:
            vec = {}
            if isinstance(rel, dict):
                items = rel.items()
            else:
                items = (((u, v), rel[u][v]) for u in range(n)
                         for v in range(n))
            for (u, v), c in items:
                c = field(c)
                if c:
                    vec[u * n + v] = c
            space.add(vec)
        rows = [space.pivots[p] for p in sorted(space.pivots)]
        return cls(field, names, rows, degree_cap)

    @classmethod
    def skew(cls, field, names, q_matrix, degree_cap=None):
        """Skew polynomial algebra: relations x_j x_i - q_ij x_i x_j (i < j).

        q_matrix must satisfy q_ii = 1 and q_ji = 1/q_ij with all entries
        nonzero.
        """
        n = len(names)
        q = [[field(q_matrix[i][j]) for j in range(n)] for i in range(n)]
        for i in range(n):
            if q[i][i] != field.one:
                raise ValueError("skew matrix needs 1 on the diagonal")
            for j in range(n):
                if not q[i][j]:
                    raise ValueError("skew matrix entries must be nonzero")
                if q[j][i] * q[i][j] != field.one:
                    raise ValueError("skew matrix needs q_ji = 1/q_ij")
        rels = []
        for i in range(n):
            for j in range(i + 1, n):
                rels.append({(j, i): field.one, (i, j): -q[i][j]})
        return cls.create(field, names, rels, degree_cap)

    @classmethod
    def commutative(cls, field, names, degree_cap=None):
        n = len(names)
        return cls.skew(field, names, [[1] * n for _ in range(n)], degree_cap)

    @property
    def n(self):
        return len(self.names)

    @property
    def r(self):
        return len(self.rel_rows)

    def relation_matrices(self):
        """Relations as dense n x n scalar matrices a^k."""
        n = self.n
        out = []
        for row in self.rel_rows:
            a = [[self.field.zero] * n for _ in range(n)]
            for col, c in row.items():
                a[col // n][col % n] = c
            out.append(a)
        return out

    def component(self, d):
        if d < 0:
            raise ValueError("degree must be >= 0")
        if d > self.degree_cap:
            raise DegreeCapExceeded(
                f"degree {d} exceeds the cap {self.degree_cap}")
        comp = self._components.get(d)
        if comp is not None:
            return comp
        n = self.n
        if d == 0:
            comp = GradedComponent(0, ((),), {})
        elif d == 1:
            words = tuple((j,) for j in range(n))
            step = {(0, j): {j: self.field.one} for j in range(n)}
            comp = GradedComponent(1, words, step)
        else:
            prev = self.component(d - 1)
            prev2 = self.component(d - 2)
            space = RowSpace(self.field)
            for b in range(prev2.dim):
                for rel in self.rel_rows:
                    vec = {}
                    for col, c in rel.items():
                        u, v = divmod(col, n)
                        mid = prev.step.get((b, u))
                        if not mid:
                            continue
                        for i, s in mid.items():
                            key = i * n + v
                            acc = vec.get(key)
                            acc = c * s if acc is None else acc + c * s
                            if acc:
                                vec[key] = acc
                            else:
                                del vec[key]
                    if vec:
                        space.add(vec)
            pivots = space.pivots
            normal_cols = [c for c in range(prev.dim * n) if c not in pivots]
            words = tuple(prev.words[c // n] + (c % n,) for c in normal_cols)
            remap = {c: i for i, c in enumerate(normal_cols)}
            step = {}
            for c in range(prev.dim * n):
                pair = (c // n, c % n)
                if c in pivots:
                    row = pivots[c]
                    step[pair] = {remap[oc]: -v for oc, v in row.items()
                                  if oc != c}
                else:
                    step[pair] = {remap[c]: self.field.one}
            comp = GradedComponent(d, words, step)
        self._components[d] = comp
        return comp

    def dim(self, d):
        return self.component(d).dim

    # ---- element constructors -------------------------------------------

    def zero_element(self, degree):
        return AlgebraElement(self, degree, {})

    def one(self):
        return AlgebraElement(self, 0, {0: self.field.one})

    def generator(self, j):
        if isinstance(j, str):
            j = self.names.index(j)
        return AlgebraElement(self, 1, {j: self.field.one})

    def from_word_coeffs(self, degree, word_coeffs):
        """Element from tensor-word coefficients (projection into A_d)."""
        out = {}
        for word, c in word_coeffs.items():
            c = self.field(c)
            if not c:
                continue
            vec = {0: c}
            k = 0
            for letter in word:
                comp = self.component(k + 1)
                nxt = {}
                for i, v in vec.items():
                    img = comp.step.get((i, letter))
                    if not img:
                        continue
                    for t, s in img.items():
                        acc = nxt.get(t)
                        acc = v * s if acc is None else acc + v * s
                        if acc:
                            nxt[t] = acc
                        else:
                            del nxt[t]
                vec = nxt
                k += 1
            for t, v in vec.items():
                acc = out.get(t)
                acc = v if acc is None else acc + v
                if acc:
                    out[t] = acc
                else:
                    del out[t]
        return AlgebraElement(self, degree, out)

    def multiply_by_linear(self, coords, k, linform):
        """A_k coords times a degree-1 form (coefficient sequence)."""
        comp = self.component(k + 1)
        out = {}
        for i, v in coords.items():
            for u, c in enumerate(linform):
                if not c:
                    continue
                img = comp.step.get((i, u))
                if not img:
                    continue
                vc = v * c
                for t, s in img.items():
                    acc = out.get(t)
                    acc = vc * s if acc is None else acc + vc * s
                    if acc:
                        out[t] = acc
                    else:
                        del out[t]
        return out

    # ---- presentation-level operations ----------------------------------

    def opposite(self):
        cached = self._cache.get("opposite")
        if cached is None:
            n = self.n
            rels = []
            for row in self.rel_rows:
                rels.append({(col % n, col // n): c for col, c in row.items()})
            cached = QuadraticPresentation.create(self.field, self.names,
                                                  rels, self.degree_cap)
            self._cache["opposite"] = cached
        return cached

    def quotient(self, f):
        """A/(f) for f in A_2, presented by R + k * (canonical lift of f)."""
        if f.presentation is not self:
            raise ValueError("element from another presentation")
        if f.degree != 2:
            raise ValueError("quotient expects a degree-2 element")
        if not f.coords:
            raise ValueError("cannot quotient by zero")
        n = self.n
        comp2 = self.component(2)
        lift = {}
        for i, c in f.coords.items():
            u, v = comp2.words[i]
            lift[(u, v)] = c
        rels = [{(col // n, col % n): c for col, c in row.items()}
                for row in self.rel_rows]
        rels.append(lift)
        return QuadraticPresentation.create(self.field, self.names, rels,
                                            self.degree_cap)

    def quotient_by_linear(self, f):
        """A/(f) for nonzero f in A_1: eliminates one generator."""
        if f.presentation is not self or f.degree != 1 or not f.coords:
            raise ValueError("need a nonzero degree-1 element of this algebra")
        n = self.n
        piv = min(f.coords)
        piv_c = f.coords[piv]
        keep = [u for u in range(n) if u != piv]
        # substitution x_u -> image in the remaining variables
        subst = []
        for u in range(n):
            if u == piv:
                subst.append([-(f.coords.get(c, self.field.zero) / piv_c)
                              for c in keep])
            else:
                subst.append([self.field.one if c == u else self.field.zero
                              for c in keep])
        rels = []
        for row in self.rel_rows:
            new = {}
            for col, c in row.items():
                u, v = divmod(col, n)
                for s, cs in enumerate(subst[u]):
                    if not cs:
                        continue
                    for t, ct in enumerate(subst[v]):
                        if not ct:
                            continue
                        key = (s, t)
                        acc = new.get(key)
                        val = c * cs * ct
                        acc = val if acc is None else acc + val
                        if acc:
                            new[key] = acc
                        else:
                            del new[key]
            if new:
                rels.append(new)
        names = tuple(self.names[u] for u in keep)
        target = QuadraticPresentation.create(self.field, names, rels,
                                              self.degree_cap)
        return target, subst

    def __repr__(self):
        return (f"<quadratic algebra k<{', '.join(self.names)}> "
                f"with {self.r} relations>")


class AlgebraElement:
    """Homogeneous element: sparse coordinates in the basis of A_d."""

    __slots__ = ("presentation", "degree", "coords")

    def __init__(self, presentation, degree, coords):
        self.presentation = presentation
        self.degree = degree
        self.coords = {i: c for i, c in coords.items() if c}

    def is_zero(self):
        return not self.coords

    def __bool__(self):
        return bool(self.coords)

    def _check(self, other):
        if self.presentation is not other.presentation:
            raise ValueError("elements of different presentations")

    def __add__(self, other):
        self._check(other)
        if self.degree != other.degree and self.coords and other.coords:
            raise ValueError("cannot add elements of different degrees")
        out = dict(self.coords)
        for i, c in other.coords.items():
            acc = out.get(i)
            acc = c if acc is None else acc + c
            if acc:
                out[i] = acc
            else:
                del out[i]
        return AlgebraElement(self.presentation,
                              self.degree if self.coords else other.degree,
                              out)

    def __neg__(self):
        return AlgebraElement(self.presentation, self.degree,
                              {i: -c for i, c in self.coords.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.presentation.field(c)
        if not c:
            return AlgebraElement(self.presentation, self.degree, {})
        return AlgebraElement(self.presentation, self.degree,
                              {i: v * c for i, v in self.coords.items()})

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        self._check(other)
        pres = self.presentation
        out_deg = self.degree + other.degree
        comp_other = pres.component(other.degree)
        out = {}
        for i, c in other.coords.items():
            word = comp_other.words[i]
            vec = {k: v * c for k, v in self.coords.items()}
            k = self.degree
            for letter in word:
                comp = pres.component(k + 1)
                nxt = {}
                for a, v in vec.items():
                    img = comp.step.get((a, letter))
                    if not img:
                        continue
                    for t, s in img.items():
                        acc = nxt.get(t)
                        acc = v * s if acc is None else acc + v * s
                        if acc:
                            nxt[t] = acc
                        else:
                            del nxt[t]
                vec = nxt
                k += 1
            for t, v in vec.items():
                acc = out.get(t)
                acc = v if acc is None else acc + v
                if acc:
                    out[t] = acc
                else:
                    del out[t]
        return AlgebraElement(pres, out_deg, out)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if self.presentation is not other.presentation:
            return False
        if not self.coords and not other.coords:
            return True
        return self.degree == other.degree and self.coords == other.coords

    def __hash__(self):
        return hash((id(self.presentation), self.degree,
                     frozenset(self.coords.items())))

    def word_coeffs(self):
        """Section: the canonical tensor-word representative."""
        comp = self.presentation.component(self.degree)
        return {comp.words[i]: c for i, c in self.coords.items()}

    def __repr__(self):
        if not self.coords:
            return "0"
        comp = self.presentation.component(self.degree)
        names = self.presentation.names
        parts = []
        for i in sorted(self.coords):
            mono = "*".join(names[l] for l in comp.words[i]) or "1"
            parts.append(f"({self.coords[i]})*{mono}")
        return " + ".join(parts)


class GradedAutomorphism:
    """Invertible action on V = A_1 preserving R; column j is sigma(x_j)."""

    __slots__ = ("presentation", "matrix", "_inverse")

    def __init__(self, presentation, matrix, _checked=False):
        field = presentation.field
        n = presentation.n
        self.presentation = presentation
        self.matrix = tuple(tuple(field(matrix[i][j]) for j in range(n))
                            for i in range(n))
        self._inverse = None
        if not _checked:
            if invert_matrix([list(r) for r in self.matrix], field) is None:
                raise ValueError("automorphism matrix is singular")
            if not self._preserves_relations():
                raise ValueError("matrix does not preserve the relations")

    def _preserves_relations(self):
        pres = self.presentation
        n = pres.n
        S = [list(r) for r in self.matrix]
        for a in pres.relation_matrices():
            sa = mat_mul(S, a, pres.field)
            sas = mat_mul(sa, [[S[j][i] for j in range(n)] for i in range(n)],
                          pres.field)
            vec = {}
            for u in range(n):
                for v in range(n):
                    if sas[u][v]:
                        vec[u * n + v] = sas[u][v]
            if not pres._rel_space.contains(vec):
                return False
        return True

    @classmethod
    def identity(cls, presentation):
        n = presentation.n
        one, zero = presentation.field.one, presentation.field.zero
        return cls(presentation,
                   [[one if i == j else zero for j in range(n)]
                    for i in range(n)], _checked=True)

    def is_identity(self):
        one, zero = self.presentation.field.one, self.presentation.field.zero
        return all(self.matrix[i][j] == (one if i == j else zero)
                   for i in range(self.presentation.n)
                   for j in range(self.presentation.n))

    def inverse(self):
        if self._inverse is None:
            inv = invert_matrix([list(r) for r in self.matrix],
                                self.presentation.field)
            self._inverse = GradedAutomorphism(self.presentation, inv,
                                               _checked=True)
            self._inverse._inverse = self
        return self._inverse

    def compose(self, other):
        """self after other."""
        prod = mat_mul([list(r) for r in self.matrix],
                       [list(r) for r in other.matrix],
                       self.presentation.field)
        return GradedAutomorphism(self.presentation, prod, _checked=True)

    def power(self, k):
        if k < 0:
            return self.inverse().power(-k)
        out = GradedAutomorphism.identity(self.presentation)
        for _ in range(k):
            out = out.compose(self)
        return out

    def column(self, j):
        return [self.matrix[i][j] for i in range(self.presentation.n)]

    def __call__(self, element):
        """Apply multiplicatively to a homogeneous element."""
        if element.presentation is not self.presentation:
            raise ValueError("element of another presentation")
        pres = self.presentation
        comp = pres.component(element.degree)
        out = {}
        for i, c in element.coords.items():
            vec = {0: c}
            k = 0
            for letter in comp.words[i]:
                vec = pres.multiply_by_linear(vec, k, self.column(letter))
                k += 1
            for t, v in vec.items():
                acc = out.get(t)
                acc = v if acc is None else acc + v
                if acc:
                    out[t] = acc
                else:
                    del out[t]
        return AlgebraElement(pres, element.degree, out)

    def __eq__(self, other):
        return (isinstance(other, GradedAutomorphism)
                and self.presentation is other.presentation
                and self.matrix == other.matrix)

    def __repr__(self):
        return f"GradedAutomorphism({self.matrix})"


def is_regular_up_to(f, d_max):
    """Left and right multiplication by f injective on A_i for i <= d_max.

    Modular full rank certifies injectivity over QQ; a modular miss falls
    back to an exact rational rank.
    """
    if not f:
        raise ValueError("zero element is never regular")
    pres = f.presentation
    m = f.degree
    for i in range(d_max + 1):
        comp = pres.component(i)
        dim_src = comp.dim
        if dim_src == 0:
            continue
        dim_tgt = pres.component(i + m).dim
        if dim_tgt < dim_src:
            return False
        for side in ("left", "right"):
            cols = []
            for w in range(dim_src):
                basis = AlgebraElement(pres, i, {w: pres.field.one})
                prod = f * basis if side == "left" else basis * f
                cols.append(prod.coords)
            if pres.field == QQ and modular_rank(cols, dim_tgt) == dim_src:
                continue
            if rank_of_columns(cols, dim_tgt, pres.field) != dim_src:
                return False
    return True


def is_normal(f):
    """The normalizing automorphism sigma with f x_j = sigma(x_j) f, if any.

    Solves the linear systems in A_{m+1}; the candidate must be invertible
    and preserve R.  For regular f the solution is unique.
    """
    if not f:
        raise ValueError("zero element")
    pres = f.presentation
    n = pres.n
    field = pres.field
    m = f.degree
    dim = pres.component(m + 1).dim
    left_cols = []
    for u in range(n):
        left_cols.append((pres.generator(u) * f).coords)
    rows = [{} for _ in range(dim)]
    for u, col in enumerate(left_cols):
        for t, v in col.items():
            rows[t][u] = v
    rhs = [(f * pres.generator(j)).coords for j in range(n)]
    sols = solve_batch(rows, n, rhs, field)
    if any(s is None for s in sols):
        return None
    candidates = [[[sols[j].get(u, field.zero) for j in range(n)]
                   for u in range(n)]]
    from .exactlinalg import nullspace
    kernel = nullspace(rows, n, field)
    for kv in kernel:
        shifted = [[candidates[0][u][j] + kv.get(u, field.zero)
                    for j in range(n)] for u in range(n)]
        candidates.append(shifted)
    for mat in candidates:
        if invert_matrix(mat, field) is None:
            continue
        sigma = GradedAutomorphism(pres, mat, _checked=True)
        if sigma._preserves_relations():
            return sigma
    return None


def convert_element(element, target, linmap=None):
    """Push a homogeneous element along an algebra map defined on generators.

    ``linmap[u]`` is the coefficient sequence (over the target generators) of
    the image of the u-th source generator; identity when omitted (same
    generator count, e.g. a quotient by a degree-2 element).
    """
    src = element.presentation
    if linmap is None:
        if target.n != src.n:
            raise ValueError("generator counts differ; supply linmap")
        linmap = [[target.field.one if i == j else target.field.zero
                   for i in range(target.n)] for j in range(src.n)]
    comp = src.component(element.degree)
    out = {}
    for i, c in element.coords.items():
        vec = {0: target.field(c)}
        k = 0
        for letter in comp.words[i]:
            vec = target.multiply_by_linear(vec, k, linmap[letter])
            k += 1
        for t, v in vec.items():
            acc = out.get(t)
            acc = v if acc is None else acc + v
            if acc:
                out[t] = acc
            else:
                del out[t]
    return AlgebraElement(target, element.degree, out)


def opposite_element(element):
    """The same element seen in the opposite presentation (words reversed)."""
    op = element.presentation.opposite()
    flipped = {tuple(reversed(w)): c
               for w, c in element.word_coeffs().items()}
    return op.from_word_coeffs(element.degree, flipped)
