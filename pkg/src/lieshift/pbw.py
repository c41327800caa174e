"""PBW normal form in enveloping algebras, with central Laurent localization.

Monomials are exponent vectors read as products of basis generators in a
fixed order (input order, annotated central generators moved last). Products
are straightened by the rewriting x_j x_i = x_i x_j + [x_j, x_i] with
memoization on monomial pairs; designated central generators may carry
negative exponents (localization at z), which is sound because they commute
with everything (verified, not assumed).
"""

from __future__ import annotations

from math import factorial

from .fields import FieldElement, FieldError
from .linalg import Matrix, kernel_basis
from .polyring import PolyElement


class EnvelopingAlgebra:
    """Multiplication context for U(L); owns the straightening caches."""

    def __init__(self, L, laurent=()):
        self.L = L
        self.field = L.field
        self.dim = L.dim
        self.laurent = frozenset(laurent)
        for z in sorted(self.laurent | L.central_indices()):
            for j in range(L.dim):
                if any(not c.is_zero for c in L.bracket_basis(z, j).values()):
                    raise FieldError(
                        "designated central index %d brackets nontrivially" % z
                    )
        central = sorted(L.central_indices() | self.laurent)
        rest = [i for i in range(L.dim) if i not in central]
        order = rest + central
        self._pos = [0] * L.dim
        for p, i in enumerate(order):
            self._pos[i] = p
        self._mul_cache = {}
        self._symm_cache = {}

    # -- element constructors ------------------------------------------------

    def element(self, terms):
        return PBWElement(self, terms)

    def zero(self):
        return PBWElement(self, {})

    def one(self):
        return PBWElement(self, {(0,) * self.dim: self.field.one})

    def gen(self, i, power=1):
        if power < 0 and i not in self.laurent:
            raise FieldError("negative exponent at non-Laurent index %d" % i)
        exps = tuple(power if k == i else 0 for k in range(self.dim))
        return PBWElement(self, {exps: self.field.one})

    def from_vector(self, coords):
        terms = {}
        for i, c in enumerate(coords):
            if isinstance(c, int):
                c = self.field.rational(c)
            if not c.is_zero:
                terms[tuple(1 if k == i else 0 for k in range(self.dim))] = c
        return PBWElement(self, terms)

    def from_poly(self, p):
        """Reads a polynomial's monomials as normal-ordered PBW monomials."""
        return PBWElement(self, dict(p.terms))

    # -- straightening core ----------------------------------------------------

    def _central_set(self):
        return self.laurent | self.L.central_indices()

    def mul_mono(self, a, b):
        """Product of two normal monomials as a {monomial: coeff} dict."""
        cen = self._central_set()
        if cen:
            ca = tuple(e if i in cen else 0 for i, e in enumerate(a))
            cb = tuple(e if i in cen else 0 for i, e in enumerate(b))
            na = tuple(0 if i in cen else e for i, e in enumerate(a))
            nb = tuple(0 if i in cen else e for i, e in enumerate(b))
            shift = tuple(x + y for x, y in zip(ca, cb))
            if any(shift):
                core = self._mul_core(na, nb)
                return {
                    tuple(x + y for x, y in zip(k, shift)): v
                    for k, v in core.items()
                }
            a, b = na, nb
        return self._mul_core(a, b)

    def _mul_core(self, a, b):
        if not any(a):
            return {b: self.field.one}
        if not any(b):
            return {a: self.field.one}
        key = (a, b)
        hit = self._mul_cache.get(key)
        if hit is not None:
            return hit
        pos = self._pos
        i = max((k for k, e in enumerate(a) if e), key=lambda k: pos[k])
        j = min((k for k, e in enumerate(b) if e), key=lambda k: pos[k])
        if pos[i] <= pos[j]:
            out = {tuple(x + y for x, y in zip(a, b)): self.field.one}
            self._mul_cache[key] = out
            return out
        a0 = tuple(e - 1 if k == i else e for k, e in enumerate(a))
        b0 = tuple(e - 1 if k == j else e for k, e in enumerate(b))
        ei = tuple(1 if k == i else 0 for k in range(self.dim))
        ej = tuple(1 if k == j else 0 for k in range(self.dim))
        out = {}
        left = self.mul_mono(a0, ej)
        right = self.mul_mono(ei, b0)
        for m1, c1 in left.items():
            for m2, c2 in right.items():
                for m, c in self.mul_mono(m1, m2).items():
                    _acc(out, m, c1 * c2 * c, self.field)
        for k, ck in self.L.bracket_basis(i, j).items():
            ek = tuple(1 if t == k else 0 for t in range(self.dim))
            for m1, c1 in self.mul_mono(a0, ek).items():
                for m, c in self.mul_mono(m1, b0).items():
                    _acc(out, m, ck * c1 * c, self.field)
        self._mul_cache[key] = out
        return out

    def symm_mono(self, exps):
        """Symmetrization of one monomial: weighted distinct orderings."""
        hit = self._symm_cache.get(exps)
        if hit is not None:
            return hit
        letters = []
        for i, e in enumerate(exps):
            if e < 0:
                raise FieldError("cannot symmetrize a formal inverse")
            letters.extend([i] * e)
        k = len(letters)
        if k <= 1:
            out = {exps: self.field.one}
            self._symm_cache[exps] = out
            return out
        mult = 1
        for e in exps:
            mult *= factorial(e)
        weight = self.field.rational(mult, factorial(k))
        total = {}
        for word in _multiset_perms(letters):
            cur = {(0,) * self.dim: self.field.one}
            for letter in word:
                el = tuple(1 if t == letter else 0 for t in range(self.dim))
                nxt = {}
                for m, c in cur.items():
                    for m2, c2 in self.mul_mono(m, el).items():
                        _acc(nxt, m2, c * c2, self.field)
                cur = nxt
            for m, c in cur.items():
                _acc(total, m, c * weight, self.field)
        self._symm_cache[exps] = total
        return total


def _acc(d, m, c, field):
    s = d.get(m)
    s = c if s is None else s + c
    if s.is_zero:
        d.pop(m, None)
    else:
        d[m] = s


def _multiset_perms(letters):
    """All distinct orderings of a multiset, lexicographically."""
    letters = sorted(letters)
    n = len(letters)
    out = [tuple(letters)]
    cur = list(letters)
    while True:
        i = n - 2
        while i >= 0 and cur[i] >= cur[i + 1]:
            i -= 1
        if i < 0:
            return out
        j = n - 1
        while cur[j] <= cur[i]:
            j -= 1
        cur[i], cur[j] = cur[j], cur[i]
        cur[i + 1 :] = reversed(cur[i + 1 :])
        out.append(tuple(cur))


class PBWElement:
    """Element of U(L) (optionally localized at central z) in normal form."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms):
        self.alg = alg
        clean = {}
        field = alg.field
        for exps, c in terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != alg.dim:
                raise FieldError("monomial length != algebra dimension")
            for i, e in enumerate(exps):
                if e < 0 and i not in alg.laurent:
                    raise FieldError("negative exponent at non-Laurent index %d" % i)
            c = c if isinstance(c, FieldElement) else field.rational(c)
            if not c.is_zero:
                prev = clean.get(exps)
                s = c if prev is None else prev + c
                if s.is_zero:
                    clean.pop(exps, None)
                else:
                    clean[exps] = s
        self.terms = clean

    def _check(self, other):
        if self.alg is not other.alg:
            raise FieldError("elements of different enveloping algebras")

    def __add__(self, other):
        if isinstance(other, (int, FieldElement)):
            other = _const(self.alg, other)
        self._check(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            _acc(t, m, c, self.alg.field)
        return PBWElement(self.alg, t)

    __radd__ = __add__

    def __neg__(self):
        return PBWElement(self.alg, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, FieldElement)):
            other = _const(self.alg, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            c = (
                other
                if isinstance(other, FieldElement)
                else self.alg.field.rational(other)
            )
            return PBWElement(
                self.alg, {m: co * c for m, co in self.terms.items()}
            )
        self._check(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c12 = c1 * c2
                for m, c in self.alg.mul_mono(m1, m2).items():
                    _acc(out, m, c12 * c, self.alg.field)
        return PBWElement(self.alg, out)

    def __rmul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            raise FieldError("negative power of a PBW element")
        out = self.alg.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return (
            isinstance(other, PBWElement)
            and self.alg is other.alg
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    @property
    def is_zero(self):
        return not self.terms

    def degree(self):
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def render(self, labels=None):
        labels = labels or self.alg.L.labels
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)
        parts = []
        for exps, c in items:
            order = sorted(
                (i for i, e in enumerate(exps) if e), key=lambda i: self.alg._pos[i]
            )
            vs = "*".join(
                labels[i] if exps[i] == 1 else "%s^%d" % (labels[i], exps[i])
                for i in order
            )
            cs = str(c)
            wrap = " " in cs or "/" in cs
            neg = cs.startswith("-") and not wrap
            if neg:
                cs = cs[1:]
            if wrap:
                cs = "(%s)" % cs
            body = cs if not vs else (vs if cs == "1" else "%s*%s" % (cs, vs))
            if not parts:
                parts.append("-" + body if neg else body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return "PBWElement(%s)" % self.render()


def _const(alg, c):
    c = c if isinstance(c, FieldElement) else alg.field.rational(c)
    return PBWElement(alg, {(0,) * alg.dim: c})


def commutator(u, v):
    return u * v - v * u


def symmetrize(alg, p):
    """Symmetrization map S(q) -> U(q), monomial by monomial."""
    if p.nvars != alg.dim or p.field != alg.field:
        raise FieldError("polynomial ambient does not match the algebra")
    out = {}
    for exps, c in p.terms.items():
        for m, cc in alg.symm_mono(exps).items():
            _acc(out, m, c * cc, alg.field)
    return PBWElement(alg, out)


def principal_symbol(u):
    """Top filtration part of a PBW element as a polynomial (gr)."""
    if u.is_zero:
        return PolyElement.zero(u.alg.field, u.alg.dim, u.alg.laurent)
    d = u.degree()
    return PolyElement(
        u.alg.field,
        u.alg.dim,
        {e: c for e, c in u.terms.items() if sum(e) == d},
        u.alg.laurent,
    )


def ad_invariant(u, vectors):
    """Does every listed ambient vector commute with u?"""
    for w in vectors:
        if not commutator(u.alg.from_vector(w), u).is_zero:
            return False
    return True


def specialize_central(u, z_index, c):
    """Substitute a scalar for a central generator: image in U/(z - c).

    The result is a representative with zero exponent at z; a zero value is
    rejected when any monomial holds a formal inverse of z.
    """
    alg = u.alg
    if z_index not in alg._central_set():
        raise FieldError("index %d is not a designated central generator" % z_index)
    c = c if isinstance(c, FieldElement) else alg.field.rational(c)
    out = {}
    for exps, co in u.terms.items():
        k = exps[z_index]
        if k < 0 and c.is_zero:
            raise FieldError("specializing a formal inverse at zero")
        ne = tuple(0 if i == z_index else e for i, e in enumerate(exps))
        _acc(out, ne, co * c**k, alg.field)
    return PBWElement(alg, out)


def substitute_generators(u, images, target_alg, coeff_to_elem=None):
    """Multiplicative image of u under generator substitution.

    images[i] replaces generator i of u's algebra; monomials expand in the
    source normal order. coeff_to_elem maps source coefficients to elements
    of the target algebra (defaults to scalar embedding via the same field).
    """
    src = u.alg
    if coeff_to_elem is None:
        coeff_to_elem = lambda c: _const(target_alg, c)
    total = target_alg.zero()
    order = sorted(range(src.dim), key=lambda i: src._pos[i])
    for exps, c in u.terms.items():
        acc = coeff_to_elem(c)
        for i in order:
            e = exps[i]
            if e < 0:
                raise FieldError("cannot substitute into a formal inverse")
            for _ in range(e):
                acc = acc * images[i]
        total = total + acc
    return total


def centralizer_up_to_degree(alg, gens, d):
    """Basis of {u in U, deg u <= d : [u, g] = 0 for all g}.

    Exact linear solve over the coefficient field; constants always appear.
    """
    monos = _monomials_up_to(alg.dim, d)
    index = {m: k for k, m in enumerate(monos)}
    field = alg.field
    rows = []
    for g in gens:
        cols = []
        target_index = {}
        for m in monos:
            com = commutator(alg.element({m: field.one}), g)
            col = {}
            for mm, c in com.terms.items():
                if mm not in target_index:
                    target_index[mm] = len(target_index)
                col[target_index[mm]] = c
            cols.append(col)
        nrows = len(target_index)
        block = [[field.zero] * len(monos) for _ in range(nrows)]
        for j, col in enumerate(cols):
            for r, c in col.items():
                block[r][j] = c
        rows.extend(block)
    if not rows:
        rows = [[field.zero] * len(monos)]
    ker = kernel_basis(Matrix(field, rows, ncols=len(monos)))
    out = []
    for v in ker:
        terms = {m: c for m, c in zip(monos, v) if not c.is_zero}
        out.append(PBWElement(alg, terms))
    return out


def _monomials_up_to(n, d):
    out = []

    def rec(prefix, remaining, total):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for e in range(0, d - total + 1):
            rec(prefix + [e], remaining - 1, total + e)

    rec([], n, 0)
    out.sort(key=lambda m: (sum(m), m))
    return out
