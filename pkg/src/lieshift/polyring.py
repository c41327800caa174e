"""Polynomials on the dual space, with the Lie-Poisson bracket.

Elements of the symmetric algebra S(q) are sparse exponent-vector dicts over
the algebra's tower field. Negative exponents are allowed only at explicitly
flagged (central) indices, mirroring the localized enveloping algebra; the
formal inverse obeys z * z^-1 = 1 eagerly through exponent addition.
"""

from __future__ import annotations

from .fields import FieldElement, FieldError


class PolyElement:
    __slots__ = ("field", "nvars", "terms", "laurent")

    def __init__(self, field, nvars, terms=None, laurent=frozenset()):
        self.field = field
        self.nvars = nvars
        self.laurent = frozenset(laurent)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise FieldError("exponent vector length != nvars")
            for i, e in enumerate(exps):
                if e < 0 and i not in self.laurent:
                    raise FieldError("negative exponent at non-Laurent index %d" % i)
            c = c if isinstance(c, FieldElement) else field.rational(c)
            if not c.is_zero:
                clean[exps] = clean.get(exps, field.zero) + c
                if clean[exps].is_zero:
                    del clean[exps]
        self.terms = clean

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, field, nvars, laurent=frozenset()):
        return cls(field, nvars, {}, laurent)

    @classmethod
    def constant(cls, field, nvars, c, laurent=frozenset()):
        return cls(field, nvars, {(0,) * nvars: c}, laurent)

    @classmethod
    def variable(cls, field, nvars, i, laurent=frozenset()):
        exps = tuple(1 if k == i else 0 for k in range(nvars))
        return cls(field, nvars, {exps: field.one}, laurent)

    @classmethod
    def from_vector(cls, field, coords, laurent=frozenset()):
        n = len(coords)
        terms = {}
        for i, c in enumerate(coords):
            if isinstance(c, int):
                c = field.rational(c)
            if not c.is_zero:
                terms[tuple(1 if k == i else 0 for k in range(n))] = c
        return cls(field, n, terms, laurent)

    # -- ring ops ----------------------------------------------------------

    def _check(self, other):
        if self.field != other.field or self.nvars != other.nvars:
            raise FieldError("mixed polynomial ambients")

    def __add__(self, other):
        if isinstance(other, (int, FieldElement)):
            other = PolyElement.constant(self.field, self.nvars, other, self.laurent)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, self.field.zero) + c
            if s.is_zero:
                terms.pop(e, None)
            else:
                terms[e] = s
        return PolyElement(self.field, self.nvars, terms, self.laurent | other.laurent)

    __radd__ = __add__

    def __neg__(self):
        return PolyElement(
            self.field, self.nvars, {e: -c for e, c in self.terms.items()}, self.laurent
        )

    def __sub__(self, other):
        if isinstance(other, (int, FieldElement)):
            other = PolyElement.constant(self.field, self.nvars, other, self.laurent)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            c = other if isinstance(other, FieldElement) else self.field.rational(other)
            return PolyElement(
                self.field,
                self.nvars,
                {e: co * c for e, co in self.terms.items()},
                self.laurent,
            )
        self._check(other)
        out = {}
        zero = self.field.zero
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, zero) + c1 * c2
                if s.is_zero:
                    out.pop(e, None)
                else:
                    out[e] = s
        return PolyElement(self.field, self.nvars, out, self.laurent | other.laurent)

    __rmul__ = __mul__

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            raise FieldError("negative power of a polynomial")
        out = PolyElement.constant(self.field, self.nvars, 1, self.laurent)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        return (
            isinstance(other, PolyElement)
            and self.field == other.field
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, self.nvars, frozenset(self.terms.items())))

    @property
    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; a formal inverse counts as -1. Zero gives -inf-ish."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def top_part(self):
        d = self.degree()
        if d is None:
            return self
        return PolyElement(
            self.field,
            self.nvars,
            {e: c for e, c in self.terms.items() if sum(e) == d},
            self.laurent,
        )

    def homogeneous_components(self):
        out = {}
        for e, c in self.terms.items():
            out.setdefault(sum(e), {})[e] = c
        return {
            d: PolyElement(self.field, self.nvars, t, self.laurent)
            for d, t in sorted(out.items())
        }

    def partial(self, i):
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = tuple(x - 1 if k == i else x for k, x in enumerate(e))
            out[ne] = c * e[i]
        return PolyElement(self.field, self.nvars, out, self.laurent)

    def evaluate(self, point):
        """Value at a point; formal inverses need a nonzero coordinate."""
        pt = [
            c if isinstance(c, FieldElement) else self.field.rational(c)
            for c in point
        ]
        total = self.field.zero
        for e, c in self.terms.items():
            v = c
            for i, k in enumerate(e):
                if k == 0:
                    continue
                if k < 0 and pt[i].is_zero:
                    raise FieldError("evaluating a formal inverse at zero")
                v = v * pt[i] ** k
            total = total + v
        return total

    def map_coefficients(self, fn, new_field):
        return PolyElement(
            new_field,
            self.nvars,
            {e: fn(c) for e, c in self.terms.items()},
            self.laurent,
        )

    def render(self, labels):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)
        parts = []
        for exps, c in items:
            vs = "*".join(
                labels[i] if e == 1 else "%s^%d" % (labels[i], e)
                for i, e in enumerate(exps)
                if e
            )
            cs = str(c)
            wrap = " " in cs or "/" in cs
            neg = cs.startswith("-") and not wrap
            if neg:
                cs = cs[1:]
            if wrap:
                cs = "(%s)" % cs
            if not vs:
                body = cs
            elif cs == "1":
                body = vs
            else:
                body = "%s*%s" % (cs, vs)
            if not parts:
                parts.append("-" + body if neg else body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return "PolyElement(%s)" % self.render(
            ["x%d" % i for i in range(self.nvars)]
        )


def bracket_poly(L, i, j):
    """[x_i, x_j] as a linear polynomial."""
    terms = {}
    for k, c in L.bracket_basis(i, j).items():
        terms[tuple(1 if t == k else 0 for t in range(L.dim))] = c
    return PolyElement(L.field, L.dim, terms)


def poisson(L, f, g):
    """Lie-Poisson bracket {f, g} on S(q), a biderivation over the bracket."""
    out = PolyElement.zero(L.field, L.dim, f.laurent | g.laurent)
    pf = {i: f.partial(i) for i in range(L.dim)}
    pg = {j: g.partial(j) for j in range(L.dim)}
    for (i, j) in L.table:
        a = pf[i] * pg[j] - pf[j] * pg[i]
        if a.is_zero:
            continue
        out = out + a * bracket_poly(L, i, j)
    return out


def differential_at(f, point):
    """Gradient vector of f evaluated at a point of the dual space."""
    return [f.partial(i).evaluate(point) for i in range(f.nvars)]


def gamma_shift(h, gamma, k):
    """k-th iterated directional derivative of h along the form gamma."""
    out = h
    for _ in range(int(k)):
        acc = PolyElement.zero(h.field, h.nvars, h.laurent)
        for i in range(h.nvars):
            c = gamma.coords[i]
            if not c.is_zero:
                acc = acc + out.partial(i) * c
        out = acc
    return out
