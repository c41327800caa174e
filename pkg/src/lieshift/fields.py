"""Exact scalar tower: rationals at the bottom, rational function fields above.

Level 0 is Q. Level k > 0 is the field of fractions of a polynomial ring in
fresh variables over the level k-1 field, used e.g. for coefficients living in
K(h*) during the abelian-ideal reduction. Elements are kept in a canonical
reduced form: numerator and denominator coprime, denominator with grlex
leading coefficient 1 (positive denominator at level 0).

Arithmetic is delegated to sympy's polys domains (gmpy2-backed rationals,
nested fraction fields with grlex ordering); this module owns the canonical
form, the tower bookkeeping and the error contract.
"""

from __future__ import annotations

from functools import lru_cache

from sympy.polys.domains import QQ as _SYMPY_QQ
from sympy.polys.orderings import grlex

MAX_TOWER_DEPTH = 3


class FieldError(Exception):
    """Tower-level mismatch, bad variable names, or division by zero."""


class Field:
    """Descriptor of one level of the scalar tower.

    Immutable; equality and hashing are structural so a field can key caches.
    """

    __slots__ = ("level", "variables", "base")

    def __init__(self, level, variables, base):
        self.level = level
        self.variables = tuple(variables)
        self.base = base

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.level == other.level
            and self.variables == other.variables
            and self.base == other.base
        )

    def __hash__(self):
        return hash((self.level, self.variables, hash(self.base)))

    def __repr__(self):
        if self.level == 0:
            return "Q"
        return "%r(%s)" % (self.base, ", ".join(self.variables))

    def extend(self, *names):
        """Adjoin fresh variables, moving one level up the tower."""
        if self.level >= MAX_TOWER_DEPTH:
            raise FieldError("tower depth capped at %d" % MAX_TOWER_DEPTH)
        if len(set(names)) != len(names) or not names:
            raise FieldError("extension variables must be distinct and nonempty")
        clash = set(names) & set(self.all_variables())
        if clash:
            raise FieldError("variable names already used: %s" % sorted(clash))
        return Field(self.level + 1, names, self)

    def all_variables(self):
        out = []
        f = self
        while f is not None:
            out = list(f.variables) + out
            f = f.base
        return out

    @property
    def domain(self):
        return _sympy_domain(self)

    # -- element constructors ------------------------------------------------

    @property
    def zero(self):
        return FieldElement(self, self.domain.zero)

    @property
    def one(self):
        return FieldElement(self, self.domain.one)

    def from_int(self, n):
        return FieldElement(self, self.domain.convert(int(n)))

    def rational(self, p, q=1):
        if q == 0:
            raise FieldError("division by zero")
        if self.level == 0:
            return FieldElement(self, self.domain(int(p), int(q)))
        return self.lift(self.base.rational(p, q))

    def var(self, name):
        """The named tower variable as an element of this field."""
        if name in self.variables:
            i = self.variables.index(name)
            return FieldElement(self, self.domain.gens[i])
        if self.base is None:
            raise FieldError("unknown variable %r" % name)
        return self.lift(self.base.var(name))

    def lift(self, elem):
        """Embed an element of a lower tower level into this field."""
        if not isinstance(elem, FieldElement):
            raise FieldError("lift expects a FieldElement")
        if elem.field == self:
            return elem
        chain = []
        f = self
        while f is not None and f != elem.field:
            chain.append(f)
            f = f.base
        if f is None:
            raise FieldError("element of %r does not embed into %r" % (elem.field, self))
        raw = elem.raw
        for g in reversed(chain):
            raw = g.domain.field.ground_new(raw)
        return FieldElement(self, raw)

    # -- numerator-ring access (for fraction-free elimination) ---------------

    def ring_one(self):
        if self.level == 0:
            return self.domain.get_ring().one
        return self.domain.field.ring.one

    def ring_is_zero(self, a):
        return not a

    def ring_mul(self, a, b):
        return a * b

    def ring_sub(self, a, b):
        return a - b

    def ring_quo(self, a, b):
        """Exact division in the numerator ring (caller guarantees it)."""
        if self.level == 0:
            q, r = divmod(a, b)
            if r:
                raise FieldError("inexact ring division")
            return q
        return a.quo(b)

    def ring_gcd(self, a, b):
        if self.level == 0:
            import math

            return math.gcd(int(a), int(b))
        return a.gcd(b)

    def from_ring(self, a):
        if self.level == 0:
            return FieldElement(self, self.domain.convert(a))
        return FieldElement(self, self.domain.field.new(a, self.domain.field.ring.one))

    def clear_row(self, elems):
        """Common-denominator clearing: field elements -> numerator-ring row."""
        if self.level == 0:
            from math import lcm

            dens = [int(e.raw.denominator) for e in elems]
            m = lcm(*dens) if dens else 1
            return [int(e.raw * m) for e in elems]
        ring = self.domain.field.ring
        lcd = ring.one
        for e in elems:
            den = e.raw.denom
            g = lcd.gcd(den)
            lcd = lcd * den.quo(g)
        return [e.raw.numer * lcd.quo(e.raw.denom) for e in elems]


@lru_cache(maxsize=None)
def _sympy_domain(field):
    if field.level == 0:
        return _SYMPY_QQ
    base = _sympy_domain(field.base)
    return base.frac_field(*field.variables, order=grlex)


QQ = Field(0, (), None)


class FieldElement:
    """One element of a tower field, always in canonical reduced form."""

    __slots__ = ("field", "raw")

    def __init__(self, field, raw):
        self.field = field
        if field.level > 0:
            lc = raw.denom.LC
            if lc and lc != field.base.domain.one:
                # raw_new skips cancellation, which would undo the rescale
                raw = raw.raw_new(raw.numer.quo_ground(lc), raw.denom.quo_ground(lc))
        self.raw = raw

    # -- coercion ------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(
                    "tower-level mismatch: %r vs %r" % (self.field, other.field)
                )
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.raw + o.raw)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.raw - o.raw)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, o.raw - self.raw)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.raw * o.raw)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if not o.raw:
            raise FieldError("division by zero")
        return FieldElement(self.field, self.raw / o.raw)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if not self.raw:
            raise FieldError("division by zero")
        return FieldElement(self.field, o.raw / self.raw)

    def __neg__(self):
        return FieldElement(self.field, -self.raw)

    def __pow__(self, n):
        n = int(n)
        if n < 0 and not self.raw:
            raise FieldError("division by zero")
        return FieldElement(self.field, self.raw**n)

    def inverse(self):
        return 1 / self

    def __eq__(self, other):
        if isinstance(other, int):
            return self.raw == self.field.from_int(other).raw
        return (
            isinstance(other, FieldElement)
            and self.field == other.field
            and self.raw == other.raw
        )

    def __hash__(self):
        return hash((self.field, self.raw))

    def __bool__(self):
        return bool(self.raw)

    @property
    def is_zero(self):
        return not self.raw

    @property
    def is_one(self):
        return self.raw == self.field.domain.one

    def as_rational(self):
        """(p, q) for a level-0 element; error above level 0."""
        if self.field.level != 0:
            raise FieldError("not a rational: lives at level %d" % self.field.level)
        return int(self.raw.numerator), int(self.raw.denominator)

    # -- deterministic rendering ----------------------------------------------

    def __str__(self):
        return render_scalar(self)

    def __repr__(self):
        return "FieldElement(%s)" % render_scalar(self)


def _render_ground(field, coeff):
    """Render a ground-domain coefficient of a level >= 1 polynomial."""
    if field.level == 0:
        return str(coeff), ("/" in str(coeff))
    s = render_scalar(FieldElement(field, coeff))
    return s, ("+" in s[1:] or "-" in s[1:] or "/" in s)


def _render_poly(field, poly):
    """field is the level of the *fraction* field owning poly's ring."""
    terms = sorted(poly.terms(), key=lambda t: (sum(t[0]), t[0]), reverse=True)
    if not terms:
        return "0"
    names = field.variables
    parts = []
    for monom, coeff in terms:
        cs, needs_paren = _render_ground(field.base, coeff)
        vs = "*".join(
            n if e == 1 else "%s^%d" % (n, e) for n, e in zip(names, monom) if e
        )
        neg = cs.startswith("-") and not needs_paren
        if neg:
            cs = cs[1:]
        if needs_paren:
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


def render_scalar(e):
    """Canonical human-readable form, stable across runs."""
    if e.field.level == 0:
        return str(e.raw)
    num = _render_poly(e.field, e.raw.numer)
    den = _render_poly(e.field, e.raw.denom)
    if den == "1":
        return num
    if " " in num or "/" in num:
        num = "(%s)" % num
    if " " in den or "/" in den or "*" in den or "^" in den:
        den = "(%s)" % den
    return "%s/%s" % (num, den)
