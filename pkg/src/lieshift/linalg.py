"""Exact linear algebra over the scalar tower.

Rank and kernel go through fraction-free (Bareiss) elimination on rows cleared
to the numerator ring: integers at level 0, polynomials above. Kernel vectors
are back-substituted over the field, then cleared to polynomial form and
content-normalized so output is canonical and deterministic.
"""

from __future__ import annotations

from .fields import FieldElement, FieldError


class Matrix:
    """Dense matrix with FieldElement entries, all at one tower level."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field, rows, ncols=None):
        self.field = field
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        if self.nrows:
            self.ncols = len(self.rows[0])
        else:
            self.ncols = 0 if ncols is None else ncols
        for r in self.rows:
            if len(r) != self.ncols:
                raise FieldError("ragged matrix")
            for e in r:
                if not isinstance(e, FieldElement) or e.field != field:
                    raise FieldError("matrix entry at wrong tower level")

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self):
        return Matrix(
            self.field,
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            ncols=self.nrows,
        )

    def __repr__(self):
        return "Matrix(%dx%d over %r)" % (self.nrows, self.ncols, self.field)


def _bareiss(field, rows, ncols):
    """One-step Bareiss elimination in place; returns pivot (row, col) list."""
    pivots = []
    prev = field.ring_one()
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        p = next(
            (i for i in range(r, nrows) if not field.ring_is_zero(rows[i][c])), None
        )
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, nrows):
            head = rows[i][c]
            row_i, row_r = rows[i], rows[r]
            if field.ring_is_zero(head):
                # still rescale: entries must stay minors of the same order,
                # or the exact division below fails at the next step
                for j in range(c + 1, ncols):
                    if not field.ring_is_zero(row_i[j]):
                        row_i[j] = field.ring_quo(
                            field.ring_mul(piv, row_i[j]), prev
                        )
                continue
            for j in range(c + 1, ncols):
                num = field.ring_sub(
                    field.ring_mul(piv, row_i[j]), field.ring_mul(head, row_r[j])
                )
                row_i[j] = field.ring_quo(num, prev)
            row_i[c] = field.ring_sub(head, head)
        pivots.append((r, c))
        prev = piv
        r += 1
        if r == nrows:
            break
    return pivots


def rank(M):
    rows = [M.field.clear_row(r) for r in M.rows]
    return len(_bareiss(M.field, rows, M.ncols))


def kernel_basis(M):
    """Canonical right-kernel basis, entries cleared to polynomial form.

    One vector per free column, unit at that column before normalization;
    vectors are content-reduced with the first nonzero entry made positive
    (level 0) or monic (levels above).
    """
    field = M.field
    rows = [field.clear_row(r) for r in M.rows]
    pivots = _bareiss(field, rows, M.ncols)
    pivot_cols = [c for (_, c) in pivots]
    free_cols = [c for c in range(M.ncols) if c not in pivot_cols]
    basis = []
    zero, one = field.zero, field.one
    for f in free_cols:
        v = [zero] * M.ncols
        v[f] = one
        for (r, c) in reversed(pivots):
            s = zero
            row = rows[r]
            for j in range(c + 1, M.ncols):
                if not field.ring_is_zero(row[j]) and not v[j].is_zero:
                    s = s + field.from_ring(row[j]) * v[j]
            v[c] = -s / field.from_ring(row[c])
        basis.append(normalize_vector(field, v))
    return basis


def normalize_vector(field, vec):
    """Clear denominators, divide out content, orient the first nonzero entry."""
    if all(e.is_zero for e in vec):
        return list(vec)
    row = field.clear_row(vec)
    content = None
    for a in row:
        if field.ring_is_zero(a):
            continue
        content = a if content is None else field.ring_gcd(content, a)
    row = [a if field.ring_is_zero(a) else field.ring_quo(a, content) for a in row]
    out = [field.from_ring(a) for a in row]
    lead = next(e for e in out if not e.is_zero)
    if field.level == 0:
        p, _ = lead.as_rational()
        if p < 0:
            out = [-e for e in out]
    else:
        lc = FieldElement(field.base, lead.raw.numer.LC)
        scale = field.lift(lc.inverse())
        out = [e * scale for e in out]
    return out


def rref(field, rows):
    """Reduced row echelon form over the field. Returns (rows, pivot_cols)."""
    rows = [list(r) for r in rows if any(not e.is_zero for e in r)]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivot_cols = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [e * inv for e in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero:
                fac = rows[i][c]
                rows[i] = [a - fac * b for a, b in zip(rows[i], rows[r])]
        pivot_cols.append(c)
        r += 1
        if r == len(rows):
            break
    rows = [row for row in rows if any(not e.is_zero for e in row)]
    return rows, pivot_cols


def solve(field, a_rows, rhs):
    """One solution x of A x = rhs over the field, or None. Free vars are 0."""
    if not a_rows:
        return [] if all(e.is_zero for e in rhs) else None
    ncols = len(a_rows[0])
    aug = [list(r) + [b] for r, b in zip(a_rows, rhs)]
    red, pivots = rref(field, aug)
    x = [field.zero] * ncols
    for row, c in zip(red, pivots):
        if c == ncols:
            return None
        s = row[ncols]
        for j in range(c + 1, ncols):
            if not row[j].is_zero and not x[j].is_zero:
                s = s - row[j] * x[j]
        x[c] = s
    # rref leaves pivots with zeros above/below, so x is exact; verify anyway
    for r, b in zip(a_rows, rhs):
        acc = field.zero
        for aij, xj in zip(r, x):
            if not aij.is_zero and not xj.is_zero:
                acc = acc + aij * xj
        if not (acc - b).is_zero:
            return None
    return x
