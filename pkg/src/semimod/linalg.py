"""Exact dense linear algebra over the coefficient fields.

Matrices are lists of row lists holding raw field values.  Dimensions are
tiny (the module rank n), so plain Gaussian elimination is all that is
needed.  Pivoting is deterministic: columns left to right, first row with a
nonzero entry.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .fields import Field, RationalField


def rref(rows, field: Field):
    """Reduced row echelon form.  Returns (rows, pivot_columns)."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if not field.is_zero(m[i][c])), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(inv, x) for x in m[r]]
        for i in range(nrows):
            if i != r and not field.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def row_space_basis(rows, field: Field):
    """Canonical basis of the span of the given row vectors."""
    m, pivots = rref(rows, field)
    return [tuple(m[i]) for i in range(len(pivots))]


def kernel_basis(rows, ncols: int, field: Field):
    """Basis of the right null space {v : M v = 0}.

    One basis vector per free column, with a 1 in that column; this makes
    the output deterministic and reproducible.  Returns ncols - rank
    vectors (all of them for an empty matrix).
    """
    m, pivots = rref(rows, field) if rows else ([], [])
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [field.zero_raw] * ncols
        v[free] = field.one_raw
        for r, pc in enumerate(pivots):
            v[pc] = field.neg(m[r][free])
        basis.append(tuple(v))
    return basis


def primitive_scale(vec, field: Field):
    """Rescale a nonzero vector by a nonzero constant into a canonical form.

    Over Q: clear denominators, divide by the content, make the first
    nonzero entry positive (so (1/2, 1) becomes (1, 2)).  Over finite
    fields: make the first nonzero entry 1.  Membership in any submodule is
    unchanged by such scaling.
    """
    if all(field.is_zero(x) for x in vec):
        return tuple(vec)
    if isinstance(field, RationalField):
        den = 1
        for x in vec:
            den = den * x.denominator // gcd(den, x.denominator)
        ints = [int(x * den) for x in vec]
        g = 0
        for x in ints:
            g = gcd(g, abs(x))
        ints = [x // g for x in ints]
        lead = next(x for x in ints if x)
        if lead < 0:
            ints = [-x for x in ints]
        return tuple(Fraction(x) for x in ints)
    lead = next(x for x in vec if not field.is_zero(x))
    inv = field.inv(lead)
    return tuple(field.mul(inv, x) for x in vec)
