"""Exact nullspace and affine-solve kernels for the commutant search.

Two exact paths:

* over Q, rows are cleared to primitive integer vectors and reduced by
  fraction-free (Bareiss-style) elimination with the single previous-pivot
  denominator, then back-substituted with Fractions;
* over an arbitrary exact field (Q(i), Q(i)(E)), sparse Gauss-Jordan with
  canonical field arithmetic is used instead -- the Bareiss update rule is a
  poor fit there because its entries are genuine minors whose polynomial
  degrees grow with the elimination depth, while canonical gcd-reduced
  entries stay near the size of the data.

A numeric SVD path serves the double-precision sequence mode.

All pivot choices are deterministic (fixed scan order, documented
tie-breaks), so identical inputs always give identical bases.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


# -- integer (Bareiss) path ----------------------------------------------------


def _int_rows(rows, width, rhs=None):
    """Clear sparse Fraction rows to dense primitive integer rows."""
    out = []
    for idx, r in enumerate(rows):
        den = 1
        for v in r.values():
            den = lcm(den, v.denominator)
        b = rhs[idx] if rhs is not None else None
        if b:
            den = lcm(den, b.denominator)
        dense = [0] * (width + (1 if rhs is not None else 0))
        g = 0
        for c, v in r.items():
            iv = int(v * den)
            dense[c] = iv
            g = gcd(g, iv)
        if rhs is not None and b:
            iv = int(b * den)
            dense[width] = iv
            g = gcd(g, iv)
        if g > 1:
            dense = [x // g for x in dense]
        if any(dense):
            out.append(dense)
    return out


def bareiss_echelon(m, width, npivot):
    """In-place fraction-free echelon form.

    ``m`` is a list of integer rows of length ``width``; only the first
    ``npivot`` columns are eligible as pivots (trailing columns ride along,
    e.g. an affine right-hand side).  Returns (rows, pivot_columns); rows
    beyond len(pivot_columns) are zero in every pivot-eligible column but may
    keep nonzero trailing entries (an inconsistency witness).  Pivot choice:
    among candidate rows the one with the smallest absolute pivot value,
    ties to the lowest row index.
    """
    nrows = len(m)
    prev = 1
    rank = 0
    pivots = []
    for col in range(npivot):
        best = None
        best_abs = None
        for i in range(rank, nrows):
            v = m[i][col]
            if v:
                a = -v if v < 0 else v
                if best is None or a < best_abs:
                    best, best_abs = i, a
        if best is None:
            continue
        if best != rank:
            m[rank], m[best] = m[best], m[rank]
        piv_row = m[rank]
        p = piv_row[col]
        for i in range(rank + 1, nrows):
            ri = m[i]
            f = ri[col]
            if f:
                for j in range(col, width):
                    a = ri[j] * p - f * piv_row[j]
                    if a:
                        q, rem = divmod(a, prev)
                        if rem:
                            raise ArithmeticError("fraction-free division failed")
                        ri[j] = q
                    else:
                        ri[j] = 0
            elif prev != p:
                for j in range(col + 1, width):
                    a = ri[j]
                    if a:
                        q, rem = divmod(a * p, prev)
                        if rem:
                            raise ArithmeticError("fraction-free division failed")
                        ri[j] = q
        pivots.append(col)
        prev = p
        rank += 1
        if rank == nrows:
            break
    return m, pivots


def nullspace_rational(rows, ncols):
    """Basis of the rational nullspace of sparse Fraction rows.

    Returns dense Fraction vectors in the canonical reduced form: one vector
    per free column, carrying 1 there and 0 at every other free column.
    """
    m = _int_rows(rows, ncols)
    ech, pivots = bareiss_echelon(m, ncols, ncols)
    pivset = set(pivots)
    basis = []
    for fc in range(ncols):
        if fc in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            row = ech[r]
            s = Fraction(0)
            for c in range(pc + 1, ncols):
                if row[c] and v[c]:
                    s += v[c] * row[c]
            if s:
                v[pc] = -s / row[pc]
        basis.append(v)
    return basis


def solve_affine_rational(rows, rhs, ncols):
    """One exact solution of A x = b with every free variable set to zero.

    ``rows`` are sparse Fraction dicts, ``rhs`` the matching Fraction values.
    Returns a dense Fraction vector, or None when the system is inconsistent.
    """
    m = _int_rows(rows, ncols, rhs=rhs)
    ech, pivots = bareiss_echelon(m, ncols + 1, ncols)
    for r in range(len(pivots), len(ech)):
        if ech[r][ncols]:
            return None
    ech = ech[: len(pivots)]
    v = [Fraction(0)] * ncols
    for r in range(len(pivots) - 1, -1, -1):
        pc = pivots[r]
        row = ech[r]
        s = Fraction(row[ncols])
        for c in range(pc + 1, ncols):
            if row[c] and v[c]:
                s -= v[c] * row[c]
        v[pc] = s / row[pc]
    return v


# -- generic exact field path ----------------------------------------------------


def rref_field(rows, one, forbid=None):
    """Sparse Gauss-Jordan over an exact field.

    ``rows`` is a list of dicts col -> field value; ``one`` the field unit.
    Pivot columns are chosen in ascending order; among candidate rows the one
    with the fewest nonzeros wins, ties to the lowest index.  Returns the
    list of (pivot_column, reduced_row) sorted by pivot column, or raises
    ValueError if a pivot lands on a column in ``forbid`` (used to detect an
    inconsistent affine system).
    """
    active = [dict(r) for r in rows if r]
    settled = []
    while active:
        col = min(min(r) for r in active)
        if forbid is not None and col in forbid:
            raise ValueError("pivot on forbidden column")
        best_i = None
        best_nnz = None
        for i, r in enumerate(active):
            if col in r:
                nz = len(r)
                if best_i is None or nz < best_nnz:
                    best_i, best_nnz = i, nz
        row = active.pop(best_i)
        inv = one / row[col]
        row = {c: v * inv for c, v in row.items()}
        row[col] = one

        def eliminate(r):
            f = r.get(col)
            if f is None:
                return r
            out = dict(r)
            del out[col]
            for c, v in row.items():
                if c == col:
                    continue
                fv = f * v
                if c in out:
                    nv = out[c] - fv
                    if nv:
                        out[c] = nv
                    else:
                        del out[c]
                else:
                    out[c] = -fv
            return out

        active = [r2 for r2 in (eliminate(r) for r in active) if r2]
        settled = [(pc, eliminate(pr)) for pc, pr in settled]
        settled.append((col, row))
    settled.sort(key=lambda t: t[0])
    return settled


def nullspace_field(rows, ncols, one):
    """Canonical nullspace basis over an exact field, as sparse dict vectors."""
    settled = rref_field(rows, one)
    pivcols = {pc for pc, _ in settled}
    basis = []
    for fc in range(ncols):
        if fc in pivcols:
            continue
        v = {fc: one}
        for pc, row in settled:
            coef = row.get(fc)
            if coef:
                v[pc] = -coef
        basis.append(v)
    return basis


def solve_affine_field(rows, rhs_key, one):
    """Particular solution (free variables zero) of an affine sparse system.

    The right-hand side is stored in each row under the key ``rhs_key``
    (larger than every unknown column).  Returns a dict col -> value or None
    when inconsistent.
    """
    try:
        settled = rref_field(rows, one, forbid={rhs_key})
    except ValueError:
        return None
    v = {}
    for pc, row in settled:
        b = row.get(rhs_key)
        if b:
            v[pc] = b
    return v


# -- numeric path ----------------------------------------------------------------


def nullspace_numeric(a, tol=1e-9):
    """Orthonormal nullspace rows of a dense complex matrix via SVD."""
    import numpy as np

    a = np.asarray(a, dtype=complex)
    if a.size == 0:
        return np.eye(a.shape[1], dtype=complex)
    u, s, vh = np.linalg.svd(a)
    if s.size:
        rank = int((s > tol * s[0]).sum())
    else:
        rank = 0
    return vh[rank:].conj()


def solve_affine_numeric(a, b, tol=1e-9):
    """Least-squares solution of A x = b, or None when the residual is large."""
    import numpy as np

    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    x, *_ = np.linalg.lstsq(a, b, rcond=None)
    scale = max(1.0, float(np.abs(b).max(initial=0.0)))
    if np.abs(a @ x - b).max(initial=0.0) > tol * scale:
        return None
    return x
