"""Commutant search: all operators of bounded shape commuting with a given one.

The commutator [L, X] is linear in the unknown scalar coefficients of
X = sum_{j=0}^{m} p_j(n) T**j, so the search is a nullspace computation:
one column per unknown scalar, one row per monomial n**a T**b (for
exponential rings, per monomial t**f n**a T**b), solved exactly over the
base field (Q, or Q(i)(E)).  A sequence-coefficient backend turns the
unknown coefficients into per-n unknowns on a window, dropping equations
that reference values outside it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    AlgebraMismatchError,
    NoSolutionWithinBounds,
    RingMismatchError,
    SizeLimitError,
    WindowError,
)
from .linalg import (
    nullspace_field,
    nullspace_numeric,
    nullspace_rational,
    solve_affine_field,
    solve_affine_numeric,
    solve_affine_rational,
)
from .ore import DifferenceOperator, commutator
from .rings import ExpPoly, Poly, RationalFunction, SeqCoefficient


@dataclass(frozen=True)
class AnsatzSpec:
    """Shape bounds for the commutant ansatz.

    ``degree_bound`` and ``freq_bound`` default to heuristics derived from L
    (twice target-order times max coefficient degree; target-order times max
    frequency); a defaulted degree bound escalates by doubling when a
    requested monic representative does not exist within it.
    """

    order: int
    degree_bound: int | None = None
    freq_bound: int | None = None
    freq_step: int | None = None
    monic: bool = False
    max_unknowns: int = 6000
    max_escalations: int = 2

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("ansatz order must be nonnegative")
        if self.degree_bound is not None and self.degree_bound < 0:
            raise ValueError("degree bound must be nonnegative")


@dataclass
class CommutantBasis:
    """Basis of the solution space of [L, X] = 0 within the ansatz bounds."""

    members: list
    dimension: int
    degree_bound: int
    freq_bound: int | None = None
    monic_member: object = None


@dataclass
class CommuteVerdict:
    """Outcome of a commutativity check, with a witness when nonzero."""

    is_zero: bool
    witness_power: int | None = None
    witness: object = None
    max_residual: float | None = None

    def __bool__(self):
        return self.is_zero


def verify_commute(a, b, tolerance=None):
    """Exact (or toleranced, for numeric sequences) check that [a, b] = 0."""
    if isinstance(a, DifferenceOperator) != isinstance(b, DifferenceOperator):
        raise AlgebraMismatchError("operands live in different operator algebras")
    if isinstance(a, DifferenceOperator) and a.coeffs and b.coeffs and a.ring != b.ring:
        raise RingMismatchError(f"difference rings differ: {a.ring} vs {b.ring}")
    k = commutator(a, b)
    if isinstance(k, DifferenceOperator) and k.ring == "seq":
        return _seq_verdict(k, tolerance)
    if k.is_zero():
        return CommuteVerdict(True)
    j = max(k.coeffs)
    return CommuteVerdict(False, witness_power=j, witness=k.coeffs[j])


def _seq_verdict(k, tolerance):
    checked = 0
    worst = 0.0
    witness = None
    exact = True
    for j in sorted(k.coeffs):
        c = k.coeffs[j]
        for i, v in enumerate(c.values):
            checked += 1
            if isinstance(v, complex):
                exact = False
            mag = abs(complex(v))
            if mag > worst:
                worst = mag
                witness = (j, c.start + i, v)
    if checked == 0:
        raise WindowError("commutator carries no defined window values")
    if exact:
        ok = worst == 0.0
    else:
        ok = worst <= (tolerance if tolerance is not None else 0.0)
    if ok:
        return CommuteVerdict(True, max_residual=worst)
    return CommuteVerdict(False, witness_power=witness[0], witness=witness, max_residual=worst)


# -- polynomial-coefficient backend ---------------------------------------------


def _poly_system(L, m, D):
    ncols = (m + 1) * (D + 1)
    rows_map = {}
    for j in range(m + 1):
        for a in range(D + 1):
            col = j * (D + 1) + a
            e = DifferenceOperator({j: Poly.monomial(a)})
            K = L * e - e * L
            for b, cb in K.coeffs.items():
                for adeg, val in enumerate(cb.coeffs):
                    if val:
                        rows_map.setdefault((b, adeg), {})[col] = val
    rows = [rows_map[key] for key in sorted(rows_map)]
    return rows, ncols


def _poly_member(vec, m, D):
    coeffs = {}
    for j in range(m + 1):
        base = j * (D + 1)
        p = Poly(vec[base : base + D + 1])
        if p:
            coeffs[j] = p
    return DifferenceOperator(coeffs, "poly")


def _find_poly(L, spec):
    m = spec.order
    D = spec.degree_bound
    defaulted = D is None
    if defaulted:
        D = 2 * m * L.max_coeff_degree()
    tries = 0
    while True:
        if (m + 1) * (D + 1) > spec.max_unknowns:
            raise SizeLimitError(f"ansatz would need {(m + 1) * (D + 1)} unknowns")
        rows, ncols = _poly_system(L, m, D)
        vecs = nullspace_rational(rows, ncols)
        members = [_poly_member(v, m, D) for v in vecs]
        result = CommutantBasis(members, len(members), D)
        if not spec.monic:
            return result
        rhs = [Fraction(0)] * len(rows)
        aug_rows = list(rows)
        base = m * (D + 1)
        for a in range(D + 1):
            aug_rows.append({base + a: Fraction(1)})
            rhs.append(Fraction(1) if a == 0 else Fraction(0))
        sol = solve_affine_rational(aug_rows, rhs, ncols)
        if sol is not None:
            result.monic_member = _poly_member(sol, m, D)
            return result
        if defaulted and tries < spec.max_escalations:
            tries += 1
            D = max(1, 2 * D)
            continue
        raise NoSolutionWithinBounds(
            f"no monic order-{m} operator commutes with L within degree bound {D}"
        )


# -- exponential-coefficient backend ----------------------------------------------


def _freq_lattice(L, F, step):
    """Ansatz frequencies: the lattice spanned by L's own frequencies.

    When the leading coefficient of L is a frequency-0 constant, a component
    of a commuting operator at a frequency outside that lattice is killed by
    a top-down cascade (the top equation reads E**(2f) p = sigma**2-shifted p
    and E**(2f) != 1 for f != 0), so restricting the unknowns loses nothing.
    ``step=1`` always gives the full range.
    """
    if step is None:
        from math import gcd

        lead = L.coefficient(L.max_power)
        lead_const = True
        try:
            lead.constant_value()
        except ValueError:
            lead_const = False
        if lead_const:
            step = 0
            for c in L.coeffs.values():
                for f in c.parts:
                    step = gcd(step, abs(f))
        else:
            step = 1
    if step == 0:
        return [0], 0
    return [f for f in range(-F, F + 1) if f % step == 0], step


def _exp_system(L, m, D, freqs):
    ncols = (m + 1) * len(freqs) * (D + 1)
    rf_one = RationalFunction(1)
    rows_map = {}
    col = 0
    for j in range(m + 1):
        for f in freqs:
            for a in range(D + 1):
                e = DifferenceOperator(
                    {j: ExpPoly({f: Poly.monomial(a, coeff=rf_one, scalar=RationalFunction)})}
                )
                K = L * e - e * L
                for b, cb in K.coeffs.items():
                    for f_out, p in cb.parts.items():
                        for adeg, val in enumerate(p.coeffs):
                            if val:
                                rows_map.setdefault((b, f_out, adeg), {})[col] = val
                col += 1
    rows = [rows_map[key] for key in sorted(rows_map)]
    return rows, ncols


def _exp_member(vec, m, D, freqs, template):
    width = len(freqs) * (D + 1)
    coeffs = {}
    for j in range(m + 1):
        parts = {}
        for fi, f in enumerate(freqs):
            cs = []
            for a in range(D + 1):
                col = j * width + fi * (D + 1) + a
                cs.append(vec.get(col, RationalFunction(0)) if isinstance(vec, dict) else vec[col])
            p = Poly(cs, RationalFunction)
            if p:
                parts[f] = p
        if parts:
            coeffs[j] = ExpPoly(parts, template.scalar, template.e_base)
    return DifferenceOperator(coeffs, "exp_poly")


def _find_exp(L, spec):
    m = spec.order
    D = spec.degree_bound
    defaulted = D is None
    if defaulted:
        D = 2 * m * L.max_coeff_degree()
    F = spec.freq_bound
    if F is None:
        F = m * L.max_frequency()
    freqs, _ = _freq_lattice(L, F, spec.freq_step)
    template = L._template()
    one = RationalFunction(1)
    tries = 0
    while True:
        if (m + 1) * len(freqs) * (D + 1) > spec.max_unknowns:
            raise SizeLimitError("exponential ansatz exceeds the unknown-count cap")
        rows, ncols = _exp_system(L, m, D, freqs)
        vecs = nullspace_field(rows, ncols, one)
        members = [_exp_member(v, m, D, freqs, template) for v in vecs]
        result = CommutantBasis(members, len(members), D, freq_bound=F)
        if not spec.monic:
            return result
        rhs_key = ncols
        aug = [dict(r) for r in rows]
        width = len(freqs) * (D + 1)
        zero_fi = freqs.index(0)
        for fi in range(len(freqs)):
            for a in range(D + 1):
                col = m * width + fi * (D + 1) + a
                row = {col: one}
                if fi == zero_fi and a == 0:
                    row[rhs_key] = one
                aug.append(row)
        sol = solve_affine_field(aug, rhs_key, one)
        if sol is not None:
            result.monic_member = _exp_member(sol, m, D, freqs, template)
            return result
        if defaulted and tries < spec.max_escalations:
            tries += 1
            D = max(1, 2 * D)
            continue
        raise NoSolutionWithinBounds(
            f"no monic order-{m} operator within degree {D}, frequency {F}"
        )


# -- sequence backend --------------------------------------------------------------


def _seq_windows(L):
    lo = None
    hi = None
    for c in L.coeffs.values():
        s, e = c.window()
        lo = s if lo is None else max(lo, s)
        hi = e if hi is None else min(hi, e)
    if lo is None or hi < lo:
        raise WindowError("sequence operator has no common window")
    return lo, hi


def _seq_system(L, m, lo, hi):
    """Rows of the linear system for per-n unknowns u[(j, n0)].

    Equation at (T-power b, site n):
      sum_{a+j=b} c_a(n) * u[j, n+a] - c_a(n+j) * u[j, n] = 0,
    kept only when every referenced value exists (boundary rows dropped).
    """
    width = hi - lo + 1
    supp = sorted(L.coeffs)
    rows = []
    numeric = any(c.is_numeric() for c in L.coeffs.values())
    for b in range(min(supp), m + max(supp) + 1):
        pairs = [(a, b - a) for a in supp if 0 <= b - a <= m]
        if not pairs:
            continue
        for n in range(lo - max(supp) - m, hi + max(supp) + m + 1):
            entries = {}
            ok = True
            for a, j in pairs:
                c = L.coeffs[a]
                if not (c.defined_at(n) and c.defined_at(n + j)):
                    ok = False
                    break
                if not (lo <= n + a <= hi and lo <= n <= hi):
                    ok = False
                    break
                col_shift = j * width + (n + a - lo)
                col_self = j * width + (n - lo)
                entries[col_shift] = entries.get(col_shift, 0) + c.at(n)
                entries[col_self] = entries.get(col_self, 0) - c.at(n + j)
            if not ok:
                continue
            entries = {c: v for c, v in entries.items() if v}
            if entries:
                rows.append(entries)
    return rows, (m + 1) * width, numeric


def _seq_member(vec, m, lo, hi, numeric):
    width = hi - lo + 1
    coeffs = {}
    for j in range(m + 1):
        vals = []
        for i in range(width):
            v = vec[j * width + i]
            vals.append(complex(v) if numeric else v)
        c = SeqCoefficient(lo, vals)
        if not c.all_zero():
            coeffs[j] = c
    return DifferenceOperator(coeffs, "seq") if coeffs else DifferenceOperator({}, "seq")


def _find_seq(L, spec, tolerance=1e-9):
    m = spec.order
    lo, hi = _seq_windows(L)
    rows, ncols, numeric = _seq_system(L, m, lo, hi)
    if ncols > spec.max_unknowns:
        raise SizeLimitError("sequence ansatz exceeds the unknown-count cap")
    width = hi - lo + 1
    if numeric:
        import numpy as np

        dense = np.zeros((len(rows), ncols), dtype=complex)
        for r, row in enumerate(rows):
            for c, v in row.items():
                dense[r, c] = complex(v)
        basis = nullspace_numeric(dense, tol=tolerance)
        members = [_seq_member(vec, m, lo, hi, True) for vec in basis]
        result = CommutantBasis(members, len(members), 0)
        if spec.monic:
            cons = np.zeros((width, ncols), dtype=complex)
            rhs = np.concatenate([np.zeros(len(rows), dtype=complex), np.ones(width, dtype=complex)])
            for i in range(width):
                cons[i, m * width + i] = 1.0
            sol = solve_affine_numeric(np.vstack([dense, cons]), rhs, tol=tolerance)
            if sol is None:
                raise NoSolutionWithinBounds("no monic representative on this window")
            result.monic_member = _seq_member(sol, m, lo, hi, True)
        return result
    frows = [{c: Fraction(v) for c, v in row.items()} for row in rows]
    vecs = nullspace_rational(frows, ncols)
    members = [_seq_member(v, m, lo, hi, False) for v in vecs]
    result = CommutantBasis(members, len(members), 0)
    if spec.monic:
        rhs = [Fraction(0)] * len(frows)
        aug = list(frows)
        for i in range(width):
            aug.append({m * width + i: Fraction(1)})
            rhs.append(Fraction(1))
        sol = solve_affine_rational(aug, rhs, ncols)
        if sol is None:
            raise NoSolutionWithinBounds("no monic representative on this window")
        result.monic_member = _seq_member(sol, m, lo, hi, False)
    return result


def find_commuting(L, spec):
    """Basis of {X : [L, X] = 0} within the ansatz bounds.

    X ranges over sum_{j=0}^{m} p_j(n) T**j with deg p_j <= degree bound (and
    |frequency| <= frequency bound over the exponential ring).  When
    ``spec.monic`` is set, a representative with leading coefficient 1 is
    additionally selected (free coordinates zeroed in the fixed column
    order) and stored as ``monic_member``.
    """
    if not isinstance(L, DifferenceOperator):
        raise AlgebraMismatchError("commutant search expects a difference operator")
    if L.is_zero():
        raise ValueError("commutant of the zero operator is unconstrained")
    if L.ring == "poly":
        return _find_poly(L, spec)
    if L.ring == "exp_poly":
        return _find_exp(L, spec)
    return _find_seq(L, spec)


def find_monic_commuting(L, order, degree_bound=None, freq_bound=None):
    """Monic order-``order`` operator commuting with L, or raise."""
    spec = AnsatzSpec(order=order, degree_bound=degree_bound, freq_bound=freq_bound, monic=True)
    return find_commuting(L, spec).monic_member
