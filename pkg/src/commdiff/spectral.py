"""Spectral-curve extraction and the dressing-chain machinery.

A commuting pair (L2 monic of order 2, M monic of odd order 2g+1) lies on a
hyperelliptic curve w**2 = F(z) with F monic of degree 2g+1; ``curve_from_pair``
recovers F by subtracting multiples of powers of L2 from M**2, top order
down.  Generic monic members of the commutant differ from the canonical odd
partner by a polynomial in L2; ``normalize_odd_partner`` completes the
square (M**2 = F(L2) + G(L2)*M  =>  M - G(L2)/2) so the strict extraction
applies.

The genus-1 dressing chain is built from an arbitrary parameter sequence
gamma_n together with square roots of F1(gamma_n):

    U_n = -(r_n + r_{n+1}) / (gamma_n - gamma_{n+1}),
    W_n = -c2 - gamma_n - gamma_{n+1},
    Q_n(z) = z - gamma_n,
    S_n(z) = -U_n z + delta0(n),

with the free sign in delta0(n) = U_n*gamma_n +- r_n resolved so that
S_n + S_{n+1} = -(U_n + U_{n+1}) Q_{n+1}.  The chain then satisfies, for
every n in the window,

    F(z) = S_n(z)**2 + Q_n(z) Q_{n+1}(z) (z - U_n**2 - W_n)

coefficient-wise in z, the linearized three-term identity obtained by
differencing consecutive instances, and the first-order factorization

    L2 - z = (T + U_n + U_{n+1} + chi(n+1, P)) (T - chi(n, P)),

where chi(n, P) = (S_n(z) + w)/Q_n(z) is the one-step eigenfunction ratio.
Baker-Akhiezer values are telescoping products of chi with psi(0, P) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ChainConstructionError,
    CurveExtractionError,
    PointError,
    WindowError,
)
from .ore import DifferenceOperator, DifferentialOperator, poly_eval
from .rings import ExpPoly, Poly, RationalFunction

_NUMERIC_TOL = 1e-9


def _is_numeric(v):
    return isinstance(v, (float, complex))


@dataclass(frozen=True)
class CurveData:
    """Monic odd-degree hyperelliptic curve w**2 = z**(2g+1) + sum c_i z**i.

    ``coeffs`` lists c_0 .. c_{2g}; the leading 1 is implicit.  Entries are
    exact rationals, exact elements of Q(i)(E), or numeric.
    """

    coeffs: tuple

    def __post_init__(self):
        cs = tuple(self.coeffs)
        if len(cs) % 2 == 0 or not cs:
            raise ValueError("hyperelliptic data needs 2g+1 coefficients c_0..c_{2g}")
        object.__setattr__(self, "coeffs", cs)

    @property
    def genus(self):
        return len(self.coeffs) // 2

    @property
    def degree(self):
        return len(self.coeffs)

    def poly(self, scalar=Fraction):
        return Poly(list(self.coeffs) + [1], scalar)

    def eval(self, z):
        coeffs = list(self.coeffs) + [1]
        acc = coeffs[-1]
        for c in reversed(coeffs[:-1]):
            acc = acc * z + c
        return acc


@dataclass(frozen=True)
class CurvePoint:
    """A point (z, w); on the curve when w**2 = F(z)."""

    z: object
    w: object

    def is_numeric(self):
        return _is_numeric(self.z) or _is_numeric(self.w)

    def on_curve(self, curve, tol=_NUMERIC_TOL * 0.1):
        lhs = self.w * self.w
        rhs = curve.eval(self.z)
        if self.is_numeric() or _is_numeric(rhs):
            scale = max(1.0, abs(complex(rhs)))
            return abs(complex(lhs) - complex(rhs)) < tol * scale
        return lhs == rhs


@dataclass
class IdentityVerdict:
    """Outcome of a polynomial/scalar identity check."""

    is_zero: bool
    max_residual: float = 0.0
    residual: object = None

    def __bool__(self):
        return self.is_zero


# -- Burchnall-Chaundy extraction ------------------------------------------------


def _coeff_constant(c):
    """Read a ring coefficient as a base-field constant, or raise ValueError."""
    if isinstance(c, Poly):
        return c.constant_value()
    if isinstance(c, ExpPoly):
        return c.constant_value()
    raise ValueError("unsupported coefficient")


def _is_monic(op):
    top = op.coefficient(op.max_power)
    if isinstance(top, Poly):
        return top.is_constant() and top.constant_value() == 1
    if isinstance(top, ExpPoly):
        try:
            return top.constant_value() == RationalFunction(1)
        except ValueError:
            return False
    return False


def curve_from_pair(l2, lodd):
    """Monic F with lodd**2 = F(l2), by top-down residual subtraction.

    For difference operators both inputs must be monic with nonnegative
    powers; for differential pairs the leading coefficient of ``l2`` need not
    be constant and exact division by its powers is used instead.  Raises
    CurveExtractionError when the pair admits no such relation.
    """
    if isinstance(l2, DifferenceOperator) != isinstance(lodd, DifferenceOperator):
        raise CurveExtractionError("pair mixes operator algebras")
    difference = isinstance(l2, DifferenceOperator)
    if l2.is_zero() or lodd.is_zero():
        raise CurveExtractionError("zero operator in pair")
    if difference:
        if l2.min_power < 0 or lodd.min_power < 0:
            raise CurveExtractionError("negative shift powers admit no polynomial relation here")
        if not _is_monic(l2) or not _is_monic(lodd):
            raise CurveExtractionError("curve extraction needs monic operators")
    ord2 = l2.max_power
    if ord2 == 0:
        raise CurveExtractionError("order of the even operator must be positive")
    total = 2 * lodd.max_power
    if total % ord2:
        raise CurveExtractionError("orders are incompatible with a polynomial relation")
    deg_f = total // ord2
    lead = l2.coefficient(ord2)
    powers = [l2._const_like(1)]
    for _ in range(deg_f):
        powers.append(powers[-1] * l2)
    residual = lodd * lodd
    coeffs = [None] * (deg_f + 1)
    for i in range(deg_f, -1, -1):
        target = i * ord2
        top = residual.max_power
        if top is None:
            coeffs[i] = Fraction(0)
            continue
        if top > target:
            raise CurveExtractionError(f"unreducible term at power {top}")
        if top < target:
            coeffs[i] = Fraction(0)
            continue
        co = residual.coefficient(target)
        try:
            if difference:
                ci = _coeff_constant(co)
            else:
                q = co // (lead ** i) if i else co
                ci = q.constant_value()
        except (ValueError, ZeroDivisionError) as exc:
            raise CurveExtractionError(
                f"power-{target} coefficient is not a constant multiple of the expected leading term"
            ) from exc
        coeffs[i] = ci
        if ci:
            residual = residual - powers[i] * ci
    if not residual.is_zero():
        raise CurveExtractionError("nonzero final residual: no hyperelliptic relation of this shape")
    if coeffs[-1] != 1:
        raise CurveExtractionError("extracted relation is not monic")
    return CurveData(tuple(coeffs[:-1]))


def normalize_odd_partner(l2, m):
    """Remove the even half of a monic odd commutant member.

    A monic odd-order operator commuting with a monic order-2 operator
    satisfies m**2 = F(l2) + G(l2)*m; subtracting G(l2)/2 yields the member
    whose square is a polynomial in l2 alone, which is what
    ``curve_from_pair`` expects.
    """
    if not isinstance(m, DifferenceOperator) or not isinstance(l2, DifferenceOperator):
        raise CurveExtractionError("normalization expects difference operators")
    if not _is_monic(l2) or not _is_monic(m):
        raise CurveExtractionError("normalization needs monic operators")
    ord2 = l2.max_power
    ordm = m.max_power
    if ord2 != 2 or ordm % 2 == 0:
        raise CurveExtractionError("expected a (order 2, odd order) pair")
    g = (ordm - ord2 + 1) // 2  # ordm = 2g+1
    powers = [l2._const_like(1)]
    for _ in range(ordm):
        powers.append(powers[-1] * l2)
    residual = m * m
    g_coeffs = [None] * (g + 1)
    while not residual.is_zero():
        top = residual.max_power
        co = residual.coefficient(top)
        try:
            c = _coeff_constant(co)
        except ValueError as exc:
            raise CurveExtractionError(
                "pair does not generate a rank-one hyperelliptic relation"
            ) from exc
        if top % 2 == 0:
            i = top // 2
            if i > ordm:
                raise CurveExtractionError("even residual power out of range")
            residual = residual - powers[i] * c
        else:
            j = (top - ordm) // 2
            if j < 0:
                raise CurveExtractionError("odd residual power below the partner order")
            g_coeffs[j] = c
            residual = residual - (powers[j] * m) * c
    correction = None
    for j, c in enumerate(g_coeffs):
        if c:
            term = powers[j] * (c / 2)
            correction = term if correction is None else correction + term
    if correction is None:
        return m
    return m - correction


# -- dressing chain ----------------------------------------------------------------


@dataclass(frozen=True)
class DressingChain:
    """Window of dressing data: gamma, sqrt-F values, U, W, S(z), Q(z).

    Indexing is absolute: gamma_n and Q_n exist for n in [start, stop],
    U_n, W_n, S_n for n in [start, stop-1].  Values are exact Fractions or
    complex doubles; polynomials in z are over the matching scalar.
    """

    start: int
    gamma: tuple
    sqrt_f: tuple
    u: tuple
    w: tuple
    s: tuple
    q: tuple
    exact: bool

    @property
    def stop(self):
        return self.start + len(self.gamma) - 1

    def _look(self, seq, n, last):
        i = n - self.start
        if not (0 <= i < len(seq)):
            raise WindowError(f"chain index n={n} outside [{self.start}, {last}]")
        return seq[i]

    def gamma_at(self, n):
        return self._look(self.gamma, n, self.stop)

    def sqrt_f_at(self, n):
        return self._look(self.sqrt_f, n, self.stop)

    def u_at(self, n):
        return self._look(self.u, n, self.stop - 1)

    def w_at(self, n):
        return self._look(self.w, n, self.stop - 1)

    def s_at(self, n):
        return self._look(self.s, n, self.stop - 1)

    def q_at(self, n):
        return self._look(self.q, n, self.stop)


def _nonzero(v, scale=1.0):
    if _is_numeric(v):
        return abs(v) > _NUMERIC_TOL * max(1.0, scale)
    return bool(v)


def chain_from_gamma(curve, gamma, sqrt_f, start=0):
    """Genus-1 dressing chain from a parameter sequence and chosen roots.

    ``sqrt_f[k]`` must square to F1(gamma[k]) (exactly for rational data,
    within tolerance for numeric data); adjacent gamma values must differ
    and consecutive U-sums must be nonzero.
    """
    if curve.genus != 1:
        raise ChainConstructionError("explicit chain construction is genus-1 only")
    gamma = list(gamma)
    sqrt_f = list(sqrt_f)
    if len(gamma) != len(sqrt_f):
        raise ChainConstructionError("gamma and sqrt-F sequences differ in length")
    if len(gamma) < 2:
        raise ChainConstructionError("window must contain at least two points")
    numeric = any(_is_numeric(v) for v in gamma + sqrt_f + list(curve.coeffs))
    if numeric:
        gamma = [complex(v) for v in gamma]
        sqrt_f = [complex(v) for v in sqrt_f]
        scalar = complex
    else:
        gamma = [Fraction(v) if not isinstance(v, Fraction) else v for v in gamma]
        sqrt_f = [Fraction(v) if not isinstance(v, Fraction) else v for v in sqrt_f]
        scalar = Fraction
    for k, (gv, rv) in enumerate(zip(gamma, sqrt_f)):
        fg = curve.eval(gv)
        if numeric:
            if abs(rv * rv - fg) > _NUMERIC_TOL * max(1.0, abs(fg)):
                raise ChainConstructionError(f"sqrt-F value at offset {k} does not square to F(gamma)")
        elif rv * rv != fg:
            raise ChainConstructionError(f"sqrt-F value at offset {k} does not square to F(gamma)")
    n_pts = len(gamma)
    u = []
    w = []
    c2 = curve.coeffs[2]
    for k in range(n_pts - 1):
        dg = gamma[k] - gamma[k + 1]
        if not _nonzero(dg, max(abs(complex(gamma[k])), 1.0) if numeric else 1.0):
            raise ChainConstructionError(f"gamma collision at offsets {k}, {k + 1}")
        u.append(-(sqrt_f[k] + sqrt_f[k + 1]) / dg)
        w.append(-c2 - gamma[k] - gamma[k + 1])
    for k in range(1, n_pts - 1):
        total = u[k - 1] + u[k]
        if not _nonzero(total, abs(complex(u[k])) if numeric else 1.0):
            raise ChainConstructionError(f"U_(n-1) + U_n vanishes at offset {k}")
    # Greedy left-to-right sign scan for delta0(k) = u_k*gamma_k + eps_k*sqrt_f_k,
    # constrained by delta0(k) + delta0(k+1) = (u_k + u_{k+1}) * gamma_{k+1}.
    delta0 = [u[0] * gamma[0] + sqrt_f[0]]
    for k in range(n_pts - 2):
        t = (u[k] + u[k + 1]) * gamma[k + 1] - delta0[k] - u[k + 1] * gamma[k + 1]
        scale = abs(complex(t)) if numeric else 1.0
        plus_ok = not _nonzero(sqrt_f[k + 1] - t, scale)
        minus_ok = not _nonzero(sqrt_f[k + 1] + t, scale)
        if plus_ok and minus_ok and _nonzero(sqrt_f[k + 1]):
            raise ChainConstructionError(f"ambiguous sign resolution at offset {k + 1}")
        if plus_ok:
            eps = 1
        elif minus_ok:
            eps = -1
        else:
            raise ChainConstructionError(f"no consistent sign assignment at offset {k + 1}")
        delta0.append(u[k + 1] * gamma[k + 1] + eps * sqrt_f[k + 1])
    s = [Poly([delta0[k], -u[k]], scalar) for k in range(n_pts - 1)]
    q = [Poly([-gamma[k], 1], scalar) for k in range(n_pts)]
    chain = DressingChain(
        start=int(start),
        gamma=tuple(gamma),
        sqrt_f=tuple(sqrt_f),
        u=tuple(u),
        w=tuple(w),
        s=tuple(s),
        q=tuple(q),
        exact=not numeric,
    )
    _assert_q_ratio(chain)
    return chain


def _assert_q_ratio(chain):
    """Q_n must match -(S_{n-1}+S_n)/(U_{n-1}+U_n) on the interior."""
    for n in range(chain.start + 1, chain.stop):
        lhs = chain.q_at(n) * (chain.u_at(n - 1) + chain.u_at(n))
        rhs = -(chain.s_at(n - 1) + chain.s_at(n))
        diff = lhs - rhs
        if chain.exact:
            ok = not diff
        else:
            scale = max(1.0, max((abs(c) for c in rhs.coeffs), default=1.0))
            ok = all(abs(c) <= _NUMERIC_TOL * scale for c in diff.coeffs)
        if not ok:
            raise ChainConstructionError(f"defining ratio for Q fails at n={n}")


def chain_from_data(curve, start, gamma, sqrt_f, u, w, s, q, exact=True):
    """Wrap caller-supplied chain data (general genus) without reconstruction.

    S_n and Q_n are given as ascending z-coefficient lists; consistency is
    checked (leading coefficient of S_n equals -U_n, the defining ratio for
    Q on the interior) but nothing is derived.
    """
    scalar = Fraction if exact else complex
    s_polys = tuple(Poly(cs, scalar) for cs in s)
    q_polys = tuple(Poly(cs, scalar) for cs in q)
    g = curve.genus
    for k, p in enumerate(s_polys):
        if p.degree > g:
            raise ChainConstructionError(f"S at offset {k} exceeds degree {g}")
        lead_ok = p[g] == -u[k] if exact else abs(complex(p[g]) + complex(u[k])) <= _NUMERIC_TOL
        if not lead_ok:
            raise ChainConstructionError(f"S leading coefficient differs from -U at offset {k}")
    chain = DressingChain(
        start=int(start),
        gamma=tuple(gamma),
        sqrt_f=tuple(sqrt_f),
        u=tuple(u),
        w=tuple(w),
        s=s_polys,
        q=q_polys,
        exact=exact,
    )
    _assert_q_ratio(chain)
    return chain


def _poly_verdict(diff, exact, scale=1.0):
    if exact:
        return IdentityVerdict(not diff, 0.0 if not diff else float("inf"), diff)
    worst = max((abs(complex(c)) for c in diff.coeffs), default=0.0)
    return IdentityVerdict(worst <= _NUMERIC_TOL * max(1.0, scale), worst, diff)


def verify_curve_identity(chain, curve, n):
    """Check F(z) - S_n**2 - Q_n Q_{n+1} (z - U_n**2 - W_n) = 0 in z."""
    s_n = chain.s_at(n)
    q_n = chain.q_at(n)
    q_n1 = chain.q_at(n + 1)
    u_n = chain.u_at(n)
    w_n = chain.w_at(n)
    scalar = Fraction if chain.exact else complex
    f = curve.poly(scalar)
    factor = Poly([-(u_n * u_n) - w_n, 1], scalar)
    diff = f - s_n * s_n - q_n * q_n1 * factor
    scale = max((abs(complex(c)) for c in f.coeffs), default=1.0)
    return _poly_verdict(diff, chain.exact, scale)


def verify_chain_recurrence(chain, n):
    """Check the linearized three-term identity at n (needs n..n+2 in window)."""
    s_n, s_n1 = chain.s_at(n), chain.s_at(n + 1)
    u_n, u_n1 = chain.u_at(n), chain.u_at(n + 1)
    w_n, w_n1 = chain.w_at(n), chain.w_at(n + 1)
    q_n, q_n2 = chain.q_at(n), chain.q_at(n + 2)
    scalar = Fraction if chain.exact else complex
    f_n = Poly([-(u_n * u_n) - w_n, 1], scalar)
    f_n1 = Poly([-(u_n1 * u_n1) - w_n1, 1], scalar)
    diff = (s_n - s_n1) * (u_n + u_n1) - q_n * f_n + q_n2 * f_n1
    scale = max((abs(complex(c)) for c in (s_n - s_n1).coeffs), default=1.0)
    return _poly_verdict(diff, chain.exact, scale)


def eigenfunction_ratio(chain, n, point):
    """chi(n, P) = (S_n(z) + w) / Q_n(z); the one-step ratio of psi values."""
    q_val = chain.q_at(n).eval(point.z)
    scale = max(1.0, abs(complex(point.z)))
    if (chain.exact and not point.is_numeric() and not q_val) or (
        (not chain.exact or point.is_numeric()) and abs(complex(q_val)) <= 1e-12 * scale
    ):
        raise PointError(f"point z-value hits the zero of Q at n={n}")
    s_val = chain.s_at(n).eval(point.z)
    return (s_val + point.w) / q_val


def verify_factorization(chain, curve, n, point):
    """Check the two scalar identities of the first-order factorization at P.

    With chi' = chi(n+1, P) and chi = chi(n, P):
      (i)  (U_n + U_{n+1} + chi') - chi' = U_n + U_{n+1},
      (ii) -(U_n + U_{n+1} + chi') * chi = U_n**2 + W_n - z.
    Identity (ii) uses w**2 = F(z), so off-curve points fail it.
    """
    chi_n = eigenfunction_ratio(chain, n, point)
    chi_n1 = eigenfunction_ratio(chain, n + 1, point)
    u_sum = chain.u_at(n) + chain.u_at(n + 1)
    lhs_t = (u_sum + chi_n1) - chi_n1 - u_sum
    lhs_c = -(u_sum + chi_n1) * chi_n - (chain.u_at(n) * chain.u_at(n) + chain.w_at(n) - point.z)
    exact = chain.exact and not point.is_numeric()
    if exact:
        ok = not lhs_t and not lhs_c
        worst = 0.0 if ok else float("inf")
    else:
        scale = max(1.0, abs(complex(point.z)), abs(complex(point.w)))
        worst = max(abs(complex(lhs_t)), abs(complex(lhs_c)))
        ok = worst <= _NUMERIC_TOL * scale
    return IdentityVerdict(ok, worst, (lhs_t, lhs_c))


def baker_akhiezer_value(chain, n, point):
    """psi(n, P) as the telescoping product of chi from the normalization psi(0) = 1."""
    if n == 0:
        return Fraction(1) if chain.exact and not point.is_numeric() else 1.0 + 0j
    value = Fraction(1) if chain.exact and not point.is_numeric() else 1.0 + 0j
    if n > 0:
        for j in range(0, n):
            value = value * eigenfunction_ratio(chain, j, point)
        return value
    for j in range(n, 0):
        ratio = eigenfunction_ratio(chain, j, point)
        vanished = (not ratio) if chain.exact else (not _nonzero(ratio))
        if vanished:
            raise PointError(f"psi vanishes at n={j + 1}; cannot continue the product backwards")
        value = value / ratio
    return value
