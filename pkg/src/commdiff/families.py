"""Constructors for the explicit commuting-operator families.

Three closed-form order-2 operators, each commuting with a monic operator of
order 2g+1 (found here by the commutant solver and normalized so its square
is a polynomial in the order-2 operator):

* polynomial coefficients,        (T + a2*n**2 + a0)**2 - g(g+1)*a2**2*n**2;
* the alpha1 extension,           (T + a2*n**2 + a1*n + a0)**2
                                      - g(g+1)*a2*n*(a2*n + a1);
* trigonometric coefficients,     (T + r1*cos n)**2
                                      + r1**2/2 * sec(g+1/2)**2 sin(g) sin(g+1) cos 2n,
  realized exactly over Q(i)(E) with E = e**(i/2);
* elliptic (genus-1) chains,      (T + U_n)**2 + W_n with U, W read off a
  dressing chain built from an arbitrary parameter sequence gamma.

Also contains the rank-two reduction check: the order-4 operator
(T + U_n + V_n T**-1)**2 + W_n collapses to the chain family exactly when
its V_n coefficient vanishes, i.e. when eps_n**2 = F1(gamma_n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .commutant import find_monic_commuting
from .errors import ChainConstructionError
from .ore import DifferenceOperator
from .rings import E, ExpPoly, GaussianRational, Poly, RationalFunction, SeqCoefficient
from .spectral import chain_from_gamma, normalize_odd_partner


@dataclass(frozen=True)
class FamilyParams:
    """CLI-facing parameter bundle for the family constructors."""

    family: str  # "poly" | "poly-a1" | "trig" | "elliptic"
    g: int = 1
    r1: Fraction = Fraction(1)
    alpha0: Fraction = Fraction(0)
    alpha1: Fraction = Fraction(0)
    alpha2: Fraction = Fraction(1)
    curve: tuple = ()
    gamma: tuple = ()
    sqrt_f: tuple = ()
    start: int = 0


def polynomial_order2(g, alpha2, alpha0=0):
    """(T + a2*n**2 + a0)**2 - g(g+1)*a2**2*n**2 over Q[n]."""
    alpha2 = Fraction(alpha2)
    alpha0 = Fraction(alpha0)
    if not alpha2:
        raise ValueError("alpha2 must be nonzero")
    if g < 1:
        raise ValueError("genus must be at least 1")
    t = DifferenceOperator({1: Poly.one()})
    p = DifferenceOperator({0: Poly([alpha0, 0, alpha2])})
    squared = (t + p) * (t + p)
    return squared - DifferenceOperator({0: Poly([0, 0, g * (g + 1) * alpha2 * alpha2])})


def polynomial_order2_alpha1(g, alpha2, alpha1, alpha0=0):
    """(T + a2*n**2 + a1*n + a0)**2 - g(g+1)*a2*n*(a2*n + a1); reduces to
    ``polynomial_order2`` at a1 = 0."""
    alpha2 = Fraction(alpha2)
    alpha1 = Fraction(alpha1)
    alpha0 = Fraction(alpha0)
    if not alpha2:
        raise ValueError("alpha2 must be nonzero")
    if g < 1:
        raise ValueError("genus must be at least 1")
    t = DifferenceOperator({1: Poly.one()})
    p = DifferenceOperator({0: Poly([alpha0, alpha1, alpha2])})
    squared = (t + p) * (t + p)
    tail = Poly([0, g * (g + 1) * alpha2 * alpha1, g * (g + 1) * alpha2 * alpha2])
    return squared - DifferenceOperator({0: tail})


def _sin_of(k):
    """sin(k) for integer k, exactly in Q(i)(E): (E**2k - E**-2k)/(2i)."""
    two_i = RationalFunction(GaussianRational(0, 2))
    return (E ** (2 * k) - E ** (-2 * k)) / two_i


def _sec_half(g):
    """sec(g + 1/2) = 2 / (E**(2g+1) + E**-(2g+1)) exactly in Q(i)(E)."""
    return RationalFunction(2) / (E ** (2 * g + 1) + E ** (-(2 * g + 1)))


def trigonometric_order2(g, r1):
    """(T + r1*cos n)**2 + r1**2/2 * sec(g+1/2)**2 sin(g) sin(g+1) * cos 2n.

    Exact over Q(i)(E): cos(n) is the frequency pair +-2 with value 1/2 and
    the constants live in the coefficient field via E = e**(i/2).
    """
    r1 = Fraction(r1)
    if not r1:
        raise ValueError("r1 must be nonzero")
    if g < 1:
        raise ValueError("genus must be at least 1")
    r1_rf = RationalFunction(r1)
    t = DifferenceOperator({1: ExpPoly.constant(RationalFunction(1))})
    u = DifferenceOperator({0: ExpPoly.cosine(1, r1_rf)})
    kappa = RationalFunction(Fraction(1, 2)) * r1_rf * r1_rf * _sec_half(g) ** 2 * _sin_of(g) * _sin_of(g + 1)
    tail = DifferenceOperator({0: ExpPoly.cosine(2, kappa)})
    return (t + u) * (t + u) + tail


def elliptic_order2(chain):
    """(T + U_n)**2 + W_n with window-sequence coefficients from a chain.

    The T-coefficient U_n + U_{n+1} lives on a window one shorter than U
    itself; the constant coefficient is U_n**2 + W_n.
    """
    n_u = len(chain.u)
    if n_u < 2:
        raise ChainConstructionError("chain window too short for an order-2 operator")
    u = SeqCoefficient(chain.start, chain.u)
    w = SeqCoefficient(chain.start, chain.w)
    t_coeff = u + u.shift(1)
    const = u * u + w
    one = SeqCoefficient.constant(1, chain.start, chain.stop)
    return DifferenceOperator({2: one, 1: t_coeff, 0: const}, "seq")


def elliptic_order2_from_gamma(curve, gamma, sqrt_f, start=0):
    """Chain construction plus ``elliptic_order2`` in one step."""
    chain = chain_from_gamma(curve, gamma, sqrt_f, start)
    return elliptic_order2(chain), chain


def odd_order_partner(l2, g, degree_bound=None, freq_bound=None):
    """Monic order-(2g+1) member of the commutant, normalized so that its
    square is a polynomial in ``l2`` (the canonical hyperelliptic partner)."""
    raw = find_monic_commuting(l2, 2 * g + 1, degree_bound=degree_bound, freq_bound=freq_bound)
    return normalize_odd_partner(l2, raw)


def rank_two_reduction_values(curve, gamma, eps, start=0):
    """V_n of the order-4 rank-two reduction for interior window indices.

    V_n = (eps_n**2 - F1(gamma_n)) / ((gamma_n - gamma_{n-1}) (gamma_{n+1} - gamma_n));
    identically zero exactly when every eps_n squares to F1(gamma_n).
    Returns a list aligned with n = start+1 .. start+len(gamma)-2.
    """
    if curve.genus != 1:
        raise ChainConstructionError("rank-two reduction check is genus-1 only")
    gamma = list(gamma)
    eps = list(eps)
    if len(gamma) != len(eps):
        raise ChainConstructionError("gamma and eps sequences differ in length")
    if len(gamma) < 3:
        raise ChainConstructionError("need at least three points for an interior value")
    for k in range(len(gamma) - 1):
        if gamma[k] == gamma[k + 1]:
            raise ChainConstructionError(f"gamma collision at offsets {k}, {k + 1}")
    out = []
    for k in range(1, len(gamma) - 1):
        num = eps[k] * eps[k] - curve.eval(gamma[k])
        den = (gamma[k] - gamma[k - 1]) * (gamma[k + 1] - gamma[k])
        out.append(num / den)
    return out
