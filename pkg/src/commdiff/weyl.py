"""Transport between polynomial difference operators and the Weyl algebra.

The bridge rests on [x, -x*d/dx] = x matching [T, n] = T: any pair (A, B) of
differential operators with [A, B] = A determines a homomorphism of the
shift algebra sending T to A and n to B, computed on normal forms as
sum p_j(n) T**j -> sum p_j(B) A**j.  The default pair is (x, -x*d/dx).

Automorphism actions:

* shift algebra: n -> n + P(T), T -> T (P an arbitrary polynomial);
* Weyl algebra: the linear generator x -> a*x + b*D, D -> c*x + d*D with
  ad - bc = 1, and the two shears x -> x + P1(D) and D -> D + P2(x).

Applying a Weyl automorphism to (x, -x*d/dx) yields new admissible pairs,
so commuting difference pairs map to commuting differential pairs with the
same spectral polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import AlgebraMismatchError
from .ore import (
    DifferenceOperator,
    DifferentialOperator,
    commutator,
    dx_operator,
    x_operator,
)
from .rings import Poly


def _op_horner(poly, op):
    """Evaluate a Q-polynomial at an operator argument."""
    if not poly:
        return op._const_like(0) - op._const_like(0)
    acc = op._const_like(poly.coeffs[-1])
    for c in reversed(poly.coeffs[:-1]):
        acc = acc * op
        if c:
            acc = acc + op._const_like(c)
    return acc


@dataclass(frozen=True)
class GeneratorPair:
    """Differential operators (A, B) with [A, B] = A, checked on construction."""

    a: DifferentialOperator
    b: DifferentialOperator

    def __post_init__(self):
        if not isinstance(self.a, DifferentialOperator) or not isinstance(self.b, DifferentialOperator):
            raise AlgebraMismatchError("generator pair must consist of differential operators")
        if commutator(self.a, self.b) != self.a:
            raise ValueError("generator pair violates [A, B] = A")


def default_pair():
    """(x, -x*d/dx), the pair realizing the literal substitution."""
    x = x_operator()
    return GeneratorPair(x, -(x * dx_operator()))


def to_weyl(op, pair=None):
    """Image of a shift-algebra element under T -> A, n -> B.

    ``op`` must have nonnegative shift powers and polynomial coefficients;
    the image of sum p_j(n) T**j is sum p_j(B) A**j.
    """
    if not isinstance(op, DifferenceOperator):
        raise AlgebraMismatchError("to_weyl expects a difference operator")
    if not op.is_w1():
        raise ValueError("operator is outside W1 (negative powers or non-polynomial coefficients)")
    if pair is None:
        pair = default_pair()
    a_pow = {0: pair.a._const_like(1)}
    result = None
    for j in sorted(op.coeffs):
        if j not in a_pow:
            k = max(a_pow)
            while k < j:
                a_pow[k + 1] = a_pow[k] * pair.a
                k += 1
        term = _op_horner(op.coeffs[j], pair.b) * a_pow[j]
        result = term if result is None else result + term
    if result is None:
        return DifferentialOperator({})
    return result


# -- automorphisms ------------------------------------------------------------------


@dataclass(frozen=True)
class LinearGenerator:
    """x -> alpha*x + beta*D, D -> gamma*x + delta*D with unit determinant."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.alpha * self.delta - self.beta * self.gamma != 1:
            raise ValueError("linear generator needs determinant 1")

    def images(self):
        x, d = x_operator(), dx_operator()
        return (x * self.alpha + d * self.beta, x * self.gamma + d * self.delta)


@dataclass(frozen=True)
class XShearGenerator:
    """x -> x + P(D), D -> D."""

    poly: Poly

    def __post_init__(self):
        p = self.poly if isinstance(self.poly, Poly) else Poly(self.poly)
        object.__setattr__(self, "poly", p)

    def images(self):
        x, d = x_operator(), dx_operator()
        return (x + _op_horner(self.poly, d), d)


@dataclass(frozen=True)
class DShearGenerator:
    """x -> x, D -> D + P(x)."""

    poly: Poly

    def __post_init__(self):
        p = self.poly if isinstance(self.poly, Poly) else Poly(self.poly)
        object.__setattr__(self, "poly", p)

    def images(self):
        x, d = x_operator(), dx_operator()
        return (x, d + _op_horner(self.poly, x))


def a1_automorphism(op, generator):
    """Image of a Weyl-algebra element under one automorphism generator."""
    if not isinstance(op, DifferentialOperator):
        raise AlgebraMismatchError("a1_automorphism expects a differential operator")
    x_img, d_img = generator.images()
    d_pow = {0: d_img._const_like(1)}
    result = None
    for j in sorted(op.coeffs):
        if j not in d_pow:
            k = max(d_pow)
            while k < j:
                d_pow[k + 1] = d_pow[k] * d_img
                k += 1
        term = _op_horner(op.coeffs[j], x_img) * d_pow[j]
        result = term if result is None else result + term
    return DifferentialOperator({}) if result is None else result


def w1_automorphism(op, shift_poly):
    """Image of a shift-algebra element under n -> n + P(T), T -> T."""
    if not isinstance(op, DifferenceOperator):
        raise AlgebraMismatchError("w1_automorphism expects a difference operator")
    if not op.is_w1():
        raise ValueError("operator is outside W1")
    p = shift_poly if isinstance(shift_poly, Poly) else Poly(shift_poly)
    n_img = DifferenceOperator({0: Poly.variable()})
    for k, c in enumerate(p.coeffs):
        if c:
            n_img = n_img + DifferenceOperator({k: Poly([c])})
    t_pow = {0: n_img._const_like(1)}
    result = None
    for j in sorted(op.coeffs):
        if j not in t_pow:
            k = max(t_pow)
            while k < j:
                t_pow[k + 1] = t_pow[k] * DifferenceOperator({1: Poly.one()})
                k += 1
        term = _op_horner(op.coeffs[j], n_img) * t_pow[j]
        result = term if result is None else result + term
    return DifferenceOperator({}, "poly") if result is None else result


def make_pair(generators=()):
    """(A, B) = (phi(x), phi(-x*d/dx)) for a composite of generators.

    Generators are applied left to right; the [A, B] = A invariant is
    re-checked by the GeneratorPair constructor, so a violation (which would
    indicate an implementation bug) surfaces immediately.
    """
    x = x_operator()
    a = x
    b = -(x * dx_operator())
    for gen in generators:
        a = a1_automorphism(a, gen)
        b = a1_automorphism(b, gen)
    return GeneratorPair(a, b)
