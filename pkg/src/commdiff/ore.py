"""Noncommutative operator arithmetic over shift and derivation rings.

``DifferenceOperator`` is a finite sum sum_j c_j(n) T**j with integer powers
j (negative allowed) and coefficients in one of three difference rings:
polynomials over Q ("poly"), exponential polynomials over Q(i)(E)
("exp_poly"), or explicit window sequences ("seq").  Multiplication uses
T**j * c = sigma**j(c) * T**j and keeps the normal form "coefficient on the
left of the power".

``DifferentialOperator`` is a finite sum sum_j c_j(x) D**j with j >= 0 and
polynomial coefficients -- an element of the first Weyl algebra.  The
normal-ordering rule is D * c = c * D + c', applied through the Leibniz
expansion when powers of D move across a coefficient.

Operators are immutable; zero coefficients are never stored, so structural
equality of the coefficient maps is equality of normal forms.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import AlgebraMismatchError, RingMismatchError, WindowError
from .rings import ExpPoly, Poly, RationalFunction, SeqCoefficient

_RING_OF_TYPE = {Poly: "poly", ExpPoly: "exp_poly", SeqCoefficient: "seq"}


def _infer_ring(coeffs):
    ring = None
    for c in coeffs.values():
        r = _RING_OF_TYPE.get(type(c))
        if r is None:
            raise RingMismatchError(f"unsupported coefficient type {type(c).__name__}")
        if ring is None:
            ring = r
        elif ring != r:
            raise RingMismatchError("mixed coefficient rings in one operator")
    return ring or "poly"


class DifferenceOperator:
    """Normal-form difference operator sum_j c_j * T**j."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, coeffs=None, ring=None):
        coeffs = dict(coeffs or {})
        inferred = _infer_ring(coeffs)
        if ring is None:
            ring = inferred
        elif coeffs and ring != inferred:
            raise RingMismatchError(f"coefficients are {inferred!r} but ring={ring!r} requested")
        if ring == "poly":
            for c in coeffs.values():
                if c.scalar is not Fraction:
                    raise RingMismatchError("poly-ring difference coefficients must be over Q")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", {int(j): c for j, c in coeffs.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("DifferenceOperator is immutable")

    # -- construction helpers -------------------------------------------------

    def _template(self):
        for c in self.coeffs.values():
            return c
        return None

    def _const_coeff(self, s):
        if self.ring == "poly":
            return Poly((Fraction(s),) if not isinstance(s, Fraction) else (s,))
        if self.ring == "exp_poly":
            t = self._template()
            scalar = t.scalar if t is not None else RationalFunction
            e_base = t.e_base if t is not None else None
            if scalar is RationalFunction:
                return ExpPoly.constant(RationalFunction(s), scalar, e_base)
            return ExpPoly.constant(complex(s), scalar, e_base)
        raise RingMismatchError("scalars cannot be coerced into a sequence-coefficient operator")

    def _const_like(self, s):
        return DifferenceOperator({0: self._const_coeff(s)}, self.ring)

    # -- structure ------------------------------------------------------------

    def powers(self):
        return sorted(self.coeffs)

    def coefficient(self, j):
        c = self.coeffs.get(j)
        if c is not None:
            return c
        if self.ring == "poly":
            return Poly.zero()
        if self.ring == "exp_poly":
            t = self._template()
            if t is not None:
                return ExpPoly((), t.scalar, t.e_base)
            return ExpPoly(())
        return SeqCoefficient(0, ())

    @property
    def max_power(self):
        return max(self.coeffs) if self.coeffs else None

    @property
    def min_power(self):
        return min(self.coeffs) if self.coeffs else None

    @property
    def order(self):
        """max power minus min power; None for the zero operator."""
        if not self.coeffs:
            return None
        return max(self.coeffs) - min(self.coeffs)

    def is_zero(self):
        if self.ring == "seq":
            return all(c.all_zero() for c in self.coeffs.values())
        return not self.coeffs

    def is_w1(self):
        """True when the operator lies in W1: j >= 0, polynomial coefficients over Q."""
        return self.ring == "poly" and (not self.coeffs or min(self.coeffs) >= 0)

    def max_coeff_degree(self):
        if self.ring == "poly":
            return max((c.degree for c in self.coeffs.values()), default=0)
        if self.ring == "exp_poly":
            return max((c.max_poly_degree() for c in self.coeffs.values()), default=0)
        raise RingMismatchError("degree is not defined for sequence coefficients")

    def max_frequency(self):
        if self.ring != "exp_poly":
            return 0
        return max((c.max_frequency for c in self.coeffs.values()), default=0)

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, DifferenceOperator):
            raise AlgebraMismatchError("expected a difference operator")
        if self.ring != other.ring and self.coeffs and other.coeffs:
            raise RingMismatchError(f"difference rings differ: {self.ring} vs {other.ring}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, RationalFunction)):
            other = self._const_like(other)
        if not isinstance(other, DifferenceOperator):
            return NotImplemented
        self._check(other)
        out = dict(self.coeffs)
        for j, c in other.coeffs.items():
            out[j] = out[j] + c if j in out else c
        return DifferenceOperator(out, self.ring if self.coeffs else other.ring)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, RationalFunction)):
            other = self._const_like(other)
        if not isinstance(other, DifferenceOperator):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return DifferenceOperator({j: -c for j, c in self.coeffs.items()}, self.ring)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RationalFunction)):
            if not other:
                return DifferenceOperator({}, self.ring)
            return DifferenceOperator({j: c * other for j, c in self.coeffs.items()}, self.ring)
        if not isinstance(other, DifferenceOperator):
            return NotImplemented
        self._check(other)
        out = {}
        for a, ca in self.coeffs.items():
            for b, cb in other.coeffs.items():
                j = a + b
                term = ca * cb.shift(a)
                out[j] = out[j] + term if j in out else term
        ring = self.ring if self.coeffs else other.ring
        return DifferenceOperator(out, ring)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, RationalFunction)):
            return self * other
        return NotImplemented

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative operator power")
        result = self._const_like(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, DifferenceOperator):
            return NotImplemented
        if not self.coeffs and not other.coeffs:
            return True
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, frozenset(self.coeffs.items())))

    # -- action on sequences ---------------------------------------------------

    def evaluate(self, values, n, e_value=None):
        """Apply to a sequence: sum_j c_j(n) * values[n+j].

        ``values`` is a mapping from integers; a missing index raises
        WindowError.  Exponential coefficients need a numeric ``e_value``.
        """
        total = None
        for j, c in self.coeffs.items():
            try:
                fv = values[n + j]
            except KeyError:
                raise WindowError(f"sequence not defined at n={n + j}") from None
            if self.ring == "poly":
                cv = c.eval(Fraction(n))
                if isinstance(fv, (float, complex)):
                    cv = complex(cv)
            elif self.ring == "exp_poly":
                cv = c.eval_at(n, e_value)
            else:
                cv = c.at(n)
                if isinstance(fv, (float, complex)) and isinstance(cv, Fraction):
                    cv = complex(cv)
                elif isinstance(cv, complex) and isinstance(fv, Fraction):
                    fv = complex(fv)
            term = cv * fv
            total = term if total is None else total + term
        if total is None:
            return 0
        return total

    def to_str(self, var="n", shift="T"):
        if not self.coeffs:
            return "0"
        bits = []
        for j in sorted(self.coeffs, reverse=True):
            c = self.coeffs[j]
            cs = c.to_str(var) if isinstance(c, Poly) else str(c)
            if j == 0:
                bits.append(f"({cs})")
            elif j == 1:
                bits.append(f"({cs})*{shift}")
            else:
                bits.append(f"({cs})*{shift}^{j}")
        return " + ".join(bits)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"DifferenceOperator({self.coeffs!r}, ring={self.ring!r})"


class DifferentialOperator:
    """Normal-form element of the first Weyl algebra: sum_j c_j(x) D**j."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        coeffs = dict(coeffs or {})
        clean = {}
        for j, c in coeffs.items():
            j = int(j)
            if j < 0:
                raise ValueError("differential operators carry only nonnegative powers")
            if not isinstance(c, Poly) or c.scalar is not Fraction:
                raise RingMismatchError("differential coefficients must be polynomials over Q")
            if c:
                clean[j] = c
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("DifferentialOperator is immutable")

    def _const_like(self, s):
        return DifferentialOperator({0: Poly((Fraction(s),))})

    def powers(self):
        return sorted(self.coeffs)

    def coefficient(self, j):
        return self.coeffs.get(j, Poly.zero())

    @property
    def order(self):
        """Largest power of D present; None for the zero operator."""
        return max(self.coeffs) if self.coeffs else None

    @property
    def max_power(self):
        return max(self.coeffs) if self.coeffs else None

    @property
    def min_power(self):
        return min(self.coeffs) if self.coeffs else None

    def is_zero(self):
        return not self.coeffs

    def max_coeff_degree(self):
        return max((c.degree for c in self.coeffs.values()), default=0)

    def _check(self, other):
        if not isinstance(other, DifferentialOperator):
            raise AlgebraMismatchError("expected a differential operator")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._const_like(other)
        if not isinstance(other, DifferentialOperator):
            return NotImplemented
        out = dict(self.coeffs)
        for j, c in other.coeffs.items():
            out[j] = out[j] + c if j in out else c
        return DifferentialOperator(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._const_like(other)
        if not isinstance(other, DifferentialOperator):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return DifferentialOperator({j: -c for j, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return DifferentialOperator({j: c * other for j, c in self.coeffs.items()})
        if not isinstance(other, DifferentialOperator):
            return NotImplemented
        # D**a * d(x) = sum_k C(a,k) d^(k)(x) D**(a-k)
        max_a = max(self.coeffs, default=0)
        derivs = {}
        for b, cb in other.coeffs.items():
            ds = [cb]
            for _ in range(max_a):
                if not ds[-1]:
                    break
                ds.append(ds[-1].derivative())
            derivs[b] = ds
        out = {}
        for a, ca in self.coeffs.items():
            for b, cb in other.coeffs.items():
                ds = derivs[b]
                for k in range(min(a, len(ds) - 1) + 1):
                    j = a + b - k
                    term = ca * ds[k] * comb(a, k)
                    out[j] = out[j] + term if j in out else term
        return DifferentialOperator(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative operator power")
        result = self._const_like(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, DifferentialOperator):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def to_str(self, var="x", d="D"):
        if not self.coeffs:
            return "0"
        bits = []
        for j in sorted(self.coeffs, reverse=True):
            cs = self.coeffs[j].to_str(var)
            if j == 0:
                bits.append(f"({cs})")
            elif j == 1:
                bits.append(f"({cs})*{d}")
            else:
                bits.append(f"({cs})*{d}^{j}")
        return " + ".join(bits)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"DifferentialOperator({self.coeffs!r})"


# -- generators and module-level operations -----------------------------------


def shift_operator(power=1):
    """T**power over the polynomial difference ring."""
    return DifferenceOperator({power: Poly.one()})


def n_operator():
    """Multiplication by n."""
    return DifferenceOperator({0: Poly.variable()})


def poly_coefficient_operator(p, power=0):
    return DifferenceOperator({power: p if isinstance(p, Poly) else Poly(p)})


def x_operator():
    """Multiplication by x in the Weyl algebra."""
    return DifferentialOperator({0: Poly.variable()})


def dx_operator():
    """The derivation D = d/dx."""
    return DifferentialOperator({1: Poly.one()})


def commutator(a, b):
    """a*b - b*a in normal form; operands must share the algebra."""
    if isinstance(a, DifferenceOperator) != isinstance(b, DifferenceOperator):
        raise AlgebraMismatchError("cannot commute a difference operator with a differential one")
    return a * b - b * a


def poly_eval(curve_coeffs, op):
    """Horner evaluation sum_i c_i * op**i for an ascending coefficient list."""
    coeffs = list(curve_coeffs)
    if not coeffs:
        raise ValueError("empty coefficient list")
    acc = op._const_like(coeffs[-1])
    for c in reversed(coeffs[:-1]):
        acc = acc * op
        if c:
            acc = acc + op._const_like(c)
    return acc


def op_eval_at(op, values, n, e_value=None):
    """Apply a difference operator to a sequence at position n."""
    if not isinstance(op, DifferenceOperator):
        raise AlgebraMismatchError("op_eval_at expects a difference operator")
    return op.evaluate(values, n, e_value)
