"""Exact coefficient rings for shift- and derivation-operator algebras.

Scalars
-------
Rationals are ``fractions.Fraction`` (arbitrary precision, canonical form
maintained by the stdlib).  ``GaussianRational`` is a pair of rationals
a + b*i with i**2 = -1.

Polynomials
-----------
``Poly`` is a dense univariate polynomial over a scalar field, stored as an
ascending coefficient list whose last entry is nonzero ([] is the zero
polynomial).  One class serves several rings: Q[n] and Q[x] for operator
coefficients (scalar=Fraction), Q(i)[E] as numerator/denominator material
for ``RationalFunction``, and complex coefficient lists in numeric mode.

``RationalFunction`` is a reduced fraction num/den of Gaussian-rational
polynomials in the symbol E, with monic denominator.  E carries no
algebraic relation; an expression in E vanishes at a transcendental complex
value iff it vanishes identically, so exact zero tests in this field decide
the corresponding analytic identities.

``ExpPoly`` maps integer frequencies f to polynomials p_f(n); the term
stands for e**(i*f*n/2) * p_f(n).  The shift n -> n+1 multiplies the
frequency-f part by E**f and shifts its polynomial; cos(n) is frequencies
+-2 with value 1/2.

``SeqCoefficient`` is a finite window of explicit per-n values (exact
rationals or complex doubles), for operator families whose coefficients are
arbitrary function parameters rather than closed-form ring elements.

All values are immutable after construction and every operation is pure.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import RingMismatchError, WindowError

Rational = Fraction


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


class GaussianRational:
    """Element a + b*i of Q(i), both parts exact rationals."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            if im:
                raise TypeError("cannot combine GaussianRational with an extra imaginary part")
            object.__setattr__(self, "re", re.re)
            object.__setattr__(self, "im", re.im)
            return
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(value):
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = other.re * other.re + other.im * other.im
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"


I_GAUSS = GaussianRational(0, 1)


class Poly:
    """Dense univariate polynomial over a scalar field.

    ``scalar`` is the coefficient class (Fraction, GaussianRational,
    RationalFunction, or complex); ``scalar(v)`` must coerce small values.
    Trailing zeros are stripped so the representation is canonical.
    """

    __slots__ = ("coeffs", "scalar")

    def __init__(self, coeffs=(), scalar=Fraction):
        cs = [c if isinstance(c, scalar) else scalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "scalar", scalar)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def zero(cls, scalar=Fraction):
        return cls((), scalar)

    @classmethod
    def one(cls, scalar=Fraction):
        return cls((1,), scalar)

    @classmethod
    def variable(cls, scalar=Fraction):
        """The polynomial equal to the indeterminate itself."""
        return cls((0, 1), scalar)

    @classmethod
    def monomial(cls, degree, coeff=1, scalar=Fraction):
        return cls((0,) * degree + (coeff,), scalar)

    @property
    def degree(self):
        """Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self):
        return len(self.coeffs) <= 1

    def constant_value(self):
        if not self.coeffs:
            return self.scalar(0)
        if len(self.coeffs) > 1:
            raise ValueError("polynomial is not constant")
        return self.coeffs[0]

    def leading(self):
        if not self.coeffs:
            return self.scalar(0)
        return self.coeffs[-1]

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.scalar(0)

    def _s(self, value):
        return value if isinstance(value, self.scalar) else self.scalar(value)

    def _check(self, other):
        if self.scalar is not other.scalar:
            raise RingMismatchError(
                f"polynomials over different scalars: {self.scalar.__name__} vs {other.scalar.__name__}"
            )

    def __add__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly((self._s(other),), self.scalar)
            except TypeError:
                return NotImplemented
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out, self.scalar)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, Poly) else -self._s(other))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.scalar)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                s = self._s(other)
            except TypeError:
                return NotImplemented
            if not s:
                return Poly.zero(self.scalar)
            return Poly([c * s for c in self.coeffs], self.scalar)
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(self.scalar)
        out = [self.scalar(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = out[i + j] + ca * cb
        return Poly(out, self.scalar)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.one(self.scalar)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction)) or isinstance(other, self.scalar):
                return self.is_constant() and (self[0] == self._s(other))
            return NotImplemented
        return self.scalar is other.scalar and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.scalar.__name__, self.coeffs))

    def eval(self, value):
        """Horner evaluation at any value supporting * and +."""
        if not self.coeffs:
            return self.scalar(0) if self.scalar is not complex else 0j
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * value + c
        return acc

    def compose(self, inner):
        """Substitute another polynomial for the indeterminate."""
        self._check(inner)
        acc = Poly.zero(self.scalar)
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly((c,), self.scalar)
        return acc

    def shift(self, k=1):
        """sigma**k: p(n) -> p(n+k), a ring automorphism."""
        if not self.coeffs or k == 0:
            return self
        return self.compose(Poly((k, 1), self.scalar))

    def derivative(self):
        """Formal derivative (delta for the differential coefficient ring)."""
        return Poly([c * i for i, c in enumerate(self.coeffs) if i], self.scalar)

    def divmod(self, other):
        """Division with remainder; scalar must be a field."""
        self._check(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        q = [self.scalar(0)] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        rem = list(self.coeffs)
        d = other.degree
        lead = other.coeffs[-1]
        while len(rem) - 1 >= d and any(rem):
            while rem and not rem[-1]:
                rem.pop()
            if len(rem) - 1 < d:
                break
            f = rem[-1] / lead
            pos = len(rem) - 1 - d
            q[pos] = f
            for i, c in enumerate(other.coeffs):
                rem[pos + i] = rem[pos + i] - f * c
            rem.pop()
        return Poly(q, self.scalar), Poly(rem, self.scalar)

    def __floordiv__(self, other):
        q, r = self.divmod(other)
        if r:
            raise ValueError("inexact polynomial division")
        return q

    def monic(self):
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        return Poly([c / lead for c in self.coeffs], self.scalar)

    def gcd(self, other):
        """Monic gcd via Euclid's algorithm; scalar must be a field.

        Each remainder is renormalized to monic form, which keeps the
        rational coefficients of the remainder sequence from blowing up.
        """
        self._check(other)
        a, b = self, other
        while b:
            a, b = b, a.divmod(b)[1].monic()
        return a.monic() if a else a

    def valuation(self):
        """Index of the lowest nonzero coefficient; 0 for the zero polynomial."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0

    def shift_down(self, k):
        """Divide by the k-th power of the indeterminate (must be exact)."""
        if k == 0:
            return self
        if any(self.coeffs[:k]):
            raise ValueError("inexact monomial division")
        return Poly(self.coeffs[k:], self.scalar)

    def is_monomial(self):
        return bool(self.coeffs) and not any(self.coeffs[:-1])

    def to_str(self, var="n"):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                parts.append(f"{c}")
            elif i == 1:
                parts.append(f"{c}*{var}" if c != 1 else var)
            else:
                parts.append(f"{c}*{var}^{i}" if c != 1 else f"{var}^{i}")
        return " + ".join(parts)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r}, {self.scalar.__name__})"


class RationalFunction:
    """Reduced fraction of Gaussian-rational polynomials in the symbol E.

    Canonical form: numerator and denominator coprime, denominator monic and
    nonzero.  The field Q(i)(E) hosts the exact trigonometric constants via
    E = e**(i/2): sin(t) = (E**(2t) - E**(-2t))/(2i) for integer t, and so on.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=None):
        if isinstance(num, RationalFunction):
            if den is not None:
                raise TypeError("cannot renormalize an existing RationalFunction")
            object.__setattr__(self, "num", num.num)
            object.__setattr__(self, "den", num.den)
            return
        if not isinstance(num, Poly):
            num = Poly((GaussianRational(num),), GaussianRational)
        if den is None:
            den = Poly.one(GaussianRational)
        elif not isinstance(den, Poly):
            den = Poly((GaussianRational(den),), GaussianRational)
        if num.scalar is not GaussianRational or den.scalar is not GaussianRational:
            raise RingMismatchError("RationalFunction parts must be polynomials over Q(i)")
        if not den:
            raise ZeroDivisionError("zero denominator in Q(i)(E)")
        if not num:
            den = Poly.one(GaussianRational)
        else:
            # common monomial factor first; full Euclid only for mixed shapes
            t = min(num.valuation(), den.valuation())
            if t:
                num = num.shift_down(t)
                den = den.shift_down(t)
            if den.degree > 0 and not den.is_monomial() and not num.is_monomial():
                g = num.gcd(den)
                if g.degree > 0:
                    num = num // g
                    den = den // g
            lead = den.leading()
            if lead != GaussianRational(1):
                num = num * (GaussianRational(1) / lead)
                den = den.monic()
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @staticmethod
    def _coerce(value):
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, (int, Fraction, GaussianRational)):
            return RationalFunction(value)
        if isinstance(value, Poly) and value.scalar is GaussianRational:
            return RationalFunction(value)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero in Q(i)(E)")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __pow__(self, k):
        if k < 0:
            if not self.num:
                raise ZeroDivisionError("negative power of zero in Q(i)(E)")
            return RationalFunction(self.den, self.num) ** (-k)
        result = RationalFunction(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def eval(self, e_value):
        """Numeric value at a chosen E (typically e**(i/2))."""
        den = self.den.eval(e_value)
        num = self.num.eval(e_value)
        return complex(num) / complex(den)

    def __str__(self):
        n = self.num.to_str("E")
        if self.den == Poly.one(GaussianRational):
            return n
        return f"({n})/({self.den.to_str('E')})"

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"


#: The transcendental generator E of Q(i)(E).
E = RationalFunction(Poly((0, 1), GaussianRational))


def _exp_scalar_pow(base, k):
    """base**k for int k, where base is a RationalFunction or complex."""
    if isinstance(base, RationalFunction):
        return base ** k
    return base ** k  # complex: builtin pow handles negative exponents


class ExpPoly:
    """Exponential polynomial: finite map frequency -> Poly in n.

    The frequency-f term represents e**(i*f*n/2) * p_f(n).  In exact mode the
    polynomial coefficients live in Q(i)(E) and ``e_base`` is the symbolic E;
    in numeric mode they are complex and ``e_base`` is a complex number of
    modulus 1.  Only nonzero p_f are stored.
    """

    __slots__ = ("parts", "scalar", "e_base")

    def __init__(self, parts=(), scalar=RationalFunction, e_base=None):
        if e_base is None:
            if scalar is not RationalFunction:
                raise TypeError("numeric ExpPoly requires an explicit e_base")
            e_base = E
        items = parts.items() if isinstance(parts, dict) else parts
        clean = {}
        for f, p in items:
            if not isinstance(p, Poly):
                p = Poly((p,), scalar)
            if p.scalar is not scalar:
                raise RingMismatchError("ExpPoly part over the wrong scalar")
            if p:
                clean[int(f)] = p
        object.__setattr__(self, "parts", clean)
        object.__setattr__(self, "scalar", scalar)
        object.__setattr__(self, "e_base", e_base)

    def __setattr__(self, name, value):
        raise AttributeError("ExpPoly is immutable")

    @classmethod
    def constant(cls, value, scalar=RationalFunction, e_base=None):
        return cls({0: Poly((value,), scalar)}, scalar, e_base)

    @classmethod
    def cosine(cls, multiple=1, scale=1, scalar=RationalFunction, e_base=None):
        """cos(multiple*n) * scale as frequencies +-2*multiple with value scale/2."""
        if scalar is RationalFunction:
            half = RationalFunction(Fraction(1, 2)) * RationalFunction(scale)
        else:
            half = scale / 2
        return cls({2 * multiple: half, -2 * multiple: half}, scalar, e_base)

    def _like(self, parts):
        return ExpPoly(parts, self.scalar, self.e_base)

    def _coerce(self, other):
        if isinstance(other, ExpPoly):
            if other.scalar is not self.scalar:
                raise RingMismatchError("exponential polynomials over different scalars")
            return other
        if isinstance(other, (int, Fraction)) or isinstance(other, self.scalar):
            return ExpPoly.constant(self.scalar(other) if not isinstance(other, self.scalar) else other,
                                    self.scalar, self.e_base)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.parts)
        for f, p in other.parts.items():
            out[f] = out[f] + p if f in out else p
        return self._like(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return self._like({f: -p for f, p in self.parts.items()})

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for f1, p1 in self.parts.items():
            for f2, p2 in other.parts.items():
                f = f1 + f2
                q = p1 * p2
                out[f] = out[f] + q if f in out else q
        return self._like(out)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.parts)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(frozenset(self.parts.items()))

    def shift(self, k=1):
        """sigma**k: the frequency-f part picks up E**(f*k) and shifts in n."""
        if k == 0 or not self.parts:
            return self
        out = {}
        for f, p in self.parts.items():
            out[f] = p.shift(k) * _exp_scalar_pow(self.e_base, f * k)
        return self._like(out)

    def constant_value(self):
        """The scalar value when the element is a frequency-0 constant."""
        if not self.parts:
            return self.scalar(0) if self.scalar is RationalFunction else 0j
        if set(self.parts) != {0} or not self.parts[0].is_constant():
            raise ValueError("exponential polynomial is not a constant")
        return self.parts[0].constant_value()

    @property
    def max_frequency(self):
        if not self.parts:
            return 0
        return max(abs(f) for f in self.parts)

    def max_poly_degree(self):
        if not self.parts:
            return 0
        return max(p.degree for p in self.parts.values())

    def eval_at(self, n, e_value=None):
        """Numeric value at integer n for a chosen complex E."""
        if e_value is None:
            if self.scalar is RationalFunction:
                raise ValueError("exact exponential coefficient needs an explicit E value")
            e_value = self.e_base
        total = 0j
        for f, p in self.parts.items():
            if self.scalar is RationalFunction:
                pv = 0j
                for c in reversed(p.coeffs):
                    pv = pv * n + c.eval(e_value)
            else:
                pv = complex(p.eval(n))
            total += e_value ** (f * n) * pv
        return total

    def __str__(self):
        if not self.parts:
            return "0"
        bits = []
        for f in sorted(self.parts):
            p = self.parts[f]
            if f == 0:
                bits.append(f"({p})")
            else:
                bits.append(f"e^({f}in/2)*({p})")
        return " + ".join(bits)

    def __repr__(self):
        return f"ExpPoly({self.parts!r})"


def _seq_pair(x, y):
    """Coerce a mixed exact/numeric value pair to a common arithmetic type."""
    xf = isinstance(x, (float, complex))
    yf = isinstance(y, (float, complex))
    if xf and not yf:
        return x, complex(y)
    if yf and not xf:
        return complex(x), y
    return x, y


class SeqCoefficient:
    """Explicit per-n values on an integer window [start, start+len-1].

    Arithmetic restricts to the overlap of windows; the shift moves the
    window.  Values are exact Fractions or complex doubles; mixing the two
    coerces to complex.
    """

    __slots__ = ("start", "values")

    def __init__(self, start, values):
        vals = []
        for v in values:
            if isinstance(v, (float, complex)):
                vals.append(complex(v))
            elif isinstance(v, (int, Fraction)):
                vals.append(Fraction(v))
            else:
                raise TypeError(f"unsupported sequence value {v!r}")
        object.__setattr__(self, "start", int(start))
        object.__setattr__(self, "values", tuple(vals))

    def __setattr__(self, name, value):
        raise AttributeError("SeqCoefficient is immutable")

    @classmethod
    def constant(cls, value, start, stop):
        """Constant sequence on [start, stop] inclusive."""
        return cls(start, [value] * (stop - start + 1))

    @property
    def stop(self):
        """Last defined index (inclusive); start-1 when empty."""
        return self.start + len(self.values) - 1

    def window(self):
        return (self.start, self.stop)

    def is_empty(self):
        return not self.values

    def defined_at(self, n):
        return self.start <= n <= self.stop

    def at(self, n):
        if not self.defined_at(n):
            raise WindowError(f"sequence value at n={n} outside window [{self.start}, {self.stop}]")
        return self.values[n - self.start]

    def is_numeric(self):
        return any(isinstance(v, complex) for v in self.values)

    def _binary(self, other, op):
        if isinstance(other, (int, Fraction, float, complex)):
            other = SeqCoefficient.constant(other, self.start, self.stop)
        if not isinstance(other, SeqCoefficient):
            return None
        lo = max(self.start, other.start)
        hi = min(self.stop, other.stop)
        vals = []
        for n in range(lo, hi + 1):
            x, y = _seq_pair(self.values[n - self.start], other.values[n - other.start])
            vals.append(op(x, y))
        return SeqCoefficient(lo, vals)

    def __add__(self, other):
        out = self._binary(other, lambda x, y: x + y)
        return NotImplemented if out is None else out

    __radd__ = __add__

    def __sub__(self, other):
        out = self._binary(other, lambda x, y: x - y)
        return NotImplemented if out is None else out

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        out = self._binary(other, lambda x, y: x * y)
        return NotImplemented if out is None else out

    __rmul__ = __mul__

    def __neg__(self):
        return SeqCoefficient(self.start, [-v for v in self.values])

    def __bool__(self):
        # Truthy when the window is nonempty: an all-zero sequence still
        # carries the information of *where* it is known to vanish.
        return bool(self.values)

    def all_zero(self):
        return not any(self.values)

    def __eq__(self, other):
        if not isinstance(other, SeqCoefficient):
            return NotImplemented
        return self.start == other.start and self.values == other.values

    def __hash__(self):
        return hash((self.start, self.values))

    def shift(self, k=1):
        """sigma**k: value at n becomes the old value at n+k."""
        return SeqCoefficient(self.start - k, self.values)

    def max_abs(self):
        m = 0.0
        for v in self.values:
            m = max(m, abs(complex(v)))
        return m

    def __str__(self):
        return f"seq[{self.start}..{self.stop}]{list(self.values)}"

    __repr__ = __str__
