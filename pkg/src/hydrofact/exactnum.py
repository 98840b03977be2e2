"""
Exact scalar and univariate polynomial arithmetic.

``ExactScalar`` is a Gaussian rational times the square root of a squarefree
positive integer times a half-integer power of pi::

    (re + i*im) * sqrt(radicand) * pi**(pi_half/2)

Sums are only defined inside one radical class ``(radicand, pi_half)``;
everything in this package stays inside a single class per computation, so
a mismatch is a bug and raises :class:`IncompatibleRadicals`.

``Poly1`` is a dense univariate polynomial with ``ExactScalar`` coefficients.
"""

from __future__ import annotations

import math
import re as _re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC

from sympy import factorint

from .errors import IncompatibleRadicals, NonPolynomialResult, NonPositiveRate

Rational = Fraction

__all__ = [
    "Rational",
    "ExactScalar",
    "Poly1",
    "ZERO",
    "ONE",
    "I",
    "scalar_mul",
    "scalar_add",
    "poly_derivative",
    "poly_eval_float",
    "exp_weighted_integral",
    "squarefree_split",
]


@lru_cache(maxsize=65536)
def squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(s, t)`` with ``n == s*s*t`` and ``t`` squarefree."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    if n == 1:
        return 1, 1
    s = t = 1
    for p, e in factorint(n).items():
        s *= p ** (e // 2)
        if e & 1:
            t *= p
    return s, t


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


class ExactScalar:
    """Immutable exact number ``(re + i im) sqrt(radicand) pi^(pi_half/2)``.

    The constructor accepts any positive rational radicand and reduces it to
    canonical form (squarefree integer radicand). Zero is always stored as
    ``(0, 0, 1, 0)``.
    """

    __slots__ = ("re", "im", "radicand", "pi_half")

    def __init__(self, re=0, im=0, radicand=1, pi_half: int = 0):
        re = _frac(re)
        im = _frac(im)
        q = _frac(radicand)
        if q <= 0:
            raise ValueError("radicand must be positive")
        if not re and not im:
            q, pi_half = Fraction(1), 0
        elif q != 1:
            s, t = squarefree_split(q.numerator * q.denominator)
            # sqrt(a/b) = sqrt(a*b)/b
            f = Fraction(s, q.denominator)
            re *= f
            im *= f
            q = Fraction(t)
        _set = object.__setattr__
        _set(self, "re", re)
        _set(self, "im", im)
        _set(self, "radicand", q)
        _set(self, "pi_half", int(pi_half))

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction, radicand: Fraction, pi_half: int) -> ExactScalar:
        # caller guarantees canonical input
        if not re and not im:
            return ZERO
        obj = object.__new__(cls)
        _set = object.__setattr__
        _set(obj, "re", re)
        _set(obj, "im", im)
        _set(obj, "radicand", radicand)
        _set(obj, "pi_half", pi_half)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("ExactScalar is immutable")

    def __reduce__(self):
        return (ExactScalar, (self.re, self.im, self.radicand, self.pi_half))

    # -- constructors ---------------------------------------------------

    @classmethod
    def coerce(cls, x) -> ExactScalar:
        if isinstance(x, ExactScalar):
            return x
        return cls(_frac(x))

    @classmethod
    def sqrt(cls, x) -> ExactScalar:
        """Exact square root of a rational (imaginary for negative input)."""
        x = _frac(x)
        if x == 0:
            return ZERO
        if x < 0:
            return cls(0, 1, -x)
        return cls(1, 0, x)

    @classmethod
    def pi_power(cls, pi_half: int) -> ExactScalar:
        return cls._raw(Fraction(1), Fraction(0), Fraction(1), pi_half)

    # -- predicates -----------------------------------------------------

    @property
    def radical_class(self) -> tuple[Fraction, int]:
        return (self.radicand, self.pi_half)

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_rational(self) -> bool:
        return not self.im and self.radicand == 1 and self.pi_half == 0

    def is_real(self) -> bool:
        return not self.im

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.re

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, ExactScalar):
            try:
                other = ExactScalar.coerce(other)
            except TypeError:
                return NotImplemented
        if not other.re and not other.im:
            return self
        if not self.re and not self.im:
            return other
        if self.radicand != other.radicand or self.pi_half != other.pi_half:
            raise IncompatibleRadicals(f"cannot add {self} and {other}")
        return ExactScalar._raw(self.re + other.re, self.im + other.im, self.radicand, self.pi_half)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero():
            return self
        return ExactScalar._raw(-self.re, -self.im, self.radicand, self.pi_half)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, ExactScalar):
            try:
                other = ExactScalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, ExactScalar):
            if isinstance(other, (int, Fraction)):
                if not other:
                    return ZERO
                return ExactScalar._raw(self.re * other, self.im * other, self.radicand, self.pi_half)
            try:
                other = ExactScalar.coerce(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        re = a * c - b * d
        im = a * d + b * c
        if not re and not im:
            return ZERO
        q1, q2 = self.radicand, other.radicand
        if q1 == 1:
            q = q2
        elif q2 == 1:
            q = q1
        else:
            s, t = squarefree_split(q1.numerator * q2.numerator)
            if s != 1:
                re *= s
                im *= s
            q = Fraction(t)
        return ExactScalar._raw(re, im, q, self.pi_half + other.pi_half)

    __rmul__ = __mul__

    def conjugate(self) -> ExactScalar:
        if not self.im:
            return self
        return ExactScalar._raw(self.re, -self.im, self.radicand, self.pi_half)

    def inverse(self) -> ExactScalar:
        if self.is_zero():
            raise ZeroDivisionError("inverse of exact zero")
        n2 = self.re * self.re + self.im * self.im
        q = self.radicand
        # 1/sqrt(q) = sqrt(q)/q
        return ExactScalar._raw(self.re / (n2 * q), -self.im / (n2 * q), q, -self.pi_half)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by exact zero")
            return ExactScalar._raw(self.re / other, self.im / other, self.radicand, self.pi_half)
        if not isinstance(other, ExactScalar):
            try:
                other = ExactScalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return ExactScalar.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparisons and conversion --------------------------------------

    def __eq__(self, other):
        if isinstance(other, ExactScalar):
            return (
                self.re == other.re
                and self.im == other.im
                and self.radicand == other.radicand
                and self.pi_half == other.pi_half
            )
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.re)
        return hash((self.re, self.im, self.radicand, self.pi_half))

    def __bool__(self):
        return not self.is_zero()

    def __complex__(self):
        scale = math.sqrt(self.radicand) * math.pi ** (self.pi_half / 2)
        return complex(float(self.re) * scale, float(self.im) * scale)

    def __float__(self):
        if self.im:
            raise TypeError(f"{self} has a nonzero imaginary part")
        return float(self.re) * math.sqrt(self.radicand) * math.pi ** (self.pi_half / 2)

    def __abs__(self) -> float:
        return abs(complex(self))

    def sign(self) -> int:
        """Sign of a real scalar (radical factors are positive)."""
        if self.im:
            raise ValueError(f"{self} is not real")
        return (self.re > 0) - (self.re < 0)

    def __str__(self):
        return f"({self.re})+({self.im})i sqrt({self.radicand}) pi^({self.pi_half}/2)"

    def __repr__(self):
        if self.is_rational():
            return f"ExactScalar({self.re})"
        return f"ExactScalar({self.re!s}, {self.im!s}, {self.radicand!s}, {self.pi_half})"

    _PATTERN = _re.compile(
        r"^\((?P<re>[-+]?\d+(?:/\d+)?)\)\+\((?P<im>[-+]?\d+(?:/\d+)?)\)i "
        r"sqrt\((?P<q>\d+(?:/\d+)?)\) pi\^\((?P<k>[-+]?\d+)/2\)$"
    )

    @classmethod
    def parse(cls, text: str) -> ExactScalar:
        """Inverse of ``str()``."""
        m = cls._PATTERN.match(text.strip())
        if m is None:
            raise ValueError(f"not an exact scalar string: {text!r}")
        return cls(Fraction(m["re"]), Fraction(m["im"]), Fraction(m["q"]), int(m["k"]))


ZERO = object.__new__(ExactScalar)
for _name, _val in (("re", Fraction(0)), ("im", Fraction(0)), ("radicand", Fraction(1)), ("pi_half", 0)):
    object.__setattr__(ZERO, _name, _val)
ONE = ExactScalar(1)
I = ExactScalar(0, 1)


def scalar_mul(a: ExactScalar, b: ExactScalar) -> ExactScalar:
    return ExactScalar.coerce(a) * ExactScalar.coerce(b)


def scalar_add(a: ExactScalar, b: ExactScalar) -> ExactScalar:
    return ExactScalar.coerce(a) + ExactScalar.coerce(b)


class Poly1:
    """Dense univariate polynomial with exact coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [ExactScalar.coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly1 is immutable")

    def __reduce__(self):
        return (Poly1, (self.coeffs,))

    @classmethod
    def x(cls) -> Poly1:
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c=1) -> Poly1:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lowest_degree(self) -> int:
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                return k
        return -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> ExactScalar:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, Poly1):
            return other
        return Poly1((other,))

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly1(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly1(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> Poly1:
        c = ExactScalar.coerce(c)
        return Poly1(c * a for a in self.coeffs)

    def __mul__(self, other):
        if not isinstance(other, Poly1):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly1()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return Poly1(out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, c):
        c = ExactScalar.coerce(c)
        return self.scale(c.inverse())

    def __pow__(self, k: int):
        result = Poly1((1,))
        for _ in range(k):
            result = result * self
        return result

    def derivative(self) -> Poly1:
        return Poly1(c * k for k, c in enumerate(self.coeffs) if k)

    def shift(self, k: int) -> Poly1:
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return Poly1((ZERO,) * k + self.coeffs)

    def divide_xpow(self, k: int) -> Poly1:
        """Exact division by ``x**k``."""
        if any(not c.is_zero() for c in self.coeffs[:k]):
            raise NonPolynomialResult(f"{self} is not divisible by x^{k}")
        return Poly1(self.coeffs[k:])

    def compose(self, q: Poly1) -> Poly1:
        """Return ``self(q(x))``."""
        result = Poly1()
        for c in reversed(self.coeffs):
            result = result * q + Poly1((c,))
        return result

    def divmod(self, q: Poly1) -> tuple[Poly1, Poly1]:
        if q.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        lead_inv = q.coeffs[-1].inverse()
        dq = q.degree
        quot = [ZERO] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] * lead_inv
            quot[k] = c
            if c.is_zero():
                continue
            for j, b in enumerate(q.coeffs):
                rem[k + j] = rem[k + j] - c * b
        return Poly1(quot), Poly1(rem[:dq])

    def __call__(self, x) -> ExactScalar:
        x = ExactScalar.coerce(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_float(self, x):
        """Horner evaluation in double precision (complex if any coefficient is)."""
        if any(c.im for c in self.coeffs):
            acc = 0j
            for c in reversed(self.coeffs):
                acc = acc * x + complex(c)
            return acc
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def __eq__(self, other):
        if isinstance(other, Poly1):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, ExactScalar)):
            return self == Poly1((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            cs = str(c.re) if c.is_rational() else f"[{c}]"
            terms.append(cs if k == 0 else f"{cs}*x^{k}")
        return "Poly1(" + (" + ".join(terms) or "0") + ")"


def poly_derivative(p: Poly1) -> Poly1:
    return p.derivative()


def poly_eval_float(p: Poly1, x: float):
    return p.eval_float(x)


def exp_weighted_integral(p: Poly1, a) -> ExactScalar:
    """Exact value of ``int_0^inf p(r) exp(-a r) dr``."""
    a = _frac(a)
    if a <= 0:
        raise NonPositiveRate(f"decay rate must be positive, got {a}")
    total = ZERO
    fact = 1
    apow = a
    for k, c in enumerate(p.coeffs):
        if k:
            fact *= k
            apow *= a
        if not c.is_zero():
            total = total + c * Fraction(fact) / apow
    return total
