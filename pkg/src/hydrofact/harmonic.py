"""
Harmonic polynomials in (x, y, z) with exact coefficients.

``basis(l)`` returns ``2l+1`` real homogeneous harmonic polynomials of degree
``l`` that are orthonormal on the unit sphere,
``int (P_i/r^l)(P_j/r^l) dOmega = delta_ij``. The construction is an exact
nullspace of the Laplacian followed by Gram-Schmidt under the sphere average;
monomials are ordered lexicographically by exponent triple, so the basis is
reproducible term for term.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping

import sympy

from .errors import DegreeMismatch, NotHomogeneous
from .exactnum import ExactScalar, ZERO

__all__ = [
    "Poly3",
    "HarmonicPoly",
    "monomials",
    "laplacian",
    "euler_degree",
    "sphere_monomial_average",
    "sphere_average",
    "sphere_integral",
    "basis",
    "rational_basis",
    "harmonic_decomposition",
]

Exp = tuple[int, int, int]


class Poly3:
    """Polynomial in x, y, z as a mapping from exponent triples to coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exp, object] | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            c = ExactScalar.coerce(c)
            if not c.is_zero():
                clean[tuple(e)] = c
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    def __setattr__(self, name, value):
        raise AttributeError("Poly3 is immutable")

    @classmethod
    def monomial(cls, a: int, b: int, c: int, coeff=1) -> Poly3:
        return cls({(a, b, c): coeff})

    @classmethod
    def r_squared(cls, k: int = 1) -> Poly3:
        """``(x^2 + y^2 + z^2)^k``."""
        out = cls({(0, 0, 0): 1})
        r2 = cls({(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1})
        for _ in range(k):
            out = out * r2
        return out

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: Poly3) -> Poly3:
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, ZERO) + c
        return Poly3(out)

    def __neg__(self) -> Poly3:
        return Poly3({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Poly3) -> Poly3:
        return self + (-other)

    def __mul__(self, other) -> Poly3:
        if not isinstance(other, Poly3):
            c = ExactScalar.coerce(other)
            return Poly3({e: c * v for e, v in self.terms.items()})
        out: dict[Exp, ExactScalar] = {}
        for (a1, b1, c1), v1 in self.terms.items():
            for (a2, b2, c2), v2 in other.terms.items():
                e = (a1 + a2, b1 + b2, c1 + c2)
                out[e] = out.get(e, ZERO) + v1 * v2
        return Poly3(out)

    __rmul__ = __mul__

    def derivative(self, axis: int) -> Poly3:
        out = {}
        for e, c in self.terms.items():
            k = e[axis]
            if k:
                d = list(e)
                d[axis] -= 1
                out[tuple(d)] = c * k
        return Poly3(out)

    def evaluate(self, point):
        """Evaluate at a numeric point (float or complex components)."""
        x, y, z = point
        total = 0.0
        for (a, b, c), v in self.terms.items():
            total += complex(v) * x**a * y**b * z**c
        if isinstance(total, complex) and total.imag == 0:
            return total.real
        return total

    def __eq__(self, other):
        if isinstance(other, Poly3):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __repr__(self):
        parts = []
        for (a, b, c), v in self.terms.items():
            cs = str(v.re) if v.is_rational() else f"[{v}]"
            parts.append(f"{cs}*x^{a}y^{b}z^{c}")
        return f"{type(self).__name__}(" + (" + ".join(parts) or "0") + ")"


class HarmonicPoly(Poly3):
    """Homogeneous polynomial of fixed degree (harmonicity checked by callers)."""

    __slots__ = ("degree",)

    def __init__(self, degree: int, terms: Mapping[Exp, object] | None = None):
        super().__init__(terms)
        bad = [e for e in self.terms if sum(e) != degree]
        if bad:
            raise NotHomogeneous(f"terms {bad} do not have degree {degree}")
        object.__setattr__(self, "degree", degree)

    @classmethod
    def from_poly(cls, p: Poly3) -> HarmonicPoly:
        return cls(euler_degree(p), p.terms)


def monomials(l: int) -> list[Exp]:
    """Exponent triples of total degree ``l`` in lexicographic order."""
    return sorted((a, b, l - a - b) for a in range(l + 1) for b in range(l + 1 - a))


def laplacian(p: Poly3) -> Poly3:
    out = Poly3()
    for axis in range(3):
        out = out + p.derivative(axis).derivative(axis)
    return out


def euler_degree(p: Poly3) -> int:
    """Degree ``l`` with ``sum_a x_a d_a P = l P``; zero polynomial counts as degree 0."""
    degs = p.degrees()
    if len(degs) > 1:
        raise NotHomogeneous(f"mixed degrees {sorted(degs)}")
    return degs.pop() if degs else 0


def _double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


@lru_cache(maxsize=None)
def sphere_monomial_average(a: int, b: int, c: int) -> Fraction:
    """``<x^a y^b z^c>`` over the unit sphere."""
    if a % 2 or b % 2 or c % 2:
        return Fraction(0)
    return Fraction(
        _double_factorial(a - 1) * _double_factorial(b - 1) * _double_factorial(c - 1),
        _double_factorial(a + b + c + 1),
    )


def sphere_average(p: Poly3, q: Poly3) -> ExactScalar:
    """``(1/4pi) int (P/r^l)(Q/r^l) dOmega`` for homogeneous ``P, Q`` of equal degree."""
    lp, lq = euler_degree(p), euler_degree(q)
    if lp != lq and not (p.is_zero() or q.is_zero()):
        raise DegreeMismatch(f"degrees {lp} and {lq} differ")
    total = ZERO
    for (a1, b1, c1), v1 in p.terms.items():
        for (a2, b2, c2), v2 in q.terms.items():
            w = sphere_monomial_average(a1 + a2, b1 + b2, c1 + c2)
            if w:
                total = total + v1 * v2 * w
    return total


def sphere_integral(p: Poly3, q: Poly3) -> ExactScalar:
    """``int (P/r^l)(Q/r^l) dOmega`` (carries the factor 4 pi)."""
    return sphere_average(p, q) * ExactScalar(4, 0, 1, 2)


def _vector_to_poly(l: int, vec) -> Poly3:
    return Poly3({e: Fraction(v) for e, v in zip(monomials(l), vec)})


@lru_cache(maxsize=None)
def rational_basis(l: int) -> tuple[HarmonicPoly, ...]:
    """Orthogonal (not normalized) harmonic basis with rational coefficients."""
    cols = monomials(l)
    rows = monomials(l - 2) if l >= 2 else []
    index = {e: i for i, e in enumerate(rows)}
    mat = sympy.zeros(len(rows), len(cols))
    for j, e in enumerate(cols):
        for e2, v in laplacian(Poly3({e: 1})).terms.items():
            mat[index[e2], j] += sympy.Rational(v.re.numerator, v.re.denominator)
    if rows:
        null = mat.nullspace()
        vecs = [[Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in v] for v in null]
    else:
        vecs = [[Fraction(int(i == j)) for i in range(len(cols))] for j in range(len(cols))]
    ortho: list[Poly3] = []
    for v in vecs:
        p = _vector_to_poly(l, v)
        for u in ortho:
            p = p - u * (sphere_average(p, u) / sphere_average(u, u))
        ortho.append(p)
    return tuple(HarmonicPoly(l, p.terms) for p in ortho)


@lru_cache(maxsize=None)
def basis(l: int) -> tuple[HarmonicPoly, ...]:
    """Orthonormal real harmonic basis of degree ``l`` (``2l+1`` elements)."""
    out = []
    for p in rational_basis(l):
        norm2 = sphere_average(p, p).to_fraction()
        # 1/sqrt(4 pi <P,P>)
        scale = ExactScalar(Fraction(1, 2), 0, 1 / norm2, -1)
        out.append(HarmonicPoly(l, (p * scale).terms))
    return tuple(out)


def harmonic_decomposition(p: Poly3) -> dict[int, HarmonicPoly]:
    """Split a homogeneous ``P`` of degree ``d`` as ``sum_j r^(2j) h_j``.

    Returns ``{j: h_j}`` with each ``h_j`` harmonic of degree ``d - 2j``.
    Coefficients of ``P`` must be rational.
    """
    d = euler_degree(p)
    pieces = []
    for j in range(d // 2 + 1):
        r2j = Poly3.r_squared(j)
        for h in rational_basis(d - 2 * j):
            pieces.append((j, h, r2j * h))
    mons = monomials(d)
    mat = sympy.zeros(len(mons), len(pieces))
    for col, (_, _, q) in enumerate(pieces):
        for row, e in enumerate(mons):
            v = q.terms.get(e)
            if v is not None:
                mat[row, col] = sympy.Rational(v.re.numerator, v.re.denominator)
    rhs = sympy.Matrix(
        [sympy.Rational(p.terms[e].to_fraction().numerator, p.terms[e].to_fraction().denominator) if e in p.terms else 0 for e in mons]
    )
    sol = mat.LUsolve(rhs)
    out: dict[int, Poly3] = {}
    for (j, h, _), s in zip(pieces, sol):
        num, den = sympy.fraction(s)
        if num:
            out[j] = out.get(j, Poly3()) + h * Fraction(int(num), int(den))
    return {j: HarmonicPoly(d - 2 * j, h.terms) for j, h in out.items() if not h.is_zero()}
