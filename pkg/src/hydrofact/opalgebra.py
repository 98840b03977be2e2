"""
Noncommutative operator algebra over ``{x, y, z, R^s, p_x, p_y, p_z}``.

Every operator is kept in normal order: positions and powers of ``R = |r|``
on the left, momenta on the right. A normal-ordered monomial is keyed by the
seven integers ``(a, b, c, s, d, e, f)`` standing for
``x^a y^b z^c R^s p_x^d p_y^e p_z^f``. Units are hbar = m = e = a0 = 1.

Because ``x^2 + y^2 + z^2 = R^2`` as operators, ``z^2`` is always rewritten
as ``R^2 - x^2 - y^2``; the z exponent of a stored monomial is 0 or 1 and the
representation is unique, so operator equality is dictionary equality.

Moving a momentum past a multiplicative factor uses the Leibniz rule
``p^D f = sum_K C(D, K) (-i)^|K| (d^K f) p^(D-K)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from math import comb
from typing import Iterable, Mapping

from .errors import NegativeLambda, NonPositiveLambda
from .exactnum import ExactScalar, ZERO, ONE, I

__all__ = [
    "OpExpr",
    "MultOp",
    "normal_order",
    "commutator",
    "adjoint",
    "x_op",
    "p_op",
    "r_pow",
    "scalar",
    "mult",
    "pr",
    "a_op",
    "a_dag",
    "b_op",
    "b_dag",
    "ham",
    "kinetic",
    "tperp",
    "energy",
    "reduce_on_phi",
    "apply_to_phi",
    "check_identity",
]

MKey = tuple[int, int, int, int]  # x^a y^b z^c R^s
OKey = tuple[int, int, int, int, int, int, int]

_AXES = {"x": 0, "y": 1, "z": 2}
_INV_SQRT2 = ExactScalar(Fraction(1, 2), 0, 2)
# (-i)^k
_MINUS_I_POW = (ONE, -I, ExactScalar(-1), I)


# ---------------------------------------------------------------------------
# multiplicative monomials


@lru_cache(maxsize=None)
def _canon_mult(key: MKey) -> tuple[tuple[MKey, int], ...]:
    """Rewrite ``z^c`` with ``c >= 2`` using ``z^2 = R^2 - x^2 - y^2``."""
    a, b, c, s = key
    if c < 2:
        return ((key, 1),)
    out: dict[MKey, int] = {}
    for sub, sign in (((a, b, c - 2, s + 2), 1), ((a + 2, b, c - 2, s), -1), ((a, b + 2, c - 2, s), -1)):
        for k, v in _canon_mult(sub):
            out[k] = out.get(k, 0) + sign * v
    return tuple((k, v) for k, v in out.items() if v)


@lru_cache(maxsize=None)
def _partial(key: MKey, axis: int) -> tuple[tuple[MKey, int], ...]:
    """``d/dx_axis`` of ``x^a y^b z^c R^s`` (uses ``dR/dx_a = x_a/R``)."""
    exps = list(key[:3])
    s = key[3]
    out: dict[MKey, int] = {}
    k = exps[axis]
    if k:
        e = exps.copy()
        e[axis] -= 1
        out[(e[0], e[1], e[2], s)] = k
    if s:
        e = exps.copy()
        e[axis] += 1
        nk = (e[0], e[1], e[2], s - 2)
        out[nk] = out.get(nk, 0) + s
    return tuple((kk, v) for kk, v in out.items() if v)


@lru_cache(maxsize=None)
def _partial_multi(key: MKey, orders: tuple[int, int, int]) -> tuple[tuple[MKey, int], ...]:
    """Mixed partial derivative ``d^K`` of a multiplicative monomial."""
    cur: dict[MKey, int] = {key: 1}
    for axis, k in enumerate(orders):
        for _ in range(k):
            nxt: dict[MKey, int] = {}
            for mk, v in cur.items():
                for dk, dv in _partial(mk, axis):
                    nxt[dk] = nxt.get(dk, 0) + v * dv
            cur = {kk: vv for kk, vv in nxt.items() if vv}
    return tuple(cur.items())


@lru_cache(maxsize=None)
def _leibniz(pexp: tuple[int, int, int], key: MKey) -> tuple[tuple[MKey, ExactScalar, tuple[int, int, int]], ...]:
    """Normal-ordered expansion of ``p^pexp * (multiplicative monomial)``."""
    out = []
    for ks in iproduct(*(range(d + 1) for d in pexp)):
        binom = comb(pexp[0], ks[0]) * comb(pexp[1], ks[1]) * comb(pexp[2], ks[2])
        phase = _MINUS_I_POW[sum(ks) % 4]
        rest = (pexp[0] - ks[0], pexp[1] - ks[1], pexp[2] - ks[2])
        for mk, v in _partial_multi(key, ks):
            out.append((mk, phase * (binom * v), rest))
    return tuple(out)


def _mul_mkey(k1: MKey, k2: MKey) -> MKey:
    return (k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2], k1[3] + k2[3])


# ---------------------------------------------------------------------------
# operator expressions


def _accumulate(out: dict, key: OKey, coeff: ExactScalar) -> None:
    """Add ``coeff * key`` to ``out`` after eliminating ``z^2``."""
    for mk, v in _canon_mult(key[:4]):
        k = mk + key[4:]
        out[k] = out.get(k, ZERO) + coeff * v


class OpExpr:
    """Normal-ordered operator: a finite sum of ``coeff * x^a y^b z^c R^s p^(d,e,f)``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[OKey, object] | None = None, _canonical: bool = False):
        if _canonical:
            clean = terms
        else:
            acc: dict[OKey, ExactScalar] = {}
            for k, v in (terms or {}).items():
                k = tuple(int(t) for t in k)
                if len(k) != 7 or min(k[:3] + k[4:]) < 0:
                    raise ValueError(f"bad monomial key {k}")
                _accumulate(acc, k, ExactScalar.coerce(v))
            clean = {k: v for k, v in acc.items() if not v.is_zero()}
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("OpExpr is immutable")

    @classmethod
    def _from_acc(cls, acc: dict) -> OpExpr:
        return cls({k: v for k, v in acc.items() if not v.is_zero()}, _canonical=True)

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def momentum_degree(self) -> int:
        return max((sum(k[4:]) for k in self.terms), default=0)

    def is_multiplicative(self) -> bool:
        return all(k[4:] == (0, 0, 0) for k in self.terms)

    def sorted_terms(self) -> list[tuple[OKey, ExactScalar]]:
        return sorted(self.terms.items())

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other) -> OpExpr:
        other = _as_op(other)
        if other is NotImplemented:
            return other
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc.get(k, ZERO) + v
        return OpExpr._from_acc(acc)

    __radd__ = __add__

    def __neg__(self) -> OpExpr:
        return OpExpr({k: -v for k, v in self.terms.items()}, _canonical=True)

    def __sub__(self, other) -> OpExpr:
        other = _as_op(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> OpExpr:
        return (-self) + other

    def __mul__(self, other) -> OpExpr:
        if isinstance(other, MultOp):
            other = other.to_opexpr()
        if not isinstance(other, OpExpr):
            try:
                c = ExactScalar.coerce(other)
            except TypeError:
                return NotImplemented
            return OpExpr._from_acc({k: v * c for k, v in self.terms.items()})
        acc: dict[OKey, ExactScalar] = {}
        for k1, v1 in self.terms.items():
            left = k1[:4]
            p1 = k1[4:]
            for k2, v2 in other.terms.items():
                c12 = v1 * v2
                p2 = k2[4:]
                if p1 == (0, 0, 0):
                    _accumulate(acc, _mul_mkey(left, k2[:4]) + p2, c12)
                    continue
                for mk, c, rest in _leibniz(p1, k2[:4]):
                    key = _mul_mkey(left, mk) + (rest[0] + p2[0], rest[1] + p2[1], rest[2] + p2[2])
                    _accumulate(acc, key, c12 * c)
        return OpExpr._from_acc(acc)

    def __rmul__(self, other) -> OpExpr:
        # scalars commute with everything
        return self.__mul__(other)

    def __pow__(self, k: int) -> OpExpr:
        out = scalar(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = _as_op(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "OpExpr(0)"
        parts = []
        for (a, b, c, s, d, e, f), v in self.sorted_terms():
            mono = "".join(
                f"{sym}^{k}" if k != 1 else sym
                for sym, k in (("x", a), ("y", b), ("z", c), ("R", s), ("px", d), ("py", e), ("pz", f))
                if k
            )
            parts.append(f"[{v}]{mono or '1'}")
        return "OpExpr(" + " + ".join(parts) + ")"


def _as_op(x):
    if isinstance(x, OpExpr):
        return x
    if isinstance(x, MultOp):
        return x.to_opexpr()
    try:
        return scalar(x)
    except TypeError:
        return NotImplemented


class MultOp:
    """Purely multiplicative operator ``sum coeff * x^a y^b z^c R^s`` with ``c`` in {0, 1}."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[MKey, object] | None = None):
        acc: dict[MKey, ExactScalar] = {}
        for k, v in (terms or {}).items():
            v = ExactScalar.coerce(v)
            for mk, m in _canon_mult(tuple(int(t) for t in k)):
                acc[mk] = acc.get(mk, ZERO) + v * m
        object.__setattr__(self, "terms", {k: v for k, v in acc.items() if not v.is_zero()})

    def __setattr__(self, name, value):
        raise AttributeError("MultOp is immutable")

    @classmethod
    def from_poly3(cls, poly, rpow: int = 0) -> MultOp:
        """Lift a polynomial in (x, y, z), times ``R^rpow``."""
        return cls({(a, b, c, rpow): v for (a, b, c), v in poly.terms.items()})

    def to_opexpr(self) -> OpExpr:
        return OpExpr({k + (0, 0, 0): v for k, v in self.terms.items()}, _canonical=True)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other) -> MultOp:
        other = _as_mult(other)
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc.get(k, ZERO) + v
        return MultOp(acc)

    __radd__ = __add__

    def __neg__(self) -> MultOp:
        return MultOp({k: -v for k, v in self.terms.items()})

    def __sub__(self, other) -> MultOp:
        return self + (-_as_mult(other))

    def __rsub__(self, other) -> MultOp:
        return (-self) + other

    def __mul__(self, other) -> MultOp:
        if isinstance(other, OpExpr):
            return NotImplemented
        if not isinstance(other, MultOp):
            c = ExactScalar.coerce(other)
            return MultOp({k: v * c for k, v in self.terms.items()})
        acc: dict[MKey, ExactScalar] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = _mul_mkey(k1, k2)
                acc[k] = acc.get(k, ZERO) + v1 * v2
        return MultOp(acc)

    __rmul__ = __mul__

    def partial(self, axis: int) -> MultOp:
        acc: dict[MKey, ExactScalar] = {}
        for k, v in self.terms.items():
            for dk, dv in _partial(k, axis):
                acc[dk] = acc.get(dk, ZERO) + v * dv
        return MultOp(acc)

    def scalar_ratio(self, other: MultOp):
        """Return ``c`` with ``self == c * other``, or ``None`` if no such scalar exists."""
        if other.is_zero():
            return ZERO if self.is_zero() else None
        if self.terms.keys() != other.terms.keys():
            return None
        keys = iter(other.terms)
        k0 = next(keys)
        c = self.terms[k0] / other.terms[k0]
        for k in keys:
            if self.terms[k] != c * other.terms[k]:
                return None
        return c

    def total_degrees(self) -> set[int]:
        return {a + b + c + s for a, b, c, s in self.terms}

    def evaluate(self, point) -> complex:
        x, y, z = point
        r = (x * x + y * y + z * z) ** 0.5
        return sum(complex(v) * x**a * y**b * z**c * r**s for (a, b, c, s), v in self.terms.items())

    def __eq__(self, other):
        try:
            other = _as_mult(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "MultOp(0)"
        parts = [f"[{v}]x^{a}y^{b}z^{c}R^{s}" for (a, b, c, s), v in sorted(self.terms.items())]
        return "MultOp(" + " + ".join(parts) + ")"


def _as_mult(x) -> MultOp:
    if isinstance(x, MultOp):
        return x
    if isinstance(x, OpExpr):
        if not x.is_multiplicative():
            raise TypeError("operator contains momentum factors")
        return MultOp({k[:4]: v for k, v in x.terms.items()})
    return MultOp({(0, 0, 0, 0): ExactScalar.coerce(x)})


# ---------------------------------------------------------------------------
# generators and calculus


def scalar(c) -> OpExpr:
    c = ExactScalar.coerce(c)
    return OpExpr({(0,) * 7: c}, _canonical=True) if not c.is_zero() else OpExpr()


def _axis(axis) -> int:
    return _AXES[axis] if isinstance(axis, str) else int(axis)


def x_op(axis) -> OpExpr:
    k = [0] * 7
    k[_axis(axis)] = 1
    return OpExpr({tuple(k): 1})


def p_op(axis) -> OpExpr:
    k = [0] * 7
    k[4 + _axis(axis)] = 1
    return OpExpr({tuple(k): 1})


def r_pow(s: int) -> OpExpr:
    return OpExpr({(0, 0, 0, int(s), 0, 0, 0): 1})


def mult(a: int, b: int, c: int, s: int, coeff=1) -> OpExpr:
    """Multiplicative monomial ``coeff * x^a y^b z^c R^s``."""
    return OpExpr({(a, b, c, s, 0, 0, 0): coeff})


def _token(tok) -> OpExpr:
    if isinstance(tok, OpExpr):
        return tok
    if isinstance(tok, MultOp):
        return tok.to_opexpr()
    if isinstance(tok, str):
        if tok in _AXES:
            return x_op(tok)
        if len(tok) == 2 and tok[0] == "p" and tok[1] in _AXES:
            return p_op(tok[1])
        if tok == "R":
            return r_pow(1)
        if tok.startswith("R^"):
            return r_pow(int(tok[2:]))
        raise ValueError(f"unknown generator {tok!r}")
    if isinstance(tok, tuple) and len(tok) == 2 and tok[0] == "R":
        return r_pow(tok[1])
    return scalar(tok)


def normal_order(word: Iterable) -> OpExpr:
    """Normal-order a product of generators.

    Tokens may be ``'x'``, ``'y'``, ``'z'``, ``'px'``, ``'py'``, ``'pz'``,
    ``'R'``, ``'R^s'``, ``('R', s)``, exact scalars or existing operators.
    """
    out = scalar(1)
    for tok in word:
        out = out * _token(tok)
    return out


def commutator(a, b) -> OpExpr:
    a, b = _token(a), _token(b)
    return a * b - b * a


def adjoint(op: OpExpr) -> OpExpr:
    """Formal adjoint: conjugate coefficients and reverse factor order."""
    out = OpExpr()
    for (a, b, c, s, d, e, f), v in op.terms.items():
        p = OpExpr({(0, 0, 0, 0, d, e, f): v.conjugate()}, _canonical=True)
        out = out + p * OpExpr({(a, b, c, s, 0, 0, 0): 1}, _canonical=True)
    return out


def check_identity(lhs, rhs) -> bool:
    return (_token(lhs) - _token(rhs)).is_zero()


# ---------------------------------------------------------------------------
# physical operators


def _positive(lam) -> Fraction:
    lam = Fraction(lam)
    if lam <= 0:
        raise NonPositiveLambda(f"lambda must be positive, got {lam}")
    return lam


@lru_cache(maxsize=None)
def pr() -> OpExpr:
    """Radial momentum ``R^-1 sum_a x_a p_a - i R^-1``."""
    out = scalar(-I) * r_pow(-1)
    for ax in range(3):
        out = out + r_pow(-1) * x_op(ax) * p_op(ax)
    return out


@lru_cache(maxsize=None)
def kinetic() -> OpExpr:
    return sum((p_op(ax) * p_op(ax) for ax in range(3)), OpExpr()) * Fraction(1, 2)


@lru_cache(maxsize=None)
def tperp() -> OpExpr:
    """Perpendicular kinetic energy ``p^2/2 - p_r^2/2``."""
    return kinetic() - pr() * pr() * Fraction(1, 2)


def energy(lam) -> Fraction:
    """Ground energy ``-1/(2 lam^2)`` of the auxiliary Hamiltonian."""
    lam = _positive(lam)
    return -1 / (2 * lam * lam)


def ham(lam=1) -> OpExpr:
    """Auxiliary Hamiltonian ``p^2/2 - 1/(lam R)``."""
    lam = _positive(lam)
    return kinetic() - r_pow(-1) * (1 / lam)


def a_op(lam, axis) -> OpExpr:
    """Lowering operator ``(p_a - i x_a/(lam R))/sqrt(2)``."""
    lam = _positive(lam)
    ax = _axis(axis)
    return (p_op(ax) - x_op(ax) * r_pow(-1) * (I * (1 / lam))) * _INV_SQRT2


def a_dag(lam, axis) -> OpExpr:
    return adjoint(a_op(lam, axis))


def _nonneg(lam) -> Fraction:
    lam = Fraction(lam)
    if lam < 0:
        raise NegativeLambda(f"lambda must be non-negative, got {lam}")
    return lam


def b_op(lam) -> OpExpr:
    """Radial lowering operator ``(p_r - i(1/(lam+1) - (lam+1)/R))/sqrt(2)``."""
    lam = _nonneg(lam)
    inner = pr() - (scalar(1 / (lam + 1)) - r_pow(-1) * (lam + 1)) * I
    return inner * _INV_SQRT2


def b_dag(lam) -> OpExpr:
    """Radial raising operator ``(p_r + i(1/(lam+1) - (lam+1)/R))/sqrt(2)``."""
    lam = _nonneg(lam)
    inner = pr() + (scalar(1 / (lam + 1)) - r_pow(-1) * (lam + 1)) * I
    return inner * _INV_SQRT2


# ---------------------------------------------------------------------------
# action on the auxiliary ground state


def _p_on_state(state: MultOp, axis: int, lam: Fraction) -> MultOp:
    # p_a (g phi) = (-i d_a g + (i/lam) x_a R^-1 g) phi
    shift = MultOp({tuple(int(i == axis) for i in range(3)) + (-1,): I * (1 / lam)})
    return state.partial(axis) * (-I) + shift * state


def apply_to_phi(op: OpExpr, state, lam) -> MultOp:
    """Apply ``op`` to ``state * |phi_lam>`` and return the multiplicative prefactor."""
    lam = _positive(lam)
    state = _as_mult(state)
    cache: dict[tuple[int, int, int], MultOp] = {(0, 0, 0): state}

    def with_momenta(pexp):
        if pexp in cache:
            return cache[pexp]
        ax = next(i for i in (2, 1, 0) if pexp[i])
        prev = list(pexp)
        prev[ax] -= 1
        out = _p_on_state(with_momenta(tuple(prev)), ax, lam)
        cache[pexp] = out
        return out

    acc: dict[MKey, ExactScalar] = {}
    for key, v in op.terms.items():
        for mk, mv in with_momenta(key[4:]).terms.items():
            k = _mul_mkey(key[:4], mk)
            acc[k] = acc.get(k, ZERO) + v * mv
    return MultOp(acc)


def reduce_on_phi(op: OpExpr, lam) -> MultOp:
    """Reduce ``op |phi_lam>`` to ``M |phi_lam>`` with ``M`` multiplicative."""
    return apply_to_phi(op, 1, lam)
