"""
Named verification suites.

Each suite is a list of checks; a check is a name plus a zero-argument
callable returning ``(passed, detail)``. ``run_suite`` evaluates them and
collects :class:`CheckResult` records for the command line and the tests.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

import numpy as np

from . import harmonic, momentum, opalgebra as op, radial, spectrum, specialpoly, verify
from .exactnum import ExactScalar, I, Poly1, exp_weighted_integral

__all__ = ["CheckResult", "SUITES", "run_suite", "operator_checks", "reference_radial_display"]

Check = tuple[str, Callable[[], tuple[bool, str]]]

_INV_SQRT2 = ExactScalar(Fraction(1, 2), 0, 2)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"[{tag}] {self.name}{extra}"


def _same(lhs, rhs) -> tuple[bool, str]:
    diff = lhs - rhs
    return diff.is_zero(), "" if diff.is_zero() else f"{len(diff.terms)} residual terms"


# -- operators ---------------------------------------------------------------


def _shift():
    return op.r_pow(-1) * (2 * I * _INV_SQRT2)


def _chain_identity(n: int, l: int):
    prod = op.scalar(1)
    shifted = op.scalar(1)
    for lam in range(l, n - 1):
        prod = prod * op.b_dag(lam)
        shifted = shifted * (op.b_dag(lam) - _shift())
    h = op.ham(1)
    total = sum(n - j for j in range(1, n - l))
    lhs = h * prod
    rhs = prod * (h + op.r_pow(-2) * total) + (shifted - prod) * (op.tperp() - op.r_pow(-2) * Fraction(l * (l + 1), 2))
    return lhs, rhs


def operator_checks() -> list[Check]:
    R = op.r_pow(1)
    checks: list[Check] = []

    def add(name, fn):
        checks.append((name, fn))

    for lam in (Fraction(1), Fraction(2), Fraction(3, 2)):
        add(
            f"factorization sum lambda={lam}",
            lambda lam=lam: _same(
                sum((op.a_dag(lam, a) * op.a_op(lam, a) for a in range(3)), op.OpExpr()),
                op.kinetic() - op.r_pow(-1) * (1 / lam) + 1 / (2 * lam * lam),
            ),
        )
    add(
        "H(1) = sum A+A(1) + E(1)",
        lambda: _same(op.ham(1), sum((op.a_dag(1, a) * op.a_op(1, a) for a in range(3)), op.OpExpr()) + op.energy(1)),
    )
    add("[R, p_r] = i", lambda: _same(op.commutator(R, op.pr()), op.scalar(I)))
    for a in range(3):
        add(f"[x_{a}, p_r] = i x_{a}/R", lambda a=a: _same(op.commutator(op.x_op(a), op.pr()), op.x_op(a) * op.r_pow(-1) * I))
        add(
            f"[p_r, p_{a}]",
            lambda a=a: _same(
                op.commutator(op.pr(), op.p_op(a)),
                op.r_pow(-1) * op.p_op(a) * I - op.x_op(a) * op.r_pow(-2) * op.pr() * I,
            ),
        )
    add("[T_perp, R] = 0", lambda: (op.commutator(op.tperp(), R).is_zero(), ""))
    add("[p_r, T_perp] = 2i T_perp/R", lambda: _same(op.commutator(op.pr(), op.tperp()), op.r_pow(-1) * op.tperp() * (2 * I)))
    add("[T_perp, R^3 + R^-2] = 0", lambda: (op.commutator(op.tperp(), op.r_pow(3) + op.r_pow(-2)).is_zero(), ""))
    for s in range(-4, 5):
        add(
            f"[R^{s}, p_x] = i s x R^(s-2)",
            lambda s=s: _same(op.commutator(op.r_pow(s), op.p_op(0)), op.x_op(0) * op.r_pow(s - 2) * (I * s)),
        )
    for lam in range(4):
        lam = Fraction(lam)
        add(
            f"H(1) = B+B + T_perp - ... lambda={lam}",
            lambda lam=lam: _same(
                op.ham(1),
                op.b_dag(lam) * op.b_op(lam) + op.tperp() - op.r_pow(-2) * (lam * (lam + 1) / 2) + op.energy(lam + 1),
            ),
        )
        add(
            f"H(1) = BB+ + T_perp - ... lambda={lam}",
            lambda lam=lam: _same(
                op.ham(1),
                op.b_op(lam) * op.b_dag(lam) + op.tperp() - op.r_pow(-2) * ((lam + 1) * (lam + 2) / 2) + op.energy(lam + 1),
            ),
        )
        add(
            f"B_r in Cartesian form lambda={lam}",
            lambda lam=lam: _same(
                op.b_op(lam),
                sum((op.x_op(a) * op.r_pow(-1) * op.a_op(lam + 1, a) for a in range(3)), op.OpExpr())
                + op.r_pow(-1) * (I * lam * _INV_SQRT2),
            ),
        )
        add(
            f"modified intertwining lambda={lam}",
            lambda lam=lam: _same(
                op.ham(1) * op.b_dag(lam),
                op.b_dag(lam) * (op.ham(1) + op.r_pow(-2) * (lam + 1))
                - _shift() * (op.tperp() - op.r_pow(-2) * (lam * (lam + 1) / 2)),
            ),
        )
        for l in range(5):
            add(
                f"T_perp shift l={l} lambda={lam}",
                lambda lam=lam, l=l: _same(
                    (op.tperp() - op.r_pow(-2) * Fraction(l * (l + 1), 2)) * op.b_dag(lam),
                    (op.b_dag(lam) - _shift()) * (op.tperp() - op.r_pow(-2) * Fraction(l * (l + 1), 2)),
                ),
            )
    for length in (1, 2, 3):
        for n in range(length + 1, length + 4):
            l = n - 1 - length
            add(f"chained intertwining n={n} l={l}", lambda n=n, l=l: _same(*_chain_identity(n, l)))
    for lam in (1, 2, 3):
        add(
            f"p_r|phi> = i(1/lambda - 1/R)|phi> lambda={lam}",
            lambda lam=lam: _same(
                op.reduce_on_phi(op.pr(), lam), op.MultOp({(0, 0, 0, 0): I / lam, (0, 0, 0, -1): -I})
            ),
        )
        add(f"T_perp|phi> = 0 lambda={lam}", lambda lam=lam: (op.reduce_on_phi(op.tperp(), lam).is_zero(), ""))
        for a in range(3):
            add(
                f"A_{a}(lambda) annihilates x R^-1 ... lambda={lam}",
                lambda lam=lam, a=a: (
                    op.reduce_on_phi(op.a_op(lam, a), lam).is_zero()
                    and op.apply_to_phi(op.a_op(lam, a), op.MultOp({(0, 0, 0, 0): 1}), lam).is_zero(),
                    "",
                ),
            )
    for l in (1, 2):
        poly = harmonic.Poly3({(0, 0, 1): 1}) if l == 1 else harmonic.Poly3({(2, 0, 0): -1, (0, 2, 0): -1, (0, 0, 2): 2})
        pm = op.MultOp.from_poly3(poly).to_opexpr()
        add(
            f"T_perp P = l(l+1)/(2R^2) P on phi, l={l}",
            lambda pm=pm, l=l: (
                op.reduce_on_phi(op.tperp() * pm - pm * op.r_pow(-2) * Fraction(l * (l + 1), 2), 2).is_zero(),
                "",
            ),
        )
    for l in range(4):
        for idx, h in enumerate(harmonic.basis(l)):
            pm = op.MultOp.from_poly3(h, rpow=-l).to_opexpr()
            add(f"[p_r, P R^-l] = 0 l={l} index={idx}", lambda pm=pm: (op.commutator(op.pr(), pm).is_zero(), ""))
    return checks


# -- eigenstates ---------------------------------------------------------------


def eigen_checks(max_n: int = 4) -> list[Check]:
    max_n = min(max_n, spectrum.SYMBOLIC_MAX_N)
    checks: list[Check] = []
    for n in range(1, max_n + 1):
        for l in range(n):
            for m in range(2 * l + 1):

                def run(n=n, l=l, m=m):
                    res = spectrum.verify_eigen(n, l, m)
                    return res.is_zero(), "" if res.is_zero() else f"{len(res.terms)} residual terms"

                checks.append((f"H(1) psi = E(n) psi n={n} l={l} index={m}", run))

    def negative(kwargs):
        def run():
            state = spectrum.build_state(3, 0, **kwargs)
            nonzero = not spectrum.verify_eigen(3, 0, **kwargs).is_zero()
            not_eigen = spectrum.eigen_ratio(state) is None
            return nonzero and not_eigen, "perturbed chain is not an eigenstate" if nonzero and not_eigen else "unexpected eigenstate"

        return run

    checks.append(("negative: chain parameters (0, 2) for n=3 l=0", negative({"nus": [0, 2]})))
    checks.append(("negative: chain parameters (1, 1) for n=3 l=0", negative({"nus": [1, 1]})))
    checks.append(("negative: seed scale 4 for n=3 l=0", negative({"lam": 4})))
    checks.append(("negative: seed scale 5/2 for n=3 l=0", negative({"lam": Fraction(5, 2)})))
    return checks


# -- radial --------------------------------------------------------------------


def reference_radial_display(n: int, l: int) -> Poly1:
    """Explicit unnormalized ``R_{n,n-1}``, ``R_{n,n-2}``, ``R_{n,n-3}`` polynomials in ``r``."""
    N = radial.coord_norm_const(n)
    k = n - l - 1
    if k == 0:
        return Poly1.monomial(n - 1, N)
    if k == 1:
        p = Poly1.monomial(n - 1, Fraction(1, n * (n - 1))) - Poly1.monomial(n - 2)
        return p.scale(N * _INV_SQRT2 * (2 * n - 1))
    if k == 2:
        p = (
            Poly1.monomial(n - 1, Fraction(2 * n - 2, (n - 1) * (n - 2) * n * n))
            - Poly1.monomial(n - 2, Fraction((2 * n - 2) * (2 * n - 3), (n - 1) * (n - 2) * n))
            + Poly1.monomial(n - 3, 2 * n - 3)
        )
        return p.scale(N * Fraction(2 * n - 1, 2))
    raise ValueError("only the first three members of each series are displayed")


def radial_checks(max_n: int = 10) -> list[Check]:
    checks: list[Check] = []
    for n in range(1, max_n + 1):
        for l in range(n):

            def three(n=n, l=l):
                a = radial.chain_radial(n, l, normalized=False)
                b = radial.rodrigues_radial(n, l, normalized=False)
                c = radial.chain_radial(n, l)
                d = radial.rodrigues_radial(n, l)
                e = radial.closed_form_radial(n, l)
                return a == b and c == d == e, ""

            checks.append((f"chain = Rodrigues = Laguerre n={n} l={l}", three))
        for k in range(min(3, n)):
            l = n - 1 - k
            if k == 2 and n < 3:
                continue
            checks.append(
                (
                    f"explicit R(n={n}, l={l}) display",
                    lambda n=n, l=l: (radial.chain_radial(n, l, normalized=False).in_r() == reference_radial_display(n, l), ""),
                )
            )
        checks.append(
            (
                f"seed normalization n={n}",
                lambda n=n: (
                    exp_weighted_integral(Poly1.monomial(2 * n, radial.coord_norm_const(n) ** 2), Fraction(2, n)) == 1,
                    "",
                ),
            )
        )
    top = min(max_n, 8)
    for n in range(1, top + 1):
        for n2 in range(1, top + 1):
            for l in range(min(n, n2)):
                checks.append(
                    (
                        f"overlap n={n} n'={n2} l={l}",
                        lambda n=n, n2=n2, l=l: (radial.radial_overlap(n, n2, l) == (1 if n == n2 else 0), ""),
                    )
                )

    def series():
        worst = 0.0
        for r in (0.0, 0.5, 1.0, 2.0, 5.0, 10.0):
            worst = max(worst, abs(radial.ground_state_series(r, 100) / math.exp(-r) - 1))
        same = radial.series_coefficients(12, via_operator=True) == radial.series_coefficients(12)
        return worst <= 1e-12 and same, f"max relative error {worst:.2e}"

    checks.append(("ground-state series reproduces e^-r", series))
    return checks


# -- momentum ------------------------------------------------------------------


def momentum_checks(max_n: int = 10) -> list[Check]:
    checks: list[Check] = []
    checks.append(("Q_m recurrence = closed sum, m <= 30", lambda: (all(specialpoly.q_recurrence(m) == specialpoly.q_closed(m) for m in range(31)), "")))
    checks.append(
        (
            "theta_j derivative recurrence = closed sum, j <= 20",
            lambda: (all(specialpoly.reverse_bessel_derivative_recurrence(j) == specialpoly.reverse_bessel(j) for j in range(21)), ""),
        )
    )
    for m in range(16):
        checks.append(
            (
                f"theta matrix element from moments m={m}",
                lambda m=m: (all(momentum.theta_me_from_moments(m, n) == momentum.theta_me(m, n) for n in (1, 2, 3)), ""),
            )
        )
    for n in range(1, max_n + 1):
        for l in range(n):
            checks.append(
                (
                    f"momentum pipeline = Gegenbauer closed form n={n} l={l}",
                    lambda n=n, l=l: (momentum.momentum_radial_pipeline(n, l) == momentum.momentum_radial_closed(n, l), ""),
                )
            )
    return checks


# -- numeric -------------------------------------------------------------------


def numeric_checks(max_n: int = 4, tol: float = 1e-8) -> list[Check]:
    checks: list[Check] = []
    for n in range(1, min(max_n, 4) + 1):
        for l in range(n):

            def fourier(n=n, l=l):
                rep = verify.fourier_check(n, l)
                return rep.max_deviation <= tol and rep.phase_spread <= 1e-6, (
                    f"deviation {rep.max_deviation:.2e}, phase spread {rep.phase_spread:.1e}"
                )

            checks.append((f"Fourier consistency n={n} l={l}", fourier))
    for n in range(1, 7):

        def norms(n=n):
            worst = 0.0
            for l in range(n):
                rad = radial.closed_form_radial(n, l)
                worst = max(worst, abs(verify.quad_normalize(rad, "r2") - 1))
                prof = momentum.momentum_radial_closed(n, l)
                worst = max(worst, abs(verify.quad_normalize(prof, "p2") - 1))
            worst = max(worst, abs(verify.quad_normalize(momentum.phi_momentum(n), "p2") - 1))
            return worst <= 1e-10, f"max deviation {worst:.2e}"

        checks.append((f"coordinate and momentum normalization n={n}", norms))
    checks.append(("ODE residual vanishes, n <= 10", lambda: (all(verify.ode_residual(n, l).is_zero() for n in range(1, 11) for l in range(n)), "")))

    def frob():
        for l in range(5):
            for num in range(2, 40):
                lam = Fraction(num, 2)
                res = verify.frobenius(lam, l, 80)
                k = lam - l - 1
                integral = k.denominator == 1 and k >= 0
                if isinstance(res, verify.NonTerminating) == integral:
                    return False, f"termination mismatch at lambda={lam} l={l}"
                if integral:
                    lag = specialpoly.laguerre(int(k), 2 * l + 1)
                    if res.scale(lag[0]) != lag:
                        return False, f"not proportional to Laguerre at lambda={lam} l={l}"
        return True, ""

    checks.append(("Frobenius terminates iff lambda-l-1 is a non-negative integer", frob))

    def bessel():
        x = np.linspace(0.1, 50, 2000)
        d0 = np.max(np.abs(verify.spherical_jn(0, x) - np.sin(x) / x))
        d1 = np.max(np.abs(verify.spherical_jn(1, x) - (np.sin(x) / x**2 - np.cos(x) / x)))
        return max(d0, d1) <= 1e-12, f"max deviation {max(d0, d1):.1e}"

    checks.append(("spherical Bessel closed forms", bessel))
    return checks


# -- harmonic ------------------------------------------------------------------


def harmonic_checks(max_l: int = 6) -> list[Check]:
    checks: list[Check] = []
    for l in range(max_l + 1):

        def run(l=l):
            b = harmonic.basis(l)
            if len(b) != 2 * l + 1:
                return False, f"dimension {len(b)}"
            for i, p in enumerate(b):
                if not harmonic.laplacian(p).is_zero() or harmonic.euler_degree(p) != l:
                    return False, f"element {i} not harmonic of degree {l}"
                for j, q in enumerate(b):
                    if harmonic.sphere_integral(p, q) != (1 if i == j else 0):
                        return False, f"Gram entry ({i}, {j})"
            return True, f"{2 * l + 1} elements"

        checks.append((f"harmonic basis l={l}", run))
    return checks


SUITES = {
    "operators": lambda max_n, tol: operator_checks(),
    "eigen": lambda max_n, tol: eigen_checks(max_n or 4),
    "radial": lambda max_n, tol: radial_checks(max_n or 10),
    "momentum": lambda max_n, tol: momentum_checks(max_n or 10),
    "numeric": lambda max_n, tol: numeric_checks(max_n or 4, tol or 1e-8),
    "harmonic": lambda max_n, tol: harmonic_checks(6),
}


def run_suite(name: str, max_n: int | None = None, tol: float | None = None) -> list[CheckResult]:
    """Run one suite (or ``"all"``) and return per-check results."""
    names: Iterable[str] = SUITES if name == "all" else [name]
    out = []
    for suite in names:
        for check_name, fn in SUITES[suite](max_n, tol):
            t0 = time.perf_counter()
            try:
                ok, detail = fn()
            except Exception as exc:  # a crash is a failed check, reported as such
                ok, detail = False, f"{type(exc).__name__}: {exc}"
            out.append(CheckResult(f"{suite}: {check_name}", bool(ok), detail, time.perf_counter() - t0))
    return out
