"""
Acceptance criteria, one test each.

Every test prints a single ``CRITERION k: PASS|FAIL`` line with the measured
quantity and runtime, then asserts. Memoization caches are cleared before each
timed block so runtimes are measured cold.
"""

import json
import math
import time
from fractions import Fraction

import numpy as np

import hydrofact
from hydrofact import harmonic, momentum, opalgebra, radial, spectrum, specialpoly, verify
from hydrofact.cli import run
from hydrofact.exactnum import ONE, ZERO, ExactScalar
from hydrofact.harmonic import Poly3
from hydrofact.suites import reference_radial_display, run_suite

_MODULES = (harmonic, momentum, opalgebra, radial, spectrum, specialpoly, verify)


def _cold():
    for mod in _MODULES:
        for obj in vars(mod).values():
            clear = getattr(obj, "cache_clear", None)
            if callable(clear):
                clear()


def _report(capsys, k, ok, seconds, limit, detail):
    within = limit is None or seconds < limit
    status = "PASS" if ok and within else "FAIL"
    budget = f" / {limit:g} s" if limit is not None else ""
    with capsys.disabled():
        print(f"\nCRITERION {k}: {status} | {detail} | {seconds:.2f} s{budget}")
    assert ok, detail
    assert within, f"runtime {seconds:.2f} s exceeds {limit} s"


def test_criterion_01_energies(capsys, tmp_path):
    _cold()
    t0 = time.perf_counter()
    out = tmp_path / "table.json"
    code = run(["table", "--max-n", "5", "--format", "json", "--out", str(out)])
    rows = json.loads(out.read_text())
    exact = [Fraction(r["energy_exact"]) for r in rows]
    floats = [r["energy_hartree"] for r in rows]
    direct = [spectrum.energy(n).to_fraction() for n in range(1, 6)]
    dt = time.perf_counter() - t0
    want = [Fraction(-1, 2 * n * n) for n in range(1, 6)]
    ok = code == 0 and exact == want and direct == want and floats[:2] == [-0.5, -0.125]
    _report(capsys, 1, ok, dt, 1.0, "E(n) = " + ", ".join(str(e) for e in exact))


def test_criterion_02_operator_identities(capsys):
    _cold()
    t0 = time.perf_counter()
    results = run_suite("operators")
    dt = time.perf_counter() - t0
    names = " ".join(r.name for r in results)
    required = [
        "factorization sum",
        "[R, p_r] = i",
        "[T_perp, R] = 0",
        "[p_r, T_perp]",
        "H(1) = B+B",
        "H(1) = BB+",
        "modified intertwining",
        "chained intertwining",
    ]
    chained = {r.name for r in results if "chained intertwining" in r.name}
    lengths = {int(nm.split("n=")[1].split()[0]) - 1 - int(nm.split("l=")[1]) for nm in chained}
    failed = [r.name for r in results if not r.passed]
    ok = not failed and all(req in names for req in required) and lengths == {1, 2, 3}
    _report(capsys, 2, ok, dt, 30.0, f"{len(results) - len(failed)}/{len(results)} identities exact, chain lengths {sorted(lengths)}")


def test_criterion_03_eigen_verification(capsys):
    _cold()
    t0 = time.perf_counter()
    count = 0
    bad = []
    for n in range(1, 5):
        for l in range(n):
            for m in range(2 * l + 1):
                count += 1
                if not spectrum.verify_eigen(n, l, m).is_zero():
                    bad.append((n, l, m))
    negative = not spectrum.verify_eigen(3, 0, nus=(1, 1)).is_zero()
    dt = time.perf_counter() - t0
    ok = count == 30 and not bad and negative
    _report(capsys, 3, ok, dt, 120.0, f"{count - len(bad)}/30 zero residuals, perturbed chain nonzero={negative}")


def test_criterion_04_radial_routes(capsys):
    _cold()
    t0 = time.perf_counter()
    mismatches = []
    for n in range(1, 11):
        for l in range(n):
            c = radial.chain_radial(n, l)
            if not (radial.rodrigues_radial(n, l) == c == radial.closed_form_radial(n, l)):
                mismatches.append((n, l))
            raw = radial.chain_radial(n, l, normalized=False).ratio_to(radial.closed_form_radial(n, l))
            if raw is None or ExactScalar.coerce(raw).sign() != (-1) ** (n - l - 1):
                mismatches.append(("sign", n, l))
    displays = 0
    for n in range(1, 11):
        for k in range(min(3, n)):
            if radial.chain_radial(n, n - 1 - k, normalized=False).in_r() != reference_radial_display(n, n - 1 - k):
                mismatches.append(("display", n, k))
            displays += 1
    dt = time.perf_counter() - t0
    _report(capsys, 4, not mismatches, dt, 10.0, f"55 (n,l) pairs, {displays} explicit displays, mismatches={mismatches}")


def test_criterion_05_orthonormality(capsys):
    _cold()
    t0 = time.perf_counter()
    bad = []
    count = 0
    for n in range(1, 9):
        for n2 in range(1, 9):
            for l in range(min(n, n2)):
                count += 1
                val = radial.radial_overlap(n, n2, l)
                if val != (ONE if n == n2 else ZERO) or not val.is_rational():
                    bad.append((n, n2, l))
    dt = time.perf_counter() - t0
    _report(capsys, 5, not bad, dt, 5.0, f"{count - len(bad)}/{count} overlaps exactly delta")


def test_criterion_06_momentum_polynomials(capsys):
    _cold()
    t0 = time.perf_counter()
    q_ok = all(specialpoly.q_recurrence(m) == specialpoly.q_closed(m) for m in range(31))
    th_ok = all(specialpoly.reverse_bessel_derivative_recurrence(j) == specialpoly.reverse_bessel(j) for j in range(21))
    me_ok = all(
        momentum.theta_me_from_moments(m, n)
        == momentum.MomentumRadial(n, 0, hydrofact.Poly1((math.factorial(m + 1) * 2**m,)), m)
        for m in range(16)
        for n in (1, 2, 5)
    )
    dt = time.perf_counter() - t0
    _report(capsys, 6, q_ok and th_ok and me_ok, dt, 10.0, f"Q_m m<=30 {q_ok}, theta_j j<=20 {th_ok}, theta ME m<=15 {me_ok}")


def test_criterion_07_momentum_pipeline(capsys):
    _cold()
    t0 = time.perf_counter()
    bad = [
        (n, l)
        for n in range(1, 11)
        for l in range(n)
        if momentum.momentum_radial_pipeline(n, l) != momentum.momentum_radial_closed(n, l)
    ]
    dt = time.perf_counter() - t0
    _report(capsys, 7, not bad, dt, 20.0, f"55 (n,l) pairs exact, mismatches={bad}")


def test_criterion_08_numeric_cross_checks(capsys):
    _cold()
    t0 = time.perf_counter()
    worst_fourier = 0.0
    phase_ok = True
    for n in range(1, 5):
        for l in range(n):
            rep = verify.fourier_check(n, l)
            worst_fourier = max(worst_fourier, rep.max_deviation)
            phase_ok &= rep.phase_spread < 1e-6
    worst_norm = 0.0
    for n in range(1, 7):
        for l in range(n):
            cr = verify.quad_normalize(radial.closed_form_radial(n, l), "r2")
            mp = verify.quad_normalize(momentum.momentum_radial_closed(n, l), "p2")
            worst_norm = max(worst_norm, abs(cr - 1), abs(mp - 1))
    ode_ok = all(verify.ode_residual(n, l).is_zero() for n in range(1, 11) for l in range(n))
    frob_ok = True
    for lam in [Fraction(k, 2) for k in range(1, 21)]:
        for l in range(5):
            terminates = bool(verify.frobenius(lam, l, max_terms=200))
            integral = lam.denominator == 1 and lam - l - 1 >= 0
            frob_ok &= terminates == integral
    dt = time.perf_counter() - t0
    ok = worst_fourier <= 1e-8 and phase_ok and worst_norm <= 1e-10 and ode_ok and frob_ok
    detail = (
        f"Fourier max dev {worst_fourier:.1e} (<=1e-08), norm max dev {worst_norm:.1e} (<=1e-10), "
        f"ODE zero {ode_ok}, Frobenius iff {frob_ok}"
    )
    _report(capsys, 8, ok, dt, 60.0, detail)


def test_criterion_09_series(capsys):
    t0 = time.perf_counter()
    rel10 = abs(radial.ground_state_series(10.0, 100) - math.exp(-10)) / math.exp(-10)
    abs1 = abs(radial.ground_state_series(1.0, 60) - math.exp(-1))
    from_ops = radial.series_coefficients(10, via_operator=True) == radial.series_coefficients(10)
    dt = time.perf_counter() - t0
    ok = rel10 <= 1e-12 and abs1 <= 1e-12 and from_ops
    _report(capsys, 9, ok, dt, None, f"rel err r=10 {rel10:.1e}, abs err r=1 {abs1:.1e} (<=1e-12), operator coefficients {from_ops}")


def test_criterion_10_harmonics(capsys):
    _cold()
    t0 = time.perf_counter()
    ok = True
    for l in range(7):
        b = harmonic.basis(l)
        ok &= len(b) == 2 * l + 1
        for i, p in enumerate(b):
            ok &= harmonic.laplacian(p).is_zero() and harmonic.euler_degree(p) == l
            for j, q in enumerate(b):
                ok &= harmonic.sphere_integral(p, q) == (ONE if i == j else ZERO)
    x, y, z = Poly3.monomial(1, 0, 0), Poly3.monomial(0, 1, 0), Poly3.monomial(0, 0, 1)
    listed = {
        0: [Poly3({(0, 0, 0): 1})],
        1: [x, y, z],
        2: [x * y, y * z, z * x, x * x - y * y, Poly3({(2, 0, 0): -1, (0, 2, 0): -1, (0, 0, 2): 2})],
    }
    spans = True
    for l, ref in listed.items():
        mono = harmonic.monomials(l)

        def rows(ps):
            return [[float(p.terms.get(e, ZERO).re) for e in mono] for p in ps]

        rb = harmonic.rational_basis(l)
        r_ref = np.linalg.matrix_rank(np.array(rows(ref)))
        r_all = np.linalg.matrix_rank(np.array(rows(list(rb) + ref)))
        spans &= r_ref == r_all == len(rb) == 2 * l + 1
    dt = time.perf_counter() - t0
    _report(capsys, 10, ok and spans, dt, None, f"l<=6 dimension/Laplacian/Euler/Gram exact {ok}, l<=2 spans match {spans}")
