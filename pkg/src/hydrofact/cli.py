"""
Command-line interface.

Subcommands: ``radial``, ``momentum``, ``harmonic``, ``table`` and
``verify``. Exit status is 0 on success, 1 when a verification fails and 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import HydrofactError
from .exactnum import I
from .harmonic import basis
from .momentum import momentum_radial_closed
from .radial import chain_radial, closed_form_radial, rodrigues_radial
from .spectrum import multiplet_table
from .suites import SUITES, run_suite

__all__ = ["RunConfig", "build_parser", "run", "main", "BOHR_RADIUS_M", "HARTREE_J", "HBAR_JS"]

BOHR_RADIUS_M = 5.29177210903e-11
HARTREE_J = 4.3597447222071e-18
HBAR_JS = 1.054571817e-34


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    """Output settings shared by all subcommands.

    ``mass_ratio`` is the reduced mass in electron masses; lengths scale by
    ``1/mass_ratio`` and energies by ``mass_ratio`` in SI output.
    """

    units: str = "hartree"
    format: str = "csv"
    precision: int = 15
    mass_ratio: float = 1.0

    def __post_init__(self):
        if not 6 <= self.precision <= 17:
            raise UsageError(f"--precision must be in [6, 17], got {self.precision}")
        if self.units not in ("hartree", "si"):
            raise UsageError(f"unknown --units {self.units!r}")
        if self.format not in ("csv", "json"):
            raise UsageError(f"unknown --format {self.format!r}")
        if self.mass_ratio <= 0:
            raise UsageError("--reduced-mass must be positive")

    @property
    def si(self) -> bool:
        return self.units == "si"

    @property
    def length_scale(self) -> float:
        return BOHR_RADIUS_M / self.mass_ratio if self.si else 1.0

    @property
    def energy_scale(self) -> float:
        return HARTREE_J * self.mass_ratio if self.si else 1.0

    @property
    def momentum_scale(self) -> float:
        return HBAR_JS / self.length_scale if self.si else 1.0

    def fmt(self, x: float) -> str:
        return f"{x:.{self.precision}g}"


def _samples(text: str | None, default: tuple[float, float, int]) -> np.ndarray:
    if text is None:
        lo, hi, count = default
    else:
        parts = text.split(":")
        if len(parts) != 3:
            raise UsageError(f"--samples expects lo:hi:count, got {text!r}")
        try:
            lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError:
            raise UsageError(f"--samples expects lo:hi:count, got {text!r}") from None
        if count < 1 or hi < lo or lo < 0:
            raise UsageError(f"--samples needs 0 <= lo <= hi and count >= 1, got {text!r}")
    return np.linspace(lo, hi, count)


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _radial(args, cfg: RunConfig) -> str:
    make = {"chain": chain_radial, "rodrigues": rodrigues_radial, "closed": closed_form_radial}[args.route]
    state = make(args.n, args.l)
    r = _samples(args.samples, (0.0, 4.0 * args.n * args.n, 9))
    values = np.real(state(r))
    # R has dimension length^(-3/2)
    r_out = r * cfg.length_scale
    v_out = values / cfg.length_scale**1.5
    if cfg.format == "csv":
        return _csv(["r", "R_nl"], [[cfg.fmt(a), cfg.fmt(b)] for a, b in zip(r_out, v_out)])
    doc = {
        "n": args.n,
        "l": args.l,
        "units": cfg.units,
        "variable": "rho = 2 r / n (Bohr radii)",
        "factor": "exp(-rho/2)",
        "coefficients": [str(c) for c in state.poly.coeffs],
        "samples": [{"r": float(a), "R_nl": float(b)} for a, b in zip(r_out, v_out)],
    }
    return json.dumps(doc, indent=2) + "\n"


def _momentum(args, cfg: RunConfig) -> str:
    prof = momentum_radial_closed(args.n, args.l)
    p = _samples(args.samples, (0.0, 4.0 / args.n, 9))
    # remove the constant (-i)^l phase so the reported profile is real
    values = np.real(prof(p) * complex(I**args.l))
    p_out = p * cfg.momentum_scale
    v_out = values / cfg.momentum_scale**1.5
    if cfg.format == "csv":
        return _csv(["p", "radial_profile"], [[cfg.fmt(a), cfg.fmt(b)] for a, b in zip(p_out, v_out)])
    doc = {
        "n": args.n,
        "l": args.l,
        "units": cfg.units,
        "variable": "w = (n p)^2",
        "form": "prefactor * xi^l * numerator(w) / (1 + w)^denom_power",
        "phase": f"(-i)^{args.l}",
        "prefactor": str(prof.prefactor * I**args.l),
        "numerator": [str(c) for c in prof.numerator.coeffs],
        "denom_power": prof.denom_power,
        "samples": [{"p": float(a), "radial_profile": float(b)} for a, b in zip(p_out, v_out)],
    }
    return json.dumps(doc, indent=2) + "\n"


_HARMONIC_HEADER = ["a", "b", "c", "coeff_numerator", "coeff_denominator", "radicand", "pi_half"]


def _harmonic_rows(poly) -> list[list]:
    rows = []
    for (a, b, c), v in poly.terms.items():
        rows.append([a, b, c, v.re.numerator, v.re.denominator, v.radicand.numerator, v.pi_half])
    return rows


def _harmonic(args, cfg: RunConfig) -> str:
    if args.l < 0:
        raise UsageError("--l must be non-negative")
    elements = basis(args.l)
    indices = range(len(elements)) if args.index is None else [args.index]
    if args.index is not None and not 0 <= args.index < len(elements):
        raise UsageError(f"--index must be in 0..{len(elements) - 1}")
    if cfg.format == "csv":
        # one block per basis element, each with its own header
        return "\n".join(_csv(_HARMONIC_HEADER, _harmonic_rows(elements[i])) for i in indices)
    doc = {
        "l": args.l,
        "elements": [
            {"index": i, "terms": [{"exponents": list(e), "coeff": str(v)} for e, v in elements[i].terms.items()]}
            for i in indices
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def _table(args, cfg: RunConfig) -> str:
    rows = multiplet_table(args.max_n)
    if cfg.format == "csv":
        header = ["n", "energy_hartree", "l_list", "degeneracy"]
        if cfg.si:
            header.append("energy_joule")
        out = []
        for row in rows:
            e = float(row.energy)
            line = [row.n, cfg.fmt(e), " ".join(map(str, row.l_list)), row.degeneracy]
            if cfg.si:
                line.append(cfg.fmt(e * cfg.energy_scale))
            out.append(line)
        return _csv(header, out)
    doc = [
        {
            "n": row.n,
            "energy_hartree": float(row.energy),
            "energy_exact": str(row.energy.to_fraction()),
            "l_list": list(row.l_list),
            "degeneracy": row.degeneracy,
            **({"energy_joule": float(row.energy) * cfg.energy_scale} if cfg.si else {}),
        }
        for row in rows
    ]
    return json.dumps(doc, indent=2) + "\n"


def _verify(args, cfg: RunConfig) -> tuple[str, int]:
    results = run_suite(args.suite, args.max_n, args.tol)
    lines = [r.line() for r in results]
    failed = sum(not r.passed for r in results)
    lines.append(f"{len(results) - failed}/{len(results)} checks passed")
    lines.append("PASS" if not failed else "FAIL")
    return "\n".join(lines) + "\n", 0 if not failed else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--out", help="write output to this path instead of stdout")
    common.add_argument("--units", choices=["hartree", "si"], default="hartree")
    common.add_argument("--reduced-mass", type=float, default=1.0, help="reduced mass in electron masses (SI output)")
    common.add_argument("--precision", type=int, default=15, help="significant digits for floats (6-17)")

    parser = argparse.ArgumentParser(prog="hydrofact", description="Exact hydrogen bound states by operator factorization.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("radial", parents=[common], help="coordinate-space radial function")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--samples", help="lo:hi:count radii in Bohr radii")
    p.add_argument("--route", choices=["chain", "rodrigues", "closed"], default="chain")

    p = sub.add_parser("momentum", parents=[common], help="momentum-space radial profile")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--samples", help="lo:hi:count momenta in atomic units")

    p = sub.add_parser("harmonic", parents=[common], help="orthonormal harmonic polynomial basis")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--index", type=int, help="print a single basis element")

    p = sub.add_parser("table", parents=[common], help="energy multiplet table")
    p.add_argument("--max-n", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    p.add_argument("--max-n", type=int)
    p.add_argument("--tol", type=float)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = RunConfig(args.units, args.format, args.precision, args.reduced_mass)
        if getattr(args, "max_n", None) is not None and args.max_n < 1:
            raise UsageError("--max-n must be >= 1")
        if getattr(args, "tol", None) is not None and args.tol <= 0:
            raise UsageError("--tol must be positive")
        code = 0
        if args.command == "radial":
            text = _radial(args, cfg)
        elif args.command == "momentum":
            text = _momentum(args, cfg)
        elif args.command == "harmonic":
            text = _harmonic(args, cfg)
        elif args.command == "table":
            text = _table(args, cfg)
        else:
            text, code = _verify(args, cfg)
    except (UsageError, HydrofactError) as exc:
        print(f"hydrofact {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())
